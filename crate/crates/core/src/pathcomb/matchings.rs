use itertools::Itertools;
use num_bigint::BigInt;

use crate::chebpoly::binomial;
use crate::error::{Error, Result};

pub const MAX_ORACLE_VERTICES: usize = 20;

/// A matching in the path graph `P_r` on vertices `1..=r`, as a list of
/// edges `(i, i + 1)` in increasing order.
pub type Matching = Vec<(usize, usize)>;

/// Number of `j`-edge matchings of `P_r`, `C(r - j, j)`.
pub fn matching_count(r: usize, j: usize) -> BigInt {
    binomial(r as i64 - j as i64, j as i64)
}

/// All `j`-edge matchings of `P_r`: every `j`-subset of the edge set is
/// listed and kept when its edges are pairwise disjoint.
pub fn enumerate_matchings(r: usize, j: usize) -> Result<Vec<Matching>> {
    if r > MAX_ORACLE_VERTICES {
        return Err(Error::OracleLimit {
            what: "r",
            value: r,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let edges: Vec<(usize, usize)> = (1..r).map(|i| (i, i + 1)).collect();
    Ok(edges
        .into_iter()
        .combinations(j)
        .filter(|set| {
            set.iter()
                .tuple_combinations()
                .all(|(e, f)| e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1)
        })
        .collect())
}

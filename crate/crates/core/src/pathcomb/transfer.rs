//! Transfer-matrix walk counting on the path graph with vertices `0..m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::IntPolynomial;

fn check_vertex(m: usize, v: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::LevelTooSmall { m, min: 1 });
    }
    if v >= m {
        return Err(Error::VertexOutOfStrip { vertex: v, max: m - 1 });
    }
    Ok(())
}

/// `w_L(a, b)` for every `L` in `0..=max_len`: the `b` entry of `e_a A^L`,
/// advanced one exact matrix-vector product at a time.
pub fn walk_counts(m: usize, a: usize, b: usize, max_len: usize) -> Result<Vec<BigInt>> {
    check_vertex(m, a)?;
    check_vertex(m, b)?;
    let mut state = vec![BigInt::zero(); m];
    state[a] = BigInt::one();
    let mut out = Vec::with_capacity(max_len + 1);
    out.push(state[b].clone());
    for _ in 0..max_len {
        let next: Vec<BigInt> = (0..m)
            .map(|v| {
                let mut s = BigInt::zero();
                if v > 0 {
                    s += &state[v - 1];
                }
                if v + 1 < m {
                    s += &state[v + 1];
                }
                s
            })
            .collect();
        state = next;
        out.push(state[b].clone());
    }
    Ok(out)
}

/// `w_L^{(m)}(a, b)`, the number of strip walks of length `len` from `a` to `b`.
pub fn strip_walk_count(m: usize, a: usize, b: usize, len: usize) -> Result<BigInt> {
    if len % 2 != a.abs_diff(b) % 2 {
        check_vertex(m, a)?;
        check_vertex(m, b)?;
        return Ok(BigInt::zero());
    }
    Ok(walk_counts(m, a, b, len)?.pop().expect("nonempty"))
}

/// `B_m(u)`: full-height walks `0 -> m-1` of excess `u`.
pub fn full_height_count(m: usize, u: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::LevelTooSmall { m, min: 1 });
    }
    strip_walk_count(m, 0, m - 1, m - 1 + 2 * u)
}

/// `B_m(0), ..., B_m(max_u)` in one pass.
pub fn full_height_counts(m: usize, max_u: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(Error::LevelTooSmall { m, min: 1 });
    }
    let all = walk_counts(m, 0, m - 1, m - 1 + 2 * max_u)?;
    Ok(all.into_iter().skip(m - 1).step_by(2).collect())
}

/// The adjacency matrix `A_m` of the path on `0..m`.
pub fn adjacency_matrix(m: usize) -> Vec<Vec<i64>> {
    (0..m)
        .map(|i| (0..m).map(|j| i64::from(i.abs_diff(j) == 1)).collect())
        .collect()
}

/// `K_m(s) = I - s A_m` with entries in `Z[s]`.
pub fn continuant_matrix(m: usize) -> Vec<Vec<IntPolynomial>> {
    let adj = adjacency_matrix(m);
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let diag = i64::from(i == j);
                    IntPolynomial::from_i64s(&[diag, -adj[i][j]])
                })
                .collect()
        })
        .collect()
}

/// Determinant over `Z[x]` by the Leibniz expansion, skipping permutations
/// that meet a zero entry. The empty matrix has determinant 1.
pub fn determinant(matrix: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut acc = IntPolynomial::zero();
    leibniz(matrix, &mut perm, &mut used, IntPolynomial::one(), &mut acc);
    acc
}

fn leibniz(
    matrix: &[Vec<IntPolynomial>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    partial: IntPolynomial,
    acc: &mut IntPolynomial,
) {
    let row = perm.len();
    if row == matrix.len() {
        let inversions = (0..row)
            .flat_map(|i| (i + 1..row).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        *acc = if inversions % 2 == 0 {
            &*acc + &partial
        } else {
            &*acc - &partial
        };
        return;
    }
    for col in 0..matrix.len() {
        if used[col] || matrix[row][col].is_zero() {
            continue;
        }
        used[col] = true;
        perm.push(col);
        leibniz(matrix, perm, used, &partial * &matrix[row][col], acc);
        perm.pop();
        used[col] = false;
    }
}

/// `Delta_m(s) = det(I - s A_m)` as a polynomial in `s`.
pub fn continuant_determinant(m: usize) -> IntPolynomial {
    determinant(&continuant_matrix(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn count_examples() {
        assert_eq!(strip_walk_count(2, 0, 1, 1).unwrap(), n(1));
        assert_eq!(strip_walk_count(3, 0, 2, 4).unwrap(), n(2));
        assert_eq!(strip_walk_count(3, 0, 2, 3).unwrap(), n(0));
        assert_eq!(strip_walk_count(1, 0, 0, 0).unwrap(), n(1));
        assert_eq!(strip_walk_count(1, 0, 0, 2).unwrap(), n(0));
        assert!(strip_walk_count(3, 0, 3, 3).is_err());
        assert!(strip_walk_count(0, 0, 0, 0).is_err());
    }

    #[test]
    fn full_height_examples() {
        for m in 1..8 {
            assert_eq!(full_height_count(m, 0).unwrap(), n(1));
        }
        for u in 0..=10 {
            assert_eq!(full_height_count(2, u).unwrap(), n(1));
            assert_eq!(full_height_count(3, u).unwrap(), n(1) << u);
        }
        assert_eq!(full_height_count(3, 2).unwrap(), n(4));
        let batch = full_height_counts(5, 9).unwrap();
        for (u, b) in batch.iter().enumerate() {
            assert_eq!(b, &full_height_count(5, u).unwrap());
        }
    }

    #[test]
    fn long_walks_stay_exact() {
        // on the two-vertex strip there is exactly one walk of each odd length
        assert_eq!(strip_walk_count(2, 0, 1, 401).unwrap(), n(1));
        // on the full line segment 0..=m-1 with m huge, counts are central binomials
        let c = strip_walk_count(200, 100, 100, 80).unwrap();
        assert_eq!(c, crate::chebpoly::binomial(80, 40));
    }

    #[test]
    fn determinant_of_small_matrices() {
        let p = |c: &[i64]| IntPolynomial::from_i64s(c);
        assert_eq!(determinant(&[]), p(&[1]));
        let m = vec![vec![p(&[1]), p(&[2])], vec![p(&[3]), p(&[4])]];
        assert_eq!(determinant(&m), p(&[-2]));
        assert_eq!(continuant_determinant(2), p(&[1, 0, -1]));
    }
}

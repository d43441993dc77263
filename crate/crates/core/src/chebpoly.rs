//! The Chebyshev-type sequence `p_0 = p_1 = 1`, `p_{r+1} = p_r - x p_{r-1}`,
//! partition products of it, and the trigonometric root data of `p_m`.
//!
//! Root data is double precision and exists for diagnostics only; nothing in
//! the exact coefficient pipeline reads it.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::IntPolynomial;

/// Residual allowed for the scaled root residual, see [`RootData::max_residual`].
pub const ROOT_RESIDUAL_TOLERANCE: f64 = 1e-9;

/// A partition: positive parts in nonincreasing order. The empty partition
/// is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Rejects zero parts and parts out of nonincreasing order.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be nonincreasing, got {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into nonincreasing order. The flag is true when the
    /// input was not already sorted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<(Self, bool)> {
        let sorted = parts.windows(2).all(|w| w[0] >= w[1]);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok((Self::new(parts)?, !sorted))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|xi|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn count_equal(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `C(n, k)` with the convention that it vanishes unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `p_r` by the three-term recurrence.
pub fn p_poly(r: usize) -> IntPolynomial {
    let x = IntPolynomial::monomial(BigInt::one(), 1);
    let mut prev = IntPolynomial::one();
    let mut cur = IntPolynomial::one();
    for _ in 1..r.max(1) {
        let next = &cur - &(&x * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `[x^j] p_r = (-1)^j C(r-j, j)`.
pub fn p_coeff_closed(r: usize, j: usize) -> BigInt {
    let c = binomial(r as i64 - j as i64, j as i64);
    if j % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `p_xi = prod_i p_{xi_i}`; the empty product is 1.
pub fn p_partition(xi: &Partition) -> IntPolynomial {
    p_product(xi.parts().iter().copied())
}

/// Product of `p_i` over an index list.
pub fn p_product<I: IntoIterator<Item = usize>>(indices: I) -> IntPolynomial {
    indices
        .into_iter()
        .filter(|&i| i >= 2)
        .map(p_poly)
        .product()
}

/// `p_r(x)` evaluated in double precision by the recurrence.
pub fn p_eval_f64(r: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0);
    for _ in 1..r.max(1) {
        let next = cur - x * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The `floor(m/2)` roots of `p_m`, from `rho_j = 1 / (4 cos^2(j pi/(m+1)))`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootData {
    pub m: usize,
    /// Strictly increasing.
    pub roots: Vec<f64>,
    /// `pi / (m + 1)`.
    pub theta: f64,
}

impl RootData {
    /// `rho_1`, the root of smallest modulus.
    pub fn smallest(&self) -> f64 {
        self.roots[0]
    }

    /// `max_j |p_m(rho_j)|`, unscaled.
    pub fn max_abs_residual(&self) -> f64 {
        self.roots
            .iter()
            .map(|&rho| p_eval_f64(self.m, rho).abs())
            .fold(0.0, f64::max)
    }

    /// `max_j |p_m(rho_j)| / sum_i |c_i| rho_j^i`, the residual relative to
    /// the magnitude of the terms being cancelled. For large `m` the top
    /// roots grow (about 17 at `m = 12`) and the absolute residual is
    /// dominated by the rounding of `rho_j` itself.
    pub fn max_residual(&self) -> f64 {
        let pm = p_poly(self.m);
        self.roots
            .iter()
            .map(|&rho| {
                let scale = pm
                    .coeffs()
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| acc * rho + c.to_f64().unwrap_or(f64::NAN).abs());
                pm.eval_f64(rho).abs() / scale
            })
            .fold(0.0, f64::max)
    }
}

pub fn roots_of_pm(m: usize) -> Result<RootData> {
    if m < 2 {
        return Err(Error::LevelTooSmall { m, min: 2 });
    }
    let theta = PI / (m as f64 + 1.0);
    let roots = (1..=m / 2)
        .map(|j| {
            let c = (j as f64 * theta).cos();
            1.0 / (4.0 * c * c)
        })
        .collect();
    Ok(RootData { m, roots, theta })
}

/// `p_r(rho_1)` for `0 <= r < m`; always positive.
pub fn p_at_rho1(r: usize, m: usize) -> Result<f64> {
    if r >= m {
        return Err(Error::IndexNotBelowLevel { r, m });
    }
    let rho1 = roots_of_pm(m)?.smallest();
    Ok(p_eval_f64(r, rho1))
}

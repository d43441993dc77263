//! The quotient `F_{xi,m,mu} = p_{m-mu0-1} p_xi / p_m^{mu1+1}`, its exact
//! expansion, the signed matching/walk formula for its coefficients, the
//! eventual-positivity classification, and multiplicity extraction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chebpoly::{binomial, p_poly, p_product, Partition};
use crate::error::{Error, Result};
use crate::pathcomb::full_height_counts;
use crate::series::{series_div_unit, IntPolynomial, TruncatedSeries};

/// Normalized description of `F_{xi,m,mu}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientSpec {
    xi: Partition,
    m: usize,
    mu: usize,
    mu1: usize,
    mu0: usize,
    t: usize,
    k: i64,
    alphas: Vec<usize>,
}

/// Builds the `QuotientSpec` for `(xi, m, mu)`. Every part of `xi` must be at most `m`.
pub fn make_spec(xi: &Partition, m: usize, mu: usize) -> Result<QuotientSpec> {
    if m == 0 {
        return Err(Error::LevelTooSmall { m, min: 1 });
    }
    if xi.largest() > m {
        return Err(Error::PartExceedsLevel { part: xi.largest(), m });
    }
    let (mu1, mu0) = (mu / m, mu % m);
    let t = xi.count_equal(m);
    let mut alphas = vec![m - mu0 - 1];
    alphas.extend(xi.parts().iter().copied().filter(|&p| p < m));
    Ok(QuotientSpec {
        xi: xi.clone(),
        m,
        mu,
        mu1,
        mu0,
        t,
        k: mu1 as i64 + 1 - t as i64,
        alphas,
    })
}

impl QuotientSpec {
    pub fn xi(&self) -> &Partition {
        &self.xi
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn mu1(&self) -> usize {
        self.mu1
    }

    pub fn mu0(&self) -> usize {
        self.mu0
    }

    /// Number of parts equal to `m`.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Net denominator exponent `mu1 + 1 - t`; negative when level-`m` parts
    /// outnumber the denominator copies.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// `alpha_0 = m - mu0 - 1` followed by the parts of `xi` below `m`.
    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    /// `p_{m-mu0-1} p_xi`, before cancelling level-`m` parts.
    pub fn numerator(&self) -> IntPolynomial {
        &p_poly(self.alphas[0]) * &crate::chebpoly::p_partition(&self.xi)
    }

    /// `p_m^{mu1+1}`.
    pub fn denominator(&self) -> IntPolynomial {
        p_poly(self.m).pow(self.mu1 as u32 + 1)
    }

    /// `prod_i p_{alpha_i}`, the numerator after cancellation.
    pub fn reduced_numerator(&self) -> IntPolynomial {
        p_product(self.alphas.iter().copied())
    }

    /// For `k <= 0`, the quotient is `p_m^{-k} prod p_{alpha_i}` and this
    /// bounds its degree by `(sum alpha_i + (t - mu1 - 1) m) / 2`.
    pub fn degree_bound(&self) -> Option<usize> {
        (self.k <= 0).then(|| {
            let alpha_sum: usize = self.alphas.iter().sum();
            (alpha_sum + (-self.k) as usize * self.m) / 2
        })
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "xi={} m={} mu={} (mu1={}, mu0={}, t={}, k={}, alphas={:?})",
            self.xi, self.m, self.mu, self.mu1, self.mu0, self.t, self.k, self.alphas
        )
    }
}

/// A computation path that produced a coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Power-series division of the full numerator by `p_m^{mu1+1}`.
    Division,
    /// Direct product `p_m^{-k} prod p_{alpha_i}` when `k <= 0`.
    Polynomial,
    /// Signed matching/walk formula, `k >= 0`.
    Signed,
    /// Product of Dyck-path generating functions from a pair decomposition.
    DyckProduct,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Division => "division",
            Route::Polynomial => "polynomial",
            Route::Signed => "signed",
            Route::DyckProduct => "dyck-product",
        }
    }
}

/// Coefficients `a_0..a_order` with the routes that were checked against them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub spec: QuotientSpec,
    pub order: usize,
    pub coeffs: TruncatedSeries,
    pub routes: Vec<Route>,
}

impl CoefficientReport {
    /// Records `route` after checking that it reproduces every coefficient.
    pub fn add_route(&mut self, route: Route, values: &[BigInt]) -> Result<()> {
        let expected = self.coeffs.coeffs();
        if values.len() != expected.len() {
            return Err(Error::RouteMismatch {
                route: route.name(),
                index: values.len().min(expected.len()),
            });
        }
        if let Some(index) = (0..values.len()).find(|&i| values[i] != expected[i]) {
            return Err(Error::RouteMismatch { route: route.name(), index });
        }
        if !self.routes.contains(&route) {
            self.routes.push(route);
        }
        Ok(())
    }
}

/// `a_0..a_order` by exact division. For `k <= 0` the polynomial route is
/// computed as well and recorded.
pub fn expand(spec: &QuotientSpec, order: usize) -> CoefficientReport {
    let coeffs = series_div_unit(&spec.numerator(), &spec.denominator(), order)
        .expect("p_m^e has constant term 1");
    let mut report = CoefficientReport {
        spec: spec.clone(),
        order,
        coeffs,
        routes: vec![Route::Division],
    };
    if spec.k <= 0 {
        let poly = &p_poly(spec.m).pow((-spec.k) as u32) * &spec.reduced_numerator();
        let padded = TruncatedSeries::from_polynomial(&poly, order);
        report
            .add_route(Route::Polynomial, padded.coeffs())
            .expect("exact division agrees with the cancelled product");
    }
    report
}

/// Expands and additionally checks the signed formula when `k >= 0`.
pub fn cross_validate(spec: &QuotientSpec, order: usize) -> Result<CoefficientReport> {
    let mut report = expand(spec, order);
    if spec.k >= 0 {
        let signed = signed_series(spec, order)?;
        report.add_route(Route::Signed, &signed)?;
    }
    Ok(report)
}

/// `a_r` as the signed count of tuples of matchings in `P_{alpha_i}` and
/// full-height strip walks:
///
/// `sum (-1)^{sum j} prod C(alpha_i - j_i, j_i) prod B_m(u_nu)` over
/// `j_0 + .. + j_L + u_1 + .. + u_k = r`.
pub fn signed_coefficient(spec: &QuotientSpec, r: usize) -> Result<BigInt> {
    if spec.k < 0 {
        return Err(Error::NegativeExponent { k: spec.k });
    }
    let walks = full_height_counts(spec.m, r)?;
    Ok(signed_sum(&spec.alphas, spec.k as usize, &walks, r))
}

/// `signed_coefficient` for every `r` in `0..=order`.
pub fn signed_series(spec: &QuotientSpec, order: usize) -> Result<Vec<BigInt>> {
    if spec.k < 0 {
        return Err(Error::NegativeExponent { k: spec.k });
    }
    let walks = full_height_counts(spec.m, order)?;
    Ok((0..=order)
        .map(|r| signed_sum(&spec.alphas, spec.k as usize, &walks, r))
        .collect())
}

fn signed_sum(alphas: &[usize], k: usize, walks: &[BigInt], budget: usize) -> BigInt {
    let Some((&alpha, rest)) = alphas.split_first() else {
        return walk_compositions(k, walks, budget);
    };
    let mut total = BigInt::zero();
    // C(alpha - j, j) vanishes once j > alpha / 2
    for j in 0..=(alpha / 2).min(budget) {
        let inner = signed_sum(rest, k, walks, budget - j);
        if inner.is_zero() {
            continue;
        }
        let term = binomial((alpha - j) as i64, j as i64) * inner;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `sum prod_nu B_m(u_nu)` over compositions `u_1 + .. + u_k = budget`,
/// 1 for `k = 0` and `budget = 0`.
fn walk_compositions(k: usize, walks: &[BigInt], budget: usize) -> BigInt {
    if k == 0 {
        return if budget == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut total = BigInt::zero();
    for u in 0..=budget {
        if walks[u].is_zero() {
            continue;
        }
        let rest = walk_compositions(k - 1, walks, budget - u);
        if !rest.is_zero() {
            total += &walks[u] * rest;
        }
    }
    total
}

/// Empirical evidence for eventual positivity over `0..=horizon`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdEvidence {
    /// `a_r > 0` for every `r0 <= r <= horizon`, and `r0` is minimal.
    Resolved { r0: usize, horizon: usize },
    /// `a_horizon <= 0`; the horizon is too short to witness positivity.
    Unresolved { horizon: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositivityClass {
    /// `m = 1`, where the quotient is identically 1.
    ConstantOne,
    /// Enough level-`m` parts cancel the denominator.
    Polynomial { degree_bound: usize },
    /// A pole of order `k >= 1` at the smallest root of `p_m`; coefficients
    /// are eventually strictly positive.
    EventuallyPositive { evidence: Option<ThresholdEvidence> },
}

impl PositivityClass {
    pub fn name(&self) -> &'static str {
        match self {
            PositivityClass::ConstantOne => "constant-one",
            PositivityClass::Polynomial { .. } => "polynomial",
            PositivityClass::EventuallyPositive { .. } => "eventually-positive",
        }
    }
}

pub fn classify(spec: &QuotientSpec) -> PositivityClass {
    if spec.m == 1 {
        PositivityClass::ConstantOne
    } else if let Some(degree_bound) = spec.degree_bound() {
        PositivityClass::Polynomial { degree_bound }
    } else {
        PositivityClass::EventuallyPositive { evidence: None }
    }
}

/// `classify`, with threshold evidence attached in the eventually-positive case.
pub fn classify_with_evidence(spec: &QuotientSpec, horizon: usize) -> PositivityClass {
    match classify(spec) {
        PositivityClass::EventuallyPositive { .. } => PositivityClass::EventuallyPositive {
            evidence: Some(positivity_threshold(spec, horizon).expect("class checked")),
        },
        other => other,
    }
}

/// Smallest `r0` with `a_r > 0` on `r0..=horizon`. This is a finite
/// witness, not a proof of the asymptotic statement.
pub fn positivity_threshold(spec: &QuotientSpec, horizon: usize) -> Result<ThresholdEvidence> {
    let class = classify(spec);
    if !matches!(class, PositivityClass::EventuallyPositive { .. }) {
        return Err(Error::NotEventuallyPositive { class: class.name().to_string() });
    }
    let report = expand(spec, horizon);
    let coeffs = report.coeffs.coeffs();
    let run = coeffs.iter().rev().take_while(|c| c.is_positive()).count();
    Ok(if run == 0 {
        ThresholdEvidence::Unresolved { horizon }
    } else {
        ThresholdEvidence::Resolved { r0: horizon + 1 - run, horizon }
    })
}

/// Expansion order used by classification sweeps:
/// `max(degree bound, 4 m (k + 1) + 40)`, with `k` clamped at 0. A heuristic;
/// no effective bound for "sufficiently large" is known.
pub fn default_sweep_order(spec: &QuotientSpec) -> usize {
    let bound = spec.degree_bound().unwrap_or_else(|| spec.alphas.iter().sum::<usize>() / 2);
    let k = spec.k.max(0) as usize;
    bound.max(4 * spec.m * (k + 1) + 40)
}

/// `V_n^{xi -> m}(1) = [x^{(|xi| - n)/2}] F_{xi,m,n}`, zero when the index is
/// negative or not an integer, and zero for `n < 0`.
pub fn multiplicity(xi: &Partition, m: usize, n: i64) -> Result<BigInt> {
    if m == 0 || m < xi.largest() {
        return Err(Error::LevelTooSmall { m, min: xi.largest().max(1) });
    }
    let size = xi.size() as i64;
    if n < 0 || n > size || (size - n) % 2 != 0 {
        return Ok(BigInt::zero());
    }
    let spec = make_spec(xi, m, n as usize)?;
    let index = ((size - n) / 2) as usize;
    expand(&spec, index).coeffs.coeff(index as i64)
}

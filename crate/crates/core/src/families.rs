//! Unsigned Dyck-path product models.
//!
//! When the cancelled numerator `prod p_{alpha_i}` splits into exactly `k`
//! admissible factors `p_a p_b` (`a + b <= m - 1`), each factor over `p_m`
//! is the generating function of `D_m(a, b; u)` and every quotient
//! coefficient counts tuples of bounded Dyck paths. This module searches for
//! such splits, evaluates the product model, and implements the hook-shaped
//! families `(m^t, 1^s)`, `(m^t, r, 1^s)` and `(m^t, r_1..r_d, 1^s)` with
//! their direct multiplicity formulas.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chebpoly::{p_poly, p_product, Partition};
use crate::error::{Error, Result};
use crate::pathcomb::dyck_counts;
use crate::quotient::{CoefficientReport, QuotientSpec, Route};
use crate::series::{series_div_unit, TruncatedSeries};

/// `k` admissible pairs `(a, b)`, `a + b <= m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairDecomposition {
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl PairDecomposition {
    pub fn new(m: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::LevelTooSmall { m, min: 1 });
        }
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a + b > m - 1) {
            return Err(Error::InvalidPairs(format!(
                "pair ({a}, {b}) violates a + b <= {}",
                m - 1
            )));
        }
        Ok(Self { m, pairs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// Whether `prod p_a p_b` equals the cancelled numerator of `spec` and the
    /// pair count equals its denominator exponent.
    pub fn certifies(&self, spec: &QuotientSpec) -> bool {
        self.m == spec.m()
            && self.k() as i64 == spec.k()
            && p_product(self.pairs.iter().flat_map(|&(a, b)| [a, b])) == spec.reduced_numerator()
    }
}

impl fmt::Display for PairDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "[{}]", pairs.join(","))
    }
}

/// Packs the numerator indices `>= 2` into `k` slots of at most two, each
/// slot summing to at most `m - 1`, and pads with index 0 (`p_0 = p_1 = 1`).
///
/// Only the given presentation is searched: products that match the
/// numerator through a different multiset of indices are not found.
pub fn find_pair_decomposition(spec: &QuotientSpec) -> Result<Option<PairDecomposition>> {
    if spec.k() <= 0 {
        return Err(Error::NoPairSlots { k: spec.k() });
    }
    let k = spec.k() as usize;
    let cap = spec.m() - 1;
    let mut big: Vec<usize> = spec.alphas().iter().copied().filter(|&a| a >= 2).collect();
    if big.len() > 2 * k {
        return Ok(None);
    }
    big.sort_unstable_by(|a, b| b.cmp(a));
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); k];
    if !pack(&big, &mut slots, cap) {
        return Ok(None);
    }
    let pairs = slots
        .iter()
        .map(|s| (s.first().copied().unwrap_or(0), s.get(1).copied().unwrap_or(0)))
        .collect();
    let dec = PairDecomposition::new(spec.m(), pairs)?;
    Ok(dec.certifies(spec).then_some(dec))
}

fn pack(items: &[usize], slots: &mut [Vec<usize>], cap: usize) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return true;
    };
    let mut tried_empty = false;
    for i in 0..slots.len() {
        let slot = &slots[i];
        if slot.len() == 2 || slot.iter().sum::<usize>() + item > cap {
            continue;
        }
        if slot.is_empty() {
            // empty slots are interchangeable
            if tried_empty {
                continue;
            }
            tried_empty = true;
        }
        slots[i].push(item);
        if pack(rest, slots, cap) {
            return true;
        }
        slots[i].pop();
    }
    false
}

/// Coefficients `0..=order` of `prod_nu sum_u D_m(a_nu, b_nu; u) x^u`.
pub fn product_model_series(dec: &PairDecomposition, order: usize) -> Result<Vec<BigInt>> {
    let mut acc = TruncatedSeries::from_coeffs(
        std::iter::once(BigInt::from(1))
            .chain(std::iter::repeat_n(BigInt::zero(), order))
            .collect(),
    );
    for &(a, b) in dec.pairs() {
        let factor = TruncatedSeries::from_coeffs(dyck_counts(dec.m(), a, b, order)?);
        acc = acc.mul(&factor);
    }
    Ok(acc.into_coeffs())
}

/// Number of `k`-tuples of paths `P_nu in D_m(a_nu, b_nu; u_nu)` with
/// `u_1 + .. + u_k = r`.
pub fn product_model_coeff(dec: &PairDecomposition, r: usize) -> Result<BigInt> {
    Ok(product_model_series(dec, r)?.pop().expect("nonempty"))
}

/// Checks the product model against an expansion and records it as a route.
pub fn attach_product_route(report: &mut CoefficientReport, dec: &PairDecomposition) -> Result<()> {
    if !dec.certifies(&report.spec) {
        return Err(Error::InvalidPairs(format!(
            "{dec} does not factor the numerator of {}",
            report.spec
        )));
    }
    let values = product_model_series(dec, report.order)?;
    report.add_route(Route::DyckProduct, &values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `(m^t, 1^s)`
    A,
    /// `(m^t, r, 1^s)`
    B,
    /// `(m^t, r_1, .., r_d, 1^s)`
    C,
}

impl FamilyKind {
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::A => "a",
            FamilyKind::B => "b",
            FamilyKind::C => "c",
        }
    }
}

/// Parameters of a family member together with a coefficient index `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyQuery {
    kind: FamilyKind,
    m: usize,
    t: usize,
    s: usize,
    rs: Vec<usize>,
    n_index: usize,
}

impl FamilyQuery {
    /// `rs` is empty for kind A, a single `r` for kind B, and `d >= 1`
    /// intermediate parts for kind C; all of them lie in `1..=m-1`.
    pub fn new(kind: FamilyKind, m: usize, t: usize, s: usize, rs: Vec<usize>, n_index: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::LevelTooSmall { m, min: 1 });
        }
        match (kind, rs.len()) {
            (FamilyKind::A, 0) | (FamilyKind::B, 1) => {}
            (FamilyKind::C, d) if d >= 1 => {}
            (kind, d) => {
                return Err(Error::InvalidFamily(format!(
                    "kind {} does not take {d} intermediate parts",
                    kind.tag()
                )))
            }
        }
        if let Some(&r) = rs.iter().find(|&&r| r == 0 || r >= m) {
            return Err(Error::InvalidFamily(format!("part r={r} must lie in 1..={}", m as i64 - 1)));
        }
        Ok(Self { kind, m, t, s, rs, n_index })
    }

    pub fn a(m: usize, t: usize, s: usize, n_index: usize) -> Result<Self> {
        Self::new(FamilyKind::A, m, t, s, Vec::new(), n_index)
    }

    pub fn b(m: usize, t: usize, r: usize, s: usize, n_index: usize) -> Result<Self> {
        Self::new(FamilyKind::B, m, t, s, vec![r], n_index)
    }

    pub fn c(m: usize, t: usize, rs: Vec<usize>, s: usize, n_index: usize) -> Result<Self> {
        Self::new(FamilyKind::C, m, t, s, rs, n_index)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn rs(&self) -> &[usize] {
        &self.rs
    }

    /// The coefficient index `N`.
    pub fn n_index(&self) -> usize {
        self.n_index
    }

    pub fn with_n_index(&self, n_index: usize) -> Self {
        Self { n_index, ..self.clone() }
    }

    /// `(q, rho)` with `sum r_i + s - 2N = q m + rho`, `0 <= rho < m`; `q` may be negative.
    pub fn division(&self) -> (i64, usize) {
        let total = self.rs.iter().sum::<usize>() as i64 + self.s as i64 - 2 * self.n_index as i64;
        let m = self.m as i64;
        (total.div_euclid(m), total.rem_euclid(m) as usize)
    }

    /// `(m^t, r_1, .., r_d, 1^s)` in nonincreasing order.
    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.m; self.t];
        let mut rs = self.rs.clone();
        rs.sort_unstable_by(|a, b| b.cmp(a));
        parts.extend(rs);
        parts.extend(std::iter::repeat_n(1, self.s));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("positive parts")
    }

    /// `n = |xi| - 2N`, the Demazure weight.
    pub fn weight(&self) -> i64 {
        self.partition().size() as i64 - 2 * self.n_index as i64
    }
}

/// `p_{m-rho-1} prod_i p_{r_i} / p_m^{q+1}`, with its canonical pair list
/// when an unsigned model applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyQuotient {
    pub m: usize,
    pub q: i64,
    pub rho: usize,
    /// `m - rho - 1` first, then the `r_i` in input order.
    pub numerator_indices: Vec<usize>,
    /// `q + 1`; at most 0 means the quotient is a polynomial.
    pub exponent: i64,
    pub pairs: Option<PairDecomposition>,
}

impl FamilyQuotient {
    /// Coefficients through `order`, by division when `exponent > 0` and by
    /// direct multiplication otherwise.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let num = p_product(self.numerator_indices.iter().copied());
        let pm = p_poly(self.m);
        if self.exponent > 0 {
            series_div_unit(&num, &pm.pow(self.exponent as u32), order).expect("unit constant term")
        } else {
            TruncatedSeries::from_polynomial(&(&num * &pm.pow((-self.exponent) as u32)), order)
        }
    }
}

/// The reduced quotient of a family member, using the query's division
/// `(q, rho)`. With `N = 0` this is the quotient at `mu = |xi|`.
pub fn family_quotient(fq: &FamilyQuery) -> Result<FamilyQuotient> {
    let (q, rho) = fq.division();
    let m = fq.m;
    let top = m - rho - 1;
    let mut numerator_indices = vec![top];
    numerator_indices.extend(fq.rs.iter().copied());

    let fillers = |count: i64| std::iter::repeat_n((0, 0), count.max(0) as usize);
    let pairs: Option<Vec<(usize, usize)>> = match fq.kind {
        FamilyKind::A if q >= 0 => Some(std::iter::once((0, top)).chain(fillers(q)).collect()),
        FamilyKind::B if q >= 1 => Some(
            [(0, top), (fq.rs[0], 0)]
                .into_iter()
                .chain(fillers(q - 1))
                .collect(),
        ),
        FamilyKind::B if q == 0 && fq.rs[0] <= rho => Some(vec![(fq.rs[0], top)]),
        FamilyKind::C if q >= fq.rs.len() as i64 => Some(
            std::iter::once((0, top))
                .chain(fq.rs.iter().map(|&r| (r, 0)))
                .chain(fillers(q - fq.rs.len() as i64))
                .collect(),
        ),
        _ => None,
    };
    let pairs = pairs.map(|p| PairDecomposition::new(m, p)).transpose()?;
    Ok(FamilyQuotient {
        m,
        q,
        rho,
        numerator_indices,
        exponent: q + 1,
        pairs,
    })
}

/// Result of the direct multiplicity formula for one family query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryEvaluation {
    /// Demazure weight `n = |xi| - 2N`.
    pub weight: i64,
    pub q: i64,
    pub rho: usize,
    pub value: BigInt,
    /// The same value recounted as Dyck-path tuples, when a model applies.
    pub tuple_count: Option<BigInt>,
}

impl CorollaryEvaluation {
    pub fn has_unsigned_model(&self) -> bool {
        self.tuple_count.is_some()
    }
}

/// Evaluates `V_n^{xi -> m}(1) = [x^N] p_{m-rho-1} prod p_{r_i} / p_m^{q+1}`,
/// which vanishes for `q < 0`. When an unsigned model applies the value is
/// recounted as a tuple count and both must agree.
pub fn corollary_evaluation(fq: &FamilyQuery) -> Result<CorollaryEvaluation> {
    let quotient = family_quotient(fq)?;
    let n = fq.n_index;
    let (value, tuple_count) = if quotient.q < 0 {
        (BigInt::zero(), None)
    } else {
        let value = quotient.series(n).coeff(n as i64)?;
        let tuples = quotient
            .pairs
            .as_ref()
            .map(|dec| product_model_coeff(dec, n))
            .transpose()?;
        if tuples.as_ref().is_some_and(|c| c != &value) {
            return Err(Error::RouteMismatch { route: Route::DyckProduct.name(), index: n });
        }
        (value, tuples)
    };
    Ok(CorollaryEvaluation {
        weight: fq.weight(),
        q: quotient.q,
        rho: quotient.rho,
        value,
        tuple_count,
    })
}

pub fn corollary_multiplicity(fq: &FamilyQuery) -> Result<BigInt> {
    Ok(corollary_evaluation(fq)?.value)
}

/// The most specific family description of `xi` at level `m`: parts equal
/// to `m`, parts equal to 1, and the rest. Every partition with parts at
/// most `m` has one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyShape {
    pub kind: FamilyKind,
    pub t: usize,
    pub s: usize,
    pub rs: Vec<usize>,
}

pub fn family_shape(xi: &Partition, m: usize) -> Result<FamilyShape> {
    if m == 0 || xi.largest() > m {
        return Err(Error::LevelTooSmall { m, min: xi.largest().max(1) });
    }
    let t = xi.count_equal(m);
    let s = if m > 1 { xi.count_equal(1) } else { 0 };
    let rs: Vec<usize> = xi.parts().iter().copied().filter(|&p| p != m && p != 1).collect();
    let kind = match rs.len() {
        0 => FamilyKind::A,
        1 => FamilyKind::B,
        _ => FamilyKind::C,
    };
    Ok(FamilyShape { kind, t, s, rs })
}

impl FamilyShape {
    pub fn query(&self, m: usize, n_index: usize) -> Result<FamilyQuery> {
        FamilyQuery::new(self.kind, m, self.t, self.s, self.rs.clone(), n_index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{expand, make_spec, multiplicity};

    fn xi(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn decomposition_examples() {
        let spec = make_spec(&xi(&[1]), 2, 1).unwrap();
        let dec = find_pair_decomposition(&spec).unwrap().unwrap();
        assert_eq!(dec.pairs(), &[(0, 0)]);

        let spec = make_spec(&xi(&[2, 1]), 4, 3).unwrap();
        assert_eq!(spec.k(), 1);
        let dec = find_pair_decomposition(&spec).unwrap().unwrap();
        assert_eq!(dec.pairs(), &[(2, 0)]);

        // three indices >= 2 cannot fit into one slot
        let spec = make_spec(&xi(&[3, 2, 2]), 5, 0).unwrap();
        assert_eq!(spec.k(), 1);
        assert_eq!(find_pair_decomposition(&spec).unwrap(), None);

        let spec = make_spec(&xi(&[2, 2]), 2, 0).unwrap();
        assert_eq!(find_pair_decomposition(&spec).unwrap_err(), Error::NoPairSlots { k: -1 });
    }

    #[test]
    fn decomposition_respects_the_sum_cap() {
        // alphas [2, 3] with m = 4: 2 + 3 > 3, and k = 1, so no split
        let spec = make_spec(&xi(&[3]), 4, 5).unwrap();
        assert_eq!((spec.alphas(), spec.k()), (&[2usize, 3][..], 2));
        let dec = find_pair_decomposition(&spec).unwrap().unwrap();
        assert_eq!(dec.pairs(), &[(3, 0), (2, 0)]);
        let spec = make_spec(&xi(&[3]), 4, 1).unwrap();
        assert_eq!((spec.alphas(), spec.k()), (&[2usize, 3][..], 1));
        assert_eq!(find_pair_decomposition(&spec).unwrap(), None);
    }

    #[test]
    fn product_model_examples() {
        let dec = PairDecomposition::new(3, vec![(1, 1)]).unwrap();
        assert_eq!(product_model_coeff(&dec, 0).unwrap(), n(1));
        let dec = PairDecomposition::new(3, vec![(0, 0)]).unwrap();
        assert_eq!(product_model_coeff(&dec, 2).unwrap(), n(4));
        let dec = PairDecomposition::new(3, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(product_model_coeff(&dec, 1).unwrap(), n(4));
        assert!(PairDecomposition::new(3, vec![(2, 1)]).is_err());
    }

    #[test]
    fn product_route_attaches_to_reports() {
        let spec = make_spec(&xi(&[3, 1]), 4, 6).unwrap();
        let dec = find_pair_decomposition(&spec).unwrap().unwrap();
        let mut report = expand(&spec, 12);
        attach_product_route(&mut report, &dec).unwrap();
        assert!(report.routes.contains(&Route::DyckProduct));

        let wrong = PairDecomposition::new(4, vec![(0, 0)]).unwrap();
        assert!(attach_product_route(&mut report, &wrong).is_err());
    }

    #[test]
    fn family_quotient_examples() {
        let fq = FamilyQuery::a(2, 0, 1, 0).unwrap();
        let quot = family_quotient(&fq).unwrap();
        assert_eq!((quot.q, quot.rho, quot.exponent), (0, 1, 1));
        assert_eq!(quot.numerator_indices, vec![0]);
        assert_eq!(quot.pairs.unwrap().pairs(), &[(0, 0)]);

        let fq = FamilyQuery::b(4, 0, 2, 1, 0).unwrap();
        let quot = family_quotient(&fq).unwrap();
        assert_eq!(quot.q, 0);
        assert_eq!(quot.pairs.unwrap().pairs(), &[(2, 0)]);

        // d = 2 > q = 0
        let fq = FamilyQuery::c(4, 1, vec![2, 2], 0, 0).unwrap();
        let quot = family_quotient(&fq).unwrap();
        assert_eq!(quot.q, 1);
        assert!(quot.pairs.is_none());

        let fq = FamilyQuery::c(3, 0, vec![2, 2], 4, 0).unwrap();
        let quot = family_quotient(&fq).unwrap();
        assert_eq!((quot.q, quot.rho), (2, 2));
        assert_eq!(quot.pairs.unwrap().pairs(), &[(0, 0), (2, 0), (2, 0)]);
    }

    #[test]
    fn query_validation() {
        assert!(FamilyQuery::b(3, 0, 3, 1, 0).is_err());
        assert!(FamilyQuery::b(3, 0, 0, 1, 0).is_err());
        assert!(FamilyQuery::new(FamilyKind::A, 3, 0, 1, vec![2], 0).is_err());
        assert!(FamilyQuery::new(FamilyKind::C, 3, 0, 1, vec![], 0).is_err());
        assert!(FamilyQuery::a(0, 0, 1, 0).is_err());
        let fq = FamilyQuery::c(5, 2, vec![2, 4, 3], 2, 1).unwrap();
        assert_eq!(fq.partition().parts(), &[5, 5, 4, 3, 2, 1, 1]);
        assert_eq!(fq.weight(), 21 - 2);
    }

    #[test]
    fn corollary_examples() {
        // s - 2N = 2 = 1*2 + 0, so [x^1] p_1 / p_2^2 = [x^1] 1/(1-x)^2 = 2
        let fq = FamilyQuery::a(2, 0, 4, 1).unwrap();
        let eval = corollary_evaluation(&fq).unwrap();
        assert_eq!((eval.q, eval.rho), (1, 0));
        assert_eq!(eval.value, n(2));
        assert_eq!(eval.tuple_count, Some(n(2)));

        let fq = FamilyQuery::a(3, 1, 2, 2).unwrap();
        let eval = corollary_evaluation(&fq).unwrap();
        assert!(eval.q < 0);
        assert_eq!(eval.value, n(0));

        let fq = FamilyQuery::b(5, 1, 2, 1, 1).unwrap();
        let eval = corollary_evaluation(&fq).unwrap();
        assert_eq!(eval.value, multiplicity(&fq.partition(), 5, eval.weight).unwrap());
    }

    #[test]
    fn family_b_without_model_is_flagged() {
        // r + s - 2N = 3 - 2 = 1 < r: q = 0 and 2N > s
        let fq = FamilyQuery::b(4, 0, 2, 1, 1).unwrap();
        let eval = corollary_evaluation(&fq).unwrap();
        assert_eq!(eval.q, 0);
        assert!(!eval.has_unsigned_model());
        assert_eq!(eval.value, multiplicity(&fq.partition(), 4, eval.weight).unwrap());
    }

    #[test]
    fn shapes() {
        let shape = family_shape(&xi(&[4, 4, 1]), 4).unwrap();
        assert_eq!((shape.kind, shape.t, shape.s), (FamilyKind::A, 2, 1));
        let shape = family_shape(&xi(&[4, 2, 1, 1]), 4).unwrap();
        assert_eq!((shape.kind, shape.rs.clone()), (FamilyKind::B, vec![2]));
        let shape = family_shape(&xi(&[3, 2]), 4).unwrap();
        assert_eq!(shape.kind, FamilyKind::C);
        let shape = family_shape(&xi(&[1, 1]), 1).unwrap();
        assert_eq!((shape.kind, shape.t, shape.s), (FamilyKind::A, 2, 0));
        assert!(family_shape(&xi(&[3]), 2).is_err());
    }
}

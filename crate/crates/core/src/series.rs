//! Exact polynomials and truncated power series over the integers.
//!
//! Coefficients are [`BigInt`]s throughout, so no operation can overflow.
//! Division is only offered by a denominator with constant term exactly 1,
//! which keeps every quotient coefficient integral.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in canonical form: the last stored coefficient
/// is nonzero, and the zero polynomial stores nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients indexed by degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `x -> x^factor`.
    pub fn stretch(&self, factor: usize) -> Self {
        assert!(factor >= 1, "stretch factor must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * factor + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * factor] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{j}")?,
                (_, false) => write!(f, "{mag}x^{j}")?,
            }
        }
        Ok(())
    }
}

/// Coefficientwise sum.
pub fn poly_add(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let (long, short) = if p.coeffs.len() >= q.coeffs.len() {
        (p, q)
    } else {
        (q, p)
    };
    let mut coeffs = long.coeffs.clone();
    for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
        *c += s;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Convolution product.
pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() || q.is_zero() {
        return IntPolynomial::zero();
    }
    let mut coeffs = vec![BigInt::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        poly_add(self, rhs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        poly_add(self, &-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        poly_mul(self, rhs)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Power series known exactly through degree `order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // invariant: len == order + 1
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Truncates (or zero-pads) a polynomial to the given order.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let coeffs = (0..=order).map(|j| p.coeff(j)).collect();
        Self { coeffs }
    }

    /// Takes exactly `coeffs.len() - 1` as the order. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least a_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `[x^j]`, with the convention that negative indices give 0.
    pub fn coeff(&self, j: i64) -> Result<BigInt> {
        if j < 0 {
            return Ok(BigInt::zero());
        }
        self.coeffs
            .get(j as usize)
            .cloned()
            .ok_or(Error::IndexBeyondOrder {
                index: j,
                order: self.order(),
            })
    }

    /// Restriction to a lower order. Panics if `order` exceeds the current one.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Product of two series, truncated to the smaller order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// The polynomial obtained by forgetting the truncation.
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.clone())
    }
}

/// Expands `num / den` through degree `order`.
///
/// `den` must have constant term 1; then the recurrence
/// `s_n = num_n - sum_{i>=1} den_i s_{n-i}` stays in the integers.
pub fn series_div_unit(
    num: &IntPolynomial,
    den: &IntPolynomial,
    order: usize,
) -> Result<TruncatedSeries> {
    let constant = den.constant_term();
    if !constant.is_one() {
        return Err(Error::NonUnitConstantTerm { constant });
    }
    let tail = &den.coeffs()[1..];
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut s = num.coeff(n);
        for (i, d) in tail.iter().enumerate().take(n) {
            if !d.is_zero() {
                s -= d * &coeffs[n - 1 - i];
            }
        }
        coeffs.push(s);
    }
    Ok(TruncatedSeries { coeffs })
}

//! Exact coefficients of the Chebyshev-type quotients
//! `p_{m-mu0-1}(x) p_xi(x) / p_m(x)^{mu1+1}` that compute numerical
//! Demazure-flag multiplicities, together with independent combinatorial
//! routes to the same numbers: matchings in path graphs, height-bounded
//! strip walks, and bounded Dyck paths.
//!
//! Everything in the exact pipeline uses arbitrary-precision integers.
//! Floating point appears only in [`chebpoly::RootData`] diagnostics.

pub mod chebpoly;
pub mod error;
pub mod families;
pub mod pathcomb;
pub mod quotient;
pub mod series;

pub use chebpoly::Partition;
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilyQuery, PairDecomposition};
pub use quotient::{CoefficientReport, PositivityClass, QuotientSpec};
pub use series::{IntPolynomial, TruncatedSeries};

//! Lattice-path and matching combinatorics behind the quotient coefficients.
//!
//! Closed forms and transfer-matrix counts live next to brute-force
//! enumerators that serve as their oracles. The enumerators refuse inputs
//! beyond their size guards instead of sampling.

mod dyck;
mod matchings;
mod transfer;
mod walks;

pub use dyck::{
    dyck_count, dyck_counts, dyck_to_walk, enumerate_dyck, walk_to_dyck, DyckConstraint,
    DyckPath, Step, MAX_ORACLE_SEMILENGTH,
};
pub use matchings::{enumerate_matchings, matching_count, Matching, MAX_ORACLE_VERTICES};
pub use transfer::{
    adjacency_matrix, continuant_determinant, continuant_matrix, determinant, full_height_count,
    full_height_counts, strip_walk_count, walk_counts,
};
pub use walks::{enumerate_strip_walks, StripWalk, MAX_ORACLE_WALK_LENGTH};

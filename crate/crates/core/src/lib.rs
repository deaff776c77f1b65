//! Combinatorics of k-bounded partitions, (k+1)-cores and semistandard
//! k-tableaux, with monomial expansions of Schur, dual k-Schur, k-Schur,
//! affine Stanley and cylindric skew Schur polynomials, and checks for
//! saturated Newton polytopes, M-convexity and the Lorentzian property.

pub mod affine;
pub mod cores;
pub mod error;
pub mod partitions;
pub mod polytope;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Cell, Composition, Partition};

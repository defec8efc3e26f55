//! Exact computations with Z2Z4-additive codes.
//!
//! A Z2Z4-additive code is a subgroup of `Z2^alpha x Z4^beta`. This crate
//! builds such codes from generator rows and computes
//!
//! * the type `(alpha, beta; gamma, delta; kappa)` and a canonical generator
//!   matrix up to coordinate permutation ([`code`]),
//! * the Gray map, Lee weights and the alphabet-change maps ([`graymap`]),
//! * additive duals under the standard inner product, by three independent
//!   routes, and Lee weight enumerators with the MacWilliams transform
//!   ([`duality`]),
//! * self-duality, antipodality and separability tests and three families
//!   of self-dual codes ([`selfdual`]).
//!
//! All arithmetic is exact. Operations that enumerate codewords or the
//! ambient space take an explicit cap and fail with
//! [`Error::CapExceeded`] rather than running unbounded.

pub mod algebra;
pub mod code;
pub mod duality;
pub mod error;
pub mod graymap;
pub mod selfdual;

pub use algebra::{
    MixedMatrix, MixedVector, Permutation, QuaternaryMatrix, QuaternaryReduction, Z4,
};
pub use code::{
    codes_equal, CodeType, StandardFormDecomposition, Z2Z4Code, DEFAULT_ENUMERATION_CAP,
};
pub use duality::{WeightEnumerator, DEFAULT_ORACLE_CAP};
pub use error::{Error, Result};
pub use graymap::BinaryVector;
pub use selfdual::SelfDualReport;

//! Desk-scale exact computational algebra for commutative comodule algebras.
//!
//! Given a finite-dimensional commutative algebra `A` over an exact field
//! (the rationals or a prime field) and a commutative bialgebra `H` from one
//! of two families (a group algebra `kM`, covering `k[X, X^-1]` and `kG`, or
//! the dual `k^G` of a finite group), this crate builds the coring `A (x) H`
//! attached to a comodule-algebra structure on `A`, finds its grouplike
//! elements, and computes the first Harrison cohomology group as the quotient
//! of the invertible grouplikes by the coboundaries `d(a) = a^-1 a_[0] (x) a_[1]`.
//!
//! Everything is exact: rational arithmetic is arbitrary precision and prime
//! fields are computed with canonical residues, so kernels, cohomology classes
//! and all reported witnesses are free of rounding.

pub mod algebra;
pub mod cohomology;
pub mod comodule;
pub mod coring;
pub mod field;
pub mod hopf;
pub mod snf;

pub use algebra::{AlgElement, Algebra, Subalgebra};
pub use comodule::Coaction;
pub use coring::{Coring, CoringElement, Grouplike};
pub use field::{Field, Matrix, Scalar};
pub use hopf::{FiniteGroup, Group, GroupElt, HopfAlgebra, Window};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation requires a prime field")]
    RequiresPrimeField,
    #[error("search space of size {space} exceeds the cap {cap}")]
    CapExceeded { space: u128, cap: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("invertibility undecided within the degree window")]
    InverseUnknown,
    #[error("operation not available for this Hopf variant: {0}")]
    VariantMismatch(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

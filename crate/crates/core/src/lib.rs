//! Exact computations with homogeneous codimension-one foliations on
//! symmetric spaces of noncompact type.
//!
//! The crate builds restricted root systems with exact rational coordinates,
//! assembles symmetric spaces from a data-driven catalog of irreducible
//! factors, computes the automorphism group of the weighted Dynkin diagram,
//! and decides isometric congruence of foliation parameters (lines in the
//! flat, simple roots, and more general subspaces) by orbit search. A split
//! Chevalley model of the solvable algebras involved is included so the
//! supporting algebraic facts can be machine-checked at desk scale.
//!
//! Everything is exact: scalars are rationals, decisions are yes/no, and no
//! floating point appears anywhere in the pipeline. The linear algebra layer
//! is generic over the scalar type (see [`scalar::Scalar`]); the alias [`Q`]
//! at the crate root is the concrete scalar used by the CLI and most tests.

pub mod catalog;
pub mod chevalley;
pub mod dynkin;
pub mod foliations;
pub mod horospherical;
pub mod linalg;
pub mod rootsys;
pub mod scalar;

pub use scalar::Scalar;

/// Default exact scalar: arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

/// Symmetric space over the default scalar.
pub type Space = catalog::SymmetricSpace<Q>;

/// Convenience constructor for the default scalar.
pub fn q(n: i64) -> Q {
    use crate::scalar::Scalar as _;
    Q::from_i64(n)
}

/// Convenience constructor for a rational `n/d` over the default scalar.
pub fn qr(n: i64, d: i64) -> Q {
    use crate::scalar::Scalar as _;
    Q::from_ratio(n, d)
}

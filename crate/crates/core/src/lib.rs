//! Quasideterminants and classical noncommutative determinants.
//!
//! The crate works over any scalar satisfying the [`Scalar`] contract: an
//! associative division algebra with an anti-involution whose fixed elements
//! are central. Exact instances are provided for big rationals, complex
//! rationals and rational quaternions; `f64` instances exist for numerical
//! use.
//!
//! Layout:
//!
//! * [`scalar`] and [`quaternion`]: the scalar contract and its instances.
//! * [`matrix`]: square matrices whose rows and columns keep their original
//!   1-based labels across submatrix deletion.
//! * [`quasidet`]: quasideterminants (block-inverse and recursive
//!   algorithms), inversion, and the structural identities.
//! * [`perm`]: orderings, parities and cycle normal forms.
//! * [`dets`]: predeterminants, Gauss UDL, Dieudonné, Moore and Study
//!   determinants and the matrix norm.
//! * [`permanents`]: monomial paths, double permanents and the polynomial
//!   expansion of `ν(A^{ij})·|A|_{ij}`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dets;
pub mod error;
pub mod matrix;
pub mod perm;
pub mod permanents;
pub mod quasidet;
pub mod quaternion;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::{LabeledMatrix, SubmatrixSpec};
pub use perm::Ordering;
pub use quasidet::{HomologicalIndices, QuasidetResult, Verdict};
pub use quaternion::{ComplexPair, Quaternion};
pub use scalar::{Complex, Rational, Real, Scalar, Tolerance};

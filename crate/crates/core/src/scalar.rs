//! The division-scalar-with-anti-involution contract and its real and
//! complex instances.
//!
//! Every scalar kind supplies a conjugation `x ↦ x̄` with `(xy)‾ = ȳ x̄` and
//! `x̄̄ = x`, and a norm `ν(x) = x x̄` landing in the real subfield. Inverses
//! are computed uniformly as `x⁻¹ = ν(x)⁻¹ x̄`, which is valid because the
//! real subfield is central.

use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, ToPrimitive, Zero};

pub use num_complex::Complex;

/// Exact rational numbers backed by arbitrary-precision integers, always
/// stored in lowest terms with a positive denominator. Small values are kept
/// inline without allocation.
pub type Rational = dashu_ratio::RBig;

/// Tolerance used when comparing floating-point scalars. Exact kinds ignore
/// it and compare with `==`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance { rel: 0.0, abs: 0.0 };

    /// Relative 1e-9, absolute 1e-12 near zero.
    pub const FLOAT: Tolerance = Tolerance {
        rel: 1e-9,
        abs: 1e-12,
    };

    /// Component-wise closeness. `scale` is the largest absolute component of
    /// either operand, so nearly-cancelled components are judged against the
    /// magnitude of the whole value.
    pub fn components_close(&self, lhs: &[f64], rhs: &[f64]) -> bool {
        let scale = lhs
            .iter()
            .chain(rhs)
            .fold(0.0_f64, |acc, x| acc.max(x.abs()));
        lhs.iter().zip(rhs).all(|(a, b)| {
            let d = (a - b).abs();
            d <= self.abs || d <= self.rel * scale
        })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::FLOAT
    }
}

/// A real field usable as the component type of complex numbers and
/// quaternions.
pub trait Real: Num + Clone + Debug + PartialOrd + Neg<Output = Self> {
    /// Whether arithmetic is exact (rationals) or rounded (floats).
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Multiplicative inverse; `None` exactly when `self` is zero.
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Real for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// A (possibly noncommutative) division scalar with an anti-involution.
///
/// Laws every implementation satisfies, checked by the property tests:
/// `conj(xy) = conj(y) conj(x)`, `conj(conj(x)) = x`, `ν(x) = x conj(x)` is
/// real, and every conjugation-fixed element commutes with everything.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The central real subfield, fixed by conjugation.
    type Real: Real;

    /// Whether multiplication commutes. Only commutative kinds admit the
    /// classical determinant.
    const COMMUTATIVE: bool;

    fn zero() -> Self;

    fn one() -> Self;

    /// Exact zero test, also for floating kinds.
    fn is_zero(&self) -> bool;

    fn from_real(r: Self::Real) -> Self;

    fn conj(&self) -> Self;

    /// `ν(x) = x·conj(x)`, as an element of the real subfield.
    fn norm(&self) -> Self::Real;

    /// The conjugation-fixed part `(x + conj(x)) / 2`.
    fn real_part(&self) -> Self::Real;

    /// Multiply by an element of the (central) real subfield.
    fn scale(&self, r: &Self::Real) -> Self;

    /// Components as `f64`, used for tolerance comparisons and float output.
    fn to_f64_components(&self) -> alloc::vec::Vec<f64>;

    /// True when every non-real component is exactly zero.
    fn is_real(&self) -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_real(<Self::Real as Real>::from_i64(v))
    }

    /// `x⁻¹ = ν(x)⁻¹·conj(x)`; `None` when `x = 0`.
    fn inv(&self) -> Option<Self> {
        self.norm().recip().map(|r| self.conj().scale(&r))
    }

    /// Conjugation-fixed elements form the central subalgebra.
    fn is_central_fixed(&self) -> bool {
        self.conj() == *self
    }

    /// Equality for exact kinds, tolerance comparison for floating kinds.
    fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        if <Self::Real as Real>::EXACT {
            self == other
        } else {
            tol.components_close(&self.to_f64_components(), &other.to_f64_components())
        }
    }
}

macro_rules! real_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const COMMUTATIVE: bool = true;

            fn zero() -> Self {
                Zero::zero()
            }

            fn one() -> Self {
                One::one()
            }

            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }

            fn from_real(r: Self::Real) -> Self {
                r
            }

            fn conj(&self) -> Self {
                self.clone()
            }

            fn norm(&self) -> Self::Real {
                self.clone() * self.clone()
            }

            fn real_part(&self) -> Self::Real {
                self.clone()
            }

            fn scale(&self, r: &Self::Real) -> Self {
                self.clone() * r.clone()
            }

            fn to_f64_components(&self) -> alloc::vec::Vec<f64> {
                alloc::vec![Real::to_f64(self)]
            }

            fn is_real(&self) -> bool {
                true
            }
        }
    };
}

real_scalar!(Rational);
real_scalar!(f64);

impl<R: Real> Scalar for Complex<R> {
    type Real = R;
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Complex::new(R::zero(), R::zero())
    }

    fn one() -> Self {
        Complex::new(R::one(), R::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn from_real(r: R) -> Self {
        Complex::new(r, R::zero())
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn norm(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    fn real_part(&self) -> R {
        self.re.clone()
    }

    fn scale(&self, r: &R) -> Self {
        Complex::new(self.re.clone() * r.clone(), self.im.clone() * r.clone())
    }

    fn to_f64_components(&self) -> alloc::vec::Vec<f64> {
        alloc::vec![self.re.to_f64(), self.im.to_f64()]
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

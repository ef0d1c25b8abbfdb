//! Quaternions `h = a + b𝐢 + c𝐣 + d𝐤` over a real field, the splitting
//! `h = α + 𝐣β` into complex numbers, and the embedding `θ: ℍ → M(2, ℂ)`.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Complex, Real, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Real> Quaternion<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn real(a: R) -> Self {
        Quaternion::new(a, R::zero(), R::zero(), R::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion::new(R::from_i64(a), R::from_i64(b), R::from_i64(c), R::from_i64(d))
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `h = α + 𝐣β` with `α = a + b𝐢` and `β = c − d𝐢`.
    pub fn to_complex_pair(&self) -> ComplexPair<R> {
        ComplexPair {
            alpha: Complex::new(self.a.clone(), self.b.clone()),
            beta: Complex::new(self.c.clone(), -self.d.clone()),
        }
    }

    pub fn from_complex_pair(p: &ComplexPair<R>) -> Self {
        Quaternion::new(
            p.alpha.re.clone(),
            p.alpha.im.clone(),
            p.beta.re.clone(),
            -p.beta.im.clone(),
        )
    }

    /// `θ(h) = [[α, −β̄], [β, ᾱ]]`, a homomorphism of real algebras with
    /// `det θ(h) = ν(h)`.
    pub fn theta(&self) -> [[Complex<R>; 2]; 2] {
        let ComplexPair { alpha, beta } = self.to_complex_pair();
        let alpha_bar = Scalar::conj(&alpha);
        let minus_beta_bar = -Scalar::conj(&beta);
        [[alpha, minus_beta_bar], [beta, alpha_bar]]
    }

    pub fn map<T: Real>(&self, f: impl Fn(&R) -> T) -> Quaternion<T> {
        Quaternion::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// A quaternion written as `α + 𝐣β` with complex `α`, `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPair<R> {
    pub alpha: Complex<R>,
    pub beta: Complex<R>,
}

impl<R: Real> Add for Quaternion<R> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl<R: Real> Sub for Quaternion<R> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl<R: Real> Neg for Quaternion<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<R: Real> Mul for Quaternion<R> {
    type Output = Self;

    // 𝐢² = 𝐣² = 𝐤² = −1, 𝐢𝐣 = 𝐤 = −𝐣𝐢, 𝐣𝐤 = 𝐢 = −𝐤𝐣, 𝐤𝐢 = 𝐣 = −𝐢𝐤
    fn mul(self, o: Self) -> Self {
        let Quaternion { a, b, c, d } = self;
        let Quaternion {
            a: e,
            b: f,
            c: g,
            d: h,
        } = o;
        Quaternion::new(
            a.clone() * e.clone() - b.clone() * f.clone() - c.clone() * g.clone() - d.clone() * h.clone(),
            a.clone() * f.clone() + b.clone() * e.clone() + c.clone() * h.clone() - d.clone() * g.clone(),
            a.clone() * g.clone() - b.clone() * h.clone() + c.clone() * e.clone() + d.clone() * f.clone(),
            a * h + b * g - c * f + d * e,
        )
    }
}

impl<R: Real> Scalar for Quaternion<R> {
    type Real = R;
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        Quaternion::real(R::zero())
    }

    fn one() -> Self {
        Quaternion::real(R::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn from_real(r: R) -> Self {
        Quaternion::real(r)
    }

    fn conj(&self) -> Self {
        Quaternion::new(
            self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    fn norm(&self) -> R {
        self.a.clone() * self.a.clone()
            + self.b.clone() * self.b.clone()
            + self.c.clone() * self.c.clone()
            + self.d.clone() * self.d.clone()
    }

    fn real_part(&self) -> R {
        self.a.clone()
    }

    fn scale(&self, r: &R) -> Self {
        Quaternion::new(
            self.a.clone() * r.clone(),
            self.b.clone() * r.clone(),
            self.c.clone() * r.clone(),
            self.d.clone() * r.clone(),
        )
    }

    fn to_f64_components(&self) -> Vec<f64> {
        self.components().iter().map(|x| x.to_f64()).collect()
    }

    fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

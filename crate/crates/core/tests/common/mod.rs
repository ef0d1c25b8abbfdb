#![allow(dead_code)]

use ncdet_core::quasidet::is_generic;
use ncdet_core::{Complex, LabeledMatrix, Quaternion, Rational, Scalar};
use proptest::prelude::*;

pub type Q = Quaternion<Rational>;
pub type C = Complex<Rational>;
pub type M = LabeledMatrix<Q>;

pub fn int() -> impl Strategy<Value = i64> {
    -9i64..=9
}

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn quat() -> impl Strategy<Value = Q> {
    (int(), int(), int(), int()).prop_map(|(a, b, c, d)| Q::from_ints(a, b, c, d))
}

pub fn nonzero_quat() -> impl Strategy<Value = Q> {
    quat().prop_filter("nonzero", |h| !h.is_zero())
}

pub fn complex() -> impl Strategy<Value = C> {
    (int(), int()).prop_map(|(re, im)| C::new(rat(re), rat(im)))
}

pub fn real_quat() -> impl Strategy<Value = Q> {
    int().prop_map(|a| Q::from_ints(a, 0, 0, 0))
}

pub fn matrix_of<S: Scalar + 'static>(n: usize, entry: impl Strategy<Value = S> + 'static) -> impl Strategy<Value = LabeledMatrix<S>> {
    proptest::collection::vec(entry, n * n).prop_map(move |v| LabeledMatrix::from_fn(n, |i, j| v[(i - 1) * n + (j - 1)].clone()))
}

pub fn matrix(n: usize) -> impl Strategy<Value = M> {
    matrix_of(n, quat())
}

pub fn generic(n: usize) -> impl Strategy<Value = M> {
    matrix(n).prop_filter("generic", is_generic)
}

pub fn generic_complex(n: usize) -> impl Strategy<Value = LabeledMatrix<C>> {
    matrix_of(n, complex()).prop_filter("generic", is_generic)
}

/// Hermitian: real diagonal, lower triangle the conjugate of the upper.
pub fn hermitian(n: usize) -> impl Strategy<Value = M> {
    (proptest::collection::vec(int(), n), proptest::collection::vec(quat(), n * n)).prop_map(move |(d, v)| {
        LabeledMatrix::from_fn(n, |i, j| {
            if i == j {
                Q::from_ints(d[i - 1], 0, 0, 0)
            } else if i < j {
                v[(i - 1) * n + (j - 1)].clone()
            } else {
                v[(j - 1) * n + (i - 1)].conj()
            }
        })
    })
}

pub fn generic_hermitian(n: usize) -> impl Strategy<Value = M> {
    hermitian(n).prop_filter("generic", is_generic)
}

mod common;

use common::*;
use ncdet_core::{Complex, ComplexPair, Quaternion, Rational, Scalar};
use proptest::prelude::*;

type Th = [[C; 2]; 2];

fn th_mul(x: &Th, y: &Th) -> Th {
    let e = |r: usize, c: usize| x[r][0].clone() * y[0][c].clone() + x[r][1].clone() * y[1][c].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn th_add(x: &Th, y: &Th) -> Th {
    let e = |r: usize, c: usize| x[r][c].clone() + y[r][c].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| Rational::from(p) / Rational::from(q))
}

proptest! {
    #[test]
    fn conj_is_anti_multiplicative(x in quat(), y in quat()) {
        prop_assert_eq!((x.clone() * y.clone()).conj(), y.conj() * x.conj());
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn norm_is_multiplicative(x in quat(), y in quat()) {
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }

    #[test]
    fn norm_is_h_times_conj(x in quat()) {
        let n = x.clone() * x.conj();
        prop_assert!(n.is_real());
        prop_assert_eq!(n.clone(), x.conj() * x.clone());
        prop_assert_eq!(n.real_part(), x.norm());
        prop_assert_eq!(x.norm().is_zero(), x.is_zero());
    }

    #[test]
    fn inverse_is_two_sided(x in nonzero_quat()) {
        let inv = x.inv().unwrap();
        prop_assert_eq!(x.clone() * inv.clone(), Q::one());
        prop_assert_eq!(inv * x, Q::one());
    }

    #[test]
    fn multiplication_is_associative(x in quat(), y in quat(), z in quat()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x * (y * z));
    }

    #[test]
    fn theta_is_a_homomorphism(x in quat(), y in quat()) {
        prop_assert_eq!((x.clone() * y.clone()).theta(), th_mul(&x.theta(), &y.theta()));
        prop_assert_eq!((x.clone() + y.clone()).theta(), th_add(&x.theta(), &y.theta()));
    }

    #[test]
    fn theta_determinant_is_norm(x in quat()) {
        let t = x.theta();
        let det = t[0][0].clone() * t[1][1].clone() - t[0][1].clone() * t[1][0].clone();
        prop_assert_eq!(det, C::new(x.norm(), rat(0)));
    }

    #[test]
    fn complex_pair_round_trip(x in quat()) {
        let p: ComplexPair<Rational> = x.to_complex_pair();
        prop_assert_eq!(Quaternion::from_complex_pair(&p), x);
    }

    #[test]
    fn rational_arithmetic_is_exact(x in rational(), y in rational()) {
        prop_assert_eq!((x.clone() + y.clone()) - y.clone(), x.clone());
        if !y.is_zero() {
            prop_assert_eq!((x.clone() * y.clone()) / y, x);
        }
    }

    #[test]
    fn complex_scalar_laws(x in complex(), y in complex()) {
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * Scalar::inv(&x).unwrap(), C::one());
        }
    }
}

fn central<S: Scalar>(fixed: &S, others: &[S]) -> bool {
    fixed.is_central_fixed() && others.iter().all(|y| fixed.clone() * y.clone() == y.clone() * fixed.clone())
}

proptest! {
    #[test]
    fn fixed_quaternions_are_central(r in real_quat(), ys in proptest::collection::vec(quat(), 100)) {
        prop_assert!(central(&r, &ys));
    }

    #[test]
    fn fixed_complexes_are_central(r in int(), ys in proptest::collection::vec(complex(), 100)) {
        prop_assert!(central(&C::new(rat(r), rat(0)), &ys));
    }

    #[test]
    fn fixed_rationals_are_central(r in rational(), ys in proptest::collection::vec(rational(), 100)) {
        prop_assert!(central(&r, &ys));
    }

    #[test]
    fn fixed_float_quaternions_are_central(
        r in -9.0f64..9.0,
        ys in proptest::collection::vec((-9.0f64..9.0, -9.0f64..9.0, -9.0f64..9.0, -9.0f64..9.0), 100),
    ) {
        let ys: Vec<Quaternion<f64>> = ys.into_iter().map(|(a, b, c, d)| Quaternion::new(a, b, c, d)).collect();
        prop_assert!(central(&Quaternion::real(r), &ys));
    }
}

#[test]
fn non_real_quaternions_are_not_fixed() {
    assert!(!Q::i().is_central_fixed());
    assert!(!Complex::new(rat(0), rat(1)).is_central_fixed());
}

#[test]
fn float_inverse_of_exact_zero() {
    assert!(Quaternion::<f64>::zero().inv().is_none());
    assert!(Quaternion::new(1e-100, 0.0, 0.0, 0.0).inv().is_some());
}

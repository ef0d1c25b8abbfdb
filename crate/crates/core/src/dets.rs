//! Noncommutative determinants: predeterminants `D_{I,J}`, the basic
//! predeterminant `Δ`, the Gauss UDL decomposition and Dieudonné
//! predeterminant, the Moore and Study determinants, and the matrix norm `ν`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::perm::{self, CycleForm, Ordering};
use crate::quasidet::{self, Verdict};
use crate::quaternion::Quaternion;
use crate::scalar::{Complex, Real, Scalar, Tolerance};

/// Largest order accepted by the `n!`-term Moore expansion.
pub const MOORE_CAP: usize = 8;

fn same_set(seq: &[usize], labels: &[usize]) -> bool {
    seq.len() == labels.len() && labels.iter().all(|l| seq.contains(l))
}

/// `D_{I,J}(A) = |A|_{i₁j₁} |A^{i₁j₁}|_{i₂j₂} |A^{i₁i₂,j₁j₂}|_{i₃j₃} ⋯ a_{i_n j_n}`,
/// multiplied left to right. An undefined factor reports its depth (0 for
/// the outermost).
pub fn predet<S: Scalar>(a: &LabeledMatrix<S>, rows: &Ordering, cols: &Ordering) -> Result<S> {
    if !same_set(rows.as_slice(), a.row_labels()) || !same_set(cols.as_slice(), a.col_labels()) {
        return Err(Error::InvalidOrdering("orderings must cover the matrix labels"));
    }
    let mut current = a.clone();
    let mut product = S::one();
    for (depth, (&i, &j)) in rows.as_slice().iter().zip(cols.as_slice()).enumerate() {
        let factor = quasidet::quasidet_block(&current, i, j)?
            .value
            .ok_or(Error::Undefined { row: i, col: j, depth })?;
        product = product * factor;
        current = current.delete_rc(&[i], &[j])?;
    }
    Ok(product)
}

/// `Δ(A) = D_{(1…n),(1…n)}(A)`, in label order.
pub fn delta<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S> {
    let rows = Ordering::new(a.row_labels().to_vec())?;
    let cols = Ordering::new(a.col_labels().to_vec())?;
    predet(a, &rows, &cols)
}

/// `A = U·D·L` with `U` upper unitriangular, `D` diagonal and `L` lower
/// unitriangular.
#[derive(Clone, Debug, PartialEq)]
pub struct UdlFactors<S> {
    pub upper: LabeledMatrix<S>,
    pub diag: LabeledMatrix<S>,
    pub lower: LabeledMatrix<S>,
}

impl<S: Scalar> UdlFactors<S> {
    /// `y₁, …, y_n` from top to bottom.
    pub fn pivots(&self) -> Vec<S> {
        (0..self.diag.order()).map(|k| self.diag.at(k, k).clone()).collect()
    }

    pub fn product(&self) -> Result<LabeledMatrix<S>> {
        self.upper.matmul(&self.diag)?.matmul(&self.lower)
    }
}

/// Gauss decomposition by elimination from the bottom-right corner, so that
/// `y_k` is the `(k, k)` quasideterminant of the trailing submatrix on
/// positions `k..n`. Fails when a pivot that must be inverted vanishes.
pub fn gauss_udl<S: Scalar>(a: &LabeledMatrix<S>) -> Result<UdlFactors<S>> {
    let n = a.order();
    let mut m: Vec<Vec<S>> = (0..n).map(|r| (0..n).map(|c| a.at(r, c).clone()).collect()).collect();
    let mut upper: Vec<S> = (0..n * n).map(|x| if x / n == x % n { S::one() } else { S::zero() }).collect();
    let mut lower = upper.clone();
    let mut diag = alloc::vec![S::zero(); n * n];

    for k in (0..n).rev() {
        let d = m[k][k].clone();
        diag[k * n + k] = d.clone();
        if k == 0 {
            break;
        }
        let d_inv = d.inv().ok_or(Error::Undefined {
            row: a.row_labels()[k],
            col: a.col_labels()[k],
            depth: k,
        })?;
        for r in 0..k {
            upper[r * n + k] = m[r][k].clone() * d_inv.clone();
        }
        for c in 0..k {
            lower[k * n + c] = d_inv.clone() * m[k][c].clone();
        }
        for r in 0..k {
            for c in 0..k {
                let t = upper[r * n + k].clone() * m[k][c].clone();
                m[r][c] = m[r][c].clone() - t;
            }
        }
    }

    let rl = a.row_labels().to_vec();
    let cl = a.col_labels().to_vec();
    Ok(UdlFactors {
        upper: LabeledMatrix::with_labels(rl.clone(), rl.clone(), upper)?,
        diag: LabeledMatrix::with_labels(rl, cl.clone(), diag)?,
        lower: LabeledMatrix::with_labels(cl.clone(), cl, lower)?,
    })
}

/// Dieudonné predeterminant: the diagonal of `D` multiplied top to bottom.
pub fn dieudonne_pre<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S> {
    Ok(gauss_udl(a)?.pivots().into_iter().fold(S::one(), |acc, y| acc * y))
}

/// Squared Dieudonné determinant `ν(Δ(A))`. Its square root is the
/// Dieudonné determinant of a quaternionic matrix.
pub fn dieudonne_sq<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S::Real> {
    Ok(delta(a)?.norm())
}

/// Moore determinant: sum over all permutations, each written as disjoint
/// cycles led by their smallest element with cycles in decreasing order of
/// leaders, and the entries multiplied in exactly that written order.
pub fn moore<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S> {
    moore_with(a, CycleForm::MinLeadDescending)
}

/// Moore-style sum with an alternative cycle layout.
pub fn moore_with<S: Scalar>(a: &LabeledMatrix<S>, form: CycleForm) -> Result<S> {
    let n = a.order();
    if n > MOORE_CAP {
        return Err(Error::CapExceeded { n, cap: MOORE_CAP });
    }
    let mut total = S::zero();
    for sigma in perm::permutations(n) {
        let mut term = S::one();
        for cycle in perm::cycle_normal_form(&sigma, form) {
            let len = cycle.len();
            for t in 0..len {
                term = term * a.at(cycle[t], cycle[(t + 1) % len]).clone();
            }
        }
        if perm::permutation_sign(&sigma) < 0 {
            total = total - term;
        } else {
            total = total + term;
        }
    }
    Ok(total)
}

/// Classical determinant by Gaussian elimination; commutative kinds only.
pub fn commutative_det<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S> {
    if !S::COMMUTATIVE {
        return Err(Error::NotCommutative);
    }
    let n = a.order();
    let mut m: Vec<Vec<S>> = (0..n).map(|r| (0..n).map(|c| a.at(r, c).clone()).collect()).collect();
    let mut det = S::one();
    for col in 0..n {
        let p = if <S::Real as Real>::EXACT {
            (col..n).find(|&r| !m[r][col].is_zero())
        } else {
            (col..n).filter(|&r| !m[r][col].is_zero()).max_by(|&x, &y| {
                m[x][col]
                    .norm()
                    .partial_cmp(&m[y][col].norm())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
        };
        let Some(p) = p else {
            return Ok(S::zero());
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        let inv = pivot.inv().ok_or(Error::Singular)?;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * inv.clone();
            for c in col..n {
                let t = f.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - t;
            }
        }
    }
    Ok(det)
}

/// `θ_n(A) = (θ(a_{ij}))`, a `2n × 2n` complex matrix labelled `1..=2n`.
pub fn theta_n<R: Real>(a: &LabeledMatrix<Quaternion<R>>) -> LabeledMatrix<Complex<R>> {
    let n = a.order();
    let blocks: Vec<[[Complex<R>; 2]; 2]> = a.entries().iter().map(|h| h.theta()).collect();
    LabeledMatrix::from_fn(2 * n, |i, j| {
        let (r, c) = ((i - 1) / 2, (j - 1) / 2);
        blocks[r * n + c][(i - 1) % 2][(j - 1) % 2].clone()
    })
}

/// Study determinant `S(A) = det θ_n(A)`, a real number.
pub fn study<R: Real>(a: &LabeledMatrix<Quaternion<R>>) -> Result<R> {
    Ok(commutative_det(&theta_n(a))?.re)
}

/// Norm by the recursive definition `ν(A) = ν(|A|₁₁)·ν(A^{11})`, `ν((a)) =
/// ν(a)`. Requires every leading quasideterminant along the way to exist.
pub fn nu_matrix<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S::Real> {
    let mut current = a.clone();
    let mut acc = <S::Real as num_traits::One>::one();
    let mut depth = 0;
    while !current.is_empty() {
        let (i, j) = (current.row_labels()[0], current.col_labels()[0]);
        let q = quasidet::quasidet_block(&current, i, j)?
            .value
            .ok_or(Error::Undefined { row: i, col: j, depth })?;
        acc = acc * q.norm();
        current = current.delete_rc(&[i], &[j])?;
        depth += 1;
    }
    Ok(acc)
}

/// Norm as the Moore determinant of `A·A*`; total and polynomial. The 0×0
/// matrix has norm 1.
pub fn nu_via_moore<S: Scalar>(a: &LabeledMatrix<S>) -> Result<S::Real> {
    if a.is_empty() {
        return Ok(<S::Real as num_traits::One>::one());
    }
    let aa = a.matmul(&a.hermitian_dual())?;
    Ok(moore(&aa)?.real_part())
}

/// Commutative ratio law `|A|_{pq}·det(A^{pq}) = (−1)^{p+q} det(A)`, with the
/// sign taken from the positions of `p` and `q`.
pub fn check_commutative_ratio<S: Scalar>(a: &LabeledMatrix<S>, p: usize, q: usize, tol: &Tolerance) -> Result<Verdict> {
    let rp = a.row_pos(p).ok_or(Error::UnknownLabel(p))?;
    let cq = a.col_pos(q).ok_or(Error::UnknownLabel(q))?;
    let Some(qd) = quasidet::quasidet_block(a, p, q)?.value else {
        return Ok(Verdict::Skipped);
    };
    let lhs = qd * commutative_det(&a.delete_rc(&[p], &[q])?)?;
    let mut rhs = commutative_det(a)?;
    if (rp + cq) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(Verdict::from_bool(lhs.approx_eq(&rhs, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::scalar::Rational;

    type Q = Quaternion<Rational>;
    type M = LabeledMatrix<Q>;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
        Q::from_ints(a, b, c, d)
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn diag3() -> M {
        M::from_fn(3, |i, j| if i == j { q(i as i64 + 1, i as i64, 1, -1) } else { Q::zero() })
    }

    #[test]
    fn predet_small_cases() {
        let one = M::from_rows(vec![vec![q(2, 1, 0, 5)]]).unwrap();
        assert_eq!(delta(&one).unwrap(), q(2, 1, 0, 5));

        let d = diag3();
        let prod = d.at(0, 0).clone() * d.at(1, 1).clone() * d.at(2, 2).clone();
        assert_eq!(delta(&d).unwrap(), prod);
        assert_eq!(delta(&M::identity(4)).unwrap(), Q::one());
    }

    #[test]
    fn predet_commutative_two_by_two() {
        let a = LabeledMatrix::from_rows(vec![vec![r(3), r(5)], vec![r(-2), r(7)]]).unwrap();
        let expected = r(3) * r(7) - r(5) * r(-2);
        assert_eq!(delta(&a).unwrap(), expected);
        let rev = Ordering::new(vec![2, 1]).unwrap();
        let id = Ordering::identity(2);
        assert_eq!(predet(&a, &rev, &id).unwrap(), -expected);
    }

    #[test]
    fn predet_reports_failing_depth() {
        let a = M::from_rows(vec![
            vec![q(2, 0, 0, 0), Q::one(), Q::one()],
            vec![Q::one(), Q::one(), Q::one()],
            vec![Q::one(), Q::one(), Q::one()],
        ])
        .unwrap();
        match delta(&a) {
            Err(Error::Undefined { depth, .. }) => assert_eq!(depth, 0),
            other => panic!("expected undefined, got {other:?}"),
        }
        let bad = Ordering::new(vec![1, 2]).unwrap();
        assert!(predet(&a, &bad, &Ordering::identity(3)).is_err());
    }

    #[test]
    fn udl_diagonal_and_two_by_two() {
        let d = diag3();
        let f = gauss_udl(&d).unwrap();
        assert_eq!(f.upper, M::identity(3));
        assert_eq!(f.lower, M::identity(3));
        assert_eq!(f.diag, d);

        let (a11, a12, a21, a22) = (q(1, 2, 0, -1), q(3, 0, 1, 1), q(-2, 1, 1, 0), q(0, 1, -1, 2));
        let a = M::from_rows(vec![vec![a11.clone(), a12.clone()], vec![a21.clone(), a22.clone()]]).unwrap();
        let f = gauss_udl(&a).unwrap();
        let inv22 = a22.inv().unwrap();
        assert_eq!(
            f.pivots(),
            vec![a11 - a12.clone() * inv22.clone() * a21.clone(), a22.clone()]
        );
        assert_eq!(f.upper.at(0, 1), &(a12 * inv22.clone()));
        assert_eq!(f.lower.at(1, 0), &(inv22 * a21));
        assert_eq!(f.product().unwrap(), a);
    }

    #[test]
    fn dieudonne_small_cases() {
        assert_eq!(dieudonne_pre(&M::identity(3)).unwrap(), Q::one());
        let d = diag3();
        let prod = d.at(0, 0).clone() * d.at(1, 1).clone() * d.at(2, 2).clone();
        assert_eq!(dieudonne_pre(&d).unwrap(), prod);
        assert_eq!(dieudonne_sq(&M::identity(3)).unwrap(), r(1));
        let h = q(1, 2, 3, 4);
        assert_eq!(dieudonne_sq(&M::from_rows(vec![vec![h]]).unwrap()).unwrap(), r(30));
    }

    #[test]
    fn moore_small_cases() {
        assert_eq!(moore(&M::from_rows(vec![vec![q(4, 1, 2, 3)]]).unwrap()).unwrap(), q(4, 1, 2, 3));
        let d = M::from_fn(3, |i, j| if i == j { q(i as i64 + 2, 0, 0, 0) } else { Q::zero() });
        assert_eq!(moore(&d).unwrap(), q(60, 0, 0, 0));
        let h = q(1, -2, 3, 5);
        let herm = M::from_rows(vec![vec![q(3, 0, 0, 0), h.clone()], vec![h.conj(), q(-4, 0, 0, 0)]]).unwrap();
        assert_eq!(moore(&herm).unwrap(), Q::real(r(-12) - h.norm()));
        assert_eq!(moore(&M::empty()).unwrap(), Q::one());
    }

    #[test]
    fn moore_factor_order_on_three_cycle() {
        // only σ = (1 2 3) and its inverse survive on this support pattern
        let x = q(0, 1, 2, 0);
        let y = q(1, 0, 0, 3);
        let z = q(0, 0, 1, 1);
        let a = M::from_rows(vec![
            vec![Q::zero(), x.clone(), Q::zero()],
            vec![Q::zero(), Q::zero(), y.clone()],
            vec![z.clone(), Q::zero(), Q::zero()],
        ])
        .unwrap();
        // σ: 1→2→3→1, written (1 2 3): a12 a23 a31, even
        assert_eq!(moore(&a).unwrap(), x * y * z);
    }

    #[test]
    fn moore_cap() {
        let big = M::identity(MOORE_CAP + 1);
        assert_eq!(moore(&big), Err(Error::CapExceeded { n: 9, cap: 8 }));
    }

    #[test]
    fn study_small_cases() {
        let h = q(1, 2, 3, 4);
        assert_eq!(study(&M::from_rows(vec![vec![h]]).unwrap()).unwrap(), r(30));
        assert_eq!(study(&M::identity(3)).unwrap(), r(1));
    }

    #[test]
    fn theta_n_layout() {
        let a = M::from_rows(vec![vec![Q::one(), Q::j()], vec![Q::i(), Q::zero()]]).unwrap();
        let t = theta_n(&a);
        assert_eq!(t.order(), 4);
        assert_eq!(t.at(0, 3), &Complex::new(r(-1), r(0)));
        assert_eq!(t.at(1, 2), &Complex::new(r(1), r(0)));
        assert_eq!(t.at(2, 0), &Complex::new(r(0), r(1)));
        assert_eq!(t.at(3, 1), &Complex::new(r(0), r(-1)));
    }

    #[test]
    fn norms_small_cases() {
        let h = q(1, 2, 3, 4);
        let one = M::from_rows(vec![vec![h.clone()]]).unwrap();
        assert_eq!(nu_matrix(&one).unwrap(), r(30));
        assert_eq!(nu_via_moore(&one).unwrap(), r(30));
        assert_eq!(nu_via_moore(&M::identity(4)).unwrap(), r(1));
        assert_eq!(nu_matrix(&M::identity(3)).unwrap(), r(1));
        assert_eq!(nu_via_moore(&M::empty()).unwrap(), r(1));
    }

    #[test]
    fn norm_two_by_two_closed_form() {
        let (a11, a12, a21, a22) = (q(1, 2, 0, -1), q(3, 0, 1, 1), q(-2, 1, 1, 0), q(0, 1, -1, 2));
        let a = M::from_rows(vec![vec![a11.clone(), a12.clone()], vec![a21.clone(), a22.clone()]]).unwrap();
        let expect = Q::real(a11.norm() * a22.norm() + a12.norm() * a21.norm())
            - a12.clone() * a22.conj() * a21.clone() * a11.conj()
            - a11 * a21.conj() * a22 * a12.conj();
        assert!(expect.is_real());
        assert_eq!(nu_via_moore(&a).unwrap(), expect.a);
        assert_eq!(nu_matrix(&a).unwrap(), expect.a);
    }

    #[test]
    fn norm_of_singular_matrix_is_zero() {
        let a = M::from_rows(vec![vec![Q::i(), Q::j()], vec![Q::k(), Q::one()]]).unwrap();
        assert_eq!(nu_via_moore(&a).unwrap(), r(0));
        assert_eq!(study(&a).unwrap(), r(0));
    }

    #[test]
    fn commutative_det_basics() {
        let a = LabeledMatrix::from_rows(vec![
            vec![r(0), r(2), r(1)],
            vec![r(1), r(1), r(1)],
            vec![r(2), r(0), r(5)],
        ])
        .unwrap();
        // 0(5) − 2(5 − 2) + 1(0 − 2) = −8
        assert_eq!(commutative_det(&a).unwrap(), r(-8));
        assert_eq!(commutative_det(&M::identity(2)), Err(Error::NotCommutative));
        for p in 1..=3 {
            for qq in 1..=3 {
                assert_ne!(check_commutative_ratio(&a, p, qq, &Tolerance::EXACT).unwrap(), Verdict::Fails);
            }
        }
    }
}

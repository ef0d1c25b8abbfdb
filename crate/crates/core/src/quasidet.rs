//! Quasideterminants over division scalars.
//!
//! `|A|_{ij} = a_{ij} − r_i^j (A^{ij})⁻¹ c_j^i` is evaluated by
//! [`quasidet_block`]; [`quasidet_recursive`] evaluates the expansion
//! `a_{ij} − Σ a_{iq} |A^{ij}|_{pq}⁻¹ a_{pj}` independently and serves as its
//! oracle. Both use original labels throughout. The `check_*` functions
//! evaluate the structural identities (homological relations, heredity,
//! Sylvester, and the elementary row/column properties) and report a
//! [`Verdict`] instead of failing on degenerate input.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::{LabeledMatrix, SubmatrixSpec};
use crate::scalar::{Real, Scalar, Tolerance};

/// A quasideterminant `|A|_{row,col}`; `value` is `None` when `A^{row,col}`
/// is not invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasidetResult<S> {
    pub row: usize,
    pub col: usize,
    pub value: Option<S>,
}

impl<S> QuasidetResult<S> {
    pub fn defined(&self) -> bool {
        self.value.is_some()
    }

    pub fn into_value(self) -> Result<S> {
        let (row, col) = (self.row, self.col);
        self.value.ok_or(Error::Undefined { row, col, depth: 0 })
    }
}

/// Outcome of evaluating an identity on one input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Some subexpression was undefined or not invertible.
    Skipped,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    fn compare<S: Scalar>(lhs: Option<S>, rhs: Option<S>, tol: &Tolerance) -> Self {
        match (lhs, rhs) {
            (Some(l), Some(r)) => Verdict::from_bool(l.approx_eq(&r, tol)),
            _ => Verdict::Skipped,
        }
    }

    /// Combine: any failure fails; otherwise any pass passes.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Holds, _) | (_, Verdict::Holds) => Verdict::Holds,
            _ => Verdict::Skipped,
        }
    }
}

fn pivot_row<S: Scalar>(m: &[Vec<S>], col: usize, from: usize) -> Option<usize> {
    if <S::Real as Real>::EXACT {
        (from..m.len()).find(|&r| !m[r][col].is_zero())
    } else {
        (from..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| {
                m[a][col]
                    .norm()
                    .partial_cmp(&m[b][col].norm())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
    }
}

/// Inverse by Gauss–Jordan elimination with row pivoting. Every row
/// operation multiplies from the left, so the factor order is correct over
/// noncommutative scalars. The inverse has `A`'s column labels as row labels
/// and `A`'s row labels as column labels.
pub fn invert<S: Scalar>(a: &LabeledMatrix<S>) -> Result<LabeledMatrix<S>> {
    let n = a.order();
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|r| {
            let mut row: Vec<S> = (0..n).map(|c| a.at(r, c).clone()).collect();
            row.extend((0..n).map(|c| if c == r { S::one() } else { S::zero() }));
            row
        })
        .collect();

    for col in 0..n {
        let p = pivot_row(&m, col, col).ok_or(Error::Singular)?;
        m.swap(col, p);
        let inv = m[col][col].inv().ok_or(Error::Singular)?;
        for x in m[col].iter_mut() {
            *x = inv.clone() * x.clone();
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * n {
                let t = f.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - t;
            }
        }
    }

    let data: Vec<S> = m.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    LabeledMatrix::with_labels(a.col_labels().to_vec(), a.row_labels().to_vec(), data)
}

/// `|A|_{ij} = a_{ij} − r_i^j (A^{ij})⁻¹ c_j^i`, with `r_i^j` and `c_j^i`
/// ordered by ascending surviving labels. A 1×1 matrix gives `a_{ij}`.
pub fn quasidet_block<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<QuasidetResult<S>> {
    let aij = a.entry(i, j)?.clone();
    if a.order() == 1 {
        return Ok(QuasidetResult {
            row: i,
            col: j,
            value: Some(aij),
        });
    }
    let minor = a.delete_rc(&[i], &[j])?;
    let inv = match invert(&minor) {
        Ok(m) => m,
        Err(Error::Singular) => {
            return Ok(QuasidetResult {
                row: i,
                col: j,
                value: None,
            })
        }
        Err(e) => return Err(e),
    };
    let rows = minor.row_labels();
    let cols = minor.col_labels();
    let m = minor.order();

    // r · (A^{ij})⁻¹: the inverse's positional rows follow A^{ij}'s columns.
    let mut rinv: Vec<S> = alloc::vec![S::zero(); m];
    for (a_pos, &q) in cols.iter().enumerate() {
        let riq = a.entry(i, q)?;
        if riq.is_zero() {
            continue;
        }
        for (b, slot) in rinv.iter_mut().enumerate() {
            *slot = slot.clone() + riq.clone() * inv.at(a_pos, b).clone();
        }
    }
    let mut acc = S::zero();
    for (b, &p) in rows.iter().enumerate() {
        acc = acc + rinv[b].clone() * a.entry(p, j)?.clone();
    }
    Ok(QuasidetResult {
        row: i,
        col: j,
        value: Some(aij - acc),
    })
}

/// Shorthand for [`quasidet_block`] that turns an undefined result into
/// [`Error::Undefined`].
pub fn quasidet<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
    quasidet_block(a, i, j)?.into_value()
}

/// `|A|_{ij} = a_{ij} − Σ_{p≠i, q≠j} a_{iq} |A^{ij}|_{pq}⁻¹ a_{pj}`.
///
/// Defined only when every inner quasideterminant is defined and nonzero,
/// which is a stricter domain than [`quasidet_block`].
pub fn quasidet_recursive<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<QuasidetResult<S>> {
    let aij = a.entry(i, j)?.clone();
    let undefined = QuasidetResult {
        row: i,
        col: j,
        value: None,
    };
    if a.order() == 1 {
        return Ok(QuasidetResult {
            row: i,
            col: j,
            value: Some(aij),
        });
    }
    let minor = a.delete_rc(&[i], &[j])?;
    let mut acc = S::zero();
    for &p in minor.row_labels() {
        for &q in minor.col_labels() {
            let inner = match quasidet_recursive(&minor, p, q)?.value {
                Some(v) => v,
                None => return Ok(undefined),
            };
            let inv = match inner.inv() {
                Some(v) => v,
                None => return Ok(undefined),
            };
            acc = acc + a.entry(i, q)?.clone() * inv * a.entry(p, j)?.clone();
        }
    }
    Ok(QuasidetResult {
        row: i,
        col: j,
        value: Some(aij - acc),
    })
}

/// Every square submatrix is invertible.
pub fn is_generic<S: Scalar>(a: &LabeledMatrix<S>) -> bool {
    let rows = a.row_labels().to_vec();
    let cols = a.col_labels().to_vec();
    (1..=a.order()).all(|k| {
        rows.iter().copied().combinations(k).all(|rs| {
            cols.iter().copied().combinations(k).all(|cs| {
                let spec = SubmatrixSpec { rows: rs.clone(), cols: cs };
                a.submatrix(&spec).and_then(|b| invert(&b)).is_ok()
            })
        })
    })
}

fn qd_opt<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Option<S> {
    quasidet_block(a, i, j).ok().and_then(|r| r.value)
}

fn qd_inv_opt<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Option<S> {
    qd_opt(a, i, j).and_then(|v| v.inv())
}

/// Labels for the homological relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologicalIndices {
    pub i: usize,
    pub j: usize,
    /// Row relation: `ℓ ≠ j`, `s ≠ i`.
    pub l: usize,
    pub s: usize,
    /// Column relation: `k ≠ i`, `t ≠ j`.
    pub k: usize,
    pub t: usize,
}

/// Row relation `−|A|_{ij}·|A^{iℓ}|⁻¹_{sj} = |A|_{iℓ}·|A^{ij}|⁻¹_{sℓ}` and
/// column relation `−|A^{kj}|⁻¹_{it}·|A|_{ij} = |A^{ij}|⁻¹_{kt}·|A|_{kj}`.
pub fn check_homological<S: Scalar>(
    a: &LabeledMatrix<S>,
    ix: HomologicalIndices,
    tol: &Tolerance,
) -> Result<(Verdict, Verdict)> {
    HomologicalTable::new(a).check(ix, tol)
}

/// Memo of `|A|_{pq}` and `|A^{pq}|_{st}` for sweeping the homological
/// relations over many index tuples of one matrix.
pub struct HomologicalTable<'a, S: Scalar> {
    a: &'a LabeledMatrix<S>,
    top: BTreeMap<(usize, usize), Option<S>>,
    minors: BTreeMap<(usize, usize, usize, usize), Option<S>>,
}

impl<'a, S: Scalar> HomologicalTable<'a, S> {
    pub fn new(a: &'a LabeledMatrix<S>) -> Self {
        HomologicalTable {
            a,
            top: BTreeMap::new(),
            minors: BTreeMap::new(),
        }
    }

    fn qd(&mut self, i: usize, j: usize) -> Option<S> {
        let a = self.a;
        self.top.entry((i, j)).or_insert_with(|| qd_opt(a, i, j)).clone()
    }

    /// `|A^{pq}|_{st}⁻¹`.
    fn minor_inv(&mut self, p: usize, q: usize, s: usize, t: usize) -> Result<Option<S>> {
        if let Some(v) = self.minors.get(&(p, q, s, t)) {
            return Ok(v.clone());
        }
        let v = qd_inv_opt(&self.a.delete_rc(&[p], &[q])?, s, t);
        self.minors.insert((p, q, s, t), v.clone());
        Ok(v)
    }

    pub fn check(&mut self, ix: HomologicalIndices, tol: &Tolerance) -> Result<(Verdict, Verdict)> {
        let HomologicalIndices { i, j, l, s, k, t } = ix;
        if l == j || s == i || k == i || t == j {
            return Err(Error::InvalidIndices("need l != j, s != i, k != i, t != j"));
        }
        self.a.entry(i, j)?;
        self.a.entry(s, l)?;
        self.a.entry(k, t)?;

        let a_ij = self.qd(i, j);

        let row_lhs = a_ij.clone().zip(self.minor_inv(i, l, s, j)?).map(|(x, y)| -(x * y));
        let row_rhs = self.qd(i, l).zip(self.minor_inv(i, j, s, l)?).map(|(x, y)| x * y);

        let col_lhs = self.minor_inv(k, j, i, t)?.zip(a_ij).map(|(x, y)| -(x * y));
        let col_rhs = self.minor_inv(i, j, k, t)?.zip(self.qd(k, j)).map(|(x, y)| x * y);

        Ok((
            Verdict::compare(row_lhs, row_rhs, tol),
            Verdict::compare(col_lhs, col_rhs, tol),
        ))
    }
}

/// Splits `A` after its first `k` rows and columns and returns
/// `A₁₁ − A₁₂ A₂₂⁻¹ A₂₁`, labelled like `A₁₁`.
pub fn schur_block<S: Scalar>(a: &LabeledMatrix<S>, k: usize) -> Result<LabeledMatrix<S>> {
    let n = a.order();
    if k == 0 || k > n {
        return Err(Error::InvalidIndices("block size must be in 1..=n"));
    }
    let head = SubmatrixSpec {
        rows: a.row_labels()[..k].to_vec(),
        cols: a.col_labels()[..k].to_vec(),
    };
    let a11 = a.submatrix(&head)?;
    if k == n {
        return Ok(a11);
    }
    let a22 = a.delete_rc(&head.rows, &head.cols)?;
    let a22_inv = invert(&a22)?;
    let m = n - k;
    // X = A₂₂⁻¹ A₂₁, an m×k block
    let mut x = alloc::vec![S::zero(); m * k];
    for r in 0..m {
        for c in 0..k {
            let mut acc = S::zero();
            for t in 0..m {
                acc = acc + a22_inv.at(r, t).clone() * a.at(k + t, c).clone();
            }
            x[r * k + c] = acc;
        }
    }
    let mut data = Vec::with_capacity(k * k);
    for r in 0..k {
        for c in 0..k {
            let mut acc = S::zero();
            for t in 0..m {
                acc = acc + a.at(r, k + t).clone() * x[t * k + c].clone();
            }
            data.push(a.at(r, c).clone() - acc);
        }
    }
    LabeledMatrix::with_labels(head.rows, head.cols, data)
}

/// Heredity: `|A|_{ij} = |A₁₁ − A₁₂A₂₂⁻¹A₂₁|_{ij}` for `i`, `j` among the
/// first `k` labels. Fails with `Singular` when `A₂₂` is not invertible.
pub fn check_heredity<S: Scalar>(
    a: &LabeledMatrix<S>,
    k: usize,
    i: usize,
    j: usize,
    tol: &Tolerance,
) -> Result<Verdict> {
    if !a.row_labels()[..k.min(a.order())].contains(&i) || !a.col_labels()[..k.min(a.order())].contains(&j) {
        return Err(Error::InvalidIndices("i, j must lie in the leading block"));
    }
    let s = schur_block(a, k)?;
    Ok(Verdict::compare(qd_opt(a, i, j), qd_opt(&s, i, j), tol))
}

/// `B = (b_{pq})` for `p`, `q` outside the pivot block `A₀`, where `b_{pq}`
/// is the `(p, q)` quasideterminant of `A₀` bordered by row `p` and
/// column `q`. An empty pivot returns `A`.
pub fn sylvester_compress<S: Scalar>(a: &LabeledMatrix<S>, pivot: &SubmatrixSpec) -> Result<LabeledMatrix<S>> {
    if pivot.order() == 0 {
        return Ok(a.clone());
    }
    invert(&a.submatrix(pivot)?)?;
    let rest = a.complement(pivot)?;
    let mut data = Vec::with_capacity(rest.order() * rest.order());
    for &p in rest.row_labels() {
        for &q in rest.col_labels() {
            let mut rows = pivot.rows.clone();
            rows.push(p);
            let mut cols = pivot.cols.clone();
            cols.push(q);
            let bordered = a.submatrix(&SubmatrixSpec::new(rows, cols)?)?;
            data.push(quasidet(&bordered, p, q)?);
        }
    }
    LabeledMatrix::with_labels(rest.row_labels().to_vec(), rest.col_labels().to_vec(), data)
}

/// Sylvester: `|A|_{ij} = |B|_{ij}` for `i`, `j` outside the pivot.
pub fn check_sylvester<S: Scalar>(
    a: &LabeledMatrix<S>,
    pivot: &SubmatrixSpec,
    i: usize,
    j: usize,
    tol: &Tolerance,
) -> Result<Verdict> {
    if pivot.rows.contains(&i) || pivot.cols.contains(&j) {
        return Err(Error::InvalidIndices("i, j must lie outside the pivot"));
    }
    let b = match sylvester_compress(a, pivot) {
        Ok(b) => b,
        Err(Error::Singular) | Err(Error::Undefined { .. }) => return Ok(Verdict::Skipped),
        Err(e) => return Err(e),
    };
    Ok(Verdict::compare(qd_opt(a, i, j), qd_opt(&b, i, j), tol))
}

/// Permuting rows other than `p` and columns other than `q` leaves
/// `|A|_{pq}` unchanged. `row_src`/`col_src` give the new arrangement and
/// must fix `p` and `q` respectively.
pub fn check_permutation_invariance<S: Scalar>(
    a: &LabeledMatrix<S>,
    p: usize,
    q: usize,
    row_src: &[usize],
    col_src: &[usize],
    tol: &Tolerance,
) -> Result<Verdict> {
    let rp = a.row_pos(p).ok_or(Error::UnknownLabel(p))?;
    let cq = a.col_pos(q).ok_or(Error::UnknownLabel(q))?;
    if row_src.get(rp) != Some(&p) || col_src.get(cq) != Some(&q) {
        return Err(Error::InvalidIndices("permutation must fix row p and column q"));
    }
    let b = a.permuted(row_src, col_src)?;
    Ok(Verdict::compare(qd_opt(a, p, q), qd_opt(&b, p, q), tol))
}

/// Left-scaling row `i` by `λ`: `|B|_{ij} = λ|A|_{ij}`, and `|B|_{kj} =
/// |A|_{kj}` for `k ≠ i` when `λ` is invertible. Checked over all `k`.
pub fn check_row_scaling<S: Scalar>(
    a: &LabeledMatrix<S>,
    i: usize,
    j: usize,
    lambda: &S,
    tol: &Tolerance,
) -> Result<Verdict> {
    let b = a.scale_row(i, lambda)?;
    let mut v = Verdict::Skipped;
    for &k in a.row_labels() {
        let expect = if k == i {
            qd_opt(a, i, j).map(|x| lambda.clone() * x)
        } else if lambda.inv().is_some() {
            qd_opt(a, k, j)
        } else {
            continue;
        };
        v = v.and(Verdict::compare(qd_opt(&b, k, j), expect, tol));
    }
    Ok(v)
}

/// Right-scaling column `j` by `μ`: `|C|_{ij} = |A|_{ij}μ`, and `|C|_{iℓ} =
/// |A|_{iℓ}` for `ℓ ≠ j` when `μ` is invertible. Checked over all `ℓ`.
pub fn check_col_scaling<S: Scalar>(
    a: &LabeledMatrix<S>,
    i: usize,
    j: usize,
    mu: &S,
    tol: &Tolerance,
) -> Result<Verdict> {
    let c = a.scale_col(j, mu)?;
    let mut v = Verdict::Skipped;
    for &l in a.col_labels() {
        let expect = if l == j {
            qd_opt(a, i, j).map(|x| x * mu.clone())
        } else if mu.inv().is_some() {
            qd_opt(a, i, l)
        } else {
            continue;
        };
        v = v.and(Verdict::compare(qd_opt(&c, i, l), expect, tol));
    }
    Ok(v)
}

/// Adding `λ`·(row `k`) to row `p` leaves `|A|_{ij}` unchanged for every
/// `i ≠ k` and every `j`.
pub fn check_row_addition<S: Scalar>(
    a: &LabeledMatrix<S>,
    p: usize,
    k: usize,
    lambda: &S,
    tol: &Tolerance,
) -> Result<Verdict> {
    if p == k {
        return Err(Error::InvalidIndices("k must differ from p"));
    }
    let b = a.add_row_multiple(p, k, lambda)?;
    let mut v = Verdict::Skipped;
    for &i in a.row_labels().iter().filter(|&&i| i != k) {
        for &j in a.col_labels() {
            v = v.and(Verdict::compare(qd_opt(a, i, j), qd_opt(&b, i, j), tol));
        }
    }
    Ok(v)
}

/// Adding (column `ℓ`)·`λ` to column `q` leaves `|A|_{ij}` unchanged for
/// every `j ≠ ℓ` and every `i`.
pub fn check_col_addition<S: Scalar>(
    a: &LabeledMatrix<S>,
    q: usize,
    l: usize,
    lambda: &S,
    tol: &Tolerance,
) -> Result<Verdict> {
    if q == l {
        return Err(Error::InvalidIndices("l must differ from q"));
    }
    let c = a.add_col_multiple(q, l, lambda)?;
    let mut v = Verdict::Skipped;
    for &i in a.row_labels() {
        for &j in a.col_labels().iter().filter(|&&j| j != l) {
            v = v.and(Verdict::compare(qd_opt(a, i, j), qd_opt(&c, i, j), tol));
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::quaternion::Quaternion;
    use crate::scalar::Rational;

    type Q = Quaternion<Rational>;
    type M = LabeledMatrix<Q>;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Q {
        Q::from_ints(a, b, c, d)
    }

    fn sample2() -> M {
        M::from_rows(vec![
            vec![q(1, 2, -1, 3), q(0, 1, 4, -2)],
            vec![q(-3, 1, 1, 1), q(2, 0, -5, 1)],
        ])
        .unwrap()
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&M::identity(3)).unwrap(), M::identity(3));
        let h = q(1, 1, 0, 0);
        let one = M::from_rows(vec![vec![h.clone()]]).unwrap();
        assert_eq!(invert(&one).unwrap().at(0, 0), &h.inv().unwrap());
        let d = M::from_rows(vec![vec![Q::i(), Q::zero()], vec![Q::zero(), Q::j()]]).unwrap();
        let e = M::from_rows(vec![vec![-Q::i(), Q::zero()], vec![Q::zero(), -Q::j()]]).unwrap();
        assert_eq!(invert(&d).unwrap(), e);
    }

    #[test]
    fn invert_is_two_sided() {
        let a = sample2();
        let inv = invert(&a).unwrap();
        assert_eq!(a.matmul(&inv).unwrap().relabeled(), M::identity(2));
        assert_eq!(inv.matmul(&a).unwrap().relabeled(), M::identity(2));
    }

    #[test]
    fn invert_needs_pivoting() {
        let a = M::from_rows(vec![vec![Q::zero(), Q::k()], vec![Q::j(), q(1, 1, 1, 1)]]).unwrap();
        let inv = invert(&a).unwrap();
        assert_eq!(a.matmul(&inv).unwrap().relabeled(), M::identity(2));
    }

    #[test]
    fn invert_singular() {
        let a = M::from_rows(vec![vec![Q::i(), Q::j()], vec![Q::k(), Q::one()]]).unwrap();
        // row 2 = −𝐣·row 1? (−𝐣)(𝐢) = 𝐤, (−𝐣)(𝐣) = 1
        assert_eq!(invert(&a), Err(Error::Singular));
    }

    #[test]
    fn two_by_two_formulas() {
        let a = sample2();
        let (a11, a12, a21, a22) = (
            a.at(0, 0).clone(),
            a.at(0, 1).clone(),
            a.at(1, 0).clone(),
            a.at(1, 1).clone(),
        );
        let e11 = a11.clone() - a12.clone() * a22.inv().unwrap() * a21.clone();
        let e12 = a12.clone() - a11.clone() * a21.inv().unwrap() * a22.clone();
        let e21 = a21.clone() - a22.clone() * a12.inv().unwrap() * a11.clone();
        let e22 = a22 - a21 * a11.inv().unwrap() * a12;
        assert_eq!(quasidet(&a, 1, 1).unwrap(), e11);
        assert_eq!(quasidet(&a, 1, 2).unwrap(), e12.clone());
        assert_eq!(quasidet(&a, 2, 1).unwrap(), e21);
        assert_eq!(quasidet(&a, 2, 2).unwrap(), e22);
        assert_eq!(quasidet_recursive(&a, 1, 2).unwrap().value, Some(e12));
    }

    #[test]
    fn identity_quasidets() {
        let id = M::identity(3);
        for i in 1..=3 {
            for j in 1..=3 {
                let r = quasidet_block(&id, i, j).unwrap();
                if i == j {
                    assert_eq!(r.value, Some(Q::one()));
                } else {
                    // A^{ij} of the identity is singular for i ≠ j
                    assert!(!r.defined());
                }
            }
        }
    }

    #[test]
    fn zero_valued_quasidet_is_defined() {
        let a = M::from_rows(vec![vec![Q::i(), Q::j()], vec![Q::k(), Q::one()]]).unwrap();
        let r = quasidet_block(&a, 1, 1).unwrap();
        assert_eq!(r.value, Some(Q::zero()));
    }

    #[test]
    fn undefined_when_minor_singular() {
        let a = M::from_rows(vec![vec![Q::one(), Q::one()], vec![Q::one(), Q::zero()]]).unwrap();
        let r = quasidet_block(&a, 1, 1).unwrap();
        assert!(!r.defined());
        assert_eq!(r.into_value(), Err(Error::Undefined { row: 1, col: 1, depth: 0 }));
        assert!(!quasidet_recursive(&a, 1, 1).unwrap().defined());
    }

    #[test]
    fn one_by_one() {
        let a = M::from_rows(vec![vec![q(3, 1, 4, 1)]]).unwrap();
        assert_eq!(quasidet(&a, 1, 1).unwrap(), q(3, 1, 4, 1));
        assert_eq!(quasidet_recursive(&a, 1, 1).unwrap().value, Some(q(3, 1, 4, 1)));
    }

    #[test]
    fn quasidet_uses_original_labels() {
        let a = M::from_fn(3, |i, j| q((i * j) as i64, i as i64, (j * j) as i64, 1 - i as i64));
        let sub = a.delete_rc(&[1], &[2]).unwrap();
        let direct = M::from_rows(vec![
            vec![a.entry(2, 1).unwrap().clone(), a.entry(2, 3).unwrap().clone()],
            vec![a.entry(3, 1).unwrap().clone(), a.entry(3, 3).unwrap().clone()],
        ])
        .unwrap();
        assert_eq!(quasidet(&sub, 3, 3).unwrap(), quasidet(&direct, 2, 2).unwrap());
        assert!(matches!(quasidet_block(&sub, 1, 1), Err(Error::UnknownLabel(1))));
    }

    #[test]
    fn sylvester_empty_pivot_and_small_case() {
        let a = M::from_fn(3, |i, j| q((i + 2 * j) as i64, (i * j) as i64 - 2, 1, j as i64));
        let empty = SubmatrixSpec { rows: vec![], cols: vec![] };
        assert_eq!(sylvester_compress(&a, &empty).unwrap(), a);

        let pivot = SubmatrixSpec::new(vec![1], vec![1]).unwrap();
        let b = sylvester_compress(&a, &pivot).unwrap();
        assert_eq!(b.row_labels(), &[2, 3]);
        for p in 2..=3 {
            for qq in 2..=3 {
                let border = M::from_rows(vec![
                    vec![a.entry(1, 1).unwrap().clone(), a.entry(1, qq).unwrap().clone()],
                    vec![a.entry(p, 1).unwrap().clone(), a.entry(p, qq).unwrap().clone()],
                ])
                .unwrap();
                assert_eq!(b.entry(p, qq).unwrap(), &quasidet(&border, 2, 2).unwrap());
            }
        }
    }

    #[test]
    fn homological_two_by_two_by_hand() {
        let a = sample2();
        let ix = HomologicalIndices { i: 1, j: 1, l: 2, s: 2, k: 2, t: 2 };
        let (row, col) = check_homological(&a, ix, &Tolerance::EXACT).unwrap();
        assert_eq!(row, Verdict::Holds);
        assert_eq!(col, Verdict::Holds);
        // −|A|₁₁·a₂₁⁻¹ = |A|₁₂·a₂₂⁻¹
        let lhs = -(quasidet(&a, 1, 1).unwrap() * a.at(1, 0).inv().unwrap());
        let rhs = quasidet(&a, 1, 2).unwrap() * a.at(1, 1).inv().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homological_skips_on_diagonal() {
        let d = M::from_fn(3, |i, j| if i == j { q(i as i64, 1, 0, 0) } else { Q::zero() });
        let ix = HomologicalIndices { i: 1, j: 1, l: 2, s: 2, k: 2, t: 2 };
        let (row, col) = check_homological(&d, ix, &Tolerance::EXACT).unwrap();
        assert_eq!(row, Verdict::Skipped);
        assert_eq!(col, Verdict::Skipped);
        let bad = HomologicalIndices { i: 1, j: 1, l: 1, s: 2, k: 2, t: 2 };
        assert!(check_homological(&d, bad, &Tolerance::EXACT).is_err());
    }

    #[test]
    fn heredity_trivial_block() {
        let a = sample2();
        assert_eq!(check_heredity(&a, 2, 1, 2, &Tolerance::EXACT).unwrap(), Verdict::Holds);
        // k = 1 on a 2×2 is the defining formula
        assert_eq!(check_heredity(&a, 1, 1, 1, &Tolerance::EXACT).unwrap(), Verdict::Holds);
    }

    #[test]
    fn heredity_singular_trailing_block() {
        let a = M::from_rows(vec![vec![Q::one(), Q::one()], vec![Q::one(), Q::zero()]]).unwrap();
        assert_eq!(check_heredity(&a, 1, 1, 1, &Tolerance::EXACT), Err(Error::Singular));
    }

    #[test]
    fn verdict_combination() {
        use Verdict::*;
        assert_eq!(Holds.and(Skipped), Holds);
        assert_eq!(Skipped.and(Skipped), Skipped);
        assert_eq!(Holds.and(Fails), Fails);
    }
}

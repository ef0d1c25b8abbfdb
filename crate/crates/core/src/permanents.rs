//! Monomials `m_{I,J}`, double permanents `π_{ij}`, and the polynomial
//! expansion
//!
//! ```text
//! ν(A^{ij})·|A|_{ij} = Σ_B (−1)^{K(B)−1} ν(B^c) π_{ij}(B)
//! ```
//!
//! over square submatrices `B` through `(i, j)`, together with the
//! equivalent recurrence for `Q_{ij}(A) = |A|_{ij}·ν(A^{ij})` and the count
//! `μ(n)` of monomials in the expansion.
//!
//! ## Text form
//!
//! A factor `a_{pq}` prints as `a12`, its conjugate as `~a12` (labels of 10
//! or more print as `a10,11`). An expansion term prints as
//! `<sign> <coefficient> <monomial>`, where the sign is `+` or `-` and the
//! coefficient is `nu[rows|cols]` for the complement `B^c`, or `1` when the
//! complement is empty:
//!
//! ```text
//! + nu[2|2] a11
//! - 1 a12 ~a22 a21
//! ```
//!
//! Terms are listed by increasing order of `B`. Within an order the column
//! side is outer: column set, then `J`, lexicographic; then row set
//! lexicographic, and `I` by its reversed sequence. This reproduces the
//! term order of the usual printed expansions, e.g. for `n = 3` at `(1, 1)`:
//!
//! ```text
//! + 1 a12 ~a32 a33 ~a23 a21
//! + 1 a12 ~a22 a23 ~a33 a31
//! + 1 a13 ~a33 a32 ~a22 a21
//! + 1 a13 ~a23 a22 ~a32 a31
//! ```

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use crate::dets::nu_via_moore;
use crate::error::{Error, Result};
use crate::matrix::{LabeledMatrix, SubmatrixSpec};
use crate::perm::Ordering;
use crate::scalar::Scalar;

/// Default bound on the order for double permanents and the expansion.
pub const PERMANENT_CAP: usize = 6;

/// One factor `a_{row,col}` of a monomial, possibly conjugated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub row: usize,
    pub col: usize,
    pub conjugate: bool,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugate {
            f.write_str("~")?;
        }
        if self.row < 10 && self.col < 10 {
            write!(f, "a{}{}", self.row, self.col)
        } else {
            write!(f, "a{},{}", self.row, self.col)
        }
    }
}

/// `m_{I,J} = a_{i₁j₂} ā_{i₂j₂} a_{i₂j₃} ā_{i₃j₃} ⋯ ā_{i_kj_k} a_{i_kj₁}`: a path
/// from `i₁` to `j₁` alternating plain and conjugated entries, of length
/// `2k − 1`. For `k = 1` it is the single entry `a_{i₁j₁}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPath {
    steps: Vec<Factor>,
}

impl MonomialPath {
    pub fn new(rows: &Ordering, cols: &Ordering) -> Result<Self> {
        let (is, js) = (rows.as_slice(), cols.as_slice());
        if is.len() != js.len() {
            return Err(Error::DimensionMismatch {
                left: is.len(),
                right: js.len(),
            });
        }
        let k = is.len();
        if k == 0 {
            return Err(Error::InvalidOrdering("empty ordering"));
        }
        let plain = |row, col| Factor {
            row,
            col,
            conjugate: false,
        };
        let mut steps = Vec::with_capacity(2 * k - 1);
        if k == 1 {
            steps.push(plain(is[0], js[0]));
        } else {
            for t in 1..k {
                steps.push(plain(is[t - 1], js[t]));
                steps.push(Factor {
                    row: is[t],
                    col: js[t],
                    conjugate: true,
                });
            }
            steps.push(plain(is[k - 1], js[0]));
        }
        Ok(MonomialPath { steps })
    }

    pub fn steps(&self) -> &[Factor] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn evaluate<S: Scalar>(&self, a: &LabeledMatrix<S>) -> Result<S> {
        let mut acc: Option<S> = None;
        for f in &self.steps {
            let e = a.entry(f.row, f.col)?;
            let e = if f.conjugate { e.conj() } else { e.clone() };
            acc = Some(match acc {
                None => e,
                Some(x) => x * e,
            });
        }
        acc.ok_or(Error::InvalidOrdering("empty path"))
    }
}

impl fmt::Display for MonomialPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, step) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

pub fn monomial_value<S: Scalar>(a: &LabeledMatrix<S>, rows: &Ordering, cols: &Ordering) -> Result<S> {
    MonomialPath::new(rows, cols)?.evaluate(a)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// `π_{ij}(A) = Σ m_{I,J}(A)` over all orderings of the row and column
/// labels of `A` with `i₁ = i`, `j₁ = j`.
pub fn double_permanent<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
    double_permanent_capped(a, i, j, PERMANENT_CAP)
}

pub fn double_permanent_capped<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize, cap: usize) -> Result<S> {
    check_cap(a.order(), cap)?;
    a.entry(i, j)?;
    let mut total = S::zero();
    for cols in Ordering::all_with_first(j, a.col_labels()) {
        for rows in row_orderings(i, a.row_labels()) {
            total = total + monomial_value(a, &rows, &cols)?;
        }
    }
    Ok(total)
}

/// The monomials of `π_{ij}` over row labels `rows` and column labels
/// `cols`, in summation order.
pub fn double_permanent_paths(rows: &[usize], cols: &[usize], i: usize, j: usize, cap: usize) -> Result<Vec<MonomialPath>> {
    if rows.len() != cols.len() {
        return Err(Error::NotSquare {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_cap(rows.len(), cap)?;
    if !rows.contains(&i) {
        return Err(Error::UnknownLabel(i));
    }
    if !cols.contains(&j) {
        return Err(Error::UnknownLabel(j));
    }
    let mut out = Vec::new();
    for js in Ordering::all_with_first(j, cols) {
        for is in row_orderings(i, rows) {
            out.push(MonomialPath::new(&is, &js)?);
        }
    }
    Ok(out)
}

/// Orderings of `labels` starting at `first`, by reversed sequence.
fn row_orderings(first: usize, labels: &[usize]) -> Vec<Ordering> {
    let mut out = Ordering::all_with_first(first, labels);
    out.sort_by(|x, y| x.as_slice().iter().rev().cmp(y.as_slice().iter().rev()));
    out
}

/// Square submatrices through `(i, j)`: `(B, B^c)` label sets, by
/// increasing order, column set, then row set.
fn submatrices_through(rows: &[usize], cols: &[usize], i: usize, j: usize) -> Vec<(SubmatrixSpec, SubmatrixSpec)> {
    let other_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != i).collect();
    let other_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
    let mut out = Vec::new();
    for extra in 0..=other_rows.len() {
        for cs in other_cols.iter().copied().combinations(extra) {
            for rs in other_rows.iter().copied().combinations(extra) {
                let b_rows: Vec<usize> = rows.iter().copied().filter(|r| *r == i || rs.contains(r)).collect();
                let b_cols: Vec<usize> = cols.iter().copied().filter(|c| *c == j || cs.contains(c)).collect();
                let c_rows: Vec<usize> = rows.iter().copied().filter(|r| !b_rows.contains(r)).collect();
                let c_cols: Vec<usize> = cols.iter().copied().filter(|c| !b_cols.contains(c)).collect();
                out.push((
                    SubmatrixSpec {
                        rows: b_rows,
                        cols: b_cols,
                    },
                    SubmatrixSpec {
                        rows: c_rows,
                        cols: c_cols,
                    },
                ));
            }
        }
    }
    out
}

/// One signed, weighted monomial of the expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionTerm {
    /// `(−1)^{K(B)−1}`.
    pub sign: i8,
    /// The complement `B^c` whose norm weights the monomial.
    pub complement: SubmatrixSpec,
    pub path: MonomialPath,
}

impl ExpansionTerm {
    /// `sign · ν(B^c) · m_{I,J}(B)` evaluated on `a`.
    pub fn evaluate<S: Scalar>(&self, a: &LabeledMatrix<S>) -> Result<S> {
        let m = self.path.evaluate(a)?;
        let nu = nu_via_moore(&a.submatrix(&self.complement)?)?;
        let v = m.scale(&nu);
        Ok(if self.sign < 0 { -v } else { v })
    }
}

fn join(labels: &[usize]) -> String {
    labels.iter().map(|l| alloc::format!("{l}")).join(",")
}

impl fmt::Display for ExpansionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "-" } else { "+" })?;
        if self.complement.order() == 0 {
            f.write_str(" 1 ")?;
        } else {
            write!(
                f,
                " nu[{}|{}] ",
                join(&self.complement.rows),
                join(&self.complement.cols)
            )?;
        }
        write!(f, "{}", self.path)
    }
}

/// Every monomial of the expansion for row labels `rows` and column labels
/// `cols` at `(i, j)`, symbolically.
pub fn expansion_terms(rows: &[usize], cols: &[usize], i: usize, j: usize, cap: usize) -> Result<Vec<ExpansionTerm>> {
    if rows.len() != cols.len() {
        return Err(Error::NotSquare {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_cap(rows.len(), cap)?;
    if !rows.contains(&i) {
        return Err(Error::UnknownLabel(i));
    }
    if !cols.contains(&j) {
        return Err(Error::UnknownLabel(j));
    }
    let mut out = Vec::new();
    for (b, complement) in submatrices_through(rows, cols, i, j) {
        let sign = if b.order() % 2 == 1 { 1 } else { -1 };
        for path in double_permanent_paths(&b.rows, &b.cols, i, j, cap)? {
            out.push(ExpansionTerm {
                sign,
                complement: complement.clone(),
                path,
            });
        }
    }
    Ok(out)
}

/// The expansion of an `n × n` matrix labelled `1..=n` at `(i, j)`.
pub fn enumerate_paths(n: usize, i: usize, j: usize) -> Result<Vec<ExpansionTerm>> {
    enumerate_paths_capped(n, i, j, PERMANENT_CAP)
}

pub fn enumerate_paths_capped(n: usize, i: usize, j: usize, cap: usize) -> Result<Vec<ExpansionTerm>> {
    let labels: Vec<usize> = (1..=n).collect();
    expansion_terms(&labels, &labels, i, j, cap)
}

/// Evaluates the expansion at several `(i, j)` of one matrix, caching
/// `ν(B^c)` and `π_{ij}(B)` across calls.
pub struct Expansion<'a, S: Scalar> {
    a: &'a LabeledMatrix<S>,
    cap: usize,
    nu: BTreeMap<NuKey, S::Real>,
    pi: BTreeMap<QKey, S>,
}

impl<'a, S: Scalar> Expansion<'a, S> {
    pub fn new(a: &'a LabeledMatrix<S>) -> Self {
        Self::with_cap(a, PERMANENT_CAP)
    }

    pub fn with_cap(a: &'a LabeledMatrix<S>, cap: usize) -> Self {
        Expansion {
            a,
            cap,
            nu: BTreeMap::new(),
            pi: BTreeMap::new(),
        }
    }

    fn nu(&mut self, spec: &SubmatrixSpec) -> Result<S::Real> {
        let key = (spec.rows.clone(), spec.cols.clone());
        if let Some(v) = self.nu.get(&key) {
            return Ok(v.clone());
        }
        let v = nu_via_moore(&self.a.submatrix(spec)?)?;
        self.nu.insert(key, v.clone());
        Ok(v)
    }

    fn pi(&mut self, b: &SubmatrixSpec, i: usize, j: usize) -> Result<S> {
        let key = (b.rows.clone(), b.cols.clone(), i, j);
        if let Some(v) = self.pi.get(&key) {
            return Ok(v.clone());
        }
        let v = double_permanent_capped(&self.a.submatrix(b)?, i, j, self.cap)?;
        self.pi.insert(key, v.clone());
        Ok(v)
    }

    fn sum(&mut self, i: usize, j: usize, conjugate: bool) -> Result<S> {
        check_cap(self.a.order(), self.cap)?;
        self.a.entry(i, j)?;
        let mut total = S::zero();
        for (b, complement) in submatrices_through(self.a.row_labels(), self.a.col_labels(), i, j) {
            let nu = self.nu(&complement)?;
            let pi = self.pi(&b, i, j)?;
            let pi = if conjugate { pi.conj() } else { pi };
            let term = pi.scale(&nu);
            total = if b.order() % 2 == 1 { total + term } else { total - term };
        }
        Ok(total)
    }

    /// `Σ_B (−1)^{K(B)−1} ν(B^c) π_{ij}(B)`.
    pub fn rhs(&mut self, i: usize, j: usize) -> Result<S> {
        self.sum(i, j, false)
    }

    /// `Σ_B (−1)^{K(B)−1} ν(B^c) conj(π_{ij}(B))`.
    pub fn rhs_conj(&mut self, i: usize, j: usize) -> Result<S> {
        self.sum(i, j, true)
    }
}

/// `Σ_B (−1)^{K(B)−1} ν(B^c) π_{ij}(B)`, which equals `ν(A^{ij})·|A|_{ij}`
/// whenever the quasideterminant exists. Total and polynomial.
pub fn rhs_theorem33<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
    Expansion::new(a).rhs(i, j)
}

pub fn rhs_theorem33_capped<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize, cap: usize) -> Result<S> {
    Expansion::with_cap(a, cap).rhs(i, j)
}

/// The same sum with every `π_{ij}(B)` conjugated, i.e. the conjugate of
/// [`rhs_theorem33`]. The product of the two is `ν(A)·ν(A^{ij})`.
pub fn rhs_theorem33_conj<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
    Expansion::new(a).rhs_conj(i, j)
}

type QKey = (Vec<usize>, Vec<usize>, usize, usize);
type NuKey = (Vec<usize>, Vec<usize>);

struct QMemo<S: Scalar> {
    q: BTreeMap<QKey, S>,
    nu: BTreeMap<NuKey, S::Real>,
}

impl<S: Scalar> QMemo<S> {
    fn new() -> Self {
        QMemo {
            q: BTreeMap::new(),
            nu: BTreeMap::new(),
        }
    }

    fn nu(&mut self, m: &LabeledMatrix<S>) -> Result<S::Real> {
        let key = (m.row_labels().to_vec(), m.col_labels().to_vec());
        if let Some(v) = self.nu.get(&key) {
            return Ok(v.clone());
        }
        let v = nu_via_moore(m)?;
        self.nu.insert(key, v.clone());
        Ok(v)
    }

    fn q(&mut self, a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
        let key = (a.row_labels().to_vec(), a.col_labels().to_vec(), i, j);
        if let Some(v) = self.q.get(&key) {
            return Ok(v.clone());
        }
        let aij = a.entry(i, j)?.clone();
        let v = if a.order() == 1 {
            aij
        } else {
            let minor = a.delete_rc(&[i], &[j])?;
            let mut acc = aij.scale(&self.nu(&minor)?);
            for &p in minor.row_labels() {
                for &q in minor.col_labels() {
                    let inner = self.q(&minor, p, q)?.conj();
                    acc = acc - a.entry(i, q)?.clone() * inner * a.entry(p, j)?.clone();
                }
            }
            acc
        };
        self.q.insert(key, v.clone());
        Ok(v)
    }
}

/// `Q_{ij}(A) = ν(A^{ij}) a_{ij} − Σ_{p≠i, q≠j} a_{iq} conj(Q_{pq}(A^{ij})) a_{pj}`,
/// with `Q` of a 1×1 matrix equal to its entry. Memoized per call on
/// `(row labels, column labels, p, q)`.
pub fn q_polynomial<S: Scalar>(a: &LabeledMatrix<S>, i: usize, j: usize) -> Result<S> {
    QMemo::new().q(a, i, j)
}

/// For Hermitian `A`, `conj(Q_{pq}(A^{ii})) = Q_{qp}(A^{ii})`, which turns
/// the recurrence into
/// `Q_{ii}(A) = ν(A^{ii}) a_{ii} − Σ_{p,q≠i} a_{iq} Q_{qp}(A^{ii}) a_{pi}`.
pub fn q_polynomial_hermitian<S: Scalar>(a: &LabeledMatrix<S>, i: usize) -> Result<S> {
    let aii = a.entry(i, i)?.clone();
    if a.order() == 1 {
        return Ok(aii);
    }
    let mut memo = QMemo::new();
    let minor = a.delete_rc(&[i], &[i])?;
    let mut acc = aii.scale(&memo.nu(&minor)?);
    for &p in minor.row_labels() {
        for &q in minor.col_labels() {
            let inner = memo.q(&minor, q, p)?;
            acc = acc - a.entry(i, q)?.clone() * inner * a.entry(p, i)?.clone();
        }
    }
    Ok(acc)
}

/// `μ(1) = 1`, `μ(n) = 1 + (n−1)²·μ(n−1)`.
pub fn mu_count(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidIndices("order must be positive"));
    }
    let mut mu: u128 = 1;
    for m in 2..=n {
        let sq = ((m - 1) as u128).pow(2);
        mu = sq
            .checked_mul(mu)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::CapExceeded { n, cap: m - 1 })?;
    }
    Ok(mu)
}

/// Direct count: order-`k` submatrices through a fixed entry number
/// `C(n−1, k−1)²`, each contributing `((k−1)!)²` monomials.
pub fn census(n: usize) -> u128 {
    let binom = |n: u128, k: u128| (0..k).fold(1u128, |acc, t| acc * (n - t) / (t + 1));
    let fact = |k: u128| (1..=k).product::<u128>();
    (1..=n as u128)
        .map(|k| binom(n as u128 - 1, k - 1).pow(2) * fact(k - 1).pow(2))
        .sum()
}

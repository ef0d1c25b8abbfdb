//! Dense square matrices whose rows and columns carry their original
//! 1-based labels.
//!
//! Deleting rows and columns keeps the surviving labels, so formulas written
//! in original indices (`|A^{ij}|_{pq}`, `Q_{pq}(A^{ij})`, …) can be evaluated
//! on nested submatrices without renumbering. Within a matrix, row and column
//! positions follow the order of the label sequences, which are ascending for
//! every matrix built by this module.

use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledMatrix<S> {
    rows: Vec<usize>,
    cols: Vec<usize>,
    data: Vec<S>,
}

/// Rows and columns to keep, by label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubmatrixSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl SubmatrixSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.len() != cols.len() {
            return Err(Error::DimensionMismatch {
                left: rows.len(),
                right: cols.len(),
            });
        }
        Ok(SubmatrixSpec { rows, cols })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

fn check_distinct(labels: &[usize]) -> Result<()> {
    for (k, l) in labels.iter().enumerate() {
        if *l == 0 {
            return Err(Error::UnknownLabel(0));
        }
        if labels[..k].contains(l) {
            return Err(Error::DuplicateLabel(*l));
        }
    }
    Ok(())
}

impl<S> LabeledMatrix<S> {
    /// Build from explicit labels and row-major entries.
    pub fn with_labels(rows: Vec<usize>, cols: Vec<usize>, data: Vec<S>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        if data.len() != rows.len() * cols.len() {
            return Err(Error::DimensionMismatch {
                left: data.len(),
                right: rows.len() * cols.len(),
            });
        }
        check_distinct(&rows)?;
        check_distinct(&cols)?;
        Ok(LabeledMatrix { rows, cols, data })
    }

    /// Build from a grid of rows, labelled `1..=n`.
    pub fn from_rows(grid: Vec<Vec<S>>) -> Result<Self> {
        let n = grid.len();
        let mut data = Vec::with_capacity(n * n);
        for row in grid {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            data.extend(row);
        }
        let labels: Vec<usize> = (1..=n).collect();
        Ok(LabeledMatrix {
            rows: labels.clone(),
            cols: labels,
            data,
        })
    }

    /// `f(i, j)` receives 1-based labels.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        let labels: Vec<usize> = (1..=n).collect();
        LabeledMatrix {
            rows: labels.clone(),
            cols: labels,
            data,
        }
    }

    /// The 0×0 matrix.
    pub fn empty() -> Self {
        LabeledMatrix {
            rows: Vec::new(),
            cols: Vec::new(),
            data: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.cols
    }

    pub fn row_pos(&self, label: usize) -> Option<usize> {
        self.rows.iter().position(|&l| l == label)
    }

    pub fn col_pos(&self, label: usize) -> Option<usize> {
        self.cols.iter().position(|&l| l == label)
    }

    /// Entry by position.
    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.order() + c]
    }

    /// Entry by label.
    pub fn get(&self, row: usize, col: usize) -> Option<&S> {
        Some(self.at(self.row_pos(row)?, self.col_pos(col)?))
    }

    /// Entry by label; fails with `UnknownLabel`.
    pub fn entry(&self, row: usize, col: usize) -> Result<&S> {
        let r = self.row_pos(row).ok_or(Error::UnknownLabel(row))?;
        let c = self.col_pos(col).ok_or(Error::UnknownLabel(col))?;
        Ok(self.at(r, c))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        let n = self.order().max(1);
        self.data.chunks(n)
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> LabeledMatrix<T> {
        LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Same labels, fresh `1..=n` numbering.
    pub fn relabeled(&self) -> Self
    where
        S: Clone,
    {
        let labels: Vec<usize> = (1..=self.order()).collect();
        LabeledMatrix {
            rows: labels.clone(),
            cols: labels,
            data: self.data.clone(),
        }
    }
}

impl<S: Clone> LabeledMatrix<S> {
    fn positions(labels: &[usize], pick: &[usize]) -> Result<Vec<usize>> {
        pick.iter()
            .map(|l| {
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or(Error::UnknownLabel(*l))
            })
            .collect()
    }

    fn take(&self, rpos: &[usize], cpos: &[usize]) -> Self {
        let n = self.order();
        let mut data = Vec::with_capacity(rpos.len() * cpos.len());
        for &r in rpos {
            for &c in cpos {
                data.push(self.data[r * n + c].clone());
            }
        }
        LabeledMatrix {
            rows: rpos.iter().map(|&r| self.rows[r]).collect(),
            cols: cpos.iter().map(|&c| self.cols[c]).collect(),
            data,
        }
    }

    /// Keep exactly the given rows and columns (in this matrix's order).
    pub fn submatrix(&self, spec: &SubmatrixSpec) -> Result<Self> {
        if spec.rows.len() != spec.cols.len() {
            return Err(Error::DimensionMismatch {
                left: spec.rows.len(),
                right: spec.cols.len(),
            });
        }
        Self::positions(&self.rows, &spec.rows)?;
        Self::positions(&self.cols, &spec.cols)?;
        let rpos: Vec<usize> = (0..self.order())
            .filter(|&r| spec.rows.contains(&self.rows[r]))
            .collect();
        let cpos: Vec<usize> = (0..self.order())
            .filter(|&c| spec.cols.contains(&self.cols[c]))
            .collect();
        Ok(self.take(&rpos, &cpos))
    }

    /// `A^{i₁…i_k, j₁…j_k}`: delete the labelled rows and columns.
    pub fn delete_rc(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        Self::positions(&self.rows, rows)?;
        Self::positions(&self.cols, cols)?;
        let rpos: Vec<usize> = (0..self.order())
            .filter(|&r| !rows.contains(&self.rows[r]))
            .collect();
        let cpos: Vec<usize> = (0..self.order())
            .filter(|&c| !cols.contains(&self.cols[c]))
            .collect();
        if rpos.len() != cpos.len() {
            return Err(Error::DimensionMismatch {
                left: rpos.len(),
                right: cpos.len(),
            });
        }
        Ok(self.take(&rpos, &cpos))
    }

    /// `B^c`: delete every row and column of `B`.
    pub fn complement(&self, b: &SubmatrixSpec) -> Result<Self> {
        self.delete_rc(&b.rows, &b.cols)
    }

    /// The spec of the rows and columns this matrix does not share with `b`.
    pub fn complement_spec(&self, b: &SubmatrixSpec) -> Result<SubmatrixSpec> {
        let c = self.complement(b)?;
        Ok(SubmatrixSpec {
            rows: c.rows,
            cols: c.cols,
        })
    }

    /// Rearrange contents: position `t` receives the row labelled
    /// `row_src[t]` and the column labelled `col_src[t]`. Labels stay in
    /// place, so only the contents move.
    pub fn permuted(&self, row_src: &[usize], col_src: &[usize]) -> Result<Self> {
        if row_src.len() != self.order() || col_src.len() != self.order() {
            return Err(Error::DimensionMismatch {
                left: row_src.len(),
                right: self.order(),
            });
        }
        check_distinct(row_src)?;
        check_distinct(col_src)?;
        let rpos = Self::positions(&self.rows, row_src)?;
        let cpos = Self::positions(&self.cols, col_src)?;
        let mut out = self.take(&rpos, &cpos);
        out.rows = self.rows.clone();
        out.cols = self.cols.clone();
        Ok(out)
    }
}

impl<S: Scalar> LabeledMatrix<S> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero())
    }

    /// `A* = (ā_{ji})`. Row labels of `A*` are the column labels of `A`.
    pub fn hermitian_dual(&self) -> Self {
        let n = self.order();
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(self.at(c, r).conj());
            }
        }
        LabeledMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            data,
        }
    }

    /// `A = A*` entrywise (position-wise, ignoring labels).
    pub fn is_hermitian(&self) -> bool {
        let n = self.order();
        (0..n).all(|r| (0..n).all(|c| *self.at(r, c) == self.at(c, r).conj()))
    }

    /// Positional product; the result carries `self`'s row labels and
    /// `rhs`'s column labels.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        let n = self.order();
        if rhs.order() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: rhs.order(),
            });
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    acc = acc + self.at(r, k).clone() * rhs.at(k, c).clone();
                }
                data.push(acc);
            }
        }
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: rhs.cols.clone(),
            data,
        })
    }

    pub fn minus(&self, rhs: &Self) -> Result<Self> {
        if rhs.order() != self.order() {
            return Err(Error::DimensionMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Multiply row `i` by `λ` from the left.
    pub fn scale_row(&self, i: usize, lambda: &S) -> Result<Self> {
        let r = self.row_pos(i).ok_or(Error::UnknownLabel(i))?;
        let n = self.order();
        let mut out = self.clone();
        for c in 0..n {
            out.data[r * n + c] = lambda.clone() * self.at(r, c).clone();
        }
        Ok(out)
    }

    /// Multiply column `j` by `μ` from the right.
    pub fn scale_col(&self, j: usize, mu: &S) -> Result<Self> {
        let c = self.col_pos(j).ok_or(Error::UnknownLabel(j))?;
        let n = self.order();
        let mut out = self.clone();
        for r in 0..n {
            out.data[r * n + c] = self.at(r, c).clone() * mu.clone();
        }
        Ok(out)
    }

    /// Row `p` += `λ`·(row `k`).
    pub fn add_row_multiple(&self, p: usize, k: usize, lambda: &S) -> Result<Self> {
        let rp = self.row_pos(p).ok_or(Error::UnknownLabel(p))?;
        let rk = self.row_pos(k).ok_or(Error::UnknownLabel(k))?;
        let n = self.order();
        let mut out = self.clone();
        for c in 0..n {
            out.data[rp * n + c] =
                self.at(rp, c).clone() + lambda.clone() * self.at(rk, c).clone();
        }
        Ok(out)
    }

    /// Column `q` += (column `l`)·`λ`.
    pub fn add_col_multiple(&self, q: usize, l: usize, lambda: &S) -> Result<Self> {
        let cq = self.col_pos(q).ok_or(Error::UnknownLabel(q))?;
        let cl = self.col_pos(l).ok_or(Error::UnknownLabel(l))?;
        let n = self.order();
        let mut out = self.clone();
        for r in 0..n {
            out.data[r * n + cq] =
                self.at(r, cq).clone() + self.at(r, cl).clone() * lambda.clone();
        }
        Ok(out)
    }

    pub fn approx_eq(&self, other: &Self, tol: &crate::Tolerance) -> bool {
        self.order() == other.order()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}

impl<S> Index<(usize, usize)> for LabeledMatrix<S> {
    type Output = S;

    /// Positional (0-based) access.
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.rows.len() + c]
    }
}

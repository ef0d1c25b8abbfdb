//! Orderings of label sets, parities, and the cycle normal forms used by the
//! Moore determinant.

use alloc::vec::Vec;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A sequence of distinct labels, read as an ordering `(i₁, …, i_k)` of the
/// set it contains.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        for (k, l) in seq.iter().enumerate() {
            if seq[..k].contains(l) {
                return Err(Error::InvalidOrdering("repeated label"));
            }
        }
        Ok(Ordering(seq))
    }

    /// `(1, 2, …, n)`.
    pub fn identity(n: usize) -> Self {
        Ordering((1..=n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Parity `p(I)`: the sign of the permutation taking the ascending
    /// arrangement of the labels to this sequence.
    pub fn parity(&self) -> i8 {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let perm: Vec<usize> = self
            .0
            .iter()
            .map(|l| sorted.binary_search(l).expect("label present"))
            .collect();
        permutation_sign(&perm)
    }

    /// Every ordering of `labels`, lexicographic in the order `labels` is
    /// given.
    pub fn all(labels: &[usize]) -> Vec<Ordering> {
        labels
            .iter()
            .copied()
            .permutations(labels.len())
            .map(Ordering)
            .collect()
    }

    /// Every ordering of `labels` whose first element is `first`,
    /// lexicographic in the remaining labels.
    pub fn all_with_first(first: usize, labels: &[usize]) -> Vec<Ordering> {
        let rest: Vec<usize> = labels.iter().copied().filter(|&l| l != first).collect();
        rest.iter()
            .copied()
            .permutations(rest.len())
            .map(|tail| {
                let mut seq = Vec::with_capacity(tail.len() + 1);
                seq.push(first);
                seq.extend(tail);
                Ordering(seq)
            })
            .collect()
    }
}

impl From<Ordering> for Vec<usize> {
    fn from(o: Ordering) -> Self {
        o.0
    }
}

/// Sign of a permutation of `0..n` given in one-line form, by cycle
/// counting: `(−1)^(n − #cycles)`.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let n = perm.len();
    let cycles = cycles_of(perm).len();
    if (n - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Disjoint cycles of a permutation of `0..n` in one-line form, each starting
/// at its smallest element, listed by increasing leader.
pub fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}

/// How each cycle of a permutation is written out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleForm {
    /// Each cycle starts with its smallest element; cycles ordered by
    /// decreasing leaders. This is the unique form in the Moore determinant.
    MinLeadDescending,
    /// Same cycle order, each cycle rotated to start at its largest element.
    MaxLeadSameOrder,
}

/// Cycle normal form of a permutation of `0..n`.
pub fn cycle_normal_form(perm: &[usize], form: CycleForm) -> Vec<Vec<usize>> {
    let mut cycles = cycles_of(perm);
    cycles.reverse();
    if form == CycleForm::MaxLeadSameOrder {
        for c in &mut cycles {
            let top = c
                .iter()
                .enumerate()
                .max_by_key(|(_, v)| **v)
                .map(|(k, _)| k)
                .unwrap_or(0);
            c.rotate_left(top);
        }
    }
    cycles
}

/// All permutations of `0..n` in one-line form, lexicographic.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

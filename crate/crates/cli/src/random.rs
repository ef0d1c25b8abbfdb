//! Deterministic random matrices.
//!
//! Every trial draws from its own ChaCha8 stream: the seed picks the key and
//! the trial index picks the stream, so trial `t` of a run can be replayed
//! alone. Rejection sampling for generic matrices advances the same stream.

use ncdet_core::dets::gauss_udl;
use ncdet_core::quasidet::is_generic;
use ncdet_core::{LabeledMatrix, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::Element;

/// Rejections allowed before a stream is declared degenerate.
pub const MAX_ATTEMPTS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("degenerate stream: no generic sample in {MAX_ATTEMPTS} attempts (seed {seed}, stream {stream})")]
pub struct DegenerateStream {
    pub seed: u64,
    pub stream: u64,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
    stream: u64,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng, seed, stream }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn scalar<S: Element>(&mut self) -> S {
        S::sample(&mut self.rng)
    }

    pub fn nonzero<S: Element>(&mut self) -> S {
        loop {
            let x = S::sample(&mut self.rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A label in `1..=n`.
    pub fn label(&mut self, n: usize) -> usize {
        self.rng.random_range(1..=n)
    }

    /// Two distinct labels in `1..=n`, `n ≥ 2`.
    pub fn distinct_pair(&mut self, n: usize) -> (usize, usize) {
        let p = self.label(n);
        let mut k = self.label(n - 1);
        if k >= p {
            k += 1;
        }
        (p, k)
    }

    /// A rearrangement of `1..=n` that keeps `fixed` in place.
    pub fn permutation_fixing(&mut self, n: usize, fixed: usize) -> Vec<usize> {
        let mut others: Vec<usize> = (1..=n).filter(|&x| x != fixed).collect();
        others.shuffle(&mut self.rng);
        others.insert(fixed - 1, fixed);
        others
    }

    pub fn matrix<S: Element>(&mut self, n: usize) -> LabeledMatrix<S> {
        LabeledMatrix::from_fn(n, |_, _| S::sample(&mut self.rng))
    }

    /// Real diagonal, upper triangle sampled, lower triangle conjugated.
    pub fn hermitian<S: Element>(&mut self, n: usize) -> LabeledMatrix<S> {
        let upper: Vec<S> = (0..n * n).map(|_| S::sample(&mut self.rng)).collect();
        let diag: Vec<S::Real> = (0..n).map(|_| S::sample_real(&mut self.rng)).collect();
        LabeledMatrix::from_fn(n, |i, j| {
            if i == j {
                S::from_real(diag[i - 1].clone())
            } else if i < j {
                upper[(i - 1) * n + (j - 1)].clone()
            } else {
                upper[(j - 1) * n + (i - 1)].conj()
            }
        })
    }

    /// Resamples until every square submatrix is invertible and the leading
    /// pivots of `A·A*` are invertible.
    pub fn generic<S: Element>(&mut self, n: usize) -> Result<LabeledMatrix<S>, DegenerateStream> {
        self.until_generic(|s| s.matrix(n))
    }

    pub fn generic_hermitian<S: Element>(&mut self, n: usize) -> Result<LabeledMatrix<S>, DegenerateStream> {
        self.until_generic(|s| s.hermitian(n))
    }

    fn until_generic<S: Element>(
        &mut self,
        mut draw: impl FnMut(&mut Self) -> LabeledMatrix<S>,
    ) -> Result<LabeledMatrix<S>, DegenerateStream> {
        for _ in 0..MAX_ATTEMPTS {
            let a = draw(self);
            if accept(&a) {
                return Ok(a);
            }
        }
        Err(DegenerateStream {
            seed: self.seed,
            stream: self.stream,
        })
    }
}

fn accept<S: Scalar>(a: &LabeledMatrix<S>) -> bool {
    if !is_generic(a) {
        return false;
    }
    let Ok(gram) = a.matmul(&a.hermitian_dual()) else {
        return false;
    };
    gauss_udl(&gram).is_ok_and(|f| f.pivots().iter().all(|y| !y.is_zero()))
}

/// The first generic sample of stream 0 for `seed`.
pub fn random_generic_matrix<S: Element>(seed: u64, n: usize) -> Result<LabeledMatrix<S>, DegenerateStream> {
    Sampler::new(seed, 0).generic(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncdet_core::quasidet::quasidet_block;
    use ncdet_core::{Quaternion, Rational};

    type Q = Quaternion<Rational>;

    #[test]
    fn same_seed_same_matrix() {
        let a: LabeledMatrix<Q> = random_generic_matrix(42, 3).unwrap();
        assert_eq!(a, random_generic_matrix(42, 3).unwrap());
        let f: LabeledMatrix<Quaternion<f64>> = random_generic_matrix(7, 3).unwrap();
        let g: LabeledMatrix<Quaternion<f64>> = random_generic_matrix(7, 3).unwrap();
        assert_eq!(f.entries().iter().map(|h| h.to_f64_components()).collect::<Vec<_>>(), g.entries().iter().map(|h| h.to_f64_components()).collect::<Vec<_>>());
        assert_ne!(a, Sampler::new(42, 1).generic(3).unwrap());
    }

    #[test]
    fn generic_samples_have_all_quasideterminants() {
        for seed in 0..20 {
            let a: LabeledMatrix<Q> = random_generic_matrix(seed, 3).unwrap();
            for i in 1..=3 {
                for j in 1..=3 {
                    assert!(quasidet_block(&a, i, j).unwrap().defined());
                }
            }
        }
    }

    #[test]
    fn components_in_range() {
        let mut s = Sampler::new(1, 0);
        for _ in 0..200 {
            let h: Q = s.scalar();
            for c in h.components() {
                assert!(*c >= Rational::from(-9) && *c <= Rational::from(9));
            }
        }
    }

    #[test]
    fn one_by_one_is_nonzero() {
        for seed in 0..50 {
            let a: LabeledMatrix<Q> = random_generic_matrix(seed, 1).unwrap();
            assert!(!a.at(0, 0).is_zero());
        }
    }

    #[test]
    fn hermitian_samples() {
        let mut s = Sampler::new(3, 9);
        let a: LabeledMatrix<Q> = s.generic_hermitian(4).unwrap();
        assert!(a.is_hermitian());
    }

    #[test]
    fn permutation_keeps_fixed_point() {
        let mut s = Sampler::new(5, 0);
        for fixed in 1..=4 {
            let p = s.permutation_fixing(4, fixed);
            assert_eq!(p[fixed - 1], fixed);
            let mut sorted = p.clone();
            sorted.sort();
            assert_eq!(sorted, vec![1, 2, 3, 4]);
        }
        for _ in 0..50 {
            let (p, k) = s.distinct_pair(3);
            assert!(p != k && (1..=3).contains(&p) && (1..=3).contains(&k));
        }
    }
}

//! Randomized verification suites.
//!
//! A suite runs `trials` independent trials. Trial `t` samples from stream
//! `t` of the run seed (see [`crate::random`]), evaluates a fixed list of
//! named checks and is counted as
//!
//! * a failure if any check fails or errors,
//! * a skip if the stream was degenerate or no check could be evaluated,
//! * a pass otherwise.
//!
//! Random choices are drawn before any check runs, so restricting a run to
//! some checks with `only` does not change the samples.

use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use ncdet_core::dets::{
    delta, dieudonne_pre, dieudonne_sq, gauss_udl, moore, moore_with, nu_matrix, nu_via_moore, predet, study,
};
use ncdet_core::perm::CycleForm;
use ncdet_core::permanents::{census, enumerate_paths_capped, mu_count, q_polynomial, Expansion};
use ncdet_core::quasidet::{
    check_col_addition, check_col_scaling, check_heredity, check_permutation_invariance, check_row_addition, check_row_scaling,
    invert, sylvester_compress, quasidet_block, quasidet_recursive, HomologicalTable,
};
use ncdet_core::{
    Complex, HomologicalIndices, LabeledMatrix, Ordering, Quaternion, Rational, Real, Scalar, SubmatrixSpec, Tolerance, Verdict,
};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::format::{matrix_value, Element, Kind, RealKind};
use crate::random::{DegenerateStream, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Homology,
    Heredity,
    Sylvester,
    Rowcol,
    Oracle,
    Commutative,
    Predet,
    Thm33,
    Moore,
    Study,
    Norm,
    Census,
    All,
}

impl Suite {
    /// Every suite except `all`, in run order.
    pub const EACH: [Suite; 12] = [
        Suite::Homology,
        Suite::Heredity,
        Suite::Sylvester,
        Suite::Rowcol,
        Suite::Oracle,
        Suite::Commutative,
        Suite::Predet,
        Suite::Thm33,
        Suite::Moore,
        Suite::Study,
        Suite::Norm,
        Suite::Census,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Homology => "homology",
            Suite::Heredity => "heredity",
            Suite::Sylvester => "sylvester",
            Suite::Rowcol => "rowcol",
            Suite::Oracle => "oracle",
            Suite::Commutative => "commutative",
            Suite::Predet => "predet",
            Suite::Thm33 => "thm33",
            Suite::Moore => "moore",
            Suite::Study => "study",
            Suite::Norm => "norm",
            Suite::Census => "census",
            Suite::All => "all",
        }
    }

    /// Names of the checks a suite reports.
    pub fn checks(self) -> &'static [&'static str] {
        match self {
            Suite::Homology => &["row-relation", "column-relation"],
            Suite::Heredity => &["heredity"],
            Suite::Sylvester => &["sylvester"],
            Suite::Rowcol => &["permutation", "row-scaling", "col-scaling", "row-addition", "col-addition"],
            Suite::Oracle => &["oracle"],
            Suite::Commutative => &["ratio"],
            Suite::Predet => &["udl", "delta-real", "norm-ordering-free", "hermitian-all-pairs", "hermitian-diagonal-pairs"],
            Suite::Thm33 => &["expansion", "conjugate-product", "q-recurrence"],
            Suite::Moore => &["moore-is-delta", "moore-real", "cycle-order"],
            Suite::Study => &["study-is-moore", "nonnegative", "zero-iff-singular"],
            Suite::Norm => &[
                "multiplicative",
                "delta-gram",
                "delta-product",
                "delta-norm",
                "recursive",
                "axiom-invertible",
                "axiom-row-addition",
            ],
            Suite::Census => &["recurrence", "enumeration"],
            Suite::All => &[],
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub suite: Suite,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub kind: Kind,
    /// Restrict to these check names; empty runs every check.
    pub only: Vec<String>,
    /// Order bound for the permanent expansion.
    pub cap: usize,
}

impl Config {
    pub fn new(suite: Suite, n: usize, trials: u64, seed: u64, kind: Kind) -> Self {
        Config {
            suite,
            n,
            trials,
            seed,
            kind,
            only: Vec::new(),
            cap: ncdet_core::permanents::PERMANENT_CAP,
        }
    }

    pub fn only(mut self, checks: &[&str]) -> Self {
        self.only = checks.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("suite {suite} needs order at most {cap}, got {n}")]
    TooLarge { suite: &'static str, n: usize, cap: usize },

    #[error("suite {suite} is not available for scalar kind {kind}")]
    Unsupported { suite: &'static str, kind: &'static str },

    #[error("unknown check \"{0}\"")]
    UnknownCheck(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: u64,
    pub fails: u64,
    pub skipped: u64,
}

/// A failed trial, with everything needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub seed: u64,
    pub checks: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    /// Sampled matrices by role: `A` (generic), `H` (Hermitian), `B` (second factor).
    pub matrices: BTreeMap<&'static str, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub scalar: String,
    pub n: usize,
    pub seed: u64,
    pub trials: u64,
    pub passes: u64,
    pub skips: u64,
    pub failures: u64,
    pub wall_time_s: f64,
    pub checks: BTreeMap<String, Tally>,
    pub failed_trials: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<RunReport>,
}

impl RunReport {
    fn new(suite: &str, scalar: &str, cfg: &Config) -> Self {
        RunReport {
            suite: suite.into(),
            scalar: scalar.into(),
            n: cfg.n,
            seed: cfg.seed,
            trials: 0,
            passes: 0,
            skips: 0,
            failures: 0,
            wall_time_s: 0.0,
            checks: BTreeMap::new(),
            failed_trials: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    /// Tally of one check; zero when it never ran.
    pub fn tally(&self, check: &str) -> Tally {
        self.checks.get(check).cloned().unwrap_or_default()
    }

    fn absorb(&mut self, trial: u64, seed: u64, t: Trial) {
        self.trials += 1;
        let mut failed = Vec::new();
        let mut any_holds = false;
        for (name, v) in &t.results {
            let tally = self.checks.entry(name.to_string()).or_default();
            match v {
                Verdict::Holds => {
                    tally.holds += 1;
                    any_holds = true;
                }
                Verdict::Fails => {
                    tally.fails += 1;
                    failed.push(name.to_string());
                }
                Verdict::Skipped => tally.skipped += 1,
            }
        }
        if !failed.is_empty() {
            self.failures += 1;
            self.failed_trials.push(Failure {
                trial,
                seed,
                checks: failed,
                errors: t.errors,
                matrices: t.matrices,
            });
        } else if any_holds {
            self.passes += 1;
        } else {
            self.skips += 1;
        }
    }
}

struct Trial<'a> {
    only: &'a [String],
    results: Vec<(&'static str, Verdict)>,
    errors: Vec<String>,
    matrices: BTreeMap<&'static str, Value>,
}

impl<'a> Trial<'a> {
    fn new(only: &'a [String]) -> Self {
        Trial {
            only,
            results: Vec::new(),
            errors: Vec::new(),
            matrices: BTreeMap::new(),
        }
    }

    fn wants(&self, name: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|c| c == name)
    }

    fn record<S: Element>(&mut self, role: &'static str, a: &LabeledMatrix<S>) {
        self.matrices.insert(role, matrix_value(a));
    }

    fn push(&mut self, name: &'static str, r: ncdet_core::Result<Verdict>) {
        let v = r.unwrap_or_else(|e| {
            self.errors.push(format!("{name}: {e}"));
            Verdict::Fails
        });
        self.results.push((name, v));
    }

    fn check(&mut self, name: &'static str, f: impl FnOnce() -> ncdet_core::Result<Verdict>) {
        if self.wants(name) {
            let r = f();
            self.push(name, r);
        }
    }
}

fn tol<S: Scalar>() -> Tolerance {
    if <S::Real as Real>::EXACT {
        Tolerance::EXACT
    } else {
        Tolerance::FLOAT
    }
}

fn same<S: Scalar>(x: &S, y: &S) -> Verdict {
    Verdict::from_bool(x.approx_eq(y, &tol::<S>()))
}

fn same_real<S: Scalar>(x: &S::Real, y: &S::Real) -> Verdict {
    same(&S::from_real(x.clone()), &S::from_real(y.clone()))
}

fn run_trials(
    cfg: &Config,
    suite: Suite,
    scalar: &str,
    mut body: impl FnMut(&mut Sampler, &mut Trial) -> Result<(), DegenerateStream>,
) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(suite.name(), scalar, cfg);
    for trial in 0..cfg.trials {
        let mut sampler = Sampler::new(cfg.seed, trial);
        let mut t = Trial::new(&cfg.only);
        match body(&mut sampler, &mut t) {
            Ok(()) => report.absorb(trial, cfg.seed, t),
            Err(_) => {
                report.trials += 1;
                report.skips += 1;
            }
        }
    }
    report.wall_time_s = start.elapsed().as_secs_f64();
    report
}

fn labels(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn homology<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    if !t.wants("row-relation") && !t.wants("column-relation") {
        return Ok(());
    }
    let mut table = HomologicalTable::new(&a);
    let (mut row, mut col) = (Ok(Verdict::Skipped), Ok(Verdict::Skipped));
    // The column relation needs k ≠ i, t ≠ j, so k = s and t = l cover it.
    for (i, j, l, s) in itertools::iproduct!(1..=n, 1..=n, 1..=n, 1..=n) {
        if l == j || s == i {
            continue;
        }
        let ix = HomologicalIndices { i, j, l, s, k: s, t: l };
        match table.check(ix, &tol::<S>()) {
            Ok((r, c)) => {
                row = row.map(|v: Verdict| v.and(r));
                col = col.map(|v: Verdict| v.and(c));
            }
            Err(e) => {
                row = Err(e.clone());
                col = Err(e);
                break;
            }
        }
    }
    if t.wants("row-relation") {
        t.push("row-relation", row);
    }
    if t.wants("column-relation") {
        t.push("column-relation", col);
    }
    Ok(())
}

fn heredity<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    t.check("heredity", || {
        let mut v = Verdict::Skipped;
        for k in 1..n {
            for (i, j) in itertools::iproduct!(1..=k, 1..=k) {
                v = v.and(check_heredity(&a, k, i, j, &tol::<S>())?);
            }
        }
        Ok(v)
    });
    Ok(())
}

fn sylvester<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    t.check("sylvester", || {
        let top: Vec<Option<S>> = itertools::iproduct!(1..=n, 1..=n)
            .map(|(i, j)| Ok(quasidet_block(&a, i, j)?.value))
            .collect::<ncdet_core::Result<_>>()?;
        let mut v = Verdict::Skipped;
        for k in 1..n {
            for rows in (1..=n).combinations(k) {
                for cols in (1..=n).combinations(k) {
                    let b = match sylvester_compress(&a, &SubmatrixSpec::new(rows.clone(), cols.clone())?) {
                        Ok(b) => b,
                        Err(ncdet_core::Error::Singular | ncdet_core::Error::Undefined { .. }) => continue,
                        Err(e) => return Err(e),
                    };
                    for i in (1..=n).filter(|i| !rows.contains(i)) {
                        for j in (1..=n).filter(|j| !cols.contains(j)) {
                            let lhs = &top[(i - 1) * n + (j - 1)];
                            v = v.and(match (lhs, quasidet_block(&b, i, j)?.value) {
                                (Some(x), Some(y)) => same(x, &y),
                                _ => Verdict::Skipped,
                            });
                        }
                    }
                }
            }
        }
        Ok(v)
    });
    Ok(())
}

fn rowcol<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    let tol = tol::<S>();
    let (p, q) = (s.label(n), s.label(n));
    let (row_src, col_src) = (s.permutation_fixing(n, p), s.permutation_fixing(n, q));
    let (si, sj, lambda, mu) = (s.label(n), s.label(n), s.nonzero::<S>(), s.nonzero::<S>());
    t.check("permutation", || check_permutation_invariance(&a, p, q, &row_src, &col_src, &tol));
    t.check("row-scaling", || check_row_scaling(&a, si, sj, &lambda, &tol));
    t.check("col-scaling", || check_col_scaling(&a, si, sj, &mu, &tol));
    if n >= 2 {
        let (rp, rk, rl) = {
            let (x, y) = s.distinct_pair(n);
            (x, y, s.scalar::<S>())
        };
        let (cq, cl, cm) = {
            let (x, y) = s.distinct_pair(n);
            (x, y, s.scalar::<S>())
        };
        t.check("row-addition", || check_row_addition(&a, rp, rk, &rl, &tol));
        t.check("col-addition", || check_col_addition(&a, cq, cl, &cm, &tol));
    }
    Ok(())
}

fn oracle<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    t.check("oracle", || {
        let mut v = Verdict::Skipped;
        for (i, j) in itertools::iproduct!(1..=n, 1..=n) {
            let block = quasidet_block(&a, i, j)?.value;
            let rec = quasidet_recursive(&a, i, j)?.value;
            v = v.and(match (block, rec) {
                (Some(x), Some(y)) => same(&x, &y),
                (None, _) => Verdict::Fails,
                (Some(_), None) => Verdict::Skipped,
            });
        }
        Ok(v)
    });
    Ok(())
}

fn commutative<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    t.check("ratio", || {
        let mut v = Verdict::Skipped;
        for (p, q) in itertools::iproduct!(1..=n, 1..=n) {
            v = v.and(ncdet_core::dets::check_commutative_ratio(&a, p, q, &tol::<S>())?);
        }
        Ok(v)
    });
    Ok(())
}

fn signed<S: Scalar>(x: S, sign: i8) -> S {
    if sign < 0 {
        -x
    } else {
        x
    }
}

fn predets<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    let h: LabeledMatrix<S> = s.generic_hermitian(n)?;
    t.record("A", &a);
    t.record("H", &h);
    let orderings = Ordering::all(&labels(n));
    t.check("udl", || {
        let f = gauss_udl(&a)?;
        let d = delta(&a)?;
        let product = f.pivots().into_iter().fold(S::one(), |acc, y| acc * y);
        Ok(Verdict::from_bool(f.product()?.approx_eq(&a, &tol::<S>()))
            .and(same(&product, &d))
            .and(same(&dieudonne_pre(&a)?, &d)))
    });
    t.check("delta-real", || {
        let d = delta(&h)?;
        Ok(same(&d, &S::from_real(d.real_part())))
    });
    t.check("norm-ordering-free", || {
        let nu = dieudonne_sq(&a)?;
        let mut v = Verdict::Holds;
        for (rows, cols) in itertools::iproduct!(&orderings, &orderings) {
            v = v.and(same_real::<S>(&predet(&a, rows, cols)?.norm(), &nu));
        }
        Ok(v)
    });
    t.check("hermitian-all-pairs", || {
        let d = delta(&h)?;
        let mut v = Verdict::Holds;
        for (rows, cols) in itertools::iproduct!(&orderings, &orderings) {
            v = v.and(same(&signed(predet(&h, rows, cols)?, rows.parity() * cols.parity()), &d));
        }
        Ok(v)
    });
    t.check("hermitian-diagonal-pairs", || {
        let d = delta(&h)?;
        let mut v = Verdict::Holds;
        for order in &orderings {
            v = v.and(same(&predet(&h, order, order)?, &d));
        }
        Ok(v)
    });
    Ok(())
}

fn thm33<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize, cap: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    t.record("A", &a);
    let mut ex = Expansion::with_cap(&a, cap);
    let mut v = [Ok(Verdict::Skipped), Ok(Verdict::Skipped), Ok(Verdict::Skipped)];
    let wants = [t.wants("expansion"), t.wants("conjugate-product"), t.wants("q-recurrence")];
    let nu_a = if wants[1] { nu_via_moore(&a) } else { Ok(<S::Real as num_traits::One>::one()) };
    for (i, j) in itertools::iproduct!(1..=n, 1..=n) {
        let step = (|| -> ncdet_core::Result<[Verdict; 3]> {
            let rhs = ex.rhs(i, j)?;
            let nu_minor = nu_via_moore(&a.delete_rc(&[i], &[j])?)?;
            let mut out = [Verdict::Skipped; 3];
            if wants[0] {
                if let Some(q) = quasidet_block(&a, i, j)?.value {
                    out[0] = same(&rhs, &q.scale(&nu_minor));
                }
            }
            if wants[1] {
                let nu_a = nu_a.clone()?;
                out[1] = same(&(rhs.clone() * ex.rhs_conj(i, j)?), &S::from_real(nu_a * nu_minor));
            }
            if wants[2] {
                out[2] = same(&q_polynomial(&a, i, j)?, &rhs);
            }
            Ok(out)
        })();
        match step {
            Ok(out) => {
                for k in 0..3 {
                    v[k] = v[k].clone().map(|x| x.and(out[k]));
                }
            }
            Err(e) => {
                v = [Err(e.clone()), Err(e.clone()), Err(e)];
                break;
            }
        }
    }
    let [e, c, q] = v;
    for (name, want, r) in [("expansion", wants[0], e), ("conjugate-product", wants[1], c), ("q-recurrence", wants[2], q)] {
        if want {
            t.push(name, r);
        }
    }
    Ok(())
}

fn moores<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let h: LabeledMatrix<S> = s.generic_hermitian(n)?;
    t.record("H", &h);
    t.check("moore-is-delta", || Ok(same(&moore(&h)?, &delta(&h)?)));
    t.check("moore-real", || {
        let m = moore(&h)?;
        Ok(same(&m, &S::from_real(m.real_part())))
    });
    t.check("cycle-order", || Ok(same(&moore_with(&h, CycleForm::MaxLeadSameOrder)?, &moore(&h)?)));
    Ok(())
}

/// Copies row 1 onto row 2.
fn singular_copy<S: Scalar>(a: &LabeledMatrix<S>) -> LabeledMatrix<S> {
    LabeledMatrix::from_fn(a.order(), |i, j| a.at(if i == 2 { 0 } else { i - 1 }, j - 1).clone())
}

fn studies<R>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream>
where
    R: RealKind,
    Quaternion<R>: Element<Real = R>,
{
    let a: LabeledMatrix<Quaternion<R>> = s.matrix(n);
    t.record("A", &a);
    let gram = |m: &LabeledMatrix<Quaternion<R>>| m.matmul(&m.hermitian_dual());
    t.check("study-is-moore", || Ok(same(&Quaternion::real(study(&a)?), &moore(&gram(&a)?)?)));
    t.check("nonnegative", || {
        let v = study(&a)?;
        Ok(Verdict::from_bool(v >= R::zero() || same_real::<Quaternion<R>>(&v, &R::zero()) == Verdict::Holds))
    });
    t.check("zero-iff-singular", || {
        if !R::EXACT {
            return Ok(Verdict::Skipped);
        }
        let mut v = Verdict::from_bool(study(&a)?.is_zero() == invert(&gram(&a)?).is_err());
        if n >= 2 {
            let b = singular_copy(&a);
            v = v.and(Verdict::from_bool(study(&b)?.is_zero() && invert(&gram(&b)?).is_err()));
        }
        Ok(v)
    });
    Ok(())
}

fn norms<S: Element>(s: &mut Sampler, t: &mut Trial, n: usize) -> Result<(), DegenerateStream> {
    let a: LabeledMatrix<S> = s.generic(n)?;
    let b: LabeledMatrix<S> = s.matrix(n);
    let lambda: S = s.scalar();
    let pair = if n >= 2 { Some(s.distinct_pair(n)) } else { None };
    t.record("A", &a);
    t.record("B", &b);
    let exact = <S::Real as Real>::EXACT;
    t.check("multiplicative", || {
        Ok(same_real::<S>(&nu_via_moore(&a.matmul(&b)?)?, &(nu_via_moore(&a)? * nu_via_moore(&b)?)))
    });
    t.check("delta-gram", || {
        Ok(same(&delta(&a.matmul(&a.hermitian_dual())?)?, &S::from_real(nu_via_moore(&a)?)))
    });
    t.check("delta-product", || {
        Ok(same(&(delta(&a)? * delta(&a.hermitian_dual())?), &S::from_real(nu_via_moore(&a)?)))
    });
    t.check("delta-norm", || Ok(same_real::<S>(&dieudonne_sq(&a)?, &nu_via_moore(&a)?)));
    t.check("recursive", || Ok(same_real::<S>(&nu_matrix(&a)?, &nu_via_moore(&a)?)));
    t.check("axiom-invertible", || {
        let mut v = Verdict::from_bool(!num_traits::Zero::is_zero(&nu_via_moore(&a)?) && invert(&a).is_ok());
        if exact && n >= 2 {
            let z = singular_copy(&b);
            v = v.and(Verdict::from_bool(num_traits::Zero::is_zero(&nu_via_moore(&z)?) && invert(&z).is_err()));
        }
        if exact {
            v = v.and(Verdict::from_bool(num_traits::Zero::is_zero(&nu_via_moore(&b)?) == invert(&b).is_err()));
        }
        Ok(v)
    });
    if let Some((p, k)) = pair {
        t.check("axiom-row-addition", || {
            Ok(same_real::<S>(&nu_via_moore(&a.add_row_multiple(p, k, &lambda)?)?, &nu_via_moore(&a)?))
        });
    }
    Ok(())
}

fn run_census(cfg: &Config) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(Suite::Census.name(), "none", cfg);
    for m in 1..=cfg.n {
        let mut t = Trial::new(&cfg.only);
        let mu = mu_count(m);
        t.check("recurrence", || Ok(Verdict::from_bool(mu.clone()? == census(m))));
        if m <= cfg.cap {
            t.check("enumeration", || {
                Ok(Verdict::from_bool(enumerate_paths_capped(m, 1, 1, cfg.cap)?.len() as u128 == mu.clone()?))
            });
        }
        report.absorb(m as u64, cfg.seed, t);
    }
    report.wall_time_s = start.elapsed().as_secs_f64();
    report
}

fn by_scalar<S: Element>(suite: Suite, cfg: &Config) -> RunReport {
    let n = cfg.n;
    let name = S::NAME;
    match suite {
        Suite::Homology => run_trials(cfg, suite, name, |s, t| homology::<S>(s, t, n)),
        Suite::Heredity => run_trials(cfg, suite, name, |s, t| heredity::<S>(s, t, n)),
        Suite::Sylvester => run_trials(cfg, suite, name, |s, t| sylvester::<S>(s, t, n)),
        Suite::Rowcol => run_trials(cfg, suite, name, |s, t| rowcol::<S>(s, t, n)),
        Suite::Oracle => run_trials(cfg, suite, name, |s, t| oracle::<S>(s, t, n)),
        Suite::Commutative => run_trials(cfg, suite, name, |s, t| commutative::<S>(s, t, n)),
        Suite::Predet => run_trials(cfg, suite, name, |s, t| predets::<S>(s, t, n)),
        Suite::Thm33 => run_trials(cfg, suite, name, |s, t| thm33::<S>(s, t, n, cfg.cap)),
        Suite::Moore => run_trials(cfg, suite, name, |s, t| moores::<S>(s, t, n)),
        Suite::Norm => run_trials(cfg, suite, name, |s, t| norms::<S>(s, t, n)),
        Suite::Study | Suite::Census | Suite::All => unreachable!("dispatched separately"),
    }
}

fn run_one(suite: Suite, cfg: &Config) -> Result<RunReport, VerifyError> {
    let unsupported = || VerifyError::Unsupported {
        suite: suite.name(),
        kind: cfg.kind.name(),
    };
    Ok(match suite {
        Suite::Census => run_census(cfg),
        Suite::Study => match cfg.kind {
            Kind::RationalQuaternion => run_trials(cfg, suite, Kind::RationalQuaternion.name(), |s, t| studies::<Rational>(s, t, cfg.n)),
            Kind::F64Quaternion => run_trials(cfg, suite, Kind::F64Quaternion.name(), |s, t| studies::<f64>(s, t, cfg.n)),
            _ => return Err(unsupported()),
        },
        // The classical determinant needs a commutative kind; quaternion
        // runs use the complex numbers over the same real field.
        Suite::Commutative => match cfg.kind {
            Kind::RationalQuaternion | Kind::RationalComplex => by_scalar::<Complex<Rational>>(suite, cfg),
            Kind::F64Quaternion => by_scalar::<Complex<f64>>(suite, cfg),
            Kind::Rational => by_scalar::<Rational>(suite, cfg),
        },
        _ => match cfg.kind {
            Kind::RationalQuaternion => by_scalar::<Quaternion<Rational>>(suite, cfg),
            Kind::F64Quaternion => by_scalar::<Quaternion<f64>>(suite, cfg),
            Kind::RationalComplex => by_scalar::<Complex<Rational>>(suite, cfg),
            Kind::Rational => by_scalar::<Rational>(suite, cfg),
        },
    })
}

fn validate(cfg: &Config) -> Result<(), VerifyError> {
    if cfg.n == 0 {
        return Err(VerifyError::ZeroOrder);
    }
    let suites: Vec<Suite> = if cfg.suite == Suite::All { Suite::EACH.to_vec() } else { vec![cfg.suite] };
    for c in &cfg.only {
        if !suites.iter().any(|s| s.checks().contains(&c.as_str())) {
            return Err(VerifyError::UnknownCheck(c.clone()));
        }
    }
    for s in suites {
        let cap = match s {
            Suite::Thm33 => cfg.cap,
            Suite::Moore | Suite::Study | Suite::Norm => ncdet_core::dets::MOORE_CAP,
            _ => continue,
        };
        if cfg.n > cap {
            return Err(VerifyError::TooLarge { suite: s.name(), n: cfg.n, cap });
        }
    }
    Ok(())
}

/// Runs a suite, or every suite for [`Suite::All`]. Under `all`, the study
/// suite is left out for non-quaternion kinds.
pub fn run(cfg: &Config) -> Result<RunReport, VerifyError> {
    validate(cfg)?;
    if cfg.suite != Suite::All {
        return run_one(cfg.suite, cfg);
    }
    let start = Instant::now();
    let mut total = RunReport::new(Suite::All.name(), cfg.kind.name(), cfg);
    for suite in Suite::EACH {
        if suite == Suite::Study && !matches!(cfg.kind, Kind::RationalQuaternion | Kind::F64Quaternion) {
            continue;
        }
        if !cfg.only.is_empty() && !suite.checks().iter().any(|c| cfg.only.iter().any(|o| o == c)) {
            continue;
        }
        let part = run_one(suite, cfg)?;
        total.trials += part.trials;
        total.passes += part.passes;
        total.skips += part.skips;
        total.failures += part.failures;
        for (name, tally) in &part.checks {
            let into = total.checks.entry(format!("{}/{}", part.suite, name)).or_default();
            into.holds += tally.holds;
            into.fails += tally.fails;
            into.skipped += tally.skipped;
        }
        total.parts.push(part);
    }
    total.wall_time_s = start.elapsed().as_secs_f64();
    Ok(total)
}

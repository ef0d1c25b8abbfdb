//! Acceptance run: one line per criterion, nonzero exit if any criterion
//! fails. Exact criteria compare with zero tolerance; the float criterion
//! uses relative tolerance 1e-9.

use std::io::Write;
use std::time::{Duration, Instant};

use ncdet_cli::format::Kind;
use ncdet_cli::verify::{self, Config, RunReport, Suite};
use ncdet_core::permanents::{double_permanent_paths, enumerate_paths, mu_count, PERMANENT_CAP};
use ncdet_core::Tolerance;

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(suite: Suite, n: usize, trials: u64, kind: Kind, checks: &[&str]) -> RunReport {
    verify::run(&Config::new(suite, n, trials, SEED, kind).only(checks)).expect("valid configuration")
}

/// Every trial passed and every listed check held on every trial.
fn clean(r: &RunReport, checks: &[&str]) -> bool {
    r.failures == 0 && r.passes == r.trials && checks.iter().all(|c| r.tally(c).holds == r.trials)
}

fn tallies(r: &RunReport, checks: &[&str]) -> String {
    checks
        .iter()
        .map(|c| format!("{c} {}/{}", r.tally(c).holds, r.trials))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs `suite` over several orders and summarizes.
fn sweep(suite: Suite, orders: &[usize], trials: u64, kind: Kind, checks: &[&str]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for &n in orders {
        let r = run(suite, n, trials, kind, checks);
        ok &= clean(&r, checks);
        parts.push(format!("n={n}: {}", tallies(&r, checks)));
    }
    Outcome { ok, detail: parts.join("; ") }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{}; {:.1} s", o.detail, took.as_secs_f64());
    if let Some(limit) = limit {
        if took > limit {
            o.ok = false;
            o.detail = format!("{} exceeds {} s", o.detail, limit.as_secs());
        }
    }
    o
}

fn golden(name: &str) -> String {
    let path = format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn render<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|t| format!("{t}\n")).collect()
}

fn c1() -> Outcome {
    timed(Some(Duration::from_secs(60)), || {
        sweep(Suite::Thm33, &[2, 3, 4], 100, Kind::RationalQuaternion, &["expansion"])
    })
}

fn c2() -> Outcome {
    let labels = |n: usize| (1..=n).collect::<Vec<_>>();
    let cases = [
        ("pi11_n2.txt", render(&double_permanent_paths(&labels(2), &labels(2), 1, 1, PERMANENT_CAP).unwrap())),
        ("pi11_n3.txt", render(&double_permanent_paths(&labels(3), &labels(3), 1, 1, PERMANENT_CAP).unwrap())),
        ("expand11_n2.txt", render(&enumerate_paths(2, 1, 1).unwrap())),
        ("expand11_n3.txt", render(&enumerate_paths(3, 1, 1).unwrap())),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, text) in &cases {
        let want = golden(name);
        let same = *text == want;
        ok &= same;
        parts.push(format!("{name} {} lines {}", want.lines().count(), if same { "match" } else { "DIFFER" }));
    }
    Outcome { ok, detail: parts.join(", ") }
}

fn c3() -> Outcome {
    timed(None, || sweep(Suite::Moore, &[2, 3, 4], 100, Kind::RationalQuaternion, &["moore-is-delta", "moore-real"]))
}

fn c4() -> Outcome {
    timed(Some(Duration::from_secs(30)), || sweep(Suite::Study, &[1, 2, 3], 50, Kind::RationalQuaternion, &["study-is-moore"]))
}

fn c5() -> Outcome {
    timed(None, || {
        sweep(
            Suite::Norm,
            &[2, 3],
            50,
            Kind::RationalQuaternion,
            &["multiplicative", "delta-gram", "delta-product", "recursive"],
        )
    })
}

fn c6() -> Outcome {
    timed(None, || {
        let checks = ["norm-ordering-free", "hermitian-all-pairs"];
        let r = run(Suite::Predet, 3, 100, Kind::RationalQuaternion, &[checks[0], checks[1], "hermitian-diagonal-pairs"]);
        Outcome {
            ok: checks.iter().all(|c| r.tally(c).holds == r.trials) && r.trials == 100,
            detail: format!(
                "n=3: {}; informational: {}",
                tallies(&r, &checks),
                tallies(&r, &["hermitian-diagonal-pairs"])
            ),
        }
    })
}

fn c7() -> Outcome {
    timed(None, || sweep(Suite::Predet, &[2, 3, 4], 100, Kind::RationalQuaternion, &["udl"]))
}

fn structural(orders: &[usize], kind: Kind) -> Outcome {
    let suites: [(Suite, &[&str]); 5] = [
        (Suite::Homology, &["row-relation", "column-relation"]),
        (Suite::Heredity, &["heredity"]),
        (Suite::Sylvester, &["sylvester"]),
        (Suite::Rowcol, &["permutation", "row-scaling", "col-scaling", "row-addition", "col-addition"]),
        (Suite::Oracle, &["oracle"]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (suite, checks) in suites {
        let o = sweep(suite, orders, 100, kind, checks);
        ok &= o.ok;
        parts.push(format!("{} [{}]", suite.name(), o.detail));
    }
    Outcome { ok, detail: parts.join(" ") }
}

fn c8() -> Outcome {
    timed(None, || structural(&[3, 4], Kind::RationalQuaternion))
}

fn c9() -> Outcome {
    timed(None, || sweep(Suite::Commutative, &[2, 3, 4], 100, Kind::RationalComplex, &["ratio"]))
}

fn c10() -> Outcome {
    let expected = [1u128, 2, 9, 82, 1313];
    let values: Vec<u128> = (1..=5).map(|n| mu_count(n).unwrap()).collect();
    let counts: Vec<usize> = (2..=4).map(|n| enumerate_paths(n, 1, 1).unwrap().len()).collect();
    let census = run(Suite::Census, 5, 1, Kind::RationalQuaternion, &[]);
    Outcome {
        ok: values == expected
            && counts.iter().zip(&values[1..4]).all(|(&c, &mu)| c as u128 == mu)
            && clean(&census, &["recurrence", "enumeration"]),
        detail: format!("mu(1..5) = {values:?}, enumerated terms for n=2..4 = {counts:?}"),
    }
}

fn c11() -> Outcome {
    timed(None, || {
        if Tolerance::FLOAT.rel != 1e-9 {
            return Outcome {
                ok: false,
                detail: format!("float tolerance is {}", Tolerance::FLOAT.rel),
            };
        }
        let kind = Kind::F64Quaternion;
        let a = sweep(Suite::Thm33, &[3], 100, kind, &["expansion"]);
        let b = sweep(Suite::Moore, &[3], 100, kind, &["moore-is-delta", "moore-real"]);
        let c = structural(&[3], kind);
        Outcome {
            ok: a.ok && b.ok && c.ok,
            detail: format!("expansion [{}] moore [{}] structural {}", a.detail, b.detail, c.detail),
        }
    })
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("expansion of nu(A^ij)|A|_ij, exact, n=2,3,4", c1),
        ("golden symbolic expansions", c2),
        ("Delta = Moore on Hermitian, Moore real, n=2,3,4", c3),
        ("Study = Moore(AA*), n=1,2,3", c4),
        ("nu(AB)=nu(A)nu(B), nu(A)=Delta(A)Delta(A*)=Delta(AA*), recursive nu", c5),
        ("nu(D_IJ) ordering-free; Hermitian Delta = p(I)p(J)D_IJ over all pairs, n=3", c6),
        ("Gauss UDL reconstructs A, y1..yn = Delta, n=2,3,4", c7),
        ("structural identities and oracle, n=3,4", c8),
        ("commutative ratio |A|_pq det A^pq = (-1)^(p+q) det A, n=2,3,4", c9),
        ("monomial census", c10),
        ("float path at n=3, relative tolerance 1e-9", c11),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout();
    for (k, (title, f)) in criteria.iter().enumerate() {
        let o = f();
        let id = k + 1;
        let _ = writeln!(out, "criterion {id:>2} {}  {title}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        let _ = out.flush();
        if !o.ok {
            failed.push(id);
        }
    }
    let _ = writeln!(out, "acceptance: {} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        let _ = writeln!(out, "failing criteria: {failed:?}");
        std::process::exit(1);
    }
}

//! Matrix files and JSON encoding of scalar values.
//!
//! A matrix file is a JSON object
//!
//! ```text
//! {
//!   "scalar": "rational-quaternion",
//!   "n": 2,
//!   "entries": [
//!     [["1","0","0","0"],["0","1","0","0"]],
//!     [["0","0","1","0"],["-1/2","0","0","3"]]
//!   ]
//! }
//! ```
//!
//! Quaternion entries are 4-arrays, complex entries 2-arrays, and rational
//! entries bare strings. Rational components are strings of the form
//! `[+-]digits[/digits]` with a nonzero denominator; `f64` components are
//! JSON numbers. The canonical writer puts one matrix row per line and
//! prints rationals in lowest terms, so reading and rewriting a canonical
//! file reproduces it byte for byte.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use ncdet_core::{Complex, LabeledMatrix, Quaternion, Rational, Real, Scalar};
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

/// Scalar kinds accepted in matrix files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    RationalQuaternion,
    F64Quaternion,
    RationalComplex,
    Rational,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::RationalQuaternion => "rational-quaternion",
            Kind::F64Quaternion => "f64-quaternion",
            Kind::RationalComplex => "rational-complex",
            Kind::Rational => "rational",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        [Kind::RationalQuaternion, Kind::F64Quaternion, Kind::RationalComplex, Kind::Rational]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("field \"scalar\": unknown scalar kind \"{0}\"")]
    UnknownKind(String),

    #[error("field \"n\": order must be at least 1")]
    ZeroOrder,

    #[error("row count mismatch: n = {n} but \"entries\" has {rows} rows")]
    RowCount { n: usize, rows: usize },

    #[error("column count mismatch: n = {n} but row {row} has {cols} entries")]
    ColCount { n: usize, row: usize, cols: usize },

    #[error("entry ({row},{col}): {message}")]
    Entry { row: usize, col: usize, message: String },
}

/// Strict rational grammar: optional sign, digits, optional `/digits`, and a
/// nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(format!("invalid rational \"{s}\""));
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return Err(format!("zero denominator in \"{s}\""));
    }
    Rational::from_str(s).map_err(|e| format!("invalid rational \"{s}\": {e}"))
}

/// Real fields that can appear as scalar components in files and reports.
pub trait RealKind: Real {
    const QUATERNION: &'static str;
    const COMPLEX: &'static str;

    fn encode(&self) -> Value;

    fn decode(v: &Value) -> Result<Self, String>;

    /// Integers in `[−9, 9]` for exact fields, uniform on `[−9, 9]` for floats.
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self;
}

impl RealKind for Rational {
    const QUATERNION: &'static str = "rational-quaternion";
    const COMPLEX: &'static str = "rational-complex";

    fn encode(&self) -> Value {
        Value::String(self.to_string())
    }

    fn decode(v: &Value) -> Result<Self, String> {
        match v {
            Value::String(s) => parse_rational(s),
            other => Err(format!("expected a rational string, found {other}")),
        }
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        Rational::from(rng.random_range(-9i64..=9))
    }
}

impl RealKind for f64 {
    const QUATERNION: &'static str = "f64-quaternion";
    const COMPLEX: &'static str = "f64-complex";

    fn encode(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }

    fn decode(v: &Value) -> Result<Self, String> {
        v.as_f64().ok_or_else(|| format!("expected a number, found {v}"))
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        rng.random_range(-9.0..=9.0)
    }
}

/// Scalar kinds the command line can read, print and sample.
pub trait Element: Scalar {
    const NAME: &'static str;

    fn encode(&self) -> Value;

    fn decode(v: &Value) -> Result<Self, String>;

    fn encode_real(r: &Self::Real) -> Value;

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self;

    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> Self::Real;
}

fn decode_array<R: RealKind>(v: &Value, len: usize) -> Result<Vec<R>, String> {
    let items = v.as_array().ok_or_else(|| format!("expected an array of {len} components, found {v}"))?;
    if items.len() != len {
        return Err(format!("expected {len} components, found {}", items.len()));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| R::decode(x).map_err(|e| format!("component {}: {e}", k + 1)))
        .collect()
}

impl<R: RealKind> Element for Quaternion<R> {
    const NAME: &'static str = R::QUATERNION;

    fn encode(&self) -> Value {
        Value::Array(self.components().into_iter().map(R::encode).collect())
    }

    fn decode(v: &Value) -> Result<Self, String> {
        let mut c = decode_array::<R>(v, 4)?.into_iter();
        let mut next = || c.next().unwrap();
        Ok(Quaternion::new(next(), next(), next(), next()))
    }

    fn encode_real(r: &R) -> Value {
        r.encode()
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        Quaternion::new(R::sample(rng), R::sample(rng), R::sample(rng), R::sample(rng))
    }

    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> R {
        R::sample(rng)
    }
}

impl<R: RealKind> Element for Complex<R> {
    const NAME: &'static str = R::COMPLEX;

    fn encode(&self) -> Value {
        Value::Array(vec![self.re.encode(), self.im.encode()])
    }

    fn decode(v: &Value) -> Result<Self, String> {
        let mut c = decode_array::<R>(v, 2)?.into_iter();
        let re = c.next().unwrap();
        Ok(Complex::new(re, c.next().unwrap()))
    }

    fn encode_real(r: &R) -> Value {
        r.encode()
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let re = R::sample(rng);
        Complex::new(re, R::sample(rng))
    }

    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> R {
        R::sample(rng)
    }
}

impl Element for Rational {
    const NAME: &'static str = "rational";

    fn encode(&self) -> Value {
        RealKind::encode(self)
    }

    fn decode(v: &Value) -> Result<Self, String> {
        <Rational as RealKind>::decode(v)
    }

    fn encode_real(r: &Rational) -> Value {
        RealKind::encode(r)
    }

    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        <Rational as RealKind>::sample(rng)
    }

    fn sample_real<G: Rng + ?Sized>(rng: &mut G) -> Self {
        <Rational as RealKind>::sample(rng)
    }
}

/// A parsed matrix of any file kind.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    RationalQuaternion(LabeledMatrix<Quaternion<Rational>>),
    F64Quaternion(LabeledMatrix<Quaternion<f64>>),
    RationalComplex(LabeledMatrix<Complex<Rational>>),
    Rational(LabeledMatrix<Rational>),
}

/// Runs `$body` with `$a` bound to the typed matrix inside an [`AnyMatrix`].
#[macro_export]
macro_rules! with_matrix {
    ($m:expr, $a:ident => $body:expr) => {
        match $m {
            $crate::format::AnyMatrix::RationalQuaternion($a) => $body,
            $crate::format::AnyMatrix::F64Quaternion($a) => $body,
            $crate::format::AnyMatrix::RationalComplex($a) => $body,
            $crate::format::AnyMatrix::Rational($a) => $body,
        }
    };
}

impl AnyMatrix {
    pub fn kind(&self) -> Kind {
        match self {
            AnyMatrix::RationalQuaternion(_) => Kind::RationalQuaternion,
            AnyMatrix::F64Quaternion(_) => Kind::F64Quaternion,
            AnyMatrix::RationalComplex(_) => Kind::RationalComplex,
            AnyMatrix::Rational(_) => Kind::Rational,
        }
    }

    pub fn order(&self) -> usize {
        with_matrix!(self, a => a.order())
    }

    pub fn to_canonical(&self) -> String {
        with_matrix!(self, a => write_matrix(a))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    scalar: String,
    n: usize,
    entries: Vec<Vec<Value>>,
}

fn decode_grid<S: Element>(raw: &RawFile) -> Result<LabeledMatrix<S>, FormatError> {
    let mut data = Vec::with_capacity(raw.n * raw.n);
    for (r, row) in raw.entries.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            data.push(S::decode(v).map_err(|message| FormatError::Entry { row: r + 1, col: c + 1, message })?);
        }
    }
    let labels: Vec<usize> = (1..=raw.n).collect();
    Ok(LabeledMatrix::with_labels(labels.clone(), labels, data).expect("grid checked square"))
}

pub fn parse_matrix(text: &str) -> Result<AnyMatrix, FormatError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let kind = Kind::from_name(&raw.scalar).ok_or_else(|| FormatError::UnknownKind(raw.scalar.clone()))?;
    if raw.n == 0 {
        return Err(FormatError::ZeroOrder);
    }
    if raw.entries.len() != raw.n {
        return Err(FormatError::RowCount { n: raw.n, rows: raw.entries.len() });
    }
    if let Some((r, row)) = raw.entries.iter().enumerate().find(|(_, row)| row.len() != raw.n) {
        return Err(FormatError::ColCount { n: raw.n, row: r + 1, cols: row.len() });
    }
    Ok(match kind {
        Kind::RationalQuaternion => AnyMatrix::RationalQuaternion(decode_grid(&raw)?),
        Kind::F64Quaternion => AnyMatrix::F64Quaternion(decode_grid(&raw)?),
        Kind::RationalComplex => AnyMatrix::RationalComplex(decode_grid(&raw)?),
        Kind::Rational => AnyMatrix::Rational(decode_grid(&raw)?),
    })
}

pub fn read_matrix(path: &Path) -> Result<AnyMatrix, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_matrix(&text)
}

/// Canonical file text, one matrix row per line. Labels are not stored; a
/// file always describes labels `1..=n`.
pub fn write_matrix<S: Element>(a: &LabeledMatrix<S>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"scalar\": \"{}\",", S::NAME);
    let _ = writeln!(out, "  \"n\": {},", a.order());
    let _ = writeln!(out, "  \"entries\": [");
    let rows: Vec<String> = a
        .rows()
        .map(|row| {
            let cells: Vec<Value> = row.iter().map(S::encode).collect();
            format!("    {}", Value::Array(cells))
        })
        .collect();
    let _ = writeln!(out, "{}", rows.join(",\n"));
    let _ = writeln!(out, "  ]");
    let _ = writeln!(out, "}}");
    out
}

/// The matrix as a JSON object in file layout, for embedding in reports.
pub fn matrix_value<S: Element>(a: &LabeledMatrix<S>) -> Value {
    let entries: Vec<Value> = a.rows().map(|row| Value::Array(row.iter().map(S::encode).collect())).collect();
    serde_json::json!({ "scalar": S::NAME, "n": a.order(), "entries": entries })
}

/// Value printing: exact strings by default, `f64` numbers with `--float`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Printer {
    pub float: bool,
}

impl Printer {
    pub fn value<S: Element>(&self, x: &S) -> Value {
        if !self.float {
            return x.encode();
        }
        let parts = x.to_f64_components();
        if parts.len() == 1 {
            parts[0].encode()
        } else {
            Value::Array(parts.iter().map(RealKind::encode).collect())
        }
    }

    pub fn real<S: Element>(&self, r: &S::Real) -> Value {
        if self.float {
            r.to_f64().encode()
        } else {
            S::encode_real(r)
        }
    }
}

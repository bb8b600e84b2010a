// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Line-oriented `key = value` documents describing curves and audit inputs.
//!
//! ```text
//! # raw form
//! degree = 3
//! matrix = 5/4 0 0 1/10
//! seed = 1 -1
//! base = 0 0
//! ```
//!
//! The eigen form replaces `matrix` and `base` with `h`, `phi` and an
//! optional `gamma` (default `π/2`). Numbers are decimals or exact `p/q`
//! fractions, and are kept in the form they were written.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::curve::CurveSpec;
use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    /// `p/q` with `q > 0`; integers are `p/1`.
    Fraction(i64, i64),
    Decimal(f64),
}

impl Scalar {
    pub fn value(self) -> f64 {
        match self {
            Scalar::Fraction(p, q) => p as f64 / q as f64,
            Scalar::Decimal(x) => x,
        }
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Decimal(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Scalar::Fraction(p, 1) => write!(f, "{p}"),
            Scalar::Fraction(p, q) => write!(f, "{p}/{q}"),
            // Debug keeps a decimal point, so the value re-parses as a decimal.
            Scalar::Decimal(x) => write!(f, "{x:?}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let q: i64 = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if q <= 0 {
                return Err(format!("denominator must be positive in `{s}`"));
            }
            return Ok(Scalar::Fraction(p, q));
        }
        if let Ok(p) = s.parse::<i64>() {
            return Ok(Scalar::Fraction(p, 1));
        }
        match s.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Scalar::Decimal(x)),
            _ => Err(format!("`{s}` is not a finite number")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpecDocument {
    Raw {
        matrix: [Scalar; 4],
        seed: [Scalar; 2],
        degree: usize,
        base: [Scalar; 2],
    },
    Eigen {
        h: Scalar,
        phi: Scalar,
        gamma: Scalar,
        seed: [Scalar; 2],
        degree: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditDocument {
    /// 4 or 9 entries, row-major.
    pub matrix: Vec<Scalar>,
    pub vector: Option<Vec<Scalar>>,
    pub degree: Option<usize>,
}

impl AuditDocument {
    pub fn dimension(&self) -> usize {
        if self.matrix.len() == 9 { 3 } else { 2 }
    }
}

fn doc_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

struct Entries {
    map: BTreeMap<String, (usize, String)>,
}

impl Entries {
    fn parse(text: &str, allowed: &[&str]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| doc_error(line, "expected `key = value`"))?;
            let key = key.trim().to_ascii_lowercase();
            if !allowed.contains(&key.as_str()) {
                return Err(doc_error(line, format!("unknown key `{key}`")));
            }
            if map.insert(key.clone(), (line, value.trim().to_string())).is_some() {
                return Err(doc_error(line, format!("duplicate key `{key}`")));
            }
        }
        Ok(Entries { map })
    }

    fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    fn scalars(&self, key: &str) -> Result<Option<(usize, Vec<Scalar>)>> {
        let Some((line, value)) = self.map.get(key) else {
            return Ok(None);
        };
        let values = value
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<Scalar>().map_err(|m| doc_error(*line, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some((*line, values)))
    }

    fn fixed<const K: usize>(&self, key: &str) -> Result<Option<[Scalar; K]>> {
        match self.scalars(key)? {
            None => Ok(None),
            Some((line, v)) => v
                .try_into()
                .map(Some)
                .map_err(|_| doc_error(line, format!("`{key}` needs {K} numbers"))),
        }
    }

    fn required<const K: usize>(&self, key: &str) -> Result<[Scalar; K]> {
        self.fixed(key)?.ok_or_else(|| doc_error(0, format!("missing `{key}`")))
    }

    fn degree(&self) -> Result<Option<usize>> {
        let Some((line, value)) = self.map.get("degree") else {
            return Ok(None);
        };
        let n: usize = value
            .parse()
            .map_err(|_| doc_error(*line, "degree must be a non-negative integer"))?;
        if n < 2 {
            return Err(doc_error(*line, "degree must be at least 2"));
        }
        Ok(Some(n))
    }
}

const SPEC_KEYS: [&str; 7] = ["matrix", "seed", "degree", "base", "h", "phi", "gamma"];
const AUDIT_KEYS: [&str; 3] = ["matrix", "vector", "degree"];

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let e = Entries::parse(text, &SPEC_KEYS)?;
        let raw = e.has("matrix") || e.has("base");
        let eigen = e.has("h") || e.has("phi") || e.has("gamma");
        let seed = e.required::<2>("seed")?;
        let degree = e.degree()?.ok_or_else(|| doc_error(0, "missing `degree`"))?;
        match (raw, eigen) {
            (true, true) => Err(doc_error(0, "give either `matrix` or `h`/`phi`, not both")),
            (false, false) => Err(doc_error(0, "missing `matrix` (or `h` and `phi`)")),
            (true, false) => Ok(SpecDocument::Raw {
                matrix: e.required("matrix")?,
                seed,
                degree,
                base: e.fixed("base")?.unwrap_or([Scalar::Fraction(0, 1); 2]),
            }),
            (false, true) => Ok(SpecDocument::Eigen {
                h: e.required::<1>("h")?[0],
                phi: e.required::<1>("phi")?[0],
                gamma: e.fixed::<1>("gamma")?.map_or(Scalar::Decimal(std::f64::consts::FRAC_PI_2), |g| g[0]),
                seed,
                degree,
            }),
        }
    }

    /// Raw-form document holding the spec's values as decimals.
    pub fn from_spec(spec: &CurveSpec) -> Self {
        let m = spec.generator.to_row_major().map(Scalar::Decimal);
        SpecDocument::Raw {
            matrix: m,
            seed: [spec.seed.x.into(), spec.seed.y.into()],
            degree: spec.degree,
            base: [spec.base.x.into(), spec.base.y.into()],
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            SpecDocument::Raw { degree, .. } | SpecDocument::Eigen { degree, .. } => *degree,
        }
    }

    pub fn generator(&self) -> Result<Mat2> {
        match self {
            SpecDocument::Raw { matrix, .. } => {
                let [a, b, c, d] = matrix.map(Scalar::value);
                Ok(Mat2::new(a, b, c, d))
            }
            SpecDocument::Eigen { h, phi, gamma, .. } => Mat2::from_eigen_form(h.value(), phi.value(), gamma.value())
                .ok_or_else(|| Error::InvalidSpec("gamma must not be a multiple of π".into())),
        }
    }

    pub fn to_spec(&self) -> Result<CurveSpec> {
        let (seed, base) = match self {
            SpecDocument::Raw { seed, base, .. } => (seed, Some(base)),
            SpecDocument::Eigen { seed, .. } => (seed, None),
        };
        let seed = Vec2::new(seed[0].value(), seed[1].value());
        let base = base.map_or(Vec2::ZERO, |b| Vec2::new(b[0].value(), b[1].value()));
        CurveSpec::new(self.degree(), self.generator()?, seed, base)
    }
}

fn join(values: &[Scalar]) -> String {
    values.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecDocument::Raw { matrix, seed, degree, base } => {
                writeln!(f, "degree = {degree}")?;
                writeln!(f, "matrix = {}", join(matrix))?;
                writeln!(f, "seed = {}", join(seed))?;
                writeln!(f, "base = {}", join(base))
            }
            SpecDocument::Eigen { h, phi, gamma, seed, degree } => {
                writeln!(f, "degree = {degree}")?;
                writeln!(f, "h = {h}")?;
                writeln!(f, "phi = {phi}")?;
                writeln!(f, "gamma = {gamma}")?;
                writeln!(f, "seed = {}", join(seed))
            }
        }
    }
}

impl AuditDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let e = Entries::parse(text, &AUDIT_KEYS)?;
        let (line, matrix) = e.scalars("matrix")?.ok_or_else(|| doc_error(0, "missing `matrix`"))?;
        if matrix.len() != 4 && matrix.len() != 9 {
            return Err(doc_error(line, "`matrix` needs 4 or 9 numbers"));
        }
        let dim = if matrix.len() == 9 { 3 } else { 2 };
        let vector = match e.scalars("vector")? {
            Some((line, v)) if v.len() != dim => {
                return Err(doc_error(line, format!("`vector` needs {dim} numbers")));
            }
            other => other.map(|(_, v)| v),
        };
        Ok(AuditDocument {
            matrix,
            vector,
            degree: e.degree()?,
        })
    }
}

impl fmt::Display for AuditDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix = {}", join(&self.matrix))?;
        if let Some(v) = &self.vector {
            writeln!(f, "vector = {}", join(v))?;
        }
        if let Some(n) = self.degree {
            writeln!(f, "degree = {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_form_with_fractions() {
        let doc = SpecDocument::parse("# first example\ndegree = 3\nmatrix = 5/4 0 0 1/10\nseed = 1, -1\n").unwrap();
        let spec = doc.to_spec().unwrap();
        assert_eq!(spec.generator, Mat2::diag(1.25, 0.1));
        assert_eq!(spec.base, Vec2::ZERO);
        assert_eq!(SpecDocument::parse(&doc.to_string()).unwrap(), doc);
    }

    #[test]
    fn eigen_form_defaults_gamma() {
        let doc = SpecDocument::parse("h = 1.8\nphi = 0.925\nseed = 0.4 0.1\ndegree = 7").unwrap();
        let m = doc.generator().unwrap();
        let r = Mat2::scaled_rotation(1.8, 0.925);
        assert!((m - r).max_abs() < 1e-15);
    }

    #[test]
    fn decimals_stay_decimals() {
        assert_eq!("3.0".parse::<Scalar>(), Ok(Scalar::Decimal(3.0)));
        assert_eq!(Scalar::Decimal(3.0).to_string(), "3.0");
        assert_eq!("-7/2".parse::<Scalar>(), Ok(Scalar::Fraction(-7, 2)));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("inf".parse::<Scalar>().is_err());
    }

    #[test]
    fn malformed_documents() {
        let cases = [
            "degree = 3\nseed = 1 0",
            "degree = 3\nmatrix = 1 0 0\nseed = 1 0",
            "degree = 1\nmatrix = 1 0 0 1\nseed = 1 0",
            "degree = 3\nmatrix = 1 0 0 1\nh = 2\nphi = 1\nseed = 1 0",
            "degree = 3\nmatrix = 1 0 0 1\nseed = 1 0\nseed = 1 0",
            "degree = 3\nmatrix = 1 0 0 1\nseed = 1 0\ncolour = red",
            "degree = 3\nmatrix = 1 0 0 x\nseed = 1 0",
            "degree three",
        ];
        for text in cases {
            assert!(matches!(SpecDocument::parse(text), Err(Error::Parse { .. })), "{text}");
        }
    }

    #[test]
    fn audit_document() {
        let doc = AuditDocument::parse("matrix = 1.2545 -2.9594 1.5576 2.3836\nvector = 0.9724 0.2333").unwrap();
        assert_eq!(doc.dimension(), 2);
        assert_eq!(AuditDocument::parse(&doc.to_string()).unwrap(), doc);
        assert!(AuditDocument::parse("matrix = 1 0 0 1\nvector = 1 2 3").is_err());
        assert!(AuditDocument::parse("matrix = 1 0 0 1 0").is_err());
    }
}

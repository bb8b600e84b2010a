// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Curvature monotonicity: sufficient conditions and a numerical oracle.
//!
//! Each `check_*` function evaluates one sufficient condition and reports it
//! as a [`Certificate`], including the quantities that enter the inequality.
//! Conditions that do not apply to the generator's spectral variant report
//! `holds = false` with a reason. [`numeric_monotonicity`] samples the
//! closed-form derivative and is the ground truth the certificates are
//! tested against.

use std::fmt;

use crate::closed_form::{build_model, dkappa, kappa_closed, CurvatureModel};
use crate::curve::CurveSpec;
use crate::error::{Error, Result};
use crate::linalg::{decompose, seed_coordinates, Mat2, SeedCoordinates, SpectralData, Vec2};

pub const DEFAULT_GRID: usize = 2001;
pub const MIN_GRID: usize = 101;
/// Bisection stops once the bracket is this narrow in `t`.
pub const ROOT_TOL: f64 = 1e-10;
/// `|κ′| ≤ DEAD_BAND·max|κ|` counts as zero when reading signs.
pub const DEAD_BAND: f64 = 1e-12;
/// Relative slack on non-strict inequalities.
const SLACK: f64 = 1e-12;
const SYMMETRY_TOL: f64 = 1e-12;
const ROTATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateName {
    /// Symmetric generator, `σ1 ≥ 1`, `2σ2 ≥ σ1 + 1`.
    CaoWang,
    /// Positive real eigenvalues with `σ1 + σ2 ≥ 2` and `|μ1| ≥ |μ2| > 0`.
    PositiveRealSeed,
    /// Defective generator with `σ ≥ 1`, `μ1μ2 ≥ 0`, `μ2 ≠ 0`.
    Jordan,
    /// Scaled rotation with `h > 1/cosφ` or `0 < h < cosφ`.
    TypicalMineur,
    /// Complex pair, bound on `|cos γ|` valid for every degree.
    ComplexGeneral,
    /// Complex pair, bound on `|cos γ|` for one degree.
    ComplexDegree,
}

impl CertificateName {
    pub const ALL: [CertificateName; 6] = [
        CertificateName::CaoWang,
        CertificateName::PositiveRealSeed,
        CertificateName::Jordan,
        CertificateName::TypicalMineur,
        CertificateName::ComplexGeneral,
        CertificateName::ComplexDegree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CertificateName::CaoWang => "CaoWang",
            CertificateName::PositiveRealSeed => "PositiveRealSeed",
            CertificateName::Jordan => "Jordan",
            CertificateName::TypicalMineur => "TypicalMineur",
            CertificateName::ComplexGeneral => "ComplexGeneral",
            CertificateName::ComplexDegree => "ComplexDegree",
        }
    }
}

impl fmt::Display for CertificateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Direction a certificate guarantees, stated relative to the sign of `κ(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    DecreasingIfKappa0Positive,
    IncreasingIfKappa0Positive,
    NotApplicable,
}

impl Direction {
    /// Monotonicity of `κ` itself implied for a given `κ(0)`.
    pub fn implied_kind(self, kappa0: f64) -> Option<MonotoneKind> {
        let positive = kappa0 > 0.0;
        match self {
            Direction::DecreasingIfKappa0Positive if positive => Some(MonotoneKind::MonotoneDecreasing),
            Direction::DecreasingIfKappa0Positive => Some(MonotoneKind::MonotoneIncreasing),
            Direction::IncreasingIfKappa0Positive if positive => Some(MonotoneKind::MonotoneIncreasing),
            Direction::IncreasingIfKappa0Positive => Some(MonotoneKind::MonotoneDecreasing),
            Direction::NotApplicable => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::DecreasingIfKappa0Positive => "decreasing-if-kappa0-positive",
            Direction::IncreasingIfKappa0Positive => "increasing-if-kappa0-positive",
            Direction::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub name: CertificateName,
    pub holds: bool,
    pub direction: Direction,
    pub details: Vec<(String, f64)>,
    /// Why the certificate does not apply, when it does not.
    pub reason: Option<String>,
}

impl Certificate {
    fn new(name: CertificateName) -> Self {
        Certificate {
            name,
            holds: false,
            direction: Direction::NotApplicable,
            details: Vec::new(),
            reason: None,
        }
    }

    fn not_applicable(name: CertificateName, reason: impl Into<String>) -> Self {
        Certificate {
            reason: Some(reason.into()),
            ..Certificate::new(name)
        }
    }

    fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.push((key.to_string(), value));
        self
    }

    fn verdict(mut self, holds: bool, direction: Direction) -> Self {
        self.holds = holds;
        self.direction = if holds { direction } else { Direction::NotApplicable };
        self
    }

    pub fn quantity(&self, key: &str) -> Option<f64> {
        self.details.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneKind {
    MonotoneDecreasing,
    MonotoneIncreasing,
    NonMonotone,
    DegenerateLine,
}

impl MonotoneKind {
    pub fn is_monotone(self) -> bool {
        matches!(self, MonotoneKind::MonotoneDecreasing | MonotoneKind::MonotoneIncreasing)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MonotoneKind::MonotoneDecreasing => "monotone-decreasing",
            MonotoneKind::MonotoneIncreasing => "monotone-increasing",
            MonotoneKind::NonMonotone => "non-monotone",
            MonotoneKind::DegenerateLine => "degenerate-line",
        }
    }
}

impl fmt::Display for MonotoneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityVerdict {
    pub kind: MonotoneKind,
    /// Parameters where `κ′` changes sign.
    pub extrema_locations: Vec<f64>,
    pub grid_size: usize,
}

fn ge(a: f64, b: f64) -> bool {
    a >= b - SLACK * a.abs().max(b.abs()).max(1.0)
}

fn le(a: f64, b: f64) -> bool {
    ge(b, a)
}

/// Symmetric generator with `σ1 ≥ σ2 > 0`, `σ1 ≥ 1`, `2σ2 ≥ σ1 + 1`.
pub fn check_cao_wang(m: Mat2) -> Certificate {
    let cert = Certificate::new(CertificateName::CaoWang);
    let scale = m.max_abs().max(1.0);
    let asym = (m.m12 - m.m21).abs();
    let cert = cert.detail("asymmetry", asym);
    if asym > SYMMETRY_TOL * scale {
        return Certificate {
            reason: Some("generator is not symmetric".into()),
            ..cert
        };
    }
    let SpectralData::RealDiagonalizable { sigma1, sigma2, .. } = decompose(m) else {
        return Certificate {
            reason: Some("eigenvalues are not real with an eigenbasis".into()),
            ..cert
        };
    };
    let cert = cert.detail("sigma1", sigma1).detail("sigma2", sigma2);
    let holds = sigma2 > 0.0 && ge(sigma1, 1.0) && ge(2.0 * sigma2, sigma1 + 1.0);
    cert.verdict(holds, Direction::DecreasingIfKappa0Positive)
}

/// `σ1 ≥ σ2 > 0`, `σ1 + σ2 ≥ 2` and `|μ1| ≥ |μ2| > 0` in the unit eigenbasis.
pub fn check_positive_real(m: Mat2, w: Vec2) -> Certificate {
    let name = CertificateName::PositiveRealSeed;
    let spectral = decompose(m);
    let SpectralData::RealDiagonalizable { sigma1, sigma2, v2, .. } = spectral else {
        return Certificate::not_applicable(name, "eigenvalues are not real with an eigenbasis");
    };
    if spectral.is_scalar() {
        return Certificate::not_applicable(name, "generator is a multiple of the identity");
    }
    let Ok(SeedCoordinates::Real { mu1, mu2 }) = seed_coordinates(&spectral, w) else {
        return Certificate::not_applicable(name, "zero seed");
    };
    let cert = Certificate::new(name)
        .detail("sigma1", sigma1)
        .detail("sigma2", sigma2)
        .detail("sigma_sum_minus_2", sigma1 + sigma2 - 2.0)
        .detail("mu1", mu1)
        .detail("mu2", mu2);
    let mu2_nonzero = mu2.abs() > SLACK * w.norm() / v2.norm();
    let holds = sigma2 > 0.0 && ge(sigma1 + sigma2, 2.0) && ge(mu1.abs(), mu2.abs()) && mu2_nonzero;
    cert.verdict(holds, Direction::DecreasingIfKappa0Positive)
}

/// Defective generator with `σ ≥ 1`, `μ1μ2 ≥ 0`, `μ2 ≠ 0` in the orthogonal
/// Jordan basis.
pub fn check_jordan(m: Mat2, w: Vec2) -> Certificate {
    let name = CertificateName::Jordan;
    let spectral = decompose(m);
    let SpectralData::Defective { sigma, v1, v2 } = spectral else {
        return Certificate::not_applicable(name, "generator is not defective");
    };
    let Ok(SeedCoordinates::Real { mu1, mu2 }) = seed_coordinates(&spectral, w) else {
        return Certificate::not_applicable(name, "zero seed");
    };
    let cert = Certificate::new(name)
        .detail("sigma", sigma)
        .detail("mu1", mu1)
        .detail("mu2", mu2)
        .detail("mu1_mu2", mu1 * mu2);
    let product_scale = w.norm_sq() / (v1.norm() * v2.norm());
    let mu2_nonzero = mu2.abs() > SLACK * w.norm() / v2.norm();
    let holds = ge(sigma, 1.0) && mu1 * mu2 >= -SLACK * product_scale && mu2_nonzero;
    cert.verdict(holds, Direction::DecreasingIfKappa0Positive)
}

/// `(h, φ)` if `m` is `h` times a rotation by `φ` (to relative tolerance).
pub fn as_scaled_rotation(m: Mat2) -> Option<(f64, f64)> {
    let scale = m.max_abs();
    if scale == 0.0 {
        return None;
    }
    if (m.m11 - m.m22).abs() > ROTATION_TOL * scale || (m.m12 + m.m21).abs() > ROTATION_TOL * scale {
        return None;
    }
    let (c, s) = (0.5 * (m.m11 + m.m22), 0.5 * (m.m21 - m.m12));
    Some((c.hypot(s), s.atan2(c)))
}

/// Scaled rotation with `|φ| < π/2`, `φ ≠ 0`, and `h > 1/cosφ` or `0 < h < cosφ`.
pub fn check_typical(m: Mat2) -> Certificate {
    let name = CertificateName::TypicalMineur;
    let Some((h, phi)) = as_scaled_rotation(m) else {
        return Certificate::not_applicable(name, "generator is not a scaled rotation");
    };
    let cert = Certificate::new(name)
        .detail("h", h)
        .detail("phi", phi)
        .detail("cos_phi", phi.cos())
        .detail("sec_phi", 1.0 / phi.cos());
    let scale = m.max_abs();
    if phi.abs() >= std::f64::consts::FRAC_PI_2 || (h * phi.sin()).abs() <= ROTATION_TOL * scale {
        return Certificate {
            reason: Some("rotation angle outside (−π/2, π/2) \\ {0}".into()),
            ..cert
        };
    }
    let c = phi.cos();
    if h * c > 1.0 {
        cert.verdict(true, Direction::DecreasingIfKappa0Positive)
    } else if h > 0.0 && h < c {
        cert.verdict(true, Direction::IncreasingIfKappa0Positive)
    } else {
        cert.verdict(false, Direction::NotApplicable)
    }
}

fn complex_data(m: Mat2) -> Option<(f64, f64, f64)> {
    match decompose(m) {
        SpectralData::ComplexPair { h, phi, gamma, .. } => Some((h, phi, gamma)),
        _ => None,
    }
}

/// Degree-free bound pair on `|cos γ|`: `(expanding, contracting)` branches.
pub fn complex_general_bounds(h: f64, phi: f64) -> (f64, f64) {
    let (s, c) = phi.sin_cos();
    let a = h * c - 1.0;
    let b = c - h;
    (
        a / (a * a + 9.0 * h * h * s * s).sqrt(),
        b / (b * b + 9.0 * s * s).sqrt(),
    )
}

/// Degree-`n` bound pair on `|cos γ|`.
pub fn complex_degree_bounds(h: f64, phi: f64, n: usize) -> (f64, f64) {
    let (s, c) = phi.sin_cos();
    let (np, nm) = (n as f64 + 1.0, n as f64 - 1.0);
    let a = h * c - 1.0;
    let b = c - h;
    (
        np * a / (np * np * a * a + 9.0 * nm * nm * h * h * s * s).sqrt(),
        np * b / (np * np * b * b + 9.0 * nm * nm * s * s).sqrt(),
    )
}

/// Complex pair whose eigenvector parts are close enough to orthogonal.
/// Independent of the seed.
pub fn check_complex_general(m: Mat2) -> Certificate {
    let name = CertificateName::ComplexGeneral;
    let Some((h, phi, gamma)) = complex_data(m) else {
        return Certificate::not_applicable(name, "eigenvalues are not a complex pair");
    };
    let (upper, lower) = complex_general_bounds(h, phi);
    let cg = gamma.cos().abs();
    let cert = Certificate::new(name)
        .detail("h", h)
        .detail("phi", phi)
        .detail("abs_cos_gamma", cg)
        .detail("bound_expanding", upper)
        .detail("bound_contracting", lower);
    if cg < upper {
        cert.verdict(true, Direction::DecreasingIfKappa0Positive)
    } else if cg < lower {
        cert.verdict(true, Direction::IncreasingIfKappa0Positive)
    } else {
        cert.verdict(false, Direction::NotApplicable)
    }
}

/// As [`check_complex_general`] but for one degree, with non-strict bounds.
pub fn check_complex_degree(m: Mat2, n: usize) -> Certificate {
    let name = CertificateName::ComplexDegree;
    if n < 2 {
        return Certificate::not_applicable(name, "degree below 2");
    }
    let Some((h, phi, gamma)) = complex_data(m) else {
        return Certificate::not_applicable(name, "eigenvalues are not a complex pair");
    };
    let (upper, lower) = complex_degree_bounds(h, phi, n);
    let cg = gamma.cos().abs();
    let cert = Certificate::new(name)
        .detail("degree", n as f64)
        .detail("h", h)
        .detail("phi", phi)
        .detail("abs_cos_gamma", cg)
        .detail("bound_expanding", upper)
        .detail("bound_contracting", lower);
    if le(cg, upper) {
        cert.verdict(true, Direction::DecreasingIfKappa0Positive)
    } else if le(cg, lower) {
        cert.verdict(true, Direction::IncreasingIfKappa0Positive)
    } else {
        cert.verdict(false, Direction::NotApplicable)
    }
}

/// Every certificate for `spec`, in [`CertificateName::ALL`] order.
pub fn certify(spec: &CurveSpec) -> Vec<Certificate> {
    let degenerate = build_model(spec).map(|m| m.degenerate).unwrap_or(true);
    if degenerate {
        return CertificateName::ALL
            .iter()
            .map(|&n| Certificate::not_applicable(n, "curve is a line segment"))
            .collect();
    }
    let (m, w) = (spec.generator, spec.seed);
    vec![
        check_cao_wang(m),
        check_positive_real(m, w),
        check_jordan(m, w),
        check_typical(m),
        check_complex_general(m),
        check_complex_degree(m, spec.degree),
    ]
}

fn bisect_root(model: &CurvatureModel, mut lo: f64, mut hi: f64, lo_sign: f64) -> Result<f64> {
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        let d = dkappa(model, mid)?;
        if d == 0.0 {
            return Ok(mid);
        }
        if d.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Read the sign pattern of `κ′` on a uniform grid and locate sign changes.
pub fn numeric_monotonicity(spec: &CurveSpec, grid: usize) -> Result<MonotonicityVerdict> {
    if grid < MIN_GRID {
        return Err(Error::InvalidSpec(format!("grid must have at least {MIN_GRID} points")));
    }
    let model = build_model(spec)?;
    if model.degenerate {
        return Err(Error::DegenerateLine);
    }
    monotonicity_of_model(&model, grid)
}

/// [`numeric_monotonicity`] for an already-built model.
pub fn monotonicity_of_model(model: &CurvatureModel, grid: usize) -> Result<MonotonicityVerdict> {
    let ts: Vec<f64> = (0..grid).map(|i| i as f64 / (grid - 1) as f64).collect();
    let mut kmax: f64 = 0.0;
    let mut derivs = Vec::with_capacity(grid);
    for &t in &ts {
        kmax = kmax.max(kappa_closed(model, t)?.abs());
        derivs.push(dkappa(model, t)?);
    }
    if kmax == 0.0 {
        return Err(Error::DegenerateLine);
    }
    let band = DEAD_BAND * kmax;
    let mut extrema = Vec::new();
    let mut last: Option<(usize, f64)> = None;
    let mut overall = 0.0;
    for (i, &d) in derivs.iter().enumerate() {
        if d.abs() <= band {
            continue;
        }
        let sign = d.signum();
        if let Some((j, prev)) = last {
            if prev != sign {
                extrema.push(bisect_root(model, ts[j], ts[i], prev)?);
            }
        } else {
            overall = sign;
        }
        last = Some((i, sign));
    }
    let kind = if !extrema.is_empty() {
        MonotoneKind::NonMonotone
    } else if overall > 0.0 {
        MonotoneKind::MonotoneIncreasing
    } else if overall < 0.0 {
        MonotoneKind::MonotoneDecreasing
    } else if kappa_closed(model, 1.0)? > model.kappa0 {
        MonotoneKind::MonotoneIncreasing
    } else {
        MonotoneKind::MonotoneDecreasing
    };
    Ok(MonotonicityVerdict {
        kind,
        extrema_locations: extrema,
        grid_size: grid,
    })
}

/// Eigenvalues `σk/σk(t)` of the generator of the arc over `[t, 1]`.
pub fn right_quotient_eigenvalues(sigma1: f64, sigma2: f64, t: f64) -> (f64, f64) {
    (
        sigma1 / (1.0 - t + t * sigma1),
        sigma2 / (1.0 - t + t * sigma2),
    )
}

/// `σ1 + σ2 ≥ 2`.
pub fn eigenvalue_sum_condition(sigma1: f64, sigma2: f64) -> bool {
    sigma1 + sigma2 - 2.0 >= 0.0
}

/// `2σ1σ2 − σ1 − σ2 ≥ 0`.
pub fn stronger_condition(sigma1: f64, sigma2: f64) -> bool {
    2.0 * sigma1 * sigma2 - sigma1 - sigma2 >= 0.0
}

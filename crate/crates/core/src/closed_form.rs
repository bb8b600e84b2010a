// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form curvature and its derivative.
//!
//! Reparameterising the arc over `[0, t]` by subdivision turns the generator
//! into `T = (1 − t)𝕀 + tM` and the seed into `t·w`, which gives
//!
//! ```text
//! κ(t) = κ(0) · (σ1(t)·σ2(t))^{n−2} · ‖w‖³ / ‖T^{n−1}·w‖³
//! ```
//!
//! with `σk(t) = 1 − t + t·σk`. The derivative is evaluated with a separate
//! formula for each spectral variant, written in the eigen (or Jordan)
//! coordinates of the seed.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::curve::{CurveSpec, SPEED_TOL};
use crate::error::{Error, Result};
use crate::linalg::{
    decompose, pencil_eigenvalue, seed_coordinates, subdivision_matrix, ComplexScalar,
    SeedCoordinates, SpectralData, Vec2,
};

/// Seeds with `|det(w, Mw)| ≤ DEGENERATE_TOL·‖w‖·‖Mw‖` generate a straight segment.
pub const DEGENERATE_TOL: f64 = 1e-14;

/// Closed-form curvature evaluator for one [`CurveSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureModel {
    pub spec: CurveSpec,
    pub spectral: SpectralData,
    pub coords: SeedCoordinates,
    pub kappa0: f64,
    /// The curve is a line segment and every curvature query returns zero.
    pub degenerate: bool,
}

/// Ingredients of the complex-case derivative at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDerivativeTerms {
    /// `(h cosφ − 1)(1 − t) + t(h² − h cosφ)`, half the derivative of `|σ(t)|²`.
    pub drift: f64,
    /// `z(t) = e^{iθ}·e^{i·2(n−1)·φ(t)}`.
    pub phase: ComplexScalar,
    /// Argument of `μ²`.
    pub theta: f64,
    /// Argument of `σ(t)`.
    pub phi_t: f64,
    /// `|σ(t)|`.
    pub mod_sigma_t: f64,
}

impl CurvatureModel {
    pub fn degree(&self) -> usize {
        self.spec.degree
    }

    pub fn kappa(&self, t: f64) -> Result<f64> {
        kappa_closed(self, t)
    }

    pub fn dkappa(&self, t: f64) -> Result<f64> {
        dkappa(self, t)
    }
}

/// Decompose the generator, express the seed in its basis and compute `κ(0)`.
pub fn build_model(spec: &CurveSpec) -> Result<CurvatureModel> {
    let spectral = decompose(spec.generator);
    let coords = seed_coordinates(&spectral, spec.seed)?;
    let n = spec.degree as f64;
    let factor = (n - 1.0) / n;
    let w = spec.seed;
    let nw3 = w.norm().powi(3);
    let mw = spec.generator.apply(w);

    let kappa0 = match (spectral, coords) {
        (SpectralData::RealDiagonalizable { sigma1, sigma2, v1, v2 }, SeedCoordinates::Real { mu1, mu2 }) => {
            factor * mu1 * mu2 * (sigma2 - sigma1) * v1.cross(v2) / nw3
        }
        (SpectralData::Defective { v1, v2, .. }, SeedCoordinates::Real { mu2, .. }) => {
            -factor * mu2 * mu2 * v1.cross(v2) / nw3
        }
        (SpectralData::ComplexPair { .. }, _) => factor * w.cross(mw) / nw3,
        _ => unreachable!("seed coordinates follow the spectral variant"),
    };

    let collinear = w.cross(mw).abs() <= DEGENERATE_TOL * w.norm() * mw.norm();
    let degenerate = spectral.is_scalar() || kappa0 == 0.0 || collinear;
    Ok(CurvatureModel {
        spec: *spec,
        spectral,
        coords,
        kappa0: if degenerate { 0.0 } else { kappa0 },
        degenerate,
    })
}

/// `T^{n−1}·w` by repeated application, with the largest intermediate norm.
fn pencil_power(spec: &CurveSpec, t: f64, k: usize) -> (Vec2, f64) {
    let pencil = subdivision_matrix(spec.generator, t);
    let mut v = spec.seed;
    let mut largest = v.norm();
    for _ in 0..k {
        v = pencil.apply(v);
        largest = largest.max(v.norm());
    }
    (v, largest)
}

fn end_speed(model: &CurvatureModel, t: f64) -> Result<(Vec2, f64)> {
    let (v, largest) = pencil_power(&model.spec, t, model.degree() - 1);
    let norm = v.norm();
    if norm == 0.0 || norm <= SPEED_TOL * largest {
        return Err(Error::VanishingSpeed { t });
    }
    Ok((v, norm))
}

/// `κ(t)` from the closed form.
pub fn kappa_closed(model: &CurvatureModel, t: f64) -> Result<f64> {
    if model.degenerate {
        return Ok(0.0);
    }
    if t == 0.0 {
        return Ok(model.kappa0);
    }
    let n = model.degree() as i32;
    let (_, norm) = end_speed(model, t)?;
    let ratio = model.spec.seed.norm() / norm;
    match model.spectral {
        SpectralData::ComplexPair { h, phi, .. } => {
            // Polar accumulation: |σ(t)|^{2(n−2)}·(‖w‖/‖T^{n−1}w‖)³ in log space.
            let modulus = pencil_eigenvalue(h, phi, t).norm();
            let log = 2.0 * (n - 2) as f64 * modulus.ln() + 3.0 * ratio.ln();
            Ok(model.kappa0 * log.exp())
        }
        spectral => {
            let s = spectral.pencil_product(t);
            Ok(model.kappa0 * s.powi(n - 2) * ratio.powi(3))
        }
    }
}

/// `κ′(t)`, split by spectral variant.
pub fn dkappa(model: &CurvatureModel, t: f64) -> Result<f64> {
    if model.degenerate {
        return Ok(0.0);
    }
    let n = model.degree();
    let nf = n as f64;
    let (_, norm) = end_speed(model, t)?;
    let w3 = model.spec.seed.norm().powi(3);
    let k0 = model.kappa0;

    match (model.spectral, model.coords) {
        (SpectralData::RealDiagonalizable { sigma1, sigma2, .. }, SeedCoordinates::Real { mu1, mu2 }) => {
            let a = 1.0 - t + t * sigma1;
            let b = 1.0 - t + t * sigma2;
            let s = a * b;
            if s == 0.0 {
                return dkappa_general(model, t);
            }
            let ds = (sigma1 + sigma2 - 2.0) * (1.0 - t) + (2.0 * sigma1 * sigma2 - sigma1 - sigma2) * t;
            let m2 = 2 * (n as i32 - 1);
            let bracket = -(nf + 1.0) * ds * norm * norm
                - 3.0 * (nf - 1.0) * (sigma1 - sigma2) * (mu1 * mu1 * a.powi(m2) - mu2 * mu2 * b.powi(m2));
            Ok(k0 * w3 / (2.0 * norm.powi(5)) * s.powi(n as i32 - 3) * bracket)
        }
        (SpectralData::Defective { sigma, v1, v2 }, SeedCoordinates::Real { mu1, mu2 }) => {
            let st = 1.0 - t + t * sigma;
            if st == 0.0 {
                return dkappa_general(model, t);
            }
            let (n1, n2) = (v1.norm_sq(), v2.norm_sq());
            let lead = mu1 * st + mu2 * (nf - 1.0) * t;
            let q = lead * lead * n1 + (mu2 * st).powi(2) * n2;
            let inner = (nf + 1.0) * (sigma - 1.0) / q.powf(1.5)
                + 3.0 * mu2 * (nf - 1.0) * lead * n1 / q.powf(2.5);
            Ok(-k0 * w3 / st.powi(n as i32 - 1) * inner)
        }
        (SpectralData::ComplexPair { h, phi, v_re, v_im, gamma }, SeedCoordinates::Complex { mu }) => {
            let terms = complex_terms(model, t)?;
            let vv = v_re.norm_sq() + v_im.norm_sq();
            let log_pref = (4.0 * nf - 8.0) * terms.mod_sigma_t.ln() - 5.0 * norm.ln();
            let prefactor = 2.0 * k0 * vv * w3 * mu.norm_sqr() * log_pref.exp();
            Ok(prefactor * complex_bracket(&terms, n, h, phi, gamma))
        }
        _ => unreachable!("seed coordinates follow the spectral variant"),
    }
}

/// Bracketed factor of the complex-case derivative; its sign relative to
/// `κ(0)` decides monotonicity.
pub fn complex_bracket(terms: &ComplexDerivativeTerms, n: usize, h: f64, phi: f64, gamma: f64) -> f64 {
    let nf = n as f64;
    let cg = gamma.cos();
    (nf + 1.0) * (-1.0 + cg * terms.phase.im) * terms.drift
        + 3.0 * (nf - 1.0) * h * cg * phi.sin() * terms.phase.re
}

/// Populate [`ComplexDerivativeTerms`] at `t`.
pub fn complex_terms(model: &CurvatureModel, t: f64) -> Result<ComplexDerivativeTerms> {
    let (SpectralData::ComplexPair { h, phi, .. }, SeedCoordinates::Complex { mu }) =
        (model.spectral, model.coords)
    else {
        return Err(Error::WrongVariant {
            expected: "complex-pair",
        });
    };
    let n = model.degree() as f64;
    let st = pencil_eigenvalue(h, phi, t);
    let theta = (mu * mu).arg();
    let phi_t = st.arg();
    let angle = (theta + 2.0 * (n - 1.0) * phi_t).rem_euclid(2.0 * PI);
    Ok(ComplexDerivativeTerms {
        drift: (h * phi.cos() - 1.0) * (1.0 - t) + t * (h * h - h * phi.cos()),
        phase: Complex64::from_polar(1.0, angle),
        theta,
        phi_t,
        mod_sigma_t: st.norm(),
    })
}

/// Variant-free derivative straight from the pencil:
/// `κ′ = κ(0)‖w‖³ s^{n−3}/(2N⁵)·(2(n−2)N²s′ − 3s(N²)′)` with `s = det T`,
/// `N = ‖T^{n−1}w‖` and `(N²)′ = 2(n−1)·T^{n−1}w · T^{n−2}(M − 𝕀)w`.
///
/// Distributed so that `s = 0` is harmless.
pub fn dkappa_general(model: &CurvatureModel, t: f64) -> Result<f64> {
    if model.degenerate {
        return Ok(0.0);
    }
    let spec = &model.spec;
    let n = spec.degree;
    let nf = n as f64;
    let pencil = subdivision_matrix(spec.generator, t);
    let (end, norm) = end_speed(model, t)?;
    let mut tail = spec.generator.shift(1.0).apply(spec.seed);
    for _ in 0..(n - 2) {
        tail = pencil.apply(tail);
    }
    let dn2 = 2.0 * (nf - 1.0) * end.dot(tail);
    let s = pencil.det();
    // d/dt det T with T′ = M − 𝕀.
    let slope = spec.generator.shift(1.0);
    let ds = slope.m11 * pencil.m22 + slope.m22 * pencil.m11 - slope.m12 * pencil.m21 - slope.m21 * pencil.m12;
    let first = if n >= 3 {
        2.0 * (nf - 2.0) * norm * norm * ds * s.powi(n as i32 - 3)
    } else {
        0.0
    };
    let second = 3.0 * s.powi(n as i32 - 2) * dn2;
    Ok(model.kappa0 * spec.seed.norm().powi(3) / (2.0 * norm.powi(5)) * (first - second))
}

// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact-size 2×2 linear algebra.
//!
//! Everything the curvature formulas need from the generator matrix lives
//! here: classification of the eigenstructure into one of three variants
//! (two real eigenvalues with an eigenbasis, a single defective eigenvalue
//! with an orthogonal Jordan basis, or a complex conjugate pair), the
//! coordinates of the seed vector in that basis, and the two matrix pencils
//! produced by subdividing the curve.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalars (`σ = h·e^{iφ}`, seed coordinate `μ`, phase `z(t)`).
pub type ComplexScalar = Complex64;

/// Relative width of the band around `Δ = 0` treated as a repeated eigenvalue.
pub const DISCRIMINANT_TOL: f64 = 1e-10;

/// A planar vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// `det(self, other)`, the signed area of the parallelogram.
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Linear interpolation `(1 − t)·self + t·other`.
    #[inline]
    pub fn lerp(self, other: Vec2, t: f64) -> Vec2 {
        Vec2::new(
            (1.0 - t) * self.x + t * other.x,
            (1.0 - t) * self.y + t * other.y,
        )
    }

    fn normalized(self) -> Vec2 {
        self * (1.0 / self.norm())
    }

    /// Flip the sign so that the first nonzero component is positive.
    fn canonical_sign(self) -> Vec2 {
        let lead = if self.x != 0.0 { self.x } else { self.y };
        if lead < 0.0 {
            -self
        } else {
            self
        }
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

/// A real 2×2 matrix, stored by entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);

    /// Row-major constructor.
    #[inline]
    pub const fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub const fn diag(a: f64, b: f64) -> Self {
        Mat2::new(a, 0.0, 0.0, b)
    }

    /// Matrix with the given columns.
    pub fn from_columns(c1: Vec2, c2: Vec2) -> Self {
        Mat2::new(c1.x, c2.x, c1.y, c2.y)
    }

    /// `h` times the counterclockwise rotation by `phi`.
    pub fn scaled_rotation(h: f64, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Mat2::new(h * c, -h * s, h * s, h * c)
    }

    /// `P·hR(φ)·P⁻¹` with `P = [(1, 0), (cos γ, sin γ)]`: eigenvalues `h·e^{±iφ}`,
    /// eigenvector parts of equal length at angle `γ`. `None` when `sin γ = 0`.
    pub fn from_eigen_form(h: f64, phi: f64, gamma: f64) -> Option<Self> {
        let (sg, cg) = gamma.sin_cos();
        if sg.abs() < 1e-12 {
            return None;
        }
        let p = Mat2::new(1.0, cg, 0.0, sg);
        let p_inv = Mat2::new(sg, -cg, 0.0, 1.0) * (1.0 / sg);
        Some(p * Mat2::scaled_rotation(h, phi) * p_inv)
    }

    pub fn to_row_major(self) -> [f64; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn is_finite(self) -> bool {
        self.to_row_major().iter().all(|v| v.is_finite())
    }

    #[inline]
    pub fn trace(self) -> f64 {
        self.m11 + self.m22
    }

    #[inline]
    pub fn det(self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// `trace² − 4·det`.
    pub fn discriminant(self) -> f64 {
        // (m11 − m22)² + 4·m12·m21 avoids cancelling the trace² term.
        let d = self.m11 - self.m22;
        d * d + 4.0 * self.m12 * self.m21
    }

    pub fn transpose(self) -> Mat2 {
        Mat2::new(self.m11, self.m21, self.m12, self.m22)
    }

    /// Largest absolute entry.
    pub fn max_abs(self) -> f64 {
        self.to_row_major().iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(self) -> f64 {
        self.to_row_major().iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn col1(self) -> Vec2 {
        Vec2::new(self.m11, self.m21)
    }

    pub fn col2(self) -> Vec2 {
        Vec2::new(self.m12, self.m22)
    }

    pub fn row1(self) -> Vec2 {
        Vec2::new(self.m11, self.m12)
    }

    pub fn row2(self) -> Vec2 {
        Vec2::new(self.m21, self.m22)
    }

    #[inline]
    pub fn apply(self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.m11 * v.x + self.m12 * v.y,
            self.m21 * v.x + self.m22 * v.y,
        )
    }

    pub fn inverse(self) -> Option<Mat2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let inv = 1.0 / det;
        Some(Mat2::new(
            self.m22 * inv,
            -self.m12 * inv,
            -self.m21 * inv,
            self.m11 * inv,
        ))
    }

    /// `self − s·𝕀`.
    pub fn shift(self, s: f64) -> Mat2 {
        Mat2::new(self.m11 - s, self.m12, self.m21, self.m22 - s)
    }

    pub fn powi(self, k: u32) -> Mat2 {
        (0..k).fold(Mat2::IDENTITY, |acc, _| acc * self)
    }

    /// Eigenvalues of the matrix as complex numbers, larger real part first
    /// (or positive imaginary part first for a complex pair).
    pub fn eigenvalues(self) -> [ComplexScalar; 2] {
        match decompose(self) {
            SpectralData::RealDiagonalizable { sigma1, sigma2, .. } => {
                [Complex64::new(sigma1, 0.0), Complex64::new(sigma2, 0.0)]
            }
            SpectralData::Defective { sigma, .. } => {
                [Complex64::new(sigma, 0.0), Complex64::new(sigma, 0.0)]
            }
            SpectralData::ComplexPair { h, phi, .. } => {
                let s = Complex64::from_polar(h, phi);
                [s, s.conj()]
            }
        }
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 + rhs.m11,
            self.m12 + rhs.m12,
            self.m21 + rhs.m21,
            self.m22 + rhs.m22,
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;
    fn mul(self, v: Vec2) -> Vec2 {
        self.apply(v)
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: f64) -> Mat2 {
        Mat2::new(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)
    }
}

/// Classified eigenstructure of a 2×2 generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralData {
    /// Two real eigenvalues `sigma1 ≥ sigma2` with unit eigenvectors.
    ///
    /// A scalar matrix `σ𝕀` lands here with `sigma1 == sigma2` and the
    /// standard basis; see [`SpectralData::is_scalar`].
    RealDiagonalizable {
        sigma1: f64,
        sigma2: f64,
        v1: Vec2,
        v2: Vec2,
    },
    /// A single eigenvalue with one eigenvector `v1` (unit) and a Jordan
    /// partner `v2` orthogonal to it with `(M − σ𝕀)·v2 = v1`.
    Defective { sigma: f64, v1: Vec2, v2: Vec2 },
    /// Eigenvalue `σ = h·e^{iφ}` (`φ > 0`) with eigenvector `v_re + i·v_im`,
    /// normalized so that `‖v_re‖ = ‖v_im‖`; `gamma` is the angle between
    /// the two parts.
    ComplexPair {
        h: f64,
        phi: f64,
        v_re: Vec2,
        v_im: Vec2,
        gamma: f64,
    },
}

impl SpectralData {
    /// Matrix is a multiple of the identity: every seed is an eigenvector.
    pub fn is_scalar(&self) -> bool {
        matches!(self, SpectralData::RealDiagonalizable { sigma1, sigma2, .. } if sigma1 == sigma2)
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            SpectralData::RealDiagonalizable { .. } => "real-diagonalizable",
            SpectralData::Defective { .. } => "defective",
            SpectralData::ComplexPair { .. } => "complex-pair",
        }
    }

    /// Product `σ1(t)·σ2(t)` of the eigenvalues of `(1 − t)𝕀 + tM`.
    pub fn pencil_product(&self, t: f64) -> f64 {
        match *self {
            SpectralData::RealDiagonalizable { sigma1, sigma2, .. } => {
                (1.0 - t + t * sigma1) * (1.0 - t + t * sigma2)
            }
            SpectralData::Defective { sigma, .. } => {
                let s = 1.0 - t + t * sigma;
                s * s
            }
            SpectralData::ComplexPair { h, phi, .. } => {
                pencil_eigenvalue(h, phi, t).norm_sqr()
            }
        }
    }
}

/// `σ(t) = 1 − t + t·σ` for `σ = h·e^{iφ}`.
pub fn pencil_eigenvalue(h: f64, phi: f64, t: f64) -> ComplexScalar {
    Complex64::new(1.0 - t, 0.0) + Complex64::from_polar(h, phi) * t
}

/// Coordinates of the seed vector in the basis of [`SpectralData`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeedCoordinates {
    /// `w = mu1·v1 + mu2·v2` (eigenbasis or Jordan basis).
    Real { mu1: f64, mu2: f64 },
    /// `w = μ·v + conj(μ·v)`.
    Complex { mu: ComplexScalar },
}

impl SeedCoordinates {
    /// Argument of `μ²` for the complex variant.
    pub fn theta(&self) -> Option<f64> {
        match self {
            SeedCoordinates::Complex { mu } => Some((mu * mu).arg()),
            SeedCoordinates::Real { .. } => None,
        }
    }

    pub fn real(&self) -> Option<(f64, f64)> {
        match *self {
            SeedCoordinates::Real { mu1, mu2 } => Some((mu1, mu2)),
            SeedCoordinates::Complex { .. } => None,
        }
    }
}

/// Unit vector spanning the kernel of a rank-one matrix, taken orthogonal to
/// its dominant row.
fn kernel_direction(n: Mat2) -> Vec2 {
    let (r1, r2) = (n.row1(), n.row2());
    let row = if r1.norm_sq() >= r2.norm_sq() { r1 } else { r2 };
    Vec2::new(-row.y, row.x).normalized().canonical_sign()
}

/// Classify the eigenstructure of `m`.
///
/// The variant follows the sign of `Δ = trace² − 4·det`, with
/// `|Δ| ≤ 1e−10·max(1, trace²)` treated as a repeated eigenvalue. Within that
/// band an exactly scalar matrix is reported as diagonalizable with the
/// standard basis; everything else becomes a Jordan block.
pub fn decompose(m: Mat2) -> SpectralData {
    let tr = m.trace();
    let disc = m.discriminant();
    let scale = m.max_abs().max(1.0);

    if disc.abs() <= DISCRIMINANT_TOL * (tr * tr).max(1.0) {
        let sigma = 0.5 * tr;
        let nil = m.shift(sigma);
        if nil.max_abs() <= 1e-12 * scale {
            return SpectralData::RealDiagonalizable {
                sigma1: sigma,
                sigma2: sigma,
                v1: Vec2::new(1.0, 0.0),
                v2: Vec2::new(0.0, 1.0),
            };
        }
        // For nilpotent N = M − σ𝕀 = v1·rᵀ the range and the kernel coincide,
        // so the dominant column gives the eigenvector. The least-norm
        // solution of N·x = v1 is r/‖r‖² with r = Nᵀ·v1, which is already
        // orthogonal to v1 when N² = 0; the projection removes rounding.
        let (c1, c2) = (nil.col1(), nil.col2());
        let col = if c1.norm_sq() >= c2.norm_sq() { c1 } else { c2 };
        let v1 = col.normalized().canonical_sign();
        let r = nil.transpose().apply(v1);
        let x = r * (1.0 / r.norm_sq());
        let v2 = x - v1 * x.dot(v1);
        return SpectralData::Defective { sigma, v1, v2 };
    }

    if disc > 0.0 {
        let root = disc.sqrt();
        // Stable pair: the larger-magnitude root first, the other via det/root.
        let big = 0.5 * (tr + root.copysign(tr));
        let small = if big != 0.0 { m.det() / big } else { -big };
        let (sigma1, sigma2) = if big >= small { (big, small) } else { (small, big) };
        let v1 = kernel_direction(m.shift(sigma1));
        let v2 = kernel_direction(m.shift(sigma2));
        return SpectralData::RealDiagonalizable {
            sigma1,
            sigma2,
            v1,
            v2,
        };
    }

    let sigma = Complex64::new(0.5 * tr, 0.5 * (-disc).sqrt());
    // Kernel of M − σ𝕀 from its dominant row (a, b): u = (−b, a).
    let r1 = [Complex64::new(m.m11, 0.0) - sigma, Complex64::new(m.m12, 0.0)];
    let r2 = [Complex64::new(m.m21, 0.0), Complex64::new(m.m22, 0.0) - sigma];
    let row_norm = |r: &[Complex64; 2]| r[0].norm_sqr() + r[1].norm_sqr();
    let row = if row_norm(&r1) >= row_norm(&r2) { r1 } else { r2 };
    let u = [-row[1], row[0]];
    // Rotating u by e^{iψ} multiplies the bilinear square u·u by e^{2iψ}.
    // Choosing 2ψ = π/2 − arg(u·u) makes (e^{iψ}u)·(e^{iψ}u) purely imaginary,
    // i.e. ‖Re v‖² − ‖Im v‖² = 0.
    let square = u[0] * u[0] + u[1] * u[1];
    let psi = 0.5 * (FRAC_PI_2 - square.arg());
    let rot = Complex64::from_polar(1.0, psi);
    let v = [u[0] * rot, u[1] * rot];
    let mut v_re = Vec2::new(v[0].re, v[1].re);
    let mut v_im = Vec2::new(v[0].im, v[1].im);
    let unit = 1.0 / v_re.norm().max(v_im.norm());
    v_re = v_re * unit;
    v_im = v_im * unit;
    if v_re.canonical_sign() != v_re {
        v_re = -v_re;
        v_im = -v_im;
    }
    let cos_gamma = (v_re.dot(v_im) / (v_re.norm() * v_im.norm())).clamp(-1.0, 1.0);
    SpectralData::ComplexPair {
        h: sigma.norm(),
        phi: sigma.arg(),
        v_re,
        v_im,
        gamma: cos_gamma.acos(),
    }
}

/// Coordinates of `w` in the basis carried by `spectral`.
pub fn seed_coordinates(spectral: &SpectralData, w: Vec2) -> Result<SeedCoordinates> {
    if w.norm() == 0.0 {
        return Err(Error::ZeroSeed);
    }
    match *spectral {
        SpectralData::RealDiagonalizable { v1, v2, .. } | SpectralData::Defective { v1, v2, .. } => {
            let det = v1.cross(v2);
            Ok(SeedCoordinates::Real {
                mu1: w.cross(v2) / det,
                mu2: v1.cross(w) / det,
            })
        }
        SpectralData::ComplexPair { v_re, v_im, .. } => {
            // w = 2·Re(μ·v) = 2(a·v_re − b·v_im) for μ = a + ib.
            let half = w * 0.5;
            let neg_im = -v_im;
            let det = v_re.cross(neg_im);
            let a = half.cross(neg_im) / det;
            let b = v_re.cross(half) / det;
            Ok(SeedCoordinates::Complex {
                mu: Complex64::new(a, b),
            })
        }
    }
}

/// `(1 − t)𝕀 + tM`, the generator of the arc over `[0, t]`.
pub fn subdivision_matrix(m: Mat2, t: f64) -> Mat2 {
    Mat2::new(
        1.0 - t + t * m.m11,
        t * m.m12,
        t * m.m21,
        1.0 - t + t * m.m22,
    )
}

/// `M·T⁻¹`, the generator of the arc over `[t, 1]`.
pub fn right_quotient_matrix(m: Mat2, t: f64) -> Result<Mat2> {
    let pencil = subdivision_matrix(m, t);
    let scale = pencil.max_abs().max(1.0);
    if pencil.det().abs() <= 1e-14 * scale * scale {
        return Err(Error::SingularSubdivision { t });
    }
    let inv = pencil.inverse().ok_or(Error::SingularSubdivision { t })?;
    Ok(m * inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn residual(m: Mat2, s: f64, v: Vec2) -> f64 {
        (m.apply(v) - v * s).norm()
    }

    #[test]
    fn diagonal_example_classifies_as_real() {
        let m = Mat2::diag(1.25, 0.1);
        match decompose(m) {
            SpectralData::RealDiagonalizable { sigma1, sigma2, v1, v2 } => {
                assert_eq!((sigma1, sigma2), (1.25, 0.1));
                assert_eq!(v1, Vec2::new(1.0, 0.0));
                assert_eq!(v2, Vec2::new(0.0, 1.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shear_gives_expected_jordan_basis() {
        let m = Mat2::new(1.0, 0.0, 1.0, 1.0);
        assert_eq!(
            decompose(m),
            SpectralData::Defective {
                sigma: 1.0,
                v1: Vec2::new(0.0, 1.0),
                v2: Vec2::new(1.0, 0.0)
            }
        );
        // (1/2, −2; 0, 1/2) has basis v1 = (1, 0), v2 = (0, −1/2).
        let SpectralData::Defective { sigma, v1, v2 } = decompose(Mat2::new(0.5, -2.0, 0.0, 0.5))
        else {
            panic!()
        };
        assert_eq!(sigma, 0.5);
        assert_eq!(v1, Vec2::new(1.0, 0.0));
        assert!((v2 - Vec2::new(0.0, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn scaled_rotation_is_complex_with_orthogonal_parts() {
        let m = Mat2::scaled_rotation(1.8, 0.925);
        let SpectralData::ComplexPair { h, phi, v_re, v_im, gamma } = decompose(m) else {
            panic!()
        };
        assert!((h - 1.8).abs() < 1e-14);
        assert!((phi.abs() - 0.925).abs() < 1e-14);
        assert!((gamma - PI / 2.0).abs() < 1e-12);
        assert!((v_re.norm() - v_im.norm()).abs() < 1e-12);
    }

    #[test]
    fn scalar_matrix_is_flagged() {
        let s = decompose(Mat2::diag(2.0, 2.0));
        assert!(s.is_scalar());
        assert!(!decompose(Mat2::new(2.0, 1.0, 0.0, 2.0)).is_scalar());
    }

    #[test]
    fn singular_generator_still_classifies() {
        let s = decompose(Mat2::new(1.0, 2.0, 2.0, 4.0));
        let SpectralData::RealDiagonalizable { sigma1, sigma2, .. } = s else { panic!() };
        assert!((sigma1 - 5.0).abs() < 1e-14);
        assert!(sigma2.abs() < 1e-14);
    }

    #[test]
    fn eigen_residuals_are_small() {
        let m = Mat2::new(1.5, -3.0 * 3f64.sqrt() / 4.0, 0.0, 0.75);
        let SpectralData::RealDiagonalizable { sigma1, sigma2, v1, v2 } = decompose(m) else {
            panic!()
        };
        assert!(residual(m, sigma1, v1) < 1e-14);
        assert!(residual(m, sigma2, v2) < 1e-14);
    }

    #[test]
    fn seed_coordinates_standard_basis() {
        let s = decompose(Mat2::diag(1.25, 0.1));
        let c = seed_coordinates(&s, Vec2::new(1.0, -1.0)).unwrap();
        assert_eq!(c, SeedCoordinates::Real { mu1: 1.0, mu2: -1.0 });
        assert_eq!(seed_coordinates(&s, Vec2::ZERO), Err(Error::ZeroSeed));
    }

    #[test]
    fn seed_coordinates_of_example_three() {
        let r3 = 3f64.sqrt();
        let m = Mat2::new(1.5, -3.0 * r3 / 4.0, 0.0, 0.75);
        let s = decompose(m);
        let w = Vec2::new(2.0 - r3, -1.0);
        let (mu1, mu2) = seed_coordinates(&s, w).unwrap().real().unwrap();
        // v2 is stored as (√3/2, 1/2) (sign convention), so μ2 = −2.
        assert!((mu1 - 2.0).abs() < 1e-14);
        assert!((mu2.abs() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn complex_seed_reconstructs() {
        let m = Mat2::new(2.0 * 3f64.sqrt() - 1.0, -5.0 / 3f64.sqrt(), 3f64.sqrt(), 2.0 * 3f64.sqrt() + 1.0);
        let s = decompose(m);
        let SpectralData::ComplexPair { v_re, v_im, .. } = s else { panic!() };
        let w = Vec2::new(4.0, 0.0);
        let SeedCoordinates::Complex { mu } = seed_coordinates(&s, w).unwrap() else { panic!() };
        let back = (v_re * mu.re - v_im * mu.im) * 2.0;
        assert!((back - w).norm() < 1e-13);
    }

    #[test]
    fn subdivision_pencils() {
        let m = Mat2::new(0.3, -1.2, 2.5, 0.7);
        assert_eq!(subdivision_matrix(m, 0.0), Mat2::IDENTITY);
        assert_eq!(subdivision_matrix(m, 1.0), m);
        let t = subdivision_matrix(Mat2::diag(2.0, 0.5), 0.75);
        assert_eq!(t, Mat2::diag(1.75, 0.625));

        let q = right_quotient_matrix(Mat2::diag(2.0, 0.5), 0.75).unwrap();
        assert!((q.m11 - 8.0 / 7.0).abs() < 1e-15);
        assert!((q.m22 - 0.8).abs() < 1e-15);
        assert_eq!(right_quotient_matrix(m, 0.0).unwrap(), m);
        assert_eq!(right_quotient_matrix(Mat2::IDENTITY, 0.4).unwrap(), Mat2::IDENTITY);
    }

    #[test]
    fn singular_pencil_is_rejected() {
        // σ = −1 makes 1 − t + tσ vanish at t = 1/2.
        let m = Mat2::diag(-1.0, 2.0);
        assert!(matches!(
            right_quotient_matrix(m, 0.5),
            Err(Error::SingularSubdivision { .. })
        ));
    }
}

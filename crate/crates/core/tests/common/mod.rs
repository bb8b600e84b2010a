// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Random instance generators and independent oracles shared by the
//! integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;

use classa::certify::{complex_degree_bounds, complex_general_bounds, Direction};
use classa::{build_model, CurveSpec, Mat2, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit(angle: f64) -> Vec2 {
    Vec2::new(angle.cos(), angle.sin())
}

pub fn signed(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let x = r.gen_range(lo..hi);
    if r.gen_bool(0.5) { x } else { -x }
}

pub fn random_vec(r: &mut impl Rng, scale: f64) -> Vec2 {
    unit(r.gen_range(0.0..2.0 * PI)) * r.gen_range(0.2 * scale..scale)
}

/// `P·D·P⁻¹` for columns `c1`, `c2`.
pub fn similar(c1: Vec2, c2: Vec2, d: Mat2) -> Mat2 {
    let p = Mat2::from_columns(c1, c2);
    p * d * p.inverse().unwrap()
}

/// Conformal change of frame: rotation by `a` and scaling by `s`.
pub fn conformal(m: Mat2, a: f64, s: f64) -> Mat2 {
    let r = Mat2::scaled_rotation(s, a);
    r * m * r.inverse().unwrap()
}

fn accept(spec: CurveSpec) -> Option<CurveSpec> {
    let model = build_model(&spec).ok()?;
    let w = spec.seed;
    let mw = spec.generator.apply(w);
    let sin = w.cross(mw).abs() / (w.norm() * mw.norm());
    (!model.degenerate && sin > 1e-3).then_some(spec)
}

fn retry(r: &mut ChaCha8Rng, mut f: impl FnMut(&mut ChaCha8Rng) -> Option<CurveSpec>) -> CurveSpec {
    loop {
        if let Some(s) = f(r) {
            return s;
        }
    }
}

/// Two distinct positive real eigenvalues.
pub fn real_spec(r: &mut ChaCha8Rng) -> CurveSpec {
    retry(r, |r| {
        let s1: f64 = r.gen_range(0.2..3.0);
        let s2: f64 = r.gen_range(0.2..3.0);
        if (s1 - s2).abs() < 0.05 {
            return None;
        }
        let a = r.gen_range(0.0..PI);
        let b = a + r.gen_range(0.3..PI - 0.3);
        let m = similar(unit(a), unit(b), Mat2::diag(s1, s2));
        accept(CurveSpec::new(r.gen_range(2..=8), m, random_vec(r, 2.0), random_vec(r, 1.0)).ok()?)
    })
}

/// A double positive eigenvalue with a single eigenvector.
pub fn defective_spec(r: &mut ChaCha8Rng) -> CurveSpec {
    retry(r, |r| {
        let s = r.gen_range(0.2..3.0);
        let a = r.gen_range(0.0..2.0 * PI);
        let c = signed(r, 0.2, 2.0);
        let m = similar(unit(a), unit(a + PI / 2.0) * (1.0 / c), Mat2::new(s, 1.0, 0.0, s));
        accept(CurveSpec::new(r.gen_range(2..=8), m, random_vec(r, 2.0), random_vec(r, 1.0)).ok()?)
    })
}

/// A complex pair `h·e^{±iφ}`.
pub fn complex_spec(r: &mut ChaCha8Rng) -> CurveSpec {
    retry(r, |r| {
        let h = r.gen_range(0.3..2.5);
        let phi = r.gen_range(0.1..2.5);
        let gamma = r.gen_range(0.3..PI - 0.3);
        let m = conformal(Mat2::from_eigen_form(h, phi, gamma)?, r.gen_range(0.0..2.0 * PI), r.gen_range(0.5..2.0));
        accept(CurveSpec::new(r.gen_range(2..=8), m, random_vec(r, 2.0), random_vec(r, 1.0)).ok()?)
    })
}

pub fn any_spec(r: &mut ChaCha8Rng) -> CurveSpec {
    match r.gen_range(0..3) {
        0 => real_spec(r),
        1 => defective_spec(r),
        _ => complex_spec(r),
    }
}

/// Instance satisfying one certificate's hypotheses, with the direction the
/// certificate promises.
pub struct Instance {
    pub spec: CurveSpec,
    pub direction: Direction,
}

/// Symmetric, `σ1 ≥ 1`, `2σ2 ≥ σ1 + 1`.
pub fn cao_wang_instance(r: &mut ChaCha8Rng) -> Instance {
    let spec = retry(r, |r| {
        let s1: f64 = r.gen_range(1.0..4.0);
        let s2 = r.gen_range((s1 + 1.0) / 2.0..s1);
        let a = r.gen_range(0.0..PI);
        let m = similar(unit(a), unit(a + PI / 2.0), Mat2::diag(s1, s2));
        let m = Mat2::new(m.m11, 0.5 * (m.m12 + m.m21), 0.5 * (m.m12 + m.m21), m.m22);
        accept(CurveSpec::at_origin(r.gen_range(2..=8), m, random_vec(r, 2.0)).ok()?)
    });
    Instance { spec, direction: Direction::DecreasingIfKappa0Positive }
}

/// Positive eigenvalues with `σ1 + σ2 ≥ 2` and `|μ1| ≥ |μ2| > 0` in unit eigenvectors.
pub fn positive_real_instance(r: &mut ChaCha8Rng) -> Instance {
    let spec = retry(r, |r| {
        let s2: f64 = r.gen_range(0.05..3.0);
        let s1 = r.gen_range(s2.max(2.0 - s2)..4.0);
        if s1 - s2 < 1e-3 {
            return None;
        }
        let a = r.gen_range(0.0..PI);
        let b = a + r.gen_range(0.2..PI - 0.2);
        let (v1, v2) = (unit(a), unit(b));
        let mu2 = signed(r, 0.1, 2.0);
        let mu1 = signed(r, 1.0, 3.0) * mu2.abs();
        let m = similar(v1, v2, Mat2::diag(s1, s2));
        accept(CurveSpec::at_origin(r.gen_range(2..=8), m, v1 * mu1 + v2 * mu2).ok()?)
    });
    Instance { spec, direction: Direction::DecreasingIfKappa0Positive }
}

/// Defective with `σ ≥ 1` and `μ1μ2 ≥ 0`, `μ2 ≠ 0` in an orthogonal Jordan basis.
pub fn jordan_instance(r: &mut ChaCha8Rng) -> Instance {
    let spec = retry(r, |r| {
        let s = r.gen_range(1.0..3.0);
        let a = r.gen_range(0.0..2.0 * PI);
        let c = signed(r, 0.2, 3.0);
        let (v1, v2) = (unit(a), unit(a + PI / 2.0) * (1.0 / c));
        let m = similar(v1, v2, Mat2::new(s, 1.0, 0.0, s));
        let mu2 = signed(r, 0.1, 3.0);
        let mu1 = r.gen_range(0.0..3.0) * mu2.signum();
        accept(CurveSpec::at_origin(r.gen_range(2..=8), m, v1 * mu1 + v2 * mu2).ok()?)
    });
    Instance { spec, direction: Direction::DecreasingIfKappa0Positive }
}

/// Scaled rotation with `h > 1/cosφ` or `0 < h < cosφ`.
pub fn typical_instance(r: &mut ChaCha8Rng) -> Instance {
    let expanding = r.gen_bool(0.5);
    let spec = retry(r, |r| {
        let phi = signed(r, 0.05, PI / 2.0 - 0.05);
        let c = phi.cos();
        let h = if expanding {
            r.gen_range(1.0 / c..1.0 / c + 3.0) * (1.0 + 1e-9)
        } else {
            r.gen_range(0.05 * c..c) * (1.0 - 1e-9)
        };
        accept(CurveSpec::at_origin(r.gen_range(2..=8), Mat2::scaled_rotation(h, phi), random_vec(r, 2.0)).ok()?)
    });
    let direction = if expanding {
        Direction::DecreasingIfKappa0Positive
    } else {
        Direction::IncreasingIfKappa0Positive
    };
    Instance { spec, direction }
}

fn complex_instance_with(
    r: &mut ChaCha8Rng,
    bounds: impl Fn(f64, f64, usize) -> (f64, f64),
) -> Instance {
    let expanding = r.gen_bool(0.5);
    let spec = retry(r, |r| {
        let h = if expanding { r.gen_range(1.0..4.0) } else { r.gen_range(0.05..1.0) };
        let phi = r.gen_range(0.05..PI / 2.0);
        let n = r.gen_range(2..=8);
        let (up, down) = bounds(h, phi, n);
        let bound = if expanding { up } else { down };
        if bound <= 1e-6 {
            return None;
        }
        let cg = r.gen_range(-bound..bound) * (1.0 - 1e-9);
        let m = Mat2::from_eigen_form(h, phi, cg.acos())?;
        let m = conformal(m, r.gen_range(0.0..2.0 * PI), r.gen_range(0.5..2.0));
        accept(CurveSpec::at_origin(n, m, random_vec(r, 2.0)).ok()?)
    });
    let direction = if expanding {
        Direction::DecreasingIfKappa0Positive
    } else {
        Direction::IncreasingIfKappa0Positive
    };
    Instance { spec, direction }
}

/// Complex pair with `|cos γ|` below the degree-free bound.
pub fn complex_general_instance(r: &mut ChaCha8Rng) -> Instance {
    complex_instance_with(r, |h, phi, _| complex_general_bounds(h, phi))
}

/// Complex pair with `|cos γ|` below the bound for the sampled degree.
pub fn complex_degree_instance(r: &mut ChaCha8Rng) -> Instance {
    complex_instance_with(r, complex_degree_bounds)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Bernstein-form evaluation, independent of de Casteljau.
pub fn bernstein_point(points: &[Vec2], t: f64) -> Vec2 {
    let n = points.len() - 1;
    points.iter().enumerate().fold(Vec2::ZERO, |acc, (i, p)| {
        acc + *p * (binomial(n, i) * t.powi(i as i32) * (1.0 - t).powi((n - i) as i32))
    })
}

/// Control points of the arc over `[0, t]` by the blossom formula
/// `l_i = Σ_j C(i, j) t^j (1 − t)^{i−j} b_j`; the `[t, 1]` arc mirrors it.
pub fn blossom_halves(points: &[Vec2], t: f64) -> (Vec<Vec2>, Vec<Vec2>) {
    let n = points.len() - 1;
    let left = (0..=n)
        .map(|i| {
            (0..=i).fold(Vec2::ZERO, |acc, j| {
                acc + points[j] * (binomial(i, j) * t.powi(j as i32) * (1.0 - t).powi((i - j) as i32))
            })
        })
        .collect();
    let right = (0..=n)
        .map(|i| {
            (i..=n).fold(Vec2::ZERO, |acc, j| {
                acc + points[j] * (binomial(n - i, j - i) * t.powi((j - i) as i32) * (1.0 - t).powi((n - j) as i32))
            })
        })
        .collect();
    (left, right)
}

/// Curvature from the Bernstein forms of the first two derivatives.
pub fn bernstein_curvature(points: &[Vec2], t: f64) -> f64 {
    let n = points.len() - 1;
    let d1: Vec<Vec2> = points.windows(2).map(|w| (w[1] - w[0]) * n as f64).collect();
    let d2: Vec<Vec2> = d1.windows(2).map(|w| (w[1] - w[0]) * (n - 1) as f64).collect();
    let v = bernstein_point(&d1, t);
    let a = if d2.is_empty() { Vec2::ZERO } else { bernstein_point(&d2, t) };
    v.cross(a) / v.norm().powi(3)
}

pub fn max_dist(a: &[Vec2], b: &[Vec2]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (*p - *q).norm()).fold(0.0, f64::max)
}

// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Bézier curves whose control-polygon edges are generated by a matrix.
//!
//! A [`CurveSpec`] is the generative recipe: degree `n`, generator `M`, seed
//! `w` and base point `b0`. Its control polygon has edges
//! `b_{j+1} − b_j = M^j·w`. Evaluation and differentiation go through de
//! Casteljau on the polygon and its hodographs, so everything here is exact
//! polynomial arithmetic with no step sizes.

use crate::error::{Error, Result};
use crate::linalg::{right_quotient_matrix, subdivision_matrix, Mat2, Vec2};

/// Speeds at or below this fraction of the polygon scale count as zero.
pub const SPEED_TOL: f64 = 1e-14;

/// Generative recipe of a matrix-generated Bézier curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSpec {
    pub degree: usize,
    pub generator: Mat2,
    pub seed: Vec2,
    pub base: Vec2,
}

impl CurveSpec {
    pub fn new(degree: usize, generator: Mat2, seed: Vec2, base: Vec2) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidSpec(format!("degree must be at least 2, got {degree}")));
        }
        if !generator.is_finite() || !seed.is_finite() || !base.is_finite() {
            return Err(Error::InvalidSpec("non-finite entry".into()));
        }
        if seed.norm() == 0.0 {
            return Err(Error::ZeroSeed);
        }
        Ok(CurveSpec {
            degree,
            generator,
            seed,
            base,
        })
    }

    /// Spec based at the origin.
    pub fn at_origin(degree: usize, generator: Mat2, seed: Vec2) -> Result<Self> {
        CurveSpec::new(degree, generator, seed, Vec2::ZERO)
    }

    /// Edges `M^j·w` for `j = 0 … n−1`.
    pub fn edges(&self) -> Vec<Vec2> {
        std::iter::successors(Some(self.seed), |e| Some(self.generator.apply(*e)))
            .take(self.degree)
            .collect()
    }

    pub fn polygon(&self) -> ControlPolygon {
        generate_polygon(self)
    }
}

/// Control points `b_0 … b_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlPolygon {
    pub points: Vec<Vec2>,
}

/// Point, first and second derivative, and signed curvature at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub t: f64,
    pub point: Vec2,
    pub d1: Vec2,
    pub d2: Vec2,
    pub kappa: f64,
}

/// Accumulate the edges of `spec` from its base point.
pub fn generate_polygon(spec: &CurveSpec) -> ControlPolygon {
    let mut points = Vec::with_capacity(spec.degree + 1);
    points.push(spec.base);
    let mut cur = spec.base;
    for edge in spec.edges() {
        cur = cur + edge;
        points.push(cur);
    }
    ControlPolygon { points }
}

fn de_casteljau(points: &[Vec2], t: f64) -> Vec2 {
    let mut work = points.to_vec();
    let n = work.len();
    for level in 1..n {
        for i in 0..(n - level) {
            work[i] = work[i].lerp(work[i + 1], t);
        }
    }
    work[0]
}

impl ControlPolygon {
    pub fn new(points: Vec<Vec2>) -> Self {
        ControlPolygon { points }
    }

    pub fn degree(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    /// Largest edge length; tolerances are taken relative to it.
    pub fn scale(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1] - w[0]).norm())
            .fold(0.0, f64::max)
    }

    pub fn evaluate(&self, t: f64) -> Vec2 {
        // Endpoints are returned verbatim.
        if t == 0.0 {
            return self.points[0];
        }
        if t == 1.0 {
            return *self.points.last().expect("nonempty polygon");
        }
        de_casteljau(&self.points, t)
    }

    /// Exact `c′(t)` and `c″(t)` from the first and second hodographs.
    pub fn derivatives(&self, t: f64) -> (Vec2, Vec2) {
        let n = self.degree();
        let first: Vec<Vec2> = self
            .points
            .windows(2)
            .map(|w| (w[1] - w[0]) * n as f64)
            .collect();
        let d1 = de_casteljau(&first, t);
        if n < 2 {
            return (d1, Vec2::ZERO);
        }
        let second: Vec<Vec2> = first
            .windows(2)
            .map(|w| (w[1] - w[0]) * (n - 1) as f64)
            .collect();
        (d1, de_casteljau(&second, t))
    }

    /// Signed curvature `det(c′, c″)/‖c′‖³`.
    pub fn curvature(&self, t: f64) -> Result<f64> {
        let (d1, d2) = self.derivatives(t);
        let speed = d1.norm();
        if speed <= SPEED_TOL * self.scale() || speed == 0.0 {
            return Err(Error::VanishingSpeed { t });
        }
        Ok(d1.cross(d2) / (speed * speed * speed))
    }

    pub fn sample(&self, t: f64) -> Result<CurveSample> {
        let (d1, d2) = self.derivatives(t);
        Ok(CurveSample {
            t,
            point: self.evaluate(t),
            d1,
            d2,
            kappa: self.curvature(t)?,
        })
    }

    /// de Casteljau split at `t` into the polygons over `[0, t]` and `[t, 1]`.
    pub fn split(&self, t: f64) -> (ControlPolygon, ControlPolygon) {
        let n = self.points.len();
        let mut work = self.points.clone();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        left.push(work[0]);
        right.push(work[n - 1]);
        for level in 1..n {
            for i in 0..(n - level) {
                work[i] = work[i].lerp(work[i + 1], t);
            }
            left.push(work[0]);
            right.push(work[n - 1 - level]);
        }
        right.reverse();
        (ControlPolygon::new(left), ControlPolygon::new(right))
    }
}

/// Convenience wrapper for [`ControlPolygon::curvature`].
pub fn curvature_numeric(polygon: &ControlPolygon, t: f64) -> Result<f64> {
    polygon.curvature(t)
}

/// `κ(0)` and `κ(1)` from the first and last two edges.
pub fn endpoint_curvatures(spec: &CurveSpec) -> Result<(f64, f64)> {
    let n = spec.degree;
    let factor = (n - 1) as f64 / n as f64;
    let edges = spec.edges();
    let (w, mw) = (edges[0], spec.generator.apply(edges[0]));
    let (prev, last) = (edges[n - 2], edges[n - 1]);
    let scale = edges.iter().map(|e| e.norm()).fold(0.0, f64::max);
    let (nw, nl) = (w.norm(), last.norm());
    if nw <= SPEED_TOL * scale {
        return Err(Error::VanishingSpeed { t: 0.0 });
    }
    if nl <= SPEED_TOL * scale || nl == 0.0 {
        return Err(Error::VanishingSpeed { t: 1.0 });
    }
    Ok((
        factor * w.cross(mw) / (nw * nw * nw),
        factor * prev.cross(last) / (nl * nl * nl),
    ))
}

fn check_unit(t: f64, lo_open: bool, hi_open: bool) -> Result<()> {
    let ok = (if lo_open { t > 0.0 } else { t >= 0.0 }) && (if hi_open { t < 1.0 } else { t <= 1.0 });
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("subdivision parameter {t} out of range")))
    }
}

/// Spec of the arc over `[0, t]`: generator `(1 − t)𝕀 + tM`, seed `t·w`.
pub fn subdivide_left(spec: &CurveSpec, t: f64) -> Result<CurveSpec> {
    check_unit(t, true, false)?;
    if t == 1.0 {
        return Ok(*spec);
    }
    Ok(CurveSpec {
        degree: spec.degree,
        generator: subdivision_matrix(spec.generator, t),
        seed: spec.seed * t,
        base: spec.base,
    })
}

/// Spec of the arc over `[t, 1]`: generator `M·T⁻¹`, seed the first edge of
/// the right de Casteljau polygon, base `c(t)`.
pub fn subdivide_right(spec: &CurveSpec, t: f64) -> Result<CurveSpec> {
    check_unit(t, false, true)?;
    if t == 0.0 {
        return Ok(*spec);
    }
    let generator = right_quotient_matrix(spec.generator, t)?;
    let (_, right) = spec.polygon().split(t);
    Ok(CurveSpec {
        degree: spec.degree,
        generator,
        seed: right.points[1] - right.points[0],
        base: right.points[0],
    })
}

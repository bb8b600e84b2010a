// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! CSV and SVG output for a sampled curve.

use std::fmt::Write as _;

use crate::closed_form::{build_model, kappa_closed};
use crate::curve::CurveSpec;
use crate::error::Result;
use crate::linalg::Vec2;

pub const DEFAULT_SAMPLES: usize = 1001;
pub const SVG_WIDTH: f64 = 800.0;
pub const SVG_HEIGHT: f64 = 400.0;
const MARGIN: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    pub control_points: Vec<Vec2>,
    /// `(t, point, κ)`.
    pub samples: Vec<(f64, Vec2, f64)>,
}

/// `samples` uniform parameters on `[0, 1]`. A straight segment gets `κ = 0`.
pub fn sample_curve(spec: &CurveSpec, samples: usize) -> Result<SampledCurve> {
    let polygon = spec.polygon();
    let model = build_model(spec)?;
    let samples = samples.max(2);
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let t = i as f64 / (samples - 1) as f64;
        let kappa = if model.degenerate { 0.0 } else { kappa_closed(&model, t)? };
        out.push((t, polygon.evaluate(t), kappa));
    }
    Ok(SampledCurve {
        control_points: polygon.points,
        samples: out,
    })
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// `t,x,y,kappa` rows, 17 significant digits, LF line endings.
pub fn curve_csv(curve: &SampledCurve) -> String {
    let mut s = String::from("t,x,y,kappa\n");
    for (t, p, k) in &curve.samples {
        let _ = writeln!(s, "{},{},{},{}", num(*t), num(p.x), num(p.y), num(*k));
    }
    s
}

/// `i,x,y` rows for the control points.
pub fn polygon_csv(curve: &SampledCurve) -> String {
    let mut s = String::from("i,x,y\n");
    for (i, p) in curve.control_points.iter().enumerate() {
        let _ = writeln!(s, "{i},{},{}", num(p.x), num(p.y));
    }
    s
}

/// Affine map from a data box onto a pixel box, y pointing up.
struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
    px: f64,
    py: f64,
}

impl Frame {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (self.px + (x - self.x0) * self.sx, self.py - (y - self.y0) * self.sy)
    }
}

fn span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi - lo > 0.0 {
        (lo, hi)
    } else {
        let pad = lo.abs().max(1.0);
        (lo - pad, hi + pad)
    }
}

fn points_attr(points: impl Iterator<Item = (f64, f64)>) -> String {
    points.map(|(x, y)| format!("{x:.3},{y:.3}")).collect::<Vec<_>>().join(" ")
}

/// Curve with control polygon on the left, `κ(t)` on the right.
pub fn curve_svg(curve: &SampledCurve) -> String {
    let half = SVG_WIDTH / 2.0;
    let inner_w = half * (1.0 - 2.0 * MARGIN);
    let inner_h = SVG_HEIGHT * (1.0 - 2.0 * MARGIN);

    let all = curve.control_points.iter().copied().chain(curve.samples.iter().map(|s| s.1));
    let (xlo, xhi) = span(all.clone().map(|p| p.x));
    let (ylo, yhi) = span(all.map(|p| p.y));
    let scale = (inner_w / (xhi - xlo)).min(inner_h / (yhi - ylo));
    let left = Frame {
        x0: 0.5 * (xlo + xhi),
        y0: 0.5 * (ylo + yhi),
        sx: scale,
        sy: scale,
        px: half / 2.0,
        py: SVG_HEIGHT / 2.0,
    };

    let (klo, khi) = span(curve.samples.iter().map(|s| s.2));
    let right = Frame {
        x0: 0.0,
        y0: klo,
        sx: inner_w,
        sy: inner_h / (khi - klo),
        px: half + half * MARGIN,
        py: SVG_HEIGHT * (1.0 - MARGIN),
    };

    let polygon = points_attr(curve.control_points.iter().map(|p| left.map(p.x, p.y)));
    let path = points_attr(curve.samples.iter().map(|s| left.map(s.1.x, s.1.y)));
    let kappa = points_attr(curve.samples.iter().map(|s| right.map(s.0, s.2)));
    let (ax0, ay0) = right.map(0.0, klo);
    let (ax1, ay1) = right.map(1.0, khi);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<line x1="{half}" y1="0" x2="{half}" y2="{SVG_HEIGHT}" stroke="#dddddd"/>"##);
    let _ = writeln!(
        s,
        r##"<polyline class="polygon" points="{polygon}" fill="none" stroke="#888888" stroke-dasharray="4 3"/>"##
    );
    for p in &curve.control_points {
        let (x, y) = left.map(p.x, p.y);
        let _ = writeln!(s, r##"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="#888888"/>"##);
    }
    let _ = writeln!(s, r##"<polyline class="curve" points="{path}" fill="none" stroke="#1f4e9c" stroke-width="2"/>"##);
    let _ = writeln!(
        s,
        r##"<polyline class="axes" points="{ax0:.3},{ay1:.3} {ax0:.3},{ay0:.3} {ax1:.3},{ay0:.3}" fill="none" stroke="#000000"/>"##
    );
    if klo < 0.0 && khi > 0.0 {
        let (_, zy) = right.map(0.0, 0.0);
        let _ = writeln!(
            s,
            r##"<line x1="{ax0:.3}" y1="{zy:.3}" x2="{ax1:.3}" y2="{zy:.3}" stroke="#bbbbbb"/>"##
        );
    }
    let _ = writeln!(s, r##"<polyline class="kappa" points="{kappa}" fill="none" stroke="#b3261e" stroke-width="2"/>"##);
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">t</text>"#,
        ax1 - 8.0,
        ay0 + 14.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">κ [{klo:.4e}, {khi:.4e}]</text>"#,
        ax0 + 4.0,
        ay1 + 4.0
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat2;

    fn first_example() -> CurveSpec {
        CurveSpec::at_origin(3, Mat2::diag(1.25, 0.1), Vec2::new(1.0, -1.0)).unwrap()
    }

    #[test]
    fn csv_layout() {
        let c = sample_curve(&first_example(), DEFAULT_SAMPLES).unwrap();
        let csv = curve_csv(&c);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 1002);
        assert_eq!(lines[0], "t,x,y,kappa");
        assert!(!csv.contains('\r'));
        let last: Vec<f64> = lines[1001].split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(last[0], 1.0);
        assert_eq!(last[1], 3.8125);
        assert_eq!(polygon_csv(&c).lines().count(), 5);
    }

    #[test]
    fn svg_is_deterministic_and_sized() {
        let c = sample_curve(&first_example(), 201).unwrap();
        let a = curve_svg(&c);
        assert_eq!(a, curve_svg(&sample_curve(&first_example(), 201).unwrap()));
        assert!(a.contains(r#"width="800" height="400""#));
        assert!(a.contains("class=\"curve\"") && a.contains("class=\"kappa\"") && a.contains("class=\"polygon\""));
    }

    #[test]
    fn line_has_flat_curvature() {
        let spec = CurveSpec::at_origin(3, Mat2::IDENTITY, Vec2::new(1.0, 2.0)).unwrap();
        let c = sample_curve(&spec, 11).unwrap();
        assert!(c.samples.iter().all(|s| s.2 == 0.0));
        assert!(curve_svg(&c).contains("class=\"kappa\""));
    }
}

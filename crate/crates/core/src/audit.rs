// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Audit of the singular-value "Class A" matrix conditions.
//!
//! Works for 2×2 and 3×3 matrices. Triangle areas are half the norm of the
//! cross product, with 2D vectors embedded at `z = 0`.

use crate::error::{Error, Result};
use crate::small::{angle_between, MatN, VecN};

/// Slack on the expansion test: `λ_min((M+Mᵀ)/2) ≥ 1 − EXPANSION_TOL`.
pub const EXPANSION_TOL: f64 = 1e-12;
/// Smallest `sin α_1` accepted as a divisor.
pub const MIN_SIN_ALPHA: f64 = 1e-12;
const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SvCondition {
    /// Descending.
    pub sv: Vec<f64>,
    /// `σ_min³ ≥ σ_max`.
    pub corrected_holds: bool,
    /// `σ_min² ≥ σ_max`.
    pub misprint_holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionProfile {
    pub points: Vec<(f64, f64)>,
    pub f_prime_at_zero: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleChain {
    /// `|M^{j−1}D|` for `j = 1..n−1`.
    pub areas: Vec<f64>,
    /// `α_j`, the angle between `M^{j−1}v` and `M^j v`.
    pub angles: Vec<f64>,
    /// `‖M^j v‖` for `j = 0..n−1`.
    pub lengths: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaBounds {
    pub lower: f64,
    pub actual: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Proposition1Result {
    pub n: usize,
    /// `σ_min^{3(n−1)}`.
    pub lhs: f64,
    /// `σ_max^{2(n−2)}·sin α_{n−1}/sin α_1`.
    pub rhs: f64,
    pub hypothesis_holds: bool,
    /// `|D|/‖v‖³ ≥ |M^{n−2}D|/‖M^{n−1}v‖³`.
    pub conclusion_holds: bool,
    pub angles: Vec<f64>,
    pub areas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassAReport {
    pub expansion_holds: bool,
    pub min_symmetric_eigenvalue: f64,
    pub sv: Vec<f64>,
    pub sv_condition_holds: bool,
    pub misprint_condition_holds: bool,
    pub subdivision_profile: Vec<(f64, f64)>,
    pub f_prime_at_zero: f64,
    pub proposition1: Option<Proposition1Result>,
}

fn ge(a: f64, b: f64) -> bool {
    a >= b - SLACK * a.abs().max(b.abs()).max(1.0)
}

/// Whether `v·Mv ≥ v·v` for all `v`, decided by the symmetric part.
pub fn expansion_condition<const N: usize>(m: &MatN<N>) -> (bool, f64) {
    let lmin = m.symmetric_eigenvalues()[0];
    (lmin >= 1.0 - EXPANSION_TOL, lmin)
}

/// `v·Mv / v·v`.
pub fn zhao_ratio<const N: usize>(m: &MatN<N>, v: &VecN<N>) -> Result<f64> {
    let vv = v.dot(v);
    if vv == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.dot(&m.apply(v)) / vv)
}

pub fn sv_condition<const N: usize>(m: &MatN<N>) -> SvCondition {
    let sv = m.singular_values();
    let (smax, smin) = (sv[0], sv[N - 1]);
    SvCondition {
        sv: sv.to_vec(),
        corrected_holds: ge(smin.powi(3), smax),
        misprint_holds: ge(smin.powi(2), smax),
    }
}

/// `f(t) = (1 − t + σ_min t)³ − (1 − t + σ_max t)`.
///
/// Expanded in powers of `t` so small `t` does not cancel.
pub fn subdivision_f(sigma_min: f64, sigma_max: f64, t: f64) -> f64 {
    let (a, b) = (sigma_min - 1.0, sigma_max - 1.0);
    t * ((3.0 * a - b) + t * a * a * (3.0 + t * a))
}

/// `f′(0) = 3σ_min − σ_max − 2`.
pub fn subdivision_f_prime_at_zero(sigma_min: f64, sigma_max: f64) -> f64 {
    3.0 * sigma_min - sigma_max - 2.0
}

/// `f` tabulated on `grid` uniform points of `[0, 1]`.
pub fn subdivision_sv_profile(sigma_min: f64, sigma_max: f64, grid: usize) -> Result<SubdivisionProfile> {
    if !(sigma_min > 0.0 && sigma_min <= sigma_max) {
        return Err(Error::InvalidSpec("need 0 < sigma_min <= sigma_max".into()));
    }
    if grid < 2 {
        return Err(Error::InvalidSpec("grid must have at least 2 points".into()));
    }
    let points = (0..grid)
        .map(|i| {
            let t = i as f64 / (grid - 1) as f64;
            (t, subdivision_f(sigma_min, sigma_max, t))
        })
        .collect();
    Ok(SubdivisionProfile {
        points,
        f_prime_at_zero: subdivision_f_prime_at_zero(sigma_min, sigma_max),
    })
}

/// Some `t ∈ (0, 0.1]` with `f(t) < 0`, if one is found.
///
/// Scans a grid first, then halves toward 0, which catches roots of `f`
/// arbitrarily close to the origin when `f′(0) < 0`.
pub fn negative_witness(sigma_min: f64, sigma_max: f64) -> Option<f64> {
    const STEPS: usize = 1000;
    let f = |t| subdivision_f(sigma_min, sigma_max, t);
    if let Some(t) = (1..=STEPS).map(|i| 0.1 * i as f64 / STEPS as f64).find(|&t| f(t) < 0.0) {
        return Some(t);
    }
    let mut t = 0.1 / STEPS as f64;
    while t > 1e-300 {
        t *= 0.5;
        if f(t) < 0.0 {
            return Some(t);
        }
    }
    None
}

fn cross_norm(a: [f64; 3], b: [f64; 3]) -> f64 {
    let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
}

/// Areas and angles of the triangles spanned by consecutive `M^j v`.
pub fn triangle_chain<const N: usize>(m: &MatN<N>, v: &VecN<N>, n: usize) -> Result<TriangleChain> {
    if n < 3 {
        return Err(Error::InvalidSpec("chain needs n >= 3".into()));
    }
    if v.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut powers = vec![*v];
    for _ in 1..n {
        let next = m.apply(powers.last().unwrap());
        powers.push(next);
    }
    let mut areas = Vec::with_capacity(n - 1);
    let mut angles = Vec::with_capacity(n - 1);
    for pair in powers.windows(2) {
        areas.push(0.5 * cross_norm(pair[0].embed3(), pair[1].embed3()));
        angles.push(angle_between(&pair[0], &pair[1])?);
    }
    if angles[0].sin() < MIN_SIN_ALPHA {
        return Err(Error::CollinearPair { index: 1 });
    }
    Ok(TriangleChain {
        areas,
        angles,
        lengths: powers.iter().map(VecN::norm).collect(),
    })
}

/// `σ_min²|D|·sinα₂/sinα₁ ≤ |MD| ≤ σ_max²|D|·sinα₂/sinα₁`.
pub fn corrected_area_bounds<const N: usize>(m: &MatN<N>, v: &VecN<N>) -> Result<AreaBounds> {
    let chain = triangle_chain(m, v, 3)?;
    let sv = m.singular_values();
    let base = chain.areas[0] * chain.angles[1].sin() / chain.angles[0].sin();
    Ok(AreaBounds {
        lower: sv[N - 1].powi(2) * base,
        actual: chain.areas[1],
        upper: sv[0].powi(2) * base,
    })
}

pub fn proposition1<const N: usize>(m: &MatN<N>, v: &VecN<N>, n: usize) -> Result<Proposition1Result> {
    let chain = triangle_chain(m, v, n)?;
    let sv = m.singular_values();
    let (smax, smin) = (sv[0], sv[N - 1]);
    let lhs = smin.powi(3 * (n as i32 - 1));
    let rhs = smax.powi(2 * (n as i32 - 2)) * chain.angles[n - 2].sin() / chain.angles[0].sin();
    let start = chain.areas[0] / chain.lengths[0].powi(3);
    let end = chain.areas[n - 2] / chain.lengths[n - 1].powi(3);
    Ok(Proposition1Result {
        n,
        lhs,
        rhs,
        hypothesis_holds: lhs >= rhs,
        conclusion_holds: start >= end - SLACK * start.max(end),
        angles: chain.angles,
        areas: chain.areas,
    })
}

/// Full report; the Proposition 1 part needs a vector and a degree.
pub fn class_a_report<const N: usize>(
    m: &MatN<N>,
    chain: Option<(&VecN<N>, usize)>,
    grid: usize,
) -> Result<ClassAReport> {
    if !m.is_finite() {
        return Err(Error::InvalidSpec("matrix entries must be finite".into()));
    }
    let (expansion_holds, min_symmetric_eigenvalue) = expansion_condition(m);
    let sv = sv_condition(m);
    let (smax, smin) = (sv.sv[0], sv.sv[N - 1]);
    let profile = if smin > 0.0 {
        subdivision_sv_profile(smin, smax, grid)?
    } else {
        SubdivisionProfile {
            points: Vec::new(),
            f_prime_at_zero: subdivision_f_prime_at_zero(smin, smax),
        }
    };
    let proposition1 = chain.map(|(v, n)| proposition1(m, v, n)).transpose()?;
    Ok(ClassAReport {
        expansion_holds,
        min_symmetric_eigenvalue,
        sv_condition_holds: sv.corrected_holds,
        misprint_condition_holds: sv.misprint_holds,
        sv: sv.sv,
        subdivision_profile: profile.points,
        f_prime_at_zero: profile.f_prime_at_zero,
        proposition1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat2;

    fn zhao() -> MatN<2> {
        MatN([[1.2545, -2.9594], [1.5576, 2.3836]])
    }

    #[test]
    fn expansion_cases() {
        assert_eq!(expansion_condition(&MatN::<3>::identity()), (true, 1.0));
        let (holds, l) = expansion_condition(&zhao());
        assert!(!holds && (l - 0.919).abs() < 1e-3);
        let (holds, l) = expansion_condition(&MatN::from(Mat2::scaled_rotation(1.8, 0.925)));
        assert!(holds && (l - 1.8 * 0.925f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn ratio_cases() {
        let r = zhao_ratio(&zhao(), &VecN([0.9724, 0.2333])).unwrap();
        assert!((r - 0.9979).abs() < 5e-4);
        assert_eq!(zhao_ratio(&MatN::<2>::identity(), &VecN([3.0, -1.0])).unwrap(), 1.0);
        assert_eq!(zhao_ratio(&MatN::<2>::identity().scale(2.0), &VecN([3.0, -1.0])).unwrap(), 2.0);
        assert_eq!(zhao_ratio(&zhao(), &VecN([0.0, 0.0])), Err(Error::ZeroVector));
    }

    #[test]
    fn sv_conditions() {
        let c = sv_condition(&MatN::diag([1.102, 1.08, 1.05]));
        assert!(c.corrected_holds && c.misprint_holds);
        let c = sv_condition(&MatN::<3>::identity());
        assert!(c.corrected_holds && c.misprint_holds);
        let c = sv_condition(&MatN::diag([3.0, 1.5]));
        assert!(c.corrected_holds && !c.misprint_holds);
    }

    #[test]
    fn profile_values() {
        let p = subdivision_sv_profile(1.0, 1.0, 11).unwrap();
        assert!(p.points.iter().all(|&(_, f)| f == 0.0));
        let p = subdivision_sv_profile(1.05, 1.102, 3).unwrap();
        assert_eq!(p.points[0].1, 0.0);
        assert!((p.points[1].1 - (1.025f64.powi(3) - 1.051)).abs() < 1e-15);
        assert!((subdivision_f_prime_at_zero(1.5, 3.0) + 0.5).abs() < 1e-12);
        assert!(subdivision_f(1.5, 3.0, 0.01) < 0.0);
        assert!(negative_witness(1.5, 3.0).is_some());
        assert!(negative_witness(1.05, 1.102).is_none());
        assert!(subdivision_sv_profile(2.0, 1.0, 5).is_err());
    }

    #[test]
    fn typical_chain() {
        let (h, phi) = (1.8, 0.925);
        let m = MatN::from(Mat2::scaled_rotation(h, phi));
        let v = VecN([0.4, 0.1]);
        let vv = v.dot(&v);
        let c = triangle_chain(&m, &v, 3).unwrap();
        assert!((c.areas[0] - 0.5 * h * vv * phi.sin()).abs() < 1e-14);
        assert!((c.areas[1] - 0.5 * h.powi(3) * vv * phi.sin()).abs() < 1e-14);
        assert!(c.angles.iter().all(|a| (a - phi).abs() < 1e-12));
        let b = corrected_area_bounds(&m, &v).unwrap();
        assert!((b.lower - b.actual).abs() < 1e-12 && (b.upper - b.actual).abs() < 1e-12);
        let p = proposition1(&m, &v, 3).unwrap();
        assert!(p.hypothesis_holds && p.conclusion_holds);
    }

    #[test]
    fn collinear_chain() {
        assert_eq!(
            triangle_chain(&MatN::<3>::identity(), &VecN([1.0, 2.0, 3.0]), 3),
            Err(Error::CollinearPair { index: 1 })
        );
        assert!(corrected_area_bounds(&MatN::<2>::identity().scale(2.0), &VecN([1.0, 0.0])).is_err());
    }
}

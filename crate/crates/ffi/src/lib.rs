// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over the `classa` crate.
//!
//! Curves live behind an opaque `ClassaCurve` handle created by
//! [`classa_curve_new`] or [`classa_curve_from_document`] and released with
//! [`classa_curve_free`]. Every fallible call returns a [`ClassaStatus`] and
//! writes its result through an out-pointer. Panics never cross the boundary.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use classa::certify::{certify, monotonicity_of_model, CertificateName, Direction, MonotoneKind, MIN_GRID};
use classa::document::SpecDocument;
use classa::small::MatN;
use classa::{audit, build_model, CurvatureModel, CurveSpec, Error, Mat2, Vec2};

/// Number of certificates reported by [`classa_curve_certify`].
pub const CLASSA_CERTIFICATE_COUNT: usize = 6;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassaStatus {
    Ok = 0,
    NullPointer = 1,
    ZeroSeed = 2,
    ZeroVector = 3,
    SingularSubdivision = 4,
    VanishingSpeed = 5,
    WrongVariant = 6,
    CollinearPair = 7,
    DegenerateLine = 8,
    InvalidSpec = 9,
    Parse = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

/// Monotonicity verdict of the numerical oracle.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassaVerdict {
    MonotoneDecreasing = 0,
    MonotoneIncreasing = 1,
    NonMonotone = 2,
    DegenerateLine = 3,
}

/// Direction guaranteed by a held certificate, relative to the sign of `κ(0)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassaDirection {
    NotApplicable = 0,
    DecreasingIfKappa0Positive = 1,
    IncreasingIfKappa0Positive = 2,
}

/// Opaque curve handle.
pub struct ClassaCurve {
    spec: CurveSpec,
    model: CurvatureModel,
}

impl From<&Error> for ClassaStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroSeed => ClassaStatus::ZeroSeed,
            Error::ZeroVector => ClassaStatus::ZeroVector,
            Error::SingularSubdivision { .. } => ClassaStatus::SingularSubdivision,
            Error::VanishingSpeed { .. } => ClassaStatus::VanishingSpeed,
            Error::WrongVariant { .. } => ClassaStatus::WrongVariant,
            Error::CollinearPair { .. } => ClassaStatus::CollinearPair,
            Error::DegenerateLine => ClassaStatus::DegenerateLine,
            Error::InvalidSpec(_) => ClassaStatus::InvalidSpec,
            Error::Parse { .. } => ClassaStatus::Parse,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), ClassaStatus>) -> ClassaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ClassaStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => ClassaStatus::Panic,
    }
}

fn lift<T>(r: classa::Result<T>) -> Result<T, ClassaStatus> {
    r.map_err(|e| ClassaStatus::from(&e))
}

unsafe fn non_null<'a, T>(p: *const T) -> Result<&'a T, ClassaStatus> {
    p.as_ref().ok_or(ClassaStatus::NullPointer)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, ClassaStatus> {
    p.as_mut().ok_or(ClassaStatus::NullPointer)
}

fn boxed(spec: CurveSpec) -> Result<*mut ClassaCurve, ClassaStatus> {
    let model = lift(build_model(&spec))?;
    Ok(Box::into_raw(Box::new(ClassaCurve { spec, model })))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn classa_status_message(status: ClassaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ClassaStatus::Ok => c"ok",
        ClassaStatus::NullPointer => c"null pointer argument",
        ClassaStatus::ZeroSeed => c"seed vector is zero",
        ClassaStatus::ZeroVector => c"vector has zero length",
        ClassaStatus::SingularSubdivision => c"subdivision matrix is singular",
        ClassaStatus::VanishingSpeed => c"curve speed vanishes",
        ClassaStatus::WrongVariant => c"wrong spectral variant",
        ClassaStatus::CollinearPair => c"consecutive vectors are parallel",
        ClassaStatus::DegenerateLine => c"curve is a straight line segment",
        ClassaStatus::InvalidSpec => c"invalid curve specification",
        ClassaStatus::Parse => c"document could not be parsed",
        ClassaStatus::BufferTooSmall => c"output buffer too small",
        ClassaStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Library version as a NUL-terminated string.
#[no_mangle]
pub extern "C" fn classa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Build a curve from a row-major 2×2 `matrix` (4 doubles), a `seed` edge
/// (2 doubles), an optional `base` point (2 doubles; NULL means the origin)
/// and a degree.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_new(
    matrix: *const f64,
    seed: *const f64,
    base: *const f64,
    degree: u32,
    curve_out: *mut *mut ClassaCurve,
) -> ClassaStatus {
    guard(|| {
        let slot = out(curve_out)?;
        *slot = ptr::null_mut();
        if matrix.is_null() || seed.is_null() {
            return Err(ClassaStatus::NullPointer);
        }
        let [a, b, c, d] = *matrix.cast::<[f64; 4]>();
        let s = *seed.cast::<[f64; 2]>();
        let b0 = base.cast::<[f64; 2]>().as_ref().map_or(Vec2::ZERO, |p| Vec2::new(p[0], p[1]));
        let spec = lift(CurveSpec::new(degree as usize, Mat2::new(a, b, c, d), Vec2::new(s[0], s[1]), b0))?;
        *slot = boxed(spec)?;
        Ok(())
    })
}

/// Build a curve from a NUL-terminated `key = value` document.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_from_document(
    text: *const c_char,
    curve_out: *mut *mut ClassaCurve,
) -> ClassaStatus {
    guard(|| {
        let slot = out(curve_out)?;
        *slot = ptr::null_mut();
        if text.is_null() {
            return Err(ClassaStatus::NullPointer);
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| ClassaStatus::Parse)?;
        let spec = lift(SpecDocument::parse(text).and_then(|d| d.to_spec()))?;
        *slot = boxed(spec)?;
        Ok(())
    })
}

/// Release a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_free(curve: *mut ClassaCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

#[no_mangle]
pub unsafe extern "C" fn classa_curve_degree(curve: *const ClassaCurve, degree_out: *mut u32) -> ClassaStatus {
    guard(|| {
        *out(degree_out)? = non_null(curve)?.spec.degree as u32;
        Ok(())
    })
}

/// Whether the curve is a straight segment (curvature identically zero).
#[no_mangle]
pub unsafe extern "C" fn classa_curve_is_degenerate(curve: *const ClassaCurve, flag_out: *mut bool) -> ClassaStatus {
    guard(|| {
        *out(flag_out)? = non_null(curve)?.model.degenerate;
        Ok(())
    })
}

/// Write the `degree + 1` control points as interleaved `x, y` pairs.
/// `len_out` receives the number of doubles needed, also on `BufferTooSmall`.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_control_points(
    curve: *const ClassaCurve,
    buffer: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        let len = out(len_out)?;
        let points = curve.spec.polygon().points;
        *len = 2 * points.len();
        if capacity < *len {
            return Err(ClassaStatus::BufferTooSmall);
        }
        if buffer.is_null() {
            return Err(ClassaStatus::NullPointer);
        }
        let dst = std::slice::from_raw_parts_mut(buffer, *len);
        for (pair, p) in dst.chunks_exact_mut(2).zip(points) {
            pair[0] = p.x;
            pair[1] = p.y;
        }
        Ok(())
    })
}

/// Point on the curve at `t ∈ [0, 1]`, written to 2 doubles.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_point(curve: *const ClassaCurve, t: f64, point_out: *mut f64) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        let slot = out(point_out.cast::<[f64; 2]>())?;
        if !(0.0..=1.0).contains(&t) {
            return Err(ClassaStatus::InvalidSpec);
        }
        let p = curve.spec.polygon().evaluate(t);
        *slot = [p.x, p.y];
        Ok(())
    })
}

/// Signed curvature from the closed form.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_kappa(curve: *const ClassaCurve, t: f64, kappa_out: *mut f64) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        *out(kappa_out)? = lift(curve.model.kappa(t))?;
        Ok(())
    })
}

/// Derivative of the curvature with respect to `t`.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_dkappa(curve: *const ClassaCurve, t: f64, dkappa_out: *mut f64) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        *out(dkappa_out)? = lift(curve.model.dkappa(t))?;
        Ok(())
    })
}

/// Evaluate the six certificates in the order CaoWang, PositiveRealSeed,
/// Jordan, TypicalMineur, ComplexGeneral, ComplexDegree. Bit `i` of
/// `held_mask_out` is set when certificate `i` holds. `directions_out`, if
/// not NULL, receives `CLASSA_CERTIFICATE_COUNT` entries.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_certify(
    curve: *const ClassaCurve,
    held_mask_out: *mut u32,
    directions_out: *mut ClassaDirection,
) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        let mask = out(held_mask_out)?;
        let certs = certify(&curve.spec);
        debug_assert_eq!(certs.len(), CertificateName::ALL.len());
        *mask = 0;
        let mut dirs = [ClassaDirection::NotApplicable; CLASSA_CERTIFICATE_COUNT];
        for (i, c) in certs.iter().enumerate() {
            if c.holds {
                *mask |= 1 << i;
            }
            dirs[i] = match c.direction {
                Direction::DecreasingIfKappa0Positive => ClassaDirection::DecreasingIfKappa0Positive,
                Direction::IncreasingIfKappa0Positive => ClassaDirection::IncreasingIfKappa0Positive,
                Direction::NotApplicable => ClassaDirection::NotApplicable,
            };
        }
        if let Some(d) = directions_out.cast::<[ClassaDirection; CLASSA_CERTIFICATE_COUNT]>().as_mut() {
            *d = dirs;
        }
        Ok(())
    })
}

/// Run the numerical oracle on `grid` samples (at least 101). A straight
/// segment reports `CLASSA_VERDICT_DEGENERATE_LINE` with status OK.
/// `extrema_out` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn classa_curve_verdict(
    curve: *const ClassaCurve,
    grid: u32,
    verdict_out: *mut ClassaVerdict,
    extrema_out: *mut usize,
) -> ClassaStatus {
    guard(|| {
        let curve = non_null(curve)?;
        let slot = out(verdict_out)?;
        if (grid as usize) < MIN_GRID {
            return Err(ClassaStatus::InvalidSpec);
        }
        if curve.model.degenerate {
            *slot = ClassaVerdict::DegenerateLine;
            if let Some(e) = extrema_out.as_mut() {
                *e = 0;
            }
            return Ok(());
        }
        let v = lift(monotonicity_of_model(&curve.model, grid as usize))?;
        *slot = match v.kind {
            MonotoneKind::MonotoneDecreasing => ClassaVerdict::MonotoneDecreasing,
            MonotoneKind::MonotoneIncreasing => ClassaVerdict::MonotoneIncreasing,
            MonotoneKind::NonMonotone => ClassaVerdict::NonMonotone,
            MonotoneKind::DegenerateLine => ClassaVerdict::DegenerateLine,
        };
        if let Some(e) = extrema_out.as_mut() {
            *e = v.extrema_locations.len();
        }
        Ok(())
    })
}

/// Singular-value conditions for a row-major `dim × dim` matrix, `dim` 2 or 3:
/// `σ_min³ ≥ σ_max` and `σ_min² ≥ σ_max`.
#[no_mangle]
pub unsafe extern "C" fn classa_sv_conditions(
    matrix: *const f64,
    dim: u32,
    corrected_out: *mut bool,
    misprint_out: *mut bool,
) -> ClassaStatus {
    guard(|| {
        if matrix.is_null() {
            return Err(ClassaStatus::NullPointer);
        }
        let (corrected, misprint) = (out(corrected_out)?, out(misprint_out)?);
        let cond = match dim {
            2 => {
                let m = std::slice::from_raw_parts(matrix, 4);
                audit::sv_condition(&MatN([[m[0], m[1]], [m[2], m[3]]]))
            }
            3 => {
                let m = std::slice::from_raw_parts(matrix, 9);
                audit::sv_condition(&MatN([[m[0], m[1], m[2]], [m[3], m[4], m[5]], [m[6], m[7], m[8]]]))
            }
            _ => return Err(ClassaStatus::InvalidSpec),
        };
        *corrected = cond.corrected_holds;
        *misprint = cond.misprint_holds;
        Ok(())
    })
}

/// Minimum eigenvalue of the symmetric part of a row-major `dim × dim`
/// matrix; the expansion condition holds when it is at least 1.
#[no_mangle]
pub unsafe extern "C" fn classa_expansion_eigenvalue(
    matrix: *const f64,
    dim: u32,
    eigenvalue_out: *mut f64,
) -> ClassaStatus {
    guard(|| {
        if matrix.is_null() {
            return Err(ClassaStatus::NullPointer);
        }
        let slot = out(eigenvalue_out)?;
        *slot = match dim {
            2 => {
                let m = std::slice::from_raw_parts(matrix, 4);
                audit::expansion_condition(&MatN([[m[0], m[1]], [m[2], m[3]]])).1
            }
            3 => {
                let m = std::slice::from_raw_parts(matrix, 9);
                audit::expansion_condition(&MatN([[m[0], m[1], m[2]], [m[3], m[4], m[5]], [m[6], m[7], m[8]]])).1
            }
            _ => return Err(ClassaStatus::InvalidSpec),
        };
        Ok(())
    })
}

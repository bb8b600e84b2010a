// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::CStr;
use std::ptr;

use classa_ffi::*;

fn new_curve(m: [f64; 4], w: [f64; 2], n: u32) -> *mut ClassaCurve {
    let mut c = ptr::null_mut();
    let s = unsafe { classa_curve_new(m.as_ptr(), w.as_ptr(), ptr::null(), n, &mut c) };
    assert_eq!(s, ClassaStatus::Ok);
    assert!(!c.is_null());
    c
}

#[test]
fn first_example_round_trip() {
    let c = new_curve([1.25, 0.0, 0.0, 0.1], [1.0, -1.0], 3);
    unsafe {
        let mut buf = [0.0; 8];
        let mut len = 0;
        assert_eq!(classa_curve_control_points(c, buf.as_mut_ptr(), 8, &mut len), ClassaStatus::Ok);
        assert_eq!(len, 8);
        assert_eq!(buf, [0.0, 0.0, 1.0, -1.0, 2.25, -1.1, 3.8125, -1.11]);
        assert_eq!(
            classa_curve_control_points(c, buf.as_mut_ptr(), 3, &mut len),
            ClassaStatus::BufferTooSmall
        );

        let mut p = [0.0; 2];
        assert_eq!(classa_curve_point(c, 1.0, p.as_mut_ptr()), ClassaStatus::Ok);
        assert_eq!(p, [3.8125, -1.11]);

        // κ(0) = (2/3)·det(w, Mw)/‖w‖³
        let mut k = 0.0;
        assert_eq!(classa_curve_kappa(c, 0.0, &mut k), ClassaStatus::Ok);
        let expected = 2.0 / 3.0 * (1.0 * -0.1 - (-1.0) * 1.25) / 2f64.powf(1.5);
        assert!((k - expected).abs() < 1e-14);

        let mut v = ClassaVerdict::DegenerateLine;
        let mut extrema = 0;
        assert_eq!(classa_curve_verdict(c, 2001, &mut v, &mut extrema), ClassaStatus::Ok);
        assert_eq!(v, ClassaVerdict::NonMonotone);
        assert_eq!(extrema, 1);

        let mut mask = 99;
        assert_eq!(classa_curve_certify(c, &mut mask, ptr::null_mut()), ClassaStatus::Ok);
        assert_eq!(mask, 0);
        classa_curve_free(c);
    }
}

#[test]
fn certificates_from_document() {
    let text = c"degree = 3\nmatrix = 1 0 1 1\nseed = 3 1\n";
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(classa_curve_from_document(text.as_ptr(), &mut c), ClassaStatus::Ok);
        let mut mask = 0;
        let mut dirs = [ClassaDirection::NotApplicable; CLASSA_CERTIFICATE_COUNT];
        assert_eq!(classa_curve_certify(c, &mut mask, dirs.as_mut_ptr()), ClassaStatus::Ok);
        assert_eq!(mask, 1 << 2);
        assert_eq!(dirs[2], ClassaDirection::DecreasingIfKappa0Positive);
        let mut d = 0.0;
        assert_eq!(classa_curve_dkappa(c, 0.5, &mut d), ClassaStatus::Ok);
        assert!(d.is_finite());
        classa_curve_free(c);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut c = ptr::null_mut();
        let m = [1.0, 0.0, 0.0, 1.0];
        assert_eq!(
            classa_curve_new(m.as_ptr(), [0.0, 0.0].as_ptr(), ptr::null(), 3, &mut c),
            ClassaStatus::ZeroSeed
        );
        assert!(c.is_null());
        assert_eq!(
            classa_curve_new(m.as_ptr(), [1.0, 0.0].as_ptr(), ptr::null(), 1, &mut c),
            ClassaStatus::InvalidSpec
        );
        assert_eq!(
            classa_curve_new(ptr::null(), [1.0, 0.0].as_ptr(), ptr::null(), 3, &mut c),
            ClassaStatus::NullPointer
        );
        assert_eq!(classa_curve_from_document(c"degree = x".as_ptr(), &mut c), ClassaStatus::Parse);
        let mut k = 0.0;
        assert_eq!(classa_curve_kappa(ptr::null(), 0.5, &mut k), ClassaStatus::NullPointer);
        classa_curve_free(ptr::null_mut());

        let line = new_curve(m, [1.0, 2.0], 3);
        let mut flag = false;
        assert_eq!(classa_curve_is_degenerate(line, &mut flag), ClassaStatus::Ok);
        assert!(flag);
        let mut v = ClassaVerdict::NonMonotone;
        assert_eq!(classa_curve_verdict(line, 2001, &mut v, ptr::null_mut()), ClassaStatus::Ok);
        assert_eq!(v, ClassaVerdict::DegenerateLine);
        assert_eq!(classa_curve_verdict(line, 10, &mut v, ptr::null_mut()), ClassaStatus::InvalidSpec);
        classa_curve_free(line);

        let msg = CStr::from_ptr(classa_status_message(ClassaStatus::ZeroSeed));
        assert_eq!(msg.to_str().unwrap(), "seed vector is zero");
        assert!(!CStr::from_ptr(classa_version()).to_bytes().is_empty());
    }
}

#[test]
fn audit_entry_points() {
    unsafe {
        let (mut corrected, mut misprint) = (false, true);
        let m = [3.0, 0.0, 0.0, 1.5];
        assert_eq!(classa_sv_conditions(m.as_ptr(), 2, &mut corrected, &mut misprint), ClassaStatus::Ok);
        assert!(corrected && !misprint);
        let zhao = [1.2545, -2.9594, 1.5576, 2.3836];
        let mut l = 0.0;
        assert_eq!(classa_expansion_eigenvalue(zhao.as_ptr(), 2, &mut l), ClassaStatus::Ok);
        assert!((l - 0.919).abs() < 1e-3);
        let eye3 = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
        assert_eq!(classa_expansion_eigenvalue(eye3.as_ptr(), 3, &mut l), ClassaStatus::Ok);
        assert_eq!(l, 1.0);
        assert_eq!(classa_expansion_eigenvalue(eye3.as_ptr(), 4, &mut l), ClassaStatus::InvalidSpec);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/classa.h");
    for name in [
        "classa_status_message",
        "classa_version",
        "classa_curve_new",
        "classa_curve_from_document",
        "classa_curve_free",
        "classa_curve_degree",
        "classa_curve_is_degenerate",
        "classa_curve_control_points",
        "classa_curve_point",
        "classa_curve_kappa",
        "classa_curve_dkappa",
        "classa_curve_certify",
        "classa_curve_verdict",
        "classa_sv_conditions",
        "classa_expansion_eigenvalue",
        "typedef struct ClassaCurve ClassaCurve",
        "CLASSA_STATUS_DEGENERATE_LINE = 8",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

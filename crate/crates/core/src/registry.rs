// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! The fifteen worked examples, with their published monotonicity verdicts.
//!
//! Fractions are kept exact. Entries involving square roots or angles are
//! stored as the nearest `f64`. The last example appears twice, at degrees 3
//! and 8.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::certify::MonotoneKind;
use crate::document::{Scalar, SpecDocument};

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleRecord {
    pub id: u32,
    /// `"7"`, or `"15@8"` where an example is run at several degrees.
    pub label: String,
    pub spec: SpecDocument,
    /// `true` when the published curve has monotone curvature.
    pub expected_monotone: bool,
    pub figure_ref: &'static str,
}

impl ExampleRecord {
    pub fn matches(&self, kind: MonotoneKind) -> bool {
        kind.is_monotone() == self.expected_monotone
    }
}

fn q(p: i64, d: i64) -> Scalar {
    Scalar::Fraction(p, d)
}

fn int(p: i64) -> Scalar {
    Scalar::Fraction(p, 1)
}

fn dec(x: f64) -> Scalar {
    Scalar::Decimal(x)
}

fn raw(matrix: [Scalar; 4], seed: [Scalar; 2], degree: usize) -> SpecDocument {
    SpecDocument::Raw {
        matrix,
        seed,
        degree,
        base: [int(0), int(0)],
    }
}

fn eigen(h: f64, phi: f64, gamma: f64, seed: [Scalar; 2], degree: usize) -> SpecDocument {
    SpecDocument::Eigen {
        h: dec(h),
        phi: dec(phi),
        gamma: dec(gamma),
        seed,
        degree,
    }
}

fn record(id: u32, label: &str, spec: SpecDocument, expected_monotone: bool, figure_ref: &'static str) -> ExampleRecord {
    ExampleRecord {
        id,
        label: label.to_string(),
        spec,
        expected_monotone,
        figure_ref,
    }
}

fn m13_entries() -> [f64; 4] {
    let r3 = 3f64.sqrt();
    let (a, b) = ((2.0 + r3).sqrt(), (2.0 - r3).sqrt());
    [
        0.75 * (2.0 * a + 2.0 - r3),
        -0.75 * (6.0 - r3) * b / a,
        0.75,
        0.75 * (2.0 * a - 2.0 + r3),
    ]
}

/// All sixteen records, ordered by id then degree.
pub fn registry() -> Vec<ExampleRecord> {
    let r3 = 3f64.sqrt();
    let w13 = (5.0 * PI / 12.0).sin_cos();
    vec![
        record(1, "1", raw([q(5, 4), int(0), int(0), q(1, 10)], [int(1), int(-1)], 3), false, "Figure 1"),
        record(2, "2", raw([int(4), int(0), int(0), int(1)], [q(2, 5), int(-5)], 3), false, "Figure 2"),
        record(
            3,
            "3",
            raw([q(3, 2), dec(-3.0 * r3 / 4.0), int(0), q(3, 4)], [dec(2.0 - r3), int(-1)], 5),
            true,
            "Figure 3",
        ),
        record(
            4,
            "4",
            raw([q(3, 2), dec(6.0 / (5.0 * r3)), int(0), q(3, 10)], [q(5, 4), dec(-r3 / 4.0)], 4),
            true,
            "Figure 4",
        ),
        record(5, "5", raw([q(3, 2), int(0), int(0), q(7, 10)], [int(1), q(-11, 10)], 3), true, "Figure 5"),
        record(6, "6", raw([dec(0.7), int(0), int(1), dec(0.7)], [int(10), int(1)], 3), false, "Figure 6"),
        record(7, "7", raw([int(1), int(0), int(1), int(1)], [int(1), int(-1)], 3), false, "Figure 7"),
        record(8, "8", raw([int(1), int(0), int(1), int(1)], [int(3), int(1)], 3), true, "Figure 8"),
        record(9, "9", raw([q(1, 2), int(-2), int(0), q(1, 2)], [q(3, 2), int(-1)], 3), true, "Figure 9"),
        record(10, "10", raw([q(3, 2), int(-2), int(0), q(3, 2)], [q(7, 2), q(3, 4)], 4), true, "Figure 10"),
        record(11, "11", eigen(1.8, 0.925, FRAC_PI_2, [dec(0.4), dec(0.1)], 7), true, "Figure 11"),
        record(12, "12", eigen(1.2, 0.925, FRAC_PI_2, [dec(0.4), dec(0.1)], 7), false, "Figure 12"),
        record(
            13,
            "13",
            raw(m13_entries().map(dec), [dec(10.0 * w13.1), dec(10.0 * w13.0)], 5),
            true,
            "Figure 13",
        ),
        record(14, "14", eigen(2.0, PI / 4.0, PI / 3.0, [int(2), dec(2.0 * r3)], 3), false, "Figure 14"),
        record(15, "15@3", eigen(4.0, PI / 6.0, 2.0 * PI / 3.0, [int(4), int(0)], 3), true, "Figure 15"),
        record(15, "15@8", eigen(4.0, PI / 6.0, 2.0 * PI / 3.0, [int(4), int(0)], 8), false, "Figure 16"),
    ]
}

/// Records with the given id; empty for an unknown id.
pub fn records_for(id: u32) -> Vec<ExampleRecord> {
    registry().into_iter().filter(|r| r.id == id).collect()
}

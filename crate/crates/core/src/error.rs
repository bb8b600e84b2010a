// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the curve, certification and audit routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("seed vector is zero")]
    ZeroSeed,
    #[error("vector has zero length")]
    ZeroVector,
    #[error("subdivision matrix is singular at t = {t}")]
    SingularSubdivision { t: f64 },
    #[error("curve speed vanishes at t = {t}")]
    VanishingSpeed { t: f64 },
    #[error("operation requires a {expected} spectral decomposition")]
    WrongVariant { expected: &'static str },
    #[error("consecutive chain vectors {index} and {next} are parallel", next = index + 1)]
    CollinearPair { index: usize },
    #[error("curve is a straight line segment (curvature vanishes identically)")]
    DegenerateLine,
    #[error("invalid curve spec: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

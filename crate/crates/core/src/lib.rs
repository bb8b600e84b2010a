// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Planar Bézier curves generated by iterating a 2×2 matrix on a seed edge.
//!
//! The crate builds the control polygon from `(n, M, w, b0)`, evaluates the
//! curvature both directly and through a closed form in the eigenstructure of
//! `M`, decides curvature monotonicity with a set of sufficient conditions
//! backed by a numerical oracle, and audits the singular-value based
//! "Class A" matrix conditions.

pub mod audit;
pub mod certify;
pub mod cli;
pub mod closed_form;
pub mod curve;
pub mod document;
pub mod error;
pub mod export;
pub mod linalg;
pub mod registry;
pub mod small;

pub use closed_form::{build_model, CurvatureModel};
pub use curve::{ControlPolygon, CurveSpec};
pub use error::{Error, Result};
pub use linalg::{decompose, Mat2, SpectralData, Vec2};

// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixed-size square matrices for the Class A audit (2×2 and 3×3).

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2};

const JACOBI_MAX_SWEEPS: usize = 30;
const JACOBI_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VecN<const N: usize>(pub [f64; N]);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatN<const N: usize>(pub [[f64; N]; N]);

pub type Vec3 = VecN<3>;
pub type Mat3 = MatN<3>;

impl<const N: usize> VecN<N> {
    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Zero-padded (or truncated) copy in three dimensions.
    pub fn embed3(&self) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (o, v) in out.iter_mut().zip(self.0.iter()) {
            *o = *v;
        }
        out
    }
}

impl From<Vec2> for VecN<2> {
    fn from(v: Vec2) -> Self {
        VecN([v.x, v.y])
    }
}

impl<const N: usize> MatN<N> {
    pub fn identity() -> Self {
        let mut m = [[0.0; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        MatN(m)
    }

    pub fn diag(d: [f64; N]) -> Self {
        let mut m = [[0.0; N]; N];
        for i in 0..N {
            m[i][i] = d[i];
        }
        MatN(m)
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                t[i][j] = self.0[j][i];
            }
        }
        MatN(t)
    }

    pub fn scale(&self, s: f64) -> Self {
        MatN(self.0.map(|row| row.map(|v| v * s)))
    }

    /// `(M + Mᵀ)/2`.
    pub fn symmetric_part(&self) -> Self {
        let t = self.transpose();
        let mut s = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                s[i][j] = 0.5 * (self.0[i][j] + t.0[i][j]);
            }
        }
        MatN(s)
    }

    pub fn apply(&self, v: &VecN<N>) -> VecN<N> {
        let mut out = [0.0; N];
        for (o, row) in out.iter_mut().zip(self.0.iter()) {
            *o = row.iter().zip(v.0.iter()).map(|(a, b)| a * b).sum();
        }
        VecN(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }

    /// Eigenvalues of the symmetric part, ascending.
    pub fn symmetric_eigenvalues(&self) -> [f64; N] {
        jacobi_eigenvalues(self.symmetric_part())
    }

    /// Singular values, descending, from the eigenvalues of `MᵀM`.
    pub fn singular_values(&self) -> [f64; N] {
        let gram = self.transpose() * *self;
        let mut ev = jacobi_eigenvalues(gram).map(|l| l.max(0.0).sqrt());
        ev.reverse();
        ev
    }
}

impl<const N: usize> Mul for MatN<N> {
    type Output = MatN<N>;
    fn mul(self, rhs: MatN<N>) -> MatN<N> {
        let mut out = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                out[i][j] = (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        MatN(out)
    }
}

impl From<Mat2> for MatN<2> {
    fn from(m: Mat2) -> Self {
        MatN([[m.m11, m.m12], [m.m21, m.m22]])
    }
}

/// Cyclic Jacobi on a symmetric matrix; eigenvalues sorted ascending.
fn jacobi_eigenvalues<const N: usize>(sym: MatN<N>) -> [f64; N] {
    let mut a = sym.0;
    let total = sym.frobenius_norm();
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= JACOBI_TOL * total {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev = [0.0; N];
    for (i, e) in ev.iter_mut().enumerate() {
        *e = a[i][i];
    }
    ev.sort_by(f64::total_cmp);
    ev
}

/// Singular values of a 2×2 matrix, descending.
pub fn singular_values2(m: Mat2) -> [f64; 2] {
    MatN::<2>::from(m).singular_values()
}

/// Angle in `[0, π]` between two nonzero vectors.
pub fn angle_between<const N: usize>(u: &VecN<N>, v: &VecN<N>) -> Result<f64> {
    let (nu, nv) = (u.norm(), v.norm());
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((u.dot(v) / (nu * nv)).clamp(-1.0, 1.0).acos())
}

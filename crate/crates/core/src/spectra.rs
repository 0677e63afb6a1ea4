//! Poles, zeros and residues of barycentric rationals.
//!
//! Poles are the finite eigenvalues of the arrowhead pencil
//!
//! ```text
//!     | 0  w_1 ... w_m |        | 0          |
//! E = | 1  s_1         |,   B = |   1        |
//!     | :       .      |        |     .      |
//!     | 1          s_m |        |          1 |
//! ```
//!
//! and zeros use the same pencil with `w_j f_j` in the first row. The pencil
//! always has two infinite eigenvalues, which are filtered out.

use ndarray::Array2;
use ndarray_linalg::{EigGeneralized, GeneralizedEigenvalue};
use num_complex::Complex64;
use serde::Serialize;

use crate::barycentric::BarycentricRational;
use crate::error::{Error, Result};
use crate::laplace::{classify, BoundaryCurve, PointLocation};

/// Eigenvalues larger than this in modulus are taken to be infinite.
pub const INFINITE_EIGENVALUE_CUTOFF: f64 = 1e13;

/// Poles closer than this (relative) are reported as near-multiple.
pub const NEAR_MULTIPLE_RTOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residue {
    pub value: Complex64,
    /// False when the pole has a near-coincident neighbour.
    pub reliable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoleZeroReport {
    pub poles: Vec<Complex64>,
    pub zeros: Vec<Complex64>,
    /// Aligned with `poles`.
    pub residues: Vec<Residue>,
}

impl PoleZeroReport {
    pub fn new(r: &BarycentricRational) -> Result<Self> {
        let poles = poles(r)?;
        let zeros = zeros(r)?;
        let residues = residues(r, &poles);
        Ok(Self {
            poles,
            zeros,
            residues,
        })
    }
}

pub fn poles(r: &BarycentricRational) -> Result<Vec<Complex64>> {
    pencil_eigenvalues(r, r.weights().to_vec())
}

pub fn zeros(r: &BarycentricRational) -> Result<Vec<Complex64>> {
    let first_row = r
        .weights()
        .iter()
        .zip(r.support_values())
        .map(|(w, f)| w * f)
        .collect();
    pencil_eigenvalues(r, first_row)
}

fn pencil_eigenvalues(r: &BarycentricRational, first_row: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let m = r.len();
    if m < 2 {
        return Ok(Vec::new());
    }
    // Scaling the first row leaves the eigenvalues unchanged; dividing by its
    // largest entry makes the pencil invariant to rescaled weights.
    let lead = first_row
        .iter()
        .copied()
        .reduce(|a, b| if b.norm() > a.norm() { b } else { a })
        .unwrap_or_default();
    let first_row: Vec<Complex64> = if lead.norm() > 0.0 {
        first_row.iter().map(|v| v / lead).collect()
    } else {
        first_row
    };
    let one = Complex64::new(1.0, 0.0);
    let mut e = Array2::<Complex64>::zeros((m + 1, m + 1));
    let mut b = Array2::<Complex64>::zeros((m + 1, m + 1));
    for (j, (&s, &v)) in r.support_points().iter().zip(&first_row).enumerate() {
        e[[0, j + 1]] = v;
        e[[j + 1, 0]] = one;
        e[[j + 1, j + 1]] = s;
        b[[j + 1, j + 1]] = one;
    }
    let (eigs, _) = (e, b)
        .eig_generalized(None)
        .map_err(|err| Error::LinAlg(format!("generalized eigensolve failed: {err}")))?;
    Ok(eigs
        .iter()
        .filter_map(|ev| match ev {
            GeneralizedEigenvalue::Finite(lambda, _)
                if lambda.is_finite() && lambda.norm() <= INFINITE_EIGENVALUE_CUTOFF =>
            {
                Some(*lambda)
            }
            _ => None,
        })
        .collect())
}

/// Residues `n(p) / d'(p)` at simple poles.
pub fn residues(r: &BarycentricRational, poles: &[Complex64]) -> Vec<Residue> {
    poles
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let near_multiple = poles.iter().enumerate().any(|(k, &q)| {
                k != i && (p - q).norm() <= NEAR_MULTIPLE_RTOL * p.norm().max(q.norm())
            });
            if near_multiple {
                log::warn!("pole {p} has a near-coincident neighbour; residue unreliable");
            }
            let (num, _) = r.numerator_denominator(p);
            Residue {
                value: num / r.denominator_derivative(p),
                reliable: !near_multiple,
            }
        })
        .collect()
}

/// Partitions poles into those inside and outside `region`.
///
/// Poles on (or within rounding of) the boundary count as outside.
pub fn split_poles(
    poles: &[Complex64],
    region: &BoundaryCurve,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for &p in poles {
        match classify(region, p) {
            PointLocation::Inside => inside.push(p),
            PointLocation::Outside => outside.push(p),
            PointLocation::OnBoundary => {
                log::warn!("pole {p} lies on the region boundary; classified outside");
                outside.push(p);
            }
        }
    }
    (inside, outside)
}

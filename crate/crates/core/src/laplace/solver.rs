use ndarray::{Array1, Array2};
use ndarray_linalg::LeastSquaresSvd;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::boundary::{sample_boundary, BoundaryCurve, ON_BOUNDARY_RTOL};
use super::polybasis::ArnoldiBasis;
use crate::aaa::{aaa_fit, AaaConfig};
use crate::barycentric::SampleSet;
use crate::error::{Error, Result};
use crate::spectra::{poles, split_poles};

/// Validation samples are this many times denser than training samples.
const VALIDATION_FACTOR: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct LaplaceConfig {
    /// Relative tolerance of the boundary-data AAA fit, and the target
    /// boundary error.
    pub tol: f64,
    pub poly_degree: usize,
    pub n_per_side: usize,
    /// Cluster samples toward corners (ignored for curves without corners).
    pub clustering: bool,
    /// Support-point cap for the boundary-data fit. The least-squares step
    /// recovers accuracy that a capped fit leaves on the table, and large
    /// fits tend to place poles very close to the boundary.
    pub max_support: usize,
}

impl Default for LaplaceConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            poly_degree: 10,
            n_per_side: 200,
            clustering: true,
            max_support: 80,
        }
    }
}

/// Boundary points with real Dirichlet data.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySamples {
    pub points: Vec<Complex64>,
    pub data: Vec<f64>,
}

impl BoundarySamples {
    pub fn new(points: Vec<Complex64>, h: impl Fn(Complex64) -> f64) -> Result<Self> {
        let data: Vec<f64> = points.iter().map(|&z| h(z)).collect();
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { points, data })
    }
}

/// Harmonic function `u = Re g`, where
/// `g(z) = Σ (a_j - i b_j)/(z - s_j) + c_0 + Σ (α_k - i β_k) q_k(z)`
/// and `q_k` is an Arnoldi-orthogonalized polynomial basis.
///
/// `coefficients` is laid out as `[a_1, b_1, .., a_P, b_P, c_0, α_1, β_1, ..]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSolution {
    pub exterior_poles: Vec<Complex64>,
    pub coefficients: Vec<f64>,
    pub poly_degree: usize,
    /// Max `|u - h|` on the validation sampling.
    pub boundary_error: f64,
    /// Max `|u - h|` on the training sampling.
    pub training_error: f64,
    /// Support points used by the boundary-data fit.
    pub aaa_support: usize,
    /// Poles of the boundary-data fit that were discarded as interior.
    pub interior_poles: usize,
    basis: ArnoldiBasis,
    conjugate_offset: f64,
}

impl HarmonicSolution {
    /// `u(z)`.
    pub fn eval_solution(&self, z: Complex64) -> f64 {
        self.eval_analytic(z).re
    }

    /// `u(z) + i v(z)` with `v` the harmonic conjugate, normalized to vanish
    /// at the first training sample.
    pub fn eval_analytic(&self, z: Complex64) -> Complex64 {
        self.analytic_raw(z) - Complex64::new(0.0, self.conjugate_offset)
    }

    fn analytic_raw(&self, z: Complex64) -> Complex64 {
        let p = self.exterior_poles.len();
        let c = &self.coefficients;
        let mut g = Complex64::new(0.0, 0.0);
        for (j, &s) in self.exterior_poles.iter().enumerate() {
            g += Complex64::new(c[2 * j], -c[2 * j + 1]) / (z - s);
        }
        let q = self.basis.eval(z);
        g += c[2 * p] * q[0];
        for k in 1..=self.poly_degree {
            g += Complex64::new(c[2 * p + 2 * k - 1], -c[2 * p + 2 * k]) * q[k];
        }
        g
    }
}

/// Solves `Δu = 0` inside `curve` with `u = h` on the boundary.
///
/// The boundary data is fitted by AAA; poles of that fit lying outside the
/// domain become the basis `Re 1/(z - s_j)`, `Im 1/(z - s_j)` of a real
/// least-squares problem, together with a polynomial part.
pub fn solve_dirichlet(
    curve: &BoundaryCurve,
    h: impl Fn(Complex64) -> f64,
    config: &LaplaceConfig,
) -> Result<HarmonicSolution> {
    let train = BoundarySamples::new(
        sample_boundary(curve, config.n_per_side, config.clustering)?,
        &h,
    )?;
    let samples = SampleSet::new(
        train.points.clone(),
        train.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
    )?;
    let fit = aaa_fit(
        &samples,
        &AaaConfig {
            rel_tol: config.tol,
            max_support: config.max_support,
            ..AaaConfig::default()
        },
    )?;
    let all_poles = poles(&fit.approximant)?;
    let (interior, outside) = split_poles(&all_poles, curve);
    let guard = ON_BOUNDARY_RTOL * curve.diameter();
    let exterior: Vec<Complex64> = outside
        .into_iter()
        .filter(|&p| {
            let keep = curve.distance_to(p) > guard;
            if !keep {
                log::warn!("discarding pole {p} on the boundary");
            }
            keep
        })
        .collect();
    let n_interior = all_poles.len() - exterior.len();
    debug_assert!(n_interior >= interior.len());

    let np = exterior.len();
    let deg = config.poly_degree;
    if np == 0 && deg == 0 {
        return Err(Error::EmptyBasis);
    }
    let (basis, q) = ArnoldiBasis::fit(&train.points, deg);
    let rows = train.points.len();
    let cols = 2 * np + 2 * deg + 1;
    let mut a = Array2::<f64>::zeros((rows, cols));
    for (i, &z) in train.points.iter().enumerate() {
        for (j, &s) in exterior.iter().enumerate() {
            let g = 1.0 / (z - s);
            a[[i, 2 * j]] = g.re;
            a[[i, 2 * j + 1]] = g.im;
        }
        a[[i, 2 * np]] = q[0][i].re;
        for k in 1..=deg {
            a[[i, 2 * np + 2 * k - 1]] = q[k][i].re;
            a[[i, 2 * np + 2 * k]] = q[k][i].im;
        }
    }
    let norms: Vec<f64> = a
        .columns()
        .into_iter()
        .map(|col| {
            let n = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 0.0 { n } else { 1.0 }
        })
        .collect();
    for (mut col, &n) in a.columns_mut().into_iter().zip(&norms) {
        col.mapv_inplace(|x| x / n);
    }
    let rhs = Array1::from(train.data.clone());
    let sol = a.least_squares(&rhs)?;
    let coefficients: Vec<f64> = sol
        .solution
        .iter()
        .zip(&norms)
        .map(|(x, n)| x / n)
        .collect();

    let mut solution = HarmonicSolution {
        exterior_poles: exterior,
        coefficients,
        poly_degree: deg,
        boundary_error: 0.0,
        training_error: 0.0,
        aaa_support: fit.approximant.len(),
        interior_poles: n_interior,
        basis,
        conjugate_offset: 0.0,
    };
    solution.conjugate_offset = solution.analytic_raw(train.points[0]).im;
    solution.training_error = misfit(&solution, &train);

    let validation = BoundarySamples::new(
        sample_boundary(curve, VALIDATION_FACTOR * config.n_per_side, config.clustering)?,
        &h,
    )?;
    solution.boundary_error = misfit(&solution, &validation);
    if solution.boundary_error > config.tol {
        log::warn!(
            "boundary error {:.3e} exceeds tolerance {:.1e}",
            solution.boundary_error,
            config.tol
        );
    }
    Ok(solution)
}

fn misfit(sol: &HarmonicSolution, samples: &BoundarySamples) -> f64 {
    samples
        .points
        .iter()
        .zip(&samples.data)
        .map(|(&z, &h)| (sol.eval_solution(z) - h).abs())
        .fold(0.0, f64::max)
}

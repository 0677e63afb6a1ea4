//! Lawson (iteratively reweighted least-squares) refinement toward the
//! minimax approximation.
//!
//! Support points stay fixed. Numerator and denominator coefficients are
//! re-solved independently each step,
//!
//! ```text
//! r(z) = Σ α_j/(z - t_j) / Σ β_j/(z - t_j),
//! ```
//!
//! by minimizing `Σ λ_i |F_i d(Z_i) - n(Z_i)|²` over unit `(β, α)`, and the
//! sample weights `λ_i` are multiplied by the current error magnitudes.

use ndarray::Array2;
use num_complex::Complex64;

use crate::aaa::{aaa_fit, AaaConfig};
use crate::barycentric::{max_error, BarycentricRational, SampleSet};
use crate::error::{Error, Result};
use crate::linalg::min_singular_vector;

/// Errors at or below this multiple of `max |F|` count as exact.
const EXACT_RTOL: f64 = 1e-14;
const WEIGHT_FLOOR: f64 = 1e-300;
const STAGNATION_WINDOW: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct LawsonConfig {
    pub max_iters: usize,
    /// Stop when the max error changes by less than this fraction over
    /// five iterations.
    pub stagnation_tol: f64,
    pub degree: usize,
}

impl LawsonConfig {
    pub fn new(degree: usize) -> Self {
        Self {
            max_iters: 20,
            stagnation_tol: 1e-3,
            degree,
        }
    }
}

/// Snapshot after one Lawson step.
#[derive(Debug, Clone)]
pub struct LawsonState {
    /// Nonnegative, summing to one.
    pub sample_weights: Vec<f64>,
    pub current: BarycentricRational,
    pub max_error: f64,
}

#[derive(Debug, Clone)]
pub struct LawsonResult {
    /// Iterate with the smallest max error, including the start.
    pub approximant: BarycentricRational,
    pub max_error: f64,
    pub start_error: f64,
    pub states: Vec<LawsonState>,
}

pub fn lawson_refine(
    samples: &SampleSet,
    start: &BarycentricRational,
    config: &LawsonConfig,
) -> Result<LawsonResult> {
    if config.max_iters == 0 || !(config.stagnation_tol > 0.0) {
        return Err(Error::InvalidInput(
            "max_iters must be >= 1 and stagnation_tol > 0".into(),
        ));
    }
    let n = samples.len();
    let m = start.len();
    if m > config.degree + 1 {
        return Err(Error::InvalidInput(format!(
            "start has {m} support points, more than degree {} allows",
            config.degree
        )));
    }
    if m + 1 > n {
        return Err(Error::InvalidInput(format!(
            "start has {m} support points but only {n} samples"
        )));
    }
    let (z, f) = (samples.points(), samples.values());
    let support = start.support_points();
    let scale = samples.max_abs_value();

    let start_error = max_error(start, samples);
    let mut best = (start.clone(), start_error);
    let mut weights = vec![1.0 / n as f64; n];
    let mut states = Vec::new();
    if start_error <= EXACT_RTOL * scale {
        states.push(LawsonState {
            sample_weights: weights,
            current: start.clone(),
            max_error: start_error,
        });
        return Ok(LawsonResult {
            approximant: start.clone(),
            max_error: start_error,
            start_error,
            states,
        });
    }

    // Row i of the linearization; support samples use the limit after
    // multiplying through by (z - t_k).
    let support_row: Vec<Option<usize>> = z
        .iter()
        .map(|zi| support.iter().position(|t| t == zi))
        .collect();
    let mut base = Array2::<Complex64>::zeros((n, 2 * m));
    for i in 0..n {
        match support_row[i] {
            Some(k) => {
                base[[i, k]] = f[i];
                base[[i, m + k]] = Complex64::new(-1.0, 0.0);
            }
            None => {
                for j in 0..m {
                    let c = 1.0 / (z[i] - support[j]);
                    base[[i, j]] = f[i] * c;
                    base[[i, m + j]] = -c;
                }
            }
        }
    }

    let mut errors: Vec<f64> = z
        .iter()
        .zip(f)
        .map(|(&zi, &fi)| (fi - start.eval(zi)).norm())
        .collect();
    let mut history = vec![start_error];
    for _ in 0..config.max_iters {
        update_weights(&mut weights, &errors);
        let mut a = base.clone();
        for (mut row, &w) in a.rows_mut().into_iter().zip(&weights) {
            let s = w.sqrt();
            row.mapv_inplace(|v| v * s);
        }
        let x = min_singular_vector(a.view())?;
        let (beta, alpha) = x.as_slice().unwrap().split_at(m);

        let mut finite = true;
        for i in 0..n {
            let r = match support_row[i] {
                Some(k) => alpha[k] / beta[k],
                None => {
                    let (mut num, mut den) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
                    for j in 0..m {
                        let c = 1.0 / (z[i] - support[j]);
                        num += alpha[j] * c;
                        den += beta[j] * c;
                    }
                    num / den
                }
            };
            errors[i] = (f[i] - r).norm();
            finite &= errors[i].is_finite();
        }
        if !finite {
            log::warn!("Lawson iterate has a pole on the sample set; stopping");
            break;
        }
        let err = errors.iter().cloned().fold(0.0, f64::max);
        let current = match BarycentricRational::new(
            support.to_vec(),
            alpha.iter().zip(beta).map(|(a, b)| a / b).collect(),
            beta.to_vec(),
        ) {
            Ok(r) => r,
            Err(e) => {
                log::warn!("Lawson iterate not representable ({e}); stopping");
                break;
            }
        };
        if err < best.1 {
            best = (current.clone(), err);
        }
        states.push(LawsonState {
            sample_weights: weights.clone(),
            current,
            max_error: err,
        });
        history.push(err);
        if history.len() > STAGNATION_WINDOW {
            let old = history[history.len() - 1 - STAGNATION_WINDOW];
            if (old - err).abs() <= config.stagnation_tol * old {
                break;
            }
        }
    }
    Ok(LawsonResult {
        approximant: best.0,
        max_error: best.1,
        start_error,
        states,
    })
}

fn update_weights(weights: &mut [f64], errors: &[f64]) {
    for (w, e) in weights.iter_mut().zip(errors) {
        *w = (*w * e).max(WEIGHT_FLOOR);
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
}

/// AAA to `degree + 1` support points followed by Lawson refinement.
pub fn aaa_lawson(samples: &SampleSet, config: &LawsonConfig) -> Result<LawsonResult> {
    let start = aaa_fit(
        samples,
        &AaaConfig {
            rel_tol: f64::EPSILON,
            max_support: config.degree + 1,
            cleanup_enabled: false,
            ..AaaConfig::default()
        },
    )?;
    lawson_refine(samples, &start.approximant, config)
}

/// Winding number about the origin of the closed polygon through `errors`.
///
/// Each consecutive pair (including last to first) must subtend less than
/// half a turn.
pub fn winding_number(errors: &[Complex64]) -> Result<i64> {
    if let Some(i) = errors.iter().position(|e| e.re == 0.0 && e.im == 0.0) {
        return Err(Error::ZeroOnCurve(i));
    }
    let n = errors.len();
    let mut total = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        let step = (errors[j] / errors[i]).arg();
        if step.abs() >= std::f64::consts::PI * (1.0 - 1e-9) {
            return Err(Error::Undersampled(i, j));
        }
        total += step;
    }
    Ok((total / std::f64::consts::TAU).round() as i64)
}

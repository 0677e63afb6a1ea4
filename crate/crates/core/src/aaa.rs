//! Adaptive Antoulas–Anderson iteration.
//!
//! Each step adds the sample with the largest current error as a support
//! point, then recomputes the barycentric weights as the smallest right
//! singular vector of the Loewner matrix over the remaining samples.

use num_complex::Complex64;

use crate::barycentric::{max_error, BarycentricRational, SampleSet};
use crate::error::{Error, Result};
use crate::linalg::build_loewner;
use crate::spectra;

#[derive(Debug, Clone, PartialEq)]
pub struct AaaConfig {
    /// Stopping tolerance relative to `max |F|`.
    pub rel_tol: f64,
    /// Cap on the number of support points (degree + 1).
    pub max_support: usize,
    pub cleanup_enabled: bool,
    pub cleanup_tol: f64,
    /// Record the full error vector at every greedy step.
    pub trace: bool,
}

impl Default for AaaConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            max_support: 100,
            cleanup_enabled: true,
            cleanup_tol: 1e-13,
            trace: false,
        }
    }
}

impl AaaConfig {
    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidInput("rel_tol must be positive".into()));
        }
        if self.max_support == 0 {
            return Err(Error::InvalidInput("max_support must be at least 1".into()));
        }
        Ok(())
    }
}

/// One greedy selection, recorded in trace mode.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyStep {
    /// Sample index added as a support point.
    pub chosen: usize,
    /// `|F_i - r(Z_i)|` for every sample just before the choice; zero at
    /// existing support points.
    pub errors: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct AaaResult {
    pub approximant: BarycentricRational,
    /// Sample index of each support point of `approximant`.
    pub support_indices: Vec<usize>,
    /// Max error over the samples after each iteration.
    pub error_history: Vec<f64>,
    pub final_error: f64,
    pub converged: bool,
    pub trace: Vec<GreedyStep>,
}

pub fn aaa_fit(samples: &SampleSet, config: &AaaConfig) -> Result<AaaResult> {
    config.validate()?;
    let (z, f) = (samples.points(), samples.values());
    let n = samples.len();
    let tol = config.rel_tol * samples.max_abs_value();

    let mean = f.iter().sum::<Complex64>() / n as f64;
    let mut approx = vec![mean; n];
    let mut is_support = vec![false; n];
    let mut support: Vec<usize> = Vec::new();
    let mut weights: Vec<Complex64> = Vec::new();
    let mut history = Vec::new();
    let mut trace = Vec::new();
    let mut converged = false;

    loop {
        // Greedy step, ties to the lowest index.
        let mut chosen = None;
        let mut worst = -1.0;
        for i in (0..n).filter(|&i| !is_support[i]) {
            let e = (f[i] - approx[i]).norm();
            if e > worst {
                worst = e;
                chosen = Some(i);
            }
        }
        let Some(chosen) = chosen else { break };
        if !support.is_empty() && support.len() + 1 == n {
            // Adding this point would leave no rows: the discrete problem is exhausted.
            break;
        }
        if config.trace {
            let errors = (0..n)
                .map(|i| if is_support[i] { 0.0 } else { (f[i] - approx[i]).norm() })
                .collect();
            trace.push(GreedyStep { chosen, errors });
        }
        support.push(chosen);
        is_support[chosen] = true;

        if n == 1 {
            weights = vec![Complex64::new(1.0, 0.0)];
        } else {
            let loewner = build_loewner(samples, &support)?;
            weights = loewner.min_singular_vector()?.to_vec();
        }
        for i in 0..n {
            approx[i] = if is_support[i] {
                f[i]
            } else {
                eval_raw(&support, &weights, z, f, z[i])
            };
        }
        let err = (0..n).map(|i| (f[i] - approx[i]).norm()).fold(0.0, f64::max);
        history.push(err);
        if err <= tol {
            converged = true;
            break;
        }
        if support.len() >= config.max_support {
            break;
        }
    }

    let mut result = assemble(samples, &support, &weights, history, converged, trace)?;
    if config.cleanup_enabled {
        result = cleanup(&result, samples, config.cleanup_tol)?;
    }
    Ok(result)
}

fn eval_raw(
    support: &[usize],
    weights: &[Complex64],
    z: &[Complex64],
    f: &[Complex64],
    at: Complex64,
) -> Complex64 {
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = Complex64::new(0.0, 0.0);
    for (&j, &w) in support.iter().zip(weights) {
        let c = w / (at - z[j]);
        num += c * f[j];
        den += c;
    }
    num / den
}

fn assemble(
    samples: &SampleSet,
    support: &[usize],
    weights: &[Complex64],
    error_history: Vec<f64>,
    converged: bool,
    trace: Vec<GreedyStep>,
) -> Result<AaaResult> {
    let (z, f) = (samples.points(), samples.values());
    let approximant = BarycentricRational::new(
        support.iter().map(|&j| z[j]).collect(),
        support.iter().map(|&j| f[j]).collect(),
        weights.to_vec(),
    )?;
    // Pruning may have dropped entries; realign the index list.
    let support_indices = approximant
        .support_points()
        .iter()
        .map(|s| support.iter().copied().find(|&j| z[j] == *s).unwrap())
        .collect();
    let final_error = max_error(&approximant, samples);
    Ok(AaaResult {
        approximant,
        support_indices,
        error_history,
        final_error,
        converged,
        trace,
    })
}

/// Removes spurious pole–zero pairs.
///
/// A pole `p` with residue `ρ` is spurious when
/// `|ρ| < tol · max|F| · dist(p, Z)`. The support point nearest each spurious
/// pole is dropped and the weights are re-solved once over the reduced
/// support set. Returns the input unchanged when nothing is spurious.
pub fn cleanup(result: &AaaResult, samples: &SampleSet, tol: f64) -> Result<AaaResult> {
    let r = &result.approximant;
    if r.len() < 2 {
        return Ok(result.clone());
    }
    let scale = samples.max_abs_value();
    let poles = spectra::poles(r)?;
    let residues = spectra::residues(r, &poles);
    let spurious: Vec<Complex64> = poles
        .iter()
        .zip(&residues)
        .filter(|(p, res)| {
            let dist = samples
                .points()
                .iter()
                .map(|z| (*z - **p).norm())
                .fold(f64::INFINITY, f64::min);
            res.value.norm() < tol * scale * dist
        })
        .map(|(p, _)| *p)
        .collect();
    if spurious.is_empty() {
        return Ok(result.clone());
    }

    let mut support = result.support_indices.clone();
    let z = samples.points();
    for p in &spurious {
        if support.len() <= 1 {
            break;
        }
        let k = (0..support.len())
            .min_by(|&a, &b| (z[support[a]] - p).norm().total_cmp(&(z[support[b]] - p).norm()))
            .unwrap();
        support.remove(k);
    }
    log::debug!(
        "cleanup removed {} support points for {} spurious poles",
        result.support_indices.len() - support.len(),
        spurious.len()
    );
    let weights = build_loewner(samples, &support)?.min_singular_vector()?.to_vec();
    assemble(
        samples,
        &support,
        &weights,
        result.error_history.clone(),
        result.converged,
        result.trace.clone(),
    )
}

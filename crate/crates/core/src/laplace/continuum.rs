//! AAA on a real interval treated as a continuum.
//!
//! The sample mesh starts as 33 Chebyshev points and is refined as support
//! points are chosen: whenever a point becomes a support point, a few test
//! points are placed in each of the two gaps between it and its neighbouring
//! support points (or the interval ends). Every mesh point that is not a
//! support point is a least-squares row, so `f` is evaluated only where the
//! approximation is being resolved.

use num_complex::Complex64;

use crate::barycentric::{BarycentricRational, SampleSet};
use crate::error::{Error, Result};
use crate::linalg::build_loewner;

const INITIAL_POINTS: usize = 33;
/// Test points inserted into each gap next to a new support point.
const POINTS_PER_GAP: usize = 3;
const REL_TOL: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct IntervalFit {
    pub approximant: BarycentricRational,
    /// Number of evaluations of `f`.
    pub evaluations: usize,
    /// Max error over the evaluated mesh after each support point.
    pub error_history: Vec<f64>,
    /// Max error over the evaluated mesh for the returned approximant.
    pub mesh_error: f64,
}

struct MeshPoint {
    x: f64,
    fx: f64,
    support: bool,
}

/// Near-best rational approximation of type `(degree, degree)` to `f` on
/// `[a, b]`.
pub fn fit_interval(
    f: impl Fn(f64) -> f64,
    degree: usize,
    interval: (f64, f64),
) -> Result<IntervalFit> {
    let (a, b) = interval;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput(format!("bad interval [{a}, {b}]")));
    }
    let mut evaluations = 0;
    let mut eval = |x: f64| -> Result<f64> {
        evaluations += 1;
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::InvalidInput(format!("f({x}) is not finite")))
        }
    };

    let mut mesh: Vec<MeshPoint> = Vec::new();
    for k in (0..INITIAL_POINTS).rev() {
        let t = (std::f64::consts::PI * k as f64 / (INITIAL_POINTS - 1) as f64).cos();
        let x = (0.5 * (a + b) + 0.5 * (b - a) * t).clamp(a, b);
        if mesh.last().map_or(true, |p: &MeshPoint| p.x < x) {
            mesh.push(MeshPoint {
                x,
                fx: eval(x)?,
                support: false,
            });
        }
    }

    let max_support = degree + 1;
    let mut approx: Vec<f64> = {
        let mean = mesh.iter().map(|p| p.fx).sum::<f64>() / mesh.len() as f64;
        vec![mean; mesh.len()]
    };
    let mut history = Vec::new();
    let mut best_r = None;
    loop {
        let scale = mesh.iter().map(|p| p.fx.abs()).fold(0.0, f64::max);
        let mut chosen = None;
        let mut worst = -1.0;
        for (i, p) in mesh.iter().enumerate() {
            let e = (p.fx - approx[i]).abs();
            if !p.support && e > worst {
                worst = e;
                chosen = Some(i);
            }
        }
        let Some(chosen) = chosen else { break };
        mesh[chosen].support = true;

        // Refine the gaps on both sides of the new support point.
        let x = mesh[chosen].x;
        let left = mesh[..chosen]
            .iter()
            .rev()
            .find(|p| p.support)
            .map_or(a, |p| p.x);
        let right = mesh[chosen + 1..]
            .iter()
            .find(|p| p.support)
            .map_or(b, |p| p.x);
        for (lo, hi) in [(left, x), (x, right)] {
            for k in 1..=POINTS_PER_GAP {
                let t = lo + (hi - lo) * k as f64 / (POINTS_PER_GAP + 1) as f64;
                let pos = mesh.partition_point(|p| p.x < t);
                if (pos < mesh.len() && mesh[pos].x == t) || t <= lo || t >= hi {
                    continue;
                }
                let ft = eval(t)?;
                mesh.insert(
                    pos,
                    MeshPoint {
                        x: t,
                        fx: ft,
                        support: false,
                    },
                );
            }
        }

        let samples = SampleSet::new(
            mesh.iter().map(|p| Complex64::new(p.x, 0.0)).collect(),
            mesh.iter().map(|p| Complex64::new(p.fx, 0.0)).collect(),
        )?;
        let support: Vec<usize> = (0..mesh.len()).filter(|&i| mesh[i].support).collect();
        let weights = build_loewner(&samples, &support)?.min_singular_vector()?;
        let r = BarycentricRational::new(
            support.iter().map(|&i| samples.points()[i]).collect(),
            support.iter().map(|&i| samples.values()[i]).collect(),
            weights.to_vec(),
        )?;
        approx = mesh
            .iter()
            .map(|p| r.eval(Complex64::new(p.x, 0.0)).re)
            .collect();
        let err = mesh
            .iter()
            .zip(&approx)
            .map(|(p, v)| (p.fx - v).abs())
            .fold(0.0, f64::max);
        history.push(err);
        best_r = Some((r, err));
        if err <= REL_TOL * scale || support.len() >= max_support {
            break;
        }
        if support.len() + 1 >= mesh.len() {
            break;
        }
    }
    let (approximant, mesh_error) = best_r.ok_or_else(|| Error::InvalidInput("empty mesh".into()))?;
    Ok(IntervalFit {
        approximant,
        evaluations,
        error_history: history,
        mesh_error,
    })
}

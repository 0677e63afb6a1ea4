//! `laplace`: Dirichlet problems on a boundary read from CSV.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use aaa_core::laplace::{classify, PointLocation};
use aaa_core::{solve_dirichlet, BoundaryCurve, Complex64, HarmonicSolution, LaplaceConfig};
use anyhow::{bail, Result};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::io::{self, CornerMode, GridSpec};
use crate::Outcome;

#[derive(Debug, Args)]
pub struct LaplaceArgs {
    /// Boundary vertices, CSV `re,im[,corner]`, counterclockwise or clockwise.
    #[arg(long, short)]
    pub geometry: PathBuf,
    #[arg(long, value_enum, default_value_t = CornerMode::All)]
    pub corners: CornerMode,
    /// `constant`, `re_z2`, `smooth` (e^x sin 2y), or a CSV with one value
    /// per geometry vertex, interpolated linearly along each side.
    #[arg(long)]
    pub data: String,
    /// Where to write the solution JSON.
    #[arg(long, short)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 10)]
    pub poly_degree: usize,
    #[arg(long, default_value_t = 200)]
    pub n_per_side: usize,
    /// Cluster boundary samples toward corners.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub cluster: bool,
    /// Support-point cap for the boundary-data fit.
    #[arg(long, default_value_t = 80)]
    pub max_support: usize,
    /// Evaluate u and its conjugate v on this grid (re_min,re_max,im_min,im_max,nx,ny).
    #[arg(long, requires = "grid_output", allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    #[arg(long, requires = "grid")]
    pub grid_output: Option<PathBuf>,
    /// Seed for a random interior check of the maximum principle.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Boundary data given at vertices, linear in between.
struct VertexData {
    vertices: Vec<Complex64>,
    values: Vec<f64>,
}

impl VertexData {
    fn eval(&self, z: Complex64) -> f64 {
        let n = self.vertices.len();
        let mut best = (f64::INFINITY, 0.0);
        for k in 0..n {
            let (a, b) = (self.vertices[k], self.vertices[(k + 1) % n]);
            let d = b - a;
            let t = (((z - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
            let dist = (a + d * t - z).norm();
            if dist < best.0 {
                best = (dist, self.values[k] + t * (self.values[(k + 1) % n] - self.values[k]));
            }
        }
        best.1
    }
}

fn boundary_data(spec: &str, geometry: &Path) -> Result<Box<dyn Fn(Complex64) -> f64 + Sync>> {
    Ok(match spec {
        "constant" => Box::new(|_| 1.0),
        "re_z2" => Box::new(|z: Complex64| (z * z).re),
        "smooth" => Box::new(|z: Complex64| z.re.exp() * (2.0 * z.im).sin()),
        path => {
            let vertices: Vec<Complex64> = io::read_numeric_csv(geometry, 2, 3)?
                .iter()
                .map(|r| Complex64::new(r.values[0], r.values[1]))
                .collect();
            let values: Vec<f64> = io::read_numeric_csv(Path::new(path), 1, 1)?
                .iter()
                .map(|r| r.values[0])
                .collect();
            if values.len() != vertices.len() {
                bail!(
                    "{path}: {} values for {} geometry vertices",
                    values.len(),
                    vertices.len()
                );
            }
            let data = VertexData { vertices, values };
            Box::new(move |z| data.eval(z))
        }
    })
}

pub fn laplace(args: &LaplaceArgs) -> Result<Outcome> {
    let curve = io::read_curve(&args.geometry, args.corners)?;
    let h = boundary_data(&args.data, &args.geometry)?;
    let config = LaplaceConfig {
        tol: args.tol,
        poly_degree: args.poly_degree,
        n_per_side: args.n_per_side,
        clustering: args.cluster,
        max_support: args.max_support,
    };
    let start = Instant::now();
    let sol = solve_dirichlet(&curve, &h, &config)?;
    let elapsed = start.elapsed();
    println!("boundary-data fit: {} support points", sol.aaa_support);
    println!(
        "poles: {} exterior kept, {} interior discarded",
        sol.exterior_poles.len(),
        sol.interior_poles
    );
    println!("training error: {:.3e}", sol.training_error);
    println!("boundary error: {:.3e}", sol.boundary_error);
    println!("time: {:.3}s", elapsed.as_secs_f64());
    io::write_json(&args.output, &sol)?;

    if let (Some(grid), Some(path)) = (&args.grid, &args.grid_output) {
        let mut out = io::create(path)?;
        writeln!(out, "re,im,u,v")?;
        for row in grid_rows(&curve, &sol, grid) {
            out.write_all(row.as_bytes())?;
        }
        out.flush()?;
    }
    if let Some(seed) = args.seed {
        let (lo, hi, checked) = interior_range(&curve, &sol, seed);
        println!("interior u range over {checked} random points: [{lo:.6}, {hi:.6}]");
    }
    Ok(if sol.boundary_error <= args.tol {
        Outcome::Converged
    } else {
        Outcome::Capped
    })
}

/// Grid values; points outside the domain get `nan`.
fn grid_rows(curve: &BoundaryCurve, sol: &HarmonicSolution, grid: &GridSpec) -> Vec<String> {
    (0..grid.ny)
        .into_par_iter()
        .map(|j| {
            let mut line = String::new();
            for i in 0..grid.nx {
                let z = grid.point(i, j);
                if classify(curve, z) == PointLocation::Inside {
                    let g = sol.eval_analytic(z);
                    writeln!(line, "{:?},{:?},{:?},{:?}", z.re, z.im, g.re, g.im).unwrap();
                } else {
                    writeln!(line, "{:?},{:?},nan,nan", z.re, z.im).unwrap();
                }
            }
            line
        })
        .collect()
}

fn interior_range(curve: &BoundaryCurve, sol: &HarmonicSolution, seed: u64) -> (f64, f64, usize) {
    let v = curve.vertices();
    let (x0, x1) = v.iter().fold((f64::MAX, f64::MIN), |(a, b), z| (a.min(z.re), b.max(z.re)));
    let (y0, y1) = v.iter().fold((f64::MAX, f64::MIN), |(a, b), z| (a.min(z.im), b.max(z.im)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lo, mut hi, mut n) = (f64::INFINITY, f64::NEG_INFINITY, 0);
    for _ in 0..1000 {
        let z = Complex64::new(rng.random_range(x0..x1), rng.random_range(y0..y1));
        if classify(curve, z) == PointLocation::Inside {
            let u = sol.eval_solution(z);
            lo = lo.min(u);
            hi = hi.max(u);
            n += 1;
        }
    }
    (lo, hi, n)
}

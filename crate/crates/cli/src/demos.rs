//! `zeta-demo` and `abs-demo`.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use aaa_core::{aaa_fit, fit_interval, poles, zeta_truncated, AaaConfig, Complex64, PoleZeroReport, SampleSet};
use anyhow::Result;
use clap::Args;

use crate::io::{self, GridSpec};
use crate::portrait::write_portrait;
use crate::Outcome;

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// Where to write the approximant JSON.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Phase-portrait grid for the fitted approximant.
    #[arg(long, requires = "portrait", allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    /// Phase-portrait CSV.
    #[arg(long, requires = "grid")]
    pub portrait: Option<PathBuf>,
}

/// Fits the truncated zeta series on 100 points of `Re z = 4`,
/// `|Im z| <= 50`, and reports the zeros nearest the real axis in the
/// critical strip and the pole near 1.
pub fn zeta_demo(args: &ZetaArgs) -> Result<Outcome> {
    let start = Instant::now();
    let z: Vec<Complex64> = (0..100)
        .map(|k| Complex64::new(4.0, -50.0 + 100.0 * k as f64 / 99.0))
        .collect();
    let samples = SampleSet::from_fn(z, zeta_truncated)?;
    let config = AaaConfig {
        rel_tol: args.tol,
        ..AaaConfig::default()
    };
    let fit = aaa_fit(&samples, &config)?;
    let report = PoleZeroReport::new(&fit.approximant)?;
    let elapsed = start.elapsed();

    println!(
        "degree {} fit, error {:.3e}, {:.3}s",
        fit.approximant.degree(),
        fit.final_error,
        elapsed.as_secs_f64()
    );
    let mut strip: Vec<Complex64> = report
        .zeros
        .iter()
        .copied()
        .filter(|z| z.im > 0.0 && z.re > 0.0 && z.re < 1.0)
        .collect();
    strip.sort_by(|a, b| a.im.total_cmp(&b.im));
    for (k, z) in strip.iter().take(2).enumerate() {
        println!("zero {}: {:.10} {:+.10}i", k + 1, z.re, z.im);
    }
    if let Some(p) = report
        .poles
        .iter()
        .min_by(|a, b| (*a - 1.0).norm().total_cmp(&(*b - 1.0).norm()))
    {
        println!("pole near 1: {:.10} {:+.10}i", p.re, p.im);
    }
    if let Some(path) = &args.output {
        io::write_json(path, &fit.approximant)?;
    }
    if let (Some(grid), Some(path)) = (&args.grid, &args.portrait) {
        write_portrait(&mut io::create(path)?, &fit.approximant, grid)?;
    }
    Ok(if fit.converged {
        Outcome::Converged
    } else {
        Outcome::Capped
    })
}

#[derive(Debug, Args)]
pub struct AbsArgs {
    #[arg(long, default_value_t = 80)]
    pub degree: usize,
    /// Where to write the approximant JSON.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// CSV of `x, r(x) - |x|` on a uniform grid.
    #[arg(long)]
    pub curve: Option<PathBuf>,
    /// Points in the uniform error grid on [-1, 1].
    #[arg(long, default_value_t = 100_000)]
    pub points: usize,
}

/// Continuum fit of `|x|` on `[-1, 1]`.
pub fn abs_demo(args: &AbsArgs) -> Result<Outcome> {
    let start = Instant::now();
    let fit = fit_interval(|x| x.abs(), args.degree, (-1.0, 1.0))?;
    let elapsed = start.elapsed();
    let n = args.points.max(2);
    let xs = (0..n).map(|k| -1.0 + 2.0 * k as f64 / (n - 1) as f64);
    let errors: Vec<(f64, f64)> = xs
        .map(|x| (x, fit.approximant.eval(Complex64::new(x, 0.0)).re - x.abs()))
        .collect();
    let max_err = errors.iter().map(|e| e.1.abs()).fold(0.0, f64::max);
    let nearest = poles(&fit.approximant)?
        .iter()
        .map(|p| p.norm())
        .fold(f64::INFINITY, f64::min);
    println!(
        "degree {}: {} evaluations, {:.3}s",
        fit.approximant.degree(),
        fit.evaluations,
        elapsed.as_secs_f64()
    );
    println!("max error on {n} points: {max_err:.3e}");
    println!("nearest pole to 0: {nearest:.3e}");
    if let Some(path) = &args.output {
        io::write_json(path, &fit.approximant)?;
    }
    if let Some(path) = &args.curve {
        let mut out = io::create(path)?;
        writeln!(out, "x,error")?;
        for (x, e) in &errors {
            writeln!(out, "{x:?},{e:?}")?;
        }
        out.flush()?;
    }
    Ok(Outcome::Converged)
}

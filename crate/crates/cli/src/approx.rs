//! `fit`, `minimax` and `polezero`.

use std::io::Write;
use std::path::PathBuf;

use aaa_core::laplace::{classify, PointLocation};
use aaa_core::{
    aaa_fit, aaa_lawson, winding_number, AaaConfig, BarycentricRational, Complex64,
    LawsonConfig, PoleZeroReport,
};
use anyhow::Result;
use clap::Args;

use crate::io::{self, CornerMode};
use crate::Outcome;

/// Error curves this small relative to the data are rounding noise, and
/// their winding number carries no information.
const NEGLIGIBLE_ERROR: f64 = 1e-13;

#[derive(Debug, Args)]
pub struct FitArgs {
    /// CSV with columns re(z), im(z), re(f), im(f); header optional.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Where to write the approximant JSON.
    #[arg(long, short)]
    pub output: PathBuf,
    /// Relative tolerance on the max error.
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// Largest degree allowed (support points minus one).
    #[arg(long, default_value_t = 99)]
    pub max_degree: usize,
    /// Skip removal of spurious pole-zero pairs.
    #[arg(long)]
    pub no_cleanup: bool,
}

pub fn fit(args: &FitArgs) -> Result<Outcome> {
    let samples = io::read_samples(&args.input)?;
    let config = AaaConfig {
        rel_tol: args.tol,
        max_support: args.max_degree + 1,
        cleanup_enabled: !args.no_cleanup,
        ..AaaConfig::default()
    };
    let result = aaa_fit(&samples, &config)?;
    let scale = samples.max_abs_value();
    let mut out = std::io::stdout().lock();
    writeln!(out, "{:>5} {:>8} {:>12} {:>12}", "iter", "degree", "max_error", "relative")?;
    for (k, e) in result.error_history.iter().enumerate() {
        let rel = if scale > 0.0 { e / scale } else { 0.0 };
        writeln!(out, "{:>5} {:>8} {:>12.4e} {:>12.4e}", k + 1, k, e, rel)?;
    }
    let r = &result.approximant;
    writeln!(
        out,
        "final: degree {} error {:.4e} ({})",
        r.degree(),
        result.final_error,
        if result.converged { "converged" } else { "degree cap reached" }
    )?;
    io::write_json(&args.output, r)?;
    Ok(if result.converged {
        Outcome::Converged
    } else {
        Outcome::Capped
    })
}

#[derive(Debug, Args)]
pub struct MinimaxArgs {
    /// CSV with columns re(z), im(z), re(f), im(f); header optional.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Degree of the refined approximant.
    #[arg(long)]
    pub degree: usize,
    /// Where to write the refined approximant JSON.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Error-curve CSV; stdout if omitted.
    #[arg(long)]
    pub curve: Option<PathBuf>,
    #[arg(long, default_value_t = 20)]
    pub max_iters: usize,
}

pub fn minimax(args: &MinimaxArgs) -> Result<Outcome> {
    let samples = io::read_samples(&args.input)?;
    let mut config = LawsonConfig::new(args.degree);
    config.max_iters = args.max_iters;
    let result = aaa_lawson(&samples, &config)?;
    let r = &result.approximant;
    let errors: Vec<Complex64> = samples
        .points()
        .iter()
        .zip(samples.values())
        .map(|(&z, &f)| f - r.eval(z))
        .collect();
    let negligible = result.max_error <= NEGLIGIBLE_ERROR * samples.max_abs_value();
    let winding = if negligible {
        None
    } else {
        winding_number(&errors).ok()
    };

    let mut out = io::output(args.curve.as_ref())?;
    writeln!(out, "arg_z,abs_e,re_e,im_e")?;
    for (z, e) in samples.points().iter().zip(&errors) {
        writeln!(out, "{:?},{:?},{:?},{:?}", z.arg(), e.norm(), e.re, e.im)?;
    }
    match winding {
        Some(w) => writeln!(out, "# winding_number={w}")?,
        None => writeln!(out, "# winding_number=undefined")?,
    }
    out.flush()?;
    drop(out);

    eprintln!(
        "degree {}: start error {:.4e}, minimax error {:.4e} after {} iterations",
        args.degree,
        result.start_error,
        result.max_error,
        result.states.len()
    );
    if let Some(path) = &args.output {
        io::write_json(path, r)?;
    }
    Ok(Outcome::Converged)
}

#[derive(Debug, Args)]
pub struct PolezeroArgs {
    /// Approximant JSON written by `fit` or `minimax`.
    #[arg(long, short)]
    pub approximant: PathBuf,
    /// Boundary vertices (CSV re,im) to classify poles and zeros against.
    #[arg(long)]
    pub region: Option<PathBuf>,
    /// CSV report; stdout if omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

pub fn polezero(args: &PolezeroArgs) -> Result<Outcome> {
    let r: BarycentricRational = io::read_json(&args.approximant)?;
    let report = PoleZeroReport::new(&r)?;
    let region = match &args.region {
        Some(p) => Some(io::read_curve(p, CornerMode::None)?),
        None => None,
    };
    let location = |z: Complex64| -> &'static str {
        match region.as_ref().map(|c| classify(c, z)) {
            Some(PointLocation::Inside) => ",inside",
            Some(PointLocation::Outside) => ",outside",
            Some(PointLocation::OnBoundary) => ",boundary",
            None => "",
        }
    };
    let mut out = io::output(args.output.as_ref())?;
    write!(out, "kind,re,im,residue_re,residue_im,reliable")?;
    writeln!(out, "{}", if region.is_some() { ",location" } else { "" })?;
    for (p, res) in report.poles.iter().zip(&report.residues) {
        writeln!(
            out,
            "pole,{:?},{:?},{:?},{:?},{}{}",
            p.re,
            p.im,
            res.value.re,
            res.value.im,
            res.reliable,
            location(*p)
        )?;
    }
    for z in &report.zeros {
        writeln!(out, "zero,{:?},{:?},,,{}", z.re, z.im, location(*z))?;
    }
    out.flush()?;
    Ok(Outcome::Converged)
}

//! `phaseportrait`: argument and log-modulus of an approximant on a grid.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use aaa_core::{BarycentricRational, Complex64};
use anyhow::Result;
use clap::Args;
use rayon::prelude::*;

use crate::io::{self, GridSpec};
use crate::Outcome;

#[derive(Debug, Args)]
pub struct PortraitArgs {
    /// Approximant JSON written by `fit` or `minimax`.
    #[arg(long, short)]
    pub approximant: PathBuf,
    /// re_min,re_max,im_min,im_max,nx,ny
    #[arg(long, allow_hyphen_values = true)]
    pub grid: GridSpec,
    /// CSV output; stdout if omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Argument in `(-π, π]`.
pub fn principal_arg(w: Complex64) -> f64 {
    let a = w.arg();
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// CSV lines `re, im, arg r, log10 |r|`, one grid row (fixed `im`) per
/// string. Numbers use the shortest representation that round-trips. Rows are computed in parallel; the output order is fixed.
pub fn portrait_rows(r: &BarycentricRational, grid: &GridSpec) -> Vec<String> {
    (0..grid.ny)
        .into_par_iter()
        .map(|j| {
            let mut line = String::new();
            for i in 0..grid.nx {
                let z = grid.point(i, j);
                let w = r.eval(z);
                // The pole sentinel has infinite modulus, so log10 prints inf.
                writeln!(line, "{:?},{:?},{:?},{:?}", z.re, z.im, principal_arg(w), w.norm().log10()).unwrap();
            }
            line
        })
        .collect()
}

pub fn phaseportrait(args: &PortraitArgs) -> Result<Outcome> {
    let r: BarycentricRational = io::read_json(&args.approximant)?;
    let mut out = io::output(args.output.as_ref())?;
    write_portrait(&mut out, &r, &args.grid)?;
    Ok(Outcome::Converged)
}

pub fn write_portrait(out: &mut dyn Write, r: &BarycentricRational, grid: &GridSpec) -> Result<()> {
    writeln!(out, "re,im,arg,log10_abs")?;
    for row in portrait_rows(r, grid) {
        out.write_all(row.as_bytes())?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_real_axis_maps_to_pi() {
        assert_eq!(principal_arg(Complex64::new(-1.0, -0.0)), PI);
        assert_eq!(principal_arg(Complex64::new(-1.0, 0.0)), PI);
        assert_eq!(principal_arg(Complex64::new(0.0, 1.0)), PI / 2.0);
    }
}

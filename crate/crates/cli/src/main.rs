//! Batch front end for rational approximation and Laplace solves.
//!
//! Exit status: 0 on convergence, 2 when a degree cap or tolerance was not
//! met, 1 on invalid input or any other error.

mod approx;
mod demos;
mod io;
mod laplace;
mod portrait;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "aaa", version, about = "Rational approximation by the AAA algorithm")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fit sampled data and write the approximant as JSON.
    Fit(approx::FitArgs),
    /// Refine toward the minimax approximation and emit the error curve.
    Minimax(approx::MinimaxArgs),
    /// List poles, residues and zeros of an approximant.
    Polezero(approx::PolezeroArgs),
    /// Phase portrait of an approximant on a grid.
    Phaseportrait(portrait::PortraitArgs),
    /// Solve a Laplace Dirichlet problem.
    Laplace(laplace::LaplaceArgs),
    /// Fit the truncated zeta series on the line Re z = 4.
    ZetaDemo(demos::ZetaArgs),
    /// Continuum fit of |x| on [-1, 1].
    AbsDemo(demos::AbsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Converged,
    /// Stopped at a degree cap or above the requested tolerance.
    Capped,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap's own usage errors would exit with 2, which is reserved here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Fit(a) => approx::fit(a),
        Command::Minimax(a) => approx::minimax(a),
        Command::Polezero(a) => approx::polezero(a),
        Command::Phaseportrait(a) => portrait::phaseportrait(a),
        Command::Laplace(a) => laplace::laplace(a),
        Command::ZetaDemo(a) => demos::zeta_demo(a),
        Command::AbsDemo(a) => demos::abs_demo(a),
    };
    match result {
        Ok(Outcome::Converged) => ExitCode::SUCCESS,
        Ok(Outcome::Capped) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

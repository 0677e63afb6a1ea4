//! Rational approximation in barycentric form.
//!
//! * [`aaa`]: the AAA greedy/least-squares fit on a discrete sample set.
//! * [`lawson`]: iteratively reweighted refinement toward minimax.
//! * [`spectra`]: poles, zeros and residues.
//! * [`laplace`]: Laplace Dirichlet solver built on exterior poles, and
//!   continuum-mode fitting on an interval.

pub mod aaa;
pub mod barycentric;
pub mod error;
pub mod laplace;
pub mod lawson;
pub mod linalg;
pub mod spectra;
pub mod zeta;

pub use num_complex::Complex64;

pub use aaa::{aaa_fit, cleanup, AaaConfig, AaaResult};
pub use barycentric::{max_error, BarycentricRational, SampleSet, INFINITY};
pub use error::{Error, Result};
pub use laplace::{
    fit_interval, inside, sample_boundary, solve_dirichlet, BoundaryCurve, HarmonicSolution,
    IntervalFit, LaplaceConfig,
};
pub use lawson::{aaa_lawson, lawson_refine, winding_number, LawsonConfig, LawsonResult, LawsonState};
pub use linalg::{build_loewner, min_singular_vector, LoewnerMatrix};
pub use spectra::{poles, residues, split_poles, zeros, PoleZeroReport, Residue};
pub use zeta::zeta_truncated;

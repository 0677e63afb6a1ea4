//! Dirichlet problems for the Laplace equation by AAA least squares, plus
//! continuum-mode interval fitting used for boundary data.

mod boundary;
mod continuum;
mod polybasis;
mod solver;

pub use boundary::{
    classify, inside, sample_boundary, BoundaryCurve, PointLocation, CLUSTER_SIGMA,
    ON_BOUNDARY_RTOL,
};
pub use continuum::{fit_interval, IntervalFit};
pub use polybasis::ArnoldiBasis;
pub use solver::{solve_dirichlet, BoundarySamples, HarmonicSolution, LaplaceConfig};

//! Barycentric representation of rational functions.
//!
//! A rational function of degree at most `m - 1` is stored as the quotient
//!
//! ```text
//!          m   w_j f_j        m    w_j
//!  r(z) =  Σ  ---------   /   Σ  -------
//!         j=1  z - s_j       j=1  z - s_j
//! ```
//!
//! with support points `s_j`, support values `f_j` and nonzero weights `w_j`.
//! The form stays well conditioned when poles and zeros cluster, which is what
//! makes double precision sufficient for every algorithm in this crate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Value returned by [`BarycentricRational::eval`] at a pole.
pub const INFINITY: Complex64 = Complex64::new(f64::INFINITY, 0.0);

/// Weights smaller than this fraction of the largest weight are treated as zero.
pub const WEIGHT_DROP_TOL: f64 = 1e-13;

/// Paired sample points `Z` and function values `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    points: Vec<Complex64>,
    values: Vec<Complex64>,
}

impl SampleSet {
    /// Validates lengths, finiteness and pairwise distinctness of the points.
    pub fn new(points: Vec<Complex64>, values: Vec<Complex64>) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::InvalidInput(format!(
                "{} points but {} values",
                points.len(),
                values.len()
            )));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("sample set is empty".into()));
        }
        for (i, (z, f)) in points.iter().zip(&values).enumerate() {
            if !(z.is_finite() && f.is_finite()) {
                return Err(Error::NonFinite(i));
            }
        }
        if let Some((first, second)) = first_duplicate(&points) {
            return Err(Error::DuplicatePoint { first, second });
        }
        Ok(Self { points, values })
    }

    /// Samples `f` at `points`.
    pub fn from_fn(points: Vec<Complex64>, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        let values = points.iter().map(|&z| f(z)).collect();
        Self::new(points, values)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `max |F_i|`, the scale for relative tolerances.
    pub fn max_abs_value(&self) -> f64 {
        self.values.iter().map(|f| f.norm()).fold(0.0, f64::max)
    }
}

/// Returns the first pair `(i, j)`, `i < j`, of exactly equal points, with
/// `j` the smallest such index.
fn first_duplicate(points: &[Complex64]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        let (za, zb) = (points[a], points[b]);
        za.re
            .total_cmp(&zb.re)
            .then(za.im.total_cmp(&zb.im))
            .then(a.cmp(&b))
    });
    let mut best: Option<(usize, usize)> = None;
    let mut run_start = 0;
    for k in 1..=order.len() {
        let same = k < order.len() && points[order[k]] == points[order[run_start]];
        if !same {
            if k - run_start > 1 {
                let (first, second) = (order[run_start], order[run_start + 1]);
                if best.map_or(true, |(_, s)| second < s) {
                    best = Some((first, second));
                }
            }
            run_start = k;
        }
    }
    best
}

/// Rational function in barycentric form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawBarycentric", into = "RawBarycentric")]
pub struct BarycentricRational {
    support_points: Vec<Complex64>,
    support_values: Vec<Complex64>,
    weights: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawBarycentric {
    support_points: Vec<Complex64>,
    support_values: Vec<Complex64>,
    weights: Vec<Complex64>,
}

impl TryFrom<RawBarycentric> for BarycentricRational {
    type Error = Error;

    fn try_from(raw: RawBarycentric) -> Result<Self> {
        Self::new(raw.support_points, raw.support_values, raw.weights)
    }
}

impl From<BarycentricRational> for RawBarycentric {
    fn from(r: BarycentricRational) -> Self {
        RawBarycentric {
            support_points: r.support_points,
            support_values: r.support_values,
            weights: r.weights,
        }
    }
}

impl BarycentricRational {
    /// Builds the quotient, pruning support points whose weight is below
    /// [`WEIGHT_DROP_TOL`] times the largest weight.
    pub fn new(
        support_points: Vec<Complex64>,
        support_values: Vec<Complex64>,
        weights: Vec<Complex64>,
    ) -> Result<Self> {
        let m = support_points.len();
        if support_values.len() != m || weights.len() != m {
            return Err(Error::InvalidInput(format!(
                "support lists differ in length: {} points, {} values, {} weights",
                m,
                support_values.len(),
                weights.len()
            )));
        }
        for j in 0..m {
            if !(support_points[j].is_finite()
                && support_values[j].is_finite()
                && weights[j].is_finite())
            {
                return Err(Error::NonFinite(j));
            }
        }
        if let Some((first, second)) = first_duplicate(&support_points) {
            return Err(Error::DuplicatePoint { first, second });
        }
        let wmax = weights.iter().map(|w| w.norm()).fold(0.0, f64::max);
        if wmax == 0.0 {
            return Err(Error::InvalidInput("all weights are zero".into()));
        }
        let keep: Vec<usize> = (0..m)
            .filter(|&j| weights[j].norm() > WEIGHT_DROP_TOL * wmax)
            .collect();
        if keep.len() < m {
            log::debug!("pruned {} negligible barycentric weights", m - keep.len());
        }
        Ok(Self {
            support_points: keep.iter().map(|&j| support_points[j]).collect(),
            support_values: keep.iter().map(|&j| support_values[j]).collect(),
            weights: keep.iter().map(|&j| weights[j]).collect(),
        })
    }

    /// The constant function `c`.
    pub fn constant(c: Complex64) -> Self {
        Self {
            support_points: vec![Complex64::new(0.0, 0.0)],
            support_values: vec![c],
            weights: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn support_points(&self) -> &[Complex64] {
        &self.support_points
    }

    pub fn support_values(&self) -> &[Complex64] {
        &self.support_values
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    /// Number of support points `m`.
    pub fn len(&self) -> usize {
        self.support_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support_points.is_empty()
    }

    /// Upper bound `m - 1` on the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.len() - 1
    }

    /// Same function with every weight multiplied by `c`.
    pub fn scale_weights(&self, c: Complex64) -> Result<Self> {
        Self::new(
            self.support_points.clone(),
            self.support_values.clone(),
            self.weights.iter().map(|w| w * c).collect(),
        )
    }

    /// Evaluates `r(z)`.
    ///
    /// Returns the stored support value when `z` equals a support point
    /// exactly, and [`INFINITY`] at a pole.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        if self.len() == 1 {
            return self.support_values[0];
        }
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = Complex64::new(0.0, 0.0);
        for ((&s, &f), &w) in self
            .support_points
            .iter()
            .zip(&self.support_values)
            .zip(&self.weights)
        {
            let dz = z - s;
            if dz.re == 0.0 && dz.im == 0.0 {
                return f;
            }
            let c = w / dz;
            num += c * f;
            den += c;
        }
        let r = num / den;
        if r.is_finite() {
            return r;
        }
        if num.is_finite() && den.is_finite() {
            return INFINITY;
        }
        // z lies so close to a support point that 1/(z - s_j) overflowed.
        let nearest = self
            .support_points
            .iter()
            .enumerate()
            .min_by(|a, b| (z - a.1).norm().total_cmp(&(z - b.1).norm()))
            .map(|(j, _)| j)
            .unwrap_or(0);
        self.support_values[nearest]
    }

    pub fn eval_many(&self, zs: &[Complex64]) -> Vec<Complex64> {
        zs.iter().map(|&z| self.eval(z)).collect()
    }

    /// Numerator and denominator sums at `z`, which must not be a support point.
    pub fn numerator_denominator(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = Complex64::new(0.0, 0.0);
        for ((&s, &f), &w) in self
            .support_points
            .iter()
            .zip(&self.support_values)
            .zip(&self.weights)
        {
            let c = w / (z - s);
            num += c * f;
            den += c;
        }
        (num, den)
    }

    /// Derivative of the denominator sum, `-Σ w_j / (z - s_j)^2`.
    pub fn denominator_derivative(&self, z: Complex64) -> Complex64 {
        self.support_points
            .iter()
            .zip(&self.weights)
            .map(|(&s, &w)| {
                let dz = z - s;
                -w / (dz * dz)
            })
            .sum()
    }
}

/// Max of `|F_i - r(Z_i)|` over the samples.
pub fn max_error(r: &BarycentricRational, samples: &SampleSet) -> f64 {
    samples
        .points()
        .iter()
        .zip(samples.values())
        .map(|(&z, &f)| (f - r.eval(z)).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_over_z() -> BarycentricRational {
        BarycentricRational::new(
            vec![c(1.0, 0.0), c(-1.0, 0.0)],
            vec![c(1.0, 0.0), c(-1.0, 0.0)],
            vec![c(1.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap()
    }

    #[test]
    fn single_support_point_is_constant() {
        let r = BarycentricRational::new(vec![c(0.0, 0.0)], vec![c(1.0, 0.0)], vec![c(1.0, 0.0)])
            .unwrap();
        assert_eq!(r.eval(c(5.0, 0.0)), c(1.0, 0.0));
        assert_eq!(r.degree(), 0);
    }

    #[test]
    fn two_points_reproduce_reciprocal() {
        let r = one_over_z();
        assert!((r.eval(c(2.0, 0.0)) - c(0.5, 0.0)).norm() < 1e-15);
        assert_eq!(r.eval(c(1.0, 0.0)), c(1.0, 0.0));
        assert!((r.eval(c(0.0, 3.0)) - c(0.0, -1.0 / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn pole_gives_sentinel() {
        assert_eq!(one_over_z().eval(c(0.0, 0.0)), INFINITY);
    }

    #[test]
    fn near_support_overflow_falls_back_to_support_value() {
        let r = one_over_z();
        let z = c(1.0, 1e-320);
        let v = r.eval(z);
        assert!(v.is_finite());
        assert!((v - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_weights_are_pruned() {
        let r = BarycentricRational::new(
            vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(1e-15, 0.0)],
        )
        .unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.support_points(), &[c(0.0, 0.0)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(BarycentricRational::new(vec![], vec![], vec![]).is_err());
        assert!(matches!(
            BarycentricRational::new(
                vec![c(1.0, 0.0), c(1.0, 0.0)],
                vec![c(1.0, 0.0), c(1.0, 0.0)],
                vec![c(1.0, 0.0), c(1.0, 0.0)]
            ),
            Err(Error::DuplicatePoint { first: 0, second: 1 })
        ));
        assert!(matches!(
            SampleSet::new(vec![c(0.0, 0.0), c(f64::NAN, 0.0)], vec![c(0.0, 0.0); 2]),
            Err(Error::NonFinite(1))
        ));
    }

    #[test]
    fn duplicate_detection_reports_earliest_repeat() {
        let pts = vec![c(3.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)];
        assert_eq!(first_duplicate(&pts), Some((1, 3)));
        assert_eq!(first_duplicate(&pts[..3]), None);
    }

    #[test]
    fn json_round_trip_validates() {
        let r = one_over_z();
        let s = serde_json::to_string(&r).unwrap();
        let back: BarycentricRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"support_points":[[0,0],[0,0]],"support_values":[[1,0],[1,0]],"weights":[[1,0],[1,0]]}"#;
        assert!(serde_json::from_str::<BarycentricRational>(bad).is_err());
    }
}

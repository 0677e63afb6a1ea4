//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::f64::consts::PI;

use aaa_core::{Complex64, SampleSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn roots_of_unity(n: usize, shift: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * (k as f64 + shift) / n as f64))
        .collect()
}

/// Random proper rational `c0 + Σ a_k/(z - p_k)` with poles away from the
/// unit circle.
pub struct RandomRational {
    pub poles: Vec<Complex64>,
    pub residues: Vec<Complex64>,
    pub constant: Complex64,
}

impl RandomRational {
    pub fn new(d: usize, seed: u64) -> Self {
        Self::with_layout(d, seed, (0.2, 0.6), (1.6, 3.0), 0.1)
    }

    /// Poles well separated and no farther than 1 from the circle, where the
    /// barycentric representation keeps them well conditioned.
    pub fn well_separated(d: usize, seed: u64) -> Self {
        Self::with_layout(d, seed, (0.3, 0.7), (1.3, 2.0), 0.5)
    }

    fn with_layout(d: usize, seed: u64, inner: (f64, f64), outer: (f64, f64), sep: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut poles: Vec<Complex64> = Vec::new();
        while poles.len() < d {
            let radius = if rng.random::<bool>() {
                rng.random_range(inner.0..inner.1)
            } else {
                rng.random_range(outer.0..outer.1)
            };
            let p = Complex64::from_polar(radius, rng.random_range(0.0..2.0 * PI));
            if poles.iter().all(|q| (p - *q).norm() > sep) {
                poles.push(p);
            }
        }
        let mut rc = || Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..2.0 * PI));
        let residues = (0..d).map(|_| rc()).collect();
        let constant = rc();
        Self {
            poles,
            residues,
            constant,
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.constant
            + self
                .poles
                .iter()
                .zip(&self.residues)
                .map(|(p, a)| a / (z - p))
                .sum::<Complex64>()
    }
}


pub fn nearest(v: &[Complex64], z: Complex64) -> Complex64 {
    *v.iter().min_by(|a, b| (*a - z).norm().total_cmp(&(*b - z).norm())).unwrap()
}

/// Uniformly random values at the `n`-th roots of unity.
pub fn random_data(n: usize, seed: u64) -> SampleSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = roots_of_unity(n, 0.0);
    let f = (0..n).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    SampleSet::new(z, f).unwrap()
}

//! Polynomial basis orthogonalized against a point set (Vandermonde with
//! Arnoldi). The recurrence coefficients let the same basis be evaluated
//! anywhere.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArnoldiBasis {
    center: Complex64,
    scale: f64,
    /// `hessenberg[k]` holds `h_{0,k} .. h_{k+1,k}`.
    hessenberg: Vec<Vec<Complex64>>,
}

impl ArnoldiBasis {
    /// Builds the basis of degree `degree` and returns it with its values
    /// `q_0 .. q_degree` at `points` (one vector per basis function).
    pub fn fit(points: &[Complex64], degree: usize) -> (Self, Vec<Vec<Complex64>>) {
        let m = points.len() as f64;
        let center = points.iter().sum::<Complex64>() / m;
        let scale = points
            .iter()
            .map(|z| (z - center).norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let zs: Vec<Complex64> = points.iter().map(|z| (z - center) / scale).collect();

        let mut q = vec![vec![Complex64::new(1.0, 0.0); points.len()]];
        let mut hessenberg = Vec::with_capacity(degree);
        for k in 0..degree {
            let mut v: Vec<Complex64> = zs.iter().zip(&q[k]).map(|(z, qk)| z * qk).collect();
            let mut h = Vec::with_capacity(k + 2);
            for qj in &q {
                let hjk = qj.iter().zip(&v).map(|(a, b)| a.conj() * b).sum::<Complex64>() / m;
                v.iter_mut().zip(qj).for_each(|(vi, qi)| *vi -= hjk * qi);
                h.push(hjk);
            }
            let norm = (v.iter().map(|x| x.norm_sqr()).sum::<f64>() / m).sqrt();
            h.push(Complex64::new(norm, 0.0));
            v.iter_mut().for_each(|x| *x /= norm);
            q.push(v);
            hessenberg.push(h);
        }
        (
            Self {
                center,
                scale,
                hessenberg,
            },
            q,
        )
    }

    pub fn degree(&self) -> usize {
        self.hessenberg.len()
    }

    /// Values `q_0(z) .. q_degree(z)`.
    pub fn eval(&self, z: Complex64) -> Vec<Complex64> {
        let zs = (z - self.center) / self.scale;
        let mut q = Vec::with_capacity(self.degree() + 1);
        q.push(Complex64::new(1.0, 0.0));
        for (k, h) in self.hessenberg.iter().enumerate() {
            let mut v = zs * q[k];
            for j in 0..=k {
                v -= h[j] * q[j];
            }
            q.push(v / h[k + 1]);
        }
        q
    }
}

//! Dense kernels: Loewner assembly and the smallest-singular-vector solve.

use ndarray::{Array1, Array2, ArrayView2};
use ndarray_linalg::SVD;
use num_complex::Complex64;

use crate::barycentric::SampleSet;
use crate::error::{Error, Result};

/// Singular values within this multiple of `eps * sigma_max` of the smallest
/// one are considered tied.
const TIE_RTOL: f64 = 8.0 * f64::EPSILON;

/// Rectangular matrix with entries `(F_i - f_j) / (Z_i - s_j)`.
///
/// Rows are the non-support samples in sample order, columns the support
/// points in the order they were given.
#[derive(Debug, Clone)]
pub struct LoewnerMatrix {
    entries: Array2<Complex64>,
    row_indices: Vec<usize>,
    row_points: Vec<Complex64>,
}

impl LoewnerMatrix {
    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    /// Sample indices owning each row.
    pub fn row_indices(&self) -> &[usize] {
        &self.row_indices
    }

    pub fn row_points(&self) -> &[Complex64] {
        &self.row_points
    }

    pub fn min_singular_vector(&self) -> Result<Array1<Complex64>> {
        min_singular_vector(self.entries.view())
    }
}

pub fn build_loewner(samples: &SampleSet, support: &[usize]) -> Result<LoewnerMatrix> {
    let n = samples.len();
    if support.is_empty() {
        return Err(Error::InvalidInput("support index list is empty".into()));
    }
    let mut is_support = vec![false; n];
    for &j in support {
        if j >= n {
            return Err(Error::InvalidInput(format!("support index {j} out of range")));
        }
        if is_support[j] {
            return Err(Error::InvalidInput(format!("support index {j} repeated")));
        }
        is_support[j] = true;
    }
    if support.len() == n {
        return Err(Error::InvalidInput(
            "every sample is a support point; no rows remain".into(),
        ));
    }
    let (z, f) = (samples.points(), samples.values());
    let row_indices: Vec<usize> = (0..n).filter(|&i| !is_support[i]).collect();
    let entries = Array2::from_shape_fn((row_indices.len(), support.len()), |(r, c)| {
        let (i, j) = (row_indices[r], support[c]);
        (f[i] - f[j]) / (z[i] - z[j])
    });
    let row_points = row_indices.iter().map(|&i| z[i]).collect();
    Ok(LoewnerMatrix {
        entries,
        row_indices,
        row_points,
    })
}

/// Unit right singular vector for the smallest singular value of `a`.
///
/// Wide matrices are padded with zero rows. When several singular values tie
/// for smallest, the result is the normalized projection onto that subspace
/// of the first coordinate vector with the largest projection. The first
/// entry of largest modulus is then rotated to be real and positive.
pub fn min_singular_vector(a: ArrayView2<Complex64>) -> Result<Array1<Complex64>> {
    let (rows, cols) = a.dim();
    if cols == 0 {
        return Err(Error::InvalidInput("matrix has no columns".into()));
    }
    if let Some(k) = a.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(k));
    }
    let padded;
    let work = if rows < cols {
        let mut p = Array2::zeros((cols, cols));
        p.slice_mut(ndarray::s![..rows, ..]).assign(&a);
        padded = p;
        padded.view()
    } else {
        a
    };
    let (_, sigma, vt) = work.svd(false, true)?;
    let vt = vt.ok_or_else(|| Error::LinAlg("SVD returned no right vectors".into()))?;
    // LAPACK orders singular values descending.
    let smin = sigma[cols - 1];
    let smax = sigma[0];
    let tied: Vec<usize> = (0..cols)
        .filter(|&k| sigma[k] - smin <= TIE_RTOL * smax)
        .collect();

    let mut w: Array1<Complex64> = if tied.len() == 1 {
        vt.row(cols - 1).mapv(|v| v.conj())
    } else {
        // Rows of the basis V0 (columns are conj of the tied rows of V^H).
        let row_norm2 = |k: usize| tied.iter().map(|&t| vt[[t, k]].norm_sqr()).sum::<f64>();
        let norms: Vec<f64> = (0..cols).map(row_norm2).collect();
        let best = norms.iter().cloned().fold(0.0, f64::max);
        let k = norms
            .iter()
            .position(|&n| n >= best * (1.0 - 1e-12))
            .unwrap_or(0);
        // P e_k = V0 V0^H e_k; V0[:, t] = conj(vt[t, :]).
        let mut v = Array1::zeros(cols);
        for &t in &tied {
            let coef = vt[[t, k]];
            for i in 0..cols {
                v[i] += vt[[t, i]].conj() * coef;
            }
        }
        let nrm = v.iter().map(|x: &Complex64| x.norm_sqr()).sum::<f64>().sqrt();
        v.mapv(|x| x / nrm)
    };
    normalize_phase(&mut w);
    Ok(w)
}

/// Rotates `w` so its first entry of largest modulus is real positive.
pub(crate) fn normalize_phase(w: &mut Array1<Complex64>) {
    let mut k = 0;
    for i in 1..w.len() {
        if w[i].norm() > w[k].norm() {
            k = i;
        }
    }
    let lead = w[k];
    let mag = lead.norm();
    if mag == 0.0 {
        return;
    }
    let rot = lead.conj() / mag;
    w.mapv_inplace(|x| x * rot);
    w[k] = Complex64::new(w[k].re, 0.0);
}

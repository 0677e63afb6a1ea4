use num_complex::Complex64;

/// Terms in [`zeta_truncated`].
pub const ZETA_TERMS: u32 = 10_000;

/// `Σ_{k=1}^{10000} k^{-z}`, accumulated from the smallest term (k = 10000)
/// to the largest.
///
/// On `Re z = 4` this matches the Riemann zeta function to about `1e-13`.
pub fn zeta_truncated(z: Complex64) -> Complex64 {
    (1..=ZETA_TERMS)
        .rev()
        .map(|k| (-z * (k as f64).ln()).exp())
        .sum()
}

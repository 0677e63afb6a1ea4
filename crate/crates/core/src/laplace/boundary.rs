use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Grading of the corner-clustered sample ladder.
pub const CLUSTER_SIGMA: f64 = 4.0;
/// Ladder offsets below this fraction of the side length are dropped: they
/// would coincide with the corner in floating point.
pub const MIN_CLUSTER_OFFSET: f64 = 1e-12;

/// Points within this fraction of the diameter of the curve are on it.
pub const ON_BOUNDARY_RTOL: f64 = 1e-12;

/// Closed polygonal curve traced counterclockwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    vertices: Vec<Complex64>,
    corners: Vec<usize>,
    diameter: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Outside,
    OnBoundary,
}

impl BoundaryCurve {
    /// Clockwise input is reversed. `corner_indices` mark vertices toward
    /// which [`sample_boundary`] clusters points.
    pub fn new(vertices: Vec<Complex64>, corner_indices: Option<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "a boundary needs at least 3 vertices, got {n}"
            )));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::DegenerateSegment(i));
            }
        }
        let mut corners = corner_indices.unwrap_or_default();
        corners.sort_unstable();
        corners.dedup();
        if let Some(&c) = corners.iter().find(|&&c| c >= n) {
            return Err(Error::InvalidInput(format!("corner index {c} out of range")));
        }

        let mut vertices = vertices;
        if signed_area(&vertices) < 0.0 {
            log::debug!("boundary given clockwise; reversing");
            vertices.reverse();
            corners = corners.iter().map(|&c| n - 1 - c).collect();
            corners.sort_unstable();
        }
        let diameter = diameter(&vertices);
        Ok(Self {
            vertices,
            corners,
            diameter,
        })
    }

    /// Polygon with a corner at every vertex.
    pub fn polygon(vertices: Vec<Complex64>) -> Result<Self> {
        let corners = (0..vertices.len()).collect();
        Self::new(vertices, Some(corners))
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn corners(&self) -> &[usize] {
        &self.corners
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Distance from `z` to the nearest point of the polyline.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| segment_distance(z, self.vertices[i], self.vertices[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Winding number of the curve about `z`.
    pub fn winding_number(&self, z: Complex64) -> i64 {
        let n = self.vertices.len();
        let total: f64 = (0..n)
            .map(|i| ((self.vertices[(i + 1) % n] - z) / (self.vertices[i] - z)).arg())
            .sum();
        (total / std::f64::consts::TAU).round() as i64
    }

    /// Point at arc length `t` along the path from vertex `from` through
    /// `len` edges.
    fn point_on_path(&self, from: usize, cumulative: &[f64], t: f64) -> Complex64 {
        let n = self.vertices.len();
        let k = match cumulative.binary_search_by(|c| c.total_cmp(&t)) {
            Ok(k) => k,
            Err(k) => k.saturating_sub(1),
        }
        .min(cumulative.len() - 2);
        let a = self.vertices[(from + k) % n];
        let b = self.vertices[(from + k + 1) % n];
        let frac = (t - cumulative[k]) / (cumulative[k + 1] - cumulative[k]);
        a + (b - a) * frac
    }
}

fn signed_area(v: &[Complex64]) -> f64 {
    let n = v.len();
    0.5 * (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a.re * b.im - b.re * a.im
        })
        .sum::<f64>()
}

fn diameter(v: &[Complex64]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            d = d.max((v[i] - v[j]).norm());
        }
    }
    d
}

fn segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let t = ((z - a) * ab.conj()).re / ab.norm_sqr();
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

pub fn classify(curve: &BoundaryCurve, z: Complex64) -> PointLocation {
    if curve.distance_to(z) <= ON_BOUNDARY_RTOL * curve.diameter() {
        return PointLocation::OnBoundary;
    }
    if curve.winding_number(z) == 1 {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// True iff the curve winds once around `z`. Points on the boundary are
/// reported as not inside.
pub fn inside(curve: &BoundaryCurve, z: Complex64) -> bool {
    classify(curve, z) == PointLocation::Inside
}

/// Arc-length offsets of `n` points on a side of length `len`, starting at
/// the corner itself.
///
/// Clustered sides use the ladder `d_k = (len/2) exp(-σ(√(p+1) - √k))`,
/// mirrored about the midpoint. Rungs closer to a corner than
/// `MIN_CLUSTER_OFFSET * len` are skipped, so long sides may get fewer than
/// `n` points.
pub(crate) fn side_offsets(n: usize, len: f64, clustered: bool) -> Vec<f64> {
    if !clustered {
        return (0..n).map(|k| len * k as f64 / n as f64).collect();
    }
    let interior = n - 1;
    let pairs = interior / 2;
    let top = ((pairs + 1) as f64).sqrt();
    let ladder: Vec<f64> = (1..=pairs)
        .map(|k| 0.5 * len * (-CLUSTER_SIGMA * (top - (k as f64).sqrt())).exp())
        .filter(|&d| d > MIN_CLUSTER_OFFSET * len)
        .collect();
    let mut t = Vec::with_capacity(n);
    t.push(0.0);
    t.extend(ladder.iter().copied());
    if interior % 2 == 1 {
        t.push(0.5 * len);
    }
    t.extend(ladder.iter().rev().map(|d| len - d));
    t
}

/// Sample points along the curve.
///
/// Each side between consecutive corners gets `n_per_side` points (the first
/// at the corner). With no corners the whole curve is one side with
/// uniform spacing.
pub fn sample_boundary(
    curve: &BoundaryCurve,
    n_per_side: usize,
    clustering: bool,
) -> Result<Vec<Complex64>> {
    if n_per_side < 4 {
        return Err(Error::InvalidInput("n_per_side must be at least 4".into()));
    }
    let n = curve.vertices.len();
    let sides: Vec<(usize, usize)> = if curve.corners.is_empty() {
        vec![(0, n)]
    } else {
        let c = &curve.corners;
        (0..c.len())
            .map(|k| {
                let from = c[k];
                let to = if k + 1 < c.len() { c[k + 1] } else { c[0] + n };
                (from, to - from)
            })
            .collect()
    };
    let clustered = clustering && !curve.corners.is_empty();
    let mut points = Vec::with_capacity(sides.len() * n_per_side);
    for (from, edges) in sides {
        let mut cumulative = Vec::with_capacity(edges + 1);
        cumulative.push(0.0);
        for e in 0..edges {
            let len = (curve.vertices[(from + e + 1) % n] - curve.vertices[(from + e) % n]).norm();
            if len == 0.0 {
                return Err(Error::DegenerateSegment((from + e) % n));
            }
            cumulative.push(cumulative[e] + len);
        }
        let total = cumulative[edges];
        for t in side_offsets(n_per_side, total, clustered) {
            points.push(curve.point_on_path(from, &cumulative, t));
        }
    }
    Ok(points)
}

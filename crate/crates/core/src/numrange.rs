//! Numerical range `W(A) = {(Ax, x) : ‖x‖ = 1}` through its support function.
//!
//! For each direction θ the support value `h(θ) = λ_max(Re(e^{−iθ}A))` is
//! attained at `p = (Av, v)` with `v` a top eigenvector. The points `p_k`
//! span an inner polygon contained in `W(A)`; the support lines bound an
//! outer polygon containing it. Their Hausdorff distance is at most `gap`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{convex_hull, dist_to_convex_polygon};
use crate::linalg::{cartesian_parts, herm_eigen, CMatrix};
use crate::regions::{RegionFamily, RegionProbe, RegionSpec};

pub const DEFAULT_ANGLES: usize = 720;

/// `(h(θ), p(θ))` for one direction.
pub fn support_point(a: &CMatrix, theta: f64) -> (f64, Complex64) {
    let (re, _) = cartesian_parts(&a.scale(Complex64::from_polar(1.0, -theta)));
    let eig = herm_eigen(&re).expect("Hermitian part is Hermitian by construction");
    let v = eig.top_vector();
    (eig.max(), a.quadratic_form(&v))
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeHull {
    pub angles: Vec<f64>,
    pub support_values: Vec<f64>,
    #[serde(serialize_with = "serialize_points")]
    pub support_points: Vec<Complex64>,
    #[serde(serialize_with = "serialize_points")]
    pub outer_vertices: Vec<Complex64>,
    pub gap: f64,
}

fn serialize_points<S: serde::Serializer>(pts: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(pts.len()))?;
    for p in pts {
        seq.serialize_element(&[p.re, p.im])?;
    }
    seq.end()
}

impl RangeHull {
    /// Counterclockwise vertices of `conv{p_k}`.
    pub fn inner_polygon(&self) -> Vec<Complex64> {
        convex_hull(&self.support_points)
    }

    /// Counterclockwise vertices of the outer polygon.
    pub fn outer_polygon(&self) -> Vec<Complex64> {
        convex_hull(&self.outer_vertices)
    }

    /// Maximum of `Re(e^{−iθ}z)` over the outer polygon minus `h(θ)`, i.e.
    /// how far a point sticks out of a support half-plane (for sandwich checks).
    pub fn support_excess(&self, z: Complex64) -> f64 {
        self.angles
            .iter()
            .zip(&self.support_values)
            .map(|(&t, &h)| (Complex64::from_polar(1.0, -t) * z).re - h)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn compute_hull(a: &CMatrix, m: usize) -> RangeHull {
    assert!(m >= 3, "need at least three support directions");
    let angles: Vec<f64> = (0..m).map(|k| 2.0 * PI * k as f64 / m as f64).collect();
    let support: Vec<(f64, Complex64)> = angles.par_iter().map(|&t| support_point(a, t)).collect();
    let support_values: Vec<f64> = support.iter().map(|s| s.0).collect();
    let support_points: Vec<Complex64> = support.iter().map(|s| s.1).collect();

    let outer_vertices: Vec<Complex64> = (0..m)
        .map(|k| {
            let j = (k + 1) % m;
            let (s0, c0) = angles[k].sin_cos();
            let (s1, c1) = angles[j].sin_cos();
            let (h0, h1) = (support_values[k], support_values[j]);
            let det = c0 * s1 - s0 * c1;
            Complex64::new((h0 * s1 - h1 * s0) / det, (c0 * h1 - c1 * h0) / det)
        })
        .collect();

    let inner = convex_hull(&support_points);
    let gap = outer_vertices
        .iter()
        .map(|v| dist_to_convex_polygon(*v, &inner))
        .fold(0.0, f64::max);

    RangeHull {
        angles,
        support_values,
        support_points,
        outer_vertices,
        gap,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HullReport {
    pub region: RegionFamily,
    pub alpha: f64,
    pub tol: f64,
    pub gap: f64,
    pub worst_dist: f64,
    /// Outer vertex farthest from the region, as `[re, im]`.
    pub witness: [f64; 2],
    pub pass: bool,
}

/// `W(A) ⊆ region` up to `tol`: every outer vertex must lie within
/// `tol + gap` of the region. Sound for convex regions because the outer
/// polygon contains `W(A)`.
pub fn hull_in_region(hull: &RangeHull, spec: &RegionSpec, tol: f64) -> HullReport {
    let probe = RegionProbe::new(*spec);
    let (worst_dist, witness) = hull
        .outer_vertices
        .par_iter()
        .map(|v| (probe.dist(*v), *v))
        .reduce(
            || (0.0, hull.outer_vertices[0]),
            |a, b| if b.0 > a.0 { b } else { a },
        );
    HullReport {
        region: spec.family,
        alpha: spec.angle.radians(),
        tol,
        gap: hull.gap,
        worst_dist,
        witness: [witness.re, witness.im],
        pass: worst_dist <= tol + hull.gap,
    }
}

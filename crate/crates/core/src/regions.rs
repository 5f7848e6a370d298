//! Closed convex regions of the complex plane indexed by a semi-angle α.
//!
//! | family     | set                                                              |
//! |------------|------------------------------------------------------------------|
//! | `Sector`   | `|arg z| ≤ α`                                                    |
//! | `Cset`     | `|z sinα ± i cosα| ≤ 1` (a lens with vertices ±1)                |
//! | `Omega`    | `{z² : z ∈ Cset}`, i.e. `2|Im √z| ≤ (1 − |z|) tanα`              |
//! | `Qset`     | `Cset ∩ {|z sinα − cosα| ≤ 1}`                                   |
//! | `Lset`     | `|(z − ½) sinα ± (i cosα)/2| ≤ ½`, the image of `Cset` by `(z+1)/2` |
//! | `Dset`     | disk of radius `sinα` joined with the cone `|arg(1−z)| ≤ α, |z−1| ≤ cosα` |
//! | `Bset`     | `{z ∈ Cset : iz ∈ Cset}`                                         |
//! | `UnitDisk` | `|z| ≤ 1`                                                        |
//!
//! At α = 0 the lens families collapse to real segments: `Cset = [−1, 1]`,
//! `Omega = Qset = Lset = Dset = [0, 1]`, `Sector = [0, ∞)`, `Bset = {0}`;
//! membership is then measured by distance to the segment.
//!
//! Principal branches are used throughout: `arg ∈ (−π, π]` with `arg 0 = 0`
//! and `Re √z ≥ 0`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::dist_to_segment;
use crate::rng::Stream;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Semi-angle in `[0, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && (0.0..FRAC_PI_2).contains(&alpha) {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidAngle(alpha))
        }
    }

    pub fn from_degrees(deg: f64) -> Result<Self> {
        Self::new(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn is_degenerate(self) -> bool {
        self.0 == 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RegionFamily {
    Sector,
    Cset,
    Omega,
    Qset,
    Lset,
    Dset,
    Bset,
    UnitDisk,
}

impl RegionFamily {
    pub const ALL: [RegionFamily; 8] = [
        RegionFamily::Sector,
        RegionFamily::Cset,
        RegionFamily::Omega,
        RegionFamily::Qset,
        RegionFamily::Lset,
        RegionFamily::Dset,
        RegionFamily::Bset,
        RegionFamily::UnitDisk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionFamily::Sector => "S",
            RegionFamily::Cset => "C",
            RegionFamily::Omega => "Omega",
            RegionFamily::Qset => "Q",
            RegionFamily::Lset => "L",
            RegionFamily::Dset => "D",
            RegionFamily::Bset => "B",
            RegionFamily::UnitDisk => "Disk",
        }
    }

    /// Interior point used when bisecting towards the boundary.
    pub fn anchor(self) -> Complex64 {
        match self {
            RegionFamily::Bset => Complex64::new(0.0, 0.0),
            _ => Complex64::new(0.5, 0.0),
        }
    }
}

impl fmt::Display for RegionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let family = match s.trim().to_ascii_lowercase().as_str() {
            "s" | "sector" => RegionFamily::Sector,
            "c" | "cset" => RegionFamily::Cset,
            "omega" | "w" => RegionFamily::Omega,
            "q" | "qset" => RegionFamily::Qset,
            "l" | "lset" => RegionFamily::Lset,
            "d" | "dset" => RegionFamily::Dset,
            "b" | "bset" => RegionFamily::Bset,
            "disk" | "unitdisk" | "unit_disk" => RegionFamily::UnitDisk,
            other => return Err(Error::InvalidArgument(format!("unknown region family '{other}'"))),
        };
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionSpec {
    pub family: RegionFamily,
    pub angle: Angle,
}

impl RegionSpec {
    pub fn new(family: RegionFamily, angle: Angle) -> Self {
        Self { family, angle }
    }

    /// Shorthand used mostly by tests; panics on an invalid angle.
    pub fn at(family: RegionFamily, alpha: f64) -> Self {
        Self::new(family, Angle::new(alpha).expect("valid semi-angle"))
    }

    /// Minimum slack over the defining constraints: `≥ 0` inside, `< 0`
    /// outside.
    pub fn margin(&self, z: Complex64) -> f64 {
        margin(self, z)
    }

    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        margin(self, z) >= -tol
    }

    /// The real segment a family collapses to at α = 0 (`None` when the
    /// family does not degenerate).
    fn degenerate_segment(&self) -> Option<(Complex64, Complex64)> {
        if !self.angle.is_degenerate() {
            return None;
        }
        let r = |x: f64| Complex64::new(x, 0.0);
        match self.family {
            RegionFamily::Cset => Some((r(-1.0), r(1.0))),
            RegionFamily::Omega | RegionFamily::Qset | RegionFamily::Lset | RegionFamily::Dset => {
                Some((r(0.0), r(1.0)))
            }
            RegionFamily::Bset => Some((r(0.0), r(0.0))),
            RegionFamily::Sector | RegionFamily::UnitDisk => None,
        }
    }
}

/// Principal argument with `arg 0 = 0`.
fn arg0(z: Complex64) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        0.0
    } else {
        z.arg()
    }
}

/// Principal square root, `Re √z ≥ 0` and `√(−r) = i√r`.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re < 0.0 {
        return Complex64::new(0.0, (-z.re).sqrt());
    }
    z.sqrt()
}

pub fn margin(spec: &RegionSpec, z: Complex64) -> f64 {
    if let Some((a, b)) = spec.degenerate_segment() {
        return -dist_to_segment(z, a, b);
    }
    let alpha = spec.angle.radians();
    let (sin, cos) = alpha.sin_cos();
    let tan = alpha.tan();
    match spec.family {
        RegionFamily::Sector => {
            if spec.angle.is_degenerate() {
                // the ray [0, ∞)
                return if z.re >= 0.0 { -z.im.abs() } else { -z.norm() };
            }
            if z.re == 0.0 && z.im == 0.0 {
                0.0
            } else {
                alpha - z.arg().abs()
            }
        }
        RegionFamily::Cset => cset_margin(z, sin, cos),
        RegionFamily::Omega => (1.0 - z.norm()) * tan - 2.0 * principal_sqrt(z).im.abs(),
        RegionFamily::Qset => {
            let s = (1.0 - z.norm_sqr()) * tan;
            (s - 2.0 * z.im.abs()).min(s + 2.0 * z.re)
        }
        RegionFamily::Lset => {
            let w = (z - 0.5) * sin;
            let h = I * (cos / 2.0);
            (0.5 - (w + h).norm()).min(0.5 - (w - h).norm())
        }
        RegionFamily::Dset => {
            let disk = sin - z.norm();
            let cone = (cos - (z - 1.0).norm()).min(alpha - arg0(1.0 - z).abs());
            disk.max(cone)
        }
        RegionFamily::Bset => cset_margin(z, sin, cos).min(cset_margin(I * z, sin, cos)),
        RegionFamily::UnitDisk => 1.0 - z.norm(),
    }
}

fn cset_margin(z: Complex64, sin: f64, cos: f64) -> f64 {
    let w = z * sin;
    let h = I * cos;
    (1.0 - (w + h).norm()).min(1.0 - (w - h).norm())
}

/// `ζ(t) = (e^{it} − i cosα)² / sin²α`, the image of the upper lens arc of
/// `Cset` under `z ↦ z²`; traces `∂Omega` counterclockwise for
/// `t ∈ [π/2 − α, π/2 + α]`.
pub fn omega_boundary_point(angle: Angle, t: f64) -> Result<Complex64> {
    if angle.is_degenerate() {
        return Err(Error::DegenerateAngle);
    }
    let (sin, cos) = angle.radians().sin_cos();
    let w = Complex64::from_polar(1.0, t) - I * cos;
    Ok(w * w / (sin * sin))
}

/// First and second derivatives of `ζ(t)` in closed form.
pub fn omega_boundary_derivatives(angle: Angle, t: f64) -> (Complex64, Complex64) {
    let (sin, cos) = angle.radians().sin_cos();
    let e = Complex64::from_polar(1.0, t);
    let s2 = sin * sin;
    let d1 = 2.0 * I * e * (e - I * cos) / s2;
    let d2 = 2.0 * I * e * (2.0 * I * e + cos) / s2;
    (d1, d2)
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundarySamples {
    /// Boundary parameter of each point: `t` for `Omega`, otherwise
    /// `k + s` on the k-th boundary piece with local fraction `s ∈ [0, 1)`.
    pub params: Vec<f64>,
    /// Counterclockwise, closed (last point repeats the first).
    #[serde(skip)]
    pub points: Vec<Complex64>,
}

enum Piece {
    Arc {
        center: Complex64,
        radius: f64,
        from: f64,
        to: f64,
    },
    Segment {
        from: Complex64,
        to: Complex64,
    },
}

impl Piece {
    fn arc(center: Complex64, radius: f64, from: f64, to: f64) -> Self {
        Piece::Arc {
            center,
            radius,
            from,
            to,
        }
    }

    fn point(&self, s: f64) -> Complex64 {
        match *self {
            Piece::Arc {
                center,
                radius,
                from,
                to,
            } => center + Complex64::from_polar(radius, from + (to - from) * s),
            Piece::Segment { from, to } => from + (to - from) * s,
        }
    }

    fn length(&self) -> f64 {
        match *self {
            Piece::Arc {
                radius, from, to, ..
            } => radius * (to - from).abs(),
            Piece::Segment { from, to } => (to - from).norm(),
        }
    }

    fn map(self, f: impl Fn(Complex64) -> Complex64, scale: f64) -> Self {
        match self {
            Piece::Arc {
                center,
                radius,
                from,
                to,
            } => Piece::Arc {
                center: f(center),
                radius: radius * scale,
                from,
                to,
            },
            Piece::Segment { from, to } => Piece::Segment {
                from: f(from),
                to: f(to),
            },
        }
    }
}

fn lens_pieces(sin: f64, cos: f64) -> Vec<Piece> {
    let cot = cos / sin;
    let r = 1.0 / sin;
    let alpha = cos.acos();
    vec![
        Piece::arc(-I * cot, r, FRAC_PI_2 - alpha, FRAC_PI_2 + alpha),
        Piece::arc(I * cot, r, 1.5 * PI - alpha, 1.5 * PI + alpha),
    ]
}

fn boundary_pieces(spec: &RegionSpec) -> Vec<Piece> {
    if let Some((a, b)) = spec.degenerate_segment() {
        return vec![
            Piece::Segment { from: a, to: b },
            Piece::Segment { from: b, to: a },
        ];
    }
    let alpha = spec.angle.radians();
    let (sin, cos) = alpha.sin_cos();
    let cot = cos / sin;
    let r = 1.0 / sin;
    let zero = Complex64::new(0.0, 0.0);
    match spec.family {
        RegionFamily::UnitDisk => vec![Piece::arc(zero, 1.0, 0.0, 2.0 * PI)],
        RegionFamily::Sector => {
            // truncated at |z| = 1
            let lo = Complex64::from_polar(1.0, -alpha);
            let hi = Complex64::from_polar(1.0, alpha);
            vec![
                Piece::Segment { from: zero, to: lo },
                Piece::arc(zero, 1.0, -alpha, alpha),
                Piece::Segment { from: hi, to: zero },
            ]
        }
        RegionFamily::Cset => lens_pieces(sin, cos),
        RegionFamily::Lset => lens_pieces(sin, cos)
            .into_iter()
            .map(|p| p.map(|z| (z + 1.0) / 2.0, 0.5))
            .collect(),
        RegionFamily::Qset => {
            // Third disk |z - cot α| ≤ 1/sin α cuts the lens at P = x(1 − i)
            // and its conjugate, with 2x² − 2x·cot α − 1 = 0, x < 0.
            let x = (cot - (cot * cot + 2.0).sqrt()) / 2.0;
            let p = Complex64::new(x, -x);
            let t_p = (p.im + cot).atan2(p.re);
            let psi_p = p.im.atan2(p.re - cot);
            vec![
                Piece::arc(-I * cot, r, FRAC_PI_2 - alpha, t_p),
                Piece::arc(Complex64::new(cot, 0.0), r, psi_p, 2.0 * PI - psi_p),
                Piece::arc(I * cot, r, 2.0 * PI - t_p, 1.5 * PI + alpha),
            ]
        }
        RegionFamily::Bset => {
            // Four disks of radius 1/sin α centred at ±cot α, ±i cot α; the
            // right-hand arc belongs to the disk centred at −cot α and meets
            // its neighbours at x(1 ± i), 2x² + 2x·cot α − 1 = 0, x > 0.
            let x = (-cot + (cot * cot + 2.0).sqrt()) / 2.0;
            let psi0 = x.atan2(x + cot);
            (0..4)
                .map(|k| {
                    let rot = Complex64::from_polar(1.0, k as f64 * FRAC_PI_2);
                    Piece::arc(
                        rot * (-cot),
                        r,
                        -psi0 + k as f64 * FRAC_PI_2,
                        psi0 + k as f64 * FRAC_PI_2,
                    )
                })
                .collect()
        }
        RegionFamily::Dset => {
            let top = Complex64::from_polar(sin, FRAC_PI_2 - alpha);
            let one = Complex64::new(1.0, 0.0);
            vec![
                Piece::Segment { from: one, to: top },
                Piece::arc(zero, sin, FRAC_PI_2 - alpha, 1.5 * PI + alpha),
                Piece::Segment {
                    from: top.conj(),
                    to: one,
                },
            ]
        }
        RegionFamily::Omega => unreachable!("Omega is sampled through its own parameterization"),
    }
}

/// Roughly `m` counterclockwise samples of the region boundary, closed.
pub fn boundary_samples(spec: &RegionSpec, m: usize) -> Result<BoundarySamples> {
    if m < 4 {
        return Err(Error::InvalidArgument(format!("need at least 4 boundary samples, got {m}")));
    }
    if spec.family == RegionFamily::Omega && !spec.angle.is_degenerate() {
        let alpha = spec.angle.radians();
        let mut params = Vec::with_capacity(m + 1);
        let mut points = Vec::with_capacity(m + 1);
        for k in 0..m {
            let t = FRAC_PI_2 - alpha + 2.0 * alpha * k as f64 / m as f64;
            params.push(t);
            points.push(omega_boundary_point(spec.angle, t)?);
        }
        params.push(FRAC_PI_2 + alpha);
        points.push(points[0]);
        return Ok(BoundarySamples { params, points });
    }

    let pieces = boundary_pieces(spec);
    let total: f64 = pieces.iter().map(Piece::length).sum();
    let mut params = Vec::with_capacity(m + pieces.len() + 1);
    let mut points = Vec::with_capacity(m + pieces.len() + 1);
    for (idx, piece) in pieces.iter().enumerate() {
        let share = if total > 0.0 {
            piece.length() / total
        } else {
            1.0 / pieces.len() as f64
        };
        let count = ((m as f64 * share).round() as usize).max(1);
        for k in 0..count {
            let s = k as f64 / count as f64;
            params.push(idx as f64 + s);
            points.push(piece.point(s));
        }
    }
    params.push(pieces.len() as f64);
    points.push(points[0]);
    Ok(BoundarySamples { params, points })
}

const PROBE_SAMPLES: usize = 1024;

/// Distance oracle for one region. Builds the boundary sample cloud once so
/// repeated queries (one per polygon vertex) stay cheap.
pub struct RegionProbe {
    spec: RegionSpec,
    samples: Vec<Complex64>,
}

impl RegionProbe {
    pub fn new(spec: RegionSpec) -> Self {
        let samples = if spec.degenerate_segment().is_some() || exact_distance(&spec, Complex64::new(0.0, 0.0)).is_some() {
            Vec::new()
        } else {
            boundary_samples(&spec, PROBE_SAMPLES)
                .expect("sample count is valid")
                .points
        };
        Self { spec, samples }
    }

    pub fn spec(&self) -> &RegionSpec {
        &self.spec
    }

    /// Distance from `z` to the region; zero inside. For the lens families
    /// this is the smaller of the bisection distance towards the family's
    /// anchor and the distance to the nearest of 1024 boundary samples,
    /// which bounds the true distance from above.
    pub fn dist(&self, z: Complex64) -> f64 {
        let m = margin(&self.spec, z);
        if m >= 0.0 {
            return 0.0;
        }
        if let Some((a, b)) = self.spec.degenerate_segment() {
            return dist_to_segment(z, a, b);
        }
        if let Some(d) = exact_distance(&self.spec, z) {
            return d;
        }
        let bisect = self.bisect_to_anchor(z);
        let nearest = self
            .samples
            .iter()
            .map(|p| (z - p).norm())
            .fold(f64::INFINITY, f64::min);
        bisect.min(nearest)
    }

    fn bisect_to_anchor(&self, z: Complex64) -> f64 {
        let anchor = self.spec.family.anchor();
        let span = (anchor - z).norm();
        let (mut lo, mut hi) = (0.0f64, 1.0f64); // lo outside, hi inside
        while (hi - lo) * span > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if margin(&self.spec, z + (anchor - z) * mid) >= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo).abs() < f64::EPSILON {
                break;
            }
        }
        span * hi
    }
}

/// Closed-form distances for the families where they are elementary.
fn exact_distance(spec: &RegionSpec, z: Complex64) -> Option<f64> {
    match spec.family {
        RegionFamily::UnitDisk => Some((z.norm() - 1.0).max(0.0)),
        RegionFamily::Sector => {
            let alpha = spec.angle.radians();
            let excess = arg0(z).abs() - alpha;
            Some(if excess <= 0.0 {
                0.0
            } else if excess >= FRAC_PI_2 {
                z.norm()
            } else {
                z.norm() * excess.sin()
            })
        }
        _ => None,
    }
}

pub fn dist_to_region(spec: &RegionSpec, z: Complex64) -> f64 {
    RegionProbe::new(*spec).dist(z)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    pub alpha: f64,
    pub samples: usize,
    /// Smallest `−Im(ζ' conj ζ'')` over the grid; must be positive.
    pub min_curvature_numerator: f64,
    /// Largest deviation of that numerator from `4(2 + cos²α − 3 cosα sin t)/sin⁴α`.
    pub closed_form_deviation: f64,
    /// `d²y/dx² < 0` before `t = π/2` and `> 0` after it.
    pub sign_pattern_ok: bool,
    pub min_re: f64,
    pub re_lower_bound: f64,
    /// `tan²(α/2) ≤ sin α`, which puts the leftmost point inside the disk of `Dset`.
    pub tan_half_sq_le_sin: bool,
    pub pass: bool,
}

/// Evaluates the convexity certificate of `∂Omega` on `m` grid values of `t`.
pub fn omega_convexity_check(angle: Angle, m: usize) -> Result<ConvexityReport> {
    if angle.is_degenerate() {
        return Err(Error::DegenerateAngle);
    }
    if m < 2 {
        return Err(Error::InvalidArgument("need at least 2 grid points".into()));
    }
    let alpha = angle.radians();
    let (sin, cos) = alpha.sin_cos();
    let mut min_num = f64::INFINITY;
    let mut deviation = 0.0f64;
    let mut signs_ok = true;
    let mut min_re = f64::INFINITY;
    for k in 0..m {
        let t = FRAC_PI_2 - alpha + 2.0 * alpha * k as f64 / (m - 1) as f64;
        let (d1, d2) = omega_boundary_derivatives(angle, t);
        let num = -(d1 * d2.conj()).im;
        let closed = 4.0 * (2.0 + cos * cos - 3.0 * cos * t.sin()) / sin.powi(4);
        deviation = deviation.max((num - closed).abs() / closed.abs().max(1.0));
        min_num = min_num.min(num);
        let re_d1 = d1.re;
        if (t - FRAC_PI_2).abs() > 1e-9 && re_d1 != 0.0 {
            let d2y = num / re_d1.powi(3);
            let expected_negative = t < FRAC_PI_2;
            if (expected_negative && d2y >= 0.0) || (!expected_negative && d2y <= 0.0) {
                signs_ok = false;
            }
        }
        min_re = min_re.min(omega_boundary_point(angle, t)?.re);
    }
    let half_tan_sq = (alpha / 2.0).tan().powi(2);
    let re_lower_bound = -half_tan_sq;
    let tan_half_sq_le_sin = half_tan_sq <= sin;
    let pass = min_num > 0.0
        && signs_ok
        && min_re >= re_lower_bound - 1e-12
        && tan_half_sq_le_sin
        && deviation <= 1e-9;
    Ok(ConvexityReport {
        alpha,
        samples: m,
        min_curvature_numerator: min_num,
        closed_form_deviation: deviation,
        sign_pattern_ok: signs_ok,
        min_re,
        re_lower_bound,
        tan_half_sq_le_sin,
        pass,
    })
}

/// `max |Im z|` over `Omega(α)`, attained at the critical point
/// `sin γ = (cosα + √(cos²α + 8))/4` of `y(t) = (sin 2t − 2 cosα cos t)/sin²α`.
///
/// The derivative of `y` produces `cos γ` in the second term; evaluating the
/// same expression with `sin γ` instead disagrees with dense boundary
/// sampling (≈0.085 against ≈0.492 at α = π/3).
pub fn omega_max_im(angle: Angle) -> f64 {
    if angle.is_degenerate() {
        return 0.0;
    }
    let (sin, cos) = angle.radians().sin_cos();
    let sin_g = (cos + (cos * cos + 8.0).sqrt()) / 4.0;
    let gamma = sin_g.asin();
    ((2.0 * gamma).sin() - 2.0 * cos * gamma.cos()) / (sin * sin)
}

/// The same expression evaluated with `sin γ` in the second term, kept so
/// reports can show the discrepancy against the sampled maximum.
pub fn omega_max_im_sin_variant(angle: Angle) -> f64 {
    if angle.is_degenerate() {
        return 0.0;
    }
    let (sin, cos) = angle.radians().sin_cos();
    let sin_g = (cos + (cos * cos + 8.0).sqrt()) / 4.0;
    let gamma = sin_g.asin();
    ((2.0 * gamma).sin() - 2.0 * cos * sin_g) / (sin * sin)
}

#[derive(Debug, Clone, Serialize)]
pub struct ContainmentReport {
    pub inner: RegionFamily,
    pub outer: RegionFamily,
    pub alpha: f64,
    pub samples: usize,
    pub tol: f64,
    pub worst_margin: f64,
    pub worst_dist: f64,
    /// Boundary point of `inner` farthest outside `outer`, as `[re, im]`.
    pub witness: [f64; 2],
    pub pass: bool,
}

/// Checks `inner ⊆ outer` on boundary samples of `inner`; sufficient for
/// convex regions. Passes when every sample is within `tol` of `outer`.
pub fn containment_check(
    inner: &RegionSpec,
    outer: &RegionSpec,
    m: usize,
    tol: f64,
) -> Result<ContainmentReport> {
    if inner.angle != outer.angle && inner.family != RegionFamily::UnitDisk && outer.family != RegionFamily::UnitDisk {
        return Err(Error::InvalidArgument("containment check needs a common semi-angle".into()));
    }
    let samples = boundary_samples(inner, m)?;
    let probe = RegionProbe::new(*outer);
    let mut worst_margin = f64::INFINITY;
    let mut worst_dist = 0.0f64;
    let mut witness = samples.points[0];
    for &p in &samples.points {
        let mg = margin(outer, p);
        worst_margin = worst_margin.min(mg);
        let d = probe.dist(p);
        if d > worst_dist {
            worst_dist = d;
            witness = p;
        }
    }
    if worst_dist == 0.0 {
        witness = samples
            .points
            .iter()
            .copied()
            .min_by(|a, b| margin(outer, *a).total_cmp(&margin(outer, *b)))
            .unwrap_or(witness);
    }
    Ok(ContainmentReport {
        inner: inner.family,
        outer: outer.family,
        alpha: inner.angle.radians(),
        samples: samples.points.len(),
        tol,
        worst_margin,
        worst_dist,
        witness: [witness.re, witness.im],
        pass: worst_dist <= tol,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    /// Region the factors are drawn from (the left factor for the ideal check).
    pub family: RegionFamily,
    /// Region the products must land in.
    pub target: RegionFamily,
    pub alpha: f64,
    pub trials: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub worst_pair: [[f64; 2]; 2],
    pub pass: bool,
}

const CLOSURE_TOL: f64 = 1e-12;
const REJECTION_LIMIT: usize = 10_000_000;

fn draw_in(spec: &RegionSpec, stream: &mut Stream) -> Result<Complex64> {
    for _ in 0..REJECTION_LIMIT {
        let z = stream.in_unit_square();
        if margin(spec, z) >= 0.0 {
            return Ok(z);
        }
    }
    Err(Error::InvalidArgument(format!(
        "rejection sampling found no point of {} in [-1,1]^2",
        spec.family
    )))
}

fn closure_run(
    left: RegionSpec,
    right: RegionSpec,
    target: RegionSpec,
    trials: usize,
    seed: u64,
) -> Result<ClosureReport> {
    if left.angle.is_degenerate() {
        return Err(Error::DegenerateAngle);
    }
    let outcomes: Vec<(f64, Complex64, Complex64)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut stream = Stream::child(seed, i as u64);
            let z = draw_in(&left, &mut stream)?;
            let xi = draw_in(&right, &mut stream)?;
            Ok((margin(&target, z * xi), z, xi))
        })
        .collect::<Result<_>>()?;
    let violations = outcomes.iter().filter(|o| o.0 < -CLOSURE_TOL).count();
    let (worst_margin, wz, wx) = outcomes
        .iter()
        .copied()
        .fold((f64::INFINITY, Complex64::default(), Complex64::default()), |acc, o| {
            if o.0 < acc.0 {
                o
            } else {
                acc
            }
        });
    Ok(ClosureReport {
        family: left.family,
        target: target.family,
        alpha: left.angle.radians(),
        trials,
        violations,
        worst_margin,
        worst_pair: [[wz.re, wz.im], [wx.re, wx.im]],
        pass: violations == 0,
    })
}

/// Draws `trials` pairs from the region and checks that their products stay
/// inside. Each trial has its own random stream so the outcome does not
/// depend on how the work is split across threads.
pub fn semigroup_closure_check(spec: &RegionSpec, trials: usize, seed: u64) -> Result<ClosureReport> {
    match spec.family {
        RegionFamily::Cset | RegionFamily::Omega | RegionFamily::Qset => {
            closure_run(*spec, *spec, *spec, trials, seed)
        }
        other => Err(Error::InvalidArgument(format!("{other} is not one of the semigroup families"))),
    }
}

/// Ideal property: `z ∈ Bset`, `ξ ∈ Cset` gives `zξ ∈ Bset`.
pub fn ideal_closure_check(angle: Angle, trials: usize, seed: u64) -> Result<ClosureReport> {
    let b = RegionSpec::new(RegionFamily::Bset, angle);
    let c = RegionSpec::new(RegionFamily::Cset, angle);
    closure_run(b, c, b, trials, seed)
}

//! The verification suite: every check the `verify` command runs, each
//! returning a [`Check`] with a uniform slack convention (`margin ≥ 0` means
//! the inequality held with room to spare).

use std::collections::BTreeMap;
use std::f64::consts::{E, FRAC_PI_2};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, hausdorff_convex};
use crate::linalg::{matrix_exp, CMatrix};
use crate::numrange::{compute_hull, hull_in_region};
use crate::regions::{
    containment_check, dist_to_region, ideal_closure_check, omega_boundary_point,
    omega_convexity_check, omega_max_im, semigroup_closure_check, Angle, RegionFamily, RegionSpec,
};
use crate::rng::Stream;
use crate::sectorial::{class_c_norms, numc_norms, random_sectorial, resolvent_contraction, SectorialMatrix};
use crate::semigroup::{
    derived_bounds_check, euler_approx, euler_error_table, fit_slope, semigroup_range_check, power_difference_check,
    product_inequality_check, scalar_g_sup, semigroup, ProductFactor, ERROR_FLOOR,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub containment: f64,
    pub closure: f64,
    pub class_norm: f64,
    pub hull: f64,
    pub derived: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            containment: 1e-8,
            closure: 1e-12,
            class_norm: 1e-9,
            hull: 1e-7,
            derived: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub dims: Vec<usize>,
    pub alphas: Vec<f64>,
    /// Random pairs per family and angle in the closure checks.
    pub trials: usize,
    /// Support directions per numerical-range hull.
    pub angles: usize,
    /// Number of seeded generators shared by the matrix checks.
    pub instances: usize,
    /// Multi-factor trials per angle in the product inequality.
    pub product_trials: usize,
    pub tolerances: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            dims: vec![2, 4, 8],
            alphas: vec![0.2, 0.6, 1.0, 1.4],
            trials: 10_000,
            angles: 720,
            instances: 100,
            product_trials: 1_000,
            tolerances: Tolerances::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        for &a in &self.alphas {
            Angle::new(a)?;
        }
        if self.alphas.is_empty() || self.dims.is_empty() {
            return Err(Error::InvalidArgument("alphas and dims must be non-empty".into()));
        }
        if self.dims.contains(&0) {
            return Err(Error::InvalidArgument("dimensions must be positive".into()));
        }
        if self.angles < 16 {
            return Err(Error::InvalidArgument("need at least 16 support directions".into()));
        }
        Ok(())
    }

    fn angle_grid(&self) -> Vec<Angle> {
        self.alphas.iter().map(|&a| Angle::new(a).expect("validated")).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: String,
    /// The inequality or inclusion being tested, in words.
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub cases: usize,
    pub failures: usize,
    /// Cases whose bound is too large to say anything; never counted as passes.
    pub vacuous: usize,
    /// Smallest slack over all cases; negative when something failed.
    pub margin: f64,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub status: Status,
}

impl Check {
    fn new(id: u32, name: &str, claim: &str) -> Self {
        Self {
            id,
            name: name.into(),
            claim: claim.into(),
            params: BTreeMap::new(),
            cases: 0,
            failures: 0,
            vacuous: 0,
            margin: f64::INFINITY,
            witness: None,
            notes: Vec::new(),
            status: Status::Pass,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    /// Records one case with slack `margin`; `ok` decides pass/fail so that
    /// checks with tolerances folded in stay exact.
    fn record(&mut self, margin: f64, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
        let worse = margin < self.margin || (!ok && self.failures == 1) || margin.is_nan();
        if worse {
            self.margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
            self.witness = Some(label());
        }
    }

    fn vacuous(&mut self) {
        self.vacuous += 1;
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    fn finish(mut self) -> Self {
        self.status = if self.failures == 0 && self.cases > 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        if self.cases == 0 {
            self.note("no applicable cases");
        }
        if self.margin == f64::INFINITY {
            self.margin = 0.0;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A seeded generator shared by the matrix checks.
#[derive(Debug, Clone)]
pub struct Instance {
    pub index: usize,
    pub seed: u64,
    pub sm: SectorialMatrix,
}

impl Instance {
    fn label(&self) -> String {
        format!(
            "instance {} (dim {}, alpha {}, seed {:#x})",
            self.index,
            self.sm.dim(),
            self.sm.alpha.radians(),
            self.seed
        )
    }
}

/// Instance `k` has dimension `dims[k mod |dims|]`, angle
/// `alphas[(k div |dims|) mod |alphas|]` and its own child seed.
pub fn build_instances(config: &RunConfig) -> Result<Vec<Instance>> {
    config.validate()?;
    let alphas = config.angle_grid();
    (0..config.instances)
        .into_par_iter()
        .map(|k| {
            let dim = config.dims[k % config.dims.len()];
            let alpha = alphas[(k / config.dims.len()) % alphas.len()];
            let seed = Stream::child(config.seed, k as u64).next_u64();
            let sm = random_sectorial(dim, alpha, seed)?;
            Ok(Instance { index: k, seed, sm })
        })
        .collect()
}

const SEMIGROUP_TIMES: [f64; 3] = [0.1, 1.0, 10.0];
const EULER_TIMES: [f64; 3] = [0.5, 1.0, 2.0];
const RESOLVENT_LAMBDAS: [f64; 3] = [0.1, 1.0, 10.0];
const DERIVED_TIMES: [f64; 4] = [0.1, 0.5, 2.0, 10.0];
const SLOPE_WINDOW: (f64, f64) = (-1.25, -0.85);
const TAIL_START: u64 = 64;

fn powers_of_two(max_exp: u32) -> Vec<u64> {
    (0..=max_exp).map(|k| 1u64 << k).collect()
}

pub fn check_inclusion_chain(config: &RunConfig) -> Result<Check> {
    let tol = config.tolerances.containment;
    let mut check = Check::new(1, "inclusion_chain", "L(α) ⊆ Ω(α) ⊆ Q(α) ⊆ D_α, while D_α ⊄ C(α)")
        .param("samples", 1024)
        .param("tol", tol);
    let chain = [
        (RegionFamily::Lset, RegionFamily::Omega),
        (RegionFamily::Omega, RegionFamily::Qset),
        (RegionFamily::Qset, RegionFamily::Dset),
    ];
    for alpha in config.angle_grid() {
        for (inner, outer) in chain {
            let r = containment_check(
                &RegionSpec::new(inner, alpha),
                &RegionSpec::new(outer, alpha),
                1024,
                tol,
            )?;
            check.record(tol - r.worst_dist, r.pass, || {
                format!("{inner} ⊄ {outer} at alpha {}: boundary point {:?}", alpha.radians(), r.witness)
            });
        }
        if alpha.is_degenerate() {
            check.note("alpha = 0: D_0 = [0,1] lies inside C(0), no strictness witness expected");
            continue;
        }
        let w = Complex64::new(0.0, alpha.radians().sin());
        let d = RegionSpec::new(RegionFamily::Dset, alpha);
        let c = RegionSpec::new(RegionFamily::Cset, alpha);
        let in_d = d.contains(w, 1e-12);
        let outside_c = dist_to_region(&c, w);
        check.record(outside_c - tol, in_d && outside_c > tol, || {
            format!("i·sin α at alpha {} not a witness: in D {in_d}, dist to C {outside_c:e}", alpha.radians())
        });
    }
    Ok(check.finish())
}

pub fn check_closure(config: &RunConfig) -> Result<Check> {
    let mut check = Check::new(
        2,
        "multiplicative_closure",
        "C(α), Ω(α), Q(α) are closed under multiplication and B(α)·C(α) ⊆ B(α)",
    )
    .param("trials", config.trials)
    .param("tol", config.tolerances.closure);
    let tol = config.tolerances.closure;
    for (k, alpha) in config.angle_grid().into_iter().enumerate() {
        if alpha.is_degenerate() {
            check.note("alpha = 0 skipped: the families are segments");
            continue;
        }
        let seed = Stream::child(config.seed ^ 0xC105_0EE5, k as u64).next_u64();
        let mut reports = Vec::new();
        for fam in [RegionFamily::Cset, RegionFamily::Omega, RegionFamily::Qset] {
            reports.push(semigroup_closure_check(&RegionSpec::new(fam, alpha), config.trials, seed)?);
        }
        reports.push(ideal_closure_check(alpha, config.trials, seed)?);
        for r in reports {
            let ok = r.violations == 0 && r.worst_margin >= -tol;
            check.record(r.worst_margin + tol, ok, || {
                format!(
                    "{}·? ⊄ {} at alpha {}: {} violations, pair {:?}",
                    r.family, r.target, r.alpha, r.violations, r.worst_pair
                )
            });
        }
    }
    Ok(check.finish())
}

pub fn check_convexity(config: &RunConfig) -> Result<Check> {
    let mut check = Check::new(
        3,
        "omega_convexity",
        "∂Ω(α) has positive curvature numerator, Re Ω(α) ≥ −tan²(α/2) and tan²(α/2) ≤ sin α",
    )
    .param("samples", 1000);
    for alpha in config.angle_grid() {
        if alpha.is_degenerate() {
            check.note("alpha = 0 skipped: Ω(0) is a segment");
            continue;
        }
        let r = omega_convexity_check(alpha, 1000)?;
        let slack = r
            .min_curvature_numerator
            .min(r.min_re - r.re_lower_bound + 1e-12)
            .min(alpha.radians().sin() - (alpha.radians() / 2.0).tan().powi(2));
        check.record(slack, r.pass, || format!("alpha {}: {r:?}", alpha.radians()));
    }
    Ok(check.finish())
}

/// Dense-grid maximum of `|Im ζ(t)|` over the Ω boundary parameterization.
pub fn grid_max_im(alpha: Angle, samples: usize) -> f64 {
    let a = alpha.radians();
    (0..=samples)
        .into_par_iter()
        .map(|k| {
            let t = FRAC_PI_2 - a + 2.0 * a * k as f64 / samples as f64;
            omega_boundary_point(alpha, t).map(|z| z.im.abs()).unwrap_or(0.0)
        })
        .reduce(|| 0.0, f64::max)
}

pub fn check_omega_max_im(config: &RunConfig) -> Result<Check> {
    let samples = 200_000;
    let mut check = Check::new(
        4,
        "omega_max_im",
        "closed-form max |Im z| over Ω(α) matches dense sampling and stays below tan(α/2)",
    )
    .param("grid", samples)
    .param("tol", 1e-8);
    for alpha in config.angle_grid() {
        if alpha.is_degenerate() {
            check.note("alpha = 0 skipped: Ω(0) is real");
            continue;
        }
        let closed = omega_max_im(alpha);
        let grid = grid_max_im(alpha, samples);
        let cap = (alpha.radians() / 2.0).tan();
        let dev = (closed - grid).abs();
        let ok = dev <= 1e-8 && closed < cap;
        check.record((1e-8 - dev).min(cap - closed), ok, || {
            format!("alpha {}: closed {closed}, grid {grid}, tan(α/2) {cap}", alpha.radians())
        });
    }
    Ok(check.finish())
}

fn gaussian_matrix(n: usize, s: &mut Stream) -> CMatrix {
    CMatrix::from_row_major(n, (0..n * n).map(|_| s.complex_normal()).collect()).expect("finite entries")
}

/// `exp(iH)` for a Gaussian Hermitian `H`.
pub fn random_unitary(n: usize, s: &mut Stream) -> CMatrix {
    let g = gaussian_matrix(n, s);
    let h = (&g + &g.adjoint()).scale_real(0.5);
    matrix_exp(&h.scale(Complex64::new(0.0, 1.0)))
}

/// Support function of `W(A)` for a 2×2 matrix: an ellipse with foci at the
/// eigenvalues and minor semi-axis `√(‖A‖_F² − |λ1|² − |λ2|²)/2`.
pub fn elliptical_support(a: &CMatrix, theta: f64) -> f64 {
    assert_eq!(a.dim(), 2, "elliptical range needs a 2×2 matrix");
    let tr = a.trace();
    let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
    let disc = (tr * tr - det * 4.0).sqrt();
    let (l1, l2) = ((tr + disc) / 2.0, (tr - disc) / 2.0);
    let minor = (a.norm_fro().powi(2) - l1.norm_sqr() - l2.norm_sqr()).max(0.0).sqrt() / 2.0;
    let half_focal = (l1 - l2).norm() / 2.0;
    let major = (minor * minor + half_focal * half_focal).sqrt();
    let psi = (l1 - l2).arg();
    let centre = (l1 + l2) / 2.0;
    (Complex64::from_polar(1.0, -theta) * centre).re
        + (major.powi(2) * (theta - psi).cos().powi(2) + minor.powi(2) * (theta - psi).sin().powi(2)).sqrt()
}

pub fn check_range_oracles(config: &RunConfig) -> Result<Check> {
    let m = config.angles;
    let mut check = Check::new(
        5,
        "numerical_range_oracles",
        "W(normal A) = conv(spectrum); W(2×2 A) is the elliptical range",
    )
    .param("angles", m)
    .param("normal_cases", 50)
    .param("elliptic_cases", 50)
    .param("elliptic_tol", 1e-8);

    let normal: Vec<(f64, f64)> = (0..50u64)
        .into_par_iter()
        .map(|k| {
            let mut s = Stream::child(config.seed ^ 0x4E0_4A11, k);
            let n = 2 + (k as usize % 7);
            let eig: Vec<Complex64> = (0..n).map(|_| s.complex_normal()).collect();
            let u = random_unitary(n, &mut s);
            let a = &(&u * &CMatrix::from_diag(&eig)) * &u.adjoint();
            let hull = compute_hull(&a, m);
            let target = convex_hull(&eig);
            let d = hausdorff_convex(&hull.inner_polygon(), &target)
                .max(hausdorff_convex(&hull.outer_polygon(), &target));
            (d, (10.0 * hull.gap).max(1e-6))
        })
        .collect();
    for (k, (d, allowed)) in normal.into_iter().enumerate() {
        check.record(allowed - d, d <= allowed, || format!("normal case {k}: Hausdorff {d:e} > {allowed:e}"));
    }

    let elliptic: Vec<f64> = (0..50u64)
        .into_par_iter()
        .map(|k| {
            let mut s = Stream::child(config.seed ^ 0x0E11_195E, k);
            let a = gaussian_matrix(2, &mut s);
            let hull = compute_hull(&a, m);
            hull.angles
                .iter()
                .zip(&hull.support_values)
                .map(|(&t, &h)| (h - elliptical_support(&a, t)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    for (k, dev) in elliptic.into_iter().enumerate() {
        check.record(1e-8 - dev, dev <= 1e-8, || format!("2×2 case {k}: support deviation {dev:e}"));
    }
    Ok(check.finish())
}

pub fn check_semigroup_class(config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let tol = config.tolerances.class_norm;
    let ns = powers_of_two(10);
    let mut check = Check::new(
        6,
        "semigroup_in_class",
        "exp(−tS) and (I + tS/n)^{−n} satisfy ‖T sinα ± i cosα‖ ≤ 1 for sectorial S",
    )
    .param("times", format!("{SEMIGROUP_TIMES:?}"))
    .param("euler_n", "1..1024 (powers of 2)")
    .param("tol", tol);
    let rows: Vec<Vec<(f64, String)>> = instances
        .par_iter()
        .map(|inst| {
            let mut out = Vec::new();
            for &t in &SEMIGROUP_TIMES {
                let cert = class_c_norms(&semigroup(&inst.sm, t)?, inst.sm.alpha);
                out.push((cert.worst(), format!("{} exp at t={t}", inst.label())));
                for &n in &ns {
                    let cert = class_c_norms(&euler_approx(&inst.sm, t, n)?, inst.sm.alpha);
                    out.push((cert.worst(), format!("{} euler at t={t}, n={n}", inst.label())));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    for (worst, label) in rows.into_iter().flatten() {
        check.record(1.0 + tol - worst, worst <= 1.0 + tol, || format!("{label}: norm {worst}"));
    }
    Ok(check.finish())
}

pub fn check_semigroup_range(config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let tol = config.tolerances.hull;
    let mut check = Check::new(
        7,
        "semigroup_range_in_omega",
        "W(exp(−tS)) ⊆ Ω(α) ⊆ D_α for α-sectorial S",
    )
    .param("times", format!("{SEMIGROUP_TIMES:?}"))
    .param("angles", config.angles)
    .param("tol", tol);
    let reports: Vec<_> = instances
        .iter()
        .map(|inst| semigroup_range_check(&inst.sm, &SEMIGROUP_TIMES, config.angles, tol).map(|r| (inst, r)))
        .collect::<Result<_>>()?;
    for (inst, r) in reports {
        for row in r.rows {
            for h in [&row.omega, &row.dset] {
                check.record(tol + h.gap - h.worst_dist, h.pass, || {
                    format!("{} t={}: {} vertex {:?} at distance {:e}", inst.label(), row.t, h.region, h.witness, h.worst_dist)
                });
            }
        }
    }
    Ok(check.finish())
}

pub fn check_euler_bound(config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let ns = powers_of_two(10);
    let mut check = Check::new(
        8,
        "euler_norm_estimate",
        "‖(I + tS/n)^{−n} − exp(−tS)‖ ≤ K(α)/(n cos²α) and sup|e^{−w} − (1 + w/n)^{−n}| ≤ 1/(n cos²α) on ∂S(α)",
    )
    .param("times", format!("{EULER_TIMES:?}"))
    .param("euler_n", "1..1024 (powers of 2)")
    .param("scalar_n", "[1, 4, 16, 64]");
    let tables: Vec<_> = instances
        .par_iter()
        .map(|inst| {
            EULER_TIMES
                .iter()
                .map(|&t| euler_error_table(&inst.sm, t, &ns).map(|r| (inst.label(), r)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for (label, r) in tables.into_iter().flatten() {
        for row in &r.rows {
            if row.vacuous {
                check.vacuous();
                continue;
            }
            check.record(1.0 - row.ratio, row.ratio <= 1.0, || {
                format!("{label} t={} n={}: error {:e} > bound {:e}", r.t, row.n, row.error, row.bound)
            });
        }
    }
    for alpha in config.angle_grid() {
        if alpha.is_degenerate() {
            check.note("scalar estimate skipped at alpha = 0");
            continue;
        }
        for n in [1u64, 4, 16, 64] {
            let sup = scalar_g_sup(alpha, n, 50.0 * n as f64 * 4.0, 10_000)?;
            let bound = (1.0 + 1e-6) / (n as f64 * alpha.radians().cos().powi(2));
            check.record(1.0 - sup / bound, sup <= bound, || {
                format!("scalar alpha {} n {n}: sup {sup:e} > {bound:e}", alpha.radians())
            });
        }
    }
    if check.vacuous > 0 {
        check.note(format!("{} rows have bound > 1e3 and are reported as vacuous", check.vacuous));
    }
    Ok(check.finish())
}

pub fn check_euler_rate(_config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let ns = powers_of_two(10);
    let mut check = Check::new(
        9,
        "euler_rate",
        "the Euler error decays like 1/n: log-log slope in [−1.25, −0.85]",
    )
    .param("times", format!("{EULER_TIMES:?}"))
    .param("window", format!("{SLOPE_WINDOW:?}"))
    .param("min_rows", 4);
    let tables: Vec<_> = instances
        .par_iter()
        .map(|inst| {
            EULER_TIMES
                .iter()
                .map(|&t| euler_error_table(&inst.sm, t, &ns).map(|r| (inst.label(), r)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut skipped = 0;
    let mut outside = 0;
    let mut tail_inside = 0;
    for (label, r) in tables.into_iter().flatten() {
        match r.slope {
            Some(slope) if r.fitted_rows >= 4 => {
                let slack = (slope - SLOPE_WINDOW.0).min(SLOPE_WINDOW.1 - slope);
                check.record(slack, slack >= 0.0, || format!("{label} t={}: slope {slope:.4}", r.t));
                if slack < 0.0 {
                    outside += 1;
                    let tail: Vec<(f64, f64)> = r
                        .rows
                        .iter()
                        .filter(|row| row.n >= TAIL_START && row.error > ERROR_FLOOR)
                        .map(|row| ((row.n as f64).ln(), row.error.ln()))
                        .collect();
                    if fit_slope(&tail).is_some_and(|t| (SLOPE_WINDOW.0..=SLOPE_WINDOW.1).contains(&t)) {
                        tail_inside += 1;
                    }
                }
            }
            _ => skipped += 1,
        }
    }
    if skipped > 0 {
        check.note(format!("{skipped} tables have fewer than 4 rows above the error floor"));
    }
    if outside > 0 {
        check.note(format!(
            "diagnostic only: refitting the {outside} out-of-window tables over n ≥ {TAIL_START} puts {tail_inside} of them inside the window"
        ));
    }
    Ok(check.finish())
}

pub fn check_resolvent(config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let tol = config.tolerances.class_norm;
    let mut check = Check::new(
        10,
        "resolvent_localization",
        "W((I + λS)^{−1}) ⊆ L(α) and ‖(F − I/2) sinα ± (i cosα/2)‖ ≤ 1/2",
    )
    .param("lambdas", format!("{RESOLVENT_LAMBDAS:?}"))
    .param("angles", config.angles)
    .param("tol", tol);
    let lset_tol = config.tolerances.containment;
    let rows: Vec<_> = instances
        .iter()
        .map(|inst| {
            RESOLVENT_LAMBDAS
                .iter()
                .map(|&lambda| {
                    let f = resolvent_contraction(&inst.sm, lambda)?;
                    let hull = compute_hull(&f, config.angles);
                    let r = hull_in_region(&hull, &RegionSpec::new(RegionFamily::Lset, inst.sm.alpha), lset_tol);
                    let (p, m) = numc_norms(&f, inst.sm.alpha);
                    Ok((inst.label(), lambda, r, p.max(m)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for (label, lambda, r, norm) in rows.into_iter().flatten() {
        check.record(lset_tol + r.gap - r.worst_dist, r.pass, || {
            format!("{label} λ={lambda}: vertex {:?} at distance {:e} from L", r.witness, r.worst_dist)
        });
        check.record(0.5 + tol - norm, norm <= 0.5 + tol, || format!("{label} λ={lambda}: norm {norm}"));
    }
    Ok(check.finish())
}

pub fn check_derived_bounds(config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let tol = config.tolerances.derived;
    let mut check = Check::new(
        11,
        "derived_bounds",
        "Re T(t) ≥ −tan²(α/2), ‖Im T(t)‖ ≤ max|Im Ω(α)|, and |sinα·√∏(T_k u_k, u_k) ± i cosα| ≤ 1",
    )
    .param("times", format!("{DERIVED_TIMES:?}"))
    .param("product_trials", config.product_trials)
    .param("tol", tol);
    let rows: Vec<_> = instances
        .par_iter()
        .map(|inst| derived_bounds_check(&inst.sm, &DERIVED_TIMES).map(|r| (inst.label(), r)))
        .collect::<Result<_>>()?;
    for (label, r) in rows {
        for row in r.rows {
            let slack = (row.re_min - row.re_bound + tol).min(row.im_bound + tol - row.im_norm);
            check.record(slack, row.pass, || format!("{label} t={}: {row:?}", row.t));
        }
    }

    for (k, alpha) in config.angle_grid().into_iter().enumerate() {
        let base = Stream::child(config.seed ^ 0x9_0D0C7, k as u64).next_u64();
        let gens: Vec<SectorialMatrix> = (0..3)
            .map(|j| random_sectorial(4, alpha, base.wrapping_add(j)))
            .collect::<Result<_>>()?;
        let outcomes: Vec<_> = (0..config.product_trials)
            .into_par_iter()
            .map(|trial| {
                let mut s = Stream::child(base, trial as u64);
                let count = 1 + (s.next_u64() % 3) as usize;
                let factors: Vec<ProductFactor> = (0..count)
                    .map(|_| {
                        let g = &gens[(s.next_u64() % 3) as usize];
                        ProductFactor {
                            generator: g.clone(),
                            t: s.uniform_in(0.0, 3.0),
                            u: s.unit_vector(4),
                        }
                    })
                    .collect();
                product_inequality_check(&factors, alpha).map(|r| (trial, r))
            })
            .collect::<Result<_>>()?;
        for (trial, r) in outcomes {
            let worst = r.norm_plus.max(r.norm_minus);
            check.record(1.0 + tol - worst, r.pass, || {
                format!("product trial {trial} at alpha {}: norm {worst}", alpha.radians())
            });
        }
    }
    Ok(check.finish())
}

pub fn check_power_differences(_config: &RunConfig, instances: &[Instance]) -> Result<Check> {
    let ns: Vec<u64> = (1..=1024).collect();
    let mut check = Check::new(
        12,
        "power_differences",
        "(n+1)‖Cⁿ − C^{n+1}‖ stays bounded for C = (I + S)^{−1}",
    )
    .param("n", "1..1024")
    .param("trend", "max over n > 512 ≤ max over n ≤ 512");
    let rows: Vec<_> = instances
        .par_iter()
        .map(|inst| {
            let c = resolvent_contraction(&inst.sm, 1.0)?;
            power_difference_check(&c, &ns).map(|r| (inst.label(), r))
        })
        .collect::<Result<_>>()?;
    let mut sup = 0.0f64;
    for (label, r) in rows {
        sup = sup.max(r.sup);
        check.record(r.head_max - r.tail_max, r.pass, || {
            format!("{label}: head max {:.6}, tail max {:.6}", r.head_max, r.tail_max)
        });
    }
    check.params.insert("observed_sup".into(), format!("{sup:.6}"));

    // Hermitian oracle: spectrum {n/(n+1)} gives (n/(n+1))ⁿ → 1/e at each such n.
    let grid = powers_of_two(10);
    let diag: Vec<f64> = grid.iter().map(|&n| n as f64 / (n + 1) as f64).collect();
    let r = power_difference_check(&CMatrix::from_real_diag(&diag), &grid)?;
    let last = r.values.last().map(|v| v.1).unwrap_or(f64::NAN);
    let rel = (last * E - 1.0).abs();
    check.record(0.02 - rel, rel <= 0.02 && r.finite, || format!("Hermitian oracle: {last} vs 1/e"));
    check.params.insert("hermitian_oracle_n1024".into(), format!("{last:.6}"));
    Ok(check.finish())
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub fn run(config: &RunConfig) -> Result<VerifyReport> {
    config.validate()?;
    let instances = build_instances(config)?;
    let checks = vec![
        check_inclusion_chain(config)?,
        check_closure(config)?,
        check_convexity(config)?,
        check_omega_max_im(config)?,
        check_range_oracles(config)?,
        check_semigroup_class(config, &instances)?,
        check_semigroup_range(config, &instances)?,
        check_euler_bound(config, &instances)?,
        check_euler_rate(config, &instances)?,
        check_resolvent(config, &instances)?,
        check_derived_bounds(config, &instances)?,
        check_power_differences(config, &instances)?,
    ];
    Ok(VerifyReport {
        config: config.clone(),
        pass: checks.iter().all(Check::passed),
        checks,
    })
}

//! Contraction semigroups `T(t) = exp(−tS)` of sectorial generators, their
//! Euler approximations `(I + tS/n)^{−n}` and the range and norm estimates
//! they satisfy.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{cartesian_parts, herm_eigen, inner, inv_power, matrix_exp, operator_norm, vec_norm, CMatrix};
use crate::numrange::{compute_hull, hull_in_region, HullReport};
use crate::regions::{omega_max_im, principal_sqrt, Angle, RegionFamily, RegionProbe, RegionSpec};
use crate::sectorial::SectorialMatrix;

/// Euler rows whose bound exceeds this are labelled vacuous.
pub const VACUOUS_BOUND: f64 = 1e3;
/// Rows below this error are dominated by rounding and left out of the fit.
pub const ERROR_FLOOR: f64 = 1e-12;

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("time must be finite and non-negative, got {t}")))
    }
}

pub fn semigroup(sm: &SectorialMatrix, t: f64) -> Result<CMatrix> {
    check_time(t)?;
    Ok(matrix_exp(&sm.s.scale_real(-t)))
}

pub fn euler_approx(sm: &SectorialMatrix, t: f64, n: u64) -> Result<CMatrix> {
    check_time(t)?;
    if n == 0 {
        return Err(Error::InvalidArgument("Euler step count must be positive".into()));
    }
    inv_power(&sm.s, t / n as f64, n)
}

/// Upper bound for the constant in the Euler estimate:
/// `min(2 + 2/√3, (π − α)/α)`.
pub fn k_up(alpha: Angle) -> f64 {
    let a = alpha.radians();
    let cap = 2.0 + 2.0 / 3f64.sqrt();
    if a == 0.0 {
        cap
    } else {
        cap.min((PI - a) / a)
    }
}

/// `K_up(α) / (n cos²α)`.
pub fn euler_bound(alpha: Angle, n: u64) -> f64 {
    k_up(alpha) / (n as f64 * alpha.radians().cos().powi(2))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EulerRow {
    pub n: u64,
    pub error: f64,
    pub bound: f64,
    pub ratio: f64,
    pub vacuous: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerReport {
    pub alpha: f64,
    pub t: f64,
    pub rows: Vec<EulerRow>,
    /// Least-squares slope of `ln error` against `ln n` over rows above the
    /// error floor; absent with fewer than two such rows.
    pub slope: Option<f64>,
    pub fitted_rows: usize,
    pub pass: bool,
}

/// Least-squares slope of `y` against `x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `‖(I + tS/n)^{−n} − exp(−tS)‖` for each `n` against `K_up(α)/(n cos²α)`.
pub fn euler_error_table(sm: &SectorialMatrix, t: f64, ns: &[u64]) -> Result<EulerReport> {
    check_time(t)?;
    if ns.windows(2).any(|w| w[0] >= w[1]) || ns.first() == Some(&0) {
        return Err(Error::InvalidArgument("step counts must be positive and ascending".into()));
    }
    let exact = semigroup(sm, t)?;
    let rows: Vec<EulerRow> = ns
        .par_iter()
        .map(|&n| {
            let approx = euler_approx(sm, t, n)?;
            let error = operator_norm(&(&approx - &exact));
            let bound = euler_bound(sm.alpha, n);
            Ok(EulerRow {
                n,
                error,
                bound,
                ratio: error / bound,
                vacuous: bound > VACUOUS_BOUND,
            })
        })
        .collect::<Result<_>>()?;
    let fit: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.error > ERROR_FLOOR)
        .map(|r| ((r.n as f64).ln(), r.error.ln()))
        .collect();
    Ok(EulerReport {
        alpha: sm.alpha.radians(),
        t,
        slope: fit_slope(&fit),
        fitted_rows: fit.len(),
        pass: rows.iter().all(|r| r.ratio <= 1.0),
        rows,
    })
}

/// `g_n(w) = e^{−w} − (1 + w/n)^{−n}`.
pub fn scalar_g(w: Complex64, n: u64) -> Complex64 {
    let nf = n as f64;
    (-w).exp() - (-(w / nf + 1.0).ln() * nf).exp()
}

/// `sup |g_n(x e^{±iα})|` over `x ∈ {0} ∪` a log-spaced grid of `m`
/// points in `[1e−6, xmax]`.
pub fn scalar_g_sup(alpha: Angle, n: u64, xmax: f64, m: usize) -> Result<f64> {
    if alpha.is_degenerate() {
        return Err(Error::DegenerateAngle);
    }
    if n == 0 || m < 2 || xmax.is_nan() || xmax <= 1e-6 {
        return Err(Error::InvalidArgument("need n ≥ 1, m ≥ 2 and xmax > 1e-6".into()));
    }
    let (lo, hi) = (1e-6f64.ln(), xmax.ln());
    let dirs = [Complex64::from_polar(1.0, alpha.radians()), Complex64::from_polar(1.0, -alpha.radians())];
    let sup = (0..m)
        .into_par_iter()
        .map(|k| {
            let x = (lo + (hi - lo) * k as f64 / (m - 1) as f64).exp();
            dirs.iter().map(|d| scalar_g(d * x, n).norm()).fold(0.0, f64::max)
        })
        .reduce(|| scalar_g(Complex64::new(0.0, 0.0), n).norm(), f64::max);
    Ok(sup)
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeAtTime {
    pub t: f64,
    pub omega: HullReport,
    pub dset: HullReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupRangeReport {
    pub alpha: f64,
    pub rows: Vec<RangeAtTime>,
    pub worst_dist: f64,
    pub pass: bool,
}

/// `W(exp(−tS)) ⊆ Omega(α)`, and redundantly `⊆ Dset(α)`, for each `t`.
pub fn semigroup_range_check(sm: &SectorialMatrix, ts: &[f64], m: usize, tol: f64) -> Result<SemigroupRangeReport> {
    let omega = RegionSpec::new(RegionFamily::Omega, sm.alpha);
    let dset = RegionSpec::new(RegionFamily::Dset, sm.alpha);
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let hull = compute_hull(&semigroup(sm, t)?, m);
        rows.push(RangeAtTime {
            t,
            omega: hull_in_region(&hull, &omega, tol),
            dset: hull_in_region(&hull, &dset, tol),
        });
    }
    let worst_dist = rows
        .iter()
        .map(|r| r.omega.worst_dist.max(r.dset.worst_dist))
        .fold(0.0, f64::max);
    Ok(SemigroupRangeReport {
        alpha: sm.alpha.radians(),
        pass: rows.iter().all(|r| r.omega.pass && r.dset.pass),
        rows,
        worst_dist,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ConverseOutcome {
    /// `W(S)` already lies in the sector; nothing to falsify.
    NotApplicable,
    /// A genuine point of `W(exp(−tS))` outside `Omega(α)`.
    Witness { t: f64, point: [f64; 2], dist: f64 },
    /// No witness on the sampled grid. This does not prove sectoriality.
    Inconclusive,
}

const CONVERSE_TOL: f64 = 1e-9;

/// Falsification probe for the converse: when `W(S) ⊄ S(α)`, looks for a
/// `t` on the grid where the semigroup leaves `Omega(α)`. Witnesses are
/// support points, so they belong to the numerical range exactly.
pub fn converse_probe(s: &CMatrix, alpha: Angle, ts: &[f64], m: usize) -> Result<ConverseOutcome> {
    let sector = RegionSpec::new(RegionFamily::Sector, alpha);
    if hull_in_region(&compute_hull(s, m), &sector, CONVERSE_TOL).pass {
        return Ok(ConverseOutcome::NotApplicable);
    }
    let probe = RegionProbe::new(RegionSpec::new(RegionFamily::Omega, alpha));
    for &t in ts {
        check_time(t)?;
        let hull = compute_hull(&matrix_exp(&s.scale_real(-t)), m);
        let worst = hull
            .support_points
            .iter()
            .map(|p| (probe.dist(*p), *p))
            .fold((0.0, Complex64::new(1.0, 0.0)), |a, b| if b.0 > a.0 { b } else { a });
        if worst.0 > CONVERSE_TOL {
            return Ok(ConverseOutcome::Witness {
                t,
                point: [worst.1.re, worst.1.im],
                dist: worst.0,
            });
        }
    }
    Ok(ConverseOutcome::Inconclusive)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DerivedBoundsRow {
    pub t: f64,
    pub re_min: f64,
    pub re_bound: f64,
    pub im_norm: f64,
    pub im_bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivedBoundsReport {
    pub alpha: f64,
    pub rows: Vec<DerivedBoundsRow>,
    pub pass: bool,
}

pub const DERIVED_TOL: f64 = 1e-9;

/// `λ_min(Re T(t)) ≥ −tan²(α/2)` and `‖Im T(t)‖ ≤ max |Im Omega(α)|`.
pub fn derived_bounds_check(sm: &SectorialMatrix, ts: &[f64]) -> Result<DerivedBoundsReport> {
    let alpha = sm.alpha;
    let re_bound = -(alpha.radians() / 2.0).tan().powi(2);
    let im_bound = omega_max_im(alpha);
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let (re, im) = cartesian_parts(&semigroup(sm, t)?);
        let re_min = herm_eigen(&re)?.min();
        let im_norm = operator_norm(&im);
        rows.push(DerivedBoundsRow {
            t,
            re_min,
            re_bound,
            im_norm,
            im_bound,
            pass: re_min >= re_bound - DERIVED_TOL && im_norm <= im_bound + DERIVED_TOL,
        });
    }
    Ok(DerivedBoundsReport {
        alpha: alpha.radians(),
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}

/// One factor `(exp(−tS)u, u)` of the product inequality.
#[derive(Debug, Clone)]
pub struct ProductFactor {
    pub generator: SectorialMatrix,
    pub t: f64,
    pub u: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProductReport {
    pub alpha: f64,
    pub product: [f64; 2],
    pub norm_plus: f64,
    pub norm_minus: f64,
    pub pass: bool,
}

/// `|sinα·√(∏(T_k(t_k)u_k, u_k)) ± i cosα| ≤ 1` with the principal root.
pub fn product_inequality_check(factors: &[ProductFactor], alpha: Angle) -> Result<ProductReport> {
    let mut product = Complex64::new(1.0, 0.0);
    for f in factors {
        if f.generator.alpha != alpha {
            return Err(Error::InvalidArgument("all factors must share the semi-angle".into()));
        }
        if f.u.len() != f.generator.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.generator.dim(),
                actual: f.u.len(),
            });
        }
        let norm = vec_norm(&f.u);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitVector(norm));
        }
        let tu = semigroup(&f.generator, f.t)?.matvec(&f.u);
        product *= inner(&tu, &f.u);
    }
    let (sin, cos) = alpha.radians().sin_cos();
    let root = principal_sqrt(product) * sin;
    let shift = Complex64::new(0.0, cos);
    let (norm_plus, norm_minus) = ((root + shift).norm(), (root - shift).norm());
    Ok(ProductReport {
        alpha: alpha.radians(),
        product: [product.re, product.im],
        norm_plus,
        norm_minus,
        pass: norm_plus.max(norm_minus) <= 1.0 + DERIVED_TOL,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerDifferenceReport {
    /// `(n, (n+1)‖Cⁿ − C^{n+1}‖)` for each requested `n`.
    pub values: Vec<(u64, f64)>,
    pub sup: f64,
    /// Largest value over the upper half of the range (`n > nmax/2`).
    pub tail_max: f64,
    /// Largest value below it.
    pub head_max: f64,
    pub finite: bool,
    pub trend_bounded: bool,
    pub pass: bool,
}

/// Measures `(n+1)‖Cⁿ − C^{n+1}‖`; bounded sequences pass when the upper
/// half of the range does not exceed the lower half.
pub fn power_difference_check(c: &CMatrix, ns: &[u64]) -> Result<PowerDifferenceReport> {
    let nmax = ns.iter().copied().max().ok_or_else(|| Error::InvalidArgument("empty n list".into()))?;
    if ns.contains(&0) {
        return Err(Error::InvalidArgument("powers start at n = 1".into()));
    }
    let mut wanted: Vec<u64> = ns.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let mut values = Vec::with_capacity(wanted.len());
    let mut power = c.clone();
    let mut next = wanted.iter().peekable();
    for n in 1..=nmax {
        let following = &power * c;
        if next.peek() == Some(&&n) {
            next.next();
            let d = operator_norm(&(&power - &following));
            values.push((n, (n + 1) as f64 * d));
        }
        power = following;
    }
    let split = nmax / 2;
    let head_max = values.iter().filter(|v| v.0 <= split).map(|v| v.1).fold(0.0, f64::max);
    let tail_max = values.iter().filter(|v| v.0 > split).map(|v| v.1).fold(0.0, f64::max);
    let finite = values.iter().all(|v| v.1.is_finite());
    let trend_bounded = tail_max <= head_max;
    Ok(PowerDifferenceReport {
        sup: head_max.max(tail_max),
        tail_max,
        head_max,
        finite,
        trend_bounded,
        pass: finite && trend_bounded,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::RegionFamily;
    use crate::sectorial::{class_c_norms, random_sectorial, resolvent_contraction};
    use crate::rng::Stream;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn angle(a: f64) -> Angle {
        Angle::new(a).unwrap()
    }

    fn scalar(s: Complex64, alpha: f64) -> SectorialMatrix {
        SectorialMatrix::certify(CMatrix::scalar(1, s), angle(alpha), 64).unwrap()
    }

    #[test]
    fn semigroup_examples() {
        let sm = random_sectorial(4, angle(0.8), 5).unwrap();
        assert!((&semigroup(&sm, 0.0).unwrap() - &CMatrix::identity(4)).max_abs() < 1e-15);
        let a = semigroup(&sm, 0.3).unwrap();
        let b = semigroup(&sm, 0.9).unwrap();
        let ab = semigroup(&sm, 1.2).unwrap();
        assert!(operator_norm(&(&(&a * &b) - &ab)) <= 1e-9);
        for &t in &[0.1, 1.0, 10.0] {
            let tt = semigroup(&sm, t).unwrap();
            assert!(operator_norm(&tt) <= 1.0 + 1e-9);
            assert!(class_c_norms(&tt, sm.alpha).pass);
        }
        assert!(semigroup(&sm, -1.0).is_err());

        let diag = [c(1.0, 0.5), c(2.0, -1.0), c(0.3, 0.0)];
        let sm = SectorialMatrix::certify(CMatrix::from_diag(&diag), angle(1.2), 90).unwrap();
        let tt = semigroup(&sm, 0.7).unwrap();
        for (k, s) in diag.iter().enumerate() {
            assert!((tt[(k, k)] - (-s * 0.7).exp()).norm() < 1e-13);
        }
    }

    #[test]
    fn euler_examples() {
        let sm = random_sectorial(3, angle(0.5), 8).unwrap();
        for n in [1, 5, 40] {
            assert!((&euler_approx(&sm, 0.0, n).unwrap() - &CMatrix::identity(3)).max_abs() < 1e-15);
        }
        let one = euler_approx(&sm, 2.0, 1).unwrap();
        let f = resolvent_contraction(&sm, 2.0).unwrap();
        assert!((&one - &f).max_abs() < 1e-13);
        let s = c(1.5, 0.4);
        let e = euler_approx(&scalar(s, 0.5), 1.0, 10).unwrap()[(0, 0)];
        assert!((e - (s / 10.0 + 1.0).powi(-10)).norm() < 1e-14);
        for n in [1u64, 2, 4, 64, 1024] {
            assert!(class_c_norms(&euler_approx(&sm, 1.0, n).unwrap(), sm.alpha).pass);
        }
    }

    #[test]
    fn k_up_values() {
        let cap = 2.0 + 2.0 / 3f64.sqrt();
        assert_eq!(k_up(angle(0.0)), cap);
        assert_eq!(k_up(angle(0.01)), cap);
        assert!((k_up(angle(1.4)) - (PI - 1.4) / 1.4).abs() < 1e-15);
        assert!(euler_bound(angle(1.56), 1) > VACUOUS_BOUND);
    }

    #[test]
    fn scalar_euler_table() {
        let sm = scalar(c(1.0, 0.0), 0.01);
        let ns: Vec<u64> = (1..=20).collect();
        let r = euler_error_table(&sm, 1.0, &ns).unwrap();
        let row = r.rows.iter().find(|r| r.n == 10).unwrap();
        let oracle = ((-1.0f64).exp() - 1.1f64.powi(-10)).abs();
        assert!((row.error - oracle).abs() < 1e-14);
        assert!((row.error - 1.766e-2).abs() < 5e-5);
        assert!(r.pass);

        let ns: Vec<u64> = (4..=12).map(|k| 1u64 << k).collect();
        let r = euler_error_table(&sm, 1.0, &ns).unwrap();
        let slope = r.slope.unwrap();
        assert!((slope + 1.0).abs() < 0.01, "{slope}");
        // leading term t² e^{−t} / (2n)
        let last = r.rows.last().unwrap();
        let asym = (-1.0f64).exp() / (2.0 * last.n as f64);
        assert!((last.error / asym - 1.0).abs() < 1e-2);

        let r = euler_error_table(&sm, 0.0, &[1, 2, 3]).unwrap();
        assert!(r.rows.iter().all(|r| r.error == 0.0));
        assert!(r.slope.is_none());
        assert!(euler_error_table(&sm, 1.0, &[4, 2]).is_err());
    }

    #[test]
    fn matrix_euler_tables_respect_bound() {
        for (seed, alpha) in [(1u64, 0.2), (2, 0.6), (3, 1.0), (4, 1.4)] {
            let sm = random_sectorial(4, angle(alpha), seed).unwrap();
            let ns: Vec<u64> = (0..=10).map(|k| 1u64 << k).collect();
            let r = euler_error_table(&sm, 1.0, &ns).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn scalar_g_sup_examples() {
        assert_eq!(scalar_g(c(0.0, 0.0), 7).norm(), 0.0);
        let sup = scalar_g_sup(angle(PI / 4.0), 1, 50.0, 10_000).unwrap();
        assert!(sup <= 2.0);
        let sup = scalar_g_sup(angle(0.01), 16, 800.0, 10_000).unwrap();
        assert!(sup <= (1.0 / 16.0) * (1.0 + 1e-4));
        assert!(scalar_g_sup(angle(0.0), 4, 200.0, 100).is_err());
    }

    #[test]
    fn semigroup_range_examples() {
        let sm = random_sectorial(8, angle(1.3), 14).unwrap();
        let r = semigroup_range_check(&sm, &[0.0, 0.1, 1.0, 10.0], 720, 1e-7).unwrap();
        assert!(r.pass, "{r:?}");

        let herm = random_sectorial(5, angle(0.0), 2).unwrap();
        let r = semigroup_range_check(&herm, &[0.5, 3.0], 180, 1e-7).unwrap();
        assert!(r.pass);
        let omega0 = RegionSpec::at(RegionFamily::Omega, 0.0);
        let hull = compute_hull(&semigroup(&herm, 0.5).unwrap(), 90);
        assert!(hull_in_region(&hull, &omega0, 1e-9).pass);
    }

    #[test]
    fn converse_probe_examples() {
        let ts = [1e-3, 1e-2, 0.1, 0.5];
        let out = converse_probe(&CMatrix::scalar(2, c(0.0, 0.7)), angle(0.8), &ts, 90).unwrap();
        assert!(matches!(out, ConverseOutcome::Witness { .. }), "{out:?}");
        let out = converse_probe(&CMatrix::scalar(1, Complex64::from_polar(1.0, 1.2)), angle(0.9), &ts, 90).unwrap();
        match out {
            ConverseOutcome::Witness { t, .. } => assert!(t <= 0.1),
            other => panic!("{other:?}"),
        }
        let sm = random_sectorial(4, angle(0.9), 3).unwrap();
        assert_eq!(converse_probe(&sm.s, angle(0.9), &ts, 180).unwrap(), ConverseOutcome::NotApplicable);
    }

    #[test]
    fn derived_bounds_examples() {
        let sm = random_sectorial(8, angle(1.2), 6).unwrap();
        let r = derived_bounds_check(&sm, &[0.0, 0.5, 2.0]).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.rows[0].re_min - 1.0).abs() < 1e-12);
        let herm = random_sectorial(4, angle(0.0), 6).unwrap();
        let r = derived_bounds_check(&herm, &[1.0]).unwrap();
        assert!(r.rows[0].im_norm < 1e-12);
    }

    #[test]
    fn product_inequality_examples() {
        let alpha = angle(1.0);
        let mut s = Stream::new(4);
        let gens: Vec<SectorialMatrix> = (0..3).map(|k| random_sectorial(4, alpha, 50 + k).unwrap()).collect();
        let zero: Vec<ProductFactor> = gens
            .iter()
            .map(|g| ProductFactor {
                generator: g.clone(),
                t: 0.0,
                u: s.unit_vector(4),
            })
            .collect();
        let r = product_inequality_check(&zero, alpha).unwrap();
        assert!((r.norm_plus - 1.0).abs() < 1e-12 && r.pass);

        for _ in 0..200 {
            let factors: Vec<ProductFactor> = gens
                .iter()
                .map(|g| ProductFactor {
                    generator: g.clone(),
                    t: s.uniform_in(0.0, 3.0),
                    u: s.unit_vector(4),
                })
                .collect();
            assert!(product_inequality_check(&factors, alpha).unwrap().pass);
            // a single factor is Omega membership of the quadratic form
            let single = &factors[..1];
            let r = product_inequality_check(single, alpha).unwrap();
            let z = c(r.product[0], r.product[1]);
            assert_eq!(r.pass, RegionSpec::new(RegionFamily::Omega, alpha).contains(z, 1e-9));
        }
    }

    #[test]
    fn power_difference_examples() {
        let r = power_difference_check(&CMatrix::identity(3), &[1, 2, 8]).unwrap();
        assert_eq!(r.sup, 0.0);

        // spectrum {n/(n+1)}: at each such n the scaled difference is (n/(n+1))ⁿ
        let ns: Vec<u64> = (0..=10).map(|k| 1u64 << k).collect();
        let diag: Vec<f64> = ns.iter().map(|&n| n as f64 / (n + 1) as f64).collect();
        let r = power_difference_check(&CMatrix::from_real_diag(&diag), &ns).unwrap();
        let last = r.values.last().unwrap().1;
        assert!((last * std::f64::consts::E - 1.0).abs() < 0.02, "{last}");
        assert!(r.pass);

        let sm = random_sectorial(6, angle(1.0), 10).unwrap();
        let f = resolvent_contraction(&sm, 1.0).unwrap();
        let all: Vec<u64> = (1..=1024).collect();
        let r = power_difference_check(&f, &all).unwrap();
        assert!(r.finite && r.sup < 10.0, "{}", r.sup);
    }
}

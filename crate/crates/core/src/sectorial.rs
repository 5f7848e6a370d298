//! Sectorial matrices and the contraction class `C(α)`.
//!
//! `T` belongs to `C(α)` when `‖T sinα ± i cosα·I‖ ≤ 1`, i.e. both shifted
//! and scaled copies are contractions. The Cayley transform
//! `T = (I − S)(I + S)^{−1}` maps matrices with `W(S) ⊆ S(α)` into `C(α)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{herm_eigen, inner, operator_norm, solve, vec_norm, CMatrix};
use crate::numrange::{compute_hull, hull_in_region, HullReport, DEFAULT_ANGLES};
use crate::regions::{Angle, RegionFamily, RegionSpec};
use crate::rng::Stream;

/// Tolerance on class norms; absorbs eigensolver error.
pub const CLASS_TOL: f64 = 1e-9;
/// Tolerance for sector certification of generators.
pub const SECTOR_TOL: f64 = 1e-8;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A matrix whose numerical range has been certified inside `S(α)`.
#[derive(Debug, Clone)]
pub struct SectorialMatrix {
    pub s: CMatrix,
    pub alpha: Angle,
    /// Worst distance of an outer hull vertex from the sector.
    pub cert: f64,
}

impl SectorialMatrix {
    /// Certifies `W(s) ⊆ S(α)` with `m` support directions.
    pub fn certify(s: CMatrix, alpha: Angle, m: usize) -> Result<Self> {
        let report = sector_report(&s, alpha, m);
        if !report.pass {
            return Err(Error::CertificationFailure {
                worst: report.worst_dist,
            });
        }
        Ok(Self {
            s,
            alpha,
            cert: report.worst_dist,
        })
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }
}

fn sector_report(s: &CMatrix, alpha: Angle, m: usize) -> HullReport {
    let hull = compute_hull(s, m);
    hull_in_region(&hull, &RegionSpec::new(RegionFamily::Sector, alpha), SECTOR_TOL)
}

fn gaussian_matrix(n: usize, stream: &mut Stream) -> CMatrix {
    let data = (0..n * n).map(|_| stream.complex_normal()).collect();
    CMatrix::from_row_major(n, data).expect("n ≥ 1 and finite entries")
}

/// `S = H + i tanα·H^{1/2} R H^{1/2}` with `H = G*G + εI` positive definite
/// and `R` Hermitian of norm `ρ < 1`. Then
/// `|Im(Sx, x)| = tanα·|(R H^{1/2}x, H^{1/2}x)| ≤ ρ tanα·Re(Sx, x)`,
/// so `W(S)` lies in the sector by construction; the hull check confirms it.
pub fn random_sectorial(dim: usize, alpha: Angle, seed: u64) -> Result<SectorialMatrix> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let mut stream = Stream::new(seed);
    let g = gaussian_matrix(dim, &mut stream);
    let gg = &g.adjoint() * &g;
    let eps = 1e-3 * operator_norm(&gg);
    let h = gg.shift(Complex64::new(eps, 0.0));
    let x = gaussian_matrix(dim, &mut stream);
    let r = (&x + &x.adjoint()).scale_real(0.5);
    let rho = stream.uniform();
    let r_norm = operator_norm(&r);
    let r = if r_norm > 0.0 {
        r.scale_real(rho / r_norm)
    } else {
        r
    };
    let root = herm_eigen(&h)?.map(|l| l.max(0.0).sqrt());
    let skew = &(&root * &r) * &root;
    let s = &h + &skew.scale(I * alpha.radians().tan());
    SectorialMatrix::certify(s, alpha, DEFAULT_ANGLES)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassCCert {
    pub alpha: f64,
    pub norm_plus: f64,
    pub norm_minus: f64,
    pub pass: bool,
}

impl ClassCCert {
    pub fn worst(&self) -> f64 {
        self.norm_plus.max(self.norm_minus)
    }
}

/// `‖T sinα + i cosα I‖` and `‖T sinα − i cosα I‖`.
///
/// At α = 0 both shifted norms equal 1 for every `T`, so the class is read as
/// the Hermitian contractions instead: `norm_plus = ‖T‖` and
/// `norm_minus = ‖T‖ + ‖Im T‖`.
pub fn class_c_norms(t: &CMatrix, alpha: Angle) -> ClassCCert {
    let (norm_plus, norm_minus) = if alpha.is_degenerate() {
        let norm = operator_norm(t);
        let im = (t - &t.adjoint()).scale_real(0.5);
        (norm, norm + operator_norm(&im))
    } else {
        let (sin, cos) = alpha.radians().sin_cos();
        let base = t.scale_real(sin);
        (
            operator_norm(&base.shift(I * cos)),
            operator_norm(&base.shift(-I * cos)),
        )
    };
    ClassCCert {
        alpha: alpha.radians(),
        norm_plus,
        norm_minus,
        pass: norm_plus.max(norm_minus) <= 1.0 + CLASS_TOL,
    }
}

/// Vector form of the class condition:
/// `tanα(‖f‖² − ‖Tf‖²) − 2|Im(Tf, f)|`, non-negative for members.
pub fn class_c_vector_criterion(t: &CMatrix, alpha: Angle, f: &[Complex64]) -> Result<f64> {
    if alpha.is_degenerate() {
        return Err(Error::DegenerateAngle);
    }
    if f.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            actual: f.len(),
        });
    }
    let norm = vec_norm(f);
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnitVector(norm));
    }
    let tf = t.matvec(f);
    let tf_norm2 = vec_norm(&tf).powi(2);
    Ok(alpha.radians().tan() * (1.0 - tf_norm2) - 2.0 * inner(&tf, f).im.abs())
}

/// `(I − S)(I + S)^{−1}`; the factors commute, so this is one solve.
pub fn cayley(s: &CMatrix) -> Result<CMatrix> {
    let n = s.dim();
    let id = CMatrix::identity(n);
    solve(&(&id + s), &(&id - s))
}

/// `(I − T)(I + T)^{−1}`, the inverse map (the Cayley transform is an involution).
pub fn inverse_cayley(t: &CMatrix) -> Result<CMatrix> {
    cayley(t)
}

/// `F(λ) = (I + λS)^{−1}`.
pub fn resolvent_contraction(sm: &SectorialMatrix, lambda: f64) -> Result<CMatrix> {
    if lambda.is_nan() || lambda < 0.0 {
        return Err(Error::InvalidArgument(format!("lambda must be non-negative, got {lambda}")));
    }
    let n = sm.dim();
    let id = CMatrix::identity(n);
    solve(&(&id + &sm.s.scale_real(lambda)), &id)
}

/// `‖(F − I/2) sinα ± (i cosα/2) I‖`; both are at most 1/2 for `F = (I + λS)^{−1}`.
pub fn numc_norms(f: &CMatrix, alpha: Angle) -> (f64, f64) {
    let (sin, cos) = alpha.radians().sin_cos();
    let base = f.shift(Complex64::new(-0.5, 0.0)).scale_real(sin);
    (
        operator_norm(&base.shift(I * (cos / 2.0))),
        operator_norm(&base.shift(-I * (cos / 2.0))),
    )
}

/// `(T1 T2 + T2 T1)/2`.
pub fn symmetrized_product(t1: &CMatrix, t2: &CMatrix) -> Result<CMatrix> {
    if t1.dim() != t2.dim() {
        return Err(Error::DimensionMismatch {
            expected: t1.dim(),
            actual: t2.dim(),
        });
    }
    Ok((&(t1 * t2) + &(t2 * t1)).scale_real(0.5))
}

#[derive(Debug, Clone, Serialize)]
pub struct EvenPowerReport {
    pub alpha: f64,
    pub n: u64,
    pub hull: HullReport,
    pub pass: bool,
}

pub const EVEN_POWER_TOL: f64 = 1e-7;

/// `W(T^{2n}) ⊆ Omega(α)` for a class member `T`.
pub fn even_power_range_check(t: &CMatrix, alpha: Angle, n: u64, m: usize) -> Result<EvenPowerReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("power index must be at least 1".into()));
    }
    let cert = class_c_norms(t, alpha);
    if !cert.pass {
        return Err(Error::NotInClass {
            alpha: alpha.radians(),
            plus: cert.norm_plus,
            minus: cert.norm_minus,
        });
    }
    let power = t.pow(2 * n);
    let hull = compute_hull(&power, m);
    let report = hull_in_region(&hull, &RegionSpec::new(RegionFamily::Omega, alpha), EVEN_POWER_TOL);
    Ok(EvenPowerReport {
        alpha: alpha.radians(),
        n,
        pass: report.pass,
        hull: report,
    })
}

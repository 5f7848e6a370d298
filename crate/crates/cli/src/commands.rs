use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use num_complex::Complex64;
use serde::Serialize;

use sectoria_core::numrange::{compute_hull, hull_in_region, HullReport};
use sectoria_core::regions::{boundary_samples, Angle, RegionFamily, RegionSpec};
use sectoria_core::sectorial::{random_sectorial, SectorialMatrix};
use sectoria_core::semigroup::euler_error_table;
use sectoria_core::verify::{self, RunConfig};
use sectoria_core::CMatrix;

use crate::matrix_file::MatrixFile;
use crate::output::{num, write_all};
use crate::{AngleArg, Failure};

type CmdResult = Result<(), Failure>;

const VIEW: f64 = 1.15;
const POINT_TOL: f64 = 1e-9;

fn angle_of(arg: AngleArg) -> anyhow::Result<Angle> {
    let angle = match (arg.alpha, arg.alpha_deg) {
        (Some(a), None) => Angle::new(a),
        (None, Some(d)) => Angle::from_degrees(d),
        _ => bail!("give exactly one of --alpha and --alpha-deg"),
    };
    Ok(angle?)
}

fn colour(f: RegionFamily) -> &'static str {
    match f {
        RegionFamily::Lset => "#1b9e77",
        RegionFamily::Omega => "#d95f02",
        RegionFamily::Qset => "#7570b3",
        RegionFamily::Dset => "#e7298a",
        RegionFamily::Cset => "#66a61e",
        RegionFamily::Sector => "#e6ab02",
        RegionFamily::Bset => "#a6761d",
        RegionFamily::UnitDisk => "#666666",
    }
}

fn svg_document(alpha: Angle, curves: &[(RegionFamily, Vec<Complex64>)]) -> String {
    let mut s = String::new();
    let side = 2.0 * VIEW;
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="{} {} {} {}">"#,
        num(-VIEW),
        num(-VIEW),
        num(side),
        num(side)
    );
    let _ = writeln!(s, r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, num(-VIEW), num(-VIEW), num(side), num(side));
    // imaginary axis points up
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" fill="none" stroke-linejoin="round">"#);
    let _ = writeln!(
        s,
        r##"<path d="M {a} 0 H {b} M 0 {a} V {b}" stroke="#bbbbbb" stroke-width="0.004"/>"##,
        a = num(-VIEW),
        b = num(VIEW)
    );
    for (family, points) in curves {
        let pts: Vec<String> = points.iter().map(|p| format!("{:.6},{:.6}", p.re, p.im)).collect();
        let _ = writeln!(
            s,
            r#"<polyline data-family="{}" points="{}" stroke="{}" stroke-width="0.008"/>"#,
            family,
            pts.join(" "),
            colour(*family)
        );
    }
    let _ = writeln!(s, "</g>");
    for (k, (family, _)) in curves.iter().enumerate() {
        let y = -VIEW + 0.1 + 0.08 * k as f64;
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="0.06" font-family="sans-serif" fill="{}">{}</text>"#,
            -VIEW + 0.05,
            y,
            colour(*family),
            family
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="0.5" y="{:.3}" font-size="0.06" font-family="sans-serif">α = {}</text>"#,
        VIEW - 0.07,
        num(alpha.radians())
    );
    s.push_str("</svg>\n");
    s
}

pub fn regions(angle: AngleArg, families: &str, samples: usize, out_csv: &Path, svg: Option<&Path>) -> CmdResult {
    let alpha = angle_of(angle)?;
    let families: Vec<RegionFamily> = families
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    if families.is_empty() {
        return Err(anyhow!("no region families given").into());
    }
    let mut csv = String::from("family,alpha,param,re,im\n");
    let mut curves = Vec::with_capacity(families.len());
    for family in families {
        let spec = RegionSpec::new(family, alpha);
        let b = boundary_samples(&spec, samples)?;
        for (t, p) in b.params.iter().zip(&b.points) {
            if !spec.contains(*p, POINT_TOL) {
                return Err(Failure::Verification(format!(
                    "boundary sample {p} of {family} fails its own predicate (margin {:e})",
                    spec.margin(*p)
                )));
            }
            let _ = writeln!(csv, "{},{},{},{},{}", family, num(alpha.radians()), num(*t), num(p.re), num(p.im));
        }
        curves.push((family, b.points));
    }
    let svg_text = svg.map(|_| svg_document(alpha, &curves));
    let mut files: Vec<(&Path, &str)> = vec![(out_csv, &csv)];
    if let (Some(path), Some(text)) = (svg, svg_text.as_deref()) {
        files.push((path, text));
    }
    write_all(&files)?;
    Ok(())
}

#[derive(Serialize)]
struct NumrangeReport<'a> {
    n: usize,
    angles: usize,
    gap: f64,
    support_values: &'a [f64],
    support_points: Vec<[f64; 2]>,
    outer_vertices: Vec<[f64; 2]>,
    containment: Option<HullReport>,
}

pub fn numrange(
    matrix: &Path,
    angles: usize,
    region: Option<&str>,
    alpha: Option<f64>,
    tol: f64,
    out: &Path,
) -> CmdResult {
    let a = MatrixFile::load(matrix)?;
    if angles < 16 {
        return Err(anyhow!("--angles must be at least 16").into());
    }
    let spec = match region {
        None => None,
        Some(name) => {
            let family: RegionFamily = name.parse()?;
            let alpha = match (alpha, family) {
                (Some(a), _) => Angle::new(a)?,
                (None, RegionFamily::UnitDisk) => Angle::new(0.0)?,
                (None, _) => return Err(anyhow!("--region {name} needs --alpha").into()),
            };
            Some(RegionSpec::new(family, alpha))
        }
    };
    let hull = compute_hull(&a, angles);
    let scale = 1.0 + a.norm_fro();
    for ((&t, &h), p) in hull.angles.iter().zip(&hull.support_values).zip(&hull.support_points) {
        let attained = (Complex64::from_polar(1.0, -t) * p).re;
        if (attained - h).abs() > 1e-10 * scale {
            return Err(Failure::Verification(format!("support point at θ = {t} misses its support line")));
        }
    }
    let containment = spec.map(|s| hull_in_region(&hull, &s, tol));
    let report = NumrangeReport {
        n: a.dim(),
        angles,
        gap: hull.gap,
        support_values: &hull.support_values,
        support_points: hull.support_points.iter().map(|p| [p.re, p.im]).collect(),
        outer_vertices: hull.outer_vertices.iter().map(|p| [p.re, p.im]).collect(),
        containment: containment.clone(),
    };
    let json = serde_json::to_string_pretty(&report).context("serializing report")?;
    write_all(&[(out, &json)])?;
    match containment {
        Some(r) if !r.pass => Err(Failure::Verification(format!(
            "W(A) leaves {} by {:e} (allowed {:e})",
            r.region,
            r.worst_dist,
            r.tol + r.gap
        ))),
        _ => Ok(()),
    }
}

pub struct VerifyOverrides {
    pub seed: Option<u64>,
    pub dims: Option<Vec<usize>>,
    pub alphas: Option<Vec<f64>>,
    pub trials: Option<usize>,
    pub instances: Option<usize>,
    pub angles: Option<usize>,
}

pub fn verify(config: Option<&Path>, o: VerifyOverrides, out: Option<&Path>) -> CmdResult {
    let mut cfg = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            serde_json::from_str::<RunConfig>(&text).with_context(|| format!("malformed config {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    if let Some(v) = o.seed {
        cfg.seed = v;
    }
    if let Some(v) = o.dims {
        cfg.dims = v;
    }
    if let Some(v) = o.alphas {
        cfg.alphas = v;
    }
    if let Some(v) = o.trials {
        cfg.trials = v;
    }
    if let Some(v) = o.instances {
        cfg.instances = v;
    }
    if let Some(v) = o.angles {
        cfg.angles = v;
    }
    cfg.validate()?;
    let report = verify::run(&cfg)?;
    for c in &report.checks {
        println!(
            "{:>2} {:<26} {}  cases {:>6}  failures {:>3}  vacuous {:>3}  margin {:+.3e}",
            c.id,
            c.name,
            if c.passed() { "pass" } else { "FAIL" },
            c.cases,
            c.failures,
            c.vacuous,
            c.margin
        );
    }
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&report).context("serializing report")?;
        write_all(&[(path, &json)])?;
    }
    if report.pass {
        Ok(())
    } else {
        let failed: Vec<String> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
        Err(Failure::Verification(failed.join(", ")))
    }
}

#[allow(clippy::too_many_arguments)]
pub fn euler(
    dim: usize,
    alpha: f64,
    t: f64,
    nmin: u64,
    nmax: u64,
    seed: u64,
    matrix: Option<&Path>,
    out: &Path,
) -> CmdResult {
    let alpha = Angle::new(alpha)?;
    if nmin == 0 || nmin > nmax {
        return Err(anyhow!("need 1 ≤ nmin ≤ nmax").into());
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(anyhow!("--t must be finite and non-negative").into());
    }
    let sm = match matrix {
        Some(path) => {
            let s: CMatrix = MatrixFile::load(path)?;
            SectorialMatrix::certify(s, alpha, 720)
                .map_err(|e| anyhow!("generator in {} is not {}-sectorial: {e}", path.display(), alpha.radians()))?
        }
        None => {
            if dim == 0 {
                return Err(anyhow!("--dim must be positive").into());
            }
            random_sectorial(dim, alpha, seed)?
        }
    };
    let ns: Vec<u64> = (nmin..=nmax).collect();
    let report = euler_error_table(&sm, t, &ns)?;
    let mut csv = String::from("n,error,bound,ratio\n");
    for r in &report.rows {
        if !(r.error.is_finite() && r.error >= 0.0) {
            return Err(Failure::Verification(format!("non-finite error at n = {}", r.n)));
        }
        let _ = writeln!(csv, "{},{},{},{}", r.n, num(r.error), num(r.bound), num(r.ratio));
    }
    let _ = writeln!(csv, "slope,{}", report.slope.map_or_else(|| "nan".to_string(), num));
    write_all(&[(out, &csv)])?;
    let vacuous = report.rows.iter().filter(|r| r.vacuous).count();
    if vacuous > 0 {
        eprintln!("note: {vacuous} rows have bound > 1e3 (vacuous)");
    }
    if report.pass {
        Ok(())
    } else {
        let worst = report.rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
        Err(Failure::Verification(format!("error exceeds bound (worst ratio {worst})")))
    }
}

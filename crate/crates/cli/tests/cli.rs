use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use num_complex::Complex64;
use sectoria_core::regions::{RegionFamily, RegionSpec};

fn sectoria(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sectoria"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

#[test]
fn regions_degenerate_angle_gives_segments() {
    let dir = tempfile::tempdir().unwrap();
    let o = sectoria(&["regions", "--alpha", "0", "--samples", "32", "--out-csv", "r.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(dir.path().join("r.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let points = |fam: &str| -> Vec<(f64, f64)> {
        rows.iter()
            .filter(|r| r[0] == fam)
            .map(|r| (r[3].parse().unwrap(), r[4].parse().unwrap()))
            .collect()
    };
    let c = points("C");
    assert!(c.iter().all(|p| p.1 == 0.0));
    assert!(c.contains(&(-1.0, 0.0)) && c.contains(&(1.0, 0.0)));
    for fam in ["L", "Omega", "Q", "D"] {
        let pts = points(fam);
        assert!(pts.contains(&(0.0, 0.0)) && pts.contains(&(1.0, 0.0)), "{fam}");
        assert!(pts.iter().all(|p| p.1 == 0.0 && (0.0..=1.0).contains(&p.0)));
    }
}

#[test]
fn regions_points_satisfy_predicates_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["regions", "--alpha", "1.0", "--samples", "512", "--out-csv", "a.csv", "--svg", "a.svg"];
    assert_eq!(code(&sectoria(&args, dir.path())), 0);
    let args2 = ["regions", "--alpha", "1.0", "--samples", "512", "--out-csv", "b.csv", "--svg", "b.svg"];
    assert_eq!(code(&sectoria(&args2, dir.path())), 0);
    let read = |n: &str| fs::read(dir.path().join(n)).unwrap();
    assert_eq!(read("a.csv"), read("b.csv"));
    assert_eq!(read("a.svg"), read("b.svg"));

    let csv = String::from_utf8(read("a.csv")).unwrap();
    let mut families = std::collections::BTreeSet::new();
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let family: RegionFamily = f[0].parse().unwrap();
        families.insert(f[0].to_string());
        let z = Complex64::new(f[3].parse().unwrap(), f[4].parse().unwrap());
        assert!(RegionSpec::at(family, 1.0).contains(z, 1e-9), "{line}");
    }
    assert_eq!(families.len(), 5);
    let svg = String::from_utf8(read("a.svg")).unwrap();
    assert!(svg.contains(r#"viewBox="-1.15 -1.15 2.3 2.3""#));
    assert_eq!(svg.matches("<polyline").count(), 5);
}

#[test]
fn regions_degrees_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = sectoria(&["regions", "--alpha-deg", "45", "--families", "S,B", "--out-csv", "d.csv"], dir.path());
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(dir.path().join("d.csv")).unwrap();
    assert!(csv.lines().nth(1).unwrap().starts_with("S,0.7853981633974483,"));
}

#[test]
fn regions_invalid_angle_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    for alpha in ["1.6", "-0.1", "nan"] {
        let o = sectoria(&["regions", "--alpha", alpha, "--out-csv", "x.csv", "--svg", "x.svg"], dir.path());
        assert_eq!(code(&o), 2, "alpha {alpha}");
    }
    let o = sectoria(&["regions", "--alpha", "0.5", "--families", "L,Nope", "--out-csv", "x.csv"], dir.path());
    assert_eq!(code(&o), 2);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn regions_failed_write_leaves_nothing_behind() {
    let dir = tempfile::tempdir().unwrap();
    let o = sectoria(
        &["regions", "--alpha", "0.5", "--out-csv", "ok.csv", "--svg", "missing/dir/x.svg"],
        dir.path(),
    );
    assert_eq!(code(&o), 2);
    assert!(!dir.path().join("ok.csv").exists());
}

#[test]
fn numrange_identity_in_disk() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "id.json", r#"{"n": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]}"#);
    let o = sectoria(&["numrange", "--matrix", "id.json", "--angles", "64", "--region", "Disk", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(r["containment"]["pass"], true);
    assert!(r["gap"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn numrange_jordan_block_is_a_half_disk() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "j.json", r#"{"n": 2, "entries": [[[0,0],[1,0]],[[0,0],[0,0]]]}"#);
    let o = sectoria(&["numrange", "--matrix", "j.json", "--angles", "720", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 0);
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let gap = r["gap"].as_f64().unwrap();
    assert!(gap < 1e-4);
    for h in r["support_values"].as_array().unwrap() {
        assert!((h.as_f64().unwrap() - 0.5).abs() <= 1e-6);
    }
    for v in r["outer_vertices"].as_array().unwrap() {
        let (x, y) = (v[0].as_f64().unwrap(), v[1].as_f64().unwrap());
        let radius = x.hypot(y);
        assert!(radius >= 0.5 - 1e-9 && radius <= 0.5 + gap + 1e-9);
    }
    assert!(r["containment"].is_null());
}

#[test]
fn numrange_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "t.json", r#"{"n": 2, "entries": [[[0,0],[1,0]"#);
    let o = sectoria(&["numrange", "--matrix", "t.json", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
    let o = sectoria(&["numrange", "--matrix", "nope.json", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 2);

    write(dir.path(), "rot.json", r#"{"n": 1, "entries": [[[0,1]]]}"#);
    let o = sectoria(&["numrange", "--matrix", "rot.json", "--region", "S", "--alpha", "0.5", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 1);
    let o = sectoria(&["numrange", "--matrix", "rot.json", "--region", "S", "--out", "r.json"], dir.path());
    assert_eq!(code(&o), 2);
}

const SMALL: [&str; 10] = [
    "verify",
    "--instances",
    "6",
    "--trials",
    "300",
    "--angles",
    "90",
    "--dims",
    "2,3",
    "--seed",
];

fn verify_run(dir: &Path, out: &str, threads: &str) -> (i32, Vec<u8>) {
    let mut args: Vec<&str> = SMALL.to_vec();
    args.extend(["7", "--out", out]);
    let o = Command::new(env!("CARGO_BIN_EXE_sectoria"))
        .args(&args)
        .current_dir(dir)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .unwrap();
    (code(&o), fs::read(dir.join(out)).unwrap())
}

#[test]
fn verify_is_deterministic_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let (c1, a) = verify_run(dir.path(), "a.json", "1");
    let (c2, b) = verify_run(dir.path(), "b.json", "1");
    let (c3, c) = verify_run(dir.path(), "c.json", "3");
    assert!(c1 == 0 || c1 == 1);
    assert_eq!((c1, &a), (c2, &b));
    assert_eq!((c1, &a), (c3, &c));
    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    let all_pass = checks.iter().all(|c| c["status"] == "pass");
    assert_eq!(report["pass"], all_pass);
    assert_eq!(c1 == 0, all_pass);
}

#[test]
fn verify_config_file() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "cfg.json",
        r#"{"seed": 3, "dims": [2], "alphas": [0.5, 1.56], "trials": 200, "instances": 2, "angles": 90, "product_trials": 20}"#,
    );
    let o = sectoria(&["verify", "--config", "cfg.json", "--out", "r.json"], dir.path());
    assert!(matches!(code(&o), 0 | 1));
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(r["config"]["seed"], 3);
    let by_name = |n: &str| r["checks"].as_array().unwrap().iter().find(|c| c["name"] == n).unwrap().clone();
    // near π/2 the Euler bound is uninformative and said so
    assert!(by_name("euler_norm_estimate")["vacuous"].as_u64().unwrap() > 0);
    assert_eq!(by_name("inclusion_chain")["status"], "pass");
    assert_eq!(by_name("semigroup_range_in_omega")["status"], "pass");

    write(dir.path(), "bad.json", r#"{"seed": 1, "colour": "red"}"#);
    assert_eq!(code(&sectoria(&["verify", "--config", "bad.json"], dir.path())), 2);
    assert_eq!(code(&sectoria(&["verify", "--alphas", "2.0"], dir.path())), 2);
}

fn euler_rows(path: &Path) -> (Vec<[f64; 4]>, String) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,error,bound,ratio");
    let footer = lines.pop().unwrap().to_string();
    let rows = lines[1..]
        .iter()
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect();
    (rows, footer)
}

#[test]
fn euler_scalar_example() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "one.json", r#"{"n": 1, "entries": [[[1,0]]]}"#);
    let o = sectoria(
        &["euler", "--matrix", "one.json", "--alpha", "0.01", "--t", "1", "--nmin", "1", "--nmax", "64", "--out", "e.csv"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let (rows, footer) = euler_rows(&dir.path().join("e.csv"));
    assert_eq!(rows.len(), 64);
    let r10 = rows.iter().find(|r| r[0] == 10.0).unwrap();
    assert!((r10[1] - 1.766e-2).abs() < 5e-5);
    assert!(rows.iter().all(|r| r[3] <= 1.0));
    assert!(footer.starts_with("slope,"));
}

#[test]
fn euler_random_generator_and_zero_time() {
    let dir = tempfile::tempdir().unwrap();
    let o = sectoria(
        &["euler", "--dim", "3", "--alpha", "0.7", "--t", "0", "--nmax", "16", "--out", "z.csv"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let (rows, footer) = euler_rows(&dir.path().join("z.csv"));
    assert!(rows.iter().all(|r| r[1] == 0.0));
    assert_eq!(footer, "slope,nan");

    let o = sectoria(
        &["euler", "--dim", "3", "--alpha", "0.7", "--t", "1", "--nmax", "256", "--seed", "5", "--out", "e.csv"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let (rows, _) = euler_rows(&dir.path().join("e.csv"));
    assert!(rows.iter().all(|r| r[3] <= 1.0));
}

#[test]
fn euler_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["euler", "--alpha", "0.5", "--nmin", "10", "--nmax", "2", "--out", "e.csv"],
        &["euler", "--alpha", "1.7", "--out", "e.csv"],
        &["euler", "--alpha", "0.5", "--t", "-1", "--out", "e.csv"],
        &["euler", "--alpha", "0.5"],
    ];
    for args in cases {
        assert_eq!(code(&sectoria(args, dir.path())), 2, "{args:?}");
    }
    write(dir.path(), "rot.json", r#"{"n": 1, "entries": [[[0,1]]]}"#);
    let o = sectoria(&["euler", "--alpha", "0.5", "--matrix", "rot.json", "--out", "e.csv"], dir.path());
    assert_eq!(code(&o), 2);
}

//! End-to-end runs of the `hopfx` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfx::schema::{AlgebraFile, MatrixBundle};
use serde_json::Value;
use tempfile::TempDir;

fn hopfx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfx")).args(args).env_remove("HOPFX_THREADS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn check_names(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap().to_string()).collect()
}

fn holds(v: &Value, name: &str) -> Option<bool> {
    v["checks"].as_array().unwrap().iter().find(|c| c["check"] == name).map(|c| c["holds"].as_bool().unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Write a fixture into `dir` and return its path.
fn fixture(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut all = vec!["example"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", p(&path)]);
    let o = hopfx(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn sweedler_round_trip_validates() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "1"]);
    let o = hopfx(&["validate", p(&h4)]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r["holds"], true);
    assert_eq!(holds(&r, "yang_baxter"), Some(true));
    assert_eq!(r["info"]["kind"], "quasitriangular");
}

#[test]
fn elliptic_check_on_sweedler() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "1"]);
    let o = hopfx(&["check", "elliptic", "-k", "1", p(&h4)]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    for name in ["associativity", "elliptic_relation", "X_k_reflection", "Y_k_reflection"] {
        assert_eq!(holds(&r, name), Some(true), "{name}");
    }
}

#[test]
fn mcg_verify_reports_relations() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "1"]);
    let o = hopfx(&["mcg", "verify", p(&h4)]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(holds(&r, "A4_eq_AB3"), Some(true));
    assert_eq!(holds(&r, "A2B_comm"), Some(true));
}

#[test]
fn mcg_apply_exports_matrix() {
    let dir = TempDir::new().unwrap();
    let dz = fixture(&dir, "dz2.json", &["double", "--group", "Z2"]);
    let out = dir.path().join("b.json");
    let o = hopfx(&["mcg", "apply", "B", p(&dz), "--basis", "1", "-o", p(&out)]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert!(check_names(&r).iter().all(|n| !n.starts_with("A_")));
    assert!(r["info"]["image"].is_array());
    let b: MatrixBundle = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let m = &b.matrices["B"];
    assert_eq!((m.rows, m.cols), (16, 16));
    assert!(m.to_linmap(b.field.conductor).unwrap().inverse().is_ok());
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let dz = fixture(&dir, "dz2.json", &["double", "--group", "Z2"]);
    let a = hopfx(&["check", "elliptic", "-k", "0", p(&dz)]);
    let b = hopfx(&["check", "elliptic", "-k", "0", p(&dz)]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed"));
    let t = hopfx(&["check", "hexagons", "--timings", p(&dz)]);
    assert!(report(&t)["checks"][0]["elapsed_ms"].is_number());
}

#[test]
fn built_double_round_trips() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "1"]);
    let out = dir.path().join("e1.json");
    let o = hopfx(&["build", "elliptic", "-k", "1", p(&h4), "-o", p(&out)]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let f: AlgebraFile = serde_json::from_str(&text).unwrap();
    assert_eq!(f.dim, 16);
    let again = AlgebraFile::from_algebra(&f.to_algebra().unwrap());
    assert_eq!(again, f);
    let v = hopfx(&["validate", p(&out)]);
    assert_eq!(code(&v), 0);
    assert_eq!(report(&v)["info"]["kind"], "algebra");
    // without -o the algebra itself is printed
    let o = hopfx(&["build", "elliptic", "-k", "1", p(&h4)]);
    assert_eq!(serde_json::from_slice::<AlgebraFile>(&o.stdout).unwrap(), f);
}

#[test]
fn build_commands() {
    let dir = TempDir::new().unwrap();
    let dz = fixture(&dir, "dz2.json", &["double", "--group", "Z2"]);
    let o = hopfx(&["build", "heisenberg", p(&dz), "-o", p(&dir.path().join("dh.json"))]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r["info"]["rank_phi"], 16);
    assert_eq!(r["info"]["phi_bijective"], true);
    assert_eq!(holds(&r, "coideal"), Some(true));

    let o = hopfx(&["build", "braided-dual", "-k", "2", p(&dz), "-o", p(&dir.path().join("h2.json"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(holds(&report(&o), "k_reflection"), Some(true));

    let dual = dir.path().join("dual.json");
    assert_eq!(code(&hopfx(&["build", "dual", p(&dz), "-o", p(&dual)])), 0);
    let v = hopfx(&["validate", p(&dual)]);
    assert_eq!(code(&v), 0);
    assert_eq!(report(&v)["info"]["kind"], "hopf");
}

#[test]
fn presentation_and_braid_matrices() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "0"]);
    let o = hopfx(&["check", "presentation", "-n", "2", p(&h4)]);
    assert_eq!(code(&o), 0);
    assert_eq!(holds(&report(&o), "braid"), Some(true));
    let out = dir.path().join("rep.json");
    let o = hopfx(&["rep", "braid", "-n", "2", "--module", "regular", p(&h4), "-o", p(&out)]);
    assert_eq!(code(&o), 0);
    let b: MatrixBundle = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let names: Vec<&str> = b.matrices.keys().map(String::as_str).collect();
    assert_eq!(names, ["X_1", "X_2", "Y_1", "Y_2", "sigma_1"]);
    assert_eq!(b.matrices["sigma_1"].rows, 256);
}

#[test]
fn fourier_needs_factorizable() {
    let dir = TempDir::new().unwrap();
    let z2 = fixture(&dir, "z2.json", &["group", "--group", "Z2"]);
    let o = hopfx(&["fourier", p(&z2)]);
    assert_eq!(code(&o), 1);
    assert_eq!(holds(&report(&o), "factorizable"), Some(false));
    let dz = fixture(&dir, "dz2.json", &["double", "--group", "Z2"]);
    let o = hopfx(&["fourier", p(&dz)]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    for name in ["F_multiplicative", "F_bijective", "F4_eq_FB3", "F2B_comm"] {
        assert_eq!(holds(&r, name), Some(true), "{name}");
    }
}

#[test]
fn invalid_file_is_refused() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler", "--lambda", "1"]);
    let mut f: AlgebraFile = serde_json::from_str(&std::fs::read_to_string(&h4).unwrap()).unwrap();
    // S(x) = x instead of -x
    for e in f.antipode.as_mut().unwrap() {
        if e.0 == 2 {
            e.2 = "1".into();
        }
    }
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&f).unwrap()).unwrap();
    let o = hopfx(&["check", "hexagons", p(&bad)]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    assert_eq!(holds(&r, "antipode"), Some(false));
    assert!(holds(&r, "T_hexagon_1").is_none());
    let forced = report(&hopfx(&["check", "hexagons", "--force-report", p(&bad)]));
    assert!(check_names(&forced).len() > check_names(&r).len());
    assert_eq!(code(&hopfx(&["validate", p(&bad)])), 1);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&hopfx(&["frobnicate"])), 2);
    assert_eq!(code(&hopfx(&["check", "reflection", "-k", "x", "f.json"])), 2);
    assert_eq!(code(&hopfx(&["validate", p(&dir.path().join("missing.json"))])), 2);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"field\": 3}").unwrap();
    assert_eq!(code(&hopfx(&["validate", p(&junk)])), 2);
    assert_eq!(code(&hopfx(&["example", "group", "--group", "Q8"])), 2);
    assert_eq!(code(&hopfx(&["example", "sweedler", "--lambda", "1/0"])), 2);
    // an algebra file lacking R cannot drive quasitriangular commands
    let z2 = dir.path().join("z2.json");
    let o = hopfx(&["example", "group", "--group", "Z2"]);
    let mut f: AlgebraFile = serde_json::from_slice(&o.stdout).unwrap();
    f.r = None;
    std::fs::write(&z2, serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(code(&hopfx(&["check", "hexagons", p(&z2)])), 2);
}

#[test]
fn large_constructions_need_deep() {
    let dir = TempDir::new().unwrap();
    let ds3 = fixture(&dir, "ds3.json", &["double", "--group", "S3"]);
    let o = hopfx(&["check", "elliptic", p(&ds3)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--deep"));
    assert_eq!(code(&hopfx(&["check", "hexagons", p(&ds3)])), 0);
}

#[test]
fn thread_cap_is_validated() {
    let dir = TempDir::new().unwrap();
    let h4 = fixture(&dir, "h4.json", &["sweedler"]);
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_hopfx"))
            .args(["check", "hexagons", p(&h4)])
            .env("HOPFX_THREADS", v)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("1")), 0);
    assert_eq!(code(&run("0")), 2);
    assert_eq!(code(&run("many")), 2);
}

use std::path::Path;
use std::process::{Command, Output};

use alpha_curvelets::io::{load_coefficients, load_grid};
use alpha_curvelets::{Frame, FrameParams};

fn acurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acurve")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn cartoon_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.grid");
    let b = dir.path().join("b.grid");
    for out in [&a, &b] {
        let o = acurve(&[
            "cartoon", "--beta", "2", "--gamma", "2", "--seed", "7", "--size", "64", "--out", p(out),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(std::fs::read(a.with_extension("json")).unwrap(), std::fs::read(b.with_extension("json")).unwrap());

    let coeffs = dir.path().join("a.coef");
    let back = dir.path().join("back.grid");
    assert_eq!(code(&acurve(&["analyze", "--in", p(&a), "--alpha", "0.5", "--out", p(&coeffs)])), 0);
    assert_eq!(code(&acurve(&["synthesize", "--in", p(&coeffs), "--out", p(&back)])), 0);
    let f = load_grid(&a).unwrap();
    let g = load_grid(&back).unwrap();
    assert!(f.distance(&g) <= 1e-10 * f.norm());

    let frame = Frame::new(FrameParams::new(0.5, 64).unwrap()).unwrap();
    let c = load_coefficients(&coeffs, &frame).unwrap();
    assert!((c.energy() - f.norm_sqr()).abs() <= 1e-10 * f.norm_sqr());
    let other = Frame::new(FrameParams::new(0.75, 64).unwrap()).unwrap();
    assert!(load_coefficients(&coeffs, &other).is_err());

    let pgm = dir.path().join("a.pgm");
    assert_eq!(code(&acurve(&["export-pgm", "--in", p(&a), "--out", p(&pgm)])), 0);
    let bytes = std::fs::read(&pgm).unwrap();
    assert!(bytes.starts_with(b"P5\n64 64\n255\n"));
    assert_eq!(bytes.len(), b"P5\n64 64\n255\n".len() + 64 * 64);
}

#[test]
fn reports_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let edge = dir.path().join("disk.grid");
    acurve(&["cartoon", "--beta", "2", "--gamma", "2", "--seed", "1", "--size", "64", "--binary", "--out", p(&edge)]);

    let info = acurve(&["frame-info", "--alpha", "0.5", "--size", "64"]);
    assert_eq!(code(&info), 0);
    let json: serde_json::Value = serde_json::from_slice(&info.stdout).unwrap();
    assert!(json.is_object());

    let csv = dir.path().join("wedges.csv");
    assert_eq!(code(&acurve(&["wedge-energy", "--in", p(&edge), "--alpha", "0.5", "--scale", "3", "--out", p(&csv)])), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("j,ell,omega,ell_J,energy\n"));
    // L_3 = 2 at alpha = 1/2
    assert_eq!(text.lines().count(), 1 + 2);

    let slices = dir.path().join("slices.csv");
    assert_eq!(code(&acurve(&["slices", "--in", p(&edge), "--eta-count", "8", "--scale", "2", "--out", p(&slices)])), 0);
    assert_eq!(std::fs::read_to_string(&slices).unwrap().lines().count(), 9);

    let cube = dir.path().join("cube.csv");
    assert_eq!(code(&acurve(&["hypercube", "--beta", "2", "--ks", "2,4,8", "--out", p(&cube)])), 0);

    let bench = dir.path().join("bench");
    let o = acurve(&[
        "benchmark", "--alpha", "0.5", "--beta", "2", "--size", "64", "--seeds", "1,2", "--ns",
        "0,4,16,64,256", "--fit-lo", "4", "--fit-hi", "256", "--out", p(&bench),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(bench.with_extension("csv")).unwrap();
    assert!(csv.starts_with("N,err2\n"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(bench.with_extension("json")).unwrap()).unwrap();
    assert_eq!(report["per_seed"].as_array().unwrap().len(), 2);
    assert!(report["mean"]["slope"].as_f64().unwrap() < 0.0);

    assert_eq!(code(&acurve(&["verify", "--alpha", "0.6", "--size", "32", "--trials", "2"])), 0);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&acurve(&["frame-info", "--alpha", "1.5", "--size", "64"])), 1);
    assert_eq!(code(&acurve(&["frame-info", "--alpha", "0.5"])), 1);
    assert_eq!(code(&acurve(&["no-such-command"])), 1);
    assert_eq!(code(&acurve(&["--help"])), 0);

    let junk = dir.path().join("junk.grid");
    std::fs::write(&junk, b"NOPE\n{}\n").unwrap();
    let o = acurve(&["analyze", "--in", p(&junk), "--alpha", "0.5", "--out", p(&dir.path().join("x"))]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    let missing = dir.path().join("missing.grid");
    assert_eq!(code(&acurve(&["export-pgm", "--in", p(&missing), "--out", p(&junk)])), 2);
}

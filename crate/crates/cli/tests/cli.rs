use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use minmotion_cli::files::{CurveFile, MotionFile};
use minmotion_core::curve::CurveTransform;
use minmotion_core::exact::{rat, RealPoly};
use minmotion_core::motion::{DegreeReport, MotionPoly};
use minmotion_core::qpoly::QuatPoly;
use minmotion_core::quat::Quaternion;

const CURVES: [&str; 4] = ["quintic", "viviani", "circle", "line"];

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn data(name: &str) -> PathBuf {
    dir("data").join(format!("{name}.curve.json"))
}

fn golden(name: &str) -> String {
    fs::read_to_string(dir("golden").join(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minmotion"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_matches_golden() {
    for name in CURVES {
        let o = run(&["analyze", s(&data(name))]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o), golden(&format!("{name}.analyze.txt")), "{name}");
    }
}

#[test]
fn analyze_reports_degrees() {
    let out = stdout(&run(&["analyze", s(&data("quintic"))]));
    assert!(out.contains("degree d: 5\ncircularity c: 2\n"));
    assert!(out.contains("minimal motion degree: 3\n"));
    let out = stdout(&run(&["analyze", s(&data("viviani"))]));
    assert!(out.contains("degree d: 4\ncircularity c: 2\nentirely circular: yes\n"));
    assert!(out.contains("minimal motion degree: 2\n"));
    assert!(out.contains("translation: (-1, 0, 0)"));
    let out = stdout(&run(&["analyze", s(&data("line"))]));
    assert!(out.contains("degree d: 1\ncircularity c: 0\n"));
    assert!(out.contains("minimal motion degree: 1\n"));
}

#[test]
fn synthesize_and_verify_match_golden() {
    let tmp = tempfile::tempdir().unwrap();
    for name in CURVES {
        let out = tmp.path().join(format!("{name}.motion.json"));
        let o = run(&["synthesize", s(&data(name)), "-o", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert_eq!(
            stdout(&o),
            golden(&format!("{name}.synthesize.txt")),
            "{name}"
        );
        assert_eq!(
            fs::read_to_string(&out).unwrap(),
            golden(&format!("{name}.motion.json")),
            "{name}"
        );

        let o = run(&["verify", s(&data(name)), s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert_eq!(stdout(&o), golden(&format!("{name}.verify.txt")), "{name}");
    }
}

#[test]
fn synthesized_degrees() {
    for (name, n, m) in [("quintic", 3, 1), ("viviani", 2, 0), ("circle", 1, 0)] {
        let f = MotionFile::parse(&golden(&format!("{name}.motion.json"))).unwrap();
        assert_eq!(f.motion.degree(), Some(n), "{name}");
        assert_eq!((f.report.n, f.report.m), (n, m), "{name}");
    }
}

#[test]
fn files_round_trip_byte_identical() {
    for name in CURVES {
        let text = fs::read_to_string(data(name)).unwrap();
        assert_eq!(CurveFile::parse(&text).unwrap().to_canonical(), text);
        let text = golden(&format!("{name}.motion.json"));
        assert_eq!(MotionFile::parse(&text).unwrap().to_canonical(), text);
    }
}

fn write_motion(dir: &Path, name: &str, f: &MotionFile) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, f.to_canonical()).unwrap();
    p
}

#[test]
fn verify_rejects_perturbed_motion() {
    let tmp = tempfile::tempdir().unwrap();
    let mut f = MotionFile::parse(&golden("viviani.motion.json")).unwrap();
    let mut coeffs = f.motion.dual.coeffs().to_vec();
    coeffs[0].y += rat(1, 1);
    f.motion.dual = QuatPoly::new(coeffs);
    let p = write_motion(tmp.path(), "bad.json", &f);
    let o = run(&["verify", s(&data("viviani")), s(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("trajectory mismatch"), "{}", stderr(&o));
    assert!(stdout(&o).contains("check trajectory: FAIL"));
}

#[test]
fn verify_rejects_curvilinear_translation() {
    // x0 + ε(-D/2) traces x0 + D from the origin but has degree d
    let tmp = tempfile::tempdir().unwrap();
    let curve = CurveFile::parse(&fs::read_to_string(data("viviani")).unwrap())
        .unwrap()
        .curve()
        .unwrap();
    let [x0, x1, x2, x3] = curve.components();
    let zero = RealPoly::zero();
    let d = QuatPoly::from_components([&zero, x1, x2, x3]);
    let f = MotionFile {
        motion: MotionPoly::new(QuatPoly::from_real(x0), d.scale(&rat(-1, 2))),
        transform: CurveTransform::identity(),
        report: DegreeReport {
            n: 4,
            m: 4,
            d: 4,
            c: 2,
            reduced: true,
        },
    };
    let p = write_motion(tmp.path(), "translation.json", &f);
    let o = run(&["verify", s(&data("viviani")), s(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("check trajectory: pass"));
    assert!(stderr(&o).contains("degree not minimal"), "{}", stderr(&o));
}

fn csv_rows(out: &str) -> Vec<Vec<String>> {
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(minmotion_cli::commands::SAMPLE_HEADER));
    lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn sample_viviani_on_unit_sphere() {
    let motion = dir("golden").join("viviani.motion.json");
    let o = run(&[
        "sample",
        s(&motion),
        "--point",
        "0,0,0",
        "--from",
        "-4",
        "--to",
        "4",
        "--count",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), golden("viviani.sample.csv"));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 9);
    assert_eq!((rows[0][0].as_str(), rows[8][0].as_str()), ("-4", "4"));
    for r in rows {
        let (x, y, z) = (num(&r[1]), num(&r[2]), num(&r[3]));
        assert!((x * x + y * y + z * z - 1.0).abs() < 1e-10);
        assert_eq!(r[16], "ok");
    }
}

#[test]
fn sample_identity_and_rotation() {
    let tmp = tempfile::tempdir().unwrap();
    let mk = |primal: QuatPoly, dual: QuatPoly| MotionFile {
        motion: MotionPoly::new(primal, dual),
        transform: CurveTransform::identity(),
        report: DegreeReport {
            n: 1,
            m: 0,
            d: 2,
            c: 1,
            reduced: true,
        },
    };
    let id = write_motion(
        tmp.path(),
        "id.json",
        &mk(QuatPoly::one(), QuatPoly::zero()),
    );
    let o = run(&[
        "sample",
        s(&id),
        "--point",
        "1,-2,1/2",
        "--from",
        "0",
        "--to",
        "1",
        "--count",
        "5",
    ]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 5);
    for r in &rows {
        assert_eq!(&r[1..4], &["1", "-2", "0.5"]);
        assert_eq!(&r[4..], &rows[0][4..]);
    }

    let rot = write_motion(
        tmp.path(),
        "rot.json",
        &mk(QuatPoly::linear(&Quaternion::k()), QuatPoly::zero()),
    );
    let o = run(&[
        "sample",
        s(&rot),
        "--point",
        "1,0,0",
        "--from",
        "-3",
        "--to",
        "2.5",
        "--count",
        "12",
    ]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 12);
    for r in rows {
        let (x, y) = (num(&r[1]), num(&r[2]));
        assert!((x * x + y * y - 1.0).abs() < 1e-10);
        assert_eq!(r[3], "0");
    }
}

#[test]
fn sample_flags_points_at_infinity() {
    let tmp = tempfile::tempdir().unwrap();
    let f = MotionFile {
        motion: MotionPoly::new(
            QuatPoly::monomial(Quaternion::one(), 1),
            QuatPoly::constant(Quaternion::i()),
        ),
        transform: CurveTransform::identity(),
        report: DegreeReport {
            n: 1,
            m: 1,
            d: 1,
            c: 0,
            reduced: true,
        },
    };
    let p = write_motion(tmp.path(), "m.json", &f);
    let o = run(&[
        "sample",
        s(&p),
        "--point",
        "0,0,0",
        "--from",
        "-1",
        "--to",
        "1",
        "--count",
        "3",
    ]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1][16], "at_infinity");
    assert_eq!(rows[1][1], "");
    assert_eq!(rows[0][16], "ok");
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    fs::write(&bad, "{\"format\":\"minmotion-curve\",\"version\":1,\n\"x0\":[\"1\"],\"x1\":[\"2/0\"],\"x2\":[],\"x3\":[]}\n")
        .unwrap();
    let o = run(&["analyze", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    assert!(stderr(&o).contains("x1[0]"), "{}", stderr(&o));

    let point = tmp.path().join("point.json");
    fs::write(
        &point,
        CurveFile::new([
            RealPoly::from_ints(&[1, 1]),
            RealPoly::from_ints(&[2, 2]),
            RealPoly::zero(),
            RealPoly::zero(),
        ])
        .to_canonical(),
    )
    .unwrap();
    let o = run(&["synthesize", s(&point), "-o", s(&tmp.path().join("x.json"))]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));

    let zero = tmp.path().join("zero.json");
    fs::write(
        &zero,
        CurveFile::new([
            RealPoly::zero(),
            RealPoly::zero(),
            RealPoly::zero(),
            RealPoly::zero(),
        ])
        .to_canonical(),
    )
    .unwrap();
    assert_eq!(run(&["analyze", s(&zero)]).status.code(), Some(3));

    assert_eq!(
        run(&["analyze", s(&tmp.path().join("missing.json"))])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let motion = dir("golden").join("circle.motion.json");
    let o = run(&[
        "sample",
        s(&motion),
        "--point",
        "0,0",
        "--from",
        "0",
        "--to",
        "1",
        "--count",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "sample",
        s(&motion),
        "--point",
        "0,0,0",
        "--from",
        "0",
        "--to",
        "1",
        "--count",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

//! The subcommands, as pure functions from file contents to output text.

use std::fmt::Write as _;

use minmotion_core::curve::{normalize_at_infinity, CurveTransform, Param, RationalCurve};
use minmotion_core::exact::Rational;
use minmotion_core::motion::{trajectory, DegreeReport, MotionPoly};
use minmotion_core::quat::ProjectivePoint;
use minmotion_core::synthesis::{synthesize, verify_minimal, MinimalityReport};
use minmotion_core::Error;
use num_traits::{One, Zero};

use crate::decimal::render;
use crate::files::{CurveFile, MotionFile, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn parse(what: &str, e: ParseError) -> Self {
        Self {
            code: EXIT_PARSE,
            message: format!("{what}: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_VERIFICATION,
            _ => EXIT_DEGENERATE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Output of a command that ran to completion; `code` may still be nonzero.
#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_curve(text: &str) -> Result<(CurveFile, RationalCurve), CliError> {
    let file = CurveFile::parse(text).map_err(|e| CliError::parse("curve file", e))?;
    let curve = file.curve()?;
    if curve.degree() == 0 {
        return Err(Error::PointCurve.into());
    }
    Ok((file, curve))
}

fn write_transform(out: &mut String, t: &CurveTransform) {
    let [[a, b], [c, d]] = &t.moebius;
    if t.has_reparameterization() {
        let _ = writeln!(out, "  parameter: t = ({a} s + {b}) / ({c} s + {d})");
    } else {
        let _ = writeln!(out, "  parameter: unchanged");
    }
    let [x, y, z] = &t.translation;
    let _ = writeln!(out, "  translation: ({x}, {y}, {z})");
    let _ = writeln!(out, "  scale: {}", t.scale);
}

fn write_report(out: &mut String, r: &DegreeReport) {
    let _ = writeln!(out, "motion degree n: {}", r.n);
    let _ = writeln!(out, "spherical defect m: {}", r.m);
    let _ = writeln!(out, "trajectory degree d: {}", r.d);
    let _ = writeln!(out, "circularity c: {}", r.c);
    let _ = writeln!(out, "reduced motion: {}", yes_no(r.reduced));
}

fn write_motion(out: &mut String, c: &MotionPoly) {
    let _ = writeln!(out, "primal: {}", c.primal);
    let _ = writeln!(out, "dual: {}", c.dual);
}

fn write_checks(out: &mut String, rep: &MinimalityReport) {
    for (check, ok) in &rep.checks {
        let _ = writeln!(
            out,
            "check {}: {}",
            check.name(),
            if *ok { "pass" } else { "FAIL" }
        );
    }
}

pub fn analyze(curve_text: &str) -> Result<String, CliError> {
    let (file, curve) = load_curve(curve_text)?;
    let (d, c) = (curve.degree(), curve.circularity()?);
    let (normal, transform) = normalize_at_infinity(&curve)?;
    let mut out = String::new();
    if let Some(name) = &file.name {
        let _ = writeln!(out, "curve: {name}");
    }
    let _ = writeln!(out, "degree d: {d}");
    let _ = writeln!(out, "circularity c: {c}");
    let _ = writeln!(out, "entirely circular: {}", yes_no(2 * c == d));
    let _ = writeln!(out, "reduced input: {}", yes_no(file.is_reduced()));
    let _ = writeln!(out, "minimal motion degree: {}", d - c);
    let _ = writeln!(out, "normal form:");
    for (k, p) in normal.components().iter().enumerate() {
        let _ = writeln!(out, "  x{k} = {p}");
    }
    let _ = writeln!(out, "normalization:");
    write_transform(&mut out, &transform);
    Ok(out)
}

/// Returns the motion file contents along with the printed summary.
pub fn synthesize_cmd(curve_text: &str) -> Result<(String, Outcome), CliError> {
    let (_, curve) = load_curve(curve_text)?;
    let result = synthesize(&curve)?;
    let file = MotionFile {
        motion: result.motion.clone(),
        transform: result.transform.clone(),
        report: result.report,
    };
    let rep = verify_minimal(&result.motion, &result.transform, &curve);
    let mut out = String::new();
    write_report(&mut out, &result.report);
    write_motion(&mut out, &result.motion);
    if result.q_sign_flipped {
        let _ = writeln!(out, "note: dual part negated to match the curve");
    }
    write_checks(&mut out, &rep);
    let (code, stderr) = match rep.first_failure() {
        None => (EXIT_OK, String::new()),
        Some(check) => (
            EXIT_VERIFICATION,
            format!("verification failed: {}\n", check.failure()),
        ),
    };
    Ok((
        file.to_canonical(),
        Outcome {
            code,
            stdout: out,
            stderr,
        },
    ))
}

pub fn verify(curve_text: &str, motion_text: &str) -> Result<Outcome, CliError> {
    let (_, curve) = load_curve(curve_text)?;
    let file = MotionFile::parse(motion_text).map_err(|e| CliError::parse("motion file", e))?;
    let rep = verify_minimal(&file.motion, &file.transform, &curve);
    let mut out = String::new();
    match &rep.report {
        Some(r) => write_report(&mut out, r),
        None => {
            let _ = writeln!(out, "degree report: unavailable");
        }
    }
    write_checks(&mut out, &rep);
    Ok(match rep.first_failure() {
        None => Outcome {
            code: EXIT_OK,
            stdout: out,
            stderr: String::new(),
        },
        Some(check) => Outcome {
            code: EXIT_MISMATCH,
            stdout: out,
            stderr: format!("verification failed: {}\n", check.failure()),
        },
    })
}

pub struct SampleOptions {
    pub point: [Rational; 3],
    pub from: Rational,
    pub to: Rational,
    pub count: usize,
    pub digits: u32,
}

pub const SAMPLE_HEADER: &str =
    "t,x,y,z,origin_x,origin_y,origin_z,e1_x,e1_y,e1_z,e2_x,e2_y,e2_z,e3_x,e3_y,e3_z,status";

/// CSV rows of the trajectory of `point` and of the images of the origin
/// and the three unit points.
pub fn sample(motion_text: &str, opts: &SampleOptions) -> Result<String, CliError> {
    if opts.count < 2 {
        return Err(CliError {
            code: EXIT_PARSE,
            message: "count must be at least 2".into(),
        });
    }
    let file = MotionFile::parse(motion_text).map_err(|e| CliError::parse("motion file", e))?;
    let (z, o) = (Rational::zero(), Rational::one());
    let [px, py, pz] = opts.point.clone();
    let points = [
        ProjectivePoint::affine(px, py, pz),
        ProjectivePoint::origin(),
        ProjectivePoint::affine(o.clone(), z.clone(), z.clone()),
        ProjectivePoint::affine(z.clone(), o.clone(), z.clone()),
        ProjectivePoint::affine(z.clone(), z, o),
    ];
    let curves = points
        .iter()
        .map(|p| trajectory(&file.motion, p))
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = String::from(SAMPLE_HEADER);
    out.push('\n');
    let last = Rational::from_integer((opts.count - 1).into());
    for k in 0..opts.count {
        let s = Rational::from_integer(k.into()) / &last;
        let t = &opts.from + (&opts.to - &opts.from) * s;
        let mut row = vec![render(&t, opts.digits)];
        let mut at_infinity = false;
        for c in &curves {
            match c.eval(&Param::Finite(t.clone()))?.to_affine() {
                Some(v) => row.extend(v.iter().map(|a| render(a, opts.digits))),
                None => {
                    at_infinity = true;
                    row.extend([String::new(), String::new(), String::new()]);
                }
            }
        }
        row.push(if at_infinity { "at_infinity" } else { "ok" }.into());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

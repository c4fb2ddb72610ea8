//! Curve and motion files.
//!
//! Both are JSON objects with sorted keys and no insignificant whitespace,
//! followed by a single newline. Rationals are strings, `"n"` or `"n/d"`.

use std::fmt;
use std::str::FromStr;

use minmotion_core::curve::{CurveTransform, RationalCurve};
use minmotion_core::exact::{Rational, RealPoly};
use minmotion_core::motion::{DegreeReport, MotionPoly};
use minmotion_core::qpoly::QuatPoly;
use minmotion_core::quat::Quaternion;
use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const CURVE_FORMAT: &str = "minmotion-curve";
pub const MOTION_FORMAT: &str = "minmotion-motion";
pub const VERSION: u32 = 1;

#[derive(Debug)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if !self.path.is_empty() && self.path != "." {
            write!(f, ", field `{}`", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses `"n"` or `"n/d"` with `d != 0`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = s.split_once('/').map_or((s, None), |(n, d)| (n, Some(d)));
    if !digits(num.strip_prefix('-').unwrap_or(num)) || den.is_some_and(|d| !digits(d)) {
        return Err(format!("invalid rational {s:?}, expected \"n\" or \"n/d\""));
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Rational::from_str(s).map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Like [`parse_rational`] but also accepts decimals such as `-0.25`.
pub fn parse_number(s: &str) -> Result<Rational, String> {
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = int.trim_start_matches('-');
        let ok = |p: &str| p.chars().all(|c| c.is_ascii_digit());
        if !ok(digits) || !ok(frac) || (digits.is_empty() && frac.is_empty()) {
            return Err(format!("invalid number {s:?}"));
        }
        let whole = format!("{}{}", if digits.is_empty() { "0" } else { digits }, frac);
        let mut r = parse_rational(&format!("{}/1{}", whole, "0".repeat(frac.len())))?;
        if neg {
            r = -r;
        }
        return Ok(r);
    }
    parse_rational(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Rat(Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s)
            .map(Rat)
            .map_err(serde::de::Error::custom)
    }
}

fn poly_to_rats(p: &RealPoly) -> Vec<Rat> {
    p.coeffs().iter().cloned().map(Rat).collect()
}

fn rats_to_poly(v: Vec<Rat>) -> RealPoly {
    RealPoly::new(v.into_iter().map(|r| r.0).collect())
}

fn quat_to_rats(q: &Quaternion) -> [Rat; 4] {
    q.components().map(|c| Rat(c.clone()))
}

fn rats_to_quat([w, x, y, z]: [Rat; 4]) -> Quaternion {
    Quaternion::new(w.0, x.0, y.0, z.0)
}

fn check_header(format: &str, version: u32, expected: &str) -> Result<(), String> {
    if format != expected {
        return Err(format!("expected format {expected:?}, found {format:?}"));
    }
    if version != VERSION {
        return Err(format!("unsupported version {version}, expected {VERSION}"));
    }
    Ok(())
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ParseError {
            path,
            line: inner.line(),
            column: inner.column(),
            message: strip_position(&inner.to_string()),
        }
    })?;
    // trailing characters
    serde_json::from_str::<serde::de::IgnoredAny>(text).map_err(|e| ParseError {
        path: String::new(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    Ok(value)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn header_error(text: &str, message: String) -> ParseError {
    let line = text
        .lines()
        .position(|l| l.contains("\"format\""))
        .map_or(1, |i| i + 1);
    ParseError {
        path: "format".into(),
        line,
        column: 1,
        message,
    }
}

fn to_canonical<T: Serialize>(v: &T) -> String {
    // serde_json's default map is ordered by key
    let value = serde_json::to_value(v).expect("serializable");
    let mut s = serde_json::to_string(&value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveRepr {
    format: String,
    version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    x0: Vec<Rat>,
    x1: Vec<Rat>,
    x2: Vec<Rat>,
    x3: Vec<Rat>,
}

/// A curve as stored on disk. The components are kept exactly as written,
/// trailing zero coefficients aside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFile {
    pub name: Option<String>,
    pub source: Option<String>,
    pub components: [RealPoly; 4],
}

impl CurveFile {
    pub fn new(components: [RealPoly; 4]) -> Self {
        Self {
            name: None,
            source: None,
            components,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let r: CurveRepr = parse_json(text)?;
        check_header(&r.format, r.version, CURVE_FORMAT).map_err(|m| header_error(text, m))?;
        Ok(Self {
            name: r.name,
            source: r.source,
            components: [
                rats_to_poly(r.x0),
                rats_to_poly(r.x1),
                rats_to_poly(r.x2),
                rats_to_poly(r.x3),
            ],
        })
    }

    pub fn to_canonical(&self) -> String {
        let [x0, x1, x2, x3] = self.components.each_ref().map(poly_to_rats);
        to_canonical(&CurveRepr {
            format: CURVE_FORMAT.into(),
            version: VERSION,
            name: self.name.clone(),
            source: self.source.clone(),
            x0,
            x1,
            x2,
            x3,
        })
    }

    /// Whether the stored components have no common factor.
    pub fn is_reduced(&self) -> bool {
        RealPoly::gcd_all(self.components.iter()).is_some_and(|g| g.is_one())
    }

    pub fn curve(&self) -> minmotion_core::Result<RationalCurve> {
        RationalCurve::new(self.components.clone())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformRepr {
    moebius: [[Rat; 2]; 2],
    translation: [Rat; 3],
    scale: Rat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportRepr {
    n: usize,
    m: usize,
    d: usize,
    c: usize,
    reduced: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MotionRepr {
    format: String,
    version: u32,
    primal: Vec<[Rat; 4]>,
    dual: Vec<[Rat; 4]>,
    transform: TransformRepr,
    report: ReportRepr,
}

/// A motion polynomial together with the normalization of its curve and
/// the degrees recorded when it was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionFile {
    pub motion: MotionPoly,
    pub transform: CurveTransform,
    pub report: DegreeReport,
}

impl MotionFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let r: MotionRepr = parse_json(text)?;
        check_header(&r.format, r.version, MOTION_FORMAT).map_err(|m| header_error(text, m))?;
        let [[a, b], [c, d]] = r.transform.moebius;
        let moebius = [[a.0, b.0], [c.0, d.0]];
        if (&moebius[0][0] * &moebius[1][1] - &moebius[0][1] * &moebius[1][0]).is_zero() {
            return Err(ParseError {
                path: "transform.moebius".into(),
                line: text
                    .lines()
                    .position(|l| l.contains("\"moebius\""))
                    .map_or(1, |i| i + 1),
                column: 1,
                message: "singular parameter transformation".into(),
            });
        }
        let [x, y, z] = r.transform.translation;
        let motion = MotionPoly::new(
            QuatPoly::new(r.primal.into_iter().map(rats_to_quat).collect()),
            QuatPoly::new(r.dual.into_iter().map(rats_to_quat).collect()),
        );
        let ReportRepr {
            n,
            m,
            d,
            c,
            reduced,
        } = r.report;
        Ok(Self {
            motion,
            transform: CurveTransform {
                moebius,
                translation: [x.0, y.0, z.0],
                scale: r.transform.scale.0,
            },
            report: DegreeReport {
                n,
                m,
                d,
                c,
                reduced,
            },
        })
    }

    pub fn to_canonical(&self) -> String {
        let t = &self.transform;
        let r = &self.report;
        to_canonical(&MotionRepr {
            format: MOTION_FORMAT.into(),
            version: VERSION,
            primal: self
                .motion
                .primal
                .coeffs()
                .iter()
                .map(quat_to_rats)
                .collect(),
            dual: self.motion.dual.coeffs().iter().map(quat_to_rats).collect(),
            transform: TransformRepr {
                moebius: t
                    .moebius
                    .each_ref()
                    .map(|row| row.each_ref().map(|a| Rat(a.clone()))),
                translation: t.translation.each_ref().map(|a| Rat(a.clone())),
                scale: Rat(t.scale.clone()),
            },
            report: ReportRepr {
                n: r.n,
                m: r.m,
                d: r.d,
                c: r.c,
                reduced: r.reduced,
            },
        })
    }
}

//! Minimal-degree motion synthesis for a prescribed rational trajectory.
//!
//! For a reduced curve `x` of degree `d` and circularity `c` with
//! `x(∞) = (1 : 0 : 0 : 0)` and monic `x0`, write `x0 = g w` and
//! `x1^2 + x2^2 + x3^2 = g y` with `g = gcd(x0, x1^2 + x2^2 + x3^2)`. The
//! vector part `D = x1 i + x2 j + x3 k` splits as `D = P0 conj(Q0)` with `P0`
//! the monic left gcd of `D` and `g`. Then `C = w P0 + ε Q0 / 2` is the unique
//! monic motion polynomial of degree `d - c` with `C(∞) = 1` whose origin
//! trajectory is `x`. Arbitrary curves are first moved into that frame by
//! [`normalize_at_infinity`] and the motion is mapped back afterwards.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::curve::{
    curves_equal_projective, is_normalized, normalize_at_infinity, CurveTransform, RationalCurve,
};
use crate::error::{Error, Result};
use crate::exact::{rat, RealPoly};
use crate::motion::{
    degree_report, is_motion_polynomial, reparameterize_motion, spherical_defect, trajectory,
    translation_for, DegreeReport, MotionPoly,
};
use crate::qpoly::{factor_by_norm, mrpf, norm_poly, QuatPoly};
use crate::quat::ProjectivePoint;

/// Intermediate polynomials of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisDecomposition {
    /// `gcd(x0, x1^2 + x2^2 + x3^2)`, monic of degree `2c`.
    pub g: RealPoly,
    /// `x0 / g`, monic of degree `d - 2c`.
    pub w: RealPoly,
    /// `(x1^2 + x2^2 + x3^2) / g`.
    pub y: RealPoly,
    /// `x1 i + x2 j + x3 k`.
    pub d: QuatPoly,
    /// Monic left gcd of `d` and `g`; `p0 conj(p0) = g`.
    pub p0: QuatPoly,
    /// `p0 conj(q0) = d`.
    pub q0: QuatPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisResult {
    /// Motion whose origin trajectory is the input curve.
    pub motion: MotionPoly,
    /// The motion in the normalized frame: monic with `C(∞) = 1`.
    pub normalized_motion: MotionPoly,
    pub decomposition: SynthesisDecomposition,
    pub report: DegreeReport,
    pub transform: CurveTransform,
    /// Set when the dual part had to be negated to reproduce the curve.
    pub q_sign_flipped: bool,
}

/// Splits a normalized curve into `g`, `w`, `y`, `D`, `P0`, `Q0`.
pub fn decompose(x: &RationalCurve) -> Result<SynthesisDecomposition> {
    if !is_normalized(x) {
        let why = if !x.x0().is_monic() {
            "x0 is not monic"
        } else {
            "x(∞) is not the origin"
        };
        return Err(Error::NotNormalized(why));
    }
    let [x0, x1, x2, x3] = x.components();
    let d = QuatPoly::from_components([&RealPoly::zero(), x1, x2, x3]);
    if d.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let norm = x.vector_norm();
    let g = x0.gcd(&norm)?;
    let w = x0.exact_div(&g)?;
    let y = norm.exact_div(&g)?;
    debug_assert!(w.gcd(&y)?.is_one());
    let (p0, right) = if g.is_one() {
        (QuatPoly::one(), d.clone())
    } else {
        if !g.gcd(&mrpf(&d)?)?.is_one() {
            return Err(Error::Internal(
                "norm factor shares a real factor with the vector part".into(),
            ));
        }
        factor_by_norm(&d, &g)?
    };
    let q0 = right.conj();
    let dec = SynthesisDecomposition { g, w, y, d, p0, q0 };
    check_decomposition(x, &dec)?;
    Ok(dec)
}

fn check_decomposition(x: &RationalCurve, dec: &SynthesisDecomposition) -> Result<()> {
    let bad = |what: &str| Err(Error::Internal(alloc::format!("decomposition: {what}")));
    if &(&dec.g * &dec.w) != x.x0() || &dec.g * &dec.y != x.vector_norm() {
        return bad("x0 = g w or |D|^2 = g y");
    }
    if norm_poly(&dec.d) != &dec.g * &dec.y {
        return bad("D conj(D) = g y");
    }
    if norm_poly(&dec.p0) != dec.g || &dec.p0 * &dec.q0.conj() != dec.d {
        return bad("P0 conj(P0) = g or P0 conj(Q0) = D");
    }
    Ok(())
}

/// Synthesizes the minimal motion of a curve already in the normal form of
/// [`normalize_at_infinity`].
pub fn synthesize_normalized(x: &RationalCurve) -> Result<SynthesisResult> {
    let dec = decompose(x)?;
    let primal = dec.p0.mul_real(&dec.w);
    let mut dual = dec.q0.scale(&rat(1, 2));
    let mut c = MotionPoly::new(primal, dual.clone());

    let origin = ProjectivePoint::origin();
    let mut flipped = false;
    let traj = trajectory(&c, &origin)?;
    if !curves_equal_projective(&traj, x) {
        let [x0, x1, x2, x3] = x.components().clone();
        let mirrored = RationalCurve::new([x0, -x1, -x2, -x3])?;
        if !curves_equal_projective(&traj, &mirrored) {
            return Err(Error::Internal(
                "synthesized motion misses the curve".into(),
            ));
        }
        dual = -&dual;
        c = MotionPoly::new(c.primal, dual);
        flipped = true;
    }

    if !is_motion_polynomial(&c.primal, &c.dual).is_empty() {
        return Err(Error::Internal(
            "synthesized polynomial is not a motion polynomial".into(),
        ));
    }
    let report = degree_report(&c, &origin)?;
    if !report.is_minimal() || report.m + 2 * report.c != report.d {
        return Err(Error::Internal(alloc::format!(
            "degree accounting off: {report:?}"
        )));
    }
    if !in_normal_form(&c) {
        return Err(Error::Internal(
            "synthesized motion is not monic with C(∞) = 1".into(),
        ));
    }
    Ok(SynthesisResult {
        motion: c.clone(),
        normalized_motion: c,
        decomposition: dec,
        report,
        transform: CurveTransform::identity(),
        q_sign_flipped: flipped,
    })
}

/// Full pipeline: normalize, synthesize, map the motion back so its origin
/// trajectory is `x` itself.
pub fn synthesize(x: &RationalCurve) -> Result<SynthesisResult> {
    let (normalized, transform) = normalize_at_infinity(x)?;
    let mut result = synthesize_normalized(&normalized)?;
    result.motion = from_normalized_frame(&result.normalized_motion, &transform)?;
    result.transform = transform;
    let traj = trajectory(&result.motion, &ProjectivePoint::origin())?;
    if !curves_equal_projective(&traj, x) {
        return Err(Error::Internal(
            "back-transformed motion misses the curve".into(),
        ));
    }
    Ok(result)
}

/// Maps a motion from the normalized frame back to the frame of the
/// original curve: left-compose the inverse translation, then undo the
/// parameter change.
pub fn from_normalized_frame(c: &MotionPoly, transform: &CurveTransform) -> Result<MotionPoly> {
    let v = transform.translation.each_ref().map(|a| -a);
    let shifted = &MotionPoly::constant(&translation_for(&v)) * c;
    if !transform.has_reparameterization() {
        return Ok(shifted);
    }
    let out = reparameterize_motion(&shifted, &transform.inverse_moebius())?;
    Ok(normalize_scalar(&out))
}

/// Inverse of [`from_normalized_frame`], rescaled so the primal leading
/// coefficient is one when it is real.
pub fn to_normalized_frame(c: &MotionPoly, transform: &CurveTransform) -> Result<MotionPoly> {
    let mut out = c.clone();
    if transform.has_reparameterization() {
        out = reparameterize_motion(&out, &transform.moebius)?;
    }
    out = &MotionPoly::constant(&translation_for(&transform.translation)) * &out;
    Ok(normalize_scalar(&out))
}

fn normalize_scalar(c: &MotionPoly) -> MotionPoly {
    match c.primal.leading() {
        Some(lc) if lc.is_real() && !lc.w.is_zero() => c.scale(&lc.w.recip()),
        _ => c.clone(),
    }
}

/// Monic primal part of full degree and a dual part of smaller degree, so
/// that `C(∞) = 1`.
pub fn in_normal_form(c: &MotionPoly) -> bool {
    c.primal.is_monic() && c.dual.degree() < c.primal.degree()
}

/// One verification item of [`verify_minimal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Trajectory,
    Degree,
    Defect,
    NormalForm,
    Determinism,
}

impl Check {
    /// Message used when the check fails.
    pub fn failure(&self) -> &'static str {
        match self {
            Check::Trajectory => "trajectory mismatch",
            Check::Degree => "degree not minimal",
            Check::Defect => "spherical defect mismatch",
            Check::NormalForm => "not in normal form",
            Check::Determinism => "differs from the unique minimal motion",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Check::Trajectory => "trajectory",
            Check::Degree => "degree",
            Check::Defect => "defect",
            Check::NormalForm => "normal-form",
            Check::Determinism => "determinism",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub checks: Vec<(Check, bool)>,
    /// Degrees of the checked motion; `None` when they cannot be computed.
    pub report: Option<DegreeReport>,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<Check> {
        self.checks.iter().find(|(_, ok)| !ok).map(|(c, _)| *c)
    }
}

/// Checks a candidate motion for `x` against everything the minimal motion
/// must satisfy. `transform` is the normalization recorded at synthesis.
pub fn verify_minimal(
    motion: &MotionPoly,
    transform: &CurveTransform,
    x: &RationalCurve,
) -> MinimalityReport {
    let origin = ProjectivePoint::origin();
    let d = x.degree();
    let c = x.circularity().ok();
    let traj_ok = motion.primal.degree().is_some()
        && trajectory(motion, &origin).is_ok_and(|t| curves_equal_projective(&t, x))
        && is_motion_polynomial(&motion.primal, &motion.dual)
            .iter()
            .all(|e| *e != crate::motion::MotionDefect::StudyCondition);
    let n = motion.degree();
    let m = if motion.primal.is_zero() {
        None
    } else {
        spherical_defect(motion).ok()
    };
    let degree_ok = matches!((n, c), (Some(n), Some(c)) if n + c == d);
    let defect_ok = matches!((m, c), (Some(m), Some(c)) if m + 2 * c == d);
    let normal_ok = to_normalized_frame(motion, transform).is_ok_and(|nm| in_normal_form(&nm));
    let determinism_ok = synthesize(x).is_ok_and(|r| &r.motion == motion);
    let report = match (n, m, c) {
        (Some(n), Some(m), Some(c)) => Some(DegreeReport {
            n,
            m,
            d,
            c,
            reduced: crate::motion::is_reduced(motion),
        }),
        _ => None,
    };
    MinimalityReport {
        checks: alloc::vec![
            (Check::Trajectory, traj_ok),
            (Check::Degree, degree_ok),
            (Check::Defect, defect_ok),
            (Check::NormalForm, normal_ok),
            (Check::Determinism, determinism_ok),
        ],
        report,
    }
}

impl SynthesisResult {
    pub fn verify(&self, x: &RationalCurve) -> MinimalityReport {
        verify_minimal(&self.motion, &self.transform, x)
    }
}

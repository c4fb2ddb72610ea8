//! Motion polynomials `C = P + ε Q` and the trajectories they generate.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::curve::{reduce_curve, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational, RealPoly};
use crate::qpoly::{mrpf, DualQuatPoly, QuatPoly};
use crate::quat::{DualQuaternion, ProjectivePoint, Quaternion};

/// A polynomial over the dual quaternions meant to parameterise a rational
/// motion. Validity is checked by [`is_motion_polynomial`], not enforced.
pub type MotionPoly = DualQuatPoly;

/// Condition that keeps `P + ε Q` from being a motion polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotionDefect {
    /// `P conj(Q) + Q conj(P)` does not vanish.
    StudyCondition,
    /// Leading coefficient has zero primal part (includes `C = 0`).
    LeadingCoefficient,
}

/// `P conj(Q) + Q conj(P)`; zero exactly on the Study quadric.
pub fn study_residual(c: &MotionPoly) -> QuatPoly {
    let (p, q) = (&c.primal, &c.dual);
    &(p * &q.conj()) + &(q * &p.conj())
}

/// Returns the failed conditions; an empty list means `p + ε q` is a motion
/// polynomial.
pub fn is_motion_polynomial(p: &QuatPoly, q: &QuatPoly) -> Vec<MotionDefect> {
    let c = MotionPoly::new(p.clone(), q.clone());
    let mut defects = Vec::new();
    if !study_residual(&c).is_zero() {
        defects.push(MotionDefect::StudyCondition);
    }
    if c.leading().is_none_or(|lc| lc.primal.is_zero()) {
        defects.push(MotionDefect::LeadingCoefficient);
    }
    defects
}

/// True when `P` and `Q` share no real polynomial factor of positive degree.
pub fn is_reduced(c: &MotionPoly) -> bool {
    let mp = mrpf(&c.primal).unwrap_or_else(|_| RealPoly::zero());
    let mq = mrpf(&c.dual).unwrap_or_else(|_| RealPoly::zero());
    match mp.gcd(&mq) {
        Ok(g) => g.is_one(),
        Err(_) => false,
    }
}

/// Trajectory `P x conj(P) + 2 x0 P conj(Q)` of `pt`, reduced.
pub fn trajectory(c: &MotionPoly, pt: &ProjectivePoint) -> Result<RationalCurve> {
    let x = QuatPoly::constant(pt.as_quaternion());
    let p = &c.primal;
    let rotated = &(p * &x) * &p.conj();
    let shift = (p * &c.dual.conj()).scale(&(int(2) * &pt.coords()[0]));
    let raw = &rotated + &shift;
    reduce_curve(raw.components())
        .map_err(|_| Error::Internal("trajectory vanishes identically".into()))
}

/// Degree of the maximal real factor of `P`, counting a degree drop of `P`
/// below the motion degree as a real factor at `t = ∞`.
pub fn spherical_defect(c: &MotionPoly) -> Result<usize> {
    let g = mrpf(&c.primal)?;
    let n = c.degree().expect("primal part is nonzero");
    let dp = c.primal.degree().expect("primal part is nonzero");
    Ok(g.degree().expect("mrpf is nonzero") + (n - dp))
}

/// Degrees tied together by the trajectory bounds: a reduced motion of degree
/// `n` and spherical defect `m` has trajectories of degree `d <= 2n - m` and
/// circularity `c >= (d - m) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub c: usize,
    pub reduced: bool,
}

impl DegreeReport {
    pub fn degree_bound_holds(&self) -> bool {
        self.d + self.m <= 2 * self.n
    }

    pub fn circularity_bound_holds(&self) -> bool {
        2 * self.c + self.m >= self.d
    }

    /// `d = 2n - m`.
    pub fn degree_bound_sharp(&self) -> bool {
        self.d + self.m == 2 * self.n
    }

    /// `c = (d - m) / 2`.
    pub fn circularity_bound_sharp(&self) -> bool {
        2 * self.c + self.m == self.d
    }

    /// `n = d - c`, the smallest degree any motion with this trajectory can have.
    pub fn is_minimal(&self) -> bool {
        self.n + self.c == self.d
    }

    /// Fails with an internal error if a reduced motion breaks either bound.
    pub fn check(&self) -> Result<()> {
        if self.reduced && !(self.degree_bound_holds() && self.circularity_bound_holds()) {
            return Err(Error::Internal(alloc::format!(
                "trajectory degree bounds violated: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Computes `n`, `m`, `d`, `c` for the trajectory of `pt` and checks the
/// bounds.
pub fn degree_report(c: &MotionPoly, pt: &ProjectivePoint) -> Result<DegreeReport> {
    let traj = trajectory(c, pt)?;
    let report = DegreeReport {
        n: c.degree().ok_or(Error::ZeroPolynomial)?,
        m: spherical_defect(c)?,
        d: traj.degree(),
        c: traj.circularity()?,
        reduced: is_reduced(c),
    };
    report.check()?;
    Ok(report)
}

/// The translation taking the origin to the affine point `v`: `1 - ε v / 2`.
pub fn translation_for(v: &[Rational; 3]) -> DualQuaternion {
    let half = rat(-1, 2);
    DualQuaternion::new(
        Quaternion::one(),
        Quaternion::vector(&v[0] * &half, &v[1] * &half, &v[2] * &half),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordinateChange {
    /// `conj(h) C h`
    Conjugate,
    /// `h C`
    LeftCompose,
    /// `C h`
    RightCompose,
}

pub fn change_coordinates(
    c: &MotionPoly,
    h: &DualQuaternion,
    mode: CoordinateChange,
) -> Result<MotionPoly> {
    if h.primal.is_zero() {
        return Err(Error::NotInvertible);
    }
    let hp = MotionPoly::constant(h);
    Ok(match mode {
        CoordinateChange::Conjugate => &(&MotionPoly::constant(&h.conj()) * c) * &hp,
        CoordinateChange::LeftCompose => &hp * c,
        CoordinateChange::RightCompose => c * &hp,
    })
}

/// Reparameterises by `t = (a s + b) / (c s + d)`, clearing denominators at
/// the motion degree.
pub fn reparameterize_motion(c: &MotionPoly, m: &[[Rational; 2]; 2]) -> Result<MotionPoly> {
    if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
        return Err(Error::NotInvertible);
    }
    let n = c.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(c.moebius(m, n))
}

//! Rational parametric curves in projective three-space.
//!
//! A curve is the map `t ↦ (x0(t) : x1(t) : x2(t) : x3(t))`. Curves are always
//! stored reduced, that is with coprime components. Circularity is only
//! defined for reduced parameterisations, so every constructor reduces.

use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational, RealPoly};
use crate::quat::ProjectivePoint;

/// Parameter value on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Finite(Rational),
    Infinity,
}

/// Reduced rational curve `x0 + x1 i + x2 j + x3 k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalCurve {
    x: [RealPoly; 4],
}

/// Divides the components by their monic gcd.
pub fn reduce_curve(raw: [RealPoly; 4]) -> Result<RationalCurve> {
    let g = RealPoly::gcd_all(raw.iter()).ok_or(Error::ZeroCurve)?;
    if g.is_one() {
        return Ok(RationalCurve { x: raw });
    }
    let x = raw.map(|p| p.exact_div(&g).expect("gcd divides every component"));
    Ok(RationalCurve { x })
}

impl RationalCurve {
    pub fn new(raw: [RealPoly; 4]) -> Result<Self> {
        reduce_curve(raw)
    }

    pub fn from_ints(c: [&[i64]; 4]) -> Result<Self> {
        reduce_curve(c.map(RealPoly::from_ints))
    }

    pub fn components(&self) -> &[RealPoly; 4] {
        &self.x
    }

    pub fn x0(&self) -> &RealPoly {
        &self.x[0]
    }

    /// Maximal component degree.
    pub fn degree(&self) -> usize {
        self.x
            .iter()
            .filter_map(RealPoly::degree)
            .max()
            .expect("curve is nonzero")
    }

    /// `x1^2 + x2^2 + x3^2`.
    pub fn vector_norm(&self) -> RealPoly {
        let [_, a, b, c] = &self.x;
        &(&(a * a) + &(b * b)) + &(c * c)
    }

    /// Half the degree of `gcd(x0, x1^2 + x2^2 + x3^2)`.
    pub fn circularity(&self) -> Result<usize> {
        let g = self.x[0].gcd(&self.vector_norm())?;
        let deg = g.degree().expect("gcd is nonzero");
        if deg % 2 != 0 {
            return Err(Error::NotReduced);
        }
        Ok(deg / 2)
    }

    pub fn is_entirely_circular(&self) -> Result<bool> {
        Ok(2 * self.circularity()? == self.degree())
    }

    pub fn eval(&self, t: &Param) -> Result<ProjectivePoint> {
        match t {
            Param::Finite(t) => ProjectivePoint::new(self.x.each_ref().map(|p| p.eval(t))),
            Param::Infinity => {
                let d = self.degree();
                ProjectivePoint::new(self.x.each_ref().map(|p| p.coeff(d)))
            }
        }
    }

    /// Reparameterises by `t = (a s + b) / (c s + d)` and clears denominators.
    pub fn reparameterize(&self, m: &[[Rational; 2]; 2]) -> Result<RationalCurve> {
        if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
            return Err(Error::NotInvertible);
        }
        let d = self.degree();
        reduce_curve(self.x.each_ref().map(|p| p.moebius(m, d)))
    }

    /// Adds `v * x0` to the vector components; a spatial translation by `v`.
    pub fn translate(&self, v: &[Rational; 3]) -> RationalCurve {
        let x0 = &self.x[0];
        let shift = |i: usize| &self.x[i + 1] + &x0.scale(&v[i]);
        RationalCurve {
            x: [x0.clone(), shift(0), shift(1), shift(2)],
        }
    }

    pub fn scale(&self, c: &Rational) -> RationalCurve {
        assert!(!c.is_zero());
        RationalCurve {
            x: self.x.each_ref().map(|p| p.scale(c)),
        }
    }
}

impl fmt::Debug for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.x;
        write!(f, "({a} : {b} : {c} : {d})")
    }
}

/// Evaluates a curve at a finite parameter or at `∞`.
pub fn curve_eval(c: &RationalCurve, t: &Param) -> Result<ProjectivePoint> {
    c.eval(t)
}

/// Whether two reduced curves agree up to one nonzero scalar factor.
pub fn curves_equal_projective(a: &RationalCurve, b: &RationalCurve) -> bool {
    let Some(i) = a.x.iter().position(|p| !p.is_zero()) else {
        return false;
    };
    let (Some(la), Some(lb)) = (a.x[i].leading(), b.x[i].leading()) else {
        return false;
    };
    let lambda = lb / la;
    a.x.iter()
        .zip(&b.x)
        .all(|(pa, pb)| &pa.scale(&lambda) == pb)
}

/// Record of the coordinate changes applied by [`normalize_at_infinity`].
///
/// With `φ` the parameter map `t = (a s + b) / (c s + d)` stored in
/// `moebius`, the normalized curve is `scale * translate(x∘φ, translation)`,
/// denominators cleared at the degree of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveTransform {
    pub moebius: [[Rational; 2]; 2],
    pub translation: [Rational; 3],
    pub scale: Rational,
}

impl Default for CurveTransform {
    fn default() -> Self {
        Self::identity()
    }
}

impl CurveTransform {
    pub fn identity() -> Self {
        CurveTransform {
            moebius: identity_matrix(),
            translation: [Rational::zero(), Rational::zero(), Rational::zero()],
            scale: Rational::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn has_reparameterization(&self) -> bool {
        self.moebius != identity_matrix()
    }

    /// Adjugate of the Möbius matrix; the inverse map up to a scalar.
    pub fn inverse_moebius(&self) -> [[Rational; 2]; 2] {
        let [[a, b], [c, d]] = &self.moebius;
        [[d.clone(), -b], [-c, a.clone()]]
    }

    pub fn apply(&self, c: &RationalCurve) -> Result<RationalCurve> {
        let mut out = c.clone();
        if self.has_reparameterization() {
            out = out.reparameterize(&self.moebius)?;
        }
        Ok(out.translate(&self.translation).scale(&self.scale))
    }

    pub fn invert(&self, c: &RationalCurve) -> Result<RationalCurve> {
        let neg = self.translation.each_ref().map(|v| -v);
        let mut out = c.scale(&self.scale.recip()).translate(&neg);
        if self.has_reparameterization() {
            out = out.reparameterize(&self.inverse_moebius())?;
        }
        Ok(out)
    }
}

pub(crate) fn identity_matrix() -> [[Rational; 2]; 2] {
    [
        [Rational::one(), Rational::zero()],
        [Rational::zero(), Rational::one()],
    ]
}

/// Moves the curve into the frame where `x(∞) = (1 : 0 : 0 : 0)` and `x0`
/// is monic of strictly larger degree than the other components.
///
/// When `x(∞)` lies on the plane at infinity the parameter is first replaced
/// by `t0 + 1/s`, with `t0` the first of `0, 1, -1, 2, -2, ...` where `x0`
/// does not vanish.
pub fn normalize_at_infinity(c: &RationalCurve) -> Result<(RationalCurve, CurveTransform)> {
    let d = c.degree();
    if d == 0 {
        return Err(Error::PointCurve);
    }
    let mut transform = CurveTransform::identity();
    let mut x = c.clone();
    if c.x0().degree() != Some(d) {
        let t0 = (0i64..)
            .flat_map(|k| {
                if k == 0 {
                    [Some(0), None]
                } else {
                    [Some(k), Some(-k)]
                }
            })
            .flatten()
            .map(int)
            .find(|t| !c.x0().eval(t).is_zero())
            .expect("nonzero polynomial has finitely many roots");
        transform.moebius = [[t0, Rational::one()], [Rational::one(), Rational::zero()]];
        x = x.reparameterize(&transform.moebius)?;
    }
    let lead0 = x.x0().coeff(d);
    debug_assert!(!lead0.is_zero());
    transform.translation = [1, 2, 3].map(|i| -(x.x[i].coeff(d) / &lead0));
    transform.scale = lead0.recip();
    let normalized = x.translate(&transform.translation).scale(&transform.scale);
    debug_assert!(normalized.x0().is_monic());
    Ok((normalized, transform))
}

/// Whether the curve already satisfies the normal form of
/// [`normalize_at_infinity`].
pub fn is_normalized(c: &RationalCurve) -> bool {
    let d0 = c.x0().degree();
    c.x0().is_monic() && c.x[1..].iter().all(|p| p.degree() < d0) && d0 > Some(0)
}

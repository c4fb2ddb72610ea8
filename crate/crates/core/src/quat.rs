//! Quaternions, dual quaternions and their action on projective points.
//!
//! Multiplication follows `i^2 = j^2 = k^2 = ijk = -1`, so `ij = k`,
//! `jk = i`, `ki = j`. The dual unit `ε` squares to zero and commutes with
//! `i`, `j` and `k`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// `w + x i + y j + z k` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(int(w), int(x), int(y), int(z))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn real(w: Rational) -> Self {
        Quaternion {
            w,
            ..Self::default()
        }
    }

    pub fn vector(x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion::new(Rational::zero(), x, y, z)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_real() && self.w.is_one()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `q conj(q)`, a nonnegative rational.
    pub fn norm(&self) -> Rational {
        self.components()
            .iter()
            .map(|&c| c * c)
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Quaternion::new(&self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        (!n.is_zero()).then(|| self.conj().scale(&n.recip()))
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(unit)?;
        }
        Ok(())
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &r.w,
            &self.x + &r.x,
            &self.y + &r.y,
            &self.z + &r.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &r.w,
            &self.x - &r.x,
            &self.y - &r.y,
            &self.z - &r.z,
        )
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, r: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&r.w, &r.x, &r.y, &r.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

/// `a + ε b` with `ε^2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DualNumber {
    pub primal: Rational,
    pub dual: Rational,
}

impl DualNumber {
    pub fn new(primal: Rational, dual: Rational) -> Self {
        DualNumber { primal, dual }
    }
}

impl Mul for &DualNumber {
    type Output = DualNumber;
    fn mul(self, r: &DualNumber) -> DualNumber {
        DualNumber::new(
            &self.primal * &r.primal,
            &self.primal * &r.dual + &self.dual * &r.primal,
        )
    }
}

/// `p + ε q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DualQuaternion {
    pub primal: Quaternion,
    pub dual: Quaternion,
}

impl DualQuaternion {
    pub fn new(primal: Quaternion, dual: Quaternion) -> Self {
        DualQuaternion { primal, dual }
    }

    pub fn one() -> Self {
        Self::from_primal(Quaternion::one())
    }

    /// The dual unit `ε`.
    pub fn eps() -> Self {
        Self::new(Quaternion::zero(), Quaternion::one())
    }

    pub fn from_primal(p: Quaternion) -> Self {
        Self::new(p, Quaternion::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.primal.conj(), self.dual.conj())
    }

    /// `h conj(h) = p conj(p) + ε (p conj(q) + q conj(p))`.
    pub fn norm(&self) -> DualNumber {
        let prod = self * &self.conj();
        debug_assert!(prod.primal.is_real() && prod.dual.is_real());
        DualNumber::new(prod.primal.w, prod.dual.w)
    }

    /// Scalar part of `p conj(q) + q conj(p)`, i.e. twice the 4D dot product.
    pub fn study_form(&self) -> Rational {
        let (p, q) = (&self.primal, &self.dual);
        int(2) * (&p.w * &q.w + &p.x * &q.x + &p.y * &q.y + &p.z * &q.z)
    }

    pub fn is_on_study_quadric(&self) -> bool {
        self.study_form().is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.primal.scale(c), self.dual.scale(c))
    }

    /// Multiplicative inverse; `None` when the primal part vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let p_inv = self.primal.inverse()?;
        // (p + εq)^-1 = p^-1 - ε p^-1 q p^-1
        let dual = -&(&(&p_inv * &self.dual) * &p_inv);
        Some(Self::new(p_inv, dual))
    }
}

impl fmt::Debug for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ε({:?})", self.primal, self.dual)
    }
}

impl Add for &DualQuaternion {
    type Output = DualQuaternion;
    fn add(self, r: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(&self.primal + &r.primal, &self.dual + &r.dual)
    }
}

impl Sub for &DualQuaternion {
    type Output = DualQuaternion;
    fn sub(self, r: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(&self.primal - &r.primal, &self.dual - &r.dual)
    }
}

impl Mul for &DualQuaternion {
    type Output = DualQuaternion;
    fn mul(self, r: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(
            &self.primal * &r.primal,
            &(&self.primal * &r.dual) + &(&self.dual * &r.primal),
        )
    }
}

/// Point of real projective three-space with homogeneous coordinates
/// `(x0 : x1 : x2 : x3)`, `x0` being the homogenising coordinate.
///
/// Always stored canonically: integer coordinates with gcd one and the
/// first nonzero coordinate positive. Structural equality is therefore
/// projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [Rational; 4],
}

impl ProjectivePoint {
    pub fn new(coords: [Rational; 4]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let den_lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: [BigInt; 4] =
            coords.map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer());
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let first = ints.iter().find(|c| !c.is_zero()).expect("checked above");
        let g = if first.is_negative() { -g } else { g };
        Ok(ProjectivePoint {
            coords: ints.map(|c| Rational::from_integer(c / &g)),
        })
    }

    pub fn from_ints(c: [i64; 4]) -> Result<Self> {
        Self::new(c.map(int))
    }

    /// The affine point `(1 : x : y : z)`.
    pub fn affine(x: Rational, y: Rational, z: Rational) -> Self {
        Self::new([Rational::one(), x, y, z]).expect("x0 = 1")
    }

    pub fn origin() -> Self {
        Self::affine(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// Affine coordinates, or `None` on the plane at infinity.
    pub fn to_affine(&self) -> Option<[Rational; 3]> {
        if self.is_at_infinity() {
            return None;
        }
        let inv = self.coords[0].recip();
        Some([
            &self.coords[1] * &inv,
            &self.coords[2] * &inv,
            &self.coords[3] * &inv,
        ])
    }

    pub fn as_quaternion(&self) -> Quaternion {
        let [a, b, c, d] = self.coords.clone();
        Quaternion::new(a, b, c, d)
    }
}

/// Applies the displacement `h = p + ε q` to `pt`:
/// `x ↦ p x conj(p) + 2 x0 p conj(q)`.
pub fn act_on_point(h: &DualQuaternion, pt: &ProjectivePoint) -> Result<ProjectivePoint> {
    if h.primal.is_zero() {
        return Err(Error::NotDisplacement);
    }
    if !h.is_on_study_quadric() {
        return Err(Error::NotOnStudyQuadric);
    }
    let x = pt.as_quaternion();
    let p = &h.primal;
    let rotated = &(p * &x) * &p.conj();
    let shift = (p * &h.dual.conj()).scale(&(int(2) * &pt.coords()[0]));
    let image = &rotated + &shift;
    ProjectivePoint::new([image.w, image.x, image.y, image.z])
}

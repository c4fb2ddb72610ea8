//! Polynomials over the quaternions and dual quaternions.
//!
//! The indeterminate `t` commutes with all coefficients and coefficients are
//! written to its left. Products of polynomials therefore convolve
//! coefficients while keeping their order, and division comes in a left and a
//! right flavour. Only right division (`a = b * q + r`) is needed here; it
//! drives the Euclidean algorithm for left gcds.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Rational, RealPoly};
use crate::quat::{DualQuaternion, Quaternion};

/// Polynomial with quaternion coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuatPoly {
    coeffs: Vec<Quaternion>,
}

impl QuatPoly {
    pub fn new(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        QuatPoly { coeffs }
    }

    pub fn zero() -> Self {
        QuatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    pub fn constant(q: Quaternion) -> Self {
        Self::new(vec![q])
    }

    /// `q t^k`.
    pub fn monomial(q: Quaternion, k: usize) -> Self {
        let mut coeffs = vec![Quaternion::zero(); k + 1];
        coeffs[k] = q;
        Self::new(coeffs)
    }

    /// `t - q`.
    pub fn linear(q: &Quaternion) -> Self {
        Self::new(vec![-q, Quaternion::one()])
    }

    /// Lifts a real polynomial; it commutes with every quaternion polynomial.
    pub fn from_real(r: &RealPoly) -> Self {
        Self::new(
            r.coeffs()
                .iter()
                .map(|c| Quaternion::real(c.clone()))
                .collect(),
        )
    }

    /// `p0 + p1 i + p2 j + p3 k` from its four real component polynomials.
    pub fn from_components(parts: [&RealPoly; 4]) -> Self {
        let n = parts
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .map_or(0, |d| d + 1);
        Self::new(
            (0..n)
                .map(|k| {
                    Quaternion::new(
                        parts[0].coeff(k),
                        parts[1].coeff(k),
                        parts[2].coeff(k),
                        parts[3].coeff(k),
                    )
                })
                .collect(),
        )
    }

    /// The real component polynomials `[p0, p1, p2, p3]`.
    pub fn components(&self) -> [RealPoly; 4] {
        let pick = |f: fn(&Quaternion) -> &Rational| {
            RealPoly::new(self.coeffs.iter().map(|q| f(q).clone()).collect())
        };
        [
            pick(|q| &q.w),
            pick(|q| &q.x),
            pick(|q| &q.y),
            pick(|q| &q.z),
        ]
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Quaternion {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Quaternion::is_real)
    }

    /// True when every coefficient has zero scalar part.
    pub fn is_vector(&self) -> bool {
        self.coeffs.iter().all(|q| q.w.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Quaternion::is_one)
    }

    pub fn leading(&self) -> Option<&Quaternion> {
        self.coeffs.last()
    }

    pub fn conj(&self) -> Self {
        QuatPoly {
            coeffs: self.coeffs.iter().map(Quaternion::conj).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|q| q.scale(c)).collect())
    }

    /// `self * q` with the constant on the right.
    pub fn mul_right(&self, q: &Quaternion) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * q).collect())
    }

    /// `q * self` with the constant on the left.
    pub fn mul_left(&self, q: &Quaternion) -> Self {
        Self::new(self.coeffs.iter().map(|a| q * a).collect())
    }

    pub fn mul_real(&self, r: &RealPoly) -> Self {
        self * &Self::from_real(r)
    }

    pub fn eval(&self, t: &Rational) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::zero(), |acc, c| &acc.scale(t) + c)
    }

    /// Right-multiplies by the inverse leading coefficient so the result is
    /// monic. Zero stays zero.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.mul_right(&lc.inverse().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// Divides every component by the real polynomial `r`, which must divide
    /// all of them.
    pub fn div_real(&self, r: &RealPoly) -> Result<Self> {
        let parts = self.components();
        let q: Vec<RealPoly> = parts
            .iter()
            .map(|p| p.exact_div(r))
            .collect::<Result<_>>()?;
        Ok(Self::from_components([&q[0], &q[1], &q[2], &q[3]]))
    }

    /// Homogeneous Möbius substitution of degree `n`, componentwise.
    pub fn moebius(&self, m: &[[Rational; 2]; 2], n: usize) -> Self {
        let parts = self.components().map(|p| p.moebius(m, n));
        Self::from_components([&parts[0], &parts[1], &parts[2], &parts[3]])
    }

    /// Right division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn right_divrem(&self, divisor: &QuatPoly) -> Result<(QuatPoly, QuatPoly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[db]
            .inverse()
            .expect("nonzero leading coefficient");
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Quaternion::zero(); da - db + 1];
        for k in (db..=da).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &lc_inv * &rem[k];
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k - db + i] = &rem[k - db + i] - &(b * &q);
            }
            quot[k - db] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `q` with `self = divisor * q`; fails unless the remainder vanishes.
    pub fn right_exact_div(&self, divisor: &QuatPoly) -> Result<QuatPoly> {
        let (q, r) = self.right_divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Whether `self` is a left divisor of `other`.
    pub fn left_divides(&self, other: &QuatPoly) -> bool {
        other.right_divrem(self).is_ok_and(|(_, r)| r.is_zero())
    }
}

/// `a conj(a)` as a real polynomial.
pub fn norm_poly(a: &QuatPoly) -> RealPoly {
    let n = a * &a.conj();
    debug_assert!(n.is_real());
    n.components()[0].clone()
}

/// Remainder sequence `R0, R1, R2, ...` of the Euclidean algorithm,
/// `R_{k-2} = R_{k-1} Q_k + R_k`, stopping before the first zero remainder.
/// The last entry is a left gcd of `f` and `g`.
pub fn euclid_remainders(f: &QuatPoly, g: &QuatPoly) -> Result<Vec<QuatPoly>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut seq = vec![f.clone()];
    if !g.is_zero() {
        seq.push(g.clone());
    }
    while seq.len() >= 2 {
        let n = seq.len();
        let (_, r) = seq[n - 2].right_divrem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    // a zero first operand leaves it at the front
    if seq[0].is_zero() {
        seq.remove(0);
    }
    Ok(seq)
}

/// Monic greatest common left divisor of `f` and `g`.
pub fn left_gcd(f: &QuatPoly, g: &QuatPoly) -> Result<QuatPoly> {
    let seq = euclid_remainders(f, g)?;
    Ok(seq.last().expect("nonempty").make_monic())
}

/// Maximal real polynomial factor: the monic gcd of the four components.
pub fn mrpf(p: &QuatPoly) -> Result<RealPoly> {
    let parts = p.components();
    RealPoly::gcd_all(parts.iter()).ok_or(Error::ZeroPolynomial)
}

/// Splits `c = p * q` with `p` the unique monic left gcd of `c` and the real
/// polynomial `r`, and `p conj(p) = r`.
///
/// Requires `deg c > 0`, `r` dividing the norm polynomial of `c` and
/// `gcd(r, mrpf(c)) = 1`. `r` is taken monic.
pub fn factor_by_norm(c: &QuatPoly, r: &RealPoly) -> Result<(QuatPoly, QuatPoly)> {
    if c.degree().unwrap_or(0) == 0 {
        return Err(Error::DegenerateDegree);
    }
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = r.monic();
    if !r.divides(&norm_poly(c)) {
        return Err(Error::NormNotDivisible);
    }
    if !r.gcd(&mrpf(c)?)?.is_one() {
        return Err(Error::SharedRealFactor);
    }
    let p = left_gcd(c, &QuatPoly::from_real(&r))?;
    let q = c
        .right_exact_div(&p)
        .map_err(|_| Error::Internal("left gcd does not left-divide its operand".into()))?;
    if norm_poly(&p) != r {
        return Err(Error::Internal(
            "norm of the left gcd differs from the norm factor".into(),
        ));
    }
    Ok((p, q))
}

impl fmt::Debug for QuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 if c.is_one() => f.write_str("t")?,
                1 => write!(f, "({c})t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QuatPoly {
    type Output = QuatPoly;
    fn add(self, r: &QuatPoly) -> QuatPoly {
        let n = self.coeffs.len().max(r.coeffs.len());
        QuatPoly::new((0..n).map(|k| &self.coeff(k) + &r.coeff(k)).collect())
    }
}

impl Sub for &QuatPoly {
    type Output = QuatPoly;
    fn sub(self, r: &QuatPoly) -> QuatPoly {
        let n = self.coeffs.len().max(r.coeffs.len());
        QuatPoly::new((0..n).map(|k| &self.coeff(k) - &r.coeff(k)).collect())
    }
}

impl Neg for &QuatPoly {
    type Output = QuatPoly;
    fn neg(self) -> QuatPoly {
        QuatPoly {
            coeffs: self.coeffs.iter().map(|q| -q).collect(),
        }
    }
}

impl Mul for &QuatPoly {
    type Output = QuatPoly;
    fn mul(self, r: &QuatPoly) -> QuatPoly {
        if self.is_zero() || r.is_zero() {
            return QuatPoly::zero();
        }
        let mut out = vec![Quaternion::zero(); self.coeffs.len() + r.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in r.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QuatPoly::new(out)
    }
}

/// `P + ε Q` with `P`, `Q` quaternion polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DualQuatPoly {
    pub primal: QuatPoly,
    pub dual: QuatPoly,
}

impl DualQuatPoly {
    pub fn new(primal: QuatPoly, dual: QuatPoly) -> Self {
        DualQuatPoly { primal, dual }
    }

    pub fn one() -> Self {
        Self::new(QuatPoly::one(), QuatPoly::zero())
    }

    pub fn constant(h: &DualQuaternion) -> Self {
        Self::new(
            QuatPoly::constant(h.primal.clone()),
            QuatPoly::constant(h.dual.clone()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }

    /// `max(deg P, deg Q)`.
    pub fn degree(&self) -> Option<usize> {
        self.primal.degree().max(self.dual.degree())
    }

    pub fn coeff(&self, k: usize) -> DualQuaternion {
        DualQuaternion::new(self.primal.coeff(k), self.dual.coeff(k))
    }

    /// Coefficient at the top degree, `C(∞)`.
    pub fn leading(&self) -> Option<DualQuaternion> {
        self.degree().map(|n| self.coeff(n))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.primal.conj(), self.dual.conj())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.primal.scale(c), self.dual.scale(c))
    }

    pub fn mul_real(&self, r: &RealPoly) -> Self {
        Self::new(self.primal.mul_real(r), self.dual.mul_real(r))
    }

    pub fn eval(&self, t: &Rational) -> DualQuaternion {
        DualQuaternion::new(self.primal.eval(t), self.dual.eval(t))
    }

    pub fn moebius(&self, m: &[[Rational; 2]; 2], n: usize) -> Self {
        Self::new(self.primal.moebius(m, n), self.dual.moebius(m, n))
    }
}

impl fmt::Debug for DualQuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + ε[{}]", self.primal, self.dual)
    }
}

impl Add for &DualQuatPoly {
    type Output = DualQuatPoly;
    fn add(self, r: &DualQuatPoly) -> DualQuatPoly {
        DualQuatPoly::new(&self.primal + &r.primal, &self.dual + &r.dual)
    }
}

impl Mul for &DualQuatPoly {
    type Output = DualQuatPoly;
    fn mul(self, r: &DualQuatPoly) -> DualQuatPoly {
        DualQuatPoly::new(
            &self.primal * &r.primal,
            &(&self.primal * &r.dual) + &(&self.dual * &r.primal),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn qp(c: &[(i64, i64, i64, i64)]) -> QuatPoly {
        QuatPoly::new(c.iter().map(|&(w, x, y, z)| q(w, x, y, z)).collect())
    }

    fn rp(c: &[i64]) -> RealPoly {
        RealPoly::from_ints(c)
    }

    /// Translated Viviani curve vector part: -4t^2 i + 2t(1-t^2) j + 2t(1+t^2) k.
    fn viviani_d() -> QuatPoly {
        QuatPoly::from_components([
            &RealPoly::zero(),
            &rp(&[0, 0, -4]),
            &rp(&[0, 2, 0, -2]),
            &rp(&[0, 2, 0, 2]),
        ])
    }

    /// t^2 - t(j+k) - i
    fn viviani_p0() -> QuatPoly {
        qp(&[(0, -1, 0, 0), (0, 0, -1, -1), (1, 0, 0, 0)])
    }

    #[test]
    fn products() {
        let ti = QuatPoly::linear(&Quaternion::i());
        let tj = QuatPoly::linear(&Quaternion::j());
        let tk = QuatPoly::linear(&Quaternion::k());
        // (t-i)(t-j) = t^2 - (i+j)t + k
        assert_eq!(&ti * &tj, qp(&[(0, 0, 0, 1), (0, -1, -1, 0), (1, 0, 0, 0)]));
        // (t-k)(t-j) = t^2 - (j+k)t - i
        assert_eq!(&tk * &tj, viviani_p0());
        assert_eq!(&ti * &QuatPoly::one(), ti);
    }

    #[test]
    fn norm_polys() {
        assert_eq!(norm_poly(&viviani_p0()), rp(&[1, 0, 1]).pow(2));
        assert_eq!(
            norm_poly(&QuatPoly::from_real(&rp(&[2, 3]))),
            rp(&[2, 3]).pow(2)
        );
        assert_eq!(
            norm_poly(&QuatPoly::linear(&Quaternion::i())),
            rp(&[1, 0, 1])
        );
    }

    #[test]
    fn right_division_examples() {
        let t = QuatPoly::monomial(Quaternion::one(), 1);
        // t^2 + i = t * t + i
        let a = qp(&[(0, 1, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0)]);
        assert_eq!(
            a.right_divrem(&t).unwrap(),
            (t.clone(), QuatPoly::constant(Quaternion::i()))
        );
        // ti = (t - j) i - k
        let a = QuatPoly::monomial(Quaternion::i(), 1);
        let (quot, rem) = a.right_divrem(&QuatPoly::linear(&Quaternion::j())).unwrap();
        assert_eq!(quot, QuatPoly::constant(Quaternion::i()));
        assert_eq!(rem, QuatPoly::constant(q(0, 0, 0, -1)));
        assert_eq!(
            a.right_divrem(&QuatPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn viviani_right_quotient() {
        // D = P0 * 2t(k - j); the conjugate of the quotient is 2t(j - k)
        let (quot, rem) = viviani_d().right_divrem(&viviani_p0()).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, qp(&[(0, 0, 0, 0), (0, 0, -2, 2)]));
        assert_eq!(quot.conj(), qp(&[(0, 0, 0, 0), (0, 0, 2, -2)]));
    }

    #[test]
    fn left_gcd_examples() {
        let g = QuatPoly::from_real(&rp(&[1, 0, 1]).pow(2));
        assert_eq!(left_gcd(&viviani_d(), &g).unwrap(), viviani_p0());
        assert_eq!(
            left_gcd(&qp(&[(3, 1, 0, 2), (1, 1, 1, 1)]), &QuatPoly::one()).unwrap(),
            QuatPoly::one()
        );
        let ti = QuatPoly::linear(&Quaternion::i());
        let a = &ti * &QuatPoly::linear(&Quaternion::j());
        let b = &ti * &QuatPoly::linear(&Quaternion::k());
        let d = left_gcd(&a, &b).unwrap();
        assert_eq!(d, ti);
        assert!(d.left_divides(&a) && d.left_divides(&b));
        assert_eq!(
            left_gcd(&QuatPoly::zero(), &QuatPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn mrpf_examples() {
        let ti = QuatPoly::linear(&Quaternion::i());
        assert_eq!(mrpf(&ti).unwrap(), RealPoly::one());
        let a = ti.mul_real(&rp(&[1, 0, 1]));
        assert_eq!(mrpf(&a).unwrap(), rp(&[1, 0, 1]));
        assert_eq!(mrpf(&QuatPoly::zero()), Err(Error::ZeroPolynomial));
        // P0 of the quintic curve, times t + 1
        let p0 =
            QuatPoly::from_components([&rp(&[1, 2, 1]), &rp(&[-1, -1]), &rp(&[2, 2]), &rp(&[-2])]);
        assert_eq!(mrpf(&p0).unwrap(), RealPoly::one());
        assert_eq!(mrpf(&p0.mul_real(&rp(&[1, 1]))).unwrap(), rp(&[1, 1]));
    }

    #[test]
    fn factor_by_norm_viviani() {
        let g = rp(&[1, 0, 1]).pow(2);
        let (p, quot) = factor_by_norm(&viviani_d(), &g).unwrap();
        assert_eq!(p, viviani_p0());
        assert_eq!(&p * &quot, viviani_d());
        assert_eq!(norm_poly(&p), g);
    }

    #[test]
    fn factor_by_norm_trivial() {
        let c = qp(&[(1, 2, 0, -1), (0, 1, 1, 0)]);
        assert_eq!(
            factor_by_norm(&c, &RealPoly::one()).unwrap(),
            (QuatPoly::one(), c)
        );
    }

    #[test]
    fn factor_by_norm_quintic() {
        let x1 = &rp(&[-5, 0, 1]) * &rp(&[2, 2, 1]);
        let x1 = x1.scale(&int(2));
        let x2 = (&rp(&[5, 1]) * &rp(&[1, 1]).pow(2)).scale(&int(-4));
        let x3 = (&(&rp(&[0, 1]) * &rp(&[2, 1])) * &(&rp(&[5, 1]) * &rp(&[1, 1]))).scale(&int(-2));
        let d = QuatPoly::from_components([&RealPoly::zero(), &x1, &x2, &x3]);
        let g = &rp(&[2, 2, 1]) * &rp(&[5, 2, 1]);
        let (p, _) = factor_by_norm(&d, &g).unwrap();
        let expected =
            QuatPoly::from_components([&rp(&[1, 2, 1]), &rp(&[-1, -1]), &rp(&[2, 2]), &rp(&[-2])]);
        assert_eq!(p, expected);
    }

    #[test]
    fn factor_by_norm_errors() {
        let c = QuatPoly::linear(&Quaternion::i());
        assert_eq!(
            factor_by_norm(&QuatPoly::one(), &RealPoly::one()),
            Err(Error::DegenerateDegree)
        );
        assert_eq!(
            factor_by_norm(&c, &rp(&[2, 0, 1])),
            Err(Error::NormNotDivisible)
        );
        let c2 = c.mul_real(&rp(&[1, 0, 1]));
        assert_eq!(
            factor_by_norm(&c2, &rp(&[1, 0, 1])),
            Err(Error::SharedRealFactor)
        );
    }
}

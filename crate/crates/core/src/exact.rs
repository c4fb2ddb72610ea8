//! Exact rational scalars and univariate polynomials over them.
//!
//! The degree of the zero polynomial is `None`, which orders below every
//! `Some(d)`; it is never encoded as `-1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Polynomial in `t` with rational coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

impl RealPoly {
    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
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

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RealPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division `self = b*q + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &RealPoly) -> Result<(RealPoly, RealPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = b.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); da - db + 1];
        for k in (db..=da).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &inv_lc;
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k - db + i] -= &q * bc;
            }
            quot[k - db] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, b: &RealPoly) -> Result<RealPoly> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, other: &RealPoly) -> bool {
        other.divrem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RealPoly) -> Result<RealPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// gcd over a list, skipping zeros. `None` when every entry is zero.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a RealPoly>) -> Option<RealPoly> {
        polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .fold(None, |acc, p| match acc {
                None => Some(p.monic()),
                Some(g) => Some(g.gcd(p).expect("nonzero operand")),
            })
    }

    /// Homogeneous Möbius substitution of degree `n`:
    /// `(c t + d)^n * self((a t + b) / (c t + d))`. Requires `deg self <= n`.
    pub fn moebius(&self, m: &[[Rational; 2]; 2], n: usize) -> RealPoly {
        debug_assert!(self.degree().is_none_or(|d| d <= n));
        let num = RealPoly::new(vec![m[0][1].clone(), m[0][0].clone()]);
        let den = RealPoly::new(vec![m[1][1].clone(), m[1][0].clone()]);
        let mut out = RealPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &num.pow(k as u32) * &den.pow((n - k) as u32);
            out += &term.scale(c);
        }
        out
    }
}

impl fmt::Debug for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;
    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::new(out)
    }
}

impl Neg for &RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        RealPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RealPoly {
            type Output = RealPoly;
            fn $m(self, rhs: RealPoly) -> RealPoly { (&self).$m(&rhs) }
        }
        impl $tr<&RealPoly> for RealPoly {
            type Output = RealPoly;
            fn $m(self, rhs: &RealPoly) -> RealPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        -&self
    }
}

impl AddAssign<&RealPoly> for RealPoly {
    fn add_assign(&mut self, rhs: &RealPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RealPoly> for RealPoly {
    fn sub_assign(&mut self, rhs: &RealPoly) {
        *self = &*self - rhs;
    }
}

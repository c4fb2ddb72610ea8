//! Random generators for exact objects with small coefficients.
//!
//! Numerators lie in `-10..=10` and denominators in `1..=10`.

use alloc::vec::Vec;

use rand::Rng;

use crate::curve::RationalCurve;
use crate::exact::{rat, Rational, RealPoly};
use crate::motion::{is_motion_polynomial, is_reduced, trajectory, MotionPoly};
use crate::qpoly::QuatPoly;
use crate::quat::{DualQuaternion, ProjectivePoint, Quaternion};

pub const MAX_NUM: i64 = 10;
pub const MAX_DEN: i64 = 10;

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(
        rng.gen_range(-MAX_NUM..=MAX_NUM),
        rng.gen_range(1..=MAX_DEN),
    )
}

pub fn small_integer<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-MAX_NUM..=MAX_NUM), 1)
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
    )
}

pub fn nonzero_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let q = quaternion(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R) -> [Rational; 3] {
    [
        small_rational(rng),
        small_rational(rng),
        small_rational(rng),
    ]
}

/// Polynomial of degree at most `deg`.
pub fn real_poly<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> RealPoly {
    RealPoly::new((0..=deg).map(|_| small_rational(rng)).collect())
}

/// Polynomial of degree exactly `deg`.
pub fn real_poly_exact<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> RealPoly {
    let mut c: Vec<_> = (0..deg).map(|_| small_rational(rng)).collect();
    c.push(nonzero_rational(rng));
    RealPoly::new(c)
}

pub fn monic_real_poly<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> RealPoly {
    let mut c: Vec<_> = (0..deg).map(|_| small_rational(rng)).collect();
    c.push(rat(1, 1));
    RealPoly::new(c)
}

pub fn quat_poly<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> QuatPoly {
    QuatPoly::new((0..=deg).map(|_| quaternion(rng)).collect())
}

pub fn quat_poly_exact<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> QuatPoly {
    let mut c: Vec<_> = (0..deg).map(|_| quaternion(rng)).collect();
    c.push(nonzero_quaternion(rng));
    QuatPoly::new(c)
}

pub fn vector_poly<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> QuatPoly {
    let z = RealPoly::zero();
    let (a, b, c) = (
        real_poly(rng, deg),
        real_poly(rng, deg),
        real_poly(rng, deg),
    );
    QuatPoly::from_components([&z, &a, &b, &c])
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Dual quaternion `p + ε q` on the Study quadric with `p != 0`.
pub fn displacement<R: Rng + ?Sized>(rng: &mut R) -> DualQuaternion {
    let p = nonzero_quaternion(rng);
    let [a, b, c] = vector(rng);
    let v = Quaternion::new(rat(0, 1), a, b, c);
    DualQuaternion::new(p.clone(), &v * &p)
}

/// Linear motion polynomial `t - h`. A non-real primal part gives a
/// rotation, a real one a translation.
pub fn linear_factor<R: Rng + ?Sized>(rng: &mut R) -> MotionPoly {
    let rotation = rng.gen_bool(0.8);
    let p = if rotation {
        loop {
            let p = quaternion(rng);
            if !p.is_real() {
                break p;
            }
        }
    } else {
        Quaternion::real(small_rational(rng))
    };
    let q = if rotation {
        let axis = [p.x.clone(), p.y.clone(), p.z.clone()];
        let [a, b, c] = cross(&axis, &vector(rng));
        Quaternion::new(rat(0, 1), a, b, c)
    } else {
        let [a, b, c] = vector(rng);
        Quaternion::new(rat(0, 1), a, b, c)
    };
    let one = Quaternion::one();
    MotionPoly::new(
        QuatPoly::new(alloc::vec![-&p, one]),
        QuatPoly::constant(-&q),
    )
}

/// Curvilinear translation `w + ε V` with `w` monic of degree `deg` and a
/// vector polynomial `V` of lower degree.
pub fn curvilinear_translation<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> MotionPoly {
    let w = monic_real_poly(rng, deg);
    let v = if deg == 0 {
        QuatPoly::zero()
    } else {
        vector_poly(rng, deg - 1)
    };
    MotionPoly::new(QuatPoly::from_real(&w), v)
}

/// Product of `n` linear factors, optionally preceded by a curvilinear
/// translation of degree `k <= n` that replaces `k` of them.
fn monic_motion<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MotionPoly {
    let k = if n > 0 && rng.gen_bool(0.25) {
        rng.gen_range(1..=n)
    } else {
        0
    };
    let mut c = curvilinear_translation(rng, k);
    for _ in k..n {
        c = &c * &linear_factor(rng);
    }
    c
}

/// Reduced motion polynomial of degree `n >= 1` with a random constant left
/// factor, so its leading coefficient is a general invertible displacement.
pub fn reduced_motion<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MotionPoly {
    loop {
        let c = &MotionPoly::constant(&displacement(rng)) * &monic_motion(rng, n);
        if c.degree() == Some(n)
            && is_motion_polynomial(&c.primal, &c.dual).is_empty()
            && is_reduced(&c)
        {
            return c;
        }
    }
}

/// Monic reduced motion with `C(∞) = 1` whose origin trajectory has
/// degree `d` and circularity `c` with `d - c = n`. By uniqueness it is the
/// minimal motion of that trajectory.
pub fn minimal_motion<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MotionPoly {
    let origin = ProjectivePoint::origin();
    loop {
        let c = monic_motion(rng, n);
        if c.degree() != Some(n) || !is_reduced(&c) {
            continue;
        }
        let Ok(x) = trajectory(&c, &origin) else {
            continue;
        };
        let Ok(circ) = x.circularity() else { continue };
        if x.degree() == n + circ {
            return c;
        }
    }
}

pub fn affine_point<R: Rng + ?Sized>(rng: &mut R) -> ProjectivePoint {
    let [x, y, z] = vector(rng);
    ProjectivePoint::affine(x, y, z)
}

/// Reduced curve of degree exactly `deg >= 1`.
pub fn curve<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> RationalCurve {
    loop {
        let x0 = real_poly_exact(rng, deg);
        let parts = [
            x0,
            real_poly(rng, deg),
            real_poly(rng, deg),
            real_poly(rng, deg),
        ];
        let Ok(x) = RationalCurve::new(parts) else {
            continue;
        };
        if x.degree() == deg {
            return x;
        }
    }
}

/// Curve with zero circularity.
pub fn non_circular_curve<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> RationalCurve {
    loop {
        let x = curve(rng, deg);
        if x.circularity().ok() == Some(0) {
            return x;
        }
    }
}

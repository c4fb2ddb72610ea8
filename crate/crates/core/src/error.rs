use alloc::string::String;
use core::fmt;

/// Errors raised by the exact algebra and the synthesis pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Polynomial or quaternion division by zero.
    DivisionByZero,
    /// gcd requested for two zero polynomials.
    GcdOfZeros,
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// A quotient was expected to be exact but left a remainder.
    InexactDivision,
    /// Dual quaternion with vanishing primal part.
    NotDisplacement,
    /// Dual quaternion violating `p conj(q) + q conj(p) = 0`.
    NotOnStudyQuadric,
    /// Norm factor does not divide the norm polynomial.
    NormNotDivisible,
    /// Norm factor shares a real factor with the polynomial.
    SharedRealFactor,
    /// Polynomial of non-positive degree where a positive degree is required.
    DegenerateDegree,
    /// All four curve components vanish.
    ZeroCurve,
    /// All four homogeneous point coordinates vanish.
    ZeroPoint,
    /// Circularity gcd of odd degree; the curve was not reduced.
    NotReduced,
    /// Curve parameterises a single point.
    PointCurve,
    /// Curve does not satisfy `x(inf) = 1` with monic `x0`.
    NotNormalized(&'static str),
    /// Vector part of the curve vanishes identically.
    DegenerateCurve,
    /// Singular matrix or non-invertible dual quaternion.
    NotInvertible,
    /// A postcondition that should always hold failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero polynomial"),
            Error::GcdOfZeros => f.write_str("gcd of two zero polynomials"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::InexactDivision => f.write_str("division leaves a nonzero remainder"),
            Error::NotDisplacement => f.write_str("not a displacement (primal part is zero)"),
            Error::NotOnStudyQuadric => f.write_str("not on Study quadric"),
            Error::NormNotDivisible => f.write_str("r does not divide norm"),
            Error::SharedRealFactor => f.write_str("r shares real factor with c"),
            Error::DegenerateDegree => f.write_str("degenerate degree"),
            Error::ZeroCurve => f.write_str("all curve components are zero"),
            Error::ZeroPoint => f.write_str("all point coordinates are zero"),
            Error::NotReduced => f.write_str("input not reduced"),
            Error::PointCurve => f.write_str("curve is a single point"),
            Error::NotNormalized(why) => {
                write!(
                    f,
                    "curve not normalized ({why}); apply normalize_at_infinity first"
                )
            }
            Error::DegenerateCurve => {
                f.write_str("degenerate: curve lies on the real axis of the model")
            }
            Error::NotInvertible => f.write_str("not invertible"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

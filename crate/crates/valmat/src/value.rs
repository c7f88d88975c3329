//! Arithmetic in the value group Γ extended by an absorbing infinity, plus
//! exact powers q^v for rational 0 < q ≤ 1.
//!
//! Exact mode fixes Γ = ℤ so q^v is an exact rational; relaxed mode admits
//! float valuations and computes with f64 under a relative tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A finite group element: an exact integer, or a float in relaxed mode.
#[derive(Clone, Copy, Debug)]
pub enum Scalar {
    Int(i64),
    Float(f64),
}

impl Scalar {
    pub fn as_f64(self) -> f64 {
        match self {
            Scalar::Int(i) => i as f64,
            Scalar::Float(f) => f,
        }
    }

    pub fn as_int(self) -> Option<i64> {
        match self {
            Scalar::Int(i) => Some(i),
            Scalar::Float(_) => None,
        }
    }

    pub fn is_zero(self) -> bool {
        match self {
            Scalar::Int(i) => i == 0,
            Scalar::Float(f) => f == 0.0,
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => a.cmp(b),
            // Floats are finite and non-NaN by construction, so this is total.
            _ => self
                .as_f64()
                .partial_cmp(&other.as_f64())
                .expect("scalars are finite by construction"),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                Scalar::Int(a.checked_add(b).expect("valuation overflow"))
            }
            _ => Scalar::Float(self.as_f64() + rhs.as_f64()),
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                Scalar::Int(a.checked_sub(b).expect("valuation overflow"))
            }
            _ => Scalar::Float(self.as_f64() - rhs.as_f64()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(i) => write!(f, "{i}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// An element of Γ ∪ {∞}. Addition absorbs into infinity and the order is
/// total with infinity maximal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtVal {
    Finite(Scalar),
    Inf,
}

impl ExtVal {
    pub fn int(v: i64) -> ExtVal {
        ExtVal::Finite(Scalar::Int(v))
    }

    /// Relaxed-mode valuation. Rejects NaN and non-finite floats, which would
    /// break the total order.
    pub fn float(v: f64) -> Result<ExtVal> {
        if v.is_finite() {
            Ok(ExtVal::Finite(Scalar::Float(v)))
        } else {
            Err(Error::InvalidInput(format!(
                "float valuation must be finite, got {v}"
            )))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtVal::Finite(_))
    }

    pub fn finite(self) -> Option<Scalar> {
        match self {
            ExtVal::Finite(s) => Some(s),
            ExtVal::Inf => None,
        }
    }

    pub fn min(self, other: ExtVal) -> ExtVal {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl Add for ExtVal {
    type Output = ExtVal;

    fn add(self, rhs: ExtVal) -> ExtVal {
        match (self, rhs) {
            (ExtVal::Finite(a), ExtVal::Finite(b)) => ExtVal::Finite(a + b),
            _ => ExtVal::Inf,
        }
    }
}

impl fmt::Display for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtVal::Finite(s) => write!(f, "{s}"),
            ExtVal::Inf => write!(f, "inf"),
        }
    }
}

/// Arithmetic mode for sequence terms and verdicts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Exact,
    Relaxed { tol: f64 },
}

pub const DEFAULT_RELAXED_TOL: f64 = 1e-9;

/// The base 0 < q ≤ 1 together with the arithmetic mode, with q^∞ = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct QScalar {
    q: BigRational,
    mode: Mode,
}

impl QScalar {
    pub fn new(q: BigRational, mode: Mode) -> Result<QScalar> {
        if q.is_positive() && q <= BigRational::one() {
            Ok(QScalar { q, mode })
        } else {
            Err(Error::InvalidInput(format!(
                "q must satisfy 0 < q <= 1, got {q}"
            )))
        }
    }

    pub fn exact(num: i64, den: i64) -> Result<QScalar> {
        if den == 0 {
            return Err(Error::InvalidInput("q denominator is zero".into()));
        }
        QScalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            Mode::Exact,
        )
    }

    pub fn one() -> QScalar {
        QScalar {
            q: BigRational::one(),
            mode: Mode::Exact,
        }
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.mode, Mode::Exact)
    }

    pub fn with_mode(&self, mode: Mode) -> QScalar {
        QScalar {
            q: self.q.clone(),
            mode,
        }
    }

    /// q^v with q^∞ = 0. Exact mode demands an integer (or infinite) v and
    /// yields an exact rational; relaxed mode computes in f64.
    pub fn pow(&self, v: ExtVal) -> Result<Coeff> {
        match self.mode {
            Mode::Exact => match v {
                ExtVal::Inf => Ok(Coeff::Exact(BigRational::zero())),
                ExtVal::Finite(Scalar::Int(n)) => Ok(Coeff::Exact(rational_pow(&self.q, n))),
                ExtVal::Finite(Scalar::Float(x)) => Err(Error::Mode(format!(
                    "exact mode requires integer valuations, got {x}; rerun with --relaxed"
                ))),
            },
            Mode::Relaxed { .. } => {
                let qf = self.q.to_f64().expect("q fits in f64");
                match v {
                    ExtVal::Inf => Ok(Coeff::Approx(0.0)),
                    ExtVal::Finite(s) => Ok(Coeff::Approx(qf.powf(s.as_f64()))),
                }
            }
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// q^n for integer n of either sign, as an exact rational.
pub fn rational_pow(q: &BigRational, n: i64) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let e = u32::try_from(n.unsigned_abs()).expect("exponent out of range");
    let num = q.numer().pow(e);
    let den = q.denom().pow(e);
    if n > 0 {
        BigRational::new(num, den)
    } else {
        BigRational::new(den, num)
    }
}

/// A nonnegative weight: an exact rational or a relaxed-mode float.
#[derive(Clone, Debug, PartialEq)]
pub enum Coeff {
    Exact(BigRational),
    Approx(f64),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_half() -> QScalar {
        QScalar::exact(1, 2).unwrap()
    }

    #[test]
    fn q_power_of_infinity_is_zero() {
        assert_eq!(
            q_half().pow(ExtVal::Inf).unwrap(),
            Coeff::Exact(BigRational::zero())
        );
    }

    #[test]
    fn q_power_of_zero_is_one() {
        assert_eq!(
            q_half().pow(ExtVal::int(0)).unwrap(),
            Coeff::Exact(BigRational::one())
        );
    }

    #[test]
    fn q_power_negative_exponent() {
        assert_eq!(
            q_half().pow(ExtVal::int(-2)).unwrap(),
            Coeff::Exact(BigRational::from(BigInt::from(4)))
        );
    }

    #[test]
    fn exact_mode_rejects_float_valuations() {
        let err = q_half().pow(ExtVal::float(0.5).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Mode(_)));
    }

    #[test]
    fn infinity_absorbs_and_is_maximal() {
        assert_eq!(ExtVal::int(3) + ExtVal::Inf, ExtVal::Inf);
        assert_eq!(ExtVal::Inf.min(ExtVal::int(-7)), ExtVal::int(-7));
        assert!(ExtVal::int(i64::MAX / 2) < ExtVal::Inf);
    }

    #[test]
    fn q_out_of_range_rejected() {
        assert!(QScalar::exact(0, 1).is_err());
        assert!(QScalar::exact(3, 2).is_err());
        assert!(QScalar::exact(1, 1).is_ok());
    }

    #[test]
    fn q_power_monotone_decreasing_for_q_below_one() {
        let q = q_half();
        let powers: Vec<BigRational> = (-3..4)
            .map(|n| match q.pow(ExtVal::int(n)).unwrap() {
                Coeff::Exact(r) => r,
                Coeff::Approx(_) => unreachable!(),
            })
            .collect();
        for w in powers.windows(2) {
            assert!(w[0] > w[1]);
        }
    }
}

//! Exact extended rationals.
//!
//! Edge lengths live in `(0, +inf]` and embedding coordinates in
//! `Q ∪ {-inf, +inf}`. Infinity is always a distinct variant, never a large
//! sentinel value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A rational number extended by both infinities.
///
/// The derived order is the natural one: `-inf < q < +inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Extended {
    pub fn zero() -> Self {
        Extended::Finite(BigRational::zero())
    }

    pub fn from_integer(v: i64) -> Self {
        Extended::Finite(BigRational::from_integer(v.into()))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Extended::Finite(q) if q.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Extended::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn abs(&self) -> Extended {
        match self {
            Extended::Finite(q) => Extended::Finite(q.abs()),
            _ => Extended::PosInf,
        }
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self {
            Extended::NegInf => -1,
            Extended::PosInf => 1,
            Extended::Finite(q) => match q.cmp(&BigRational::zero()) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            },
        }
    }

    /// Sum, or `None` for the undefined `+inf + -inf`.
    pub fn checked_add(&self, other: &Extended) -> Option<Extended> {
        use Extended::*;
        match (self, other) {
            (PosInf, NegInf) | (NegInf, PosInf) => None,
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (NegInf, _) | (_, NegInf) => Some(NegInf),
            (Finite(a), Finite(b)) => Some(Finite(a + b)),
        }
    }
}

impl Neg for Extended {
    type Output = Extended;
    fn neg(self) -> Extended {
        match self {
            Extended::NegInf => Extended::PosInf,
            Extended::PosInf => Extended::NegInf,
            Extended::Finite(q) => Extended::Finite(-q),
        }
    }
}

impl From<BigRational> for Extended {
    fn from(q: BigRational) -> Self {
        Extended::Finite(q)
    }
}

impl From<&EdgeLength> for Extended {
    fn from(l: &EdgeLength) -> Self {
        match l {
            EdgeLength::Finite(q) => Extended::Finite(q.clone()),
            EdgeLength::Infinite => Extended::PosInf,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::PosInf => f.write_str("inf"),
            Extended::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for Extended {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" => Ok(Extended::PosInf),
            "-inf" => Ok(Extended::NegInf),
            other => parse_rational(other).map(Extended::Finite),
        }
    }
}

/// Length of a bounded edge: a positive rational or `+inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLength {
    Finite(BigRational),
    Infinite,
}

impl EdgeLength {
    /// A finite length; rejects non-positive values.
    pub fn finite(q: BigRational) -> Result<Self> {
        if q.is_positive() {
            Ok(EdgeLength::Finite(q))
        } else {
            Err(Error::InvalidLength(q.to_string()))
        }
    }

    pub fn ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidLength(format!("{numer}/0")));
        }
        Self::finite(BigRational::new(numer.into(), denom.into()))
    }

    pub fn integer(v: i64) -> Result<Self> {
        Self::ratio(v, 1)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, EdgeLength::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            EdgeLength::Finite(q) => Some(q),
            EdgeLength::Infinite => None,
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Result<EdgeLength> {
        match self {
            EdgeLength::Finite(q) => EdgeLength::finite(q * factor),
            EdgeLength::Infinite if factor.is_positive() => Ok(EdgeLength::Infinite),
            EdgeLength::Infinite => Err(Error::InvalidLength(format!("inf * {factor}"))),
        }
    }
}

impl Add for &EdgeLength {
    type Output = EdgeLength;
    fn add(self, other: &EdgeLength) -> EdgeLength {
        match (self, other) {
            (EdgeLength::Finite(a), EdgeLength::Finite(b)) => EdgeLength::Finite(a + b),
            _ => EdgeLength::Infinite,
        }
    }
}

impl Mul<i64> for &EdgeLength {
    type Output = Extended;
    /// Signed multiple, as used by the double-ratio sum.
    fn mul(self, sign: i64) -> Extended {
        match self {
            EdgeLength::Finite(q) => Extended::Finite(q * BigInt::from(sign)),
            EdgeLength::Infinite => match sign.cmp(&0) {
                Ordering::Less => Extended::NegInf,
                Ordering::Equal => Extended::zero(),
                Ordering::Greater => Extended::PosInf,
            },
        }
    }
}

impl fmt::Display for EdgeLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLength::Finite(q) => write!(f, "{q}"),
            EdgeLength::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for EdgeLength {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Extended>()? {
            Extended::PosInf => Ok(EdgeLength::Infinite),
            Extended::Finite(q) => EdgeLength::finite(q),
            Extended::NegInf => Err(Error::InvalidLength(s.to_string())),
        }
    }
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

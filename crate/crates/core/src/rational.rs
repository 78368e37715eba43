//! The standard NM-algebra on the rational points of `[0,1]`, in exact
//! arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// An exact rational in `[0,1]`, always in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(BigRational);

impl RationalPoint {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Precondition("zero denominator".into()));
        }
        Self::from_ratio(BigRational::new(BigInt::from(numerator), BigInt::from(denominator)))
    }

    pub fn from_ratio(value: BigRational) -> Result<Self> {
        if value < BigRational::zero() || value > BigRational::one() {
            return Err(Error::Precondition(format!("{value} lies outside [0,1]")));
        }
        Ok(RationalPoint(value))
    }

    pub fn zero() -> Self {
        RationalPoint(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalPoint(BigRational::one())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// `1 - x`
    pub fn neg(&self) -> Self {
        RationalPoint(BigRational::one() - &self.0)
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.min(other).clone()
    }

    pub fn join(&self, other: &Self) -> Self {
        self.max(other).clone()
    }

    /// `x⊙y = 0` if `x ≤ 1-y`, else `min(x,y)`.
    pub fn mul(&self, other: &Self) -> Self {
        if *self <= other.neg() {
            Self::zero()
        } else {
            self.meet(other)
        }
    }

    /// `x→y = 1` if `x ≤ y`, else `max(1-x, y)`.
    pub fn imp(&self, other: &Self) -> Self {
        if self <= other {
            Self::one()
        } else {
            self.neg().join(other)
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl std::str::FromStr for RationalPoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("not a rational: {text:?}"));
        let (num, den) = match text.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Self::from_ratio(BigRational::new(num, den))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardOp {
    Mul,
    Imp,
    Meet,
    Join,
    Neg,
}

impl std::str::FromStr for StandardOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "mul" => StandardOp::Mul,
            "imp" => StandardOp::Imp,
            "meet" => StandardOp::Meet,
            "join" => StandardOp::Join,
            "neg" => StandardOp::Neg,
            _ => return Err(Error::Malformed(format!("unknown operation {s:?}"))),
        })
    }
}

/// Evaluates one operation of the standard algebra; `y` is ignored by `Neg`.
pub fn standard_nm(x: &RationalPoint, y: &RationalPoint, op: StandardOp) -> RationalPoint {
    match op {
        StandardOp::Mul => x.mul(y),
        StandardOp::Imp => x.imp(y),
        StandardOp::Meet => x.meet(y),
        StandardOp::Join => x.join(y),
        StandardOp::Neg => x.neg(),
    }
}

/// The grid `{i/(n-1) | 0 ≤ i < n}`.
pub fn grid(n: usize) -> Result<Vec<RationalPoint>> {
    if n < 2 {
        return Err(Error::Precondition(format!("grid needs at least 2 points, got {n}")));
    }
    (0..n).map(|i| RationalPoint::new(i as i64, n as i64 - 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> RationalPoint {
        RationalPoint::new(n, d).unwrap()
    }

    #[test]
    fn spot_values() {
        assert_eq!(standard_nm(&r(1, 2), &r(1, 2), StandardOp::Mul), RationalPoint::zero());
        assert_eq!(standard_nm(&r(3, 4), &r(1, 4), StandardOp::Imp), r(1, 4));
        assert_eq!(r(2, 4).denominator(), &BigInt::from(2));
        assert!(RationalPoint::new(3, 2).is_err());
        assert!(RationalPoint::new(-1, 2).is_err());
        assert_eq!("3/6".parse::<RationalPoint>().unwrap(), r(1, 2));
    }

    fn point() -> impl Strategy<Value = RationalPoint> {
        (1i64..50).prop_flat_map(|d| (0..=d).prop_map(move |n| r(n, d)))
    }

    proptest! {
        #[test]
        fn self_implication_is_one(x in point()) {
            prop_assert_eq!(x.imp(&x), RationalPoint::one());
        }

        #[test]
        fn adjointness(x in point(), y in point(), z in point()) {
            prop_assert_eq!(x.mul(&y) <= z, x <= y.imp(&z));
        }

        #[test]
        fn involution(x in point()) {
            prop_assert_eq!(x.neg().neg(), x);
        }
    }
}

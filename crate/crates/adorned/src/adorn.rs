//! Exact rational adorns attached to atomic sides.

use num::BigRational;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// An exact rational adorn, kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Adorn(BigRational);

impl Adorn {
    /// The zero adorn, the only adorn of win/loss play.
    pub fn zero() -> Self {
        Adorn(BigRational::zero())
    }

    /// An integer adorn.
    pub fn integer(n: i64) -> Self {
        Adorn(BigRational::from_integer(BigInt::from(n)))
    }

    /// A rational adorn `numer/denom`; `None` when `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Adorn(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Add for &Adorn {
    type Output = Adorn;

    fn add(self, rhs: &Adorn) -> Adorn {
        Adorn(&self.0 + &rhs.0)
    }
}

impl Sub for &Adorn {
    type Output = Adorn;

    fn sub(self, rhs: &Adorn) -> Adorn {
        Adorn(&self.0 - &rhs.0)
    }
}

impl Neg for &Adorn {
    type Output = Adorn;

    fn neg(self) -> Adorn {
        Adorn(-&self.0)
    }
}

impl fmt::Display for Adorn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parses `integer` or `integer/positive-integer`.
impl FromStr for Adorn {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid adorn '{s}': expected integer or integer/positive-integer");
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Adorn(BigRational::from_integer(n)))
            }
            Some((numer, denom)) => {
                let n = BigInt::from_str(numer).map_err(|_| bad())?;
                let d = BigInt::from_str(denom).map_err(|_| bad())?;
                if !d.is_positive() {
                    return Err(bad());
                }
                Ok(Adorn(BigRational::new(n, d)))
            }
        }
    }
}

//! Exact coefficients.
//!
//! Every coefficient is stored as a reduced `i64` fraction; the [`Ring`] tag
//! on an element says whether fractions are admissible. Integer-ring elements
//! never carry a non-integral coefficient.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = Rational64;

/// Coefficient ring of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "int")]
    Integers,
    #[serde(rename = "rat")]
    Rationals,
}

impl Ring {
    pub fn admits(self, c: &Scalar) -> bool {
        match self {
            Ring::Integers => c.is_integer(),
            Ring::Rationals => true,
        }
    }

    pub fn check(self, c: &Scalar) -> Result<()> {
        if self.admits(c) {
            Ok(())
        } else {
            Err(Error::NonIntegral(c.to_string()))
        }
    }

    pub fn ensure_same(self, other: Ring) -> Result<Ring> {
        if self == other {
            Ok(self)
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "int"),
            Ring::Rationals => write!(f, "rat"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" | "Z" | "integers" => Ok(Ring::Integers),
            "rat" | "Q" | "rationals" => Ok(Ring::Rationals),
            other => Err(Error::InvalidArgument(format!("unknown ring `{other}`"))),
        }
    }
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// `"3"`, `"-1/2"`: the exact-string form used in JSON output.
pub fn to_exact_string(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_exact(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("bad exact coefficient `{s}`"));
    match s.split_once('/') {
        None => s.trim().parse::<i64>().map(int).map_err(|_| bad()),
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
    }
}

pub fn max_abs(cs: &[Scalar]) -> Scalar {
    cs.iter().map(|c| c.abs()).max().unwrap_or_else(zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_strings_round_trip() {
        for c in [int(0), int(-3), Scalar::new(1, 2), Scalar::new(-7, 3)] {
            assert_eq!(parse_exact(&to_exact_string(&c)).unwrap(), c);
        }
        assert!(parse_exact("1/0").is_err());
        assert!(parse_exact("x").is_err());
    }

    #[test]
    fn integer_ring_rejects_fractions() {
        assert!(Ring::Integers.check(&Scalar::new(1, 2)).is_err());
        assert!(Ring::Rationals.check(&Scalar::new(1, 2)).is_ok());
        assert!(Ring::Integers.ensure_same(Ring::Rationals).is_err());
    }
}

//! Arbitrary-precision rational numbers.
//!
//! Every payoff, probability, and discount factor in this crate is a `Rat`.
//! There is no floating-point path anywhere: equilibrium conditions are
//! equalities and weak inequalities that must be decided exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational, kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Build `num/den`. Panics if `den == 0`; reduction and sign
    /// normalization are automatic.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Rat::one();
        for _ in 0..exp {
            out *= self;
        }
        out
    }
}

/// Errors from parsing a rational out of its string form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"a"` or `"a/b"` with optional sign on either part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRatError::Empty);
        }
        let parse_int = |t: &str| -> Result<BigInt, ParseRatError> {
            t.parse::<BigInt>()
                .map_err(|_| ParseRatError::BadInteger(t.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(ParseRatError::ZeroDenominator(s.to_string()));
                }
                Ok(Rat(BigRational::new(num, den)))
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl serde::de::Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string like \"3\" or \"-1/2\" (or an integer)")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Rat, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat::int(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: serde::de::Error>(self, _: f64) -> Result<Rat, E> {
                Err(E::custom(
                    "floating point is not accepted; write rationals as strings like \"1/2\"",
                ))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

macro_rules! binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for Rat {
            type Output = Rat;
            fn $op(self, rhs: Rat) -> Rat {
                Rat((self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rat> for Rat {
            type Output = Rat;
            fn $op(self, rhs: &Rat) -> Rat {
                Rat((self.0).$op(&rhs.0))
            }
        }
        impl $Op<Rat> for &Rat {
            type Output = Rat;
            fn $op(self, rhs: Rat) -> Rat {
                Rat((&self.0).$op(rhs.0))
            }
        }
        impl $Op<&Rat> for &Rat {
            type Output = Rat;
            fn $op(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$op(&rhs.0))
            }
        }
        impl $OpAssign<Rat> for Rat {
            fn $op_assign(&mut self, rhs: Rat) {
                let lhs = std::mem::take(&mut self.0);
                self.0 = lhs.$op(rhs.0);
            }
        }
        impl $OpAssign<&Rat> for Rat {
            fn $op_assign(&mut self, rhs: &Rat) {
                let lhs = std::mem::take(&mut self.0);
                self.0 = lhs.$op(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

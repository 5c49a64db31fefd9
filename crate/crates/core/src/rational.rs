//! Exact rational arithmetic.
//!
//! Every curvature, Wasserstein value, and theorem margin in this crate is a
//! [`Rational`]: a reduced fraction of arbitrary-precision integers. There are
//! no tolerances anywhere; two values are equal iff they are the same fraction.
//!
//! The representation is `num_rational::BigRational`, which keeps fractions in
//! canonical form (gcd 1, positive denominator) through all ring operations.

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Least common multiple of the denominators of `values`, as a positive integer.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    let mut acc = BigInt::one();
    for v in values {
        acc = num_integer::lcm(acc, v.denom().clone());
    }
    acc.abs()
}

/// Exact ceiling of a rational as an integer.
pub fn ceil_int(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Exact floor of a rational as an integer.
pub fn floor_int(value: &Rational) -> BigInt {
    value.floor().to_integer()
}

/// Serde adapter serializing a rational as `{"num": "...", "den": "..."}`.
///
/// The two components are decimal strings so arbitrary-precision values
/// survive JSON round-trips without loss.
pub mod rational_serde {
    use super::Rational;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        num: String,
        den: String,
    }

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        Repr {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let repr = Repr::deserialize(de)?;
        let num = BigInt::from_str(&repr.num).map_err(D::Error::custom)?;
        let den = BigInt::from_str(&repr.den).map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}

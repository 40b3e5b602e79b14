//! Exact rational scalars and their wire formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational used for every exact spectral quantity.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Renders as `p/q`, always with an explicit denominator.
pub fn render(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// `C(n, 2)` as an exact rational.
pub fn choose2(n: usize) -> Rational {
    if n < 2 {
        Rational::zero()
    } else {
        BigRational::from_integer(BigInt::from(n * (n - 1) / 2))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: i64,
    den: i64,
}

/// `serde(with = "...")` adapter: `{"num": int, "den": int}` in lowest terms.
pub mod wire {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        let num = value
            .numer()
            .to_i64()
            .ok_or_else(|| serde::ser::Error::custom("numerator exceeds i64"))?;
        let den = value
            .denom()
            .to_i64()
            .ok_or_else(|| serde::ser::Error::custom("denominator exceeds i64"))?;
        Wire { num, den }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(rational(w.num, w.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_keeps_denominator() {
        assert_eq!(render(&integer(4)), "4/1");
        assert_eq!(render(&rational(-6, 4)), "-3/2");
    }

    #[test]
    fn choose2_small() {
        assert_eq!(choose2(0), integer(0));
        assert_eq!(choose2(1), integer(0));
        assert_eq!(choose2(5), integer(10));
    }
}

//   Copyright 2026 The recess Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! Exact rationals, mixed exact/approximate scalars, and rigorous square-root bounds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default absolute tolerance for approximate comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::invalid(format!("non-finite value {x}")))
}

/// Parses `"p/q"`, `"p"` or a decimal such as `"-1.25e3"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("cannot parse rational from {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::invalid(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let numer: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(numer);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Exact square root when both numerator and denominator are perfect squares.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Rational bounds `lo <= sqrt(q) <= hi` with `hi - lo <= 2^-bits / denom(q)`.
pub fn sqrt_bounds(q: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!q.is_negative(), "square root of a negative rational");
    if let Some(r) = sqrt_exact(q) {
        return (r.clone(), r);
    }
    let shift = BigInt::one() << bits;
    let scaled = q.numer() * q.denom() * &shift * &shift;
    let s = scaled.sqrt();
    let base = q.denom() * &shift;
    (
        Rational::new(s.clone(), base.clone()),
        Rational::new(s + 1, base),
    )
}

/// A rational lower bound for `sqrt(q)` that is strictly positive whenever `q > 0`.
pub fn sqrt_lower(q: &Rational) -> Rational {
    let mut bits = 64;
    loop {
        let (lo, _) = sqrt_bounds(q, bits);
        if lo.is_positive() || q.is_zero() || bits > 4096 {
            return lo;
        }
        bits *= 2;
    }
}

pub fn sqrt_upper(q: &Rational) -> Rational {
    sqrt_bounds(q, 64).1
}

/// Square root as a scalar: exact when possible, binary64 otherwise.
pub fn sqrt_scalar(q: &Rational) -> Scalar {
    match sqrt_exact(q) {
        Some(r) => Scalar::Exact(r),
        None => Scalar::Approx(to_f64(q).sqrt()),
    }
}

/// Nearest multiple of `1/denominator` (ties round up).
pub fn round_to_denominator(q: &Rational, denominator: &BigInt) -> Rational {
    let scaled = q * Rational::from_integer(denominator.clone());
    let half = rat(1, 2);
    let n = (scaled + half).floor().to_integer();
    Rational::new(n, denominator.clone())
}

/// A value that is either an exact rational or a binary64 approximation.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Approx(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => to_f64(q),
            Scalar::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Rational view of the value; approximations are converted bit-exactly.
    pub fn to_rational(&self) -> Rational {
        match self {
            Scalar::Exact(q) => q.clone(),
            Scalar::Approx(x) => Rational::from_float(*x).unwrap_or_else(Rational::zero),
        }
    }

    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a - b),
            _ => Scalar::Approx(self.to_f64() - other.to_f64()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Approx(self.to_f64() * other.to_f64()),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) if !b.is_zero() => Scalar::Exact(a / b),
            _ => Scalar::Approx(self.to_f64() / other.to_f64()),
        }
    }

    pub fn min(self, other: Scalar) -> Scalar {
        match (&self, &other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if b < a {
                    other
                } else {
                    self
                }
            }
            _ => {
                if other.to_f64() < self.to_f64() {
                    other
                } else {
                    self
                }
            }
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Exact(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Exact(q) => write!(f, "{}", to_f64(q)),
            Scalar::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(q) => s.serialize_str(&format_rational(q)),
            Scalar::Approx(x) => s.serialize_f64(*x),
        }
    }
}

/// A nonnegative quantity that may be unbounded.
#[derive(Clone, Debug, PartialEq)]
pub enum Extended {
    Finite(Scalar),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Extended::Finite(s) => Some(s),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Extended::Finite(s) => s.to_f64(),
            Extended::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(s) => write!(f, "{s}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => x.serialize(s),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Serde adapters that encode rationals as `"p/q"` strings.
///
/// Deserialization also accepts JSON integers and decimal strings.
pub mod serde_rational {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Text(String),
        Int(i64),
        Float(f64),
    }

    impl Raw {
        fn into_rational<E: serde::de::Error>(self) -> std::result::Result<Rational, E> {
            match self {
                Raw::Text(s) => parse_rational(&s).map_err(E::custom),
                Raw::Int(n) => Ok(int(n)),
                Raw::Float(x) => Err(E::custom(format!(
                    "{x} is a JSON float; write rationals as strings such as \"1/2\" or \"0.5\""
                ))),
            }
        }
    }

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        Raw::deserialize(d)?.into_rational()
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            v: &[Rational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            Vec::<Raw>::deserialize(d)?
                .into_iter()
                .map(Raw::into_rational)
                .collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(
            q: &Option<Rational>,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_str(&format_rational(q)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Option<Rational>, D::Error> {
            Option::<Raw>::deserialize(d)?
                .map(Raw::into_rational)
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&rat(-1, 6)), "-1/6");
    }

    #[test]
    fn sqrt_of_perfect_squares_is_exact() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_scalar(&int(25)), Scalar::Exact(int(5)));
    }

    #[test]
    fn sqrt_bounds_bracket_the_root() {
        for q in [int(2), rat(1, 3), rat(10_000_001, 7), rat(1, 1_000_000_007)] {
            let (lo, hi) = sqrt_bounds(&q, 64);
            assert!(&lo * &lo <= q);
            assert!(&hi * &hi >= q);
            assert!(lo < hi);
        }
        assert!(sqrt_lower(&rat(1, 1_000_000_007)).is_positive());
    }

    #[test]
    fn rounding_to_denominator() {
        let d = BigInt::from(1_000_000);
        assert_eq!(
            round_to_denominator(&rat(1, 3), &d),
            rat(333_333, 1_000_000)
        );
        assert_eq!(round_to_denominator(&rat(203, 2), &d), rat(203, 2));
    }
}

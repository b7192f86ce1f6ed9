//! Exact rational scalars.
//!
//! Every resistance value in the crate is a [`Rational`]: an arbitrary
//! precision fraction that is always stored in lowest terms with a positive
//! denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |m: &str| Error::Parse {
        line: 0,
        message: format!("invalid rational literal {text:?}: {m}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a rational literal or a decimal in plain or scientific notation
/// (`0.25`, `1e-6`, `2.5E3`) into its exact value.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.contains('/') {
        return parse_rational(text);
    }
    let bad = || Error::Parse {
        line: 0,
        message: format!("invalid decimal literal {text:?}"),
    };
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = text[pos + 1..].parse().map_err(|_| bad())?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
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
    let digits: BigInt = format!("{whole}{frac}0").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Always `p/q`, including integers (`4/1`), so serialized values are
/// unambiguous fractions.
pub fn to_fraction_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Decimal expansion rounded half-away-from-zero to `digits` places.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + ratio(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    let frac = frac.to_string();
    format!("{sign}{whole}.{}{frac}", "0".repeat(digits - frac.len()))
}

/// Scientific notation with `sig` significant digits, computed exactly so
/// values far below `f64` range still print correctly.
pub fn to_scientific(value: &Rational, sig: usize) -> String {
    if value.is_zero() {
        return format!("{:.*}e0", sig.saturating_sub(1), 0.0);
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let mut v = value.abs();
    let ten = int(10);
    // estimate the decimal exponent from digit counts, then correct
    let mut exp = v.numer().to_string().len() as i64 - v.denom().to_string().len() as i64;
    let pow10 = |e: i64| -> Rational {
        let p =
            Rational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
        if e >= 0 {
            p
        } else {
            p.recip()
        }
    };
    v /= pow10(exp);
    while v >= ten {
        v /= &ten;
        exp += 1;
    }
    while v < Rational::one() {
        v *= &ten;
        exp -= 1;
    }
    let digits = to_decimal(&v, sig.saturating_sub(1));
    // rounding may carry to 10.0…
    if digits.starts_with("10") {
        let v = v / ten;
        return format!(
            "{sign}{}e{}",
            to_decimal(&v, sig.saturating_sub(1)),
            exp + 1
        );
    }
    format!("{sign}{digits}e{exp}")
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Serde adapter writing a rational as a `"p/q"` string.
pub mod serde_fraction {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Rational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction_string(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for sequences of rationals as `"p/q"` strings.
pub mod serde_fraction_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[Rational],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&to_fraction_string(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

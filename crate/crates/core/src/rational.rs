//! Exact rational scalars and small parsing/formatting helpers.
//!
//! The coefficient type everywhere is [`num_rational::BigRational`], which
//! already maintains the reduced form (coprime numerator/denominator,
//! positive denominator).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parse `m`, `-m` or `m/n` into an exact rational.
pub fn parse_ratio(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |m: &str| Error::Domain(format!("invalid rational {s:?}: {m}"));
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad("expected integer numerator"))?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad("expected integer denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parse a plain decimal literal (`3.14159`, `-0.5`, `2`) into the exact
/// rational it denotes.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |m: &str| Error::Domain(format!("invalid decimal {s:?}: {m}"));
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("no digits"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad("expected only digits around the decimal point"));
    }
    let joined = format!("{int_part}{frac_part}");
    let mantissa: BigInt = if joined.is_empty() {
        BigInt::zero()
    } else {
        joined.parse().map_err(|_| bad("digit string too malformed"))?
    };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(BigInt::from(sign) * mantissa, den))
}

/// `x^k` for integer `k`; `k < 0` inverts (error on zero base).
pub fn pow_i(x: &Rational, k: i64) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::one());
    }
    if x.is_zero() && k < 0 {
        return Err(Error::DivisionByZero);
    }
    let mag = k.unsigned_abs();
    let p = pow_u(x, mag);
    if k < 0 {
        Ok(p.recip())
    } else {
        Ok(p)
    }
}

fn pow_u(x: &Rational, mut k: u64) -> Rational {
    let mut base = x.clone();
    let mut acc = Rational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Truncate `x > 0` to `k` decimal places: `floor(x * 10^k) / 10^k`.
pub fn truncate_decimals(x: &Rational, k: u32) -> Rational {
    let scale = BigInt::from(10u32).pow(k);
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.floor().to_integer(), scale)
}

/// Best-effort conversion to `f64` (numerator/denominator may exceed the
/// `f64` range individually, so divide in the float domain with exponent
/// balancing via bit lengths).
pub fn to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // fall back: scale both parts down by a common power of two
    let nbits = x.numer().bits() as i64;
    let dbits = x.denom().bits() as i64;
    let shift = (nbits.max(dbits) - 900).max(0) as u64;
    let n = x.numer() >> shift;
    let d = x.denom() >> shift;
    if d.is_zero() {
        return f64::INFINITY * sign_f(x.numer());
    }
    let nf = n.to_f64().unwrap_or(f64::INFINITY * sign_f(x.numer()));
    let df = d.to_f64().unwrap_or(f64::INFINITY);
    nf / df
}

fn sign_f(n: &BigInt) -> f64 {
    match n.sign() {
        Sign::Minus => -1.0,
        _ => 1.0,
    }
}

/// `m/n` display without reduction surprises (the value is already reduced).
pub fn ratio_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Positive gcd of two rationals in the content sense:
/// `gcd(a/b, c/d) = gcd(a,c) / lcm(b,d)`. Used to normalize polynomial
/// contents; `gcd(x, 0) = |x|`.
pub fn content_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ratio_forms() {
        assert_eq!(parse_ratio("3/4").unwrap(), Rational::new(3.into(), 4.into()));
        assert_eq!(parse_ratio("-2").unwrap(), Rational::from_integer((-2).into()));
        assert_eq!(parse_ratio(" 10/4 ").unwrap(), Rational::new(5.into(), 2.into()));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("a/b").is_err());
    }

    #[test]
    fn parse_decimal_exact() {
        let x = parse_decimal("3.25").unwrap();
        assert_eq!(x, Rational::new(13.into(), 4.into()));
        let y = parse_decimal("-0.5").unwrap();
        assert_eq!(y, Rational::new((-1).into(), 2.into()));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn truncation_floors() {
        let x = parse_decimal("3.14159").unwrap();
        assert_eq!(truncate_decimals(&x, 2), parse_decimal("3.14").unwrap());
        assert_eq!(truncate_decimals(&x, 4), parse_decimal("3.1415").unwrap());
    }

    #[test]
    fn integer_powers() {
        let x = Rational::new(2.into(), 3.into());
        assert_eq!(pow_i(&x, 2).unwrap(), Rational::new(4.into(), 9.into()));
        assert_eq!(pow_i(&x, -1).unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(pow_i(&x, 0).unwrap(), Rational::one());
        assert!(pow_i(&Rational::zero(), -2).is_err());
    }

    #[test]
    fn content_gcd_examples() {
        let g = content_gcd(&Rational::new(6.into(), 1.into()), &Rational::new(4.into(), 1.into()));
        assert_eq!(g, Rational::from_integer(2.into()));
        let g = content_gcd(&Rational::new(1.into(), 2.into()), &Rational::new(1.into(), 3.into()));
        assert_eq!(g, Rational::new(1.into(), 6.into()));
    }
}

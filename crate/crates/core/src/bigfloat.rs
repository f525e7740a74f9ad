//! Arbitrary-precision real arithmetic for the numeric shadow.
//!
//! A [`FloatCtx`] pins the working precision (decimal digits requested by the
//! caller plus 64 guard bits) and owns the constants cache of the backing
//! `astro-float` library. All transcendental steps (`ln`, `exp`, rational
//! powers) go through the context so that a probe's evaluations are uniformly
//! rounded and reproducible.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::rational::Rational;
use crate::{Error, Result};

pub type Real = BigFloat;

const GUARD_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

/// log2(10), rounded up a little.
fn digit_bits(digits: u32) -> usize {
    (digits as f64 * 3.321929).ceil() as usize
}

pub struct FloatCtx {
    digits: u32,
    bits: usize,
    cc: Consts,
}

impl FloatCtx {
    pub fn new(digits: u32) -> Self {
        let digits = digits.max(1);
        FloatCtx {
            digits,
            bits: digit_bits(digits) + GUARD_BITS,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Check that an operation produced a usable value.
    fn guard(&self, x: Real, what: &str) -> Result<Real> {
        if x.is_nan() || x.is_inf() {
            Err(Error::Evaluation(format!("{what} is not representable")))
        } else {
            Ok(x)
        }
    }

    pub fn from_f64(&self, x: f64) -> Real {
        Real::from_f64(x, self.bits)
    }

    pub fn from_i64(&self, n: i64) -> Real {
        Real::from_i64(n, self.bits)
    }

    pub fn from_rational(&mut self, q: &Rational) -> Real {
        let num = Real::parse(&q.numer().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        if q.denom().to_i64() == Some(1) {
            return num;
        }
        let den = Real::parse(&q.denom().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        num.div(&den, self.bits, RM)
    }

    pub fn parse_decimal(&mut self, s: &str) -> Result<Real> {
        let x = Real::parse(s, Radix::Dec, self.bits, RM, &mut self.cc);
        self.guard(x, "decimal literal")
    }

    pub fn add(&self, a: &Real, b: &Real) -> Real {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &Real, b: &Real) -> Real {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &Real, b: &Real) -> Real {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &Real, b: &Real) -> Real {
        a.div(b, self.bits, RM)
    }

    pub fn abs(&self, a: &Real) -> Real {
        if self.is_negative(a) {
            a.neg()
        } else {
            a.clone()
        }
    }

    pub fn is_negative(&self, a: &Real) -> bool {
        a.is_negative()
    }

    pub fn cmp(&self, a: &Real, b: &Real) -> Ordering {
        match a.cmp(b) {
            Some(c) => c.cmp(&0),
            None => Ordering::Equal, // NaN never reaches comparisons via guard()
        }
    }

    pub fn ln(&mut self, x: &Real) -> Result<Real> {
        if x.is_negative() || x.is_zero() {
            return Err(Error::Evaluation("logarithm of a non-positive value".into()));
        }
        let v = x.ln(self.bits, RM, &mut self.cc);
        self.guard(v, "logarithm")
    }

    pub fn exp(&mut self, x: &Real) -> Result<Real> {
        let v = x.exp(self.bits, RM, &mut self.cc);
        self.guard(v, "exponential")
    }

    /// `x^k` for integer `k` via repeated squaring; negative `k` inverts.
    pub fn powi(&self, x: &Real, k: i64) -> Result<Real> {
        if k == 0 {
            return Ok(self.from_i64(1));
        }
        if x.is_zero() && k < 0 {
            return Err(Error::Evaluation("zero base with negative exponent".into()));
        }
        let v = x.powi(k.unsigned_abs() as usize, self.bits, RM);
        let v = self.guard(v, "integer power")?;
        if k < 0 {
            Ok(self.from_i64(1).div(&v, self.bits, RM))
        } else {
            Ok(v)
        }
    }

    /// `x^r` for rational `r`, with `x > 0` (integer exponents skip the
    /// transcendental route).
    pub fn pow_rational(&mut self, x: &Real, r: &Rational) -> Result<Real> {
        if let Some(k) = r.to_i64() {
            if r.is_integer() {
                return self.powi(x, k);
            }
        }
        let l = self.ln(x)?;
        let rf = self.from_rational(r);
        let prod = self.mul(&l, &rf);
        self.exp(&prod)
    }

    /// Two-variable power mean of order `p` (rational) of positive values.
    pub fn power_mean(&mut self, p: &Rational, a: &Real, b: &Real) -> Result<Real> {
        if a.is_negative() || a.is_zero() || b.is_negative() || b.is_zero() {
            return Err(Error::Evaluation("power mean of non-positive values".into()));
        }
        if p.is_zero() {
            let la = self.ln(a)?;
            let lb = self.ln(b)?;
            let half = self.from_rational(&Rational::new(1.into(), 2.into()));
            let mid = self.mul(&self.add(&la, &lb), &half);
            return self.exp(&mid);
        }
        let ap = self.pow_rational(a, p)?;
        let bp = self.pow_rational(b, p)?;
        let half = self.from_rational(&Rational::new(1.into(), 2.into()));
        let avg = self.mul(&self.add(&ap, &bp), &half);
        self.pow_rational(&avg, &p.recip())
    }

    /// `10^e` as a positive real (for tolerances like `10^-(digits-10)`).
    pub fn ten_pow(&mut self, e: i64) -> Real {
        let ten = self.from_i64(10);
        self.powi(&ten, e).expect("powers of ten are representable")
    }

    /// Relative difference `|a - b| / max(|a|, |b|)`; zero when both vanish.
    pub fn rel_diff(&mut self, a: &Real, b: &Real) -> Real {
        let d = self.abs(&self.sub(a, b));
        let aa = self.abs(a);
        let ab = self.abs(b);
        let scale = if self.cmp(&aa, &ab) == Ordering::Less { ab } else { aa };
        if scale.is_zero() {
            return self.from_i64(0);
        }
        self.div(&d, &scale)
    }

    pub fn to_f64(&mut self, x: &Real) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        match x.format(Radix::Dec, RM, &mut self.cc) {
            Ok(s) => s.parse::<f64>().unwrap_or(f64::NAN),
            Err(_) => f64::NAN,
        }
    }

    /// Decimal string at full working precision (deterministic).
    pub fn to_decimal_string(&mut self, x: &Real) -> String {
        x.format(Radix::Dec, RM, &mut self.cc)
            .unwrap_or_else(|_| "NaN".to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::parse_decimal;

    fn assert_close_digits(ctx: &mut FloatCtx, a: &Real, fixture: &str, digits10: i64) {
        let f = ctx.parse_decimal(fixture).unwrap();
        let rd = ctx.rel_diff(a, &f);
        let tol = ctx.ten_pow(-digits10);
        assert!(
            ctx.cmp(&rd, &tol) == Ordering::Less,
            "relative difference {} exceeds 1e-{digits10}",
            ctx.to_decimal_string(&rd)
        );
    }

    #[test]
    fn rational_round_trip() {
        let mut ctx = FloatCtx::new(50);
        let q = Rational::new(355.into(), 113.into());
        let x = ctx.from_rational(&q);
        let back = ctx.to_f64(&x);
        assert!((back - 355.0 / 113.0).abs() < 1e-15);
    }

    #[test]
    fn exp_ln_match_fixtures() {
        let mut ctx = FloatCtx::new(50);
        let theta = parse_decimal(fixtures::PI_TRUNC_50).unwrap();
        let t = ctx.from_rational(&theta);
        // exp(1/theta) against the 60-digit fixture
        let inv = ctx.div(&ctx.from_i64(1), &t);
        let e = ctx.exp(&inv).unwrap();
        assert_close_digits(&mut ctx, &e, fixtures::EXP_INV_PI_TRUNC, 48);
        // theta^2
        let sq = ctx.powi(&t, 2).unwrap();
        assert_close_digits(&mut ctx, &sq, fixtures::PI_TRUNC_SQUARED, 48);
        // ln(exp(x)) = x
        let lx = ctx.ln(&e).unwrap();
        let rd = ctx.rel_diff(&lx, &inv);
        let tol = ctx.ten_pow(-48);
        assert_eq!(ctx.cmp(&rd, &tol), Ordering::Less);
    }

    #[test]
    fn rational_powers() {
        let mut ctx = FloatCtx::new(50);
        let x = ctx.from_i64(8);
        let r = Rational::new(2.into(), 3.into());
        let v = ctx.pow_rational(&x, &r).unwrap();
        let four = ctx.from_i64(4);
        let rd = ctx.rel_diff(&v, &four);
        let tol = ctx.ten_pow(-45);
        assert_eq!(ctx.cmp(&rd, &tol), Ordering::Less);
        // negative rational exponent
        let w = ctx.pow_rational(&x, &(-r)).unwrap();
        let quarter = ctx.div(&ctx.from_i64(1), &four);
        let rd = ctx.rel_diff(&w, &quarter);
        assert_eq!(ctx.cmp(&rd, &tol), Ordering::Less);
    }

    #[test]
    fn power_mean_special_cases() {
        let mut ctx = FloatCtx::new(50);
        let a = ctx.from_i64(2);
        let b = ctx.from_i64(8);
        let g = ctx
            .power_mean(&Rational::zero(), &a, &b)
            .unwrap();
        let four = ctx.from_i64(4);
        let rd = ctx.rel_diff(&g, &four);
        let tol = ctx.ten_pow(-45);
        assert_eq!(ctx.cmp(&rd, &tol), Ordering::Less);
        let m1 = ctx
            .power_mean(&Rational::from_integer(1.into()), &a, &b)
            .unwrap();
        let five = ctx.from_i64(5);
        let rd = ctx.rel_diff(&m1, &five);
        assert_eq!(ctx.cmp(&rd, &tol), Ordering::Less);
    }

    #[test]
    fn ln_rejects_nonpositive() {
        let mut ctx = FloatCtx::new(30);
        let neg = ctx.from_i64(-3);
        assert!(ctx.ln(&neg).is_err());
        let zero = ctx.from_i64(0);
        assert!(ctx.ln(&zero).is_err());
    }
}

//! Exact elements of the rational function field `Q(t1, ..., tn)`.
//!
//! Every [`FormalElement`] is kept in canonical form:
//!
//! * numerator and denominator share no polynomial factor;
//! * all coefficients are integers with joint content 1;
//! * the denominator's leading coefficient (graded lex) is positive;
//! * the zero element is `0/1`.
//!
//! Canonical forms make structural equality coincide with field equality
//! (cross-multiplication), which is what lets every derivation identity in
//! the crate be checked exactly.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::poly::{gcd, Polynomial};
use crate::rational::{content_gcd, pow_i, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalElement {
    num: Polynomial,
    den: Polynomial,
}

impl FormalElement {
    /// Canonicalize `num/den`; errors when `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::scale_normalized(num, den))
    }

    /// Joint scaling of an already factor-coprime pair.
    fn scale_normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = content_gcd(&num.content(), &den.content());
        if den.leading_coefficient().is_negative() {
            c = -c;
        }
        let s = c.recip();
        FormalElement {
            num: num.mul_scalar(&s),
            den: den.mul_scalar(&s),
        }
    }

    pub fn zero() -> Self {
        FormalElement {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        FormalElement {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::scale_normalized(Polynomial::constant(q), Polynomial::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::scale_normalized(p, Polynomial::one())
    }

    /// The generator `t{index+1}`.
    pub fn var(index: usize) -> Self {
        FormalElement {
            num: Polynomial::var(index),
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(q)` when the element is the constant `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// Highest generator index in use, plus one.
    pub fn width(&self) -> usize {
        self.num.width().max(self.den.width())
    }

    pub fn neg(&self) -> Self {
        FormalElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&other.num, &other.den);
        let g = gcd(b, d);
        if g.is_constant() {
            let num = a.mul(d).add(&c.mul(b));
            let den = b.mul(d);
            if num.is_zero() {
                return Self::zero();
            }
            // b, d factor-coprime to their numerators and to each other:
            // the sum needs no further cancellation.
            return Self::scale_normalized(num, den);
        }
        let b1 = b.exact_div(&g).expect("gcd divides");
        let d1 = d.exact_div(&g).expect("gcd divides");
        let t = a.mul(&d1).add(&c.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let h = gcd(&t, &g);
        let (t, g_red) = if h.is_constant() {
            (t, g)
        } else {
            (
                t.exact_div(&h).expect("gcd divides"),
                g.exact_div(&h).expect("gcd divides"),
            )
        };
        let den = g_red.mul(&b1).mul(&d1);
        Self::scale_normalized(t, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let reduce = |p: &Polynomial, g: &Polynomial| {
            if g.is_constant() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = reduce(&self.num, &g1).mul(&reduce(&other.num, &g2));
        let den = reduce(&self.den, &g2).mul(&reduce(&other.den, &g1));
        Self::scale_normalized(num, den)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&FormalElement::scale_normalized(
            other.den.clone(),
            other.num.clone(),
        )))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scale_normalized(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow_i(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            if k < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::zero());
        }
        let e = k.unsigned_abs() as u32;
        let (num, den) = if k > 0 {
            (self.num.pow(e), self.den.pow(e))
        } else {
            (self.den.pow(e), self.num.pow(e))
        };
        // powers of a coprime pair stay coprime; only the sign and scale
        // conventions need refreshing
        Ok(Self::scale_normalized(num, den))
    }

    /// Exact formal partial derivative by the quotient rule.
    pub fn derivative(&self, var: usize) -> Self {
        let num = self
            .num
            .derivative(var)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(var)));
        let den = self.den.mul(&self.den);
        Self::new(num, den).expect("denominator square is nonzero")
    }

    /// Exact rational value at the assignment.
    pub fn eval_exact(&self, va: &NumericAssignment) -> Result<Rational> {
        if self.width() > va.values().len() {
            return Err(Error::Evaluation(format!(
                "assignment provides {} generator value(s) but the expression uses t{}",
                va.values().len(),
                self.width()
            )));
        }
        let num_v = self.num.eval_rational(va.values());
        let den_v = self.den.eval_rational(va.values());
        if den_v.is_zero() {
            return Err(Error::Evaluation(
                "denominator vanishes at the assignment".into(),
            ));
        }
        if !num_v.is_zero() {
            // reject denominators within 10^(4 - precision) of the numerator scale
            let threshold = num_v.abs() * pow_i(&Rational::from_integer(10.into()), 4 - va.precision() as i64)?;
            if den_v.abs() < threshold {
                return Err(Error::Evaluation(format!(
                    "denominator is numerically zero at the assignment (|den| < 1e{} * |num|)",
                    4 - va.precision() as i64
                )));
            }
        }
        Ok(num_v / den_v)
    }

    /// Double-precision shadow of [`Self::eval_exact`].
    pub fn eval_f64(&self, va: &NumericAssignment) -> Result<f64> {
        Ok(crate::rational::to_f64(&self.eval_exact(va)?))
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Positive numeric values for the generators plus a working precision in
/// decimal digits. The values are exact rationals (decimal truncations of
/// whatever constants the caller chose); transcendence lives only in the
/// interpretation, never in the arithmetic.
#[derive(Clone, Debug)]
pub struct NumericAssignment {
    values: Vec<Rational>,
    precision: u32,
}

impl NumericAssignment {
    pub fn new(values: Vec<Rational>, precision: u32) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("assignment needs at least one generator value".into()));
        }
        if precision == 0 {
            return Err(Error::Domain("precision must be at least 1 digit".into()));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::Domain(format!(
                    "assignment value for t{} must be strictly positive",
                    i + 1
                )));
            }
        }
        Ok(NumericAssignment { values, precision })
    }

    /// Default assignment: `t1` is the 50-digit decimal truncation of pi and
    /// the working precision is 50 digits.
    pub fn default_pi() -> Self {
        let theta = crate::rational::parse_decimal(crate::fixtures::PI_TRUNC_50)
            .expect("fixture parses");
        NumericAssignment {
            values: vec![theta],
            precision: 50,
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(mut self, precision: u32) -> Self {
        self.precision = precision.max(1);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;

    fn elem(s: &str) -> FormalElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn cancellation_on_construction() {
        // (t^2-1)/(t-1) = t+1
        assert_eq!(elem("(t1^2-1)/(t1-1)"), elem("t1+1"));
    }

    #[test]
    fn field_identities() {
        let theta = FormalElement::var(0);
        let one_minus = FormalElement::one().sub(&theta);
        assert!(theta.add(&one_minus).is_one());
        assert!(theta.mul(&theta.recip().unwrap()).is_one());
        let num = elem("t1^2-1");
        let den = elem("t1+1");
        assert_eq!(num.div(&den).unwrap(), elem("t1-1"));
    }

    #[test]
    fn zero_handling() {
        let z = FormalElement::zero();
        assert!(z.is_zero());
        assert!(z.recip().is_err());
        assert!(FormalElement::var(0).div(&z).is_err());
        assert_eq!(z.add(&z), z);
    }

    #[test]
    fn joint_scaling_pins_the_representative() {
        let e = elem("(3*t1)/(2)");
        assert_eq!(e.numerator().to_string(), "3*t1");
        assert_eq!(e.denominator().to_string(), "2");
        // same value written redundantly
        assert_eq!(elem("(6*t1)/(4)"), e);
        // denominator sign convention
        let f = elem("t1/(-1+t1)");
        assert!(f.denominator().leading_coefficient().is_positive());
    }

    #[test]
    fn integer_powers_stay_canonical() {
        let e = elem("(t1+1)/(2*t1)");
        let sq = e.pow_i(2).unwrap();
        assert_eq!(sq, e.mul(&e));
        let inv = e.pow_i(-1).unwrap();
        assert!(e.mul(&inv).is_one());
        assert!(FormalElement::zero().pow_i(-1).is_err());
    }

    #[test]
    fn quotient_rule_derivative() {
        // d/dt [ t/(1+t) ] = 1/(1+t)^2
        let e = elem("t1/(1+t1)");
        assert_eq!(e.derivative(0), elem("1/((1+t1)^2)"));
        // constants have zero derivative
        assert!(elem("5").derivative(0).is_zero());
    }

    #[test]
    fn evaluation_and_guards() {
        let va = NumericAssignment::new(vec![Rational::from_integer(3.into())], 50).unwrap();
        assert_eq!(
            elem("t1+1").eval_exact(&va).unwrap(),
            Rational::from_integer(4.into())
        );
        assert_eq!(
            elem("(t1^2-1)/(t1-1)").eval_exact(&va).unwrap(),
            Rational::from_integer(4.into())
        );
        // denominator vanishing at the assignment
        let bad = elem("1/(t1-3)");
        assert!(matches!(bad.eval_exact(&va), Err(Error::Evaluation(_))));
        // near-zero guard: den differs from 3 by 1e-60, precision 50
        let near = elem("1/(t1 - 3 - 1/1000000000000000000000000000000000000000000000000000000000000)");
        let res = near.eval_exact(&va);
        assert!(matches!(res, Err(Error::Evaluation(_))));
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "t1+1",
            "(3*t1^2 - 1/2)/(t1+7)",
            "(t1*t2 - t2^2)/(t1 + t2 + 1)",
            "0",
            "-t1",
        ] {
            let e = elem(s);
            assert_eq!(parse_element(&e.to_string()).unwrap(), e);
        }
    }
}

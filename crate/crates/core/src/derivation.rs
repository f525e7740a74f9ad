//! Computable derivations on `Q(t1, ..., tn)`.
//!
//! A derivation is an additive map with `d(xy) = x d(y) + y d(x)`; on the
//! rational function field it is determined by the values `d(ti) = c_i`, and
//! acts as `d(r) = sum_i (dr/dti) * c_i`. Keeping the `c_i` rational keeps
//! every identity exactly checkable: additivity, the Leibniz rule, vanishing
//! on the rationals, and additivity of the induced logarithmic map
//! `ell(x) = d(x)/x` under multiplication.

use num_traits::Zero;

use crate::field::FormalElement;
use crate::rational::{ratio_string, Rational};
use crate::{Error, Result};

/// The values `d(ti) = c_i`. The all-zero spec is the zero derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpec {
    coeffs: Vec<Rational>,
}

impl DerivationSpec {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a derivation spec needs at least one generator value".into(),
            ));
        }
        Ok(DerivationSpec { coeffs })
    }

    pub fn zero(generators: usize) -> Self {
        DerivationSpec {
            coeffs: vec![Rational::zero(); generators.max(1)],
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn generators(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// `c1,c2,...` echo for reports.
    pub fn describe(&self) -> String {
        self.coeffs
            .iter()
            .map(ratio_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Exact value of the derivation on a field element.
pub fn derive(a: &FormalElement, d: &DerivationSpec) -> Result<FormalElement> {
    if a.width() > d.generators() {
        return Err(Error::Domain(format!(
            "derivation spec covers {} generator(s) but the expression uses t{}",
            d.generators(),
            a.width()
        )));
    }
    let mut acc = FormalElement::zero();
    for (i, c) in d.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = a.derivative(i).mul(&FormalElement::from_rational(c.clone()));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The induced logarithmic map `ell(a) = d(a)/a`; satisfies
/// `ell(ab) = ell(a) + ell(b)` exactly.
pub fn logarithmic_part(a: &FormalElement, d: &DerivationSpec) -> Result<FormalElement> {
    if a.is_zero() {
        return Err(Error::Domain(
            "the logarithmic map is undefined at the zero element".into(),
        ));
    }
    derive(a, d)?.div(a)
}

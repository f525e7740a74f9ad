//! Two-variable and weighted power (Hölder) means in double precision.
//!
//! `holder_mean(p, x, y)` is `((x^p + y^p)/2)^(1/p)` for `p != 0` and
//! `sqrt(x*y)` for `p = 0`. Evaluation factors out the dominant argument and
//! works with `expm1`/`ln_1p` so the result stays finite and accurate for
//! `|p|` up to several hundred over the ratio's log. `p = 0` is matched
//! exactly, never approximated by a small nonzero `p`.

use crate::{Error, Result};

fn check_parameter(p: f64) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::Domain(format!(
            "mean parameter must be finite, got {p}"
        )));
    }
    Ok(())
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Domain(format!(
            "{name} must be a positive finite real, got {v}"
        )));
    }
    Ok(())
}

/// Two-variable power mean of order `p`.
pub fn holder_mean(p: f64, x: f64, y: f64) -> Result<f64> {
    check_parameter(p)?;
    check_positive("x", x)?;
    check_positive("y", y)?;
    if x == y {
        return Ok(x);
    }
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    if p == 0.0 {
        let prod = lo * hi;
        let g = if prod.is_normal() {
            prod.sqrt()
        } else {
            (0.5 * (lo.ln() + hi.ln())).exp()
        };
        return Ok(g.clamp(lo, hi));
    }
    // factor out hi for p > 0, lo for p < 0; either way p * ratio_log <= 0
    let (base, ratio_log) = if p > 0.0 {
        (hi, (lo / hi).ln())
    } else {
        (lo, (hi / lo).ln())
    };
    let u = 0.5 * (p * ratio_log).exp_m1();
    let h = base * (u.ln_1p() / p).exp();
    Ok(h.clamp(lo, hi))
}

/// Strictly positive weights summing to 1 attached to strictly positive
/// values.
#[derive(Clone, Debug)]
pub struct WeightVector {
    entries: Vec<(f64, f64)>,
}

impl WeightVector {
    pub fn new(entries: Vec<(f64, f64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Weights("weight vector is empty".into()));
        }
        let mut sum = 0.0;
        for &(w, v) in &entries {
            if !(w.is_finite() && w > 0.0 && w <= 1.0) {
                return Err(Error::Weights(format!("weight {w} outside ]0, 1]")));
            }
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Weights(format!("value {v} is not positive")));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::Weights(format!("weights sum to {sum}, not 1")));
        }
        Ok(WeightVector { entries })
    }

    pub fn entries(&self) -> &[(f64, f64)] {
        &self.entries
    }
}

/// Weighted power mean: `(sum w_i v_i^p)^(1/p)` for `p != 0`, the weighted
/// geometric mean `prod v_i^(w_i)` for `p = 0`.
pub fn weighted_holder_mean(p: f64, w: &WeightVector) -> Result<f64> {
    check_parameter(p)?;
    let entries = w.entries();
    let lo = entries.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    let hi = entries.iter().map(|e| e.1).fold(0.0_f64, f64::max);
    if p == 0.0 {
        let s: f64 = entries.iter().map(|&(w, v)| w * v.ln()).sum();
        return Ok(s.exp().clamp(lo, hi));
    }
    let base = if p > 0.0 { hi } else { lo };
    let log_base = base.ln();
    let s: f64 = entries
        .iter()
        .map(|&(w, v)| w * (p * (v.ln() - log_base)).exp())
        .sum();
    Ok((base * (s.ln() / p).exp()).clamp(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn named_special_cases() {
        assert_eq!(holder_mean(1.0, 1.0, 3.0).unwrap(), 2.0);
        assert_eq!(holder_mean(0.0, 2.0, 8.0).unwrap(), 4.0);
        assert_eq!(holder_mean(2.0, 1.0, 7.0).unwrap(), 5.0);
        assert_eq!(holder_mean(-1.0, 2.0, 6.0).unwrap(), 3.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(holder_mean(f64::INFINITY, 1.0, 2.0).is_err());
        assert!(holder_mean(f64::NAN, 1.0, 2.0).is_err());
        assert!(holder_mean(1.0, 0.0, 2.0).is_err());
        assert!(holder_mean(1.0, -1.0, 2.0).is_err());
    }

    #[test]
    fn no_overflow_in_log_domain() {
        // p * ln(ratio) large in both directions
        let h = holder_mean(600.0, 1e-3, 1e3).unwrap();
        assert!(h.is_finite() && h <= 1e3 && h >= 1e-3);
        let h = holder_mean(-600.0, 1e-3, 1e3).unwrap();
        assert!(h.is_finite() && h <= 1e3 && h >= 1e-3);
        let g = holder_mean(0.0, 1e-300, 1e300).unwrap();
        assert!((g - 1.0).abs() < 1e-9);
    }

    #[test]
    fn weighted_cases() {
        let w = WeightVector::new(vec![(0.5, 2.0), (0.5, 4.0)]).unwrap();
        assert_eq!(weighted_holder_mean(1.0, &w).unwrap(), 3.0);
        let w = WeightVector::new(vec![(0.5, 2.0), (0.5, 8.0)]).unwrap();
        assert!((weighted_holder_mean(0.0, &w).unwrap() - 4.0).abs() < 1e-12);
        let w = WeightVector::new(vec![(1.0 / 3.0, 8.0), (2.0 / 3.0, 1.0)]).unwrap();
        assert!((weighted_holder_mean(0.0, &w).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn weight_validation() {
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![(0.6, 1.0), (0.6, 2.0)]).is_err());
        assert!(WeightVector::new(vec![(-0.5, 1.0), (1.5, 2.0)]).is_err());
        assert!(WeightVector::new(vec![(0.5, 0.0), (0.5, 2.0)]).is_err());
    }

    proptest! {
        #[test]
        fn internality_and_symmetry(
            p in -64.0..64.0f64,
            x in 1e-3..1e3f64,
            y in 1e-3..1e3f64,
        ) {
            let h = holder_mean(p, x, y).unwrap();
            prop_assert!(h >= x.min(y) && h <= x.max(y));
            prop_assert_eq!(h, holder_mean(p, y, x).unwrap());
        }

        #[test]
        fn monotone_in_p(
            p in -64.0..64.0f64,
            dq in 0.0..32.0f64,
            x in 1e-3..1e3f64,
            y in 1e-3..1e3f64,
        ) {
            let a = holder_mean(p, x, y).unwrap();
            let b = holder_mean(p + dq, x, y).unwrap();
            prop_assert!(a <= b + 1e-12 * x.max(y));
        }

        #[test]
        fn homogeneous(
            p in -32.0..32.0f64,
            x in 0.01..100.0f64,
            y in 0.01..100.0f64,
            t in 0.01..100.0f64,
        ) {
            let lhs = holder_mean(p, t * x, t * y).unwrap();
            let rhs = t * holder_mean(p, x, y).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }

        #[test]
        fn geometric_limit(
            sign in prop::bool::ANY,
            x in 0.1..10.0f64,
            y in 0.1..10.0f64,
        ) {
            let p = if sign { 1e-8 } else { -1e-8 };
            let h = holder_mean(p, x, y).unwrap();
            let g = (x * y).sqrt();
            prop_assert!((h - g).abs() <= 1e-6 * g);
        }

        #[test]
        fn weighted_am_gm_chain(
            w1 in 0.05..0.95f64,
            v1 in 0.01..100.0f64,
            v2 in 0.01..100.0f64,
            r in 0.01..16.0f64,
        ) {
            let w = WeightVector::new(vec![(w1, v1), (1.0 - w1, v2)]).unwrap();
            let g = weighted_holder_mean(0.0, &w).unwrap();
            let h = weighted_holder_mean(r, &w).unwrap();
            prop_assert!(g <= h + 1e-12 * h);
        }
    }
}

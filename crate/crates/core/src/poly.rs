//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically with `t1 > t2 > ...`:
//! higher total degree wins, ties break on the exponent of `t1`, then `t2`,
//! and so on. Every canonical form in the crate (leading coefficients, sign
//! conventions, printing) is pinned to this order.
//!
//! Gcds are computed with a primitive pseudo-remainder sequence, recursing on
//! the number of variables. Polynomial division is exact division only; the
//! field layer never needs general remainders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{content_gcd, Rational};

/// Exponent vector with trailing zeros trimmed, so `t1^2` compares equal no
/// matter how many generators the ambient ring has.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, e: u32) -> Self {
        if e == 0 {
            return Self::unit();
        }
        let mut exps = vec![0; index + 1];
        exps[index] = e;
        Monomial { exps }
    }

    fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps.get(index).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Number of exponent slots in use (highest active variable index + 1).
    pub fn width(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            exps.push(self.exponent(i) + other.exponent(i));
        }
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().enumerate().all(|(i, &e)| e <= other.exponent(i))
    }

    /// `self / other` when divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (i, &e) in other.exps.iter().enumerate() {
            exps[i] -= e;
        }
        Some(Monomial::new(exps))
    }

    fn componentwise_min(&self, other: &Self) -> Self {
        let n = self.exps.len().min(other.exps.len());
        Monomial::new((0..n).map(|i| self.exps[i].min(other.exps[i])).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.exps.len().max(other.exps.len());
        for i in 0..n {
            match self.exponent(i).cmp(&other.exponent(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Q[t1, ..., tn]`, stored as monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Polynomial { terms }
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_unit)
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Greatest monomial and its coefficient under graded lex.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Highest variable index appearing, plus one. Zero for constants.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect();
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, or `None` when
    /// the division leaves a remainder. Leading-term elimination terminates
    /// because the leading monomial strictly decreases.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (dm, dc) = divisor.leading()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot.insert_add(qm, qc);
        }
        Some(quot)
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u32> = (0..m.width()).map(|i| m.exponent(i)).collect();
            exps[var] -= 1;
            out.insert_add(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact value at a rational point; `values` must cover every variable.
    pub fn eval_rational(&self, values: &[Rational]) -> Rational {
        debug_assert!(self.width() <= values.len());
        let mut powers: Vec<Vec<Rational>> = values
            .iter()
            .map(|v| vec![Rational::one(), v.clone()])
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..m.width() {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e {
                    let next = &table[table.len() - 1] * &values[i];
                    table.push(next);
                }
                term *= &table[e];
            }
            acc += term;
        }
        acc
    }

    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = crate::rational::to_f64(c);
            for i in 0..m.width() {
                let e = m.exponent(i);
                if e > 0 {
                    term *= values[i].powi(e as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Positive rational `g` with `self / g` having coprime integer
    /// numerators and denominator 1 in every coefficient; zero for the zero
    /// polynomial.
    pub fn content(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.terms.values() {
            acc = content_gcd(&acc, c);
        }
        acc
    }

    /// Scale to integer coefficients with content 1 and positive leading
    /// coefficient.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = self.content();
        if self.leading_coefficient().is_negative() {
            c = -c;
        }
        self.mul_scalar(&c.recip())
    }

    /// Split off the largest monomial dividing every term:
    /// `self = m * rest` with `rest` not divisible by any variable.
    pub fn split_monomial_content(&self) -> (Monomial, Polynomial) {
        let mut iter = self.terms.keys();
        let first = match iter.next() {
            None => return (Monomial::unit(), Polynomial::zero()),
            Some(m) => m.clone(),
        };
        let content = iter.fold(first, |acc, m| acc.componentwise_min(m));
        if content.is_unit() {
            return (content, self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.div(&content).expect("content divides"), c.clone()))
            .collect();
        (content, Polynomial { terms })
    }

    fn active_vars(&self) -> Vec<usize> {
        let w = self.width();
        (0..w).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Coefficient vector of `self` viewed as univariate in `var`; index `k`
    /// holds the coefficient polynomial of `var^k` (free of `var`).
    fn to_univariate(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![Polynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut exps: Vec<u32> = (0..m.width()).map(|i| m.exponent(i)).collect();
            if var < exps.len() {
                exps[var] = 0;
            }
            coeffs[e].insert_add(Monomial::new(exps), c.clone());
        }
        coeffs
    }

    fn from_univariate(coeffs: &[Polynomial], var: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let m = Monomial::var_pow(var, k as u32);
            for (mm, cc) in &c.terms {
                out.insert_add(mm.mul(&m), cc.clone());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// gcd machinery
// ---------------------------------------------------------------------------

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().map_or(false, Polynomial::is_zero) {
        v.pop();
    }
}

/// Exact pseudo-remainder of the univariate views:
/// `lc(b)^(deg a - deg b + 1) * a mod b`. The exact scaling matters: the
/// subresultant recurrences below divide by known factors, which is only
/// valid for this normalization.
fn pseudo_rem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lb = b.last().expect("divisor nonzero");
    let mut scale = (a.len() - 1) - db + 1;
    let mut r = a.to_vec();
    loop {
        trim(&mut r);
        if r.len() < b.len() {
            break;
        }
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        scale -= 1;
        for i in 0..=db {
            r[dr - db + i] = r[dr - db + i].sub(&lr.mul(&b[i]));
        }
    }
    if scale > 0 && !r.is_empty() {
        let f = lb.pow(scale as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

fn content_of_list(coeffs: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for c in coeffs {
        acc = gcd(&acc, c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn div_list(coeffs: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                Polynomial::zero()
            } else {
                c.exact_div(d).expect("content divides coefficient")
            }
        })
        .collect()
}

/// Univariate gcd degree over exact rationals, used by the specialization
/// shortcut. Plain Euclid with trimming; inputs come from evaluating the
/// multivariate coefficients at a point.
fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    let trim_r = |v: &mut Vec<Rational>| {
        while v.last().map_or(false, Rational::is_zero) {
            v.pop();
        }
    };
    trim_r(&mut a);
    trim_r(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let da = a.len() - 1;
            let q = a.last().unwrap() / &lb;
            for i in 0..=db {
                let t = &b[i] * &q;
                a[da - db + i] -= t;
            }
            trim_r(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        trim_r(&mut b);
    }
    a.len().saturating_sub(1)
}

/// Sound one-sided coprimality test: evaluate all variables except `var` at
/// a fixed point and take the univariate gcd of the images. When neither
/// leading coefficient vanishes, the image gcd degree bounds the true gcd
/// degree from above, so a constant image gcd proves the primitive parts are
/// coprime. Returns `false` when inconclusive.
fn coprime_by_specialization(a: &[Polynomial], b: &[Polynomial], var: usize) -> bool {
    let width = a
        .iter()
        .chain(b.iter())
        .map(Polynomial::width)
        .max()
        .unwrap_or(0)
        .max(var + 1);
    // distinct small primes keep accidental collisions rare
    const POINTS: [i32; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let values: Vec<Rational> = (0..width)
        .map(|i| Rational::from_integer(BigInt::from(POINTS[i % POINTS.len()] + (i / POINTS.len()) as i32 * 23)))
        .collect();
    let eval_list = |l: &[Polynomial]| -> Option<Vec<Rational>> {
        let imgs: Vec<Rational> = l.iter().map(|p| p.eval_rational(&values)).collect();
        if imgs.last().map_or(true, Rational::is_zero) {
            None // leading coefficient vanished: inconclusive
        } else {
            Some(imgs)
        }
    };
    match (eval_list(a), eval_list(b)) {
        (Some(fa), Some(fb)) => univariate_gcd_degree(fa, fb) == 0,
        _ => false,
    }
}

/// Gcd normalized to integer coefficients with content 1 and positive leading
/// coefficient; the inputs' scalar content is dropped from nonconstant gcds
/// (the field layer pins scale separately). A constant gcd carries the
/// rational content `gcd(content(a), content(b))`. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    let (ma, pa) = a.split_monomial_content();
    let (mb, pb) = b.split_monomial_content();
    let mg = ma.componentwise_min(&mb);
    let core = gcd_core(&pa, &pb);
    if mg.is_unit() {
        core
    } else {
        core.mul_term(&mg, &Rational::one())
    }
}

fn gcd_core(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if let (Some(ca), Some(cb)) = (a.as_constant(), b.as_constant()) {
        return Polynomial::constant(content_gcd(&ca, &cb));
    }
    if a.is_constant() {
        return Polynomial::constant(content_gcd(&a.as_constant().unwrap(), &b.content()));
    }
    if b.is_constant() {
        return Polynomial::constant(content_gcd(&a.content(), &b.as_constant().unwrap()));
    }

    let va = a.active_vars();
    let vb = b.active_vars();
    let common: Vec<usize> = va.iter().copied().filter(|v| vb.contains(v)).collect();
    if common.is_empty() {
        // any common divisor only involves shared variables
        return Polynomial::constant(content_gcd(&a.content(), &b.content()));
    }
    let var = common
        .iter()
        .copied()
        .min_by_key(|&v| a.degree_in(v).min(b.degree_in(v)))
        .unwrap();

    let ua = a.to_univariate(var);
    let ub = b.to_univariate(var);
    let ca = content_of_list(&ua);
    let cb = content_of_list(&ub);
    let g0 = gcd(&ca, &cb);
    let mut p = div_list(&ua, &ca);
    let mut q = div_list(&ub, &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }

    let multivariate = p.iter().chain(q.iter()).any(|c| !c.is_constant());
    if multivariate && coprime_by_specialization(&p, &q, var) {
        return g0.primitive_normalized();
    }

    // subresultant pseudo-remainder sequence: after each prem, the remainder
    // is divided by the known factor g * h^d, which keeps coefficient growth
    // polynomial without per-step content computations
    let mut g = Polynomial::one();
    let mut h = Polynomial::one();
    let pp_gcd = loop {
        let d = p.len() - q.len();
        let r = pseudo_rem(&p, &q);
        if r.is_empty() {
            let raw = Polynomial::from_univariate(&q, var);
            // one content extraction at the end instead of one per step
            let c = content_of_list(&q);
            break raw.exact_div(&c).expect("content divides");
        }
        if r.len() == 1 {
            break Polynomial::one();
        }
        p = q;
        let divisor = g.mul(&h.pow(d as u32));
        q = div_list(&r, &divisor);
        g = p.last().expect("nonzero").clone();
        h = if d == 0 {
            h
        } else {
            let gd = g.pow(d as u32);
            if d == 1 {
                gd
            } else {
                gd.exact_div(&h.pow(d as u32 - 1)).expect("subresultant division")
            }
        };
    };
    g0.mul(&pp_gcd).primitive_normalized()
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, lead_coeff: &Rational) -> fmt::Result {
    let c = lead_coeff.abs();
    if m.is_unit() {
        return write!(f, "{}", crate::rational::ratio_string(&c));
    }
    let mut wrote = false;
    if !c.is_one() {
        write!(f, "{}", crate::rational::ratio_string(&c))?;
        wrote = true;
    }
    for i in 0..m.width() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "t{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote = true;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, m, c)?;
        }
        Ok(())
    }
}

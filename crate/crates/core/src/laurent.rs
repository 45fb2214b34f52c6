//! Exact Laurent polynomials with integer coefficients.
//!
//! Terms are kept in a graded-lexicographic order on exponent vectors (total
//! degree first, then lexicographic with `x1` most significant). The order is
//! translation invariant, so after clearing the monomial content it is a
//! monomial order on ordinary polynomials and drives [`LaurentPoly::div_exact`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("not divisible: the quotient is not a Laurent polynomial")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution image for x{0} is zero")]
    ZeroImage(usize),
    #[error("expected {expected} substitution images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
}

/// Exponent vector in graded-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `nvars` variables over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging equal
    /// exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Single term with coefficient one.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let s = Monomial(shift.to_vec());
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.add(&s), v.clone())).collect(),
        }
    }

    /// Non-negative power.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Inverse of a monomial `c x^e` with `c = ±1`; `None` otherwise.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !c.abs().is_one() {
            return None;
        }
        let e: Vec<i32> = m.0.iter().map(|x| -x).collect();
        Some(Self::monomial(self.nvars, e, c.clone()))
    }

    /// Componentwise minimum exponent over all terms.
    fn min_exponents(&self) -> Vec<i32> {
        let mut mins = vec![i32::MAX; self.nvars];
        for m in self.terms.keys() {
            for (k, &e) in m.0.iter().enumerate() {
                mins[k] = mins[k].min(e);
            }
        }
        mins
    }

    /// Exact quotient `q` with `self = divisor * q`, if one exists among
    /// Laurent polynomials.
    ///
    /// Both sides are first stripped of their monomial content; the remaining
    /// ordinary polynomials are divided with the graded-lex order. A leading
    /// term that the divisor's leading term does not divide (or an integer
    /// coefficient that does not divide) certifies non-divisibility.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let alpha = self.min_exponents();
        let beta = divisor.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&alpha));
        let b = divisor.shift(&neg(&beta));
        let (lm_b, lc_b) = {
            let (m, c) = b.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut quotient = Self::zero(self.nvars);
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_b.divides(lm_r) {
                return Err(LaurentError::NotDivisible);
            }
            let (qc, r) = lc_r.div_rem(&lc_b);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let qm = lm_r.sub(&lm_b);
            for (m, c) in &b.terms {
                rem.add_term(m.add(&qm), -(c * &qc));
            }
            quotient.add_term(qm, qc);
        }
        let offset: Vec<i32> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&offset))
    }

    /// Ring-homomorphism evaluation `x_i -> images[i]`.
    pub fn substitute(&self, images: &[FractionExpr]) -> Result<FractionExpr, LaurentError> {
        if images.len() != self.nvars {
            return Err(LaurentError::ImageCount { expected: self.nvars, got: images.len() });
        }
        let out_vars = images.first().map(|f| f.num.nvars).unwrap_or(self.nvars);
        for (i, img) in images.iter().enumerate() {
            if img.num.is_zero() {
                return Err(LaurentError::ZeroImage(i));
            }
            if img.num.nvars != out_vars || img.den.nvars != out_vars {
                return Err(LaurentError::ArityMismatch(out_vars, img.num.nvars));
            }
        }
        if self.is_zero() {
            return Ok(FractionExpr::from_poly(LaurentPoly::zero(out_vars)));
        }
        // Common denominator prod den_i^{P_i} num_i^{N_i}, where P_i and N_i
        // bound the positive and negative exponents of x_i.
        let mut pos = vec![0i32; self.nvars];
        let mut negs = vec![0i32; self.nvars];
        for m in self.terms.keys() {
            for (k, &e) in m.0.iter().enumerate() {
                pos[k] = pos[k].max(e);
                negs[k] = negs[k].max(-e);
            }
        }
        let mut num_pows: Vec<PowerCache> = images.iter().map(|f| PowerCache::new(&f.num)).collect();
        let mut den_pows: Vec<PowerCache> = images.iter().map(|f| PowerCache::new(&f.den)).collect();
        let mut denominator = LaurentPoly::one(out_vars);
        for k in 0..self.nvars {
            denominator = &denominator * den_pows[k].get(pos[k] as usize);
            denominator = &denominator * num_pows[k].get(negs[k] as usize);
        }
        let mut numerator = LaurentPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(out_vars, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                t = &t * num_pows[k].get((negs[k] + e) as usize);
                t = &t * den_pows[k].get((pos[k] - e) as usize);
            }
            numerator = &numerator + &t;
        }
        Ok(FractionExpr { num: numerator, den: denominator })
    }

    /// Canonical text form, highest term first.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// The same element written as `numerator/denominator` with a monomial
    /// denominator: `(x1^2 + x2^2 + x3^2)/(x1*x3)`.
    pub fn to_fraction_string(&self) -> String {
        let mut den = vec![0i32; self.nvars];
        for m in self.terms.keys() {
            for (d, &e) in den.iter_mut().zip(&m.0) {
                *d = (*d).max(-e);
            }
        }
        if den.iter().all(|&d| d == 0) {
            return self.to_string();
        }
        let num = self.shift(&den);
        let den = LaurentPoly::monomial(self.nvars, den, BigInt::one());
        let num_s = if num.len() > 1 { format!("({num})") } else { num.to_string() };
        let den_s = if den.terms.keys().next().is_some_and(|m| m.0.iter().filter(|&&e| e != 0).count() > 1 || m.0.iter().any(|&e| e > 1)) {
            format!("({den})")
        } else {
            den.to_string()
        };
        format!("{num_s}/{den_s}")
    }

    /// Parses the canonical text form (and mild variations of it).
    pub fn parse(s: &str, nvars: usize) -> Result<Self, LaurentError> {
        parse_poly(s, nvars)
    }
}

struct PowerCache {
    pows: Vec<LaurentPoly>,
}

impl PowerCache {
    fn new(base: &LaurentPoly) -> Self {
        PowerCache { pows: vec![LaurentPoly::one(base.nvars), base.clone()] }
    }

    fn get(&mut self, k: usize) -> &LaurentPoly {
        while self.pows.len() <= k {
            let next = &self.pows[self.pows.len() - 1] * &self.pows[1];
            self.pows.push(next);
        }
        &self.pows[k]
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("Laurent arity mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("Laurent arity mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("Laurent arity mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self)
    }
}

fn parse_poly(s: &str, nvars: usize) -> Result<LaurentPoly, LaurentError> {
    let err = || LaurentError::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    // split into signed terms; a sign right after '^' belongs to an exponent
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                pieces.push((negative, std::mem::take(&mut cur)));
            } else if prev.is_some() && prev != Some('+') && prev != Some('-') {
                return Err(err());
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err());
    }
    pieces.push((negative, cur));

    let mut p = LaurentPoly::zero(nvars);
    for (neg, body) in pieces {
        let mut coef = BigInt::one();
        let mut exps = vec![0i32; nvars];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err());
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, e) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<i32>().map_err(|_| err())?),
                    None => (rest, 1),
                };
                let i: usize = idx.parse().map_err(|_| err())?;
                if i == 0 || i > nvars {
                    return Err(err());
                }
                exps[i - 1] += e;
            } else {
                let c = BigInt::from_str(factor).map_err(|_| err())?;
                coef *= c;
            }
        }
        if neg {
            coef = -coef;
        }
        p.add_term(Monomial(exps), coef);
    }
    Ok(p)
}

/// Quotient of two Laurent polynomials, kept unreduced until
/// [`FractionExpr::normalize`].
#[derive(Clone, Debug)]
pub struct FractionExpr {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl FractionExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        num.check_arity(&den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(FractionExpr { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.nvars);
        FractionExpr { num: p, den }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn mul(&self, other: &Self) -> Self {
        FractionExpr { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return FractionExpr { num: &self.num + &other.num, den: self.den.clone() };
        }
        FractionExpr {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        if self.num.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(FractionExpr { num: self.den.clone(), den: self.num.clone() })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The Laurent polynomial this fraction equals, if there is one.
    pub fn normalize(&self) -> Result<LaurentPoly, LaurentError> {
        self.num.div_exact(&self.den)
    }
}

impl fmt::Display for FractionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn add_examples() {
        let x1 = LaurentPoly::var(3, 0);
        assert!((&x1 + &-&x1).is_zero());
        assert_eq!(&x1 + &LaurentPoly::var(3, 1), p("x1 + x2", 3));
        let s = &p("x1^2 + x2^2", 3) + &p("x3^2", 3);
        assert_eq!(s, p("x1^2 + x2^2 + x3^2", 3));
    }

    #[test]
    fn fraction_form() {
        let v = p("x1*x3^-1 + x1^-1*x2^2*x3^-1 + x1^-1*x3", 3);
        assert_eq!(v.to_fraction_string(), "(x1^2 + x2^2 + x3^2)/(x1*x3)");
        assert_eq!(p("x1^-1*x2 + x1^-1", 2).to_fraction_string(), "(x2 + 1)/x1");
        assert_eq!(p("x1^-2", 2).to_fraction_string(), "1/(x1^2)");
        assert_eq!(p("x1 + 2", 2).to_fraction_string(), "x1 + 2");
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::var(2, 0);
        let b = LaurentPoly::var(3, 0);
        assert_eq!(a.try_add(&b), Err(LaurentError::ArityMismatch(2, 3)));
        assert_eq!(a.try_mul(&b), Err(LaurentError::ArityMismatch(2, 3)));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x1", 2) * &p("x1^-1", 2), LaurentPoly::one(2));
        assert_eq!(&p("x2 + 1", 2) * &p("x1^-1", 2), p("x1^-1*x2 + x1^-1", 2));
        let lhs = &p("x1*x3^-1", 3) * &p("1 + x1^-2*x2^2 + x1^-2*x3^2", 3);
        assert_eq!(lhs, p("x1*x3^-1 + x1^-1*x2^2*x3^-1 + x1^-1*x3", 3));
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p("x2 + 1", 2).div_exact(&p("x2 + 1", 2)).unwrap(), LaurentPoly::one(2));
        assert_eq!(p("x2^2 - 1", 2).div_exact(&p("x2 - 1", 2)).unwrap(), p("x2 + 1", 2));
        assert_eq!(
            p("x1^2 + x2^2 + x3^2", 3).div_exact(&p("x1*x2", 3)),
            Ok(p("x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1*x3^2", 3))
        );
        assert_eq!(p("x1 + 1", 1).div_exact(&p("x1 + 2", 1)), Err(LaurentError::NotDivisible));
        assert_eq!(p("x1", 1).div_exact(&LaurentPoly::zero(1)), Err(LaurentError::DivisionByZero));
        assert_eq!(p("3*x1", 1).div_exact(&p("2", 1)), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn not_divisible_by_binomial() {
        // 1/(x2+1) is not Laurent
        let num = p("x1*x2 + x1 + 1", 2);
        assert_eq!(num.div_exact(&p("x2 + 1", 2)), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn substitute_examples() {
        // x1 -> (x2'+1)/x1', x2 -> x2'
        let img1 = FractionExpr::new(p("x2 + 1", 2), p("x1", 2)).unwrap();
        let img2 = FractionExpr::from_poly(p("x2", 2));
        let images = vec![img1, img2];
        let r = p("x1", 2).substitute(&images).unwrap();
        assert!(r.equals(&FractionExpr::new(p("x2 + 1", 2), p("x1", 2)).unwrap()));
        let r = LaurentPoly::one(2).substitute(&images).unwrap();
        assert!(r.equals(&FractionExpr::from_poly(LaurentPoly::one(2))));
        let r = p("x1^-1*x2", 2).substitute(&images).unwrap();
        assert!(r.equals(&FractionExpr::new(p("x1*x2", 2), p("x2 + 1", 2)).unwrap()));
        let zero = vec![FractionExpr::from_poly(LaurentPoly::zero(2)), images[1].clone()];
        assert_eq!(p("x1", 2).substitute(&zero).unwrap_err(), LaurentError::ZeroImage(0));
    }

    #[test]
    fn canonical_text_round_trip() {
        for s in ["x1^2*x3^-1 + 2*x2", "0", "-x1 + 3", "-1 + x1^-1*x2 - 7*x3^-2", "5"] {
            let poly = p(s, 3);
            assert_eq!(poly.to_string(), s);
        }
        assert!(LaurentPoly::parse("x4", 3).is_err());
        assert!(LaurentPoly::parse("x1 +", 3).is_err());
        assert!(LaurentPoly::parse("", 3).is_err());
    }

    #[test]
    fn order_is_graded() {
        let poly = p("1 + x1^-1 + x2^2 + x1*x2", 2);
        let lead = poly.leading_term().unwrap().0;
        assert_eq!(lead.0, vec![1, 1]);
        assert_eq!(poly.to_string(), "x1*x2 + x2^2 + 1 + x1^-1");
    }
}

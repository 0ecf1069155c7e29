//! Sparse exact multivariate polynomials.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors. Rust's `Vec` ordering
//! compares the first component first, so the map order is exactly pure lex
//! with t1 > t2 > ... > tn and the leading term is the last entry.

mod gcd;
pub mod symmetric;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{CoefField, FieldElem, FieldError};

pub use symmetric::{
    elementary_symmetric, expand_root_product, symmetric_reduce, RootProductReport, SymReduction,
};

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(CoefField, CoefField),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    field: CoefField,
    terms: BTreeMap<Exponents, FieldElem>,
}

impl MPoly {
    pub fn zero(nvars: usize, field: CoefField) -> Self {
        MPoly {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, field: CoefField) -> Self {
        Self::constant(nvars, field.one())
    }

    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        let mut p = Self::zero(nvars, c.field());
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn from_i64(nvars: usize, field: CoefField, c: i64) -> Self {
        Self::constant(nvars, field.from_i64(c))
    }

    /// The variable t_{i+1} (0-based index `i`).
    pub fn var(nvars: usize, field: CoefField, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    pub fn monomial(field: CoefField, exps: Exponents, coeff: FieldElem) -> Self {
        let mut p = Self::zero(exps.len(), field);
        p.add_term(exps, coeff);
        p
    }

    pub fn from_terms(
        nvars: usize,
        field: CoefField,
        terms: impl IntoIterator<Item = (Exponents, FieldElem)>,
    ) -> Self {
        let mut p = Self::zero(nvars, field);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> CoefField {
        self.field
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> FieldElem {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_value().is_one()
    }

    /// Value of a constant polynomial (zero for the zero polynomial).
    pub fn constant_value(&self) -> FieldElem {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Adds `c * t^exps` in place, dropping a coefficient that cancels to zero.
    pub fn add_term(&mut self, exps: Exponents, c: FieldElem) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        let mut out = Self::zero(self.nvars, self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.field);
        }
        MPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `c * t^shift`.
    pub fn mul_term(&self, shift: &[u32], c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.field);
        }
        MPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    /// `self -= c * t^shift * d`, in place.
    fn sub_scaled(&mut self, d: &MPoly, shift: &[u32], c: &FieldElem) {
        for (e, x) in &d.terms {
            let ee: Exponents = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(ee, -(x * c));
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars, self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scalar multiple with lex-leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.checked_mul(&x.pow(k as u64))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Polynomial composition: substitutes `images[i]` for t_{i+1}.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target_vars = images.first().map_or(0, |p| p.nvars);
        for im in images {
            if im.nvars != target_vars {
                return Err(PolyError::ArityMismatch {
                    expected: target_vars,
                    found: im.nvars,
                });
            }
            if im.field != self.field {
                return Err(PolyError::FieldMismatch(self.field, im.field));
            }
        }
        let mut cache: Vec<Vec<MPoly>> = images
            .iter()
            .map(|im| vec![MPoly::one(target_vars, self.field), im.clone()])
            .collect();
        let mut out = MPoly::zero(target_vars, self.field);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Renames variables: t_{i+1} becomes t_{perm[i]+1}.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MPoly::zero(self.nvars, self.field);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() || d.nvars != self.nvars || d.field != self.field {
            return None;
        }
        let (dexp, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let dinv = dc.inv().ok()?;
        if d.is_constant() {
            return Some(self.scale(&dinv));
        }
        let mut r = self.clone();
        let mut q = MPoly::zero(self.nvars, self.field);
        while let Some((e, c)) = r.leading_term() {
            if e.iter().zip(&dexp).any(|(a, b)| a < b) {
                return None;
            }
            let shift: Exponents = e.iter().zip(&dexp).map(|(a, b)| a - b).collect();
            let qc = c * &dinv;
            r.sub_scaled(d, &shift, &qc);
            q.add_term(shift, qc);
        }
        Some(q)
    }

    /// Coefficients with respect to one variable: degree -> coefficient free of it.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            let k = std::mem::replace(&mut ee[var], 0);
            out.entry(k)
                .or_insert_with(|| MPoly::zero(self.nvars, self.field))
                .terms
                .insert(ee, c.clone());
        }
        out
    }

    /// Embeds into a ring with `extra` more variables appended after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> MPoly {
        MPoly {
            nvars: self.nvars + extra,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ee = e.clone();
                    ee.extend(std::iter::repeat(0).take(extra));
                    (ee, c.clone())
                })
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Divides by the monomial `t^exps`; panics if some term is not divisible.
    pub fn div_monomial(&self, exps: &[u32]) -> MPoly {
        MPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exps).map(|(a, b)| a.checked_sub(*b).expect("monomial divides")).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn gcd(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.compatible(other)?;
        Ok(gcd::gcd(self, other))
    }

    /// Renders with a custom variable prefix, e.g. `e` for `e1^2 - 2*e2`.
    pub fn to_string_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            let mono = monomial_text(e, prefix);
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mono,
                (false, false) => format!("{abs}*{mono}"),
            };
            match (k, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

fn monomial_text(e: &[u32], prefix: &str) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("{prefix}{}", i + 1)
            } else {
                format!("{prefix}{}^{k}", i + 1)
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("t"))
    }
}

impl<'a> Add for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: Self) -> MPoly {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Sub for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: Self) -> MPoly {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Mul for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: Self) -> MPoly {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Neg for &'a MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn p(s: &str, n: usize) -> MPoly {
        parse_poly(s, n, CoefField::Rationals).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = p("t1", 2);
        let y = p("t2", 2);
        assert_eq!(&(&x + &y) * &(&x - &y), p("t1^2 - t2^2", 2));
    }

    #[test]
    fn additive_identity() {
        let f = p("t1^2*t2 - 3/2*t3", 3);
        assert_eq!(&f + &MPoly::zero(3, CoefField::Rationals), f);
    }

    #[test]
    fn char_two_binomial() {
        let f2 = CoefField::prime(2).unwrap();
        let x1 = &MPoly::var(1, f2, 0) + &MPoly::one(1, f2);
        let sq = &x1 * &x1;
        assert_eq!(sq, parse_poly("t1^2 + 1", 1, f2).unwrap());
    }

    #[test]
    fn mismatches() {
        let a = p("t1", 2);
        let b = p("t1", 3);
        assert!(matches!(a.checked_add(&b), Err(PolyError::ArityMismatch { .. })));
        let c = parse_poly("t1", 2, CoefField::prime(5).unwrap()).unwrap();
        assert!(matches!(a.checked_mul(&c), Err(PolyError::FieldMismatch(..))));
    }

    #[test]
    fn evaluation() {
        let q = CoefField::Rationals;
        let e2 = elementary_symmetric(2, 3, q);
        assert_eq!(e2.eval(&[q.one(), q.one(), q.one()]).unwrap(), q.from_i64(3));
        assert!(p("t1^2 - t2^2", 2).eval(&[q.from_i64(2), q.from_i64(2)]).unwrap().is_zero());
        let half = q.from_ratio(&1.into(), &2.into()).unwrap();
        let third = q.from_ratio(&1.into(), &3.into()).unwrap();
        assert_eq!(
            p("t1*t2", 2).eval(&[half, third]).unwrap(),
            q.from_ratio(&1.into(), &6.into()).unwrap()
        );
        assert!(matches!(p("t1", 2).eval(&[q.one()]), Err(PolyError::ArityMismatch { .. })));
    }

    #[test]
    fn lex_leading_term() {
        let f = p("t2^5 + t1*t3", 3);
        assert_eq!(f.leading_term().unwrap().0, &vec![1, 0, 1]);
        assert_eq!(f.to_string(), "t1*t3 + t2^5");
    }

    #[test]
    fn display_round_trip() {
        for s in ["t1^2*t2 - 3/2*t3", "-t1 + 5", "0", "7", "-2/3*t1*t2^4 + t3"] {
            let f = p(s, 3);
            assert_eq!(p(&f.to_string(), 3), f);
        }
        assert_eq!(p("  t1^2 *t2-3/2 * t3 ", 3).to_string(), "t1^2*t2 - 3/2*t3");
    }

    #[test]
    fn exact_division() {
        let a = p("t1^2 - t2^2", 2);
        assert_eq!(a.div_exact(&p("t1 - t2", 2)), Some(p("t1 + t2", 2)));
        assert_eq!(a.div_exact(&p("t1 + 2", 2)), None);
    }

    #[test]
    fn composition() {
        let f = p("t1^2 + t2", 2);
        let imgs = [p("t1 + t2", 2), p("3", 2)];
        assert_eq!(f.compose(&imgs).unwrap(), p("t1^2 + 2*t1*t2 + t2^2 + 3", 2));
    }

    #[test]
    fn permuting_variables() {
        let f = p("t1^2*t2 + t3", 3);
        // t1 -> t2, t2 -> t3, t3 -> t1
        assert_eq!(f.permute_vars(&[1, 2, 0]), p("t2^2*t3 + t1", 3));
    }
}

//! Elements of K(t1, ..., tn) as canonical reduced fractions.
//!
//! Canonical form: `gcd(num, den) = 1` and the lex-leading coefficient of
//! `den` is 1. Two rational functions are equal iff their canonical forms are
//! structurally equal, so `PartialEq`/`Hash`/`Ord` are derived.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{ArithOp, CoefField, FieldElem, FieldError};
use crate::poly::{MPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution pole: the denominator vanishes identically under the substitution")]
    SubstitutionPole,
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, RatFuncError> {
        if num.nvars() != den.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: num.nvars(),
                found: den.nvars(),
            }
            .into());
        }
        if num.field() != den.field() {
            return Err(PolyError::FieldMismatch(num.field(), den.field()).into());
        }
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Normalizes the denominator of an already coprime pair.
    pub(crate) fn from_coprime(num: MPoly, den: MPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            let (n, f) = (den.nvars(), den.field());
            return RatFunc {
                num,
                den: MPoly::one(n, f),
            };
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let one = MPoly::one(p.nvars(), p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(nvars: usize, field: CoefField) -> Self {
        Self::from_poly(MPoly::zero(nvars, field))
    }

    pub fn one(nvars: usize, field: CoefField) -> Self {
        Self::from_poly(MPoly::one(nvars, field))
    }

    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        Self::from_poly(MPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, field: CoefField, i: usize) -> Self {
        Self::from_poly(MPoly::var(nvars, field, i))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn field(&self) -> CoefField {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RatFuncError> {
        if self.den == other.den {
            return Self::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        if self.den.is_one() || other.den.is_one() {
            // p/1 + a/b = (p*b + a)/b stays coprime
            let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
            return Ok(Self::from_coprime(num, self.den.checked_mul(&other.den)?));
        }
        let g = self.den.gcd(&other.den)?;
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.checked_mul(&d1)?.checked_add(&other.num.checked_mul(&b1)?)?;
        let den = b1.checked_mul(&other.den)?;
        // gcd(num, den) divides g when both inputs are reduced
        let h = num.gcd(&g)?;
        if h.is_one() {
            Ok(Self::from_coprime(num, den))
        } else {
            Ok(Self::from_coprime(
                num.div_exact(&h).expect("divides"),
                den.div_exact(&h).expect("divides"),
            ))
        }
    }

    pub fn checked_neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RatFuncError> {
        self.checked_add(&other.checked_neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RatFuncError> {
        if self.is_zero() || other.is_zero() {
            self.num.checked_mul(&other.num)?;
            return Ok(Self::zero(self.nvars(), self.field()));
        }
        let g1 = self.num.gcd(&other.den)?;
        let g2 = other.num.gcd(&self.den)?;
        let a = self.num.div_exact(&g1).expect("divides");
        let d = other.den.div_exact(&g1).expect("divides");
        let c = other.num.div_exact(&g2).expect("divides");
        let b = self.den.div_exact(&g2).expect("divides");
        Ok(Self::from_coprime(a.checked_mul(&c)?, b.checked_mul(&d)?))
    }

    pub fn inv(&self) -> Result<Self, RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, RatFuncError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn arith(&self, op: ArithOp, other: &Self) -> Result<Self, RatFuncError> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars(), self.field());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self, RatFuncError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Substitutes `images[i]` for t_{i+1} and returns the canonical result.
    ///
    /// Fails with `SubstitutionPole` only when the substituted denominator is
    /// identically zero.
    pub fn substitute(&self, images: &[RatFunc]) -> Result<Self, RatFuncError> {
        if images.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: images.len(),
            }
            .into());
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let (m, field) = (first.nvars(), first.field());
        if images.iter().any(|im| im.nvars() != m) {
            return Err(PolyError::ArityMismatch {
                expected: m,
                found: images.iter().map(|im| im.nvars()).find(|&k| k != m).unwrap_or(m),
            }
            .into());
        }
        if images.iter().any(|im| im.field() != field) || field != self.field() {
            return Err(PolyError::FieldMismatch(self.field(), field).into());
        }
        if images.iter().all(|im| im.is_polynomial()) {
            let nums: Vec<MPoly> = images.iter().map(|im| im.num.clone()).collect();
            let a = self.num.compose(&nums)?;
            let b = self.den.compose(&nums)?;
            if b.is_zero() {
                return Err(RatFuncError::SubstitutionPole);
            }
            return Self::new(a, b);
        }

        let n = self.nvars();
        let dn: Vec<u32> = (0..n).map(|i| self.num.degree_in(i)).collect();
        let dd: Vec<u32> = (0..n).map(|i| self.den.degree_in(i)).collect();
        let mut pows = PowerCache::new(images, m, field);
        let a = pows.homogenized(&self.num, &dn);
        let b = pows.homogenized(&self.den, &dd);
        if b.is_zero() {
            return Err(RatFuncError::SubstitutionPole);
        }
        let mut num = a;
        let mut den = b;
        for i in 0..n {
            let common = dn[i].min(dd[i]);
            let to_num = dd[i] - common;
            let to_den = dn[i] - common;
            if to_num > 0 {
                num = &num * &pows.den_pow(i, to_num);
            }
            if to_den > 0 {
                den = &den * &pows.den_pow(i, to_den);
            }
        }
        Self::new(num, den)
    }

    /// Applies a map that is an automorphism of the polynomial ring
    /// (so coprimality is preserved and no gcd is needed).
    pub(crate) fn apply_polynomial_automorphism(&self, images: &[MPoly]) -> Result<Self, RatFuncError> {
        let a = self.num.compose(images)?;
        let b = self.den.compose(images)?;
        if b.is_zero() {
            return Err(RatFuncError::SubstitutionPole);
        }
        Ok(Self::from_coprime(a, b))
    }

    /// Renames t_{i+1} to t_{perm[i]+1}.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Self::from_coprime(self.num.permute_vars(perm), self.den.permute_vars(perm))
    }

    /// Applies t_i -> coeffs[i] * t^exps[i] where `exps` is a unimodular
    /// integer matrix (an automorphism of the Laurent polynomial ring). Only a
    /// monomial common factor can appear, so no polynomial gcd is needed.
    pub(crate) fn apply_laurent_map(&self, coeffs: &[FieldElem], exps: &[Vec<i64>]) -> Self {
        let n = self.nvars();
        let field = self.field();
        let map_terms = |p: &MPoly| -> Vec<(Vec<i64>, FieldElem)> {
            p.terms()
                .map(|(e, c)| {
                    let mut out = vec![0i64; n];
                    let mut coeff = c.clone();
                    for (i, &k) in e.iter().enumerate() {
                        if k == 0 {
                            continue;
                        }
                        coeff = &coeff * &coeffs[i].pow(k as u64);
                        for (o, &x) in out.iter_mut().zip(&exps[i]) {
                            *o += x * k as i64;
                        }
                    }
                    (out, coeff)
                })
                .collect()
        };
        let nt = map_terms(&self.num);
        let dt = map_terms(&self.den);
        let mut shift = vec![i64::MAX; n];
        for (e, _) in nt.iter().chain(&dt) {
            for (s, &x) in shift.iter_mut().zip(e) {
                *s = (*s).min(x);
            }
        }
        let build = |ts: Vec<(Vec<i64>, FieldElem)>| {
            MPoly::from_terms(
                n,
                field,
                ts.into_iter()
                    .map(|(e, c)| (e.iter().zip(&shift).map(|(x, s)| (x - s) as u32).collect(), c)),
            )
        };
        let mut num = build(nt);
        let mut den = build(dt);
        if !num.is_zero() {
            let mn = num.min_exponents();
            let md = den.min_exponents();
            let common: Vec<u32> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
            if common.iter().any(|&k| k > 0) {
                num = num.div_monomial(&common);
                den = den.div_monomial(&common);
            }
        } else {
            den = MPoly::one(n, field);
        }
        Self::from_coprime(num, den)
    }

    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem, RatFuncError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(RatFuncError::PoleAtPoint);
        }
        let n = self.num.eval(point)?;
        Ok(n.checked_div(&d)?)
    }

    pub fn to_string_with(&self, prefix: &str) -> String {
        let num = self.num.to_string_with(prefix);
        if self.den.is_one() {
            return num;
        }
        let den = self.den.to_string_with(prefix);
        let num = if self.num.num_terms() > 1 { format!("({num})") } else { num };
        let den = if self.den.num_terms() > 1 || den.contains('*') || den.contains('/') {
            format!("({den})")
        } else {
            den
        };
        format!("{num}/{den}")
    }
}

/// Powers of numerators and denominators of substitution images.
struct PowerCache<'a> {
    images: &'a [RatFunc],
    nums: Vec<Vec<MPoly>>,
    dens: Vec<Vec<MPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [RatFunc], m: usize, field: CoefField) -> Self {
        let one = MPoly::one(m, field);
        PowerCache {
            images,
            nums: images.iter().map(|_| vec![one.clone()]).collect(),
            dens: images.iter().map(|_| vec![one.clone()]).collect(),
        }
    }

    fn num_pow(&mut self, i: usize, k: u32) -> MPoly {
        while self.nums[i].len() <= k as usize {
            let next = &self.nums[i][self.nums[i].len() - 1] * &self.images[i].num;
            self.nums[i].push(next);
        }
        self.nums[i][k as usize].clone()
    }

    fn den_pow(&mut self, i: usize, k: u32) -> MPoly {
        while self.dens[i].len() <= k as usize {
            let next = &self.dens[i][self.dens[i].len() - 1] * &self.images[i].den;
            self.dens[i].push(next);
        }
        self.dens[i][k as usize].clone()
    }

    /// `sum c_a prod p_i^a_i q_i^(deg_i - a_i)`: `f(images) * prod q_i^deg_i`.
    fn homogenized(&mut self, f: &MPoly, degs: &[u32]) -> MPoly {
        let m = self.nums[0][0].nvars();
        let field = self.nums[0][0].field();
        let mut out = MPoly::zero(m, field);
        for (e, c) in f.terms() {
            let mut t = MPoly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &self.num_pow(i, k);
                }
                if degs[i] > k {
                    t = &t * &self.den_pow(i, degs[i] - k);
                }
            }
            out = &out + &t;
        }
        out
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("t"))
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_poly, parse_ratfunc};
    use proptest::prelude::*;

    const Q: CoefField = CoefField::Rationals;

    fn r(s: &str, n: usize) -> RatFunc {
        parse_ratfunc(s, n, Q).unwrap()
    }

    fn p(s: &str, n: usize) -> MPoly {
        parse_poly(s, n, Q).unwrap()
    }

    #[test]
    fn make_cancels() {
        let f = RatFunc::new(p("t1^2 - t2^2", 2), p("t1 - t2", 2)).unwrap();
        assert_eq!(f, RatFunc::from_poly(p("t1 + t2", 2)));
        assert!(f.is_polynomial());
        let g = p("3*t1*t2 + 1", 2);
        assert_eq!(RatFunc::new(g.clone(), MPoly::one(2, Q)).unwrap(), RatFunc::from_poly(g));
        assert_eq!(
            RatFunc::new(p("t1", 2), MPoly::zero(2, Q)),
            Err(RatFuncError::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFunc::new(p("t1", 2), p("2*t2 + 4", 2)).unwrap();
        assert!(f.den().leading_coeff().is_one());
        assert_eq!(f.num(), &p("1/2*t1", 2));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r("1/t1", 2).checked_add(&r("1/t2", 2)).unwrap(), r("(t1 + t2)/(t1*t2)", 2));
        let f = r("(t1 + 1)/(t2 - 3)", 2);
        assert!(f.checked_div(&f).unwrap().is_one());
        assert!(r("t1", 2).checked_mul(&r("1/t1", 2)).unwrap().is_one());
        assert_eq!(f.checked_div(&RatFunc::zero(2, Q)), Err(RatFuncError::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        let f = r("t1/(t2 + t3)", 3);
        let imgs = [r("t2", 3), r("t3", 3), r("t1", 3)];
        assert_eq!(f.substitute(&imgs).unwrap(), r("t2/(t3 + t1)", 3));
        let id: Vec<RatFunc> = (0..3).map(|i| RatFunc::var(3, Q, i)).collect();
        assert_eq!(f.substitute(&id).unwrap(), f);
        let g = r("1/(t1 - t2)", 2);
        assert_eq!(
            g.substitute(&[r("t1", 2), r("t1", 2)]),
            Err(RatFuncError::SubstitutionPole)
        );
    }

    #[test]
    fn substitution_with_rational_images() {
        // (t^2 + 1)/t under t -> 1/t is fixed
        let f = r("(t1^2 + 1)/t1", 1);
        assert_eq!(f.substitute(&[r("1/t1", 1)]).unwrap(), f);
        let g = r("t1/t2", 2);
        assert_eq!(g.substitute(&[r("1/t1", 2), r("1/t2", 2)]).unwrap(), r("t2/t1", 2));
    }

    #[test]
    fn laurent_fast_path_agrees() {
        let f = r("(t1^2*t2 + 3)/(t1 - t2^2)", 2);
        let exps = vec![vec![1, 1], vec![0, -1]];
        let coeffs = vec![Q.from_i64(-1), Q.from_i64(2)];
        let images = [r("-t1*t2", 2), r("2/t2", 2)];
        assert_eq!(f.apply_laurent_map(&coeffs, &exps), f.substitute(&images).unwrap());
    }

    #[test]
    fn evaluation() {
        let f = r("(t1 + t2)/(t1*t2)", 2);
        assert_eq!(f.eval(&[Q.from_i64(1), Q.from_i64(2)]).unwrap(), Q.from_ratio(&3.into(), &2.into()).unwrap());
        assert_eq!(r("1/t1", 2).eval(&[Q.zero(), Q.one()]), Err(RatFuncError::PoleAtPoint));
        let e = r("(t1*t2 + t1*t3 + t2*t3)/(t1 + t2 + t3)", 3);
        assert!(e.eval(&[Q.one(), Q.one(), Q.one()]).unwrap().is_one());
    }

    #[test]
    fn display() {
        assert_eq!(r("t2/(t3 + t1)", 3).to_string(), "t2/(t1 + t3)");
        assert_eq!(r("1/(2*t1)", 1).to_string(), "1/2/t1");
        assert_eq!(r("(t1^2 + 1)/t1", 1).to_string(), "(t1^2 + 1)/t1");
        assert_eq!(r("t1/(t2*t3)", 3).to_string(), "t1/(t2*t3)");
    }

    fn small_poly(n: usize) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..4), 1..4)
            .prop_map(move |ts| MPoly::from_terms(n, Q, ts.into_iter().map(|(e, c)| (e, Q.from_i64(c)))))
    }

    fn small_rf(n: usize) -> impl Strategy<Value = RatFunc> {
        (small_poly(n), small_poly(n)).prop_filter_map("nonzero den", |(a, b)| RatFunc::new(a, b).ok())
    }

    fn perm3() -> impl Strategy<Value = Vec<usize>> {
        Just(vec![0usize, 1, 2]).prop_shuffle()
    }

    fn images_of(perm: &[usize]) -> Vec<RatFunc> {
        perm.iter().map(|&j| RatFunc::var(perm.len(), Q, j)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn canonical_form_stable(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let lhs = RatFunc::new(&a * &c, &b * &c).unwrap();
            prop_assert_eq!(lhs, RatFunc::new(a, b).unwrap());
        }

        #[test]
        fn substitution_is_functorial(f in small_rf(3), s in perm3(), t in perm3()) {
            let sigma = images_of(&s);
            let tau = images_of(&t);
            let lhs = f.substitute(&sigma).unwrap().substitute(&tau).unwrap();
            // images of tau∘sigma: sigma's images pushed through tau
            let composed: Vec<RatFunc> = sigma.iter().map(|g| g.substitute(&tau).unwrap()).collect();
            prop_assert_eq!(lhs, f.substitute(&composed).unwrap());
        }

        #[test]
        fn substitution_is_homomorphism(f in small_rf(2), g in small_rf(2)) {
            let imgs = vec![r("t2 + 1", 2), r("t1/t2", 2)];
            let sf = f.substitute(&imgs).unwrap();
            let sg = g.substitute(&imgs).unwrap();
            prop_assert_eq!(f.checked_mul(&g).unwrap().substitute(&imgs).unwrap(), sf.checked_mul(&sg).unwrap());
            prop_assert_eq!(f.checked_add(&g).unwrap().substitute(&imgs).unwrap(), sf.checked_add(&sg).unwrap());
        }
    }
}

//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Elements carry enough information to recover their field, so mixing
//! elements of different fields is detected instead of silently producing
//! garbage. The operator impls (`&a + &b`, ...) panic on such a mismatch;
//! use [`FieldElem::arith`] or the `checked_*` methods when the operands
//! come from untrusted input.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(CoefField, CoefField),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// The coefficient field K.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefField {
    Rationals,
    PrimeField(u64),
}

/// Deterministic trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= p as u128 {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factors of `n` without multiplicity, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl CoefField {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(CoefField::PrimeField(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefField::Rationals => 0,
            CoefField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match self {
            CoefField::Rationals => FieldElem::Rational(BigRational::from_integer(v.clone())),
            CoefField::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                FieldElem::Residue {
                    value: r.to_u64().expect("residue fits u64"),
                    modulus: *p,
                }
            }
        }
    }

    /// Image of the rational `num/den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElem, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            CoefField::Rationals => Ok(FieldElem::Rational(BigRational::new(num.clone(), den.clone()))),
            CoefField::PrimeField(_) => self.from_bigint(num).checked_div(&self.from_bigint(den)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElem, FieldError> {
        self.from_ratio(q.numer(), q.denom())
    }

    /// Number of roots of unity in the field, when finite and known.
    pub fn roots_of_unity_count(&self) -> u64 {
        match self {
            CoefField::Rationals => 2,
            CoefField::PrimeField(p) => p - 1,
        }
    }

    /// An element of multiplicative order exactly `m`, if the field has one.
    ///
    /// Over F_p the smallest residue of order `m` is returned, so results are
    /// reproducible. Over Q only m = 1, 2 succeed.
    pub fn primitive_root_of_unity(&self, m: u64) -> Option<FieldElem> {
        if m == 0 {
            return None;
        }
        match self {
            CoefField::Rationals => match m {
                1 => Some(self.one()),
                2 => Some(self.from_i64(-1)),
                _ => None,
            },
            CoefField::PrimeField(p) => {
                let p = *p;
                if (p - 1) % m != 0 {
                    return None;
                }
                if m == 1 {
                    return Some(self.one());
                }
                let order_factors = prime_factors(p - 1);
                let generator = (2..p)
                    .find(|&g| order_factors.iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1))
                    .unwrap_or(1);
                // order-m elements are g^(k(p-1)/m) with gcd(k, m) = 1
                let base = pow_mod(generator, (p - 1) / m, p);
                let mut best: Option<u64> = None;
                let mut cur = 1u64;
                for k in 1..=m {
                    cur = mul_mod(cur, base, p);
                    if k.gcd(&m) == 1 {
                        best = Some(best.map_or(cur, |b| b.min(cur)));
                    }
                }
                best.map(|value| FieldElem::Residue { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for CoefField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefField::Rationals => write!(f, "Q"),
            CoefField::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for CoefField {
    type Err = String;

    /// Accepts `Q`, `Fp:7`, `F7`, or the JSON forms `"Q"` and `{"Fp": 7}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('{') || s.starts_with('"') {
            let spec: FieldSpec = serde_json::from_str(s).map_err(|e| e.to_string())?;
            return spec.to_field().map_err(|e| e.to_string());
        }
        if s == "Q" || s == "QQ" {
            return Ok(CoefField::Rationals);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("Fp"))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| format!("unknown field `{s}`"))?;
        let p: u64 = digits.trim().parse().map_err(|_| format!("bad prime in `{s}`"))?;
        CoefField::prime(p).map_err(|e| e.to_string())
    }
}

/// JSON form of a field: `"Q"` or `{"Fp": 7}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<CoefField, String> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(CoefField::Rationals),
            FieldSpec::Named(s) => s.parse(),
            FieldSpec::Prime { fp } => CoefField::prime(*fp).map_err(|e| e.to_string()),
        }
    }
}

impl From<CoefField> for FieldSpec {
    fn from(f: CoefField) -> Self {
        match f {
            CoefField::Rationals => FieldSpec::Named("Q".into()),
            CoefField::PrimeField(p) => FieldSpec::Prime { fp: p },
        }
    }
}

/// An element of a [`CoefField`], always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElem {
    pub fn field(&self) -> CoefField {
        match self {
            FieldElem::Rational(_) => CoefField::Rationals,
            FieldElem::Residue { modulus, .. } => CoefField::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Residue { value, .. } => *value == 1,
        }
    }

    /// True for rationals with negative sign; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElem::Rational(q) if q.is_negative())
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn arith(&self, op: ArithOp, rhs: &Self) -> Result<Self, FieldError> {
        match op {
            ArithOp::Add => self.checked_add(rhs),
            ArithOp::Sub => self.checked_sub(rhs),
            ArithOp::Mul => self.checked_mul(rhs),
            ArithOp::Div => self.checked_div(rhs),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Residue { value: a, modulus: p }, FieldElem::Residue { value: b, .. }) => {
                FieldElem::Residue {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.checked_add(&rhs.neg_ref())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Residue { value: a, modulus: p }, FieldElem::Residue { value: b, .. }) => {
                FieldElem::Residue {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Rational(q) => FieldElem::Rational(q.recip()),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    fn neg_ref(&self) -> Self {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(num_traits::pow(q.clone(), exp as usize)),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: pow_mod(*value, exp, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, exp: i64) -> Result<Self, FieldError> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    /// Multiplicative order, or `None` for zero and for elements of infinite order.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        match self {
            FieldElem::Rational(q) => {
                if q.is_one() {
                    Some(1)
                } else if (-q).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
            FieldElem::Residue { value, modulus } => {
                let mut order = modulus - 1;
                for q in prime_factors(modulus - 1) {
                    while order % q == 0 && pow_mod(*value, order / q, *modulus) == 1 {
                        order /= q;
                    }
                }
                Some(order)
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(q) => Some(q),
            FieldElem::Residue { .. } => None,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> FieldElem {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl<'a> Sub for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> FieldElem {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl<'a> Mul for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> FieldElem {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl<'a> Neg for &'a FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElem {
        CoefField::Rationals.from_ratio(&n.into(), &d.into()).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn modular_product() {
        let f7 = CoefField::prime(7).unwrap();
        assert_eq!(&f7.from_i64(3) * &f7.from_i64(5), f7.one());
    }

    #[test]
    fn division_by_zero() {
        let qq = CoefField::Rationals;
        assert_eq!(qq.one().checked_div(&qq.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(
            qq.one().arith(ArithOp::Div, &qq.zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn mismatch_is_reported() {
        let f5 = CoefField::prime(5).unwrap();
        assert!(matches!(
            f5.one().checked_add(&CoefField::Rationals.one()),
            Err(FieldError::FieldMismatch(..))
        ));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(CoefField::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(CoefField::prime(1), Err(FieldError::NotPrime(1)));
        assert!(CoefField::prime(2).is_ok());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q(2, -4), q(-1, 2));
        if let FieldElem::Rational(r) = q(6, -4) {
            assert!(r.denom().is_positive());
        }
        let f7 = CoefField::prime(7).unwrap();
        assert_eq!(f7.from_i64(-1), FieldElem::Residue { value: 6, modulus: 7 });
    }

    #[test]
    fn roots_of_unity() {
        let f7 = CoefField::prime(7).unwrap();
        // exhaustive: elements of order 3 in F_7 are {2, 4}
        let order3: Vec<u64> = (1..7)
            .filter(|&x| f7.from_i64(x as i64).multiplicative_order() == Some(3))
            .collect();
        assert_eq!(order3, vec![2, 4]);
        assert_eq!(f7.primitive_root_of_unity(3), Some(f7.from_i64(2)));
        assert_eq!(CoefField::Rationals.primitive_root_of_unity(2), Some(q(-1, 1)));
        assert_eq!(CoefField::Rationals.primitive_root_of_unity(3), None);
        assert_eq!(CoefField::prime(5).unwrap().primitive_root_of_unity(3), None);
        assert_eq!(CoefField::prime(2).unwrap().primitive_root_of_unity(1), Some(CoefField::prime(2).unwrap().one()));
    }

    #[test]
    fn roots_exist_iff_divisor() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 97] {
            let f = CoefField::prime(p).unwrap();
            for m in 1..=2 * p {
                let z = f.primitive_root_of_unity(m);
                assert_eq!(z.is_some(), (p - 1) % m == 0, "p={p} m={m}");
                if let Some(z) = z {
                    assert!(z.pow(m).is_one());
                    for d in 1..m {
                        if m % d == 0 {
                            assert!(!z.pow(d).is_one());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<CoefField>(), Ok(CoefField::Rationals));
        assert_eq!("Fp:7".parse::<CoefField>(), Ok(CoefField::PrimeField(7)));
        assert_eq!("{\"Fp\": 7}".parse::<CoefField>(), Ok(CoefField::PrimeField(7)));
        assert_eq!("\"Q\"".parse::<CoefField>(), Ok(CoefField::Rationals));
        assert!("Fp:8".parse::<CoefField>().is_err());
        assert!("R".parse::<CoefField>().is_err());
    }

    fn elem(field: CoefField) -> impl Strategy<Value = FieldElem> {
        (-50i64..50, 1i64..20).prop_map(move |(n, d)| match field {
            CoefField::Rationals => field.from_ratio(&n.into(), &d.into()).unwrap(),
            CoefField::PrimeField(_) => field.from_i64(n * d),
        })
    }

    proptest! {
        #[test]
        fn axioms_q(a in elem(CoefField::Rationals), b in elem(CoefField::Rationals), c in elem(CoefField::Rationals)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }

        #[test]
        fn axioms_f13(a in elem(CoefField::PrimeField(13)), b in elem(CoefField::PrimeField(13)), c in elem(CoefField::PrimeField(13))) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert!((&b * &b.inv().unwrap()).is_one());
            }
        }
    }
}

//! Multivariate gcd by recursive content / primitive-part elimination.
//!
//! A polynomial is viewed as univariate in its first occurring variable with
//! coefficients in the remaining ones; contents are computed recursively and
//! the primitive parts are reduced with a primitive pseudo-remainder sequence.

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::MPoly;
use crate::field::{mul_mod, pow_mod, CoefField, FieldElem};

/// Prime used for modular images of rational polynomials.
const IMAGE_PRIME: u64 = 2_147_483_647;
const IMAGE_TRIES: u64 = 3;

pub(super) fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.nvars(), a.field());
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    if a.monic() == b.monic() {
        return a.monic();
    }

    // strip the common monomial factor first; it keeps the PRS small
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    if ma.iter().any(|&k| k > 0) || mb.iter().any(|&k| k > 0) {
        let common: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
        let g = gcd(&a.div_monomial(&ma), &b.div_monomial(&mb));
        return g.mul_term(&common, &a.field().one());
    }

    if certainly_coprime(a, b) {
        return MPoly::one(a.nvars(), a.field());
    }

    let var = (0..a.nvars())
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("nonconstant polynomial has a variable");
    if a.degree_in(var) == 0 {
        return gcd(a, &content(b, var));
    }
    if b.degree_in(var) == 0 {
        return gcd(&content(a, var), b);
    }

    let ca = content(a, var);
    let cb = content(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).monic()
}

/// Sufficient test for a constant gcd. For each variable v, specialize the
/// others to points mod a prime that keep both leading coefficients in v
/// alive; a gcd of degree d in v survives as a common factor of degree d in
/// the images, so coprime images prove the gcd is free of v.
fn certainly_coprime(a: &MPoly, b: &MPoly) -> bool {
    let modulus = match a.field() {
        CoefField::Rationals => IMAGE_PRIME,
        CoefField::PrimeField(p) => p,
    };
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..a.nvars()).all(|v| {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 || db == 0 {
            return true;
        }
        (0..IMAGE_TRIES).any(|_| {
            let point: Vec<u64> = (0..a.nvars()).map(|_| next() % modulus).collect();
            match (image(a, v, &point, modulus), image(b, v, &point, modulus)) {
                (Some(ia), Some(ib)) if ia.len() == da as usize + 1 && ib.len() == db as usize + 1 => {
                    uni_gcd_degree(ia, ib, modulus) == 0
                }
                _ => false,
            }
        })
    })
}

fn residue(c: &FieldElem, modulus: u64) -> Option<u64> {
    match c {
        FieldElem::Residue { value, .. } => Some(*value),
        FieldElem::Rational(q) => {
            let m = num_bigint::BigInt::from(modulus);
            let num = q.numer().mod_floor(&m).to_u64()?;
            let den = q.denom().mod_floor(&m).to_u64()?;
            (den != 0).then(|| mul_mod(num, pow_mod(den, modulus - 2, modulus), modulus))
        }
    }
}

/// Univariate image in `v` with the other variables set to `point`,
/// trailing zeros trimmed. `None` if a coefficient has no image mod p.
fn image(f: &MPoly, v: usize, point: &[u64], modulus: u64) -> Option<Vec<u64>> {
    let mut out = vec![0u64; f.degree_in(v) as usize + 1];
    for (e, c) in f.terms() {
        let mut t = residue(c, modulus)?;
        for (w, &k) in e.iter().enumerate() {
            if w != v && k > 0 {
                t = mul_mod(t, pow_mod(point[w], k as u64, modulus), modulus);
            }
        }
        let slot = &mut out[e[v] as usize];
        *slot = ((*slot as u128 + t as u128) % modulus as u128) as u64;
    }
    while out.len() > 1 && *out.last().expect("nonempty") == 0 {
        out.pop();
    }
    Some(out)
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> usize {
    let trim = |p: &mut Vec<u64>| {
        while p.last() == Some(&0) {
            p.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let inv = pow_mod(*b.last().expect("nonempty"), m - 2, m);
        while a.len() >= b.len() {
            let q = mul_mod(*a.last().expect("nonempty"), inv, m);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = ((a[shift + i] as u128 + (m - mul_mod(q, bc, m)) as u128) % m as u128) as u64;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn monomial_gcd(m: &MPoly, f: &MPoly) -> MPoly {
    let (me, _) = m.leading_term().expect("nonzero");
    let mut e = me.clone();
    for (k, fe) in e.iter_mut().zip(f.min_exponents()) {
        *k = (*k).min(fe);
    }
    MPoly::monomial(m.field(), e, m.field().one())
}

/// gcd of the coefficients of `f` viewed as a polynomial in `var`.
fn content(f: &MPoly, var: usize) -> MPoly {
    let coeffs = f.coefficients_in(var);
    let mut it = coeffs.into_values();
    let mut g = it.next().map(|c| c.monic()).unwrap_or_else(|| MPoly::zero(f.nvars(), f.field()));
    for c in it {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &c);
    }
    if g.is_constant() && !g.is_zero() {
        MPoly::one(f.nvars(), f.field())
    } else {
        g
    }
}

fn primitive_part(f: &MPoly, var: usize) -> MPoly {
    let c = content(f, var);
    f.div_exact(&c).expect("content divides").monic()
}

fn lead_in(f: &MPoly, var: usize) -> (u32, MPoly) {
    let mut coeffs = f.coefficients_in(var);
    let (d, c) = coeffs.pop_last().expect("nonzero");
    (d, c)
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn pseudo_rem(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    let (db, lb) = lead_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let (dr, lr) = lead_in(&r, var);
        let mut shift = vec![0; r.nvars()];
        shift[var] = dr - db;
        let one = r.field().one();
        r = &(&lb * &r) - &(&lr * &b.mul_term(&shift, &one));
    }
    r
}

fn primitive_prs(a: MPoly, b: MPoly, var: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) { (a, b) } else { (b, a) };
    loop {
        if b.degree_in(var) == 0 {
            // b is primitive and free of var, hence a unit
            return MPoly::one(a.nvars(), a.field());
        }
        if let Some(_q) = a.div_exact(&b) {
            return b.monic();
        }
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return b.monic();
        }
        a = b;
        b = primitive_part(&r, var);
    }
}

#[cfg(test)]
mod tests {
    use crate::field::CoefField;
    use crate::poly::MPoly;
    use crate::text::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> MPoly {
        parse_poly(s, n, CoefField::Rationals).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        // x^2 - y^2 = (x - y)(x + y)
        assert_eq!(p("t1^2 - t2^2", 2).gcd(&p("t1 - t2", 2)).unwrap(), p("t1 - t2", 2));
    }

    #[test]
    fn coprime_variables() {
        assert_eq!(p("t1", 2).gcd(&p("t2", 2)).unwrap(), p("1", 2));
    }

    #[test]
    fn gcd_with_zero() {
        let f = p("3*t1^2 + t2", 2);
        assert_eq!(f.gcd(&MPoly::zero(2, CoefField::Rationals)).unwrap(), p("t1^2 + 1/3*t2", 2));
        let z = MPoly::zero(2, CoefField::Rationals);
        assert!(z.gcd(&z).unwrap().is_zero());
    }

    #[test]
    fn shared_multivariate_factor() {
        let g = p("t1*t2 + t3^2 - 1", 3);
        let a = &g * &p("t1 + t2 + t3", 3);
        let b = &g * &p("t1^2 - t3", 3);
        assert_eq!(a.gcd(&b).unwrap(), g.monic());
    }

    #[test]
    fn over_prime_field() {
        let f5 = CoefField::prime(5).unwrap();
        let a = parse_poly("t1^2 + 4", 2, f5).unwrap(); // (t1-1)(t1+1) mod 5
        let b = parse_poly("t1*t2 + t2", 2, f5).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), parse_poly("t1 + 1", 2, f5).unwrap());
    }

    fn small_poly(n: usize) -> impl Strategy<Value = MPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 1..4).prop_map(move |ts| {
            let q = CoefField::Rationals;
            MPoly::from_terms(n, q, ts.into_iter().map(|(e, c)| (e, q.from_i64(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn gcd_divides_and_scales(a in small_poly(3), b in small_poly(3), g in small_poly(3)) {
            let d = a.gcd(&b).unwrap();
            if !d.is_zero() {
                prop_assert!(a.div_exact(&d).is_some());
                prop_assert!(b.div_exact(&d).is_some());
            }
            if !g.is_zero() {
                let lhs = (&a * &g).gcd(&(&b * &g)).unwrap();
                let rhs = (&g * &d).monic();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

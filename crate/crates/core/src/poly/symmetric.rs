//! Elementary symmetric polynomials and the classical lex-leading-term
//! reduction of symmetric polynomials to polynomials in e1, ..., en.

use itertools::Itertools;

use super::{Exponents, MPoly};
use crate::field::CoefField;

/// e_k(X1, ..., Xm). `e_0 = 1` and `e_k = 0` for `k > m`.
pub fn elementary_symmetric(k: usize, m: usize, field: CoefField) -> MPoly {
    let mut out = MPoly::zero(m, field);
    if k > m {
        return out;
    }
    for subset in (0..m).combinations(k) {
        let mut e = vec![0u32; m];
        for i in subset {
            e[i] = 1;
        }
        out.add_term(e, field.one());
    }
    out
}

/// Result of expanding `prod_i (Y - X_i)` and comparing it with
/// `sum_k (-1)^k e_k Y^(m-k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProductReport {
    pub m: usize,
    /// Coefficient of `Y^(m-k)` at index `k`, as polynomials in X1..Xm.
    pub coefficients: Vec<MPoly>,
    pub expected: Vec<MPoly>,
    pub passed: bool,
}

pub fn expand_root_product(m: usize, field: CoefField) -> RootProductReport {
    // ring X1..Xm, Y with Y last
    let y = MPoly::var(m + 1, field, m);
    let mut prod = MPoly::one(m + 1, field);
    for i in 0..m {
        prod = &prod * &(&y - &MPoly::var(m + 1, field, i));
    }
    let by_y = prod.coefficients_in(m);
    let coefficients: Vec<MPoly> = (0..=m)
        .map(|k| {
            by_y.get(&((m - k) as u32))
                .map(|c| drop_last_var(c))
                .unwrap_or_else(|| MPoly::zero(m, field))
        })
        .collect();
    let expected: Vec<MPoly> = (0..=m)
        .map(|k| {
            let e = elementary_symmetric(k, m, field);
            if k % 2 == 1 {
                -&e
            } else {
                e
            }
        })
        .collect();
    let passed = coefficients == expected;
    RootProductReport {
        m,
        coefficients,
        expected,
        passed,
    }
}

fn drop_last_var(p: &MPoly) -> MPoly {
    let n = p.nvars() - 1;
    MPoly::from_terms(
        n,
        p.field(),
        p.terms().map(|(e, c)| {
            debug_assert_eq!(e[n], 0);
            (e[..n].to_vec(), c.clone())
        }),
    )
}

/// Outcome of [`symmetric_reduce`]: `f = expression(e1, ..., en) + residue`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymReduction {
    /// Polynomial in n indeterminates standing for e1, ..., en.
    pub expression: MPoly,
    /// Zero iff the input was symmetric.
    pub residue: MPoly,
}

impl SymReduction {
    pub fn is_symmetric(&self) -> bool {
        self.residue.is_zero()
    }

    /// `expression(e1(t), ..., en(t)) + residue`, which must equal the input.
    pub fn back_substitute(&self) -> MPoly {
        let n = self.residue.nvars();
        let field = self.residue.field();
        let es: Vec<MPoly> = (1..=n).map(|k| elementary_symmetric(k, n, field)).collect();
        &self.expression.compose(&es).expect("arity matches") + &self.residue
    }
}

/// Rewrites `f` in the elementary symmetric polynomials by repeatedly
/// cancelling the lex-leading term `c t^a` against
/// `c e1^(a1-a2) e2^(a2-a3) ... en^an`. Stops at the first leading term whose
/// exponents are not non-increasing; what is left becomes the residue.
pub fn symmetric_reduce(f: &MPoly) -> SymReduction {
    let n = f.nvars();
    let field = f.field();
    let es: Vec<MPoly> = (1..=n).map(|k| elementary_symmetric(k, n, field)).collect();
    let mut powers: Vec<Vec<MPoly>> = es.iter().map(|e| vec![MPoly::one(n, field), e.clone()]).collect();
    let mut rest = f.clone();
    let mut expression = MPoly::zero(n, field);
    while let Some((lead, c)) = rest.leading_term() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            break;
        }
        let c = c.clone();
        let target: Exponents = (0..n)
            .map(|k| lead[k] - if k + 1 < n { lead[k + 1] } else { 0 })
            .collect();
        let mut product = MPoly::constant(n, c.clone());
        for (k, &d) in target.iter().enumerate() {
            if d == 0 {
                continue;
            }
            while powers[k].len() <= d as usize {
                let next = &powers[k][powers[k].len() - 1] * &es[k];
                powers[k].push(next);
            }
            product = &product * &powers[k][d as usize];
        }
        rest = &rest - &product;
        expression.add_term(target, c);
    }
    SymReduction {
        expression,
        residue: rest,
    }
}

//! Dense Gaussian elimination over a coefficient field.

use crate::field::{CoefField, FieldElem};

pub type Matrix = Vec<Vec<FieldElem>>;

pub fn identity(n: usize, field: CoefField) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

/// Determinant by row reduction.
pub fn determinant(m: &[Vec<FieldElem>], field: CoefField) -> FieldElem {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let pinv = p.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &pinv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    det
}

/// Inverse, or `None` when singular.
pub fn inverse(m: &[Vec<FieldElem>], field: CoefField) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut inv = identity(n, field);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        inv.swap(piv, col);
        let pinv = a[col][col].inv().expect("nonzero pivot");
        for c in 0..n {
            a[col][c] = &a[col][c] * &pinv;
            inv[col][c] = &inv[col][c] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let d1 = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &d1;
                let d2 = &factor * &inv[col][c];
                inv[r][c] = &inv[r][c] - &d2;
            }
        }
    }
    Some(inv)
}

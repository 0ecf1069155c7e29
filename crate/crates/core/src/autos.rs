//! Automorphisms of K(t1, ..., tn) over K given by generator images, finite
//! groups of them, matrices over a vertical base, and Dedekind witnesses.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::field::{CoefField, FieldElem, FieldError};
use crate::groups::{GroupError, Perm, PermGroup};
use crate::linalg;
use crate::poly::MPoly;
use crate::ratfunc::{RatFunc, RatFuncError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(CoefField, CoefField),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("exponent matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("{field} has no primitive {m}-th root of unity")]
    RootOfUnityAbsent { m: u64, field: CoefField },
    #[error("closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("base exponents are not all equal")]
    NonUniformExponents,
    #[error("automorphism moves a base generator")]
    NotOverBase,
    #[error("image is not expressible in the monomial basis")]
    CoordinateFailure,
    #[error("automorphisms are not pairwise distinct")]
    NotDistinct,
    #[error("no nonsingular witness found in {0} trials")]
    ExhaustedTrials(usize),
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error("invalid automorphism spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AutTag {
    Permutation,
    Linear,
    Monomial,
    VerticalScaling,
    Reciprocal,
    LinearInvolution,
    Composite,
}

/// t_i -> coeffs[i] * t^exps[i], exps unimodular.
#[derive(Debug, Clone)]
struct Laurent {
    coeffs: Vec<FieldElem>,
    exps: Vec<Vec<i64>>,
}

impl Laurent {
    /// Data of `a ∘ b` (b applied first): exponent matrix Eb * Ea.
    fn compose(a: &Laurent, b: &Laurent) -> Laurent {
        let n = a.exps.len();
        let mut coeffs = Vec::with_capacity(n);
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = b.coeffs[i].clone();
            let mut row = vec![0i64; n];
            for (j, &k) in b.exps[i].iter().enumerate() {
                if k == 0 {
                    continue;
                }
                c = &c * &a.coeffs[j].powi(k).expect("coefficients are units");
                for (r, &x) in row.iter_mut().zip(&a.exps[j]) {
                    *r += k * x;
                }
            }
            coeffs.push(c);
            exps.push(row);
        }
        Laurent { coeffs, exps }
    }

    fn inverse(&self) -> Result<Laurent, AutError> {
        let f = int_inverse(&self.exps)?;
        let coeffs = f
            .iter()
            .map(|row| {
                row.iter().zip(&self.coeffs).try_fold(self.coeffs[0].field().one(), |acc, (&k, a)| {
                    Ok::<_, FieldError>(&acc * &a.powi(-k)?)
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Laurent { coeffs, exps: f })
    }

    fn images(&self, field: CoefField) -> Vec<RatFunc> {
        let n = self.exps.len();
        self.exps
            .iter()
            .zip(&self.coeffs)
            .map(|(row, c)| {
                let pos: Vec<u32> = row.iter().map(|&k| k.max(0) as u32).collect();
                let neg: Vec<u32> = row.iter().map(|&k| (-k).max(0) as u32).collect();
                RatFunc::from_coprime(MPoly::monomial(field, pos, c.clone()), MPoly::monomial(field, neg, field.one()))
            })
            .map(|r| {
                debug_assert_eq!(r.nvars(), n);
                r
            })
            .collect()
    }

    /// Pure relabelling of variables, as 0-based targets.
    fn as_perm(&self) -> Option<Vec<usize>> {
        self.coeffs
            .iter()
            .zip(&self.exps)
            .map(|(c, row)| {
                if !c.is_one() {
                    return None;
                }
                unit_row(row)
            })
            .collect()
    }

    fn is_polynomial_linear(&self) -> bool {
        self.exps.iter().all(|row| unit_row(row).is_some())
    }
}

fn unit_row(row: &[i64]) -> Option<usize> {
    let mut hit = None;
    for (j, &k) in row.iter().enumerate() {
        match k {
            0 => {}
            1 if hit.is_none() => hit = Some(j),
            _ => return None,
        }
    }
    hit
}

/// Integer inverse of a unimodular matrix.
fn int_inverse(e: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, AutError> {
    let q = CoefField::Rationals;
    let m: linalg::Matrix = e.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
    let det = linalg::determinant(&m, q);
    if !(det.is_one() || (-det.clone()).is_one()) {
        return Err(AutError::NotUnimodular(det.to_string()));
    }
    let inv = linalg::inverse(&m, q).expect("unimodular");
    Ok(inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let r = x.as_rational().expect("rational");
                    i64::try_from(r.to_integer()).expect("small integer entries")
                })
                .collect()
        })
        .collect())
}

#[derive(Debug, Clone)]
enum Shape {
    Laurent(Laurent),
    /// Invertible affine substitution, an automorphism of the polynomial ring.
    Affine(Vec<MPoly>),
    General,
}

impl Shape {
    fn affine_images(&self, images: &[RatFunc]) -> Option<Vec<MPoly>> {
        match self {
            Shape::Affine(v) => Some(v.clone()),
            Shape::Laurent(l) if l.is_polynomial_linear() => Some(images.iter().map(|r| r.num().clone()).collect()),
            _ => None,
        }
    }

    /// Shape of `a ∘ b`.
    fn compose(a: &Shape, a_images: &[RatFunc], b: &Shape, b_images: &[RatFunc], out: &[RatFunc]) -> Shape {
        if let (Shape::Laurent(x), Shape::Laurent(y)) = (a, b) {
            return Shape::Laurent(Laurent::compose(x, y));
        }
        if a.affine_images(a_images).is_some() && b.affine_images(b_images).is_some() {
            return Shape::Affine(out.iter().map(|r| r.num().clone()).collect());
        }
        Shape::General
    }
}

/// An element of Aut(K(t1..tn)/K), stored as the images of the variables
/// together with the images under its inverse.
#[derive(Debug, Clone)]
pub struct FieldAutomorphism {
    n: usize,
    field: CoefField,
    images: Vec<RatFunc>,
    inverse_images: Vec<RatFunc>,
    tag: AutTag,
    shape: Shape,
    inverse_shape: Shape,
}

impl PartialEq for FieldAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for FieldAutomorphism {}

impl Hash for FieldAutomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for FieldAutomorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldAutomorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

fn check_vec_len(expected: usize, found: usize) -> Result<(), AutError> {
    if expected == found {
        Ok(())
    } else {
        Err(AutError::ArityMismatch { expected, found })
    }
}

impl FieldAutomorphism {
    fn from_laurent(field: CoefField, l: Laurent, tag: AutTag) -> Result<Self, AutError> {
        let inv = l.inverse()?;
        Ok(FieldAutomorphism {
            n: l.exps.len(),
            field,
            images: l.images(field),
            inverse_images: inv.images(field),
            tag,
            shape: Shape::Laurent(l),
            inverse_shape: Shape::Laurent(inv),
        })
    }

    fn diagonal(n: usize, field: CoefField, coeffs: Vec<FieldElem>, sign: i64, tag: AutTag) -> Self {
        let exps = (0..n)
            .map(|i| (0..n).map(|j| if i == j { sign } else { 0 }).collect())
            .collect();
        Self::from_laurent(field, Laurent { coeffs, exps }, tag).expect("diagonal units are invertible")
    }

    pub fn identity(n: usize, field: CoefField) -> Self {
        Self::diagonal(n, field, vec![field.one(); n], 1, AutTag::Permutation)
    }

    /// t_i -> t_{p(i)}.
    pub fn from_perm(p: &Perm, field: CoefField) -> Self {
        let n = p.degree();
        let exps = (0..n)
            .map(|i| (0..n).map(|j| i64::from(p.apply(i) == j)).collect())
            .collect();
        Self::from_laurent(
            field,
            Laurent {
                coeffs: vec![field.one(); n],
                exps,
            },
            AutTag::Permutation,
        )
        .expect("permutation matrices are unimodular")
    }

    /// t -> A t + B.
    pub fn linear(a: &[Vec<FieldElem>], b: &[FieldElem], field: CoefField) -> Result<Self, AutError> {
        let n = a.len();
        check_vec_len(n, b.len())?;
        for row in a {
            check_vec_len(n, row.len())?;
        }
        for x in a.iter().flatten().chain(b) {
            if x.field() != field {
                return Err(AutError::FieldMismatch(field, x.field()));
            }
        }
        let ainv = linalg::inverse(a, field).ok_or(AutError::SingularMatrix)?;
        let b_zero = b.iter().all(|x| x.is_zero());

        // monomial matrix without translation: a scaled relabelling
        if b_zero {
            let support: Option<Vec<usize>> = a
                .iter()
                .map(|row| {
                    let nz: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
                    (nz.len() == 1).then(|| nz[0])
                })
                .collect();
            if let Some(support) = support {
                let coeffs = (0..n).map(|i| a[i][support[i]].clone()).collect();
                let exps = (0..n)
                    .map(|i| (0..n).map(|j| i64::from(support[i] == j)).collect())
                    .collect();
                let l = Laurent { coeffs, exps };
                let involution_shape = l.as_perm().and_then(|p| Perm::from_zero_based(p).ok()).is_some_and(|p| {
                    n >= 2 && {
                        let cyc = p.cycles();
                        cyc.len() == n / 2 && cyc.iter().all(|c| c.len() == 2)
                    }
                });
                let tag = if involution_shape {
                    AutTag::LinearInvolution
                } else {
                    AutTag::Linear
                };
                return Self::from_laurent(field, l, tag);
            }
        }

        let vars: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, field, i)).collect();
        let affine = |m: &[Vec<FieldElem>], shift: &[FieldElem]| -> Vec<MPoly> {
            (0..n)
                .map(|i| {
                    let mut p = MPoly::constant(n, shift[i].clone());
                    for j in 0..n {
                        p = &p + &vars[j].scale(&m[i][j]);
                    }
                    p
                })
                .collect()
        };
        let fwd = affine(a, b);
        // A^{-1}(t - B) = A^{-1} t - A^{-1} B
        let shift: Vec<FieldElem> = (0..n)
            .map(|i| {
                (0..n).fold(field.zero(), |acc, j| &acc - &(&ainv[i][j] * &b[j]))
            })
            .collect();
        let back = affine(&ainv, &shift);
        Ok(FieldAutomorphism {
            n,
            field,
            images: fwd.iter().cloned().map(RatFunc::from_poly).collect(),
            inverse_images: back.iter().cloned().map(RatFunc::from_poly).collect(),
            tag: AutTag::Linear,
            shape: Shape::Affine(fwd),
            inverse_shape: Shape::Affine(back),
        })
    }

    /// t_i -> t_i + c_i.
    pub fn translation(c: &[FieldElem], field: CoefField) -> Result<Self, AutError> {
        Self::linear(&linalg::identity(c.len(), field), c, field)
    }

    /// t_i -> prod_j t_j^E[i][j] for a unimodular integer matrix E.
    pub fn monomial(e: &[Vec<i64>], field: CoefField) -> Result<Self, AutError> {
        let n = e.len();
        for row in e {
            check_vec_len(n, row.len())?;
        }
        Self::from_laurent(
            field,
            Laurent {
                coeffs: vec![field.one(); n],
                exps: e.to_vec(),
            },
            AutTag::Monomial,
        )
    }

    /// t_i -> ζ_{m_i}^{k_i} t_i, with ζ_m the primitive root chosen by the field.
    pub fn vertical_scaling(mvec: &[u64], kvec: &[i64], field: CoefField) -> Result<Self, AutError> {
        check_vec_len(mvec.len(), kvec.len())?;
        let coeffs = mvec
            .iter()
            .zip(kvec)
            .map(|(&m, &k)| {
                if m == 0 {
                    return Err(AutError::InvalidSpec("root order must be positive".into()));
                }
                let z = field.primitive_root_of_unity(m).ok_or(AutError::RootOfUnityAbsent { m, field })?;
                Ok(z.pow(k.rem_euclid(m as i64) as u64))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::diagonal(mvec.len(), field, coeffs, 1, AutTag::VerticalScaling))
    }

    /// t_i -> 1/t_i.
    pub fn reciprocal(n: usize, field: CoefField) -> Self {
        Self::diagonal(n, field, vec![field.one(); n], -1, AutTag::Reciprocal)
    }

    /// t_{p(i)} -> t_{p(n+1-i)}: the anti-diagonal permutation matrix in the
    /// variable order t_{p(1)}, ..., t_{p(n)}.
    pub fn linear_involution(p: &Perm, field: CoefField) -> Self {
        let n = p.degree();
        let mut target = vec![0usize; n];
        for i in 0..n {
            target[p.apply(i)] = p.apply(n - 1 - i);
        }
        let sigma = Perm::from_zero_based(target).expect("conjugate of the reversal");
        let mut a = Self::from_perm(&sigma, field);
        a.tag = AutTag::LinearInvolution;
        a
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> CoefField {
        self.field
    }

    pub fn tag(&self) -> AutTag {
        self.tag
    }

    pub fn images(&self) -> &[RatFunc] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[RatFunc] {
        &self.inverse_images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, r)| *r == RatFunc::var(self.n, self.field, i))
    }

    /// The relabelling of variables when every image is a scalar multiple of
    /// a single t_j or 1/t_j.
    pub fn perm_shadow(&self) -> Option<Perm> {
        let target: Option<Vec<usize>> = self
            .images
            .iter()
            .map(|r| {
                let single_var = |p: &MPoly| -> Option<usize> {
                    if !p.is_monomial() {
                        return None;
                    }
                    let (e, _) = p.leading_term()?;
                    unit_row(&e.iter().map(|&k| k as i64).collect::<Vec<_>>())
                };
                if r.den().is_one() {
                    single_var(r.num())
                } else if r.num().is_constant() {
                    single_var(r.den())
                } else {
                    None
                }
            })
            .collect();
        Perm::from_zero_based(target?).ok()
    }

    /// Exact permutation of the variables, if this is one.
    pub fn as_permutation(&self) -> Option<Perm> {
        let target: Vec<usize> = match &self.shape {
            Shape::Laurent(l) => l.as_perm()?,
            _ => self
                .images
                .iter()
                .map(|r| (0..self.n).find(|&j| *r == RatFunc::var(self.n, self.field, j)))
                .collect::<Option<_>>()?,
        };
        Perm::from_zero_based(target).ok()
    }

    fn check_context(&self, f: &RatFunc) -> Result<(), AutError> {
        check_vec_len(self.n, f.nvars())?;
        if f.field() != self.field {
            return Err(AutError::FieldMismatch(self.field, f.field()));
        }
        Ok(())
    }

    fn apply_with(shape: &Shape, images: &[RatFunc], f: &RatFunc) -> Result<RatFunc, AutError> {
        if f.is_constant() {
            return Ok(f.clone());
        }
        Ok(match shape {
            Shape::Laurent(l) => match l.as_perm() {
                Some(p) => f.permute_vars(&p),
                None => f.apply_laurent_map(&l.coeffs, &l.exps),
            },
            Shape::Affine(polys) => f.apply_polynomial_automorphism(polys)?,
            Shape::General => f.substitute(images)?,
        })
    }

    /// f(images).
    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc, AutError> {
        self.check_context(f)?;
        Self::apply_with(&self.shape, &self.images, f)
    }

    pub fn apply_inverse(&self, f: &RatFunc) -> Result<RatFunc, AutError> {
        self.check_context(f)?;
        Self::apply_with(&self.inverse_shape, &self.inverse_images, f)
    }

    pub fn fixes(&self, f: &RatFunc) -> Result<bool, AutError> {
        Ok(self.apply(f)? == *f)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, AutError> {
        check_vec_len(self.n, other.n)?;
        if self.field != other.field {
            return Err(AutError::FieldMismatch(self.field, other.field));
        }
        let images: Vec<RatFunc> = other.images.iter().map(|g| self.apply(g)).collect::<Result<_, _>>()?;
        let inverse_images: Vec<RatFunc> = self
            .inverse_images
            .iter()
            .map(|g| other.apply_inverse(g))
            .collect::<Result<_, _>>()?;
        let shape = Shape::compose(&self.shape, &self.images, &other.shape, &other.images, &images);
        let inverse_shape = Shape::compose(
            &other.inverse_shape,
            &other.inverse_images,
            &self.inverse_shape,
            &self.inverse_images,
            &inverse_images,
        );
        let tag = match (self.tag, other.tag) {
            (a, b) if a == b && matches!(a, AutTag::Permutation | AutTag::Linear | AutTag::Monomial | AutTag::VerticalScaling) => a,
            _ => AutTag::Composite,
        };
        Ok(FieldAutomorphism {
            n: self.n,
            field: self.field,
            images,
            inverse_images,
            tag,
            shape,
            inverse_shape,
        })
    }

    pub fn inverse(&self) -> Self {
        FieldAutomorphism {
            n: self.n,
            field: self.field,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
            tag: self.tag,
            shape: self.inverse_shape.clone(),
            inverse_shape: self.shape.clone(),
        }
    }

    /// Smallest k >= 1 with self^k = id, or `CapExceeded` once k passes `cap`.
    pub fn order(&self, cap: usize) -> Result<usize, AutError> {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            k += 1;
            if k > cap {
                return Err(AutError::CapExceeded(cap));
            }
            power = self.compose(&power)?;
        }
        Ok(k)
    }

    pub fn image_strings(&self) -> Vec<String> {
        self.images.iter().map(|r| r.to_string()).collect()
    }
}

impl fmt::Display for FieldAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.image_strings().join(", "))
    }
}

impl Serialize for FieldAutomorphism {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.image_strings().serialize(s)
    }
}

/// A finite group of automorphisms with all elements enumerated and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    field: CoefField,
    generators: Vec<FieldAutomorphism>,
    elements: Vec<FieldAutomorphism>,
}

impl AutGroup {
    pub fn closure(n: usize, field: CoefField, gens: &[FieldAutomorphism], cap: usize) -> Result<Self, AutError> {
        for g in gens {
            check_vec_len(n, g.n)?;
            if g.field != field {
                return Err(AutError::FieldMismatch(field, g.field));
            }
        }
        let gens: Vec<FieldAutomorphism> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = FieldAutomorphism::identity(n, field);
        let mut seen: HashSet<FieldAutomorphism> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.compose(&x)?;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(AutError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<FieldAutomorphism> = seen.into_iter().collect();
        elements.sort();
        Ok(AutGroup {
            n,
            field,
            generators: gens,
            elements,
        })
    }

    pub fn trivial(n: usize, field: CoefField) -> Self {
        AutGroup {
            n,
            field,
            generators: Vec::new(),
            elements: vec![FieldAutomorphism::identity(n, field)],
        }
    }

    /// The σ-maps of a permutation group, without re-enumeration.
    pub fn from_perm_group(g: &PermGroup, field: CoefField) -> Self {
        let mut elements: Vec<FieldAutomorphism> =
            g.elements().iter().map(|p| FieldAutomorphism::from_perm(p, field)).collect();
        elements.sort();
        AutGroup {
            n: g.degree(),
            field,
            generators: g.generators().iter().map(|p| FieldAutomorphism::from_perm(p, field)).collect(),
            elements,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> CoefField {
        self.field
    }

    pub fn generators(&self) -> &[FieldAutomorphism] {
        &self.generators
    }

    pub fn elements(&self) -> &[FieldAutomorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &FieldAutomorphism) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &AutGroup) -> bool {
        self.elements.iter().all(|a| other.contains(a))
    }

    /// Pairwise transitivity of the induced action on variable indices.
    /// Elements that do not send each t_i to a multiple of some t_j^{±1}
    /// contribute nothing.
    pub fn is_transitive(&self) -> bool {
        let shadows: Vec<Perm> = self.elements.iter().filter_map(|a| a.perm_shadow()).collect();
        (0..self.n).all(|i| (i + 1..self.n).all(|j| shadows.iter().any(|p| p.apply(i) == j)))
    }

    /// The group generated by the variable relabellings of the elements,
    /// when every element has one.
    pub fn perm_shadow_group(&self) -> Option<PermGroup> {
        let shadows: Option<Vec<Perm>> = self.elements.iter().map(|a| a.perm_shadow()).collect();
        PermGroup::closure(self.n, &shadows?, usize::MAX).ok()
    }
}

/// A vertical base t_i^{m_i} together with the monomial basis
/// t^r, 0 <= r_i < m_i, of L over K(Δ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceBasisSpec {
    delta_exponents: Vec<u32>,
    basis: Vec<Vec<u32>>,
}

impl NiceBasisSpec {
    pub fn new(mvec: &[u32]) -> Result<Self, AutError> {
        if mvec.is_empty() || mvec.contains(&0) {
            return Err(AutError::InvalidBase(format!("exponents {mvec:?} must be positive")));
        }
        let basis = mvec.iter().map(|&m| 0..m).multi_cartesian_product().collect();
        Ok(NiceBasisSpec {
            delta_exponents: mvec.to_vec(),
            basis,
        })
    }

    pub fn uniform(n: usize, m: u32) -> Result<Self, AutError> {
        Self::new(&vec![m; n])
    }

    pub fn delta_exponents(&self) -> &[u32] {
        &self.delta_exponents
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn nvars(&self) -> usize {
        self.delta_exponents.len()
    }

    pub fn is_uniform(&self) -> bool {
        self.delta_exponents.iter().all_equal()
    }

    pub fn delta_generators(&self, field: CoefField) -> Vec<RatFunc> {
        let n = self.nvars();
        self.delta_exponents
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let mut e = vec![0; n];
                e[i] = m;
                RatFunc::from_poly(MPoly::monomial(field, e, field.one()))
            })
            .collect()
    }

    pub fn basis_monomials(&self, field: CoefField) -> Vec<RatFunc> {
        self.basis
            .iter()
            .map(|e| RatFunc::from_poly(MPoly::monomial(field, e.clone(), field.one())))
            .collect()
    }
}

/// The permutation of the base generators t_i^m lifted to t_i -> t_{p(i)}.
pub fn lift_permutation(p: &Perm, base: &NiceBasisSpec, field: CoefField) -> Result<FieldAutomorphism, AutError> {
    check_vec_len(base.nvars(), p.degree())?;
    if !base.is_uniform() {
        return Err(AutError::NonUniformExponents);
    }
    Ok(FieldAutomorphism::from_perm(p, field))
}

/// Square matrix with entries in K(Δ), written in fresh variables
/// u_i = t_i^{m_i}.
pub type BaseMatrix = Vec<Vec<RatFunc>>;

/// Writes a polynomial whose exponents are multiples of the base exponents
/// as a polynomial in u.
fn to_delta_coords(p: &MPoly, m: &[u32]) -> Option<MPoly> {
    let terms: Option<Vec<(Vec<u32>, FieldElem)>> = p
        .terms()
        .map(|(e, c)| {
            e.iter()
                .zip(m)
                .map(|(&k, &mi)| (k % mi == 0).then_some(k / mi))
                .collect::<Option<Vec<u32>>>()
                .map(|q| (q, c.clone()))
        })
        .collect();
    Some(MPoly::from_terms(p.nvars(), p.field(), terms?))
}

/// Matrix of `a` as a K(Δ)-linear map of L in the monomial basis; column j
/// holds the coordinates of `a(basis[j])`.
pub fn basis_matrix(a: &FieldAutomorphism, base: &NiceBasisSpec) -> Result<BaseMatrix, AutError> {
    let n = base.nvars();
    let field = a.field();
    check_vec_len(n, a.nvars())?;
    for g in base.delta_generators(field) {
        if !a.fixes(&g)? {
            return Err(AutError::NotOverBase);
        }
    }
    let m = base.delta_exponents();
    let index: HashMap<&Vec<u32>, usize> = base.basis().iter().enumerate().map(|(i, e)| (e, i)).collect();
    let size = base.basis().len();
    let mut matrix = vec![vec![RatFunc::zero(n, field); size]; size];
    for (j, b) in base.basis_monomials(field).iter().enumerate() {
        let img = a.apply(b)?;
        let den = to_delta_coords(img.den(), m).ok_or(AutError::CoordinateFailure)?;
        let mut parts: Vec<MPoly> = vec![MPoly::zero(n, field); size];
        for (e, c) in img.num().terms() {
            let q: Vec<u32> = e.iter().zip(m).map(|(&k, &mi)| k / mi).collect();
            let s: Vec<u32> = e.iter().zip(m).map(|(&k, &mi)| k % mi).collect();
            let row = index[&s];
            parts[row].add_term(q, c.clone());
        }
        for (row, part) in parts.into_iter().enumerate() {
            matrix[row][j] = RatFunc::new(part, den.clone())?;
        }
    }
    Ok(matrix)
}

pub fn matrix_product(a: &BaseMatrix, b: &BaseMatrix) -> Result<BaseMatrix, AutError> {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut s = RatFunc::zero(a[i][j].nvars(), a[i][j].field());
            for k in 0..n {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                s = s.checked_add(&a[i][k].checked_mul(&b[k][j])?)?;
            }
            row.push(s);
        }
        out.push(row);
    }
    Ok(out)
}

/// Probes z_j and a point where det[σ_i(z_j)] is nonzero, which certifies
/// that the σ_i are linearly independent over L.
#[derive(Debug, Clone, PartialEq)]
pub struct DedekindWitness {
    pub probes: Vec<RatFunc>,
    pub point: Vec<FieldElem>,
    pub matrix: linalg::Matrix,
    pub determinant: FieldElem,
    pub trial: usize,
}

const DEDEKIND_SEED: u64 = 0x5eed_dede;

fn monomial_probes(n: usize, count: usize, field: CoefField) -> Vec<RatFunc> {
    let mut out = Vec::with_capacity(count);
    let mut deg = 0u32;
    while out.len() < count {
        let mut layer: Vec<Vec<u32>> = (0..n)
            .map(|_| 0..=deg)
            .multi_cartesian_product()
            .filter(|e| e.iter().sum::<u32>() == deg)
            .collect();
        layer.sort_by(|a, b| b.cmp(a));
        for e in layer {
            if out.len() == count {
                break;
            }
            out.push(RatFunc::from_poly(MPoly::monomial(field, e, field.one())));
        }
        deg += 1;
    }
    out
}

fn random_elem(rng: &mut ChaCha8Rng, field: CoefField, lo: i64, hi: i64) -> FieldElem {
    match field {
        CoefField::Rationals => field.from_i64(rng.gen_range(lo..=hi)),
        CoefField::PrimeField(p) => field.from_i64(rng.gen_range(1..p as i64)),
    }
}

fn random_probe(rng: &mut ChaCha8Rng, n: usize, field: CoefField) -> RatFunc {
    let mut poly = |terms: usize| {
        let mut p = MPoly::zero(n, field);
        for _ in 0..terms {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            p.add_term(e, random_elem(rng, field, -3, 3));
        }
        p
    };
    loop {
        let num = poly(3);
        let mut den = poly(1);
        den.add_term(vec![0; n], field.one());
        if den.is_zero() || num.is_zero() {
            continue;
        }
        if let Ok(r) = RatFunc::new(num, den) {
            return r;
        }
    }
}

pub fn dedekind_witness(auts: &[FieldAutomorphism], trials: usize) -> Result<DedekindWitness, AutError> {
    let Some(first) = auts.first() else {
        return Err(AutError::InvalidSpec("no automorphisms given".into()));
    };
    let (n, field) = (first.nvars(), first.field());
    for a in auts {
        check_vec_len(n, a.nvars())?;
    }
    if auts.iter().collect::<HashSet<_>>().len() != auts.len() {
        return Err(AutError::NotDistinct);
    }
    let k = auts.len();
    let mut rng = ChaCha8Rng::seed_from_u64(DEDEKIND_SEED);
    for trial in 0..trials {
        let probes = if trial == 0 {
            monomial_probes(n, k, field)
        } else {
            (0..k).map(|_| random_probe(&mut rng, n, field)).collect()
        };
        let point: Vec<FieldElem> = (0..n).map(|_| random_elem(&mut rng, field, 2, 30)).collect();
        let mut matrix = Vec::with_capacity(k);
        let mut pole = false;
        'rows: for a in auts {
            let mut row = Vec::with_capacity(k);
            for z in &probes {
                match a.apply(z)?.eval(&point) {
                    Ok(v) => row.push(v),
                    Err(RatFuncError::PoleAtPoint) => {
                        pole = true;
                        break 'rows;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            matrix.push(row);
        }
        if pole {
            continue;
        }
        let determinant = linalg::determinant(&matrix, field);
        if !determinant.is_zero() {
            return Ok(DedekindWitness {
                probes,
                point,
                matrix,
                determinant,
                trial,
            });
        }
    }
    Err(AutError::ExhaustedTrials(trials))
}

/// Scalar in JSON: an integer or a string such as `"-3/2"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Int(i64),
    Text(String),
}

impl ScalarSpec {
    pub fn to_elem(&self, field: CoefField) -> Result<FieldElem, AutError> {
        match self {
            ScalarSpec::Int(k) => Ok(field.from_i64(*k)),
            ScalarSpec::Text(s) => {
                let bad = || AutError::InvalidSpec(format!("bad scalar `{s}`"));
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s.trim(), "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                Ok(field.from_ratio(&num, &den)?)
            }
        }
    }
}

/// A permutation as a 1-based image vector or in cycle notation.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    Images(Vec<usize>),
    Cycles(String),
}

impl PermSpec {
    pub fn to_perm(&self, n: usize) -> Result<Perm, AutError> {
        let p = match self {
            PermSpec::Images(v) => Perm::from_images(v)?,
            PermSpec::Cycles(s) => Perm::from_cycles(n, s)?,
        };
        check_vec_len(n, p.degree())?;
        Ok(p)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSpec {
    #[serde(rename = "A")]
    pub a: Vec<Vec<ScalarSpec>>,
    #[serde(rename = "B", default)]
    pub b: Option<Vec<ScalarSpec>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerticalSpec {
    pub m: Vec<u64>,
    pub k: Vec<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionSpec {
    #[serde(default)]
    pub perm: Option<PermSpec>,
}

/// JSON description of a typed automorphism, e.g. `{"perm":[2,3,1]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutSpec {
    Perm(PermSpec),
    Linear(LinearSpec),
    Monomial(Vec<Vec<i64>>),
    Vertical(VerticalSpec),
    Reciprocal(bool),
    Involution(InvolutionSpec),
}

impl AutSpec {
    pub fn build(&self, n: usize, field: CoefField) -> Result<FieldAutomorphism, AutError> {
        let a = match self {
            AutSpec::Perm(p) => FieldAutomorphism::from_perm(&p.to_perm(n)?, field),
            AutSpec::Linear(spec) => {
                let a: Vec<Vec<FieldElem>> = spec
                    .a
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_elem(field)).collect())
                    .collect::<Result<_, _>>()?;
                let b: Vec<FieldElem> = match &spec.b {
                    Some(b) => b.iter().map(|x| x.to_elem(field)).collect::<Result<_, _>>()?,
                    None => vec![field.zero(); a.len()],
                };
                FieldAutomorphism::linear(&a, &b, field)?
            }
            AutSpec::Monomial(e) => FieldAutomorphism::monomial(e, field)?,
            AutSpec::Vertical(v) => FieldAutomorphism::vertical_scaling(&v.m, &v.k, field)?,
            AutSpec::Reciprocal(true) => FieldAutomorphism::reciprocal(n, field),
            AutSpec::Reciprocal(false) => return Err(AutError::InvalidSpec("`reciprocal` must be true".into())),
            AutSpec::Involution(spec) => {
                let p = match &spec.perm {
                    Some(p) => p.to_perm(n)?,
                    None => Perm::identity(n),
                };
                FieldAutomorphism::linear_involution(&p, field)
            }
        };
        check_vec_len(n, a.nvars())?;
        Ok(a)
    }
}

//! Permutations and finite permutation groups, enumerated element by element.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Default bound on the number of elements a closure may enumerate.
pub const DEFAULT_CAP: usize = 45_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("arity mismatch: expected {expected} letters, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("permutation parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// A permutation of {1, ..., n}, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From a 1-based image vector, e.g. `[2, 3, 1]` for (1 2 3).
    pub fn from_images(one_based: &[usize]) -> Result<Self, GroupError> {
        let n = one_based.len();
        if one_based.iter().any(|&x| x == 0 || x > n) {
            return Err(GroupError::NotBijection(n));
        }
        Self::from_zero_based(one_based.iter().map(|x| x - 1).collect())
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::NotBijection(n));
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; commas are allowed.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut rest = text.trim();
        let mut used = vec![false; n];
        while !rest.is_empty() {
            let inner_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| GroupError::Parse(format!("bad cycle notation `{text}`")))?;
            let inner = &rest[1..=inner_end];
            rest = rest[inner_end + 2..].trim_start();
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| GroupError::Parse(format!("bad point `{s}`"))))
                .collect::<Result<_, _>>()?;
            for &p in &pts {
                if p == 0 || p > n {
                    return Err(GroupError::Parse(format!("point {p} outside 1..={n}")));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(GroupError::Parse(format!("point {p} repeated")));
                }
            }
            for (k, &p) in pts.iter().enumerate() {
                images[p - 1] = pts[(k + 1) % pts.len()] - 1;
            }
        }
        Ok(Perm { images })
    }

    /// The n-cycle (1 2 ... n).
    pub fn n_cycle(n: usize) -> Self {
        Perm {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    /// i -> n + 1 - i.
    pub fn reversal(n: usize) -> Self {
        Perm {
            images: (0..n).rev().collect(),
        }
    }

    /// Transposition of the 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image vector.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::ArityMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i8 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PermGroupKind {
    Trivial,
    FullSymmetric,
    Alternating,
    CyclicNCycle,
    Other,
}

/// A finite permutation group with its full, sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl PermGroup {
    /// Breadth-first closure of `gens`; elements come out sorted, so the
    /// result does not depend on generator order.
    pub fn closure(n: usize, gens: &[Perm], cap: usize) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != n {
                return Err(GroupError::ArityMismatch {
                    expected: n,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(n);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            n,
            generators: gens,
            elements,
        })
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            generators: Vec::new(),
            elements: vec![Perm::identity(n)],
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let gens = if n < 2 {
            vec![]
        } else {
            vec![Perm::transposition(n, 0, 1), Perm::n_cycle(n)]
        };
        Self::closure(n, &gens, usize::MAX).expect("no cap")
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Perm> = (2..n)
            .map(|k| Perm::from_zero_based(three_cycle(n, 0, 1, k)).expect("valid"))
            .collect();
        Self::closure(n, &gens, usize::MAX).expect("no cap")
    }

    /// The group generated by (1 2 ... n).
    pub fn cyclic(n: usize) -> Self {
        Self::closure(n, &[Perm::n_cycle(n)], usize::MAX).expect("no cap")
    }

    /// The order-2 group generated by i -> n + 1 - i.
    pub fn reversal_group(n: usize) -> Self {
        Self::closure(n, &[Perm::reversal(n)], usize::MAX).expect("no cap")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.n == g.n && self.elements.iter().all(|p| g.contains(p))
    }

    /// For every pair of letters i < j some element sends i to j.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|i| {
            (i + 1..self.n).all(|j| self.elements.iter().any(|p| p.apply(i) == j))
        })
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements.iter().map(|p| p.apply(i)).collect();
        set.into_iter().collect()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for i in 0..self.n {
            if !seen[i] {
                let o = self.orbit(i);
                for &j in &o {
                    seen[j] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Family recognition with priority Trivial > FullSymmetric > Alternating > CyclicNCycle.
    pub fn classify(&self) -> PermGroupKind {
        let n = self.n;
        let order = self.order();
        if order == 1 {
            PermGroupKind::Trivial
        } else if order == factorial(n) {
            PermGroupKind::FullSymmetric
        } else if order * 2 == factorial(n) && self.elements.iter().all(|p| p.sign() == 1) {
            PermGroupKind::Alternating
        } else if self.is_cyclic_n_cycle() {
            PermGroupKind::CyclicNCycle
        } else {
            PermGroupKind::Other
        }
    }

    /// Order n and generated by an n-cycle.
    pub fn is_cyclic_n_cycle(&self) -> bool {
        self.order() == self.n
            && self
                .elements
                .iter()
                .any(|p| p.cycles().len() == 1 && p.cycles()[0].len() == self.n)
    }

    /// Order 2 with the nontrivial element of the shape of a reversal
    /// (floor(n/2) disjoint transpositions), i.e. generated by some
    /// i -> n + 1 - i up to relabelling.
    pub fn is_reversal_type_involution(&self) -> bool {
        if self.order() != 2 || self.n < 2 {
            return false;
        }
        let g = self.elements.iter().find(|p| !p.is_identity()).expect("order 2");
        let cycles = g.cycles();
        cycles.len() == self.n / 2 && cycles.iter().all(|c| c.len() == 2)
    }

    /// `self` is normal in `g` (brute force over all elements).
    pub fn is_normal_in(&self, g: &PermGroup) -> Result<bool, GroupError> {
        if !self.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(g.elements.iter().all(|x| {
            let xi = x.inverse();
            self.elements
                .iter()
                .all(|h| self.contains(&x.compose_unchecked(&h.compose_unchecked(&xi))))
        }))
    }
}

fn three_cycle(n: usize, a: usize, b: usize, c: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v[a] = b;
    v[b] = c;
    v[c] = a;
    v
}

pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool, GroupError> {
    h.is_normal_in(g)
}

/// Number of subgroups of the symmetric group on m letters, m <= 5.
const KNOWN_SUBGROUP_COUNTS: [usize; 6] = [1, 1, 2, 6, 30, 156];

/// Every subgroup of the symmetric group on `m <= 5` letters, sorted by
/// order and then by element list.
///
/// Closes every subset of at most two elements, then joins pairs until no
/// new subgroup appears.
pub fn subgroups_of_sn(m: usize) -> Result<Vec<PermGroup>, GroupError> {
    if m == 0 || m > 5 {
        return Err(GroupError::Unsupported(format!("subgroup lattice for m = {m}")));
    }
    let sm = PermGroup::symmetric(m);
    let els = sm.elements();
    let mut found: Vec<PermGroup> = Vec::new();
    let mut keys: HashSet<Vec<Perm>> = HashSet::new();
    let mut add = |g: PermGroup, found: &mut Vec<PermGroup>| {
        if keys.insert(g.elements.clone()) {
            found.push(g);
            true
        } else {
            false
        }
    };
    for i in 0..els.len() {
        for j in i..els.len() {
            let g = PermGroup::closure(m, &[els[i].clone(), els[j].clone()], usize::MAX)?;
            add(g, &mut found);
        }
    }
    loop {
        let mut grew = false;
        let snapshot = found.clone();
        for a in 0..snapshot.len() {
            for b in a + 1..snapshot.len() {
                let (x, y) = (&snapshot[a], &snapshot[b]);
                if x.is_subgroup_of(y) || y.is_subgroup_of(x) {
                    continue;
                }
                let gens: Vec<Perm> = x.generators.iter().chain(&y.generators).cloned().collect();
                let j = PermGroup::closure(m, &gens, usize::MAX)?;
                grew |= add(j, &mut found);
            }
        }
        if !grew {
            break;
        }
    }
    assert_eq!(
        found.len(),
        KNOWN_SUBGROUP_COUNTS[m],
        "subgroup enumeration of S_{m} disagrees with the known count"
    );
    found.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(found)
}

/// Normal subgroups of the symmetric group on `m <= 5` letters, by brute force.
pub fn normal_subgroups_of_sn(m: usize) -> Result<Vec<PermGroup>, GroupError> {
    let sm = PermGroup::symmetric(m);
    let mut out = Vec::new();
    for h in subgroups_of_sn(m)? {
        if h.is_normal_in(&sm)? {
            out.push(h);
        }
    }
    Ok(out)
}

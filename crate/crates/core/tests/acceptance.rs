//! Acceptance criteria 1-12. One line per criterion; exits nonzero if any fails.

mod support;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use noether_forge::autos::{
    basis_matrix, dedekind_witness, matrix_product, AutGroup, AutError, FieldAutomorphism, NiceBasisSpec,
};
use noether_forge::field::{CoefField, FieldElem};
use noether_forge::groups::{subgroups_of_sn, Perm, PermGroup, DEFAULT_CAP};
use noether_forge::noether::{self, AuditOptions, NoetherError, Verdict};
use noether_forge::poly::{expand_root_product, symmetric_reduce, MPoly};
use noether_forge::ratfunc::RatFunc;

const Q: CoefField = CoefField::Rationals;

const CRIT1_LIMIT: Duration = Duration::from_secs(10);
const CRIT1_SAMPLES: usize = 120;
const CRIT3_POINTS: usize = 5;
const CRIT3_MIN_NONZERO: usize = 3;
const CRIT7_AUTS: usize = 200;
const CRIT7_PAIRS: usize = 100;
const CRIT8_FUNCTIONS: usize = 50;
const CRIT10_TRIALS: usize = 50;
const CRIT11_LIMIT: Duration = Duration::from_secs(60);
const SEED: u64 = 0xacce_97;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles ----

/// e_k in the first m of `nvars` variables, as a sum over k-subsets.
fn oracle_e(k: usize, m: usize, nvars: usize, field: CoefField) -> MPoly {
    let mut sum = MPoly::zero(nvars, field);
    for subset in (0..m).combinations(k) {
        let mut e = vec![0u32; nvars];
        for i in subset {
            e[i] = 1;
        }
        sum.add_term(e, field.one());
    }
    sum
}

fn orbit_sum(e: &[u32], c: FieldElem) -> MPoly {
    let n = e.len();
    let images: BTreeSet<Vec<u32>> = (0..n).permutations(n).map(|p| p.iter().map(|&i| e[i]).collect()).collect();
    let mut p = MPoly::zero(n, c.field());
    for img in images {
        p.add_term(img, c.clone());
    }
    p
}

/// Transitive in the sense: for all i < j some element sends t_i to t_j.
fn oracle_transitive(elements: &[Perm]) -> bool {
    let n = elements.first().map_or(0, |p| p.degree());
    (0..n).all(|i| (i + 1..n).all(|j| elements.iter().any(|g| g.apply(i) == j)))
}

fn rat(x: &FieldElem) -> BigRational {
    x.as_rational().expect("rational").clone()
}

fn oracle_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let d = &f * &a[c][k];
                a[r][k] -= d;
            }
        }
    }
    det
}

fn small_rf(rng: &mut ChaCha8Rng, n: usize) -> RatFunc {
    loop {
        let poly = |rng: &mut ChaCha8Rng, terms: usize| {
            let mut p = MPoly::zero(n, Q);
            for _ in 0..terms {
                p.add_term((0..n).map(|_| rng.gen_range(0..3)).collect(), Q.from_i64(rng.gen_range(-3..4)));
            }
            p
        };
        let (a, b) = (rng.gen_range(1..4), rng.gen_range(1..3));
        let (num, den) = (poly(rng, a), poly(rng, b));
        if let Ok(r) = RatFunc::new(num, den) {
            return r;
        }
    }
}

// ---- criteria ----

fn c1_symmetric_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let start = Instant::now();
    for s in 0..CRIT1_SAMPLES {
        let n = rng.gen_range(1..=4);
        let mut f = MPoly::zero(n, Q);
        for _ in 0..rng.gen_range(1..=4) {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=6) {
                e[rng.gen_range(0..n)] += 1;
            }
            let c = Q.from_ratio(&BigInt::from(rng.gen_range(-9..=9)), &BigInt::from(rng.gen_range(1..=4))).unwrap();
            f = &f + &orbit_sum(&e, c);
        }
        check(f.total_degree() <= 6, || format!("sample {s} exceeds degree 6"))?;
        let red = symmetric_reduce(&f);
        check(red.residue.is_zero(), || format!("sample {s}: residue {} for {f}", red.residue))?;
        let es: Vec<MPoly> = (1..=n).map(|k| oracle_e(k, n, n, Q)).collect();
        let back = red.expression.compose(&es).map_err(|e| e.to_string())?;
        check(back == f, || format!("sample {s}: back-substitution differs for {f}"))?;
    }
    let took = start.elapsed();
    check(took < CRIT1_LIMIT, || format!("took {took:?}, limit {CRIT1_LIMIT:?}"))?;
    Ok(format!("{CRIT1_SAMPLES} polynomials in {took:.2?} (limit {CRIT1_LIMIT:?})"))
}

fn c2_root_product() -> Outcome {
    for field in [Q, CoefField::prime(7).unwrap()] {
        for m in 1..=6 {
            let rep = expand_root_product(m, field);
            check(rep.passed, || format!("m = {m} over {field}: library check failed"))?;
            for (k, c) in rep.coefficients.iter().enumerate() {
                let mut want = oracle_e(k, m, c.nvars(), field);
                if k % 2 == 1 {
                    want = -&want;
                }
                check(*c == want, || format!("m = {m} over {field}: coefficient {k} is {c}"))?;
            }
        }
    }
    Ok("m = 1..6 over Q and F7 match signed subset sums".into())
}

fn c3_free_rank() -> Outcome {
    let mut details = Vec::new();
    for m in 2..=3usize {
        let basis = noether::artin_basis(m, Q);
        let fact: usize = (1..=m).product();
        check(basis.len() == fact, || format!("m = {m}: basis has {} elements", basis.len()))?;
        let mut nonzero = 0;
        for pt in noether::random_points(m, CRIT3_POINTS, SEED ^ 3 ^ m as u64, Q) {
            let det = noether::free_rank_determinant(m, &pt, Q).map_err(|e| e.to_string())?;
            // det = ±Vandermonde^(m!/2), so det^2 = Vandermonde^(m!)
            let x: Vec<BigRational> = pt.iter().map(rat).collect();
            let mut vdm = BigRational::one();
            for i in 0..m {
                for j in i + 1..m {
                    vdm *= &x[i] - &x[j];
                }
            }
            let d = rat(&det);
            check(&d * &d == num_traits::pow(vdm.clone(), fact), || {
                format!("m = {m}: det {d} is not a signed power of the Vandermonde {vdm}")
            })?;
            if !d.is_zero() {
                nonzero += 1;
            }
        }
        check(nonzero >= CRIT3_MIN_NONZERO, || format!("m = {m}: only {nonzero} nonzero determinants"))?;
        details.push(format!("m = {m}: {nonzero}/{CRIT3_POINTS} nonzero"));
    }
    Ok(details.join(", "))
}

fn c4_classifier_table() -> Outcome {
    let verify_flag = |g: &PermGroup, got: bool, label: &str| {
        let want = oracle_transitive(g.elements());
        check(got == want, || format!("{label}: transitive flag {got}, expected {want}"))
    };
    for n in 3..=6 {
        let sym = PermGroup::symmetric(n);
        let r = noether::classify_permutation_subgroup(&sym, Q);
        check(r.verdict == Verdict::Solution, || format!("S{n}: {:?}", r.verdict))?;
        verify_flag(&sym, r.transitive, &format!("S{n}"))?;
        let w = r.witness_generators.as_ref().ok_or(format!("S{n}: no witnesses"))?;
        check(w.len() == n, || format!("S{n}: {} witnesses", w.len()))?;
        for (k, gen) in w.iter().enumerate() {
            check(gen.den().is_one() && *gen.num() == oracle_e(k + 1, n, n, Q), || {
                format!("S{n}: witness {k} is {gen}")
            })?;
            for p in sym.generators() {
                let images: Vec<RatFunc> = (0..n).map(|i| RatFunc::var(n, Q, p.apply(i))).collect();
                check(gen.substitute(&images).unwrap() == *gen, || format!("S{n}: {gen} not invariant"))?;
            }
        }
        for (label, g, cite) in [
            (format!("C{n}"), PermGroup::cyclic(n), "Lemma 7.16 vii"),
            (format!("A{n}"), PermGroup::alternating(n), "Lemma 7.17 v"),
        ] {
            let r = noether::classify_permutation_subgroup(&g, Q);
            check(r.verdict == Verdict::NonSolution, || format!("{label}: {:?}", r.verdict))?;
            check(r.citation.contains(cite), || format!("{label}: citation `{}`", r.citation))?;
            verify_flag(&g, r.transitive, &label)?;
        }
        let triv = PermGroup::trivial(n);
        let r = noether::classify_permutation_subgroup(&triv, Q);
        check(r.verdict == Verdict::Solution, || format!("trivial on {n}: {:?}", r.verdict))?;
        verify_flag(&triv, r.transitive, "trivial")?;
    }
    for n in 1..=2 {
        for g in subgroups_of_sn(n).map_err(|e| e.to_string())? {
            let r = noether::classify_permutation_subgroup(&g, Q);
            check(r.verdict == Verdict::Solution, || format!("order {} on {n}: {:?}", g.order(), r.verdict))?;
            verify_flag(&g, r.transitive, "small")?;
        }
    }
    Ok("n = 3..6 families, trivial groups, all subgroups for n = 1, 2".into())
}

fn c5_vertical() -> Outcome {
    let mut admissible = 0;
    for p in [5u64, 7, 11, 13] {
        let f = CoefField::prime(p).unwrap();
        for m in 1..=12u64 {
            let r = noether::classify_vertical(&[m], f, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let want = (p - 1) % m == 0;
            let want_verdict = if want { Verdict::SolutionByRootsOfUnity } else { Verdict::CriterionNotMet };
            check(r.verdict == want_verdict, || format!("F{p}, m = {m}: {:?}", r.verdict))?;
        }
        let divisors: Vec<u64> = (1..=12).filter(|m| (p - 1) % m == 0).collect();
        for mvec in divisors.iter().map(|&m| vec![m]).chain(divisors.iter().cartesian_product(&divisors).map(|(&a, &b)| vec![a, b])) {
            let r = noether::classify_vertical(&mvec, f, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let want: u64 = mvec.iter().product();
            let gens: Vec<FieldAutomorphism> = (0..mvec.len())
                .map(|i| {
                    let mut k = vec![0i64; mvec.len()];
                    k[i] = 1;
                    FieldAutomorphism::vertical_scaling(&mvec, &k, f)
                })
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let enumerated = AutGroup::closure(mvec.len(), f, &gens, DEFAULT_CAP).map_err(|e| e.to_string())?.order();
            check(r.verdict == Verdict::SolutionByRootsOfUnity, || format!("F{p} {mvec:?}: {:?}", r.verdict))?;
            check(enumerated as u64 == want && r.group_order as u64 == want, || {
                format!("F{p} {mvec:?}: enumerated {enumerated}, reported {}, expected {want}", r.group_order)
            })?;
            admissible += 1;
        }
    }
    Ok(format!("verdicts for m <= 12 and {admissible} admissible group orders"))
}

fn c6_witnesses() -> Outcome {
    let mut problems = Vec::new();
    for (n, orders) in [(3usize, [6usize, 48]), (4, [24, 384])] {
        let w = noether::witnesses_theorem_1_8(n, Q, DEFAULT_CAP).map_err(|e| e.to_string())?;
        check(w.solutions.len() == 2 && w.non_solutions.len() == 6, || {
            format!("n = {n}: {} solutions, {} non-solutions", w.solutions.len(), w.non_solutions.len())
        })?;
        let got: Vec<usize> = w.solutions.iter().map(|f| f.report.group_order).collect();
        check(got == orders, || format!("n = {n}: solution orders {got:?}, expected {orders:?}"))?;
        for f in w.solutions.iter().chain(&w.non_solutions) {
            if !f.report.transitive {
                problems.push(format!("n = {n}: {} (order {}) is not transitive", f.family, f.report.group_order));
            }
        }
    }
    let audit = noether::audit_paper(&["lifted-group-order".into()], &AuditOptions::default()).map_err(|e| e.to_string())?;
    check(audit.iter().all(|f| f.discrepancy), || "2n*n! figure is not flagged".into())?;
    if problems.is_empty() {
        Ok("counts, orders and transitivity hold for n = 3, 4".into())
    } else {
        Err(problems.join("; "))
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut e: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    e.shuffle(rng);
    for _ in 0..rng.gen_range(0..5) {
        if n < 2 {
            break;
        }
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            for k in 0..n {
                e[i][k] += s * e[j][k];
            }
        }
    }
    if rng.gen_bool(0.3) {
        let i = rng.gen_range(0..n);
        e[i].iter_mut().for_each(|x| *x = -*x);
    }
    e
}

fn random_aut(rng: &mut ChaCha8Rng, n: usize) -> FieldAutomorphism {
    loop {
        let a = match rng.gen_range(0..3) {
            0 => {
                let mut v: Vec<usize> = (0..n).collect();
                v.shuffle(rng);
                Ok(FieldAutomorphism::from_perm(&Perm::from_zero_based(v).unwrap(), Q))
            }
            1 => {
                let a: Vec<Vec<FieldElem>> = (0..n).map(|_| (0..n).map(|_| Q.from_i64(rng.gen_range(-2..=2))).collect()).collect();
                let b: Vec<FieldElem> = (0..n).map(|_| Q.from_i64(rng.gen_range(-3..=3))).collect();
                FieldAutomorphism::linear(&a, &b, Q)
            }
            _ => FieldAutomorphism::monomial(&random_unimodular(rng, n), Q),
        };
        match a {
            Ok(a) => return a,
            Err(AutError::SingularMatrix) => continue,
            Err(e) => panic!("unexpected error building an automorphism: {e}"),
        }
    }
}

fn c7_automorphism_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for s in 0..CRIT7_AUTS {
        let n = rng.gen_range(1..=4);
        let a = random_aut(&mut rng, n);
        let inv = a.inverse();
        let both = a.compose(&inv).map_err(|e| e.to_string())?.is_identity()
            && inv.compose(&a).map_err(|e| e.to_string())?.is_identity();
        check(both, || format!("sample {s}: {a} composed with its inverse is not the identity"))?;
        // plain substitution, independent of the typed fast paths
        for (i, img) in a.images().iter().enumerate() {
            let back = img.substitute(inv.images()).map_err(|e| e.to_string())?;
            check(back == RatFunc::var(n, Q, i), || format!("sample {s}: t{} comes back as {back}", i + 1))?;
        }
    }
    for s in 0..CRIT7_PAIRS {
        let n = rng.gen_range(1..=4);
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut rng);
        let p = Perm::from_zero_based(v.clone()).unwrap();
        v.shuffle(&mut rng);
        let q = Perm::from_zero_based(v).unwrap();
        let lhs = FieldAutomorphism::from_perm(&p.compose(&q).unwrap(), Q);
        let rhs = FieldAutomorphism::from_perm(&p, Q).compose(&FieldAutomorphism::from_perm(&q, Q)).unwrap();
        check(lhs == rhs, || format!("pair {s}: from_perm({p} o {q}) = {lhs}, product {rhs}"))?;
    }
    Ok(format!("{CRIT7_AUTS} inverses, {CRIT7_PAIRS} homomorphism pairs"))
}

fn c8_reynolds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let s3 = AutGroup::from_perm_group(&PermGroup::symmetric(3), Q);
    for s in 0..CRIT8_FUNCTIONS {
        let f = small_rf(&mut rng, 3);
        let g = small_rf(&mut rng, 3);
        let c = Q.from_i64(rng.gen_range(-5..=5));
        let err = |e: NoetherError| e.to_string();
        let r = noether::reynolds(&f, &s3).map_err(err)?;
        let lin = noether::reynolds(&f.scale(&c).checked_add(&g).unwrap(), &s3).map_err(err)?;
        let want = r.scale(&c).checked_add(&noether::reynolds(&g, &s3).map_err(err)?).unwrap();
        check(lin == want, || format!("sample {s}: not linear on {f}, {g}"))?;
        check(noether::reynolds(&r, &s3).map_err(err)? == r, || format!("sample {s}: not idempotent on {f}"))?;
        for a in s3.elements() {
            check(a.apply(&r).unwrap() == r, || format!("sample {s}: R({f}) moved by {a}"))?;
        }
    }
    for p in [2u64, 3, 5, 7, 11] {
        let f = CoefField::prime(p).unwrap();
        for g in [PermGroup::symmetric(3), PermGroup::cyclic(5), PermGroup::symmetric(2)] {
            let ag = AutGroup::from_perm_group(&g, f);
            let t = RatFunc::var(g.degree(), f, 0);
            let failed = matches!(noether::reynolds(&t, &ag), Err(NoetherError::CharDividesOrder { .. }));
            let want = g.order() as u64 % p == 0;
            check(failed == want, || format!("F{p}, order {}: error {failed}, expected {want}", g.order()))?;
        }
    }
    Ok(format!("{CRIT8_FUNCTIONS} functions; char | |G| exactly when rejected"))
}

fn c9_basis_matrix() -> Outcome {
    let base = NiceBasisSpec::new(&[2]).map_err(|e| e.to_string())?;
    let neg = FieldAutomorphism::vertical_scaling(&[2], &[1], Q).map_err(|e| e.to_string())?;
    check(neg.images()[0] == RatFunc::var(1, Q, 0).scale(&Q.from_i64(-1)), || format!("{neg} is not t -> -t"))?;
    let m = basis_matrix(&neg, &base).map_err(|e| e.to_string())?;
    let c = |x: i64| RatFunc::constant(1, Q.from_i64(x));
    check(m == vec![vec![c(1), c(0)], vec![c(0), c(-1)]], || format!("quadratic matrix {m:?}"))?;

    let f5 = CoefField::prime(5).unwrap();
    let base4 = NiceBasisSpec::new(&[4]).map_err(|e| e.to_string())?;
    let g = FieldAutomorphism::vertical_scaling(&[4], &[1], f5).map_err(|e| e.to_string())?;
    let group = AutGroup::closure(1, f5, &[g], DEFAULT_CAP).map_err(|e| e.to_string())?;
    check(group.order() == 4, || format!("scaling group has order {}", group.order()))?;
    for a in group.elements() {
        for b in group.elements() {
            let lhs = basis_matrix(&a.compose(b).unwrap(), &base4).map_err(|e| e.to_string())?;
            let rhs = matrix_product(&basis_matrix(a, &base4).unwrap(), &basis_matrix(b, &base4).unwrap())
                .map_err(|e| e.to_string())?;
            check(lhs == rhs, || format!("functoriality fails for {a}, {b}"))?;
        }
    }
    Ok("diag(1, -1) and 16 products over F5".into())
}

fn c10_dedekind() -> Outcome {
    let n = 3;
    let mut pool: Vec<FieldAutomorphism> = AutGroup::from_perm_group(&PermGroup::symmetric(n), Q).elements().to_vec();
    pool.push(FieldAutomorphism::reciprocal(n, Q));
    for i in 0..n {
        let mut k = vec![0i64; n];
        k[i] = 1;
        pool.push(FieldAutomorphism::vertical_scaling(&[2; 3], &k, Q).map_err(|e| e.to_string())?);
    }
    check(pool.iter().collect::<BTreeSet<_>>().len() == pool.len(), || "pool has repeats".into())?;
    let mut subsets = 0;
    let mut worst = 0;
    for k in 1..=4 {
        for subset in pool.iter().cloned().combinations(k) {
            let w = dedekind_witness(&subset, CRIT10_TRIALS).map_err(|e| format!("{subset:?}: {e}"))?;
            let mut matrix = Vec::new();
            for a in &subset {
                let row: Vec<BigRational> = w
                    .probes
                    .iter()
                    .map(|z| rat(&z.substitute(a.images()).unwrap().eval(&w.point).unwrap()))
                    .collect();
                matrix.push(row);
            }
            let det = oracle_det(&matrix);
            check(!det.is_zero() && det == rat(&w.determinant), || format!("subset {subsets}: determinant {det}"))?;
            worst = worst.max(w.trial);
            subsets += 1;
        }
    }
    Ok(format!("{subsets} subsets, latest success at trial {worst}"))
}

/// All subgroups of S4, by closing pairs of elements; every subgroup of S4
/// is generated by two elements.
fn oracle_s4_normal_orders() -> Vec<usize> {
    let elems: Vec<Vec<usize>> = (0..4).permutations(4).collect();
    let mul = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
    let inv = |a: &[usize]| -> Vec<usize> {
        let mut r = vec![0; 4];
        for (i, &j) in a.iter().enumerate() {
            r[j] = i;
        }
        r
    };
    let mut subgroups: BTreeSet<BTreeSet<Vec<usize>>> = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            let mut set: BTreeSet<Vec<usize>> = [vec![0, 1, 2, 3]].into();
            loop {
                let mut grown = set.clone();
                for x in &set {
                    grown.insert(mul(x, a));
                    grown.insert(mul(x, b));
                }
                if grown.len() == set.len() {
                    break;
                }
                set = grown;
            }
            subgroups.insert(set);
        }
    }
    let mut orders: Vec<usize> = subgroups
        .iter()
        .filter(|h| elems.iter().all(|g| h.iter().all(|x| h.contains(&mul(&mul(g, x), &inv(g))))))
        .map(|h| h.len())
        .collect();
    orders.sort_unstable();
    orders
}

fn c11_audit() -> Outcome {
    let start = Instant::now();
    let findings = noether::audit_paper(&["all".into()], &AuditOptions::default()).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    check(took < CRIT11_LIMIT, || format!("took {took:?}, limit {CRIT11_LIMIT:?}"))?;
    let flagged: Vec<&str> = findings.iter().filter(|f| f.discrepancy).map(|f| f.check_id.as_str()).collect();
    check(flagged == ["lifted-group-order", "s4-normal-subgroups"], || format!("flagged {flagged:?}"))?;
    let by_id = |id: &str| findings.iter().find(|f| f.check_id == id).ok_or(format!("missing {id}"));
    for id in ["a-m-three-cycles", "reversal-sign", "reciprocal-involution", "sym-free-rank"] {
        check(!by_id(id)?.discrepancy, || format!("{id} flagged"))?;
    }
    let orders = oracle_s4_normal_orders();
    let s4 = &by_id("s4-normal-subgroups")?.computed;
    check(s4["orders"] == serde_json::json!(orders) && s4["count"] == orders.len(), || format!("s4 computed {s4}"))?;
    let lifted = &by_id("lifted-group-order")?.computed;
    check(lifted["order"] == 8 * 6, || format!("lifted computed {lifted}"))?;
    let signs: Vec<i64> = (1..=8i64).map(|n| if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 }).collect();
    check(by_id("reversal-sign")?.computed == serde_json::json!(signs), || "reversal signs differ".into())?;
    Ok(format!("{} checks in {took:.2?} (limit {CRIT11_LIMIT:?})", findings.len()))
}

fn c12_cli() -> Outcome {
    let examples = support::documented_examples();
    for args in &examples {
        let a = support::run(args);
        let b = support::run(args);
        check(a.status.success(), || format!("{args:?} exited {:?}", a.status.code()))?;
        check(a.stdout == b.stdout, || format!("{args:?} is not byte-identical across runs"))?;
        let v: Value = serde_json::from_slice(&a.stdout).map_err(|e| format!("{args:?}: {e}"))?;
        support::validate(args[0], &v).map_err(|errs| format!("{args:?}: {errs:?}"))?;
    }
    Ok(format!("{} documented invocations", examples.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("symmetric reduction round trip", c1_symmetric_round_trip),
        ("root-product identity", c2_root_product),
        ("free-module rank m!", c3_free_rank),
        ("classifier table", c4_classifier_table),
        ("vertical criterion", c5_vertical),
        ("coexistence witnesses", c6_witnesses),
        ("automorphism algebra", c7_automorphism_algebra),
        ("Reynolds operator", c8_reynolds),
        ("basis matrices", c9_basis_matrix),
        ("Dedekind independence", c10_dedekind),
        ("audit", c11_audit),
        ("CLI determinism and schemas", c12_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

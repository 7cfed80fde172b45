//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process fails if a criterion fails that is not listed in `KNOWN_FAILURES`,
//! or if a listed one unexpectedly passes.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kumcert::exact::{discriminant, is_irreducible};
use kumcert::kumgeo::{classical_resolvent, kummer_quadrics, resolvent_cubic, theorem_a_surface, KummerSurfaceA};
use kumcert::localarith::{
    lambda_nontrivial_class, lambda_parity_condition, reduction_type, ClassStatus, Decision, ReductionClass,
};
use kumcert::locsol::{
    padic_solubility_a, padic_solubility_quadrics, real_solubility_a, verify_padic_vector, verify_witness_a,
    LocalEffort,
};
use kumcert::modf2::{
    check_lemma_f1, check_prop_a1, h1_dim, lift_with_targets, torsor_field_no_quadratic_subext,
};
use kumcert::permgrp::{galois_group_quintic, GaloisClass};
use kumcert::pipeline::{find_admissible_prime, AdmissiblePrimeQuery};
use kumcert::{
    Cocycle, F2GModule, LambdaElement, Outcome, PermGroup, Permutation, Place, PolyQ, QuadricForm, Rational,
    SemidirectGroup,
};

/// Criteria expected to fail, with the reason printed alongside.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    7,
    "t^3 - 27It - 27J has discriminant 3^12 disc(g); the classical resolvent matches exactly",
)];

struct Verdict {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict { ok: false, detail: detail.into() }
}

fn poly(s: &str) -> PolyQ {
    s.parse().unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn cycle(m: usize, c: &[usize]) -> Permutation {
    Permutation::from_cycles(m, &[c]).unwrap()
}

// ---------------------------------------------------------------- 1

fn criterion_1() -> Verdict {
    for m in [3usize, 5, 7] {
        let zs = F2GModule::zero_sum(m).unwrap();
        let long: Vec<usize> = (0..m).collect();
        let short: Vec<usize> = (0..m - 1).collect();
        let got = (
            zs.is_simple(),
            zs.endomorphism_dim(),
            h1_dim(&zs).unwrap(),
            zs.coinvariant_dim(&cycle(m, &short)).unwrap(),
            zs.coinvariant_dim(&cycle(m, &long)).unwrap(),
        );
        if got != (true, 1, 0, 1, 0) {
            return fail(format!("m = {m}: {got:?}"));
        }
        let perm = F2GModule::permutation_module(Arc::new(PermGroup::symmetric(m).unwrap()));
        let h = h1_dim(&perm).unwrap();
        if h != 1 {
            return fail(format!("m = {m}: h1 of the permutation module is {h}"));
        }
    }
    pass("m = 3, 5, 7")
}

// ---------------------------------------------------------------- 2

fn random_model(rng: &mut ChaCha8Rng, base: usize, t: usize) -> (SemidirectGroup, Vec<Cocycle>) {
    let m = F2GModule::zero_sum(base).unwrap();
    let d = m.dim();
    let n = if base == 3 { rng.random_range(1..=3) } else { rng.random_range(1..=2) };
    let model = SemidirectGroup::new(m, n).unwrap();
    let proj: Vec<Cocycle> = (0..n).map(|c| Cocycle::projection(&model, c).unwrap()).collect();
    let mut cs = Vec::new();
    for _ in 0..t {
        let mask: u32 = rng.random_range(1..1u32 << n);
        let mut c = Cocycle::coboundary(&model, rng.random_range(0..1u64 << d));
        for (s, p) in proj.iter().enumerate() {
            if mask >> s & 1 == 1 {
                c = c.add(p);
            }
        }
        cs.push(c);
    }
    (model, cs)
}

fn criterion_2() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut counts = [0usize; 2];
    for k in 0..50 {
        let base = if k % 2 == 0 { 3 } else { 5 };
        let t = 1 + (k / 2) % 2;
        let (model, cs) = random_model(&mut rng, base, t);
        match check_prop_a1(&model, &cs) {
            Ok(r) if r.all_equal() => counts[r.independent as usize] += 1,
            Ok(r) => return fail(format!("model {k}: {:?}", r.all())),
            Err(e) => return fail(format!("model {k}: {e}")),
        }
    }
    for base in [3usize, 5] {
        let model = SemidirectGroup::new(F2GModule::zero_sum(base).unwrap(), 2).unwrap();
        let a = Cocycle::projection(&model, 0).unwrap();
        let degenerate = [vec![a.clone(), a.clone()], vec![a.clone(), Cocycle::zero(&model)]];
        for cs in &degenerate {
            let r = check_prop_a1(&model, cs).map(|r| r.all());
            if !matches!(r, Ok([false, false, false, false, false])) {
                return fail(format!("degenerate S{base} model gave {r:?}"));
            }
        }
    }
    pass(format!("50 models ({} all-true, {} all-false), 4 degenerate", counts[1], counts[0]))
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Verdict {
    let m = F2GModule::zero_sum(3).unwrap();
    let model = SemidirectGroup::new(m.clone(), 2).unwrap();
    let cs: Vec<Cocycle> = (0..2).map(|c| Cocycle::projection(&model, c).unwrap()).collect();
    let group = m.group().clone();
    let mut lifts = 0;
    for (gi, g) in group.elements().iter().enumerate() {
        // Coset representatives of M/(g-1)M: reduce every vector against the image.
        let image = m.mat(gi).add_identity().image();
        let mut reps: Vec<u64> = Vec::new();
        for v in 0..1u64 << m.dim() {
            if reps.iter().all(|&r| !image.contains(vec![r ^ v])) {
                reps.push(v);
            }
        }
        for &a in &reps {
            for &b in &reps {
                let x = match lift_with_targets(&model, &cs, g, &[a, b]) {
                    Ok(x) => x,
                    Err(e) => return fail(format!("{g} targets ({a}, {b}): {e}")),
                };
                let ok = model.project(x) == gi
                    && image.contains(vec![cs[0].value(x) ^ a])
                    && image.contains(vec![cs[1].value(x) ^ b]);
                if !ok {
                    return fail(format!("{g}: bad lift for ({a}, {b})"));
                }
                lifts += 1;
            }
        }
    }
    pass(format!("{lifts} lifts over 6 elements"))
}

// ---------------------------------------------------------------- 4

fn criterion_4() -> Verdict {
    for m in [3usize, 5] {
        match check_lemma_f1(&F2GModule::zero_sum(m).unwrap(), 1) {
            Ok(true) => {}
            other => return fail(format!("dichotomy on M ⋊ S{m}: {other:?}")),
        }
    }
    let p = |c: &[&[usize]]| Permutation::from_cycles(6, c).unwrap();
    let g = Arc::new(PermGroup::closure(&[p(&[&[0, 1]]), p(&[&[0, 1, 2]]), p(&[&[3, 4]]), p(&[&[3, 4, 5]])]).unwrap());
    let model = SemidirectGroup::new(F2GModule::zero_sum_of(g), 1).unwrap();
    let a = Cocycle::projection(&model, 0).unwrap();
    match torsor_field_no_quadratic_subext(&model, &a) {
        Ok(true) => pass("S4, S5 models; two-factor S3 x S3 model"),
        other => fail(format!("two-factor model: {other:?}")),
    }
}

// ---------------------------------------------------------------- 5

fn criterion_5() -> Verdict {
    let f = poly("x^5 - x - 1");
    let disc = discriminant(&f).unwrap();
    if disc != q(2869) {
        return fail(format!("disc = {disc}"));
    }
    let r = reduction_type(&f, 19).unwrap();
    if r.disc_valuation != 1 || r.classification != ReductionClass::Node {
        return fail(format!("reduction at 19: {r:?}"));
    }
    let v = galois_group_quintic(&f, 1000).unwrap();
    let has = |p: u64, t: &[usize]| v.witnesses.iter().any(|w| w.prime == p && w.cycle_type == t);
    if !matches!(v.classification, GaloisClass::Symmetric | GaloisClass::SymmetricAff5Excluded)
        || !has(2, &[3, 2])
        || !has(5, &[5])
    {
        return fail(format!("galois: {:?} {:?}", v.classification, v.witnesses));
    }
    let zs = F2GModule::zero_sum(5).unwrap();
    let mut local = Vec::new();
    for c in [vec![0, 1, 2, 3], vec![0, 1, 2, 3, 4]] {
        let g = cycle(5, &c);
        let h = zs.local_h1_dim(&g).unwrap();
        if h != 2 * zs.coinvariant_dim(&g).unwrap() {
            return fail("local H1 differs from twice the coinvariants");
        }
        local.push(h);
    }
    if local != [2, 0] {
        return fail(format!("local dims {local:?}"));
    }
    pass("disc 2869, node at 19, witnesses p=2 (3,2) and p=5 (5), local dims 2 and 0")
}

// ---------------------------------------------------------------- 6

fn random_monic_quintic(rng: &mut ChaCha8Rng) -> PolyQ {
    loop {
        let mut c: Vec<i64> = (0..5).map(|_| rng.random_range(-9..=9)).collect();
        c.push(1);
        let f = PolyQ::from_ints(&c);
        if is_irreducible(&f).unwrap() {
            return f;
        }
    }
}

/// Zero as a binary form in (r, s) iff it vanishes at (1,0), (0,1) and (1,1).
fn vanishes_on_line(form: &QuadricForm) -> bool {
    [(1, 0), (0, 1), (1, 1)].iter().all(|&(r, s)| {
        let mut x = vec![q(0); 6];
        x[0] = q(r);
        x[1] = q(s);
        x[5] = q(s);
        form.eval(&x).is_zero()
    })
}

fn criterion_6() -> Verdict {
    let pinned = [
        "x^5 - x - 1",
        "x^5 - 6x + 3",
        "x^5 - 2",
        "x^5 - x + 1",
        "x^5 + 2x + 1",
        "x^5 - 3x - 1",
        "x^5 + x^4 - 1",
        "x^5 - 4x + 2",
        "x^5 + 3x^3 + 1",
        "x^5 - x^2 - 1",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut fs: Vec<PolyQ> = pinned.iter().map(|s| poly(s)).collect();
    if let Some(f) = fs.iter().find(|f| !is_irreducible(f).unwrap()) {
        return fail(format!("pinned {f} is reducible"));
    }
    fs.extend((0..50).map(|_| random_monic_quintic(&mut rng)));
    for f in &fs {
        let s = kummer_quadrics(f, &LambdaElement::one()).unwrap();
        if !s.quadrics.iter().all(vanishes_on_line) {
            return fail(format!("line not on the surface for {f}"));
        }
    }
    pass(format!("{} quintics", fs.len()))
}

// ---------------------------------------------------------------- 7

fn random_quartic(rng: &mut ChaCha8Rng) -> PolyQ {
    loop {
        let mut c: Vec<i64> = (0..5).map(|_| rng.random_range(-9..=9)).collect();
        if c[4] == 0 {
            c[4] = 1;
        }
        let g = PolyQ::from_ints(&c);
        if !discriminant(&g).unwrap().is_zero() {
            return g;
        }
    }
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut equal = 0;
    let mut ratio_3_12 = 0;
    let mut classical = 0;
    let scale = q(3i64.pow(12));
    for _ in 0..200 {
        let g = random_quartic(&mut rng);
        let d = discriminant(&g).unwrap();
        let dr = discriminant(&resolvent_cubic(&g).unwrap().cubic).unwrap();
        if dr == d {
            equal += 1;
        }
        if dr == &scale * &d {
            ratio_3_12 += 1;
        }
        if discriminant(&classical_resolvent(&g).unwrap()).unwrap() == d {
            classical += 1;
        }
    }
    let detail = format!("{equal}/200 equal; {ratio_3_12}/200 differ by exactly 3^12; classical resolvent {classical}/200");
    if equal == 200 {
        pass(detail)
    } else {
        fail(detail)
    }
}

// ---------------------------------------------------------------- 8

fn pval(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// Whether a nonzero rational is a square class in Q_p (p odd), from valuations
/// and Euler's criterion on the unit part.
fn is_padic_square(x: &Rational, p: u64) -> bool {
    let (n, d) = (x.numer().clone(), x.denom().clone());
    let (vn, vd) = (pval(&n, p), pval(&d, p));
    if (vn + vd) % 2 == 1 {
        return false;
    }
    let pb = BigInt::from(p);
    let unit = (n / pb.pow(vn)) * (d / pb.pow(vd));
    let r = unit.mod_floor(&pb);
    r.modpow(&BigInt::from((p - 1) / 2), &pb).is_one()
}

/// Searches x, y over residues mod p^k and the reciprocals of multiples of p.
fn brute_force_a(s: &KummerSurfaceA, p: u64, k: u32) -> bool {
    let n = p.pow(k) as i64;
    let mut xs: Vec<Rational> = (0..n).map(q).collect();
    xs.extend((1..n).filter(|a| a % p as i64 == 0).map(|a| Rational::new(1.into(), a.into())));
    xs.iter().any(|x| {
        xs.iter().any(|y| {
            let v = s.eval(x, y);
            v.is_zero() || is_padic_square(&v, p)
        })
    })
}

/// Nonzero vectors mod p on all forms; a primitive Q_p point reduces to one.
fn brute_force_b(qs: &[QuadricForm], p: u64) -> usize {
    let pi = p as i64;
    let total = pi.pow(6);
    (1..total)
        .filter(|&code| {
            let x: Vec<Rational> = (0..6).map(|i| q(code / pi.pow(i) % pi)).collect();
            qs.iter().all(|f| {
                let v = f.eval(&x);
                (v.numer() % BigInt::from(p)).is_zero()
            })
        })
        .count()
}

fn diagonal(a: [i64; 3]) -> Vec<QuadricForm> {
    (0..3)
        .map(|k| {
            let mut g = vec![vec![q(0); 6]; 6];
            g[2 * k][2 * k] = q(1);
            g[2 * k + 1][2 * k + 1] = q(a[k]);
            QuadricForm::new(g).unwrap()
        })
        .collect()
}

/// Attained signs of g on R by interval bisection: bit 0 negative, 1 zero, 2 positive.
/// Returns `None` if a subinterval stays ambiguous at the depth limit.
fn real_signs(g: &PolyQ) -> Option<u8> {
    let n = g.deg();
    let lc = g.coeff(n);
    let bound = g.coeffs().iter().map(|c| (c / &lc).abs()).fold(q(0), |a, b| if b > a { b } else { a }) + q(1);
    let sign = |x: &Rational| if x.is_zero() { 2 } else if x.is_positive() { 4 } else { 1 };
    // Outside [-bound, bound] g has the sign of its leading term.
    let mut signs = sign(&lc) | sign(&(if n % 2 == 0 { lc.clone() } else { -lc.clone() }));
    let mut stack = vec![(-bound.clone(), bound, 0u32)];
    while let Some((a, b, depth)) = stack.pop() {
        let (fa, fb) = (g.eval(&a), g.eval(&b));
        signs |= sign(&fa) | sign(&fb);
        if fa.is_positive() && fb.is_negative() || fa.is_negative() && fb.is_positive() {
            signs |= 2;
        }
        // Interval Horner enclosure of g on [a, b].
        let (mut lo, mut hi) = (q(0), q(0));
        for c in g.coeffs().iter().rev() {
            let cands = [&lo * &a, &lo * &b, &hi * &a, &hi * &b];
            let mn = cands.iter().min().unwrap().clone();
            let mx = cands.iter().max().unwrap().clone();
            lo = mn + c;
            hi = mx + c;
        }
        let full = if lo.is_positive() { 4 } else if hi.is_negative() { 1 } else { 0 };
        if full != 0 || signs == 7 {
            continue;
        }
        if depth == 40 {
            return None;
        }
        let mid = (&a + &b) / q(2);
        stack.push((a, mid.clone(), depth + 1));
        stack.push((mid, b, depth + 1));
    }
    Some(signs)
}

fn criterion_8() -> Verdict {
    let effort = LocalEffort::default();
    let mut replays = 0;
    let mut witnesses = 0;
    for p in [3u64, 5, 7] {
        let s = theorem_a_surface(&poly("x^4 + 1"), &poly(&format!("{p}x^4 + {p}"))).unwrap();
        let v = padic_solubility_a(&s, p, &effort);
        if v.outcome != Outcome::Insoluble || brute_force_a(&s, p, 2) {
            return fail(format!("surface A fixture at {p}: {:?}", v.outcome));
        }
        replays += 1;
        let a = if p == 5 { 2 } else { 1 };
        let qs = diagonal([a, a, a]);
        let v = padic_solubility_quadrics(&qs, p, &effort);
        if v.outcome != Outcome::Insoluble || brute_force_b(&qs, p) != 0 {
            return fail(format!("diagonal fixture at {p}: {:?}", v.outcome));
        }
        replays += 1;
        let qs = diagonal([-1, -4, -9]);
        let v = padic_solubility_quadrics(&qs, p, &effort);
        match &v.witness {
            Some(w) if v.outcome == Outcome::Soluble && verify_padic_vector(&qs, p, w) => witnesses += 1,
            _ => return fail(format!("split diagonal fixture at {p}: {:?}", v.outcome)),
        }
        let s = theorem_a_surface(&poly("x^4 - x - 1"), &poly("x^4 + x + 1")).unwrap();
        let v = padic_solubility_a(&s, p, &effort);
        match &v.witness {
            Some(w) if v.outcome.is_soluble() && verify_witness_a(&s, Place::Prime(p), w) => witnesses += 1,
            _ => return fail(format!("theorem A fixture at {p}: {:?}", v.outcome)),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut skipped = 0;
    for _ in 0..100 {
        let g1 = random_quartic(&mut rng);
        let g2 = random_quartic(&mut rng);
        let s = KummerSurfaceA { g1: g1.clone(), g2: g2.clone() };
        let v = real_solubility_a(&s);
        let (Some(a), Some(b)) = (real_signs(&g1), real_signs(&g2)) else {
            skipped += 1;
            continue;
        };
        let expected = a & 2 != 0 || b & 2 != 0 || a & b != 0;
        let got = match v.outcome {
            Outcome::Soluble => true,
            Outcome::Insoluble => false,
            o => return fail(format!("real verdict {o:?} for {g1}, {g2}")),
        };
        if got != expected {
            return fail(format!("real disagreement for {g1}, {g2}"));
        }
        if got {
            match &v.witness {
                Some(w) if verify_witness_a(&s, Place::Real, w) => witnesses += 1,
                _ => return fail(format!("real witness for {g1}, {g2} did not verify")),
            }
        }
    }
    pass(format!("{replays} insolubility replays, {witnesses} witnesses, {} real pairs compared", 100 - skipped))
}

// ---------------------------------------------------------------- 9

fn random_element(rng: &mut ChaCha8Rng) -> PolyQ {
    loop {
        let c: Vec<i64> = (0..5).map(|_| rng.random_range(-5..=5)).collect();
        let z = PolyQ::from_ints(&c);
        if !z.is_zero() {
            return z;
        }
    }
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng, avoid: u64) -> Rational {
    loop {
        let n: i64 = rng.random_range(-30..=30);
        let d: i64 = rng.random_range(1..=30);
        if n != 0 && n % avoid as i64 != 0 && d % avoid as i64 != 0 {
            return Rational::new(n.into(), d.into());
        }
    }
}

fn criterion_9() -> Verdict {
    let f = poly("x^5 - x - 1");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 0..100 {
        let z = random_element(&mut rng);
        let c = random_nonzero_rational(&mut rng, 1 << 30);
        let lam = (&z * &z).rem(&f).scale(&c);
        let v = lambda_nontrivial_class(&f, &LambdaElement::new(lam.clone()).unwrap(), 2000).unwrap();
        if v.status == ClassStatus::CertifiedNontrivial {
            return fail(format!("case {k}: c z^2 = {lam} certified nontrivial at {:?}", v.witness_prime));
        }
    }
    let p = 19;
    let mut decided = [0usize; 2];
    for kind in 0..2 {
        for k in 0..100 {
            let base = random_element(&mut rng);
            let other = if kind == 0 {
                let z = random_element(&mut rng);
                (&base * &(&z * &z)).rem(&f)
            } else {
                base.scale(&random_nonzero_rational(&mut rng, p))
            };
            let a = lambda_parity_condition(&f, &LambdaElement::new(base.clone()).unwrap(), p).unwrap().decision;
            let b = lambda_parity_condition(&f, &LambdaElement::new(other).unwrap(), p).unwrap().decision;
            if a != Decision::Undecided && b != Decision::Undecided {
                if a != b {
                    return fail(format!("parity changed for case {k} of kind {kind}: {base}"));
                }
                decided[kind] += 1;
            }
        }
    }
    pass(format!(
        "100 trivial elements uncertified; parity invariant ({} square, {} unit cases decided)",
        decided[0], decided[1]
    ))
}

// ---------------------------------------------------------------- 10

type Fq = Vec<u64>;

fn trim(mut a: Fq) -> Fq {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem_fq(a: &Fq, m: &Fq, p: u64) -> Fq {
    let mut a = trim(a.clone());
    let inv = BigInt::from(*m.last().unwrap()).modpow(&BigInt::from(p - 2), &BigInt::from(p));
    let inv: u64 = inv.try_into().unwrap();
    while a.len() >= m.len() {
        let c = a.last().unwrap() * inv % p;
        let shift = a.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * mi % p) % p;
        }
        a = trim(a);
    }
    a
}

fn mulmod_fq(a: &Fq, b: &Fq, m: &Fq, p: u64) -> Fq {
    let mut r = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    rem_fq(&r, m, p)
}

fn powmod_fq(base: &Fq, mut e: u64, m: &Fq, p: u64) -> Fq {
    let mut r = vec![1u64];
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_fq(&r, &b, m, p);
        }
        b = mulmod_fq(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn gcd_fq(a: &Fq, b: &Fq, p: u64) -> Fq {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem_fq(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub_x(a: &Fq, p: u64) -> Fq {
    let mut a = a.clone();
    a.resize(a.len().max(2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a)
}

/// Cycle type of Frobenius at q for a monic integer quintic, from root counts,
/// gcd with x^(q^2) - x and squarefreeness. Only separates the types used here.
fn quintic_type_mod(f: &[i64], qq: u64) -> Option<Vec<usize>> {
    let m: Fq = f.iter().map(|&c| c.rem_euclid(qq as i64) as u64).collect();
    let dm: Fq = trim((1..m.len()).map(|i| m[i] * i as u64 % qq).collect());
    if gcd_fq(&m, &dm, qq).len() > 1 {
        return None;
    }
    let roots = (0..qq)
        .filter(|&x| m.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % qq) == 0)
        .count();
    let xq = powmod_fq(&vec![0, 1], qq, &m, qq);
    let xq2 = powmod_fq(&xq, qq, &m, qq);
    let quadratic = gcd_fq(&m, &sub_x(&xq2, qq), qq).len() - 1 > roots;
    match (roots, quadratic) {
        (0, false) => Some(vec![5]),
        (1, false) => Some(vec![4, 1]),
        _ => Some(vec![]),
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn criterion_10() -> Verdict {
    let f = [-1i64, -1, 0, 0, 0, 1];
    let fq = PolyQ::from_ints(&f);
    let mut found = Vec::new();
    for target in [vec![5usize], vec![4, 1]] {
        let query = AdmissiblePrimeQuery { primes: vec![3], real_place: true, targets: vec![target.clone()], bound: 100_000 };
        let r = match find_admissible_prime(&query, &[fq.clone()]) {
            Ok(r) => r,
            Err(e) => return fail(format!("{target:?}: {e}")),
        };
        let Some(qq) = r.prime else {
            return fail(format!("{target:?}: no prime found"));
        };
        let qr = BigInt::from(3).modpow(&BigInt::from((qq - 1) / 2), &BigInt::from(qq)).is_one();
        if !is_prime(qq) || qq % 8 != 1 || !qr || quintic_type_mod(&f, qq) != Some(target.clone()) {
            return fail(format!("{target:?}: q = {qq} does not re-verify"));
        }
        found.push(format!("{target:?} -> {qq}"));
    }
    pass(found.join(", "))
}

// ----------------------------------------------------------------

fn main() {
    let criteria: [(usize, &str, fn() -> Verdict, u64); 10] = [
        (1, "zero-sum module invariants", criterion_1, 10),
        (2, "five conditions agree on finite models", criterion_2, 60),
        (3, "exhaustive lifting with targets", criterion_3, 10),
        (4, "normal subgroup dichotomy and torsor field", criterion_4, 60),
        (5, "quintic desk instance", criterion_5, 5),
        (6, "rational line on lambda = 1 surfaces", criterion_6, 30),
        (7, "resolvent cubic discriminant identity", criterion_7, 10),
        (8, "local solubility soundness", criterion_8, 120),
        (9, "lambda class guards", criterion_9, 120),
        (10, "admissible prime search", criterion_10, 30),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(limit) {
            out.ok = false;
            out.detail = format!("{} (over the {limit} s limit)", out.detail);
        }
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {n:>2}: {name} [{:.2} s] {}", elapsed.as_secs_f64(), out.detail);
        if let (false, Some((_, why))) = (out.ok, known) {
            println!("     expected failure: {why}");
        }
        if out.ok == known.is_some() {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected results for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

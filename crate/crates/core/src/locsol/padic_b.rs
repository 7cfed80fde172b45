//! Odd p-adic places for the three-quadric surface.
//!
//! Each form is scaled to be p-integral and primitive. Points mod p come from
//! exhaustive enumeration of P^5(F_p) when that is small enough, otherwise from
//! random planes: a plane meets the first two quadrics in the intersection of
//! two conics, found by parametrizing the first conic and taking roots of a
//! quartic in the parameter. A point `x` with `v(F(x)) > 2 v(det J_S(x))` for
//! some 3x3 minor `S` of the Jacobian lifts to Z_p by Newton iteration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LocalEffort, LocalVerdict, Place, Witness};
use crate::exact::nt::{is_prime, sqrt_mod};
use crate::exact::{common_denominator, PolyFp, Rational};
use crate::kumgeo::{KummerSurfaceB, QuadricForm, NVARS};

/// Integral primitive Gram matrices at p.
#[derive(Clone, Debug)]
struct IntForms {
    p: BigInt,
    grams: Vec<Vec<Vec<BigInt>>>,
}

fn val(x: &BigInt, p: &BigInt) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut x = x.clone();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return Some(v);
        }
        x = q;
        v += 1;
    }
}

impl IntForms {
    fn new(qs: &[QuadricForm], p: u64) -> Option<Self> {
        let pb = BigInt::from(p);
        let mut grams = Vec::new();
        for q in qs {
            let d = common_denominator(q.gram().iter().flatten());
            let m: Vec<Vec<BigInt>> =
                q.gram().iter().map(|r| r.iter().map(|g| (g * Rational::from_integer(d.clone())).to_integer()).collect()).collect();
            let v = m.iter().flatten().filter_map(|x| val(x, &pb)).min()?;
            let pv = pb.pow(v);
            grams.push(m.iter().map(|r| r.iter().map(|x| x / &pv).collect()).collect());
        }
        Some(IntForms { p: pb, grams })
    }

    fn eval(&self, k: usize, x: &[BigInt]) -> BigInt {
        let g = &self.grams[k];
        let mut acc = BigInt::zero();
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            let r: BigInt = (0..x.len()).map(|j| &g[i][j] * &x[j]).sum();
            acc += &x[i] * r;
        }
        acc
    }

    fn jacobian(&self, x: &[BigInt]) -> Vec<Vec<BigInt>> {
        self.grams
            .iter()
            .map(|g| (0..x.len()).map(|i| 2 * (0..x.len()).map(|j| &g[i][j] * &x[j]).sum::<BigInt>()).collect())
            .collect()
    }

    /// Minimal valuation of the values, `u32::MAX` when all vanish.
    fn value_val(&self, x: &[BigInt]) -> u32 {
        (0..self.grams.len()).map(|k| val(&self.eval(k, x), &self.p).unwrap_or(u32::MAX)).min().unwrap_or(u32::MAX)
    }

    /// Free coordinates and valuation of the best 3x3 minor.
    fn best_minor(&self, x: &[BigInt]) -> Option<([usize; 3], u32, Vec<Vec<BigInt>>)> {
        let j = self.jacobian(x);
        let mut best: Option<([usize; 3], u32, Vec<Vec<BigInt>>)> = None;
        for s in triples(x.len()) {
            let m: Vec<Vec<BigInt>> = (0..3).map(|r| s.iter().map(|&c| j[r][c].clone()).collect()).collect();
            if let Some(v) = val(&det3(&m), &self.p) {
                if best.as_ref().is_none_or(|b| v < b.1) {
                    best = Some((s, v, m));
                }
            }
        }
        best
    }

    /// Newton iteration to precision `target`; `None` when the criterion fails.
    fn lift(&self, x0: &[BigInt], target: u32) -> Option<(Vec<BigInt>, u32)> {
        if self.grams.len() != 3 {
            return None;
        }
        let mut x = x0.to_vec();
        for _ in 0..64 {
            let e = self.value_val(&x);
            let (s, delta, m) = self.best_minor(&x)?;
            if e <= 2 * delta {
                return None;
            }
            if e >= target {
                return Some((x, e.min(target.max(2 * delta + 1))));
            }
            let modulus = self.p.pow(target + 2 * delta + 2);
            let f: Vec<BigInt> = (0..3).map(|k| self.eval(k, &x)).collect();
            let det = det3(&m);
            let adj = adjugate3(&m);
            for (r, &c) in s.iter().enumerate() {
                let num: BigInt = (0..3).map(|k| &adj[r][k] * &f[k]).sum();
                let step = Rational::new(num, det.clone());
                let step = crate::exact::residue_mod(&step, &modulus)?;
                x[c] = (&x[c] - step).mod_floor(&modulus);
            }
        }
        None
    }

    fn verify(&self, x: &[BigInt], precision: u32) -> bool {
        if x.len() != NVARS {
            return false;
        }
        let primitive = x.iter().any(|c| val(c, &self.p) == Some(0));
        let e = self.value_val(x);
        let minor = self.best_minor(x);
        primitive && e >= precision && minor.is_some_and(|(_, d, _)| precision > 2 * d)
    }
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn det3(m: &[Vec<BigInt>]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn adjugate3(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    (0..3).map(|j| (0..3).map(|i| c(i, j)).collect()).collect()
}

/// Reduction of the integral forms mod p, as u64 matrices.
fn reduce(forms: &IntForms, p: u64) -> Vec<Vec<Vec<u64>>> {
    let pb = BigInt::from(p);
    forms
        .grams
        .iter()
        .map(|g| g.iter().map(|r| r.iter().map(|x| x.mod_floor(&pb).try_into().unwrap()).collect()).collect())
        .collect()
}

fn eval_mod(g: &[Vec<u64>], x: &[u64], p: u64) -> u64 {
    let mut acc = 0u128;
    for i in 0..x.len() {
        if x[i] == 0 {
            continue;
        }
        let mut r = 0u128;
        for j in 0..x.len() {
            r += g[i][j] as u128 * x[j] as u128;
        }
        acc = (acc + (r % p as u128) * x[i] as u128) % p as u128;
    }
    acc as u64
}

/// Number of points of P^(n-1)(F_p).
fn projective_count(p: u64, n: u32) -> Option<u64> {
    let mut total: u64 = 0;
    for k in 0..n {
        total = total.checked_add(p.checked_pow(k)?)?;
    }
    Some(total)
}

/// Calls `visit` on each normalized point of P^(n-1)(F_p) in lexicographic order
/// until it returns false.
fn for_each_point(p: u64, n: usize, mut visit: impl FnMut(&[u64]) -> bool) {
    for lead in 0..n {
        let mut x = vec![0u64; n];
        x[lead] = 1;
        loop {
            if !visit(&x) {
                return;
            }
            let mut k = n - 1;
            loop {
                if k == lead {
                    break;
                }
                x[k] += 1;
                if x[k] < p {
                    break;
                }
                x[k] = 0;
                k -= 1;
            }
            if k == lead {
                break;
            }
        }
    }
}

fn witness(x: &[BigInt], precision: u32) -> Witness {
    Witness::PadicVector { coords: x.iter().map(|c| c.to_string()).collect(), precision }
}

/// Solubility of surface B over Q_p, p odd.
pub fn padic_solubility_b(s: &KummerSurfaceB, p: u64, effort: &LocalEffort) -> LocalVerdict {
    padic_solubility_quadrics(&s.quadrics, p, effort)
}

/// Solubility over Q_p of three quadrics in P^5, p odd.
pub fn padic_solubility_quadrics(qs: &[QuadricForm], p: u64, effort: &LocalEffort) -> LocalVerdict {
    let place = Place::Prime(p);
    if p % 2 == 0 || !is_prime(p) {
        return LocalVerdict::undecided(place, "only odd primes are handled");
    }
    if qs.len() != 3 || qs.iter().any(|q| q.dim() != NVARS) {
        return LocalVerdict::undecided(place, "expected three quadrics in six variables");
    }
    let Some(forms) = IntForms::new(qs, p) else {
        return LocalVerdict::undecided(place, "a quadric is identically zero");
    };
    let target = effort.hensel_precision.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(effort.seed ^ p.rotate_left(17));
    let count = projective_count(p, NVARS as u32).filter(|&c| c <= effort.exhaustive_limit);
    let Some(count) = count else {
        if let Some(v) = plane_search(&forms, p, target, effort, &mut rng) {
            return v;
        }
        return LocalVerdict::undecided(
            place,
            format!("no liftable point in {} random planes; P^5(F_{p}) too large to enumerate", effort.plane_trials),
        );
    };
    let red = reduce(&forms, p);
    let mut found = 0usize;
    let mut singular: Vec<Vec<u64>> = Vec::new();
    let mut lifted = None;
    for_each_point(p, NVARS, |x| {
        if red.iter().all(|g| eval_mod(g, x, p) == 0) {
            found += 1;
            let xb: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
            match forms.lift(&xb, target) {
                Some(l) => {
                    lifted = Some(l);
                    return false;
                }
                None if singular.len() < 64 => singular.push(x.to_vec()),
                None => {}
            }
        }
        true
    });
    if let Some((x, e)) = lifted {
        return LocalVerdict::soluble(place, witness(&x, e), "Hensel lift of a point mod p");
    }
    if found == 0 {
        let cert = serde_json::json!({
            "method": "exhaustive enumeration of P^5(F_p)",
            "p": p,
            "points_checked": count,
            "reason": "no point mod p, so no point over Q_p",
        });
        return LocalVerdict::insoluble(place, cert.to_string());
    }
    // Only singular points mod p: try random lifts to higher precision.
    for x0 in &singular {
        for _ in 0..effort.plane_trials / singular.len().max(1) + 1 {
            let x: Vec<BigInt> = x0
                .iter()
                .map(|&c| BigInt::from(c) + BigInt::from(p) * BigInt::from(rng.random_range(0..p * p)))
                .collect();
            if let Some((x, e)) = forms.lift(&x, target) {
                return LocalVerdict::soluble(place, witness(&x, e), "Hensel lift of a deeper approximation");
            }
        }
    }
    LocalVerdict::undecided(place, format!("{found} points mod p, all singular; no liftable approximation found"))
}

/// Whether the forms have the shape of surface B: `d` occurs only as `d^2` in the last form.
fn has_b_shape(forms: &IntForms) -> bool {
    let g = &forms.grams;
    let last = NVARS - 1;
    (0..NVARS).all(|i| g[0][i][last].is_zero() && g[1][i][last].is_zero())
        && (0..last).all(|i| g[2][i][last].is_zero())
}

fn rand_vec(rng: &mut ChaCha8Rng, p: u64, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(0..p)).collect()
}

/// Bilinear form `a^T G b` mod p.
fn bil(g: &[Vec<u64>], a: &[u64], b: &[u64], p: u64) -> u64 {
    let mut acc = 0u128;
    for i in 0..a.len() {
        for j in 0..b.len() {
            acc = (acc + g[i][j] as u128 * a[i] as u128 % p as u128 * b[j] as u128) % p as u128;
        }
    }
    acc as u64
}

fn restrict(g: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    (0..basis.len()).map(|i| (0..basis.len()).map(|j| bil(g, &basis[i], &basis[j], p)).collect()).collect()
}

fn inv(a: u64, p: u64) -> u64 {
    crate::exact::nt::inv_mod(a, p)
}

/// A point on the conic `c` in P^2(F_p), by intersecting random lines with it.
fn conic_point(c: &[Vec<u64>], p: u64, rng: &mut ChaCha8Rng) -> Option<Vec<u64>> {
    for _ in 0..16 {
        let a = rand_vec(rng, p, 3);
        let b = rand_vec(rng, p, 3);
        let qa = bil(c, &a, &a, p);
        if qa == 0 && a.iter().any(|&v| v != 0) {
            return Some(a);
        }
        if qa == 0 {
            continue;
        }
        // qa s^2 + 2 B s + qb = 0 on the point s a + b.
        let bb = bil(c, &a, &b, p);
        let qb = bil(c, &b, &b, p);
        let disc = (bb * bb % p + p - qa * qb % p) % p;
        let Some(r) = sqrt_mod(disc, p) else { continue };
        let s = (p - bb + r) % p * inv(qa, p) % p;
        let pt: Vec<u64> = (0..3).map(|i| (s * a[i] + b[i]) % p).collect();
        if pt.iter().any(|&v| v != 0) {
            return Some(pt);
        }
    }
    None
}

fn plane_search(
    forms: &IntForms,
    p: u64,
    target: u32,
    effort: &LocalEffort,
    rng: &mut ChaCha8Rng,
) -> Option<LocalVerdict> {
    if !has_b_shape(forms) {
        return None;
    }
    let red = reduce(forms, p);
    let last = NVARS - 1;
    let a: Vec<Vec<Vec<u64>>> = red.iter().map(|g| g[..last].iter().map(|r| r[..last].to_vec()).collect()).collect();
    let e = red[2][last][last];
    for _ in 0..effort.plane_trials {
        let basis: Vec<Vec<u64>> = (0..3).map(|_| rand_vec(rng, p, last)).collect();
        let c0 = restrict(&a[0], &basis, p);
        let c1 = restrict(&a[1], &basis, p);
        let Some(pi) = conic_point(&c0, p, rng) else { continue };
        // Lines through pi with direction gamma + tau eps meet the conic again at
        // rho(tau) = C0(delta) pi - 2 B(pi, delta) delta.
        let gamma = rand_vec(rng, p, 3);
        let eps = rand_vec(rng, p, 3);
        let lin = |v: &[u64]| PolyFp::new(p, v.to_vec());
        let delta: Vec<PolyFp> = (0..3).map(|i| lin(&[gamma[i], eps[i]])).collect();
        let quad = |g: &[Vec<u64>], u: &[PolyFp], w: &[PolyFp]| {
            let mut acc = PolyFp::zero(p);
            for i in 0..3 {
                for j in 0..3 {
                    acc = acc.add(&u[i].mul(&w[j]).scale(g[i][j]));
                }
            }
            acc
        };
        let pi_p: Vec<PolyFp> = pi.iter().map(|&v| PolyFp::new(p, vec![v])).collect();
        let c0d = quad(&c0, &delta, &delta);
        let bd = quad(&c0, &pi_p, &delta);
        let rho: Vec<PolyFp> =
            (0..3).map(|i| c0d.mul(&pi_p[i]).sub(&bd.mul(&delta[i]).scale(2))).collect();
        let quartic = quad(&c1, &rho, &rho);
        if quartic.is_zero() {
            continue;
        }
        for tau in quartic.roots() {
            let r: Vec<u64> = rho.iter().map(|f| f.eval(tau)).collect();
            if r.iter().all(|&v| v == 0) {
                continue;
            }
            let u: Vec<u64> = (0..last)
                .map(|k| (0..3).map(|i| r[i] * basis[i][k] % p).sum::<u64>() % p)
                .collect();
            let q2 = bil(&a[2], &u, &u, p);
            let ds: Vec<u64> = if e == 0 {
                if q2 != 0 {
                    continue;
                }
                vec![0, 1]
            } else {
                match sqrt_mod((p - q2) % p * inv(e, p) % p, p) {
                    Some(d) => vec![d],
                    None => continue,
                }
            };
            for d in ds {
                let x: Vec<BigInt> = u.iter().chain(std::iter::once(&d)).map(|&c| BigInt::from(c)).collect();
                if let Some((x, prec)) = forms.lift(&x, target) {
                    return Some(LocalVerdict::soluble(
                        Place::Prime(p),
                        witness(&x, prec),
                        "Hensel lift of a point mod p found on a random plane",
                    ));
                }
            }
        }
    }
    None
}

/// Replays a p-adic vector witness: primitive, all scaled forms vanish to the
/// stated precision, and the precision exceeds twice the valuation of some
/// 3x3 Jacobian minor, so Newton iteration converges to a Q_p-point.
pub fn verify_padic_vector(qs: &[QuadricForm], p: u64, w: &Witness) -> bool {
    let Witness::PadicVector { coords, precision } = w else { return false };
    let Some(forms) = IntForms::new(qs, p) else { return false };
    let x: Option<Vec<BigInt>> = coords.iter().map(|c| c.parse().ok()).collect();
    x.is_some_and(|x| x.len() == NVARS && forms.verify(&x, *precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::kumgeo::kummer_quadrics;
    use crate::localarith::LambdaElement;
    use crate::locsol::Outcome;

    fn poly(s: &str) -> crate::exact::PolyQ {
        s.parse().unwrap()
    }

    fn diag(v: &[i64]) -> QuadricForm {
        let g = (0..NVARS).map(|i| (0..NVARS).map(|j| if i == j { int(v[i]) } else { int(0) }).collect()).collect();
        QuadricForm::new(g).unwrap()
    }

    /// Independent count of points of the reduction mod p.
    fn brute_points(qs: &[QuadricForm], p: u64) -> usize {
        let forms = IntForms::new(qs, p).unwrap();
        let red = reduce(&forms, p);
        let n = p.pow(6);
        (1..n)
            .filter(|&i| {
                let x: Vec<u64> = (0..6).map(|k| i / p.pow(k) % p).collect();
                red.iter().all(|g| eval_mod(g, &x, p) == 0)
            })
            .count()
    }

    #[test]
    fn enumeration_order_and_count() {
        let mut n = 0;
        let mut prev: Option<Vec<u64>> = None;
        for_each_point(3, 4, |x| {
            n += 1;
            if let Some(q) = &prev {
                assert_ne!(q.as_slice(), x);
            }
            prev = Some(x.to_vec());
            true
        });
        assert_eq!(n, 40);
        assert_eq!(projective_count(3, 4), Some(40));
    }

    #[test]
    fn lambda_one_lifts() {
        let s = kummer_quadrics(&poly("x^5 - x - 1"), &LambdaElement::one()).unwrap();
        for p in [3u64, 5, 19, 151] {
            let v = padic_solubility_b(&s, p, &LocalEffort::default());
            assert_eq!(v.outcome, Outcome::Soluble, "{p}: {v:?}");
            assert!(verify_padic_vector(&s.quadrics, p, v.witness.as_ref().unwrap()), "{p}");
        }
    }

    #[test]
    fn empty_reduction_insoluble() {
        // Q1 = x0^2 + x1^2 (anisotropic mod 3), Q2 = x2^2 + x3^2, Q3 = x4^2 + x5^2:
        // every F_3-point would need all six coordinates zero.
        let qs = [diag(&[1, 1, 0, 0, 0, 0]), diag(&[0, 0, 1, 1, 0, 0]), diag(&[0, 0, 0, 0, 1, 1])];
        let v = padic_solubility_quadrics(&qs, 3, &LocalEffort::default());
        assert_eq!(v.outcome, Outcome::Insoluble);
        assert_eq!(brute_points(&qs, 3), 0);
        // At 5, -1 is a square and the same system has smooth points.
        let v = padic_solubility_quadrics(&qs, 5, &LocalEffort::default());
        assert_eq!(v.outcome, Outcome::Soluble);
        assert!(verify_padic_vector(&qs, 5, v.witness.as_ref().unwrap()));
        assert!(brute_points(&qs, 5) > 0);
    }

    #[test]
    fn nonsmooth_reduction() {
        // 3 x0^2 + x1^2 etc.: points mod 3 exist but sit where the Jacobian drops rank.
        let qs = [diag(&[1, 3, 0, 0, 0, 0]), diag(&[0, 0, 1, 3, 0, 0]), diag(&[0, 0, 0, 0, 1, 3])];
        let v = padic_solubility_quadrics(&qs, 3, &LocalEffort::default());
        // x0^2 + 3 x1^2 = 0 has no nontrivial 3-adic zero, so no lift can succeed.
        assert_ne!(v.outcome, Outcome::Soluble);
        assert!(brute_points(&qs, 3) > 0);
    }

    #[test]
    fn generic_lambda_fixtures() {
        let f = poly("x^5 - x - 1");
        for lam in ["x", "x^2 + 2", "x + 19"] {
            let s = kummer_quadrics(&f, &LambdaElement::new(poly(lam)).unwrap()).unwrap();
            for p in [3u64, 5, 7, 19] {
                let v = padic_solubility_b(&s, p, &LocalEffort::default());
                match v.outcome {
                    Outcome::Soluble => assert!(verify_padic_vector(&s.quadrics, p, v.witness.as_ref().unwrap())),
                    Outcome::Insoluble => assert_eq!(brute_points(&s.quadrics, p), 0),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn tampered_witness_rejected() {
        let s = kummer_quadrics(&poly("x^5 - x - 1"), &LambdaElement::one()).unwrap();
        let v = padic_solubility_b(&s, 7, &LocalEffort::default());
        let Some(Witness::PadicVector { mut coords, precision }) = v.witness else { panic!() };
        coords[1] = (coords[1].parse::<BigInt>().unwrap() + BigInt::from(7)).to_string();
        let bad = Witness::PadicVector { coords, precision: precision.max(30) };
        assert!(!verify_padic_vector(&s.quadrics, 7, &bad));
    }
}

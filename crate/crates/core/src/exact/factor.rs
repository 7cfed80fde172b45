//! Complete factorization over F_p: squarefree decomposition, distinct-degree
//! splitting, then randomized equal-degree splitting (Cantor-Zassenhaus, with
//! the trace map in characteristic 2).

use rand::Rng;
use serde::Serialize;

use super::polyfp::{default_rng, PolyFp};
use super::polyq::PolyQ;
use crate::error::{Error, Result};

/// Monic irreducible factors with multiplicities, plus the leading-coefficient unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationFp {
    pub p: u64,
    pub unit: u64,
    pub factors: Vec<(PolyFp, usize)>,
}

impl FactorizationFp {
    /// Degrees of the irreducible factors, repeated by multiplicity, descending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.deg(), *m))
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// unit * prod f_i^m_i
    pub fn product(&self) -> PolyFp {
        let mut acc = PolyFp::new(self.p, vec![self.unit]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factors a rational polynomial modulo p.
///
/// Requires every coefficient to be p-integral and the leading coefficient
/// to be a unit mod p.
pub fn factor_mod_p(f: &PolyQ, p: u64) -> Result<FactorizationFp> {
    factor_mod_p_seeded(f, p, &mut default_rng(p))
}

pub fn factor_mod_p_seeded<R: Rng>(f: &PolyQ, p: u64, rng: &mut R) -> Result<FactorizationFp> {
    if f.is_zero() {
        return Err(Error::Input("cannot factor the zero polynomial".into()));
    }
    if !super::nt::is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let fp = PolyFp::reduce(f, p)?;
    if fp.deg() != f.deg() {
        return Err(Error::Input(format!(
            "leading coefficient of {f} vanishes mod {p}"
        )));
    }
    Ok(factor_fp(&fp, rng))
}

/// Factorization of a nonzero polynomial over F_p.
pub fn factor_fp<R: Rng>(f: &PolyFp, rng: &mut R) -> FactorizationFp {
    let p = f.modulus();
    let unit = f.lc();
    let mut factors: Vec<(PolyFp, usize)> = Vec::new();
    if f.deg() > 0 {
        for (sqf, mult) in squarefree_decomposition(&f.monic()) {
            for (g, d) in distinct_degree(&sqf) {
                for h in equal_degree_split(&g, d, rng) {
                    factors.push((h, mult));
                }
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| (a.deg(), a.coeffs(), ma).cmp(&(b.deg(), b.coeffs(), mb)));
    FactorizationFp { p, unit, factors }
}

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and each g_i squarefree, pairwise coprime.
pub fn squarefree_decomposition(f: &PolyFp) -> Vec<(PolyFp, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let c0 = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c0).0;
    let mut c = c0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        c = c.div_rem(&y).0;
        w = y;
        i += 1;
    }
    if c.deg() > 0 {
        let root = c.pth_root();
        for (g, m) in squarefree_decomposition(&root.monic()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of equal degree.
pub fn distinct_degree(f: &PolyFp) -> Vec<(PolyFp, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = PolyFp::x(p);
    let mut xq = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        xq = xq.frobenius_power(&rest);
        let g = rest.gcd(&xq.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_rem(&g).0;
            xq = xq.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let dr = rest.deg();
        out.push((rest, dr));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree_split<R: Rng>(f: &PolyFp, d: usize, rng: &mut R) -> Vec<PolyFp> {
    let n = f.deg();
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus();
    loop {
        let a = PolyFp::random_below_degree(p, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let g = f.gcd(&a);
        let candidate = if g.deg() > 0 && g.deg() < n {
            g
        } else {
            let b = if p == 2 {
                // Trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(f);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul_mod(&t, f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = ((p as u128).pow(d as u32) - 1) / 2;
                a.pow_mod(e, f).sub(&PolyFp::one(p))
            };
            f.gcd(&b)
        };
        if candidate.deg() > 0 && candidate.deg() < n {
            let other = f.div_rem(&candidate).0;
            let mut out = equal_degree_split(&candidate, d, rng);
            out.extend(equal_degree_split(&other.monic(), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    /// Brute-force check that a polynomial of degree d over F_p has no monic
    /// factor of degree 1..=d/2.
    fn brute_irreducible(f: &PolyFp) -> bool {
        let p = f.modulus();
        let d = f.deg();
        for k in 1..=d / 2 {
            let count = p.pow(k as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(k + 1);
                let mut t = idx;
                for _ in 0..k {
                    c.push(t % p);
                    t /= p;
                }
                c.push(1);
                if f.rem(&PolyFp::new(p, c)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn x5_minus_x_minus_1_mod_2() {
        let fac = factor_mod_p(&poly("x^5 - x - 1"), 2).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (PolyFp::from_ints(2, &[1, 1, 1]), 1),
                (PolyFp::from_ints(2, &[1, 0, 1, 1]), 1)
            ]
        );
        // Oracle: exhaustive search over factor pairs of degrees (2, 3).
        let target = PolyFp::reduce(&poly("x^5 - x - 1"), 2).unwrap();
        let mut found = Vec::new();
        for a in 0..4u64 {
            for b in 0..8u64 {
                let q2 = PolyFp::new(2, vec![a & 1, a >> 1, 1]);
                let q3 = PolyFp::new(2, vec![b & 1, (b >> 1) & 1, b >> 2, 1]);
                if q2.mul(&q3) == target {
                    found.push((q2, q3));
                }
            }
        }
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, fac.factors[0].0);
        assert_eq!(found[0].1, fac.factors[1].0);
    }

    #[test]
    fn x5_minus_x_minus_1_mod_5_irreducible() {
        let fac = factor_mod_p(&poly("x^5 - x - 1"), 5).unwrap();
        assert!(fac.is_irreducible());
        let f5 = PolyFp::reduce(&poly("x^5 - x - 1"), 5).unwrap();
        assert!((0..5).all(|x| f5.eval(x) != 0));
        assert!(brute_irreducible(&f5));
    }

    #[test]
    fn repeated_root() {
        let fac = factor_mod_p(&poly("x^2"), 3).unwrap();
        assert_eq!(fac.factors, vec![(PolyFp::from_ints(3, &[0, 1]), 2)]);
        // x^6 + 1 = (x^2 + 1)^3 mod 3 exercises the p-th root branch.
        let fac = factor_mod_p(&poly("x^6 + 1"), 3).unwrap();
        assert_eq!(fac.factors, vec![(PolyFp::from_ints(3, &[1, 0, 1]), 3)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(factor_mod_p(&poly("x/3 + 1"), 3).is_err());
        assert!(factor_mod_p(&poly("3x^2 + 1"), 3).is_err());
        assert!(factor_mod_p(&poly("x^2 + 1"), 9).is_err());
    }

    fn arb_case() -> impl Strategy<Value = (Vec<i64>, u64)> {
        (
            prop::collection::vec(-9i64..10, 1..9),
            prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn factorization_reproduces_input((mut coeffs, p) in arb_case()) {
            let lead = coeffs.len() - 1;
            if coeffs[lead].rem_euclid(p as i64) == 0 {
                coeffs[lead] += 1;
            }
            let f = PolyQ::from_ints(&coeffs);
            let fac = factor_mod_p(&f, p).unwrap();
            prop_assert_eq!(fac.product(), PolyFp::reduce(&f, p).unwrap());
            for (g, _) in &fac.factors {
                prop_assert_eq!(g.lc(), 1);
                if g.deg() <= 3 {
                    prop_assert!(g.deg() == 1 || (0..p).all(|x| g.eval(x) != 0));
                } else if p.pow((g.deg() / 2) as u32) <= 10_000 {
                    prop_assert!(brute_irreducible(g));
                }
            }
        }
    }

    #[test]
    fn seeded_rng_gives_same_canonical_output() {
        let f = poly("x^8 + 3x^7 - x^3 + 2x + 9");
        for p in [3u64, 7, 13, 101] {
            let a = factor_mod_p(&f, p).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
            let b = factor_mod_p_seeded(&f, p, &mut rng).unwrap();
            assert_eq!(a, b);
        }
    }
}

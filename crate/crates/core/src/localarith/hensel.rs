//! Polynomials over Z/p^k and Hensel lifting of roots and coprime factorizations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exact::{residue_mod, PolyFp, PolyQ};

/// A residue modulo `p^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicApprox {
    pub p: u64,
    pub precision: u32,
    pub value: BigInt,
}

impl PadicApprox {
    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.precision)
    }

    /// Reduction to a lower precision.
    pub fn truncate(&self, j: u32) -> PadicApprox {
        let m = BigInt::from(self.p).pow(j.min(self.precision));
        PadicApprox { p: self.p, precision: j.min(self.precision), value: self.value.mod_floor(&m) }
    }
}

impl Serialize for PadicApprox {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PadicApprox", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("precision", &self.precision)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.end()
    }
}

/// Coefficients of a p-integral polynomial reduced mod `m`.
pub(crate) fn residues(f: &PolyQ, m: &BigInt) -> Result<Vec<BigInt>> {
    f.coeffs()
        .iter()
        .map(|c| residue_mod(c, m).ok_or_else(|| Error::Input(format!("{f} is not integral modulo {m}"))))
        .collect()
}

pub(crate) fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

pub(crate) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

fn to_fp(a: &[BigInt], p: u64) -> PolyFp {
    let pb = BigInt::from(p);
    PolyFp::new(p, a.iter().map(|c| c.mod_floor(&pb).try_into().unwrap()).collect())
}

fn from_fp(a: &PolyFp) -> Vec<BigInt> {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// Extended gcd over F_p: (s, t) with s a + t b = 1. `None` if not coprime.
fn bezout(a: &PolyFp, b: &PolyFp) -> Option<(PolyFp, PolyFp)> {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (PolyFp::one(p), PolyFp::zero(p));
    let (mut t0, mut t1) = (PolyFp::zero(p), PolyFp::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s2 = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.deg() != 0 || r0.is_zero() {
        return None;
    }
    let inv = crate::exact::inverse_mod_p(r0.lc(), p);
    Some((s0.scale(inv), t0.scale(inv)))
}

/// Lifts `f ≡ g h (mod p)` with g, h monic and coprime mod p to `mod p^k`.
/// `f` is monic with coefficients given mod p^k.
fn lift_pair(f: &[BigInt], g: &PolyFp, h: &PolyFp, p: u64, k: u32) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let (s, t) = bezout(g, h).ok_or_else(|| Error::Contract("Hensel factors are not coprime".into()))?;
    let pb = BigInt::from(p);
    let mut gl = from_fp(g);
    let mut hl = from_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let diff = sub_mod(f, &mul_mod(&gl, &hl, &next), &next);
        if diff.iter().any(|c| !(c % &pj).is_zero()) {
            return Err(Error::Contract("Hensel lifting lost the invariant".into()));
        }
        let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        // g dh + h dg ≡ e with dg = (t e) mod g, dh = s e + q h
        let (q, dg) = t.mul(&e).div_rem(g);
        let dh = s.mul(&e).add(&q.mul(h));
        let scale = |v: &PolyFp| from_fp(v).into_iter().map(|c| c * &pj).collect::<Vec<_>>();
        gl = add_mod(&gl, &scale(&dg), &next);
        hl = add_mod(&hl, &scale(&dh), &next);
        pj = next;
    }
    Ok((gl, hl))
}

/// Lifts pairwise coprime monic factors `parts` of a monic `f` mod p to mod p^k.
/// Each part may be a power of an irreducible.
pub(crate) fn lift_factorization(f: &PolyQ, parts: &[PolyFp], p: u64, k: u32) -> Result<Vec<Vec<BigInt>>> {
    if !f.is_monic() {
        return input(format!("factor lifting needs a monic polynomial, got {f}"));
    }
    let m = BigInt::from(p).pow(k);
    let mut rest = residues(f, &m)?;
    let mut out = Vec::with_capacity(parts.len());
    for (i, g) in parts.iter().enumerate() {
        if i + 1 == parts.len() {
            out.push(rest.clone());
            break;
        }
        let h = parts[i + 1..].iter().fold(PolyFp::one(p), |acc, x| acc.mul(x));
        let (gl, hl) = lift_pair(&rest, g, &h, p, k)?;
        out.push(gl);
        rest = hl;
    }
    Ok(out)
}

/// Newton lifts of the simple roots of f mod p to precision k, ascending by residue.
pub fn hensel_lift_simple_roots(f: &PolyQ, p: u64, k: u32) -> Result<Vec<PadicApprox>> {
    if k == 0 {
        return input("precision must be at least 1");
    }
    let fp = PolyFp::reduce(f, p)?;
    if fp.is_zero() {
        return input(format!("{f} vanishes mod {p}"));
    }
    let dfp = fp.derivative();
    let m = BigInt::from(p).pow(k);
    let fz = residues(f, &m)?;
    let dz = residues(&f.derivative(), &m)?;
    let mut out = Vec::new();
    for r in fp.roots() {
        if dfp.eval(r) == 0 {
            continue;
        }
        let mut x = BigInt::from(r);
        let mut prec = 1u32;
        while prec < k {
            prec = (2 * prec).min(k);
            let mk = BigInt::from(p).pow(prec);
            let fx = eval_mod(&fz, &x, &mk);
            let dx = eval_mod(&dz, &x, &mk);
            let inv = crate::exact::mod_inverse_big(&dx, &mk)
                .ok_or_else(|| Error::Contract("derivative not invertible at a simple root".into()))?;
            x = (x - fx * inv).mod_floor(&mk);
        }
        out.push(PadicApprox { p, precision: k, value: x });
    }
    Ok(out)
}

/// p-adic valuation of a nonzero integer, or `None` for 0.
pub(crate) fn val(n: &BigInt, p: u64) -> Option<i64> {
    crate::exact::val_int(n, p)
}

pub(crate) fn pow_big(p: u64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..k {
        acc *= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factor_mod_p;
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn roots_of_two_mod_7() {
        let r = hensel_lift_simple_roots(&poly("x^2 - 2"), 7, 3).unwrap();
        assert_eq!(r.len(), 2);
        let m = BigInt::from(343);
        for a in &r {
            assert_eq!((&a.value * &a.value - BigInt::from(2)).mod_floor(&m), BigInt::zero());
        }
        let starts: Vec<u64> = r.iter().map(|a| (&a.value % 7u32).try_into().unwrap()).collect();
        assert_eq!(starts, vec![3, 4]);
        assert!(hensel_lift_simple_roots(&poly("x^2"), 3, 4).unwrap().is_empty());
    }

    #[test]
    fn factor_lift_multiplies_back() {
        let f = poly("x^5 - x - 1");
        let p = 19;
        let fac = factor_mod_p(&f, p).unwrap();
        let parts: Vec<PolyFp> = fac
            .factors
            .iter()
            .map(|(g, e)| (0..*e).fold(PolyFp::one(p), |acc, _| acc.mul(g)))
            .collect();
        let k = 6;
        let lifted = lift_factorization(&f, &parts, p, k).unwrap();
        let m = pow_big(p, k);
        let prod = lifted.iter().fold(vec![BigInt::one()], |acc, g| mul_mod(&acc, g, &m));
        assert_eq!(prod, residues(&f, &m).unwrap());
    }

    proptest! {
        #[test]
        fn lift_precision_monotone(c in -50i64..50, k in 2u32..10, j in 1u32..10) {
            prop_assume!(j < k);
            let f = PolyQ::from_ints(&[c, 3, 0, 1]);
            for p in [3u64, 5, 7, 11] {
                let hi = hensel_lift_simple_roots(&f, p, k).unwrap();
                let lo = hensel_lift_simple_roots(&f, p, j).unwrap();
                prop_assert_eq!(hi.len(), lo.len());
                for (a, b) in hi.iter().zip(&lo) {
                    prop_assert_eq!(a.truncate(j), b.clone());
                }
            }
        }
    }
}

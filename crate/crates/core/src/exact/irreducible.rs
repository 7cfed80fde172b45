//! Irreducibility over Q for degree at most 5.
//!
//! Linear factors come from the real roots; quadratic factors are ruled out by
//! factor-degree patterns modulo small primes and, failing that, by a bounded
//! exhaustive search.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::factor_mod_p;
use super::nt::{factor_integer, primes_up_to};
use super::polyq::PolyQ;
use super::rational::Rational;
use super::resultant::discriminant;
use super::sturm::{isolate_real_roots, refine};
use crate::error::{input, Error, Result};

/// A nontrivial factor of `f`, or `None` when `f` is irreducible over Q.
pub fn find_factor(f: &PolyQ) -> Result<Option<PolyQ>> {
    let n = match f.degree() {
        None | Some(0) => return input("irreducibility of a constant"),
        Some(n) if n > 5 => return input(format!("irreducibility test supports degree <= 5, got {n}")),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(None);
    }
    if let Some(r) = rational_root(f) {
        return Ok(Some(PolyQ::new(vec![-r, Rational::one()])));
    }
    if n <= 3 {
        return Ok(None);
    }
    if !f.is_squarefree() {
        return Ok(Some(f.gcd(&f.derivative())));
    }
    if !quadratic_factor_possible(f)? {
        return Ok(None);
    }
    Ok(search_quadratic_factor(f)?.map(|g| g.monic()))
}

pub fn is_irreducible(f: &PolyQ) -> Result<bool> {
    Ok(find_factor(f)?.is_none())
}

/// A rational root of `f`, if any.
pub fn rational_root(f: &PolyQ) -> Option<Rational> {
    let (_, prim) = f.primitive_part();
    if prim[0].is_zero() {
        return Some(Rational::zero());
    }
    let lead = prim.last().unwrap().abs();
    let g = PolyQ::from_bigints(&prim).squarefree_part();
    // A root u/v in lowest terms has v | lead, so lead * root is an integer.
    let tol = Rational::new(BigInt::one(), lead.clone() + 1);
    let leadq = Rational::from_integer(lead.clone());
    for iv in isolate_real_roots(&g) {
        let iv = refine(&g, &iv, &tol);
        if iv.is_exact() {
            return Some(iv.lo);
        }
        let lo = (&iv.lo * &leadq).ceil().to_integer();
        let hi = (&iv.hi * &leadq).floor().to_integer();
        let mut k = lo;
        while k <= hi {
            let cand = Rational::new(k.clone(), lead.clone());
            if g.eval(&cand).is_zero() {
                return Some(cand);
            }
            k += 1;
        }
    }
    None
}

fn subset_sums(degs: &[usize]) -> u64 {
    let mut mask = 1u64;
    for &d in degs {
        mask |= mask << d;
    }
    mask
}

/// False when factor patterns modulo some primes forbid a quadratic factor.
fn quadratic_factor_possible(f: &PolyQ) -> Result<bool> {
    let (_, prim) = f.primitive_part();
    let disc = discriminant(f)?;
    let lead = prim.last().unwrap().clone();
    let mut allowed = u64::MAX;
    for p in primes_up_to(200) {
        let pb = BigInt::from(p);
        if (&lead % &pb).is_zero() || (disc.numer() % &pb).is_zero() || (disc.denom() % &pb).is_zero() {
            continue;
        }
        let Ok(fac) = factor_mod_p(&PolyQ::from_bigints(&prim), p) else {
            continue;
        };
        allowed &= subset_sums(&fac.degree_pattern());
        if allowed & 0b100 == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let (fac, rest) = factor_integer(n);
    if rest.is_some() {
        return Err(Error::Resource(format!("cannot factor {n} for the divisor search")));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Exhaustive search for a quadratic factor a x^2 + b x + c of the primitive
/// part, with a | lc, c | a_0 and |b| bounded by 4 * ||F||_2.
fn search_quadratic_factor(f: &PolyQ) -> Result<Option<PolyQ>> {
    let (_, prim) = f.primitive_part();
    let fz = PolyQ::from_bigints(&prim);
    let norm_sq: BigInt = prim.iter().map(|c| c * c).sum();
    // |b| <= ||G||_1 <= 2^2 ||F||_2
    let bmax: BigInt = (norm_sq * 16u32).sqrt() + 1;
    if bmax > BigInt::from(1_000_000) {
        return Err(Error::Resource("quadratic factor search bound too large".into()));
    }
    let bmax = bmax.to_i64().unwrap();
    let lead_divs = divisors(prim.last().unwrap())?;
    let const_divs = divisors(&prim[0])?;
    for a in &lead_divs {
        for c0 in &const_divs {
            for c in [c0.clone(), -c0] {
                for b in -bmax..=bmax {
                    let g = PolyQ::from_bigints(&[c.clone(), BigInt::from(b), a.clone()]);
                    if fz.rem(&g).is_zero() {
                        return Ok(Some(g));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Largest d with d^2 | n, used by normalization helpers.
pub fn square_part(n: &BigInt) -> Result<BigInt> {
    let (fac, rest) = factor_integer(n);
    if rest.is_some() {
        return Err(Error::Resource(format!("cannot factor {n}")));
    }
    Ok(fac
        .into_iter()
        .fold(BigInt::one(), |acc, (p, e)| acc * BigInt::from(p).pow(e / 2)))
}

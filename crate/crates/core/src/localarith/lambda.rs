//! Tests on λ = a(θ) in L = Q[x]/(f): valuation parities over a node prime and
//! nontriviality of the class of λ in L*/Q*L*^2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::hensel::{lift_factorization, pow_big, val};
use super::{reduction_type, require_odd_prime, Decision, ReductionClass};
use crate::error::{input, Error, Result};
use crate::exact::nt::{legendre, primes_up_to};
use crate::exact::{
    common_denominator, discriminant, factor_mod_p, resultant, PolyFp, PolyQ, Rational,
};

/// Precisions tried before a valuation is declared undetermined.
pub const PRECISION_LADDER: [u32; 4] = [4, 8, 16, 32];

/// `λ = a(θ)`, represented by a nonzero polynomial `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LambdaElement {
    a: PolyQ,
}

impl LambdaElement {
    pub fn new(a: PolyQ) -> Result<Self> {
        if a.is_zero() {
            return input("λ must be nonzero");
        }
        Ok(LambdaElement { a })
    }

    pub fn one() -> Self {
        LambdaElement { a: PolyQ::one() }
    }

    pub fn theta() -> Self {
        LambdaElement { a: PolyQ::x() }
    }

    pub fn poly(&self) -> &PolyQ {
        &self.a
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub decision: Decision,
    /// Valuation at the ramified quadratic place (normalized so that v(p) = 2).
    pub ramified_valuation: Option<i64>,
    /// (residue degree, valuation) at each unramified place.
    pub unramified_valuations: Vec<(usize, Option<i64>)>,
    pub precision: u32,
}

/// Integer polynomial `D a` with `D` the common denominator of `a`.
fn integral_multiple(a: &PolyQ) -> (BigInt, Vec<BigInt>) {
    let d = common_denominator(a.coeffs());
    let dq = Rational::from_integer(d.clone());
    let v = a.coeffs().iter().map(|c| (c * &dq).to_integer()).collect();
    (d, v)
}

/// Valuation of N(a(θ_h)) over the factor `h` (lifted mod p^k), or `None` if
/// p^k does not determine it.
fn local_norm_valuation(h: &[BigInt], da: &[BigInt], d: &BigInt, p: u64, k: u32) -> Result<Option<i64>> {
    let hq = PolyQ::from_bigints(h);
    let aq = PolyQ::from_bigints(da);
    let res = resultant(&hq, &aq)?;
    let res = res.to_integer();
    let m = pow_big(p, k);
    let r = res.mod_floor(&m);
    // Res(h, D a) = D^deg h Res(h, a)
    let shift = val(d, p).unwrap_or(0) * hq.deg() as i64;
    if r.is_zero() {
        return Ok(None);
    }
    Ok(Some(val(&r, p).unwrap() - shift))
}

pub fn lambda_parity_condition(f: &PolyQ, lambda: &LambdaElement, p: u64) -> Result<ParityVerdict> {
    lambda_parity_condition_with(f, lambda, p, &PRECISION_LADDER)
}

/// Whether some r in Q* makes every valuation of r λ even above p.
///
/// Requires node reduction at p: one ramified quadratic place over the double
/// root (e = 2, f = 1) and unramified places for the other factors.
pub fn lambda_parity_condition_with(
    f: &PolyQ,
    lambda: &LambdaElement,
    p: u64,
    ladder: &[u32],
) -> Result<ParityVerdict> {
    require_odd_prime(p)?;
    if !f.is_monic() {
        return input(format!("{f} must be monic"));
    }
    let red = reduction_type(f, p)?;
    if red.classification != ReductionClass::Node {
        return Err(Error::Precondition(format!("reduction of {f} at {p} is not a node")));
    }
    let fac = factor_mod_p(f, p)?;
    let parts: Vec<PolyFp> = fac
        .factors
        .iter()
        .map(|(g, e)| (0..*e).fold(PolyFp::one(p), |acc, _| acc.mul(g)))
        .collect();
    let ramified_index = fac.factors.iter().position(|(_, e)| *e == 2).unwrap();
    let (d, da) = integral_multiple(&lambda.a.rem(f));
    if da.is_empty() {
        return input("λ is zero in L");
    }
    let mut last = None;
    for &k in ladder {
        let lifted = lift_factorization(f, &parts, p, k)?;
        let mut ram = None;
        let mut unram = Vec::new();
        let mut determined = true;
        for (i, h) in lifted.iter().enumerate() {
            let v = local_norm_valuation(h, &da, &d, p, k)?;
            determined &= v.is_some();
            if i == ramified_index {
                ram = v;
            } else {
                let deg = parts[i].deg() as i64;
                let v = match v {
                    Some(v) if v % deg != 0 => {
                        return Err(Error::Contract(format!(
                            "norm valuation {v} not divisible by residue degree {deg}"
                        )))
                    }
                    v => v.map(|v| v / deg),
                };
                unram.push((deg as usize, v));
            }
        }
        let verdict = ParityVerdict {
            decision: Decision::Undecided,
            ramified_valuation: ram,
            unramified_valuations: unram,
            precision: k,
        };
        if determined {
            let ram_even = ram.unwrap().rem_euclid(2) == 0;
            let parities: Vec<i64> =
                verdict.unramified_valuations.iter().map(|(_, v)| v.unwrap().rem_euclid(2)).collect();
            let shared = parities.windows(2).all(|w| w[0] == w[1]);
            let decision = if ram_even && shared { Decision::Yes } else { Decision::No };
            return Ok(ParityVerdict { decision, ..verdict });
        }
        last = Some(verdict);
    }
    last.ok_or_else(|| Error::Input("empty precision ladder".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    /// λ is not in Q* L*^2, witnessed by a split prime with mixed characters.
    CertifiedNontrivial,
    /// λ is a rational constant, hence trivially in Q* L*^2.
    ProvablyTrivial,
    /// Every split prime in the budget showed equal characters.
    ProbablyTrivial,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaClassVerdict {
    pub status: ClassStatus,
    pub witness_prime: Option<u64>,
    /// Roots of f mod the witness prime and the Legendre symbols of a at them.
    pub witness_roots: Vec<u64>,
    pub witness_characters: Vec<i32>,
    pub split_primes_checked: usize,
}

/// Split primes with equal characters needed before reporting "probably trivial".
const PROBABLE_THRESHOLD: usize = 30;

/// One-sided certifier for λ ∉ Q* L*^2.
///
/// At a prime q where f splits completely and a(r_i) are q-adic units, any
/// λ = c z^2 has the same quadratic character at every root. Mixed characters
/// therefore prove nontriviality.
pub fn lambda_nontrivial_class(f: &PolyQ, lambda: &LambdaElement, prime_budget: u64) -> Result<LambdaClassVerdict> {
    if f.degree() != Some(5) || !f.is_monic() {
        return input(format!("expected a monic quintic, got {f}"));
    }
    let a = lambda.a.rem(f);
    if a.is_zero() {
        return input("λ is zero in L");
    }
    let mut verdict = LambdaClassVerdict {
        status: ClassStatus::Undecided,
        witness_prime: None,
        witness_roots: Vec::new(),
        witness_characters: Vec::new(),
        split_primes_checked: 0,
    };
    if a.deg() == 0 {
        verdict.status = ClassStatus::ProvablyTrivial;
        return Ok(verdict);
    }
    let disc = discriminant(f)?;
    let (d, da) = integral_multiple(&a);
    for q in primes_up_to(prime_budget).into_iter().skip(1) {
        let qb = BigInt::from(q);
        if (disc.numer() % &qb).is_zero() || (disc.denom() % &qb).is_zero() || (&d % &qb).is_zero() {
            continue;
        }
        let Ok(fq) = PolyFp::reduce(f, q) else { continue };
        let roots = fq.roots();
        if roots.len() != 5 {
            continue;
        }
        let ap = PolyFp::new(q, da.iter().map(|c| c.mod_floor(&qb).try_into().unwrap()).collect());
        let chars: Vec<i32> = roots.iter().map(|&r| legendre(ap.eval(r), q)).collect();
        if chars.contains(&0) {
            continue;
        }
        verdict.split_primes_checked += 1;
        if chars.iter().any(|&c| c != chars[0]) {
            verdict.status = ClassStatus::CertifiedNontrivial;
            verdict.witness_prime = Some(q);
            verdict.witness_roots = roots;
            verdict.witness_characters = chars;
            return Ok(verdict);
        }
    }
    if verdict.split_primes_checked >= PROBABLE_THRESHOLD {
        verdict.status = ClassStatus::ProbablyTrivial;
    }
    Ok(verdict)
}

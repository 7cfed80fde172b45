//! p-adic checks at odd primes: reduction types, discriminant valuations,
//! ramification of quartic torsors, Hensel lifting and the λ conditions.

mod hensel;
mod lambda;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exact::nt::is_prime;
use crate::exact::{discriminant, factor_mod_p, is_p_integral, val_q, PolyFp, PolyQ};

pub use hensel::{hensel_lift_simple_roots, PadicApprox};
pub use lambda::{
    lambda_nontrivial_class, lambda_parity_condition, lambda_parity_condition_with, ClassStatus,
    LambdaClassVerdict, LambdaElement, ParityVerdict, PRECISION_LADDER,
};

/// Three-valued answer for checks that may run out of precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionClass {
    Good,
    Node,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionType {
    pub classification: ReductionClass,
    pub disc_valuation: i64,
    pub double_root: Option<u64>,
    pub simple_roots: Vec<u64>,
    /// (degree, multiplicity) of each irreducible factor mod p.
    pub factor_pattern: Vec<(usize, usize)>,
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return input(format!("{p} is not an odd prime"));
    }
    Ok(())
}

fn require_integral(f: &PolyQ, p: u64) -> Result<()> {
    if let Some(c) = f.coeffs().iter().find(|c| !is_p_integral(c, p)) {
        return input(format!("coefficient {c} of {f} is not integral at {p}"));
    }
    Ok(())
}

pub fn reduction_type(f: &PolyQ, p: u64) -> Result<ReductionType> {
    require_odd_prime(p)?;
    require_integral(f, p)?;
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return input(format!("{f} has a repeated root"));
    }
    let v = val_q(&disc, p).unwrap();
    let fac = factor_mod_p(f, p)?;
    let mut double_root = None;
    let mut simple_roots = Vec::new();
    for (g, e) in &fac.factors {
        if g.deg() == 1 {
            let r = (p - g.coeff(0)) % p;
            match e {
                1 => simple_roots.push(r),
                2 => double_root = Some(r),
                _ => {}
            }
        }
    }
    let pattern: Vec<(usize, usize)> = fac.factors.iter().map(|(g, e)| (g.deg(), *e)).collect();
    let repeated: Vec<&(usize, usize)> = pattern.iter().filter(|(_, e)| *e > 1).collect();
    let classification = match v {
        0 => ReductionClass::Good,
        1 if repeated.len() == 1 && *repeated[0] == (1, 2) => ReductionClass::Node,
        1 => {
            return Err(Error::Contract(format!(
                "val_{p}(disc) = 1 but the factor pattern {pattern:?} has no single double root"
            )))
        }
        _ => ReductionClass::Other,
    };
    Ok(ReductionType { classification, disc_valuation: v, double_root, simple_roots, factor_pattern: pattern })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionF {
    /// `matrix[i][j] = val_{p_i}(disc f_j)`
    pub matrix: Vec<Vec<i64>>,
    pub holds: bool,
}

pub fn check_condition_f(polys: &[PolyQ], primes: &[u64]) -> Result<ConditionF> {
    if polys.len() != primes.len() {
        return input(format!("{} polynomials but {} primes", polys.len(), primes.len()));
    }
    for (i, p) in primes.iter().enumerate() {
        require_odd_prime(*p)?;
        if primes[..i].contains(p) {
            return input(format!("prime {p} is repeated; the places must be distinct"));
        }
    }
    let mut discs = Vec::with_capacity(polys.len());
    for f in polys {
        for &p in primes {
            require_integral(f, p)?;
        }
        let d = discriminant(f)?;
        if d.is_zero() {
            return input(format!("{f} has zero discriminant"));
        }
        discs.push(d);
    }
    let matrix: Vec<Vec<i64>> =
        primes.iter().map(|&p| discs.iter().map(|d| val_q(d, p).unwrap()).collect()).collect();
    let holds = matrix
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)));
    Ok(ConditionF { matrix, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsorCheck {
    pub decision: Decision,
    pub disc_valuation: i64,
    /// Multiplicities of the points of `G(u, v) = 0` over the algebraic closure of F_p,
    /// grouped by residue degree: (degree, multiplicity).
    pub pattern: Vec<(usize, usize)>,
    pub reason: String,
}

/// Whether the torsor `g(x) = 0` is unramified at p, read off the reduction of
/// the binary form `v^4 g(u/v)`.
pub fn quartic_torsor_unramified(g: &PolyQ, p: u64) -> Result<TorsorCheck> {
    require_odd_prime(p)?;
    if g.degree() != Some(4) {
        return input(format!("expected a quartic, got {g}"));
    }
    require_integral(g, p)?;
    let disc = discriminant(g)?;
    if disc.is_zero() {
        return input(format!("{g} has zero discriminant"));
    }
    let v = val_q(&disc, p).unwrap();
    let gp = PolyFp::reduce(g, p)?;
    if gp.is_zero() {
        return Ok(TorsorCheck {
            decision: Decision::Undecided,
            disc_valuation: v,
            pattern: Vec::new(),
            reason: "binary form vanishes mod p".into(),
        });
    }
    let infinity = 4 - gp.deg();
    let fac = crate::exact::factor_fp(&gp, &mut crate::exact::default_rng(p));
    let mut pattern: Vec<(usize, usize)> = fac.factors.iter().map(|(h, e)| (h.deg(), *e)).collect();
    if infinity > 0 {
        pattern.push((1, infinity));
    }
    pattern.sort();
    let check = |decision, reason: &str| TorsorCheck {
        decision,
        disc_valuation: v,
        pattern: pattern.clone(),
        reason: reason.to_string(),
    };
    Ok(match v {
        0 => check(Decision::Yes, "discriminant is a unit: the scheme is finite étale"),
        1 => {
            let doubles: Vec<_> = pattern.iter().filter(|(_, e)| *e > 1).collect();
            if doubles.len() == 1 && *doubles[0] == (1, 2) {
                check(Decision::Yes, "one rational double point and a reduced degree-2 part")
            } else {
                check(Decision::No, "valuation 1 without the double-point pattern")
            }
        }
        _ => check(Decision::Undecided, "discriminant valuation >= 2"),
    })
}

/// Makes `g` integral at p: scales by a power of p to clear the leading
/// coefficient, then substitutes `x -> x / p^k` and multiplies by `p^(k deg g)`.
/// Returns the new polynomial and `p^k`. Instances related by this change are
/// not asserted to satisfy the same hypotheses.
pub fn normalize_integral(g: &PolyQ, p: u64) -> Result<(PolyQ, BigInt)> {
    require_odd_prime(p)?;
    let n = g.degree().ok_or_else(|| Error::Input("zero polynomial".into()))?;
    let lc_val = val_q(g.lc().unwrap(), p).unwrap();
    let m = (-lc_val).max(0);
    let worst = g
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| val_q(c, p).map(|v| (i, v + m)))
        .filter(|&(i, v)| v < 0 && i < n)
        .map(|(i, v)| (-v + (n - i) as i64 - 1) / (n - i) as i64)
        .max()
        .unwrap_or(0);
    let pk = BigInt::from(p).pow(worst as u32);
    let pm = crate::exact::from_bigint(BigInt::from(p).pow(m as u32));
    let scaled = PolyQ::new(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * &pm * crate::exact::from_bigint(pk.pow((n - i) as u32)))
            .collect(),
    );
    Ok((scaled, pk))
}

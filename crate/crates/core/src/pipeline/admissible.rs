//! Search for auxiliary primes q with prescribed Frobenius cycle types.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::exact::nt::{is_prime, legendre};
use crate::exact::{discriminant, val_q, PolyQ};
use crate::permgrp::frobenius_cycle_type;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdmissiblePrimeQuery {
    /// Odd primes that must split in Q(sqrt q).
    #[serde(default)]
    pub primes: Vec<u64>,
    /// The real place must split too; every q > 0 satisfies this.
    #[serde(default = "yes")]
    pub real_place: bool,
    /// One partition per polynomial.
    pub targets: Vec<Vec<usize>>,
    pub bound: u64,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePrime {
    pub prime: Option<u64>,
    /// Primes q ≡ 1 mod 8 examined.
    pub candidates_examined: usize,
    pub cycle_types: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
    /// Local conditions on specific Selmer classes are not searched for.
    pub unimplemented: Vec<String>,
}

fn normalized(t: &[usize]) -> Vec<usize> {
    let mut t = t.to_vec();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Smallest prime q <= bound with q ≡ 1 mod 8, q a square mod each p in the
/// query, q prime to every discriminant, and Frobenius at q of cycle type
/// `targets[i]` on the roots of `polys[i]`.
pub fn find_admissible_prime(query: &AdmissiblePrimeQuery, polys: &[PolyQ]) -> Result<AdmissiblePrime> {
    if query.targets.len() != polys.len() {
        return input(format!("{} targets for {} polynomials", query.targets.len(), polys.len()));
    }
    for (t, f) in query.targets.iter().zip(polys) {
        if t.iter().sum::<usize>() != f.deg() || t.contains(&0) {
            return input(format!("{t:?} is not a partition of deg {f} = {}", f.deg()));
        }
    }
    for &p in &query.primes {
        if p == 2 || !is_prime(p) {
            return input(format!("{p} is not an odd prime"));
        }
    }
    let mut warnings = Vec::new();
    let mut discs = Vec::new();
    for f in polys {
        let d = discriminant(f)?;
        if num_traits::Zero::is_zero(&d) {
            return input(format!("{f} has zero discriminant"));
        }
        discs.push(d);
    }
    for (i, d) in discs.iter().enumerate() {
        for (j, e) in discs.iter().enumerate() {
            if i < j && d == e {
                warnings.push(format!("polynomials {i} and {j} have equal discriminants"));
            }
        }
    }
    let targets: Vec<Vec<usize>> = query.targets.iter().map(|t| normalized(t)).collect();
    let mut out = AdmissiblePrime {
        prime: None,
        candidates_examined: 0,
        cycle_types: Vec::new(),
        warnings,
        unimplemented: vec!["local conditions at q on specific Selmer classes".into()],
    };
    let mut q = 17u64;
    while q <= query.bound {
        if is_prime(q) {
            out.candidates_examined += 1;
            let split = query.primes.iter().all(|&p| legendre(q % p, p) == 1);
            let unramified = discs.iter().all(|d| val_q(d, q) == Some(0))
                && polys.iter().all(|f| f.coeffs().iter().all(|c| val_q(c, q).is_none_or(|v| v >= 0)));
            if split && unramified {
                let types: Result<Vec<Vec<usize>>> = polys.iter().map(|f| frobenius_cycle_type(f, q)).collect();
                let types: Vec<Vec<usize>> = types?.iter().map(|t| normalized(t)).collect();
                if types == targets {
                    out.prime = Some(q);
                    out.cycle_types = types;
                    return Ok(out);
                }
            }
        }
        q += 8;
    }
    Ok(out)
}

//! Galois group certification for cubics, quartics and quintics over Q.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exact::nt::{is_prime, primes_up_to};
use crate::exact::{
    discriminant, factor_mod_p, format_rational, is_irreducible, is_rational_square, PolyQ,
    Rational,
};

/// Primes up to this bound are always recorded as evidence.
const EVIDENCE_PRIMES: u64 = 29;

pub const DEFAULT_PRIME_BUDGET: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisClass {
    /// The full symmetric group, certified by resolvent and discriminant tests.
    Symmetric,
    /// S5 certified by a cycle type that no element of Aff5 has.
    SymmetricAff5Excluded,
    /// A proper subgroup of S_m; `reason` names the failing test.
    Smaller,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub prime: u64,
    pub cycle_type: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    pub degree: usize,
    pub classification: GaloisClass,
    pub discriminant: String,
    pub disc_is_square: bool,
    /// Frobenius cycle types at unramified primes, ascending.
    pub witnesses: Vec<CycleWitness>,
    /// The prime whose cycle type certified the classification, if any.
    pub certificate: Option<CycleWitness>,
    pub reason: String,
}

impl GaloisVerdict {
    pub fn is_symmetric(&self) -> bool {
        matches!(self.classification, GaloisClass::Symmetric | GaloisClass::SymmetricAff5Excluded)
    }

    pub fn witness_for(&self, p: u64) -> Option<&[usize]> {
        self.witnesses.iter().find(|w| w.prime == p).map(|w| w.cycle_type.as_slice())
    }
}

fn divides(p: u64, x: &Rational) -> bool {
    let pb = BigInt::from(p);
    (x.numer() % &pb).is_zero()
}

/// Degrees of the irreducible factors of f mod p, descending.
pub fn frobenius_cycle_type(f: &PolyQ, p: u64) -> Result<Vec<usize>> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    let disc = discriminant(f)?;
    frobenius_cycle_type_with_disc(f, &disc, p)
}

pub(crate) fn frobenius_cycle_type_with_disc(f: &PolyQ, disc: &Rational, p: u64) -> Result<Vec<usize>> {
    if divides(p, disc) {
        return Err(Error::Ramified { p });
    }
    Ok(factor_mod_p(f, p)?.degree_pattern())
}

/// Cycle types at unramified primes where f has good reduction, in prime order.
pub fn cycle_types_up_to(f: &PolyQ, bound: u64) -> Result<Vec<CycleWitness>> {
    let disc = discriminant(f)?;
    Ok(primes_up_to(bound)
        .into_iter()
        .filter_map(|p| {
            frobenius_cycle_type_with_disc(f, &disc, p)
                .ok()
                .map(|cycle_type| CycleWitness { prime: p, cycle_type })
        })
        .collect())
}

fn check_degree_irreducible(f: &PolyQ, n: usize) -> Result<()> {
    if f.degree() != Some(n) {
        return input(format!("expected a polynomial of degree {n}, got {f}"));
    }
    if !is_irreducible(f)? {
        return input(format!("{f} is reducible over Q"));
    }
    Ok(())
}

/// S3 iff irreducible with nonsquare discriminant; otherwise A3.
pub fn galois_group_cubic(f: &PolyQ) -> Result<GaloisVerdict> {
    check_degree_irreducible(f, 3)?;
    let disc = discriminant(f)?;
    let square = is_rational_square(&disc);
    Ok(GaloisVerdict {
        degree: 3,
        classification: if square { GaloisClass::Smaller } else { GaloisClass::Symmetric },
        discriminant: format_rational(&disc),
        disc_is_square: square,
        witnesses: cycle_types_up_to(f, EVIDENCE_PRIMES)?,
        certificate: None,
        reason: if square {
            "discriminant is a square: group is A3".into()
        } else {
            "irreducible with nonsquare discriminant".into()
        },
    })
}

/// S4 iff the resolvent cubic is irreducible and the discriminant is not a square.
pub fn galois_group_quartic(g: &PolyQ) -> Result<GaloisVerdict> {
    check_degree_irreducible(g, 4)?;
    let disc = discriminant(g)?;
    let square = is_rational_square(&disc);
    let cubic = crate::kumgeo::resolvent_cubic(g)?.cubic;
    let cubic_irreducible = is_irreducible(&cubic)?;
    let (classification, reason) = match (cubic_irreducible, square) {
        (true, false) => (GaloisClass::Symmetric, "resolvent cubic irreducible, discriminant nonsquare".to_string()),
        (true, true) => (GaloisClass::Smaller, "discriminant is a square: group is A4".to_string()),
        (false, _) => (
            GaloisClass::Smaller,
            format!("resolvent cubic {cubic} is reducible: group is V4, C4 or D4"),
        ),
    };
    Ok(GaloisVerdict {
        degree: 4,
        classification,
        discriminant: format_rational(&disc),
        disc_is_square: square,
        witnesses: cycle_types_up_to(g, EVIDENCE_PRIMES)?,
        certificate: None,
        reason,
    })
}

/// S5 certification for an irreducible quintic.
///
/// Requires a nonsquare discriminant and a prime whose Frobenius has cycle type
/// (2,1,1,1) or (3,2). Aff5 has neither type, and every other transitive
/// subgroup of S5 not inside A5 is Aff5 or S5.
pub fn galois_group_quintic(f: &PolyQ, prime_budget: u64) -> Result<GaloisVerdict> {
    check_degree_irreducible(f, 5)?;
    let disc = discriminant(f)?;
    let square = is_rational_square(&disc);
    let mut v = GaloisVerdict {
        degree: 5,
        classification: GaloisClass::Undecided,
        discriminant: format_rational(&disc),
        disc_is_square: square,
        witnesses: Vec::new(),
        certificate: None,
        reason: String::new(),
    };
    if square {
        v.classification = GaloisClass::Smaller;
        v.reason = "discriminant is a square: group inside A5".into();
        v.witnesses = cycle_types_up_to(f, EVIDENCE_PRIMES)?;
        return Ok(v);
    }
    if (1..5).all(|i| f.coeff(i).is_zero()) {
        // Roots of x^5 - a are ζ^k a^(1/5); Galois acts by x -> ux + v on k mod 5.
        v.classification = GaloisClass::Smaller;
        v.reason = "binomial x^5 - a: group inside Aff5".into();
        v.witnesses = cycle_types_up_to(f, EVIDENCE_PRIMES)?;
        return Ok(v);
    }
    for p in primes_up_to(prime_budget) {
        let Ok(t) = frobenius_cycle_type_with_disc(f, &disc, p) else {
            continue;
        };
        let hit = t == [2, 1, 1, 1] || t == [3, 2];
        let w = CycleWitness { prime: p, cycle_type: t };
        if hit && v.certificate.is_none() {
            v.classification = GaloisClass::SymmetricAff5Excluded;
            v.reason = format!("p = {p} has cycle type {:?}, absent from Aff5", w.cycle_type);
            v.certificate = Some(w.clone());
        }
        v.witnesses.push(w);
        if v.certificate.is_some() && p >= EVIDENCE_PRIMES {
            break;
        }
    }
    if v.classification == GaloisClass::Undecided {
        v.reason = format!("no (2,1,1,1) or (3,2) Frobenius among primes <= {prime_budget}");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::PermGroup;
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let f = poly("x^5 - x - 1");
        assert_eq!(frobenius_cycle_type(&f, 2).unwrap(), vec![3, 2]);
        assert_eq!(frobenius_cycle_type(&f, 5).unwrap(), vec![5]);
        assert_eq!(frobenius_cycle_type(&f, 19), Err(Error::Ramified { p: 19 }));
        let split = poly("(x - 1)*(x - 2)*(x - 3)");
        assert_eq!(frobenius_cycle_type(&split, 7).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn quartics() {
        let v = galois_group_quartic(&poly("x^4 - x - 1")).unwrap();
        assert_eq!(v.classification, GaloisClass::Symmetric);
        assert_eq!(v.discriminant, "-283");
        let v = galois_group_quartic(&poly("x^4 + 1")).unwrap();
        assert!(!v.is_symmetric());
        assert!(v.disc_is_square);
        let v = galois_group_quartic(&poly("x^4 + x^3 + x^2 + x + 1")).unwrap();
        assert!(!v.is_symmetric());
        assert!(v.reason.contains("reducible"));
        assert!(galois_group_quartic(&poly("x^4 - 1")).is_err());
    }

    #[test]
    fn quintics() {
        let v = galois_group_quintic(&poly("x^5 - x - 1"), DEFAULT_PRIME_BUDGET).unwrap();
        assert_eq!(v.classification, GaloisClass::SymmetricAff5Excluded);
        assert_eq!(v.witness_for(2), Some(&[3, 2][..]));
        assert_eq!(v.witness_for(5), Some(&[5][..]));
        let v = galois_group_quintic(&poly("x^5 - 2"), DEFAULT_PRIME_BUDGET).unwrap();
        assert_eq!(v.classification, GaloisClass::Smaller);
        // Frobenius types seen for x^5 - 2 all occur in Aff5.
        let aff = PermGroup::aff5();
        for w in cycle_types_up_to(&poly("x^5 - 2"), 500).unwrap() {
            assert!(aff.has_cycle_type(&w.cycle_type), "{w:?}");
        }
        // x^5 - 5x + 12 has group D5 (square discriminant).
        let v = galois_group_quintic(&poly("x^5 - 5x + 12"), 200).unwrap();
        assert!(v.disc_is_square);
        assert_eq!(v.classification, GaloisClass::Smaller);
        // x^5 + 20x + 16 has group A5.
        let v = galois_group_quintic(&poly("x^5 + 20x + 16"), 200).unwrap();
        assert!(!v.is_symmetric());
    }

    #[test]
    fn cubics() {
        assert!(galois_group_cubic(&poly("x^3 - 2")).unwrap().is_symmetric());
        let v = galois_group_cubic(&poly("x^3 - 3x + 1")).unwrap();
        assert!(v.disc_is_square && !v.is_symmetric());
    }

    fn quintic() -> impl Strategy<Value = PolyQ> {
        prop::collection::vec(-6i64..7, 5).prop_map(|mut v| {
            v.push(1);
            PolyQ::from_ints(&v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn cycle_types_partition_degree(f in quintic(), idx in 0usize..20) {
            let p = primes_up_to(80)[idx];
            if let Ok(t) = frobenius_cycle_type(&f, p) {
                prop_assert_eq!(t.iter().sum::<usize>(), 5);
            }
        }

        #[test]
        fn s5_quintics_only_show_s5_types(f in quintic()) {
            prop_assume!(discriminant(&f).map(|d| !d.is_zero()).unwrap_or(false));
            prop_assume!(is_irreducible(&f).unwrap());
            let v = galois_group_quintic(&f, 2000).unwrap();
            if v.disc_is_square {
                prop_assert!(!v.is_symmetric());
            }
            if v.is_symmetric() {
                let s5 = PermGroup::symmetric(5).unwrap();
                for w in cycle_types_up_to(&f, 500).unwrap() {
                    prop_assert!(s5.has_cycle_type(&w.cycle_type));
                }
            }
        }
    }
}

//! Local solubility over R and Q_p for the two surface types.

mod padic_a;
mod padic_b;
mod real;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::nt::{odd_prime_divisors, primes_up_to};
use crate::exact::{common_denominator, discriminant, format_rational, is_rational_square, Rational};
use crate::kumgeo::{KummerSurfaceA, KummerSurfaceB};

pub use padic_a::{padic_solubility_a, square_class, BallSummary, SquareClass};
pub use padic_b::{padic_solubility_b, padic_solubility_quadrics, verify_padic_vector};
pub use real::{real_solubility_a, real_solubility_b, real_solubility_quadrics, sign_data, verify_real_box, SignData};

/// Good odd primes above this bound are handled by the point-count argument.
pub const GOOD_PRIME_BOUND: u64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Place::Real => s.serialize_str("real"),
            Place::Prime(p) => s.serialize_u64(*p),
        }
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Soluble,
    /// Good reduction above [`GOOD_PRIME_BOUND`]; not backed by a computed witness.
    SolubleGoodReduction,
    Insoluble,
    Undecided,
}

impl Outcome {
    pub fn is_soluble(self) -> bool {
        matches!(self, Outcome::Soluble | Outcome::SolubleGoodReduction)
    }
}

/// Evidence for a soluble verdict. Rationals are "num/den" strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A rational point: (x, y, z) for surface A, (c0..c4, d) for surface B.
    Global { coords: Vec<String> },
    /// g1(x) g2(y) = value >= 0, so z = sqrt(value) is real.
    RealValue { x: String, y: String, value: String },
    /// g_i vanishes at a real number in (lo, hi] (or at lo when lo = hi); z = 0.
    RealRoot { factor: usize, lo: String, hi: String },
    /// Exact rationals 6-vector center with free coordinates boxed by radius;
    /// a Krawczyk test proves a unique zero in the box.
    RealBox { center: Vec<String>, free: Vec<usize>, radius: String },
    /// g1(x) g2(y) is a nonzero square in Q_p.
    PadicSquare { x: String, y: String, value: String },
    /// g_i has a root in Q_p near `residue` (of x, or of 1/x when `inverted`),
    /// by Newton's criterion; z = 0.
    PadicRoot { factor: usize, inverted: bool, residue: String, precision: u32 },
    /// Primitive integral vector with all quadrics ≡ 0 mod p^precision, lifted by Hensel.
    PadicVector { coords: Vec<String>, precision: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalVerdict {
    pub place: Place,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub certificate: Option<String>,
}

impl LocalVerdict {
    pub(crate) fn soluble(place: Place, witness: Witness, note: impl Into<String>) -> Self {
        LocalVerdict { place, outcome: Outcome::Soluble, witness: Some(witness), certificate: Some(note.into()) }
    }

    pub(crate) fn insoluble(place: Place, certificate: impl Into<String>) -> Self {
        LocalVerdict { place, outcome: Outcome::Insoluble, witness: None, certificate: Some(certificate.into()) }
    }

    pub(crate) fn undecided(place: Place, note: impl Into<String>) -> Self {
        LocalVerdict { place, outcome: Outcome::Undecided, witness: None, certificate: Some(note.into()) }
    }
}

/// Search and precision knobs for local solubility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalEffort {
    /// Depth of the residue-ball tree for surface A (balls mod p^depth).
    pub padic_depth: u32,
    /// Precision of Hensel-lifted witnesses.
    pub hensel_precision: u32,
    /// Random starts for the real Newton search on surface B.
    pub real_samples: usize,
    /// Random planes tried when p^5 is too large for full enumeration.
    pub plane_trials: usize,
    /// Largest |P^5(F_p)| enumerated exhaustively.
    pub exhaustive_limit: u64,
    /// Height bound for the global rational point search.
    pub point_height: i64,
    pub seed: u64,
}

impl Default for LocalEffort {
    fn default() -> Self {
        LocalEffort {
            padic_depth: 12,
            hensel_precision: 20,
            real_samples: 64,
            plane_trials: 400,
            exhaustive_limit: 500_000,
            point_height: 3,
            seed: 0,
        }
    }
}

/// Overall result of checking a list of places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EverywhereLocal {
    pub outcome: Outcome,
    pub verdicts: Vec<LocalVerdict>,
    /// Places where no decision was reached.
    pub undecided: Vec<Place>,
    /// Places with insolubility certificates.
    pub insoluble: Vec<Place>,
    /// Odd primes above this bound and of good reduction were not computed.
    pub good_prime_bound: u64,
}

impl EverywhereLocal {
    fn assemble(verdicts: Vec<LocalVerdict>) -> Self {
        let undecided: Vec<Place> =
            verdicts.iter().filter(|v| v.outcome == Outcome::Undecided).map(|v| v.place).collect();
        let insoluble: Vec<Place> =
            verdicts.iter().filter(|v| v.outcome == Outcome::Insoluble).map(|v| v.place).collect();
        let outcome = if !insoluble.is_empty() {
            Outcome::Insoluble
        } else if !undecided.is_empty() {
            Outcome::Undecided
        } else {
            Outcome::Soluble
        };
        EverywhereLocal { outcome, verdicts, undecided, insoluble, good_prime_bound: GOOD_PRIME_BOUND }
    }
}

/// The places checked: real, 2, odd primes up to the bound, and odd primes in `bad`.
fn places(bad: &[u64]) -> Vec<Place> {
    let mut ps: Vec<u64> = primes_up_to(GOOD_PRIME_BOUND);
    ps.extend(bad.iter().copied().filter(|&p| p > GOOD_PRIME_BOUND));
    ps.sort_unstable();
    ps.dedup();
    std::iter::once(Place::Real).chain(ps.into_iter().map(Place::Prime)).collect()
}

fn odd_primes_of(values: &[Rational]) -> (Vec<u64>, bool) {
    let mut out = Vec::new();
    let mut complete = true;
    for v in values {
        for n in [v.numer(), v.denom()] {
            let (ps, rest) = odd_prime_divisors(n);
            complete &= rest.is_none();
            out.extend(ps);
        }
    }
    out.sort_unstable();
    out.dedup();
    (out, complete)
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if !is_rational_square(x) {
        return None;
    }
    Some(Rational::new(x.numer().sqrt(), x.denom().sqrt()))
}

fn global_witness(coords: &[Rational]) -> Witness {
    Witness::Global { coords: coords.iter().map(format_rational).collect() }
}

fn small_rationals(h: i64) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(0.into())];
    for den in 1..=h {
        for num in -h..=h {
            let r = Rational::new(num.into(), den.into());
            if num != 0 && *r.denom() == den.into() {
                out.push(r);
            }
        }
    }
    out
}

/// A rational point on z^2 = g1(x) g2(y) with x, y of height at most `h`.
pub fn rational_point_a(s: &KummerSurfaceA, h: i64) -> Option<[Rational; 3]> {
    let xs = small_rationals(h);
    let v1: Vec<Rational> = xs.iter().map(|x| s.g1.eval(x)).collect();
    let v2: Vec<Rational> = xs.iter().map(|y| s.g2.eval(y)).collect();
    for (x, a) in xs.iter().zip(&v1) {
        for (y, b) in xs.iter().zip(&v2) {
            let v = a * b;
            if let Some(z) = rational_sqrt(&v) {
                return Some([x.clone(), y.clone(), z]);
            }
        }
    }
    None
}

/// A nonzero integral point of P^5 with coordinates in [-h, h] on all quadrics.
pub fn rational_point_b(s: &KummerSurfaceB, h: i64) -> Option<Vec<Rational>> {
    let n = 2 * h + 1;
    let total = (n as u64).pow(6);
    for idx in 0..total {
        let mut k = idx;
        let x: Vec<Rational> = (0..6)
            .map(|_| {
                let c = (k % n as u64) as i64 - h;
                k /= n as u64;
                Rational::from_integer(c.into())
            })
            .collect();
        // First nonzero coordinate positive: each projective point once.
        match x.iter().find(|c| !c.is_zero()) {
            Some(c) if c > &Rational::from_integer(0.into()) => {}
            _ => continue,
        }
        if s.is_point(&x) {
            return Some(x);
        }
    }
    None
}

/// Local solubility of z^2 = g1(x) g2(y) at every place that needs a computation.
pub fn everywhere_local_a(s: &KummerSurfaceA, effort: &LocalEffort) -> EverywhereLocal {
    let mut vals = vec![s.g1.lc().unwrap().clone(), s.g2.lc().unwrap().clone()];
    for g in [&s.g1, &s.g2] {
        if let Ok(d) = discriminant(g) {
            vals.push(d);
        }
        vals.push(Rational::from_integer(common_denominator(g.coeffs())));
    }
    let (bad, complete) = odd_primes_of(&vals);
    let global = rational_point_a(s, effort.point_height);
    let verdicts: Vec<LocalVerdict> = places(&bad)
        .into_par_iter()
        .map(|place| {
            if let Some(pt) = &global {
                return LocalVerdict::soluble(place, global_witness(pt), "rational point");
            }
            match place {
                Place::Real => real_solubility_a(s),
                Place::Prime(2) => LocalVerdict::undecided(place, "p = 2 is not handled"),
                Place::Prime(p) => padic_solubility_a(s, p, effort),
            }
        })
        .collect();
    let mut out = EverywhereLocal::assemble(verdicts);
    if !complete && out.outcome == Outcome::Soluble {
        out.outcome = Outcome::Undecided;
    }
    out
}

/// Local solubility of the three-quadric surface at every place that needs a computation.
pub fn everywhere_local_b(s: &KummerSurfaceB, effort: &LocalEffort) -> EverywhereLocal {
    let mut vals = vec![s.norm.clone(), Rational::from_integer(common_denominator(s.lambda.poly().coeffs()))];
    if let Ok(d) = discriminant(&s.f) {
        vals.push(d);
    }
    let (bad, complete) = odd_primes_of(&vals);
    let global = rational_point_b(s, effort.point_height.min(2));
    let verdicts: Vec<LocalVerdict> = places(&bad)
        .into_par_iter()
        .map(|place| {
            if let Some(pt) = &global {
                return LocalVerdict::soluble(place, global_witness(pt), "rational point");
            }
            match place {
                Place::Real => real_solubility_b(s, effort),
                Place::Prime(2) => LocalVerdict::undecided(place, "p = 2 is not handled"),
                Place::Prime(p) => padic_solubility_b(s, p, effort),
            }
        })
        .collect();
    let mut out = EverywhereLocal::assemble(verdicts);
    if !complete && out.outcome == Outcome::Soluble {
        out.outcome = Outcome::Undecided;
    }
    out
}

fn parse_coords(coords: &[String]) -> Option<Vec<Rational>> {
    coords.iter().map(|c| crate::exact::parse_rational(c).ok()).collect()
}

/// Re-checks a surface A witness by exact substitution.
pub fn verify_witness_a(s: &KummerSurfaceA, place: Place, w: &Witness) -> bool {
    match (place, w) {
        (_, Witness::Global { coords }) => match parse_coords(coords).as_deref() {
            Some([x, y, z]) => s.is_point(x, y, z),
            _ => false,
        },
        (Place::Real, w) => real::verify_real_a(s, w),
        (Place::Prime(p), w) => padic_a::verify_padic_a(s, p, w),
    }
}

/// Re-checks a surface B witness: exact for rational points, by the Krawczyk
/// test for real boxes, and to the stated precision for p-adic vectors.
pub fn verify_witness_b(s: &KummerSurfaceB, place: Place, w: &Witness) -> bool {
    match (place, w) {
        (_, Witness::Global { coords }) => parse_coords(coords).is_some_and(|x| x.len() == 6 && s.is_point(&x)),
        (Place::Real, w) => verify_real_box(&s.quadrics, w),
        (Place::Prime(p), w) => verify_padic_vector(&s.quadrics, p, w),
    }
}

//! Odd p-adic places for z^2 = g1(x) g2(y).
//!
//! For each quartic the square classes of its values on Q_p are collected by a
//! residue-ball tree: on `a + p^j Z_p` the class of g is constant once
//! `v(g(a)) < j`, and a ball holds a p-adic root once `v(g(a)) > 2 v(g'(a))`.
//! Points outside Z_p are handled through the reversed polynomial on pZ_p.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{LocalEffort, LocalVerdict, Place, Witness};
use crate::exact::nt::legendre;
use crate::exact::{common_denominator, format_rational, parse_rational, val_q, PolyQ, Rational};
use crate::kumgeo::KummerSurfaceA;

/// A class of Q_p^* / Q_p^*2 for odd p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquareClass {
    pub odd_valuation: bool,
    pub unit_is_square: bool,
}

/// Square class of a nonzero rational at an odd prime.
pub fn square_class(x: &Rational, p: u64) -> Option<SquareClass> {
    let v = val_q(x, p)?;
    let pv = Rational::from_integer(BigInt::from(p).pow(v.unsigned_abs() as u32));
    let unit = if v >= 0 { x / pv } else { x * pv };
    let r = crate::exact::residue_mod_u64(&unit, p)?;
    Some(SquareClass { odd_valuation: v % 2 != 0, unit_is_square: legendre(r, p) == 1 })
}

/// Result of the ball tree for one quartic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallSummary {
    pub classes: BTreeSet<SquareClass>,
    /// First certified root, as (inverted, residue, v(g(residue))).
    pub root: Option<(bool, String, u32)>,
    /// Balls still undetermined at the maximal depth.
    pub open_balls: usize,
    pub depth: u32,
    /// One sample argument per class: x in Q_p with g(x) in that class.
    #[serde(skip)]
    samples: Vec<(SquareClass, Rational)>,
}

const ALL_CLASSES: [SquareClass; 4] = [
    SquareClass { odd_valuation: false, unit_is_square: true },
    SquareClass { odd_valuation: false, unit_is_square: false },
    SquareClass { odd_valuation: true, unit_is_square: true },
    SquareClass { odd_valuation: true, unit_is_square: false },
];

/// `D^2 g` with `D` the common denominator: integral with the same square classes.
fn integralize(g: &PolyQ) -> PolyQ {
    let d = Rational::from_integer(common_denominator(g.coeffs()));
    g.scale(&(&d * &d))
}

fn val_big(x: &BigInt, p: &BigInt) -> Option<u32> {
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

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn deriv_int(g: &[BigInt]) -> Vec<BigInt> {
    g.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn int_coeffs(g: &PolyQ) -> Vec<BigInt> {
    g.coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Does `g` (integral) have a root in Z_p near `a` by Newton's criterion?
fn newton_root(g: &[BigInt], dg: &[BigInt], a: &BigInt, p: &BigInt) -> bool {
    match val_big(&eval_int(g, a), p) {
        None => true,
        Some(vg) => match val_big(&eval_int(dg, a), p) {
            Some(vd) => vg > 2 * vd,
            None => false,
        },
    }
}

struct Tree<'a> {
    g: &'a [BigInt],
    dg: Vec<BigInt>,
    p: BigInt,
    p64: u64,
    depth: u32,
    inverted: bool,
}

impl Tree<'_> {
    fn run(&self, out: &mut BallSummary) {
        let start: u32 = if self.inverted { 1 } else { 0 };
        let mut stack: Vec<(BigInt, u32)> = vec![(BigInt::zero(), start)];
        while let Some((a, j)) = stack.pop() {
            let ga = eval_int(self.g, &a);
            let vg = val_big(&ga, &self.p);
            if let Some(v) = vg {
                if v < j {
                    let cls = square_class(&Rational::from_integer(ga), self.p64).unwrap();
                    if out.classes.insert(cls) {
                        out.samples.push((cls, self.argument(&a, j)));
                    }
                    continue;
                }
            }
            let at_zero = self.inverted && a.is_zero();
            if !at_zero && newton_root(self.g, &self.dg, &a, &self.p) {
                if out.root.is_none() {
                    out.root = Some((self.inverted, a.to_string(), vg.unwrap_or(u32::MAX)));
                }
                continue;
            }
            if j >= self.depth {
                out.open_balls += 1;
                continue;
            }
            let step = self.p.pow(j);
            let mut t = BigInt::zero();
            while t < self.p {
                stack.push((&a + &t * &step, j + 1));
                t += 1;
            }
        }
    }

    /// An x in Q_p represented by the ball `a + p^j Z_p` (1/y for the reversed
    /// tree, avoiding y = 0).
    fn argument(&self, a: &BigInt, j: u32) -> Rational {
        if !self.inverted {
            return Rational::from_integer(a.clone());
        }
        let y = if a.is_zero() { self.p.pow(j) } else { a.clone() };
        Rational::from_integer(y).recip()
    }
}

/// Square classes attained by `g` on Q_p (after integralization), with roots.
pub(crate) fn ball_summary(g: &PolyQ, p: u64, depth: u32) -> BallSummary {
    let gi = integralize(g);
    let mut out = BallSummary { classes: BTreeSet::new(), root: None, open_balls: 0, depth, samples: Vec::new() };
    let coeffs = int_coeffs(&gi);
    let rev = int_coeffs(&gi.reversed(4));
    let pb = BigInt::from(p);
    Tree { g: &coeffs, dg: deriv_int(&coeffs), p: pb.clone(), p64: p, depth, inverted: false }.run(&mut out);
    Tree { g: &rev, dg: deriv_int(&rev), p: pb, p64: p, depth, inverted: true }.run(&mut out);
    if out.root.is_some() {
        // Near a simple root g takes every class.
        out.classes.extend(ALL_CLASSES);
    }
    out
}

/// Decides solubility of z^2 = g1(x) g2(y) over Q_p, p odd.
pub fn padic_solubility_a(s: &KummerSurfaceA, p: u64, effort: &LocalEffort) -> LocalVerdict {
    let place = Place::Prime(p);
    if p % 2 == 0 || !crate::exact::nt::is_prime(p) {
        return LocalVerdict::undecided(place, "only odd primes are handled");
    }
    let b1 = ball_summary(&s.g1, p, effort.padic_depth);
    let b2 = ball_summary(&s.g2, p, effort.padic_depth);
    for (factor, b) in [(1usize, &b1), (2, &b2)] {
        if let Some((inverted, residue, precision)) = &b.root {
            let w = Witness::PadicRoot { factor, inverted: *inverted, residue: residue.clone(), precision: *precision };
            return LocalVerdict::soluble(place, w, format!("g{factor} has a root in Q_{p} (Newton criterion)"));
        }
    }
    for (c, x) in &b1.samples {
        if let Some((_, y)) = b2.samples.iter().find(|(d, _)| d == c) {
            let value = s.eval(x, y);
            let w = Witness::PadicSquare { x: format_rational(x), y: format_rational(y), value: format_rational(&value) };
            return LocalVerdict::soluble(place, w, "g1(x) g2(y) is a nonzero square in Q_p");
        }
    }
    if b1.open_balls == 0 && b2.open_balls == 0 {
        let cert = serde_json::json!({
            "method": "square classes by residue balls",
            "p": p,
            "g1": b1,
            "g2": b2,
            "reason": "no roots and the class sets are disjoint",
        });
        return LocalVerdict::insoluble(place, cert.to_string());
    }
    LocalVerdict::undecided(
        place,
        format!(
            "{} undetermined residue balls remain at depth {}",
            b1.open_balls + b2.open_balls,
            effort.padic_depth
        ),
    )
}

/// Checks a p-adic witness for surface A exactly.
pub(crate) fn verify_padic_a(s: &KummerSurfaceA, p: u64, w: &Witness) -> bool {
    match w {
        Witness::PadicSquare { x, y, value } => {
            let (Ok(x), Ok(y), Ok(v)) = (parse_rational(x), parse_rational(y), parse_rational(value)) else {
                return false;
            };
            s.eval(&x, &y) == v
                && !v.is_zero()
                && square_class(&v, p) == Some(SquareClass { odd_valuation: false, unit_is_square: true })
        }
        Witness::PadicRoot { factor, inverted, residue, .. } => {
            let g = integralize(if *factor == 1 { &s.g1 } else { &s.g2 });
            let g = if *inverted { g.reversed(4) } else { g };
            let Ok(a) = residue.parse::<BigInt>() else { return false };
            if *inverted && (a.is_zero() || !(&a % BigInt::from(p)).is_zero()) {
                return false;
            }
            let c = int_coeffs(&g);
            newton_root(&c, &deriv_int(&c), &a, &BigInt::from(p))
        }
        _ => false,
    }
}

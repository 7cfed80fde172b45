//! Real root isolation by Sturm sequences and bisection.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::polyq::PolyQ;
use super::rational::{format_rational, sign, Rational};

/// Closed interval [lo, hi] holding exactly one real root. `lo == hi` means
/// the root is the exact rational `lo`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [format_rational(&self.lo), format_rational(&self.hi)].serialize(s)
    }
}

pub fn sturm_sequence(f: &PolyQ) -> Vec<PolyQ> {
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // Positive rescaling keeps signs and tames coefficient growth.
        let r = -&r;
        let scaled = match r.lc() {
            Some(lc) => r.scale(&lc.abs().recip()),
            None => r,
        };
        seq.push(scaled);
    }
    seq
}

/// Sign variations of the sequence at `x`, zeros skipped.
pub fn variations(seq: &[PolyQ], x: &Rational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let s = sign(&p.eval(x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in (a, b].
pub fn count_roots(seq: &[PolyQ], a: &Rational, b: &Rational) -> usize {
    variations(seq, a) - variations(seq, b)
}

/// Cauchy bound: every real root has |x| < 1 + max |a_i / a_n|.
pub fn root_bound(f: &PolyQ) -> Rational {
    let lc = f.lc().cloned().unwrap_or_else(Rational::one);
    let m = f
        .coeffs()
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    (m + Rational::one()).ceil()
}

/// Isolating intervals for the real roots of a squarefree `f`, ascending.
pub fn isolate_real_roots(f: &PolyQ) -> Vec<RootInterval> {
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 16));
    isolate_real_roots_tol(f, &tol)
}

pub fn isolate_real_roots_tol(f: &PolyQ, tol: &Rational) -> Vec<RootInterval> {
    if f.deg() == 0 {
        return Vec::new();
    }
    let h = f.squarefree_part();
    let seq = sturm_sequence(&h);
    let b = root_bound(&h);
    let a = -b.clone();
    let mut out = Vec::new();
    split(&h, &seq, a, b, tol, &mut out);
    out
}

fn split(
    f: &PolyQ,
    seq: &[PolyQ],
    a: Rational,
    b: Rational,
    tol: &Rational,
    out: &mut Vec<RootInterval>,
) {
    let n = count_roots(seq, &a, &b);
    if n == 0 {
        return;
    }
    if f.eval(&b).is_zero() && n == 1 {
        out.push(RootInterval { lo: b.clone(), hi: b });
        return;
    }
    if n == 1 && &b - &a < *tol && sign(&f.eval(&a)) * sign(&f.eval(&b)) < 0 {
        out.push(RootInterval { lo: a, hi: b });
        return;
    }
    let mid = (&a + &b) / Rational::from_integer(2.into());
    split(f, seq, a, mid.clone(), tol, out);
    split(f, seq, mid, b, tol, out);
}

/// Narrows an isolating interval until its width is below `tol`.
pub fn refine(f: &PolyQ, iv: &RootInterval, tol: &Rational) -> RootInterval {
    let f = &f.squarefree_part();
    let mut iv = iv.clone();
    while !iv.is_exact() && iv.width() >= *tol {
        let mid = iv.midpoint();
        let sm = sign(&f.eval(&mid));
        if sm == 0 {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        if sm == sign(&f.eval(&iv.lo)) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv
}

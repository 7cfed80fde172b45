use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::nt::{inv_mod, mul_mod, pow_mod};
use super::polyq::PolyQ;
use super::rational::residue_mod_u64;
use crate::error::{Error, Result};

/// Polynomial over F_p, coefficients lowest degree first, reduced to [0, p).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn from_ints(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    /// Reduction of a rational polynomial. Fails if some denominator is divisible by p.
    pub fn reduce(f: &PolyQ, p: u64) -> Result<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                residue_mod_u64(c, p).ok_or_else(|| {
                    Error::Input(format!("coefficient {c} of {f} is not integral at {p}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(p, coeffs))
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let p = self.p;
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - mul_mod(c, dc, p)) % p;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    /// Roots in F_p (without multiplicity), ascending.
    pub fn roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        if self.p <= 64 {
            return (0..self.p).filter(|&x| self.eval(x) == 0).collect();
        }
        // gcd with x^p - x isolates the split part.
        let m = self.monic();
        let xp = Self::x(self.p).pow_mod(self.p as u128, &m);
        let split = m.gcd(&xp.sub(&Self::x(self.p)));
        let mut out: Vec<u64> = super::factor::equal_degree_split(&split, 1, &mut default_rng(self.p))
            .into_iter()
            .map(|lin| (self.p - lin.coeff(0)) % self.p)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn random_below_degree<R: Rng>(p: u64, n: usize, rng: &mut R) -> Self {
        Self::new(p, (0..n).map(|_| rng.random_range(0..p)).collect())
    }

    /// Integer representatives lifted to a rational polynomial.
    pub fn to_polyq(&self) -> PolyQ {
        PolyQ::from_bigints(
            &self
                .coeffs
                .iter()
                .map(|&c| num_bigint::BigInt::from(c))
                .collect::<Vec<_>>(),
        )
    }

    /// p-th root of a polynomial whose derivative vanishes (all exponents
    /// divisible by p). Coefficients are fixed by Frobenius on F_p.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(
            self.p,
            self.coeffs.iter().step_by(p).copied().collect(),
        )
    }

    pub(crate) fn frobenius_power(&self, m: &Self) -> Self {
        self.pow_mod(self.p as u128, m)
    }
}

pub(crate) fn default_rng(p: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(0x6b75_6d63_6572_7400 ^ p)
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFp[{}]({self})", self.p)
    }
}

impl Serialize for PolyFp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// Inverse of `a` modulo the prime `p`, as a free function for callers
/// outside this module.
pub fn inverse_mod_p(a: u64, p: u64) -> u64 {
    inv_mod(a, p)
}

pub fn pow_mod_p(a: u64, e: u64, p: u64) -> u64 {
    pow_mod(a, e as u128, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = PolyFp::from_ints(7, &[1, 0, 1]);
        let g = PolyFp::from_ints(7, &[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert_eq!(r, PolyFp::new(7, vec![2]));
        assert_eq!(f.eval(3), 3);
    }

    #[test]
    fn roots_large_prime() {
        let p = 1009;
        let f = PolyFp::from_ints(p, &[-6, 11, -6, 1]);
        assert_eq!(f.roots(), vec![1, 2, 3]);
        let g = PolyFp::from_ints(p, &[1, 0, 1]);
        assert!(g.roots().len() == 2);
    }

    #[test]
    fn reduction_rejects_non_integral() {
        let f = PolyQ::new(vec![crate::exact::ratio(1, 3), crate::exact::int(1)]);
        assert!(PolyFp::reduce(&f, 3).is_err());
        assert_eq!(PolyFp::reduce(&f, 5).unwrap(), PolyFp::new(5, vec![2, 1]));
    }
}

//! Arithmetic in Q[x]/(f) with elements stored as remainders of degree < deg f.

use num_traits::{One, Zero};

use super::polyq::PolyQ;
use super::rational::Rational;
use crate::error::{input, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus: PolyQ,
}

impl QuotientRing {
    pub fn new(f: &PolyQ) -> Result<Self> {
        if f.degree().unwrap_or(0) == 0 {
            return input(format!("quotient by {f} is degenerate"));
        }
        Ok(QuotientRing { modulus: f.monic() })
    }

    pub fn modulus(&self) -> &PolyQ {
        &self.modulus
    }

    pub fn dim(&self) -> usize {
        self.modulus.deg()
    }

    pub fn reduce(&self, a: &PolyQ) -> PolyQ {
        a.rem(&self.modulus)
    }

    pub fn mul(&self, a: &PolyQ, b: &PolyQ) -> PolyQ {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, a: &PolyQ, mut e: u64) -> PolyQ {
        let mut base = self.reduce(a);
        let mut acc = PolyQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via extended gcd; fails when `a` shares a factor with the modulus.
    pub fn inverse(&self, a: &PolyQ) -> Result<PolyQ> {
        let a = self.reduce(a);
        let (g, s, _) = a.extended_gcd(&self.modulus);
        if g.deg() != 0 || g.is_zero() {
            return Err(Error::Precondition(format!(
                "{a} is not invertible modulo {}",
                self.modulus
            )));
        }
        Ok(self.reduce(&s))
    }

    /// Matrix of multiplication by `a` on the power basis; column j is a * x^j.
    pub fn mult_matrix(&self, a: &PolyQ) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut col = self.reduce(a);
        for j in 0..n {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
            col = self.mul(&col, &PolyQ::x());
        }
        m
    }

    pub fn trace(&self, a: &PolyQ) -> Rational {
        let m = self.mult_matrix(a);
        (0..self.dim()).map(|i| m[i][i].clone()).sum()
    }

    pub fn norm(&self, a: &PolyQ) -> Rational {
        det_rational(self.mult_matrix(a))
    }
}

/// Determinant over Q by Gaussian elimination.
pub fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        let p = m[k][k].clone();
        det *= &p;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &p;
            for j in k..n {
                let t = &factor * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Power sums Tr(θ^i), 0 <= i < count, of the roots of a monic `f` (Newton's identities).
pub fn trace_powers(f: &PolyQ, count: usize) -> Result<Vec<Rational>> {
    if !f.is_monic() || f.deg() == 0 {
        return input(format!("trace_powers needs a monic polynomial of degree >= 1, got {f}"));
    }
    let n = f.deg();
    // f = x^n + a_{n-1} x^{n-1} + ... + a_0
    let a = |j: usize| f.coeff(j);
    let mut s: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            s.push(Rational::from_integer(n.into()));
            continue;
        }
        // s_k = -k a_{n-k} - sum_{i=1}^{k-1} a_{n-i} s_{k-i}  for k <= n
        // s_k = -sum_{i=1}^{n} a_{n-i} s_{k-i}                for k > n
        let mut acc = Rational::zero();
        for i in 1..k.min(n + 1) {
            acc -= a(n - i) * &s[k - i];
        }
        if k <= n {
            acc -= a(n - k) * Rational::from_integer(k.into());
        }
        s.push(acc);
    }
    Ok(s)
}

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polyq::PolyQ;
use super::rational::{common_denominator, Rational};
use crate::error::{input, Result};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn sylvester(f: &[BigInt], g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn clear(f: &PolyQ) -> (BigInt, Vec<BigInt>) {
    let d = common_denominator(f.coeffs());
    let ints = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(d.clone())).to_integer())
        .collect();
    (d, ints)
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return input("resultant of the zero polynomial");
    }
    let (m, n) = (f.deg(), g.deg());
    if m == 0 && n == 0 {
        return Ok(Rational::one());
    }
    let (cf, fi) = clear(f);
    let (cg, gi) = clear(g);
    // Res(cf f, cg g) = cf^n cg^m Res(f, g)
    let det = bareiss_det(sylvester(&fi, &gi));
    let scale = num_traits::pow(cf, n) * num_traits::pow(cg, m);
    Ok(Rational::new(det, scale))
}

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant(f: &PolyQ) -> Result<Rational> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return input(format!("discriminant needs degree >= 2, got {f}")),
    };
    let r = resultant(f, &f.derivative())?;
    let d = r / f.lc().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

//! Machine-word number theory: primes, modular powers, Legendre symbols,
//! square roots mod p and integer factorization for report-sized integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u128, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p`. Panics on zero.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, (p - 2) as u128, p)
}

/// Deterministic Miller-Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Legendre symbol (a/p) for an odd prime p: 0, 1 or -1.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, ((p - 1) / 2) as u128, p) == 1 {
        1
    } else {
        -1
    }
}

/// Square root modulo an odd prime (Tonelli-Shanks). `None` for non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, ((p + 1) / 4) as u128, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let mut z = 2;
    while legendre(z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q as u128, p);
    let mut t = pow_mod(a, q as u128, p);
    let mut r = pow_mod(a, ((q + 1) / 2) as u128, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1u128 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Prime factorization of |n| as (prime, exponent), ascending.
///
/// Integers that do not fit in u64 after trial division up to 10^5 are split
/// by Pollard rho only when they fit; otherwise the cofactor is returned in
/// the second component and the caller must treat it as unfactored.
pub fn factor_integer(n: &BigInt) -> (Vec<(u64, u32)>, Option<BigUint>) {
    let mut m = n.abs().to_biguint().unwrap_or_default();
    let mut primes: Vec<u64> = Vec::new();
    if m.is_zero() {
        return (Vec::new(), None);
    }
    for p in primes_up_to(100_000) {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(p);
        }
    }
    let mut rest = None;
    if !m.is_one() {
        match m.to_u64() {
            Some(small) => factor_u64_into(small, &mut primes),
            None => rest = Some(m),
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    (out, rest)
}

/// Odd prime divisors of a nonzero integer, ascending. Unfactored cofactors
/// are reported separately.
pub fn odd_prime_divisors(n: &BigInt) -> (Vec<u64>, Option<BigUint>) {
    let (f, rest) = factor_integer(n);
    (f.into_iter().map(|(p, _)| p).filter(|&p| p != 2).collect(), rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small = primes_up_to(100);
        assert_eq!(small.len(), 25);
        for n in 0..1000u64 {
            assert_eq!(is_prime(n), primes_up_to(1000).contains(&n), "{n}");
        }
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn square_roots() {
        for p in [3u64, 5, 7, 13, 17, 41, 97, 283] {
            for a in 0..p {
                match sqrt_mod(a, p) {
                    Some(r) => assert_eq!(mul_mod(r, r, p), a),
                    None => assert_eq!(legendre(a, p), -1),
                }
            }
        }
    }

    #[test]
    fn factoring() {
        let (f, rest) = factor_integer(&BigInt::from(2869));
        assert_eq!(f, vec![(19, 1), (151, 1)]);
        assert!(rest.is_none());
        let (f, _) = factor_integer(&BigInt::from(-256));
        assert_eq!(f, vec![(2, 8)]);
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let (f, rest) = factor_integer(&big);
        assert_eq!(f, vec![(998_244_353, 1), (1_000_000_007, 1)]);
        assert!(rest.is_none());
    }
}

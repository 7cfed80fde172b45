use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// p-adic valuation of a nonzero integer. `None` for zero.
pub fn val_int(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational number. `None` for zero.
pub fn val_q(x: &Rational, p: u64) -> Option<i64> {
    let a = val_int(x.numer(), p)?;
    let b = val_int(x.denom(), p).unwrap_or(0);
    Some(a - b)
}

/// True iff `p` does not divide the denominator.
pub fn is_p_integral(x: &Rational, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}

/// Residue of a p-integral rational modulo `m` (typically a power of p).
pub fn residue_mod(x: &Rational, m: &BigInt) -> Option<BigInt> {
    let d = x.denom().mod_floor(m);
    let inv = mod_inverse_big(&d, m)?;
    Some((x.numer().mod_floor(m) * inv).mod_floor(m))
}

pub fn residue_mod_u64(x: &Rational, p: u64) -> Option<u64> {
    residue_mod(x, &BigInt::from(p)).and_then(|r| r.to_u64())
}

pub fn mod_inverse_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Exact test: is `x` the square of a rational number?
pub fn is_rational_square(x: &Rational) -> bool {
    if x.is_zero() {
        return true;
    }
    if x.is_negative() {
        return false;
    }
    is_perfect_square(x.numer()) && is_perfect_square(x.denom())
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Formats as `"num"` or `"num/den"`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"n"`, `"-n"`, `"n/d"`. Denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| crate::Error::Input(format!("bad rational numerator in {s:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| crate::Error::Input(format!("bad rational denominator in {s:?}")))?;
    if d.is_zero() {
        return input(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

pub fn sign(x: &Rational) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(val_q(&int(2869), 19), Some(1));
        assert_eq!(val_q(&ratio(9, 50), 5), Some(-2));
        assert_eq!(val_q(&int(0), 3), None);
        assert_eq!(val_q(&ratio(7, 3), 3), Some(-1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/-4").unwrap(), ratio(-3, 2));
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(residue_mod_u64(&ratio(1, 2), 7), Some(4));
        assert_eq!(residue_mod_u64(&ratio(1, 7), 7), None);
        assert!(is_rational_square(&ratio(4, 9)));
        assert!(!is_rational_square(&int(-283)));
        assert!(is_rational_square(&int(256)));
    }
}

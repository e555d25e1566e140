//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps values in lowest
//! terms with a positive denominator. This module adds the parsing, formatting
//! and square-root helpers the rest of the crate needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"-3/8"`, `"5"` or `" 7 "`. Zero denominators are rejected.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bad = || Error::BadRational(text.trim().to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Formats as `num/den`, or just `num` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_list(values: &[Rat]) -> String {
    values.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
}

/// The positive rational square root, if `r` is the square of a positive rational.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if !r.is_positive() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/16").unwrap(), frac(3, 8));
        assert_eq!(parse_rat(" -5 ").unwrap(), int(-5));
        assert_eq!(fmt_rat(&frac(3, 8)), "3/8");
        assert_eq!(fmt_rat(&frac(-10, 2)), "-5");
        assert_eq!(fmt_rat(&Rat::zero()), "0");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn lowest_terms() {
        let r = frac(-4, -6);
        assert_eq!(r.numer(), &BigInt::from(2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&Rat::zero()), None);
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&frac(1, 2), 10), frac(1, 1024));
        assert_eq!(pow(&int(7), 0), int(1));
    }
}

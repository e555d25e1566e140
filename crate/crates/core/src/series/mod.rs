//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` of order `n` knows the coefficients `a_0..=a_n` and nothing
//! beyond. Binary operations produce order `min(n, m)`; no operation ever
//! invents coefficients it cannot justify.

pub mod catalog;
pub mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{fmt_list, fmt_rat, sqrt_exact, Rat};

pub use catalog::{catalog, CatalogEntry};
pub use parse::parse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    // never empty: coeffs.len() == order + 1
    coeffs: Vec<Rat>,
}

impl Series {
    /// Builds a series from `a_0..=a_n`. Panics on an empty vector, since a
    /// series always knows at least its constant term.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| crate::rat::int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rat::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::monomial(Rat::one(), 1, order)
    }

    pub fn monomial(c: Rat, power: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Truncation of a polynomial to the given order.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::new((0..=order).map(|k| p.coeff(k)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient `a_k`; `None` beyond the known order.
    pub fn coeff(&self, k: usize) -> Option<&Rat> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Restricts to order `m`. Panics if `m` exceeds the current order.
    pub fn truncate(&self, m: usize) -> Series {
        assert!(
            m <= self.order(),
            "cannot truncate order {} to {m}",
            self.order()
        );
        Series::new(self.coeffs[..=m].to_vec())
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x`. The order is kept, so the top coefficient
    /// falls off.
    pub fn shift_mul_x(&self) -> Series {
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(Rat::zero());
        out.extend_from_slice(&self.coeffs[..self.order()]);
        Series::new(out)
    }

    /// Exact division by `x^power`. Requires `a_0..a_{power-1}` to be zero;
    /// the order drops by `power`.
    pub fn div_x(&self, power: usize) -> Result<Series> {
        if power > self.order() {
            return Err(Error::InsufficientOrder {
                need: power,
                have: self.order(),
            });
        }
        if self.coeffs[..power].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonZeroLowTerms { power });
        }
        Ok(Series::new(self.coeffs[power..].to_vec()))
    }

    /// Multiplicative inverse; needs a non-zero constant term.
    pub fn inv(&self) -> Result<Series> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let f0_inv = Rat::one() / f0;
        let mut g: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        g.push(f0_inv.clone());
        for k in 1..=self.order() {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &g[k - i];
                }
            }
            g.push(-acc * &f0_inv);
        }
        Ok(Series::new(g))
    }

    /// Square root with positive constant term, computed coefficient by
    /// coefficient from `g * g = f`.
    pub fn sqrt(&self) -> Result<Series> {
        let r = sqrt_exact(&self.coeffs[0])
            .ok_or_else(|| Error::NotSquare(fmt_rat(&self.coeffs[0])))?;
        let two_r_inv = Rat::one() / (&r + &r);
        let mut g: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        g.push(r);
        for k in 1..=self.order() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &g[i] * &g[k - i];
            }
            g.push(acc * &two_r_inv);
        }
        Ok(Series::new(g))
    }

    /// Quotient `self / divisor`.
    ///
    /// When the divisor has valuation `v > 0`, the numerator must vanish to
    /// the same depth and both are divided by `x^v` first, so the result has
    /// order `min(n, m) - v`.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let v = divisor.valuation().ok_or(Error::NotInvertible)?;
        if v == 0 {
            return Ok(self * &divisor.inv()?);
        }
        let order = self.order().min(divisor.order());
        let num = self.truncate(order).div_x(v)?;
        let den = divisor.truncate(order).div_x(v)?;
        Ok(&num * &den.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Series {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Renders as a polynomial expression that `parse` reads back to the
    /// same series at the same order, e.g. `1 - 1/2*x + 3/8*x^2`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                out.push_str(&fmt_rat(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", fmt_rat(&mag)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_list(&self.coeffs))
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::new((0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    /// Cauchy product truncated to the shared order.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn s(c: &[i64]) -> Series {
        Series::from_ints(c)
    }

    #[test]
    fn add_examples() {
        let ones = s(&[1, 1, 1, 1, 1]);
        assert!((&ones + &(-&ones)).is_zero());
        assert_eq!(&s(&[1, 1]) + &s(&[0, 1]), s(&[1, 2]));
        // orders meet at the minimum
        assert_eq!((&s(&[1, 1, 1]) + &s(&[1])).order(), 0);
    }

    #[test]
    fn mul_examples() {
        let ones = s(&[1, 1, 1, 1, 1]);
        assert_eq!(&ones * &Series::one(4), ones);
        let one_minus_x = Series::from_poly(&Poly::from_ints(&[1, -1]), 4);
        assert_eq!(&one_minus_x * &ones, Series::one(4));
    }

    #[test]
    fn inv_examples() {
        let f = Series::from_poly(&Poly::from_ints(&[1, -1]), 4);
        assert_eq!(f.inv().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(Series::one(0).inv().unwrap(), Series::one(0));
        let e = Series::from_poly(&Poly::from_ints(&[1, -2]), 3);
        assert_eq!(e.inv().unwrap(), s(&[1, 2, 4, 8]));
        assert_eq!(s(&[0, 1]).inv(), Err(Error::NotInvertible));
    }

    #[test]
    fn sqrt_examples() {
        let f = Series::from_poly(&Poly::from_ints(&[1, -1]), 3);
        let g = f.sqrt().unwrap();
        assert_eq!(
            g.coeffs(),
            &[int(1), frac(-1, 2), frac(-1, 8), frac(-1, 16)]
        );
        // squaring oracle
        assert_eq!(&g * &g, f);
        assert_eq!(Series::one(0).sqrt().unwrap(), Series::one(0));
        assert_eq!(
            Series::constant(int(9), 2).sqrt().unwrap(),
            Series::constant(int(3), 2)
        );
        assert!(matches!(s(&[2, 1]).sqrt(), Err(Error::NotSquare(_))));
        assert!(matches!(s(&[0, 1]).sqrt(), Err(Error::NotSquare(_))));
    }

    #[test]
    fn shift_and_scale() {
        assert_eq!(s(&[1, 2, 3]).shift_mul_x(), s(&[0, 1, 2]));
        assert!(s(&[4, 5]).scale(&Rat::zero()).is_zero());
        let ones = s(&[1, 1, 1, 1]);
        let r = &ones.shift_mul_x().scale(&int(-1)) + &ones;
        assert_eq!(r, s(&[1, 0, 0, 0]));
    }

    #[test]
    fn division_by_x_powers() {
        assert_eq!(s(&[0, 0, 3, 4]).div_x(2).unwrap(), s(&[3, 4]));
        assert_eq!(
            s(&[0, 1, 3]).div_x(2),
            Err(Error::NonZeroLowTerms { power: 2 })
        );
        // (2x + 2x^2) / (2x) = 1 + x
        let q = s(&[0, 2, 2, 0]).div(&s(&[0, 2, 0, 0])).unwrap();
        assert_eq!(q, s(&[1, 1, 0]));
        assert!(s(&[1, 0]).div(&s(&[0, 1])).is_err());
        assert_eq!(s(&[1, 0]).div(&s(&[0, 0])), Err(Error::NotInvertible));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = s(&[1, 2, -1, 3]);
        assert_eq!(f.pow(3), &(&f * &f) * &f);
        assert_eq!(f.pow(0), Series::one(3));
    }

    #[test]
    fn render_format() {
        let f = Series::new(vec![int(1), frac(-1, 2), int(0), frac(3, 8), int(1)]);
        assert_eq!(f.render(), "1 - 1/2*x + 3/8*x^3 + x^4");
        assert_eq!(Series::zero(2).render(), "0");
        assert_eq!(s(&[0, -1]).render(), "-x");
        assert_eq!(f.to_string(), "1, -1/2, 0, 3/8, 1");
    }
}

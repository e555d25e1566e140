//! Rational generating functions `P/Q` and coefficient-matching (Padé)
//! approximation.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hankel::elim::solve;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::series::Series;

/// `P/Q` in lowest terms with `q_0 = 1`.
///
/// The degree is the smallest `d` with `deg Q <= d` and `deg P <= d - 1`,
/// i.e. `max(deg Q, deg P + 1)`; the zero function has degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    p: Poly,
    q: Poly,
}

impl RationalGF {
    /// Builds `P/Q`, rejecting a non-invertible `Q` and a numerator whose
    /// degree reaches that of a non-constant denominator.
    pub fn make(p: Poly, q: Poly) -> Result<Self> {
        if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
            if dq >= 1 && dp >= dq {
                return Err(Error::NumeratorDegree { num: dp, den: dq });
            }
        }
        Self::from_fraction(p, q)
    }

    /// Builds `P/Q` with no constraint on the degree of `P` beyond
    /// invertibility of `Q`. Polynomial (FIR) filters go through here.
    pub fn from_fraction(p: Poly, q: Poly) -> Result<Self> {
        let q0 = q.coeff(0);
        if q0.is_zero() {
            return Err(Error::DenominatorNotInvertible);
        }
        if p.is_zero() {
            return Ok(RationalGF::zero());
        }
        let g = Poly::gcd(&p, &q);
        let (p, q) = if g.degree().unwrap_or(0) > 0 {
            (p.div_rem(&g).0, q.div_rem(&g).0)
        } else {
            (p, q)
        };
        // common factors never vanish at 0 here because q_0 != 0
        let norm = Rat::one() / q.coeff(0);
        Ok(RationalGF {
            p: p.scale(&norm),
            q: q.scale(&norm),
        })
    }

    pub fn zero() -> Self {
        RationalGF {
            p: Poly::zero(),
            q: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.p
    }

    pub fn denominator(&self) -> &Poly {
        &self.q
    }

    pub fn degree(&self) -> usize {
        match self.p.degree() {
            None => 0,
            Some(dp) => (dp + 1).max(self.q.degree().unwrap_or(0)),
        }
    }

    /// Taylor coefficients through `x^order` from
    /// `a_k = p_k - sum_{j>=1} q_j a_{k-j}`.
    pub fn expand(&self, order: usize) -> Series {
        let q = self.q.coeffs();
        let mut a: Vec<Rat> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut v = self.p.coeff(k);
            for j in 1..q.len().min(k + 1) {
                if !q[j].is_zero() {
                    v -= &q[j] * &a[k - j];
                }
            }
            a.push(v);
        }
        Series::new(a)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P: {}", self.p)?;
        write!(f, "Q: {}", self.q)
    }
}

/// Result of a Padé fit: the approximant and the degree actually reached
/// after stepping down past singular systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeFit {
    pub approximant: RationalGF,
    pub requested_degree: usize,
    pub achieved_degree: usize,
}

/// Fits `P/Q` with `deg Q <= d`, `deg P <= d - 1`, `q_0 = 1` and
/// `Q f = P (mod x^{2d})`, so the expansion agrees with `f` on `0..2d`.
///
/// If the `d x d` system for `Q` is singular, `d` is lowered by one and the
/// fit retried.
pub fn pade(f: &Series, d: usize) -> Result<PadeFit> {
    if d >= 1 && f.order() + 1 < 2 * d {
        return Err(Error::InsufficientOrder {
            need: 2 * d - 1,
            have: f.order(),
        });
    }
    let a = |k: isize| -> Rat {
        if k < 0 {
            Rat::zero()
        } else {
            f.coeffs()[k as usize].clone()
        }
    };
    for m in (1..=d).rev() {
        // rows k = m..2m-1: sum_{j=1..m} q_j a_{k-j} = -a_k
        let matrix: Vec<Vec<Rat>> = (m..2 * m)
            .map(|k| (1..=m).map(|j| a(k as isize - j as isize)).collect())
            .collect();
        let rhs: Vec<Rat> = (m..2 * m).map(|k| -a(k as isize)).collect();
        let Some(sol) = solve(matrix, rhs) else {
            continue;
        };
        let mut q = vec![Rat::one()];
        q.extend(sol);
        let q = Poly::new(q);
        let p = Poly::new(
            (0..m)
                .map(|k| {
                    (0..=k)
                        .map(|j| q.coeff(j) * a((k - j) as isize))
                        .fold(Rat::zero(), |acc, v| acc + v)
                })
                .collect(),
        );
        let approximant = RationalGF::from_fraction(p, q)?;
        return Ok(PadeFit {
            achieved_degree: approximant.degree(),
            approximant,
            requested_degree: d,
        });
    }
    Ok(PadeFit {
        approximant: RationalGF::zero(),
        requested_degree: d,
        achieved_degree: 0,
    })
}

/// `max_{0<=k<=n} |f_k - g_k|` where `g_k` are the coefficients of `g`.
pub fn approx_error(f: &Series, g: &RationalGF, n: usize) -> Result<Rat> {
    Ok(coeff_deviations(f, g, n)?
        .into_iter()
        .fold(Rat::zero(), |m, v| if v > m { v } else { m }))
}

/// `|f_k - g_k|` for each `0 <= k <= n`.
pub fn coeff_deviations(f: &Series, g: &RationalGF, n: usize) -> Result<Vec<Rat>> {
    if f.order() < n {
        return Err(Error::InsufficientOrder {
            need: n,
            have: f.order(),
        });
    }
    let e = g.expand(n);
    Ok(f.coeffs()[..=n]
        .iter()
        .zip(e.coeffs())
        .map(|(x, y)| (x - y).abs())
        .collect())
}

/// Number of leading coefficients on which `f` and `g` agree (capped at the
/// order of `f` plus one).
pub fn agreement(f: &Series, g: &RationalGF) -> usize {
    let e = g.expand(f.order());
    f.coeffs()
        .iter()
        .zip(e.coeffs())
        .take_while(|(x, y)| x == y)
        .count()
}

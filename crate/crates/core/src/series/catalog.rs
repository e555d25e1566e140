//! Named generating functions, each generated by its own coefficient
//! recurrence (never through the expression parser).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::Series;
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, frac, int, parse_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    /// `1/(1-x)`: continual counting.
    One,
    /// `1/(1-2x)`.
    Exp,
    /// `1/sqrt(1-x)`.
    Half,
    /// Catalan numbers, `(1 - sqrt(1-4x)) / (2x)`.
    Catalan,
    /// `1/((1 - lambda x)(1 - mu x))`, with `0 <= mu < lambda <= 1`.
    Lm { lambda: Rat, mu: Rat },
    /// `1/sqrt((1 - lambda x)(1 - mu x))`.
    SqrtLm { lambda: Rat, mu: Rat },
    /// `1/sqrt(1-4x)`, the central binomial coefficients.
    CentralBinomial,
    /// `8/(b-c)^2 * (1 - (b+c)/2 x - sqrt((1-bx)(1-cx))) / x^2`, with `b != c`
    /// both non-zero.
    Junod { b: Rat, c: Rat },
}

pub const NAMES: &[&str] = &[
    "g_one",
    "g_exp",
    "g_half",
    "g_catalan",
    "g_lm(lambda,mu)",
    "sqrt_g_lm(lambda,mu)",
    "central_binomial",
    "junod_g(b,c)",
];

impl CatalogEntry {
    /// Checks parameter domains.
    pub fn validate(&self) -> Result<()> {
        match self {
            CatalogEntry::Lm { lambda, mu } | CatalogEntry::SqrtLm { lambda, mu } => {
                if !(&Rat::zero() <= mu && mu < lambda && lambda <= &Rat::one()) {
                    return Err(Error::Domain(format!(
                        "need 0 <= mu < lambda <= 1, got lambda={}, mu={}",
                        fmt_rat(lambda),
                        fmt_rat(mu)
                    )));
                }
                Ok(())
            }
            CatalogEntry::Junod { b, c } => {
                if b == c || b.is_zero() || c.is_zero() {
                    return Err(Error::Domain(format!(
                        "need b != c, both non-zero, got b={}, c={}",
                        fmt_rat(b),
                        fmt_rat(c)
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// Coefficients `a_0..=a_order` of the catalog entry.
pub fn catalog(entry: &CatalogEntry, order: usize) -> Result<Series> {
    entry.validate()?;
    let n = order + 1;
    let coeffs: Vec<Rat> = match entry {
        CatalogEntry::One => vec![Rat::one(); n],
        CatalogEntry::Exp => {
            let mut v = Vec::with_capacity(n);
            let mut a = Rat::one();
            for _ in 0..n {
                v.push(a.clone());
                a *= int(2);
            }
            v
        }
        // a_k = a_{k-1} (2k-1) / (2k)
        CatalogEntry::Half => ratio_recurrence(n, |k| frac(2 * k - 1, 2 * k)),
        // C_k = C_{k-1} 2(2k-1) / (k+1)
        CatalogEntry::Catalan => ratio_recurrence(n, |k| frac(2 * (2 * k - 1), k + 1)),
        // binom(2k,k) = binom(2k-2,k-1) (4k-2) / k
        CatalogEntry::CentralBinomial => ratio_recurrence(n, |k| frac(4 * k - 2, k)),
        CatalogEntry::Lm { lambda, mu } => {
            // a_k = (lambda + mu) a_{k-1} - lambda mu a_{k-2}
            let s = lambda + mu;
            let p = lambda * mu;
            let mut v: Vec<Rat> = Vec::with_capacity(n);
            for k in 0..n {
                let a = match k {
                    0 => Rat::one(),
                    1 => s.clone(),
                    _ => &s * &v[k - 1] - &p * &v[k - 2],
                };
                v.push(a);
            }
            v
        }
        CatalogEntry::SqrtLm { lambda, mu } => {
            inv_sqrt_quadratic(&(lambda + mu), &(lambda * mu), n)
        }
        CatalogEntry::Junod { b, c } => {
            let f = sqrt_quadratic(&(b + c), &(b * c), n + 2);
            let diff = b - c;
            let scale = -int(8) / (&diff * &diff);
            f[2..].iter().map(|fk| fk * &scale).collect()
        }
    };
    Ok(Series::new(coeffs))
}

pub fn catalog_by_name(name: &str, order: usize) -> Result<Series> {
    catalog(&name.parse()?, order)
}

fn ratio_recurrence(n: usize, ratio: impl Fn(i64) -> Rat) -> Vec<Rat> {
    let mut v = Vec::with_capacity(n);
    let mut a = Rat::one();
    for k in 0..n {
        if k > 0 {
            a *= ratio(k as i64);
        }
        v.push(a.clone());
    }
    v
}

/// Coefficients of `(1 - s x + p x^2)^(-1/2)` from the holonomic recurrence
/// `(k+1) h_{k+1} = s (k + 1/2) h_k - p k h_{k-1}`.
fn inv_sqrt_quadratic(s: &Rat, p: &Rat, n: usize) -> Vec<Rat> {
    let mut h: Vec<Rat> = Vec::with_capacity(n);
    for m in 0..n {
        let v = if m == 0 {
            Rat::one()
        } else {
            let k = (m - 1) as i64;
            let mut acc = s * frac(2 * k + 1, 2) * &h[m - 1];
            if m >= 2 {
                acc -= p * int(k) * &h[m - 2];
            }
            acc / int(k + 1)
        };
        h.push(v);
    }
    h
}

/// Coefficients of `(1 - s x + p x^2)^(1/2)` from
/// `(k+1) f_{k+1} = s (k - 1/2) f_k - p (k - 2) f_{k-1}`.
fn sqrt_quadratic(s: &Rat, p: &Rat, n: usize) -> Vec<Rat> {
    let mut f: Vec<Rat> = Vec::with_capacity(n);
    for m in 0..n {
        let v = if m == 0 {
            Rat::one()
        } else {
            let k = (m - 1) as i64;
            let mut acc = s * frac(2 * k - 1, 2) * &f[m - 1];
            if m >= 2 {
                acc -= p * int(k - 2) * &f[m - 2];
            }
            acc / int(k + 1)
        };
        f.push(v);
    }
    f
}

impl FromStr for CatalogEntry {
    type Err = Error;

    /// Accepts `g_half`, `g_lm(1,1/2)`, `junod_g(5, 1)` and so on.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let unknown = || Error::UnknownCatalog(t.to_string());
        let (name, args) = match t.find('(') {
            Some(open) => {
                let inner = t[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
                let args = inner
                    .split(',')
                    .map(parse_rat)
                    .collect::<Result<Vec<_>>>()?;
                (t[..open].trim(), args)
            }
            None => (t, Vec::new()),
        };
        let two = |args: Vec<Rat>| -> Result<(Rat, Rat)> {
            match <[Rat; 2]>::try_from(args) {
                Ok([a, b]) => Ok((a, b)),
                Err(_) => Err(unknown()),
            }
        };
        let entry = match (name, args.is_empty()) {
            ("g_one", true) => CatalogEntry::One,
            ("g_exp", true) => CatalogEntry::Exp,
            ("g_half", true) => CatalogEntry::Half,
            ("g_catalan", true) => CatalogEntry::Catalan,
            ("central_binomial", true) => CatalogEntry::CentralBinomial,
            ("g_lm", false) => {
                let (lambda, mu) = two(args)?;
                CatalogEntry::Lm { lambda, mu }
            }
            ("sqrt_g_lm", false) => {
                let (lambda, mu) = two(args)?;
                CatalogEntry::SqrtLm { lambda, mu }
            }
            ("junod_g", false) => {
                let (b, c) = two(args)?;
                CatalogEntry::Junod { b, c }
            }
            _ => return Err(unknown()),
        };
        Ok(entry)
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::One => f.write_str("g_one"),
            CatalogEntry::Exp => f.write_str("g_exp"),
            CatalogEntry::Half => f.write_str("g_half"),
            CatalogEntry::Catalan => f.write_str("g_catalan"),
            CatalogEntry::CentralBinomial => f.write_str("central_binomial"),
            CatalogEntry::Lm { lambda, mu } => {
                write!(f, "g_lm({},{})", fmt_rat(lambda), fmt_rat(mu))
            }
            CatalogEntry::SqrtLm { lambda, mu } => {
                write!(f, "sqrt_g_lm({},{})", fmt_rat(lambda), fmt_rat(mu))
            }
            CatalogEntry::Junod { b, c } => write!(f, "junod_g({},{})", fmt_rat(b), fmt_rat(c)),
        }
    }
}

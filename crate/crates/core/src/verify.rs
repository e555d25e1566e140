//! Finite checks of Hankel determinant and rank identities.
//!
//! Every check returns a [`Report`] holding one [`CheckLine`] per size `d`
//! with both the expected and the computed exact value, so a failure says
//! exactly where and by how much. Hypothesis violations are errors; failed
//! comparisons are reported, and [`Report::into_result`] turns them into an
//! error listing the offending sizes.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::HankelView;
use crate::poly::Poly;
use crate::rat::{fmt_rat, frac, int, pow, Rat};
use crate::series::{catalog, CatalogEntry, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub d: usize,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} expected={} got={} ok={}",
            self.d, self.expected, self.got, self.ok
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub lines: Vec<CheckLine>,
    /// Free-form `# ...` lines printed after the checks.
    pub notes: Vec<String>,
}

impl Report {
    fn new(check: &str) -> Self {
        Report {
            check: check.to_string(),
            lines: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, d: usize, expected: String, got: String, ok: bool) {
        self.lines.push(CheckLine {
            d,
            expected,
            got,
            ok,
        });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    pub fn offending(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.lines.iter().filter(|l| !l.ok).map(|l| l.d).collect();
        v.dedup();
        v
    }

    pub fn into_result(self) -> Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::CheckFailed {
                check: self.check.clone(),
                offending: self.offending(),
            })
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        for note in &self.notes {
            writeln!(f, "# {note}")?;
        }
        Ok(())
    }
}

fn square_det(a: &Series, d: usize) -> Result<Rat> {
    HankelView::square(a, d)?.det()
}

fn square_rank(a: &Series, d: usize) -> Result<usize> {
    Ok(HankelView::square(a, d)?.rank())
}

/// `det(H_C^{(d,d)}) = 1` for the Catalan numbers, `d = 0..=d_max`.
pub fn verify_catalan_dets(d_max: usize) -> Result<Report> {
    let c = catalog(&CatalogEntry::Catalan, 2 * d_max)?;
    let mut report = Report::new("catalan");
    for d in 0..=d_max {
        let got = square_det(&c, d)?;
        report.push(d, "1".into(), fmt_rat(&got), got.is_one());
    }
    Ok(report)
}

/// `det(H[1/sqrt(1-4x)]^{(d,d)}) = 2^d`, followed by full rank of
/// `H[1/sqrt(1-x)]^{(d,d)}`.
pub fn verify_sqrt_dets(d_max: usize) -> Result<Report> {
    let b = catalog(&CatalogEntry::CentralBinomial, 2 * d_max)?;
    let h = catalog(&CatalogEntry::Half, 2 * d_max)?;
    let mut report = Report::new("sqrtdet");
    for d in 0..=d_max {
        let want = pow(&int(2), d);
        let got = square_det(&b, d)?;
        report.push(d, fmt_rat(&want), fmt_rat(&got), got == want);
    }
    for d in 0..=d_max {
        let r = square_rank(&h, d)?;
        report.push(d, format!("rank{}", d + 1), format!("rank{r}"), r == d + 1);
    }
    report
        .notes
        .push("first block: det H[1/sqrt(1-4x)]; second block: rank H[1/sqrt(1-x)]".into());
    Ok(report)
}

/// Builds `8/(b-c)^2 * (1 - (b+c)/2 x - sqrt((1-bx)(1-cx))) / x^2` to `order`
/// with series operations, asserting that the numerator vanishes to second
/// order before dividing by `x^2`.
pub fn junod_series(b: &Rat, c: &Rat, order: usize) -> Result<Series> {
    if b == c || b.is_zero() || c.is_zero() {
        return Err(Error::Hypothesis(format!(
            "need b != c, both non-zero (b={}, c={})",
            fmt_rat(b),
            fmt_rat(c)
        )));
    }
    let n = order + 2;
    let quad = &Poly::new(vec![Rat::one(), -b]) * &Poly::new(vec![Rat::one(), -c]);
    let root = Series::from_poly(&quad, n).sqrt()?;
    let lead = Poly::new(vec![Rat::one(), -(b + c) / int(2)]);
    let num = &Series::from_poly(&lead, n) - &root;
    let diff = b - c;
    Ok(num.div_x(2)?.scale(&(int(8) / (&diff * &diff))))
}

/// `det(H[G]^{(d,d)}) = ((b-c)^2/16)^{d(d+1)/2}` for the Junod-type `G`.
pub fn verify_junod(b: &Rat, c: &Rat, d_max: usize) -> Result<Report> {
    let g = junod_series(b, c, 2 * d_max)?;
    let mut report = Report::new("junod");
    // W = 1 - 1/G must vanish at 0
    let w0 = Rat::one() - Rat::one() / &g.coeffs()[0];
    report.notes.push(format!("W(0)={}", fmt_rat(&w0)));
    if !w0.is_zero() {
        return Err(Error::Hypothesis(format!("W(0) = {} != 0", fmt_rat(&w0))));
    }
    let diff = b - c;
    let alpha = &diff * &diff / int(16);
    report
        .notes
        .push(format!("alpha={} gamma=1", fmt_rat(&alpha)));
    for d in 0..=d_max {
        let want = pow(&alpha, d * (d + 1) / 2);
        let got = square_det(&g, d)?;
        report.push(d, fmt_rat(&want), fmt_rat(&got), got == want);
    }
    Ok(report)
}

fn check_lm_domain(lambda: &Rat, mu: &Rat) -> Result<()> {
    if !(&Rat::zero() <= mu && mu < lambda && lambda <= &Rat::one()) {
        return Err(Error::Hypothesis(format!(
            "need 0 <= mu < lambda <= 1 (lambda={}, mu={})",
            fmt_rat(lambda),
            fmt_rat(mu)
        )));
    }
    Ok(())
}

/// Rank of `H[sqrt(G_{lambda,mu})]^{(d,d)}` is at least `(d+1) - 5`.
pub fn verify_corank(lambda: &Rat, mu: &Rat, d_max: usize) -> Result<Report> {
    check_lm_domain(lambda, mu)?;
    let lm = catalog(
        &CatalogEntry::Lm {
            lambda: lambda.clone(),
            mu: mu.clone(),
        },
        2 * d_max,
    )?;
    let h = lm.sqrt()?;
    let mut report = Report::new("corank");
    let mut worst = 0;
    for d in 0..=d_max {
        let r = square_rank(&h, d)?;
        let floor = (d + 1).saturating_sub(5);
        worst = worst.max(d + 1 - r);
        report.push(d, format!(">={floor}"), r.to_string(), r >= floor);
    }
    report.notes.push(format!("max observed co-rank={worst}"));
    Ok(report)
}

/// The identity `f g = alpha g + beta x g + gamma` between two series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompRelation {
    pub f: Series,
    pub g: Series,
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

impl CompRelation {
    /// `f = sqrt((1 - lambda x)(1 - mu x))` and
    /// `G = (1 - (lambda+mu)/2 x - f) / x^2`, which satisfy
    /// `f G = -G + (lambda+mu)/2 x G + (lambda-mu)^2/4`.
    pub fn harder_sqrt(lambda: &Rat, mu: &Rat, order: usize) -> Result<Self> {
        check_lm_domain(lambda, mu)?;
        let n = order + 2;
        let quad = &Poly::new(vec![Rat::one(), -lambda]) * &Poly::new(vec![Rat::one(), -mu]);
        let f = Series::from_poly(&quad, n).sqrt()?;
        let half_sum = (lambda + mu) / int(2);
        let lead = Poly::new(vec![Rat::one(), -half_sum.clone()]);
        let g = (&Series::from_poly(&lead, n) - &f).div_x(2)?;
        let diff = lambda - mu;
        Ok(CompRelation {
            f: f.truncate(order),
            g,
            alpha: int(-1),
            beta: half_sum,
            gamma: &diff * &diff / int(4),
        })
    }

    /// `f g - alpha g - beta x g - gamma` to the shared order.
    pub fn residual(&self) -> Series {
        let n = self.f.order().min(self.g.order());
        let g = self.g.truncate(n);
        let lhs = &self.f.truncate(n) * &g;
        let rhs = &(&g.scale(&self.alpha) + &g.shift_mul_x().scale(&self.beta))
            + &Series::constant(self.gamma.clone(), n);
        &lhs - &rhs
    }
}

/// Checks the identity exactly, then `rank H[f]^{(d,d)} >= rank H[g]^{(d,d)} - 3`
/// (`- 2` when `beta = 0`) for `d = 0..=d_max`.
pub fn check_comp_relation(rel: &CompRelation, d_max: usize) -> Result<Report> {
    if rel.f.coeffs()[0] == rel.alpha {
        return Err(Error::Hypothesis("f_0 must differ from alpha".into()));
    }
    if rel.g.coeffs()[0].is_zero() {
        return Err(Error::Hypothesis("g_0 must be non-zero".into()));
    }
    let have = rel.f.order().min(rel.g.order());
    if have < 2 * d_max {
        return Err(Error::InsufficientOrder {
            need: 2 * d_max,
            have,
        });
    }
    let residual = rel.residual();
    if let Some(index) = residual.valuation() {
        return Err(Error::Residual {
            index,
            value: fmt_rat(&residual.coeffs()[index]),
        });
    }
    let slack = if rel.beta.is_zero() { 2 } else { 3 };
    let mut report = Report::new("comp");
    report
        .notes
        .push(format!("identity residual 0 through order {have}"));
    for d in 0..=d_max {
        let rf = square_rank(&rel.f, d)?;
        let rg = square_rank(&rel.g, d)?;
        let floor = rg.saturating_sub(slack);
        report.push(d, format!(">={floor}"), rf.to_string(), rf >= floor);
        report.notes.push(format!("d={d} rank_f={rf} rank_g={rg}"));
    }
    Ok(report)
}

/// Parameters used by the default `comp` instance.
pub fn default_lm() -> (Rat, Rat) {
    (int(1), frac(1, 2))
}

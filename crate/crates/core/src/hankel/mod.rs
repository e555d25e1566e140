//! Hankel matrices `H[a]` with `H_{i,j} = a_{i+j}`, their exact ranks and
//! determinants, and the space lower-bound certificates derived from them.
//!
//! A streaming algorithm for `T[a]` that is correct through time `t + I`
//! must, at some time `t' <= t`, hold at least `rank(H^{(I,t)})` numbers.
//! [`space_lower_bound`] computes that rank together with a set of
//! independent columns that can be checked on its own.

pub mod elim;

use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::Series;

/// The `(I+1) x (J+1)` upper-left block of `H[a]`. Entries are read from the
/// source series on demand.
#[derive(Clone, Copy, Debug)]
pub struct HankelView<'a> {
    source: &'a Series,
    max_row: usize,
    max_col: usize,
}

impl<'a> HankelView<'a> {
    /// `H^{(I,J)}`; needs the source known through `a_{I+J}`.
    pub fn new(source: &'a Series, max_row: usize, max_col: usize) -> Result<Self> {
        let need = max_row + max_col;
        if source.order() < need {
            return Err(Error::InsufficientOrder {
                need,
                have: source.order(),
            });
        }
        Ok(HankelView {
            source,
            max_row,
            max_col,
        })
    }

    /// The square block `H^{(d,d)}`.
    pub fn square(source: &'a Series, d: usize) -> Result<Self> {
        Self::new(source, d, d)
    }

    pub fn rows(&self) -> usize {
        self.max_row + 1
    }

    pub fn cols(&self) -> usize {
        self.max_col + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.source.coeffs()[i + j]
    }

    pub fn materialize(&self) -> Vec<Vec<Rat>> {
        self.materialize_cols(&(0..self.cols()).collect::<Vec<_>>())
    }

    /// The submatrix made of the listed columns.
    pub fn materialize_cols(&self, cols: &[usize]) -> Vec<Vec<Rat>> {
        (0..self.rows())
            .map(|i| cols.iter().map(|&j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// Exact determinant (fraction-free elimination).
    pub fn det(&self) -> Result<Rat> {
        if self.max_row != self.max_col {
            return Err(Error::NotSquareMatrix {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(elim::determinant(&self.materialize()))
    }

    pub fn rank(&self) -> usize {
        elim::rank_with_pivots(&self.materialize()).0
    }

    /// Rank plus the first maximal set of independent columns.
    pub fn rank_with_witness(&self) -> (usize, Vec<usize>) {
        elim::rank_with_pivots(&self.materialize())
    }
}

/// Lower bound on `space_a(t; t+I)`: the rank of `H^{(I,t)}` with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub t: usize,
    pub horizon: usize,
    pub rank: usize,
    /// Column indices of a maximal independent set of `H^{(I,t)}`.
    pub witness: Vec<usize>,
}

impl RankCertificate {
    /// Re-checks the witness against `a` with plain rational elimination:
    /// the witnessed columns must be independent and as many as the rank.
    pub fn verify(&self, a: &Series) -> Result<bool> {
        let view = HankelView::new(a, self.horizon, self.t)?;
        if self.witness.len() != self.rank || self.witness.iter().any(|&j| j > self.t) {
            return Ok(false);
        }
        let sub = view.materialize_cols(&self.witness);
        let full = elim::rational_rank(&view.materialize());
        Ok(elim::rational_rank(&sub) == self.rank && full == self.rank)
    }
}

impl fmt::Display for RankCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        write!(
            f,
            "t={} I={} rank={} witness=[{}]",
            self.t,
            self.horizon,
            self.rank,
            w.join(",")
        )
    }
}

/// Any streaming algorithm correct through time `t + horizon` has a buffer
/// of at least the returned rank at some time `t' <= t`.
pub fn space_lower_bound(a: &Series, t: usize, horizon: usize) -> Result<RankCertificate> {
    let view = HankelView::new(a, horizon, t)?;
    let (rank, witness) = view.rank_with_witness();
    Ok(RankCertificate {
        t,
        horizon,
        rank,
        witness,
    })
}

/// Ranks `r_k = rank(H^{(k,k)})`, `k = 0..=n`, from a series of order `2n`,
/// and the degree they point to, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub truncation: usize,
    pub ranks: Vec<usize>,
    /// `Some(d)` when the ranks settle at `d` with `r_{d-1} = d` before the
    /// last index; only evidence, never a proof of rationality.
    pub consistent_degree: Option<usize>,
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        writeln!(f, "ranks=[{}]", r.join(","))?;
        match self.consistent_degree {
            Some(d) => write!(
                f,
                "consistent with rational degree {d} at truncation {}",
                self.truncation
            ),
            None => write!(
                f,
                "no rational degree <= {} detected (rank still growing)",
                self.truncation
            ),
        }
    }
}

/// Finite-truncation degree detection from the ranks of square Hankel blocks.
///
/// The series must have even order `2n` with `n >= 1`; a longer series is
/// truncated to the largest even order.
pub fn detect_degree(a: &Series) -> Result<DegreeReport> {
    let n = a.order() / 2;
    if n == 0 {
        return Err(Error::InsufficientOrder {
            need: 2,
            have: a.order(),
        });
    }
    let ranks: Vec<usize> = (0..=n)
        .map(|k| HankelView::square(a, k).map(|h| h.rank()))
        .collect::<Result<_>>()?;
    let last = ranks[n];
    // r_k must equal last from k = d-1 onward, and d-1 < n so that at least
    // one larger block confirms the plateau
    let consistent_degree = if last == 0 {
        ranks.iter().all(|&r| r == 0).then_some(0)
    } else {
        let d = last;
        let settled = d - 1 < n && ranks[d - 1..].iter().all(|&r| r == d);
        settled.then_some(d)
    };
    Ok(DegreeReport {
        truncation: n,
        ranks,
        consistent_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::int;
    use crate::ratgf::RationalGF;
    use crate::series::{catalog, CatalogEntry};

    #[test]
    fn view_bounds() {
        let a = Series::from_ints(&[1, 2, 3]);
        assert!(HankelView::new(&a, 1, 1).is_ok());
        assert_eq!(
            HankelView::new(&a, 2, 1).unwrap_err(),
            Error::InsufficientOrder { need: 3, have: 2 }
        );
        let h = HankelView::new(&a, 0, 2).unwrap();
        assert_eq!(h.entry(0, 2), &int(3));
        assert!(matches!(
            h.det(),
            Err(Error::NotSquareMatrix { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn det_examples() {
        let c = catalog(&CatalogEntry::Catalan, 4).unwrap();
        assert_eq!(HankelView::square(&c, 2).unwrap().det().unwrap(), int(1));
        let b = catalog(&CatalogEntry::CentralBinomial, 4).unwrap();
        assert_eq!(HankelView::square(&b, 2).unwrap().det().unwrap(), int(4));
        let a = Series::from_ints(&[5]);
        assert_eq!(HankelView::square(&a, 0).unwrap().det().unwrap(), int(5));
    }

    #[test]
    fn rank_examples() {
        let ones = catalog(&CatalogEntry::One, 12).unwrap();
        assert_eq!(HankelView::new(&ones, 4, 6).unwrap().rank(), 1);
        let half = catalog(&CatalogEntry::Half, 6).unwrap();
        assert_eq!(HankelView::square(&half, 3).unwrap().rank(), 4);
        let fib = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -1, -1]))
            .unwrap()
            .expand(10);
        assert_eq!(HankelView::square(&fib, 5).unwrap().rank(), 2);
    }

    #[test]
    fn certificates() {
        let half = catalog(&CatalogEntry::Half, 6).unwrap();
        let cert = space_lower_bound(&half, 3, 3).unwrap();
        assert_eq!(cert.rank, 4);
        assert_eq!(cert.to_string(), "t=3 I=3 rank=4 witness=[0,1,2,3]");
        assert!(cert.verify(&half).unwrap());

        let ones = catalog(&CatalogEntry::One, 9).unwrap();
        let cert = space_lower_bound(&ones, 5, 4).unwrap();
        assert_eq!((cert.rank, cert.witness.clone()), (1, vec![0]));
        assert!(cert.verify(&ones).unwrap());

        let bogus = RankCertificate {
            witness: vec![0, 1],
            rank: 2,
            ..cert
        };
        assert!(!bogus.verify(&ones).unwrap());

        assert!(space_lower_bound(&ones, 5, 5).is_err());
    }

    #[test]
    fn degree_detection() {
        let fib = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -1, -1]))
            .unwrap()
            .expand(20);
        let r = detect_degree(&fib).unwrap();
        assert_eq!(r.consistent_degree, Some(2));
        assert_eq!(r.ranks[..4], [1, 2, 2, 2]);

        let g1 = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -1]))
            .unwrap()
            .expand(10);
        assert_eq!(detect_degree(&g1).unwrap().consistent_degree, Some(1));

        let half = catalog(&CatalogEntry::Half, 20).unwrap();
        let r = detect_degree(&half).unwrap();
        assert_eq!(r.consistent_degree, None);
        assert_eq!(r.ranks, (1..=11).collect::<Vec<_>>());
        assert!(r.to_string().contains("no rational degree <= 10"));

        assert_eq!(
            detect_degree(&Series::zero(4)).unwrap().consistent_degree,
            Some(0)
        );
        assert!(detect_degree(&Series::one(1)).is_err());
    }

    #[test]
    fn degree_at_the_edge_is_not_claimed() {
        // degree 3 with n = 2: the plateau is never confirmed
        let g = RationalGF::make(Poly::one(), Poly::from_ints(&[1, 1, 1, 1]))
            .unwrap()
            .expand(4);
        assert_eq!(detect_degree(&g).unwrap().consistent_degree, None);
        let g = RationalGF::make(Poly::one(), Poly::from_ints(&[1, 1, 1, 1]))
            .unwrap()
            .expand(6);
        assert_eq!(detect_degree(&g).unwrap().consistent_degree, Some(3));
    }
}

//! Exact streaming of lower-triangular Toeplitz convolutions `(T z)_t`
//! through their generating functions.
//!
//! - [`series`]: rationals, truncated power series, a catalog of named
//!   generating functions and an expression parser.
//! - [`ratgf`]: rational generating functions `P/Q` and Padé fitting.
//! - [`streamkit`]: streamers with buffer accounting, including the
//!   `min(t+1, d)` streamer for degree-`d` rational functions.
//! - [`hankel`]: exact Hankel ranks/determinants and space lower bounds.
//! - [`verify`]: determinant and rank identities checked at finite size.
//! - [`continual`]: correlated-noise continual counting `T_1 z + L y`.

pub mod continual;
pub mod error;
pub mod hankel;
pub mod poly;
pub mod rat;
pub mod ratgf;
pub mod series;
pub mod streamkit;
pub mod verify;

pub use error::{Error, Result};
pub use hankel::{detect_degree, space_lower_bound, DegreeReport, HankelView, RankCertificate};
pub use poly::Poly;
pub use rat::Rat;
pub use ratgf::{approx_error, pade, PadeFit, RationalGF};
pub use series::{catalog, parse, CatalogEntry, Series};
pub use streamkit::{
    compose_par, compose_seq, dense_streamer, rational_streamer, run, StreamRun, Streamer,
};

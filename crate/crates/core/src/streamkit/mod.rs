//! Online evaluation of `(T z)_t` for lower-triangular Toeplitz `T = T[a]`.
//!
//! A streamer keeps a buffer of rationals. At time `t` it receives `z_t`,
//! replaces its buffer with a function of the old buffer and `z_t`, and
//! reports `(T z)_t` as a function of the new buffer alone. The buffer length
//! at time `t` is the profile `beta(t)`.

mod compose;
mod dense;
mod rational;

pub use compose::{compose_par, compose_seq, Parallel, Sequential};
pub use dense::{dense_streamer, DenseStreamer};
pub use rational::{rational_streamer, RationalStreamer};

use crate::error::Result;
use crate::rat::Rat;

pub trait Streamer: Send {
    /// Consumes `z_t` and returns `(T z)_t`.
    fn step(&mut self, z: &Rat) -> Result<Rat>;

    /// Current buffer length `beta(t)`; zero before the first step.
    fn buffer(&self) -> usize;

    /// Number of inputs consumed so far.
    fn time(&self) -> usize;

    /// Snapshot of the buffer contents.
    fn state(&self) -> Vec<Rat>;
}

impl<S: Streamer + ?Sized> Streamer for Box<S> {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        (**self).step(z)
    }

    fn buffer(&self) -> usize {
        (**self).buffer()
    }

    fn time(&self) -> usize {
        (**self).time()
    }

    fn state(&self) -> Vec<Rat> {
        (**self).state()
    }
}

/// Record of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamRun {
    pub inputs: Vec<Rat>,
    pub outputs: Vec<Rat>,
    /// `beta(t)` after each step.
    pub buffer_profile: Vec<usize>,
    pub max_buffer: usize,
}

/// Feeds `z` in order and records every output and buffer length.
pub fn run<S: Streamer + ?Sized>(s: &mut S, z: &[Rat]) -> Result<StreamRun> {
    let mut outputs = Vec::with_capacity(z.len());
    let mut buffer_profile = Vec::with_capacity(z.len());
    for zt in z {
        outputs.push(s.step(zt)?);
        buffer_profile.push(s.buffer());
    }
    let max_buffer = buffer_profile.iter().copied().max().unwrap_or(0);
    Ok(StreamRun {
        inputs: z.to_vec(),
        outputs,
        buffer_profile,
        max_buffer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::{frac, int};
    use crate::ratgf::RationalGF;
    use crate::series::{catalog, CatalogEntry, Series};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn gf(p: &[i64], q: &[i64]) -> RationalGF {
        RationalGF::make(Poly::from_ints(p), Poly::from_ints(q)).unwrap()
    }

    #[test]
    fn run_examples() {
        let mut s = rational_streamer(&gf(&[1], &[1, -1]));
        let r = run(&mut s, &ints(&[1, 2, 3])).unwrap();
        assert_eq!(r.outputs, ints(&[1, 3, 6]));
        assert_eq!(r.max_buffer, 1);

        let mut d = dense_streamer(&catalog(&CatalogEntry::Half, 5).unwrap());
        let r = run(&mut d, &ints(&[1, 0, 0])).unwrap();
        assert_eq!(r.outputs, vec![int(1), frac(1, 2), frac(3, 8)]);
        assert_eq!(r.max_buffer, 3);

        let r = run(&mut dense_streamer(&Series::one(3)), &[]).unwrap();
        assert!(r.outputs.is_empty());
        assert_eq!(r.max_buffer, 0);
    }

    #[test]
    fn boxed_streamers_compose() {
        let l: Box<dyn Streamer> = Box::new(rational_streamer(&gf(&[1], &[1, -1])));
        let r: Box<dyn Streamer> = Box::new(rational_streamer(&gf(&[1], &[1, -1])));
        let mut m = compose_seq(l, r);
        let out = run(&mut m, &ints(&[1, 0, 0, 0])).unwrap();
        assert_eq!(out.outputs, ints(&[1, 2, 3, 4]));
        assert_eq!(out.max_buffer, 2);
    }
}

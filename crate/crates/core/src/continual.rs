//! Correlated-noise continual counting, `A(z) = T_1 z + L y`.
//!
//! `T_1` is the prefix-sum matrix and `L = T[g]` for a rational `g`, usually
//! a Padé approximant of `1/sqrt(1-x)`. Noise values are exact rationals, so
//! every output can be checked against a dense computation. No privacy
//! calibration happens here.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{frac, Rat};
use crate::ratgf::{approx_error, coeff_deviations, pade, RationalGF};
use crate::series::{catalog, CatalogEntry};
use crate::streamkit::{rational_streamer, RationalStreamer, Streamer};

/// Where `y_t` comes from. `y_t` is drawn when `z_t` arrives.
#[derive(Clone, Debug)]
pub enum NoiseSource {
    Zero,
    /// Uniform on `{k/16 : -16 <= k <= 16}`.
    Seeded(Box<ChaCha8Rng>),
    Recorded {
        values: Vec<Rat>,
        next: usize,
    },
}

impl NoiseSource {
    pub fn seeded(seed: u64) -> Self {
        NoiseSource::Seeded(Box::new(ChaCha8Rng::seed_from_u64(seed)))
    }

    pub fn recorded(values: Vec<Rat>) -> Self {
        NoiseSource::Recorded { values, next: 0 }
    }

    pub fn draw(&mut self) -> Result<Rat> {
        match self {
            NoiseSource::Zero => Ok(Rat::zero()),
            NoiseSource::Seeded(rng) => Ok(frac(rng.random_range(-16..=16), 16)),
            NoiseSource::Recorded { values, next } => {
                let v = values
                    .get(*next)
                    .cloned()
                    .ok_or(Error::NoiseExhausted(*next))?;
                *next += 1;
                Ok(v)
            }
        }
    }
}

/// The two streamers and the noise source of `T_1 z + L y`.
#[derive(Clone, Debug)]
pub struct Mechanism<L = RationalStreamer> {
    counter: RationalStreamer,
    noise_shaper: L,
    noise: NoiseSource,
    realized: Vec<Rat>,
}

impl<L: Streamer> Mechanism<L> {
    pub fn new(noise_shaper: L, noise: NoiseSource) -> Self {
        let prefix_sums = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -1]))
            .expect("1/(1-x) is a valid rational function");
        Mechanism {
            counter: rational_streamer(&prefix_sums),
            noise_shaper,
            noise,
            realized: Vec::new(),
        }
    }

    /// Draws `y_t`, advances both streamers and returns
    /// `(T_1 z)_t + (L y)_t`.
    pub fn mechanism_step(&mut self, z: &Rat) -> Result<Rat> {
        let y = self.noise.draw()?;
        let count = self.counter.step(z)?;
        let shaped = self.noise_shaper.step(&y)?;
        self.realized.push(y);
        Ok(count + shaped)
    }

    /// The noise sequence drawn so far.
    pub fn realized_noise(&self) -> &[Rat] {
        &self.realized
    }
}

impl<L: Streamer> Streamer for Mechanism<L> {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        self.mechanism_step(z)
    }

    fn buffer(&self) -> usize {
        self.counter.buffer() + self.noise_shaper.buffer()
    }

    fn time(&self) -> usize {
        self.counter.time()
    }

    fn state(&self) -> Vec<Rat> {
        let mut s = self.counter.state();
        s.extend(self.noise_shaper.state());
        s
    }
}

#[derive(Clone, Debug)]
pub struct MechanismReport {
    pub outputs: Vec<Rat>,
    pub noise: Vec<Rat>,
    pub max_buffer: usize,
    pub approximant: RationalGF,
    pub achieved_degree: usize,
    /// `|a_k - g_k|` for `k < length`, against the coefficients of
    /// `1/sqrt(1-x)`: the entries of `L` a run of this length touches.
    pub coeff_deviations: Vec<Rat>,
    /// Maximum of `coeff_deviations`.
    pub coeff_error: Rat,
}

/// Runs the mechanism with `L = T[pade(1/sqrt(1-x), approx_degree)]` and
/// noise seeded by `seed`.
pub fn mechanism_run(
    length: usize,
    approx_degree: usize,
    seed: u64,
    z: &[Rat],
) -> Result<MechanismReport> {
    mechanism_run_with(length, approx_degree, NoiseSource::seeded(seed), z)
}

pub fn mechanism_run_with(
    length: usize,
    approx_degree: usize,
    noise: NoiseSource,
    z: &[Rat],
) -> Result<MechanismReport> {
    if approx_degree == 0 {
        return Err(Error::Domain(
            "approximation degree must be at least 1".into(),
        ));
    }
    if z.len() != length {
        return Err(Error::LengthMismatch {
            want: length,
            got: z.len(),
        });
    }
    let order = (2 * approx_degree - 1).max(length.saturating_sub(1));
    let half = catalog(&CatalogEntry::Half, order)?;
    let fit = pade(&half, approx_degree)?;
    let mut mech = Mechanism::new(rational_streamer(&fit.approximant), noise);
    let mut outputs = Vec::with_capacity(length);
    let mut max_buffer = 0;
    for zt in z {
        outputs.push(mech.mechanism_step(zt)?);
        max_buffer = max_buffer.max(mech.buffer());
    }
    let last = length.saturating_sub(1);
    Ok(MechanismReport {
        outputs,
        noise: mech.realized_noise().to_vec(),
        max_buffer,
        coeff_deviations: coeff_deviations(&half, &fit.approximant, last)?,
        coeff_error: approx_error(&half, &fit.approximant, last)?,
        achieved_degree: fit.achieved_degree,
        approximant: fit.approximant,
    })
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Streamer;
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::Series;

/// Reference streamer: keeps every input, `beta(t) = t + 1`, and outputs
/// `sum_{j<=t} a_{t-j} z_j`.
///
/// Coefficients and inputs are held over common denominators so each step
/// is an integer dot product followed by one reduction.
#[derive(Clone, Debug)]
pub struct DenseStreamer {
    coeffs: Vec<BigInt>,
    coeff_den: BigInt,
    inputs: Vec<Rat>,
    scaled_inputs: Vec<BigInt>,
    input_den: BigInt,
}

pub fn dense_streamer(a: &Series) -> DenseStreamer {
    let coeff_den = a
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    DenseStreamer {
        coeffs: a
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&coeff_den / c.denom()))
            .collect(),
        coeff_den,
        inputs: Vec::new(),
        scaled_inputs: Vec::new(),
        input_den: BigInt::one(),
    }
}

impl Streamer for DenseStreamer {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        let t = self.inputs.len();
        if t >= self.coeffs.len() {
            return Err(Error::InsufficientOrder {
                need: t,
                have: self.coeffs.len() - 1,
            });
        }
        if !self.input_den.is_multiple_of(z.denom()) {
            let den = self.input_den.lcm(z.denom());
            let factor = &den / &self.input_den;
            for v in &mut self.scaled_inputs {
                *v *= &factor;
            }
            self.input_den = den;
        }
        self.scaled_inputs
            .push(z.numer() * (&self.input_den / z.denom()));
        self.inputs.push(z.clone());
        let mut acc = BigInt::zero();
        for (j, zj) in self.scaled_inputs.iter().enumerate() {
            let a = &self.coeffs[t - j];
            if !a.is_zero() && !zj.is_zero() {
                acc += a * zj;
            }
        }
        Ok(Rat::new(acc, &self.coeff_den * &self.input_den))
    }

    fn buffer(&self) -> usize {
        self.inputs.len()
    }

    fn time(&self) -> usize {
        self.inputs.len()
    }

    fn state(&self) -> Vec<Rat> {
        self.inputs.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};
    use crate::series::{catalog, CatalogEntry};
    use crate::streamkit::run;

    #[test]
    fn prefix_sums() {
        let mut s = dense_streamer(&catalog(&CatalogEntry::One, 5).unwrap());
        let r = run(&mut s, &[int(1), int(2), int(3)]).unwrap();
        assert_eq!(r.outputs, vec![int(1), int(3), int(6)]);
        assert_eq!(r.buffer_profile, vec![1, 2, 3]);
    }

    #[test]
    fn zero_input_gives_zero() {
        let mut s = dense_streamer(&catalog(&CatalogEntry::Catalan, 5).unwrap());
        let r = run(&mut s, &vec![Rat::zero(); 6]).unwrap();
        assert!(r.outputs.iter().all(Zero::is_zero));
    }

    #[test]
    fn mixed_denominators() {
        let a = Series::new(vec![frac(1, 2), frac(-2, 3), int(5)]);
        let z = [frac(3, 4), int(2), frac(-1, 6)];
        let r = run(&mut dense_streamer(&a), &z).unwrap();
        let want = [
            frac(3, 8),
            frac(1, 2) * int(2) + frac(-2, 3) * frac(3, 4),
            frac(1, 2) * frac(-1, 6) + frac(-2, 3) * int(2) + int(5) * frac(3, 4),
        ];
        assert_eq!(r.outputs, want);
        assert_eq!(r.buffer_profile, vec![1, 2, 3]);
    }

    #[test]
    fn run_past_order_fails() {
        let mut s = dense_streamer(&Series::from_ints(&[1, 1]));
        assert!(s.step(&int(1)).is_ok());
        assert!(s.step(&int(1)).is_ok());
        assert_eq!(
            s.step(&int(1)),
            Err(Error::InsufficientOrder { need: 2, have: 1 })
        );
    }
}

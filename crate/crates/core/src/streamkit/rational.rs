use num_traits::Zero;

use super::Streamer;
use crate::error::Result;
use crate::rat::Rat;
use crate::ratgf::RationalGF;

/// Constant-buffer streamer for `P/Q` of degree `d`, with
/// `beta(t) = min(t + 1, d)`.
///
/// For `t < d` the buffer is the raw prefix `z_0..z_t`. From `t = d` on it is
/// `(y_t, r_1, .., r_{d-1})`, the output followed by the delay registers of a
/// transposed direct-form realization of `P/Q`. The register `r_d` is not
/// stored: `deg P <= d - 1` makes it equal to `-q_d y_t`.
#[derive(Clone, Debug)]
pub struct RationalStreamer {
    degree: usize,
    // p_0..p_d and q_0..q_d, zero padded
    p: Vec<Rat>,
    q: Vec<Rat>,
    // a_0..a_{d-1}, for the prefix phase
    head: Vec<Rat>,
    state: Vec<Rat>,
    t: usize,
}

pub fn rational_streamer(g: &RationalGF) -> RationalStreamer {
    // the zero function is a scaler by 0 with a single slot
    let degree = g.degree().max(1);
    let pad = |c: &[Rat]| -> Vec<Rat> {
        (0..=degree)
            .map(|k| c.get(k).cloned().unwrap_or_else(Rat::zero))
            .collect()
    };
    RationalStreamer {
        degree,
        p: pad(g.numerator().coeffs()),
        q: pad(g.denominator().coeffs()),
        head: g.expand(degree - 1).into_coeffs(),
        state: Vec::new(),
        t: 0,
    }
}

impl RationalStreamer {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// One tick of the register chain; `regs` holds `r_1..r_d`.
    fn advance(&self, regs: &mut [Rat], z: &Rat) -> Rat {
        let d = self.degree;
        let y = &self.p[0] * z + &regs[0];
        for i in 1..=d {
            let next = if i < d { regs[i].clone() } else { Rat::zero() };
            regs[i - 1] = &self.p[i] * z - &self.q[i] * &y + next;
        }
        y
    }
}

impl Streamer for RationalStreamer {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        let d = self.degree;
        let t = self.t;
        self.t += 1;
        if t < d {
            self.state.push(z.clone());
            let mut y = Rat::zero();
            for (j, zj) in self.state.iter().enumerate() {
                y += &self.head[t - j] * zj;
            }
            return Ok(y);
        }
        let mut regs = vec![Rat::zero(); d];
        let y = if t == d {
            // switch from the raw prefix to registers by replaying it
            let prefix = std::mem::take(&mut self.state);
            for zj in &prefix {
                self.advance(&mut regs, zj);
            }
            self.advance(&mut regs, z)
        } else {
            regs[..d - 1].clone_from_slice(&self.state[1..]);
            regs[d - 1] = -(&self.q[d] * &self.state[0]);
            self.advance(&mut regs, z)
        };
        self.state.clear();
        self.state.push(y.clone());
        self.state.extend_from_slice(&regs[..d - 1]);
        Ok(y)
    }

    fn buffer(&self) -> usize {
        self.state.len()
    }

    fn time(&self) -> usize {
        self.t
    }

    fn state(&self) -> Vec<Rat> {
        self.state.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::{frac, int};
    use crate::streamkit::{dense_streamer, run};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn prefix_sums_with_one_slot() {
        let g = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -1])).unwrap();
        let r = run(&mut rational_streamer(&g), &ints(&[4, -1, 2, 7, 0])).unwrap();
        assert_eq!(r.outputs, ints(&[4, 3, 5, 12, 12]));
        assert_eq!(r.buffer_profile, vec![1; 5]);
    }

    #[test]
    fn exponential_impulse() {
        let g = RationalGF::make(Poly::one(), Poly::from_ints(&[1, -2])).unwrap();
        let r = run(&mut rational_streamer(&g), &ints(&[1, 0, 0, 0, 0])).unwrap();
        assert_eq!(r.outputs, ints(&[1, 2, 4, 8, 16]));
        assert_eq!(r.max_buffer, 1);
    }

    #[test]
    fn degree_two_matches_dense() {
        let q = &Poly::from_ints(&[1, -1]) * &Poly::new(vec![int(1), frac(-1, 2)]);
        let g = RationalGF::make(Poly::one(), q).unwrap();
        let z = ints(&[1, 0, 0]);
        let fast = run(&mut rational_streamer(&g), &z).unwrap();
        let slow = run(&mut dense_streamer(&g.expand(2)), &z).unwrap();
        assert_eq!(fast.outputs, vec![int(1), frac(3, 2), frac(7, 4)]);
        assert_eq!(fast.outputs, slow.outputs);
        assert_eq!(fast.buffer_profile, vec![1, 2, 2]);
    }

    #[test]
    fn numerator_and_fir_cases() {
        let z = ints(&[3, -1, 4, 1, -5, 9, 2, -6]);
        for (p, q) in [
            (vec![2, -1, 3], vec![1, 0, -1, 2]),
            (vec![1, 2, 3], vec![1]),
            (vec![0, 1], vec![1, 1, 1]),
            (vec![5], vec![1]),
        ] {
            let g = RationalGF::from_fraction(Poly::from_ints(&p), Poly::from_ints(&q)).unwrap();
            let d = g.degree();
            let fast = run(&mut rational_streamer(&g), &z).unwrap();
            let slow = run(&mut dense_streamer(&g.expand(z.len())), &z).unwrap();
            assert_eq!(fast.outputs, slow.outputs, "p={p:?} q={q:?}");
            let want: Vec<usize> = (0..z.len()).map(|t| (t + 1).min(d)).collect();
            assert_eq!(fast.buffer_profile, want);
        }
    }

    #[test]
    fn zero_function_uses_one_slot() {
        let r = run(&mut rational_streamer(&RationalGF::zero()), &ints(&[1, 2])).unwrap();
        assert_eq!(r.outputs, ints(&[0, 0]));
        assert_eq!(r.max_buffer, 1);
    }

    #[test]
    fn state_layout_leads_with_output() {
        let g = RationalGF::make(Poly::from_ints(&[1, 1]), Poly::from_ints(&[1, -1, -1])).unwrap();
        let mut s = rational_streamer(&g);
        let z = ints(&[1, 2, 3, 4]);
        for zt in &z {
            let y = s.step(zt).unwrap();
            if s.time() > s.degree() {
                assert_eq!(s.state()[0], y);
            }
        }
    }
}

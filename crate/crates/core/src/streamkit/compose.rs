use super::Streamer;
use crate::error::Result;
use crate::rat::Rat;

/// Streamer for `M = L R`: the right streamer sees `z`, the left one sees
/// `R z`. The buffer is the two buffers side by side.
#[derive(Clone, Debug)]
pub struct Sequential<L, R> {
    left: L,
    right: R,
}

pub fn compose_seq<L: Streamer, R: Streamer>(left: L, right: R) -> Sequential<L, R> {
    Sequential { left, right }
}

impl<L: Streamer, R: Streamer> Streamer for Sequential<L, R> {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        let inner = self.right.step(z)?;
        self.left.step(&inner)
    }

    fn buffer(&self) -> usize {
        self.left.buffer() + self.right.buffer()
    }

    fn time(&self) -> usize {
        self.right.time()
    }

    fn state(&self) -> Vec<Rat> {
        let mut s = self.left.state();
        s.extend(self.right.state());
        s
    }
}

/// Streamer for `M = A + B`, both fed the same input.
#[derive(Clone, Debug)]
pub struct Parallel<A, B> {
    a: A,
    b: B,
}

pub fn compose_par<A: Streamer, B: Streamer>(a: A, b: B) -> Parallel<A, B> {
    Parallel { a, b }
}

impl<A: Streamer, B: Streamer> Streamer for Parallel<A, B> {
    fn step(&mut self, z: &Rat) -> Result<Rat> {
        Ok(self.a.step(z)? + self.b.step(z)?)
    }

    fn buffer(&self) -> usize {
        self.a.buffer() + self.b.buffer()
    }

    fn time(&self) -> usize {
        self.a.time()
    }

    fn state(&self) -> Vec<Rat> {
        let mut s = self.a.state();
        s.extend(self.b.state());
        s
    }
}

//! Seeded sampling of small rationals for randomized verification.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{QMatrix, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/b` with `|a| ≤ 10` and `1 ≤ b ≤ 10`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-10..=10), rng.gen_range(1..=10))
}

pub fn nonzero_small_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = small_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn small_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    let mut m = QMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, small_rational(rng));
        }
    }
    m
}

//! Deterministic sampling.
//!
//! Every random choice in the crate flows from a single `u64` seed. Distinct
//! consumers draw from distinct ChaCha streams of the same key, so adding a
//! consumer never perturbs another one's samples.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniformly random word of exactly `len` letters in `B_k` (`k >= 2`).
pub fn random_word<R: Rng>(rng: &mut R, k: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..k as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_raw(k, letters)
}

/// A random pure braid: a product of `factors` random band generators or
/// their inverses.
pub fn random_pure<R: Rng>(rng: &mut R, k: usize, factors: usize) -> BraidWord {
    let mut letters = Vec::new();
    for _ in 0..factors {
        let i = rng.gen_range(1..k);
        let j = rng.gen_range(i + 1..=k);
        let g = crate::braid::pure_generator(i, j, k).expect("indices in range");
        let g = if rng.gen_bool(0.5) { g } else { g.invert() };
        letters.extend_from_slice(g.letters());
    }
    BraidWord::from_raw(k, letters).free_reduce()
}

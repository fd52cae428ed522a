//! Named, seedable random substreams.
//!
//! Every generated artifact draws from a stream keyed by (master seed,
//! stream name, index), so independent cells of an experiment can run in
//! any order or in parallel without perturbing each other's randomness.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derives a child seed from a master seed, a stream name, and an index.
pub fn substream_seed(seed: u64, name: &str, index: u64) -> u64 {
    // FNV-1a over the name, then a splitmix-style finalizer over the mix.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut x = seed
        ^ h.rotate_left(17)
        ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

/// A generator positioned at the start of the named substream.
pub fn substream(seed: u64, name: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(substream_seed(seed, name, index))
}

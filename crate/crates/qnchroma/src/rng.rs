//! Deterministic randomness.
//!
//! Every randomised operation in the crate takes a single `u64` seed and
//! derives per-task streams through [`split_seed`], so results are
//! reproducible bit-for-bit regardless of thread count or scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// SplitMix64 finaliser. Decorrelates nearby inputs.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The documented split function: `(seed, task) -> stream seed`.
pub fn split_seed(seed: u64, task: u64) -> u64 {
    mix(seed ^ mix(task))
}

/// A ChaCha stream for one task under the given master seed.
///
/// Task 0 is the conventional stream for single-stream operations.
pub fn task_rng(seed: u64, task: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(split_seed(seed, task))
}

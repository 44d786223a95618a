//! Seed bookkeeping for reproducible sweeps.
//!
//! Every trial's randomness is derived, not drawn from a shared stream:
//! `trial_seed` hashes (master seed, preset name, node count, trial index)
//! so any single record can be replayed without re-running the records
//! before it, and so inserting a node count or changing the trial budget
//! leaves other trials' randomness untouched. Labeling and channel-gain
//! streams are derived from the trial seed with distinct tags, which keeps
//! algorithm comparisons paired on identical randomness.
//!
//! The mixing is FNV-1a over the little-endian encodings followed by a
//! splitmix64 finalizer; FNV alone is too linear for seeds that differ in
//! one low bit.

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn absorb(hash: &mut u64, bytes: &[u8]) {
    for &b in bytes {
        *hash ^= u64::from(b);
        *hash = hash.wrapping_mul(FNV_PRIME);
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for one (preset, node count, trial index) cell of a sweep.
pub fn trial_seed(master_seed: u64, preset_name: &str, n: usize, trial: usize) -> u64 {
    let mut h = FNV_OFFSET;
    absorb(&mut h, &master_seed.to_le_bytes());
    absorb(&mut h, preset_name.as_bytes());
    absorb(&mut h, &(n as u64).to_le_bytes());
    absorb(&mut h, &(trial as u64).to_le_bytes());
    splitmix64(h)
}

/// A named sub-stream of an existing seed ("label", "fade", ...).
pub fn derive_seed(seed: u64, tag: &str) -> u64 {
    let mut h = FNV_OFFSET;
    absorb(&mut h, &seed.to_le_bytes());
    absorb(&mut h, tag.as_bytes());
    splitmix64(h)
}

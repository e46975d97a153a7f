//! Shared inputs for the kernel benchmarks.

use boolfun::TruthTable;

/// Deterministic pseudo-random table (splitmix64 bit stream).
pub fn random_table(n: usize, seed: u64) -> TruthTable {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let words = (1usize << n).div_ceil(64);
    let raw: Vec<u64> = (0..words).map(|_| next()).collect();
    TruthTable::from_fn(n, |p| raw[p as usize / 64] >> (p as usize % 64) & 1 == 1).unwrap()
}

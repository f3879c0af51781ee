//! Fixtures shared by the benchmarks.

use hq_core::{examples, GenWord, PreDGraph};

pub fn bundled(name: &str) -> PreDGraph {
    examples::load(name).expect("bundled example").graph
}

/// `r1 r2 r3 r1 r2 r3 ...` of length `n` in a rank-three system.
pub fn cyclic_word(n: usize) -> GenWord {
    GenWord((0..n).map(|k| k % 3).collect())
}

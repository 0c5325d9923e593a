//! Instance generators: the star family behind the price-of-fairness
//! analysis, and seeded random instances for test corpora.

use crate::error::{Error, Result};
use crate::instance::{EdgeItem, GraphicalInstance};

/// Star with `d` leaves: agent 0 is the center and values every incident
/// edge at `d`; each leaf values its own edge at 1. The family whose
/// utilitarian price of EFX grows without bound.
pub fn gen_star(d: u64) -> Result<GraphicalInstance> {
    if d < 1 {
        return Err(Error::InvalidInput(
            "a star needs at least one leaf (d >= 1)".into(),
        ));
    }
    let leaves = usize::try_from(d)
        .map_err(|_| Error::InvalidInput(format!("star size {d} does not fit in memory")))?;
    let edges = (1..=leaves)
        .map(|leaf| EdgeItem::new(0, leaf, d, 1))
        .collect();
    GraphicalInstance::new(leaves + 1, edges)
}

/// Erdős–Rényi instance, fully determined by `seed`.
///
/// The random stream is SplitMix64 (public-domain finalizer by Steele,
/// Lea & Flood) over the seed, consumed in a fixed documented order so
/// that generated corpora stay byte-identical across releases:
///
/// 1. Candidate pairs `(a, b)` with `a < b` are visited in lexicographic
///    order. Each takes one draw `x`; the edge is included iff
///    `(x >> 11) as f64 / 2^53 < edge_probability`.
/// 2. An included edge then takes one uniform draw for the value at `a`
///    and one for the value at `b`, each an index into the sorted distinct
///    values of `value_set` (rejection sampling, so indices are exactly
///    uniform; rejections consume additional draws).
pub fn gen_random(
    n_agents: usize,
    edge_probability: f64,
    value_set: &[u64],
    seed: u64,
) -> Result<GraphicalInstance> {
    if n_agents < 1 {
        return Err(Error::InvalidInput(
            "a random instance needs at least one agent".into(),
        ));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidInput(format!(
            "edge probability must lie in [0, 1], got {edge_probability}"
        )));
    }
    if value_set.is_empty() {
        return Err(Error::InvalidInput(
            "the endpoint value set must not be empty".into(),
        ));
    }
    let mut values: Vec<u64> = value_set.to_vec();
    values.sort_unstable();
    values.dedup();

    let mut state = seed;
    let mut edges = Vec::new();
    for a in 0..n_agents {
        for b in (a + 1)..n_agents {
            let x = split_mix_next(&mut state);
            let unit = (x >> 11) as f64 / (1u64 << 53) as f64;
            if unit < edge_probability {
                let value_a = values[uniform_index(&mut state, values.len())];
                let value_b = values[uniform_index(&mut state, values.len())];
                edges.push(EdgeItem::new(a, b, value_a, value_b));
            }
        }
    }
    GraphicalInstance::new(n_agents, edges)
}

fn split_mix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform index into `0..n` with no modulo bias: draws are rejected while
/// they fall in the tail segment shorter than `n`.
fn uniform_index(state: &mut u64, n: usize) -> usize {
    let n = n as u64;
    // 2^64 mod n, computed without overflowing u64.
    let tail = ((u64::MAX % n) + 1) % n;
    loop {
        let x = split_mix_next(state);
        if tail == 0 || x <= u64::MAX - tail {
            return (x % n) as usize;
        }
    }
}

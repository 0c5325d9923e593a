//! Helpers shared by the integration suites: deterministic corpora and an
//! allocation-space enumerator independent of the library's own scanners.
//!
//! Each suite uses its own slice of these helpers, so silence per-target
//! dead-code analysis.
#![allow(dead_code)]

use fairgraph::generate;
use fairgraph::instance::{EdgeItem, GraphicalInstance};

/// SplitMix64, the same documented stream the generator uses; the suites
/// draw corpus shapes from it so every run sees identical inputs.
pub fn split_mix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Every owner vector of `n_items` items over `n_agents` agents, in
/// lexicographic order — a test-local odometer, deliberately not sharing
/// code with the oracle it cross-checks.
pub struct AllAllocations {
    owners: Vec<usize>,
    n_agents: usize,
    started: bool,
    done: bool,
}

impl AllAllocations {
    pub fn new(n_agents: usize, n_items: usize) -> Self {
        assert!(n_agents >= 1);
        AllAllocations {
            owners: vec![0; n_items],
            n_agents,
            started: false,
            done: false,
        }
    }
}

impl Iterator for AllAllocations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.owners.clone());
        }
        for digit in (0..self.owners.len()).rev() {
            if self.owners[digit] + 1 < self.n_agents {
                self.owners[digit] += 1;
                for lower in &mut self.owners[digit + 1..] {
                    *lower = 0;
                }
                return Some(self.owners.clone());
            }
        }
        self.done = true;
        None
    }
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adjacent = vec![Vec::new(); n];
    for &(a, b) in edges {
        adjacent[a].push(b);
        adjacent[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adjacent[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// Calls `f` on every connected labeled graph with ≤ `max_vertices`
/// vertices and ≤ `max_edges` edges, under every {0,1} × {0,1} endpoint
/// labeling. The single-vertex edgeless graph counts as connected.
pub fn for_each_connected_binary_instance<F: FnMut(&GraphicalInstance)>(
    max_vertices: usize,
    max_edges: usize,
    mut f: F,
) {
    for n in 1..=max_vertices {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                pairs.push((a, b));
            }
        }
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let m = chosen.len();
            if m > max_edges || !is_connected(n, &chosen) {
                continue;
            }
            for labeling in 0u32..(1 << (2 * m)) {
                let edges = chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| {
                        let value_a = (labeling >> (2 * i) & 1) as u64;
                        let value_b = (labeling >> (2 * i + 1) & 1) as u64;
                        EdgeItem::new(a, b, value_a, value_b)
                    })
                    .collect();
                let inst = GraphicalInstance::new(n, edges).unwrap();
                f(&inst);
            }
        }
    }
}

/// Deterministic random corpus: `count` instances with 2..=`max_agents`
/// agents, endpoint values from `values`, and at most `max_items` items
/// (shapes that would overflow it are redrawn).
pub fn random_corpus(
    count: usize,
    max_agents: usize,
    values: &[u64],
    edge_probability: f64,
    stream: u64,
    max_items: usize,
) -> Vec<GraphicalInstance> {
    let mut state = stream;
    let mut corpus = Vec::with_capacity(count);
    while corpus.len() < count {
        let n = 2 + (split_mix(&mut state) % (max_agents as u64 - 1)) as usize;
        let seed = split_mix(&mut state);
        let inst = generate::gen_random(n, edge_probability, values, seed).unwrap();
        if inst.n_items() <= max_items {
            corpus.push(inst);
        }
    }
    corpus
}

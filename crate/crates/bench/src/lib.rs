//! Benchmark-only crate; see `benches/networks.rs`.

use cognet_core::{LexicalNetwork, NetworkKind};
use rand::Rng;

/// Seeded Erdos-Renyi style graph with uniform random weights, the shared
/// workload for the benchmarks.
pub fn seeded_graph(n: usize, p: f64, seed: u64) -> LexicalNetwork {
    let mut rng = cognet_core::rng::stream_rng(seed, 0);
    let mut net = LexicalNetwork::new(NetworkKind::Co);
    for i in 0..n {
        net.ensure_node(&format!("w{i}"));
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(p) {
                net.add_weight(a, b, rng.gen_range(1..=9), None);
            }
        }
    }
    net
}

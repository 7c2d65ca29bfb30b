//! Entropy-based degeneracy: how far the weight structure is from an
//! evenly spread (complete-graph-like) pattern toward a single dominant
//! hub (star-like).

use crate::graph::LexicalNetwork;

/// Degeneracy of the network's weight structure.
///
/// Rows of the adjacency matrix are normalized to transition
/// distributions, averaged into one distribution, and scored by Shannon
/// entropy H (bits). The result is rescaled so a complete graph with equal
/// weights gives 0 and an unweighted star gives 1:
///
///   (log2 N - H) / (log2 N - S)
///
/// where S is the star's own mean-distribution entropy,
/// -((N-1)/N) log2((N-1)/N) + (1/N) log2(N(N-1)). Strongly uneven weights
/// can concentrate the mean distribution beyond the unweighted star, so
/// values above 1 are possible.
///
/// Isolated nodes have no transition row and are left out; N counts only
/// nodes with at least one edge. Returns None when fewer than 3 nodes
/// remain, where the scale degenerates.
pub fn degeneracy(net: &LexicalNetwork) -> Option<f64> {
    let connected: Vec<usize> = net.node_ids().filter(|&v| net.degree(v) > 0).collect();
    let n = connected.len();
    if n < 3 {
        return None;
    }
    let mut position = vec![usize::MAX; net.node_count()];
    for (i, &v) in connected.iter().enumerate() {
        position[v] = i;
    }

    // Column means of the row-normalized weight matrix.
    let mut mean = vec![0.0f64; n];
    for &v in &connected {
        let strength = net.strength(v) as f64;
        for (w, edge) in net.neighbors(v) {
            mean[position[w]] += edge.weight as f64 / strength / n as f64;
        }
    }

    let h: f64 = mean
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum();
    let log_n = (n as f64).log2();
    let nf = n as f64;
    let star_entropy =
        -((nf - 1.0) / nf) * ((nf - 1.0) / nf).log2() + (1.0 / nf) * (nf * (nf - 1.0)).log2();
    Some((log_n - h) / (log_n - star_entropy))
}

//! Null models: degree-preserving rewiring, valence shuffling, and a soft
//! weighted configuration model.
//!
//! Every sampler takes explicit randomness; ensemble functions derive one
//! independent random stream per realization from a base seed, so results
//! do not depend on thread count or scheduling.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NetworkKind, NodeId};
use crate::ingest::Valence;
use crate::rng::stream_rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NullKind {
    /// Random graphs with the exact degree sequence of the original,
    /// rewired within each connected component.
    DegreeRewire,
    /// The original graph with valence labels permuted over the nodes.
    ValenceShuffle,
    /// Maximum-entropy weighted graphs matching strengths in expectation.
    SoftConfiguration,
}

/// How to build a null ensemble: which model, how many realizations, the
/// base seed, and the swap budget for rewiring (attempts per edge).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NullEnsembleSpec {
    pub kind: NullKind,
    pub n_samples: usize,
    pub seed: u64,
    pub rewire_multiplier: usize,
}

impl NullEnsembleSpec {
    /// Generate the ensemble for a graph-valued null model. Valence
    /// shuffling permutes labels rather than producing graphs, so it is
    /// rejected here.
    pub fn generate(&self, net: &LexicalNetwork) -> Result<Vec<LexicalNetwork>> {
        if self.n_samples == 0 {
            return Err(Error::InvalidInput("n_samples must be positive".to_string()));
        }
        match self.kind {
            NullKind::DegreeRewire => {
                degree_rewire(net, self.n_samples, self.seed, self.rewire_multiplier)
            }
            NullKind::SoftConfiguration => {
                let fit = fit_soft_weighted_cm(net, &SoftCmOptions::default())?;
                Ok(soft_cm_samples(&fit, self.n_samples, self.seed))
            }
            NullKind::ValenceShuffle => Err(Error::InvalidInput(
                "valence shuffling produces label permutations, not graphs".to_string(),
            )),
        }
    }
}

fn bfs_reaches(adj: &[BTreeSet<NodeId>], from: NodeId, to: NodeId) -> bool {
    if from == to {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    seen[from] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if w == to {
                return true;
            }
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// The endpoints of a removed edge stay connected if they share a surviving
/// neighbor; otherwise fall back to an early-exit search.
fn still_connected(adj: &[BTreeSet<NodeId>], a: NodeId, b: NodeId) -> bool {
    adj[a].intersection(&adj[b]).next().is_some() || bfs_reaches(adj, a, b)
}

/// One degree-preserving rewiring of the network. Pairs of edges are
/// swapped (a-b, c-d becomes a-d, c-b) within each connected component,
/// with `multiplier` attempts per component edge. Swaps that would create
/// a self-loop or parallel edge, or split the component, are discarded.
/// Each edge keeps its weight through the swaps, so the weight multiset is
/// preserved along with every node's degree.
pub fn degree_rewire_sample<R: Rng>(
    net: &LexicalNetwork,
    multiplier: usize,
    rng: &mut R,
) -> Result<LexicalNetwork> {
    if multiplier == 0 {
        return Err(Error::InvalidInput(
            "rewire multiplier must be positive".to_string(),
        ));
    }
    let n = net.node_count();
    let mut edges: Vec<(NodeId, NodeId, u64)> =
        net.edges().iter().map(|e| (e.a, e.b, e.weight)).collect();
    let mut adj: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
    for &(a, b, _) in &edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    let comps = net.components();
    let mut comp_of = vec![usize::MAX; n];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    let mut comp_edges: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for (idx, &(a, _, _)) in edges.iter().enumerate() {
        comp_edges[comp_of[a]].push(idx);
    }

    for edge_ids in &comp_edges {
        if edge_ids.len() < 2 {
            continue;
        }
        for _ in 0..multiplier * edge_ids.len() {
            let i = edge_ids[rng.gen_range(0..edge_ids.len())];
            let j = edge_ids[rng.gen_range(0..edge_ids.len())];
            if i == j {
                continue;
            }
            let (u, v, w1) = edges[i];
            let (mut x, mut y, w2) = edges[j];
            if rng.gen_bool(0.5) {
                std::mem::swap(&mut x, &mut y);
            }
            // Proposed replacement edges: (u, x) and (v, y).
            if u == x || v == y || adj[u].contains(&x) || adj[v].contains(&y) {
                continue;
            }
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[x].remove(&y);
            adj[y].remove(&x);
            adj[u].insert(x);
            adj[x].insert(u);
            adj[v].insert(y);
            adj[y].insert(v);
            if still_connected(&adj, u, v) && still_connected(&adj, x, y) {
                edges[i] = (u, x, w1);
                edges[j] = (v, y, w2);
            } else {
                adj[u].remove(&x);
                adj[x].remove(&u);
                adj[v].remove(&y);
                adj[y].remove(&v);
                adj[u].insert(v);
                adj[v].insert(u);
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }

    let mut out = LexicalNetwork::new(net.kind());
    for lemma in net.lemmas() {
        out.ensure_node(lemma);
    }
    let mut sorted: Vec<(NodeId, NodeId, u64)> = edges
        .into_iter()
        .map(|(a, b, w)| if a < b { (a, b, w) } else { (b, a, w) })
        .collect();
    sorted.sort_unstable();
    for (a, b, w) in sorted {
        out.add_weight(a, b, w, None);
    }
    Ok(out)
}

/// `n_samples` independent rewirings; realization i uses random stream i.
pub fn degree_rewire(
    net: &LexicalNetwork,
    n_samples: usize,
    seed: u64,
    multiplier: usize,
) -> Result<Vec<LexicalNetwork>> {
    (0..n_samples)
        .into_par_iter()
        .map(|i| degree_rewire_sample(net, multiplier, &mut stream_rng(seed, i as u64)))
        .collect()
}

/// A permutation of the valence labels, preserving their multiset.
pub fn shuffled_valences<R: Rng>(valences: &[Valence], rng: &mut R) -> Vec<Valence> {
    let mut out = valences.to_vec();
    out.shuffle(rng);
    out
}

/// `n_samples` independent label permutations; realization i uses random
/// stream i.
pub fn valence_shuffles(valences: &[Valence], n_samples: usize, seed: u64) -> Vec<Vec<Valence>> {
    (0..n_samples)
        .into_par_iter()
        .map(|i| shuffled_valences(valences, &mut stream_rng(seed, i as u64)))
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct SoftCmOptions {
    /// Largest tolerated absolute strength mismatch.
    pub tolerance: f64,
    /// Maximum number of full relaxation sweeps.
    pub max_iterations: usize,
}

impl Default for SoftCmOptions {
    fn default() -> Self {
        SoftCmOptions {
            tolerance: 1e-8,
            max_iterations: 10_000,
        }
    }
}

/// Solved node weights for the soft configuration model. Edge weights are
/// geometric with parameter `x[i] * x[j]`, so expected weights are
/// `x[i]x[j] / (1 - x[i]x[j])` and strengths match their targets in
/// expectation.
#[derive(Debug, Clone, Serialize)]
pub struct FittedSoftCm {
    pub kind: NetworkKind,
    pub lemmas: Vec<String>,
    pub x: Vec<f64>,
    pub target_strengths: Vec<f64>,
    pub expected_strengths: Vec<f64>,
    /// Largest absolute strength mismatch at the final iterate.
    pub residual: f64,
    pub iterations: usize,
}

/// D_i = sum over j != i of x_j / (1 - x_i x_j). The expected strength of
/// node i is then x_i * D_i.
fn pair_denominators(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = x[i];
            let mut acc = 0.0;
            for (j, &xj) in x.iter().enumerate() {
                if j != i && xj > 0.0 {
                    acc += xj / (1.0 - xi * xj);
                }
            }
            acc
        })
        .collect()
}

/// The two largest entries must multiply to under 1 for every geometric
/// parameter to be valid.
fn is_feasible(x: &[f64]) -> bool {
    let (mut top1, mut top2) = (0.0f64, 0.0f64);
    for &v in x {
        if v > top1 {
            top2 = top1;
            top1 = v;
        } else if v > top2 {
            top2 = v;
        }
    }
    top1 * top2 < 1.0
}

/// A strength sequence can only be matched in expectation if no single node
/// carries half or more of the total: every unit of the top node's strength
/// sits on an edge that also feeds some other node. The one exception is an
/// isolated dyad, two equal positive strengths with everything else zero.
fn check_strengths_representable(net: &LexicalNetwork, s: &[f64]) -> Result<()> {
    let positive: Vec<usize> = (0..s.len()).filter(|&i| s[i] > 0.0).collect();
    let total: f64 = s.iter().sum();
    let top = positive
        .iter()
        .copied()
        .max_by(|&a, &b| s[a].partial_cmp(&s[b]).unwrap())
        .expect("caller handles the all-zero case");
    let ok = match positive.len() {
        1 => false,
        2 => s[positive[0]] == s[positive[1]],
        _ => 2.0 * s[top] < total,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "soft configuration model cannot match this strength sequence: \
             '{}' holds {} of {} total strength, at least half",
            net.lemma(top),
            s[top],
            total
        )))
    }
}

/// Solve x_i so the expected strength of node i equals s_i with all other
/// entries held fixed. The map t -> sum_j t x_j / (1 - t x_j) is increasing
/// on [0, 1/max x_j), so the root is unique; Newton steps are kept inside a
/// shrinking bracket and replaced by bisection when they leave it.
fn coordinate_root(x: &[f64], s: &[f64], i: usize) -> f64 {
    if s[i] == 0.0 {
        return 0.0;
    }
    let mut cap = f64::INFINITY;
    for (j, &xj) in x.iter().enumerate() {
        if j != i && xj > 0.0 {
            cap = cap.min(1.0 / xj);
        }
    }
    if !cap.is_finite() {
        // No positive partner to attach strength to; leave the residual to
        // report the mismatch.
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, cap);
    let mut t = if x[i] > 0.0 && x[i] < cap {
        x[i]
    } else {
        0.5 * cap
    };
    for _ in 0..100 {
        let mut f = -s[i];
        let mut fp = 0.0;
        for (j, &xj) in x.iter().enumerate() {
            if j != i && xj > 0.0 {
                let q = t * xj;
                let r = 1.0 - q;
                f += q / r;
                fp += xj / (r * r);
            }
        }
        if f.abs() < 1e-13 {
            break;
        }
        if f > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let newton = t - f / fp;
        t = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    t
}

/// Fit node weights so that expected strengths reproduce the network's
/// strength sequence. Each sweep revisits every node and resets its entry to
/// the exact single-coordinate root given the others; `iterations` counts
/// sweeps. Sequences where one node holds at least half the total strength
/// have no solution and are rejected up front.
pub fn fit_soft_weighted_cm(net: &LexicalNetwork, opts: &SoftCmOptions) -> Result<FittedSoftCm> {
    let n = net.node_count();
    let s: Vec<f64> = (0..n).map(|v| net.strength(v) as f64).collect();
    let total: f64 = s.iter().sum();
    let lemmas = net.lemmas().to_vec();
    if total == 0.0 {
        return Ok(FittedSoftCm {
            kind: net.kind(),
            lemmas,
            x: vec![0.0; n],
            target_strengths: s.clone(),
            expected_strengths: s,
            residual: 0.0,
            iterations: 0,
        });
    }
    check_strengths_representable(net, &s)?;

    let mut x: Vec<f64> = s.iter().map(|si| si / total.sqrt()).collect();
    if !is_feasible(&x) {
        let mut tops: Vec<f64> = x.clone();
        tops.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let scale = (0.999 / (tops[0] * tops[1])).sqrt();
        for v in &mut x {
            *v *= scale;
        }
    }

    let mut residual = f64::INFINITY;
    for iter in 1..=opts.max_iterations {
        for i in 0..n {
            x[i] = coordinate_root(&x, &s, i);
        }
        let d = pair_denominators(&x);
        residual = (0..n)
            .map(|i| (x[i] * d[i] - s[i]).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tolerance {
            let expected_strengths = (0..n).map(|i| x[i] * d[i]).collect();
            return Ok(FittedSoftCm {
                kind: net.kind(),
                lemmas,
                x,
                target_strengths: s,
                expected_strengths,
                residual,
                iterations: iter,
            });
        }
    }
    Err(Error::NotConverged {
        iterations: opts.max_iterations as u64,
        residual,
    })
}

/// Draw one graph from the fitted model: every node pair gets a geometric
/// weight with parameter x_i x_j, sampled by inversion; zero-weight pairs
/// get no edge. All nodes are present even when isolated.
pub fn sample_soft_cm<R: Rng>(fit: &FittedSoftCm, rng: &mut R) -> LexicalNetwork {
    let mut net = LexicalNetwork::new(fit.kind);
    for lemma in &fit.lemmas {
        net.ensure_node(lemma);
    }
    let n = fit.x.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let q = fit.x[i] * fit.x[j];
            if q <= 0.0 {
                continue;
            }
            let mut u: f64 = rng.gen();
            while u == 0.0 {
                u = rng.gen();
            }
            let w = (u.ln() / q.ln()).floor();
            if w >= 1.0 {
                net.add_weight(i, j, w as u64, None);
            }
        }
    }
    net
}

/// `n_samples` independent draws; realization i uses random stream i.
pub fn soft_cm_samples(fit: &FittedSoftCm, n_samples: usize, seed: u64) -> Vec<LexicalNetwork> {
    (0..n_samples)
        .into_par_iter()
        .map(|i| sample_soft_cm(fit, &mut stream_rng(seed, i as u64)))
        .collect()
}

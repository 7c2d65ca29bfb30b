//! Community structure by repeated removal of the highest-betweenness
//! edge, recomputing betweenness after every cut until the requested
//! number of components exists.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::degeneracy::degeneracy;
use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NodeId};
use crate::ingest::{AffectLexicons, Valence};

/// Sources are accumulated in fixed-size chunks summed in index order, so
/// betweenness totals are bit-identical regardless of thread count.
const SOURCE_CHUNK: usize = 64;

fn brandes_accumulate(
    adj: &[Vec<NodeId>],
    edges: &[(NodeId, NodeId)],
    source: NodeId,
    out: &mut [f64],
) {
    let n = adj.len();
    let mut dist: Vec<i64> = vec![-1; n];
    let mut sigma: Vec<f64> = vec![0.0; n];
    let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut order: Vec<NodeId> = Vec::new();
    let mut queue = VecDeque::new();

    dist[source] = 0;
    sigma[source] = 1.0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if dist[w] < 0 {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }

    let mut delta = vec![0.0f64; n];
    for &w in order.iter().rev() {
        for &v in &preds[w] {
            let c = sigma[v] / sigma[w] * (1.0 + delta[w]);
            let key = if v < w { (v, w) } else { (w, v) };
            let idx = edges.binary_search(&key).expect("tree edge is present");
            out[idx] += c;
            delta[v] += c;
        }
    }
}

/// Shortest-path betweenness of every edge, summed over all sources
/// (ordered pairs, hop distances).
fn edge_betweenness(adj: &[Vec<NodeId>], edges: &[(NodeId, NodeId)]) -> Vec<f64> {
    let n = adj.len();
    let sources: Vec<NodeId> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut acc = vec![0.0f64; edges.len()];
            for &s in chunk {
                brandes_accumulate(adj, edges, s, &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0f64; edges.len()];
    for partial in partials {
        for (t, p) in total.iter_mut().zip(partial) {
            *t += p;
        }
    }
    total
}

fn components_of(adj: &[Vec<NodeId>]) -> Vec<Vec<NodeId>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    comps
}

#[derive(Debug, Clone, Serialize)]
pub struct Cluster {
    /// Node ids in the source network, ascending.
    pub nodes: Vec<NodeId>,
    pub lemmas: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Clustering {
    /// Largest first; equal sizes ordered by smallest member id.
    pub clusters: Vec<Cluster>,
    pub removed_edges: usize,
}

/// Split the network into `n_clusters` connected parts by removing edges
/// of maximal betweenness one at a time (ties go to the smallest node
/// pair). A network that already has enough components is returned as is.
pub fn girvan_newman_clusters(net: &LexicalNetwork, n_clusters: usize) -> Result<Clustering> {
    let n = net.node_count();
    if n_clusters == 0 {
        return Err(Error::InvalidInput("cannot split into 0 clusters".to_string()));
    }
    if n_clusters > n {
        return Err(Error::InvalidInput(format!(
            "cannot split {n} nodes into {n_clusters} clusters"
        )));
    }

    let mut adj: Vec<Vec<NodeId>> = (0..n)
        .map(|v| net.neighbor_ids(v).collect::<Vec<_>>())
        .collect();
    let mut edges: Vec<(NodeId, NodeId)> = net
        .edges()
        .iter()
        .map(|e| if e.a < e.b { (e.a, e.b) } else { (e.b, e.a) })
        .collect();
    edges.sort_unstable();

    let mut removed_edges = 0;
    while components_of(&adj).len() < n_clusters {
        let bt = edge_betweenness(&adj, &edges);
        // Strict comparison keeps the first (smallest) pair on exact ties;
        // chunked summation makes those ties reproducible.
        let mut best = 0;
        for i in 1..edges.len() {
            if bt[i] > bt[best] {
                best = i;
            }
        }
        let (a, b) = edges.remove(best);
        adj[a].retain(|&w| w != b);
        adj[b].retain(|&w| w != a);
        removed_edges += 1;
    }

    let clusters = components_of(&adj)
        .into_iter()
        .map(|nodes| {
            let lemmas = nodes.iter().map(|&v| net.lemma(v).to_string()).collect();
            Cluster { nodes, lemmas }
        })
        .collect();
    Ok(Clustering {
        clusters,
        removed_edges,
    })
}

/// Affective and structural summary of one cluster, computed on the
/// subgraph the original network induces on it (cut edges inside the
/// cluster count again).
#[derive(Debug, Clone, Serialize)]
pub struct ClusterProfile {
    pub size: usize,
    pub positive_fraction: f64,
    pub negative_fraction: f64,
    pub neutral_fraction: f64,
    pub degeneracy: Option<f64>,
    /// Strongest lemmas of the induced subgraph, ties alphabetical.
    pub top_lemmas: Vec<String>,
}

impl Clustering {
    pub fn profiles(
        &self,
        net: &LexicalNetwork,
        lexicons: &AffectLexicons,
        top_k: usize,
    ) -> Vec<ClusterProfile> {
        self.clusters
            .iter()
            .map(|cluster| {
                let size = cluster.nodes.len();
                let count = |val: Valence| {
                    cluster
                        .lemmas
                        .iter()
                        .filter(|l| lexicons.valence_of(l) == val)
                        .count() as f64
                };
                let sub = net.induced(&cluster.nodes, false);
                let mut by_strength: Vec<(u64, &str)> = sub
                    .node_ids()
                    .map(|v| (sub.strength(v), sub.lemma(v)))
                    .collect();
                by_strength.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
                ClusterProfile {
                    size,
                    positive_fraction: count(Valence::Positive) / size as f64,
                    negative_fraction: count(Valence::Negative) / size as f64,
                    neutral_fraction: count(Valence::Neutral) / size as f64,
                    degeneracy: degeneracy(&sub),
                    top_lemmas: by_strength
                        .into_iter()
                        .take(top_k)
                        .map(|(_, l)| l.to_string())
                        .collect(),
                }
            })
            .collect()
    }
}

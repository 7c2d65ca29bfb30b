//! Closeness centrality and how node rankings hold up against null models.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::LexicalNetwork;
use crate::nullmodels::NullEnsembleSpec;
use crate::stats::{empirical_p, mean_sd, Tail};

/// Per-component closeness: (reachable - 1) / sum of hop distances to the
/// reachable nodes. Nodes without neighbors score 0. Edge weights are
/// ignored; distance is hop count.
pub fn closeness_centrality(net: &LexicalNetwork) -> Vec<f64> {
    let n = net.node_count();
    (0..n)
        .into_par_iter()
        .map(|source| {
            let mut dist = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            dist[source] = 0;
            queue.push_back(source);
            let mut reached = 0usize;
            let mut total = 0usize;
            while let Some(v) = queue.pop_front() {
                for w in net.neighbor_ids(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        reached += 1;
                        total += dist[w];
                        queue.push_back(w);
                    }
                }
            }
            if reached == 0 {
                0.0
            } else {
                reached as f64 / total as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedLemma {
    pub rank: usize,
    pub lemma: String,
    pub score: f64,
}

/// Order lemmas by score (descending, ties by lemma) and assign ordinal
/// ranks starting at 1. Lemmas in `exclude` are removed before ranks are
/// assigned, so the survivors close ranks.
pub fn rank_lemmas(
    net: &LexicalNetwork,
    scores: &[f64],
    exclude: Option<&HashSet<String>>,
) -> Vec<RankedLemma> {
    assert_eq!(scores.len(), net.node_count(), "one score per node");
    let mut rows: Vec<(&str, f64)> = net
        .node_ids()
        .filter(|&v| exclude.map_or(true, |ex| !ex.contains(net.lemma(v))))
        .map(|v| (net.lemma(v), scores[v]))
        .collect();
    rows.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("non-finite score")
            .then_with(|| a.0.cmp(b.0))
    });
    rows.into_iter()
        .enumerate()
        .map(|(i, (lemma, score))| RankedLemma {
            rank: i + 1,
            lemma: lemma.to_string(),
            score,
        })
        .collect()
}

/// How one lemma's closeness rank moved between the empirical network and
/// a null ensemble.
#[derive(Debug, Clone, Serialize)]
pub struct RankDrop {
    pub lemma: String,
    pub empirical_rank: usize,
    pub empirical_score: f64,
    pub null_rank_mean: f64,
    pub null_rank_sd: f64,
    /// Mean null rank minus empirical rank: positive when the lemma ranks
    /// better in the real network than in the ensemble.
    pub rank_drop: f64,
    /// Two-sided empirical p-value of the rank against the ensemble.
    pub p_value: f64,
    /// z-score of the closeness value itself; None when the ensemble has
    /// no score variance.
    pub score_z: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankDropAnalysis {
    pub n_samples: usize,
    pub results: Vec<RankDrop>,
    /// Requested lemmas that are not in the network (or were excluded).
    pub missing: Vec<String>,
}

/// Rank the given lemmas by closeness in the network and in each null
/// realization, and report how far each one falls. Rankings on both sides
/// apply the same exclusion list.
pub fn rank_drop(
    net: &LexicalNetwork,
    targets: &[String],
    spec: &NullEnsembleSpec,
    exclude: Option<&HashSet<String>>,
) -> Result<RankDropAnalysis> {
    let empirical = rank_lemmas(net, &closeness_centrality(net), exclude);
    let rank_of = |ranking: &[RankedLemma], lemma: &str| {
        ranking
            .iter()
            .find(|r| r.lemma == lemma)
            .map(|r| (r.rank, r.score))
    };

    let ensemble = spec.generate(net)?;
    let null_rankings: Vec<Vec<RankedLemma>> = ensemble
        .par_iter()
        .map(|g| rank_lemmas(g, &closeness_centrality(g), exclude))
        .collect();

    let mut results = Vec::new();
    let mut missing = Vec::new();
    for lemma in targets {
        let Some((rank, score)) = rank_of(&empirical, lemma) else {
            missing.push(lemma.clone());
            continue;
        };
        let mut null_ranks = Vec::with_capacity(null_rankings.len());
        let mut null_scores = Vec::with_capacity(null_rankings.len());
        for ranking in &null_rankings {
            // Null graphs keep the node set, so the lemma is always there.
            let (r, s) = rank_of(ranking, lemma).expect("lemma present in null ranking");
            null_ranks.push(r as f64);
            null_scores.push(s);
        }
        let (rank_mean, rank_sd) = mean_sd(&null_ranks);
        let (score_mean, score_sd) = mean_sd(&null_scores);
        results.push(RankDrop {
            lemma: lemma.clone(),
            empirical_rank: rank,
            empirical_score: score,
            null_rank_mean: rank_mean,
            null_rank_sd: rank_sd,
            rank_drop: rank_mean - rank as f64,
            p_value: empirical_p(rank as f64, &null_ranks, Tail::TwoSided)?,
            score_z: (score_sd > 0.0).then(|| (score - score_mean) / score_sd),
        });
    }
    Ok(RankDropAnalysis {
        n_samples: null_rankings.len(),
        results,
        missing,
    })
}

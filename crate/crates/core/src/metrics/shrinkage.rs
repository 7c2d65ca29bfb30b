//! Vocabulary shrinkage: how much of the connected vocabulary disappears
//! when one word is removed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NodeId};
use crate::stats::{centile_bounds, empirical_p, mean_sd, Tail};

/// Size of the largest component that contains at least one edge; 0 when
/// the network has no edges at all. Measuring against edge-bearing
/// components keeps a removal that scatters everything into isolates
/// counted at full weight.
pub fn edge_component_size(net: &LexicalNetwork) -> usize {
    net.components()
        .iter()
        .filter(|comp| comp.len() > 1)
        .map(|comp| comp.len())
        .max()
        .unwrap_or(0)
}

/// How much the largest connected vocabulary shrinks when `v` and its
/// edges are removed. A leaf costs exactly itself (1); the centre of a
/// star costs the whole star.
pub fn vocabulary_shrinkage(net: &LexicalNetwork, v: NodeId) -> usize {
    let before = edge_component_size(net);
    let keep: Vec<NodeId> = net.node_ids().filter(|&u| u != v).collect();
    let after = edge_component_size(&net.induced(&keep, false));
    before.saturating_sub(after)
}

pub fn shrinkage_by_lemma(net: &LexicalNetwork, lemma: &str) -> Option<usize> {
    net.node(lemma).map(|v| vocabulary_shrinkage(net, v))
}

#[derive(Debug, Clone, Serialize)]
pub struct ShrinkageEntry {
    pub lemma: String,
    /// Whether the word sits in the giant component of the real network.
    pub in_giant: bool,
    pub shrinkage: usize,
    pub null_mean: f64,
    pub null_sd: f64,
    /// 1st and 99th nearest-rank centiles of the null shrinkage.
    pub null_low: f64,
    pub null_high: f64,
    /// Add-one lower-tail p-value: how often a null draw shrinks the
    /// vocabulary no more than the real word does.
    pub p_lower: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShrinkageAnalysis {
    pub giant_size: usize,
    pub n_samples: usize,
    pub entries: Vec<ShrinkageEntry>,
    /// Target lemmas absent from the network.
    pub missing: Vec<String>,
}

/// Compare each target's shrinkage against its distribution over an ensemble
/// of null networks. Samples are matched by lemma, so the ensemble may
/// relabel nodes freely; a sample that lacks the lemma contributes 0, since
/// deleting an absent word costs nothing.
pub fn shrinkage_analysis(
    net: &LexicalNetwork,
    ensemble: &[LexicalNetwork],
    targets: &[String],
) -> Result<ShrinkageAnalysis> {
    if ensemble.is_empty() {
        return Err(Error::InvalidInput(
            "shrinkage analysis needs at least one null sample".to_string(),
        ));
    }
    let giant: HashSet<NodeId> = net
        .components()
        .into_iter()
        .next()
        .unwrap_or_default()
        .into_iter()
        .collect();

    let mut entries = Vec::new();
    let mut missing = Vec::new();
    for lemma in targets {
        let Some(v) = net.node(lemma) else {
            missing.push(lemma.clone());
            continue;
        };
        let shrinkage = vocabulary_shrinkage(net, v);
        let nulls: Vec<f64> = ensemble
            .par_iter()
            .map(|g| {
                g.node(lemma)
                    .map(|u| vocabulary_shrinkage(g, u) as f64)
                    .unwrap_or(0.0)
            })
            .collect();
        let (null_mean, null_sd) = mean_sd(&nulls);
        let (null_low, null_high) = centile_bounds(&nulls, 1.0, 99.0)?;
        entries.push(ShrinkageEntry {
            lemma: lemma.clone(),
            in_giant: giant.contains(&v),
            shrinkage,
            null_mean,
            null_sd,
            null_low,
            null_high,
            p_lower: empirical_p(shrinkage as f64, &nulls, Tail::Less)?,
        });
    }
    Ok(ShrinkageAnalysis {
        giant_size: giant.len(),
        n_samples: ensemble.len(),
        entries,
        missing,
    })
}

//! Giant-component coverage: how much of the vocabulary and of the total
//! connection mass the largest component holds.

use serde::Serialize;

use crate::graph::{LexicalNetwork, NodeId};

#[derive(Debug, Clone, Serialize)]
pub struct GiantComponentStats {
    pub nodes: usize,
    pub total_nodes: usize,
    pub node_fraction: f64,
    /// Share of summed node strengths inside the component; 0 when the
    /// network has no edges at all.
    pub strength_fraction: f64,
    /// Node ids of the component, ascending.
    pub members: Vec<NodeId>,
}

/// The largest component (ties to the one holding the smallest node id).
/// None for an empty network.
pub fn giant_component_stats(net: &LexicalNetwork) -> Option<GiantComponentStats> {
    let comps = net.components();
    let giant = comps.into_iter().next()?;
    let total_strength: u64 = net.node_ids().map(|v| net.strength(v)).sum();
    let giant_strength: u64 = giant.iter().map(|&v| net.strength(v)).sum();
    Some(GiantComponentStats {
        nodes: giant.len(),
        total_nodes: net.node_count(),
        node_fraction: giant.len() as f64 / net.node_count() as f64,
        strength_fraction: if total_strength == 0 {
            0.0
        } else {
            giant_strength as f64 / total_strength as f64
        },
        members: giant,
    })
}

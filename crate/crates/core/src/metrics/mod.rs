//! Structural network measures: centrality rankings and their robustness
//! under null models, entropy-based degeneracy, heavy-tail fits, vocabulary
//! shrinkage, community splits, and giant-component coverage.

mod closeness;
mod communities;
mod degeneracy;
mod giant;
mod shrinkage;
mod tail;

pub use closeness::{
    closeness_centrality, rank_drop, rank_lemmas, RankDrop, RankDropAnalysis, RankedLemma,
};
pub use communities::{girvan_newman_clusters, Cluster, ClusterProfile, Clustering};
pub use degeneracy::degeneracy;
pub use giant::{giant_component_stats, GiantComponentStats};
pub use shrinkage::{
    edge_component_size, shrinkage_analysis, shrinkage_by_lemma, vocabulary_shrinkage,
    ShrinkageAnalysis, ShrinkageEntry,
};
pub use tail::{fit_power_law_tail, strength_ccdf, PowerLawFit};

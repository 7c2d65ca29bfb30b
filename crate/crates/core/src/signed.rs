//! Signed networks and structural balance.
//!
//! Edges inherit a sign from the valence of their endpoints; triangles are
//! then classified by how many negative edges they contain. A network is
//! balanced to the extent that its triangles carry an even number of
//! negative edges. The empirical census is compared against two null
//! ensembles: degree-preserving rewiring, and shuffling of the valence
//! labels over the nodes.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NodeId};
use crate::ingest::{AffectLexicons, Valence};
use crate::nullmodels;
use crate::rng::stream_rng;
use crate::stats::mean_sd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    /// Both endpoints neutral: the edge carries no affect and is left out
    /// of the balance classification.
    Zero,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
            Sign::Zero => 0,
        }
    }

    /// Sign induced by two endpoint valences: zero when both are neutral,
    /// negative when either is negative, positive otherwise.
    pub fn from_valences(a: Valence, b: Valence) -> Sign {
        match (a, b) {
            (Valence::Neutral, Valence::Neutral) => Sign::Zero,
            (Valence::Negative, _) | (_, Valence::Negative) => Sign::Negative,
            _ => Sign::Positive,
        }
    }
}

/// A network together with a valence per node and a sign per edge.
#[derive(Debug, Clone)]
pub struct SignedNetwork {
    net: LexicalNetwork,
    valences: Vec<Valence>,
    signs: Vec<Sign>,
}

impl SignedNetwork {
    /// Attach explicit per-node valences (indexed by node id).
    pub fn from_valences(net: LexicalNetwork, valences: Vec<Valence>) -> Result<SignedNetwork> {
        if valences.len() != net.node_count() {
            return Err(Error::InvalidInput(format!(
                "{} valences for {} nodes",
                valences.len(),
                net.node_count()
            )));
        }
        let signs = signs_from_valences(&net, &valences);
        Ok(SignedNetwork {
            net,
            valences,
            signs,
        })
    }

    pub fn network(&self) -> &LexicalNetwork {
        &self.net
    }

    pub fn valences(&self) -> &[Valence] {
        &self.valences
    }

    /// Edge signs, parallel to `network().edges()`.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn valence(&self, v: NodeId) -> Valence {
        self.valences[v]
    }
}

/// Sign every edge of the network from the valence lexicon; lemmas absent
/// from the lexicon count as neutral.
pub fn assign_signs(net: LexicalNetwork, lexicons: &AffectLexicons) -> SignedNetwork {
    let valences = net
        .lemmas()
        .iter()
        .map(|lemma| lexicons.valence_of(lemma))
        .collect();
    SignedNetwork::from_valences(net, valences).expect("valence per node by construction")
}

fn signs_from_valences(net: &LexicalNetwork, valences: &[Valence]) -> Vec<Sign> {
    net.edges()
        .iter()
        .map(|e| Sign::from_valences(valences[e.a], valences[e.b]))
        .collect()
}

/// Triangle counts grouped by the number of negative edges. Triangles with
/// any zero-sign edge are tallied separately and excluded from balance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TriadCensus {
    pub zero_negative: u64,
    pub one_negative: u64,
    pub two_negative: u64,
    pub three_negative: u64,
    pub unsigned: u64,
}

/// Per-class shares of the classified triangles.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CensusFractions {
    pub zero_negative: f64,
    pub one_negative: f64,
    pub two_negative: f64,
    pub three_negative: f64,
}

impl TriadCensus {
    fn record(&mut self, s1: Sign, s2: Sign, s3: Sign) {
        if s1 == Sign::Zero || s2 == Sign::Zero || s3 == Sign::Zero {
            self.unsigned += 1;
            return;
        }
        let negatives = [s1, s2, s3]
            .iter()
            .filter(|&&s| s == Sign::Negative)
            .count();
        match negatives {
            0 => self.zero_negative += 1,
            1 => self.one_negative += 1,
            2 => self.two_negative += 1,
            _ => self.three_negative += 1,
        }
    }

    /// Triangles with all three edges signed.
    pub fn classified(&self) -> u64 {
        self.zero_negative + self.one_negative + self.two_negative + self.three_negative
    }

    pub fn total(&self) -> u64 {
        self.classified() + self.unsigned
    }

    /// Balanced triangles carry an even number of negative edges.
    pub fn balanced(&self) -> u64 {
        self.zero_negative + self.two_negative
    }

    /// Share of classified triangles that are balanced; None when nothing
    /// was classified.
    pub fn degree_of_balance(&self) -> Option<f64> {
        let c = self.classified();
        (c > 0).then(|| self.balanced() as f64 / c as f64)
    }

    pub fn fractions(&self) -> Option<CensusFractions> {
        let c = self.classified();
        (c > 0).then(|| CensusFractions {
            zero_negative: self.zero_negative as f64 / c as f64,
            one_negative: self.one_negative as f64 / c as f64,
            two_negative: self.two_negative as f64 / c as f64,
            three_negative: self.three_negative as f64 / c as f64,
        })
    }
}

/// Count all triangles and classify them by sign. Enumeration orders nodes
/// by degree and walks only forward neighbor pairs, so each triangle is
/// seen exactly once.
pub fn triangle_census(snet: &SignedNetwork) -> TriadCensus {
    census_with(snet.network(), snet.signs())
}

pub(crate) fn census_with(net: &LexicalNetwork, signs: &[Sign]) -> TriadCensus {
    let n = net.node_count();
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| (net.degree(v), v));
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut forward: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for v in 0..n {
        let mut ws: Vec<NodeId> = net.neighbor_ids(v).filter(|&w| rank[w] > rank[v]).collect();
        ws.sort_by_key(|&w| rank[w]);
        forward[v] = ws;
    }

    let mut census = TriadCensus::default();
    for v in 0..n {
        for (i, &a) in forward[v].iter().enumerate() {
            for &b in &forward[v][i + 1..] {
                if let Some(idx_ab) = net.edge_index_between(a, b) {
                    let idx_va = net.edge_index_between(v, a).expect("forward neighbor");
                    let idx_vb = net.edge_index_between(v, b).expect("forward neighbor");
                    census.record(signs[idx_va], signs[idx_vb], signs[idx_ab]);
                }
            }
        }
    }
    census
}

/// One null realization's census.
#[derive(Debug, Clone, Serialize)]
pub struct NullCensusSample {
    pub index: usize,
    pub census: TriadCensus,
    pub degree_of_balance: Option<f64>,
}

/// Census statistics over a null ensemble, with the empirical balance
/// z-scored against it.
#[derive(Debug, Clone, Serialize)]
pub struct EnsembleCensusStats {
    pub n_samples: usize,
    pub mean_fractions: Option<CensusFractions>,
    pub sd_fractions: Option<CensusFractions>,
    pub dob_mean: Option<f64>,
    pub dob_sd: Option<f64>,
    /// (empirical - mean) / sd; None when the sd is zero or either side is
    /// undefined.
    pub dob_z: Option<f64>,
    pub samples: Vec<NullCensusSample>,
}

fn ensemble_stats(empirical_dob: Option<f64>, samples: Vec<NullCensusSample>) -> EnsembleCensusStats {
    let fracs: Vec<CensusFractions> = samples.iter().filter_map(|s| s.census.fractions()).collect();
    let dobs: Vec<f64> = samples.iter().filter_map(|s| s.degree_of_balance).collect();

    let field_stats = |get: fn(&CensusFractions) -> f64| {
        let xs: Vec<f64> = fracs.iter().map(get).collect();
        mean_sd(&xs)
    };
    let (mean_fractions, sd_fractions) = if fracs.is_empty() {
        (None, None)
    } else {
        let (m0, s0) = field_stats(|f| f.zero_negative);
        let (m1, s1) = field_stats(|f| f.one_negative);
        let (m2, s2) = field_stats(|f| f.two_negative);
        let (m3, s3) = field_stats(|f| f.three_negative);
        (
            Some(CensusFractions {
                zero_negative: m0,
                one_negative: m1,
                two_negative: m2,
                three_negative: m3,
            }),
            Some(CensusFractions {
                zero_negative: s0,
                one_negative: s1,
                two_negative: s2,
                three_negative: s3,
            }),
        )
    };

    let (dob_mean, dob_sd, dob_z) = if dobs.is_empty() {
        (None, None, None)
    } else {
        let (mean, sd) = mean_sd(&dobs);
        let z = empirical_dob.and_then(|e| (sd > 0.0).then(|| (e - mean) / sd));
        (Some(mean), Some(sd), z)
    };

    EnsembleCensusStats {
        n_samples: samples.len(),
        mean_fractions,
        sd_fractions,
        dob_mean,
        dob_sd,
        dob_z,
        samples,
    }
}

/// Empirical census next to its two null ensembles.
#[derive(Debug, Clone, Serialize)]
pub struct BalanceComparison {
    pub empirical: TriadCensus,
    pub empirical_fractions: Option<CensusFractions>,
    pub empirical_degree_of_balance: Option<f64>,
    pub rewired: EnsembleCensusStats,
    pub shuffled: EnsembleCensusStats,
}

/// Run the full balance analysis: empirical census, then `n_samples`
/// degree-preserving rewirings and `n_samples` valence shuffles, each
/// realization i drawing from random stream i of `seed`. Results are
/// independent of thread count.
pub fn balance_comparison(
    snet: &SignedNetwork,
    n_samples: usize,
    seed: u64,
    rewire_multiplier: usize,
) -> Result<BalanceComparison> {
    if n_samples == 0 {
        return Err(Error::InvalidInput("n_samples must be positive".to_string()));
    }
    let empirical = triangle_census(snet);
    let empirical_dob = empirical.degree_of_balance();

    let rewired: Result<Vec<NullCensusSample>> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream_rng(seed, i as u64);
            let rewired_net =
                nullmodels::degree_rewire_sample(snet.network(), rewire_multiplier, &mut rng)?;
            let signs = signs_from_valences(&rewired_net, snet.valences());
            let census = census_with(&rewired_net, &signs);
            Ok(NullCensusSample {
                index: i,
                degree_of_balance: census.degree_of_balance(),
                census,
            })
        })
        .collect();

    let shuffled: Vec<NullCensusSample> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream_rng(seed, i as u64);
            let valences = nullmodels::shuffled_valences(snet.valences(), &mut rng);
            let signs = signs_from_valences(snet.network(), &valences);
            let census = census_with(snet.network(), &signs);
            NullCensusSample {
                index: i,
                degree_of_balance: census.degree_of_balance(),
                census,
            }
        })
        .collect();

    Ok(BalanceComparison {
        empirical,
        empirical_fractions: empirical.fractions(),
        empirical_degree_of_balance: empirical_dob,
        rewired: ensemble_stats(empirical_dob, rewired?),
        shuffled: ensemble_stats(empirical_dob, shuffled),
    })
}

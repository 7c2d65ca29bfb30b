//! `cognet balance`: sign built networks with the valence lexicon, census
//! their triangles, and compare the degree of balance against rewired and
//! shuffled null ensembles.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use cognet_core::ingest::load_valence;
use cognet_core::signed::{
    assign_signs, balance_comparison, CensusFractions, EnsembleCensusStats,
};
use cognet_core::{AffectLexicons, LexicalNetwork, Sign, TriadCensus};

use crate::report::{self, RunStamp};

#[derive(Debug, Args)]
pub struct BalanceArgs {
    /// Valence lexicon (lemma<TAB>score).
    #[arg(long)]
    pub valence: PathBuf,
    /// Built networks to analyze, by base name in the analysis directory.
    #[arg(long, value_delimiter = ',', default_value = "co")]
    pub networks: Vec<String>,
    /// Null realizations per ensemble.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Rewiring attempts per edge in the degree-preserving null.
    #[arg(long, default_value_t = 10)]
    pub rewire_multiplier: usize,
    /// Analysis directory holding the built networks; the report lands
    /// here too.
    #[arg(long)]
    pub out: PathBuf,
}

/// Ensemble summary without the per-sample censuses, which would dominate
/// the report at typical sample counts.
#[derive(Debug, Serialize)]
struct EnsembleSummary {
    n_samples: usize,
    mean_fractions: Option<CensusFractions>,
    sd_fractions: Option<CensusFractions>,
    dob_mean: Option<f64>,
    dob_sd: Option<f64>,
    dob_z: Option<f64>,
}

impl EnsembleSummary {
    fn from_stats(stats: &EnsembleCensusStats) -> EnsembleSummary {
        EnsembleSummary {
            n_samples: stats.n_samples,
            mean_fractions: stats.mean_fractions,
            sd_fractions: stats.sd_fractions,
            dob_mean: stats.dob_mean,
            dob_sd: stats.dob_sd,
            dob_z: stats.dob_z,
        }
    }
}

#[derive(Debug, Serialize)]
struct NetworkBalance {
    nodes: usize,
    edges: usize,
    positive_links: usize,
    negative_links: usize,
    zero_links: usize,
    empirical: TriadCensus,
    empirical_fractions: Option<CensusFractions>,
    degree_of_balance: Option<f64>,
    rewired: EnsembleSummary,
    shuffled: EnsembleSummary,
}

#[derive(Debug, Serialize)]
struct BalanceReport {
    #[serde(flatten)]
    stamp: RunStamp,
    networks: BTreeMap<String, NetworkBalance>,
}

pub fn run(args: &BalanceArgs) -> Result<()> {
    let config = report::config_map([
        ("valence", args.valence.display().to_string()),
        ("networks", args.networks.join(",")),
        ("samples", args.samples.to_string()),
        ("seed", args.seed.to_string()),
        ("rewire_multiplier", args.rewire_multiplier.to_string()),
    ]);
    let stamp = RunStamp::new("cognet/balance/1", args.seed, &config);

    let (valence, thresholds) = load_valence(&args.valence)?;
    let lexicons = AffectLexicons {
        valence,
        valence_thresholds: Some(thresholds),
        ..AffectLexicons::default()
    };

    let mut networks = BTreeMap::new();
    for name in &args.networks {
        let net = LexicalNetwork::read_files(&args.out.join(name))
            .with_context(|| format!("loading network {name:?} (run build first)"))?;
        let nodes = net.node_count();
        let edges = net.edge_count();
        let snet = assign_signs(net, &lexicons);
        let count = |sign: Sign| snet.signs().iter().filter(|&&s| s == sign).count();
        let comparison =
            balance_comparison(&snet, args.samples, args.seed, args.rewire_multiplier)?;
        networks.insert(
            name.clone(),
            NetworkBalance {
                nodes,
                edges,
                positive_links: count(Sign::Positive),
                negative_links: count(Sign::Negative),
                zero_links: count(Sign::Zero),
                empirical: comparison.empirical,
                empirical_fractions: comparison.empirical_fractions,
                degree_of_balance: comparison.empirical_degree_of_balance,
                rewired: EnsembleSummary::from_stats(&comparison.rewired),
                shuffled: EnsembleSummary::from_stats(&comparison.shuffled),
            },
        );
    }

    let mut csv = report::csv_writer(&args.out.join("balance_triads.csv"))?;
    csv.write_record([
        "network",
        "source",
        "zero_negative",
        "one_negative",
        "two_negative",
        "three_negative",
        "degree_of_balance",
    ])?;
    let mut fraction_row = |network: &str,
                            source: &str,
                            fracs: &Option<CensusFractions>,
                            dob: Option<f64>|
     -> Result<()> {
        let cell = |x: Option<f64>| x.map(report::num).unwrap_or_default();
        let (zn, on, tn, an) = match fracs {
            Some(f) => (
                report::num(f.zero_negative),
                report::num(f.one_negative),
                report::num(f.two_negative),
                report::num(f.three_negative),
            ),
            None => Default::default(),
        };
        csv.write_record([network, source, &zn, &on, &tn, &an, &cell(dob)])?;
        Ok(())
    };
    for (name, nb) in &networks {
        fraction_row(name, "empirical", &nb.empirical_fractions, nb.degree_of_balance)?;
        fraction_row(name, "rewired_mean", &nb.rewired.mean_fractions, nb.rewired.dob_mean)?;
        fraction_row(name, "shuffled_mean", &nb.shuffled.mean_fractions, nb.shuffled.dob_mean)?;
    }
    csv.flush()?;

    let report = BalanceReport { stamp, networks };
    report::write_json(&args.out.join("balance.json"), &report)
}

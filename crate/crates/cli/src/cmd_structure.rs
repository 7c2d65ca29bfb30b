//! `cognet structure`: giant-component coverage, community split with
//! affective profiles, strength distribution and tail fit, hub shrinkage
//! against a strength-matched null ensemble, and a neighborhood valence
//! test for one focus word.

use std::collections::HashSet;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use cognet_core::emoprofile::semantic_frame;
use cognet_core::ingest::{load_stopwords, load_valence};
use cognet_core::metrics::{
    degeneracy, fit_power_law_tail, giant_component_stats, girvan_newman_clusters,
    shrinkage_analysis, ClusterProfile, Clustering, GiantComponentStats, PowerLawFit,
    ShrinkageAnalysis,
};
use cognet_core::nullmodels::{fit_soft_weighted_cm, soft_cm_samples};
use cognet_core::stats::chi2_two_proportions;
use cognet_core::{
    AffectLexicons, Error, LexicalNetwork, SoftCmOptions, TwoProportionResult, Valence,
};

use crate::report::{self, RunStamp};

#[derive(Debug, Args)]
pub struct StructureArgs {
    /// Valence lexicon (lemma<TAB>score).
    #[arg(long)]
    pub valence: PathBuf,
    /// Stopword list, one lemma per line.
    #[arg(long)]
    pub stopwords: PathBuf,
    /// Built network to analyze, by base name in the analysis directory.
    #[arg(long, default_value = "svo")]
    pub network: String,
    /// Connected parts to split the giant component into.
    #[arg(long, default_value_t = 4)]
    pub clusters: usize,
    /// Strongest lemmas to run the shrinkage analysis on.
    #[arg(long, default_value_t = 10)]
    pub hubs: usize,
    /// Focus lemma for the neighborhood valence test.
    #[arg(long, default_value = "i")]
    pub focus: String,
    /// Null realizations in the strength-matched ensemble.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Analysis directory holding the built networks; reports land here
    /// too.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct SoftCmSummary {
    iterations: usize,
    residual: f64,
}

/// Negative-word share of the focus neighborhood against the rest of the
/// network, stopwords excluded on both sides. The test is None when the
/// focus is missing or either side is degenerate.
#[derive(Debug, Serialize)]
struct FocusValence {
    focus: String,
    focus_present: bool,
    frame_size: usize,
    frame_negative: usize,
    rest_size: usize,
    rest_negative: usize,
    test: Option<TwoProportionResult>,
}

#[derive(Debug, Serialize)]
struct ClusterReport {
    lemmas: Vec<String>,
    profile: ClusterProfile,
}

#[derive(Debug, Serialize)]
struct StructureReport {
    #[serde(flatten)]
    stamp: RunStamp,
    network: String,
    giant: GiantComponentStats,
    giant_degeneracy: Option<f64>,
    removed_edges: usize,
    clusters: Vec<ClusterReport>,
    tail_fit: PowerLawFit,
    soft_cm: SoftCmSummary,
    shrinkage: ShrinkageAnalysis,
    focus_valence: FocusValence,
}

fn focus_valence(
    net: &LexicalNetwork,
    focus: &str,
    lexicons: &AffectLexicons,
) -> FocusValence {
    let Some(v) = net.node(focus) else {
        return FocusValence {
            focus: focus.to_string(),
            focus_present: false,
            frame_size: 0,
            frame_negative: 0,
            rest_size: 0,
            rest_negative: 0,
            test: None,
        };
    };
    let frame = semantic_frame(net, v, lexicons);
    let in_frame: HashSet<usize> = frame.iter().copied().collect();
    let negative = |id: usize| lexicons.valence_of(net.lemma(id)) == Valence::Negative;
    let frame_negative = frame.iter().filter(|&&w| negative(w)).count();
    let rest: Vec<usize> = net
        .node_ids()
        .filter(|&w| w != v && !in_frame.contains(&w) && !lexicons.is_stopword(net.lemma(w)))
        .collect();
    let rest_negative = rest.iter().filter(|&&w| negative(w)).count();
    let test = chi2_two_proportions(
        frame_negative as u64,
        frame.len() as u64,
        rest_negative as u64,
        rest.len() as u64,
        false,
    )
    .ok();
    FocusValence {
        focus: focus.to_string(),
        focus_present: true,
        frame_size: frame.len(),
        frame_negative,
        rest_size: rest.len(),
        rest_negative,
        test,
    }
}

pub fn run(args: &StructureArgs) -> Result<()> {
    let config = report::config_map([
        ("valence", args.valence.display().to_string()),
        ("stopwords", args.stopwords.display().to_string()),
        ("network", args.network.clone()),
        ("clusters", args.clusters.to_string()),
        ("hubs", args.hubs.to_string()),
        ("focus", args.focus.clone()),
        ("samples", args.samples.to_string()),
        ("seed", args.seed.to_string()),
    ]);
    let stamp = RunStamp::new("cognet/structure/1", args.seed, &config);

    let (valence, thresholds) = load_valence(&args.valence)?;
    let lexicons = AffectLexicons {
        valence,
        valence_thresholds: Some(thresholds),
        stopwords: load_stopwords(&args.stopwords)?,
        ..AffectLexicons::default()
    };

    let net = LexicalNetwork::read_files(&args.out.join(&args.network))
        .with_context(|| format!("loading network {:?} (run build first)", args.network))?;
    let giant = giant_component_stats(&net)
        .ok_or_else(|| Error::InvalidInput(format!("network {:?} has no nodes", args.network)))?;
    let gc = net.induced(&giant.members, false);

    let clustering: Clustering = girvan_newman_clusters(&gc, args.clusters)?;
    let profiles = clustering.profiles(&gc, &lexicons, 5);
    let clusters: Vec<ClusterReport> = clustering
        .clusters
        .iter()
        .zip(profiles)
        .map(|(c, profile)| ClusterReport {
            lemmas: c.lemmas.clone(),
            profile,
        })
        .collect();

    let strengths: Vec<f64> = net.node_ids().map(|v| net.strength(v) as f64).collect();
    let tail_fit = fit_power_law_tail(&strengths)?;

    let ccdf = cognet_core::metrics::strength_ccdf(&net);
    let mut csv = report::csv_writer(&args.out.join("strength_ccdf.csv"))?;
    csv.write_record(["strength", "ccdf"])?;
    for (x, p) in &ccdf {
        csv.write_record([report::num(*x), report::num(*p)])?;
    }
    csv.flush()?;

    let fit = fit_soft_weighted_cm(&gc, &SoftCmOptions::default())?;
    let ensemble = soft_cm_samples(&fit, args.samples, args.seed);
    let mut hubs: Vec<(u64, &str)> = gc.node_ids().map(|v| (gc.strength(v), gc.lemma(v))).collect();
    hubs.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    let targets: Vec<String> = hubs
        .iter()
        .take(args.hubs)
        .map(|(_, lemma)| lemma.to_string())
        .collect();
    let shrinkage = shrinkage_analysis(&gc, &ensemble, &targets)?;

    let report = StructureReport {
        stamp,
        network: args.network.clone(),
        giant_degeneracy: degeneracy(&gc),
        giant,
        removed_edges: clustering.removed_edges,
        clusters,
        tail_fit,
        soft_cm: SoftCmSummary {
            iterations: fit.iterations,
            residual: fit.residual,
        },
        shrinkage,
        focus_valence: focus_valence(&net, &args.focus, &lexicons),
    };
    report::write_json(&args.out.join("structure.json"), &report)
}

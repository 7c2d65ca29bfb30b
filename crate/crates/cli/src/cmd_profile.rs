//! `cognet profile`: closeness rankings across the three network views,
//! rank robustness under degree-preserving rewiring, and per-focus emotion
//! profiles with wheel exports for the co-occurrence and free-association
//! networks.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use cognet_core::emoprofile::{
    emotion_profile, wheel_export, EmotionProfile, EmotionProfileOptions, EmotionWheel,
};
use cognet_core::ingest::load_lexicons;
use cognet_core::metrics::{
    closeness_centrality, rank_drop, rank_lemmas, RankDropAnalysis, RankedLemma,
};
use cognet_core::netbuild::restrict_network;
use cognet_core::{LexicalNetwork, NullEnsembleSpec, NullKind};

use crate::report::{self, RunStamp};

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Valence lexicon (lemma<TAB>score).
    #[arg(long)]
    pub valence: PathBuf,
    /// Emotion lexicon (lemma<TAB>emotion rows).
    #[arg(long)]
    pub emotions: PathBuf,
    /// Stopword list, one lemma per line.
    #[arg(long)]
    pub stopwords: PathBuf,
    /// Comma-separated focus lemmas for rank robustness and emotion
    /// profiles.
    #[arg(long, value_delimiter = ',', default_value = "i,love,want,help,life")]
    pub focus: Vec<String>,
    /// Rows to keep in each closeness ranking.
    #[arg(long, default_value_t = 30)]
    pub top: usize,
    /// Null realizations for rank robustness and emotion nulls.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Rewiring attempts per edge in the degree-preserving null.
    #[arg(long, default_value_t = 10)]
    pub rewire_multiplier: usize,
    /// Analysis directory holding the built networks; reports land here
    /// too.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct FocusProfiles {
    profiles: BTreeMap<String, EmotionProfile>,
    wheels: BTreeMap<String, EmotionWheel>,
    /// Focus lemmas absent from this network.
    missing: Vec<String>,
}

#[derive(Debug, Serialize)]
struct ProfileReport {
    #[serde(flatten)]
    stamp: RunStamp,
    /// Top closeness rankings, stopwords excluded: the corpus network, the
    /// free-association network, and the corpus network restricted to the
    /// free-association vocabulary.
    rankings: BTreeMap<String, Vec<RankedLemma>>,
    rank_robustness: RankDropAnalysis,
    emotions: BTreeMap<String, FocusProfiles>,
}

fn truncated(ranking: Vec<RankedLemma>, top: usize) -> Vec<RankedLemma> {
    ranking.into_iter().take(top).collect()
}

fn profile_network(
    net: &LexicalNetwork,
    focus: &[String],
    lexicons: &cognet_core::AffectLexicons,
    opts: &EmotionProfileOptions,
) -> Result<FocusProfiles> {
    let mut profiles = BTreeMap::new();
    let mut wheels = BTreeMap::new();
    let mut missing = Vec::new();
    for lemma in focus {
        if net.node(lemma).is_none() {
            missing.push(lemma.clone());
            continue;
        }
        let profile = emotion_profile(net, lemma, lexicons, opts)?;
        wheels.insert(lemma.clone(), wheel_export(&profile));
        profiles.insert(lemma.clone(), profile);
    }
    Ok(FocusProfiles {
        profiles,
        wheels,
        missing,
    })
}

pub fn run(args: &ProfileArgs) -> Result<()> {
    let config = report::config_map([
        ("valence", args.valence.display().to_string()),
        ("emotions", args.emotions.display().to_string()),
        ("stopwords", args.stopwords.display().to_string()),
        ("focus", args.focus.join(",")),
        ("top", args.top.to_string()),
        ("samples", args.samples.to_string()),
        ("seed", args.seed.to_string()),
        ("rewire_multiplier", args.rewire_multiplier.to_string()),
    ]);
    let stamp = RunStamp::new("cognet/profile/1", args.seed, &config);

    let lexicons = load_lexicons(&args.valence, &args.emotions, &args.stopwords)?;
    let co = LexicalNetwork::read_files(&args.out.join("co"))
        .with_context(|| "loading network \"co\" (run build first)")?;
    let fa = LexicalNetwork::read_files(&args.out.join("fa"))
        .with_context(|| "loading network \"fa\" (run build with --fa first)")?;
    let fa_vocab: HashSet<String> = fa.lemmas().iter().cloned().collect();
    let restricted = restrict_network(&co, &fa_vocab);

    let exclude = Some(&lexicons.stopwords);
    let co_ranking = rank_lemmas(&co, &closeness_centrality(&co), exclude);
    let fa_ranking = rank_lemmas(&fa, &closeness_centrality(&fa), exclude);
    let restricted_ranking =
        rank_lemmas(&restricted, &closeness_centrality(&restricted), exclude);

    let mut csv = report::csv_writer(&args.out.join("closeness_rankings.csv"))?;
    csv.write_record([
        "rank",
        "co_lemma",
        "co_closeness",
        "fa_lemma",
        "fa_closeness",
        "restricted_lemma",
        "restricted_closeness",
    ])?;
    for i in 0..args.top {
        let cell = |ranking: &[RankedLemma]| match ranking.get(i) {
            Some(r) => (r.lemma.clone(), report::num(r.score)),
            None => Default::default(),
        };
        let (cl, cs) = cell(&co_ranking);
        let (fl, fs) = cell(&fa_ranking);
        let (rl, rs) = cell(&restricted_ranking);
        if cl.is_empty() && fl.is_empty() && rl.is_empty() {
            break;
        }
        csv.write_record([(i + 1).to_string(), cl, cs, fl, fs, rl, rs])?;
    }
    csv.flush()?;

    let spec = NullEnsembleSpec {
        kind: NullKind::DegreeRewire,
        n_samples: args.samples,
        seed: args.seed,
        rewire_multiplier: args.rewire_multiplier,
    };
    let rank_robustness = rank_drop(&co, &args.focus, &spec, exclude)?;

    let opts = EmotionProfileOptions {
        n_samples: args.samples,
        seed: args.seed,
        ..EmotionProfileOptions::default()
    };
    let mut emotions = BTreeMap::new();
    emotions.insert(
        "co".to_string(),
        profile_network(&co, &args.focus, &lexicons, &opts)?,
    );
    emotions.insert(
        "fa".to_string(),
        profile_network(&fa, &args.focus, &lexicons, &opts)?,
    );

    let mut csv = report::csv_writer(&args.out.join("emotion_wheels.csv"))?;
    csv.write_record([
        "network",
        "focus",
        "emotion",
        "fraction",
        "z",
        "significant",
        "significance_radius",
    ])?;
    for (net_name, fp) in &emotions {
        for (lemma, wheel) in &fp.wheels {
            for (i, emotion) in wheel.emotions.iter().enumerate() {
                csv.write_record([
                    net_name.clone(),
                    lemma.clone(),
                    emotion.clone(),
                    report::num(wheel.fractions[i]),
                    wheel.z_scores[i].map(report::num).unwrap_or_default(),
                    wheel.significant[i].to_string(),
                    report::num(wheel.significance_radius),
                ])?;
            }
        }
    }
    csv.flush()?;

    let mut rankings = BTreeMap::new();
    rankings.insert("co".to_string(), truncated(co_ranking, args.top));
    rankings.insert("fa".to_string(), truncated(fa_ranking, args.top));
    rankings.insert(
        "co_restricted_to_fa".to_string(),
        truncated(restricted_ranking, args.top),
    );

    let report = ProfileReport {
        stamp,
        rankings,
        rank_robustness,
        emotions,
    };
    report::write_json(&args.out.join("profile.json"), &report)
}

//! Emotional profiles of a word's semantic frame.
//!
//! The frame is the word's network neighborhood with stopwords removed.
//! Emotion fractions over the frame are judged against random frames of
//! the same size drawn from the emotion lexicon, which yields a z-score
//! and a significance cutoff per emotion.

use rand::seq::index::sample as index_sample;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NodeId};
use crate::ingest::{AffectLexicons, Emotion};
use crate::rng::lemma_rng;
use crate::stats::{chi2_two_proportions, mean_sd, TwoProportionResult};

/// Neighbors of the focus that are not stopwords, ascending by node id.
pub fn semantic_frame(
    net: &LexicalNetwork,
    focus: NodeId,
    lexicons: &AffectLexicons,
) -> Vec<NodeId> {
    net.neighbor_ids(focus)
        .filter(|&w| !lexicons.is_stopword(net.lemma(w)))
        .collect()
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EmotionProfileOptions {
    /// Random frames to draw; at least 100 for a usable null.
    pub n_samples: usize,
    pub seed: u64,
    /// Significance level for the per-emotion cutoff.
    pub alpha: f64,
    /// Divide counts by the number of frame words the emotion lexicon
    /// covers instead of the full frame size.
    pub covered_only_denominator: bool,
}

impl Default for EmotionProfileOptions {
    fn default() -> Self {
        EmotionProfileOptions {
            n_samples: 1000,
            seed: 0,
            alpha: 0.05,
            covered_only_denominator: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EmotionEntry {
    pub emotion: Emotion,
    /// Frame words carrying this emotion.
    pub count: u64,
    pub fraction: f64,
    pub null_mean: f64,
    pub null_sd: f64,
    /// None when the null has no variance.
    pub z: Option<f64>,
    /// Null fraction that must be strictly exceeded for significance.
    pub threshold: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmotionProfile {
    pub focus: String,
    pub frame_size: usize,
    /// Frame words present in the emotion lexicon.
    pub covered: usize,
    pub denominator: usize,
    pub alpha: f64,
    /// One entry per emotion, in alphabetical order.
    pub entries: Vec<EmotionEntry>,
}

fn count_emotions(lemmas: &[&str], lexicons: &AffectLexicons) -> [u64; 8] {
    let mut counts = [0u64; 8];
    for lemma in lemmas {
        for e in lexicons.emotions_of(lemma).iter() {
            counts[e.index()] += 1;
        }
    }
    counts
}

/// Nearest-rank upper quantile: the value at rank ceil((1-alpha) * n).
pub(crate) fn upper_quantile(values: &[f64], alpha: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite null fraction"));
    let rank = ((1.0 - alpha) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Profile the emotions around one focus word. The null draws
/// `opts.n_samples` frames of the same size from the emotion lexicon's
/// vocabulary, without replacement, on a random stream derived from the
/// focus lemma so every word's profile is independent of evaluation order.
pub fn emotion_profile(
    net: &LexicalNetwork,
    focus_lemma: &str,
    lexicons: &AffectLexicons,
    opts: &EmotionProfileOptions,
) -> Result<EmotionProfile> {
    if opts.n_samples < 100 {
        return Err(Error::InvalidInput(format!(
            "{} null samples are too few; need at least 100",
            opts.n_samples
        )));
    }
    if !(opts.alpha > 0.0 && opts.alpha < 1.0) {
        return Err(Error::InvalidInput(format!(
            "alpha {} outside (0, 1)",
            opts.alpha
        )));
    }
    let focus = net
        .node(focus_lemma)
        .ok_or_else(|| Error::InvalidInput(format!("'{focus_lemma}' is not in the network")))?;
    let frame = semantic_frame(net, focus, lexicons);
    if frame.is_empty() {
        return Err(Error::InvalidInput(format!(
            "semantic frame of '{focus_lemma}' is empty"
        )));
    }
    let frame_lemmas: Vec<&str> = frame.iter().map(|&v| net.lemma(v)).collect();
    let covered = frame_lemmas
        .iter()
        .filter(|l| lexicons.emotions.contains_key(**l))
        .count();
    let denominator = if opts.covered_only_denominator {
        covered
    } else {
        frame.len()
    };
    if denominator == 0 {
        return Err(Error::InvalidInput(format!(
            "the emotion lexicon covers no words around '{focus_lemma}'"
        )));
    }

    let mut vocab: Vec<&str> = lexicons.emotions.keys().map(String::as_str).collect();
    vocab.sort_unstable();
    if frame.len() > vocab.len() {
        return Err(Error::InvalidInput(format!(
            "frame of {} words exceeds the {}-word emotion lexicon",
            frame.len(),
            vocab.len()
        )));
    }

    let counts = count_emotions(&frame_lemmas, lexicons);

    // Null fractions per emotion. Drawn frames come from the lexicon, so
    // the full draw is covered and the denominator is the frame size under
    // either convention.
    let mut rng = lemma_rng(opts.seed, focus_lemma);
    let mut null_fractions: Vec<Vec<f64>> = vec![Vec::with_capacity(opts.n_samples); 8];
    for _ in 0..opts.n_samples {
        let picked: Vec<&str> = index_sample(&mut rng, vocab.len(), frame.len())
            .iter()
            .map(|i| vocab[i])
            .collect();
        let null_counts = count_emotions(&picked, lexicons);
        for e in 0..8 {
            null_fractions[e].push(null_counts[e] as f64 / frame.len() as f64);
        }
    }

    let entries = Emotion::ALL
        .iter()
        .map(|&emotion| {
            let e = emotion.index();
            let fraction = counts[e] as f64 / denominator as f64;
            let (null_mean, null_sd) = mean_sd(&null_fractions[e]);
            let threshold = upper_quantile(&null_fractions[e], opts.alpha);
            EmotionEntry {
                emotion,
                count: counts[e],
                fraction,
                null_mean,
                null_sd,
                z: (null_sd > 0.0).then(|| (fraction - null_mean) / null_sd),
                threshold,
                significant: fraction > threshold,
            }
        })
        .collect();

    Ok(EmotionProfile {
        focus: focus_lemma.to_string(),
        frame_size: frame.len(),
        covered,
        denominator,
        alpha: opts.alpha,
        entries,
    })
}

/// Per-emotion two-proportion test between two profiles (for the same
/// focus in two different networks). Emotions with a degenerate table
/// carry no result.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileComparison {
    pub emotion: Emotion,
    pub result: Option<TwoProportionResult>,
}

pub fn compare_profiles(a: &EmotionProfile, b: &EmotionProfile) -> Vec<ProfileComparison> {
    Emotion::ALL
        .iter()
        .map(|&emotion| {
            let e = emotion.index();
            ProfileComparison {
                emotion,
                result: chi2_two_proportions(
                    a.entries[e].count,
                    a.denominator as u64,
                    b.entries[e].count,
                    b.denominator as u64,
                    false,
                )
                .ok(),
            }
        })
        .collect()
}

/// Plot-ready arrangement of a profile on the emotion wheel, adjacent
/// emotions adjacent. The radius marks the z-value a normal-theory reading
/// of the profile's alpha corresponds to.
#[derive(Debug, Clone, Serialize)]
pub struct EmotionWheel {
    pub emotions: Vec<String>,
    pub fractions: Vec<f64>,
    pub z_scores: Vec<Option<f64>>,
    pub significant: Vec<bool>,
    pub significance_radius: f64,
}

pub fn wheel_export(profile: &EmotionProfile) -> EmotionWheel {
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let pick = |e: Emotion| &profile.entries[e.index()];
    EmotionWheel {
        emotions: Emotion::WHEEL.iter().map(|e| e.name().to_string()).collect(),
        fractions: Emotion::WHEEL.iter().map(|&e| pick(e).fraction).collect(),
        z_scores: Emotion::WHEEL.iter().map(|&e| pick(e).z).collect(),
        significant: Emotion::WHEEL.iter().map(|&e| pick(e).significant).collect(),
        significance_radius: normal.inverse_cdf(1.0 - profile.alpha),
    }
}

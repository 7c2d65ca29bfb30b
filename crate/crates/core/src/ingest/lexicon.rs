//! Affect lexicons: valence norms, discrete emotion associations, stopwords.
//!
//! Valence is read from a `lemma<TAB>score` table and discretized by the
//! quartiles of the score column: scores strictly below the first quartile
//! are Negative, scores strictly above the third quartile are Positive, and
//! everything else, including scores exactly at a quartile, is Neutral.
//!
//! Emotions follow the NRC-style `lemma<TAB>emotion<TAB>flag` layout with the
//! eight discrete emotions. `positive`/`negative` rows, which that layout
//! also carries, are sentiment rather than emotion and are ignored here; any
//! other unknown category name is an error.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Valence {
    Positive,
    Neutral,
    Negative,
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Valence::Positive => "positive",
            Valence::Neutral => "neutral",
            Valence::Negative => "negative",
        };
        f.write_str(s)
    }
}

/// The eight discrete emotions, in alphabetical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Emotion {
    Anger,
    Anticipation,
    Disgust,
    Fear,
    Joy,
    Sadness,
    Surprise,
    Trust,
}

impl Emotion {
    pub const ALL: [Emotion; 8] = [
        Emotion::Anger,
        Emotion::Anticipation,
        Emotion::Disgust,
        Emotion::Fear,
        Emotion::Joy,
        Emotion::Sadness,
        Emotion::Surprise,
        Emotion::Trust,
    ];

    /// Wheel layout order used for polar exports: the four pairs of opposed
    /// emotions interleaved, starting at anger.
    pub const WHEEL: [Emotion; 8] = [
        Emotion::Anger,
        Emotion::Anticipation,
        Emotion::Joy,
        Emotion::Trust,
        Emotion::Fear,
        Emotion::Surprise,
        Emotion::Sadness,
        Emotion::Disgust,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Emotion::Anger => "anger",
            Emotion::Anticipation => "anticipation",
            Emotion::Disgust => "disgust",
            Emotion::Fear => "fear",
            Emotion::Joy => "joy",
            Emotion::Sadness => "sadness",
            Emotion::Surprise => "surprise",
            Emotion::Trust => "trust",
        }
    }

    pub fn from_name(name: &str) -> Option<Emotion> {
        Emotion::ALL.iter().copied().find(|e| e.name() == name)
    }

    /// Position in [`Emotion::ALL`]; also the bit used by [`EmotionSet`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Emotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Subset of the eight emotions, packed into one byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EmotionSet(u8);

impl EmotionSet {
    pub fn empty() -> Self {
        EmotionSet(0)
    }

    pub fn insert(&mut self, e: Emotion) {
        self.0 |= 1 << e.index();
    }

    pub fn contains(self, e: Emotion) -> bool {
        self.0 & (1 << e.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Emotion> {
        Emotion::ALL.into_iter().filter(move |e| self.contains(*e))
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl FromIterator<Emotion> for EmotionSet {
    fn from_iter<T: IntoIterator<Item = Emotion>>(iter: T) -> Self {
        let mut set = EmotionSet::empty();
        for e in iter {
            set.insert(e);
        }
        set
    }
}

/// The three lexical resources the analyses draw on. Lemma keys are stored
/// lowercased exactly as loaded; lookups of unknown lemmas yield Neutral
/// valence and no emotions.
#[derive(Debug, Clone, Default)]
pub struct AffectLexicons {
    pub valence: HashMap<String, Valence>,
    pub emotions: HashMap<String, EmotionSet>,
    pub stopwords: HashSet<String>,
    /// (Q1, Q3) thresholds the valence discretization used.
    pub valence_thresholds: Option<(f64, f64)>,
}

impl AffectLexicons {
    /// Lexicons with no entries: every lemma Neutral, nothing elicits
    /// emotions, nothing is a stopword.
    pub fn empty() -> Self {
        AffectLexicons::default()
    }

    pub fn valence_of(&self, lemma: &str) -> Valence {
        self.valence.get(lemma).copied().unwrap_or(Valence::Neutral)
    }

    pub fn emotions_of(&self, lemma: &str) -> EmotionSet {
        self.emotions.get(lemma).copied().unwrap_or_default()
    }

    pub fn is_stopword(&self, lemma: &str) -> bool {
        self.stopwords.contains(lemma)
    }
}

/// Load valence, emotion, and stopword files together.
pub fn load_lexicons(
    valence_path: &Path,
    emotions_path: &Path,
    stopwords_path: &Path,
) -> Result<AffectLexicons> {
    let (valence, thresholds) = load_valence(valence_path)?;
    let emotions = load_emotions(emotions_path)?;
    let stopwords = load_stopwords(stopwords_path)?;
    Ok(AffectLexicons {
        valence,
        emotions,
        stopwords,
        valence_thresholds: Some(thresholds),
    })
}

/// First and third quartiles by linear interpolation between order
/// statistics (the common "type 7" rule). `scores` need not be sorted.
pub fn quartiles(scores: &[f64]) -> (f64, f64) {
    assert!(!scores.is_empty(), "quartiles of an empty slice");
    let mut sorted = scores.to_vec();
    sorted.sort_by(f64::total_cmp);
    (percentile_linear(&sorted, 0.25), percentile_linear(&sorted, 0.75))
}

fn percentile_linear(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = p * (n - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

/// Read a `lemma<TAB>score` valence table and discretize it by quartiles.
/// Returns the polarity map and the (Q1, Q3) thresholds used.
pub fn load_valence(path: &Path) -> Result<(HashMap<String, Valence>, (f64, f64))> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let source = path.display().to_string();
    let mut rows: Vec<(String, f64)> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 2 {
            return Err(Error::parse(&source, lineno, "expected lemma<TAB>score"));
        }
        let lemma = fields[0].trim().to_lowercase();
        if lemma.is_empty() {
            return Err(Error::parse(&source, lineno, "empty lemma"));
        }
        let score: f64 = fields[1].trim().parse().map_err(|_| {
            Error::parse(
                &source,
                lineno,
                format!("non-numeric valence score {:?}", fields[1]),
            )
        })?;
        if !seen.insert(lemma.clone()) {
            return Err(Error::parse(
                &source,
                lineno,
                format!("duplicate valence entry for {lemma:?}"),
            ));
        }
        rows.push((lemma, score));
    }
    if rows.is_empty() {
        return Err(Error::InvalidInput(format!("{source}: empty valence lexicon")));
    }
    let scores: Vec<f64> = rows.iter().map(|(_, s)| *s).collect();
    let (q1, q3) = quartiles(&scores);
    let map = rows
        .into_iter()
        .map(|(lemma, score)| {
            let v = if score < q1 {
                Valence::Negative
            } else if score > q3 {
                Valence::Positive
            } else {
                Valence::Neutral
            };
            (lemma, v)
        })
        .collect();
    Ok((map, (q1, q3)))
}

/// Read an NRC-style `lemma<TAB>emotion<TAB>flag` table.
pub fn load_emotions(path: &Path) -> Result<HashMap<String, EmotionSet>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let source = path.display().to_string();
    let mut map: HashMap<String, EmotionSet> = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 3 {
            return Err(Error::parse(
                &source,
                lineno,
                "expected lemma<TAB>emotion<TAB>flag",
            ));
        }
        let lemma = fields[0].trim().to_lowercase();
        if lemma.is_empty() {
            return Err(Error::parse(&source, lineno, "empty lemma"));
        }
        let category = fields[1].trim().to_lowercase();
        let flag = match fields[2].trim() {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::parse(
                    &source,
                    lineno,
                    format!("flag must be 0 or 1, got {other:?}"),
                ))
            }
        };
        if category == "positive" || category == "negative" {
            continue; // sentiment rows of the NRC layout, not emotions
        }
        let Some(emotion) = Emotion::from_name(&category) else {
            return Err(Error::parse(
                &source,
                lineno,
                format!("unknown emotion {category:?}"),
            ));
        };
        let entry = map.entry(lemma).or_default();
        if flag {
            entry.insert(emotion);
        }
    }
    // Lemmas whose rows are all 0 stay in the map with an empty set: the
    // profiling null samples from every annotated lemma, eliciting or not.
    Ok(map)
}

/// Read a stopword list, one lemma per line, lowercased.
pub fn load_stopwords(path: &Path) -> Result<HashSet<String>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(text
        .lines()
        .map(|l| l.trim().to_lowercase())
        .filter(|l| !l.is_empty())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn hundred_uniform_scores_split_25_50_25() {
        let rows: String = (1..=100).map(|i| format!("w{i}\t{i}\n")).collect();
        let f = write_temp(&rows);
        let (map, (q1, q3)) = load_valence(f.path()).unwrap();
        assert_eq!(map.len(), 100);
        let neg = map.values().filter(|v| **v == Valence::Negative).count();
        let pos = map.values().filter(|v| **v == Valence::Positive).count();
        let neu = map.values().filter(|v| **v == Valence::Neutral).count();
        assert_eq!((neg, neu, pos), (25, 50, 25));
        assert!(q1 > 25.0 && q1 < 26.0, "q1 = {q1}");
        assert!(q3 > 75.0 && q3 < 76.0, "q3 = {q3}");
        assert_eq!(map["w1"], Valence::Negative);
        assert_eq!(map["w50"], Valence::Neutral);
        assert_eq!(map["w100"], Valence::Positive);
    }

    #[test]
    fn score_exactly_at_quartile_is_neutral() {
        // Scores 1..5: Q1 = 2, Q3 = 4 exactly.
        let f = write_temp("a\t1\nb\t2\nc\t3\nd\t4\ne\t5\n");
        let (map, (q1, q3)) = load_valence(f.path()).unwrap();
        assert_eq!((q1, q3), (2.0, 4.0));
        assert_eq!(map["a"], Valence::Negative);
        assert_eq!(map["b"], Valence::Neutral);
        assert_eq!(map["d"], Valence::Neutral);
        assert_eq!(map["e"], Valence::Positive);
    }

    #[test]
    fn valence_errors() {
        let f = write_temp("a\tnot_a_number\n");
        let err = load_valence(f.path()).unwrap_err();
        assert!(err.to_string().contains("non-numeric"), "{err}");

        let f = write_temp("a\t1\na\t2\n");
        let err = load_valence(f.path()).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn emotions_aggregate_rows_per_lemma() {
        let f = write_temp(
            "war\tfear\t1\nwar\tanger\t1\nwar\tjoy\t0\nwar\tpositive\t0\nlove\tjoy\t1\nplain\ttrust\t0\n",
        );
        let map = load_emotions(f.path()).unwrap();
        let war = map["war"];
        assert!(war.contains(Emotion::Fear) && war.contains(Emotion::Anger));
        assert!(!war.contains(Emotion::Joy));
        assert_eq!(war.len(), 2);
        assert_eq!(map["love"].len(), 1);
        // Annotated but elicits nothing: present with an empty set.
        assert!(map["plain"].is_empty());
    }

    #[test]
    fn unknown_emotion_is_an_error_but_sentiment_rows_are_not() {
        // Sentiment rows pass silently and leave no trace: a lemma annotated
        // only for polarity is treated as not annotated at all.
        let f = write_temp("w\tpositive\t1\nw\tnegative\t0\n");
        assert!(!load_emotions(f.path()).unwrap().contains_key("w"));

        let f = write_temp("w\tboredom\t1\n");
        let err = load_emotions(f.path()).unwrap_err();
        assert!(err.to_string().contains("unknown emotion"), "{err}");
    }

    #[test]
    fn emotion_set_round_trips_bits() {
        let set: EmotionSet = [Emotion::Anger, Emotion::Trust].into_iter().collect();
        assert_eq!(set.len(), 2);
        let back: Vec<Emotion> = set.iter().collect();
        assert_eq!(back, vec![Emotion::Anger, Emotion::Trust]);
    }

    #[test]
    fn stopwords_lowercase_and_skip_blanks() {
        let f = write_temp("The\n\na\nAND\n");
        let set = load_stopwords(f.path()).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains("the") && set.contains("and"));
    }

    #[test]
    fn quartiles_brute_force_agreement() {
        // Independent check of the interpolation rule on a known case:
        // sorted [10, 20, 30, 40]: Q1 = 10 + 0.75*10 = 17.5, Q3 = 32.5.
        let (q1, q3) = quartiles(&[40.0, 10.0, 30.0, 20.0]);
        assert_eq!((q1, q3), (17.5, 32.5));
    }
}

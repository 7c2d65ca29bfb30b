//! Input side of the pipeline: annotated corpora, affect lexicons, stopword
//! lists, and free-association norms.

mod conllu;
mod free_assoc;
mod lexicon;

pub use conllu::{parse_conllu, read_conllu, read_conllu_with, write_conllu, ConlluOptions};
pub use free_assoc::{load_free_associations, FaPair, FreeAssociationData};
pub use lexicon::{
    load_emotions, load_lexicons, load_stopwords, load_valence, quartiles, AffectLexicons,
    Emotion, EmotionSet, Valence,
};

use std::collections::HashSet;

/// One syntactic token of a parsed sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedToken {
    pub surface: String,
    pub lemma: String,
    /// Universal POS tag, kept verbatim (`NOUN`, `VERB`, `PUNCT`, ...).
    pub upos: String,
    /// 1-based index of the syntactic head within the sentence; 0 for the root.
    pub head: usize,
    /// Dependency relation to the head, kept verbatim.
    pub deprel: String,
}

impl AnnotatedToken {
    pub fn is_punct(&self) -> bool {
        self.upos == "PUNCT"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    pub tokens: Vec<AnnotatedToken>,
}

impl Sentence {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// 0-based index of the root token. Valid sentences have exactly one.
    pub fn root(&self) -> Option<usize> {
        self.tokens.iter().position(|t| t.head == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub sentences: Vec<Sentence>,
}

impl Document {
    /// Number of non-punctuation tokens.
    pub fn word_count(&self) -> usize {
        self.sentences
            .iter()
            .flat_map(|s| &s.tokens)
            .filter(|t| !t.is_punct())
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnnotatedCorpus {
    pub documents: Vec<Document>,
}

impl AnnotatedCorpus {
    pub fn sentence_count(&self) -> usize {
        self.documents.iter().map(|d| d.sentences.len()).sum()
    }

    pub fn token_count(&self) -> usize {
        self.documents
            .iter()
            .flat_map(|d| &d.sentences)
            .map(Sentence::len)
            .sum()
    }

    /// Sentences paired with the index of the document they belong to.
    pub fn sentences_with_doc(&self) -> impl Iterator<Item = (usize, &Sentence)> {
        self.documents
            .iter()
            .enumerate()
            .flat_map(|(di, d)| d.sentences.iter().map(move |s| (di, s)))
    }

    /// Distinct lemmas over non-punctuation tokens.
    pub fn vocabulary(&self) -> HashSet<String> {
        self.documents
            .iter()
            .flat_map(|d| &d.sentences)
            .flat_map(|s| &s.tokens)
            .filter(|t| !t.is_punct())
            .map(|t| t.lemma.clone())
            .collect()
    }
}

/// The merged lemma that third-person singular pronouns and person
/// placeholders collapse into.
pub const MERGED_PRONOUN: &str = "s/he";

/// Normalized form of a single lemma: lowercased, with "he", "she", and any
/// of the given placeholder names merged into [`MERGED_PRONOUN`]. Placeholder
/// entries are compared after lowercasing, so the function is idempotent.
pub fn normalize_lemma(lemma: &str, placeholders: &HashSet<String>) -> String {
    let lower = lemma.to_lowercase();
    if lower == "he" || lower == "she" || placeholders.contains(&lower) {
        MERGED_PRONOUN.to_string()
    } else {
        lower
    }
}

/// Normalize every lemma in the corpus in place. Surface forms, POS tags, and
/// the tree structure are untouched.
pub fn normalize_lemmas(corpus: &mut AnnotatedCorpus, placeholders: &HashSet<String>) {
    for doc in &mut corpus.documents {
        for sentence in &mut doc.sentences {
            for token in &mut sentence.tokens {
                token.lemma = normalize_lemma(&token.lemma, placeholders);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn placeholders() -> HashSet<String> {
        ["jane", "william"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn pronouns_and_placeholders_merge() {
        let ph = placeholders();
        assert_eq!(normalize_lemma("He", &ph), "s/he");
        assert_eq!(normalize_lemma("she", &ph), "s/he");
        assert_eq!(normalize_lemma("Jane", &ph), "s/he");
        assert_eq!(normalize_lemma("William", &ph), "s/he");
        assert_eq!(normalize_lemma("Tree", &ph), "tree");
        assert_eq!(normalize_lemma("they", &ph), "they");
    }

    #[test]
    fn normalization_is_idempotent() {
        let ph = placeholders();
        for lemma in ["He", "JANE", "Tree", "s/he", "walk"] {
            let once = normalize_lemma(lemma, &ph);
            let twice = normalize_lemma(&once, &ph);
            assert_eq!(once, twice, "not idempotent for {lemma:?}");
        }
    }
}

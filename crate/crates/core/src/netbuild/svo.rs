//! Subject-verb-object triplet extraction from dependency trees.
//!
//! Extraction walks the tree rather than the surface string. Every semantic
//! token is assigned one of three roles:
//!
//! * SUBJECT: its deprel is a subject relation (nominal or clausal, active
//!   or passive);
//! * VERB: its UPOS is verbal, or its deprel marks it as the head of a
//!   relative clause;
//! * OBJECT: any other semantic token.
//!
//! For each OBJECT token, the verb is the nearest VERB-role token above it,
//! and the subject is the nearest SUBJECT-role token below that verb
//! (breaking ties by earliest sentence position). A subject that is not
//! itself nominal (noun, proper noun, or pronoun) is promoted to the nearest
//! nominal above it; if no nominal exists above a non-nominal subject, the
//! lookup fails. Objects whose verb or subject lookup fails emit nothing and
//! are counted.
//!
//! Role sets live in [`SvoTagset`] so corpora annotated with other tagsets
//! can map in.

use std::collections::{HashSet, VecDeque};

use crate::ingest::{AnnotatedCorpus, Sentence};

/// Tag and relation sets driving role assignment.
#[derive(Debug, Clone)]
pub struct SvoTagset {
    /// UPOS values that make a token semantic (content-bearing).
    pub semantic_upos: HashSet<String>,
    /// UPOS values marking the VERB role.
    pub verb_upos: HashSet<String>,
    /// UPOS values accepted as-is for the subject slot.
    pub nominal_upos: HashSet<String>,
    /// Deprels marking the SUBJECT role.
    pub subject_deprels: HashSet<String>,
    /// Deprels marking a relative-clause head, which also takes the VERB role.
    pub relcl_deprels: HashSet<String>,
    /// Deprels marking a negation modifier.
    pub negation_deprels: HashSet<String>,
    /// Lemmas that count as negation when attached via `advmod` (covers
    /// tagsets that have no dedicated negation relation).
    pub negation_advmod_lemmas: HashSet<String>,
}

fn set(items: &[&str]) -> HashSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for SvoTagset {
    fn default() -> Self {
        SvoTagset {
            semantic_upos: set(&[
                "NOUN", "PROPN", "PRON", "VERB", "AUX", "ADV", "ADJ", "ADP",
            ]),
            verb_upos: set(&["VERB", "AUX"]),
            nominal_upos: set(&["NOUN", "PROPN", "PRON"]),
            subject_deprels: set(&[
                "nsubj",
                "nsubjpass",
                "nsubj:pass",
                "csubj",
                "csubjpass",
                "csubj:pass",
            ]),
            relcl_deprels: set(&["relcl", "acl:relcl"]),
            negation_deprels: set(&["neg"]),
            negation_advmod_lemmas: set(&["not"]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Subject,
    Verb,
    Object,
}

/// One extracted triplet, as lemmas, with the document it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SvoTriplet {
    pub subject: String,
    pub verb: String,
    pub object: String,
    /// Index into the corpus document list.
    pub doc: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SvoExtraction {
    pub triplets: Vec<SvoTriplet>,
    /// OBJECT tokens seen, including those that produced no triplet.
    pub object_tokens: u64,
    /// OBJECT tokens dropped because the verb or subject lookup failed.
    pub skipped_objects: u64,
}

/// Extract triplets from every sentence of the corpus.
pub fn extract_svo_triplets(corpus: &AnnotatedCorpus, tagset: &SvoTagset) -> SvoExtraction {
    let mut out = SvoExtraction::default();
    for (doc, sentence) in corpus.sentences_with_doc() {
        extract_from_sentence(sentence, doc, tagset, &mut out);
    }
    out
}

fn extract_from_sentence(
    sentence: &Sentence,
    doc: usize,
    tagset: &SvoTagset,
    out: &mut SvoExtraction,
) {
    let n = sentence.len();
    let toks = &sentence.tokens;

    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, tok) in toks.iter().enumerate() {
        if tok.head > 0 {
            children[tok.head - 1].push(i);
        }
    }

    let roles: Vec<Option<Role>> = toks
        .iter()
        .map(|tok| {
            let negation = tagset.negation_deprels.contains(&tok.deprel)
                || (tok.deprel == "advmod" && tagset.negation_advmod_lemmas.contains(&tok.lemma));
            let verbal = tagset.verb_upos.contains(&tok.upos)
                || tagset.relcl_deprels.contains(&tok.deprel);
            let semantic = tagset.semantic_upos.contains(&tok.upos) || verbal || negation;
            if !semantic {
                None
            } else if tagset.subject_deprels.contains(&tok.deprel) {
                Some(Role::Subject)
            } else if verbal {
                Some(Role::Verb)
            } else {
                Some(Role::Object)
            }
        })
        .collect();

    // Nearest VERB-role token strictly above `i`, following head links.
    let get_verb = |i: usize| -> Option<usize> {
        let mut cur = toks[i].head;
        while cur != 0 {
            let idx = cur - 1;
            if roles[idx] == Some(Role::Verb) {
                return Some(idx);
            }
            cur = toks[idx].head;
        }
        None
    };

    // Nearest SUBJECT-role token below `verb`, by tree distance, then by
    // sentence position.
    let get_subject = |verb: usize| -> Option<usize> {
        let mut depth = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        depth[verb] = 0;
        queue.push_back(verb);
        let mut best: Option<(usize, usize)> = None; // (depth, position)
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                if depth[c] == usize::MAX {
                    depth[c] = depth[v] + 1;
                    queue.push_back(c);
                    if roles[c] == Some(Role::Subject) {
                        let key = (depth[c], c);
                        if best.map_or(true, |b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        let (_, subj) = best?;
        if tagset.nominal_upos.contains(&toks[subj].upos) {
            return Some(subj);
        }
        // Promote a non-nominal subject to the nearest nominal above it.
        let mut cur = toks[subj].head;
        while cur != 0 {
            let idx = cur - 1;
            if tagset.nominal_upos.contains(&toks[idx].upos) {
                return Some(idx);
            }
            cur = toks[idx].head;
        }
        None
    };

    for i in 0..n {
        if roles[i] != Some(Role::Object) {
            continue;
        }
        out.object_tokens += 1;
        let Some(verb) = get_verb(i) else {
            out.skipped_objects += 1;
            continue;
        };
        let Some(subject) = get_subject(verb) else {
            out.skipped_objects += 1;
            continue;
        };
        out.triplets.push(SvoTriplet {
            subject: toks[subject].lemma.clone(),
            verb: toks[verb].lemma.clone(),
            object: toks[i].lemma.clone(),
            doc,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{parse_conllu, ConlluOptions};
    use std::collections::BTreeSet;

    fn extract(text: &str) -> SvoExtraction {
        let corpus = parse_conllu(text, "mem", &ConlluOptions::default()).unwrap();
        extract_svo_triplets(&corpus, &SvoTagset::default())
    }

    fn triplet_set(ex: &SvoExtraction) -> BTreeSet<(String, String, String)> {
        ex.triplets
            .iter()
            .map(|t| (t.subject.clone(), t.verb.clone(), t.object.clone()))
            .collect()
    }

    #[test]
    fn infinitive_complement_sentence() {
        let ex = extract(
            "\
1\tShe\tshe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\ttold\ttell\tVERB\t_\t_\t0\tROOT\t_\t_
3\thim\the\tPRON\t_\t_\t2\tdobj\t_\t_
4\tto\tto\tPART\t_\t_\t5\taux\t_\t_
5\tgo\tgo\tVERB\t_\t_\t2\txcomp\t_\t_
6\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
",
        );
        let got = triplet_set(&ex);
        let want: BTreeSet<_> = [("she".into(), "tell".into(), "he".into())].into();
        assert_eq!(got, want);
        assert_eq!(ex.object_tokens, 1);
        assert_eq!(ex.skipped_objects, 0);
    }

    #[test]
    fn negation_is_an_object_via_neg_deprel() {
        let ex = extract(
            "\
1\tI\ti\tPRON\t_\t_\t4\tnsubj\t_\t_
2\tdo\tdo\tAUX\t_\t_\t4\taux\t_\t_
3\tnot\tnot\tADV\t_\t_\t4\tneg\t_\t_
4\twant\twant\tVERB\t_\t_\t0\tROOT\t_\t_
5\twar\twar\tNOUN\t_\t_\t4\tdobj\t_\t_
6\t.\t.\tPUNCT\t_\t_\t4\tpunct\t_\t_
",
        );
        let got = triplet_set(&ex);
        let want: BTreeSet<_> = [
            ("i".into(), "want".into(), "not".into()),
            ("i".into(), "want".into(), "war".into()),
        ]
        .into();
        assert_eq!(got, want);
    }

    #[test]
    fn negation_is_an_object_via_advmod_not() {
        // Tagsets without a dedicated negation relation attach "not" as a
        // plain adverbial modifier of a particle tag.
        let ex = extract(
            "\
1\tI\ti\tPRON\t_\t_\t4\tnsubj\t_\t_
2\tdo\tdo\tAUX\t_\t_\t4\taux\t_\t_
3\tnot\tnot\tPART\t_\t_\t4\tadvmod\t_\t_
4\tcare\tcare\tVERB\t_\t_\t0\tROOT\t_\t_
",
        );
        let got = triplet_set(&ex);
        let want: BTreeSet<_> = [("i".into(), "care".into(), "not".into())].into();
        assert_eq!(got, want);
    }

    #[test]
    fn clausal_subject_without_nominal_ancestor_is_skipped() {
        let ex = extract(
            "\
1\tRunning\trun\tVERB\t_\t_\t2\tcsubj\t_\t_
2\twas\tbe\tAUX\t_\t_\t0\tROOT\t_\t_
3\tfun\tfun\tADJ\t_\t_\t2\tacomp\t_\t_
",
        );
        assert!(ex.triplets.is_empty());
        assert_eq!(ex.object_tokens, 1);
        assert_eq!(ex.skipped_objects, 1);
    }

    #[test]
    fn object_without_verb_above_is_skipped() {
        // A bare noun phrase: no verb anywhere.
        let ex = extract(
            "\
1\tnice\tnice\tADJ\t_\t_\t2\tamod\t_\t_
2\tweather\tweather\tNOUN\t_\t_\t0\tROOT\t_\t_
",
        );
        assert!(ex.triplets.is_empty());
        assert_eq!(ex.object_tokens, 2);
        assert_eq!(ex.skipped_objects, 2);
    }

    #[test]
    fn passive_subject_deprels_are_subjects() {
        let ex = extract(
            "\
1\tMistakes\tmistake\tNOUN\t_\t_\t3\tnsubjpass\t_\t_
2\twere\tbe\tAUX\t_\t_\t3\tauxpass\t_\t_
3\tmade\tmake\tVERB\t_\t_\t0\tROOT\t_\t_
4\there\there\tADV\t_\t_\t3\tadvmod\t_\t_
",
        );
        let got = triplet_set(&ex);
        let want: BTreeSet<_> = [("mistake".into(), "make".into(), "here".into())].into();
        assert_eq!(got, want);
    }

    #[test]
    fn subject_ties_break_by_sentence_position() {
        // Two subject children at equal depth under the same verb; the
        // earlier one wins.
        let ex = extract(
            "\
1\tdog\tdog\tNOUN\t_\t_\t3\tnsubj\t_\t_
2\tcat\tcat\tNOUN\t_\t_\t3\tnsubj\t_\t_
3\tran\trun\tVERB\t_\t_\t0\tROOT\t_\t_
4\thome\thome\tNOUN\t_\t_\t3\tdobj\t_\t_
",
        );
        let got = triplet_set(&ex);
        let want: BTreeSet<_> = [("dog".into(), "run".into(), "home".into())].into();
        assert_eq!(got, want);
    }
}

//! Network construction: co-occurrence, SVO projection, free association.

mod svo;

pub use svo::{extract_svo_triplets, SvoExtraction, SvoTagset, SvoTriplet};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{LexicalNetwork, NetworkKind};
use crate::ingest::{AnnotatedCorpus, FreeAssociationData};

/// Build the co-occurrence network: every non-punctuation token becomes a
/// node, and adjacent tokens within a sentence gain an edge occurrence.
/// Punctuation neither links nor bridges: the words on either side of a comma
/// are not joined. Adjacent identical lemmas produce no self-loop. Each edge
/// records the documents it occurred in.
pub fn build_co_network(corpus: &AnnotatedCorpus) -> LexicalNetwork {
    let doc_names = corpus.documents.iter().map(|d| d.id.clone()).collect();
    let mut net = LexicalNetwork::with_doc_tracking(NetworkKind::Co, doc_names);
    for (doc, sentence) in corpus.sentences_with_doc() {
        for tok in &sentence.tokens {
            if !tok.is_punct() {
                net.ensure_node(&tok.lemma);
            }
        }
        for pair in sentence.tokens.windows(2) {
            let (left, right) = (&pair[0], &pair[1]);
            if left.is_punct() || right.is_punct() || left.lemma == right.lemma {
                continue;
            }
            let a = net.ensure_node(&left.lemma);
            let b = net.ensure_node(&right.lemma);
            net.add_weight(a, b, 1, Some(doc));
        }
    }
    net
}

/// Build the SVO network from extracted triplets. Each triplet contributes
/// one occurrence to each of its three undirected pairs (subject-verb,
/// verb-object, subject-object); pairs whose two lemmas coincide are skipped.
/// Pairs seen fewer than `min_weight` times are removed, surviving weights
/// are reduced by `min_weight - 1`, and nodes left without edges are dropped.
/// With `min_weight` 1 the raw counts pass through unchanged.
pub fn build_svo_network(
    triplets: &[SvoTriplet],
    doc_names: &[String],
    min_weight: u64,
) -> Result<LexicalNetwork> {
    if min_weight == 0 {
        return Err(Error::InvalidInput(
            "min_weight must be at least 1".to_string(),
        ));
    }
    let mut counts: BTreeMap<(String, String), (u64, BTreeSet<usize>)> = BTreeMap::new();
    for t in triplets {
        for (x, y) in [
            (&t.subject, &t.verb),
            (&t.verb, &t.object),
            (&t.subject, &t.object),
        ] {
            if x == y {
                continue;
            }
            let key = if x < y {
                (x.clone(), y.clone())
            } else {
                (y.clone(), x.clone())
            };
            let entry = counts.entry(key).or_default();
            entry.0 += 1;
            entry.1.insert(t.doc);
        }
    }

    let mut net = LexicalNetwork::with_doc_tracking(NetworkKind::Svo, doc_names.to_vec());
    for ((la, lb), (count, docs)) in counts {
        if count < min_weight {
            continue;
        }
        let a = net.ensure_node(&la);
        let b = net.ensure_node(&lb);
        net.add_weight(a, b, count - (min_weight - 1), None);
        for doc in docs {
            net.tag_document(a, b, doc);
        }
    }
    Ok(net)
}

/// Build the free-association network by merging cue/response directions
/// into undirected weighted edges. With `restrict_to`, only pairs whose both
/// endpoints are in the given vocabulary are kept.
pub fn build_fa_network(
    fa: &FreeAssociationData,
    restrict_to: Option<&HashSet<String>>,
) -> LexicalNetwork {
    let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();
    for pair in &fa.pairs {
        if let Some(vocab) = restrict_to {
            if !vocab.contains(&pair.cue) || !vocab.contains(&pair.response) {
                continue;
            }
        }
        let key = if pair.cue < pair.response {
            (pair.cue.clone(), pair.response.clone())
        } else {
            (pair.response.clone(), pair.cue.clone())
        };
        *counts.entry(key).or_default() += pair.count;
    }
    let mut net = LexicalNetwork::new(NetworkKind::Fa);
    for ((la, lb), count) in counts {
        let a = net.ensure_node(&la);
        let b = net.ensure_node(&lb);
        net.add_weight(a, b, count, None);
    }
    net
}

/// Induced subgraph on the given vocabulary, dropping nodes left isolated.
/// Weights, kind, and document tracking carry over; restricting twice to the
/// same vocabulary changes nothing.
pub fn restrict_network(net: &LexicalNetwork, vocab: &HashSet<String>) -> LexicalNetwork {
    let keep: Vec<_> = net
        .node_ids()
        .filter(|&v| vocab.contains(net.lemma(v)))
        .collect();
    net.induced(&keep, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDocCount {
    pub lemma_a: String,
    pub lemma_b: String,
    pub doc_count: usize,
    pub weight: u64,
}

/// Edges ranked by how many documents they appeared in (descending), ties
/// broken lexicographically by the lemma pair. Requires a network built with
/// document tracking.
pub fn pair_document_counts(net: &LexicalNetwork, top_k: usize) -> Result<Vec<PairDocCount>> {
    if !net.tracks_documents() {
        return Err(Error::InvalidInput(
            "network was built without document tracking".to_string(),
        ));
    }
    let mut rows: Vec<PairDocCount> = net
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let la = net.lemma(e.a);
            let lb = net.lemma(e.b);
            let (la, lb) = if la <= lb { (la, lb) } else { (lb, la) };
            PairDocCount {
                lemma_a: la.to_string(),
                lemma_b: lb.to_string(),
                doc_count: net.edge_docs(idx).map_or(0, |d| d.len()),
                weight: e.weight,
            }
        })
        .collect();
    rows.sort_by(|x, y| {
        y.doc_count
            .cmp(&x.doc_count)
            .then_with(|| (&x.lemma_a, &x.lemma_b).cmp(&(&y.lemma_a, &y.lemma_b)))
    });
    rows.truncate(top_k);
    Ok(rows)
}

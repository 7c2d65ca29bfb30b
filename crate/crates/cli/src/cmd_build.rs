//! `cognet build`: parse and normalize the corpus, construct the
//! co-occurrence, SVO, and free-association networks, and write them to the
//! analysis directory together with a build summary.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use cognet_core::ingest::{
    load_free_associations, normalize_lemmas, read_conllu_with, AnnotatedCorpus, ConlluOptions,
};
use cognet_core::netbuild::{
    build_co_network, build_fa_network, build_svo_network, extract_svo_triplets,
};
use cognet_core::stats::mean_sd;
use cognet_core::{Error, LexicalNetwork, SvoTagset};

use crate::report::{self, RunStamp};

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// CoNLL-U corpus files, read in the order given.
    #[arg(long, required = true, num_args = 1..)]
    pub corpus: Vec<PathBuf>,
    /// Free-association table (cue<TAB>response[<TAB>count]); its network is
    /// restricted to the corpus vocabulary.
    #[arg(long)]
    pub fa: Option<PathBuf>,
    /// Comma-separated placeholder names to merge into the shared pronoun
    /// lemma, alongside the built-in "he" and "she".
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub placeholders: Vec<String>,
    /// Keep SVO pairs observed at least this many times.
    #[arg(long, default_value_t = 2)]
    pub min_weight: u64,
    /// Treat each corpus file as one document named after the file,
    /// ignoring newdoc markers.
    #[arg(long)]
    pub one_doc_per_file: bool,
    /// Seed recorded in the outputs; the build itself draws no random
    /// numbers.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Analysis directory; networks and the build report land here.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct CorpusStats {
    documents: usize,
    sentences: usize,
    tokens: usize,
    words_per_document_mean: f64,
    words_per_document_sd: f64,
    vocabulary: usize,
}

#[derive(Debug, Serialize)]
struct NetworkStats {
    nodes: usize,
    edges: usize,
    total_weight: u64,
}

#[derive(Debug, Serialize)]
struct SvoStats {
    triplets: usize,
    object_tokens: u64,
    skipped_objects: u64,
}

#[derive(Debug, Serialize)]
struct FaStats {
    pairs: usize,
    dropped_self_pairs: u64,
}

#[derive(Debug, Serialize)]
struct BuildReport {
    #[serde(flatten)]
    stamp: RunStamp,
    corpus: CorpusStats,
    svo_extraction: SvoStats,
    networks: BTreeMap<String, NetworkStats>,
    fa_input: Option<FaStats>,
}

fn network_stats(net: &LexicalNetwork) -> NetworkStats {
    NetworkStats {
        nodes: net.node_count(),
        edges: net.edge_count(),
        total_weight: net.total_weight(),
    }
}

pub fn run(args: &BuildArgs) -> Result<()> {
    let config = report::config_map([
        ("corpus", report::path_list(&args.corpus)),
        (
            "fa",
            args.fa
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default(),
        ),
        ("placeholders", args.placeholders.join(",")),
        ("min_weight", args.min_weight.to_string()),
        ("one_doc_per_file", args.one_doc_per_file.to_string()),
        ("seed", args.seed.to_string()),
    ]);
    let stamp = RunStamp::new("cognet/build/1", args.seed, &config);
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;

    let placeholders: HashSet<String> = args
        .placeholders
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| p.to_lowercase())
        .collect();

    let opts = ConlluOptions {
        one_doc_per_file: args.one_doc_per_file,
        ..ConlluOptions::default()
    };
    let mut corpus = AnnotatedCorpus { documents: Vec::new() };
    for path in &args.corpus {
        let mut part = read_conllu_with(path, &opts)?;
        if args.one_doc_per_file {
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            for doc in &mut part.documents {
                doc.id = stem.clone();
            }
        }
        corpus.documents.extend(part.documents);
    }
    let mut seen_ids = HashSet::new();
    for doc in &corpus.documents {
        if !seen_ids.insert(doc.id.as_str()) {
            return Err(Error::InvalidInput(format!(
                "document id {:?} appears more than once across the corpus files",
                doc.id
            ))
            .into());
        }
    }
    normalize_lemmas(&mut corpus, &placeholders);
    let doc_names: Vec<String> = corpus.documents.iter().map(|d| d.id.clone()).collect();
    let words: Vec<f64> = corpus
        .documents
        .iter()
        .map(|d| d.word_count() as f64)
        .collect();
    let (words_mean, words_sd) = mean_sd(&words);
    let vocabulary = corpus.vocabulary();

    let co = build_co_network(&corpus);
    let extraction = extract_svo_triplets(&corpus, &SvoTagset::default());
    let svo = build_svo_network(&extraction.triplets, &doc_names, args.min_weight)?;

    let params = serde_json::to_value(&config).expect("config serializes");
    co.write_files(&args.out.join("co"), params.clone())?;
    svo.write_files(&args.out.join("svo"), params.clone())?;

    let mut networks = BTreeMap::new();
    networks.insert("co".to_string(), network_stats(&co));
    networks.insert("svo".to_string(), network_stats(&svo));

    let fa_input = match &args.fa {
        Some(path) => {
            let fa = load_free_associations(path, &placeholders)?;
            let fa_net = build_fa_network(&fa, Some(&vocabulary));
            fa_net.write_files(&args.out.join("fa"), params)?;
            networks.insert("fa".to_string(), network_stats(&fa_net));
            Some(FaStats {
                pairs: fa.pairs.len(),
                dropped_self_pairs: fa.dropped_self_pairs,
            })
        }
        None => None,
    };

    let report = BuildReport {
        stamp,
        corpus: CorpusStats {
            documents: corpus.documents.len(),
            sentences: corpus.sentence_count(),
            tokens: corpus.token_count(),
            words_per_document_mean: words_mean,
            words_per_document_sd: words_sd,
            vocabulary: vocabulary.len(),
        },
        svo_extraction: SvoStats {
            triplets: extraction.triplets.len(),
            object_tokens: extraction.object_tokens,
            skipped_objects: extraction.skipped_objects,
        },
        networks,
        fa_input,
    };
    report::write_json(&args.out.join("build.json"), &report)
}

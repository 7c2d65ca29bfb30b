//! Lexical network analysis for dependency-annotated text corpora.
//!
//! This crate turns a CoNLL-U corpus plus affect lexicons into three kinds of
//! lexical networks and runs structural and emotional analyses on them:
//!
//! * [`ingest`] reads CoNLL-U corpora, valence/emotion lexicons, stopword
//!   lists, and free-association norms.
//! * [`netbuild`] constructs co-occurrence, subject-verb-object, and
//!   free-association networks over lemmas.
//! * [`signed`] assigns valence-derived signs to edges and runs a triangle
//!   census with a degree-of-balance summary.
//! * [`nullmodels`] provides degree-preserving rewiring, valence label
//!   shuffles, and a strength-preserving soft configuration model.
//! * [`metrics`] covers closeness centrality, rank drops against null
//!   ensembles, network degeneracy, heavy-tail fits of the strength
//!   distribution, hub shrinkage, and divisive community detection.
//! * [`emoprofile`] profiles the emotions elicited by a word's network
//!   neighborhood against lexicon-sampling nulls.
//! * [`stats`] holds the small statistical toolbox shared by the above.
//!
//! All randomized routines take an explicit seed and draw from per-realization
//! ChaCha streams (see [`rng`]), so every analysis is reproducible and
//! independent of worker-thread count.

pub mod emoprofile;
pub mod error;
pub mod graph;
pub mod ingest;
pub mod metrics;
pub mod netbuild;
pub mod nullmodels;
pub mod rng;
pub mod signed;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{Edge, LexicalNetwork, NetworkKind, NodeId};
pub use ingest::{
    AffectLexicons, AnnotatedCorpus, AnnotatedToken, Document, Emotion, EmotionSet,
    FreeAssociationData, Sentence, Valence,
};
pub use netbuild::{SvoExtraction, SvoTagset, SvoTriplet};
pub use nullmodels::{FittedSoftCm, NullEnsembleSpec, NullKind, SoftCmOptions};
pub use signed::{Sign, SignedNetwork, TriadCensus};
pub use stats::TwoProportionResult;

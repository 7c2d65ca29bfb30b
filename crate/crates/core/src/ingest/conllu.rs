//! CoNLL-U reading and writing.
//!
//! The reader keeps the four columns the analyses need (lemma, UPOS, head,
//! deprel) plus the surface form. Multiword-token ranges (`4-5`) and empty
//! nodes (`5.1`) are skipped; token ids must otherwise be sequential. Every
//! sentence is validated to be a proper dependency tree: exactly one root,
//! heads in range, no cycles.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ingest::{AnnotatedCorpus, AnnotatedToken, Document, Sentence};

#[derive(Debug, Clone)]
pub struct ConlluOptions {
    /// Comment keyword that starts a new document (`# newdoc ...`).
    pub doc_comment_key: String,
    /// Ignore document comments and treat the whole file as one document.
    pub one_doc_per_file: bool,
}

impl Default for ConlluOptions {
    fn default() -> Self {
        ConlluOptions {
            doc_comment_key: "newdoc".to_string(),
            one_doc_per_file: false,
        }
    }
}

/// Read a CoNLL-U file with default options.
pub fn read_conllu(path: &Path) -> Result<AnnotatedCorpus> {
    read_conllu_with(path, &ConlluOptions::default())
}

pub fn read_conllu_with(path: &Path, opts: &ConlluOptions) -> Result<AnnotatedCorpus> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_conllu(&text, &path.display().to_string(), opts)
}

/// Parse CoNLL-U text. `source` names the input in error messages.
pub fn parse_conllu(text: &str, source: &str, opts: &ConlluOptions) -> Result<AnnotatedCorpus> {
    let mut documents: Vec<Document> = Vec::new();
    let mut current_doc: Option<Document> = None;
    let mut tokens: Vec<AnnotatedToken> = Vec::new();
    let mut sentence_no = 0usize; // global, 1-based once incremented

    let flush_sentence = |tokens: &mut Vec<AnnotatedToken>,
                              current_doc: &mut Option<Document>,
                              sentence_no: &mut usize|
     -> Result<()> {
        if tokens.is_empty() {
            return Ok(());
        }
        *sentence_no += 1;
        let sentence = Sentence {
            tokens: std::mem::take(tokens),
        };
        validate_tree(&sentence, *sentence_no)?;
        current_doc
            .get_or_insert_with(|| Document {
                id: "doc_1".to_string(),
                sentences: Vec::new(),
            })
            .sentences
            .push(sentence);
        Ok(())
    };

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            flush_sentence(&mut tokens, &mut current_doc, &mut sentence_no)?;
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim_start();
            if !opts.one_doc_per_file && is_doc_comment(comment, &opts.doc_comment_key) {
                if !tokens.is_empty() {
                    return Err(Error::parse(
                        source,
                        lineno,
                        "document boundary inside a sentence",
                    ));
                }
                if let Some(doc) = current_doc.take() {
                    documents.push(doc);
                }
                let id = comment
                    .strip_prefix(&opts.doc_comment_key)
                    .and_then(|rest| rest.trim_start().strip_prefix("id"))
                    .and_then(|rest| rest.trim_start().strip_prefix('='))
                    .map(|rest| rest.trim().to_string())
                    .filter(|id| !id.is_empty())
                    .unwrap_or_else(|| format!("doc_{}", documents.len() + 1));
                current_doc = Some(Document {
                    id,
                    sentences: Vec::new(),
                });
            }
            continue;
        }

        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 10 {
            return Err(Error::parse(
                source,
                lineno,
                format!("expected 10 tab-separated columns, got {}", fields.len()),
            ));
        }
        let id_field = fields[0];
        if id_field.contains('-') || id_field.contains('.') {
            // Multiword-token range or empty node; not part of the basic tree.
            continue;
        }
        let id: usize = id_field
            .parse()
            .map_err(|_| Error::parse(source, lineno, format!("bad token id {id_field:?}")))?;
        if id != tokens.len() + 1 {
            return Err(Error::parse(
                source,
                lineno,
                format!("token id {id} out of sequence (expected {})", tokens.len() + 1),
            ));
        }
        let surface = fields[1].to_string();
        let lemma = if fields[2] == "_" || fields[2].is_empty() {
            // Some corpora leave the lemma unannotated; fall back to the form.
            surface.clone()
        } else {
            fields[2].to_string()
        };
        if lemma.is_empty() {
            return Err(Error::parse(source, lineno, "empty lemma and form"));
        }
        let head: usize = fields[6]
            .parse()
            .map_err(|_| Error::parse(source, lineno, format!("bad head index {:?}", fields[6])))?;
        tokens.push(AnnotatedToken {
            surface,
            lemma,
            upos: fields[3].to_string(),
            head,
            deprel: fields[7].to_string(),
        });
    }
    flush_sentence(&mut tokens, &mut current_doc, &mut sentence_no)?;
    if let Some(doc) = current_doc.take() {
        documents.push(doc);
    }

    if documents.iter().all(|d| d.sentences.is_empty()) {
        return Err(Error::InvalidInput(format!("{source}: empty corpus")));
    }
    Ok(AnnotatedCorpus { documents })
}

fn is_doc_comment(comment: &str, key: &str) -> bool {
    comment == key
        || comment
            .strip_prefix(key)
            .is_some_and(|rest| rest.starts_with(' ') || rest.starts_with('\t'))
}

/// Check that the head pointers of `sentence` form a tree. `sentence_no` is
/// the global 1-based sentence number used in error messages.
fn validate_tree(sentence: &Sentence, sentence_no: usize) -> Result<()> {
    let n = sentence.len();
    let mut roots = 0usize;
    for (i, tok) in sentence.tokens.iter().enumerate() {
        if tok.head > n {
            return Err(Error::InvalidInput(format!(
                "sentence {sentence_no}: token {} has head {} but the sentence has {n} tokens",
                i + 1,
                tok.head
            )));
        }
        if tok.head == i + 1 {
            return Err(Error::InvalidInput(format!(
                "sentence {sentence_no}: token {} is its own head",
                i + 1
            )));
        }
        if tok.head == 0 {
            roots += 1;
        }
    }
    if roots != 1 {
        return Err(Error::InvalidInput(format!(
            "sentence {sentence_no}: {roots} roots (expected exactly 1)"
        )));
    }
    // Every token must reach the root without revisiting a node.
    for start in 0..n {
        let mut seen = HashSet::new();
        let mut cur = start + 1;
        while cur != 0 {
            if !seen.insert(cur) {
                return Err(Error::InvalidInput(format!(
                    "sentence {sentence_no}: cycle through token {cur}"
                )));
            }
            cur = sentence.tokens[cur - 1].head;
        }
    }
    Ok(())
}

/// Serialize a corpus back to CoNLL-U. Unstored columns are written as `_`.
pub fn write_conllu(corpus: &AnnotatedCorpus) -> String {
    let mut out = String::new();
    for doc in &corpus.documents {
        out.push_str(&format!("# newdoc id = {}\n", doc.id));
        for sentence in &doc.sentences {
            for (i, tok) in sentence.tokens.iter().enumerate() {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t_\t_\t{}\t{}\t_\t_\n",
                    i + 1,
                    tok.surface,
                    tok.lemma,
                    tok.upos,
                    tok.head,
                    tok.deprel
                ));
            }
            out.push('\n');
        }
    }
    out
}

//! Free-association norms: cue/response pairs with optional counts.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ingest::normalize_lemma;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaPair {
    pub cue: String,
    pub response: String,
    pub count: u64,
}

#[derive(Debug, Clone, Default)]
pub struct FreeAssociationData {
    pub pairs: Vec<FaPair>,
    /// Rows whose cue and response collapsed to the same lemma after
    /// normalization. They carry no network information and are dropped.
    pub dropped_self_pairs: u64,
}

/// Read a `cue<TAB>response[<TAB>count]` table. Both columns go through the
/// same lemma normalization as the corpus (lowercase plus pronoun merging),
/// so the resulting vocabulary lines up with corpus-built networks.
pub fn load_free_associations(
    path: &Path,
    placeholders: &HashSet<String>,
) -> Result<FreeAssociationData> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let source = path.display().to_string();
    let mut data = FreeAssociationData::default();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 2 {
            return Err(Error::parse(
                &source,
                lineno,
                "expected cue<TAB>response[<TAB>count]",
            ));
        }
        let cue = normalize_lemma(fields[0].trim(), placeholders);
        let response = normalize_lemma(fields[1].trim(), placeholders);
        if cue.is_empty() || response.is_empty() {
            return Err(Error::parse(&source, lineno, "empty cue or response"));
        }
        let count: u64 = match fields.get(2) {
            Some(raw) => raw.trim().parse().map_err(|_| {
                Error::parse(&source, lineno, format!("bad count {raw:?}"))
            })?,
            None => 1,
        };
        if count == 0 {
            return Err(Error::parse(&source, lineno, "zero count"));
        }
        if cue == response {
            data.dropped_self_pairs += 1;
            continue;
        }
        data.pairs.push(FaPair {
            cue,
            response,
            count,
        });
    }
    Ok(data)
}

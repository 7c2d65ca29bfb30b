//! Undirected weighted lexical networks over lemmas.
//!
//! [`LexicalNetwork`] is the shared representation for all three network
//! kinds built by [`crate::netbuild`]. Nodes are lemmas with dense integer
//! ids, edges are undirected with positive integer weights, and networks
//! built from a corpus can track which documents contributed to each edge.
//!
//! Networks serialize to a two-file on-disk form: a tab-separated edge list
//! (`lemma_a<TAB>lemma_b<TAB>weight[<TAB>doc,doc,...]`, rows sorted by the
//! lemma pair) plus a JSON header carrying the kind, isolated nodes, document
//! names, and the parameters the network was built with.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Which construction produced a network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NetworkKind {
    /// Sentence-level co-occurrence of adjacent words.
    Co,
    /// Subject-verb-object triplet projection.
    Svo,
    /// Free-association cue/response norms.
    Fa,
}

impl fmt::Display for NetworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NetworkKind::Co => "co",
            NetworkKind::Svo => "svo",
            NetworkKind::Fa => "fa",
        };
        f.write_str(s)
    }
}

/// One undirected edge. `a < b` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: NodeId,
    pub b: NodeId,
    pub weight: u64,
}

impl Edge {
    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: NodeId) -> NodeId {
        if v == self.a {
            self.b
        } else {
            assert_eq!(v, self.b, "node {v} is not an endpoint");
            self.a
        }
    }
}

#[derive(Debug, Clone)]
pub struct LexicalNetwork {
    kind: NetworkKind,
    lemmas: Vec<String>,
    index: HashMap<String, NodeId>,
    /// Per node: neighbor id -> edge index, ordered by neighbor id.
    adj: Vec<BTreeMap<NodeId, usize>>,
    edges: Vec<Edge>,
    /// Parallel to `edges` when document tracking is on.
    edge_docs: Option<Vec<BTreeSet<usize>>>,
    doc_names: Vec<String>,
}

impl LexicalNetwork {
    pub fn new(kind: NetworkKind) -> Self {
        LexicalNetwork {
            kind,
            lemmas: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            edges: Vec::new(),
            edge_docs: None,
            doc_names: Vec::new(),
        }
    }

    /// Like [`LexicalNetwork::new`] but recording, per edge, which of the
    /// named documents contributed occurrences to it.
    pub fn with_doc_tracking(kind: NetworkKind, doc_names: Vec<String>) -> Self {
        let mut net = LexicalNetwork::new(kind);
        net.edge_docs = Some(Vec::new());
        net.doc_names = doc_names;
        net
    }

    pub fn kind(&self) -> NetworkKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.lemmas.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn tracks_documents(&self) -> bool {
        self.edge_docs.is_some()
    }

    pub fn doc_names(&self) -> &[String] {
        &self.doc_names
    }

    /// Id for `lemma`, inserting a fresh isolated node if absent.
    pub fn ensure_node(&mut self, lemma: &str) -> NodeId {
        if let Some(&id) = self.index.get(lemma) {
            return id;
        }
        let id = self.lemmas.len();
        self.lemmas.push(lemma.to_string());
        self.index.insert(lemma.to_string(), id);
        self.adj.push(BTreeMap::new());
        id
    }

    pub fn node(&self, lemma: &str) -> Option<NodeId> {
        self.index.get(lemma).copied()
    }

    pub fn lemma(&self, id: NodeId) -> &str {
        &self.lemmas[id]
    }

    pub fn lemmas(&self) -> &[String] {
        &self.lemmas
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        0..self.lemmas.len()
    }

    /// Add `weight` to the edge between `a` and `b`, creating it if needed.
    /// Self-loops are forbidden by construction.
    pub fn add_weight(&mut self, a: NodeId, b: NodeId, weight: u64, doc: Option<usize>) {
        assert!(a != b, "self-loops are not allowed (node {a})");
        assert!(weight > 0, "edges carry positive weight");
        let idx = match self.adj[a].get(&b) {
            Some(&idx) => {
                self.edges[idx].weight += weight;
                idx
            }
            None => {
                let idx = self.edges.len();
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                self.edges.push(Edge {
                    a: lo,
                    b: hi,
                    weight,
                });
                self.adj[a].insert(b, idx);
                self.adj[b].insert(a, idx);
                if let Some(docs) = &mut self.edge_docs {
                    docs.push(BTreeSet::new());
                }
                idx
            }
        };
        if let Some(doc) = doc {
            if let Some(docs) = &mut self.edge_docs {
                docs[idx].insert(doc);
            }
        }
    }

    /// Record that an existing edge was observed in document `doc` without
    /// touching its weight. Panics if the edge is missing or the network does
    /// not track documents.
    pub fn tag_document(&mut self, a: NodeId, b: NodeId, doc: usize) {
        let idx = self.adj[a]
            .get(&b)
            .copied()
            .expect("tag_document requires an existing edge");
        let docs = self
            .edge_docs
            .as_mut()
            .expect("tag_document requires document tracking");
        docs[idx].insert(doc);
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, a: NodeId, b: NodeId) -> Option<&Edge> {
        self.adj[a].get(&b).map(|&idx| &self.edges[idx])
    }

    pub fn edge_index_between(&self, a: NodeId, b: NodeId) -> Option<usize> {
        self.adj[a].get(&b).copied()
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        self.adj[a].contains_key(&b)
    }

    /// Documents recorded for edge `idx`, if tracking is on.
    pub fn edge_docs(&self, idx: usize) -> Option<&BTreeSet<usize>> {
        self.edge_docs.as_ref().map(|d| &d[idx])
    }

    /// Neighbors of `v` in ascending id order, with the connecting edge.
    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, &Edge)> {
        self.adj[v].iter().map(move |(&n, &idx)| (n, &self.edges[idx]))
    }

    pub fn neighbor_ids(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adj[v].keys().copied()
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    /// Sum of incident edge weights.
    pub fn strength(&self, v: NodeId) -> u64 {
        self.adj[v].values().map(|&idx| self.edges[idx].weight).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.node_ids().map(|v| self.degree(v)).collect()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Connected components as sorted node lists, ordered by descending size
    /// and then by smallest contained node id, so the first entry is "the"
    /// giant component under a deterministic tie-break.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut comps: Vec<Vec<NodeId>> = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.clear();
            queue.push(start);
            let mut comp = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.neighbor_ids(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `keep` (any order, duplicates ignored). Node ids
    /// are reassigned by ascending old id; document tracking and weights are
    /// preserved. With `drop_isolates`, nodes left without edges are omitted.
    pub fn induced(&self, keep: &[NodeId], drop_isolates: bool) -> LexicalNetwork {
        let keep_set: BTreeSet<NodeId> = keep.iter().copied().collect();
        let surviving: Vec<&Edge> = self
            .edges
            .iter()
            .filter(|e| keep_set.contains(&e.a) && keep_set.contains(&e.b))
            .collect();
        let nodes: Vec<NodeId> = if drop_isolates {
            let mut touched: BTreeSet<NodeId> = BTreeSet::new();
            for e in &surviving {
                touched.insert(e.a);
                touched.insert(e.b);
            }
            touched.into_iter().collect()
        } else {
            keep_set.iter().copied().collect()
        };

        let mut out = if self.tracks_documents() {
            LexicalNetwork::with_doc_tracking(self.kind, self.doc_names.clone())
        } else {
            LexicalNetwork::new(self.kind)
        };
        for &v in &nodes {
            out.ensure_node(self.lemma(v));
        }
        for (idx, e) in self.edges.iter().enumerate() {
            if !(keep_set.contains(&e.a) && keep_set.contains(&e.b)) {
                continue;
            }
            let a = out.node(self.lemma(e.a)).expect("endpoint was added");
            let b = out.node(self.lemma(e.b)).expect("endpoint was added");
            out.add_weight(a, b, e.weight, None);
            if let (Some(docs), Some(src)) = (&mut out.edge_docs, &self.edge_docs) {
                let new_idx = out.adj[a][&b];
                docs[new_idx] = src[idx].clone();
            }
        }
        out
    }

    /// Copy with the same nodes and edges but all weights 1 and no document
    /// tracking. Null-model rewiring operates on these.
    pub fn unweighted_copy(&self) -> LexicalNetwork {
        let mut out = LexicalNetwork::new(self.kind);
        for lemma in &self.lemmas {
            out.ensure_node(lemma);
        }
        for e in &self.edges {
            out.add_weight(e.a, e.b, 1, None);
        }
        out
    }

    /// Write the edge-list/header pair `{base}.edges.tsv` and
    /// `{base}.meta.json`. `params` documents how the network was built and
    /// is echoed verbatim into the header.
    pub fn write_files(&self, base: &Path, params: serde_json::Value) -> Result<()> {
        let edges_path = with_suffix(base, "edges.tsv");
        let meta_path = with_suffix(base, "meta.json");

        let mut rows: Vec<(&str, &str, u64, Option<&BTreeSet<usize>>)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(idx, e)| {
                let la = self.lemma(e.a);
                let lb = self.lemma(e.b);
                let (la, lb) = if la <= lb { (la, lb) } else { (lb, la) };
                (la, lb, e.weight, self.edge_docs(idx))
            })
            .collect();
        rows.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));

        let mut buf = Vec::new();
        for (la, lb, w, docs) in rows {
            match docs {
                Some(docs) => {
                    let list: Vec<String> = docs.iter().map(|d| d.to_string()).collect();
                    writeln!(buf, "{la}\t{lb}\t{w}\t{}", list.join(",")).expect("vec write");
                }
                None => writeln!(buf, "{la}\t{lb}\t{w}").expect("vec write"),
            }
        }
        std::fs::write(&edges_path, buf).map_err(|e| Error::io(edges_path.display().to_string(), e))?;

        let mut isolates: Vec<String> = self
            .node_ids()
            .filter(|&v| self.degree(v) == 0)
            .map(|v| self.lemma(v).to_string())
            .collect();
        isolates.sort();
        let meta = NetworkMeta {
            schema: META_SCHEMA.to_string(),
            kind: self.kind,
            node_count: self.node_count(),
            edge_count: self.edge_count(),
            tracks_documents: self.tracks_documents(),
            isolates,
            doc_names: self.doc_names.clone(),
            params,
        };
        let json = serde_json::to_string_pretty(&meta).expect("meta serializes");
        std::fs::write(&meta_path, json + "\n").map_err(|e| Error::io(meta_path.display().to_string(), e))
    }

    /// Read a network written by [`LexicalNetwork::write_files`]. Node ids are
    /// assigned by first appearance in the sorted edge list, then isolates in
    /// header order, which makes loading deterministic.
    pub fn read_files(base: &Path) -> Result<LexicalNetwork> {
        let edges_path = with_suffix(base, "edges.tsv");
        let meta_path = with_suffix(base, "meta.json");

        let meta_text = std::fs::read_to_string(&meta_path)
            .map_err(|e| Error::io(meta_path.display().to_string(), e))?;
        let meta: NetworkMeta = serde_json::from_str(&meta_text)
            .map_err(|e| Error::parse(meta_path.display().to_string(), 1, e.to_string()))?;
        if meta.schema != META_SCHEMA {
            return Err(Error::InvalidInput(format!(
                "{}: unsupported network schema {:?}",
                meta_path.display(),
                meta.schema
            )));
        }

        let mut net = if meta.tracks_documents {
            LexicalNetwork::with_doc_tracking(meta.kind, meta.doc_names.clone())
        } else {
            LexicalNetwork::new(meta.kind)
        };

        let text = std::fs::read_to_string(&edges_path)
            .map_err(|e| Error::io(edges_path.display().to_string(), e))?;
        let path_str = edges_path.display().to_string();
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let want = if meta.tracks_documents { 4 } else { 3 };
            if fields.len() != want {
                return Err(Error::parse(
                    &path_str,
                    lineno,
                    format!("expected {want} tab-separated fields, got {}", fields.len()),
                ));
            }
            let (la, lb) = (fields[0], fields[1]);
            if la.is_empty() || lb.is_empty() {
                return Err(Error::parse(&path_str, lineno, "empty lemma"));
            }
            if la == lb {
                return Err(Error::parse(&path_str, lineno, "self-loop edge"));
            }
            let weight: u64 = fields[2].parse().map_err(|_| {
                Error::parse(&path_str, lineno, format!("bad weight {:?}", fields[2]))
            })?;
            if weight == 0 {
                return Err(Error::parse(&path_str, lineno, "zero-weight edge"));
            }
            let a = net.ensure_node(la);
            let b = net.ensure_node(lb);
            if net.has_edge(a, b) {
                return Err(Error::parse(
                    &path_str,
                    lineno,
                    format!("duplicate edge {la}\t{lb}"),
                ));
            }
            net.add_weight(a, b, weight, None);
            if meta.tracks_documents {
                let idx = net.edges.len() - 1;
                let docs = net.edge_docs.as_mut().expect("tracking enabled");
                for part in fields[3].split(',').filter(|p| !p.is_empty()) {
                    let d: usize = part.parse().map_err(|_| {
                        Error::parse(&path_str, lineno, format!("bad document index {part:?}"))
                    })?;
                    if d >= meta.doc_names.len() {
                        return Err(Error::parse(
                            &path_str,
                            lineno,
                            format!("document index {d} out of range"),
                        ));
                    }
                    docs[idx].insert(d);
                }
            }
        }
        for lemma in &meta.isolates {
            net.ensure_node(lemma);
        }
        if net.node_count() != meta.node_count {
            return Err(Error::InvalidInput(format!(
                "{}: header says {} nodes but edge list yields {}",
                meta_path.display(),
                meta.node_count,
                net.node_count()
            )));
        }
        if net.edge_count() != meta.edge_count {
            return Err(Error::InvalidInput(format!(
                "{}: header says {} edges but edge list yields {}",
                meta_path.display(),
                meta.edge_count,
                net.edge_count()
            )));
        }
        Ok(net)
    }
}

const META_SCHEMA: &str = "cognet-network/1";

/// JSON header accompanying an edge-list file.
#[derive(Debug, Serialize, Deserialize)]
pub struct NetworkMeta {
    pub schema: String,
    pub kind: NetworkKind,
    pub node_count: usize,
    pub edge_count: usize,
    pub tracks_documents: bool,
    pub isolates: Vec<String>,
    pub doc_names: Vec<String>,
    pub params: serde_json::Value,
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut name = base
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    name.push('.');
    name.push_str(suffix);
    base.with_file_name(name)
}

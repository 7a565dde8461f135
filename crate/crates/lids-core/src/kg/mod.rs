//! RDF-star data model: URIs, triples, certainty annotations, named graphs,
//! an in-memory pattern-matchable store, and TriG-star serialization.
//!
//! Every node is a ground URI; there are no blank nodes. Dataset and library
//! triples live in the default graph while each pipeline occupies exactly one
//! named graph. Similarity and linker edges may carry a certainty score in
//! `[0, 1]`, serialized as an RDF-star quoted-triple annotation.

pub mod trig;
pub mod uri;
pub mod vocab;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use uri::{make_resource_uri, Uri};

/// A typed literal value. Doubles are kept finite by construction of the
/// builders; serialization uses the shortest round-tripping decimal form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum Literal {
    Str(String),
    Int(i64),
    Double(f64),
    Bool(bool),
}

impl Literal {
    fn rank(&self) -> u8 {
        match self {
            Literal::Str(_) => 0,
            Literal::Int(_) => 1,
            Literal::Double(_) => 2,
            Literal::Bool(_) => 3,
        }
    }

    /// Lexical form as it appears inside the serialized quotes.
    pub fn lexical(&self) -> String {
        match self {
            Literal::Str(s) => s.clone(),
            Literal::Int(i) => i.to_string(),
            Literal::Double(d) => d.to_string(),
            Literal::Bool(b) => b.to_string(),
        }
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Literal {}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Literal::Str(a), Literal::Str(b)) => a.cmp(b),
            (Literal::Int(a), Literal::Int(b)) => a.cmp(b),
            (Literal::Double(a), Literal::Double(b)) => a.total_cmp(b),
            (Literal::Bool(a), Literal::Bool(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}
impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Object position of a triple: either a node URI or a literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Object {
    Uri(Uri),
    Literal(Literal),
}

impl Object {
    pub fn str(s: impl Into<String>) -> Self {
        Object::Literal(Literal::Str(s.into()))
    }
    pub fn int(i: i64) -> Self {
        Object::Literal(Literal::Int(i))
    }
    pub fn double(d: f64) -> Self {
        Object::Literal(Literal::Double(d))
    }
    pub fn as_uri(&self) -> Option<&Uri> {
        match self {
            Object::Uri(u) => Some(u),
            Object::Literal(_) => None,
        }
    }
    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Object::Uri(_) => None,
            Object::Literal(l) => Some(l),
        }
    }
}

impl From<Uri> for Object {
    fn from(u: Uri) -> Self {
        Object::Uri(u)
    }
}

/// A ground subject–predicate–object atom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub subject: Uri,
    pub predicate: Uri,
    pub object: Object,
}

impl Triple {
    pub fn new(subject: Uri, predicate: Uri, object: impl Into<Object>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

/// A triple plus its optional certainty annotation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotatedTriple {
    pub triple: Triple,
    pub certainty: Option<f64>,
}

/// Graph selector for pattern matching.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum GraphPattern {
    /// Match in every graph.
    #[default]
    Any,
    /// Match only in the default graph.
    Default,
    /// Match only in the given named graph.
    Named(Uri),
}

/// A triple pattern; `None` positions are wildcards.
#[derive(Debug, Clone, Default)]
pub struct Pattern {
    pub subject: Option<Uri>,
    pub predicate: Option<Uri>,
    pub object: Option<Object>,
    pub graph: GraphPattern,
}

impl Pattern {
    pub fn any() -> Self {
        Pattern::default()
    }
    pub fn with_subject(mut self, s: Uri) -> Self {
        self.subject = Some(s);
        self
    }
    pub fn with_predicate(mut self, p: Uri) -> Self {
        self.predicate = Some(p);
        self
    }
    pub fn with_object(mut self, o: impl Into<Object>) -> Self {
        self.object = Some(o.into());
        self
    }
    pub fn in_graph(mut self, g: GraphPattern) -> Self {
        self.graph = g;
        self
    }

    fn matches(&self, t: &Triple) -> bool {
        self.subject.as_ref().is_none_or(|s| *s == t.subject)
            && self.predicate.as_ref().is_none_or(|p| *p == t.predicate)
            && self.object.as_ref().is_none_or(|o| *o == t.object)
    }
}

/// One match result: the graph the triple lives in (None = default graph)
/// plus the annotated triple.
pub type Match = (Option<Uri>, AnnotatedTriple);

type TripleSet = BTreeMap<Triple, Option<f64>>;

/// In-memory triple store with one default graph and any number of named
/// graphs. Construction is single-writer; a built store is freely shared
/// across threads for read-only matching.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GraphStore {
    default_graph: TripleSet,
    named_graphs: BTreeMap<Uri, TripleSet>,
}

impl GraphStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Idempotent set insert. Re-inserting a triple overwrites its certainty
    /// when a new score is given and keeps the old one otherwise.
    pub fn add(&mut self, graph: Option<&Uri>, triple: Triple, certainty: Option<f64>) {
        let set = match graph {
            None => &mut self.default_graph,
            Some(g) => self.named_graphs.entry(g.clone()).or_default(),
        };
        let slot = set.entry(triple).or_insert(None);
        if certainty.is_some() {
            *slot = certainty;
        }
    }

    pub fn add_default(&mut self, triple: Triple) {
        self.add(None, triple, None);
    }

    /// Ensure a named graph exists even if it holds no triples yet.
    pub fn ensure_named_graph(&mut self, graph: &Uri) {
        self.named_graphs.entry(graph.clone()).or_default();
    }

    /// All matches in deterministic order: default graph first, then named
    /// graphs by IRI; within a graph triples sort by (subject, predicate,
    /// object).
    pub fn match_pattern(&self, pattern: &Pattern) -> Vec<Match> {
        let mut out = Vec::new();
        let scan = |set: &TripleSet, graph: Option<&Uri>, out: &mut Vec<Match>| {
            for (t, c) in set {
                if pattern.matches(t) {
                    out.push((
                        graph.cloned(),
                        AnnotatedTriple {
                            triple: t.clone(),
                            certainty: *c,
                        },
                    ));
                }
            }
        };
        match &pattern.graph {
            GraphPattern::Any => {
                scan(&self.default_graph, None, &mut out);
                for (g, set) in &self.named_graphs {
                    scan(set, Some(g), &mut out);
                }
            }
            GraphPattern::Default => scan(&self.default_graph, None, &mut out),
            GraphPattern::Named(g) => {
                if let Some(set) = self.named_graphs.get(g) {
                    scan(set, Some(g), &mut out);
                }
            }
        }
        out
    }

    /// Names of all named graphs in sorted order.
    pub fn graph_names(&self) -> impl Iterator<Item = &Uri> {
        self.named_graphs.keys()
    }

    pub fn default_graph(&self) -> impl Iterator<Item = (&Triple, Option<f64>)> {
        self.default_graph.iter().map(|(t, c)| (t, *c))
    }

    pub fn named_graph(&self, g: &Uri) -> Option<impl Iterator<Item = (&Triple, Option<f64>)>> {
        self.named_graphs.get(g).map(|s| s.iter().map(|(t, c)| (t, *c)))
    }

    pub fn len(&self) -> usize {
        self.default_graph.len() + self.named_graphs.values().map(|s| s.len()).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Union another store into this one. Used to merge the outputs of
    /// independent parallel builders into a single owner.
    pub fn merge(&mut self, other: GraphStore) {
        for (t, c) in other.default_graph {
            self.add(None, t, c);
        }
        for (g, set) in other.named_graphs {
            for (t, c) in set {
                self.add(Some(&g), t, c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uri(s: &str) -> Uri {
        Uri::new(format!("http://kglids.org/resource/{s}")).unwrap()
    }

    fn triple(s: &str, p: &str, o: &str) -> Triple {
        Triple::new(uri(s), vocab::term(p), Object::Uri(uri(o)))
    }

    #[test]
    fn insert_is_idempotent() {
        let mut store = GraphStore::new();
        store.add(None, triple("a", "p", "b"), None);
        store.add(None, triple("a", "p", "b"), None);
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn certainty_overwrites() {
        let mut store = GraphStore::new();
        store.add(None, triple("a", "p", "b"), Some(0.93));
        store.add(None, triple("a", "p", "b"), Some(0.95));
        let hits = store.match_pattern(&Pattern::any());
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].1.certainty, Some(0.95));
    }

    #[test]
    fn named_graph_is_isolated() {
        let mut store = GraphStore::new();
        let g = uri("pipeline1");
        store.add(Some(&g), triple("a", "p", "b"), None);
        assert_eq!(
            store
                .match_pattern(&Pattern::any().in_graph(GraphPattern::Default))
                .len(),
            0
        );
        assert_eq!(
            store
                .match_pattern(&Pattern::any().in_graph(GraphPattern::Named(g)))
                .len(),
            1
        );
    }

    #[test]
    fn ground_pattern_unique_hit() {
        let mut store = GraphStore::new();
        store.add(None, triple("a", "p", "b"), None);
        store.add(None, triple("a", "p", "c"), None);
        let pat = Pattern::any()
            .with_subject(uri("a"))
            .with_predicate(vocab::term("p"))
            .with_object(Object::Uri(uri("b")));
        assert_eq!(store.match_pattern(&pat).len(), 1);
    }

    #[test]
    fn empty_store_empty_match() {
        assert!(GraphStore::new().match_pattern(&Pattern::any()).is_empty());
    }

    #[test]
    fn match_order_is_deterministic() {
        let mut store = GraphStore::new();
        let g1 = uri("g1");
        let g2 = uri("g2");
        store.add(Some(&g2), triple("z", "p", "x"), None);
        store.add(Some(&g1), triple("a", "p", "x"), None);
        store.add(None, triple("m", "p", "x"), None);
        let hits = store.match_pattern(&Pattern::any());
        let graphs: Vec<Option<String>> = hits
            .iter()
            .map(|(g, _)| g.as_ref().map(|u| u.to_string()))
            .collect();
        assert_eq!(graphs[0], None);
        assert!(graphs[1].as_deref().unwrap().ends_with("g1"));
        assert!(graphs[2].as_deref().unwrap().ends_with("g2"));
    }

    #[test]
    fn wildcard_returns_each_triple_once() {
        let mut store = GraphStore::new();
        let g = uri("g");
        store.add(None, triple("a", "p", "b"), None);
        store.add(Some(&g), triple("a", "p", "b"), Some(0.5));
        store.add(Some(&g), triple("c", "p", "d"), None);
        assert_eq!(store.match_pattern(&Pattern::any()).len(), 3);
    }
}

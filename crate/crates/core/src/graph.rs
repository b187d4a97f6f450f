//! The statement store: deduplicated (subject, predicate, object) assertions
//! over a fixed prefix table, with derived indices and the structural queries
//! the registry model needs.
//!
//! Every resource is named by a CURIE `prefix:local`. The prefix table is
//! closed; unknown prefixes are rejected when identifiers are parsed. There
//! are no blank nodes: importers mint `gen:` identifiers instead.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interchange;

/// The fixed prefix table. Expansion IRIs are informative; the store works
/// entirely in compact form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prefix {
    /// `dc:` — http://purl.org/dc/elements/1.1/
    Dc,
    /// `dcterms:` — http://purl.org/dc/terms/
    Dcterms,
    /// `cld:` — http://purl.org/cld/terms/
    Cld,
    /// `cldtype:` — http://purl.org/cld/cldtype/
    Cldtype,
    /// `mdm:` — http://example.org/ns/mdm# (provisional maintenance namespace)
    Mdm,
    /// `gen:` — http://example.org/ns/mdm-id/ (locally minted resources)
    Gen,
}

impl Prefix {
    pub const ALL: [Prefix; 6] = [
        Prefix::Dc,
        Prefix::Dcterms,
        Prefix::Cld,
        Prefix::Cldtype,
        Prefix::Mdm,
        Prefix::Gen,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Prefix::Dc => "dc",
            Prefix::Dcterms => "dcterms",
            Prefix::Cld => "cld",
            Prefix::Cldtype => "cldtype",
            Prefix::Mdm => "mdm",
            Prefix::Gen => "gen",
        }
    }

    /// The expansion IRI this prefix stands for.
    pub fn iri(self) -> &'static str {
        match self {
            Prefix::Dc => "http://purl.org/dc/elements/1.1/",
            Prefix::Dcterms => "http://purl.org/dc/terms/",
            Prefix::Cld => "http://purl.org/cld/terms/",
            Prefix::Cldtype => "http://purl.org/cld/cldtype/",
            Prefix::Mdm => "http://example.org/ns/mdm#",
            Prefix::Gen => "http://example.org/ns/mdm-id/",
        }
    }
}

impl fmt::Display for Prefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Prefix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Prefix::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Syntax(format!("unknown prefix {s}")))
    }
}

/// A named resource in compact `prefix:local` form.
///
/// The local part is non-empty and contains no whitespace or angle brackets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResourceId {
    prefix: Prefix,
    local: String,
}

impl ResourceId {
    pub fn new(prefix: Prefix, local: impl Into<String>) -> Result<Self> {
        let local = local.into();
        if local.is_empty() {
            return Err(Error::Syntax(format!(
                "empty local name after prefix {prefix}"
            )));
        }
        if let Some(bad) = local
            .chars()
            .find(|c| c.is_whitespace() || *c == '<' || *c == '>')
        {
            return Err(Error::Syntax(format!(
                "invalid character {bad:?} in local name {local:?}"
            )));
        }
        Ok(ResourceId { prefix, local })
    }

    /// Parses a CURIE, splitting on the first colon.
    pub fn parse(token: &str) -> Result<Self> {
        let (prefix, local) = token
            .split_once(':')
            .ok_or_else(|| Error::Syntax(format!("expected prefix:local, got {token:?}")))?;
        ResourceId::new(prefix.parse()?, local)
    }

    pub fn prefix(&self) -> Prefix {
        self.prefix
    }

    pub fn local(&self) -> &str {
        &self.local
    }

    pub fn curie(&self) -> String {
        format!("{}:{}", self.prefix, self.local)
    }
}

impl fmt::Display for ResourceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.prefix, self.local)
    }
}

// Canonical order is lexicographic over the rendered CURIE. Comparing
// (prefix string, local) is equivalent for this prefix table because ':'
// sorts below every character that may follow a shared prefix stem; a unit
// test pins the equivalence.
impl Ord for ResourceId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.prefix
            .as_str()
            .cmp(other.prefix.as_str())
            .then_with(|| self.local.cmp(&other.local))
    }
}

impl PartialOrd for ResourceId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for ResourceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ResourceId::parse(s)
    }
}

impl serde::Serialize for ResourceId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A literal value. UTF-8 text; control characters other than newline and
/// tab are rejected so that every literal has an escaped rendering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal(String);

impl Literal {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if let Some(bad) = text
            .chars()
            .find(|c| c.is_control() && *c != '\n' && *c != '\t')
        {
            return Err(Error::Syntax(format!(
                "control character {bad:?} in literal"
            )));
        }
        Ok(Literal(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The escaped body, without surrounding quotes.
    pub fn escaped(&self) -> String {
        let mut out = String::with_capacity(self.0.len());
        for c in self.0.chars() {
            match c {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                '\t' => out.push_str("\\t"),
                c => out.push(c),
            }
        }
        out
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.escaped())
    }
}

// Literals order by their rendered (escaped) form.
impl Ord for Literal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.escaped().cmp(&other.escaped())
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Object position of a statement: a resource or a literal.
///
/// The derived order puts resources before literals, then compares renderings
/// within each kind, which is exactly the canonical object order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectValue {
    Resource(ResourceId),
    Literal(Literal),
}

impl ObjectValue {
    pub fn resource(id: ResourceId) -> Self {
        ObjectValue::Resource(id)
    }

    pub fn literal(text: impl Into<String>) -> Result<Self> {
        Ok(ObjectValue::Literal(Literal::new(text)?))
    }

    pub fn as_resource(&self) -> Option<&ResourceId> {
        match self {
            ObjectValue::Resource(id) => Some(id),
            ObjectValue::Literal(_) => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            ObjectValue::Resource(_) => None,
            ObjectValue::Literal(lit) => Some(lit),
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, ObjectValue::Resource(_))
    }
}

impl fmt::Display for ObjectValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectValue::Resource(id) => id.fmt(f),
            ObjectValue::Literal(lit) => lit.fmt(f),
        }
    }
}

impl From<ResourceId> for ObjectValue {
    fn from(id: ResourceId) -> Self {
        ObjectValue::Resource(id)
    }
}

impl serde::Serialize for ObjectValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            ObjectValue::Resource(id) => map.serialize_entry("id", &id.curie())?,
            ObjectValue::Literal(lit) => map.serialize_entry("value", lit.as_str())?,
        }
        map.end()
    }
}

/// One (subject, predicate, object) assertion. Value-comparable; the store
/// holds a set of these. The derived order is the canonical statement order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Statement {
    pub subject: ResourceId,
    pub predicate: ResourceId,
    pub object: ObjectValue,
}

impl Statement {
    pub fn new(subject: ResourceId, predicate: ResourceId, object: ObjectValue) -> Self {
        Statement {
            subject,
            predicate,
            object,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// A query pattern; `None` positions match anything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: Option<ResourceId>,
    pub predicate: Option<ResourceId>,
    pub object: Option<ObjectValue>,
}

impl TriplePattern {
    pub fn matches(&self, st: &Statement) -> bool {
        self.subject.as_ref().is_none_or(|s| *s == st.subject)
            && self.predicate.as_ref().is_none_or(|p| *p == st.predicate)
            && self.object.as_ref().is_none_or(|o| *o == st.object)
    }
}

/// The statement store. A set of statements plus derived subject, predicate,
/// and object indices that stay consistent with the set.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    statements: BTreeSet<Statement>,
    by_subject: HashMap<ResourceId, BTreeSet<Statement>>,
    by_predicate: HashMap<ResourceId, BTreeSet<Statement>>,
    by_object: HashMap<ObjectValue, BTreeSet<Statement>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// Statements in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Statement> {
        self.statements.iter()
    }

    pub fn contains(&self, st: &Statement) -> bool {
        self.statements.contains(st)
    }

    /// Adds a statement. Returns true if it was newly added; asserting the
    /// same statement twice leaves the graph unchanged.
    pub fn assert(&mut self, st: Statement) -> bool {
        if !self.statements.insert(st.clone()) {
            return false;
        }
        self.by_subject
            .entry(st.subject.clone())
            .or_default()
            .insert(st.clone());
        self.by_predicate
            .entry(st.predicate.clone())
            .or_default()
            .insert(st.clone());
        self.by_object
            .entry(st.object.clone())
            .or_default()
            .insert(st);
        true
    }

    /// Removes a statement. Returns true if it was present.
    pub fn retract(&mut self, st: &Statement) -> bool {
        if !self.statements.remove(st) {
            return false;
        }
        for (key, index) in [
            (&st.subject, &mut self.by_subject),
            (&st.predicate, &mut self.by_predicate),
        ] {
            if let Some(bucket) = index.get_mut(key) {
                bucket.remove(st);
                if bucket.is_empty() {
                    index.remove(key);
                }
            }
        }
        if let Some(bucket) = self.by_object.get_mut(&st.object) {
            bucket.remove(st);
            if bucket.is_empty() {
                self.by_object.remove(&st.object);
            }
        }
        true
    }

    /// All statements matching the pattern, in canonical order. Uses the
    /// most specific bound position's index; an unbound pattern scans.
    pub fn matching(&self, pattern: &TriplePattern) -> Vec<Statement> {
        static EMPTY: BTreeSet<Statement> = BTreeSet::new();
        let bucket: &BTreeSet<Statement> = if let Some(s) = &pattern.subject {
            self.by_subject.get(s).unwrap_or(&EMPTY)
        } else if let Some(o) = &pattern.object {
            self.by_object.get(o).unwrap_or(&EMPTY)
        } else if let Some(p) = &pattern.predicate {
            self.by_predicate.get(p).unwrap_or(&EMPTY)
        } else {
            &self.statements
        };
        bucket
            .iter()
            .filter(|st| pattern.matches(st))
            .cloned()
            .collect()
    }

    /// Objects of `(subject, predicate, *)`, in canonical order.
    pub fn objects(&self, subject: &ResourceId, predicate: &ResourceId) -> Vec<ObjectValue> {
        self.matching(&TriplePattern {
            subject: Some(subject.clone()),
            predicate: Some(predicate.clone()),
            object: None,
        })
        .into_iter()
        .map(|st| st.object)
        .collect()
    }

    /// Subjects of `(*, predicate, object)`, deduplicated, canonical order.
    pub fn subjects_with(&self, predicate: &ResourceId, object: &ObjectValue) -> Vec<ResourceId> {
        self.matching(&TriplePattern {
            subject: None,
            predicate: Some(predicate.clone()),
            object: Some(object.clone()),
        })
        .into_iter()
        .map(|st| st.subject)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
    }

    /// Statements with the given predicate, in canonical order.
    pub fn with_predicate(&self, predicate: &ResourceId) -> impl Iterator<Item = &Statement> {
        self.by_predicate
            .get(predicate)
            .into_iter()
            .flat_map(|b| b.iter())
    }

    /// True if the resource appears anywhere in the graph.
    pub fn mentions(&self, id: &ResourceId) -> bool {
        self.by_subject.contains_key(id)
            || self.by_predicate.contains_key(id)
            || self
                .by_object
                .contains_key(&ObjectValue::Resource(id.clone()))
    }

    /// True if the graph holds any statement with this subject.
    pub fn describes(&self, id: &ResourceId) -> bool {
        self.by_subject.contains_key(id)
    }

    /// Catalogs describing a collection: resource objects of
    /// `(collection, cld:collectionDescription, *)`, deduplicated.
    pub fn catalogs_describing(&self, collection: &ResourceId) -> Vec<ResourceId> {
        self.objects(collection, &crate::names::cld_collection_description())
            .into_iter()
            .filter_map(|o| match o {
                ObjectValue::Resource(id) => Some(id),
                ObjectValue::Literal(_) => None,
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Catalogs validated by a schema: subjects of `(*, mdm:hasSchema, schema)`.
    pub fn catalogs_with_schema(&self, schema: &ObjectValue) -> Vec<ResourceId> {
        self.subjects_with(&crate::names::mdm_has_schema(), schema)
    }

    /// Catalogs whose schema follows the given scheme: the two-hop join of
    /// `(c, mdm:hasSchema, d)` with `(d, mdm:followsScheme, scheme)`.
    pub fn catalogs_following_scheme(&self, scheme: &ObjectValue) -> Vec<ResourceId> {
        let has_schema = crate::names::mdm_has_schema();
        let mut out = BTreeSet::new();
        for schema in self.subjects_with(&crate::names::mdm_follows_scheme(), scheme) {
            out.extend(self.subjects_with(&has_schema, &ObjectValue::Resource(schema)));
        }
        out.into_iter().collect()
    }

    /// Reads a graph from the canonical triple format. Any parse diagnostic
    /// fails the whole load.
    pub fn load(path: impl AsRef<Path>) -> Result<Graph> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let outcome = interchange::parse_triples(&text);
        if !outcome.errors.is_empty() {
            return Err(Error::Parse(outcome.errors));
        }
        let mut graph = Graph::new();
        for st in outcome.statements {
            graph.assert(st);
        }
        Ok(graph)
    }

    /// Writes the canonical serialization. `load(save(g))` equals `g`.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = interchange::serialize_canonical(self.iter());
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

impl FromIterator<Statement> for Graph {
    fn from_iter<I: IntoIterator<Item = Statement>>(iter: I) -> Self {
        let mut g = Graph::new();
        for st in iter {
            g.assert(st);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rid(s: &str) -> ResourceId {
        ResourceId::parse(s).unwrap()
    }

    #[test]
    fn parses_known_prefixes() {
        let id = rid("cldtype:CollectionImage");
        assert_eq!(id.prefix(), Prefix::Cldtype);
        assert_eq!(id.local(), "CollectionImage");
        assert_eq!(id.curie(), "cldtype:CollectionImage");
    }

    #[test]
    fn rejects_unknown_prefix() {
        let err = ResourceId::parse("foo:Bar").unwrap_err();
        assert!(err.to_string().contains("unknown prefix foo"), "{err}");
    }

    #[test]
    fn rejects_bad_locals() {
        assert!(ResourceId::parse("gen:").is_err());
        assert!(ResourceId::parse("gen:a b").is_err());
        assert!(ResourceId::parse("gen:a<b").is_err());
        assert!(ResourceId::parse("gen:a>b").is_err());
        assert!(ResourceId::parse("nocolon").is_err());
    }

    #[test]
    fn local_may_contain_colon() {
        let id = rid("gen:a:b");
        assert_eq!(id.local(), "a:b");
    }

    #[test]
    fn resource_order_matches_curie_order() {
        // Exercise every prefix pair, including the stem pairs dc/dcterms
        // and cld/cldtype, with locals around ':' in code-point order.
        let locals = ["a", "z", "A", "0", "type", "zz"];
        let mut ids = Vec::new();
        for p in Prefix::ALL {
            for l in locals {
                ids.push(ResourceId::new(p, l).unwrap());
            }
        }
        for a in &ids {
            for b in &ids {
                assert_eq!(a.cmp(b), a.curie().cmp(&b.curie()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn literal_rejects_control_chars() {
        assert!(Literal::new("fine text").is_ok());
        assert!(Literal::new("tab\tand\nnewline").is_ok());
        assert!(Literal::new("bell\u{7}").is_err());
        assert!(Literal::new("cr\r").is_err());
    }

    #[test]
    fn objects_order_resources_before_literals() {
        let r = ObjectValue::Resource(rid("gen:a"));
        let l = ObjectValue::literal("a").unwrap();
        assert!(r < l);
    }

    #[test]
    fn assert_is_idempotent() {
        let mut g = Graph::new();
        let st = Statement::new(
            rid("gen:collA"),
            rid("dc:type"),
            ObjectValue::Resource(rid("cldtype:CollectionImage")),
        );
        assert!(g.assert(st.clone()));
        assert_eq!(g.len(), 1);
        assert!(!g.assert(st));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn retract_twice_returns_false() {
        let mut g = Graph::new();
        let st = Statement::new(
            rid("gen:a"),
            rid("dc:type"),
            ObjectValue::Resource(rid("cldtype:Catalogue")),
        );
        g.assert(st.clone());
        assert!(g.retract(&st));
        assert_eq!(g.len(), 0);
        assert!(!g.retract(&st));
    }

    #[test]
    fn retract_from_empty_graph() {
        let mut g = Graph::new();
        let st = Statement::new(
            rid("gen:a"),
            rid("dc:type"),
            ObjectValue::literal("x").unwrap(),
        );
        assert!(!g.retract(&st));
    }

    #[test]
    fn matching_on_empty_graph_is_empty() {
        let g = Graph::new();
        assert!(g.matching(&TriplePattern::default()).is_empty());
    }

    #[test]
    fn indices_shrink_on_retract() {
        let mut g = Graph::new();
        let st = Statement::new(
            rid("gen:a"),
            rid("dc:type"),
            ObjectValue::Resource(rid("cldtype:Catalogue")),
        );
        g.assert(st.clone());
        g.retract(&st);
        assert!(g.matching(&TriplePattern::default()).is_empty());
        assert!(!g.mentions(&rid("gen:a")));
    }
}

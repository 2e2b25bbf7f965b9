//! RDF-level representation of instance data: terms, triples and triple
//! sets, plus a Turtle reader/writer for the subset the topology data
//! needs (prefixes, collections, blank nodes, plain literals).

mod parser;
mod writer;

pub use parser::{parse_turtle, ParseError};
pub use writer::serialize_turtle;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::vocab;

/// An absolute IRI.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Iri(pub String);

impl Iri {
    pub fn new(iri: impl Into<String>) -> Self {
        Iri(iri.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Local part after the last `#` or `/`, for human-facing output.
    pub fn local_name(&self) -> &str {
        match self.0.rfind(['#', '/']) {
            Some(i) => &self.0[i + 1..],
            None => &self.0,
        }
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl From<&str> for Iri {
    fn from(s: &str) -> Self {
        Iri(s.to_owned())
    }
}

/// A literal: lexical form plus datatype, with an optional language tag
/// carried through unchanged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub lexical: String,
    pub datatype: Iri,
    pub lang: Option<String>,
}

impl Literal {
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::from(vocab::XSD_STRING),
            lang: None,
        }
    }

    pub fn integer(value: i64) -> Self {
        Literal {
            lexical: value.to_string(),
            datatype: Iri::from(vocab::XSD_INTEGER),
            lang: None,
        }
    }

    pub fn decimal(value: f64) -> Self {
        Literal {
            lexical: decimal_lexical(value),
            datatype: Iri::from(vocab::XSD_DECIMAL),
            lang: None,
        }
    }

    pub fn boolean(value: bool) -> Self {
        Literal {
            lexical: value.to_string(),
            datatype: Iri::from(vocab::XSD_BOOLEAN),
            lang: None,
        }
    }

    /// Numeric value of an integer or decimal literal.
    pub fn numeric_value(&self) -> Option<f64> {
        let dt = self.datatype.as_str();
        if dt == vocab::XSD_INTEGER || dt == vocab::XSD_DECIMAL {
            self.lexical.parse().ok()
        } else {
            None
        }
    }

    pub fn integer_value(&self) -> Option<i64> {
        if self.datatype.as_str() == vocab::XSD_INTEGER {
            self.lexical.parse().ok()
        } else {
            None
        }
    }

    pub fn is_plain_string(&self) -> bool {
        self.datatype.as_str() == vocab::XSD_STRING && self.lang.is_none()
    }
}

/// Canonical decimal rendering: always carries a decimal point.
pub fn decimal_lexical(value: f64) -> String {
    let s = format!("{value}");
    if s.contains('.') {
        s
    } else {
        format!("{s}.0")
    }
}

/// An RDF term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    Blank(String),
    Literal(Literal),
}

impl Term {
    pub fn iri(iri: impl Into<String>) -> Self {
        Term::Iri(Iri::new(iri))
    }

    pub fn blank(label: impl Into<String>) -> Self {
        Term::Blank(label.into())
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Term::Iri(_) | Term::Blank(_))
    }

    pub fn is_iri(&self, iri: &str) -> bool {
        matches!(self, Term::Iri(i) if i.as_str() == iri)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => write!(f, "{iri}"),
            Term::Blank(label) => write!(f, "_:{label}"),
            Term::Literal(lit) => {
                write!(f, "\"{}\"", lit.lexical)?;
                if let Some(lang) = &lit.lang {
                    write!(f, "@{lang}")
                } else if lit.datatype.as_str() != vocab::XSD_STRING {
                    write!(f, "^^{}", lit.datatype)
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// A single statement. The predicate is always an IRI.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: impl Into<Iri>, object: Term) -> Self {
        Triple {
            subject,
            predicate: predicate.into(),
            object,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// An unordered, duplicate-free set of triples with a prefix map.
///
/// The prefix map always binds at least `topo:` and `rdf:`; it only
/// affects serialization sugar, never triple identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSet {
    triples: BTreeSet<Triple>,
    prefixes: BTreeMap<String, String>,
}

impl Default for TripleSet {
    fn default() -> Self {
        Self::new()
    }
}

impl TripleSet {
    pub fn new() -> Self {
        let mut prefixes = BTreeMap::new();
        prefixes.insert("topo".to_owned(), vocab::TOPO_NS.to_owned());
        prefixes.insert("rdf".to_owned(), vocab::RDF_NS.to_owned());
        TripleSet {
            triples: BTreeSet::new(),
            prefixes,
        }
    }

    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        self.triples.remove(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Bind a prefix. On conflict the lexicographically smaller namespace
    /// wins so that merges stay order-independent.
    pub fn declare_prefix(&mut self, prefix: impl Into<String>, namespace: impl Into<String>) {
        let namespace = namespace.into();
        match self.prefixes.entry(prefix.into()) {
            Entry::Vacant(e) => {
                e.insert(namespace);
            }
            Entry::Occupied(mut e) => {
                if namespace < *e.get() {
                    e.insert(namespace);
                }
            }
        }
    }

    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    /// Set-union of triples and prefix maps.
    pub fn merge(&mut self, other: TripleSet) {
        for (prefix, ns) in other.prefixes {
            self.declare_prefix(prefix, ns);
        }
        self.triples.extend(other.triples);
    }

    pub fn objects<'s, 'q>(
        &'s self,
        subject: &'q Term,
        predicate: &'q str,
    ) -> impl Iterator<Item = &'s Term> + use<'s, 'q> {
        self.triples
            .iter()
            .filter(move |t| &t.subject == subject && t.predicate.as_str() == predicate)
            .map(|t| &t.object)
    }

    /// The single object for (subject, predicate), if exactly one exists.
    pub fn object(&self, subject: &Term, predicate: &str) -> Option<&Term> {
        let mut it = self.objects(subject, predicate);
        let first = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(first)
        }
    }

    pub fn subjects_with_type<'s, 'q>(
        &'s self,
        class: &'q str,
    ) -> impl Iterator<Item = &'s Term> + use<'s, 'q> {
        self.triples
            .iter()
            .filter(move |t| t.predicate.as_str() == vocab::RDF_TYPE && t.object.is_iri(class))
            .map(|t| &t.subject)
    }

    pub fn triples_with_predicate<'s, 'q>(
        &'s self,
        predicate: &'q str,
    ) -> impl Iterator<Item = &'s Triple> + use<'s, 'q> {
        self.triples
            .iter()
            .filter(move |t| t.predicate.as_str() == predicate)
    }

    pub fn subject_triples<'s, 'q>(
        &'s self,
        subject: &'q Term,
    ) -> impl Iterator<Item = &'s Triple> + use<'s, 'q> {
        self.triples.iter().filter(move |t| &t.subject == subject)
    }

    pub fn types_of<'s, 'q>(
        &'s self,
        subject: &'q Term,
    ) -> impl Iterator<Item = &'s Iri> + use<'s, 'q> {
        self.objects(subject, vocab::RDF_TYPE)
            .filter_map(|o| o.as_iri())
    }

    /// Expand an RDF collection starting at `head` into its members, in
    /// chain order. `rdf:nil` yields the empty list.
    pub fn expand_collection(&self, head: &Term) -> Result<Vec<Term>, CollectionError> {
        let mut members = Vec::new();
        let mut seen: BTreeSet<Term> = BTreeSet::new();
        let mut node = head.clone();
        loop {
            if node.is_iri(vocab::RDF_NIL) {
                return Ok(members);
            }
            if !node.is_resource() {
                return Err(CollectionError::NotAResource { node });
            }
            if !seen.insert(node.clone()) {
                return Err(CollectionError::Cycle { node });
            }
            // A well-formed chain node is the tail of at most one link.
            let incoming_rest = self
                .triples_with_predicate(vocab::RDF_REST)
                .filter(|t| t.object == node)
                .count();
            if incoming_rest > 1 {
                return Err(CollectionError::SharedTail { node });
            }
            let firsts: Vec<&Term> = self.objects(&node, vocab::RDF_FIRST).collect();
            let first = match firsts.as_slice() {
                [one] => (*one).clone(),
                [] => return Err(CollectionError::MissingFirst { node }),
                _ => return Err(CollectionError::MultipleFirst { node }),
            };
            let rests: Vec<&Term> = self.objects(&node, vocab::RDF_REST).collect();
            let rest = match rests.as_slice() {
                [one] => (*one).clone(),
                [] => return Err(CollectionError::MissingRest { node }),
                _ => return Err(CollectionError::MultipleRest { node }),
            };
            members.push(first);
            node = rest;
        }
    }

    /// Append a first/rest chain for `members` and return its head term.
    /// `label_seed` keeps the generated blank labels unique per call site.
    pub fn insert_collection(&mut self, members: &[Term], label_seed: &str) -> Term {
        let mut head = Term::iri(vocab::RDF_NIL);
        for (i, member) in members.iter().enumerate().rev() {
            let node = Term::blank(format!("list#{label_seed}#{i}"));
            self.insert(Triple::new(
                node.clone(),
                Iri::from(vocab::RDF_FIRST),
                member.clone(),
            ));
            self.insert(Triple::new(node.clone(), Iri::from(vocab::RDF_REST), head));
            head = node;
        }
        head
    }

    /// Equality modulo blank-node renaming, using deterministic canonical
    /// labeling. Tailored to this data shape (first/rest chains, shallow
    /// anonymous nodes); not a general graph-isomorphism decision.
    pub fn isomorphic_to(&self, other: &TripleSet) -> bool {
        if self.len() != other.len() {
            return false;
        }
        self.canonical_triples() == other.canonical_triples()
    }

    fn canonical_triples(&self) -> BTreeSet<Triple> {
        let labels = self.canonical_blank_labels();
        let relabel = |term: &Term| match term {
            Term::Blank(l) => Term::Blank(labels[l].clone()),
            other => other.clone(),
        };
        self.triples
            .iter()
            .map(|t| Triple::new(relabel(&t.subject), t.predicate.clone(), relabel(&t.object)))
            .collect()
    }

    /// Deterministic canonical labels for blank nodes via signature
    /// refinement on the surrounding ground structure.
    pub(crate) fn canonical_blank_labels(&self) -> BTreeMap<String, String> {
        let mut blanks: BTreeSet<&str> = BTreeSet::new();
        for t in &self.triples {
            if let Term::Blank(l) = &t.subject {
                blanks.insert(l);
            }
            if let Term::Blank(l) = &t.object {
                blanks.insert(l);
            }
        }
        let render = |term: &Term, sigs: &BTreeMap<&str, String>| -> String {
            match term {
                Term::Blank(l) => format!("[{}]", sigs[l.as_str()]),
                other => other.to_string(),
            }
        };
        let mut sigs: BTreeMap<&str, String> = blanks.iter().map(|b| (*b, String::new())).collect();
        // Each round folds one more hop of context into every signature;
        // chains of length n separate after n rounds.
        let rounds = blanks.len() + 1;
        for _ in 0..rounds {
            let mut next: BTreeMap<&str, String> = BTreeMap::new();
            for &b in &blanks {
                let mut parts: Vec<String> = Vec::new();
                for t in &self.triples {
                    let s_is = matches!(&t.subject, Term::Blank(l) if l == b);
                    let o_is = matches!(&t.object, Term::Blank(l) if l == b);
                    if s_is {
                        parts.push(format!("S {} {}", t.predicate, render(&t.object, &sigs)));
                    }
                    if o_is {
                        parts.push(format!("O {} {}", t.predicate, render(&t.subject, &sigs)));
                    }
                }
                parts.sort();
                next.insert(b, parts.join("|"));
            }
            if next == sigs {
                break;
            }
            sigs = next;
        }
        // Order by final signature; ties get positional suffixes (tied
        // nodes are structurally interchangeable for this data shape).
        let mut ordered: Vec<(&str, &String)> = sigs.iter().map(|(b, s)| (*b, s)).collect();
        ordered.sort_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(b.0)));
        ordered
            .into_iter()
            .enumerate()
            .map(|(i, (b, _))| (b.to_owned(), format!("c{i}")))
            .collect()
    }
}

impl FromIterator<Triple> for TripleSet {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut set = TripleSet::new();
        for t in iter {
            set.insert(t);
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CollectionError {
    #[error("collection node {node} has no rdf:first")]
    MissingFirst { node: Term },
    #[error("collection node {node} has no rdf:rest")]
    MissingRest { node: Term },
    #[error("collection node {node} has multiple rdf:first values")]
    MultipleFirst { node: Term },
    #[error("collection node {node} has multiple rdf:rest values")]
    MultipleRest { node: Term },
    #[error("collection node {node} is the tail of more than one chain")]
    SharedTail { node: Term },
    #[error("collection chain cycles back to {node}")]
    Cycle { node: Term },
    #[error("collection node {node} is not a resource")]
    NotAResource { node: Term },
}

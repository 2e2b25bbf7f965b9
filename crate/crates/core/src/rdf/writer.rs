//! Deterministic Turtle writer. Subjects are sorted, predicates grouped
//! with `;`, and well-formed first/rest chains re-sugared to `( ... )`.
//! Re-parsing the output yields a triple set isomorphic to the input.

use std::collections::{BTreeMap, BTreeSet};

use crate::vocab;

use super::{Iri, Literal, Term, Triple, TripleSet};

/// Serialize a [`TripleSet`] to Turtle text.
pub fn serialize_turtle(set: &TripleSet) -> String {
    Writer::new(set).write()
}

struct Writer<'a> {
    set: &'a TripleSet,
    /// blank label -> stable output label (b0, b1, ...).
    labels: BTreeMap<String, String>,
    /// chain head label -> members, for heads that can be sugared.
    chains: BTreeMap<String, Vec<Term>>,
    /// every blank node consumed by some sugared chain.
    chain_nodes: BTreeSet<String>,
}

impl<'a> Writer<'a> {
    fn new(set: &'a TripleSet) -> Self {
        let mut labels = BTreeMap::new();
        let mut originals: BTreeSet<&str> = BTreeSet::new();
        for t in set.iter() {
            if let Term::Blank(l) = &t.subject {
                originals.insert(l);
            }
            if let Term::Blank(l) = &t.object {
                originals.insert(l);
            }
        }
        for (i, l) in originals.into_iter().enumerate() {
            labels.insert(l.to_owned(), format!("b{i}"));
        }
        let mut writer = Writer {
            set,
            labels,
            chains: BTreeMap::new(),
            chain_nodes: BTreeSet::new(),
        };
        writer.find_sugarable_chains();
        writer
    }

    /// A chain is sugared only when every node carries exactly one
    /// rdf:first and one rdf:rest and nothing else, each node is the tail
    /// of at most one link, and the head is referenced by exactly one
    /// triple. Anything else is emitted raw so no information is lost.
    fn find_sugarable_chains(&mut self) {
        'heads: for t in self.set.iter() {
            let Term::Blank(head_label) = &t.object else {
                continue;
            };
            if t.predicate.as_str() == vocab::RDF_REST {
                continue; // interior node, not a head
            }
            // The head must be the object of exactly this one triple.
            let references = self
                .set
                .iter()
                .filter(|u| matches!(&u.object, Term::Blank(l) if l == head_label))
                .count();
            if references != 1 {
                continue;
            }
            let mut members = Vec::new();
            let mut nodes = Vec::new();
            let mut node = head_label.clone();
            loop {
                let node_term = Term::Blank(node.clone());
                let outgoing: Vec<&Triple> = self.set.subject_triples(&node_term).collect();
                if outgoing.len() != 2 {
                    continue 'heads;
                }
                let mut first = None;
                let mut rest = None;
                for t in outgoing {
                    match t.predicate.as_str() {
                        vocab::RDF_FIRST if first.is_none() => first = Some(&t.object),
                        vocab::RDF_REST if rest.is_none() => rest = Some(&t.object),
                        _ => continue 'heads,
                    }
                }
                let (Some(first), Some(rest)) = (first, rest) else {
                    continue 'heads;
                };
                // Interior nodes must be the tail of exactly one link.
                if node != *head_label {
                    let incoming = self
                        .set
                        .triples_with_predicate(vocab::RDF_REST)
                        .filter(|u| matches!(&u.object, Term::Blank(l) if *l == node))
                        .count();
                    let other_refs = self
                        .set
                        .iter()
                        .filter(|u| matches!(&u.object, Term::Blank(l) if *l == node))
                        .count();
                    if incoming != 1 || other_refs != 1 {
                        continue 'heads;
                    }
                }
                members.push(first.clone());
                nodes.push(node.clone());
                match rest {
                    Term::Iri(iri) if iri.as_str() == vocab::RDF_NIL => break,
                    Term::Blank(next) => {
                        if nodes.contains(next) {
                            continue 'heads; // cycle
                        }
                        node = next.clone();
                    }
                    _ => continue 'heads,
                }
            }
            self.chains.insert(head_label.clone(), members);
            self.chain_nodes.extend(nodes);
        }
    }

    fn write(&self) -> String {
        let mut out = String::new();
        for (prefix, ns) in self.set.prefixes() {
            out.push_str(&format!("@prefix {prefix}: <{ns}> .\n"));
        }

        // Group triples by subject, skipping chain nodes that will be
        // emitted inline as parentheses.
        let mut by_subject: BTreeMap<(u8, String), BTreeMap<&Iri, BTreeSet<&Term>>> =
            BTreeMap::new();
        for t in self.set.iter() {
            if let Term::Blank(l) = &t.subject {
                if self.chain_nodes.contains(l) {
                    continue;
                }
            }
            let key = self.subject_sort_key(&t.subject);
            by_subject
                .entry(key)
                .or_default()
                .entry(&t.predicate)
                .or_default()
                .insert(&t.object);
        }

        for ((_, subject_rendered), predicates) in &by_subject {
            out.push('\n');
            out.push_str(subject_rendered);
            let mut first_predicate = true;
            // rdf:type first (as 'a'), the rest in IRI order.
            let mut ordered: Vec<(&&Iri, &BTreeSet<&Term>)> = predicates.iter().collect();
            ordered.sort_by_key(|(p, _)| (p.as_str() != vocab::RDF_TYPE, p.as_str()));
            for (predicate, objects) in ordered {
                if first_predicate {
                    out.push(' ');
                    first_predicate = false;
                } else {
                    out.push_str(" ;\n    ");
                }
                out.push_str(&self.render_predicate(predicate));
                let mut first_object = true;
                for object in objects {
                    if first_object {
                        out.push(' ');
                        first_object = false;
                    } else {
                        out.push_str(", ");
                    }
                    out.push_str(&self.render_object(object));
                }
            }
            out.push_str(" .\n");
        }
        out
    }

    fn subject_sort_key(&self, subject: &Term) -> (u8, String) {
        match subject {
            Term::Iri(iri) => (0, self.render_iri(iri)),
            Term::Blank(l) => (1, format!("_:{}", self.labels[l])),
            Term::Literal(_) => (2, subject.to_string()), // cannot occur
        }
    }

    fn render_predicate(&self, predicate: &Iri) -> String {
        if predicate.as_str() == vocab::RDF_TYPE {
            "a".to_owned()
        } else {
            self.render_iri(predicate)
        }
    }

    fn render_object(&self, object: &Term) -> String {
        match object {
            Term::Iri(iri) if iri.as_str() == vocab::RDF_NIL => "()".to_owned(),
            Term::Iri(iri) => self.render_iri(iri),
            Term::Blank(l) => match self.chains.get(l) {
                Some(members) => {
                    let inner: Vec<String> =
                        members.iter().map(|m| self.render_object(m)).collect();
                    format!("({})", inner.join(" "))
                }
                None => format!("_:{}", self.labels[l]),
            },
            Term::Literal(lit) => self.render_literal(lit),
        }
    }

    fn render_iri(&self, iri: &Iri) -> String {
        for (prefix, ns) in self.set.prefixes() {
            if let Some(local) = iri.as_str().strip_prefix(ns) {
                if !local.is_empty() && is_safe_local(local) {
                    return format!("{prefix}:{local}");
                }
            }
        }
        format!("<{}>", iri.as_str())
    }

    fn render_literal(&self, lit: &Literal) -> String {
        if let Some(lang) = &lit.lang {
            return format!("\"{}\"@{lang}", escape_string(&lit.lexical));
        }
        match lit.datatype.as_str() {
            vocab::XSD_STRING => format!("\"{}\"", escape_string(&lit.lexical)),
            vocab::XSD_INTEGER if is_integer_lexical(&lit.lexical) => lit.lexical.clone(),
            vocab::XSD_DECIMAL if is_decimal_lexical(&lit.lexical) => lit.lexical.clone(),
            vocab::XSD_BOOLEAN if lit.lexical == "true" || lit.lexical == "false" => {
                lit.lexical.clone()
            }
            _ => format!(
                "\"{}\"^^{}",
                escape_string(&lit.lexical),
                self.render_iri(&lit.datatype)
            ),
        }
    }
}

/// Locals the reader will tokenize back as a prefixed name. Digit-led
/// locals are legal Turtle but would collide with numeric literals, so
/// they fall back to full IRI form.
fn is_safe_local(local: &str) -> bool {
    let leading_ok = matches!(local.chars().next(), Some(c) if c.is_alphabetic() || c == '_');
    leading_ok
        && !local.ends_with('.')
        && local
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '-' || c == '.')
}

fn is_integer_lexical(lexical: &str) -> bool {
    let digits = lexical.strip_prefix(['+', '-']).unwrap_or(lexical);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

fn is_decimal_lexical(lexical: &str) -> bool {
    let body = lexical.strip_prefix(['+', '-']).unwrap_or(lexical);
    let Some((int_part, frac_part)) = body.split_once('.') else {
        return false;
    };
    int_part.chars().all(|c| c.is_ascii_digit())
        && !frac_part.is_empty()
        && frac_part.chars().all(|c| c.is_ascii_digit())
}

fn escape_string(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

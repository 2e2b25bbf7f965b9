//! Closed-world constraint checking over a built model.
//!
//! Each rule is a pure function from the model (and its originating
//! triples) to findings: required and single-valued properties,
//! sibling-class disjointness, irreflexive associations, inverse
//! functional composition, acyclic aggregation, and the enumeration and
//! range restrictions on data values. Checks are direct; no reasoner is
//! involved.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::model::{CollectionOrdering, ElementKind, EndPosition, TopologyModel};
use crate::rdf::{Iri, Term, TripleSet};
use crate::vocab;

/// Stable rule identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RuleId {
    #[serde(rename = "CARD-1")]
    Card1,
    #[serde(rename = "CARD-MIN")]
    CardMin,
    #[serde(rename = "DISJOINT")]
    Disjoint,
    #[serde(rename = "IRREFLEX")]
    Irreflex,
    #[serde(rename = "COMP-INV-FUNC")]
    CompInvFunc,
    #[serde(rename = "AGG-ACYCLIC")]
    AggAcyclic,
    #[serde(rename = "NAV-ENUM")]
    NavEnum,
    #[serde(rename = "POS-ENUM")]
    PosEnum,
    #[serde(rename = "COORD-RANGE")]
    CoordRange,
    #[serde(rename = "LEVEL-ENUM")]
    LevelEnum,
    #[serde(rename = "ORDERED-CONSIST")]
    OrderedConsist,
    #[serde(rename = "END-COORDS")]
    EndCoords,
    #[serde(rename = "DANGLING-REF")]
    DanglingRef,
    #[serde(rename = "UNKNOWN-PRED")]
    UnknownPred,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Card1 => "CARD-1",
            RuleId::CardMin => "CARD-MIN",
            RuleId::Disjoint => "DISJOINT",
            RuleId::Irreflex => "IRREFLEX",
            RuleId::CompInvFunc => "COMP-INV-FUNC",
            RuleId::AggAcyclic => "AGG-ACYCLIC",
            RuleId::NavEnum => "NAV-ENUM",
            RuleId::PosEnum => "POS-ENUM",
            RuleId::CoordRange => "COORD-RANGE",
            RuleId::LevelEnum => "LEVEL-ENUM",
            RuleId::OrderedConsist => "ORDERED-CONSIST",
            RuleId::EndCoords => "END-COORDS",
            RuleId::DanglingRef => "DANGLING-REF",
            RuleId::UnknownPred => "UNKNOWN-PRED",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// One rule violation (or advisory) against a specific subject.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    pub rule: RuleId,
    pub severity: Severity,
    pub subject: String,
    pub message: String,
    pub detail: Vec<String>,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "ERROR",
            Severity::Warning => "WARNING",
        };
        write!(f, "{tag} {} {} {}", self.rule, self.subject, self.message)?;
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail.join(", "))?;
        }
        Ok(())
    }
}

/// Catalog entry: id, what the rule enforces, default severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleInfo {
    pub id: RuleId,
    pub description: &'static str,
    pub severity: Severity,
}

/// The registered rules, in report order. Which properties fall under
/// CARD-1 versus CARD-MIN is fixed by the descriptions below; they are
/// normative for this artifact.
pub fn rule_catalog() -> &'static [RuleInfo] {
    &[
        RuleInfo {
            id: RuleId::Card1,
            description: "single-valued required properties occur exactly once: \
                          PositionedRelation elementA/elementB/positionOnA/positionOnB/navigability, \
                          IntrinsicCoordinate intrinsicCoord, LevelNetwork descriptionLevel, \
                          SpotLocation netElement/coordinate/applicationDirection",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::CardMin,
            description: "at-least-one properties are present: Network level, \
                          AssociatedPositioningSystem intrinsicCoordinate, \
                          element part collections elementPart, \
                          CompositionNetElement elementCollection",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::Disjoint,
            description: "no instance is typed with two sibling classes \
                          (net element kinds; ordered/unordered collections)",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::Irreflex,
            description: "object properties never link a subject to itself, and a \
                          positioned relation never joins an element to itself",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::CompInvFunc,
            description: "composition is inverse functional: each part belongs to at \
                          most one element part collection",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::AggAcyclic,
            description: "the whole/part relation over composition elements is acyclic",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::NavEnum,
            description: "navigability is one of \"AB\", \"BA\", \"Both\", \"None\"",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::PosEnum,
            description: "positionOnA/positionOnB are the integers 0 or 1",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::CoordRange,
            description: "intrinsicCoord and spot location coordinate values lie in [0.0, 1.0]",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::LevelEnum,
            description: "descriptionLevel is one of \"micro\", \"meso\", \"macro\"",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::OrderedConsist,
            description: "an ordered collection's elementPartList members equal its \
                          elementPart set",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::EndCoords,
            description: "every linear element referenced by a positioned relation has \
                          unambiguous coordinates at 0.0 and 1.0",
            severity: Severity::Error,
        },
        RuleInfo {
            id: RuleId::DanglingRef,
            description: "object property targets resolve to an entity of the expected type",
            severity: Severity::Warning,
        },
        RuleInfo {
            id: RuleId::UnknownPred,
            description: "predicates and classes outside the known vocabulary",
            severity: Severity::Warning,
        },
    ]
}

fn severity_of(rule: RuleId) -> Severity {
    rule_catalog()
        .iter()
        .find(|info| info.id == rule)
        .map(|info| info.severity)
        .unwrap_or(Severity::Error)
}

/// Deterministic validation report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
    pub errors: usize,
    pub warnings: usize,
    pub summary: crate::model::ModelSummary,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.errors == 0
    }

    pub fn findings_for(&self, rule: RuleId) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.rule == rule)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for finding in &self.findings {
            out.push_str(&finding.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{} error(s), {} warning(s)\n",
            self.errors, self.warnings
        ));
        out.push_str(&format!("model: {}\n", self.summary));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Run every registered rule over the model.
pub fn validate(model: &TopologyModel) -> ValidationReport {
    let mut findings = Vec::new();
    let data = model.source();

    check_cardinalities(model, data, &mut findings);
    check_disjoint(data, &mut findings);
    check_irreflexive(model, data, &mut findings);
    check_inverse_functional(data, &mut findings);
    check_aggregation_acyclic(model, &mut findings);
    check_enumerations(data, &mut findings);
    check_ordered_consistency(model, data, &mut findings);
    check_end_coordinates(model, &mut findings);
    check_dangling_references(model, data, &mut findings);
    check_unknown_vocabulary(data, &mut findings);

    findings.sort();
    findings.dedup();
    let errors = findings
        .iter()
        .filter(|f| f.severity == Severity::Error)
        .count();
    let warnings = findings.len() - errors;
    ValidationReport {
        findings,
        errors,
        warnings,
        summary: model.summary(),
    }
}

fn finding(
    rule: RuleId,
    subject: &Term,
    message: impl Into<String>,
    detail: Vec<String>,
) -> Finding {
    Finding {
        rule,
        severity: severity_of(rule),
        subject: subject_key(subject),
        message: message.into(),
        detail,
    }
}

fn subject_key(subject: &Term) -> String {
    match subject {
        Term::Iri(iri) => iri.as_str().to_owned(),
        other => other.to_string(),
    }
}

const CARD_ONE: &[(&str, &[&str])] = &[
    (
        vocab::POSITIONED_RELATION,
        &[
            vocab::ELEMENT_A,
            vocab::ELEMENT_B,
            vocab::POSITION_ON_A,
            vocab::POSITION_ON_B,
            vocab::NAVIGABILITY,
        ],
    ),
    (vocab::INTRINSIC_COORDINATE, &[vocab::INTRINSIC_COORD]),
    (vocab::LEVEL_NETWORK, &[vocab::DESCRIPTION_LEVEL]),
    (
        vocab::SPOT_LOCATION,
        &[
            vocab::NET_ELEMENT,
            vocab::COORDINATE,
            vocab::APPLICATION_DIRECTION,
        ],
    ),
];

const CARD_MIN: &[(&str, &[&str])] = &[
    (vocab::NETWORK, &[vocab::LEVEL]),
    (
        vocab::ASSOCIATED_POSITIONING_SYSTEM,
        &[vocab::INTRINSIC_COORDINATE_PROP],
    ),
    (vocab::ORDERED_COLLECTION, &[vocab::ELEMENT_PART]),
    (vocab::UNORDERED_COLLECTION, &[vocab::ELEMENT_PART]),
    (vocab::COMPOSITION_NET_ELEMENT, &[vocab::ELEMENT_COLLECTION]),
];

fn check_cardinalities(_model: &TopologyModel, data: &TripleSet, findings: &mut Vec<Finding>) {
    for (class, properties) in CARD_ONE {
        for subject in data.subjects_with_type(class) {
            for property in *properties {
                let count = data.objects(subject, property).count();
                if count != 1 {
                    findings.push(finding(
                        RuleId::Card1,
                        subject,
                        format!(
                            "expected exactly one {} value, found {count}",
                            Iri::from(*property)
                        ),
                        vec![],
                    ));
                }
            }
        }
    }
    for (class, properties) in CARD_MIN {
        for subject in data.subjects_with_type(class) {
            for property in *properties {
                if data.objects(subject, property).next().is_none() {
                    findings.push(finding(
                        RuleId::CardMin,
                        subject,
                        format!(
                            "expected at least one {} value, found none",
                            Iri::from(*property)
                        ),
                        vec![],
                    ));
                }
            }
        }
    }
}

const SIBLING_FAMILIES: &[&[&str]] = &[
    &[
        vocab::LINEAR_ELEMENT,
        vocab::NON_LINEAR_ELEMENT,
        vocab::COMPOSITION_NET_ELEMENT,
    ],
    &[vocab::ORDERED_COLLECTION, vocab::UNORDERED_COLLECTION],
];

fn check_disjoint(data: &TripleSet, findings: &mut Vec<Finding>) {
    let mut types_by_subject: BTreeMap<&Term, BTreeSet<&str>> = BTreeMap::new();
    for t in data.triples_with_predicate(vocab::RDF_TYPE) {
        if let Term::Iri(class) = &t.object {
            types_by_subject
                .entry(&t.subject)
                .or_default()
                .insert(class.as_str());
        }
    }
    for (subject, types) in types_by_subject {
        for family in SIBLING_FAMILIES {
            let present: Vec<&str> = family
                .iter()
                .copied()
                .filter(|c| types.contains(c))
                .collect();
            if present.len() > 1 {
                findings.push(finding(
                    RuleId::Disjoint,
                    subject,
                    "typed with disjoint sibling classes",
                    present.iter().map(|c| c.to_string()).collect(),
                ));
            }
        }
    }
}

fn check_irreflexive(model: &TopologyModel, data: &TripleSet, findings: &mut Vec<Finding>) {
    for t in data.iter() {
        if vocab::OBJECT_PROPERTIES.contains(&t.predicate.as_str()) && t.subject == t.object {
            findings.push(finding(
                RuleId::Irreflex,
                &t.subject,
                format!("{} links the subject to itself", t.predicate),
                vec![],
            ));
        }
    }
    for (iri, relation) in &model.relations {
        if let (Some(a), Some(b)) = (&relation.element_a, &relation.element_b) {
            if a == b {
                findings.push(finding(
                    RuleId::Irreflex,
                    &Term::Iri(iri.clone()),
                    "elementA equals elementB",
                    vec![a.as_str().to_owned()],
                ));
            }
        }
    }
}

fn check_inverse_functional(data: &TripleSet, findings: &mut Vec<Finding>) {
    let mut collections_by_part: BTreeMap<&Term, BTreeSet<&Term>> = BTreeMap::new();
    for t in data.triples_with_predicate(vocab::ELEMENT_PART) {
        collections_by_part
            .entry(&t.object)
            .or_default()
            .insert(&t.subject);
    }
    for (part, collections) in collections_by_part {
        if collections.len() > 1 {
            findings.push(finding(
                RuleId::CompInvFunc,
                part,
                format!("part belongs to {} collections", collections.len()),
                collections.iter().map(|c| subject_key(c)).collect(),
            ));
        }
    }
}

/// The whole/part graph: composition element -> its collections' parts.
fn part_of_edges(model: &TopologyModel) -> BTreeMap<&Iri, BTreeSet<&Iri>> {
    let mut edges: BTreeMap<&Iri, BTreeSet<&Iri>> = BTreeMap::new();
    for collection in model.collections.values() {
        let Some(whole) = &collection.whole else {
            continue;
        };
        edges
            .entry(whole)
            .or_default()
            .extend(collection.parts.iter());
    }
    edges
}

fn check_aggregation_acyclic(model: &TopologyModel, findings: &mut Vec<Finding>) {
    let edges = part_of_edges(model);
    for cycle_members in strongly_connected_cycles(&edges) {
        let least = cycle_members.first().expect("cycles are non-empty");
        findings.push(finding(
            RuleId::AggAcyclic,
            &Term::Iri((*least).clone()),
            "aggregation cycle",
            cycle_members
                .iter()
                .map(|m| m.as_str().to_owned())
                .collect(),
        ));
    }
}

/// Tarjan's algorithm, iterative; returns members of every SCC that forms
/// a cycle (size > 1, or a self-loop), sorted for determinism.
fn strongly_connected_cycles<'a>(
    edges: &BTreeMap<&'a Iri, BTreeSet<&'a Iri>>,
) -> Vec<Vec<&'a Iri>> {
    let mut nodes: BTreeSet<&Iri> = BTreeSet::new();
    for (whole, parts) in edges {
        nodes.insert(whole);
        nodes.extend(parts.iter().copied());
    }

    #[derive(Default)]
    struct State<'a> {
        index: usize,
        indices: BTreeMap<&'a Iri, usize>,
        lowlink: BTreeMap<&'a Iri, usize>,
        on_stack: BTreeSet<&'a Iri>,
        stack: Vec<&'a Iri>,
        cycles: Vec<Vec<&'a Iri>>,
    }

    let empty = BTreeSet::new();
    let mut state = State::default();

    for &root in &nodes {
        if state.indices.contains_key(root) {
            continue;
        }
        // frame: (node, successor iterator position)
        let mut frames: Vec<(&Iri, Vec<&Iri>, usize)> = Vec::new();
        let successors: Vec<&Iri> = edges.get(root).unwrap_or(&empty).iter().copied().collect();
        state.indices.insert(root, state.index);
        state.lowlink.insert(root, state.index);
        state.index += 1;
        state.stack.push(root);
        state.on_stack.insert(root);
        frames.push((root, successors, 0));

        while let Some((node, successors, position)) = frames.last_mut() {
            if *position < successors.len() {
                let next = successors[*position];
                *position += 1;
                if !state.indices.contains_key(next) {
                    let node_copy = next;
                    let succ: Vec<&Iri> =
                        edges.get(next).unwrap_or(&empty).iter().copied().collect();
                    state.indices.insert(node_copy, state.index);
                    state.lowlink.insert(node_copy, state.index);
                    state.index += 1;
                    state.stack.push(node_copy);
                    state.on_stack.insert(node_copy);
                    frames.push((node_copy, succ, 0));
                } else if state.on_stack.contains(next) {
                    let node_low = state.lowlink[*node].min(state.indices[next]);
                    state.lowlink.insert(*node, node_low);
                }
            } else {
                let node = *node;
                if state.lowlink[node] == state.indices[node] {
                    let mut component = Vec::new();
                    while let Some(member) = state.stack.pop() {
                        state.on_stack.remove(member);
                        component.push(member);
                        if member == node {
                            break;
                        }
                    }
                    let is_cycle = component.len() > 1
                        || edges.get(node).map(|s| s.contains(node)).unwrap_or(false);
                    if is_cycle {
                        component.sort();
                        state.cycles.push(component);
                    }
                }
                frames.pop();
                if let Some((parent, _, _)) = frames.last() {
                    let parent_low = state.lowlink[*parent].min(state.lowlink[node]);
                    state.lowlink.insert(*parent, parent_low);
                }
            }
        }
    }
    state.cycles.sort();
    state.cycles
}

fn check_enumerations(data: &TripleSet, findings: &mut Vec<Finding>) {
    for t in data.triples_with_predicate(vocab::NAVIGABILITY) {
        let ok = t
            .object
            .as_literal()
            .map(|l| {
                l.is_plain_string() && matches!(l.lexical.as_str(), "AB" | "BA" | "Both" | "None")
            })
            .unwrap_or(false);
        if !ok {
            findings.push(finding(
                RuleId::NavEnum,
                &t.subject,
                "navigability must be one of \"AB\", \"BA\", \"Both\", \"None\"",
                vec![t.object.to_string()],
            ));
        }
    }
    for property in [vocab::POSITION_ON_A, vocab::POSITION_ON_B] {
        for t in data.triples_with_predicate(property) {
            let ok = t
                .object
                .as_literal()
                .and_then(|l| l.integer_value())
                .map(|v| v == 0 || v == 1)
                .unwrap_or(false);
            if !ok {
                findings.push(finding(
                    RuleId::PosEnum,
                    &t.subject,
                    format!("{} must be the integer 0 or 1", Iri::from(property)),
                    vec![t.object.to_string()],
                ));
            }
        }
    }
    for property in [vocab::INTRINSIC_COORD, vocab::COORDINATE] {
        for t in data.triples_with_predicate(property) {
            let ok = t
                .object
                .as_literal()
                .and_then(|l| l.numeric_value())
                .map(|v| (0.0..=1.0).contains(&v))
                .unwrap_or(false);
            if !ok {
                findings.push(finding(
                    RuleId::CoordRange,
                    &t.subject,
                    format!("{} must be a number in [0.0, 1.0]", Iri::from(property)),
                    vec![t.object.to_string()],
                ));
            }
        }
    }
    for t in data.triples_with_predicate(vocab::DESCRIPTION_LEVEL) {
        let ok = t
            .object
            .as_literal()
            .map(|l| {
                l.is_plain_string() && matches!(l.lexical.as_str(), "micro" | "meso" | "macro")
            })
            .unwrap_or(false);
        if !ok {
            findings.push(finding(
                RuleId::LevelEnum,
                &t.subject,
                "descriptionLevel must be one of \"micro\", \"meso\", \"macro\"",
                vec![t.object.to_string()],
            ));
        }
    }
}

fn check_ordered_consistency(model: &TopologyModel, data: &TripleSet, findings: &mut Vec<Finding>) {
    for (iri, collection) in &model.collections {
        if collection.ordering != CollectionOrdering::Ordered {
            continue;
        }
        let subject = Term::Iri(iri.clone());
        let heads: Vec<&Term> = data.objects(&subject, vocab::ELEMENT_PART_LIST).collect();
        if heads.is_empty() {
            findings.push(finding(
                RuleId::OrderedConsist,
                &subject,
                "ordered collection has no elementPartList",
                vec![],
            ));
            continue;
        }
        if heads.len() > 1 {
            findings.push(finding(
                RuleId::OrderedConsist,
                &subject,
                "ordered collection has multiple elementPartList values",
                vec![],
            ));
            continue;
        }
        match data.expand_collection(heads[0]) {
            Err(e) => {
                findings.push(finding(
                    RuleId::OrderedConsist,
                    &subject,
                    format!("malformed elementPartList: {e}"),
                    vec![],
                ));
            }
            Ok(members) => {
                let member_set: BTreeSet<String> = members
                    .iter()
                    .filter_map(|m| m.as_iri())
                    .map(|i| i.as_str().to_owned())
                    .collect();
                let part_set: BTreeSet<String> = collection
                    .parts
                    .iter()
                    .map(|i| i.as_str().to_owned())
                    .collect();
                if member_set != part_set || members.len() != member_set.len() {
                    let missing: Vec<String> = part_set.difference(&member_set).cloned().collect();
                    let extra: Vec<String> = member_set.difference(&part_set).cloned().collect();
                    let mut detail = Vec::new();
                    if !missing.is_empty() {
                        detail.push(format!("missing from list: {}", missing.join(" ")));
                    }
                    if !extra.is_empty() {
                        detail.push(format!("not in part set: {}", extra.join(" ")));
                    }
                    if members.len() != member_set.len() {
                        detail.push("list contains duplicates".to_owned());
                    }
                    findings.push(finding(
                        RuleId::OrderedConsist,
                        &subject,
                        "elementPartList members differ from the elementPart set",
                        detail,
                    ));
                }
            }
        }
    }
}

fn check_end_coordinates(model: &TopologyModel, findings: &mut Vec<Finding>) {
    let mut checked: BTreeSet<&Iri> = BTreeSet::new();
    for relation in model.relations.values() {
        for element in [&relation.element_a, &relation.element_b]
            .into_iter()
            .flatten()
        {
            if !checked.insert(element) {
                continue;
            }
            let Some(net_element) = model.elements.get(element) else {
                continue; // dangling: reported by DANGLING-REF
            };
            if net_element.kind != ElementKind::Linear {
                continue;
            }
            for end in [EndPosition::Zero, EndPosition::One] {
                if let Err(e) = model.element_end(element, end) {
                    findings.push(finding(
                        RuleId::EndCoords,
                        &Term::Iri(element.clone()),
                        format!("end {end} unresolvable"),
                        vec![e.to_string()],
                    ));
                }
            }
        }
    }
}

fn check_dangling_references(model: &TopologyModel, data: &TripleSet, findings: &mut Vec<Finding>) {
    for t in data.iter() {
        let predicate = t.predicate.as_str();
        let expected: Option<(&str, bool)> = match predicate {
            vocab::ELEMENT_A
            | vocab::ELEMENT_B
            | vocab::NETWORK_RESOURCE
            | vocab::ELEMENT_PART
            | vocab::NET_ELEMENT => Some(("net element", model_has_element(model, &t.object))),
            vocab::LEVEL => Some((
                "level network",
                resolves(&t.object, |iri| model.level_networks.contains_key(iri)),
            )),
            vocab::ASSOCIATED_POSITIONING_SYSTEM_PROP => Some((
                "positioning system",
                resolves(&t.object, |iri| model.positioning_systems.contains_key(iri)),
            )),
            vocab::INTRINSIC_COORDINATE_PROP | vocab::REACHES => Some((
                "intrinsic coordinate",
                resolves(&t.object, |iri| model.coordinates.contains_key(iri)),
            )),
            vocab::ELEMENT_COLLECTION => Some((
                "element part collection",
                resolves(&t.object, |iri| model.collections.contains_key(iri)),
            )),
            vocab::LOCATION => Some((
                "spot location",
                resolves(&t.object, |iri| model.locations.contains_key(iri)),
            )),
            _ => None,
        };
        if let Some((kind, ok)) = expected {
            if !ok {
                findings.push(finding(
                    RuleId::DanglingRef,
                    &t.subject,
                    format!("{} does not resolve to a {kind}", t.predicate),
                    vec![t.object.to_string()],
                ));
            }
        }
    }
}

fn model_has_element(model: &TopologyModel, object: &Term) -> bool {
    resolves(object, |iri| model.elements.contains_key(iri))
}

fn resolves(object: &Term, contains: impl Fn(&Iri) -> bool) -> bool {
    match object {
        Term::Iri(iri) => contains(iri),
        _ => false,
    }
}

fn check_unknown_vocabulary(data: &TripleSet, findings: &mut Vec<Finding>) {
    for t in data.iter() {
        if !vocab::is_known_predicate(t.predicate.as_str()) {
            findings.push(finding(
                RuleId::UnknownPred,
                &t.subject,
                format!("unknown predicate {}", t.predicate),
                vec![],
            ));
        }
        if t.predicate.as_str() == vocab::RDF_TYPE {
            if let Term::Iri(class) = &t.object {
                if !vocab::is_known_class(class.as_str()) {
                    findings.push(finding(
                        RuleId::UnknownPred,
                        &t.subject,
                        format!("unknown class {class}"),
                        vec![],
                    ));
                }
            }
        }
    }
}

//! Directed reachability between intrinsic coordinates.
//!
//! A `reaches` edge says: a train leaving its current element at the
//! source coordinate can traverse the next element and leave it at the
//! target coordinate, without changing direction. Edges are derived from
//! positioned relations: for each permitted direction, the source
//! coordinate sits at the relation's end on the leaving element and the
//! target coordinate at the opposite end of the entered element. Only
//! linear elements take part; anything else breaks the chain.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::model::{
    ApplicationDirection, EndPosition, Navigability, PositionedRelation, TopologyModel,
};
use crate::rdf::{Iri, Term, Triple, TripleSet};
use crate::vocab;

/// One single-hop reaches edge, with the relation it came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ReachesEdge {
    pub source: Iri,
    pub target: Iri,
    pub via: Iri,
}

/// The materialized reaches relation, indexed by source coordinate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReachesGraph {
    edges: BTreeSet<ReachesEdge>,
    adjacency: BTreeMap<Iri, BTreeSet<Iri>>,
}

impl ReachesGraph {
    pub fn insert(&mut self, edge: ReachesEdge) {
        self.adjacency
            .entry(edge.source.clone())
            .or_default()
            .insert(edge.target.clone());
        self.edges.insert(edge);
    }

    pub fn edges(&self) -> impl Iterator<Item = &ReachesEdge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Successor coordinates of `source`, in IRI order.
    pub fn successors(&self, source: &Iri) -> impl Iterator<Item = &Iri> {
        self.adjacency.get(source).into_iter().flatten()
    }

    pub fn has_edge(&self, source: &Iri, target: &Iri) -> bool {
        self.adjacency
            .get(source)
            .map(|t| t.contains(target))
            .unwrap_or(false)
    }

    /// Distinct (source, target) coordinate pairs, collapsing parallel
    /// relations.
    pub fn coordinate_pairs(&self) -> BTreeSet<(Iri, Iri)> {
        self.edges
            .iter()
            .map(|e| (e.source.clone(), e.target.clone()))
            .collect()
    }

    /// One `topo:reaches` triple per distinct coordinate pair.
    pub fn to_triples(&self) -> TripleSet {
        let mut set = TripleSet::new();
        for (source, target) in self.coordinate_pairs() {
            set.insert(Triple::new(
                Term::Iri(source),
                Iri::from(vocab::REACHES),
                Term::Iri(target),
            ));
        }
        set
    }

    /// Coordinate-level digraph in DOT syntax. Nodes cover both resolved
    /// ends of every element that participates in an edge.
    pub fn to_dot(&self, model: &TopologyModel) -> String {
        let mut elements: BTreeSet<&Iri> = BTreeSet::new();
        for edge in &self.edges {
            for coordinate in [&edge.source, &edge.target] {
                if let Some(element) = model.coordinate_element(coordinate) {
                    elements.insert(element);
                }
            }
        }
        let mut nodes: BTreeSet<&Iri> = BTreeSet::new();
        for element in elements {
            for end in [EndPosition::Zero, EndPosition::One] {
                if let Ok(coordinate) = model.element_end(element, end) {
                    nodes.insert(&coordinate.identity.iri);
                }
            }
        }
        let label = |coordinate: &Iri| -> String {
            let element = model.coordinate_element(coordinate);
            let value = model
                .coordinates
                .get(coordinate)
                .and_then(|c| c.value)
                .unwrap_or(f64::NAN);
            match element {
                Some(e) => {
                    let name = model
                        .elements
                        .get(e)
                        .and_then(|el| el.identity.name.clone())
                        .unwrap_or_else(|| e.local_name().to_owned());
                    format!("{name} @{value}")
                }
                None => coordinate.local_name().to_owned(),
            }
        };
        let mut out = String::from("digraph reaches {\n");
        for node in &nodes {
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\"];\n",
                node.as_str(),
                label(node)
            ));
        }
        for (source, target) in self.coordinate_pairs() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                source.as_str(),
                target.as_str()
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Why a relation (or one direction of it) produced no edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MaterializeSkip {
    pub relation: Iri,
    pub reason: String,
}

impl fmt::Display for MaterializeSkip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.relation, self.reason)
    }
}

/// Result of materializing the reaches relation.
#[derive(Debug, Clone, Default)]
pub struct Materialized {
    pub graph: ReachesGraph,
    pub skipped: Vec<MaterializeSkip>,
}

/// Derive the reaches graph from every positioned relation, one row per
/// permitted direction.
pub fn materialize_reaches(model: &TopologyModel) -> Materialized {
    let mut out = Materialized::default();
    for (relation_iri, relation) in &model.relations {
        let directions = match relation.navigability {
            Some(Navigability::Both) => vec![Direction::AToB, Direction::BToA],
            Some(Navigability::AB) => vec![Direction::AToB],
            Some(Navigability::BA) => vec![Direction::BToA],
            Some(Navigability::None) => Vec::new(),
            None => {
                out.skipped.push(MaterializeSkip {
                    relation: relation_iri.clone(),
                    reason: "missing or unknown navigability".to_owned(),
                });
                continue;
            }
        };
        for direction in directions {
            match edge_for_direction(model, relation_iri, relation, direction) {
                Ok(edge) => out.graph.insert(edge),
                Err(reason) => out.skipped.push(MaterializeSkip {
                    relation: relation_iri.clone(),
                    reason: format!("{direction}: {reason}"),
                }),
            }
        }
    }
    out.skipped.sort();
    out.skipped.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    AToB,
    BToA,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::AToB => write!(f, "A->B"),
            Direction::BToA => write!(f, "B->A"),
        }
    }
}

fn edge_for_direction(
    model: &TopologyModel,
    relation_iri: &Iri,
    relation: &PositionedRelation,
    direction: Direction,
) -> Result<ReachesEdge, String> {
    let (source_elem, source_pos, target_elem, target_pos) = match direction {
        Direction::AToB => (
            relation.element_a.as_ref(),
            relation.position_on_a,
            relation.element_b.as_ref(),
            relation.position_on_b,
        ),
        Direction::BToA => (
            relation.element_b.as_ref(),
            relation.position_on_b,
            relation.element_a.as_ref(),
            relation.position_on_a,
        ),
    };
    let source_elem = source_elem.ok_or("missing source element")?;
    let target_elem = target_elem.ok_or("missing target element")?;
    let source_pos = source_pos.ok_or("missing source end position")?;
    let target_pos = target_pos.ok_or("missing target end position")?;
    if source_elem == target_elem {
        return Err("relation links an element to itself".to_owned());
    }
    for (role, element) in [("source", source_elem), ("target", target_elem)] {
        match model.elements.get(element) {
            None => return Err(format!("{role} element {element} not in model")),
            Some(e) if e.kind != crate::model::ElementKind::Linear => {
                return Err(format!("{role} element {element} is not linear"));
            }
            Some(_) => {}
        }
    }
    // Leave the source element at the relation's end; exit the target
    // element at the end opposite to where the relation attaches.
    let source_coord = model
        .element_end(source_elem, source_pos)
        .map_err(|e| e.to_string())?;
    let target_coord = model
        .element_end(target_elem, target_pos.opposite())
        .map_err(|e| e.to_string())?;
    Ok(ReachesEdge {
        source: source_coord.identity.iri.clone(),
        target: target_coord.identity.iri.clone(),
        via: relation_iri.clone(),
    })
}

/// Errors from name-based reachability and path queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("no linear element named \"{name}\"")]
    NameNotFound { name: String },
    #[error("name \"{name}\" is ambiguous: {candidates:?}")]
    AmbiguousName {
        name: String,
        candidates: Vec<String>,
    },
    #[error("cannot resolve end {end} of {element}: {reason}")]
    UnresolvableEnd {
        element: String,
        end: EndPosition,
        reason: String,
    },
    #[error("element {element} not found")]
    UnknownElement { element: String },
}

/// Resolve a linear element by exact `name` match.
pub fn resolve_linear_name<'a>(
    model: &'a TopologyModel,
    name: &str,
) -> Result<&'a Iri, QueryError> {
    let candidates = model.linear_elements_named(name);
    match candidates.len() {
        0 => Err(QueryError::NameNotFound {
            name: name.to_owned(),
        }),
        1 => Ok(&candidates[0].identity.iri),
        _ => Err(QueryError::AmbiguousName {
            name: name.to_owned(),
            candidates: candidates
                .iter()
                .map(|e| e.identity.iri.as_str().to_owned())
                .collect(),
        }),
    }
}

/// Names of elements owning any coordinate transitively reachable from
/// `name`'s exit at `end`. The source element is excluded unless a cycle
/// re-reaches it. Unnamed elements contribute nothing.
pub fn reachable_elements(
    model: &TopologyModel,
    graph: &ReachesGraph,
    name: &str,
    end: EndPosition,
) -> Result<BTreeSet<String>, QueryError> {
    let source_elem = resolve_linear_name(model, name)?;
    let start = model
        .element_end(source_elem, end)
        .map_err(|e| QueryError::UnresolvableEnd {
            element: source_elem.as_str().to_owned(),
            end,
            reason: e.to_string(),
        })?
        .identity
        .iri
        .clone();

    let mut visited: BTreeSet<Iri> = BTreeSet::new();
    let mut queue: VecDeque<Iri> = graph.successors(&start).cloned().collect();
    while let Some(coordinate) = queue.pop_front() {
        if !visited.insert(coordinate.clone()) {
            continue;
        }
        queue.extend(graph.successors(&coordinate).cloned());
    }

    let mut names = BTreeSet::new();
    for coordinate in &visited {
        let Some(element) = model.coordinate_element(coordinate) else {
            continue;
        };
        if let Some(name) = model
            .elements
            .get(element)
            .and_then(|e| e.identity.name.clone())
        {
            names.insert(name);
        }
    }
    // Exclude the source name unless one of its own coordinates was
    // actually re-reached.
    let re_reached = visited
        .iter()
        .any(|c| model.coordinate_element(c) == Some(source_elem));
    if !re_reached {
        names.remove(name);
    }
    Ok(names)
}

/// Travel direction over one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TravelDirection {
    ZeroToOne,
    OneToZero,
}

impl TravelDirection {
    /// Exiting at 1.0 means the element was traversed 0 to 1.
    pub fn from_exit_end(end: EndPosition) -> Self {
        match end {
            EndPosition::One => TravelDirection::ZeroToOne,
            EndPosition::Zero => TravelDirection::OneToZero,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TravelDirection::ZeroToOne => "zero-to-one",
            TravelDirection::OneToZero => "one-to-zero",
        }
    }
}

impl fmt::Display for TravelDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One traversed element with its orientation and exit coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraversalStep {
    pub element: Iri,
    pub direction: TravelDirection,
    pub exit_coordinate: Iri,
}

/// An ordered, step-wise connected walk over elements. No (element,
/// direction) state repeats, which is the same as saying no exit
/// coordinate repeats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Traversal {
    pub steps: Vec<TraversalStep>,
}

/// Result of path enumeration, with an explicit truncation flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<Traversal>,
    pub truncated: bool,
}

pub const DEFAULT_MAX_PATHS: usize = 1000;
pub const DEFAULT_MAX_LENGTH: usize = 10_000;

/// Enumerate all simple paths from `source`'s exit at `end` to any
/// coordinate of `target`, in depth-first order with successors visited
/// in coordinate-IRI order. Paths stop at the first coordinate owned by
/// the target; the zero-length path is never produced.
pub fn enumerate_paths(
    model: &TopologyModel,
    graph: &ReachesGraph,
    source: &Iri,
    end: EndPosition,
    target: &Iri,
    max_paths: usize,
    max_length: usize,
) -> Result<PathEnumeration, QueryError> {
    if !model.elements.contains_key(target) {
        return Err(QueryError::UnknownElement {
            element: target.as_str().to_owned(),
        });
    }
    let start = model
        .element_end(source, end)
        .map_err(|e| QueryError::UnresolvableEnd {
            element: source.as_str().to_owned(),
            end,
            reason: e.to_string(),
        })?
        .identity
        .iri
        .clone();

    let successors_of = |coordinate: &Iri| -> Vec<Iri> {
        // Reversed so that pop() visits targets in IRI order.
        let mut s: Vec<Iri> = graph.successors(coordinate).cloned().collect();
        s.reverse();
        s
    };

    let mut paths = Vec::new();
    let mut truncated = false;
    // Iterative DFS; each frame owns its remaining successor list.
    let mut trail: Vec<Iri> = vec![start.clone()];
    let mut stack: Vec<Vec<Iri>> = vec![successors_of(&start)];

    'search: while let Some(frame) = stack.last_mut() {
        let Some(next) = frame.pop() else {
            stack.pop();
            trail.pop();
            continue;
        };
        if trail.contains(&next) {
            continue; // simple-path discipline over coordinates
        }
        let owner = model.coordinate_element(&next).cloned();
        if owner.as_ref() == Some(target) {
            if trail.len() + 1 > max_length {
                truncated = true;
                continue;
            }
            if paths.len() == max_paths {
                truncated = true;
                break 'search;
            }
            let mut full = trail.clone();
            full.push(next);
            paths.push(to_traversal(model, &full));
            continue;
        }
        if trail.len() + 1 >= max_length {
            truncated = true;
            continue;
        }
        trail.push(next.clone());
        stack.push(successors_of(&next));
    }

    paths.sort_by(|a, b| {
        let ka: Vec<&str> = a.steps.iter().map(|s| s.element.as_str()).collect();
        let kb: Vec<&str> = b.steps.iter().map(|s| s.element.as_str()).collect();
        ka.cmp(&kb)
    });
    Ok(PathEnumeration { paths, truncated })
}

fn to_traversal(model: &TopologyModel, coordinates: &[Iri]) -> Traversal {
    let steps = coordinates
        .iter()
        .map(|coordinate| {
            let element = model
                .coordinate_element(coordinate)
                .cloned()
                .unwrap_or_else(|| coordinate.clone());
            let value = model.coordinates.get(coordinate).and_then(|c| c.value);
            let direction = if value == Some(1.0) {
                TravelDirection::ZeroToOne
            } else {
                TravelDirection::OneToZero
            };
            TraversalStep {
                element,
                direction,
                exit_coordinate: coordinate.clone(),
            }
        })
        .collect();
    Traversal { steps }
}

/// A located entity applicable to one traversal step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApplicableEntity {
    pub entity: Iri,
    pub name: Option<String>,
    pub coordinate: f64,
    pub application_direction: ApplicationDirection,
}

/// One step of a traversal report: the element, its travel direction and
/// the located entities operative in that direction, ordered along the
/// direction of travel.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepReport {
    pub element: Iri,
    pub name: Option<String>,
    pub direction: TravelDirection,
    pub entities: Vec<ApplicableEntity>,
}

/// Expand a traversal into per-step reports. An entity applies when its
/// spot location's applicationDirection matches the travel direction:
/// normal on zero-to-one, reverse on one-to-zero, both always.
pub fn traversal_report(model: &TopologyModel, traversal: &Traversal) -> Vec<StepReport> {
    traversal
        .steps
        .iter()
        .map(|step| {
            let mut entities: Vec<ApplicableEntity> = model
                .locations_on_element(&step.element)
                .filter_map(|(entity, location)| {
                    let direction = location.application_direction?;
                    let coordinate = location.coordinate?;
                    let applies = match direction {
                        ApplicationDirection::Both => true,
                        ApplicationDirection::Normal => {
                            step.direction == TravelDirection::ZeroToOne
                        }
                        ApplicationDirection::Reverse => {
                            step.direction == TravelDirection::OneToZero
                        }
                    };
                    applies.then(|| ApplicableEntity {
                        entity: entity.identity.iri.clone(),
                        name: entity.identity.name.clone(),
                        coordinate,
                        application_direction: direction,
                    })
                })
                .collect();
            entities.sort_by(|a, b| {
                let ord = a.coordinate.total_cmp(&b.coordinate);
                let ord = match step.direction {
                    TravelDirection::ZeroToOne => ord,
                    TravelDirection::OneToZero => ord.reverse(),
                };
                ord.then_with(|| a.entity.cmp(&b.entity))
            });
            StepReport {
                element: step.element.clone(),
                name: model
                    .elements
                    .get(&step.element)
                    .and_then(|e| e.identity.name.clone()),
                direction: step.direction,
                entities,
            }
        })
        .collect()
}

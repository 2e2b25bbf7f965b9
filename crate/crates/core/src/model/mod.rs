//! Typed railway-topology view over a [`TripleSet`]: networks and level
//! networks, net elements, positioned relations, positioning systems with
//! intrinsic coordinates, element-part collections, and located entities
//! with spot locations.
//!
//! Construction is tolerant: partial or dangling data builds with
//! warnings, and checking it is the validation module's job. Only
//! structural faults (a literal where a resource is required, or the
//! reverse) abort.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::rdf::{CollectionError, Iri, Literal, Term, Triple, TripleSet};
use crate::vocab;

/// Identity shared by every modelled entity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Identifier {
    pub iri: Iri,
    pub id: Option<String>,
    pub name: Option<String>,
    pub longname: Option<String>,
}

impl Identifier {
    fn bare(iri: Iri) -> Self {
        Identifier {
            iri,
            id: None,
            name: None,
            longname: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum DescriptionLevel {
    Micro,
    Meso,
    Macro,
}

impl DescriptionLevel {
    pub fn from_lexical(s: &str) -> Option<Self> {
        match s {
            "micro" => Some(DescriptionLevel::Micro),
            "meso" => Some(DescriptionLevel::Meso),
            "macro" => Some(DescriptionLevel::Macro),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DescriptionLevel::Micro => "micro",
            DescriptionLevel::Meso => "meso",
            DescriptionLevel::Macro => "macro",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ElementKind {
    Linear,
    NonLinear,
    Composition,
}

impl ElementKind {
    pub fn class_iri(self) -> &'static str {
        match self {
            ElementKind::Linear => vocab::LINEAR_ELEMENT,
            ElementKind::NonLinear => vocab::NON_LINEAR_ELEMENT,
            ElementKind::Composition => vocab::COMPOSITION_NET_ELEMENT,
        }
    }
}

/// Which end of an element a relation attaches to, or a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum EndPosition {
    Zero,
    One,
}

impl EndPosition {
    pub fn from_integer(v: i64) -> Option<Self> {
        match v {
            0 => Some(EndPosition::Zero),
            1 => Some(EndPosition::One),
            _ => None,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            EndPosition::Zero => EndPosition::One,
            EndPosition::One => EndPosition::Zero,
        }
    }

    pub fn coordinate_value(self) -> f64 {
        match self {
            EndPosition::Zero => 0.0,
            EndPosition::One => 1.0,
        }
    }
}

impl fmt::Display for EndPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndPosition::Zero => write!(f, "0"),
            EndPosition::One => write!(f, "1"),
        }
    }
}

/// Permitted movement across a positioned relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Navigability {
    AB,
    BA,
    Both,
    None,
}

impl Navigability {
    pub fn from_lexical(s: &str) -> Option<Self> {
        match s {
            "AB" => Some(Navigability::AB),
            "BA" => Some(Navigability::BA),
            "Both" => Some(Navigability::Both),
            "None" => Some(Navigability::None),
            _ => Option::None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Navigability::AB => "AB",
            Navigability::BA => "BA",
            Navigability::Both => "Both",
            Navigability::None => "None",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ApplicationDirection {
    Normal,
    Reverse,
    Both,
}

impl ApplicationDirection {
    pub fn from_lexical(s: &str) -> Option<Self> {
        match s {
            "normal" => Some(ApplicationDirection::Normal),
            "reverse" => Some(ApplicationDirection::Reverse),
            "both" => Some(ApplicationDirection::Both),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ApplicationDirection::Normal => "normal",
            ApplicationDirection::Reverse => "reverse",
            ApplicationDirection::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Network {
    pub identity: Identifier,
    pub levels: Vec<Iri>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelNetwork {
    pub identity: Identifier,
    pub description_level: Option<DescriptionLevel>,
    pub members: BTreeSet<Iri>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NetElement {
    pub identity: Identifier,
    pub kind: ElementKind,
    /// Positioning systems, for linear and non-linear elements.
    pub positioning: Vec<Iri>,
    /// Element part collections, for composition elements.
    pub collections: Vec<Iri>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositionedRelation {
    pub identity: Identifier,
    pub element_a: Option<Iri>,
    pub element_b: Option<Iri>,
    pub position_on_a: Option<EndPosition>,
    pub position_on_b: Option<EndPosition>,
    pub navigability: Option<Navigability>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssociatedPositioningSystem {
    pub identity: Identifier,
    /// The element this system is attached to (inverse of
    /// `associatedPositioningSystem`).
    pub owner: Option<Iri>,
    pub coordinates: BTreeSet<Iri>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntrinsicCoordinate {
    pub identity: Identifier,
    pub value: Option<f64>,
    /// Owning positioning system (inverse of `intrinsicCoordinate`).
    pub parent: Option<Iri>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CollectionOrdering {
    Ordered,
    Unordered,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ElementPartCollection {
    pub identity: Identifier,
    pub ordering: CollectionOrdering,
    /// The composition element aggregating through this collection
    /// (inverse of `elementCollection`).
    pub whole: Option<Iri>,
    pub parts: BTreeSet<Iri>,
    pub ordered_parts: Option<Vec<Iri>>,
    pub sequence: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocatedNetEntity {
    pub identity: Identifier,
    pub locations: Vec<Iri>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpotLocation {
    pub identity: Identifier,
    pub element: Option<Iri>,
    pub coordinate: Option<f64>,
    pub application_direction: Option<ApplicationDirection>,
}

/// A construction warning: recoverable oddities found while building.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BuildWarning {
    pub subject: Option<String>,
    pub message: String,
}

impl fmt::Display for BuildWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.subject {
            Some(s) => write!(f, "{s}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Structural faults that abort model construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("object of {predicate} on {subject} must be a resource, found literal {found}")]
    ExpectedResource {
        subject: String,
        predicate: String,
        found: String,
    },
    #[error("object of {predicate} on {subject} must be a literal, found {found}")]
    ExpectedLiteral {
        subject: String,
        predicate: String,
        found: String,
    },
}

/// The typed model. Immutable after construction; references are stored
/// as IRIs and resolved on lookup, so dangling data is representable.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TopologyModel {
    pub networks: BTreeMap<Iri, Network>,
    pub level_networks: BTreeMap<Iri, LevelNetwork>,
    pub elements: BTreeMap<Iri, NetElement>,
    pub relations: BTreeMap<Iri, PositionedRelation>,
    pub positioning_systems: BTreeMap<Iri, AssociatedPositioningSystem>,
    pub coordinates: BTreeMap<Iri, IntrinsicCoordinate>,
    pub collections: BTreeMap<Iri, ElementPartCollection>,
    pub entities: BTreeMap<Iri, LocatedNetEntity>,
    pub locations: BTreeMap<Iri, SpotLocation>,
    source: TripleSet,
}

/// Errors from [`TopologyModel::element_end`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EndError {
    #[error("element {element} not found")]
    UnknownElement { element: String },
    #[error("element {element} has no positioning system")]
    NoPositioning { element: String },
    #[error("element {element} has no coordinate at end {end}")]
    MissingEndCoordinate { element: String, end: EndPosition },
    #[error("element {element} has multiple coordinates at end {end}")]
    AmbiguousEndCoordinate { element: String, end: EndPosition },
}

/// Errors from [`TopologyModel::element_parts`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartsError {
    #[error("element {element} not found")]
    UnknownElement { element: String },
    #[error("element {element} is not a composition element")]
    NotAComposition { element: String },
    #[error("composition {element} has no element part collection")]
    NoCollection { element: String },
    #[error("collection {collection}: ordered list members differ from the element part set")]
    Inconsistent { collection: String },
    #[error("collection {collection}: malformed part list: {source}")]
    MalformedList {
        collection: String,
        source: CollectionError,
    },
}

impl TopologyModel {
    /// Build a typed model from parsed triples. Returns the model plus
    /// construction warnings, sorted for determinism.
    pub fn build(data: &TripleSet) -> Result<(TopologyModel, Vec<BuildWarning>), ModelError> {
        Builder::new(data).build()
    }

    pub fn source(&self) -> &TripleSet {
        &self.source
    }

    pub fn is_empty(&self) -> bool {
        self.networks.is_empty()
            && self.level_networks.is_empty()
            && self.elements.is_empty()
            && self.relations.is_empty()
            && self.positioning_systems.is_empty()
            && self.coordinates.is_empty()
            && self.collections.is_empty()
            && self.entities.is_empty()
            && self.locations.is_empty()
    }

    /// Compare the typed content of two models, ignoring the originating
    /// triples.
    pub fn same_content(&self, other: &TopologyModel) -> bool {
        self.networks == other.networks
            && self.level_networks == other.level_networks
            && self.elements == other.elements
            && self.relations == other.relations
            && self.positioning_systems == other.positioning_systems
            && self.coordinates == other.coordinates
            && self.collections == other.collections
            && self.entities == other.entities
            && self.locations == other.locations
    }

    /// Emit triples for all typed entities. Building the result again
    /// yields a model with the same content.
    pub fn to_triples(&self) -> TripleSet {
        let mut set = TripleSet::new();
        let mut add = |s: &Iri, p: &str, o: Term| {
            set.insert(Triple::new(Term::Iri(s.clone()), Iri::from(p), o));
        };
        let identity = |add: &mut dyn FnMut(&Iri, &str, Term), ident: &Identifier| {
            if let Some(id) = &ident.id {
                add(
                    &ident.iri,
                    vocab::ID,
                    Term::Literal(Literal::string(id.clone())),
                );
            }
            if let Some(name) = &ident.name {
                add(
                    &ident.iri,
                    vocab::NAME,
                    Term::Literal(Literal::string(name.clone())),
                );
            }
            if let Some(longname) = &ident.longname {
                add(
                    &ident.iri,
                    vocab::LONGNAME,
                    Term::Literal(Literal::string(longname.clone())),
                );
            }
        };

        for (iri, network) in &self.networks {
            add(iri, vocab::RDF_TYPE, Term::Iri(Iri::from(vocab::NETWORK)));
            identity(&mut add, &network.identity);
            for level in &network.levels {
                add(iri, vocab::LEVEL, Term::Iri(level.clone()));
            }
        }
        for (iri, level) in &self.level_networks {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::LEVEL_NETWORK)),
            );
            identity(&mut add, &level.identity);
            if let Some(dl) = level.description_level {
                add(
                    iri,
                    vocab::DESCRIPTION_LEVEL,
                    Term::Literal(Literal::string(dl.as_str())),
                );
            }
            for member in &level.members {
                add(iri, vocab::NETWORK_RESOURCE, Term::Iri(member.clone()));
            }
        }
        for (iri, element) in &self.elements {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(element.kind.class_iri())),
            );
            identity(&mut add, &element.identity);
            for aps in &element.positioning {
                add(
                    iri,
                    vocab::ASSOCIATED_POSITIONING_SYSTEM_PROP,
                    Term::Iri(aps.clone()),
                );
            }
            for collection in &element.collections {
                add(
                    iri,
                    vocab::ELEMENT_COLLECTION,
                    Term::Iri(collection.clone()),
                );
            }
        }
        for (iri, relation) in &self.relations {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::POSITIONED_RELATION)),
            );
            identity(&mut add, &relation.identity);
            if let Some(a) = &relation.element_a {
                add(iri, vocab::ELEMENT_A, Term::Iri(a.clone()));
            }
            if let Some(b) = &relation.element_b {
                add(iri, vocab::ELEMENT_B, Term::Iri(b.clone()));
            }
            if let Some(p) = relation.position_on_a {
                add(
                    iri,
                    vocab::POSITION_ON_A,
                    Term::Literal(Literal::integer(p.coordinate_value() as i64)),
                );
            }
            if let Some(p) = relation.position_on_b {
                add(
                    iri,
                    vocab::POSITION_ON_B,
                    Term::Literal(Literal::integer(p.coordinate_value() as i64)),
                );
            }
            if let Some(nav) = relation.navigability {
                add(
                    iri,
                    vocab::NAVIGABILITY,
                    Term::Literal(Literal::string(nav.as_str())),
                );
            }
        }
        for (iri, aps) in &self.positioning_systems {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::ASSOCIATED_POSITIONING_SYSTEM)),
            );
            identity(&mut add, &aps.identity);
            for coordinate in &aps.coordinates {
                add(
                    iri,
                    vocab::INTRINSIC_COORDINATE_PROP,
                    Term::Iri(coordinate.clone()),
                );
            }
        }
        for (iri, coordinate) in &self.coordinates {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::INTRINSIC_COORDINATE)),
            );
            identity(&mut add, &coordinate.identity);
            if let Some(v) = coordinate.value {
                add(
                    iri,
                    vocab::INTRINSIC_COORD,
                    Term::Literal(Literal::decimal(v)),
                );
            }
        }
        for (iri, entity) in &self.entities {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::LOCATED_NET_ENTITY)),
            );
            identity(&mut add, &entity.identity);
            for location in &entity.locations {
                add(iri, vocab::LOCATION, Term::Iri(location.clone()));
            }
        }
        for (iri, location) in &self.locations {
            add(
                iri,
                vocab::RDF_TYPE,
                Term::Iri(Iri::from(vocab::SPOT_LOCATION)),
            );
            identity(&mut add, &location.identity);
            if let Some(element) = &location.element {
                add(iri, vocab::NET_ELEMENT, Term::Iri(element.clone()));
            }
            if let Some(coordinate) = location.coordinate {
                add(
                    iri,
                    vocab::COORDINATE,
                    Term::Literal(Literal::decimal(coordinate)),
                );
            }
            if let Some(dir) = location.application_direction {
                add(
                    iri,
                    vocab::APPLICATION_DIRECTION,
                    Term::Literal(Literal::string(dir.as_str())),
                );
            }
        }
        // Collections last: the list chains need mutable access to the set.
        for (iri, collection) in &self.collections {
            let class = match collection.ordering {
                CollectionOrdering::Ordered => vocab::ORDERED_COLLECTION,
                CollectionOrdering::Unordered => vocab::UNORDERED_COLLECTION,
            };
            let subject = Term::Iri(iri.clone());
            set.insert(Triple::new(
                subject.clone(),
                Iri::from(vocab::RDF_TYPE),
                Term::Iri(Iri::from(class)),
            ));
            if let Some(id) = &collection.identity.id {
                set.insert(Triple::new(
                    subject.clone(),
                    Iri::from(vocab::ID),
                    Term::Literal(Literal::string(id.clone())),
                ));
            }
            if let Some(name) = &collection.identity.name {
                set.insert(Triple::new(
                    subject.clone(),
                    Iri::from(vocab::NAME),
                    Term::Literal(Literal::string(name.clone())),
                ));
            }
            if let Some(longname) = &collection.identity.longname {
                set.insert(Triple::new(
                    subject.clone(),
                    Iri::from(vocab::LONGNAME),
                    Term::Literal(Literal::string(longname.clone())),
                ));
            }
            if let Some(sequence) = collection.sequence {
                set.insert(Triple::new(
                    subject.clone(),
                    Iri::from(vocab::SEQUENCE),
                    Term::Literal(Literal::integer(sequence)),
                ));
            }
            for part in &collection.parts {
                set.insert(Triple::new(
                    subject.clone(),
                    Iri::from(vocab::ELEMENT_PART),
                    Term::Iri(part.clone()),
                ));
            }
            if let Some(ordered) = &collection.ordered_parts {
                let members: Vec<Term> = ordered.iter().map(|p| Term::Iri(p.clone())).collect();
                let head = set.insert_collection(&members, iri.as_str());
                set.insert(Triple::new(
                    subject,
                    Iri::from(vocab::ELEMENT_PART_LIST),
                    head,
                ));
            }
        }
        set
    }

    /// The intrinsic coordinate sitting at end 0 or 1 of a linear or
    /// non-linear element. Intermediate coordinates are ignored.
    pub fn element_end(
        &self,
        element: &Iri,
        end: EndPosition,
    ) -> Result<&IntrinsicCoordinate, EndError> {
        let elem = self
            .elements
            .get(element)
            .ok_or_else(|| EndError::UnknownElement {
                element: element.as_str().to_owned(),
            })?;
        if elem.positioning.is_empty() {
            return Err(EndError::NoPositioning {
                element: element.as_str().to_owned(),
            });
        }
        let wanted = end.coordinate_value();
        let mut found: Option<&IntrinsicCoordinate> = None;
        for aps_iri in &elem.positioning {
            let Some(aps) = self.positioning_systems.get(aps_iri) else {
                continue;
            };
            for coord_iri in &aps.coordinates {
                let Some(coordinate) = self.coordinates.get(coord_iri) else {
                    continue;
                };
                if coordinate.value == Some(wanted) {
                    if found.is_some() {
                        return Err(EndError::AmbiguousEndCoordinate {
                            element: element.as_str().to_owned(),
                            end,
                        });
                    }
                    found = Some(coordinate);
                }
            }
        }
        found.ok_or_else(|| EndError::MissingEndCoordinate {
            element: element.as_str().to_owned(),
            end,
        })
    }

    /// The element owning a coordinate, resolved through its positioning
    /// system.
    pub fn coordinate_element(&self, coordinate: &Iri) -> Option<&Iri> {
        let parent = self.coordinates.get(coordinate)?.parent.as_ref()?;
        self.positioning_systems.get(parent)?.owner.as_ref()
    }

    /// Parts of a composition element: the unordered set, plus the
    /// ordered list when the composition has exactly one ordered
    /// collection.
    pub fn element_parts(
        &self,
        element: &Iri,
    ) -> Result<(BTreeSet<Iri>, Option<Vec<Iri>>), PartsError> {
        let elem = self
            .elements
            .get(element)
            .ok_or_else(|| PartsError::UnknownElement {
                element: element.as_str().to_owned(),
            })?;
        if elem.kind != ElementKind::Composition {
            return Err(PartsError::NotAComposition {
                element: element.as_str().to_owned(),
            });
        }
        if elem.collections.is_empty() {
            return Err(PartsError::NoCollection {
                element: element.as_str().to_owned(),
            });
        }
        let mut parts = BTreeSet::new();
        let mut ordered = None;
        let single = elem.collections.len() == 1;
        for collection_iri in &elem.collections {
            let Some(collection) = self.collections.get(collection_iri) else {
                continue;
            };
            parts.extend(collection.parts.iter().cloned());
            if single && collection.ordering == CollectionOrdering::Ordered {
                let list = self.collection_ordered_parts(collection_iri)?;
                let as_set: BTreeSet<&Iri> = list.iter().collect();
                let parts_ref: BTreeSet<&Iri> = collection.parts.iter().collect();
                if as_set != parts_ref {
                    return Err(PartsError::Inconsistent {
                        collection: collection_iri.as_str().to_owned(),
                    });
                }
                ordered = Some(list);
            }
        }
        Ok((parts, ordered))
    }

    /// Resolve a collection's `elementPartList` from the raw triples.
    pub fn collection_ordered_parts(&self, collection: &Iri) -> Result<Vec<Iri>, PartsError> {
        let subject = Term::Iri(collection.clone());
        let Some(head) = self.source.object(&subject, vocab::ELEMENT_PART_LIST) else {
            return Ok(Vec::new());
        };
        let members =
            self.source
                .expand_collection(head)
                .map_err(|source| PartsError::MalformedList {
                    collection: collection.as_str().to_owned(),
                    source,
                })?;
        Ok(members
            .into_iter()
            .filter_map(|m| match m {
                Term::Iri(iri) => Some(iri),
                _ => None,
            })
            .collect())
    }

    /// Members of every level network at the given description level.
    pub fn elements_of_level(&self, level: DescriptionLevel) -> BTreeSet<Iri> {
        let mut members = BTreeSet::new();
        for network in self.level_networks.values() {
            if network.description_level == Some(level) {
                members.extend(network.members.iter().cloned());
            }
        }
        members
    }

    /// Linear elements carrying the given `name`, sorted by IRI.
    pub fn linear_elements_named(&self, name: &str) -> Vec<&NetElement> {
        self.elements
            .values()
            .filter(|e| e.kind == ElementKind::Linear && e.identity.name.as_deref() == Some(name))
            .collect()
    }

    /// Spot locations attached to entities, grouped per element.
    pub fn locations_on_element<'a>(
        &'a self,
        element: &'a Iri,
    ) -> impl Iterator<Item = (&'a LocatedNetEntity, &'a SpotLocation)> {
        self.entities.values().flat_map(move |entity| {
            entity
                .locations
                .iter()
                .filter_map(move |loc_iri| self.locations.get(loc_iri))
                .filter(move |loc| loc.element.as_ref() == Some(element))
                .map(move |loc| (entity, loc))
        })
    }

    /// Entity counts by type, for report summaries.
    pub fn summary(&self) -> ModelSummary {
        let mut linear = 0;
        let mut non_linear = 0;
        let mut composition = 0;
        for element in self.elements.values() {
            match element.kind {
                ElementKind::Linear => linear += 1,
                ElementKind::NonLinear => non_linear += 1,
                ElementKind::Composition => composition += 1,
            }
        }
        ModelSummary {
            networks: self.networks.len(),
            level_networks: self.level_networks.len(),
            linear_elements: linear,
            non_linear_elements: non_linear,
            composition_elements: composition,
            positioned_relations: self.relations.len(),
            positioning_systems: self.positioning_systems.len(),
            intrinsic_coordinates: self.coordinates.len(),
            collections: self.collections.len(),
            located_entities: self.entities.len(),
            spot_locations: self.locations.len(),
        }
    }
}

/// Entity counts by type.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub networks: usize,
    pub level_networks: usize,
    pub linear_elements: usize,
    pub non_linear_elements: usize,
    pub composition_elements: usize,
    pub positioned_relations: usize,
    pub positioning_systems: usize,
    pub intrinsic_coordinates: usize,
    pub collections: usize,
    pub located_entities: usize,
    pub spot_locations: usize,
}

impl fmt::Display for ModelSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} network(s), {} level network(s), {} linear / {} non-linear / {} composition element(s), \
             {} relation(s), {} positioning system(s), {} coordinate(s), {} collection(s), \
             {} located entity(ies), {} spot location(s)",
            self.networks,
            self.level_networks,
            self.linear_elements,
            self.non_linear_elements,
            self.composition_elements,
            self.positioned_relations,
            self.positioning_systems,
            self.intrinsic_coordinates,
            self.collections,
            self.located_entities,
            self.spot_locations
        )
    }
}

struct Builder<'a> {
    data: &'a TripleSet,
    warnings: Vec<BuildWarning>,
}

impl<'a> Builder<'a> {
    fn new(data: &'a TripleSet) -> Self {
        Builder {
            data,
            warnings: Vec::new(),
        }
    }

    fn warn(&mut self, subject: Option<&Term>, message: impl Into<String>) {
        self.warnings.push(BuildWarning {
            subject: subject.map(|s| s.to_string()),
            message: message.into(),
        });
    }

    fn build(mut self) -> Result<(TopologyModel, Vec<BuildWarning>), ModelError> {
        self.check_structure()?;
        let mut model = TopologyModel {
            source: self.data.clone(),
            ..TopologyModel::default()
        };

        // Pass 1: index every subject with a known type.
        let mut typed: BTreeMap<Term, Vec<&Iri>> = BTreeMap::new();
        for t in self.data.triples_with_predicate(vocab::RDF_TYPE) {
            if let Term::Iri(class) = &t.object {
                typed.entry(t.subject.clone()).or_default().push(class);
            }
        }

        for (subject, classes) in &typed {
            let known: Vec<&str> = classes
                .iter()
                .map(|c| c.as_str())
                .filter(|c| vocab::is_known_class(c))
                .collect();
            for class in classes {
                if !vocab::is_known_class(class.as_str()) {
                    self.warn(Some(subject), format!("unknown type {class}"));
                }
            }
            if known.is_empty() {
                continue;
            }
            let Term::Iri(iri) = subject else {
                self.warn(
                    Some(subject),
                    "blank node with a topology type is not indexed",
                );
                continue;
            };
            self.index_subject(&mut model, iri, &known);
        }

        // Pass 2: unknown predicates.
        for t in self.data.iter() {
            if !vocab::is_known_predicate(t.predicate.as_str()) {
                self.warn(
                    Some(&t.subject),
                    format!("unknown predicate {}", t.predicate),
                );
            }
        }

        // Pass 3: inverse references.
        let aps_keys: Vec<Iri> = model.positioning_systems.keys().cloned().collect();
        for aps_iri in aps_keys {
            let owner = model
                .elements
                .iter()
                .find(|(_, e)| e.positioning.contains(&aps_iri))
                .map(|(iri, _)| iri.clone());
            model.positioning_systems.get_mut(&aps_iri).unwrap().owner = owner;
        }
        let coordinate_keys: Vec<Iri> = model.coordinates.keys().cloned().collect();
        for coord_iri in coordinate_keys {
            let parent = model
                .positioning_systems
                .iter()
                .find(|(_, aps)| aps.coordinates.contains(&coord_iri))
                .map(|(iri, _)| iri.clone());
            model.coordinates.get_mut(&coord_iri).unwrap().parent = parent;
        }
        let collection_keys: Vec<Iri> = model.collections.keys().cloned().collect();
        for coll_iri in collection_keys {
            let whole = model
                .elements
                .iter()
                .find(|(_, e)| e.collections.contains(&coll_iri))
                .map(|(iri, _)| iri.clone());
            model.collections.get_mut(&coll_iri).unwrap().whole = whole;
        }

        // Network sanity (tolerated, validation firms this up).
        for (iri, network) in &model.networks {
            if network.levels.is_empty() {
                self.warn(
                    Some(&Term::Iri(iri.clone())),
                    "network has no level networks",
                );
            }
        }

        self.warnings.sort();
        self.warnings.dedup();
        Ok((model, self.warnings))
    }

    /// Abort on literals in resource position and vice versa.
    fn check_structure(&self) -> Result<(), ModelError> {
        for t in self.data.iter() {
            let p = t.predicate.as_str();
            if vocab::OBJECT_PROPERTIES.contains(&p) || p == vocab::RDF_TYPE {
                if let Term::Literal(_) = &t.object {
                    return Err(ModelError::ExpectedResource {
                        subject: t.subject.to_string(),
                        predicate: t.predicate.to_string(),
                        found: t.object.to_string(),
                    });
                }
            }
            if vocab::DATA_PROPERTIES.contains(&p) && t.object.is_resource() {
                return Err(ModelError::ExpectedLiteral {
                    subject: t.subject.to_string(),
                    predicate: t.predicate.to_string(),
                    found: t.object.to_string(),
                });
            }
        }
        Ok(())
    }

    fn index_subject(&mut self, model: &mut TopologyModel, iri: &Iri, classes: &[&str]) {
        let subject = Term::Iri(iri.clone());
        let identity = self.identity(&subject, iri);

        // Net element kinds, with a deterministic primary on double-typing.
        let kinds: Vec<ElementKind> = [
            (vocab::LINEAR_ELEMENT, ElementKind::Linear),
            (vocab::NON_LINEAR_ELEMENT, ElementKind::NonLinear),
            (vocab::COMPOSITION_NET_ELEMENT, ElementKind::Composition),
        ]
        .iter()
        .filter(|(class, _)| classes.contains(class))
        .map(|(_, kind)| *kind)
        .collect();
        if let Some(&kind) = kinds.first() {
            if kinds.len() > 1 {
                self.warn(
                    Some(&subject),
                    "element typed with multiple net element kinds",
                );
            }
            let positioning =
                self.resource_objects(&subject, vocab::ASSOCIATED_POSITIONING_SYSTEM_PROP);
            let collections = self.resource_objects(&subject, vocab::ELEMENT_COLLECTION);
            model.elements.insert(
                iri.clone(),
                NetElement {
                    identity: identity.clone(),
                    kind,
                    positioning,
                    collections,
                },
            );
        }

        if classes.contains(&vocab::NETWORK) {
            let levels = self.resource_objects(&subject, vocab::LEVEL);
            model.networks.insert(
                iri.clone(),
                Network {
                    identity: identity.clone(),
                    levels,
                },
            );
        }
        if classes.contains(&vocab::LEVEL_NETWORK) {
            let description_level = self
                .string_object(&subject, vocab::DESCRIPTION_LEVEL)
                .and_then(|s| {
                    let parsed = DescriptionLevel::from_lexical(&s);
                    if parsed.is_none() {
                        self.warn(Some(&subject), format!("unknown description level \"{s}\""));
                    }
                    parsed
                });
            let members = self
                .resource_objects(&subject, vocab::NETWORK_RESOURCE)
                .into_iter()
                .collect();
            model.level_networks.insert(
                iri.clone(),
                LevelNetwork {
                    identity: identity.clone(),
                    description_level,
                    members,
                },
            );
        }
        if classes.contains(&vocab::POSITIONED_RELATION) {
            let element_a = self.single_resource(&subject, vocab::ELEMENT_A);
            let element_b = self.single_resource(&subject, vocab::ELEMENT_B);
            let position_on_a = self.position_object(&subject, vocab::POSITION_ON_A);
            let position_on_b = self.position_object(&subject, vocab::POSITION_ON_B);
            let navigability = self
                .string_object(&subject, vocab::NAVIGABILITY)
                .and_then(|s| {
                    let parsed = Navigability::from_lexical(&s);
                    if parsed.is_none() {
                        self.warn(Some(&subject), format!("unknown navigability \"{s}\""));
                    }
                    parsed
                });
            model.relations.insert(
                iri.clone(),
                PositionedRelation {
                    identity: identity.clone(),
                    element_a,
                    element_b,
                    position_on_a,
                    position_on_b,
                    navigability,
                },
            );
        }
        if classes.contains(&vocab::ASSOCIATED_POSITIONING_SYSTEM) {
            let coordinates = self
                .resource_objects(&subject, vocab::INTRINSIC_COORDINATE_PROP)
                .into_iter()
                .collect();
            model.positioning_systems.insert(
                iri.clone(),
                AssociatedPositioningSystem {
                    identity: identity.clone(),
                    owner: None,
                    coordinates,
                },
            );
        }
        if classes.contains(&vocab::INTRINSIC_COORDINATE) {
            let value = self.numeric_object(&subject, vocab::INTRINSIC_COORD);
            model.coordinates.insert(
                iri.clone(),
                IntrinsicCoordinate {
                    identity: identity.clone(),
                    value,
                    parent: None,
                },
            );
        }
        let ordered = classes.contains(&vocab::ORDERED_COLLECTION);
        let unordered = classes.contains(&vocab::UNORDERED_COLLECTION);
        if ordered || unordered {
            if ordered && unordered {
                self.warn(
                    Some(&subject),
                    "collection typed both ordered and unordered",
                );
            }
            let ordering = if ordered {
                CollectionOrdering::Ordered
            } else {
                CollectionOrdering::Unordered
            };
            let parts: BTreeSet<Iri> = self
                .resource_objects(&subject, vocab::ELEMENT_PART)
                .into_iter()
                .collect();
            let sequence = self.integer_object(&subject, vocab::SEQUENCE);
            let ordered_parts = match self.data.object(&subject, vocab::ELEMENT_PART_LIST) {
                Some(head) => match self.data.expand_collection(head) {
                    Ok(members) => Some(
                        members
                            .into_iter()
                            .filter_map(|m| match m {
                                Term::Iri(iri) => Some(iri),
                                other => {
                                    self.warn(
                                        Some(&subject),
                                        format!("non-IRI member {other} in element part list"),
                                    );
                                    None
                                }
                            })
                            .collect(),
                    ),
                    Err(e) => {
                        self.warn(Some(&subject), format!("malformed element part list: {e}"));
                        None
                    }
                },
                None => None,
            };
            model.collections.insert(
                iri.clone(),
                ElementPartCollection {
                    identity: identity.clone(),
                    ordering,
                    whole: None,
                    parts,
                    ordered_parts,
                    sequence,
                },
            );
        }
        if classes.contains(&vocab::LOCATED_NET_ENTITY) {
            let locations = self.resource_objects(&subject, vocab::LOCATION);
            model.entities.insert(
                iri.clone(),
                LocatedNetEntity {
                    identity: identity.clone(),
                    locations,
                },
            );
        }
        if classes.contains(&vocab::SPOT_LOCATION) {
            let element = self.single_resource(&subject, vocab::NET_ELEMENT);
            let coordinate = self.numeric_object(&subject, vocab::COORDINATE);
            let application_direction = self
                .string_object(&subject, vocab::APPLICATION_DIRECTION)
                .and_then(|s| {
                    let parsed = ApplicationDirection::from_lexical(&s);
                    if parsed.is_none() {
                        self.warn(
                            Some(&subject),
                            format!("unknown application direction \"{s}\""),
                        );
                    }
                    parsed
                });
            model.locations.insert(
                iri.clone(),
                SpotLocation {
                    identity,
                    element,
                    coordinate,
                    application_direction,
                },
            );
        }
    }

    fn identity(&mut self, subject: &Term, iri: &Iri) -> Identifier {
        let mut identity = Identifier::bare(iri.clone());
        identity.id = self.string_object(subject, vocab::ID);
        identity.name = self.string_object(subject, vocab::NAME);
        identity.longname = self.string_object(subject, vocab::LONGNAME);
        identity
    }

    /// All IRI objects for (subject, predicate), in term order.
    fn resource_objects(&mut self, subject: &Term, predicate: &str) -> Vec<Iri> {
        self.data
            .objects(subject, predicate)
            .filter_map(|o| o.as_iri().cloned())
            .collect()
    }

    /// First IRI object; warns when several are present.
    fn single_resource(&mut self, subject: &Term, predicate: &str) -> Option<Iri> {
        let all = self.resource_objects(subject, predicate);
        if all.len() > 1 {
            self.warn(
                Some(subject),
                format!("multiple values for single-valued {predicate}"),
            );
        }
        all.into_iter().next()
    }

    fn string_object(&mut self, subject: &Term, predicate: &str) -> Option<String> {
        let mut values: Vec<String> = self
            .data
            .objects(subject, predicate)
            .filter_map(|o| o.as_literal())
            .map(|l| l.lexical.clone())
            .collect();
        values.sort();
        if values.len() > 1 {
            self.warn(
                Some(subject),
                format!("multiple values for single-valued {predicate}"),
            );
        }
        values.into_iter().next()
    }

    fn numeric_object(&mut self, subject: &Term, predicate: &str) -> Option<f64> {
        let subject_str = subject.clone();
        let literals: Vec<&Literal> = self
            .data
            .objects(subject, predicate)
            .filter_map(|o| o.as_literal())
            .collect();
        if literals.len() > 1 {
            self.warn(
                Some(&subject_str),
                format!("multiple values for single-valued {predicate}"),
            );
        }
        let literal = literals.first()?;
        match literal.numeric_value() {
            Some(v) => Some(v),
            None => {
                self.warn(
                    Some(&subject_str),
                    format!("non-numeric value \"{}\" for {predicate}", literal.lexical),
                );
                None
            }
        }
    }

    fn integer_object(&mut self, subject: &Term, predicate: &str) -> Option<i64> {
        let subject_str = subject.clone();
        let literals: Vec<&Literal> = self
            .data
            .objects(subject, predicate)
            .filter_map(|o| o.as_literal())
            .collect();
        if literals.len() > 1 {
            self.warn(
                Some(&subject_str),
                format!("multiple values for single-valued {predicate}"),
            );
        }
        let literal = literals.first()?;
        match literal.integer_value() {
            Some(v) => Some(v),
            None => {
                self.warn(
                    Some(&subject_str),
                    format!("non-integer value \"{}\" for {predicate}", literal.lexical),
                );
                None
            }
        }
    }

    fn position_object(&mut self, subject: &Term, predicate: &str) -> Option<EndPosition> {
        let value = self.integer_object(subject, predicate)?;
        let parsed = EndPosition::from_integer(value);
        if parsed.is_none() {
            self.warn(
                Some(subject),
                format!("end position {value} for {predicate} is not 0 or 1"),
            );
        }
        parsed
    }
}

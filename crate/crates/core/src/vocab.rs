//! IRI constants for the rail topology vocabulary and the RDF/XSD terms
//! the artifact touches.
//!
//! All object and data properties use singular names (`elementA`,
//! `intrinsicCoordinate`, ...) regardless of the multiplicity of the
//! underlying association.

/// Namespace of the rail topology vocabulary.
pub const TOPO_NS: &str = "https://w3id.org/rail/topo#";

macro_rules! topo {
    ($($konst:ident => $local:literal),+ $(,)?) => {
        $(pub const $konst: &str = concat!("https://w3id.org/rail/topo#", $local);)+
    };
}

// Classes.
topo! {
    NETWORK => "Network",
    LEVEL_NETWORK => "LevelNetwork",
    LINEAR_ELEMENT => "LinearElement",
    NON_LINEAR_ELEMENT => "NonLinearElement",
    COMPOSITION_NET_ELEMENT => "CompositionNetElement",
    POSITIONED_RELATION => "PositionedRelation",
    ASSOCIATED_POSITIONING_SYSTEM => "AssociatedPositioningSystem",
    INTRINSIC_COORDINATE => "IntrinsicCoordinate",
    ORDERED_COLLECTION => "OrderedCollection",
    UNORDERED_COLLECTION => "UnorderedCollection",
    LOCATED_NET_ENTITY => "LocatedNetEntity",
    SPOT_LOCATION => "SpotLocation",
}

// Properties.
topo! {
    ID => "id",
    NAME => "name",
    LONGNAME => "longname",
    LEVEL => "level",
    DESCRIPTION_LEVEL => "descriptionLevel",
    NETWORK_RESOURCE => "networkResource",
    ELEMENT_A => "elementA",
    ELEMENT_B => "elementB",
    POSITION_ON_A => "positionOnA",
    POSITION_ON_B => "positionOnB",
    NAVIGABILITY => "navigability",
    ASSOCIATED_POSITIONING_SYSTEM_PROP => "associatedPositioningSystem",
    INTRINSIC_COORDINATE_PROP => "intrinsicCoordinate",
    INTRINSIC_COORD => "intrinsicCoord",
    ELEMENT_COLLECTION => "elementCollection",
    ELEMENT_PART => "elementPart",
    ELEMENT_PART_LIST => "elementPartList",
    SEQUENCE => "sequence",
    LOCATION => "location",
    NET_ELEMENT => "netElement",
    COORDINATE => "coordinate",
    APPLICATION_DIRECTION => "applicationDirection",
    REACHES => "reaches",
}

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDF_FIRST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
pub const RDF_REST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
pub const RDF_NIL: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";

/// Concrete classes the model builder indexes.
pub const KNOWN_CLASSES: &[&str] = &[
    NETWORK,
    LEVEL_NETWORK,
    LINEAR_ELEMENT,
    NON_LINEAR_ELEMENT,
    COMPOSITION_NET_ELEMENT,
    POSITIONED_RELATION,
    ASSOCIATED_POSITIONING_SYSTEM,
    INTRINSIC_COORDINATE,
    ORDERED_COLLECTION,
    UNORDERED_COLLECTION,
    LOCATED_NET_ENTITY,
    SPOT_LOCATION,
];

/// Properties whose objects must be resources.
pub const OBJECT_PROPERTIES: &[&str] = &[
    LEVEL,
    NETWORK_RESOURCE,
    ELEMENT_A,
    ELEMENT_B,
    ASSOCIATED_POSITIONING_SYSTEM_PROP,
    INTRINSIC_COORDINATE_PROP,
    ELEMENT_COLLECTION,
    ELEMENT_PART,
    ELEMENT_PART_LIST,
    LOCATION,
    NET_ELEMENT,
    REACHES,
];

/// Properties whose objects must be literals.
pub const DATA_PROPERTIES: &[&str] = &[
    ID,
    NAME,
    LONGNAME,
    DESCRIPTION_LEVEL,
    POSITION_ON_A,
    POSITION_ON_B,
    NAVIGABILITY,
    INTRINSIC_COORD,
    SEQUENCE,
    COORDINATE,
    APPLICATION_DIRECTION,
];

/// Every predicate the artifact understands (used to flag unknown ones).
pub fn is_known_predicate(iri: &str) -> bool {
    iri == RDF_TYPE
        || iri == RDF_FIRST
        || iri == RDF_REST
        || OBJECT_PROPERTIES.contains(&iri)
        || DATA_PROPERTIES.contains(&iri)
}

pub fn is_known_class(iri: &str) -> bool {
    KNOWN_CLASSES.contains(&iri)
}

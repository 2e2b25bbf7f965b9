//! Canonical fixtures and the single-violation mutants derived from the
//! clean one.

use crate::rdf::{parse_turtle, Iri, Literal, Term, Triple, TripleSet};
use crate::validate::RuleId;
use crate::vocab;

/// Namespace used by all fixture data.
pub const EX_NS: &str = "https://example.org/rail#";

/// A track feeding a three-way switch (track, switch_front, switch_left,
/// switch_right; three bidirectional relations).
pub const SWITCH_TTL: &str = include_str!("../../fixtures/switch.ttl");

/// An ordered collection `oc1` carrying parts ne2, ne1, ne3 in that
/// order, with the unordered part set alongside.
pub const ORDERED_COLLECTION_TTL: &str = include_str!("../../fixtures/ordered_collection.ttl");

/// The switch wrapped in a network, a micro level, an ordered
/// composition and a signal; validates with zero findings.
pub const CLEAN_TTL: &str = include_str!("../../fixtures/clean.ttl");

/// Two parallel west-to-east routes with direction-sensitive signals.
pub const DIAMOND_TTL: &str = include_str!("../../fixtures/diamond.ttl");

pub fn ex(local: &str) -> Iri {
    Iri::new(format!("{EX_NS}{local}"))
}

fn ex_term(local: &str) -> Term {
    Term::Iri(ex(local))
}

fn triple(subject: &str, predicate: &str, object: Term) -> Triple {
    Triple::new(ex_term(subject), Iri::from(predicate), object)
}

/// One mutant per error rule; each seeds exactly one violation into the
/// clean fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    MissingNavigability,
    NetworkWithoutLevel,
    DoubleTypedElement,
    SelfRelation,
    SharedPart,
    AggregationCycle,
    BogusNavigability,
    BogusPosition,
    CoordinateOutOfRange,
    BogusDescriptionLevel,
    ListSetMismatch,
    MissingEndCoordinate,
}

impl Mutant {
    pub const ALL: [Mutant; 12] = [
        Mutant::MissingNavigability,
        Mutant::NetworkWithoutLevel,
        Mutant::DoubleTypedElement,
        Mutant::SelfRelation,
        Mutant::SharedPart,
        Mutant::AggregationCycle,
        Mutant::BogusNavigability,
        Mutant::BogusPosition,
        Mutant::CoordinateOutOfRange,
        Mutant::BogusDescriptionLevel,
        Mutant::ListSetMismatch,
        Mutant::MissingEndCoordinate,
    ];

    /// The ten mutants exercised by the acceptance suite.
    pub const ACCEPTANCE: [Mutant; 10] = [
        Mutant::MissingNavigability,
        Mutant::NetworkWithoutLevel,
        Mutant::DoubleTypedElement,
        Mutant::SelfRelation,
        Mutant::SharedPart,
        Mutant::AggregationCycle,
        Mutant::BogusNavigability,
        Mutant::BogusPosition,
        Mutant::CoordinateOutOfRange,
        Mutant::BogusDescriptionLevel,
    ];

    pub fn expected_rule(self) -> RuleId {
        match self {
            Mutant::MissingNavigability => RuleId::Card1,
            Mutant::NetworkWithoutLevel => RuleId::CardMin,
            Mutant::DoubleTypedElement => RuleId::Disjoint,
            Mutant::SelfRelation => RuleId::Irreflex,
            Mutant::SharedPart => RuleId::CompInvFunc,
            Mutant::AggregationCycle => RuleId::AggAcyclic,
            Mutant::BogusNavigability => RuleId::NavEnum,
            Mutant::BogusPosition => RuleId::PosEnum,
            Mutant::CoordinateOutOfRange => RuleId::CoordRange,
            Mutant::BogusDescriptionLevel => RuleId::LevelEnum,
            Mutant::ListSetMismatch => RuleId::OrderedConsist,
            Mutant::MissingEndCoordinate => RuleId::EndCoords,
        }
    }

    /// Apply this mutation to a parse of the clean fixture.
    pub fn apply(self) -> TripleSet {
        let mut set = parse_turtle(CLEAN_TTL).expect("clean fixture parses");
        let string = |s: &str| Term::Literal(Literal::string(s));
        let integer = |v: i64| Term::Literal(Literal::integer(v));
        let decimal = |v: f64| Term::Literal(Literal::decimal(v));
        match self {
            Mutant::MissingNavigability => {
                assert!(set.remove(&triple("r1", vocab::NAVIGABILITY, string("Both"))));
            }
            Mutant::NetworkWithoutLevel => {
                assert!(set.remove(&triple("net1", vocab::LEVEL, ex_term("lv1"))));
            }
            Mutant::DoubleTypedElement => {
                set.insert(triple(
                    "track",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::NON_LINEAR_ELEMENT),
                ));
            }
            Mutant::SelfRelation => {
                assert!(set.remove(&triple("r1", vocab::ELEMENT_B, ex_term("switch_front"))));
                set.insert(triple("r1", vocab::ELEMENT_B, ex_term("track")));
            }
            Mutant::SharedPart => {
                set.insert(triple(
                    "station2",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::COMPOSITION_NET_ELEMENT),
                ));
                set.insert(triple(
                    "station2",
                    vocab::ELEMENT_COLLECTION,
                    ex_term("coll2"),
                ));
                set.insert(triple(
                    "coll2",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::UNORDERED_COLLECTION),
                ));
                set.insert(triple("coll2", vocab::ELEMENT_PART, ex_term("switch_left")));
            }
            Mutant::AggregationCycle => {
                for (comp, coll, part) in [
                    ("comp_a", "coll_a", "comp_b"),
                    ("comp_b", "coll_b", "comp_a"),
                ] {
                    set.insert(triple(
                        comp,
                        vocab::RDF_TYPE,
                        Term::iri(vocab::COMPOSITION_NET_ELEMENT),
                    ));
                    set.insert(triple(comp, vocab::ELEMENT_COLLECTION, ex_term(coll)));
                    set.insert(triple(
                        coll,
                        vocab::RDF_TYPE,
                        Term::iri(vocab::UNORDERED_COLLECTION),
                    ));
                    set.insert(triple(coll, vocab::ELEMENT_PART, ex_term(part)));
                }
            }
            Mutant::BogusNavigability => {
                assert!(set.remove(&triple("r1", vocab::NAVIGABILITY, string("Both"))));
                set.insert(triple("r1", vocab::NAVIGABILITY, string("Sideways")));
            }
            Mutant::BogusPosition => {
                assert!(set.remove(&triple("r1", vocab::POSITION_ON_A, integer(1))));
                set.insert(triple("r1", vocab::POSITION_ON_A, integer(2)));
            }
            Mutant::CoordinateOutOfRange => {
                set.insert(triple(
                    "track_ic_extra",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::INTRINSIC_COORDINATE),
                ));
                set.insert(triple(
                    "track_ic_extra",
                    vocab::INTRINSIC_COORD,
                    decimal(1.5),
                ));
                set.insert(triple(
                    "track_aps",
                    vocab::INTRINSIC_COORDINATE_PROP,
                    ex_term("track_ic_extra"),
                ));
            }
            Mutant::BogusDescriptionLevel => {
                assert!(set.remove(&triple("lv1", vocab::DESCRIPTION_LEVEL, string("micro"))));
                set.insert(triple("lv1", vocab::DESCRIPTION_LEVEL, string("nano")));
            }
            Mutant::ListSetMismatch => {
                set.insert(triple(
                    "ne4",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::LINEAR_ELEMENT),
                ));
                set.insert(triple("sw_coll", vocab::ELEMENT_PART, ex_term("ne4")));
            }
            Mutant::MissingEndCoordinate => {
                assert!(set.remove(&triple(
                    "switch_right_ic1",
                    vocab::RDF_TYPE,
                    Term::iri(vocab::INTRINSIC_COORDINATE),
                )));
                assert!(set.remove(&triple(
                    "switch_right_ic1",
                    vocab::INTRINSIC_COORD,
                    decimal(1.0),
                )));
                assert!(set.remove(&triple(
                    "switch_right_aps",
                    vocab::INTRINSIC_COORDINATE_PROP,
                    ex_term("switch_right_ic1"),
                )));
            }
        }
        set
    }
}

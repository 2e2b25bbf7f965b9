//! Brute-force train-walk oracle.
//!
//! Simulates a rigid train standing on each linear element in each of
//! its two directions, and enumerates every single-hop continuation a
//! positioned relation permits. Works directly on the raw triples; it
//! shares nothing with the reachability engine beyond the parsed input.

use std::collections::BTreeSet;

use crate::rdf::{Term, TripleSet};
use crate::vocab;

/// (source coordinate, target coordinate, relation) tuples.
pub type EdgeSet = BTreeSet<(String, String, String)>;

pub fn train_walk_edges(data: &TripleSet) -> EdgeSet {
    let linear_elements: BTreeSet<&Term> = data.subjects_with_type(vocab::LINEAR_ELEMENT).collect();
    let relations: Vec<&Term> = data
        .subjects_with_type(vocab::POSITIONED_RELATION)
        .collect();

    // The unique coordinate of `element` whose value is `wanted`; None if
    // absent or ambiguous.
    let coordinate_at = |element: &Term, wanted: f64| -> Option<String> {
        let mut hits: Vec<String> = Vec::new();
        for aps in data.objects(element, vocab::ASSOCIATED_POSITIONING_SYSTEM_PROP) {
            for coordinate in data.objects(aps, vocab::INTRINSIC_COORDINATE_PROP) {
                for value in data.objects(coordinate, vocab::INTRINSIC_COORD) {
                    let Some(lit) = value.as_literal() else {
                        continue;
                    };
                    let Some(v) = lit.numeric_value() else {
                        continue;
                    };
                    if v == wanted {
                        if let Term::Iri(iri) = coordinate {
                            hits.push(iri.as_str().to_owned());
                        }
                    }
                }
            }
        }
        hits.sort();
        hits.dedup();
        if hits.len() == 1 {
            hits.pop()
        } else {
            None
        }
    };

    let position_of = |relation: &Term, predicate: &str| -> Option<i64> {
        let object = data.object(relation, predicate)?;
        object.as_literal()?.integer_value()
    };

    let mut edges = EdgeSet::new();
    for element in &linear_elements {
        // A train traverses `element` in one of two directions; it will
        // exit at end 1 (moving 0 to 1) or end 0 (moving 1 to 0).
        for exit_end in [1i64, 0i64] {
            let Some(source_coordinate) = coordinate_at(element, exit_end as f64) else {
                continue;
            };
            for relation in &relations {
                let nav = data
                    .object(relation, vocab::NAVIGABILITY)
                    .and_then(|o| o.as_literal())
                    .map(|l| l.lexical.clone());
                let Some(nav) = nav else { continue };
                let element_a = data.object(relation, vocab::ELEMENT_A);
                let element_b = data.object(relation, vocab::ELEMENT_B);
                let (Some(element_a), Some(element_b)) = (element_a, element_b) else {
                    continue;
                };
                // Try both roles of the standing element.
                let hops: [(bool, &Term, &str, &Term, &str); 2] = [
                    (
                        nav == "Both" || nav == "AB",
                        element_a,
                        vocab::POSITION_ON_A,
                        element_b,
                        vocab::POSITION_ON_B,
                    ),
                    (
                        nav == "Both" || nav == "BA",
                        element_b,
                        vocab::POSITION_ON_B,
                        element_a,
                        vocab::POSITION_ON_A,
                    ),
                ];
                for (permitted, from, from_position, onto, onto_position) in hops {
                    if !permitted || from != *element {
                        continue;
                    }
                    // The relation must sit at the end the train exits.
                    if position_of(relation, from_position) != Some(exit_end) {
                        continue;
                    }
                    if onto == *element {
                        continue; // a loop onto itself is not a movement
                    }
                    if !linear_elements.contains(onto) {
                        continue;
                    }
                    let Some(enter_end) = position_of(relation, onto_position) else {
                        continue;
                    };
                    if enter_end != 0 && enter_end != 1 {
                        continue;
                    }
                    // Entering at one end, the train exits at the other.
                    let Some(target_coordinate) = coordinate_at(onto, (1 - enter_end) as f64)
                    else {
                        continue;
                    };
                    let Term::Iri(relation_iri) = relation else {
                        continue;
                    };
                    edges.insert((
                        source_coordinate.clone(),
                        target_coordinate,
                        relation_iri.as_str().to_owned(),
                    ));
                }
            }
        }
    }
    edges
}

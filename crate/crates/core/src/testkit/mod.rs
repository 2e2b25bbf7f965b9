//! Test support: shared fixtures, single-violation mutants, random
//! topology generation, and reference implementations used as oracles.
//!
//! The reference implementations here deliberately take their own route:
//! the train-walk oracle simulates a train over the raw triples and never
//! touches the reachability engine, and the graph checks are textbook
//! union-find and Kahn's algorithm.

pub mod fixtures;
pub mod generate;
pub mod graphcheck;
pub mod oracle;

use crate::model::{BuildWarning, TopologyModel};
use crate::rdf::{parse_turtle, TripleSet};

/// Parse then build, panicking on any error. For fixtures known to be
/// structurally sound.
pub fn parse_and_build(text: &str) -> (TopologyModel, Vec<BuildWarning>) {
    let set = parse_turtle(text).expect("fixture must parse");
    TopologyModel::build(&set).expect("fixture must build")
}

pub fn parse_fixture(text: &str) -> TripleSet {
    parse_turtle(text).expect("fixture must parse")
}

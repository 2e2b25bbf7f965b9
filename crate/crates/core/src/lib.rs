//! Railway-network topology modelling: Turtle ingestion, a typed
//! topology model, materialized directed reachability between intrinsic
//! coordinates, path enumeration, and constraint validation.
//!
//! The crate is organized along the data flow:
//!
//! * [`rdf`] parses and serializes instance data as triples;
//! * [`model`] builds the typed topology view;
//! * [`reach`] derives the `reaches` relation and answers traversal and
//!   path queries over it;
//! * [`validate`] checks the model against the modelling constraints and
//!   produces a rule-tagged report.
//!
//! Everything is immutable after construction and deterministic: the same
//! input always yields byte-identical serialized output.

pub mod model;
pub mod rdf;
pub mod reach;
#[cfg(feature = "testkit")]
pub mod testkit;
pub mod validate;
pub mod vocab;

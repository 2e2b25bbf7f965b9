//! Acceptance suite. Each test prints one pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use railtopo::model::{EndPosition, TopologyModel};
use railtopo::rdf::{parse_turtle, serialize_turtle, Term};
use railtopo::reach::{
    enumerate_paths, materialize_reaches, reachable_elements, traversal_report, TravelDirection,
};
use railtopo::testkit::fixtures::{
    ex, Mutant, CLEAN_TTL, DIAMOND_TTL, ORDERED_COLLECTION_TTL, SWITCH_TTL,
};
use railtopo::testkit::generate::{random_topology, random_tree};
use railtopo::testkit::graphcheck::{is_acyclic, weak_component_count};
use railtopo::testkit::oracle::train_walk_edges;
use railtopo::testkit::parse_and_build;
use railtopo::validate::validate;
use railtopo::vocab;

fn check(name: &str, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("[PASS] {name}: {detail}"),
        Err(reason) => {
            println!("[FAIL] {name}: {reason}");
            panic!("{name}: {reason}");
        }
    }
}

fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

#[test]
fn criterion_1_switch_query_via_cli() {
    check(
        "criterion 1: reachable --from switch_front --end 1 returns the two branches in < 1 s",
        || {
            let started = Instant::now();
            let output = Command::new(env!("CARGO_BIN_EXE_railtopo"))
                .args([
                    "reachable",
                    fixture_path("switch.ttl").to_str().unwrap(),
                    "--from",
                    "switch_front",
                    "--end",
                    "1",
                ])
                .output()
                .map_err(|e| e.to_string())?;
            let elapsed = started.elapsed();
            if output.status.code() != Some(0) {
                return Err(format!("exit code {:?}", output.status.code()));
            }
            let stdout = String::from_utf8_lossy(&output.stdout);
            let names: BTreeSet<&str> = stdout.lines().collect();
            let expected: BTreeSet<&str> = ["switch_left", "switch_right"].into_iter().collect();
            if names != expected {
                return Err(format!("got {names:?}, expected {expected:?}"));
            }
            if elapsed >= Duration::from_secs(1) {
                return Err(format!("took {elapsed:?}"));
            }
            Ok(format!("exact set match in {elapsed:?}"))
        },
    );
}

#[test]
fn criterion_2_switch_one_way_property() {
    check(
        "criterion 2: entering over a branch reaches the track but not the sibling branch",
        || {
            let (model, _) = parse_and_build(SWITCH_TTL);
            let graph = materialize_reaches(&model).graph;
            for (branch, sibling) in [
                ("switch_left", "switch_right"),
                ("switch_right", "switch_left"),
            ] {
                let names = reachable_elements(&model, &graph, branch, EndPosition::Zero)
                    .map_err(|e| e.to_string())?;
                if !names.contains("track") {
                    return Err(format!("from {branch}: track missing in {names:?}"));
                }
                if names.contains(sibling) {
                    return Err(format!(
                        "from {branch}: sibling {sibling} wrongly reachable"
                    ));
                }
            }
            Ok("both branches reach the track and never the sibling".to_owned())
        },
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    check(
        "criterion 3: materialization equals the train-walk oracle on 500 random topologies in < 60 s",
        || {
            let started = Instant::now();
            for seed in 0..500u64 {
                let mut rng = StdRng::seed_from_u64(seed);
                let spec = random_topology(&mut rng, 20);
                let text = spec.to_turtle();
                let data = parse_turtle(&text).map_err(|e| format!("seed {seed}: {e}"))?;
                let (model, _) =
                    TopologyModel::build(&data).map_err(|e| format!("seed {seed}: {e}"))?;
                let implementation: BTreeSet<(String, String, String)> =
                    materialize_reaches(&model)
                        .graph
                        .edges()
                        .map(|e| {
                            (
                                e.source.as_str().to_owned(),
                                e.target.as_str().to_owned(),
                                e.via.as_str().to_owned(),
                            )
                        })
                        .collect();
                let oracle = train_walk_edges(&data);
                if implementation != oracle {
                    return Err(format!(
                        "seed {seed}: {} implementation edges vs {} oracle edges",
                        implementation.len(),
                        oracle.len()
                    ));
                }
            }
            let elapsed = started.elapsed();
            if elapsed >= Duration::from_secs(60) {
                return Err(format!("took {elapsed:?}"));
            }
            Ok(format!("500 topologies, exact edge-set equality, {elapsed:?}"))
        },
    );
}

#[test]
fn criterion_4_two_dag_property() {
    check(
        "criterion 4: trees with Both navigability split into exactly 2 acyclic components",
        || {
            for seed in 0..200u64 {
                let mut rng = StdRng::seed_from_u64(10_000 + seed);
                let spec = random_tree(&mut rng, 14);
                let (model, _) = parse_and_build(&spec.to_turtle());
                let graph = materialize_reaches(&model).graph;
                let edges: Vec<(String, String)> = graph
                    .coordinate_pairs()
                    .into_iter()
                    .map(|(s, t)| (s.0, t.0))
                    .collect();
                let components = weak_component_count(&edges);
                if components != 2 {
                    return Err(format!(
                        "seed {}: {components} weakly connected components",
                        10_000 + seed
                    ));
                }
                if !is_acyclic(&edges) {
                    return Err(format!("seed {}: component has a cycle", 10_000 + seed));
                }
            }
            Ok("200 trees, always 2 components, all acyclic".to_owned())
        },
    );
}

#[test]
fn criterion_5_ordered_collection_fidelity() {
    check(
        "criterion 5: oc1 keeps ordered [ne2, ne1, ne3] and set {ne1, ne2, ne3} across round trips",
        || {
            let expect = |model: &TopologyModel, stage: &str| -> Result<(), String> {
                let collection = model
                    .collections
                    .get(&railtopo::rdf::Iri::new("https://example.org/data/oc1"))
                    .ok_or_else(|| format!("{stage}: oc1 missing"))?;
                let ordered: Vec<&str> = collection
                    .ordered_parts
                    .as_ref()
                    .ok_or_else(|| format!("{stage}: no ordered parts"))?
                    .iter()
                    .map(|p| p.local_name())
                    .collect();
                if ordered != ["ne2", "ne1", "ne3"] {
                    return Err(format!("{stage}: ordered parts {ordered:?}"));
                }
                let parts: Vec<&str> = collection.parts.iter().map(|p| p.local_name()).collect();
                if parts != ["ne1", "ne2", "ne3"] {
                    return Err(format!("{stage}: part set {parts:?}"));
                }
                if collection.sequence != Some(1) {
                    return Err(format!("{stage}: sequence {:?}", collection.sequence));
                }
                Ok(())
            };
            let parsed = parse_turtle(ORDERED_COLLECTION_TTL).map_err(|e| e.to_string())?;
            let (model, _) = TopologyModel::build(&parsed).map_err(|e| e.to_string())?;
            expect(&model, "parse")?;
            let reparsed = parse_turtle(&serialize_turtle(&parsed)).map_err(|e| e.to_string())?;
            let (remodel, _) = TopologyModel::build(&reparsed).map_err(|e| e.to_string())?;
            expect(&remodel, "serialize+reparse")?;
            if !parsed.isomorphic_to(&reparsed) {
                return Err("round trip not isomorphic".to_owned());
            }
            Ok("order and set preserved through serialize/parse".to_owned())
        },
    );
}

#[test]
fn criterion_6_turtle_round_trip() {
    check(
        "criterion 6: 50 generated documents satisfy parse . serialize . parse = parse in < 10 s",
        || {
            let started = Instant::now();
            for seed in 0..50u64 {
                let mut rng = StdRng::seed_from_u64(seed);
                let document = railtopo::testkit::generate::random_document(&mut rng);
                let parsed = parse_turtle(&document).map_err(|e| format!("seed {seed}: {e}"))?;
                let reparsed = parse_turtle(&serialize_turtle(&parsed))
                    .map_err(|e| format!("seed {seed}: {e}"))?;
                if !parsed.isomorphic_to(&reparsed) {
                    return Err(format!("seed {seed}: not isomorphic"));
                }
            }
            let elapsed = started.elapsed();
            if elapsed >= Duration::from_secs(10) {
                return Err(format!("took {elapsed:?}"));
            }
            Ok(format!("50 documents isomorphic, {elapsed:?}"))
        },
    );
}

#[test]
fn criterion_7_validation_mutation_suite() {
    check(
        "criterion 7: clean fixture has 0 errors; 10 mutants each detected with exactly their rule",
        || {
            let (clean_model, _) = parse_and_build(CLEAN_TTL);
            let clean_report = validate(&clean_model);
            if clean_report.errors != 0 {
                return Err(format!("clean fixture: {} errors", clean_report.errors));
            }
            for mutant in Mutant::ACCEPTANCE {
                let (model, _) = TopologyModel::build(&mutant.apply())
                    .map_err(|e| format!("{mutant:?}: {e}"))?;
                let report = validate(&model);
                let expected = mutant.expected_rule();
                let hits = report.findings_for(expected).count();
                if hits != 1 || report.errors != 1 {
                    return Err(format!(
                        "{mutant:?}: {hits} findings for {expected}, {} errors total\n{}",
                        report.errors,
                        report.to_text()
                    ));
                }
            }
            Ok("clean is clean; 10/10 mutants pinpointed".to_owned())
        },
    );
}

#[test]
fn criterion_8_path_enumeration() {
    check(
        "criterion 8: diamond yields 2 paths with hand-derived orientations and direction-filtered entities",
        || {
            let (model, _) = parse_and_build(DIAMOND_TTL);
            let graph = materialize_reaches(&model).graph;
            let enumeration = enumerate_paths(
                &model,
                &graph,
                &ex("west"),
                EndPosition::One,
                &ex("east"),
                1000,
                10_000,
            )
            .map_err(|e| e.to_string())?;
            if enumeration.truncated || enumeration.paths.len() != 2 {
                return Err(format!(
                    "{} paths, truncated={}",
                    enumeration.paths.len(),
                    enumeration.truncated
                ));
            }
            let orientation = |i: usize| -> Vec<(String, TravelDirection)> {
                enumeration.paths[i]
                    .steps
                    .iter()
                    .map(|s| (s.element.local_name().to_owned(), s.direction))
                    .collect()
            };
            let north: Vec<(String, TravelDirection)> = [
                ("west", TravelDirection::ZeroToOne),
                ("north", TravelDirection::ZeroToOne),
                ("east", TravelDirection::ZeroToOne),
            ]
            .map(|(n, d)| (n.to_owned(), d))
            .to_vec();
            let south: Vec<(String, TravelDirection)> = [
                ("west", TravelDirection::ZeroToOne),
                ("south", TravelDirection::OneToZero),
                ("east", TravelDirection::ZeroToOne),
            ]
            .map(|(n, d)| (n.to_owned(), d))
            .to_vec();
            if orientation(0) != north {
                return Err(format!("path 1 orientations: {:?}", orientation(0)));
            }
            if orientation(1) != south {
                return Err(format!("path 2 orientations: {:?}", orientation(1)));
            }

            // applicationDirection filtering: "normal" only on
            // zero-to-one steps.
            let north_entities: Vec<String> = traversal_report(&model, &enumeration.paths[0])[1]
                .entities
                .iter()
                .map(|e| e.name.clone().unwrap_or_default())
                .collect();
            if north_entities != ["sigN", "sigN2"] {
                return Err(format!("north step entities: {north_entities:?}"));
            }
            let south_entities: Vec<String> = traversal_report(&model, &enumeration.paths[1])[1]
                .entities
                .iter()
                .map(|e| e.name.clone().unwrap_or_default())
                .collect();
            if south_entities != ["sigR", "sigB"] {
                return Err(format!(
                    "south step entities (normal must be filtered out): {south_entities:?}"
                ));
            }
            Ok("2 paths, exact orientations, normal signals only on zero-to-one".to_owned())
        },
    );
}

/// Sanity: the fixtures used above are the checked-in ones.
#[test]
fn fixtures_on_disk_match_embedded() {
    for (name, embedded) in [
        ("switch.ttl", SWITCH_TTL),
        ("clean.ttl", CLEAN_TTL),
        ("diamond.ttl", DIAMOND_TTL),
        ("ordered_collection.ttl", ORDERED_COLLECTION_TTL),
    ] {
        let on_disk = std::fs::read_to_string(fixture_path(name)).unwrap();
        assert_eq!(on_disk, embedded, "{name} drifted");
    }
    // keep the vocabulary import alive for the namespace sanity check
    let _ = Term::iri(vocab::TOPO_NS);
}

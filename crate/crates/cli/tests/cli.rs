//! End-to-end checks of the binary: exit codes, determinism, formats.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use railtopo::rdf::parse_turtle;
use railtopo::testkit::fixtures::Mutant;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_railtopo"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn temp_ttl(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn validate_clean_fixture_exits_zero() {
    let output = run(&["validate", fixture("clean.ttl").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("0 error(s), 0 warning(s)"), "{text}");
}

#[test]
fn validate_empty_file_prints_empty_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_ttl(&dir, "empty.ttl", "");
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("0 error(s)"), "{text}");
    assert!(text.contains("0 network(s)"), "{text}");
}

#[test]
fn validate_mutant_reports_rule_and_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let mutated = railtopo::rdf::serialize_turtle(&Mutant::SelfRelation.apply());
    let path = temp_ttl(&dir, "mutant.ttl", &mutated);
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert_eq!(text.matches("IRREFLEX").count(), 1, "{text}");
    assert!(text.contains("1 error(s)"), "{text}");
}

#[test]
fn validate_json_format_is_parseable() {
    let output = run(&[
        "validate",
        fixture("clean.ttl").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(parsed["errors"], 0);
    assert!(
        parsed["summary"]["linearElements"].is_number()
            || parsed["summary"]["linear_elements"].is_number()
    );
}

#[test]
fn parse_error_exits_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = temp_ttl(&dir, "broken.ttl", "this is not turtle");
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 1"), "{stderr}");
}

#[test]
fn unreadable_file_exits_two() {
    let output = run(&["validate", "/no/such/file.ttl"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn reaches_turtle_matches_switch_edge_set() {
    let output = run(&["reaches", fixture("switch.ttl").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let set = parse_turtle(&stdout_of(&output)).unwrap();
    assert_eq!(set.len(), 6);
    let pairs: Vec<(String, String)> = set
        .iter()
        .map(|t| {
            assert_eq!(t.predicate.as_str(), railtopo::vocab::REACHES);
            (
                t.subject.as_iri().unwrap().local_name().to_owned(),
                t.object.as_iri().unwrap().local_name().to_owned(),
            )
        })
        .collect();
    assert!(pairs.contains(&("track_ic1".into(), "switch_front_ic1".into())));
    assert!(pairs.contains(&("switch_right_ic0".into(), "switch_front_ic0".into())));
}

#[test]
fn reaches_is_byte_deterministic() {
    let path = fixture("switch.ttl");
    let first = run(&["reaches", path.to_str().unwrap()]);
    let second = run(&["reaches", path.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reaches_with_none_navigability_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let content = std::fs::read_to_string(fixture("switch.ttl"))
        .unwrap()
        .replace("\"Both\"", "\"None\"");
    let path = temp_ttl(&dir, "none.ttl", &content);
    let output = run(&["reaches", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let set = parse_turtle(&stdout_of(&output)).unwrap();
    assert!(set.is_empty());
}

#[test]
fn reaches_dot_has_two_nodes_per_related_linear_element() {
    let output = run(&[
        "reaches",
        fixture("switch.ttl").to_str().unwrap(),
        "--format",
        "dot",
    ]);
    let text = stdout_of(&output);
    assert!(text.starts_with("digraph"), "{text}");
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 8); // 2 x 4 linear elements with relations
    let edges = text.lines().filter(|l| l.contains("->")).count();
    assert_eq!(edges, 6);
}

#[test]
fn reachable_lists_branches_sorted() {
    let output = run(&[
        "reachable",
        fixture("switch.ttl").to_str().unwrap(),
        "--from",
        "switch_front",
        "--end",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "switch_left\nswitch_right\n");
}

#[test]
fn reachable_json_format() {
    let output = run(&[
        "reachable",
        fixture("switch.ttl").to_str().unwrap(),
        "--from",
        "switch_front",
        "--end",
        "1",
        "--format",
        "json",
    ]);
    let parsed: Vec<String> = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(parsed, ["switch_left", "switch_right"]);
}

#[test]
fn reachable_isolated_element_prints_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let extra = "\nex:loner a topo:LinearElement ; topo:name \"loner\" ;\n\
                 topo:associatedPositioningSystem ex:loner_aps .\n\
                 ex:loner_aps a topo:AssociatedPositioningSystem ;\n\
                 topo:intrinsicCoordinate ex:loner_c0 , ex:loner_c1 .\n\
                 ex:loner_c0 a topo:IntrinsicCoordinate ; topo:intrinsicCoord 0.0 .\n\
                 ex:loner_c1 a topo:IntrinsicCoordinate ; topo:intrinsicCoord 1.0 .\n";
    let content = format!(
        "{}{extra}",
        std::fs::read_to_string(fixture("switch.ttl")).unwrap()
    );
    let path = temp_ttl(&dir, "loner.ttl", &content);
    let output = run(&[
        "reachable",
        path.to_str().unwrap(),
        "--from",
        "loner",
        "--end",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "");
}

#[test]
fn reachable_with_duplicate_name_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let content = format!(
        "{}\nex:track2 a topo:LinearElement ; topo:name \"track\" .\n",
        std::fs::read_to_string(fixture("switch.ttl")).unwrap()
    );
    let path = temp_ttl(&dir, "dup.ttl", &content);
    let output = run(&[
        "reachable",
        path.to_str().unwrap(),
        "--from",
        "track",
        "--end",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("ambiguous"), "{stderr}");
}

#[test]
fn reachable_unknown_name_exits_one() {
    let output = run(&[
        "reachable",
        fixture("switch.ttl").to_str().unwrap(),
        "--from",
        "nowhere",
        "--end",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn paths_on_diamond_prints_two_paths_with_directions() {
    let output = run(&[
        "paths",
        fixture("diamond.ttl").to_str().unwrap(),
        "--from",
        "west",
        "--end",
        "1",
        "--to",
        "east",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("path 1:"), "{text}");
    assert!(text.contains("path 2:"), "{text}");
    assert!(text.contains("2 path(s)"), "{text}");
    assert!(text.contains("south one-to-zero"), "{text}");
    assert!(text.contains("north zero-to-one"), "{text}");
    // the normal signal on the south leg is inoperative going one-to-zero
    assert!(!text.contains("sigS"), "{text}");
    assert!(text.contains("sigB"), "{text}");
}

#[test]
fn paths_on_switch_annotate_every_step_with_a_direction() {
    let output = run(&[
        "paths",
        fixture("switch.ttl").to_str().unwrap(),
        "--from",
        "track",
        "--end",
        "1",
        "--to",
        "switch_left",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("1 path(s)"), "{text}");
    let step_lines: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  ") && !l.starts_with("    "))
        .collect();
    assert_eq!(step_lines.len(), 3, "{text}");
    for line in step_lines {
        assert!(
            line.ends_with("zero-to-one") || line.ends_with("one-to-zero"),
            "step without direction: {line}"
        );
    }
}

#[test]
fn paths_to_self_is_empty_on_acyclic_fixture() {
    let output = run(&[
        "paths",
        fixture("diamond.ttl").to_str().unwrap(),
        "--from",
        "west",
        "--end",
        "1",
        "--to",
        "west",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("0 path(s)"));
}

#[test]
fn paths_jsonl_has_step_and_summary_records() {
    let output = run(&[
        "paths",
        fixture("diamond.ttl").to_str().unwrap(),
        "--from",
        "west",
        "--end",
        "1",
        "--to",
        "east",
        "--format",
        "json",
    ]);
    let text = stdout_of(&output);
    let records: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 7); // 2 paths x 3 steps + summary
    let summary = records.last().unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["paths"], 2);
    assert_eq!(summary["truncated"], false);
    assert_eq!(records[0]["type"], "step");
    assert_eq!(records[0]["direction"], "zeroToOne");
}

#[test]
fn paths_max_paths_truncates() {
    let output = run(&[
        "paths",
        fixture("diamond.ttl").to_str().unwrap(),
        "--from",
        "west",
        "--end",
        "1",
        "--to",
        "east",
        "--max-paths",
        "1",
    ]);
    let text = stdout_of(&output);
    assert!(text.contains("1 path(s) (truncated)"), "{text}");
}

#[test]
fn merged_inputs_are_order_independent() {
    // Split the switch fixture: elements in one file, relations in the other.
    let full = std::fs::read_to_string(fixture("switch.ttl")).unwrap();
    let split_at = full.find("ex:r1").unwrap();
    let prefixes = "@prefix topo: <https://w3id.org/rail/topo#> .\n@prefix ex: <https://example.org/rail#> .\n";
    let dir = tempfile::tempdir().unwrap();
    let a = temp_ttl(&dir, "a.ttl", &full[..split_at]);
    let b = temp_ttl(&dir, "b.ttl", &format!("{prefixes}{}", &full[split_at..]));

    let ab = run(&["reaches", a.to_str().unwrap(), b.to_str().unwrap()]);
    let ba = run(&["reaches", b.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(ab.status.code(), Some(0));
    assert_eq!(ab.stdout, ba.stdout);
    assert!(!ab.stdout.is_empty());

    let single = run(&["reaches", fixture("switch.ttl").to_str().unwrap()]);
    assert_eq!(ab.stdout, single.stdout);
}

#[test]
fn stdin_input_via_dash() {
    let mut child = binary()
        .args(["reachable", "-", "--from", "switch_front", "--end", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(std::fs::read(fixture("switch.ttl")).unwrap().as_slice())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "switch_left\nswitch_right\n"
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("reaches.ttl");
    let output = run(&[
        "reaches",
        fixture("switch.ttl").to_str().unwrap(),
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(parse_turtle(&written).unwrap().len(), 6);
}

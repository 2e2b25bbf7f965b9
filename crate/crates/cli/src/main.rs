//! Command-line front-end: parse Turtle instance data, validate it,
//! materialize the reaches relation, and answer reachability and path
//! queries. All output is deterministic; identical invocations on
//! identical inputs produce byte-identical results.
//!
//! Exit codes: 0 success, 1 domain failure (validation errors, unknown
//! or ambiguous names), 2 input failure (unreadable file, parse error).

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use railtopo::model::{EndPosition, TopologyModel};
use railtopo::rdf::{parse_turtle, serialize_turtle, TripleSet};
use railtopo::reach::{
    enumerate_paths, materialize_reaches, reachable_elements, resolve_linear_name,
    traversal_report, QueryError, DEFAULT_MAX_LENGTH, DEFAULT_MAX_PATHS,
};
use railtopo::validate::validate;

#[derive(Parser)]
#[command(
    name = "railtopo",
    version,
    about = "Railway topology: ingest Turtle, validate, derive directed reachability, enumerate paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check instance data against the modelling constraints.
    Validate {
        /// Turtle input files; use '-' for standard input.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Materialize the reaches relation between intrinsic coordinates.
    Reaches {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Turtle)]
        format: GraphFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List elements reachable from a named element's end.
    Reachable {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Element name (exact match on topo:name).
        #[arg(long)]
        from: String,
        /// Which end the train leaves from: 0 or 1.
        #[arg(long, value_parser = parse_end)]
        end: EndPosition,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate simple paths between two named elements.
    Paths {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        from: String,
        #[arg(long, value_parser = parse_end)]
        end: EndPosition,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = DEFAULT_MAX_PATHS)]
        max_paths: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Turtle,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

fn parse_end(s: &str) -> Result<EndPosition, String> {
    match s {
        "0" => Ok(EndPosition::Zero),
        "1" => Ok(EndPosition::One),
        _ => Err(format!("end must be 0 or 1, got '{s}'")),
    }
}

/// Failure plus the exit code it maps to.
enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<QueryError> for Failure {
    fn from(e: QueryError) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate {
            inputs,
            format,
            output,
        } => {
            let data = read_inputs(&inputs)?;
            let (model, _warnings) = build(&data)?;
            let report = validate(&model);
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => report.to_json() + "\n",
            };
            write_output(output.as_deref(), &text)?;
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Reaches {
            inputs,
            format,
            output,
        } => {
            let data = read_inputs(&inputs)?;
            let (model, _warnings) = build(&data)?;
            let materialized = materialize_reaches(&model);
            let text = match format {
                GraphFormat::Turtle => {
                    let mut triples = materialized.graph.to_triples();
                    for (prefix, ns) in data.prefixes() {
                        triples.declare_prefix(prefix.clone(), ns.clone());
                    }
                    serialize_turtle(&triples)
                }
                GraphFormat::Dot => materialized.graph.to_dot(&model),
            };
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Reachable {
            inputs,
            from,
            end,
            format,
            output,
        } => {
            let data = read_inputs(&inputs)?;
            let (model, _warnings) = build(&data)?;
            let materialized = materialize_reaches(&model);
            let names = reachable_elements(&model, &materialized.graph, &from, end)?;
            let text = match format {
                ListFormat::Text => {
                    let mut t = String::new();
                    for name in &names {
                        t.push_str(name);
                        t.push('\n');
                    }
                    t
                }
                ListFormat::Json => {
                    let names: Vec<&String> = names.iter().collect();
                    serde_json::to_string(&names).expect("serializable") + "\n"
                }
            };
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Paths {
            inputs,
            from,
            end,
            to,
            max_paths,
            max_length,
            format,
            output,
        } => {
            let data = read_inputs(&inputs)?;
            let (model, _warnings) = build(&data)?;
            let materialized = materialize_reaches(&model);
            let source = resolve_linear_name(&model, &from)?.clone();
            let target = resolve_linear_name(&model, &to)?.clone();
            let enumeration = enumerate_paths(
                &model,
                &materialized.graph,
                &source,
                end,
                &target,
                max_paths,
                max_length,
            )?;
            let text = match format {
                ListFormat::Text => render_paths_text(&model, &enumeration),
                ListFormat::Json => render_paths_jsonl(&model, &enumeration),
            };
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn build(data: &TripleSet) -> Result<(TopologyModel, Vec<railtopo::model::BuildWarning>), Failure> {
    TopologyModel::build(data).map_err(|e| Failure::Input(e.to_string()))
}

fn read_inputs(paths: &[PathBuf]) -> Result<TripleSet, Failure> {
    let mut merged = TripleSet::new();
    for path in paths {
        let text = read_one(path)?;
        let parsed = parse_turtle(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", display_name(path))))?;
        merged.merge(parsed);
    }
    Ok(merged)
}

fn read_one(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", display_name(path))))
    }
}

fn display_name(path: &Path) -> String {
    if path.as_os_str() == "-" {
        "stdin".to_owned()
    } else {
        path.display().to_string()
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_paths_text(
    model: &TopologyModel,
    enumeration: &railtopo::reach::PathEnumeration,
) -> String {
    let mut out = String::new();
    for (i, path) in enumeration.paths.iter().enumerate() {
        out.push_str(&format!("path {}:\n", i + 1));
        for step in traversal_report(model, path) {
            let label = step
                .name
                .clone()
                .unwrap_or_else(|| step.element.local_name().to_owned());
            out.push_str(&format!("  {label} {}\n", step.direction));
            for entity in &step.entities {
                let entity_label = entity
                    .name
                    .clone()
                    .unwrap_or_else(|| entity.entity.local_name().to_owned());
                out.push_str(&format!(
                    "    {entity_label} {} @{}\n",
                    entity.application_direction.as_str(),
                    entity.coordinate
                ));
            }
        }
    }
    out.push_str(&format!("{} path(s)", enumeration.paths.len()));
    if enumeration.truncated {
        out.push_str(" (truncated)");
    }
    out.push('\n');
    out
}

/// JSON lines: one record per step, then a summary record.
fn render_paths_jsonl(
    model: &TopologyModel,
    enumeration: &railtopo::reach::PathEnumeration,
) -> String {
    let mut out = String::new();
    for (i, path) in enumeration.paths.iter().enumerate() {
        for (j, step) in traversal_report(model, path).iter().enumerate() {
            let record = serde_json::json!({
                "type": "step",
                "path": i,
                "step": j,
                "element": step.element.as_str(),
                "name": step.name,
                "direction": step.direction,
                "entities": step.entities,
            });
            out.push_str(&record.to_string());
            out.push('\n');
        }
    }
    let summary = serde_json::json!({
        "type": "summary",
        "paths": enumeration.paths.len(),
        "truncated": enumeration.truncated,
    });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

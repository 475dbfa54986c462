use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use hatlab_core::altcycles::{alternating_cycle_system, alternating_graph, hat_orientation};
use hatlab_core::autgraph::{automorphism_group_with, AutOptions};
use hatlab_core::fpgroup::{amalgam_by_name, amalgam_catalog};
use hatlab_core::graphcore::{Graph, VertexAction};
use hatlab_core::pairsearch::{
    maximal_half_arc_pairs, quadruple_summary, verify_pair_result, RealizedAmalgam, SearchOptions,
};
use hatlab_core::permgroup::{format_generators, parse_group};
use hatlab_core::reports::{
    run_example_41, run_example_42, run_example_43, run_example_44, ExampleReport, Witness, STORED_WITNESS,
};
use hatlab_core::symmetry::{transitivity_report, TransitivityReport};

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Parser)]
#[command(name = "hatlab", version, about = "Half-arc-transitive graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild a worked example and check its facts.
    Example {
        /// One of 4.1, 4.2, 4.3, 4.4.
        id: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Witness file for 4.2; the bundled witness is used otherwise.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// For 4.2, search for a witness instead of loading one.
        #[arg(long)]
        search: bool,
        /// Time budget in seconds for the 4.2 witness search.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Search an amalgam for maximal half-arc-transitive pairs.
    Pairsearch {
        /// Amalgam name; `list` prints the catalog.
        #[arg(long)]
        amalgam: String,
        /// Run without the default time limit.
        #[arg(long)]
        deep: bool,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Skip re-verification of each result.
        #[arg(long)]
        no_verify: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Automorphism group of a graph file.
    Aut {
        graph: PathBuf,
        /// Write the generator file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alternating cycles and alternating graph of a half-arc-transitive action.
    Altgraph {
        graph: PathBuf,
        /// Group acting on the vertices.
        group: PathBuf,
        /// Subgroup acting half-arc-transitively.
        subgroup: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => write(p, &text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn print_report(r: &ExampleReport) {
    println!("Example {} ({} ms)", r.example, r.wall_time_ms);
    for f in &r.facts {
        let mark = if f.passed { "ok  " } else { "FAIL" };
        println!("  {mark} {}: expected {}, got {}", f.name, f.expected, f.actual);
    }
    for (k, v) in &r.info {
        println!("  info {k}: {v}");
    }
    if let Some(why) = &r.incomplete {
        println!("  incomplete: {why}");
    }
    println!("  {}", if r.passed { "PASS" } else { "NOT PASSED" });
}

fn run_example(
    id: &str,
    json: Option<&Path>,
    witness: Option<&Path>,
    search: bool,
    budget: Option<f64>,
) -> Result<bool, CliError> {
    let report = match id {
        "4.1" => run_example_41(),
        "4.2" => {
            let w = if search {
                None
            } else {
                let text = match witness {
                    Some(p) => read(p)?,
                    None => STORED_WITNESS.to_string(),
                };
                Some(Witness::parse(&text).map_err(input)?)
            };
            run_example_42(w.as_ref(), budget.map(Duration::from_secs_f64))
        }
        "4.3" => run_example_43(),
        "4.4" => run_example_44(),
        other => return Err(CliError::Input(format!("unknown example {other:?}; expected 4.1, 4.2, 4.3 or 4.4"))),
    };
    print_report(&report);
    if let Some(p) = json {
        emit_json(&report, Some(p))?;
    }
    Ok(report.passed)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PairJson {
    n: usize,
    quadruple_signature: [String; 4],
    h_cycles: String,
    m_cycles: String,
    verified: Option<bool>,
    verification: Option<hatlab_core::pairsearch::PairVerification>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PairSearchJson {
    amalgam: String,
    candidates: usize,
    class_representatives: usize,
    result_count: usize,
    complete: bool,
    skipped: Vec<hatlab_core::pairsearch::SkippedCandidate>,
    seconds: f64,
    results: Vec<PairJson>,
}

fn run_pairsearch(
    name: &str,
    deep: bool,
    budget: Option<f64>,
    verify: bool,
    json: Option<&Path>,
) -> Result<bool, CliError> {
    if name == "list" {
        for a in amalgam_catalog() {
            println!("{:8} L = {}", a.name, a.structure);
        }
        return Ok(true);
    }
    let spec = amalgam_by_name(name).ok_or_else(|| CliError::Input(format!("unknown amalgam {name:?}")))?;
    let am = RealizedAmalgam::new(&spec).map_err(input)?;
    let opts = SearchOptions {
        deep,
        time_limit: budget.map(Duration::from_secs_f64),
        ..Default::default()
    };
    let outcome = maximal_half_arc_pairs(&am, &opts).map_err(input)?;
    let mut all_verified = true;
    let mut results = Vec::with_capacity(outcome.results.len());
    for r in &outcome.results {
        let verification = if verify {
            let v = verify_pair_result(r).map_err(input)?;
            all_verified &= v.passed();
            Some(v)
        } else {
            None
        };
        results.push(PairJson {
            n: r.n,
            quadruple_signature: r.quadruple.clone(),
            h_cycles: r.h.to_cycle_string(),
            m_cycles: r.m.to_cycle_string(),
            verified: verification.as_ref().map(|v| v.passed()),
            verification,
        });
    }
    println!(
        "amalgam {}: {} results from {} candidate classes ({} candidates) in {:.1} s",
        outcome.amalgam,
        outcome.results.len(),
        outcome.class_representatives,
        outcome.candidates,
        outcome.elapsed.as_secs_f64()
    );
    for (q, k) in quadruple_summary(&outcome.results) {
        println!("  ({}) x{k}", q.join(", "));
    }
    for s in &outcome.skipped {
        println!("  skipped |X| = {} (degree {}): {}", s.x_order, s.n, s.reason);
    }
    if !outcome.complete {
        println!("  search incomplete");
    }
    if verify && !all_verified {
        println!("  some results failed verification");
    }
    if let Some(p) = json {
        let doc = PairSearchJson {
            amalgam: outcome.amalgam.clone(),
            candidates: outcome.candidates,
            class_representatives: outcome.class_representatives,
            result_count: outcome.results.len(),
            complete: outcome.complete,
            skipped: outcome.skipped.clone(),
            seconds: outcome.elapsed.as_secs_f64(),
            results,
        };
        emit_json(&doc, Some(p))?;
    }
    Ok(outcome.complete && all_verified)
}

fn run_aut(graph: &Path, out: Option<&Path>) -> Result<bool, CliError> {
    let g = Graph::parse(&read(graph)?).map_err(input)?;
    let res = automorphism_group_with(&g, &AutOptions::default()).map_err(input)?;
    let text = format_generators(g.vertex_count(), res.group.generators());
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    println!("order {}", res.group.order());
    Ok(true)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AltGraphJson {
    cycle_count: usize,
    radius: usize,
    attachment: usize,
    alt_graph: String,
    alt_aut_order: String,
    alt_transitivity: TransitivityReport,
}

fn run_altgraph(graph: &Path, group: &Path, subgroup: &Path, json: Option<&Path>) -> Result<bool, CliError> {
    let g = Graph::parse(&read(graph)?).map_err(input)?;
    let big = parse_group(&read(group)?).map_err(input)?;
    let sub = parse_group(&read(subgroup)?).map_err(input)?;
    if !sub.is_subgroup_of(&big) {
        return Err(CliError::Input("subgroup is not contained in the group".into()));
    }
    let action = VertexAction::new(big, g).map_err(input)?.restricted(&sub).map_err(input)?;
    let orientation = hat_orientation(&action).map_err(input)?;
    let system = alternating_cycle_system(&orientation).map_err(input)?;
    let alt = alternating_graph(&action, &system).map_err(input)?;
    let aut = automorphism_group_with(
        &alt.alt,
        &AutOptions {
            seeds: alt.induced.generators().to_vec(),
            ..Default::default()
        },
    )
    .map_err(input)?
    .group;
    let alt_action = VertexAction::new(aut.clone(), alt.alt.clone()).map_err(input)?;
    let doc = AltGraphJson {
        cycle_count: system.cycles.len(),
        radius: system.radius,
        attachment: system.attachment,
        alt_graph: alt.alt.to_text(),
        alt_aut_order: aut.order().to_string(),
        alt_transitivity: transitivity_report(&alt_action, 3).map_err(input)?,
    };
    emit_json(&doc, json)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Example {
            id,
            json,
            witness,
            search,
            budget,
        } => run_example(id, json.as_deref(), witness.as_deref(), *search, *budget),
        Command::Pairsearch {
            amalgam,
            deep,
            budget,
            no_verify,
            json,
        } => run_pairsearch(amalgam, *deep, *budget, !*no_verify, json.as_deref()),
        Command::Aut { graph, out } => run_aut(graph, out.as_deref()),
        Command::Altgraph {
            graph,
            group,
            subgroup,
            json,
        } => run_altgraph(graph, group, subgroup, json.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

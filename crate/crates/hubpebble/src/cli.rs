//! Command-line surface: one verb per capability, reports in text, JSON,
//! or CSV.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::graph::{label_to_index, parse_descriptor, Graph, VertexSet};
use crate::hubs::{self, SetKind};
use crate::numbers::{
    generalized_cover_pebbling_number, pebbling_number, EngineOptions, NumberReport,
};
use crate::solver::{
    check_move_certificate, derive_flow_certificate, is_solvable, PebbleConfig, TargetFamily,
    Verdict,
};
use crate::verify::{
    self, conjecture_cycles, exit_code, guards, verify_books, verify_figure_counterexamples,
    verify_path_pebbling_numbers, verify_paths, verify_path_endpoint_strengthening, verify_stars,
    ReportRow,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    StrongHub,
    Hub,
    Cover,
    Dominating,
    Pebbling,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Hub,
    StrongHub,
    Dominating,
}

impl From<KindArg> for SetKind {
    fn from(k: KindArg) -> SetKind {
        match k {
            KindArg::Hub => SetKind::Hub,
            KindArg::StrongHub => SetKind::StrongHub,
            KindArg::Dominating => SetKind::Dominating,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifySuite {
    Paths,
    Stars,
    Books,
    Figures,
    Prop2,
    PiPaths,
}

#[derive(Debug, Parser)]
#[command(name = "hubpebble", version, about = "Exact graph pebbling workbench")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// RNG seed for sampled spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Exit 3 when any computation was skipped.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute an exact pebbling invariant by exhaustive search.
    Number {
        /// Graph descriptor: path:N, star:N, book:N, cycle:N, or a file path.
        graph: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Disable automorphism orbit reduction.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Decide solvability of one configuration.
    Solve {
        graph: String,
        /// Configuration text, e.g. "v1:5,v4:1".
        #[arg(long)]
        config: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Emit the move certificate (and derived flow) as JSON.
        #[arg(long)]
        certificate: bool,
    },
    /// Recognize or enumerate hub-type sets.
    Hubsets {
        graph: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Enumerate inclusion-minimal sets instead of testing one.
        #[arg(long)]
        minimal: bool,
        /// Set to test, e.g. "v2,v3" (required unless --minimal).
        #[arg(long)]
        set: Option<String>,
    },
    /// Re-verify a theorem suite against the computed values.
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Compare computed cycle values against the conjectured closed form.
    Conjecture {
        /// Only "cycles" is defined.
        what: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

const USAGE_ERROR: i32 = 2;

fn load_graph(desc: &str) -> Result<Graph, String> {
    // descriptor first, then a file on disk
    if desc.contains(':') {
        return parse_descriptor(desc).map_err(|e| e.to_string());
    }
    match std::fs::read_to_string(desc) {
        Ok(text) => parse_descriptor(&text).map_err(|e| e.to_string()),
        Err(_) => parse_descriptor(desc).map_err(|e| e.to_string()),
    }
}

fn parse_set(g: &Graph, text: &str) -> Result<VertexSet, String> {
    let mut set = VertexSet::EMPTY;
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v = label_to_index(g, part).map_err(|e| e.to_string())?;
        set.insert(v);
    }
    Ok(set)
}

fn print_rows(rows: &[ReportRow], format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(rows).expect("json"));
        }
        Format::Csv => {
            println!("name,graph,expected,computed,status");
            for row in rows {
                match row {
                    ReportRow::Case(c) => println!(
                        "{},{},{},{},{}",
                        c.name,
                        c.graph,
                        c.expected.as_deref().unwrap_or(""),
                        c.computed.as_deref().unwrap_or(""),
                        status_str(&c.status),
                    ),
                    ReportRow::Conjecture(r) => println!(
                        "cycle n={},cycle:{},{},{},{}",
                        r.n,
                        r.n,
                        r.conjectured,
                        r.computed.map(|v| v.to_string()).unwrap_or_default(),
                        status_str(&r.status),
                    ),
                }
            }
        }
        Format::Text => {
            for row in rows {
                match row {
                    ReportRow::Case(c) => println!(
                        "{} {} [{}] expected={} computed={}",
                        status_str(&c.status),
                        c.name,
                        c.graph,
                        c.expected.as_deref().unwrap_or("-"),
                        c.computed.as_deref().unwrap_or("-"),
                    ),
                    ReportRow::Conjecture(r) => println!(
                        "{} cycle n={} conjectured={} computed={} agrees={} witness_unsolvable={}",
                        status_str(&r.status),
                        r.n,
                        r.conjectured,
                        r.computed.map(|v| v.to_string()).unwrap_or("-".into()),
                        r.agrees.map(|a| a.to_string()).unwrap_or("-".into()),
                        r.witness_unsolvable
                            .map(|w| w.to_string())
                            .unwrap_or("-".into()),
                    ),
                }
            }
        }
    }
}

fn status_str(status: &verify::CaseStatus) -> String {
    match status {
        verify::CaseStatus::Pass => "PASS".to_string(),
        verify::CaseStatus::Fail => "FAIL".to_string(),
        verify::CaseStatus::Skipped(r) => format!("SKIPPED({r})"),
    }
}

fn print_number_report(report: &NumberReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("json")),
        Format::Csv => {
            println!("graph,family,value,witness,configs_examined,elapsed_ms");
            println!(
                "{},{},{},{},{},{}",
                report.graph,
                report.family,
                report.value,
                report.witness_text.as_deref().unwrap_or(""),
                report.configs_examined,
                report.elapsed_ms,
            );
        }
        Format::Text => {
            println!(
                "{} {} = {}{}",
                report.family,
                report.graph,
                report.value,
                if report.exact { "" } else { " (inexact)" }
            );
            if let Some(w) = &report.witness_text {
                println!("  witness ({}): {}", report.value.saturating_sub(1), w);
            }
            println!(
                "  examined {} configs ({} skipped by symmetry) in {} ms",
                report.configs_examined, report.configs_skipped_by_symmetry, report.elapsed_ms
            );
        }
    }
}

#[derive(Serialize)]
struct SolveReport {
    graph: String,
    config: String,
    family: String,
    verdict: Verdict,
    nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<serde_json::Value>,
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            USAGE_ERROR
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Number {
            graph,
            family,
            jobs,
            no_symmetry,
        } => {
            let g = load_graph(&graph)?;
            let options = EngineOptions {
                use_symmetry: !no_symmetry,
                jobs,
                ..EngineOptions::default()
            };
            let report = match family {
                FamilyArg::Pebbling => pebbling_number(&g, &options),
                _ => generalized_cover_pebbling_number(&g, &family_of(family), &options),
            }
            .map_err(|e| e.to_string())?;
            print_number_report(&report, cli.format);
            spot_check(&g, &report, family, cli.seed)?;
            Ok(if report.exact { 0 } else { 3 })
        }
        Command::Solve {
            graph,
            config,
            family,
            certificate,
        } => {
            let g = load_graph(&graph)?;
            let c = PebbleConfig::parse(&g, &config).map_err(|e| e.to_string())?;
            let fam = match family {
                FamilyArg::Pebbling => {
                    return Err("solve needs a cover-type family, not pebbling".to_string())
                }
                f => family_of(f),
            };
            let out =
                is_solvable(&g, &c, &fam, Default::default()).map_err(|e| e.to_string())?;
            let mut cert_json = None;
            if certificate {
                if let Some(cert) = &out.certificate {
                    check_move_certificate(&g, &c, &fam, cert).map_err(|e| e.to_string())?;
                    let flow = derive_flow_certificate(&g, cert);
                    cert_json = Some(serde_json::json!({
                        "moves": cert.moves,
                        "final_target": cert.final_target,
                        "flow": flow.map(|f| f.flow),
                    }));
                }
            }
            let report = SolveReport {
                graph: g.family_tag().to_string(),
                config: c.to_text(&g),
                family: fam.name(),
                verdict: out.verdict,
                nodes_expanded: out.stats.nodes_expanded,
                certificate: cert_json,
            };
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("json"))
                }
                _ => {
                    println!(
                        "{} {:?} (nodes={})",
                        report.config, report.verdict, report.nodes_expanded
                    );
                    if let Some(cert) = &report.certificate {
                        println!("{cert}");
                    }
                }
            }
            Ok(match out.verdict {
                Verdict::Unknown => 3,
                _ => 0,
            })
        }
        Command::Hubsets {
            graph,
            kind,
            minimal,
            set,
        } => {
            let g = load_graph(&graph)?;
            if minimal {
                let sets =
                    hubs::minimal_sets(&g, kind.into()).map_err(|e| e.to_string())?;
                match cli.format {
                    Format::Json => {
                        println!("{}", serde_json::to_string_pretty(&sets).expect("json"))
                    }
                    _ => {
                        for s in sets {
                            let labels: Vec<usize> = s.iter().collect();
                            println!(
                                "{}",
                                labels
                                    .iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            );
                        }
                    }
                }
                Ok(0)
            } else {
                let text = set.ok_or("--set is required without --minimal")?;
                let s = parse_set(&g, &text)?;
                let verdict = hubs::is_set_of_kind(&g, s, kind.into());
                match cli.format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({ "set": s, "kind": SetKind::from(kind).to_string(), "member": verdict })
                    ),
                    _ => println!("{verdict}"),
                }
                Ok(0)
            }
        }
        Command::Verify { suite, max_n } => {
            let options = EngineOptions::default();
            let rows: Vec<ReportRow> = match suite {
                VerifySuite::Paths => {
                    verify_paths(max_n.unwrap_or(guards::PATHS_MAX_N), &options)
                        .into_iter()
                        .map(ReportRow::Case)
                        .collect()
                }
                VerifySuite::Stars => {
                    verify_stars(max_n.unwrap_or(guards::STARS_MAX_N), &options)
                        .into_iter()
                        .map(ReportRow::Case)
                        .collect()
                }
                VerifySuite::Books => {
                    verify_books(max_n.unwrap_or(guards::BOOKS_MAX_N), &options)
                        .into_iter()
                        .map(ReportRow::Case)
                        .collect()
                }
                VerifySuite::Figures => verify_figure_counterexamples()
                    .into_iter()
                    .map(ReportRow::Case)
                    .collect(),
                VerifySuite::Prop2 => (3..=max_n.unwrap_or(guards::PROP2_MAX_N))
                    .map(|n| ReportRow::Case(verify_path_endpoint_strengthening(n, &options)))
                    .collect(),
                VerifySuite::PiPaths => {
                    verify_path_pebbling_numbers(max_n.unwrap_or(guards::PI_PATHS_MAX_M), &options)
                        .into_iter()
                        .map(ReportRow::Case)
                        .collect()
                }
            };
            print_rows(&rows, cli.format);
            Ok(exit_code(&rows, cli.strict))
        }
        Command::Conjecture { what, max_n } => {
            if what != "cycles" {
                return Err(format!("unknown conjecture target {what:?}"));
            }
            let options = EngineOptions::default();
            let rows: Vec<ReportRow> =
                conjecture_cycles(max_n.unwrap_or(guards::CYCLES_MAX_N), &options)
                    .into_iter()
                    .map(ReportRow::Conjecture)
                    .collect();
            print_rows(&rows, cli.format);
            Ok(exit_code(&rows, cli.strict))
        }
    }
}

fn family_of(arg: FamilyArg) -> TargetFamily {
    match arg {
        FamilyArg::StrongHub => TargetFamily::StrongHubSets,
        FamilyArg::Hub => TargetFamily::HubSets,
        FamilyArg::Cover => TargetFamily::FullCover,
        FamilyArg::Dominating => TargetFamily::DominatingSets,
        FamilyArg::Pebbling => unreachable!("handled by caller"),
    }
}

/// Samples configurations of total = value and re-verifies solvability,
/// seeded for reproducibility. A cheap guard against witness bookkeeping
/// bugs in the level scan.
fn spot_check(
    g: &Graph,
    report: &NumberReport,
    family: FamilyArg,
    seed: u64,
) -> Result<(), String> {
    const SAMPLES: usize = 200;
    if report.value == 0 || !report.exact || matches!(family, FamilyArg::Pebbling) {
        return Ok(());
    }
    let fam = family_of(family);
    let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    for _ in 0..SAMPLES {
        let mut counts = vec![0u32; g.n()];
        for _ in 0..report.value {
            counts[(next() % g.n() as u64) as usize] += 1;
        }
        let c = PebbleConfig::new(counts);
        let out = is_solvable(g, &c, &fam, Default::default()).map_err(|e| e.to_string())?;
        if !out.solvable() {
            return Err(format!(
                "spot check found unsolvable configuration {} at total {}",
                c.to_text(g),
                report.value
            ));
        }
    }
    Ok(())
}

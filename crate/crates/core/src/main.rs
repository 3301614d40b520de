//! Command-line interface: claim verification with table and JSON output,
//! ad-hoc order and identification queries on matrices read from files,
//! row-state inspection, and catalogue listing.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qweyl::catalogue;
use qweyl::claims::{builtin_claims, default_cache_dir, run, Report};
use qweyl::group::{fingerprint_set, identify, Identification, MatrixGroup};
use qweyl::io::{amplitudes_to_json, read_matrix};
use qweyl::matrix::ExactMatrix;
use qweyl::tangle::{profile, round_sig12, state_from_row, EntanglementProfile};

#[derive(Parser)]
#[command(
    name = "qweyl",
    version,
    about = "Exact verification of finite unitary matrix groups and three-qubit entanglement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in claim registry and print one line per claim.
    Verify {
        /// Only run claims whose id matches this pattern; '*' matches any run
        /// of characters.
        #[arg(long = "claim", value_name = "PATTERN")]
        claim: Option<String>,
        /// Also write the full report as JSON to this path.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Worker thread count; defaults to all available cores.
        #[arg(long, value_name = "N")]
        workers: Option<usize>,
        /// Directory for the on-disk order cache; defaults to QWEYL_CACHE_DIR
        /// or a per-user temporary directory.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Print the exact order of the group generated by matrices read from
    /// JSON files.
    Order {
        /// Generator matrices, one JSON file each.
        #[arg(long = "gens", value_name = "FILE", required = true, num_args = 1..)]
        gens: Vec<PathBuf>,
        /// Also enumerate the closure up to this many elements and check the
        /// count against the computed order.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Enumerate the group generated by matrices read from JSON files and
    /// print its fingerprint and identification label.
    Identify {
        /// Generator matrices, one JSON file each.
        #[arg(long = "gens", value_name = "FILE", required = true, num_args = 1..)]
        gens: Vec<PathBuf>,
    },
    /// Print one row of a catalogue matrix as a three-qubit state together
    /// with its entanglement profile.
    State {
        /// Catalogue matrix name (see `catalogue`).
        #[arg(long, value_name = "NAME")]
        matrix: String,
        /// Row index, 0-based.
        #[arg(long, value_name = "N")]
        row: usize,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the built-in matrix names and their dimensions.
    Catalogue,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            claim,
            json,
            workers,
            cache,
        } => cmd_verify(claim.as_deref(), json, workers, cache),
        Command::Order { gens, cap } => cmd_order(&gens, cap),
        Command::Identify { gens } => cmd_identify(&gens),
        Command::State { matrix, row, json } => cmd_state(&matrix, row, json),
        Command::Catalogue => cmd_catalogue(),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_verify(
    pattern: Option<&str>,
    json_path: Option<PathBuf>,
    workers: Option<usize>,
    cache: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let cache_dir = cache.unwrap_or_else(default_cache_dir);
    let claims = builtin_claims();
    let report = run(&claims, pattern, workers, cache_dir);
    print_table(&report).map_err(|e| e.to_string())?;
    if let Some(path) = json_path {
        let doc = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        std::fs::write(&path, doc + "\n")
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(if report.exit_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn print_table(report: &Report) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    if !report.notes.is_empty() {
        writeln!(out)?;
    }
    for r in &report.results {
        writeln!(
            out,
            "{:<22} {:<20} {:>7} ms",
            r.id,
            r.status.as_str(),
            r.elapsed_ms
        )?;
        if r.status != qweyl::claims::Status::Pass {
            writeln!(out, "    expected {}", r.expected)?;
            match &r.computed {
                Some(v) => writeln!(out, "    computed {v}")?,
                None => writeln!(out, "    computed (none)")?,
            }
            if let Some(detail) = &r.detail {
                writeln!(out, "    {detail}")?;
            }
        }
    }
    writeln!(
        out,
        "\ntotals: {} pass, {} fail, {} discrepancy-reported",
        report.totals.pass, report.totals.fail, report.totals.discrepancy_reported
    )?;
    out.flush()
}

fn load_generators(paths: &[PathBuf]) -> Result<Vec<ExactMatrix>, String> {
    paths
        .iter()
        .map(|p| read_matrix(p).map_err(|e| format!("{}: {e}", p.display())))
        .collect()
}

fn group_from_files(paths: &[PathBuf]) -> Result<MatrixGroup, String> {
    let gens = load_generators(paths)?;
    let dim = gens
        .first()
        .ok_or("at least one generator file is required")?
        .dim();
    MatrixGroup::new(dim, gens).map_err(|e| e.to_string())
}

fn cmd_order(paths: &[PathBuf], cap: Option<usize>) -> Result<ExitCode, String> {
    let group = group_from_files(paths)?;
    let order = group.order().map_err(|e| e.to_string())?;
    println!("{order}");
    if let Some(cap) = cap {
        let set = group.enumerate(cap).map_err(|e| e.to_string())?;
        if num_bigint::BigUint::from(set.order()) == order {
            println!("closure check: ok ({} elements)", set.order());
        } else {
            return Err(format!(
                "closure enumeration found {} elements but the order computation says {order}",
                set.order()
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_identify(paths: &[PathBuf]) -> Result<ExitCode, String> {
    let group = group_from_files(paths)?;
    let set = group.enumerate(10_000).map_err(|e| e.to_string())?;
    let fp = fingerprint_set(&set).map_err(|e| e.to_string())?;
    println!("order: {}", fp.order);
    println!("exponent: {}", fp.exponent);
    println!("center order: {}", fp.center_order);
    println!("derived subgroup order: {}", fp.derived_order);
    let abelianization = if fp.abelianization.is_empty() {
        "trivial".to_string()
    } else {
        fp.abelianization
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    println!("abelianization: {abelianization}");
    let histogram = fp
        .order_histogram
        .iter()
        .map(|(order, count)| format!("{order}:{count}"))
        .collect::<Vec<_>>()
        .join(" ");
    println!("element orders: {histogram}");
    match identify(&fp) {
        Identification::Consistent { label } => println!("label: {label}"),
        Identification::Unknown { order } => println!("label: unrecognized order {order}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn profile_to_json(p: &EntanglementProfile) -> serde_json::Value {
    json!({
        "class": p.class_label.as_str(),
        "tau3": round_sig12(p.tau3),
        "pairwise": p.pairwise().map(round_sig12),
        "one_tangles": p.one_tangles().map(round_sig12),
    })
}

fn cmd_state(name: &str, row: usize, as_json: bool) -> Result<ExitCode, String> {
    let m = catalogue::build(name).map_err(|e| e.to_string())?;
    if m.dim() != 8 {
        return Err(format!(
            "{name} is {}x{}; row states need an 8x8 matrix",
            m.dim(),
            m.dim()
        ));
    }
    let state = state_from_row(&m, row).map_err(|e| e.to_string())?;
    let p = profile(&state).map_err(|e| e.to_string())?;
    if as_json {
        let doc = json!({
            "matrix": name,
            "row": row,
            "amplitudes": amplitudes_to_json(state.amplitudes()),
            "profile": profile_to_json(&p),
        });
        println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
    } else {
        println!("matrix {name}, row {row}");
        for (index, amp) in state.amplitudes().iter().enumerate() {
            println!("  |{index:03b}>  {amp}");
        }
        println!("class: {}", p.class_label.as_str());
        println!("three-tangle: {}", round_sig12(p.tau3));
        let [ab, ac, bc] = p.pairwise().map(round_sig12);
        println!("pairwise tangles: AB {ab}  AC {ac}  BC {bc}");
        let [a, b, c] = p.one_tangles().map(round_sig12);
        println!("one-tangles: A {a}  B {b}  C {c}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalogue() -> Result<ExitCode, String> {
    for name in catalogue::NAMES {
        let m = catalogue::build(name).map_err(|e| e.to_string())?;
        println!("{name:<14} {0}x{0}", m.dim());
    }
    Ok(ExitCode::SUCCESS)
}

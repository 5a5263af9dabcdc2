//! `semiring`: analyze, enumerate and verify finite semirings.

mod analyze;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiring_core::constructions::{catalog, CatalogName, CatalogValue};
use semiring_core::enumeration::{
    enumerate_semilattices, enumerate_with, export, ConstraintSet, EnumerationOptions,
    EnumerationResult,
};
use semiring_core::verifier::{
    verify_classification, verify_corpus_properties, SearchMode, VerificationReport,
};
use semiring_core::{Error, Result};
use serde::Serialize;
use serde_json::json;

use analyze::{analyze, render, Analysis, Source};

/// Version of the `--json-out` document layout.
const SCHEMA: &str = "semiring-report/1";

#[derive(Parser, Debug)]
#[command(name = "semiring", version, about = "Finite semiring algebra engine")]
struct Cli {
    /// Cap on worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the structured report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a table file or `catalog:NAME`.
    Analyze { source: String },
    /// List the catalog, or print one entry.
    Catalog { name: Option<String> },
    /// Enumerate isomorphism classes of one order.
    Enumerate(EnumerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Write a catalog entry as a table file.
    Export {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    #[arg(long)]
    mult_idempotent: bool,
    #[arg(long)]
    add_idempotent: bool,
    #[arg(long)]
    commutative_mul: bool,
    #[arg(long)]
    has_mult_absorbing: bool,
    #[arg(long)]
    congruence_simple: bool,
    #[arg(long)]
    ideal_simple: bool,
    #[arg(long)]
    bi_ideal_simple: bool,
    #[arg(long)]
    mult_divisible: bool,
    /// Enumerate join-semilattices instead of semirings.
    #[arg(long, conflicts_with_all = ["mult_idempotent", "add_idempotent", "commutative_mul", "has_mult_absorbing",
        "congruence_simple", "ideal_simple", "bi_ideal_simple", "mult_divisible", "out"])]
    semilattice: bool,
    /// `restricted` adds additive idempotency to mult-idempotent searches at order 3 and above.
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    /// Directory for class files and manifests.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Restricted)]
    mode: Mode,
    /// Target of the semiring suite; every catalog semiring when omitted.
    #[arg(long)]
    target: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Classification,
    Corpus,
    Semiring,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Restricted,
    Full,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Restricted => SearchMode::Restricted,
            Mode::Full => SearchMode::Full,
        }
    }
}

/// What a command produced: text for stdout, a JSON payload, and whether any
/// claim failed.
struct Outcome {
    text: String,
    data: serde_json::Value,
    failed: bool,
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn run_analyze(spec: &str) -> Result<Outcome> {
    let source = Source::resolve(spec)?;
    let a = analyze(&source);
    Ok(Outcome {
        text: render(&a, &source),
        failed: a.failed(),
        data: to_json(&a),
    })
}

fn run_catalog(name: Option<&str>) -> Result<Outcome> {
    let names = match name {
        Some(n) => vec![n.parse::<CatalogName>()?],
        None => CatalogName::all(),
    };
    let mut text = String::new();
    let mut entries = Vec::new();
    for n in names {
        let entry = catalog(n);
        let (kind, body) = match &entry.value {
            CatalogValue::Semiring(s) => ("semiring", s.to_text()),
            CatalogValue::Semilattice(l) => ("semilattice", l.join_table().to_text()),
        };
        if name.is_some() {
            let _ = writeln!(
                text,
                "{} ({kind}, elements {})",
                entry.name,
                entry.element_names.join(" ")
            );
            text.push_str(&body);
        } else {
            let _ = writeln!(
                text,
                "{:<4} {kind:<12} order {}",
                entry.name.to_string(),
                entry.element_names.len()
            );
        }
        entries.push(json!({
            "name": entry.name.to_string(),
            "kind": kind,
            "element_names": entry.element_names,
            "tables": body,
        }));
    }
    Ok(Outcome {
        text,
        data: json!(entries),
        failed: false,
    })
}

fn constraints_of(a: &EnumerateArgs) -> ConstraintSet {
    let mut c = ConstraintSet {
        mult_idempotent: a.mult_idempotent,
        add_idempotent: a.add_idempotent,
        commutative_mul: a.commutative_mul,
        has_mult_absorbing: a.has_mult_absorbing,
        congruence_simple_filter: a.congruence_simple,
        ideal_simple_filter: a.ideal_simple,
        bi_ideal_simple_filter: a.bi_ideal_simple,
        mult_divisible_filter: a.mult_divisible,
    };
    if a.mode == Mode::Restricted && c.mult_idempotent && a.order >= 3 {
        c.add_idempotent = true;
    }
    c
}

fn summary(r: &EnumerationResult, mode: &str) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "order {} [{}] mode={mode}",
        r.order,
        r.constraints.active_flags().join(",")
    );
    let _ = writeln!(text, "classes: {}", r.classes.len());
    if !r.filter_counts.is_empty() {
        let _ = writeln!(text, "structural classes: {}", r.structural_classes);
        for f in &r.filter_counts {
            let _ = writeln!(text, "  after {}: {}", f.filter, f.remaining);
        }
    }
    let _ = writeln!(text, "nodes visited: {}", r.stats.nodes_visited());
    let _ = writeln!(text, "wall ms: {}", r.stats.wall_ms);
    text
}

fn run_enumerate(a: &EnumerateArgs, options: &EnumerationOptions) -> Result<Outcome> {
    if a.semilattice {
        let ls = enumerate_semilattices(a.order)?;
        let mut text = format!("semilattices of order {}: {}\n", a.order, ls.len());
        for l in &ls {
            text.push('\n');
            text.push_str(&l.join_table().to_text());
        }
        let tables: Vec<String> = ls.iter().map(|l| l.join_table().to_text()).collect();
        return Ok(Outcome {
            text,
            data: json!({ "order": a.order, "count": ls.len(), "tables": tables }),
            failed: false,
        });
    }
    let mode = match a.mode {
        Mode::Restricted => "restricted",
        Mode::Full => "full",
    };
    let r = enumerate_with(a.order, constraints_of(a), options)?;
    let mut text = summary(&r, mode);
    if let Some(dir) = &a.out {
        export(&r, dir, mode)?;
        let _ = writeln!(
            text,
            "wrote {} class files to {}",
            r.classes.len(),
            dir.display()
        );
    }
    let classes: Vec<serde_json::Value> = r
        .classes
        .iter()
        .map(|c| json!({ "digest": c.digest_hex(), "tables": c.to_text() }))
        .collect();
    let data = json!({
        "order": r.order,
        "constraints": r.constraints,
        "mode": mode,
        "class_count": r.classes.len(),
        "structural_classes": r.structural_classes,
        "filter_counts": r.filter_counts,
        "stats": r.stats,
        "classes": classes,
    });
    Ok(Outcome {
        text,
        data,
        failed: false,
    })
}

fn report_outcome(reports: Vec<VerificationReport>) -> Outcome {
    let text = reports
        .iter()
        .map(VerificationReport::to_text)
        .collect::<Vec<_>>()
        .join("\n");
    let failed = reports.iter().any(|r| !r.passed());
    let data = if reports.len() == 1 {
        to_json(&reports[0])
    } else {
        to_json(&reports)
    };
    Outcome { text, data, failed }
}

fn run_verify(a: &VerifyArgs, options: &EnumerationOptions) -> Result<Outcome> {
    match a.suite {
        Suite::Classification => Ok(report_outcome(vec![verify_classification(
            a.max_order.unwrap_or(3),
            a.mode.into(),
            options,
        )?])),
        Suite::Corpus => Ok(report_outcome(vec![verify_corpus_properties(
            a.max_order.unwrap_or(3),
            options,
        )?])),
        Suite::Semiring => {
            let specs: Vec<String> = match &a.target {
                Some(t) => vec![t.clone()],
                None => CatalogName::semirings()
                    .iter()
                    .map(|n| format!("catalog:{n}"))
                    .collect(),
            };
            let mut reports = Vec::new();
            for spec in specs {
                match analyze(&Source::resolve(&spec)?) {
                    Analysis::Semiring(s) => reports.push(s.verification),
                    Analysis::Semilattice(_) => {
                        return Err(Error::NotABand(format!(
                            "{spec} is a semilattice, not a semiring"
                        )))
                    }
                }
            }
            Ok(report_outcome(reports))
        }
    }
}

fn run_export(name: &str, out: &Path) -> Result<Outcome> {
    let source = Source::resolve(&format!("catalog:{name}"))?;
    if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(out, source.to_text())?;
    let text = format!("wrote {} to {}\n", source.label(), out.display());
    Ok(Outcome {
        text,
        data: json!({ "name": source.label(), "path": out.display().to_string() }),
        failed: false,
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Catalog { .. } => "catalog",
        Command::Enumerate(_) => "enumerate",
        Command::Verify(_) => "verify",
        Command::Export { .. } => "export",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let options = EnumerationOptions {
        threads: cli.threads,
    };
    let result = match &cli.command {
        Command::Analyze { source } => run_analyze(source),
        Command::Catalog { name } => run_catalog(name.as_deref()),
        Command::Enumerate(a) => run_enumerate(a, &options),
        Command::Verify(a) => run_verify(a, &options),
        Command::Export { name, out } => run_export(name, out),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", outcome.text);
    let status = if outcome.failed { "fail" } else { "pass" };
    if let Some(path) = &cli.json_out {
        let doc = json!({
            "schema": SCHEMA,
            "command": command_name(&cli.command),
            "status": status,
            "data": outcome.data,
        });
        let body = serde_json::to_string_pretty(&doc).expect("json value serializes") + "\n";
        if let Err(e) = fs::write(path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

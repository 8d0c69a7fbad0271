use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sgc_core::dsl::{execute, parse_presentation, parse_script, presentation_document};
use sgc_core::library::verify_main_theorem;
use sgc_core::report::{Budget, Report, Verdict};
use sgc_core::tietze_simplify;

const USAGE_ERROR: u8 = 64;

#[derive(Parser)]
#[command(name = "sgc", version, about = "Fundamental-group calculus for symplectic 4-manifold constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coset table size limit for Todd–Coxeter.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_cosets: usize,

    /// Step limit for Tietze simplification.
    #[arg(long, global = true, default_value_t = 10_000)]
    tietze_budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    emit: Emit,

    /// Include per-statement details in text output.
    #[arg(long, global = true)]
    trace: bool,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a construction script (.sgc).
    Run { file: PathBuf },
    /// Rebuild X and check the main theorem end to end.
    VerifyPaper,
    /// Tietze-simplify a presentation document.
    Simplify { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(verdict) => ExitCode::from(verdict.exit_code() as u8),
        Err(msg) => {
            eprintln!("sgc: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<Verdict, String> {
    let budget = Budget { max_cosets: cli.max_cosets, tietze_steps: cli.tietze_budget };
    let report = match &cli.command {
        Command::Run { file } => {
            let script = parse_script(&read(file)?).map_err(|e| format!("{}:{e}", file.display()))?;
            execute(&script, budget)
        }
        Command::VerifyPaper => verify_main_theorem(budget),
        Command::Simplify { file } => {
            let p = parse_presentation(&read(file)?).map_err(|e| format!("{}:{e}", file.display()))?;
            simplify(&p, budget)
        }
    };
    emit(cli, &report)?;
    Ok(report.verdict)
}

fn simplify(p: &sgc_core::Presentation, budget: Budget) -> Report {
    let mut report = Report::new();
    let out = tietze_simplify(p, budget.tietze_steps).expect("document relators share its alphabet");
    let replayed = out.trace.replay().is_ok_and(|q| q.same_text(&out.presentation));
    let verdict = match (replayed, out.complete) {
        (false, _) => Verdict::Fail,
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Inconclusive,
    };
    report.push(
        "simplify",
        verdict,
        json!({
            "input": document_lines(p),
            "result": document_lines(&out.presentation),
            "h1": out.presentation.homology_invariants().to_string(),
            "complete": out.complete,
            "replayed": replayed,
            "steps": out.trace.lines(),
        }),
    );
    report
}

fn document_lines(p: &sgc_core::Presentation) -> Vec<String> {
    presentation_document(p).lines().map(str::to_string).collect()
}

fn emit(cli: &Cli, report: &Report) -> Result<(), String> {
    let text = match cli.emit {
        Emit::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("report serializes")),
        Emit::Text => report.to_text(cli.trace),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

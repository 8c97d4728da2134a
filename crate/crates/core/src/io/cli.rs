use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use super::commands::{self, CommandError, Outcome};
use super::corpus::verify_corpus;
use super::document::{parse_document, ParsedInput};
use super::report::{emit_report, Format, InputSummary, ReportDocument, ENGINE_VERSION, SCHEMA_VERSION};
use crate::divisor::{AnalysisOptions, SearchConfig};

#[derive(Debug, Parser)]
#[command(
    name = "freecurve",
    version,
    about = "Freeness of plane curves and line arrangements"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Variable names, overriding the input file.
    #[arg(long, value_delimiter = ',', global = true)]
    vars: Option<Vec<String>>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freeness verdict, exponents, Betti table and diagnostics.
    Freeness {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal first syzygies of the Jacobian ideal (or of an `ideal:` input).
    Syzygies { file: PathBuf },
    /// Search for a syzygy whose entries form a regular sequence.
    RegularSyzygy {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Singular points and the radical of the Jacobian ideal.
    Locus { file: PathBuf },
    /// Degree bounds for line arrangements.
    Bounds {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal graded free resolution.
    Resolve {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Run the built-in example corpus.
    VerifyCorpus,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Freeness { .. } => "freeness",
            Command::Syzygies { .. } => "syzygies",
            Command::RegularSyzygy { .. } => "regular-syzygy",
            Command::Locus { .. } => "locus",
            Command::Bounds { .. } => "bounds",
            Command::Resolve { .. } => "resolve",
            Command::VerifyCorpus => "verify-corpus",
        }
    }

    fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::Freeness { file, .. }
            | Command::Syzygies { file }
            | Command::RegularSyzygy { file, .. }
            | Command::Locus { file }
            | Command::Bounds { file, .. }
            | Command::Resolve { file, .. } => Some(file),
            Command::VerifyCorpus => None,
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Command::Freeness { seed, .. } | Command::RegularSyzygy { seed, .. } | Command::Bounds { seed, .. } => {
                Some(*seed)
            }
            _ => None,
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(path: &PathBuf, vars: Option<&[String]>) -> Result<ParsedInput, CommandError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CommandError::Input(format!("{}: {e}", path.display())))?;
    parse_document(&text, vars).map_err(|e| CommandError::Input(format!("{}:{e}", path.display())))
}

fn dispatch(cmd: &Command, input: Option<&ParsedInput>) -> Result<Outcome, CommandError> {
    let search = |budget: usize, seed: u64| SearchConfig { budget, seed };
    match (cmd, input) {
        (Command::Freeness { budget, seed, .. }, Some(i)) => commands::freeness(
            i,
            &AnalysisOptions {
                search: search(*budget, *seed),
                milnor_seed: *seed,
                ..AnalysisOptions::default()
            },
        ),
        (Command::Syzygies { .. }, Some(i)) => commands::syzygies(i),
        (Command::RegularSyzygy { budget, seed, .. }, Some(i)) => commands::regular_syzygy(i, &search(*budget, *seed)),
        (Command::Locus { .. }, Some(i)) => commands::locus(i),
        (Command::Bounds { budget, seed, .. }, Some(i)) => commands::bounds(i, &search(*budget, *seed)),
        (Command::Resolve { cap, .. }, Some(i)) => commands::resolve(i, *cap),
        (Command::VerifyCorpus, _) => Ok(corpus_outcome()),
        _ => unreachable!("file commands always carry input"),
    }
}

fn corpus_outcome() -> Outcome {
    let results = verify_corpus();
    let mut text = String::new();
    for r in &results {
        for c in &r.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(
                text,
                "{tag} {}: {} (expected {}, got {})",
                r.name, c.name, c.expected, c.actual
            )
            .unwrap();
        }
        if let Some(e) = &r.error {
            writeln!(text, "FAIL {}: {e}", r.name).unwrap();
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    writeln!(text, "{} entries, {failed} failed", results.len()).unwrap();
    Outcome {
        result: json!({ "entries": results, "failed": failed }),
        text,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_command<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return RunOutput { code, stdout, stderr };
        }
    };
    let start = Instant::now();
    let vars = cli.vars.as_deref();
    let input = match cli.command.file().map(|f| read_input(f, vars)).transpose() {
        Ok(i) => i,
        Err(e) => return failure(&e),
    };
    let outcome = match dispatch(&cli.command, input.as_ref()) {
        Ok(o) => o,
        Err(e) => return failure(&e),
    };
    let failed = cli.command.name() == "verify-corpus" && outcome.result["failed"] != json!(0);
    let report = ReportDocument {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION,
        command: cli.command.name().to_string(),
        input: input.as_ref().map(InputSummary::from),
        seed: cli.command.seed(),
        result: outcome.result,
        timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0),
        text: outcome.text,
    };
    let stdout = emit_report(&report, cli.format);
    if failed {
        let e = CommandError::Mismatch("corpus mismatch".into());
        return RunOutput {
            code: e.exit_code(),
            stdout,
            stderr: format!("error: {e}\n"),
        };
    }
    RunOutput {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn failure(e: &CommandError) -> RunOutput {
    RunOutput {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

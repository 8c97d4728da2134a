use serde::Serialize;
use serde_json::Value;

use super::document::{InputKind, ParsedInput};
use crate::poly::Polynomial;

/// Bumped on any incompatible change to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputSummary {
    pub kind: InputKind,
    pub variables: Vec<String>,
    pub polynomials: Vec<Polynomial>,
}

impl From<&ParsedInput> for InputSummary {
    fn from(p: &ParsedInput) -> Self {
        InputSummary {
            kind: p.kind,
            variables: p.ctx.names().to_vec(),
            polynomials: p.polynomials.clone(),
        }
    }
}

/// Output of one command. The `text` rendering is kept alongside the JSON
/// tree so both formats come from the same run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub engine_version: &'static str,
    pub command: String,
    pub input: Option<InputSummary>,
    pub seed: Option<u64>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub text: String,
}

pub fn emit_report(r: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report is serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(input) = &r.input {
                s.push_str(&format!("input: {} in {}\n", input.kind, input.variables.join(",")));
            }
            s.push_str(&r.text);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            if let Some(t) = r.timing_ms {
                s.push_str(&format!("time: {t:.1} ms\n"));
            }
            s
        }
    }
}

//! Parsing, input documents, report emission and command dispatch.

mod cli;
mod commands;
mod corpus;
mod document;
mod parse;
mod report;
#[cfg(test)]
mod tests;

pub use cli::{run_command, RunOutput};
pub use commands::CommandError;
pub use corpus::{verify_corpus, Check, CorpusEntry, EntryResult, CORPUS};
pub use document::{parse_document, read_document, DocumentError, InputDocument, InputKind, Located, ParsedInput};
pub use parse::{parse_at, parse_polynomial, ParseError, ParseErrorKind};
pub use report::{emit_report, Format, InputSummary, ReportDocument, ENGINE_VERSION, SCHEMA_VERSION};

//! Input files.
//!
//! ```text
//! vars: x,y,z
//! divisor: x*y*z*(x-y)
//! ```
//!
//! or `lines:` / `ideal:` followed by one expression per line. `#` starts a
//! comment. Without a `vars:` line the variables default to `x,y,z`, or
//! `x,y,z,w` when `w` occurs.

use serde::Serialize;
use thiserror::Error;

use super::parse::{identifiers, parse_at, ParseError};
use crate::poly::{Ctx, PolyError, Polynomial, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Divisor,
    Arrangement,
    Ideal,
}

impl std::fmt::Display for InputKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            InputKind::Divisor => "divisor",
            InputKind::Arrangement => "lines",
            InputKind::Ideal => "ideal",
        })
    }
}

/// One expression with its 1-based position in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

/// Raw document before expressions are parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub kind: InputKind,
    pub variables: Option<Vec<String>>,
    pub body: Vec<Located>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bad variable list: {0}")]
    Variables(String),
}

impl DocumentError {
    pub fn line(&self) -> usize {
        match self {
            DocumentError::Syntax { line, .. } => *line,
            DocumentError::Parse(e) => e.line,
            DocumentError::Variables(_) => 1,
        }
    }
}

/// Parsed document: variables fixed and all expressions read.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedInput {
    pub kind: InputKind,
    pub ctx: Ctx,
    pub polynomials: Vec<Polynomial>,
    /// Top-level product factors of a `divisor:` expression, if it is one.
    pub factors: Option<Vec<Polynomial>>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn read_document(text: &str) -> Result<InputDocument, DocumentError> {
    let mut variables = None;
    let mut kind = None;
    let mut body = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = strip_comment(raw);
        if content.trim().is_empty() {
            continue;
        }
        let offset = content.len() - content.trim_start().len();
        let trimmed = content.trim();
        if let Some((key, rest)) = split_key(trimmed) {
            let rest_col = offset + 1 + trimmed.len() - rest.len();
            match key {
                "vars" if variables.is_none() && kind.is_none() => {
                    variables = Some(split_vars(rest).map_err(|m| DocumentError::Syntax { line, message: m })?);
                }
                "divisor" | "lines" | "ideal" if kind.is_none() => {
                    kind = Some(match key {
                        "divisor" => InputKind::Divisor,
                        "lines" => InputKind::Arrangement,
                        _ => InputKind::Ideal,
                    });
                    if !rest.trim().is_empty() {
                        let lead = rest.len() - rest.trim_start().len();
                        body.push(Located {
                            text: rest.trim().to_string(),
                            line,
                            column: rest_col + lead,
                        });
                    }
                }
                _ => {
                    return Err(DocumentError::Syntax {
                        line,
                        message: format!("unexpected section {key:?}"),
                    })
                }
            }
            continue;
        }
        if kind.is_none() {
            return Err(DocumentError::Syntax {
                line,
                message: "expected `vars:`, `divisor:`, `lines:` or `ideal:`".into(),
            });
        }
        body.push(Located {
            text: trimmed.to_string(),
            line,
            column: offset + 1,
        });
    }
    let kind = kind.ok_or(DocumentError::Syntax {
        line: text.lines().count().max(1),
        message: "missing `divisor:`, `lines:` or `ideal:` section".into(),
    })?;
    if body.is_empty() {
        return Err(DocumentError::Syntax {
            line: text.lines().count().max(1),
            message: "no expressions".into(),
        });
    }
    if kind == InputKind::Divisor && body.len() > 1 {
        return Err(DocumentError::Syntax {
            line: body[1].line,
            message: "a divisor takes a single expression".into(),
        });
    }
    Ok(InputDocument { kind, variables, body })
}

fn split_key(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    let key = key.trim();
    (!key.is_empty() && key.chars().all(|c| c.is_ascii_alphabetic())).then_some((key, rest))
}

pub fn split_vars(list: &str) -> Result<Vec<String>, String> {
    let vars: Vec<String> = list.split(',').map(|v| v.trim().to_string()).collect();
    if vars.iter().any(|v| v.is_empty()) {
        return Err(format!("empty name in variable list {list:?}"));
    }
    Ok(vars)
}

impl InputDocument {
    /// Variable context: `override_vars`, then the file's `vars:` line, then
    /// the default.
    pub fn context(&self, override_vars: Option<&[String]>) -> Result<Ctx, DocumentError> {
        let names = match (override_vars, &self.variables) {
            (Some(v), _) => v.to_vec(),
            (None, Some(v)) => v.clone(),
            (None, None) => {
                let uses_w = self.body.iter().any(|l| identifiers(&l.text).iter().any(|i| i == "w"));
                if uses_w {
                    return Ok(VariableContext::xyzw());
                }
                return Ok(VariableContext::xyz());
            }
        };
        VariableContext::new(&names).map_err(|e: PolyError| DocumentError::Variables(e.to_string()))
    }

    pub fn parse(&self, override_vars: Option<&[String]>) -> Result<ParsedInput, DocumentError> {
        let ctx = self.context(override_vars)?;
        let polynomials = self
            .body
            .iter()
            .map(|l| parse_at(&l.text, &ctx, l.line, l.column))
            .collect::<Result<Vec<_>, _>>()?;
        let factors = match self.kind {
            InputKind::Divisor => top_level_factors(&self.body[0], &ctx),
            InputKind::Arrangement => Some(polynomials.clone()),
            InputKind::Ideal => None,
        };
        Ok(ParsedInput {
            kind: self.kind,
            ctx,
            polynomials,
            factors,
        })
    }
}

/// Splits `a*b*(c)` at depth-0 `*` and parses each piece. Constant pieces
/// are dropped; `None` if the expression is not a plain product.
fn top_level_factors(l: &Located, ctx: &Ctx) -> Option<Vec<Polynomial>> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in l.text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                pieces.push((start, &l.text[start..i]));
                start = i + 1;
            }
            '+' | '-' | '^' | '/' if depth == 0 => return None,
            _ => {}
        }
    }
    pieces.push((start, &l.text[start..]));
    if pieces.len() < 2 {
        return None;
    }
    let mut out = Vec::new();
    for (at, piece) in pieces {
        let p = parse_at(piece.trim(), ctx, l.line, l.column + at).ok()?;
        if !p.is_constant() {
            out.push(p);
        }
    }
    Some(out)
}

/// Reads and parses in one step.
pub fn parse_document(text: &str, override_vars: Option<&[String]>) -> Result<ParsedInput, DocumentError> {
    read_document(text)?.parse(override_vars)
}

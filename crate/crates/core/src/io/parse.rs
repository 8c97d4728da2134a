//! Polynomial expression parser.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor | factor)*
//! factor := base ('^' natural)?
//! base   := rational | variable | '(' expr ')'
//! ```
//!
//! Adjacent factors multiply implicitly (`2x`, `(x+y)(x-y)`); `/` only
//! accepts a nonzero constant divisor.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Ctx, Polynomial, Rational};

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(String),
    MalformedExponent(String),
    DivisionByNonConstant,
    DivisionByZero,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token {t:?}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            ParseErrorKind::MalformedExponent(e) => write!(f, "malformed exponent {e:?}"),
            ParseErrorKind::DivisionByNonConstant => write!(f, "division by a non-constant expression"),
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

/// Parse failure with 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Slash => "/".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(text: &str, line0: usize, col0: usize) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, cc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Num(s.parse().unwrap()), l, cc));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Ident(s), l, cc));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    line: l,
                    column: cc,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        toks.push((t, l, cc));
        col += 1;
        i += 1;
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    lx: Lexer,
    pos: usize,
    ctx: &'a Ctx,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.lx.toks[self.pos].0
    }

    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        let (_, line, column) = &self.lx.toks[self.pos];
        ParseError {
            line: *line,
            column: *column,
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Tok::End => self.err_here(ParseErrorKind::UnexpectedEnd),
            t => self.err_here(ParseErrorKind::UnexpectedToken(t.describe())),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => self.pos += 1,
            Tok::Minus => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Tok::Minus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_base(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Tok::Slash => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    if !f.is_constant() {
                        self.pos = at;
                        return Err(self.err_here(ParseErrorKind::DivisionByNonConstant));
                    }
                    let c = f.terms().first().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero);
                    if c.is_zero() {
                        self.pos = at;
                        return Err(self.err_here(ParseErrorKind::DivisionByZero));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ if self.starts_base() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().clone() {
            Tok::Num(n) => {
                let e: Option<u32> = (&n).try_into().ok().filter(|e| *e <= MAX_EXPONENT);
                match e {
                    Some(e) => {
                        self.pos += 1;
                        Ok(base.pow(e))
                    }
                    None => Err(self.err_here(ParseErrorKind::MalformedExponent(n.to_string()))),
                }
            }
            other => Err(self.err_here(ParseErrorKind::MalformedExponent(other.describe()))),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ctx, Rational::from_integer(n)))
            }
            Tok::Ident(name) => match self.ctx.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ctx, i))
                }
                None => Err(self.err_here(ParseErrorKind::UnknownVariable(name))),
            },
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Identifier tokens of `text`, or none if it does not lex.
pub(crate) fn identifiers(text: &str) -> Vec<String> {
    lex(text, 1, 1)
        .map(|lx| {
            lx.toks
                .into_iter()
                .filter_map(|(t, _, _)| match t {
                    Tok::Ident(s) => Some(s),
                    _ => None,
                })
                .collect()
        })
        .unwrap_or_default()
}

/// Parses `text` as a polynomial over `ctx`.
pub fn parse_polynomial(text: &str, ctx: &Ctx) -> Result<Polynomial, ParseError> {
    parse_at(text, ctx, 1, 1)
}

/// Parses with positions offset to `(line, column)` of the enclosing document.
pub fn parse_at(text: &str, ctx: &Ctx, line: usize, column: usize) -> Result<Polynomial, ParseError> {
    let lx = lex(text, line, column)?;
    let mut p = Parser { lx, pos: 0, ctx };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(e)
}

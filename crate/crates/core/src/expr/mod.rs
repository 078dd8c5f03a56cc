//! Text front-end: parsing, evaluation and formatting of gross-number
//! expressions, plus the word commands understood by the REPL.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! expr   := expr ('+' | '-') expr
//!         | expr ('*' | '/') expr
//!         | '-' expr
//!         | expr '^' expr            (right-associative)
//!         | number | '①' | 'g1' | '(' expr ')' | name '(' expr {',' expr} ')'
//! ```
//!
//! Numbers are integers or decimals (`0.25`), converted exactly.

mod command;
mod eval;
mod lexer;
mod parser;

use std::fmt;

use crate::error::GrossError;
use crate::Rational;

pub use command::{parse_command, run_command, Command, Output, HELP};
pub use eval::{evaluate, evaluate_str};
pub use parser::{parse, parse_prefix, parse_range};

/// Half-open byte range into the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

/// Named calls available inside expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Function {
    Carpet,
    Sponge,
    Cantor,
    Reach,
    Countable,
    Compare,
    Approx,
}

impl Function {
    pub const NAMES: [&'static str; 7] = [
        "carpet",
        "sponge",
        "cantor",
        "reach",
        "countable",
        "compare",
        "approx",
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "carpet" => Function::Carpet,
            "sponge" => Function::Sponge,
            "cantor" => Function::Cantor,
            "reach" => Function::Reach,
            "countable" => Function::Countable,
            "compare" => Function::Compare,
            "approx" => Function::Approx,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::Carpet => "carpet",
            Function::Sponge => "sponge",
            Function::Cantor => "cantor",
            Function::Reach => "reach",
            Function::Countable => "countable",
            Function::Compare => "compare",
            Function::Approx => "approx",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Function::Reach | Function::Countable => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational, Span),
    Grossone(Span),
    Neg(Box<Expr>, Span),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        span: Span,
    },
    Call {
        func: Function,
        args: Vec<Expr>,
        span: Span,
    },
}

impl Expr {
    pub(crate) fn with_span(mut self, new: Span) -> Self {
        match &mut self {
            Expr::Number(_, s) | Expr::Grossone(s) | Expr::Neg(_, s) => *s = new,
            Expr::Binary { span, .. } | Expr::Call { span, .. } => *span = new,
        }
        self
    }

    pub fn span(&self) -> Span {
        match self {
            Expr::Number(_, s) | Expr::Grossone(s) | Expr::Neg(_, s) => *s,
            Expr::Binary { span, .. } | Expr::Call { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl SyntaxError {
    pub fn new(offset: usize, found: &str, expected: &[&str]) -> Self {
        SyntaxError {
            offset,
            found: found.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: found {}, expected {}",
            self.offset,
            self.found,
            self.expected.join(" or ")
        )
    }
}

impl std::error::Error for SyntaxError {}

/// Anything that can go wrong between text and value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Syntax(SyntaxError),
    Eval { span: Span, error: GrossError },
}

impl ExprError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, ExprError::Syntax(_))
    }

    pub fn span(&self) -> Span {
        match self {
            ExprError::Syntax(e) => Span::new(e.offset, e.offset),
            ExprError::Eval { span, .. } => *span,
        }
    }
}

impl From<SyntaxError> for ExprError {
    fn from(e: SyntaxError) -> Self {
        ExprError::Syntax(e)
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax(e) => e.fmt(f),
            ExprError::Eval { span, error } => write!(f, "error at {span}: {error}"),
        }
    }
}

impl std::error::Error for ExprError {}

//! Pratt parser for gross-number expressions.
//!
//! Precedence, loosest first: `+ -`, `* /`, unary `-`, `^`. The power operator
//! is right-associative and its right operand may itself start with a unary
//! minus (`2^-1`).

use super::lexer::{tokenize, Token, TokenKind};
use super::{BinOp, Expr, Function, SyntaxError};
use crate::Rational;

const ADD_BP: (u8, u8) = (1, 2);
const MUL_BP: (u8, u8) = (3, 4);
const NEG_BP: u8 = 5;
const POW_BP: (u8, u8) = (7, 6);

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    parse_range(input, 0, input.len())
}

/// Parses exactly `input[start..end]`, keeping spans relative to all of `input`.
pub fn parse_range(input: &str, start: usize, end: usize) -> Result<Expr, SyntaxError> {
    let (expr, mut p) = parse_at(&input[..end], start)?;
    p.expect_end()?;
    Ok(expr)
}

/// Parses the longest expression starting at byte `start`; returns it with the
/// offset where parsing stopped.
pub fn parse_prefix(input: &str, start: usize) -> Result<(Expr, usize), SyntaxError> {
    let (expr, p) = parse_at(input, start)?;
    Ok((expr, p.peek().span.start))
}

fn parse_at(input: &str, start: usize) -> Result<(Expr, Parser), SyntaxError> {
    let mut p = Parser {
        tokens: tokenize(input, start)?,
        pos: 0,
    };
    let expr = p.expr(0)?;
    Ok((expr, p))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let t = self.peek();
        SyntaxError::new(t.span.start, &t.kind.to_string(), expected)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token, SyntaxError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn expect_end(&mut self) -> Result<(), SyntaxError> {
        if self.peek().kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(self.error(&["operator", "end of input"]))
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, SyntaxError> {
        let mut lhs = self.prefix()?;
        loop {
            let (op, (lbp, rbp)) = match self.peek().kind {
                TokenKind::Plus => (BinOp::Add, ADD_BP),
                TokenKind::Minus => (BinOp::Sub, ADD_BP),
                TokenKind::Star => (BinOp::Mul, MUL_BP),
                TokenKind::Slash => (BinOp::Div, MUL_BP),
                TokenKind::Caret => (BinOp::Pow, POW_BP),
                _ => break,
            };
            if lbp < min_bp {
                break;
            }
            self.bump();
            let rhs = self.expr(rbp)?;
            let span = lhs.span().join(rhs.span());
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                span,
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, SyntaxError> {
        const EXPECTED: &[&str] = &["number", "①", "'('", "'-'", "function name"];
        let tok = self.peek().clone();
        match tok.kind {
            TokenKind::Number(ref text) => {
                self.bump();
                let value = parse_decimal(text)
                    .ok_or_else(|| SyntaxError::new(tok.span.start, text, &["number"]))?;
                Ok(Expr::Number(value, tok.span))
            }
            TokenKind::Grossone => {
                self.bump();
                Ok(Expr::Grossone(tok.span))
            }
            TokenKind::Minus => {
                self.bump();
                let operand = self.expr(NEG_BP)?;
                let span = tok.span.join(operand.span());
                Ok(Expr::Neg(Box::new(operand), span))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.expr(0)?;
                let close = self.expect(TokenKind::RParen, "')'")?;
                Ok(inner.with_span(tok.span.join(close.span)))
            }
            TokenKind::Ident(ref name) => {
                let Some(func) = Function::from_name(name) else {
                    return Err(SyntaxError::new(
                        tok.span.start,
                        &tok.kind.to_string(),
                        &Function::NAMES,
                    ));
                };
                self.bump();
                self.expect(TokenKind::LParen, "'('")?;
                let mut args = Vec::with_capacity(func.arity());
                for i in 0..func.arity() {
                    if i > 0 {
                        self.expect(TokenKind::Comma, "','")?;
                    }
                    args.push(self.expr(0)?);
                }
                let close = self.expect(TokenKind::RParen, "')'")?;
                Ok(Expr::Call {
                    func,
                    args,
                    span: tok.span.join(close.span),
                })
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}

/// Exact conversion of `123`, `0.25`, `1.` and `.5` style literals.
fn parse_decimal(text: &str) -> Option<Rational> {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits = format!("{int}{frac}");
    if digits.is_empty() {
        return None;
    }
    let numer = digits.parse().ok()?;
    let denom = num_bigint::BigInt::from(10u32).pow(u32::try_from(frac.len()).ok()?);
    Some(Rational::new(numer, denom))
}

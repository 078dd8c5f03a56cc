use std::fmt;

use super::{Span, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number(String),
    Grossone,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Number(n) => write!(f, "number {n}"),
            TokenKind::Grossone => f.write_str("①"),
            TokenKind::Ident(s) => write!(f, "name {s:?}"),
            TokenKind::Plus => f.write_str("'+'"),
            TokenKind::Minus => f.write_str("'-'"),
            TokenKind::Star => f.write_str("'*'"),
            TokenKind::Slash => f.write_str("'/'"),
            TokenKind::Caret => f.write_str("'^'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

/// Splits `input[start..]` into tokens. Spans are byte offsets into `input`.
pub fn tokenize(input: &str, start: usize) -> Result<Vec<Token>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = input[start..].char_indices().peekable();
    while let Some(&(rel, c)) = chars.peek() {
        let pos = start + rel;
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' | '\u{2212}' => Some(TokenKind::Minus),
            '*' | '\u{00b7}' | '\u{00d7}' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            '①' => Some(TokenKind::Grossone),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            tokens.push(Token {
                kind,
                span: Span::new(pos, pos + c.len_utf8()),
            });
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let mut end = pos;
            let mut seen_dot = false;
            while let Some(&(r, d)) = chars.peek() {
                if d.is_ascii_digit() || (d == '.' && !seen_dot) {
                    seen_dot |= d == '.';
                    end = start + r + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            let text = &input[pos..end];
            if text == "." {
                return Err(SyntaxError::new(pos, "'.'", &["number"]));
            }
            tokens.push(Token {
                kind: TokenKind::Number(text.to_string()),
                span: Span::new(pos, end),
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(r, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    end = start + r + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &input[pos..end];
            let kind = if word == "g1" {
                TokenKind::Grossone
            } else {
                TokenKind::Ident(word.to_string())
            };
            tokens.push(Token {
                kind,
                span: Span::new(pos, end),
            });
            continue;
        }
        return Err(SyntaxError::new(
            pos,
            &format!("character {c:?}"),
            &["number", "①", "operator", "'('"],
        ));
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span::new(input.len(), input.len()),
    });
    Ok(tokens)
}

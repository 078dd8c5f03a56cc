//! Word commands for the REPL and their text/JSON output.

use std::cmp::Ordering;

use serde_json::{json, Value};

use super::eval::{eval_linear, eval_substitution_point, evaluate, snapshot};
use super::{parse_prefix, Expr, ExprError, Span, SyntaxError};
use crate::fractal::{distinguish, Fractal};
use crate::measure::int_json;
use crate::notation::Notation;
use crate::process::{is_sequentially_countable, sequential_reach};
use crate::rational::fmt_rational;

pub const HELP: &str = "\
Commands:
  EXPR                       evaluate an expression
  eval EXPR                  same
  compare A B                order of two values: less, equal or greater
  approx EXPR at M           exact value with ① replaced by the integer M
  carpet K N                 Sierpinski carpet snapshot at offset K, step N
  sponge K N                 Menger sponge snapshot
  cantor K N                 Cantor set snapshot
  distinguish F K1 N1 K2 N2  compare two snapshots of fractal F
  reach S                    farthest position reachable from S in ① steps
  countable EXPR             whether EXPR elements can be counted one by one
  help, quit

Expressions use + - * / ^, parentheses, rationals (3/4, 0.25) and ① (or g1).
^ is right-associative and binds tighter than unary minus: -g1^2 = -(g1^2).
Arguments of word commands are separated by spaces; parenthesise arguments
that start with a minus sign.";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Empty,
    Help,
    Quit,
    Eval(Expr),
    Compare(Expr, Expr),
    Approx(Expr, Expr),
    Snapshot(Fractal, Expr, Expr),
    Distinguish(Fractal, [Expr; 4]),
    Reach(Expr),
    Countable(Expr),
}

/// A command's result in both output encodings.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            self.json.to_string()
        } else {
            self.text.clone()
        }
    }
}

pub fn parse_command(line: &str) -> Result<Command, ExprError> {
    let trimmed_start = line.len() - line.trim_start().len();
    let rest = &line[trimmed_start..];
    if rest.trim().is_empty() {
        return Ok(Command::Empty);
    }
    let word_len = rest
        .find(|c: char| !c.is_ascii_alphabetic())
        .unwrap_or(rest.len());
    let word = &rest[..word_len];
    let after = trimmed_start + word_len;
    // `carpet(1, g1)` is an ordinary expression, `carpet 1 g1` a command
    let is_call = line[after..].starts_with('(');
    let tail_is_blank = line[after..].trim().is_empty();
    let args_follow = line[after..].starts_with(char::is_whitespace) && !is_call;

    match word {
        "help" if tail_is_blank => return Ok(Command::Help),
        "quit" | "exit" if tail_is_blank => return Ok(Command::Quit),
        _ => {}
    }
    if !args_follow {
        return Ok(Command::Eval(parse_all(line, 0, 1)?.remove(0)));
    }
    let cmd = match word {
        "eval" => Command::Eval(parse_all(line, after, 1)?.remove(0)),
        "compare" => {
            let mut v = parse_all(line, after, 2)?;
            let b = v.pop().unwrap();
            Command::Compare(v.pop().unwrap(), b)
        }
        "approx" => {
            let (e, end) = parse_prefix(line, after)?;
            let kw = line[end..].strip_prefix("at").filter(|r| {
                r.is_empty() || r.starts_with(char::is_whitespace)
            });
            if kw.is_none() {
                return Err(SyntaxError::new(end, &found_at(line, end), &["'at'"]).into());
            }
            let m = parse_all(line, end + 2, 1)?.remove(0);
            Command::Approx(e, m)
        }
        "carpet" | "sponge" | "cantor" => {
            let fractal: Fractal = word.parse().expect("matched name");
            let mut v = parse_all(line, after, 2)?;
            let n = v.pop().unwrap();
            Command::Snapshot(fractal, v.pop().unwrap(), n)
        }
        "distinguish" => {
            let name_start = after + line[after..].len() - line[after..].trim_start().len();
            let name_len = line[name_start..]
                .find(char::is_whitespace)
                .unwrap_or(line.len() - name_start);
            let name = &line[name_start..name_start + name_len];
            let fractal: Fractal = name.parse().map_err(|_| {
                SyntaxError::new(name_start, &found_at(line, name_start), &Fractal::ALL.map(|f| f.name()))
            })?;
            let v = parse_all(line, name_start + name_len, 4)?;
            let args: [Expr; 4] = v.try_into().expect("four arguments");
            Command::Distinguish(fractal, args)
        }
        "reach" => Command::Reach(parse_all(line, after, 1)?.remove(0)),
        "countable" => Command::Countable(parse_all(line, after, 1)?.remove(0)),
        _ => Command::Eval(parse_all(line, 0, 1)?.remove(0)),
    };
    Ok(cmd)
}

/// Parses exactly `count` space-separated expressions from `line[start..]`.
fn parse_all(line: &str, start: usize, count: usize) -> Result<Vec<Expr>, SyntaxError> {
    let mut out = Vec::with_capacity(count);
    let mut pos = start;
    for _ in 0..count {
        let (e, end) = parse_prefix(line, pos)?;
        out.push(e);
        pos = end;
    }
    if pos < line.len() {
        return Err(SyntaxError::new(pos, &found_at(line, pos), &["operator", "end of input"]));
    }
    Ok(out)
}

fn found_at(line: &str, pos: usize) -> String {
    match line[pos..].split_whitespace().next() {
        Some(w) => format!("{w:?}"),
        None => "end of input".to_string(),
    }
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn err_at(span: Span) -> impl Fn(crate::error::GrossError) -> ExprError {
    move |error| ExprError::Eval { span, error }
}

pub fn run_command(cmd: &Command, notation: Notation) -> Result<Output, ExprError> {
    let out = match cmd {
        Command::Empty | Command::Quit => Output {
            text: String::new(),
            json: Value::Null,
        },
        Command::Help => Output {
            text: HELP.to_string(),
            json: json!({ "help": HELP }),
        },
        Command::Eval(e) => {
            let v = evaluate(e)?;
            Output {
                text: v.display(notation),
                json: v.to_json(),
            }
        }
        Command::Compare(a, b) => {
            let o = evaluate(a)?.cmp(&evaluate(b)?);
            Output {
                text: ordering_name(o).to_string(),
                json: json!({ "ordering": ordering_name(o) }),
            }
        }
        Command::Approx(e, m) => {
            let v = evaluate(e)?;
            let point = eval_substitution_point(m)?;
            let r = v.eval_at(&point).map_err(err_at(e.span()))?;
            Output {
                text: fmt_rational(&r),
                json: json!({ "value": fmt_rational(&r) }),
            }
        }
        Command::Snapshot(fractal, k, n) => {
            let s = snapshot(*fractal, k, n, k.span().join(n.span()))?;
            Output {
                text: s.display(notation),
                json: s.to_json(),
            }
        }
        Command::Distinguish(fractal, [k1, n1, k2, n2]) => {
            let a = snapshot(*fractal, k1, n1, k1.span().join(n1.span()))?;
            let b = snapshot(*fractal, k2, n2, k2.span().join(n2.span()))?;
            let (o, ratio) = distinguish(&a, &b).map_err(err_at(k1.span().join(n2.span())))?;
            Output {
                text: format!("{} (ratio {})", ordering_name(o), ratio.display(notation)),
                json: json!({ "ordering": ordering_name(o), "ratio": ratio.to_json() }),
            }
        }
        Command::Reach(s) => {
            let start = eval_linear(s)?;
            let r = sequential_reach(&start).map_err(err_at(s.span()))?;
            Output {
                text: r.display(notation),
                json: json!({ "gross": int_json(r.gross()), "const": int_json(r.constant()) }),
            }
        }
        Command::Countable(e) => {
            let v = evaluate(e)?;
            let yes = is_sequentially_countable(&v).map_err(err_at(e.span()))?;
            Output {
                text: yes.to_string(),
                json: json!({ "countable": yes }),
            }
        }
    };
    Ok(out)
}

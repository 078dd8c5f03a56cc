//! `grosscalc`: exact grossone arithmetic, fractal snapshots and a REPL.
//!
//! Every expression argument is parsed in place inside one joined source line,
//! so error carets point into what the user typed.

use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grossone::expr::{parse_command, parse_range, run_command, Command, Expr, ExprError, HELP};
use grossone::{Fractal, Notation};
use serde_json::json;

const EXPRESSIONS: &str = "\
Expressions use + - * / ^, parentheses, rationals (3/4, 0.25) and ① (or g1).
^ is right-associative and binds tighter than unary minus: -g1^2 = -(g1^2).
Calls: carpet(k, n), sponge(k, n), cantor(k, n), reach(s), countable(x),
compare(a, b), approx(x, m).

Exit status: 0 on success, 1 on an arithmetic error, 2 on a syntax error.
Set GROSSCALC_ASCII=1 to print g1 instead of ①.";

#[derive(Parser)]
#[command(name = "grosscalc", version, about = "Exact arithmetic with grossone", after_help = EXPRESSIONS)]
struct Cli {
    /// Print results and errors as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sierpinski carpet snapshot at offset K, step N
    Carpet(Range),
    /// Menger sponge snapshot at offset K, step N
    Sponge(Range),
    /// Cantor set snapshot at offset K, step N
    Cantor(Range),
    /// Order of two values: less, equal or greater
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Exact value with ① replaced by a positive integer
    Approx {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Compare two snapshots of the same fractal
    Distinguish {
        fractal: Fractal,
        #[arg(allow_hyphen_values = true, num_args = 4, value_names = ["K1", "N1", "K2", "N2"])]
        args: Vec<String>,
    },
    /// Farthest position reachable from S in ① steps
    Reach {
        #[arg(allow_hyphen_values = true)]
        start: String,
    },
    /// Whether a set of this many elements can be counted one by one
    Countable {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Read commands from standard input
    Repl,
}

#[derive(Args)]
struct Range {
    #[arg(allow_hyphen_values = true)]
    k: String,
    #[arg(allow_hyphen_values = true)]
    n: String,
}

/// Arguments joined by single spaces, with the byte range of each.
struct Source {
    text: String,
    ranges: Vec<(usize, usize)>,
}

impl Source {
    fn new<S: AsRef<str>>(args: &[S]) -> Self {
        let mut text = String::new();
        let mut ranges = Vec::new();
        for arg in args {
            if !text.is_empty() {
                text.push(' ');
            }
            let start = text.len();
            text.push_str(arg.as_ref());
            ranges.push((start, text.len()));
        }
        Source { text, ranges }
    }

    fn exprs(&self) -> Result<Vec<Expr>, ExprError> {
        self.ranges
            .iter()
            .map(|&(s, e)| parse_range(&self.text, s, e).map_err(ExprError::from))
            .collect()
    }
}

fn notation() -> Notation {
    match std::env::var("GROSSCALC_ASCII") {
        Ok(v) if v == "1" => Notation::Ascii,
        _ => Notation::Unicode,
    }
}

fn build(cmd: Cmd) -> (Source, Result<Command, ExprError>) {
    let snapshot = |f: Fractal, r: Range| {
        let src = Source::new(&[r.k, r.n]);
        let cmd = src.exprs().map(|mut v| {
            let n = v.pop().unwrap();
            Command::Snapshot(f, v.pop().unwrap(), n)
        });
        (src, cmd)
    };
    match cmd {
        Cmd::Eval { expr } => one(expr, Command::Eval),
        Cmd::Reach { start } => one(start, Command::Reach),
        Cmd::Countable { expr } => one(expr, Command::Countable),
        Cmd::Carpet(r) => snapshot(Fractal::Carpet, r),
        Cmd::Sponge(r) => snapshot(Fractal::Sponge, r),
        Cmd::Cantor(r) => snapshot(Fractal::Cantor, r),
        Cmd::Compare { a, b } => two(a, b, Command::Compare),
        Cmd::Approx { expr, at } => two(expr, at, Command::Approx),
        Cmd::Distinguish { fractal, args } => {
            let src = Source::new(&args);
            let cmd = src.exprs().map(|v| {
                let [k1, n1, k2, n2]: [Expr; 4] = v.try_into().unwrap();
                Command::Distinguish(fractal, [k1, n1, k2, n2])
            });
            (src, cmd)
        }
        Cmd::Repl => unreachable!("handled before dispatch"),
    }
}

fn one(arg: String, make: fn(Expr) -> Command) -> (Source, Result<Command, ExprError>) {
    let src = Source::new(&[arg]);
    let cmd = src.exprs().map(|mut v| make(v.pop().unwrap()));
    (src, cmd)
}

fn two(a: String, b: String, make: fn(Expr, Expr) -> Command) -> (Source, Result<Command, ExprError>) {
    let src = Source::new(&[a, b]);
    let cmd = src.exprs().map(|mut v| {
        let b = v.pop().unwrap();
        make(v.pop().unwrap(), b)
    });
    (src, cmd)
}

fn exit_code(e: &ExprError) -> ExitCode {
    if e.is_syntax() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn report(e: &ExprError, source: &str, json: bool) {
    let span = e.span();
    let message = match e {
        ExprError::Syntax(s) => format!("found {}, expected {}", s.found, s.expected.join(" or ")),
        ExprError::Eval { error, .. } => error.to_string(),
    };
    if json {
        let kind = if e.is_syntax() { "syntax" } else { "arithmetic" };
        let mut err = json!({
            "kind": kind,
            "message": message,
            "source": source,
            "span": [span.start, span.end],
        });
        if let ExprError::Syntax(s) = e {
            err["expected"] = json!(s.expected);
        }
        println!("{}", json!({ "error": err }));
        return;
    }
    let kind = if e.is_syntax() { "syntax error" } else { "error" };
    let pad = source[..span.start.min(source.len())].chars().count();
    let width = source
        .get(span.start..span.end)
        .map_or(0, |s| s.chars().count())
        .max(1);
    eprintln!("{kind}: {message}");
    eprintln!("  {source}");
    eprintln!("  {}{}", " ".repeat(pad), "^".repeat(width));
}

fn repl(notation: Notation, json: bool) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut input = stdin.lock();
    let mut buf = Vec::new();
    loop {
        if interactive {
            print!("> ");
            let _ = io::stdout().flush();
        }
        buf.clear();
        match input.read_until(b'\n', &mut buf) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        }
        let raw = String::from_utf8_lossy(&buf);
        let line = raw.trim_end_matches(['\n', '\r']);
        let result = parse_command(line).and_then(|cmd| match cmd {
            Command::Quit => Ok(None),
            Command::Empty => Ok(Some(String::new())),
            cmd => run_command(&cmd, notation).map(|o| Some(o.render(json))),
        });
        match result {
            Ok(None) => break,
            Ok(Some(out)) if out.is_empty() => {}
            Ok(Some(out)) => println!("{out}"),
            Err(e) => report(&e, line, json),
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let notation = notation();
    if let Cmd::Repl = cli.command {
        if io::stdin().is_terminal() {
            println!("{HELP}\n");
        }
        return repl(notation, cli.json);
    }
    let (src, cmd) = build(cli.command);
    match cmd.and_then(|c| run_command(&c, notation)) {
        Ok(out) => {
            println!("{}", out.render(cli.json));
            ExitCode::SUCCESS
        }
        Err(e) => {
            report(&e, &src.text, cli.json);
            exit_code(&e)
        }
    }
}

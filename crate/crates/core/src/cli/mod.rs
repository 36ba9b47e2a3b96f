//! The `cyclic-plane` command line.
//!
//! Exit status: `0` when every asserted identity passes, `1` when some
//! identity fails, `2` on usage and parse errors.

pub mod eval;
pub mod parse;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::cyclotomic::Order;
use crate::hopf::decompose;
use table::{TableFormat, TableKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cyclic-plane", version, about = "Exact algebra on the cyclic quantum plane")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every registered identity for a range of orders.
    Verify {
        /// Orders as a list and/or inclusive ranges, e.g. `2..8` or `3,5,7`.
        #[arg(long = "n", default_value = "2..8", value_parser = parse_orders)]
        orders: OrderList,
        /// Comma-separated identity ids or group prefixes (`calc`, `hopf.coaction_left_cyclic`).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Treat recorded identities as asserted.
        #[arg(long)]
        strict: bool,
        /// Print the identity ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate an expression in x, y (plane) or a, b, c, d (quantum group) to normal form.
    Eval {
        #[arg(long = "n", value_parser = parse_order)]
        order: Order,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Emit one of the algebra's tables.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long = "n", value_parser = parse_order)]
        order: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Print the N blocks of the decomposition under the dual action.
    Decompose {
        #[arg(long = "n", value_parser = parse_order)]
        order: Order,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderList(pub Vec<Order>);

fn parse_order(s: &str) -> Result<Order, String> {
    let n: usize = s.trim().parse().map_err(|_| format!("`{s}` is not an order"))?;
    Order::new(n).map_err(|e| e.to_string())
}

/// Parses `2..8`, `2..=8`, `3,5,7` and mixtures like `2..4,7`; ranges are inclusive.
pub fn parse_orders(s: &str) -> Result<OrderList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo = parse_order(lo)?;
            let hi = parse_order(hi.trim_start_matches('='))?;
            if lo.get() > hi.get() {
                return Err(format!("empty range `{part}`"));
            }
            out.extend((lo.get()..=hi.get()).map(|n| Order::new(n).expect("n >= 2")));
        } else {
            out.push(parse_order(part)?);
        }
    }
    if out.is_empty() {
        return Err("no orders given".into());
    }
    out.sort();
    out.dedup();
    Ok(OrderList(out))
}

/// Runs the CLI on `args` (including the program name), writing to `stdout`
/// unless `--out` is given. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (text, code) = match execute(&cli.command) {
        Ok(pair) => pair,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    code
}

fn execute(command: &Command) -> Result<(String, i32), String> {
    match command {
        Command::Verify { orders, only, json, strict, list } => {
            if *list {
                let mut s = verify::identity_ids().join("\n");
                s.push('\n');
                return Ok((s, EXIT_OK));
            }
            let reports = verify::run_verify(&orders.0, only, *strict).map_err(|e| e.to_string())?;
            let failed = reports.iter().any(|r| r.has_failures());
            let text = if *json {
                let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
                s.push('\n');
                s
            } else {
                render_reports(&reports)
            };
            Ok((text, if failed { EXIT_FAIL } else { EXIT_OK }))
        }
        Command::Eval { order, expr } => {
            let parsed = parse::parse(expr).map_err(|e| e.to_string())?;
            let value = eval::eval(&parsed, *order).map_err(|e| e.to_string())?;
            Ok((format!("{value}\n"), EXIT_OK))
        }
        Command::Table { kind, order, format } => Ok((table::emit_table(*kind, *order, *format), EXIT_OK)),
        Command::Decompose { order, json } => {
            let dec = decompose(*order);
            let text = if *json { table::decomposition_json(&dec) } else { table::decomposition_text(&dec) };
            Ok((text, EXIT_OK))
        }
    }
}

fn render_reports(reports: &[crate::report::VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("N = {}\n", r.n));
        for e in &r.entries {
            out.push_str(&format!("  {:<15} {}", e.status.as_str(), e.id));
            if let Some(w) = &e.witness {
                let first = w.lines().next().unwrap_or("");
                out.push_str(&format!("  [{first}]"));
            }
            out.push('\n');
        }
        let s = r.summary;
        out.push_str(&format!("  -- {} pass, {} fail, {} recorded\n", s.pass, s.fail, s.recorded));
    }
    out
}

//! Deterministic text / JSON / LaTeX renderings of the algebra's tables.

use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::calculus;
use crate::cyclotomic::Order;
use crate::hopf::{self, act_h, act_xm, act_xp, Decomposition};
use crate::qplane::{basis_mul, structure_c, BasisIndex, PlaneElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Differential,
    #[value(name = "structure-f")]
    StructureF,
    #[value(name = "structure-C", alias = "structure-c")]
    StructureC,
    Decomposition,
    Action,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Differential => "differential",
            TableKind::StructureF => "structure-f",
            TableKind::StructureC => "structure-C",
            TableKind::Decomposition => "decomposition",
            TableKind::Action => "action",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Latex,
}

#[derive(Serialize)]
struct Table<T> {
    kind: &'static str,
    n: usize,
    entries: Vec<T>,
}

#[derive(Serialize)]
struct DifferentialRow {
    source: String,
    image: String,
}

#[derive(Serialize)]
struct StructureRow {
    i: [usize; 2],
    j: [usize; 2],
    k: [usize; 2],
    coeff: String,
}

#[derive(Serialize)]
struct BlockRow {
    label: String,
    grading: usize,
    indices: Vec<[usize; 2]>,
    members: Vec<String>,
}

#[derive(Serialize)]
struct ActionRow {
    source: String,
    #[serde(rename = "H")]
    h: String,
    #[serde(rename = "X+")]
    xp: String,
    #[serde(rename = "X-")]
    xm: String,
}

fn pair(i: BasisIndex) -> [usize; 2] {
    [i.r, i.s]
}

fn structure_rows(order: Order, kind: TableKind) -> Vec<StructureRow> {
    let mut rows = Vec::new();
    for i in BasisIndex::all(order) {
        for j in BasisIndex::all(order) {
            let (k, f) = basis_mul(order, i, j);
            let coeff = match kind {
                TableKind::StructureF => f,
                _ => structure_c(order, i, j, k),
            };
            rows.push(StructureRow { i: pair(i), j: pair(j), k: pair(k), coeff: coeff.to_string() });
        }
    }
    rows
}

fn block_rows(dec: &Decomposition) -> Vec<BlockRow> {
    dec.blocks()
        .iter()
        .enumerate()
        .map(|(pos, block)| BlockRow {
            label: format!("N_{}", pos + 1),
            grading: pos,
            indices: block.iter().copied().map(pair).collect(),
            members: block.iter().map(ToString::to_string).collect(),
        })
        .collect()
}

fn action_rows(order: Order) -> Vec<ActionRow> {
    BasisIndex::all(order)
        .map(|i| {
            let z = PlaneElement::basis(order, i);
            ActionRow {
                source: i.to_string(),
                h: act_h(&z).to_string(),
                xp: act_xp(&z).to_string(),
                xm: act_xm(&z).to_string(),
            }
        })
        .collect()
}

fn differential_rows(order: Order) -> Vec<DifferentialRow> {
    calculus::differential_table(order)
        .into_iter()
        .map(|(i, img)| DifferentialRow { source: i.to_string(), image: img.to_string() })
        .collect()
}

fn json<T: Serialize>(kind: TableKind, order: Order, entries: Vec<T>) -> String {
    let table = Table { kind: kind.name(), n: order.get(), entries };
    let mut out = serde_json::to_string_pretty(&table).expect("tables serialize");
    out.push('\n');
    out
}

/// Text rendering to LaTeX math: `·` becomes a thin space, exponents are braced.
fn tex(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '·' => out.push_str("\\,"),
            '⊗' => out.push_str("\\otimes "),
            '^' => {
                out.push_str("^{");
                if chars.peek() == Some(&'-') {
                    out.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    out.push(d);
                    chars.next();
                }
                out.push('}');
            }
            c => out.push(c),
        }
    }
    out
}

fn latex_document(title: &str, columns: &str, header: &str, rows: Vec<String>) -> String {
    let mut out = String::new();
    out.push_str("\\documentclass{article}\n\\usepackage{amsmath}\n\\usepackage{longtable}\n");
    out.push_str("\\begin{document}\n");
    let _ = writeln!(out, "\\section*{{{title}}}");
    let _ = writeln!(out, "\\begin{{longtable}}{{{columns}}}");
    let _ = writeln!(out, "{header} \\\\\n\\hline");
    for row in rows {
        let _ = writeln!(out, "{row} \\\\");
    }
    out.push_str("\\end{longtable}\n\\end{document}\n");
    out
}

/// Renders one table. Output is fully determined by `(kind, order, format)`.
pub fn emit_table(kind: TableKind, order: Order, format: TableFormat) -> String {
    let n = order.get();
    match (kind, format) {
        (TableKind::Differential, TableFormat::Text) => calculus::differential_table_text(order),
        (TableKind::Differential, TableFormat::Json) => json(kind, order, differential_rows(order)),
        (TableKind::Differential, TableFormat::Latex) => latex_document(
            &format!("Differential $d_x$ for $N = {n}$"),
            "ll",
            "$\\alpha$ & $d_x \\alpha$",
            differential_rows(order)
                .into_iter()
                .map(|r| format!("${}$ & ${}$", tex(&r.source), tex(&r.image)))
                .collect(),
        ),
        (TableKind::StructureF | TableKind::StructureC, TableFormat::Text) => {
            let symbol = if kind == TableKind::StructureF { "f" } else { "C" };
            structure_rows(order, kind)
                .into_iter()
                .map(|r| {
                    format!(
                        "{symbol}({},{})({},{}) -> ({},{}) = {}\n",
                        r.i[0], r.i[1], r.j[0], r.j[1], r.k[0], r.k[1], r.coeff
                    )
                })
                .collect()
        }
        (TableKind::StructureF | TableKind::StructureC, TableFormat::Json) => {
            json(kind, order, structure_rows(order, kind))
        }
        (TableKind::StructureF | TableKind::StructureC, TableFormat::Latex) => {
            let symbol = if kind == TableKind::StructureF { "f" } else { "C" };
            latex_document(
                &format!("Structure constants ${symbol}$ for $N = {n}$"),
                "lll",
                "$(rs)(mn)$ & $(kl)$ & coefficient",
                structure_rows(order, kind)
                    .into_iter()
                    .map(|r| {
                        format!(
                            "$({}{})({}{})$ & $({}{})$ & ${}$",
                            r.i[0], r.i[1], r.j[0], r.j[1], r.k[0], r.k[1], tex(&r.coeff)
                        )
                    })
                    .collect(),
            )
        }
        (TableKind::Decomposition, TableFormat::Text) => decomposition_text(&hopf::decompose(order)),
        (TableKind::Decomposition, TableFormat::Json) => {
            json(kind, order, block_rows(&hopf::decompose(order)))
        }
        (TableKind::Decomposition, TableFormat::Latex) => latex_document(
            &format!("Invariant blocks for $N = {n}$"),
            "lll",
            "block & grading & members",
            block_rows(&hopf::decompose(order))
                .into_iter()
                .map(|b| {
                    let members: Vec<_> = b.members.iter().map(|m| tex(m)).collect();
                    format!("${}$ & {} & ${}$", b.label, b.grading, members.join(",\\ "))
                })
                .collect(),
        ),
        (TableKind::Action, TableFormat::Text) => action_rows(order)
            .into_iter()
            .map(|r| format!("{} | H: {} | X+: {} | X-: {}\n", r.source, r.h, r.xp, r.xm))
            .collect(),
        (TableKind::Action, TableFormat::Json) => json(kind, order, action_rows(order)),
        (TableKind::Action, TableFormat::Latex) => latex_document(
            &format!("Left action for $N = {n}$"),
            "llll",
            "& $H$ & $X_+$ & $X_-$",
            action_rows(order)
                .into_iter()
                .map(|r| format!("${}$ & ${}$ & ${}$ & ${}$", tex(&r.source), tex(&r.h), tex(&r.xp), tex(&r.xm)))
                .collect(),
        ),
    }
}

/// `N_k [grading k-1]: member, member, ...`
pub fn decomposition_text(dec: &Decomposition) -> String {
    block_rows(dec)
        .into_iter()
        .map(|b| format!("{} [grading {}]: {}\n", b.label, b.grading, b.members.join(", ")))
        .collect()
}

/// JSON for the `decompose` command.
pub fn decomposition_json(dec: &Decomposition) -> String {
    json(TableKind::Decomposition, dec.order(), block_rows(dec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn differential_text_is_golden() {
        let text = emit_table(TableKind::Differential, ord(3), TableFormat::Text);
        assert_eq!(text, calculus::N3_DIFFERENTIAL_TABLE);
        assert_eq!(text.lines().count(), 9);
    }

    #[test]
    fn decomposition_json_n3() {
        let v: serde_json::Value =
            serde_json::from_str(&emit_table(TableKind::Decomposition, ord(3), TableFormat::Json)).unwrap();
        let blocks = v["entries"].as_array().unwrap();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().all(|b| b["indices"].as_array().unwrap().len() == 3));
        assert_eq!(blocks[0]["members"], serde_json::json!(["1", "x^2·y^1", "x^1·y^2"]));
    }

    #[test]
    fn structure_f_n2() {
        let n = ord(2);
        let v: serde_json::Value =
            serde_json::from_str(&emit_table(TableKind::StructureF, n, TableFormat::Json)).unwrap();
        let entries = v["entries"].as_array().unwrap();
        assert_eq!(entries.len(), 16);
        for e in entries {
            let (s, m) = (e["i"][1].as_u64().unwrap(), e["j"][0].as_u64().unwrap());
            let expected = if (m * s) % 2 == 1 { "-1" } else { "1" };
            assert_eq!(e["coeff"], expected);
            assert_eq!(e["k"][0].as_u64().unwrap(), (e["i"][0].as_u64().unwrap() + m) % 2);
        }
    }

    #[test]
    fn tex_conversion() {
        assert_eq!(tex("(2 + q^2)·x^1·y^12"), "(2 + q^{2})\\,x^{1}\\,y^{12}");
        let doc = emit_table(TableKind::Action, ord(3), TableFormat::Latex);
        assert!(doc.starts_with("\\documentclass{article}"));
        assert!(doc.trim_end().ends_with("\\end{document}"));
    }

    #[test]
    fn deterministic() {
        for kind in TableKind::value_variants() {
            for format in TableFormat::value_variants() {
                assert_eq!(emit_table(*kind, ord(4), *format), emit_table(*kind, ord(4), *format));
            }
        }
    }
}

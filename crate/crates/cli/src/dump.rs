//! Byte-deterministic dumps of the tables, roots and weight diagrams.

use std::fmt::Write as _;

use adskit_algebra::basis::{render_combination, NAMES};
use adskit_algebra::roots::{self, Weight};
use adskit_algebra::{lie, AlgebraError, BracketTable};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Tables,
    Roots,
    Weights,
    So33,
}

#[derive(Serialize)]
struct TableJson<'a> {
    names: &'a [&'static str],
    /// `rows[i][j]` is `[e_i, e_j]`.
    rows: Vec<Vec<String>>,
}

fn table_rows(t: &BracketTable) -> Vec<Vec<String>> {
    (0..t.dim()).map(|i| (0..t.dim()).map(|j| t.cell(i, j)).collect()).collect()
}

fn render_table(t: &BracketTable, format: Format) -> String {
    let rows = table_rows(t);
    match format {
        Format::Json => json(&TableJson { names: &t.names, rows }),
        Format::Text => {
            let width = rows.iter().flatten().map(|c| c.chars().count()).chain(t.names.iter().map(|n| n.len())).max().unwrap_or(1) + 1;
            let mut out = format!("{:>width$}", "");
            for n in &t.names {
                let _ = write!(out, "{n:>width$}");
            }
            out.push('\n');
            for (n, row) in t.names.iter().zip(&rows) {
                let _ = write!(out, "{n:>width$}");
                for c in row {
                    let pad = width.saturating_sub(c.chars().count());
                    let _ = write!(out, "{}{c}", " ".repeat(pad));
                }
                out.push('\n');
            }
            out
        }
    }
}

#[derive(Serialize)]
struct RootJson {
    arrow: &'static str,
    a: i64,
    b: i64,
    element: String,
}

#[derive(Serialize)]
struct WeightJson {
    q: String,
    s: String,
    multiplicity: u64,
}

#[derive(Serialize)]
struct DiagramJson {
    highest: String,
    dimension: u64,
    weights: Vec<WeightJson>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// The dump for `what`; `highest` is required for weight diagrams.
pub fn dump(what: What, format: Format, highest: Option<Weight>) -> Result<String, AlgebraError> {
    match what {
        What::Tables => Ok(render_table(&lie::structure_constants()?, format)),
        What::So33 => Ok(render_table(&lie::so33_extension()?, format)),
        What::Roots => {
            let rs: Vec<RootJson> = roots::root_system()?
                .into_iter()
                .map(|r| RootJson { arrow: r.arrow, a: r.a, b: r.b, element: render_combination(&r.element, &NAMES) })
                .collect();
            Ok(match format {
                Format::Json => json(&rs),
                Format::Text => rs.iter().map(|r| format!("{} ({},{})  {}\n", r.arrow, r.a, r.b, r.element)).collect(),
            })
        }
        What::Weights => {
            let h = highest.ok_or_else(|| AlgebraError::Mismatch("weights needs --highest q,s".into()))?;
            let diag = roots::weight_diagram(h)?;
            let dimension = diag.values().sum();
            Ok(match format {
                Format::Json => {
                    let half = |v: i64| if v % 2 == 0 { (v / 2).to_string() } else { format!("{v}/2") };
                    let weights = diag.iter().rev().map(|(w, m)| WeightJson { q: half(w.q2), s: half(w.s2), multiplicity: *m }).collect();
                    json(&DiagramJson { highest: h.to_string(), dimension, weights })
                }
                Format::Text => format!("highest {h}, dimension {dimension}\n{}", roots::ascii_grid(&diag)),
            })
        }
    }
}

//! Table and JSON-lines output.

use std::io::{self, Write};

use etheta::axioms::AxiomWitness;
use etheta::maps::MapWitness;
use etheta::{FiniteSpace, PointSet};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
}

impl Format {
    pub fn detect() -> Self {
        use std::io::IsTerminal;
        if io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::JsonLines
        }
    }
}

pub fn labels(space: &FiniteSpace, a: PointSet) -> Value {
    json!(space.labels_of(a))
}

pub fn axiom_witness(space: &FiniteSpace, w: &AxiomWitness) -> Value {
    let name = |i: usize| space.names()[i].clone();
    match *w {
        AxiomWitness::Pair(x, y) => json!({ "pair": [name(x), name(y)] }),
        AxiomWitness::Uncovered(x) => json!({ "uncovered": name(x) }),
        AxiomWitness::Intersection(m) => json!({ "intersection": labels(space, m) }),
        AxiomWitness::QuasiNotClosed(a) => json!({ "quasi-closed": labels(space, a) }),
        AxiomWitness::PointAndClosed(x, f) => json!({ "point": name(x), "closed": labels(space, f) }),
    }
}

pub fn map_witness(x: &FiniteSpace, y: &FiniteSpace, w: &MapWitness) -> Value {
    match *w {
        MapWitness::Set(v) => json!({ "set": labels(y, v) }),
        MapWitness::PointAndSet(p, v) => json!({ "point": x.names()[p], "set": labels(y, v) }),
        MapWitness::OffGraph(p, q) => json!({ "off-graph": [x.names()[p], y.names()[q]] }),
    }
}

/// Compact rendering of witness JSON for table cells.
pub fn brief(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_string) => {
            format!("{{{}}}", items.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(","))
        }
        Value::Array(items) => items.iter().map(brief).collect::<Vec<_>>().join(" "),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", brief(v))).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rows are buffered so columns can be aligned.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn print(&self, out: &mut impl Write) -> io::Result<()> {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |out: &mut dyn Write, cells: &[String]| -> io::Result<()> {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", padded.join("  ").trim_end())
        };
        line(out, &self.header)?;
        for r in &self.rows {
            line(out, r)?;
        }
        Ok(())
    }
}

pub fn emit(out: &mut impl Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

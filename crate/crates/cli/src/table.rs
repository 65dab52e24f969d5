//! Deterministic tabular output: fixed-schema CSV and JSON.
//!
//! Numeric cells are printed in fixed-precision scientific notation with
//! 12 significant digits, so identical runs produce byte-identical files.

use serde_json::{json, Map, Value};
use std::fs;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Flag(bool),
    /// Serialized as an empty CSV field / JSON null (divergent impedances).
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.11e}"),
            Cell::Int(n) => n.to_string(),
            Cell::Flag(b) => if *b { "1" } else { "0" }.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Int(n) => json!(n),
            Cell::Flag(b) => json!(if *b { 1 } else { 0 }),
            Cell::Empty => Value::Null,
        }
    }
}

pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Single JSON object: the resolved configuration plus one object per
    /// row keyed by the column headers.
    pub fn to_json(&self, config: Value) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (h, cell) in self.headers.iter().zip(row) {
                    obj.insert((*h).to_string(), cell.json());
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "config": config, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON serialization cannot fail");
        s.push('\n');
        s
    }
}

/// Write to stdout, or atomically to a file (temp file in the same
/// directory, then rename).
pub fn emit(out: Option<&Path>, content: &str) -> std::io::Result<()> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush()
        }
        Some(path) => {
            let tmp = path.with_extension(match path.extension() {
                Some(e) => format!("{}.tmp", e.to_string_lossy()),
                None => "tmp".to_string(),
            });
            fs::write(&tmp, content)?;
            fs::rename(&tmp, path)
        }
    }
}

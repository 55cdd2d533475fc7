//! Result tables with provenance, serialized to CSV and JSON.
//!
//! Exact integers always travel as decimal strings (p(1000)-scale values
//! do not fit in doubles or JSON numbers); floats are written with 17
//! significant digits, which round-trips f64 exactly. CSV files carry a
//! `#`-prefixed provenance preamble, a header row, and RFC-4180 quoting.

use serde_json::{json, Value};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColKind {
    Int,
    /// exact integer as decimal string
    Exact,
    Float,
}

impl ColKind {
    fn name(self) -> &'static str {
        match self {
            ColKind::Int => "int",
            ColKind::Exact => "exact",
            ColKind::Float => "float",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        match s {
            "int" => Some(ColKind::Int),
            "exact" => Some(ColKind::Exact),
            "float" => Some(ColKind::Float),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Exact(String),
    Float(f64),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Exact(s) => s.clone(),
            Cell::Float(v) => {
                if v.is_nan() {
                    "NaN".into()
                } else {
                    format!("{v:.16e}")
                }
            }
        }
    }

    fn eq_semantic(&self, other: &Cell) -> bool {
        match (self, other) {
            (Cell::Float(a), Cell::Float(b)) => {
                (a.is_nan() && b.is_nan()) || a.to_bits() == b.to_bits()
            }
            _ => self == other,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub command: String,
    pub config_hash: String,
    pub version: String,
}

#[derive(Debug, Clone)]
pub struct ResultTable {
    pub columns: Vec<(String, ColKind)>,
    pub rows: Vec<Vec<Cell>>,
    pub provenance: Provenance,
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

impl ResultTable {
    pub fn new(provenance: Provenance, columns: Vec<(String, ColKind)>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            provenance,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# command: {}", self.provenance.command);
        let _ = writeln!(out, "# config_hash: {}", self.provenance.config_hash);
        let _ = writeln!(out, "# version: {}", self.provenance.version);
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|(n, _)| csv_quote(n))
            .collect();
        let _ = writeln!(out, "{}", header.join(","));
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_quote(&c.render())).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let schema: Vec<Value> = self
            .columns
            .iter()
            .map(|(n, k)| json!({"name": n, "kind": k.name()}))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| match c {
                            Cell::Int(v) => json!(v),
                            Cell::Exact(s) => json!(s),
                            Cell::Float(v) => {
                                if v.is_nan() {
                                    Value::Null
                                } else {
                                    json!(v)
                                }
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "schema": schema,
            "provenance": {
                "command": self.provenance.command,
                "config_hash": self.provenance.config_hash,
                "version": self.provenance.version,
            },
            "rows": rows,
        })
    }

    /// Parse the CSV form back (used by the round-trip checks).
    pub fn from_csv(text: &str) -> Result<Self, String> {
        let mut command = String::new();
        let mut config_hash = String::new();
        let mut version = String::new();
        let mut lines = text.lines().peekable();
        while let Some(line) = lines.peek() {
            if let Some(rest) = line.strip_prefix("# ") {
                if let Some(v) = rest.strip_prefix("command: ") {
                    command = v.to_string();
                } else if let Some(v) = rest.strip_prefix("config_hash: ") {
                    config_hash = v.to_string();
                } else if let Some(v) = rest.strip_prefix("version: ") {
                    version = v.to_string();
                }
                lines.next();
            } else {
                break;
            }
        }
        let header = lines.next().ok_or("missing header row")?;
        let names = parse_csv_record(header)?;
        // kinds are not stored in CSV; infer per cell on comparison
        let columns: Vec<(String, ColKind)> =
            names.into_iter().map(|n| (n, ColKind::Exact)).collect();
        let mut rows = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let fields = parse_csv_record(line)?;
            if fields.len() != columns.len() {
                return Err(format!("row width {} != {}", fields.len(), columns.len()));
            }
            rows.push(fields.into_iter().map(Cell::Exact).collect());
        }
        Ok(Self {
            columns,
            rows,
            provenance: Provenance {
                command,
                config_hash,
                version,
            },
        })
    }

    /// Content equality across serializations: every cell compared by its
    /// rendered text (exact integers verbatim, floats bit-equal).
    pub fn content_equals_rendered(&self, parsed: &ResultTable) -> bool {
        if self.rows.len() != parsed.rows.len() {
            return false;
        }
        for (row, prow) in self.rows.iter().zip(&parsed.rows) {
            for (cell, pcell) in row.iter().zip(prow) {
                let rendered = cell.render();
                let ptext = match pcell {
                    Cell::Exact(s) => s.clone(),
                    other => other.render(),
                };
                match cell {
                    Cell::Float(v) => {
                        let back: f64 = ptext.parse().unwrap_or(f64::NAN);
                        if !(Cell::Float(*v).eq_semantic(&Cell::Float(back))) {
                            return false;
                        }
                    }
                    _ => {
                        if rendered != ptext {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Plain-text preview for stdout.
    pub fn render_text(&self, max_rows: usize) -> String {
        let mut out = String::new();
        let header: Vec<&str> = self.columns.iter().map(|(n, _)| n.as_str()).collect();
        let _ = writeln!(out, "{}", header.join("\t"));
        for row in self.rows.iter().take(max_rows) {
            let fields: Vec<String> = row.iter().map(|c| c.render()).collect();
            let _ = writeln!(out, "{}", fields.join("\t"));
        }
        if self.rows.len() > max_rows {
            let _ = writeln!(out, "... ({} rows total)", self.rows.len());
        }
        out
    }
}

fn parse_csv_record(line: &str) -> Result<Vec<String>, String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            if c == '"' {
                if chars.peek() == Some(&'"') {
                    cur.push('"');
                    chars.next();
                } else {
                    quoted = false;
                }
            } else {
                cur.push(c);
            }
        } else if c == '"' && cur.is_empty() {
            quoted = true;
        } else if c == ',' {
            fields.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    if quoted {
        return Err("unterminated quoted field".into());
    }
    fields.push(cur);
    Ok(fields)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultTable {
        let mut t = ResultTable::new(
            Provenance {
                command: "krank --k 2 --n 4".into(),
                config_hash: "0123456789abcdef".into(),
                version: "0.1.0".into(),
            },
            vec![
                ("m".into(), ColKind::Int),
                ("count".into(), ColKind::Exact),
                ("ratio".into(), ColKind::Float),
                ("note".into(), ColKind::Exact),
            ],
        );
        t.push(vec![
            Cell::Int(-3),
            Cell::Exact("1".into()),
            Cell::Float(0.2),
            Cell::Exact("plain".into()),
        ]);
        t.push(vec![
            Cell::Int(0),
            Cell::Exact("24061467864032622473692149727991".into()),
            Cell::Float(f64::NAN),
            Cell::Exact("with, comma and \"quote\"".into()),
        ]);
        t.push(vec![
            Cell::Int(7),
            Cell::Exact("-12".into()),
            Cell::Float(1.0 / 3.0),
            Cell::Exact("".into()),
        ]);
        t
    }

    #[test]
    fn csv_roundtrip_preserves_content() {
        let t = sample();
        let parsed = ResultTable::from_csv(&t.to_csv()).unwrap();
        assert!(t.content_equals_rendered(&parsed));
        assert_eq!(parsed.provenance, t.provenance);
    }

    #[test]
    fn json_has_schema_provenance_rows() {
        let t = sample();
        let v = t.to_json();
        assert_eq!(v["schema"][1]["kind"], "exact");
        assert_eq!(v["provenance"]["config_hash"], "0123456789abcdef");
        assert_eq!(
            v["rows"][1][1],
            serde_json::json!("24061467864032622473692149727991")
        );
        assert_eq!(v["rows"][1][2], serde_json::Value::Null);
    }

    #[test]
    fn csv_and_json_agree_cell_for_cell() {
        let t = sample();
        let from_csv = ResultTable::from_csv(&t.to_csv()).unwrap();
        // JSON side: re-render each value as text and compare against CSV cells
        let v = t.to_json();
        for (i, row) in from_csv.rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let jcell = &v["rows"][i][j];
                let jtext = match jcell {
                    serde_json::Value::Null => "NaN".to_string(),
                    serde_json::Value::String(s) => s.clone(),
                    other => {
                        // numeric: float or int
                        match &t.rows[i][j] {
                            Cell::Float(f) => {
                                let jf = other.as_f64().unwrap();
                                assert_eq!(jf.to_bits(), f.to_bits(), "float drift");
                                continue;
                            }
                            _ => other.to_string(),
                        }
                    }
                };
                let ctext = match cell {
                    Cell::Exact(s) => s.clone(),
                    other => other.render(),
                };
                if let Cell::Float(f) = &t.rows[i][j] {
                    let cf: f64 = ctext.parse().unwrap();
                    assert!(cf.to_bits() == f.to_bits() || (cf.is_nan() && f.is_nan()));
                } else {
                    assert_eq!(ctext, jtext);
                }
            }
        }
    }

    #[test]
    fn float_17_digits_roundtrip_exactly() {
        for v in [1.0 / 3.0, 2.718281828459045e-7, 1e300, -0.0001] {
            let text = format!("{v:.16e}");
            let back: f64 = text.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits());
        }
    }
}

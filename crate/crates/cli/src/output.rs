//! Table rendering as CSV or JSON.

use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    /// Exact integer, kept as decimal text.
    Count(String),
    Int(usize),
    Real(f64),
    /// Identifier without commas or quotes, e.g. a formula name.
    Word(&'static str),
    /// Free text; quoted in CSV.
    Text(String),
    /// Missing value, rendered `-`.
    Dash,
    Empty,
}

/// Reals are printed with 15 significant digits.
pub fn format_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.14e}")
    } else {
        x.to_string()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Count(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Real(x) => format_real(*x),
            Cell::Word(s) => s.to_string(),
            Cell::Text(s) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Dash => "-".into(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Count(s) | Cell::Text(s) => Value::String(s.clone()),
            Cell::Word(s) => Value::String(s.to_string()),
            Cell::Int(v) => Value::from(*v),
            Cell::Real(x) => format_real(*x)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or_else(|| Value::String(x.to_string()), Value::Number),
            Cell::Dash => Value::String("-".into()),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.headers.len(), "row width");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.headers.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json"))?;
            }
        }
        Ok(())
    }
}

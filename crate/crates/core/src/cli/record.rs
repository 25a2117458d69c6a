use crate::error::{Error, Result};
use crate::exact::Rational;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One table cell. Rationals with unit denominator are stored as `Int` so a
/// rendered table parses back to the same value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(BigInt),
    Rational(Rational),
    Float(f64),
    Text(String),
}

impl Cell {
    pub fn rational(r: Rational) -> Self {
        if r.denom().is_one() {
            Cell::Int(r.to_integer())
        } else {
            Cell::Rational(r)
        }
    }

    pub fn int(v: impl Into<BigInt>) -> Self {
        Cell::Int(v.into())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    /// Integer, then `p/q`, then float; anything else is text.
    pub fn parse(s: &str) -> Self {
        if let Ok(i) = BigInt::from_str(s) {
            return Cell::Int(i);
        }
        if let Some((p, q)) = s.split_once('/') {
            if let (Ok(p), Ok(q)) = (BigInt::from_str(p), BigInt::from_str(q)) {
                if q != BigInt::from(0) {
                    return Cell::rational(Rational::new(p, q));
                }
            }
        }
        if let Ok(f) = f64::from_str(s) {
            return Cell::Float(f);
        }
        Cell::Text(s.to_string())
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(i) => i.to_f64(),
            Cell::Rational(r) => Some(crate::exact::to_f64(r)),
            Cell::Float(f) => Some(*f),
            Cell::Text(_) => None,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Cell::Int(i) => match i.to_i64() {
                Some(v) => Value::from(v),
                None => Value::String(i.to_string()),
            },
            Cell::Float(f) if f.is_finite() => Value::from(*f),
            other => Value::String(other.to_string()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(i) => write!(f, "{i}"),
            Cell::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            // Debug prints the shortest string that round-trips and always
            // carries a '.' or an exponent, so it never reads back as an Int.
            Cell::Float(x) => write!(f, "{x:?}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::rational(r)
    }
}

impl From<BigInt> for Cell {
    fn from(i: BigInt) -> Self {
        Cell::Int(i)
    }
}

/// A command's table with its parameters and any extra summary values.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: BTreeMap<String, String>,
}

impl OutputRecord {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn summarize(&mut self, key: &str, value: impl fmt::Display) {
        self.summary.insert(key.to_string(), value.to_string());
    }

    /// # Panics
    /// If the row does not match the header arity.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row arity differs from the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json()),
        }
    }

    /// `#`-prefixed header lines for the command, parameters and summary,
    /// followed by the table.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!("# command={}\n", self.command);
        for (k, v) in &self.parameters {
            out.push_str(&format!("# param {k}={v}\n"));
        }
        for (k, v) in &self.summary {
            out.push_str(&format!("# summary {k}={v}\n"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_string)).map_err(io)?;
        }
        let body = w
            .into_inner()
            .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
        out.push_str(&String::from_utf8(body).expect("csv output is utf-8"));
        Ok(out)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut record = OutputRecord::default();
        for line in text.lines().take_while(|l| l.starts_with('#')) {
            let line = line.trim_start_matches('#').trim_start();
            if let Some(c) = line.strip_prefix("command=") {
                record.command = c.to_string();
            } else if let Some((k, v)) = line.strip_prefix("param ").and_then(|r| r.split_once('=')) {
                record.parameters.insert(k.to_string(), v.to_string());
            } else if let Some((k, v)) = line.strip_prefix("summary ").and_then(|r| r.split_once('=')) {
                record.summary.insert(k.to_string(), v.to_string());
            }
        }
        let bad = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        record.columns = reader.headers().map_err(bad)?.iter().map(str::to_string).collect();
        for row in reader.records() {
            record.rows.push(row.map_err(bad)?.iter().map(Cell::parse).collect());
        }
        Ok(record)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| serde_json::Value::Array(r.iter().map(Cell::to_json).collect()))
            .collect();
        let mut doc = serde_json::json!({
            "command": self.command,
            "parameters": self.parameters,
            "columns": self.columns,
            "rows": rows,
        });
        if !self.summary.is_empty() {
            doc["summary"] = serde_json::json!(self.summary);
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn cells_render_and_parse() {
        assert_eq!(Cell::rational(rational(9, 4)).to_string(), "9/4");
        assert_eq!(Cell::rational(rational(6, 3)), Cell::int(2));
        assert_eq!(Cell::Float(1.0).to_string(), "1.0");
        for c in [
            Cell::int(-17),
            Cell::rational(rational(-1, 54)),
            Cell::Float(0.1),
            Cell::Float(1e-300),
            Cell::text("ok"),
        ] {
            assert_eq!(Cell::parse(&c.to_string()), c);
        }
    }

    #[test]
    fn csv_round_trip() {
        let mut r = OutputRecord::new("demo", &["x", "value", "note"]).param("N", 3);
        r.summarize("coefficients", "1 1/3 1/54");
        r.push(vec![Cell::int(0), Cell::rational(rational(1, 3)), Cell::text("a, b")]);
        r.push(vec![
            Cell::int(1),
            Cell::Float(std::f64::consts::PI),
            Cell::text("plain"),
        ]);
        let csv = r.to_csv().unwrap();
        assert_eq!(OutputRecord::from_csv(&csv).unwrap(), r);
    }

    #[test]
    fn json_shape() {
        let mut r = OutputRecord::new("demo", &["a"]);
        r.push(vec![Cell::rational(rational(1, 2))]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["rows"][0][0], "1/2");
        assert_eq!(v["command"], "demo");
    }

    #[test]
    #[should_panic(expected = "arity")]
    fn arity_enforced() {
        OutputRecord::new("demo", &["a", "b"]).push(vec![Cell::int(1)]);
    }
}

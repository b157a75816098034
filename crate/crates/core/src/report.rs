//! Plain tables rendered as markdown or CSV, and class labels in the
//! letter-codimension-primes style.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::schubert::ParabolicRing;
use crate::weyl::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table { title: title.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn markdown(&self) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "## {}\n", self.title);
        }
        let esc = |s: &str| s.replace('|', "\\|");
        let _ = writeln!(out, "| {} |", self.headers.iter().map(|h| esc(h)).collect::<Vec<_>>().join(" | "));
        let _ = writeln!(out, "|{}|", self.headers.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
        for r in &self.rows {
            let _ = writeln!(out, "| {} |", r.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | "));
        }
        out
    }

    pub fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(&self.headers).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "# {}", self.title);
        }
        out.push_str(&String::from_utf8_lossy(&bytes));
        Ok(out)
    }
}

/// Labels `x<codim><primes>`: primes distinguish classes of equal codimension,
/// in element order, and are omitted when the codimension has one class.
pub fn class_labels(ring: &ParabolicRing, letter: char) -> HashMap<ElementId, String> {
    let mut out = HashMap::new();
    for (c, ws) in ring.by_codim().iter().enumerate() {
        for (k, &w) in ws.iter().enumerate() {
            let primes = if ws.len() == 1 { String::new() } else { "'".repeat(k + 1) };
            out.insert(w, format!("{letter}{c}{primes}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::GroupContext;

    #[test]
    fn render() {
        let mut t = Table::new("x", &["a", "b"]);
        t.row(vec!["1".into(), "p|q".into()]);
        t.row(vec!["2".into(), "r,s".into()]);
        assert_eq!(t.markdown(), "## x\n\n| a | b |\n|---|---|\n| 1 | p\\|q |\n| 2 | r,s |\n");
        assert_eq!(t.csv().unwrap(), "# x\na,b\n1,p|q\n2,\"r,s\"\n");
    }

    #[test]
    fn labels() {
        let ctx = GroupContext::parse("B3").unwrap();
        let ring = ctx.ring(&ctx.maximal(2)).unwrap();
        let l = class_labels(&ring, 'b');
        assert_eq!(l[&ring.point()], "b7");
        assert_eq!(l[&ring.unit()], "b0");
        let mut v: Vec<&String> = l.values().collect();
        v.sort();
        assert!(v.contains(&&"b2''".to_string()));
        assert_eq!(v.len(), 12);
    }
}

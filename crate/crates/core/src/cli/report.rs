//! The JSON report and its flat CSV companion.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

/// Parameter point, keyed by name, values as `num/den` strings.
pub type Point = BTreeMap<String, String>;

/// Everything needed to rerun a command.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub mode: String,
    pub digits: Option<u32>,
    pub q: Option<String>,
    pub p: Option<String>,
    pub order: usize,
    pub rel_tol: Option<String>,
    /// Every parameter list after grid expansion.
    pub params: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub index: usize,
    pub check: String,
    pub point: Point,
    pub verdict: Option<String>,
    pub expected: Option<String>,
    pub passes: bool,
    pub error: Option<String>,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub index: usize,
    pub identity: String,
    pub point: Point,
    pub max_abs: Option<String>,
    pub max_rel: Option<String>,
    pub exact_zero: bool,
    pub order_checked: usize,
    pub passes: bool,
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginEntry {
    pub index: usize,
    pub label: String,
    pub point: Point,
    pub value: String,
    pub error_bound: Option<String>,
}

/// Wall-clock data. Absent unless asked for, so exact reports stay
/// byte-for-byte reproducible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u128,
    pub threads: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub verdicts: Vec<VerdictEntry>,
    pub residuals: Vec<ResidualEntry>,
    pub margins: Vec<MarginEntry>,
    pub timing: Option<Timing>,
}

impl Report {
    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.passes) && self.residuals.iter().all(|r| r.passes)
    }

    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.passes).count() + self.residuals.iter().filter(|r| !r.passes).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The default table when a command has no table of its own.
    pub fn summary_table(&self) -> Table {
        let mut t = Table::new(&["kind", "index", "name", "point", "result", "passes"]);
        for v in &self.verdicts {
            let result = v.verdict.clone().or_else(|| v.error.clone()).unwrap_or_default();
            t.push(vec![
                "verdict".into(),
                v.index.to_string(),
                v.check.clone(),
                point_text(&v.point),
                result,
                v.passes.to_string(),
            ]);
        }
        for r in &self.residuals {
            let result = r.max_rel.clone().or_else(|| r.error.clone()).unwrap_or_default();
            t.push(vec![
                "residual".into(),
                r.index.to_string(),
                r.identity.clone(),
                point_text(&r.point),
                result,
                r.passes.to_string(),
            ]);
        }
        t
    }
}

pub fn point_text(p: &Point) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// A header and string rows.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(path)?;
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

pub fn write_text(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

//! Machine-readable records of experiment runs. Tables and CSV are pure
//! renderings of a certificate's columns and rows.

use super::AnalysisError;
use crate::presentation::GroupPresentation;
use crate::TOOL_VERSION;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

/// One named assertion of an experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub experiment: String,
    pub tool_version: String,
    pub presentation: String,
    pub presentation_hash: String,
    pub parameters: BTreeMap<String, Value>,
    pub radius: Option<u32>,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Caveats on what a finite run shows.
    pub notes: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// The full experiment reports.
    pub results: Value,
}

impl Certificate {
    pub fn new(experiment: &str, p: &GroupPresentation) -> Self {
        Certificate {
            experiment: experiment.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            presentation: p.file().name.clone(),
            presentation_hash: p.hash(),
            parameters: BTreeMap::new(),
            radius: None,
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            results: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("parameters serialize"));
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn table(&mut self, columns: &[&str], rows: Vec<Vec<Value>>) {
        self.columns = columns.iter().map(|c| c.to_string()).collect();
        self.rows = rows;
    }

    pub fn set_results(&mut self, results: impl Serialize) -> Result<(), AnalysisError> {
        self.results = serde_json::to_value(results)?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String, AnalysisError> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self, AnalysisError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_csv(&self) -> Result<String, AnalysisError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| AnalysisError::Unsupported(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| AnalysisError::Unsupported(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r.get(i).map_or(0, |c| c.len())).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |r: &[String]| {
            r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
        };
        let mut out = format!(
            "{} on {} ({}), tool {}\n",
            self.experiment,
            self.presentation,
            &self.presentation_hash[..12.min(self.presentation_hash.len())],
            self.tool_version
        );
        if !self.columns.is_empty() {
            out += &line(&self.columns);
            out.push('\n');
            out += &line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
            out.push('\n');
            for r in &cells {
                out += &line(r);
                out.push('\n');
            }
        }
        for c in &self.checks {
            out += &format!("[{}] {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out += if self.passed { "result: pass\n" } else { "result: FAIL\n" };
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        v => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renderings_follow_rows() {
        let mut c = Certificate::new("ball", &GroupPresentation::g11()).param("radius", 0);
        c.table(&["radius", "sphere_size"], vec![vec![json!(0), json!(1)]]);
        c.check("nonempty", true, "1 element");
        assert_eq!(c.to_csv().unwrap(), "radius,sphere_size\n0,1\n");
        assert!(c.to_table().contains("result: pass"));
        let back = Certificate::from_json(&c.to_json().unwrap()).unwrap();
        assert_eq!(back, c);
    }
}

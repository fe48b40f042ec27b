//! Result reports and their JSON/CSV renderings.
//!
//! Reports are fully deterministic: scalars are ordered by name, tables
//! keep their construction order, and numbers print in the shortest
//! round-trip decimal form (the default float formatting), so identical
//! jobs produce identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ResultReport {
    pub command: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub scalars: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub case: String,
    pub passed: bool,
    pub residual: f64,
}

/// Machine-readable failure record, written to the output channel in place
/// of a report.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub command: String,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl ResultReport {
    pub fn new(command: &str) -> Self {
        ResultReport {
            command: command.to_string(),
            scalars: BTreeMap::new(),
            table: None,
            checks: Vec::new(),
        }
    }

    pub fn scalar(mut self, name: &str, value: f64) -> Self {
        self.scalars.insert(name.to_string(), value);
        self
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<f64>>) -> Self {
        self.table = Some(Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    /// CSV rendering: the table when there is one, otherwise the checks,
    /// otherwise the scalars as a single row. Comma-separated, one header
    /// line, LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(table) = &self.table {
            out.push_str(&table.header.join(","));
            out.push('\n');
            for row in &table.rows {
                let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        } else if !self.checks.is_empty() {
            out.push_str("case,passed,residual\n");
            for check in &self.checks {
                out.push_str(&format!(
                    "{},{},{}\n",
                    check.case,
                    u8::from(check.passed),
                    check.residual
                ));
            }
        } else {
            let names: Vec<&str> = self.scalars.keys().map(String::as_str).collect();
            out.push_str(&names.join(","));
            out.push('\n');
            let values: Vec<String> = self.scalars.values().map(|v| format!("{v}")).collect();
            out.push_str(&values.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_shortest_round_trip_floats() {
        let report = ResultReport::new("deriv")
            .table(&["t", "u_1"], vec![vec![0.0, 0.1 + 0.2], vec![1.0, 2.0]]);
        let csv = report.to_csv();
        assert_eq!(csv, "t,u_1\n0,0.30000000000000004\n1,2\n");
    }

    #[test]
    fn json_is_stable() {
        let report = ResultReport::new("integrate").scalar("value", 1.5);
        assert_eq!(report.to_json(), report.to_json());
    }
}

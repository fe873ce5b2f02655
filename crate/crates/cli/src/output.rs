//! CSV and JSON emission. Every exact value is rendered as a string in both
//! formats; nothing ever passes through floating point.

use std::io::{self, Write};

use serde::Serialize;

use polybern::identity::IdentityCheck;

/// One emitted table row (family tables).
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub family: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub value: String,
    pub path: String,
}

pub const TABLE_HEADER: [&str; 6] = ["family", "n", "k", "lambda", "value", "path"];

impl TableRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.k.map(|k| k.to_string()).unwrap_or_default(),
            self.lambda.clone().unwrap_or_default(),
            self.value.clone(),
            self.path.clone(),
        ]
    }
}

/// One emitted λ→0 comparison row.
#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub family: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    pub limit: String,
    pub classical: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub const LIMIT_HEADER: [&str; 6] = ["family", "n", "k", "limit", "classical", "match"];

impl LimitRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.k.map(|k| k.to_string()).unwrap_or_default(),
            self.limit.clone(),
            self.classical.clone(),
            self.matches.to_string(),
        ]
    }
}

pub const REPORT_HEADER: [&str; 7] = [
    "name", "params", "verdict", "location", "lhs", "rhs", "notes",
];

pub fn report_csv_fields(check: &IdentityCheck) -> Vec<String> {
    let (location, lhs, rhs) = match &check.counterexample {
        Some(ce) => (ce.location.clone(), ce.lhs.clone(), ce.rhs.clone()),
        None => (String::new(), String::new(), String::new()),
    };
    vec![
        check.name.clone(),
        check.params.clone(),
        if check.passed() { "pass" } else { "fail" }.to_string(),
        location,
        lhs,
        rhs,
        check.notes.join("; "),
    ]
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn write_csv(
    out: &mut dyn Write,
    header: &[&str],
    rows: impl Iterator<Item = Vec<String>>,
) -> io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|f| csv_escape(f)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}")
}

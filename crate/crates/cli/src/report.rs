//! Report assembly and serialization.
//!
//! JSON output has keys sorted at every level. CSV output uses a fixed column
//! order: census reports use [`CENSUS_COLUMNS`], verify reports one row per
//! criterion with [`VERIFY_COLUMNS`], and every other report a single row of
//! its flattened `result` fields in sorted key order.

use serde::Serialize;
use serde_json::{Map, Value};

pub const CENSUS_COLUMNS: [&str; 7] = ["n", "total", "i_n", "s_n", "extra", "t5_free", "max_t5_free_edges"];
pub const VERIFY_COLUMNS: [&str; 4] = ["id", "name", "passed", "detail"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// One line per claim the report speaks to.
    pub claims: Vec<String>,
    pub config: Value,
    pub result: Value,
    /// `None` for pure computations; `Some(false)` makes the run exit 1.
    pub passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Value>,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Dotted-path view of a JSON value; objects in key order, arrays by index.
pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn to_csv(report: &Report) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let field = |v: &Value, k: &str| v.get(k).map(scalar).unwrap_or_default();
    match report.command.as_str() {
        "census" => {
            w.write_record(CENSUS_COLUMNS).expect("in-memory write");
            w.write_record(CENSUS_COLUMNS.map(|c| field(&report.result, c))).expect("in-memory write");
        }
        "verify" => {
            w.write_record(VERIFY_COLUMNS).expect("in-memory write");
            for row in report.result["criteria"].as_array().into_iter().flatten() {
                w.write_record(VERIFY_COLUMNS.map(|c| field(row, c))).expect("in-memory write");
            }
        }
        _ => {
            let mut cells = Vec::new();
            flatten("", &report.result, &mut cells);
            w.write_record(cells.iter().map(|(k, _)| k)).expect("in-memory write");
            w.write_record(cells.iter().map(|(_, v)| v)).expect("in-memory write");
        }
    }
    w.into_inner().expect("in-memory flush")
}

fn to_text(report: &Report) -> Vec<u8> {
    let mut s = format!("command: {}\n", report.command);
    for c in &report.claims {
        s.push_str(&format!("claim: {c}\n"));
    }
    let mut cells = Vec::new();
    flatten("config", &report.config, &mut cells);
    flatten("result", &report.result, &mut cells);
    if let Some(t) = &report.timings {
        flatten("timings", t, &mut cells);
    }
    for (k, v) in cells {
        s.push_str(&format!("{k}: {v}\n"));
    }
    if let Some(p) = report.passed {
        s.push_str(&format!("passed: {p}\n"));
    }
    s.into_bytes()
}

/// Deterministic bytes for `report` in the chosen format.
pub fn report_emit(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let v = serde_json::to_value(report).expect("reports are plain data");
            let mut bytes = serde_json::to_vec_pretty(&sort_keys(v)).expect("reports are plain data");
            bytes.push(b'\n');
            bytes
        }
        Format::Csv => to_csv(report),
        Format::Text => to_text(report),
    }
}

/// `serde_json::Map` is ordered by key unless `preserve_order` is enabled
/// somewhere in the build; rebuilding keeps the output sorted either way.
fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sort_keys(v))).collect::<Map<_, _>>())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

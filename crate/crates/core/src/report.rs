//! Serializable records of counting runs and aligned text tables.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Output record of a counting operation.
///
/// `elapsed_ms` is only filled in on request, so that reports of identical
/// runs are byte-identical.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CountReport {
    pub operation: String,
    pub parameters: BTreeMap<String, Value>,
    pub input_digest: String,
    pub counts: BTreeMap<String, Value>,
    pub histograms: BTreeMap<String, BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CountReport {
    pub fn new(operation: &str, input_digest: String) -> Self {
        CountReport {
            operation: operation.to_string(),
            input_digest,
            ..CountReport::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn count(mut self, key: &str, value: impl Serialize) -> Self {
        self.counts.insert(key.to_string(), to_value(value));
        self
    }

    pub fn histogram(mut self, key: &str, buckets: BTreeMap<String, usize>) -> Self {
        self.histograms.insert(key.to_string(), buckets);
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    /// Aligned two-column tables for parameters, counts, and histograms.
    pub fn to_text(&self) -> String {
        let mut out = format!("operation: {}\ninput: {}\n", self.operation, self.input_digest);
        let section = |title: &str, map: &BTreeMap<String, Value>| {
            let mut rows = vec![vec![title.to_string(), "value".to_string()]];
            rows.extend(map.iter().map(|(k, v)| vec![k.clone(), plain(v)]));
            render_table(&rows)
        };
        if !self.parameters.is_empty() {
            out.push_str(&section("parameter", &self.parameters));
        }
        out.push_str(&section("count", &self.counts));
        for (name, buckets) in &self.histograms {
            let mut rows = vec![vec![name.clone(), "count".to_string()]];
            rows.extend(buckets.iter().map(|(k, v)| vec![k.clone(), v.to_string()]));
            out.push_str(&render_table(&rows));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders rows as a left-aligned table; the first row is the header.
pub fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        format!("{}\n", cells.join("  ").trim_end())
    };
    let mut out = String::new();
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&line(r));
        if i == 0 {
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            out.push_str(&format!("{}\n", rule.join("  ")));
        }
    }
    out
}

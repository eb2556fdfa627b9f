use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use sepgraph_core::{Error, Result};

/// What a subcommand hands back before it is wrapped into a document.
pub struct Outcome {
    pub payload: Value,
    /// Method tag for each reported value.
    pub methods: BTreeMap<String, String>,
    /// Tabular projection; defaults to `key,value` rows of the payload.
    pub csv: Option<String>,
}

impl Outcome {
    pub fn new(payload: impl Serialize) -> Result<Self> {
        Ok(Outcome {
            payload: serde_json::to_value(payload)?,
            methods: BTreeMap::new(),
            csv: None,
        })
    }

    pub fn method(mut self, key: &str, tag: impl Into<String>) -> Self {
        self.methods.insert(key.to_string(), tag.into());
        self
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// The canonical JSON output. Everything except `timing` is a function of
/// the command line.
#[derive(Serialize, Deserialize, Debug)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: Value,
    pub seed: u64,
    pub payload: Value,
    pub methods: BTreeMap<String, String>,
    pub timing: Timing,
}

/// `key,value` rows for every scalar in the payload; nested objects use
/// dotted keys and arrays of scalars are joined with spaces.
pub fn key_value_csv(payload: &Value) -> Result<String> {
    let mut rows = Vec::new();
    flatten("", payload, &mut rows);
    if rows.is_empty() {
        return Err(Error::Precondition("nothing to project onto CSV".into()));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, rows);
            }
        }
        Value::Array(items) => {
            if let Some(parts) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                rows.push((prefix.to_string(), parts.join(" ")));
            }
        }
        other => rows.push((prefix.to_string(), scalar(other).unwrap_or_default())),
    }
}

/// Reads a profile either bare or from the payload of a `sep` document.
pub fn extract_profile(doc: Value) -> Value {
    match doc {
        Value::Object(mut map) => {
            if let Some(Value::Object(mut payload)) = map.remove("payload") {
                if let Some(p) = payload.remove("profile") {
                    return p;
                }
                return Value::Object(payload);
            }
            if let Some(p) = map.remove("profile") {
                return p;
            }
            Value::Object(map)
        }
        other => other,
    }
}

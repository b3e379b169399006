//! Deterministic emission of results: metadata blocks, JSON/CSV assembly,
//! and stdout-or-file plumbing.

use crate::{CliError, Format, OutputArgs};
use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};

/// An ordered metadata block. JSON nests it under `"meta"`; CSV prints one
/// `# key: value` comment line per pair, in insertion order.
pub struct Meta {
    command: &'static str,
    parameters: Vec<(&'static str, Value)>,
}

impl Meta {
    pub fn new(command: &'static str) -> Self {
        Meta {
            command,
            parameters: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &'static str, value: Value) {
        self.parameters.push((key, value));
    }

    fn to_json(&self) -> Value {
        let mut params = Map::new();
        for (k, v) in &self.parameters {
            params.insert((*k).to_string(), v.clone());
        }
        json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "parameters": Value::Object(params),
        })
    }

    fn to_csv_comments(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", self.command));
        out.push_str(&format!("# version: {}\n", env!("CARGO_PKG_VERSION")));
        for (k, v) in &self.parameters {
            out.push_str(&format!("# {k}: {}\n", csv_scalar(v)));
        }
        out
    }
}

/// A metadata value rendered for a `#` comment line: JSON strings lose their
/// quotes, everything else keeps its compact JSON form.
fn csv_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A finite float as a JSON number; infinities (which JSON cannot carry)
/// become null.
pub fn float_value(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

/// A float for a CSV cell: Rust's shortest round-trip decimal.
pub fn csv_float(x: f64) -> String {
    format!("{x}")
}

/// The complete JSON document: metadata plus results, pretty-printed with a
/// trailing newline. Keys serialize in sorted order, so output is stable.
pub fn json_document(meta: &Meta, results: Value) -> String {
    let doc = json!({ "meta": meta.to_json(), "results": results });
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

/// The complete CSV document: `#` metadata comments followed by the body.
pub fn csv_document(meta: &Meta, body: &str) -> String {
    let mut text = meta.to_csv_comments();
    text.push_str(body);
    text
}

/// Assembles the document in the requested format.
pub fn render(out: &OutputArgs, meta: &Meta, results: Value, csv_body: &str) -> String {
    match out.format {
        Format::Json => json_document(meta, results),
        Format::Csv => csv_document(meta, csv_body),
    }
}

/// Resolves the destination path: relative paths land under $R2R_OUTPUT_DIR
/// when that variable is set and nonempty.
fn resolve(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("R2R_OUTPUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

/// Writes the document to stdout or to the resolved output file, creating
/// parent directories as needed.
pub fn emit(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &out.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let path = resolve(path);
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent).map_err(|e| {
                        CliError::Runtime(format!("cannot create {}: {e}", parent.display()))
                    })?;
                }
            }
            std::fs::write(&path, text)
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
        }
    }
}

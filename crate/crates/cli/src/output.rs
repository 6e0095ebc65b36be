//! Report emission: JSON / CSV / plain text, to stdout or a file.

use std::path::PathBuf;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Writes `content` to `out` (or stdout), ensuring a trailing newline.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    let body = if content.ends_with('\n') || content.is_empty() {
        content.to_string()
    } else {
        format!("{content}\n")
    };
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// RFC 4180-style field quoting.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Builds a CSV document from a header and stringified rows.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut doc = String::new();
    doc.push_str(&header.join(","));
    doc.push('\n');
    for row in rows {
        let quoted: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        doc.push_str(&quoted.join(","));
        doc.push('\n');
    }
    doc
}

/// Flattens a JSON value into a single CSV/plain field. Nested arrays keep
/// their grouping with brackets (branch sets, for example, read as
/// `[0 1] [2] [3 4]`).
pub fn value_to_field(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => items
            .iter()
            .map(|e| match e {
                serde_json::Value::Array(inner) => format!(
                    "[{}]",
                    inner.iter().map(value_to_field).collect::<Vec<_>>().join(" ")
                ),
                other => value_to_field(other),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

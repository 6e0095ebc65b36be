//! Input-line parsing: graph6 records and family specs.

use std::io::Read;
use std::path::PathBuf;

use qextremal::graph::{build_extremal_family, Graph};
use qextremal::graph6::parse_graph6;

use crate::CliError;

/// One parsed input graph, tagged with enough provenance to report errors
/// and to label report rows.
pub struct InputItem {
    /// The line as given (a graph6 record or a family spec).
    pub label: String,
    /// File path, or `stdin`.
    pub source: String,
    /// 1-based line number within the source.
    pub line: usize,
    pub graph: Graph,
}

/// Reads graph lines from the given files, or stdin when none are given.
///
/// Recognized lines: graph6 records, family specs `F s t n`, blank lines,
/// `#` comments, and the optional `>>graph6<<` header (the last three are
/// skipped).
pub fn read_inputs(files: &[PathBuf]) -> Result<Vec<InputItem>, CliError> {
    let mut items = Vec::new();
    if files.is_empty() {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        parse_source("stdin", &buf, &mut items)?;
    } else {
        for path in files {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            parse_source(&path.display().to_string(), &text, &mut items)?;
        }
    }
    Ok(items)
}

fn parse_source(source: &str, text: &str, items: &mut Vec<InputItem>) -> Result<(), CliError> {
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with(">>") {
            continue;
        }
        let graph =
            parse_line(trimmed).map_err(|e| CliError::Usage(format!("{source}:{line}: {e}")))?;
        items.push(InputItem {
            label: trimmed.to_string(),
            source: source.to_string(),
            line,
            graph,
        });
    }
    Ok(())
}

fn parse_line(text: &str) -> Result<Graph, String> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if matches!(tokens.first(), Some(&"F") | Some(&"f")) {
        if tokens.len() != 4 {
            return Err(format!(
                "family spec needs exactly \"F s t n\", got {} fields",
                tokens.len()
            ));
        }
        let mut nums = [0usize; 3];
        for (slot, tok) in nums.iter_mut().zip(&tokens[1..]) {
            *slot = tok
                .parse()
                .map_err(|e| format!("bad family parameter {tok:?}: {e}"))?;
        }
        let (g, _) =
            build_extremal_family(nums[0], nums[1], nums[2]).map_err(|e| e.to_string())?;
        Ok(g)
    } else {
        parse_graph6(text).map_err(|e| e.to_string())
    }
}

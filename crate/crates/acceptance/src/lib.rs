//! Independent oracles used by the acceptance suite.
//!
//! Nothing here calls into the code under test: the MMCID oracle is a
//! positional character-class table, and fixtures are plain text.

pub mod mmcid_oracle;

/// Parses `[section]` blocks of non-empty, non-comment lines, in file order.
pub fn sections(text: &str) -> Vec<(String, Vec<String>)> {
    let mut out: Vec<(String, Vec<String>)> = Vec::new();
    for line in text.lines() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push((name.to_string(), Vec::new()));
        } else if let Some((_, lines)) = out.last_mut() {
            lines.push(line.to_string());
        }
    }
    out
}

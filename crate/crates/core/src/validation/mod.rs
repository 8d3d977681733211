//! Identifier checks, card lint and document parsing.

mod diagnostic;
mod lint;
pub mod mmcid;
mod parse;

pub use diagnostic::{has_errors, Code, Diagnostic, Severity};
pub use lint::{lint_card, SELECTION_GUIDELINE};
pub use mmcid::{is_valid_mmcid, validate_mmcid, MMCID_PATTERN};
pub use parse::{parse_card, parse_value, ParsedCard};

/// Parses and lints in one pass. Returns the card (if it parsed) and every
/// finding: parse warnings first, then lint findings.
pub fn check_document(document: &[u8]) -> (Option<crate::model::ModelCard>, Vec<Diagnostic>) {
    match parse_card(document) {
        Ok(ParsedCard { card, mut warnings }) => {
            warnings.extend(lint_card(&card));
            (Some(card), warnings)
        }
        Err(errors) => (None, errors),
    }
}

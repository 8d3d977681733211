use super::diagnostic::{Code, Diagnostic};
use super::mmcid::validate_mmcid;
use crate::model::{Checklist, ModelCard};
use crate::vocabulary::no_identified_bias;

/// Advisory upper bound on selections per vocabulary-backed list.
pub const SELECTION_GUIDELINE: usize = 3;

/// Lints a card. Findings are sorted by path, then code.
pub fn lint_card(card: &ModelCard) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    if let Some(mmcid) = &card.identification.mmcid {
        if let Err(diag) = validate_mmcid(mmcid) {
            out.push(diag);
        }
    }

    for (path, list) in card.selection_lists() {
        if list.len() > SELECTION_GUIDELINE {
            out.push(Diagnostic::new(
                Code::TooManySelections,
                path,
                format!(
                    "{} selections; the guideline is at most {SELECTION_GUIDELINE}",
                    list.len()
                ),
            ));
        }
    }

    let biases = &card.quality.biases;
    let none = no_identified_bias();
    if biases.len() > 1 && biases.iter().any(|s| s.is_term(none)) {
        out.push(Diagnostic::new(
            Code::NoBiasConflict,
            "quality.biases",
            format!(
                "`{}` is selected together with other bias types",
                none.label
            ),
        ));
    }

    lint_checklist(&card.top_level, &mut out);
    lint_checklist(&card.pipeline, &mut out);

    if card.is_empty() {
        out.push(Diagnostic::new(
            Code::EmptyCard,
            "card",
            "card has no documented content",
        ));
    }

    out.sort_by(|a, b| a.path.cmp(&b.path).then(a.code.cmp(&b.code)));
    out
}

fn lint_checklist(list: &Checklist, out: &mut Vec<Diagnostic>) {
    for entry in list.entries() {
        if !entry.selected && entry.description.is_some() {
            out.push(Diagnostic::new(
                Code::DescriptionOnUnselected,
                format!("{}.{}", list.kind().field(), entry.key),
                format!("`{}` has a description but is not selected", entry.label),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::empty_card;

    fn codes(diags: &[Diagnostic]) -> Vec<(&str, Code)> {
        diags.iter().map(|d| (d.path.as_str(), d.code)).collect()
    }

    #[test]
    fn empty_card_is_info_only() {
        assert_eq!(
            codes(&lint_card(&empty_card())),
            [("card", Code::EmptyCard)]
        );
    }

    #[test]
    fn clean_card() {
        let mut card = empty_card();
        card.identification.mmcid = Some("DF-MC-2025-001".into());
        card.classification
            .domains
            .push_raw("Network Forensics")
            .unwrap();
        card.classification
            .domains
            .push_raw("Cloud Forensics")
            .unwrap();
        card.classification
            .reasoning
            .push_raw("Abductive Reasoning")
            .unwrap();
        assert!(lint_card(&card).is_empty());
    }

    #[test]
    fn four_domains_warn() {
        let mut card = empty_card();
        for d in [
            "Network Forensics",
            "Cloud Forensics",
            "IoT Forensics",
            "Memory Forensics",
        ] {
            card.classification.domains.push_raw(d).unwrap();
        }
        assert_eq!(
            codes(&lint_card(&card)),
            [("classification.domains", Code::TooManySelections)]
        );
    }

    #[test]
    fn no_bias_alone_is_fine() {
        let mut card = empty_card();
        card.quality.biases.push_raw("No Identified Bias").unwrap();
        assert!(lint_card(&card).is_empty());
        card.quality.biases.push_raw("something odd").unwrap();
        assert_eq!(
            codes(&lint_card(&card)),
            [("quality.biases", Code::NoBiasConflict)]
        );
    }

    #[test]
    fn ordering_is_by_path_then_code() {
        let mut card = empty_card();
        card.identification.mmcid = Some("bad".into());
        card.pipeline.entry_mut("hashing").unwrap().description = Some("md5".into());
        for b in [
            "Data Bias",
            "No Identified Bias",
            "Human Bias",
            "Reporting Bias",
        ] {
            card.quality.biases.push_raw(b).unwrap();
        }
        assert_eq!(
            codes(&lint_card(&card)),
            [
                ("identification.mmcid", Code::MalformedMmcid),
                ("pipeline.hashing", Code::DescriptionOnUnselected),
                ("quality.biases", Code::TooManySelections),
                ("quality.biases", Code::NoBiasConflict),
            ]
        );
    }
}

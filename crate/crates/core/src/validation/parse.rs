//! Reading card documents.
//!
//! Parsing is tolerant where it can be: unknown vocabulary labels become
//! "Other" entries, repeated selections are dropped, blank strings count as
//! absent and missing sections default to empty. Each such repair is
//! reported as a warning. Wrong types, unknown fields and checklist
//! mismatches are errors.

use serde_json::{Map, Value};

use super::diagnostic::{Code, Diagnostic};
use crate::model::{empty_card, Checklist, ModelCard, SelectionList};
use crate::vocabulary::{TermSelection, VocabularyId};

/// A successfully parsed card plus any warnings raised while reading it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedCard {
    pub card: ModelCard,
    pub warnings: Vec<Diagnostic>,
}

pub fn parse_card(document: &[u8]) -> Result<ParsedCard, Vec<Diagnostic>> {
    let text = std::str::from_utf8(document).map_err(|e| {
        vec![Diagnostic::new(
            Code::MalformedDocument,
            "card",
            format!("document is not valid UTF-8: {e}"),
        )]
    })?;
    let value: Value = serde_json::from_str(text).map_err(|e| {
        vec![Diagnostic::new(
            Code::MalformedDocument,
            "card",
            format!("document is not valid JSON: {e}"),
        )]
    })?;
    parse_value(&value)
}

/// Parses an already-decoded JSON value.
pub fn parse_value(value: &Value) -> Result<ParsedCard, Vec<Diagnostic>> {
    let Some(root) = value.as_object() else {
        return Err(vec![Diagnostic::new(
            Code::MalformedDocument,
            "card",
            format!("expected a JSON object, found {}", kind(value)),
        )]);
    };
    let mut reader = Reader::default();
    let card = reader.card(root);
    if reader.errors.is_empty() {
        Ok(ParsedCard {
            card,
            warnings: reader.warnings,
        })
    } else {
        Err(reader.errors)
    }
}

fn kind(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

#[derive(Default)]
struct Reader {
    errors: Vec<Diagnostic>,
    warnings: Vec<Diagnostic>,
}

impl Reader {
    fn error(&mut self, path: &str, message: impl Into<String>) {
        self.errors
            .push(Diagnostic::new(Code::InvalidStructure, path, message));
    }

    fn warn(&mut self, code: Code, path: &str, message: impl Into<String>) {
        self.warnings.push(Diagnostic::new(code, path, message));
    }

    fn type_error(&mut self, path: &str, expected: &str, found: &Value) {
        self.error(path, format!("expected {expected}, found {}", kind(found)));
    }

    /// Returns the object at `path`, reporting unknown keys.
    fn object<'v>(
        &mut self,
        path: &str,
        value: &'v Value,
        allowed: &[&str],
    ) -> Option<&'v Map<String, Value>> {
        let Some(obj) = value.as_object() else {
            self.type_error(path, "an object", value);
            return None;
        };
        for key in obj.keys() {
            if !allowed.contains(&key.as_str()) {
                self.error(&join(path, key), format!("unknown field `{key}`"));
            }
        }
        Some(obj)
    }

    fn card(&mut self, root: &Map<String, Value>) -> ModelCard {
        let mut card = empty_card();
        for key in root.keys() {
            if ![
                "identification",
                "case_context",
                "classification",
                "quality",
                "top_level",
                "pipeline",
                "meta",
            ]
            .contains(&key.as_str())
            {
                self.error(key, format!("unknown field `{key}`"));
            }
        }

        if let Some(v) = root.get("identification") {
            let path = "identification";
            let allowed = ["mmcid", "version", "owner", "usage_context", "layer_stage"];
            if let Some(obj) = self.object(path, v, &allowed) {
                let id = &mut card.identification;
                id.mmcid = self.text(obj, path, "mmcid");
                id.version = self.text(obj, path, "version");
                id.owner = self.text(obj, path, "owner");
                id.layer_stage = self.text(obj, path, "layer_stage");
                if let Some(v) = obj.get("usage_context") {
                    id.usage_context =
                        self.selection(&join(path, "usage_context"), v, VocabularyId::UsageContext);
                }
            }
        }

        if let Some(v) = root.get("case_context") {
            let path = "case_context";
            if let Some(obj) = self.object(path, v, &["case_statement", "hypotheses"]) {
                card.case_context.case_statement = self.text(obj, path, "case_statement");
                if let Some(v) = obj.get("hypotheses") {
                    let path = join(path, "hypotheses");
                    match v.as_array() {
                        Some(items) => {
                            for (i, item) in items.iter().enumerate() {
                                match item.as_str() {
                                    Some(s) => {
                                        card.case_context.add_hypothesis(s);
                                    }
                                    None => self.type_error(&index(&path, i), "a string", item),
                                }
                            }
                        }
                        None => self.type_error(&path, "an array", v),
                    }
                }
            }
        }

        if let Some(v) = root.get("classification") {
            let path = "classification";
            if let Some(obj) = self.object(path, v, &["domains", "reasoning"]) {
                let class = &mut card.classification;
                self.selections(obj, path, "domains", &mut class.domains);
                self.selections(obj, path, "reasoning", &mut class.reasoning);
            }
        }

        if let Some(v) = root.get("quality") {
            let path = "quality";
            let allowed = ["biases", "bias_causes", "errors_observed", "error_causes"];
            if let Some(obj) = self.object(path, v, &allowed) {
                let q = &mut card.quality;
                self.selections(obj, path, "biases", &mut q.biases);
                self.selections(obj, path, "bias_causes", &mut q.bias_causes);
                q.errors_observed = self.text(obj, path, "errors_observed");
                self.selections(obj, path, "error_causes", &mut q.error_causes);
            }
        }

        if let Some(v) = root.get("top_level") {
            self.checklist("top_level", v, &mut card.top_level);
        }
        if let Some(v) = root.get("pipeline") {
            self.checklist("pipeline", v, &mut card.pipeline);
        }
        if let Some(v) = root.get("meta") {
            if !v.is_object() {
                self.type_error("meta", "an object", v);
            }
        }
        card
    }

    /// Optional free text; blank strings read as absent.
    fn text(&mut self, obj: &Map<String, Value>, path: &str, key: &str) -> Option<String> {
        let v = obj.get(key)?;
        match v.as_str() {
            Some(s) if s.trim().is_empty() => None,
            Some(s) => Some(s.to_string()),
            None => {
                self.type_error(&join(path, key), "a string", v);
                None
            }
        }
    }

    fn selection(&mut self, path: &str, v: &Value, vocab: VocabularyId) -> Option<TermSelection> {
        match v {
            Value::String(s) => {
                if s.trim().is_empty() {
                    self.error(path, "selection is empty");
                    return None;
                }
                match vocab.vocabulary().lookup(s) {
                    Some(term) => Some(TermSelection::Canonical(term)),
                    None => {
                        self.warn(
                            Code::UnknownTerm,
                            path,
                            format!("`{}` is not a {vocab} term; kept as Other", s.trim()),
                        );
                        TermSelection::other(s).ok()
                    }
                }
            }
            Value::Object(_) => {
                let obj = self.object(path, v, &["other"])?;
                match obj.get("other") {
                    Some(Value::String(s)) => match TermSelection::other(s) {
                        Ok(sel) => Some(sel),
                        Err(_) => {
                            self.error(&join(path, "other"), "Other text is empty");
                            None
                        }
                    },
                    Some(other) => {
                        self.type_error(&join(path, "other"), "a string", other);
                        None
                    }
                    None => {
                        self.error(path, "missing field `other`");
                        None
                    }
                }
            }
            other => {
                self.type_error(path, "a term label or {\"other\": text}", other);
                None
            }
        }
    }

    fn selections(
        &mut self,
        obj: &Map<String, Value>,
        path: &str,
        key: &str,
        list: &mut SelectionList,
    ) {
        let Some(v) = obj.get(key) else { return };
        let path = join(path, key);
        let Some(items) = v.as_array() else {
            self.type_error(&path, "an array", v);
            return;
        };
        for (i, item) in items.iter().enumerate() {
            let item_path = index(&path, i);
            if let Some(sel) = self.selection(&item_path, item, list.vocabulary()) {
                let label = sel.label().to_string();
                if !list
                    .push(sel)
                    .expect("selection resolved against the list's vocabulary")
                {
                    self.warn(
                        Code::DuplicateSelection,
                        &item_path,
                        format!("`{label}` is already selected; duplicate dropped"),
                    );
                }
            }
        }
    }

    fn checklist(&mut self, path: &str, v: &Value, list: &mut Checklist) {
        let Some(items) = v.as_array() else {
            self.type_error(path, "an array", v);
            return;
        };
        let expected = list.kind().items();
        if items.len() != expected.len() {
            self.error(
                path,
                format!("expected {} entries, found {}", expected.len(), items.len()),
            );
        }
        let mut entries: Vec<_> = list.entries_mut().collect();
        for (i, (item, entry)) in items.iter().zip(entries.iter_mut()).enumerate() {
            let item_path = index(path, i);
            let allowed = ["key", "label", "selected", "description"];
            let Some(obj) = self.object(&item_path, item, &allowed) else {
                continue;
            };
            match obj.get("key") {
                Some(Value::String(k)) if k == entry.key => {}
                Some(Value::String(k)) => self.error(
                    &join(&item_path, "key"),
                    format!("expected `{}`, found `{k}`", entry.key),
                ),
                Some(other) => self.type_error(&join(&item_path, "key"), "a string", other),
                None => self.error(
                    &item_path,
                    format!("missing field `key` (expected `{}`)", entry.key),
                ),
            }
            match obj.get("label") {
                None => {}
                Some(Value::String(l)) if l == entry.label => {}
                Some(Value::String(l)) => self.error(
                    &join(&item_path, "label"),
                    format!("expected `{}`, found `{l}`", entry.label),
                ),
                Some(other) => self.type_error(&join(&item_path, "label"), "a string", other),
            }
            match obj.get("selected") {
                Some(Value::Bool(b)) => entry.selected = *b,
                Some(other) => self.type_error(&join(&item_path, "selected"), "a boolean", other),
                None => self.error(&item_path, "missing field `selected`"),
            }
            entry.description = self.text(obj, &item_path, "description");
        }
    }
}

fn join(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::empty_card;
    use crate::render::{to_json, RenderOptions};

    fn parse_str(s: &str) -> Result<ParsedCard, Vec<Diagnostic>> {
        parse_card(s.as_bytes())
    }

    fn skeleton(extra: &str) -> String {
        let base = String::from_utf8(to_json(&empty_card(), &RenderOptions::default())).unwrap();
        base.replacen('{', &format!("{{{extra}"), 1)
    }

    #[test]
    fn empty_card_round_trips() {
        let bytes = to_json(&empty_card(), &RenderOptions::default());
        let parsed = parse_card(&bytes).unwrap();
        assert_eq!(parsed.card, empty_card());
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn minimal_document_without_checklists() {
        assert_eq!(parse_str("{}").unwrap().card, empty_card());
    }

    #[test]
    fn known_and_unknown_domains() {
        let parsed =
            parse_str(r#"{"classification": {"domains": ["Network Forensics"]}}"#).unwrap();
        assert_eq!(
            parsed.card.classification.domains.as_slice()[0].label(),
            "Network Forensics"
        );
        assert!(parsed.warnings.is_empty());

        let parsed =
            parse_str(r#"{"classification": {"domains": ["Quantum Forensics"]}}"#).unwrap();
        assert_eq!(
            parsed.card.classification.domains.as_slice(),
            [TermSelection::Other("Quantum Forensics".into())]
        );
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.warnings[0].code, Code::UnknownTerm);
        assert_eq!(parsed.warnings[0].path, "classification.domains[0]");
    }

    #[test]
    fn duplicates_dropped_with_warning() {
        let parsed = parse_str(
            r#"{"quality": {"biases": ["Human Bias (cognitive, confirmation, implicit)", "human_bias", {"other": "x"}, {"other": " X "}]}}"#,
        )
        .unwrap();
        assert_eq!(parsed.card.quality.biases.len(), 2);
        let codes: Vec<_> = parsed
            .warnings
            .iter()
            .map(|w| (w.code, w.path.as_str()))
            .collect();
        assert_eq!(
            codes,
            [
                (Code::DuplicateSelection, "quality.biases[1]"),
                (Code::DuplicateSelection, "quality.biases[3]"),
            ]
        );
    }

    #[test]
    fn malformed_input_is_single_e002() {
        for doc in [&b"not json"[..], &[0xff, 0xfe][..], b"[1,2]", b"42"] {
            let errs = parse_card(doc).unwrap_err();
            assert_eq!(errs.len(), 1, "{doc:?}");
            assert_eq!(errs[0].code, Code::MalformedDocument);
        }
    }

    #[test]
    fn structural_errors() {
        let errs = parse_str(r#"{"identification": {"mmcid": 5, "colour": "red"}, "extra": 1}"#)
            .unwrap_err();
        let paths: Vec<_> = errs.iter().map(|e| e.path.as_str()).collect();
        assert!(errs.iter().all(|e| e.code == Code::InvalidStructure));
        assert!(paths.contains(&"extra"));
        assert!(paths.contains(&"identification.colour"));
        assert!(paths.contains(&"identification.mmcid"));
    }

    #[test]
    fn renamed_checklist_key_is_an_error() {
        let doc = skeleton("").replacen("\"key\": \"tools\"", "\"key\": \"toolz\"", 1);
        let errs = parse_str(&doc).unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].path, "top_level[4].key");
    }

    #[test]
    fn short_checklist_is_an_error() {
        let errs =
            parse_str(r#"{"top_level": [{"key": "algorithm", "selected": true}]}"#).unwrap_err();
        assert_eq!(errs[0].message, "expected 9 entries, found 1");
    }

    #[test]
    fn blank_strings_read_as_absent() {
        let parsed = parse_str(
            r#"{"identification": {"owner": "  "}, "case_context": {"hypotheses": ["", "h"]}}"#,
        )
        .unwrap();
        assert_eq!(parsed.card.identification.owner, None);
        assert_eq!(parsed.card.case_context.hypotheses(), ["h"]);
    }

    #[test]
    fn malformed_mmcid_parses_and_is_left_to_lint() {
        let parsed = parse_str(r#"{"identification": {"mmcid": "DF-MC-25-1"}}"#).unwrap();
        assert_eq!(
            parsed.card.identification.mmcid.as_deref(),
            Some("DF-MC-25-1")
        );
    }
}

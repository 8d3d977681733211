//! JSON Schema (draft 2020-12) for canonical card documents.

use serde_json::{json, Map, Value};

use super::{REFERENCES, SCHEMA_VERSION};
use crate::model::ChecklistKind;
use crate::validation::MMCID_PATTERN;
use crate::vocabulary::VocabularyId;

const TIMESTAMP_PATTERN: &str = "^[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}Z$";
const SEMVER_PATTERN: &str = "^[0-9]+\\.[0-9]+\\.[0-9]+([-+][0-9A-Za-z.+-]+)?$";

fn vocabulary_def(id: VocabularyId) -> Value {
    let labels: Vec<&str> = id.vocabulary().terms.iter().map(|t| t.label).collect();
    json!({
        "title": id.title(),
        "oneOf": [
            { "enum": labels },
            { "$ref": "#/$defs/other" }
        ]
    })
}

fn selection_list(id: VocabularyId) -> Value {
    json!({
        "type": "array",
        "uniqueItems": true,
        "items": { "$ref": format!("#/$defs/{}", id.slug()) }
    })
}

fn checklist_def(kind: ChecklistKind) -> Value {
    let items = kind.items();
    let prefix: Vec<Value> = items
        .iter()
        .map(|(key, label)| {
            json!({
                "type": "object",
                "additionalProperties": false,
                "required": ["key", "selected"],
                "properties": {
                    "key": { "const": key },
                    "label": { "const": label },
                    "selected": { "type": "boolean" },
                    "description": { "$ref": "#/$defs/text" }
                }
            })
        })
        .collect();
    json!({
        "type": "array",
        "minItems": items.len(),
        "maxItems": items.len(),
        "prefixItems": prefix,
        "items": false
    })
}

fn section(properties: Value) -> Value {
    json!({
        "type": "object",
        "additionalProperties": false,
        "properties": properties
    })
}

/// The schema as a JSON value.
pub fn schema_value() -> Value {
    let mut defs = Map::new();
    defs.insert("text".into(), json!({ "type": "string", "pattern": "\\S" }));
    defs.insert(
        "other".into(),
        json!({
            "type": "object",
            "additionalProperties": false,
            "required": ["other"],
            "properties": { "other": { "$ref": "#/$defs/text" } }
        }),
    );
    for id in VocabularyId::ALL {
        defs.insert(id.slug().into(), vocabulary_def(id));
    }
    defs.insert("top_level".into(), checklist_def(ChecklistKind::TopLevel));
    defs.insert("pipeline".into(), checklist_def(ChecklistKind::Pipeline));

    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "Digital Forensics Model Card",
        "version": SCHEMA_VERSION,
        "type": "object",
        "additionalProperties": false,
        "required": ["top_level", "pipeline", "meta"],
        "properties": {
            "identification": section(json!({
                "mmcid": { "type": "string", "pattern": MMCID_PATTERN },
                "version": { "$ref": "#/$defs/text" },
                "owner": { "$ref": "#/$defs/text" },
                "usage_context": { "$ref": "#/$defs/usage_context" },
                "layer_stage": { "$ref": "#/$defs/text" }
            })),
            "case_context": section(json!({
                "case_statement": { "$ref": "#/$defs/text" },
                "hypotheses": { "type": "array", "items": { "$ref": "#/$defs/text" } }
            })),
            "classification": section(json!({
                "domains": selection_list(VocabularyId::ForensicClassification),
                "reasoning": selection_list(VocabularyId::ReasoningMethodology)
            })),
            "quality": section(json!({
                "biases": selection_list(VocabularyId::BiasTaxonomy),
                "bias_causes": selection_list(VocabularyId::CauseOfBias),
                "errors_observed": { "$ref": "#/$defs/text" },
                "error_causes": selection_list(VocabularyId::ErrorCausation)
            })),
            "top_level": { "$ref": "#/$defs/top_level" },
            "pipeline": { "$ref": "#/$defs/pipeline" },
            "meta": {
                "type": "object",
                "additionalProperties": false,
                "required": ["timestamp", "generator_version", "schema_version", "references"],
                "properties": {
                    "timestamp": { "type": "string", "pattern": TIMESTAMP_PATTERN },
                    "generator_version": { "type": "string", "pattern": SEMVER_PATTERN },
                    "schema_version": { "const": SCHEMA_VERSION },
                    "references": { "const": REFERENCES }
                }
            }
        },
        "$defs": defs
    })
}

/// The schema document, pretty-printed with a trailing newline.
pub fn emit_schema() -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&schema_value()).expect("schema serializes");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::GENERATOR_VERSION;

    #[test]
    fn version_field_matches_render_default() {
        let schema = schema_value();
        assert_eq!(schema["version"], SCHEMA_VERSION);
        assert!(GENERATOR_VERSION.split('.').count() >= 3);
    }

    #[test]
    fn checklist_lengths() {
        let schema = schema_value();
        assert_eq!(
            schema["$defs"]["top_level"]["prefixItems"]
                .as_array()
                .unwrap()
                .len(),
            9
        );
        assert_eq!(schema["$defs"]["pipeline"]["maxItems"], 16);
    }
}

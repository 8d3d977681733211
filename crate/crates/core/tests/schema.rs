//! The emitted schema against rendered and hand-edited documents.

use dfmc_core::render::{emit_schema, to_json, RenderOptions};
use dfmc_core::testing::random_card;
use dfmc_core::{empty_card, parse_card};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_slice(&emit_schema()).unwrap();
    jsonschema::draft202012::new(&schema).expect("schema compiles")
}

fn empty_doc() -> Value {
    serde_json::from_slice(&to_json(&empty_card(), &RenderOptions::default())).unwrap()
}

#[test]
fn empty_card_validates() {
    assert!(validator().is_valid(&empty_doc()));
}

#[test]
fn renamed_checklist_key_is_rejected() {
    let mut doc = empty_doc();
    doc["top_level"][4]["key"] = json!("toolz");
    assert!(!validator().is_valid(&doc));
    assert!(parse_card(doc.to_string().as_bytes()).is_err());
}

#[test]
fn other_selection_is_accepted() {
    let mut doc = empty_doc();
    doc["classification"] = json!({ "domains": [{ "other": "Drone Forensics" }] });
    assert!(validator().is_valid(&doc));
}

#[test]
fn rejects_what_render_never_emits() {
    let v = validator();
    type Edit = Box<dyn Fn(&mut Value)>;
    let cases: Vec<Edit> = vec![
        Box::new(|d| d["identification"] = json!({ "mmcid": "DF-MC-2025-1" })),
        Box::new(|d| d["identification"] = json!({ "owner": null })),
        Box::new(|d| d["classification"] = json!({ "domains": ["Quantum Forensics"] })),
        Box::new(|d| d["classification"] = json!({ "domains": [{ "other": "  " }] })),
        Box::new(|d| {
            d["pipeline"]
                .as_array_mut()
                .unwrap()
                .pop()
                .map(|_| ())
                .unwrap()
        }),
        Box::new(|d| d["meta"]["schema_version"] = json!("2.0")),
        Box::new(|d| d["surprise"] = json!(true)),
        Box::new(|d| {
            d.as_object_mut().unwrap().remove("meta");
        }),
    ];
    for (i, edit) in cases.iter().enumerate() {
        let mut doc = empty_doc();
        edit(&mut doc);
        assert!(!v.is_valid(&doc), "case {i} should be rejected: {doc}");
    }
}

#[test]
fn random_cards_validate() {
    let v = validator();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let card = random_card(&mut rng);
        let doc: Value =
            serde_json::from_slice(&to_json(&card, &RenderOptions::default())).unwrap();
        if let Err(e) = v.validate(&doc) {
            panic!("{e}\n{doc:#}");
        }
    }
}

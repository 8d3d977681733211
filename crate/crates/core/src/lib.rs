//! Digital forensics model cards.
//!
//! A typed card model with controlled vocabularies, a validator and linter,
//! byte-stable JSON and Markdown renderers, a JSON Schema emitter and a
//! small file-backed card store.

pub mod error;
pub mod model;
pub mod render;
pub mod store;
pub mod validation;
pub mod vocabulary;

#[cfg(feature = "testing")]
pub mod testing;

pub use error::ModelError;
pub use model::{
    empty_card, CaseContext, Checklist, ChecklistEntry, ChecklistKind, Classification,
    Identification, ModelCard, QualityLimitations, SelectionList,
};
pub use render::{emit_schema, render, to_json, to_markdown, RenderOptions, RenderedCard};
pub use validation::{lint_card, parse_card, validate_mmcid, Code, Diagnostic, Severity};
pub use vocabulary::{canonicalize, vocabulary, Term, TermSelection, Vocabulary, VocabularyId};

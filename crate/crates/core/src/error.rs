use thiserror::Error;

use crate::vocabulary::VocabularyId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown vocabulary `{0}`")]
    UnknownVocabulary(String),
    #[error("input is empty after trimming")]
    EmptyInput,
    #[error("term `{term}` belongs to {actual}, not {expected}")]
    ForeignTerm {
        term: &'static str,
        expected: VocabularyId,
        actual: VocabularyId,
    },
    #[error("unknown checklist key `{0}`")]
    UnknownChecklistKey(String),
}

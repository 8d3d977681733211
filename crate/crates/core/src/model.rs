//! The card data model.
//!
//! A [`ModelCard`] has six sections. Every field is optional; an empty card
//! is a valid card. Checklists always carry their full, fixed entry set.

use crate::error::ModelError;
use crate::vocabulary::{canonicalize, TermSelection, VocabularyId};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Identification {
    /// MMCID, `DF-MC-YYYY-NNN`. Stored as given; lint checks the format.
    pub mmcid: Option<String>,
    pub version: Option<String>,
    pub owner: Option<String>,
    /// Expected to hold a term from [`VocabularyId::UsageContext`] or free text.
    pub usage_context: Option<TermSelection>,
    /// Position within a multi-layer pipeline. Free text.
    pub layer_stage: Option<String>,
}

impl Identification {
    pub fn is_empty(&self) -> bool {
        self.mmcid.is_none()
            && self.version.is_none()
            && self.owner.is_none()
            && self.usage_context.is_none()
            && self.layer_stage.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseContext {
    pub case_statement: Option<String>,
    hypotheses: Vec<String>,
}

impl CaseContext {
    pub fn hypotheses(&self) -> &[String] {
        &self.hypotheses
    }

    /// Appends a hypothesis. Blank text is dropped and `false` returned.
    pub fn add_hypothesis(&mut self, text: impl Into<String>) -> bool {
        let text = text.into();
        if text.trim().is_empty() {
            return false;
        }
        self.hypotheses.push(text);
        true
    }

    pub fn clear_hypotheses(&mut self) {
        self.hypotheses.clear();
    }

    pub fn is_empty(&self) -> bool {
        self.case_statement.is_none() && self.hypotheses.is_empty()
    }
}

/// An ordered, duplicate-free list of selections from one vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionList {
    vocabulary: VocabularyId,
    items: Vec<TermSelection>,
}

impl SelectionList {
    pub fn new(vocabulary: VocabularyId) -> Self {
        Self {
            vocabulary,
            items: Vec::new(),
        }
    }

    pub fn vocabulary(&self) -> VocabularyId {
        self.vocabulary
    }

    /// Adds a selection. Returns `Ok(false)` if an equivalent one is already
    /// present, and an error for a canonical term of another vocabulary.
    pub fn push(&mut self, selection: TermSelection) -> Result<bool, ModelError> {
        if let TermSelection::Canonical(term) = &selection {
            if term.vocabulary != self.vocabulary {
                return Err(ModelError::ForeignTerm {
                    term: term.slug,
                    expected: self.vocabulary,
                    actual: term.vocabulary,
                });
            }
        }
        if self.contains(&selection) {
            return Ok(false);
        }
        self.items.push(selection);
        Ok(true)
    }

    /// Canonicalizes `raw` against this list's vocabulary and adds it.
    pub fn push_raw(&mut self, raw: &str) -> Result<bool, ModelError> {
        let selection = canonicalize(self.vocabulary, raw)?;
        self.push(selection)
    }

    pub fn contains(&self, selection: &TermSelection) -> bool {
        self.items.iter().any(|s| s.same_as(selection))
    }

    pub fn remove(&mut self, selection: &TermSelection) -> bool {
        let before = self.items.len();
        self.items.retain(|s| !s.same_as(selection));
        self.items.len() != before
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TermSelection> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[TermSelection] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl<'a> IntoIterator for &'a SelectionList {
    type Item = &'a TermSelection;
    type IntoIter = std::slice::Iter<'a, TermSelection>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub domains: SelectionList,
    pub reasoning: SelectionList,
}

impl Default for Classification {
    fn default() -> Self {
        Self {
            domains: SelectionList::new(VocabularyId::ForensicClassification),
            reasoning: SelectionList::new(VocabularyId::ReasoningMethodology),
        }
    }
}

impl Classification {
    pub fn is_empty(&self) -> bool {
        self.domains.is_empty() && self.reasoning.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QualityLimitations {
    pub biases: SelectionList,
    pub bias_causes: SelectionList,
    /// Observed errors. Free text; there is no vocabulary for this field.
    pub errors_observed: Option<String>,
    pub error_causes: SelectionList,
}

impl Default for QualityLimitations {
    fn default() -> Self {
        Self {
            biases: SelectionList::new(VocabularyId::BiasTaxonomy),
            bias_causes: SelectionList::new(VocabularyId::CauseOfBias),
            errors_observed: None,
            error_causes: SelectionList::new(VocabularyId::ErrorCausation),
        }
    }
}

impl QualityLimitations {
    pub fn is_empty(&self) -> bool {
        self.biases.is_empty()
            && self.bias_causes.is_empty()
            && self.errors_observed.is_none()
            && self.error_causes.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChecklistEntry {
    pub key: &'static str,
    pub label: &'static str,
    pub selected: bool,
    /// Only meaningful when `selected`; lint warns otherwise.
    pub description: Option<String>,
}

/// Which of the two fixed checklists a [`Checklist`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChecklistKind {
    /// Top level elements (DF MC 0).
    TopLevel,
    /// Data types and analytical processes (DF MC 1).
    Pipeline,
}

const TOP_LEVEL_ITEMS: [(&str, &str); 9] = [
    ("algorithm", "Algorithm"),
    ("inference", "Inference methodology"),
    ("confounding_factors", "Confounding factors"),
    ("evaluation", "Evaluation approach"),
    ("tools", "Tools employed"),
    ("evidence_handling", "Evidence handling (MC1)"),
    ("file_types", "File types processed"),
    ("data_structures", "Data structures"),
    ("degree_of_confidence", "Degree of confidence"),
];

const PIPELINE_ITEMS: [(&str, &str); 16] = [
    ("event_data_handling", "Event/Data handling"),
    ("raw_data_parsing", "Raw data parsing"),
    ("data_validation", "Data validation"),
    ("partition_identification", "Partition identification"),
    ("file_system_processing", "File system processing"),
    ("content_carving", "Content identification (carving)"),
    ("file_type_identification", "File type identification"),
    ("file_specific_processing", "File-specific processing"),
    ("hashing", "Hashing operations"),
    ("hash_matching", "Hash matching"),
    ("signature_detection", "Signature detection"),
    ("timeline", "Timeline construction and analysis"),
    ("geolocation", "Geolocation processing and analysis"),
    ("keyword_indexing_search", "Keyword indexing and searching"),
    (
        "automated_interpretation",
        "Automated result interpretation",
    ),
    ("ai_content_flagging", "AI-based content flagging"),
];

impl ChecklistKind {
    /// `(key, label)` pairs in display order.
    pub fn items(self) -> &'static [(&'static str, &'static str)] {
        match self {
            ChecklistKind::TopLevel => &TOP_LEVEL_ITEMS,
            ChecklistKind::Pipeline => &PIPELINE_ITEMS,
        }
    }

    /// Field name of this checklist in the card document.
    pub fn field(self) -> &'static str {
        match self {
            ChecklistKind::TopLevel => "top_level",
            ChecklistKind::Pipeline => "pipeline",
        }
    }
}

/// A fixed-length checklist. Entries cannot be added or removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checklist {
    kind: ChecklistKind,
    entries: Vec<ChecklistEntry>,
}

impl Checklist {
    pub fn new(kind: ChecklistKind) -> Self {
        let entries = kind
            .items()
            .iter()
            .map(|&(key, label)| ChecklistEntry {
                key,
                label,
                selected: false,
                description: None,
            })
            .collect();
        Self { kind, entries }
    }

    pub fn kind(&self) -> ChecklistKind {
        self.kind
    }

    pub fn entries(&self) -> &[ChecklistEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> impl Iterator<Item = &mut ChecklistEntry> {
        self.entries.iter_mut()
    }

    pub fn entry(&self, key: &str) -> Option<&ChecklistEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn entry_mut(&mut self, key: &str) -> Result<&mut ChecklistEntry, ModelError> {
        self.entries
            .iter_mut()
            .find(|e| e.key == key)
            .ok_or_else(|| ModelError::UnknownChecklistKey(key.to_string()))
    }

    /// Marks an entry selected, replacing its description.
    pub fn select(&mut self, key: &str, description: Option<&str>) -> Result<(), ModelError> {
        let entry = self.entry_mut(key)?;
        entry.selected = true;
        entry.description = description
            .filter(|d| !d.trim().is_empty())
            .map(str::to_string);
        Ok(())
    }

    pub fn selected(&self) -> impl Iterator<Item = &ChecklistEntry> {
        self.entries.iter().filter(|e| e.selected)
    }

    /// True when nothing is selected and no entry has a description.
    pub fn is_blank(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !e.selected && e.description.is_none())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelCard {
    pub identification: Identification,
    pub case_context: CaseContext,
    pub classification: Classification,
    pub quality: QualityLimitations,
    pub top_level: Checklist,
    pub pipeline: Checklist,
}

impl Default for ModelCard {
    fn default() -> Self {
        empty_card()
    }
}

impl ModelCard {
    pub fn is_empty(&self) -> bool {
        self.identification.is_empty()
            && self.case_context.is_empty()
            && self.classification.is_empty()
            && self.quality.is_empty()
            && self.top_level.is_blank()
            && self.pipeline.is_blank()
    }

    /// All vocabulary-backed lists with their document paths.
    pub fn selection_lists(&self) -> [(&'static str, &SelectionList); 5] {
        [
            ("classification.domains", &self.classification.domains),
            ("classification.reasoning", &self.classification.reasoning),
            ("quality.biases", &self.quality.biases),
            ("quality.bias_causes", &self.quality.bias_causes),
            ("quality.error_causes", &self.quality.error_causes),
        ]
    }
}

/// A card with every optional field absent and no checklist entry selected.
pub fn empty_card() -> ModelCard {
    ModelCard {
        identification: Identification::default(),
        case_context: CaseContext::default(),
        classification: Classification::default(),
        quality: QualityLimitations::default(),
        top_level: Checklist::new(ChecklistKind::TopLevel),
        pipeline: Checklist::new(ChecklistKind::Pipeline),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocabulary::VocabularyId;

    #[test]
    fn empty_card_shape() {
        let card = empty_card();
        assert_eq!(card.top_level.entries().len(), 9);
        assert_eq!(card.pipeline.entries().len(), 16);
        assert_eq!(card.top_level.selected().count(), 0);
        assert_eq!(card.pipeline.selected().count(), 0);
        assert!(card.selection_lists().iter().all(|(_, l)| l.is_empty()));
        assert!(card.is_empty());
        assert_eq!(
            card.top_level.entries().last().unwrap().label,
            "Degree of confidence"
        );
        assert_eq!(
            card.pipeline.entry("content_carving").unwrap().label,
            "Content identification (carving)"
        );
    }

    #[test]
    fn selection_list_rejects_duplicates_and_foreign_terms() {
        let mut domains = SelectionList::new(VocabularyId::ForensicClassification);
        assert_eq!(domains.push_raw("Network Forensics"), Ok(true));
        assert_eq!(domains.push_raw("network_forensics"), Ok(false));
        assert_eq!(domains.push_raw("Drone forensics"), Ok(true));
        assert_eq!(domains.push_raw("  DRONE FORENSICS "), Ok(false));
        assert_eq!(domains.push_raw("Drone forensics 2"), Ok(true));
        assert_eq!(domains.len(), 3);

        let bias = canonicalize(VocabularyId::BiasTaxonomy, "No Identified Bias").unwrap();
        assert!(matches!(
            domains.push(bias),
            Err(ModelError::ForeignTerm { .. })
        ));
    }

    #[test]
    fn blank_hypotheses_are_dropped() {
        let mut ctx = CaseContext::default();
        assert!(!ctx.add_hypothesis("   "));
        assert!(ctx.add_hypothesis("Suspect used Tor"));
        assert_eq!(ctx.hypotheses(), ["Suspect used Tor"]);
    }

    #[test]
    fn select_checklist_entry() {
        let mut card = empty_card();
        card.pipeline
            .select("content_carving", Some("PhotoRec pass"))
            .unwrap();
        let entry = card.pipeline.entry("content_carving").unwrap();
        assert!(entry.selected);
        assert_eq!(entry.description.as_deref(), Some("PhotoRec pass"));
        assert!(!card.is_empty());
        assert!(card.pipeline.select("nope", None).is_err());
    }
}

//! Controlled vocabularies for the card's classification, bias, error and
//! usage fields.
//!
//! Every vocabulary is a closed, ordered list of canonical terms. Fields
//! backed by a vocabulary also accept free text through
//! [`TermSelection::Other`].

use std::fmt;
use std::str::FromStr;

use crate::error::ModelError;

/// Stable identifier of one of the six vocabularies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VocabularyId {
    ForensicClassification,
    ReasoningMethodology,
    BiasTaxonomy,
    ErrorCausation,
    UsageContext,
    CauseOfBias,
}

impl VocabularyId {
    pub const ALL: [VocabularyId; 6] = [
        VocabularyId::ForensicClassification,
        VocabularyId::ReasoningMethodology,
        VocabularyId::BiasTaxonomy,
        VocabularyId::ErrorCausation,
        VocabularyId::UsageContext,
        VocabularyId::CauseOfBias,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            VocabularyId::ForensicClassification => "forensic_classification",
            VocabularyId::ReasoningMethodology => "reasoning_methodology",
            VocabularyId::BiasTaxonomy => "bias_taxonomy",
            VocabularyId::ErrorCausation => "error_causation",
            VocabularyId::UsageContext => "usage_context",
            VocabularyId::CauseOfBias => "cause_of_bias",
        }
    }

    /// Human-readable vocabulary title.
    pub fn title(self) -> &'static str {
        match self {
            VocabularyId::ForensicClassification => "Forensic Classification Taxonomy",
            VocabularyId::ReasoningMethodology => "Reasoning Methodology Taxonomy",
            VocabularyId::BiasTaxonomy => "Bias Taxonomy",
            VocabularyId::ErrorCausation => "Error Causation Taxonomy",
            VocabularyId::UsageContext => "DF-MCUse (Usage Context)",
            VocabularyId::CauseOfBias => "Cause of Bias",
        }
    }

    pub fn vocabulary(self) -> Vocabulary {
        let terms = match self {
            VocabularyId::ForensicClassification => FORENSIC_CLASSIFICATION,
            VocabularyId::ReasoningMethodology => REASONING_METHODOLOGY,
            VocabularyId::BiasTaxonomy => BIAS_TAXONOMY,
            VocabularyId::ErrorCausation => ERROR_CAUSATION,
            VocabularyId::UsageContext => USAGE_CONTEXT,
            VocabularyId::CauseOfBias => CAUSE_OF_BIAS,
        };
        Vocabulary { id: self, terms }
    }
}

impl fmt::Display for VocabularyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for VocabularyId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VocabularyId::ALL
            .into_iter()
            .find(|id| id.slug() == s)
            .ok_or_else(|| ModelError::UnknownVocabulary(s.to_string()))
    }
}

/// A canonical vocabulary term.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub vocabulary: VocabularyId,
    pub slug: &'static str,
    pub label: &'static str,
    /// Short gloss, present where the source listing defines the term.
    pub description: Option<&'static str>,
}

/// A vocabulary and its ordered terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vocabulary {
    pub id: VocabularyId,
    pub terms: &'static [Term],
}

impl Vocabulary {
    pub fn by_slug(&self, slug: &str) -> Option<&'static Term> {
        self.terms.iter().find(|t| t.slug == slug)
    }

    pub fn by_label(&self, label: &str) -> Option<&'static Term> {
        self.terms.iter().find(|t| t.label == label)
    }

    /// Exact lookup by label or slug after trimming and case folding.
    pub fn lookup(&self, raw: &str) -> Option<&'static Term> {
        let needle = normalize(raw);
        self.terms
            .iter()
            .find(|t| normalize(t.label) == needle || t.slug == needle)
    }
}

/// Look up a vocabulary by its slug.
pub fn vocabulary(id: &str) -> Result<Vocabulary, ModelError> {
    id.parse::<VocabularyId>().map(VocabularyId::vocabulary)
}

/// Either a canonical term or an "Other" free-text entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermSelection {
    Canonical(&'static Term),
    Other(String),
}

impl TermSelection {
    /// Builds an `Other` selection; the text is stored trimmed.
    pub fn other(text: &str) -> Result<Self, ModelError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(ModelError::EmptyInput);
        }
        Ok(TermSelection::Other(trimmed.to_string()))
    }

    /// Display text: the term label, or the free text for `Other`.
    pub fn label(&self) -> &str {
        match self {
            TermSelection::Canonical(term) => term.label,
            TermSelection::Other(text) => text,
        }
    }

    pub fn is_term(&self, term: &Term) -> bool {
        matches!(self, TermSelection::Canonical(t) if *t == term)
    }

    /// Equality under the duplicate rule: same canonical term, or `Other`
    /// texts equal after trimming and case folding.
    pub fn same_as(&self, other: &TermSelection) -> bool {
        match (self, other) {
            (TermSelection::Canonical(a), TermSelection::Canonical(b)) => a == b,
            (TermSelection::Other(a), TermSelection::Other(b)) => normalize(a) == normalize(b),
            _ => false,
        }
    }
}

impl fmt::Display for TermSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermSelection::Canonical(term) => f.write_str(term.label),
            TermSelection::Other(text) => write!(f, "Other: {text}"),
        }
    }
}

/// Resolve raw input against a vocabulary, falling back to `Other`.
pub fn canonicalize(id: VocabularyId, raw: &str) -> Result<TermSelection, ModelError> {
    if raw.trim().is_empty() {
        return Err(ModelError::EmptyInput);
    }
    match id.vocabulary().lookup(raw) {
        Some(term) => Ok(TermSelection::Canonical(term)),
        None => TermSelection::other(raw),
    }
}

pub(crate) fn normalize(s: &str) -> String {
    s.trim().to_lowercase()
}

macro_rules! terms {
    ($vocab:expr; $( $slug:literal => $label:literal $(: $desc:literal)? ),+ $(,)?) => {
        &[ $( Term {
            vocabulary: $vocab,
            slug: $slug,
            label: $label,
            description: terms!(@desc $($desc)?),
        } ),+ ]
    };
    (@desc $desc:literal) => { Some($desc) };
    (@desc) => { None };
}

static FORENSIC_CLASSIFICATION: &[Term] = terms![VocabularyId::ForensicClassification;
    "computer_forensics" => "Computer Forensics",
    "network_forensics" => "Network Forensics",
    "mobile_device_forensics" => "Mobile Device Forensics",
    "cloud_forensics" => "Cloud Forensics",
    "database_forensics" => "Database Forensics",
    "memory_forensics" => "Memory Forensics",
    "digital_image_forensics" => "Digital Image Forensics",
    "digital_video_audio_forensics" => "Digital Video/Audio Forensics",
    "iot_forensics" => "IoT Forensics",
    "multi_domain" => "Multi-domain (covers multiple types)",
];

static REASONING_METHODOLOGY: &[Term] = terms![VocabularyId::ReasoningMethodology;
    "deductive" => "Deductive Reasoning":
        "Proceeding from general principles to specific conclusions",
    "inductive" => "Inductive Reasoning":
        "Drawing general conclusions from specific observations",
    "abductive" => "Abductive Reasoning":
        "Inferring the best explanation for observed evidence",
    "retroductive" => "Retroductive Reasoning":
        "Refining and validating hypotheses against gathered data",
    "hybrid_mixed" => "Hybrid/Mixed Reasoning":
        "Employing multiple reasoning approaches",
];

static BIAS_TAXONOMY: &[Term] = terms![VocabularyId::BiasTaxonomy;
    "data_bias" => "Data Bias (historical, sampling, selection)",
    "algorithmic_bias" => "Algorithmic Bias (model architecture, optimization)",
    "human_bias" => "Human Bias (cognitive, confirmation, implicit)",
    "deployment_bias" => "Deployment Bias (context mismatch)",
    "reporting_bias" => "Reporting Bias (documentation gaps)",
    "measurement_bias" => "Measurement Bias (proxy variables)",
    "stereotyping_bias" => "Stereotyping Bias (reinforcing stereotypes)",
    "automation_bias" => "Automation Bias (over-reliance on automated results)",
    "no_identified_bias" => "No Identified Bias",
    "multiple_bias_types" => "Multiple Bias Types",
];

static ERROR_CAUSATION: &[Term] = terms![VocabularyId::ErrorCausation;
    "training_error" => "Training Error (underfitting)",
    "validation_error" => "Validation Error (model selection issues)",
    "testing_error" => "Testing Error (generalization failure)",
    "overfitting" => "Overfitting (high variance)",
    "underfitting" => "Underfitting (high bias)",
    "data_quality_issues" => "Data Quality Issues (noise, outliers, mislabeling)",
    "insufficient_training_data" => "Insufficient Training Data",
    "class_imbalance" => "Class Imbalance",
    "feature_engineering_issues" => "Feature Engineering Issues",
    "hyperparameter_misconfiguration" => "Hyperparameter Misconfiguration",
    "model_complexity_mismatch" => "Model Complexity Mismatch",
    "adversarial_attack" => "Adversarial Attack (poisoning, evasion)",
    "concept_drift" => "Concept Drift",
    "tool_calibration_error" => "Tool Calibration Error",
    "human_error_in_analysis" => "Human Error in Analysis",
    "chain_of_custody_issues" => "Chain of Custody Issues",
    "multiple_error_sources" => "Multiple Error Sources",
    "unknown_under_investigation" => "Unknown/Under Investigation",
];

static USAGE_CONTEXT: &[Term] = terms![VocabularyId::UsageContext;
    "standalone" => "Standalone",
    "integrated" => "Integrated",
    "hybrid" => "Hybrid (both standalone and integrated)",
];

static CAUSE_OF_BIAS: &[Term] = terms![VocabularyId::CauseOfBias;
    "unrepresentative_training_data" => "Unrepresentative Training Data",
    "historical_inequities_in_data" => "Historical Inequities in Data",
    "feature_selection_issues" => "Feature Selection Issues",
    "labeling_inconsistencies" => "Labeling Inconsistencies",
    "optimization_objective_mismatch" => "Optimization Objective Mismatch",
    "insufficient_diversity_in_development_team" => "Insufficient Diversity in Development Team",
    "lack_of_domain_expertise" => "Lack of Domain Expertise",
    "temporal_drift" => "Temporal Drift (data age/staleness)",
    "geographic_cultural_limitations" => "Geographic/Cultural Limitations",
    "tool_method_limitations" => "Tool/Method Limitations",
    "multiple_causes" => "Multiple Causes",
    "unknown_under_investigation" => "Unknown/Under Investigation",
];

/// The "No Identified Bias" term, which lint treats specially.
pub fn no_identified_bias() -> &'static Term {
    VocabularyId::BiasTaxonomy
        .vocabulary()
        .by_slug("no_identified_bias")
        .expect("bias taxonomy defines no_identified_bias")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cardinalities() {
        let counts: Vec<usize> = VocabularyId::ALL
            .iter()
            .map(|id| id.vocabulary().terms.len())
            .collect();
        assert_eq!(counts, vec![10, 5, 10, 18, 3, 12]);
    }

    #[test]
    fn slugs_are_unique_snake_case_and_owned() {
        for id in VocabularyId::ALL {
            let vocab = id.vocabulary();
            let slugs: HashSet<_> = vocab.terms.iter().map(|t| t.slug).collect();
            let labels: HashSet<_> = vocab.terms.iter().map(|t| t.label).collect();
            assert_eq!(slugs.len(), vocab.terms.len(), "{id}");
            assert_eq!(labels.len(), vocab.terms.len(), "{id}");
            for term in vocab.terms {
                assert_eq!(term.vocabulary, id);
                assert!(term
                    .slug
                    .bytes()
                    .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_'));
                assert_eq!(vocab.by_slug(term.slug), Some(term));
                assert_eq!(vocab.by_label(term.label), Some(term));
            }
        }
    }

    #[test]
    fn unknown_vocabulary() {
        assert_eq!(
            vocabulary("nonexistent"),
            Err(ModelError::UnknownVocabulary("nonexistent".into()))
        );
        assert_eq!(vocabulary("reasoning_methodology").unwrap().terms.len(), 5);
    }

    #[test]
    fn canonicalize_examples() {
        let sel = canonicalize(VocabularyId::ForensicClassification, "network forensics").unwrap();
        assert_eq!(sel.label(), "Network Forensics");
        assert!(matches!(sel, TermSelection::Canonical(_)));

        assert_eq!(
            canonicalize(VocabularyId::BiasTaxonomy, "   "),
            Err(ModelError::EmptyInput)
        );
        assert_eq!(
            canonicalize(VocabularyId::BiasTaxonomy, "Quantum Bias").unwrap(),
            TermSelection::Other("Quantum Bias".into())
        );
    }

    #[test]
    fn canonicalize_accepts_slugs_but_not_punctuation_stripped_forms() {
        let iot = canonicalize(VocabularyId::ForensicClassification, "  IOT FORENSICS ").unwrap();
        assert_eq!(iot.label(), "IoT Forensics");
        let slug = canonicalize(VocabularyId::ForensicClassification, "iot_forensics").unwrap();
        assert_eq!(slug, iot);
        let stripped = canonicalize(VocabularyId::ForensicClassification, "iotforensics").unwrap();
        assert_eq!(stripped, TermSelection::Other("iotforensics".into()));
    }

    #[test]
    fn other_text_is_trimmed() {
        assert_eq!(
            TermSelection::other("  Drone Forensics\n").unwrap(),
            TermSelection::Other("Drone Forensics".into())
        );
        assert_eq!(TermSelection::other("\t"), Err(ModelError::EmptyInput));
    }
}

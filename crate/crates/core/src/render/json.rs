//! Canonical JSON encoding of a card.
//!
//! Keys follow section order, absent optionals and empty lists are omitted,
//! indentation is two spaces and the document ends with a newline.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::{Meta, RenderOptions};
use crate::model::{Checklist, ModelCard, SelectionList};
use crate::vocabulary::TermSelection;

/// Canonical terms encode as their label; free text as `{"other": text}`.
impl Serialize for TermSelection {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            TermSelection::Canonical(term) => serializer.serialize_str(term.label),
            TermSelection::Other(text) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("other", text)?;
                map.end()
            }
        }
    }
}

impl Serialize for SelectionList {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Serialize)]
struct CardDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    identification: Option<IdentificationDoc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case_context: Option<CaseContextDoc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationDoc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quality: Option<QualityDoc<'a>>,
    top_level: ChecklistDoc<'a>,
    pipeline: ChecklistDoc<'a>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<&'a Meta>,
}

#[derive(Serialize)]
struct IdentificationDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    mmcid: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    version: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    owner: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    usage_context: Option<&'a TermSelection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    layer_stage: Option<&'a str>,
}

#[derive(Serialize)]
struct CaseContextDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    case_statement: Option<&'a str>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    hypotheses: &'a [String],
}

#[derive(Serialize)]
struct ClassificationDoc<'a> {
    #[serde(skip_serializing_if = "SelectionList::is_empty")]
    domains: &'a SelectionList,
    #[serde(skip_serializing_if = "SelectionList::is_empty")]
    reasoning: &'a SelectionList,
}

#[derive(Serialize)]
struct QualityDoc<'a> {
    #[serde(skip_serializing_if = "SelectionList::is_empty")]
    biases: &'a SelectionList,
    #[serde(skip_serializing_if = "SelectionList::is_empty")]
    bias_causes: &'a SelectionList,
    #[serde(skip_serializing_if = "Option::is_none")]
    errors_observed: Option<&'a str>,
    #[serde(skip_serializing_if = "SelectionList::is_empty")]
    error_causes: &'a SelectionList,
}

struct ChecklistDoc<'a>(&'a Checklist);

impl Serialize for ChecklistDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct EntryDoc<'a> {
            key: &'a str,
            label: &'a str,
            selected: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            description: Option<&'a str>,
        }
        serializer.collect_seq(self.0.entries().iter().map(|e| EntryDoc {
            key: e.key,
            label: e.label,
            selected: e.selected,
            description: e.description.as_deref(),
        }))
    }
}

fn card_doc<'a>(card: &'a ModelCard, meta: Option<&'a Meta>) -> CardDoc<'a> {
    let id = &card.identification;
    let ctx = &card.case_context;
    let class = &card.classification;
    let quality = &card.quality;
    CardDoc {
        identification: (!id.is_empty()).then_some(IdentificationDoc {
            mmcid: id.mmcid.as_deref(),
            version: id.version.as_deref(),
            owner: id.owner.as_deref(),
            usage_context: id.usage_context.as_ref(),
            layer_stage: id.layer_stage.as_deref(),
        }),
        case_context: (!ctx.is_empty()).then_some(CaseContextDoc {
            case_statement: ctx.case_statement.as_deref(),
            hypotheses: ctx.hypotheses(),
        }),
        classification: (!class.is_empty()).then_some(ClassificationDoc {
            domains: &class.domains,
            reasoning: &class.reasoning,
        }),
        quality: (!quality.is_empty()).then_some(QualityDoc {
            biases: &quality.biases,
            bias_causes: &quality.bias_causes,
            errors_observed: quality.errors_observed.as_deref(),
            error_causes: &quality.error_causes,
        }),
        top_level: ChecklistDoc(&card.top_level),
        pipeline: ChecklistDoc(&card.pipeline),
        meta,
    }
}

fn pretty<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("card documents always serialize");
    out.push(b'\n');
    out
}

/// Renders the full card document, including the trailing `meta` block.
pub fn to_json(card: &ModelCard, opts: &RenderOptions) -> Vec<u8> {
    let meta = Meta::from_options(opts);
    pretty(&card_doc(card, Some(&meta)))
}

/// Card content without `meta`. Independent of render options, so stable
/// across generation times.
pub fn to_json_body(card: &ModelCard) -> Vec<u8> {
    pretty(&card_doc(card, None))
}

/// Encodes a card as a [`serde_json::Value`] without `meta`.
pub fn to_value(card: &ModelCard) -> serde_json::Value {
    serde_json::to_value(card_doc(card, None)).expect("card documents always serialize")
}

//! Card outputs: canonical JSON, Markdown and the JSON Schema document.

mod json;
mod markdown;
mod schema;

use chrono::{DateTime, SubsecRound, Utc};
use serde::Serialize;

pub use json::{to_json, to_json_body, to_value};
pub use markdown::to_markdown;
pub use schema::{emit_schema, schema_value};

pub const SCHEMA_VERSION: &str = "1.0-beta";
pub const GENERATOR_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Citations of the two works the card format builds on.
pub const REFERENCES: [&str; 2] = [
    "Mitchell, M., Wu, S., Zaldivar, A., Barnes, P., Vasserman, L., Hutchinson, B., Spitzer, E., \
     Raji, I. D., & Gebru, T. (2019). Model Cards for Model Reporting. Proceedings of the \
     Conference on Fairness, Accountability, and Transparency, 220-229.",
    "Hargreaves, C., Nelson, A., & Casey, E. (2024). An abstract model for digital forensic \
     analysis tools - A foundation for systematic error mitigation analysis. Forensic Science \
     International: Digital Investigation, 48.",
];

const TIMESTAMP_FORMAT: &str = "%Y-%m-%dT%H:%M:%SZ";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    /// Generation instant. `None` means "now".
    pub timestamp: Option<DateTime<Utc>>,
    pub generator_version: String,
    pub schema_version: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            timestamp: None,
            generator_version: GENERATOR_VERSION.to_string(),
            schema_version: SCHEMA_VERSION.to_string(),
        }
    }
}

impl RenderOptions {
    pub fn at(timestamp: DateTime<Utc>) -> Self {
        Self {
            timestamp: Some(timestamp),
            ..Self::default()
        }
    }

    /// Pins the timestamp (to the current second if unset).
    pub fn resolved(&self) -> Self {
        Self {
            timestamp: Some(self.timestamp.unwrap_or_else(Utc::now).trunc_subsecs(0)),
            ..self.clone()
        }
    }

    fn timestamp_string(&self) -> String {
        self.timestamp
            .unwrap_or_else(Utc::now)
            .format(TIMESTAMP_FORMAT)
            .to_string()
    }
}

/// Parses a `YYYY-MM-DDThh:mm:ssZ` (or any RFC 3339) instant.
pub fn parse_timestamp(s: &str) -> Result<DateTime<Utc>, chrono::ParseError> {
    DateTime::parse_from_rfc3339(s).map(|t| t.with_timezone(&Utc).trunc_subsecs(0))
}

#[derive(Debug, Clone, Serialize)]
pub(crate) struct Meta {
    timestamp: String,
    generator_version: String,
    schema_version: String,
    references: [&'static str; 2],
}

impl Meta {
    fn from_options(opts: &RenderOptions) -> Self {
        Meta {
            timestamp: opts.timestamp_string(),
            generator_version: opts.generator_version.clone(),
            schema_version: opts.schema_version.clone(),
            references: REFERENCES,
        }
    }
}

/// Both outputs of one generation, sharing a single timestamp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedCard {
    pub json_bytes: Vec<u8>,
    pub markdown_text: String,
    pub options_used: RenderOptions,
}

pub fn render(card: &crate::model::ModelCard, opts: &RenderOptions) -> RenderedCard {
    let options_used = opts.resolved();
    RenderedCard {
        json_bytes: to_json(card, &options_used),
        markdown_text: to_markdown(card, &options_used),
        options_used,
    }
}

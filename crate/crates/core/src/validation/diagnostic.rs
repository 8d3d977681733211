use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Stable diagnostic codes. The letter after `DFMC-` encodes the severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Code {
    /// Malformed MMCID.
    #[serde(rename = "DFMC-E001")]
    MalformedMmcid,
    /// Input is not a JSON card document at all.
    #[serde(rename = "DFMC-E002")]
    MalformedDocument,
    /// Document has the wrong shape: bad types, unknown fields, checklist keys.
    #[serde(rename = "DFMC-E003")]
    InvalidStructure,
    /// More than three selections in a vocabulary-backed list.
    #[serde(rename = "DFMC-W001")]
    TooManySelections,
    /// Description on a checklist entry that is not selected.
    #[serde(rename = "DFMC-W002")]
    DescriptionOnUnselected,
    /// "No Identified Bias" selected alongside other bias terms.
    #[serde(rename = "DFMC-W003")]
    NoBiasConflict,
    /// Label not found in the vocabulary; kept as an "Other" entry.
    #[serde(rename = "DFMC-W004")]
    UnknownTerm,
    /// Repeated selection dropped while parsing.
    #[serde(rename = "DFMC-W005")]
    DuplicateSelection,
    /// Card documents nothing.
    #[serde(rename = "DFMC-I001")]
    EmptyCard,
}

impl Code {
    pub const ALL: [Code; 9] = [
        Code::MalformedMmcid,
        Code::MalformedDocument,
        Code::InvalidStructure,
        Code::TooManySelections,
        Code::DescriptionOnUnselected,
        Code::NoBiasConflict,
        Code::UnknownTerm,
        Code::DuplicateSelection,
        Code::EmptyCard,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Code::MalformedMmcid => "DFMC-E001",
            Code::MalformedDocument => "DFMC-E002",
            Code::InvalidStructure => "DFMC-E003",
            Code::TooManySelections => "DFMC-W001",
            Code::DescriptionOnUnselected => "DFMC-W002",
            Code::NoBiasConflict => "DFMC-W003",
            Code::UnknownTerm => "DFMC-W004",
            Code::DuplicateSelection => "DFMC-W005",
            Code::EmptyCard => "DFMC-I001",
        }
    }

    pub fn severity(self) -> Severity {
        match self.as_str().as_bytes()[5] {
            b'E' => Severity::Error,
            b'W' => Severity::Warning,
            _ => Severity::Info,
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single validation or lint finding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: Code,
    /// Dot-separated path into the card document, `card` for the whole card.
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: Code, path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            severity: code.severity(),
            code,
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// `SEVERITY CODE path: message`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            self.severity.as_str().to_uppercase(),
            self.code,
            self.path,
            self.message
        )
    }
}

pub fn has_errors(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().any(Diagnostic::is_error)
}

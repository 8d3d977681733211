use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use dfmc_core::validation::{Code, Diagnostic};
use serde::{Deserialize, Serialize};

/// Error body returned by every failing endpoint.
///
/// `code` is a diagnostic code for card problems (`DFMC-E002`, `DFMC-E003`,
/// `DFMC-E001`) and a `DFMC-E1xx` code for request-level problems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub status: u16,
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Diagnostic>,
}

pub const BAD_PARAMETER: &str = "DFMC-E100";
pub const NOT_FOUND: &str = "DFMC-E101";
pub const CONFLICT: &str = "DFMC-E102";
pub const STORAGE: &str = "DFMC-E103";

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        Self {
            status: status.as_u16(),
            code: code.to_string(),
            message: message.into(),
            diagnostics: Vec::new(),
        }
    }

    pub fn bad_parameter(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, BAD_PARAMETER, message)
    }

    pub fn not_found(message: impl Into<String>) -> Self {
        Self::new(StatusCode::NOT_FOUND, NOT_FOUND, message)
    }

    pub fn conflict(message: impl Into<String>) -> Self {
        Self::new(StatusCode::CONFLICT, CONFLICT, message)
    }

    pub fn storage(message: impl Into<String>) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, STORAGE, message)
    }

    /// Maps card diagnostics to 400 (not a JSON document) or 422 (bad card).
    pub fn from_diagnostics(diagnostics: Vec<Diagnostic>) -> Self {
        let first_error = diagnostics.iter().find(|d| d.is_error());
        let (status, code) = match first_error.map(|d| d.code) {
            Some(Code::MalformedDocument) => (StatusCode::BAD_REQUEST, Code::MalformedDocument),
            Some(code) => (StatusCode::UNPROCESSABLE_ENTITY, code),
            None => (StatusCode::UNPROCESSABLE_ENTITY, Code::InvalidStructure),
        };
        let message = first_error
            .map(|d| format!("{}: {}", d.path, d.message))
            .unwrap_or_else(|| "card rejected".into());
        Self {
            diagnostics,
            ..Self::new(status, code.as_str(), message)
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self)).into_response()
    }
}

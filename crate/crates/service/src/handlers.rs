use std::collections::HashMap;
use std::sync::OnceLock;

use axum::body::Bytes;
use axum::extract::{RawQuery, State};
use axum::http::{header, Method, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::Json;
use dfmc_core::render::{self, emit_schema, parse_timestamp, RenderOptions};
use dfmc_core::store::{self, StoreError};
use dfmc_core::validation::{check_document, has_errors, Diagnostic};
use dfmc_core::vocabulary::{canonicalize, VocabularyId};
use dfmc_core::{ModelCard, SelectionList};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{ApiError, AppState};

type ApiResult<T> = Result<T, ApiError>;

fn query_map(raw: Option<String>) -> HashMap<String, String> {
    raw.map(|q| form_urlencoded::parse(q.as_bytes()).into_owned().collect())
        .unwrap_or_default()
}

fn json_bytes(body: Vec<u8>) -> Response {
    ([(header::CONTENT_TYPE, "application/json")], body).into_response()
}

/// Parses and lints a card, rejecting any error-severity finding.
fn accept_card(body: &[u8]) -> ApiResult<(ModelCard, Vec<Diagnostic>)> {
    match check_document(body) {
        (Some(card), diagnostics) if !has_errors(&diagnostics) => Ok((card, diagnostics)),
        (_, diagnostics) => Err(ApiError::from_diagnostics(diagnostics)),
    }
}

pub async fn vocabularies() -> Response {
    static BODY: OnceLock<Vec<u8>> = OnceLock::new();
    let body = BODY.get_or_init(|| {
        let map: serde_json::Map<String, Value> = VocabularyId::ALL
            .iter()
            .map(|id| {
                let terms: Vec<Value> = id
                    .vocabulary()
                    .terms
                    .iter()
                    .map(|t| {
                        let mut term = json!({ "slug": t.slug, "label": t.label });
                        if let Some(desc) = t.description {
                            term["description"] = json!(desc);
                        }
                        term
                    })
                    .collect();
                (id.slug().to_string(), Value::Array(terms))
            })
            .collect();
        serde_json::to_vec(&map).expect("vocabularies serialize")
    });
    json_bytes(body.clone())
}

pub async fn schema() -> Response {
    json_bytes(emit_schema())
}

#[derive(Serialize)]
struct ValidateResponse {
    diagnostics: Vec<Diagnostic>,
    valid: bool,
}

pub async fn validate(body: Bytes) -> ApiResult<Response> {
    match check_document(&body) {
        (Some(_), diagnostics) => {
            let valid = !has_errors(&diagnostics);
            Ok(Json(ValidateResponse { diagnostics, valid }).into_response())
        }
        (None, diagnostics) => Err(ApiError::from_diagnostics(diagnostics)),
    }
}

#[derive(Clone, Copy)]
enum Format {
    Markdown,
    Json,
}

pub async fn render(RawQuery(query): RawQuery, body: Bytes) -> ApiResult<Response> {
    let params = query_map(query);
    let format = match params.get("format").map(String::as_str) {
        Some("markdown") | Some("md") => Format::Markdown,
        Some("json") => Format::Json,
        Some(other) => {
            return Err(ApiError::bad_parameter(format!(
                "unsupported format `{other}`; use markdown or json"
            )))
        }
        None => return Err(ApiError::bad_parameter("missing `format` parameter")),
    };
    let mut opts = RenderOptions::default();
    if let Some(ts) = params.get("timestamp") {
        let parsed = parse_timestamp(ts)
            .map_err(|e| ApiError::bad_parameter(format!("invalid timestamp `{ts}`: {e}")))?;
        opts.timestamp = Some(parsed);
    }
    let (card, _) = accept_card(&body)?;
    let opts = opts.resolved();
    Ok(match format {
        Format::Json => json_bytes(render::to_json(&card, &opts)),
        Format::Markdown => (
            [(header::CONTENT_TYPE, "text/markdown; charset=utf-8")],
            render::to_markdown(&card, &opts),
        )
            .into_response(),
    })
}

pub async fn save_card(State(state): State<AppState>, body: Bytes) -> ApiResult<Response> {
    let (card, _) = accept_card(&body)?;
    let loc = state.store.clone();
    let saved = tokio::task::spawn_blocking(move || {
        store::save(&loc, &card, &RenderOptions::default(), false)
    })
    .await
    .map_err(|e| ApiError::storage(format!("save task failed: {e}")))?;
    match saved {
        Ok(id) => Ok((StatusCode::CREATED, Json(json!({ "id": id.as_str() }))).into_response()),
        Err(StoreError::Conflict(id)) => Err(ApiError::conflict(format!(
            "a card with id `{id}` already exists"
        ))),
        Err(StoreError::RejectedInvalid(diagnostics)) => {
            Err(ApiError::from_diagnostics(diagnostics))
        }
        Err(e) => Err(ApiError::storage(e.to_string())),
    }
}

#[derive(Serialize)]
struct ListedCard {
    id: String,
    domains: SelectionList,
}

pub async fn list_cards(
    State(state): State<AppState>,
    RawQuery(query): RawQuery,
) -> ApiResult<Response> {
    let params = query_map(query);
    let filter = match params.get("domain") {
        Some(raw) => Some(
            canonicalize(VocabularyId::ForensicClassification, raw)
                .map_err(|_| ApiError::bad_parameter("`domain` must not be empty"))?,
        ),
        None => None,
    };
    let loc = state.store.clone();
    let listing = tokio::task::spawn_blocking(move || store::list_cards(&loc, filter.as_ref()))
        .await
        .map_err(|e| ApiError::storage(format!("list task failed: {e}")))?
        .map_err(|e| ApiError::storage(e.to_string()))?;
    for skipped in &listing.skipped {
        tracing::warn!(path = %skipped.path.display(), reason = %skipped.reason, "skipped stored card");
    }
    let cards: Vec<ListedCard> = listing
        .cards
        .into_iter()
        .map(|c| ListedCard {
            id: c.id.to_string(),
            domains: c.classification.domains,
        })
        .collect();
    Ok(Json(cards).into_response())
}

pub async fn not_found(method: Method, uri: Uri) -> ApiError {
    ApiError::not_found(format!("no endpoint for {method} {}", uri.path()))
}

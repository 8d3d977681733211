//! HTTP/JSON API for model cards.
//!
//! All endpoints live under `/api/v1`:
//!
//! | method | path            | purpose                                   |
//! |--------|-----------------|-------------------------------------------|
//! | GET    | `/vocabularies` | every controlled vocabulary, in order     |
//! | GET    | `/schema`       | the card JSON Schema                      |
//! | POST   | `/validate`     | parse and lint a card                     |
//! | POST   | `/render`       | render a card (`?format=markdown\|json`)  |
//! | POST   | `/cards`        | store a card                              |
//! | GET    | `/cards`        | list stored cards (`?domain=<term>`)      |
//!
//! Errors are always an [`ApiError`] body.

mod error;
mod handlers;

use std::sync::Arc;

use axum::http::Method;
use axum::routing::{get, post};
use axum::Router;
use dfmc_core::store::StoreLocation;
use tokio::net::TcpListener;
use tower_http::cors::{Any, CorsLayer};
use tower_http::trace::TraceLayer;

pub use error::ApiError;

pub const DEFAULT_PORT: u16 = 8787;

#[derive(Debug, Clone)]
pub struct AppState {
    pub store: Arc<StoreLocation>,
}

pub fn router(store: StoreLocation) -> Router {
    let state = AppState {
        store: Arc::new(store),
    };
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers(Any);
    let api = Router::new()
        .route("/vocabularies", get(handlers::vocabularies))
        .route("/schema", get(handlers::schema))
        .route("/validate", post(handlers::validate))
        .route("/render", post(handlers::render))
        .route(
            "/cards",
            get(handlers::list_cards).post(handlers::save_card),
        );
    Router::new()
        .nest("/api/v1", api)
        .fallback(handlers::not_found)
        .method_not_allowed_fallback(handlers::not_found)
        .layer(cors)
        .layer(TraceLayer::new_for_http())
        .with_state(state)
}

/// Serves the API on an already-bound listener until the future is dropped.
pub async fn serve(listener: TcpListener, store: StoreLocation) -> std::io::Result<()> {
    if let Ok(addr) = listener.local_addr() {
        tracing::info!(%addr, root = %store.root().display(), "serving model card API");
    }
    axum::serve(listener, router(store)).await
}

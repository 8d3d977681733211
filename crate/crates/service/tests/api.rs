use axum::body::Body;
use axum::http::{header, Request, StatusCode};
use axum::Router;
use dfmc_core::store::StoreLocation;
use dfmc_core::{empty_card, to_json, RenderOptions};
use dfmc_service::{router, ApiError};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

struct Response {
    status: StatusCode,
    content_type: String,
    body: Vec<u8>,
}

impl Response {
    fn json(&self) -> Value {
        serde_json::from_slice(&self.body)
            .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&self.body)))
    }

    fn api_error(&self) -> ApiError {
        serde_json::from_slice(&self.body).unwrap()
    }
}

async fn call(app: &Router, method: &str, uri: &str, body: impl Into<Body>) -> Response {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header(header::CONTENT_TYPE, "application/json")
        .body(body.into())
        .unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    let content_type = res
        .headers()
        .get(header::CONTENT_TYPE)
        .map(|v| v.to_str().unwrap().to_string())
        .unwrap_or_default();
    let body = res.into_body().collect().await.unwrap().to_bytes().to_vec();
    Response {
        status,
        content_type,
        body,
    }
}

fn app() -> (tempfile::TempDir, Router) {
    let dir = tempfile::tempdir().unwrap();
    let loc = StoreLocation::open(dir.path()).unwrap();
    (dir, router(loc))
}

fn empty_body() -> Vec<u8> {
    to_json(&empty_card(), &RenderOptions::default())
}

fn card_body(value: Value) -> String {
    value.to_string()
}

#[tokio::test]
async fn vocabularies_are_complete_and_stable() {
    let (_dir, app) = app();
    let first = call(&app, "GET", "/api/v1/vocabularies", Body::empty()).await;
    assert_eq!(first.status, StatusCode::OK);
    let v = first.json();
    assert_eq!(v.as_object().unwrap().len(), 6);
    assert_eq!(v["reasoning_methodology"].as_array().unwrap().len(), 5);
    assert_eq!(v["forensic_classification"].as_array().unwrap().len(), 10);
    assert_eq!(
        v["usage_context"][2]["label"],
        "Hybrid (both standalone and integrated)"
    );
    let second = call(&app, "GET", "/api/v1/vocabularies", Body::empty()).await;
    assert_eq!(first.body, second.body);
}

#[tokio::test]
async fn validate_endpoint() {
    let (_dir, app) = app();
    let res = call(&app, "POST", "/api/v1/validate", empty_body()).await;
    assert_eq!(res.status, StatusCode::OK);
    let v = res.json();
    assert_eq!(v["valid"], true);
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
    assert_eq!(v["diagnostics"][0]["code"], "DFMC-I001");

    let four = card_body(json!({"classification": {"domains": [
        "Network Forensics", "Cloud Forensics", "IoT Forensics", "Memory Forensics"]}}));
    let v = call(&app, "POST", "/api/v1/validate", four).await.json();
    assert_eq!(v["valid"], true);
    assert_eq!(v["diagnostics"][0]["code"], "DFMC-W001");
    assert_eq!(v["diagnostics"][0]["path"], "classification.domains");

    let bad_id = card_body(json!({"identification": {"mmcid": "DF-MC-2025-1"}}));
    let v = call(&app, "POST", "/api/v1/validate", bad_id).await.json();
    assert_eq!(v["valid"], false);
    assert_eq!(v["diagnostics"][0]["code"], "DFMC-E001");

    let res = call(&app, "POST", "/api/v1/validate", "not json").await;
    assert_eq!(res.status, StatusCode::BAD_REQUEST);
    assert_eq!(res.api_error().code, "DFMC-E002");

    let res = call(&app, "POST", "/api/v1/validate", r#"{"top_level": 3}"#).await;
    assert_eq!(res.status, StatusCode::UNPROCESSABLE_ENTITY);
    let err = res.api_error();
    assert_eq!(err.status, 422);
    assert_eq!(err.code, "DFMC-E003");
    assert_eq!(err.diagnostics[0].path, "top_level");
}

#[tokio::test]
async fn render_endpoint() {
    let (_dir, app) = app();
    let res = call(
        &app,
        "POST",
        "/api/v1/render?format=markdown&timestamp=2025-12-01T12:00:00Z",
        empty_body(),
    )
    .await;
    assert_eq!(res.status, StatusCode::OK);
    assert!(res.content_type.starts_with("text/markdown"));
    let md = String::from_utf8(res.body.clone()).unwrap();
    assert_eq!(md.lines().filter(|l| l.starts_with("## ")).count(), 6);
    assert!(md.contains("2025-12-01T12:00:00Z"));
    assert!(md.contains("**Schema version:** 1.0-beta"));

    let again = call(
        &app,
        "POST",
        "/api/v1/render?format=markdown&timestamp=2025-12-01T12:00:00Z",
        empty_body(),
    )
    .await;
    assert_eq!(again.body, res.body);

    let res = call(&app, "POST", "/api/v1/render?format=json", empty_body()).await;
    assert_eq!(res.status, StatusCode::OK);
    assert_eq!(res.content_type, "application/json");
    assert_eq!(res.json()["meta"]["schema_version"], "1.0-beta");

    for uri in [
        "/api/v1/render?format=pdf",
        "/api/v1/render",
        "/api/v1/render?format=json&timestamp=soon",
    ] {
        let res = call(&app, "POST", uri, empty_body()).await;
        assert_eq!(res.status, StatusCode::BAD_REQUEST, "{uri}");
        assert_eq!(res.api_error().code, "DFMC-E100");
    }

    let bad_id = card_body(json!({"identification": {"mmcid": "nope"}}));
    let res = call(&app, "POST", "/api/v1/render?format=json", bad_id).await;
    assert_eq!(res.status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(res.api_error().code, "DFMC-E001");
}

#[tokio::test]
async fn cards_endpoints() {
    let (dir, app) = app();
    let res = call(&app, "GET", "/api/v1/cards", Body::empty()).await;
    assert_eq!(res.status, StatusCode::OK);
    assert_eq!(res.json(), json!([]));

    let net = card_body(json!({
        "identification": {"mmcid": "DF-MC-2025-001"},
        "classification": {"domains": ["Network Forensics", {"other": "Drone Forensics"}]}
    }));
    let cloud = card_body(json!({
        "identification": {"mmcid": "DF-MC-2025-002"},
        "classification": {"domains": ["Cloud Forensics"]}
    }));
    let res = call(&app, "POST", "/api/v1/cards", net.clone()).await;
    assert_eq!(res.status, StatusCode::CREATED);
    assert_eq!(res.json(), json!({"id": "DF-MC-2025-001"}));
    assert!(dir.path().join("DF-MC-2025-001.json").is_file());

    let res = call(&app, "POST", "/api/v1/cards", net).await;
    assert_eq!(res.status, StatusCode::CONFLICT);
    assert_eq!(res.api_error().status, 409);

    assert_eq!(
        call(&app, "POST", "/api/v1/cards", cloud).await.status,
        StatusCode::CREATED
    );

    let all = call(&app, "GET", "/api/v1/cards", Body::empty())
        .await
        .json();
    assert_eq!(all.as_array().unwrap().len(), 2);
    assert_eq!(all[0]["id"], "DF-MC-2025-001");
    assert_eq!(
        all[0]["domains"],
        json!(["Network Forensics", {"other": "Drone Forensics"}])
    );

    let filtered = call(
        &app,
        "GET",
        "/api/v1/cards?domain=Network+Forensics",
        Body::empty(),
    )
    .await
    .json();
    assert_eq!(
        filtered,
        json!([{"id": "DF-MC-2025-001", "domains": ["Network Forensics", {"other": "Drone Forensics"}]}])
    );

    let res = call(&app, "GET", "/api/v1/cards?domain=", Body::empty()).await;
    assert_eq!(res.status, StatusCode::BAD_REQUEST);

    let bad = card_body(json!({"identification": {"mmcid": "DF-MC-99-1"}}));
    assert_eq!(
        call(&app, "POST", "/api/v1/cards", bad).await.status,
        StatusCode::UNPROCESSABLE_ENTITY
    );
}

#[tokio::test]
async fn storage_failure_is_500() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().join("store");
    let app = router(StoreLocation::create(&root).unwrap());
    std::fs::remove_dir(&root).unwrap();
    let res = call(&app, "GET", "/api/v1/cards", Body::empty()).await;
    assert_eq!(res.status, StatusCode::INTERNAL_SERVER_ERROR);
    assert_eq!(res.api_error().code, "DFMC-E103");
}

#[tokio::test]
async fn unknown_routes_use_error_shape() {
    let (_dir, app) = app();
    for (method, uri) in [
        ("GET", "/nope"),
        ("GET", "/api/v1/nope"),
        ("DELETE", "/api/v1/cards"),
    ] {
        let res = call(&app, method, uri, Body::empty()).await;
        assert_eq!(res.status, StatusCode::NOT_FOUND, "{method} {uri}");
        assert_eq!(res.api_error().status, 404);
    }
}

#[tokio::test]
async fn cors_preflight_allowed() {
    let (_dir, app) = app();
    let req = Request::builder()
        .method("OPTIONS")
        .uri("/api/v1/validate")
        .header(header::ORIGIN, "http://localhost:5173")
        .header(header::ACCESS_CONTROL_REQUEST_METHOD, "POST")
        .body(Body::empty())
        .unwrap();
    let res = app.oneshot(req).await.unwrap();
    assert!(res.status().is_success());
    assert_eq!(res.headers()[header::ACCESS_CONTROL_ALLOW_ORIGIN], "*");
}

#[tokio::test]
async fn schema_endpoint_serves_emitted_schema() {
    let (_dir, app) = app();
    let res = call(&app, "GET", "/api/v1/schema", Body::empty()).await;
    assert_eq!(res.status, StatusCode::OK);
    assert_eq!(res.body, dfmc_core::emit_schema());
}

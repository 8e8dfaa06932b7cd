//! Drive the HTTP API in-process: catalog a data root, fetch a context
//! window, run a match and search for a phrase.
//!
//! cargo run -p statescope-server --example query_service

use axum::body::Body;
use axum::http::{Method, Request};
use http_body_util::BodyExt;
use statescope::dataset::save_dataset;
use statescope::synth::paren_dataset;
use statescope_server::api::router;
use statescope_server::Catalog;
use tower::ServiceExt;

async fn call(app: &axum::Router, req: Request<Body>) -> anyhow::Result<String> {
    let resp = app.clone().oneshot(req).await?;
    let status = resp.status();
    let body = resp.into_body().collect().await?.to_bytes();
    Ok(format!("{status} {}", String::from_utf8_lossy(&body)))
}

fn abbreviate(s: String) -> String {
    if s.len() > 300 {
        format!("{}...", &s[..300])
    } else {
        s
    }
}

#[tokio::main]
async fn main() -> anyhow::Result<()> {
    let root = tempfile::tempdir()?;
    save_dataset(&paren_dataset(42, 2_000, 8)?, root.path().join("paren"))?;
    let app = router(Catalog::load(root.path()));

    let get = |uri: &str| Request::builder().uri(uri).body(Body::empty()).unwrap();
    println!("{}\n", abbreviate(call(&app, get("/api/info")).await?));
    println!("{}\n", abbreviate(call(&app, get("/api/context?dataset=paren-42&pos=2&left=5&right=5&tracks=level")).await?));

    let body = r#"{"dataset":"paren-42","source_id":"states","start":10,"end":11,"threshold":0.5,"top_k":3,"tracks":["level"]}"#;
    let req = Request::builder()
        .method(Method::POST)
        .uri("/api/match")
        .header("content-type", "application/json")
        .body(Body::from(body))?;
    println!("{}\n", call(&app, req).await?);

    println!("{}", call(&app, get("/api/search?dataset=paren-42&q=(+(+(")).await?);
    Ok(())
}

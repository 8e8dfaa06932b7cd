//! JSON endpoints over a [`Catalog`].
//!
//! | route | purpose |
//! |---|---|
//! | `GET /api/info` | datasets, sources, tracks, invalid configs |
//! | `GET /api/context` | tokens, state values and track labels for a window |
//! | `POST /api/match` | selection plus ranked matches |
//! | `GET /api/search` | exact phrase positions |
//!
//! Errors are `{"error": kind, "message": ...}` with 400 for malformed
//! requests, 404 for unknown datasets, sources or routes, 422 for an empty
//! selection and 500 when the data root could not be read.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use axum::extract::{Query, State};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{body::Bytes, Json, Router};
use serde::{Deserialize, Serialize};
use statescope::dataset::AnnotationTrack;
use statescope::engine::{run_match, search_phrase, EffectiveParams, MatchParams, SelectionSpec, StateSet};
use statescope::{Dataset, StateMatrix};
use tower_http::cors::CorsLayer;

use crate::catalog::{Catalog, CatalogError, DatasetInfo, InvalidConfig};
use crate::error::ApiError;

/// Widest window `/api/context` serves.
pub const MAX_CONTEXT: usize = 1000;
/// Positions listed by `/api/search`; `total` still counts all of them.
pub const SEARCH_LIMIT: usize = 100;
pub const DEFAULT_CONTEXT_SIDE: usize = 50;

type Shared = Arc<Result<Catalog, ApiError>>;

/// Builds the service. A catalog error is kept and reported as HTTP 500 by
/// every endpoint.
pub fn router(catalog: Result<Catalog, CatalogError>) -> Router {
    let state: Shared = Arc::new(catalog.map_err(|e| ApiError::internal(e.to_string())));
    Router::new()
        .route("/api/info", get(info))
        .route("/api/context", get(context))
        .route("/api/match", post(match_ranges))
        .route("/api/search", get(search))
        .fallback(|| async { ApiError::not_found("no such endpoint") })
        .layer(CorsLayer::permissive())
        .with_state(state)
}

fn catalog(state: &Shared) -> Result<&Catalog, ApiError> {
    state.as_ref().as_ref().map_err(Clone::clone)
}

fn dataset(catalog: &Catalog, name: &str) -> Result<Arc<Dataset>, ApiError> {
    catalog
        .get(name)
        .cloned()
        .ok_or_else(|| ApiError::not_found(format!("unknown dataset {name:?}")))
}

fn source<'a>(ds: &'a Dataset, id: &str) -> Result<&'a StateMatrix, ApiError> {
    ds.source(id)
        .ok_or_else(|| ApiError::not_found(format!("dataset {:?} has no source {id:?}", ds.name())))
}

fn tracks<'a>(ds: &'a Dataset, names: &[String]) -> Result<Vec<&'a AnnotationTrack>, ApiError> {
    names
        .iter()
        .map(|n| ds.track(n).ok_or_else(|| ApiError::bad_request(format!("unknown track {n:?}"))))
        .collect()
}

#[derive(Serialize)]
struct TrackWindow {
    name: String,
    ids: Vec<i32>,
    labels: Vec<String>,
}

fn track_window(track: &AnnotationTrack, start: usize, end: usize) -> TrackWindow {
    TrackWindow {
        name: track.name().to_string(),
        ids: track.ids()[start..=end].to_vec(),
        labels: (start..=end).map(|t| track.label_at(t)).collect(),
    }
}

#[derive(Serialize)]
struct InfoResponse {
    root: String,
    datasets: Vec<DatasetInfo>,
    invalid: Vec<InvalidConfig>,
}

async fn info(State(state): State<Shared>) -> Result<Json<InfoResponse>, ApiError> {
    let catalog = catalog(&state)?;
    Ok(Json(InfoResponse {
        root: catalog.root().display().to_string(),
        datasets: catalog.datasets().to_vec(),
        invalid: catalog.invalid().to_vec(),
    }))
}

type Params = Query<BTreeMap<String, String>>;

fn required<'a>(q: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str, ApiError> {
    q.get(key)
        .map(String::as_str)
        .ok_or_else(|| ApiError::bad_request(format!("missing parameter {key:?}")))
}

fn number<T: FromStr>(q: &BTreeMap<String, String>, key: &str, default: Option<T>) -> Result<T, ApiError> {
    match (q.get(key), default) {
        (Some(v), _) => v
            .trim()
            .parse()
            .map_err(|_| ApiError::bad_request(format!("parameter {key:?} must be a non-negative integer, got {v:?}"))),
        (None, Some(d)) => Ok(d),
        (None, None) => Err(ApiError::bad_request(format!("missing parameter {key:?}"))),
    }
}

fn list(q: &BTreeMap<String, String>, key: &str) -> Vec<String> {
    q.get(key)
        .map(|v| v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect())
        .unwrap_or_default()
}

#[derive(Serialize)]
struct SourceWindow<'a> {
    source_id: &'a str,
    values: Vec<&'a [f32]>,
}

#[derive(Serialize)]
struct ContextResponse<'a> {
    dataset: &'a str,
    pos: usize,
    left: usize,
    right: usize,
    start: usize,
    end: usize,
    tokens: Vec<String>,
    states: Vec<SourceWindow<'a>>,
    tracks: Vec<TrackWindow>,
}

async fn context(State(state): State<Shared>, Query(q): Params) -> Result<Response, ApiError> {
    let catalog = catalog(&state)?;
    let ds = dataset(catalog, required(&q, "dataset")?)?;
    let pos: usize = number(&q, "pos", None)?;
    let left: usize = number(&q, "left", Some(DEFAULT_CONTEXT_SIDE))?;
    let right: usize = number(&q, "right", Some(DEFAULT_CONTEXT_SIDE))?;
    let t = ds.num_timesteps();
    if pos >= t {
        return Err(ApiError::bad_request(format!("pos {pos} is outside [0, {}]", t - 1)));
    }
    let width = left.saturating_add(right).saturating_add(1);
    if width > MAX_CONTEXT {
        return Err(ApiError::bad_request(format!(
            "window of {width} timesteps exceeds the limit of {MAX_CONTEXT}"
        )));
    }
    let start = pos.saturating_sub(left);
    let end = (pos + right).min(t - 1);

    let mut ids = list(&q, "source");
    if ids.is_empty() {
        ids = ds.sources().iter().map(|s| s.source_id().to_string()).collect();
    }
    let states = ids
        .iter()
        .map(|id| {
            let m = source(&ds, id)?;
            Ok(SourceWindow { source_id: m.source_id(), values: (start..=end).map(|r| m.row(r)).collect() })
        })
        .collect::<Result<Vec<_>, ApiError>>()?;
    let track_names = list(&q, "tracks");
    let tracks = tracks(&ds, &track_names)?.into_iter().map(|tr| track_window(tr, start, end)).collect();
    let body = ContextResponse {
        dataset: ds.name(),
        pos,
        left,
        right,
        start,
        end,
        tokens: ds.tokens().window(start, end),
        states,
        tracks,
    };
    Ok(Json(body).into_response())
}

/// Body of `POST /api/match`: a selection spec and match parameters, flat.
#[derive(Debug, Clone, Deserialize)]
pub struct MatchRequest {
    pub dataset: String,
    #[serde(default)]
    pub tracks: Vec<String>,
    #[serde(flatten)]
    pub spec: SelectionSpec,
    #[serde(flatten)]
    pub params: MatchParams,
}

#[derive(Serialize)]
struct MatchRow {
    rank: usize,
    start: usize,
    end: usize,
    length: usize,
    overlap: usize,
    union: usize,
    s2: StateSet,
    tokens: Vec<String>,
    per_position_overlap: Vec<usize>,
    tracks: Vec<TrackWindow>,
}

#[derive(Serialize)]
struct MatchResponse {
    dataset: String,
    selection: SelectionSpec,
    params: EffectiveParams,
    tracks: Vec<String>,
    query_tokens: Vec<String>,
    s1: StateSet,
    candidates: usize,
    results: Vec<MatchRow>,
}

fn compute_match(ds: &Dataset, req: MatchRequest) -> Result<MatchResponse, ApiError> {
    let states = source(ds, &req.spec.source_id)?;
    let tracks = tracks(ds, &req.tracks)?;
    let out = run_match(states, &req.spec, &req.params)?;
    let results = out
        .results
        .into_iter()
        .enumerate()
        .map(|(i, r)| MatchRow {
            rank: i + 1,
            start: r.range.start,
            end: r.range.end,
            length: r.length(),
            overlap: r.overlap,
            union: r.union,
            tokens: ds.tokens().window(r.range.start, r.range.end),
            tracks: tracks.iter().map(|tr| track_window(tr, r.range.start, r.range.end)).collect(),
            s2: r.s2,
            per_position_overlap: r.per_position_overlap,
        })
        .collect();
    Ok(MatchResponse {
        dataset: ds.name().to_string(),
        query_tokens: ds.tokens().window(req.spec.start, req.spec.end),
        selection: req.spec,
        params: out.params,
        tracks: req.tracks,
        s1: out.s1,
        candidates: out.candidates,
        results,
    })
}

async fn match_ranges(State(state): State<Shared>, body: Bytes) -> Result<Json<MatchResponse>, ApiError> {
    let req: MatchRequest =
        serde_json::from_slice(&body).map_err(|e| ApiError::bad_request(format!("invalid match request: {e}")))?;
    let ds = dataset(catalog(&state)?, &req.dataset)?;
    let response = tokio::task::spawn_blocking(move || compute_match(&ds, req))
        .await
        .map_err(|e| ApiError::internal(format!("match task failed: {e}")))??;
    Ok(Json(response))
}

#[derive(Serialize)]
struct SearchResponse {
    dataset: String,
    query: Vec<String>,
    total: usize,
    positions: Vec<usize>,
}

async fn search(State(state): State<Shared>, Query(q): Params) -> Result<Json<SearchResponse>, ApiError> {
    let catalog = catalog(&state)?;
    let ds = dataset(catalog, required(&q, "dataset")?)?;
    let query: Vec<String> = q.get("q").map(|s| s.split_whitespace().map(String::from).collect()).unwrap_or_default();
    if query.is_empty() {
        return Err(ApiError::bad_request("query \"q\" must contain at least one token"));
    }
    let mut positions = search_phrase(ds.tokens(), &query);
    let total = positions.len();
    positions.truncate(SEARCH_LIMIT);
    Ok(Json(SearchResponse { dataset: ds.name().to_string(), query, total, positions }))
}

//! Fusion frame documents:
//!
//! ```text
//! {"field": "real", "dim": 3, "subspaces": [
//!   {"weight": 1.0, "basis": [[1, 0, 0], [0, 1, 0]], "local_frame": [[1, 0, 0], [0, 1, 0]]},
//!   {"weight": 1.0, "basis": [[0, 1, 0], [0, 0, 1]]}
//! ]}
//! ```
//!
//! `basis` may be any linearly independent spanning set; it is
//! orthonormalized on load. `local_frame` is optional but must be present
//! on every subspace for the local-global report.

use std::path::Path;

use framekit::fusion::FusionFrame;
use framekit::ToleranceConfig;
use serde_json::Value;

use crate::document::parse_rows;

pub fn parse_fusion(text: &str, tol: &ToleranceConfig) -> Result<FusionFrame, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value.as_object().ok_or("a fusion document must be a JSON object")?;
    if let Some(k) = obj.keys().find(|k| !["field", "dim", "subspaces", "meta"].contains(&k.as_str())) {
        return Err(format!("unknown key {k:?}"));
    }
    let field = match obj.get("field").and_then(Value::as_str) {
        Some("real") => framekit::Field::Real,
        Some("complex") => framekit::Field::Complex,
        _ => return Err("\"field\" must be \"real\" or \"complex\"".into()),
    };
    let dim = match obj.get("dim").and_then(Value::as_u64) {
        Some(d) if d >= 1 => d as usize,
        _ => return Err("\"dim\" must be a positive integer".into()),
    };
    let subs = obj.get("subspaces").and_then(Value::as_array).ok_or("\"subspaces\" must be an array")?;
    if subs.is_empty() {
        return Err("\"subspaces\" is empty".into());
    }
    let mut parts = Vec::new();
    let mut locals = Vec::new();
    for (i, s) in subs.iter().enumerate() {
        let s = s.as_object().ok_or_else(|| format!("subspaces[{i}] is not an object"))?;
        if let Some(k) = s.keys().find(|k| !["weight", "basis", "local_frame"].contains(&k.as_str())) {
            return Err(format!("subspaces[{i}]: unknown key {k:?}"));
        }
        let weight =
            s.get("weight").and_then(Value::as_f64).ok_or_else(|| format!("subspaces[{i}].weight must be a number"))?;
        let basis = parse_rows(s.get("basis"), dim, field, &format!("subspaces[{i}].basis"))?;
        parts.push((basis, weight));
        locals.push(match s.get("local_frame") {
            None => None,
            v => Some(parse_rows(v, dim, field, &format!("subspaces[{i}].local_frame"))?),
        });
    }
    let result = if locals.iter().all(Option::is_some) {
        let parts = parts.into_iter().zip(locals).map(|((b, w), l)| (b, w, l.unwrap())).collect();
        FusionFrame::with_local_frames(dim, field, parts, tol)
    } else if locals.iter().all(Option::is_none) {
        FusionFrame::new(dim, field, parts, tol)
    } else {
        return Err("either every subspace has a local_frame or none does".into());
    };
    result.map_err(|e| e.to_string())
}

pub fn read_fusion(path: &Path, tol: &ToleranceConfig) -> Result<FusionFrame, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_fusion(&text, tol).map_err(|e| format!("{}: {e}", path.display()))
}

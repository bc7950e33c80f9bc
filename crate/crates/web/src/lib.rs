//! Browser bindings for the static demo in `www/`.
//!
//! Each binding wraps a plain function returning `Result<String, String>` so
//! the logic can be tested natively.

use immaculate::{
    enumerate_z, enumerate_z_gamma, format_text, skew_fundamental, Basis, Composition, Evaluator,
    SkewMethod, TransitionCache,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// The demo keeps transition matrices small so that every request stays quick.
const WEB_DEGREE_CAP: usize = 7;

fn cache() -> &'static TransitionCache {
    static CACHE: std::sync::OnceLock<TransitionCache> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| TransitionCache::new(WEB_DEGREE_CAP))
}

fn parse_composition(text: &str) -> Result<Composition, String> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    let parts = text
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| format!("`{p}` is not a part"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts).map_err(|e| e.to_string())
}

/// `F_s^⊥ 𝔖_α` as expansion JSON.
pub fn skew_json(s: usize, alpha: &str, method: &str) -> Result<String, String> {
    let alpha = parse_composition(alpha)?;
    let method: SkewMethod = method
        .parse()
        .map_err(|e: immaculate::Error| e.to_string())?;
    let e = skew_fundamental(s, &alpha, method, cache()).map_err(|e| e.to_string())?;
    Ok(e.to_json_value(method).to_string())
}

/// `Z_{s,α}`, or `Z^γ_{s,α}` when `gamma` is nonempty, with signs.
pub fn zset_json(s: usize, alpha: &str, gamma: &str) -> Result<String, String> {
    if s == 0 {
        return Err(immaculate::Error::ZeroSkew.to_string());
    }
    let alpha = parse_composition(alpha)?;
    let vectors = if gamma.trim().is_empty() {
        enumerate_z(s, &alpha)
    } else {
        enumerate_z_gamma(s, &alpha, &parse_composition(gamma)?).map_err(|e| e.to_string())?
    };
    let vectors: Vec<_> = vectors
        .iter()
        .map(|b| json!({ "beta": b, "sign": b.sgn() }))
        .collect();
    Ok(json!({ "op": "zset", "s": s, "alpha": alpha, "vectors": vectors }).to_string())
}

/// Evaluates a calculator expression; an empty `basis` picks the default.
pub fn evaluate_json(expr: &str, basis: &str) -> Result<String, String> {
    let basis = match basis.trim() {
        "" => None,
        tag => Some(Basis::from_tag(tag).map_err(|e| e.to_string())?),
    };
    let x = Evaluator::new(cache(), SkewMethod::Theorem)
        .evaluate(expr, basis)
        .map_err(|e| e.to_string())?;
    let mut out = x.to_json_value();
    out["text"] = json!(format_text(&x));
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn skew(s: usize, alpha: &str, method: &str) -> Result<String, JsValue> {
    skew_json(s, alpha, method).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn zset(s: usize, alpha: &str, gamma: &str) -> Result<String, JsValue> {
    zset_json(s, alpha, gamma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn evaluate(expr: &str, basis: &str) -> Result<String, JsValue> {
    evaluate_json(expr, basis).map_err(|e| JsValue::from_str(&e))
}

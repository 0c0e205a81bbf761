//! Browser bindings: build a configuration, certify it, and scan a grid of
//! points on one conic. Every call takes and returns strings so the page
//! needs no glue beyond the generated module.

use serde_json::json;
use wasm_bindgen::prelude::*;

use bicover::certify::{cmd_verify, lam_grid};
use bicover::config::{check_conditions, mk_config, mk_params, ConfigError, Which};
use bicover::qalg::Rat;

fn parse_inputs(u: &str, which: &str, lam: &str) -> Result<(Rat, Which, [Rat; 2]), String> {
    let u: Rat = u.trim().parse().map_err(|e| format!("{e}"))?;
    let which: Which = which.trim().parse()?;
    let (a, b) = lam.trim().split_once(':').ok_or("lam must look like a:b")?;
    let a: Rat = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: Rat = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((u, which, [a, b]))
}

/// The six points, four lines and five curves of the configuration.
pub fn config_json(u: &str, which: &str, lam: &str) -> Result<String, String> {
    let (u, which, lam) = parse_inputs(u, which, lam)?;
    let params = mk_params(&u).map_err(|e| e.to_string())?;
    let c = mk_config(&params, which, &lam).map_err(|e| e.to_string())?;
    Ok(json!({ "params": params, "config": c }).to_string())
}

/// Status, failure reasons and invariants of the full certificate.
pub fn verify_summary(u: &str, which: &str, lam: &str) -> Result<String, String> {
    let (u, which, lam) = parse_inputs(u, which, lam)?;
    let cert = cmd_verify(&u, which, &lam).map_err(|e| e.to_string())?;
    Ok(json!({
        "verified": cert.verified(),
        "reasons": cert.reasons(),
        "invariants": cert.invariants,
        "quotients": cert.quotients,
    })
    .to_string())
}

/// Conditions (I)-(IV) at every grid point `(a:b)`, `0 <= a <= n`,
/// `|b| <= n`, run sequentially.
pub fn scan_grid(u: &str, which: &str, n: u32) -> Result<String, String> {
    let u: Rat = u.trim().parse().map_err(|e| format!("{e}"))?;
    let which: Which = which.trim().parse()?;
    let params = mk_params(&u).map_err(|e| e.to_string())?;
    let n = n.min(12) as i64;
    let rows: Vec<_> = lam_grid(n)
        .into_iter()
        .map(|lam| {
            let outcome = match mk_config(&params, which, &lam) {
                Ok(c) => match check_conditions(&c).first_failure() {
                    None => "hit".to_string(),
                    Some(f) => format!("condition ({f})"),
                },
                Err(ConfigError::ExcludedPoint { curves, .. }) => format!("excluded: {}", curves.join(", ")),
                Err(e) => e.to_string(),
            };
            json!({ "lam": lam, "outcome": outcome })
        })
        .collect();
    Ok(serde_json::Value::Array(rows).to_string())
}

#[wasm_bindgen(js_name = configJson)]
pub fn config_json_js(u: &str, which: &str, lam: &str) -> Result<String, JsValue> {
    config_json(u, which, lam).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifySummary)]
pub fn verify_summary_js(u: &str, which: &str, lam: &str) -> Result<String, JsValue> {
    verify_summary(u, which, lam).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = scanGrid)]
pub fn scan_grid_js(u: &str, which: &str, n: u32) -> Result<String, JsValue> {
    scan_grid(u, which, n).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_of_golden_point() {
        let v: serde_json::Value = serde_json::from_str(&config_json("2", "alpha", "1:2").unwrap()).unwrap();
        assert_eq!(v["params"]["alpha"], "-5/8");
        assert_eq!(v["config"]["points"]["p0"], json!(["5", "4", "9"]));
    }

    #[test]
    fn summary_of_golden_point() {
        let v: serde_json::Value = serde_json::from_str(&verify_summary("2", "alpha", "1:2").unwrap()).unwrap();
        assert_eq!(v["verified"], true);
        assert_eq!(v["invariants"]["K2"], 7);
    }

    #[test]
    fn bad_inputs_are_errors() {
        assert!(config_json("1", "alpha", "1:2").is_err());
        assert!(config_json("2", "gamma", "1:2").is_err());
        assert!(verify_summary("2", "alpha", "12").is_err());
        assert!(config_json("2", "alpha", "1:1").unwrap_err().contains("excluded"));
    }

    #[test]
    fn scan_marks_excluded_points() {
        let v: serde_json::Value = serde_json::from_str(&scan_grid("2", "alpha", 1).unwrap()).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 4);
        let one_one = rows.iter().find(|r| r["lam"] == json!(["1", "1"])).unwrap();
        assert!(one_one["outcome"].as_str().unwrap().starts_with("excluded"));
        assert!(rows.iter().any(|r| r["outcome"] == "hit"));
    }
}

//! wasm-bindgen surface for the static page in `www/`. Every export takes
//! polynomials as newline-separated text and returns a JSON string; the
//! `*_json` functions do the work and are what the native tests call.

use nclindep::locdep::json::{decision_to_json, verdict_to_json};
use nclindep::locdep::{decide_dependence, local_dependence_sample, DecideOptions, SamplerConfig};
use nclindep::ncparse::{format_poly, parse_poly};
use nclindep::specialpoly::{capelli_poly, central_poly_2x2, standard_poly};
use nclindep::{Field, NcPoly};
use wasm_bindgen::prelude::*;

/// Largest matrix size the page will sample at.
pub const MAX_DEMO_DIM: usize = 8;

fn family(text: &str) -> Result<Vec<NcPoly>, String> {
    let fs = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| parse_poly(l, Field::Rational).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    if fs.is_empty() {
        return Err("enter at least one polynomial".into());
    }
    Ok(fs)
}

pub fn decide_json(polys: &str, seed: u32) -> Result<String, String> {
    let fs = family(polys)?;
    let options = DecideOptions {
        seed: seed.into(),
        ..DecideOptions::default()
    };
    let d = decide_dependence(&fs, &options).map_err(|e| e.to_string())?;
    Ok(decision_to_json(&d).to_string())
}

pub fn sample_json(polys: &str, dim: usize, trials: u32, seed: u32) -> Result<String, String> {
    if !(1..=MAX_DEMO_DIM).contains(&dim) {
        return Err(format!("matrix size must be between 1 and {MAX_DEMO_DIM}"));
    }
    let fs = family(polys)?;
    let config = SamplerConfig {
        trials: trials.into(),
        seed: seed.into(),
        ..SamplerConfig::new(dim)
    };
    let v = local_dependence_sample(&fs, &config).map_err(|e| e.to_string())?;
    Ok(verdict_to_json(&v, None).to_string())
}

pub fn generate_text(kind: &str, n: usize) -> Result<String, String> {
    if n > 6 && kind != "central" {
        return Err("n is capped at 6 here".into());
    }
    let p = match kind {
        "st" => standard_poly(n, Field::Rational),
        "capelli" => capelli_poly(n, Field::Rational),
        "central" => Ok(central_poly_2x2(Field::Rational)),
        other => return Err(format!("unknown generator `{other}`")),
    };
    p.map(|p| format_poly(&p)).map_err(|e| e.to_string())
}

/// Exact verdict, bounds, cross-checks and a local sampling run.
#[wasm_bindgen]
pub fn decide(polys: &str, seed: u32) -> Result<String, JsError> {
    decide_json(polys, seed).map_err(|e| JsError::new(&e))
}

/// Local witness search at a chosen matrix size.
#[wasm_bindgen]
pub fn sample(polys: &str, dim: usize, trials: u32, seed: u32) -> Result<String, JsError> {
    sample_json(polys, dim, trials, seed).map_err(|e| JsError::new(&e))
}

/// `st`, `capelli` or `central`.
#[wasm_bindgen]
pub fn generate(kind: &str, n: usize) -> Result<String, JsError> {
    generate_text(kind, n).map_err(|e| JsError::new(&e))
}

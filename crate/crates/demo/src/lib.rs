//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Diagrams cross the boundary as flat `Float64Array`s of
//! `[birth, death, birth_index, death_index]` records. Essential pairs have
//! `death = Infinity` and `death_index = -1`.

use pl_persistence::bench::Generator;
use pl_persistence::{circle_diagram, image_diagram, line_diagram, Diagram};
use wasm_bindgen::prelude::*;

pub fn flatten(diagram: &Diagram) -> Vec<f64> {
    diagram
        .pairs()
        .iter()
        .flat_map(|p| {
            [
                p.birth_value,
                p.death_value,
                p.birth_index as f64,
                p.death_index.map_or(-1.0, |i| i as f64),
            ]
        })
        .collect()
}

pub fn diagram_of(values: &[f64], circle: bool) -> Result<Vec<f64>, String> {
    let d = if circle {
        circle_diagram(values)
    } else {
        line_diagram(values)
    };
    d.map(|d| flatten(&d)).map_err(|e| e.to_string())
}

pub fn image_of(f: &[f64], g: &[f64]) -> Result<Vec<f64>, String> {
    image_diagram(f, g)
        .map(|d| flatten(&d))
        .map_err(|e| e.to_string())
}

/// Sample function for the page: a random walk, or one of the benchmark
/// families by name.
pub fn sample(kind: &str, n: usize, seed: u64) -> Result<Vec<f64>, String> {
    let generator = match kind {
        "walk" => {
            let steps = Generator::Random.generate(n, seed);
            return Ok(steps
                .iter()
                .scan(0.0, |acc, s| {
                    *acc += s - 0.5;
                    Some(*acc)
                })
                .collect());
        }
        "random" => Generator::Random,
        "monotonic" => Generator::Monotonic,
        "constant" => Generator::Constant,
        "narrowing" => Generator::Narrowing,
        other => return Err(format!("unknown sample kind {other:?}")),
    };
    Ok(generator.generate(n, seed))
}

#[wasm_bindgen]
pub fn persistence(values: &[f64], circle: bool) -> Result<Vec<f64>, JsError> {
    diagram_of(values, circle).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn image_persistence(f: &[f64], g: &[f64]) -> Result<Vec<f64>, JsError> {
    image_of(f, g).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate(kind: &str, n: usize, seed: u64) -> Result<Vec<f64>, JsError> {
    sample(kind, n, seed).map_err(|e| JsError::new(&e))
}

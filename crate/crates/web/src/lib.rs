//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns strings: boards in the `.mosaic` text
//! format, results as JSON. The plain functions underneath are ordinary Rust
//! so they can be tested natively.

use knot_mosaic::moves::reduce_greedy;
use knot_mosaic::tile::ALL_TILES;
use knot_mosaic::{complete_boundary, normalized_jones, reference_table, to_t_form, Edge, Identification, InnerBoard, Mosaic, Tile};
use knot_mosaic_cli::svg::render_svg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest board the demo draws or generates.
pub const MAX_DEMO_SIZE: usize = 8;

/// Validity, strands, knot name and drawing of a board.
pub fn analyze_board(text: &str) -> Value {
    let m = match Mosaic::parse(text) {
        Ok(m) => m,
        Err(e) => return json!({ "error": e.to_string() }),
    };
    let mismatches: Vec<Value> = m.mismatched_edges().into_iter().map(|(r, c, e)| json!([r, c, e.to_string()])).collect();
    let mut out = json!({
        "board": m.to_text(),
        "suitably_connected": m.is_suitably_connected(),
        "mismatches": mismatches,
        "crossing_tiles": m.crossing_tiles(),
        "svg": render_svg(&m),
    });
    if !m.is_suitably_connected() {
        return out;
    }
    let components = m.component_count().unwrap_or(0);
    out["components"] = components.into();
    if components == 1 {
        if let Ok(j) = normalized_jones(&m) {
            out["jones"] = to_t_form(&j).map(|p| p.to_string()).unwrap_or_default().into();
            if let Ok(table) = reference_table() {
                out["knot"] = match table.identify(&j) {
                    Identification::Known(id) => json!({ "name": id.name, "chirality": id.chirality.to_string() }),
                    Identification::Unidentified => Value::Null,
                };
            }
        }
    }
    out
}

/// Applies reducing moves until none is left.
pub fn reduce_board(text: &str) -> Value {
    let m = match Mosaic::parse(text) {
        Ok(m) => m,
        Err(e) => return json!({ "error": e.to_string() }),
    };
    if !m.is_suitably_connected() {
        return json!({ "error": "board is not suitably connected" });
    }
    let (reduced, steps) = reduce_greedy(&m);
    let moves: Vec<String> = steps.iter().map(|s| format!("{:?} at row {} col {}", s.kind, s.anchor.0, s.anchor.1)).collect();
    json!({
        "board": reduced.to_text(),
        "moves": moves,
        "crossing_tiles": [m.crossing_tiles(), reduced.crossing_tiles()],
    })
}

/// A random suitably connected `n`×`n` board: a random inner board whose
/// tiles agree on shared edges, completed on the boundary.
pub fn random_board_text(n: usize, seed: u64) -> String {
    let n = n.clamp(2, MAX_DEMO_SIZE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = n - 2;
    let mut cells: Vec<Tile> = Vec::with_capacity(k * k);
    for r in 0..k {
        for c in 0..k {
            let west = c > 0 && cells[r * k + c - 1].connections().contains(Edge::E);
            let north = r > 0 && cells[(r - 1) * k + c].connections().contains(Edge::S);
            let fits: Vec<Tile> = ALL_TILES
                .into_iter()
                .filter(|t| (c == 0 || t.connections().contains(Edge::W) == west) && (r == 0 || t.connections().contains(Edge::N) == north))
                .collect();
            cells.push(fits[rng.gen_range(0..fits.len())]);
        }
    }
    let completions = complete_boundary(&InnerBoard::new(n, cells));
    match completions.len() {
        0 => Mosaic::new(n, n, vec![Tile::Blank; n * n]).expect("blank board").to_text(),
        len => completions[rng.gen_range(0..len)].to_text(),
    }
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    analyze_board(text).to_string()
}

#[wasm_bindgen]
pub fn reduce(text: &str) -> String {
    reduce_board(text).to_string()
}

#[wasm_bindgen]
pub fn random_board(n: usize, seed: u32) -> String {
    random_board_text(n, u64::from(seed))
}

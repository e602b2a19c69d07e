//! Exhaustive search over 6×6 knot shadows for presentations of the knots
//! that need a 6×6 board.
//!
//! A shadow is an even subgraph of the 6×6 cell grid, i.e. a subset of the 25
//! unit plaquettes. Shadows whose degree-4 cells number between 6 and 9 and
//! that trace to a single curve get every over/under assignment (the first
//! crossing is fixed, since swapping all crossings only mirrors the knot).
//! Capping crossing tiles at 9 rules out look-alike knots with ten or more
//! crossings, which could share a Jones polynomial with a table entry.
//!
//! Usage: shadow_search [OUT_DIR]

use std::collections::BTreeMap;

use knot_mosaic::tile::{Edge, Over};
use knot_mosaic::{reference_table, Identification, JonesCache, Mosaic, Tile};

const N: usize = 6;
const P: usize = N - 1;
const MIN_CROSSINGS: usize = 6;
const MAX_CROSSINGS: usize = 9;

fn shadow(mask: u32) -> Option<(Vec<Tile>, Vec<usize>)> {
    let on = |i: isize, j: isize| i >= 0 && j >= 0 && (i as usize) < P && (j as usize) < P && mask >> (i as usize * P + j as usize) & 1 == 1;
    let mut cells = Vec::with_capacity(N * N);
    let mut four = Vec::new();
    for r in 0..N as isize {
        for c in 0..N as isize {
            let mut edges = [Edge::N; 4];
            let mut k = 0;
            for (e, hit) in [
                (Edge::N, on(r - 1, c - 1) ^ on(r - 1, c)),
                (Edge::S, on(r, c - 1) ^ on(r, c)),
                (Edge::W, on(r - 1, c - 1) ^ on(r, c - 1)),
                (Edge::E, on(r - 1, c) ^ on(r, c)),
            ] {
                if hit {
                    edges[k] = e;
                    k += 1;
                }
            }
            let tile = match k {
                0 => Tile::Blank,
                2 => Tile::from_pairs(&[(edges[0], edges[1])]).unwrap(),
                _ => {
                    four.push(cells.len());
                    if four.len() > MAX_CROSSINGS {
                        return None;
                    }
                    Tile::Crossing(Over::Vertical)
                }
            };
            cells.push(tile);
        }
    }
    (four.len() >= MIN_CROSSINGS).then_some((cells, four))
}

fn main() {
    let out = std::env::args().nth(1);
    let table = reference_table().unwrap();
    let mut cache = JonesCache::new();
    let mut best: BTreeMap<usize, (usize, usize, Mosaic)> = BTreeMap::new();
    let mut shadows = 0u64;
    for mask in 0..1u32 << (P * P) {
        if mask & 0xf_ffff == 0 {
            eprintln!("mask {mask:#x}: {} knots so far", best.len());
        }
        let Some((cells, four)) = shadow(mask) else { continue };
        let base = Mosaic::new(N, N, cells).unwrap();
        if base.component_count() != Ok(1) {
            continue;
        }
        shadows += 1;
        let key = (four.len(), base.nonblank_tiles());
        for bits in 0..1u32 << (four.len() - 1) {
            let changes: Vec<(usize, usize, Tile)> = four
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(i, _)| bits >> (i - 1) & 1 == 1)
                .map(|(_, &cell)| (cell / N, cell % N, Tile::Crossing(Over::Horizontal)))
                .collect();
            let m = base.with_tiles(&changes);
            let jones = cache.jones(&m).unwrap();
            let Identification::Known(id) = table.identify(&jones) else { continue };
            let rec = table.get(&id.name).unwrap();
            if rec.mosaic_number < 6 && id.name != "6_1" {
                continue;
            }
            let idx = table.index_of(&id.name).unwrap();
            if best.get(&idx).is_none_or(|b| key < (b.0, b.1)) {
                best.insert(idx, (key.0, key.1, m));
            }
        }
    }
    println!("single-curve shadows: {shadows}");
    for (idx, (x, t, m)) in &best {
        let name = &table.records()[*idx].name;
        println!("{name} crossings={x} tiles={t}");
        if let Some(dir) = &out {
            let path = format!("{dir}/{}_6.mosaic", name.replace('_', ""));
            let text = format!("# {name} on a 6x6 board: {x} crossing tiles, {t} non-blank tiles\n{}\n", m.to_text());
            std::fs::write(path, text).unwrap();
        }
    }
    println!("found {} of 29", best.len());
}

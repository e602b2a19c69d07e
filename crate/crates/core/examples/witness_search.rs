//! Random search for 6×6 presentations of knots that need a 6×6 board.
//!
//! Samples the even subgraphs of the 6×6 cell grid (subsets of the 25 unit
//! plaquettes), fills degree-4 cells with crossings or double arcs, keeps
//! one-component boards with at most 9 crossing tiles, and records the board
//! with the fewest crossing tiles (then fewest non-blank tiles) per knot.
//! Capping crossing tiles at 9 rules out look-alike knots with ten or more
//! crossings, which could share a Jones polynomial with a table entry.
//!
//! Usage: witness_search [SAMPLES] [SEED] [OUT_DIR]

use std::collections::BTreeMap;

use knot_mosaic::tile::{Diagonal, Edge, Over};
use knot_mosaic::{reference_table, Identification, JonesCache, Mosaic, Tile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 6;
const MAX_CROSSINGS: usize = 9;

fn sample(rng: &mut ChaCha8Rng) -> Mosaic {
    let p = rng.gen_range(0.25..0.75);
    let plaq: Vec<bool> = (0..(N - 1) * (N - 1)).map(|_| rng.gen_bool(p)).collect();
    let on = |i: isize, j: isize| i >= 0 && j >= 0 && (i as usize) < N - 1 && (j as usize) < N - 1 && plaq[i as usize * (N - 1) + j as usize];
    let mut cells = Vec::with_capacity(N * N);
    let mut four = Vec::new();
    for r in 0..N as isize {
        for c in 0..N as isize {
            let mut edges = Vec::new();
            if on(r - 1, c - 1) ^ on(r - 1, c) {
                edges.push(Edge::N);
            }
            if on(r, c - 1) ^ on(r, c) {
                edges.push(Edge::S);
            }
            if on(r - 1, c - 1) ^ on(r, c - 1) {
                edges.push(Edge::W);
            }
            if on(r - 1, c) ^ on(r, c) {
                edges.push(Edge::E);
            }
            let tile = match edges.len() {
                0 => Tile::Blank,
                2 => Tile::from_pairs(&[(edges[0], edges[1])]).unwrap(),
                4 => {
                    four.push(cells.len());
                    Tile::DoubleArc(if rng.gen_bool(0.5) { Diagonal::NwSe } else { Diagonal::NeSw })
                }
                _ => unreachable!("even subgraph"),
            };
            cells.push(tile);
        }
    }
    // Exactly k of the degree-4 cells become crossings.
    let k = rng.gen_range(6..=MAX_CROSSINGS).min(four.len());
    for i in 0..k {
        let j = rng.gen_range(i..four.len());
        four.swap(i, j);
        cells[four[i]] = Tile::Crossing(if rng.gen_bool(0.5) { Over::Vertical } else { Over::Horizontal });
    }
    Mosaic::new(N, N, cells).unwrap()
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let samples: u64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(2_000_000);
    let seed: u64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1);
    let out = args.get(3).cloned();
    let table = reference_table().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = JonesCache::new();
    let mut best: BTreeMap<usize, (usize, usize, Mosaic)> = BTreeMap::new();
    for _ in 0..samples {
        let m = sample(&mut rng);
        let x = m.crossing_tiles();
        if !(3..=MAX_CROSSINGS).contains(&x) || m.component_count() != Ok(1) {
            continue;
        }
        let jones = cache.jones(&m).unwrap();
        let Identification::Known(id) = table.identify(&jones) else { continue };
        let rec = table.get(&id.name).unwrap();
        if rec.mosaic_number < 6 && id.name != "6_1" {
            continue;
        }
        let key = (x, m.nonblank_tiles());
        let idx = table.index_of(&id.name).unwrap();
        if best.get(&idx).is_none_or(|b| key < (b.0, b.1)) {
            best.insert(idx, (key.0, key.1, m));
        }
    }
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

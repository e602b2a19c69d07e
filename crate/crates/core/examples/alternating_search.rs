//! Searches 6×6 shadows for alternating eight-crossing presentations.
//!
//! Cells where four strand ends meet are either crossings or double arcs.
//! Every shadow with at least eight such cells keeps exactly eight as
//! crossings, smooths the rest into double arcs in both ways, and assigns
//! over/under alternately along the single resulting curve. A reduced
//! alternating diagram realizes its knot's crossing number, so every match is
//! an eight-crossing knot; and since minimal diagrams of prime alternating
//! knots are alternating, a prime alternating eight-crossing knot missing
//! from the output has no 6×6 board with eight crossing tiles.
//!
//! Diagrams with a nugatory crossing are skipped, and so are visibly
//! composite ones: a reduced alternating diagram of a composite knot is always
//! visibly composite, which keeps 4_1#4_1 from posing as its Jones twin 8_9.
//!
//! Usage: alternating_search [KNOT...] [--out DIR]

use std::collections::BTreeMap;

use knot_mosaic::tile::{Diagonal, Edge, Over};
use knot_mosaic::{reference_table, Identification, JonesCache, Mosaic, PlanarDiagram, Tile};

const N: usize = 6;
const P: usize = N - 1;
const CROSSINGS: usize = 8;
const MAX_FOUR: usize = 16;

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
                    if four.len() > MAX_FOUR {
                        return None;
                    }
                    Tile::Crossing(Over::Vertical)
                }
            };
            cells.push(tile);
        }
    }
    (four.len() >= CROSSINGS).then_some((cells, four))
}

/// Sets crossings so the single strand alternates over and under.
fn alternate(m: &Mosaic) -> Mosaic {
    let loops = m.trace_components().unwrap();
    let mut changes = Vec::new();
    let mut over = true;
    for s in &loops[0].steps {
        if !m.get(s.row, s.col).is_crossing() {
            continue;
        }
        if over {
            let o = if s.entry.is_vertical() { Over::Vertical } else { Over::Horizontal };
            changes.push((s.row, s.col, Tile::Crossing(o)));
        }
        over = !over;
    }
    m.with_tiles(&changes)
}

/// True when a proper stretch of the strand crosses only itself.
fn visibly_composite(code: &[[u32; 4]]) -> bool {
    let len = 2 * code.len();
    let succ = |x: u32| x % len as u32 + 1;
    // Crossing entered by each edge, edges numbered from zero.
    let mut visit = vec![0; len];
    for (i, &[a, b, _, d]) in code.iter().enumerate() {
        visit[a as usize - 1] = i;
        let over_in = if b == succ(d) { d } else { b };
        visit[over_in as usize - 1] = i;
    }
    (0..len).any(|start| {
        let mut seen = vec![0u8; code.len()];
        let mut open = 0i32;
        (0..len - 2).any(|k| {
            let c = visit[(start + k) % len];
            seen[c] += 1;
            open += if seen[c] == 1 { 1 } else { -1 };
            open == 0
        })
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        if bits.count_ones() as usize == k {
            out.push((0..n).filter(|i| bits >> i & 1 == 1).collect());
        }
    }
    out
}

fn main() {
    let mut args = std::env::args().skip(1);
    let mut targets = Vec::new();
    let mut out = None;
    while let Some(a) = args.next() {
        if a == "--out" {
            out = args.next();
        } else {
            targets.push(a);
        }
    }
    let table = reference_table().unwrap();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=MAX_FOUR).map(|d| if d >= CROSSINGS { subsets(d, d - CROSSINGS) } else { Vec::new() }).collect();
    let mut cache = JonesCache::new();
    let mut best: BTreeMap<String, (usize, Mosaic)> = BTreeMap::new();
    for mask in 0..1u32 << (P * P) {
        if mask & 0xf_ffff == 0 {
            eprintln!("mask {mask:#x}: {:?}", best.keys().collect::<Vec<_>>());
        }
        let Some((cells, four)) = shadow(mask) else { continue };
        let base = Mosaic::new(N, N, cells).unwrap();
        let d = four.len();
        for smooth in &subsets[d] {
            for kinds in 0u32..1 << smooth.len() {
                let changes: Vec<(usize, usize, Tile)> = smooth
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| {
                        let diag = if kinds >> i & 1 == 1 { Diagonal::NeSw } else { Diagonal::NwSe };
                        (four[j] / N, four[j] % N, Tile::DoubleArc(diag))
                    })
                    .collect();
                let m = base.with_tiles(&changes);
                if m.component_count() != Ok(1) {
                    continue;
                }
                let m = alternate(&m);
                let jones = cache.jones(&m).unwrap();
                let Identification::Known(id) = table.identify(&jones) else { continue };
                let pd = PlanarDiagram::from_mosaic(&m).unwrap();
                if !pd.is_reduced() || visibly_composite(&pd.code()) {
                    continue;
                }
                if !targets.is_empty() && !targets.contains(&id.name) {
                    continue;
                }
                let t = m.nonblank_tiles();
                if best.get(&id.name).is_none_or(|b| t < b.0) {
                    best.insert(id.name.clone(), (t, m));
                }
            }
        }
    }
    for (name, (t, m)) in &best {
        println!("{name} crossings={CROSSINGS} tiles={t}");
        if let Some(dir) = &out {
            let path = format!("{dir}/{}_6.mosaic", name.replace('_', ""));
            let text = format!("# {name} on a 6x6 board: {CROSSINGS} alternating crossing tiles, {t} non-blank tiles\n{}\n", m.to_text());
            std::fs::write(path, text).unwrap();
        }
    }
}

//! Mosaic Reidemeister moves as local tile stencils, corner reduction, and
//! completion of an inner board to a full board.
//!
//! Both stencils occupy a 2×2 block and are written below in one canonical
//! orientation; the four rotations of the block give every variant (each
//! stencil is symmetric under the remaining reflections).
//!
//! Type I, canonical: the crossing sits bottom-left and its north and east
//! points are joined by a loop running through the other three cells
//!
//! ```text
//!   ┌─┐      TL pairs S–E, TR pairs W–S, BR pairs N–W
//!   X ┘
//! ```
//!
//! Reducing replaces the crossing by an arc joining its south and west points
//! and deletes the loop from the three cells.
//!
//! Type II, canonical: two crossings side by side on the bottom row with the
//! same strand over at both, their north points joined by a cap through the
//! top row. Reducing replaces them by the double arcs that route each strand
//! around the other.

use serde::Serialize;

use crate::error::MoveError;
use crate::mosaic::{InnerBoard, Mosaic};
use crate::symmetry::Dihedral;
use crate::tile::{Diagonal, Edge, Over, Tile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    R1,
    R2,
    /// A type I move at a board corner located by the corner parity rule.
    CornerR1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Reduce,
    Introduce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSite {
    /// Top-left cell of the 2×2 stencil block.
    pub anchor: (usize, usize),
    pub kind: MoveKind,
    /// Rotation taking the canonical stencil onto the board.
    pub orientation: Dihedral,
    /// Crossing kind in the canonical frame: removed when reducing, placed when introducing.
    pub over: Over,
    pub direction: Direction,
}

impl MoveSite {
    /// The same site with the opposite direction.
    pub fn inverse(self) -> MoveSite {
        let direction = match self.direction {
            Direction::Reduce => Direction::Introduce,
            Direction::Introduce => Direction::Reduce,
        };
        MoveSite { direction, ..self }
    }

    /// Change in the number of crossing tiles when applied.
    pub fn crossing_delta(self) -> i32 {
        let size = if self.kind == MoveKind::R2 { 2 } else { 1 };
        match self.direction {
            Direction::Reduce => -size,
            Direction::Introduce => size,
        }
    }
}

/// A stencil placed on the board: canonical cells and edges mapped through a rotation.
#[derive(Clone, Copy)]
struct Frame {
    anchor: (usize, usize),
    d: Dihedral,
}

impl Frame {
    fn cell(self, i: usize, j: usize) -> (usize, usize) {
        let ((r, c), _) = self.d.map_cell(2, 2, i, j);
        (self.anchor.0 + r, self.anchor.1 + c)
    }

    fn edge(self, e: Edge) -> Edge {
        self.d.map_edge(e)
    }

    fn tile(self, m: &Mosaic, i: usize, j: usize) -> Tile {
        let (r, c) = self.cell(i, j);
        m.get(r, c)
    }

    fn has_pair(self, m: &Mosaic, i: usize, j: usize, a: Edge, b: Edge) -> bool {
        self.tile(m, i, j).partner(self.edge(a)) == Some(self.edge(b))
    }

    fn pairs_tile(self, pairs: &[(Edge, Edge)]) -> Tile {
        let mapped: Vec<(Edge, Edge)> = pairs.iter().map(|&(a, b)| (self.edge(a), self.edge(b))).collect();
        Tile::from_pairs(&mapped).expect("stencil pairings form a tile")
    }
}

fn pair_list(t: Tile) -> Vec<(Edge, Edge)> {
    let (pairs, n) = t.pairs();
    pairs[..n].to_vec()
}

/// `t` without the strand joining `a` and `b`.
fn remove_pair(t: Tile, a: Edge, b: Edge) -> Tile {
    let rest: Vec<(Edge, Edge)> = pair_list(t).into_iter().filter(|&(x, y)| !((x == a && y == b) || (x == b && y == a))).collect();
    Tile::from_pairs(&rest).expect("removing a strand leaves a tile")
}

/// `t` with a strand joining `a` and `b`, when both points are free and the
/// result is a non-crossing tile.
fn add_pair(t: Tile, a: Edge, b: Edge) -> Option<Tile> {
    if t.is_crossing() || t.connections().contains(a) || t.connections().contains(b) {
        return None;
    }
    let mut pairs = pair_list(t);
    pairs.push((a, b));
    Tile::from_pairs(&pairs)
}

// Canonical cells of the 2×2 block.
const TL: (usize, usize) = (0, 0);
const TR: (usize, usize) = (0, 1);
const BL: (usize, usize) = (1, 0);
const BR: (usize, usize) = (1, 1);

/// Loop cells of the type I stencil with the strand each carries.
const R1_LOOP: [((usize, usize), Edge, Edge); 3] = [(TL, Edge::S, Edge::E), (TR, Edge::W, Edge::S), (BR, Edge::N, Edge::W)];

/// Cap cells of the type II stencil.
const R2_CAP: [((usize, usize), Edge, Edge); 2] = [(TL, Edge::S, Edge::E), (TR, Edge::S, Edge::W)];
const R2_LEFT: [(Edge, Edge); 2] = [(Edge::S, Edge::E), (Edge::W, Edge::N)];
const R2_RIGHT: [(Edge, Edge); 2] = [(Edge::W, Edge::S), (Edge::N, Edge::E)];

fn canonical_over(f: Frame, t: Tile) -> Over {
    match f.d.inverse().map_tile(t) {
        Tile::Crossing(o) => o,
        _ => unreachable!("crossing tiles map to crossing tiles"),
    }
}

fn r1_reduce_at(m: &Mosaic, f: Frame) -> Option<Over> {
    let x = f.tile(m, BL.0, BL.1);
    let loop_ok = R1_LOOP.iter().all(|&((i, j), a, b)| f.has_pair(m, i, j, a, b));
    (x.is_crossing() && loop_ok).then(|| canonical_over(f, x))
}

fn r1_introduce_ok(m: &Mosaic, f: Frame) -> bool {
    f.tile(m, BL.0, BL.1) == f.pairs_tile(&[(Edge::S, Edge::W)])
        && R1_LOOP.iter().all(|&((i, j), a, b)| add_pair(f.tile(m, i, j), f.edge(a), f.edge(b)).is_some())
}

fn r2_reduce_at(m: &Mosaic, f: Frame) -> Option<Over> {
    let left = f.tile(m, BL.0, BL.1);
    let right = f.tile(m, BR.0, BR.1);
    let cap_ok = R2_CAP.iter().all(|&((i, j), a, b)| f.has_pair(m, i, j, a, b));
    (left.is_crossing() && left == right && cap_ok).then(|| canonical_over(f, left))
}

fn r2_introduce_ok(m: &Mosaic, f: Frame) -> bool {
    f.tile(m, BL.0, BL.1) == f.pairs_tile(&R2_LEFT)
        && f.tile(m, BR.0, BR.1) == f.pairs_tile(&R2_RIGHT)
        && R2_CAP.iter().all(|&((i, j), a, b)| f.has_pair(m, i, j, a, b))
}

fn frames(m: &Mosaic) -> impl Iterator<Item = Frame> + '_ {
    let rows = m.rows().saturating_sub(1);
    let cols = m.cols().saturating_sub(1);
    (0..rows).flat_map(move |r| (0..cols).flat_map(move |c| (0..4).map(move |k| Frame { anchor: (r, c), d: Dihedral::rotation(k) })))
}

/// Every reducing type I and type II site, ordered by anchor (row-major), then
/// kind, then orientation.
pub fn find_moves(m: &Mosaic) -> Vec<MoveSite> {
    let mut out = Vec::new();
    for f in frames(m) {
        if let Some(over) = r1_reduce_at(m, f) {
            out.push(MoveSite { anchor: f.anchor, kind: MoveKind::R1, orientation: f.d, over, direction: Direction::Reduce });
        }
        if let Some(over) = r2_reduce_at(m, f) {
            out.push(MoveSite { anchor: f.anchor, kind: MoveKind::R2, orientation: f.d, over, direction: Direction::Reduce });
        }
    }
    out.sort();
    out
}

/// Every place a kink or clasp can be introduced, for both crossing kinds.
pub fn find_introductions(m: &Mosaic) -> Vec<MoveSite> {
    let mut out = Vec::new();
    for f in frames(m) {
        for over in [Over::Vertical, Over::Horizontal] {
            let site = |kind| MoveSite { anchor: f.anchor, kind, orientation: f.d, over, direction: Direction::Introduce };
            if r1_introduce_ok(m, f) {
                out.push(site(MoveKind::R1));
            }
            if r2_introduce_ok(m, f) {
                out.push(site(MoveKind::R2));
            }
        }
    }
    out.sort();
    out
}

/// Applies a move, checking that its pattern is present.
pub fn apply_move(m: &Mosaic, site: MoveSite) -> Result<Mosaic, MoveError> {
    let (r, c) = site.anchor;
    if r + 1 >= m.rows() || c + 1 >= m.cols() {
        return Err(MoveError::PatternAbsent(format!("{site:?} lies outside the board")));
    }
    let f = Frame { anchor: site.anchor, d: site.orientation };
    let crossing = f.d.map_tile(Tile::Crossing(site.over));
    let absent = || MoveError::PatternAbsent(format!("{:?} {:?} at {:?}", site.direction, site.kind, site.anchor));
    let mut changes = Vec::new();
    let mut put = |(i, j): (usize, usize), t: Tile| {
        let (r, c) = f.cell(i, j);
        changes.push((r, c, t));
    };
    match (site.kind, site.direction) {
        (MoveKind::R1 | MoveKind::CornerR1, Direction::Reduce) => {
            if r1_reduce_at(m, f) != Some(site.over) {
                return Err(absent());
            }
            put(BL, f.pairs_tile(&[(Edge::S, Edge::W)]));
            for &((i, j), a, b) in &R1_LOOP {
                put((i, j), remove_pair(f.tile(m, i, j), f.edge(a), f.edge(b)));
            }
        }
        (MoveKind::R1 | MoveKind::CornerR1, Direction::Introduce) => {
            if !r1_introduce_ok(m, f) {
                return Err(absent());
            }
            put(BL, crossing);
            for &((i, j), a, b) in &R1_LOOP {
                put((i, j), add_pair(f.tile(m, i, j), f.edge(a), f.edge(b)).expect("checked above"));
            }
        }
        (MoveKind::R2, Direction::Reduce) => {
            if r2_reduce_at(m, f) != Some(site.over) {
                return Err(absent());
            }
            put(BL, f.pairs_tile(&R2_LEFT));
            put(BR, f.pairs_tile(&R2_RIGHT));
        }
        (MoveKind::R2, Direction::Introduce) => {
            if !r2_introduce_ok(m, f) {
                return Err(absent());
            }
            put(BL, crossing);
            put(BR, crossing);
        }
    }
    Ok(m.with_tiles(&changes))
}

/// Applies the first reducing move until none remains.
pub fn reduce_greedy(m: &Mosaic) -> (Mosaic, Vec<MoveSite>) {
    let mut cur = m.clone();
    let mut applied = Vec::new();
    while let Some(&site) = find_moves(&cur).first() {
        cur = apply_move(&cur, site).expect("found sites apply");
        applied.push(site);
    }
    (cur, applied)
}

/// The type I site guaranteed by the corner parity rule.
///
/// For each side of the inner board (taken as its top row after rotating the
/// board), if both end tiles of that row are crossings and an odd number of
/// connection points cross between the row and the boundary row beyond it,
/// parity around the boundary ring forces a kink at one of the two corners.
/// Sides are tried in the order top, right, bottom, left.
pub fn corner_site(m: &Mosaic) -> Option<MoveSite> {
    let n = m.rows();
    if !m.is_square() || n < 4 || !m.is_suitably_connected() {
        return None;
    }
    // Rotation k takes the canonical top side to: top, right, bottom, left.
    for k in 0..4u8 {
        let d = Dihedral::rotation(k);
        let at = |i: usize, j: usize| {
            let ((r, c), _) = d.map_cell(n, n, i, j);
            m.get(r, c)
        };
        let up = d.map_edge(Edge::N);
        if !at(1, 1).is_crossing() || !at(1, n - 2).is_crossing() {
            continue;
        }
        let points = (1..n - 1).filter(|&j| at(1, j).connections().contains(up)).count();
        if points % 2 == 0 {
            continue;
        }
        // Canonical stencil has the crossing bottom-left, as at the top-right
        // corner; three clockwise turns move it bottom-right for the top-left corner.
        for (i, j, turn) in [(0, 0, 3u8), (0, n - 2, 0u8)] {
            let ((r0, c0), _) = d.map_cell(n, n, i, j);
            let ((r1, c1), _) = d.map_cell(n, n, i + 1, j + 1);
            let anchor = (r0.min(r1), c0.min(c1));
            let f = Frame { anchor, d: Dihedral::rotation(turn).then(d) };
            if let Some(over) = r1_reduce_at(m, f) {
                return Some(MoveSite { anchor, kind: MoveKind::CornerR1, orientation: f.d, over, direction: Direction::Reduce });
            }
        }
        unreachable!("corner parity forces a kink at one end of the row");
    }
    None
}

/// The mosaic with one corner kink removed, when the corner parity rule applies.
pub fn corner_reduce(m: &Mosaic) -> Option<Mosaic> {
    corner_site(m).map(|s| apply_move(m, s).expect("corner site applies"))
}

/// All suitably connected full boards extending `inner`: none, or exactly two.
///
/// Each boundary-ring tile meets at most one inner connection point, so its
/// two links along the ring must have the parity of that point. Going once
/// around the ring either fails to close (odd total) or closes for both
/// choices of the first link.
pub fn complete_boundary(inner: &InnerBoard) -> Vec<Mosaic> {
    if !inner.is_internally_consistent() {
        return Vec::new();
    }
    let n = inner.parent_size();
    let base = inner.on_blank_board();
    let ring = ring_cells(n);
    let demand: Vec<Option<Edge>> = ring
        .iter()
        .map(|&(r, c)| {
            Edge::ALL.into_iter().find(|&e| match base.neighbor(r, c, e) {
                Some((nr, nc)) => !is_ring(n, nr, nc) && base.get(nr, nc).connections().contains(e.opposite()),
                None => false,
            })
        })
        .collect();
    if demand.iter().filter(|d| d.is_some()).count() % 2 == 1 {
        return Vec::new();
    }
    let len = ring.len();
    let toward = |i: usize, j: usize| {
        let (r, c) = ring[i];
        Edge::ALL.into_iter().find(|&e| base.neighbor(r, c, e) == Some(ring[j])).expect("ring cells are adjacent")
    };
    let mut out = Vec::new();
    for first in [false, true] {
        // link[i] joins ring[i] and ring[i + 1].
        let mut link = vec![false; len];
        let mut prev = first;
        for i in 0..len {
            link[i] = prev ^ demand[i].is_some();
            prev = link[i];
        }
        let mut m = base.clone();
        for i in 0..len {
            let before = link[(i + len - 1) % len];
            let after = link[i];
            let mut points: Vec<Edge> = Vec::new();
            if before {
                points.push(toward(i, (i + len - 1) % len));
            }
            if after {
                points.push(toward(i, (i + 1) % len));
            }
            points.extend(demand[i]);
            let tile = match points.as_slice() {
                [] => Tile::Blank,
                [a, b] => Tile::from_pairs(&[(*a, *b)]).expect("two points form an arc or line"),
                _ => unreachable!("ring parity keeps every degree at 0 or 2"),
            };
            let (r, c) = ring[i];
            m = m.with_tile(r, c, tile);
        }
        out.push(m);
    }
    out.sort_by_key(|m| m.codes());
    out
}

fn is_ring(n: usize, r: usize, c: usize) -> bool {
    r == 0 || c == 0 || r == n - 1 || c == n - 1
}

/// Boundary cells in cyclic order, clockwise from the top-left corner.
fn ring_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(4 * (n - 1));
    cells.extend((0..n - 1).map(|c| (0, c)));
    cells.extend((0..n - 1).map(|r| (r, n - 1)));
    cells.extend((1..n).rev().map(|c| (n - 1, c)));
    cells.extend((1..n).rev().map(|r| (r, 0)));
    cells
}

/// Inner board of an `n×n` board filled with crossings of one kind.
pub fn all_crossing_inner(n: usize) -> Result<InnerBoard, MoveError> {
    if n < 4 {
        return Err(MoveError::BoardTooSmall(n));
    }
    Ok(InnerBoard::new(n, vec![Tile::Crossing(Over::Vertical); (n - 2) * (n - 2)]))
}

/// The double arc pairing `a` with `b`, for callers that build stencils by hand.
pub fn double_arc_joining(a: Edge, b: Edge) -> Tile {
    let t = Tile::DoubleArc(Diagonal::NwSe);
    if t.partner(a) == Some(b) {
        t
    } else {
        Tile::DoubleArc(Diagonal::NeSw)
    }
}

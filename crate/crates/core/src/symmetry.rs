//! Board symmetries: the eight dihedral motions of the square, optionally
//! combined with swapping over and under at every crossing.
//!
//! Rotations preserve the knot type. A planar reflection and the crossing swap
//! each turn a knot into its mirror image, so an element reverses chirality
//! exactly when it has one of the two but not both.

use crate::mosaic::Mosaic;
use crate::tile::{Edge, Over, Tile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    /// Clockwise quarter turns, applied after the optional flip.
    rot: u8,
    /// Left–right mirror, applied first.
    flip: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { rot: 0, flip: false };

    pub fn rotation(quarter_turns: u8) -> Dihedral {
        Dihedral { rot: quarter_turns % 4, flip: false }
    }

    /// Left–right mirror followed by `quarter_turns` clockwise rotations.
    pub fn reflection(quarter_turns: u8) -> Dihedral {
        Dihedral { rot: quarter_turns % 4, flip: true }
    }

    pub fn all() -> impl Iterator<Item = Dihedral> {
        [false, true].into_iter().flat_map(|flip| (0..4).map(move |rot| Dihedral { rot, flip }))
    }

    pub fn quarter_turns(self) -> u8 {
        self.rot
    }

    pub fn is_reflection(self) -> bool {
        self.flip
    }

    pub fn map_edge(self, e: Edge) -> Edge {
        let e = if self.flip {
            match e {
                Edge::E => Edge::W,
                Edge::W => Edge::E,
                other => other,
            }
        } else {
            e
        };
        Edge::from_index(e.index() + self.rot as usize)
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Dihedral) -> Dihedral {
        Dihedral::all()
            .find(|cand| Edge::ALL.iter().all(|&e| cand.map_edge(e) == next.map_edge(self.map_edge(e))))
            .expect("dihedral group is closed")
    }

    pub fn inverse(self) -> Dihedral {
        Dihedral::all().find(|cand| self.then(*cand) == Dihedral::IDENTITY).expect("inverse exists")
    }

    /// Image of cell `(row, col)` on a `rows×cols` board, with the new board's dimensions.
    pub fn map_cell(self, rows: usize, cols: usize, row: usize, col: usize) -> ((usize, usize), (usize, usize)) {
        let (mut r, mut c, mut h, mut w) = (row, col, rows, cols);
        if self.flip {
            c = w - 1 - c;
        }
        for _ in 0..self.rot {
            (r, c) = (c, h - 1 - r);
            (h, w) = (w, h);
        }
        ((r, c), (h, w))
    }

    pub fn map_tile(self, t: Tile) -> Tile {
        match t {
            Tile::Crossing(over) => {
                let over_edge = if over == Over::Vertical { Edge::N } else { Edge::E };
                if self.map_edge(over_edge).is_vertical() {
                    Tile::Crossing(Over::Vertical)
                } else {
                    Tile::Crossing(Over::Horizontal)
                }
            }
            _ => {
                let (pairs, n) = t.pairs();
                let mapped: Vec<(Edge, Edge)> = pairs[..n].iter().map(|&(a, b)| (self.map_edge(a), self.map_edge(b))).collect();
                Tile::from_pairs(&mapped).expect("dihedral image of a tile is a tile")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub element: Dihedral,
    pub crossing_swap: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { element: Dihedral::IDENTITY, crossing_swap: false };

    pub fn new(element: Dihedral, crossing_swap: bool) -> Symmetry {
        Symmetry { element, crossing_swap }
    }

    /// Clockwise quarter-turn rotation.
    pub fn rot90() -> Symmetry {
        Symmetry::new(Dihedral::rotation(1), false)
    }

    /// Over/under swap at every crossing, no motion of the board.
    pub fn mirror() -> Symmetry {
        Symmetry::new(Dihedral::IDENTITY, true)
    }

    pub fn all() -> impl Iterator<Item = Symmetry> {
        [false, true]
            .into_iter()
            .flat_map(|swap| Dihedral::all().map(move |d| Symmetry::new(d, swap)))
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Symmetry) -> Symmetry {
        Symmetry::new(self.element.then(next.element), self.crossing_swap ^ next.crossing_swap)
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::new(self.element.inverse(), self.crossing_swap)
    }

    /// Whether the image of a knot is its mirror image.
    pub fn reverses_chirality(self) -> bool {
        self.element.is_reflection() ^ self.crossing_swap
    }

    pub fn map_tile(self, t: Tile) -> Tile {
        let t = self.element.map_tile(t);
        if self.crossing_swap {
            t.crossing_swapped()
        } else {
            t
        }
    }

    pub fn short_name(self) -> String {
        let mut s = match (self.element.is_reflection(), self.element.quarter_turns()) {
            (false, 0) => "id".to_string(),
            (false, k) => format!("rot{}", 90 * k as u32),
            (true, 0) => "flip".to_string(),
            (true, k) => format!("flip+rot{}", 90 * k as u32),
        };
        if self.crossing_swap {
            s.push_str("+swap");
        }
        s
    }
}

/// Applies a symmetry to a mosaic, producing a new board.
pub fn transform(m: &Mosaic, s: Symmetry) -> Mosaic {
    let (rows, cols) = (m.rows(), m.cols());
    let (_, (h, w)) = s.element.map_cell(rows, cols, 0, 0);
    let mut cells = vec![Tile::Blank; rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            let ((nr, nc), _) = s.element.map_cell(rows, cols, r, c);
            cells[nr * w + nc] = s.map_tile(m.get(r, c));
        }
    }
    let out = Mosaic::new(h, w, cells).expect("same cell count");
    match m.provenance() {
        Some(p) => out.with_provenance(p),
        None => out,
    }
}

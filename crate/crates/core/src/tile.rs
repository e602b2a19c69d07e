//! The eleven mosaic tiles and their connection points.
//!
//! Tile codes follow a fixed numbering used by the `.mosaic` file format:
//!
//! | code | tile                     | connections    |
//! |------|--------------------------|----------------|
//! | 0    | blank                    |                |
//! | 1    | arc, south–west          | S W            |
//! | 2    | arc, south–east          | S E            |
//! | 3    | arc, north–east          | N E            |
//! | 4    | arc, north–west          | N W            |
//! | 5    | horizontal line          | E W            |
//! | 6    | vertical line            | N S            |
//! | 7    | double arc NW + SE       | N W, S E       |
//! | 8    | double arc NE + SW       | N E, S W       |
//! | 9    | crossing, vertical over  | N S, E W       |
//! | 10   | crossing, horizontal over| N S, E W       |

use std::fmt;

/// One side of a square tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    N,
    E,
    S,
    W,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::N, Edge::E, Edge::S, Edge::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Edge {
        Edge::ALL[i & 3]
    }

    pub fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn opposite(self) -> Edge {
        Edge::from_index(self.index() + 2)
    }

    /// Next edge counterclockwise as seen on the page (N → W → S → E).
    pub fn ccw(self) -> Edge {
        Edge::from_index(self.index() + 3)
    }

    /// Next edge clockwise as seen on the page (N → E → S → W).
    pub fn cw(self) -> Edge {
        Edge::from_index(self.index() + 1)
    }

    /// Unit offset `(drow, dcol)` towards the neighbouring cell across this edge.
    pub fn offset(self) -> (isize, isize) {
        match self {
            Edge::N => (-1, 0),
            Edge::E => (0, 1),
            Edge::S => (1, 0),
            Edge::W => (0, -1),
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Edge::N | Edge::S)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Edge::N => 'N',
            Edge::E => 'E',
            Edge::S => 'S',
            Edge::W => 'W',
        };
        write!(f, "{c}")
    }
}

/// A set of tile edges, stored as a 4-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(u8);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);
    pub const FULL: EdgeSet = EdgeSet(0b1111);

    pub fn from_bits(bits: u8) -> Self {
        EdgeSet(bits & 0b1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, e: Edge) -> bool {
        self.0 & e.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Edge> {
        Edge::ALL.into_iter().filter(move |e| self.contains(*e))
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().fold(0, |acc, e| acc | e.bit()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    SW,
    SE,
    NE,
    NW,
}

impl Corner {
    pub fn edges(self) -> (Edge, Edge) {
        match self {
            Corner::SW => (Edge::S, Edge::W),
            Corner::SE => (Edge::S, Edge::E),
            Corner::NE => (Edge::N, Edge::E),
            Corner::NW => (Edge::N, Edge::W),
        }
    }
}

/// Which pair of opposite corners a double arc joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diagonal {
    /// Arcs in the NW and SE corners (pairs N–W and S–E).
    NwSe,
    /// Arcs in the NE and SW corners (pairs N–E and S–W).
    NeSw,
}

/// Which strand passes over at a crossing tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Over {
    Vertical,
    Horizontal,
}

impl Over {
    pub fn flipped(self) -> Over {
        match self {
            Over::Vertical => Over::Horizontal,
            Over::Horizontal => Over::Vertical,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Tile {
    #[default]
    Blank,
    Arc(Corner),
    LineH,
    LineV,
    DoubleArc(Diagonal),
    Crossing(Over),
}

pub const ALL_TILES: [Tile; 11] = [
    Tile::Blank,
    Tile::Arc(Corner::SW),
    Tile::Arc(Corner::SE),
    Tile::Arc(Corner::NE),
    Tile::Arc(Corner::NW),
    Tile::LineH,
    Tile::LineV,
    Tile::DoubleArc(Diagonal::NwSe),
    Tile::DoubleArc(Diagonal::NeSw),
    Tile::Crossing(Over::Vertical),
    Tile::Crossing(Over::Horizontal),
];

/// Up to two edge pairs joined inside a tile.
pub type Pairing = ([(Edge, Edge); 2], usize);

impl Tile {
    pub fn code(self) -> u8 {
        match self {
            Tile::Blank => 0,
            Tile::Arc(Corner::SW) => 1,
            Tile::Arc(Corner::SE) => 2,
            Tile::Arc(Corner::NE) => 3,
            Tile::Arc(Corner::NW) => 4,
            Tile::LineH => 5,
            Tile::LineV => 6,
            Tile::DoubleArc(Diagonal::NwSe) => 7,
            Tile::DoubleArc(Diagonal::NeSw) => 8,
            Tile::Crossing(Over::Vertical) => 9,
            Tile::Crossing(Over::Horizontal) => 10,
        }
    }

    pub fn from_code(code: u8) -> Option<Tile> {
        ALL_TILES.get(code as usize).copied()
    }

    pub fn is_blank(self) -> bool {
        self == Tile::Blank
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Tile::Crossing(_))
    }

    pub fn connections(self) -> EdgeSet {
        let (pairs, n) = self.pairs();
        pairs[..n].iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// The perfect matching on this tile's connection points.
    pub fn pairs(self) -> Pairing {
        use Edge::*;
        const NONE: (Edge, Edge) = (N, N);
        match self {
            Tile::Blank => ([NONE, NONE], 0),
            Tile::Arc(c) => ([c.edges(), NONE], 1),
            Tile::LineH => ([(E, W), NONE], 1),
            Tile::LineV => ([(N, S), NONE], 1),
            Tile::DoubleArc(Diagonal::NwSe) => ([(N, W), (S, E)], 2),
            Tile::DoubleArc(Diagonal::NeSw) => ([(N, E), (S, W)], 2),
            Tile::Crossing(_) => ([(N, S), (E, W)], 2),
        }
    }

    /// Where a strand entering through `e` leaves this tile.
    pub fn partner(self, e: Edge) -> Option<Edge> {
        let (pairs, n) = self.pairs();
        pairs[..n].iter().find_map(|&(a, b)| {
            if a == e {
                Some(b)
            } else if b == e {
                Some(a)
            } else {
                None
            }
        })
    }

    /// The unique non-crossing tile whose pairing is exactly `pairs`.
    pub fn from_pairs(pairs: &[(Edge, Edge)]) -> Option<Tile> {
        let mut want: Vec<u8> = pairs.iter().map(|&(a, b)| a.bit() | b.bit()).collect();
        want.sort_unstable();
        ALL_TILES.into_iter().filter(|t| !t.is_crossing()).find(|t| {
            let (p, n) = t.pairs();
            let mut have: Vec<u8> = p[..n].iter().map(|&(a, b)| a.bit() | b.bit()).collect();
            have.sort_unstable();
            have == want
        })
    }

    /// Whether the strand through edge `e` is the over strand of a crossing.
    pub fn is_over_at(self, e: Edge) -> bool {
        match self {
            Tile::Crossing(Over::Vertical) => e.is_vertical(),
            Tile::Crossing(Over::Horizontal) => !e.is_vertical(),
            _ => false,
        }
    }

    /// Swaps over and under on crossing tiles; other tiles are unchanged.
    pub fn crossing_swapped(self) -> Tile {
        match self {
            Tile::Crossing(o) => Tile::Crossing(o.flipped()),
            t => t,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

//! Mosaic boards, the `.mosaic` text format, suitable-connection checks and
//! strand tracing.
//!
//! A `.mosaic` file has a header line `ROWS COLS` followed by `ROWS` lines of
//! `COLS` space-separated tile codes (0–10, see [`crate::tile`]). Lines whose
//! first non-space character is `#` are comments.

use std::fmt;

use crate::error::{MosaicError, TraceError};
use crate::tile::{Edge, Tile};

#[derive(Clone, Debug, Eq)]
pub struct Mosaic {
    rows: usize,
    cols: usize,
    cells: Vec<Tile>,
    provenance: Option<String>,
}

/// Equality ignores the provenance label.
impl PartialEq for Mosaic {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.cells == other.cells
    }
}

impl std::hash::Hash for Mosaic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.cells.hash(state);
    }
}

impl Mosaic {
    pub fn new(rows: usize, cols: usize, cells: Vec<Tile>) -> Result<Mosaic, MosaicError> {
        if rows == 0 || cols == 0 {
            return Err(MosaicError::EmptyBoard);
        }
        if cells.len() != rows * cols {
            return Err(MosaicError::CellCount { expected: rows * cols, found: cells.len() });
        }
        Ok(Mosaic { rows, cols, cells, provenance: None })
    }

    pub fn blank(rows: usize, cols: usize) -> Mosaic {
        assert!(rows > 0 && cols > 0, "board dimensions must be positive");
        Mosaic { rows, cols, cells: vec![Tile::Blank; rows * cols], provenance: None }
    }

    /// Square board from row-major tile codes.
    pub fn from_codes(n: usize, codes: &[u8]) -> Result<Mosaic, MosaicError> {
        let cells = codes
            .iter()
            .map(|&c| Tile::from_code(c).ok_or(MosaicError::CodeOutOfRange { line: 0, code: c as u32 }))
            .collect::<Result<Vec<_>, _>>()?;
        Mosaic::new(n, n, cells)
    }

    pub fn with_provenance(mut self, label: impl Into<String>) -> Mosaic {
        self.provenance = Some(label.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Board size of a square mosaic.
    pub fn size(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        self.cells[row * self.cols + col]
    }

    pub fn codes(&self) -> Vec<u8> {
        self.cells.iter().map(|t| t.code()).collect()
    }

    /// Copy of this mosaic with one cell replaced.
    pub fn with_tile(&self, row: usize, col: usize, tile: Tile) -> Mosaic {
        let mut out = self.clone();
        out.cells[row * self.cols + col] = tile;
        out
    }

    /// Copy with several cells replaced.
    pub fn with_tiles(&self, changes: &[(usize, usize, Tile)]) -> Mosaic {
        let mut out = self.clone();
        for &(r, c, t) in changes {
            out.cells[r * self.cols + c] = t;
        }
        out
    }

    /// Places this mosaic on a larger blank board with its top-left cell at `(top, left)`.
    pub fn embedded(&self, rows: usize, cols: usize, top: usize, left: usize) -> Mosaic {
        assert!(top + self.rows <= rows && left + self.cols <= cols, "embedding out of bounds");
        let mut out = Mosaic::blank(rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.cells[(r + top) * cols + c + left] = self.get(r, c);
            }
        }
        out.provenance = self.provenance.clone();
        out
    }

    pub fn neighbor(&self, row: usize, col: usize, e: Edge) -> Option<(usize, usize)> {
        let (dr, dc) = e.offset();
        let r = row.checked_add_signed(dr)?;
        let c = col.checked_add_signed(dc)?;
        (r < self.rows && c < self.cols).then_some((r, c))
    }

    pub fn crossing_tiles(&self) -> usize {
        self.cells.iter().filter(|t| t.is_crossing()).count()
    }

    pub fn nonblank_tiles(&self) -> usize {
        self.cells.iter().filter(|t| !t.is_blank()).count()
    }

    /// Edges whose connection points are unmatched: `(row, col, edge)` for every
    /// connection point that faces the board boundary or a neighbour without a
    /// matching point. Empty exactly when the mosaic is suitably connected.
    pub fn mismatched_edges(&self) -> Vec<(usize, usize, Edge)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                for e in self.get(r, c).connections().iter() {
                    let ok = match self.neighbor(r, c, e) {
                        Some((nr, nc)) => self.get(nr, nc).connections().contains(e.opposite()),
                        None => false,
                    };
                    if !ok {
                        out.push((r, c, e));
                    }
                }
            }
        }
        out
    }

    pub fn is_suitably_connected(&self) -> bool {
        (0..self.rows).all(|r| {
            (0..self.cols).all(|c| {
                self.get(r, c).connections().iter().all(|e| match self.neighbor(r, c, e) {
                    Some((nr, nc)) => self.get(nr, nc).connections().contains(e.opposite()),
                    None => false,
                })
            })
        })
    }

    /// Splits the strands of a suitably connected mosaic into closed loops.
    ///
    /// Loops are discovered in row-major order of their least connection point
    /// and each is walked starting by entering that cell through that point.
    pub fn trace_components(&self) -> Result<Vec<StrandLoop>, TraceError> {
        if !self.is_suitably_connected() {
            return Err(TraceError::NotSuitablyConnected);
        }
        let mut seen = vec![0u8; self.cells.len()];
        let mut loops = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let tile = self.get(r, c);
                for e in tile.connections().iter() {
                    if seen[r * self.cols + c] & e.bit() != 0 {
                        continue;
                    }
                    loops.push(self.walk_loop(r, c, e, &mut seen));
                }
            }
        }
        Ok(loops)
    }

    fn walk_loop(&self, row: usize, col: usize, entry: Edge, seen: &mut [u8]) -> StrandLoop {
        let mut steps = Vec::new();
        let (mut r, mut c, mut e) = (row, col, entry);
        loop {
            let tile = self.get(r, c);
            let exit = tile.partner(e).expect("suitably connected strand");
            seen[r * self.cols + c] |= e.bit() | exit.bit();
            steps.push(Step { row: r, col: c, entry: e });
            let (nr, nc) = self.neighbor(r, c, exit).expect("suitably connected strand");
            (r, c, e) = (nr, nc, exit.opposite());
            if (r, c, e) == (row, col, entry) {
                break;
            }
        }
        StrandLoop { steps }
    }

    pub fn component_count(&self) -> Result<usize, TraceError> {
        self.trace_components().map(|l| l.len())
    }

    /// The `(n-2)×(n-2)` block of non-boundary tiles.
    pub fn inner_board(&self) -> InnerBoard {
        assert!(self.is_square() && self.rows >= 3, "inner board needs a square board of size >= 3");
        let n = self.rows;
        let k = n - 2;
        let cells = (0..k * k).map(|i| self.get(1 + i / k, 1 + i % k)).collect();
        InnerBoard { n, cells }
    }

    /// Text in the `.mosaic` format, without a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}", self.rows, self.cols);
        for r in 0..self.rows {
            s.push('\n');
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).code().to_string()).collect();
            s.push_str(&row.join(" "));
        }
        s
    }

    /// Parses the `.mosaic` text format. Comment lines become the provenance label.
    pub fn parse(text: &str) -> Result<Mosaic, MosaicError> {
        let mut comments = Vec::new();
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let t = l.trim();
            if let Some(rest) = t.strip_prefix('#') {
                comments.push(rest.trim().to_string());
                None
            } else if t.is_empty() {
                None
            } else {
                Some((i + 1, t))
            }
        });

        let (hline, header) = lines.next().ok_or(MosaicError::MissingHeader)?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| s.parse::<usize>().ok().filter(|&v| v > 0);
        let (rows, cols) = match dims.as_slice() {
            [r, c] => match (parse_dim(r), parse_dim(c)) {
                (Some(r), Some(c)) => (r, c),
                _ => return Err(MosaicError::MalformedHeader { line: hline }),
            },
            _ => return Err(MosaicError::MalformedHeader { line: hline }),
        };

        let mut cells = Vec::with_capacity(rows * cols);
        let mut seen_rows = 0;
        for (line, text) in lines.by_ref() {
            if seen_rows == rows {
                return Err(MosaicError::RowCount { expected: rows, found: seen_rows + 1, line });
            }
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if tokens.len() != cols {
                return Err(MosaicError::RowLength { line, expected: cols, found: tokens.len() });
            }
            for tok in tokens {
                let code: u32 = tok.parse().map_err(|_| MosaicError::BadToken { line, token: tok.to_string() })?;
                let tile = u8::try_from(code)
                    .ok()
                    .and_then(Tile::from_code)
                    .ok_or(MosaicError::CodeOutOfRange { line, code })?;
                cells.push(tile);
            }
            seen_rows += 1;
        }
        if seen_rows != rows {
            return Err(MosaicError::RowCount { expected: rows, found: seen_rows, line: hline });
        }
        drop(lines);
        let mut m = Mosaic::new(rows, cols, cells)?;
        if !comments.is_empty() {
            m.provenance = Some(comments.join("\n"));
        }
        Ok(m)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for Mosaic {
    type Err = MosaicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mosaic::parse(s)
    }
}

/// Entering cell `(row, col)` through `entry`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub row: usize,
    pub col: usize,
    pub entry: Edge,
}

/// One closed strand, as the cyclic sequence of cell entries along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandLoop {
    pub steps: Vec<Step>,
}

impl StrandLoop {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// The inner tiles of an `n×n` board, addressed `I^1..I^{(n-2)^2}` in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InnerBoard {
    n: usize,
    cells: Vec<Tile>,
}

impl InnerBoard {
    pub fn new(n: usize, cells: Vec<Tile>) -> InnerBoard {
        assert!(n >= 3, "inner boards exist for n >= 3");
        assert_eq!(cells.len(), (n - 2) * (n - 2), "inner board cell count");
        InnerBoard { n, cells }
    }

    /// Size of the enclosing board.
    pub fn parent_size(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.n - 2
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    /// Inner tile `I^label`, with labels starting at 1.
    pub fn label(&self, label: usize) -> Tile {
        assert!(label >= 1 && label <= self.cells.len(), "inner label out of range");
        self.cells[label - 1]
    }

    pub fn get(&self, row: usize, col: usize) -> Tile {
        self.cells[row * self.width() + col]
    }

    /// Every edge shared by two inner tiles agrees on its connection point.
    pub fn is_internally_consistent(&self) -> bool {
        let k = self.width();
        (0..k).all(|r| {
            (0..k).all(|c| {
                let t = self.get(r, c);
                let east_ok = c + 1 == k || t.connections().contains(Edge::E) == self.get(r, c + 1).connections().contains(Edge::W);
                let south_ok = r + 1 == k || t.connections().contains(Edge::S) == self.get(r + 1, c).connections().contains(Edge::N);
                east_ok && south_ok
            })
        })
    }

    /// The full board with this inner board and an all-blank boundary ring.
    pub fn on_blank_board(&self) -> Mosaic {
        let k = self.width();
        let mut m = Mosaic::blank(self.n, self.n);
        for r in 0..k {
            for c in 0..k {
                m.cells[(r + 1) * self.n + c + 1] = self.get(r, c);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tile::{Corner, Over};

    fn unknot2() -> Mosaic {
        Mosaic::parse("2 2\n2 1\n3 4").unwrap()
    }

    #[test]
    fn parse_unknot() {
        let m = unknot2();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(m.get(0, 0), Tile::Arc(Corner::SE));
        assert_eq!(m.get(1, 1), Tile::Arc(Corner::NW));
        assert_eq!(m.to_text(), "2 2\n2 1\n3 4");
    }

    #[test]
    fn parse_single_crossing() {
        let m = Mosaic::parse("1 1\n9").unwrap();
        assert_eq!(m.get(0, 0), Tile::Crossing(Over::Vertical));
        assert!(!m.is_suitably_connected());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(Mosaic::parse("2 2\n2 11\n3 4"), Err(MosaicError::CodeOutOfRange { line: 2, code: 11 })));
        assert!(matches!(Mosaic::parse("2 2\n2 1 1\n3 4"), Err(MosaicError::RowLength { line: 2, expected: 2, found: 3 })));
        assert!(matches!(Mosaic::parse("2\n2 1\n3 4"), Err(MosaicError::MalformedHeader { line: 1 })));
        assert!(matches!(Mosaic::parse("# c\n2 x\n"), Err(MosaicError::MalformedHeader { line: 2 })));
        assert!(matches!(Mosaic::parse("2 2\n2 1"), Err(MosaicError::RowCount { expected: 2, found: 1, .. })));
        assert!(matches!(Mosaic::parse("2 2\n2 1\n3 4\n0 0"), Err(MosaicError::RowCount { line: 4, .. })));
        assert!(matches!(Mosaic::parse("2 2\n2 a\n3 4"), Err(MosaicError::BadToken { line: 2, .. })));
        assert!(matches!(Mosaic::parse(""), Err(MosaicError::MissingHeader)));
    }

    #[test]
    fn comments_and_trailing_newline() {
        let m = Mosaic::parse("# unknot\n2 2\n# middle\n2 1\n3 4\n").unwrap();
        assert_eq!(m, unknot2());
        assert_eq!(m.provenance(), Some("unknot\nmiddle"));
    }

    #[test]
    fn suitable_connection() {
        assert!(unknot2().is_suitably_connected());
        let broken = unknot2().with_tile(1, 1, Tile::Blank);
        assert!(!broken.is_suitably_connected());
        assert_eq!(broken.mismatched_edges().len(), 2);
        assert!(Mosaic::blank(3, 3).is_suitably_connected());
    }

    #[test]
    fn tracing() {
        let loops = unknot2().trace_components().unwrap();
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), 4);
        assert_eq!(loops[0].steps[0], Step { row: 0, col: 0, entry: Edge::E });
        assert!(Mosaic::blank(3, 3).trace_components().unwrap().is_empty());
        assert_eq!(unknot2().with_tile(0, 0, Tile::Blank).trace_components(), Err(TraceError::NotSuitablyConnected));
    }

    #[test]
    fn counts() {
        let m = unknot2();
        assert_eq!(m.crossing_tiles(), 0);
        assert_eq!(m.nonblank_tiles(), 4);
    }

    #[test]
    fn inner_board_labels_read_row_major() {
        let codes: Vec<u8> = (0..25).map(|i| (i % 11) as u8).collect();
        let m = Mosaic::from_codes(5, &codes).unwrap();
        let inner = m.inner_board();
        assert_eq!(inner.label(1), m.get(1, 1));
        assert_eq!(inner.label(3), m.get(1, 3));
        assert_eq!(inner.label(5), m.get(2, 2));
        assert_eq!(inner.label(9), m.get(3, 3));
    }

    #[test]
    fn embedding_preserves_validity() {
        let big = unknot2().embedded(4, 4, 1, 2);
        assert!(big.is_suitably_connected());
        assert_eq!(big.get(1, 2), Tile::Arc(Corner::SE));
        assert_eq!(big.nonblank_tiles(), 4);
    }
}

//! Planar diagram (PD) codes extracted from one-component mosaics.
//!
//! Arcs are numbered `1..=2c` along the strand. Each crossing is recorded as
//! `(a, b, c, d)`: the arc labels met going counterclockwise around the
//! crossing, starting with the incoming under-strand. The sign of each
//! crossing (its orientation data) is stored alongside the labels.

use std::fmt;

use crate::error::DiagramError;
use crate::mosaic::Mosaic;
use crate::tile::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdCrossing {
    pub labels: [u32; 4],
    /// +1 for a right-handed crossing, -1 for left-handed.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<PdCrossing>,
    /// Board cell of each crossing when extracted from a mosaic.
    cells: Vec<(usize, usize)>,
}

impl PlanarDiagram {
    /// The zero-crossing diagram of the unknot.
    pub fn unknot() -> PlanarDiagram {
        PlanarDiagram { crossings: Vec::new(), cells: Vec::new() }
    }

    /// Builds a diagram from crossings with explicit signs, checking that every
    /// arc label in `1..=2c` occurs exactly twice.
    pub fn new(crossings: Vec<PdCrossing>) -> Result<PlanarDiagram, DiagramError> {
        let arcs = 2 * crossings.len();
        let mut seen = vec![0u8; arcs + 1];
        for x in &crossings {
            if x.sign != 1 && x.sign != -1 {
                return Err(DiagramError::MalformedCode(format!("crossing sign {}", x.sign)));
            }
            for &l in &x.labels {
                if l == 0 || l as usize > arcs {
                    return Err(DiagramError::MalformedCode(format!("arc label {l} outside 1..={arcs}")));
                }
                seen[l as usize] += 1;
            }
        }
        if let Some(l) = (1..=arcs).find(|&l| seen[l] != 2) {
            return Err(DiagramError::MalformedCode(format!("arc label {l} appears {} times", seen[l])));
        }
        Ok(PlanarDiagram { crossings, cells: Vec::new() })
    }

    /// Builds a diagram from a bare PD code, reading each crossing's sign off the
    /// arc numbering: the over-strand runs from `d` to `b` exactly when `b`
    /// follows `d`.
    pub fn from_code(code: &[[u32; 4]]) -> Result<PlanarDiagram, DiagramError> {
        let arcs = 2 * code.len() as u32;
        if arcs == 2 {
            return Err(DiagramError::MalformedCode("one-crossing codes need explicit signs".into()));
        }
        let succ = |l: u32| if l == arcs { 1 } else { l + 1 };
        let crossings = code
            .iter()
            .map(|&[a, b, c, d]| {
                let sign = if b == succ(d) {
                    1
                } else if d == succ(b) {
                    -1
                } else {
                    return Err(DiagramError::MalformedCode(format!("over-strand labels {b},{d} are not consecutive")));
                };
                if c != succ(a) {
                    return Err(DiagramError::MalformedCode(format!("under-strand labels {a},{c} are not consecutive")));
                }
                Ok(PdCrossing { labels: [a, b, c, d], sign })
            })
            .collect::<Result<Vec<_>, _>>()?;
        PlanarDiagram::new(crossings)
    }

    /// Extracts the diagram of a one-component mosaic.
    ///
    /// The strand is followed from the least `(row, col, edge)` connection point;
    /// crossings are listed in order of first visit.
    pub fn from_mosaic(m: &Mosaic) -> Result<PlanarDiagram, DiagramError> {
        let loops = m.trace_components()?;
        if loops.len() != 1 {
            return Err(DiagramError::NotAKnot(loops.len()));
        }
        let steps = &loops[0].steps;

        struct Visit {
            slot: usize,
            entry: Edge,
            over: bool,
        }
        let mut slot_of_cell: Vec<Option<usize>> = vec![None; m.rows() * m.cols()];
        let mut cells = Vec::new();
        let mut visits = Vec::new();
        for s in steps {
            let tile = m.get(s.row, s.col);
            if !tile.is_crossing() {
                continue;
            }
            let idx = s.row * m.cols() + s.col;
            let slot = *slot_of_cell[idx].get_or_insert_with(|| {
                cells.push((s.row, s.col));
                cells.len() - 1
            });
            visits.push(Visit { slot, entry: s.entry, over: tile.is_over_at(s.entry) });
        }
        if visits.is_empty() {
            return Ok(PlanarDiagram::unknot());
        }

        let arcs = visits.len() as u32;
        // labels[slot][edge]
        let mut labels = vec![[0u32; 4]; cells.len()];
        let mut under_entry = vec![Edge::N; cells.len()];
        let mut over_entry = vec![Edge::N; cells.len()];
        for (k, v) in visits.iter().enumerate() {
            let incoming = k as u32 + 1;
            let outgoing = if incoming == arcs { 1 } else { incoming + 1 };
            labels[v.slot][v.entry.index()] = incoming;
            labels[v.slot][v.entry.opposite().index()] = outgoing;
            if v.over {
                over_entry[v.slot] = v.entry;
            } else {
                under_entry[v.slot] = v.entry;
            }
        }

        let crossings = (0..cells.len())
            .map(|slot| {
                let e = under_entry[slot];
                let l = &labels[slot];
                let lab = [l[e.index()], l[e.ccw().index()], l[e.opposite().index()], l[e.opposite().ccw().index()]];
                PdCrossing { labels: lab, sign: geometric_sign(over_entry[slot], e) }
            })
            .collect();
        Ok(PlanarDiagram { crossings, cells })
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Board cells of the crossings, in PD order (empty for diagrams not built from a mosaic).
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign as i32).sum()
    }

    /// Over/under flags at the crossings met along the strand, in arc order.
    pub fn over_sequence(&self) -> Vec<bool> {
        let mut seq = vec![false; self.arc_count()];
        for x in &self.crossings {
            let [a, b, _, d] = x.labels;
            let over_in = if x.sign > 0 { d } else { b };
            seq[a as usize - 1] = false;
            seq[over_in as usize - 1] = true;
        }
        seq
    }

    /// Crossings that a circle in the plane meeting the diagram only there
    /// would separate, i.e. those whose two passes along the strand are not
    /// interlaced with the passes of any other crossing. Each can be undone
    /// by twisting one side of the diagram.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let passes: Vec<(u32, u32)> = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, _, d] = x.labels;
                let over_in = if x.sign > 0 { d } else { b };
                (a.min(over_in), a.max(over_in))
            })
            .collect();
        let inside = |(lo, hi): (u32, u32), p: u32| lo < p && p < hi;
        (0..passes.len())
            .filter(|&i| {
                passes.iter().enumerate().all(|(j, &(p, q))| i == j || inside(passes[i], p) == inside(passes[i], q))
            })
            .collect()
    }

    /// No nugatory crossings.
    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// Whether the strand alternates over and under at successive crossings.
    pub fn is_alternating(&self) -> bool {
        let seq = self.over_sequence();
        seq.iter().zip(seq.iter().cycle().skip(1)).all(|(a, b)| a != b)
    }

    /// The same diagram with every crossing switched.
    pub fn mirrored(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.labels;
                // The old over-strand becomes the under-strand; restart at its incoming arc.
                let labels = if x.sign > 0 { [d, a, b, c] } else { [b, c, d, a] };
                PdCrossing { labels, sign: -x.sign }
            })
            .collect();
        PlanarDiagram { crossings, cells: self.cells.clone() }
    }

    /// Bare code, without signs.
    pub fn code(&self) -> Vec<[u32; 4]> {
        self.crossings.iter().map(|x| x.labels).collect()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| format!("({},{},{},{})", x.labels[0], x.labels[1], x.labels[2], x.labels[3]))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Sign of a crossing whose over- and under-strands enter through the given edges.
///
/// With page coordinates (y pointing down) a crossing is right-handed when the
/// cross product of the over direction with the under direction is negative.
fn geometric_sign(over_entry: Edge, under_entry: Edge) -> i8 {
    let dir = |e: Edge| {
        let (dr, dc) = e.offset();
        (-dc, -dr)
    };
    let (ox, oy) = dir(over_entry);
    let (ux, uy) = dir(under_entry);
    if ox * uy - oy * ux < 0 {
        1
    } else {
        -1
    }
}

//! Exhaustive generation of suitably connected mosaics.
//!
//! Cells are filled row-major. The frontier is the row of `n` vertical stubs
//! below the cells filled so far plus the horizontal stub entering the next
//! cell from the west; `mate[p]` is the frontier position holding the other
//! end of the partial strand through position `p`. A tile is only tried when
//! its north and west connection points agree with the frontier, so every
//! emitted board is suitably connected by construction. Boards come out in
//! lexicographic order of their tile codes.
//!
//! With `require_single_component`, a loop may close only when it is the last
//! open strand and no loop exists yet, and no strand may start after that.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::bracket::normalized_bracket;
use crate::diagram::{PdCrossing, PlanarDiagram};
use crate::error::EnumError;
use crate::mosaic::Mosaic;
use crate::poly::LaurentPoly;
use crate::reference::{reference_table, Identification, ReferenceTable};
use crate::tile::ALL_TILES;

pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 6;
/// Largest board enumerated without a crossing-tile cap.
pub const MAX_EXHAUSTIVE_SIZE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EnumFilter {
    pub max_crossing_tiles: Option<usize>,
    pub exact_crossing_tiles: Option<usize>,
    /// Only knot diagrams whose crossings alternate.
    pub alternating_only: bool,
    /// Only diagrams without nugatory crossings.
    pub reduced_only: bool,
    pub require_single_component: bool,
}

impl Default for EnumFilter {
    fn default() -> Self {
        EnumFilter {
            max_crossing_tiles: None,
            exact_crossing_tiles: None,
            alternating_only: false,
            reduced_only: false,
            require_single_component: true,
        }
    }
}

impl EnumFilter {
    /// Every suitably connected board, links and the blank board included.
    pub fn all_boards() -> Self {
        EnumFilter { require_single_component: false, ..EnumFilter::default() }
    }

    fn crossing_cap(&self) -> usize {
        match (self.max_crossing_tiles, self.exact_crossing_tiles) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => usize::MAX,
        }
    }

    fn is_capped(&self) -> bool {
        self.max_crossing_tiles.is_some() || self.exact_crossing_tiles.is_some()
    }
}

const NONE: u8 = u8::MAX;
const CELLS: usize = MAX_SIZE * MAX_SIZE;

/// A partially filled board.
#[derive(Clone, Copy, Debug)]
struct Partial {
    pos: u8,
    /// Positions `0..n` are vertical stubs, position `n` the horizontal stub.
    mate: [u8; MAX_SIZE + 1],
    codes: [u8; CELLS],
    loops: u8,
    crossings: u8,
    open: u8,
}

/// Tile codes by required (west, north) connection points, ascending.
const CANDIDATES: [&[u8]; 4] = [
    &[0, 2],          // neither
    &[1, 5],          // west
    &[3, 6],          // north
    &[4, 7, 8, 9, 10], // both
];

#[derive(Clone, Copy, Debug)]
struct Search {
    n: usize,
    filter: EnumFilter,
    cap: usize,
}

impl Search {
    fn new(n: usize, filter: EnumFilter) -> Result<Search, EnumError> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
            return Err(EnumError::SizeOutOfRange(n));
        }
        Ok(Search { n, filter, cap: filter.crossing_cap() })
    }

    fn root(&self) -> Partial {
        Partial { pos: 0, mate: [NONE; MAX_SIZE + 1], codes: [0; CELLS], loops: 0, crossings: 0, open: 0 }
    }

    fn is_complete(&self, p: &Partial) -> bool {
        p.pos as usize == self.n * self.n
    }

    fn candidates(&self, p: &Partial) -> &'static [u8] {
        let n = self.n;
        let col = p.pos as usize % n;
        let west = p.mate[n] != NONE;
        let north = p.mate[col] != NONE;
        CANDIDATES[west as usize | (north as usize) << 1]
    }

    /// Places `code` at the next cell, or `None` if the branch is pruned.
    fn place(&self, p: &Partial, code: u8) -> Option<Partial> {
        let n = self.n;
        let pos = p.pos as usize;
        let (row, col) = (pos / n, pos % n);
        let tile = ALL_TILES[code as usize];
        let conn = tile.connections();
        use crate::tile::Edge::{E, S};
        if (col == n - 1 && conn.contains(E)) || (row == n - 1 && conn.contains(S)) {
            return None;
        }
        let single = self.filter.require_single_component;
        let mut q = *p;
        q.codes[pos] = code;
        q.pos += 1;
        let (v, h) = (col, n);
        match code {
            0 => {}
            // Arc(SE): a new strand
            2 => start_strand(&mut q, v, h, single)?,
            // Arc(SW): west end moves down
            1 => move_end(&mut q, h, v),
            // Arc(NE): north end moves east
            3 => move_end(&mut q, v, h),
            // LineH, LineV, crossings: ends pass straight through
            5 | 6 => {}
            9 | 10 => {
                q.crossings += 1;
                if q.crossings as usize > self.cap {
                    return None;
                }
            }
            // Arc(NW): join west and north
            4 => join(&mut q, v, h, single)?,
            // DoubleArc(NWSE): join west and north, then start a strand S–E
            7 => {
                join(&mut q, v, h, single)?;
                start_strand(&mut q, v, h, single)?;
            }
            // DoubleArc(NESW): the two ends swap places
            8 => swap_ends(&mut q, v, h),
            _ => unreachable!("tile codes are 0-10"),
        }
        if let Some(exact) = self.filter.exact_crossing_tiles {
            let remaining = n * n - q.pos as usize;
            if (q.crossings as usize) + remaining < exact {
                return None;
            }
        }
        Some(q)
    }

    fn accepts(&self, p: &Partial) -> bool {
        let f = &self.filter;
        if f.require_single_component && p.loops != 1 {
            return false;
        }
        if let Some(exact) = f.exact_crossing_tiles {
            if p.crossings as usize != exact {
                return false;
            }
        }
        if f.alternating_only || f.reduced_only {
            let m = self.mosaic(p);
            let Ok(pd) = PlanarDiagram::from_mosaic(&m) else { return false };
            return (!f.alternating_only || pd.is_alternating()) && (!f.reduced_only || pd.is_reduced());
        }
        true
    }

    fn mosaic(&self, p: &Partial) -> Mosaic {
        Mosaic::from_codes(self.n, &p.codes[..self.n * self.n]).expect("enumerated codes form a board")
    }

    /// All partial boards with the first `depth` cells filled, in order.
    fn prefixes(&self, depth: usize) -> Vec<Partial> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(p) = stack.pop() {
            if p.pos as usize == depth || self.is_complete(&p) {
                out.push(p);
                continue;
            }
            for &code in self.candidates(&p).iter().rev() {
                if let Some(q) = self.place(&p, code) {
                    stack.push(q);
                }
            }
        }
        out
    }

    fn iter_from(self, start: Partial) -> MosaicIter {
        MosaicIter { search: self, stack: vec![(start, 0)] }
    }
}

fn start_strand(q: &mut Partial, v: usize, h: usize, single: bool) -> Option<()> {
    if single && q.loops > 0 {
        return None;
    }
    q.mate[v] = h as u8;
    q.mate[h] = v as u8;
    q.open += 2;
    Some(())
}

fn move_end(q: &mut Partial, from: usize, to: usize) {
    let other = q.mate[from];
    q.mate[from] = NONE;
    q.mate[to] = other;
    q.mate[other as usize] = to as u8;
}

fn swap_ends(q: &mut Partial, v: usize, h: usize) {
    let (mv, mh) = (q.mate[v], q.mate[h]);
    if mv == h as u8 {
        return;
    }
    q.mate[v] = mh;
    q.mate[h] = mv;
    q.mate[mh as usize] = v as u8;
    q.mate[mv as usize] = h as u8;
}

fn join(q: &mut Partial, v: usize, h: usize, single: bool) -> Option<()> {
    let (mv, mh) = (q.mate[v], q.mate[h]);
    q.mate[v] = NONE;
    q.mate[h] = NONE;
    q.open -= 2;
    if mv == h as u8 {
        if single && (q.loops > 0 || q.open > 0) {
            return None;
        }
        q.loops += 1;
    } else {
        q.mate[mv as usize] = mh;
        q.mate[mh as usize] = mv;
    }
    Some(())
}

/// Depth-first stream of boards in lexicographic tile-code order.
pub struct MosaicIter {
    search: Search,
    stack: Vec<(Partial, u8)>,
}

impl Iterator for MosaicIter {
    type Item = Mosaic;

    fn next(&mut self) -> Option<Mosaic> {
        loop {
            let (p, next) = self.stack.last_mut()?;
            if self.search.is_complete(p) {
                let p = *p;
                self.stack.pop();
                if self.search.accepts(&p) {
                    return Some(self.search.mosaic(&p));
                }
                continue;
            }
            let cands = self.search.candidates(p);
            if *next as usize >= cands.len() {
                self.stack.pop();
                continue;
            }
            let code = cands[*next as usize];
            *next += 1;
            let p = *p;
            if let Some(q) = self.search.place(&p, code) {
                self.stack.push((q, 0));
            }
        }
    }
}

/// Streams every suitably connected `n×n` board passing `filter`, each once,
/// in lexicographic order of tile codes.
pub fn enumerate_mosaics(n: usize, filter: EnumFilter) -> Result<MosaicIter, EnumError> {
    let search = Search::new(n, filter)?;
    Ok(search.iter_from(search.root()))
}

/// Folds over all boards passing `filter`, split into independent chunks by
/// board prefix. Chunk results are merged in board order, so the outcome does
/// not depend on `workers` as long as `merge` is associative.
pub fn fold_mosaics<T, I, F, M>(n: usize, filter: EnumFilter, workers: usize, init: I, fold: F, merge: M) -> Result<T, EnumError>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, Mosaic) + Sync,
    M: Fn(T, T) -> T,
{
    let search = Search::new(n, filter)?;
    let run = |start: Partial| {
        let mut acc = init();
        for m in search.iter_from(start) {
            fold(&mut acc, m);
        }
        acc
    };
    let depth = (n + 2).min(n * n);
    let prefixes = search.prefixes(depth);
    let parts = chunk_results(prefixes, workers, &run);
    Ok(parts.into_iter().fold(init(), merge))
}

#[cfg(feature = "parallel")]
fn chunk_results<T: Send>(prefixes: Vec<Partial>, workers: usize, run: &(impl Fn(Partial) -> T + Sync)) -> Vec<T> {
    use rayon::prelude::*;
    if workers <= 1 {
        return prefixes.into_iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    pool.install(|| prefixes.into_par_iter().map(run).collect())
}

#[cfg(not(feature = "parallel"))]
fn chunk_results<T: Send>(prefixes: Vec<Partial>, _workers: usize, run: &(impl Fn(Partial) -> T + Sync)) -> Vec<T> {
    prefixes.into_iter().map(run).collect()
}

pub fn count_mosaics(n: usize, filter: EnumFilter, workers: usize) -> Result<u64, EnumError> {
    fold_mosaics(n, filter, workers, || 0u64, |c, _| *c += 1, |a, b| a + b)
}

/// Normalized Jones polynomials memoized by planar diagram.
#[derive(Default)]
pub struct JonesCache {
    map: HashMap<Vec<PdCrossing>, LaurentPoly>,
}

impl JonesCache {
    pub fn new() -> Self {
        JonesCache::default()
    }

    /// Normalized Jones polynomial of a one-component mosaic.
    pub fn jones(&mut self, m: &Mosaic) -> Result<LaurentPoly, crate::error::DiagramError> {
        let pd = PlanarDiagram::from_mosaic(m)?;
        if let Some(p) = self.map.get(pd.crossings()) {
            return Ok(p.clone());
        }
        let p = normalized_bracket(&pd)?;
        self.map.insert(pd.crossings().to_vec(), p.clone());
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Boards found for one knot type (mirror images merged).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotStats {
    pub name: String,
    pub boards: u64,
    pub min_crossing_tiles: usize,
    pub min_nonblank_tiles: usize,
    /// First board in enumeration order with `min_nonblank_tiles` non-blank tiles.
    #[serde(serialize_with = "serialize_mosaic")]
    pub witness: Mosaic,
}

/// Boards whose Jones polynomial is not in the reference table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UnidentifiedStats {
    pub boards: u64,
    pub distinct_polynomials: usize,
    pub min_crossing_tiles: Option<usize>,
    #[serde(serialize_with = "serialize_opt_mosaic")]
    pub example: Option<Mosaic>,
    /// Jones polynomials in `A`, rendered, sorted.
    pub polynomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub size: usize,
    pub filter: EnumFilter,
    pub boards: u64,
    /// In reference-table order.
    pub knots: Vec<KnotStats>,
    pub unidentified: UnidentifiedStats,
}

impl Realization {
    pub fn names(&self) -> Vec<&str> {
        self.knots.iter().map(|k| k.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&KnotStats> {
        self.knots.iter().find(|k| k.name == name)
    }

    pub fn contains_polynomial_of(&self, name: &str) -> bool {
        self.get(name).is_some()
    }
}

fn serialize_mosaic<S: serde::Serializer>(m: &Mosaic, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_text())
}

fn serialize_opt_mosaic<S: serde::Serializer>(m: &Option<Mosaic>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.serialize_str(&m.to_text()),
        None => s.serialize_none(),
    }
}

/// Per-chunk accumulator; chunks are merged in board order.
#[derive(Default)]
struct Tally {
    boards: u64,
    knots: HashMap<usize, KnotStats>,
    unknown: HashMap<LaurentPoly, (u64, usize, Mosaic)>,
    cache: JonesCache,
}

impl Tally {
    fn add(&mut self, table: &ReferenceTable, m: Mosaic) {
        self.boards += 1;
        let jones = self.cache.jones(&m).expect("enumerated boards are knots within the state-sum bound");
        let crossings = m.crossing_tiles();
        let nonblank = m.nonblank_tiles();
        match table.identify(&jones) {
            Identification::Known(id) => {
                let idx = table.index_of(&id.name).expect("identified names are in the table");
                match self.knots.get_mut(&idx) {
                    Some(s) => {
                        s.boards += 1;
                        s.min_crossing_tiles = s.min_crossing_tiles.min(crossings);
                        if nonblank < s.min_nonblank_tiles {
                            s.min_nonblank_tiles = nonblank;
                            s.witness = m;
                        }
                    }
                    None => {
                        let stats = KnotStats { name: id.name, boards: 1, min_crossing_tiles: crossings, min_nonblank_tiles: nonblank, witness: m };
                        self.knots.insert(idx, stats);
                    }
                }
            }
            Identification::Unidentified => {
                let e = self.unknown.entry(jones).or_insert((0, crossings, m));
                e.0 += 1;
                e.1 = e.1.min(crossings);
            }
        }
    }

    /// `self` holds earlier boards than `later`.
    fn merge(mut self, later: Tally) -> Tally {
        self.boards += later.boards;
        for (idx, s) in later.knots {
            match self.knots.get_mut(&idx) {
                Some(mine) => {
                    mine.boards += s.boards;
                    mine.min_crossing_tiles = mine.min_crossing_tiles.min(s.min_crossing_tiles);
                    if s.min_nonblank_tiles < mine.min_nonblank_tiles {
                        mine.min_nonblank_tiles = s.min_nonblank_tiles;
                        mine.witness = s.witness;
                    }
                }
                None => {
                    self.knots.insert(idx, s);
                }
            }
        }
        for (poly, (count, cmin, example)) in later.unknown {
            match self.unknown.get_mut(&poly) {
                Some(e) => {
                    e.0 += count;
                    e.1 = e.1.min(cmin);
                }
                None => {
                    self.unknown.insert(poly, (count, cmin, example));
                }
            }
        }
        self
    }
}

/// Identifies every board passing `filter` and groups the results by knot.
///
/// Without a crossing-tile cap only boards up to 5×5 are accepted.
pub fn realizable_knots(n: usize, filter: EnumFilter, workers: usize) -> Result<Realization, EnumError> {
    if !filter.require_single_component {
        return Err(EnumError::NeedsKnots);
    }
    if n > MAX_EXHAUSTIVE_SIZE && !filter.is_capped() {
        return Err(EnumError::NotExhaustive(n));
    }
    let table = reference_table()?;
    let tally = fold_mosaics(n, filter, workers, Tally::default, |t, m| t.add(table, m), Tally::merge)?;

    let mut knots: Vec<(usize, KnotStats)> = tally.knots.into_iter().collect();
    knots.sort_by_key(|(i, _)| *i);
    let mut unknown: Vec<(LaurentPoly, (u64, usize, Mosaic))> = tally.unknown.into_iter().collect();
    unknown.sort_by_key(|a| a.1 .2.codes());
    let unidentified = UnidentifiedStats {
        boards: unknown.iter().map(|u| u.1 .0).sum(),
        distinct_polynomials: unknown.len(),
        min_crossing_tiles: unknown.iter().map(|u| u.1 .1).min(),
        example: unknown.first().map(|u| u.1 .2.clone()),
        polynomials: {
            let mut v: Vec<String> = unknown.iter().map(|u| u.0.render("A")).collect();
            v.sort();
            v
        },
    };
    Ok(Realization { size: n, filter, boards: tally.boards, knots: knots.into_iter().map(|(_, s)| s).collect(), unidentified })
}

/// Audit record for a claim that a knot has no `n×n` presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsenceCertificate {
    pub knot: String,
    pub size: usize,
    /// True when neither the knot's Jones polynomial nor its mirror occurs.
    pub absent: bool,
    pub boards_enumerated: u64,
    pub distinct_knot_types: usize,
    pub unidentified_boards: u64,
    pub filter: EnumFilter,
    pub elapsed_ms: u128,
}

/// Decides whether `knot` appears on any `n×n` board (n at most 5) by
/// exhausting all one-component boards. Identification is exact Jones
/// matching, so absence of the polynomial proves absence of the knot.
pub fn absence_proof(n: usize, knot: &str, workers: usize) -> Result<AbsenceCertificate, EnumError> {
    if n > MAX_EXHAUSTIVE_SIZE {
        return Err(EnumError::NotExhaustive(n));
    }
    reference_table()?.require(knot)?;
    let start = Instant::now();
    let filter = EnumFilter::default();
    let r = realizable_knots(n, filter, workers)?;
    Ok(certificate(&r, knot, start.elapsed().as_millis()))
}

/// Absence certificate for `knot` read off an existing realization.
pub fn certificate(r: &Realization, knot: &str, elapsed_ms: u128) -> AbsenceCertificate {
    AbsenceCertificate {
        knot: knot.to_string(),
        size: r.size,
        absent: !r.contains_polynomial_of(knot),
        boards_enumerated: r.boards,
        distinct_knot_types: r.knots.len(),
        unidentified_boards: r.unidentified.boards,
        filter: r.filter,
        elapsed_ms,
    }
}

//! Mosaic numbers for the reference knots.
//!
//! Boards up to 5×5 are enumerated exhaustively, which fixes the mosaic number
//! and minimal tile count of every knot that fits. Every other knot gets the
//! lower bound one more than the largest exhausted size, and an upper bound
//! from the smallest fixture presenting it.

use serde::Serialize;

use crate::enumerate::{realizable_knots, EnumFilter, Realization, MAX_EXHAUSTIVE_SIZE};
use crate::error::TabulateError;
use crate::mosaic::Mosaic;
use crate::reference::{reference_table, Identification};

/// A named board supplied as evidence.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub mosaic: Mosaic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TabRow {
    pub knot: String,
    pub crossing_number: u32,
    /// Mosaic number recorded in the reference table.
    pub table_mosaic_number: u32,
    /// Smallest board size with a witness, when the bounds meet.
    pub mosaic_number: Option<u32>,
    pub lower_bound: u32,
    pub upper_bound: Option<u32>,
    /// Fewest non-blank tiles at the mosaic number.
    pub min_tile_count: Option<usize>,
    /// Whether `min_tile_count` is exact (exhaustive) or only a witness's count.
    pub tile_count_exact: bool,
    pub witness_crossing_tiles: Option<usize>,
    /// `enumeration` or the fixture name.
    pub witness_source: Option<String>,
    #[serde(serialize_with = "serialize_opt_mosaic")]
    pub witness: Option<Mosaic>,
}

impl TabRow {
    /// True when the bounds meet at the reference table's value.
    pub fn matches_table(&self) -> bool {
        self.mosaic_number == Some(self.table_mosaic_number)
    }
}

fn serialize_opt_mosaic<S: serde::Serializer>(m: &Option<Mosaic>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.serialize_str(&m.to_text()),
        None => s.serialize_none(),
    }
}

/// Validates a fixture and names the knot it presents (mirrors merged).
pub fn identify_fixture(f: &Fixture) -> Result<String, TabulateError> {
    let fail = |reason: String| TabulateError::Fixture { name: f.name.clone(), reason };
    let m = &f.mosaic;
    if !m.is_square() {
        return Err(fail("board is not square".into()));
    }
    if !m.is_suitably_connected() {
        return Err(fail("not suitably connected".into()));
    }
    let jones = crate::bracket::normalized_jones(m).map_err(|e| fail(e.to_string()))?;
    let table = reference_table()?;
    match table.identify(&jones) {
        Identification::Known(id) => {
            let rec = table.require(&id.name)?;
            if (m.crossing_tiles() as u32) < rec.crossing_number {
                return Err(fail(format!("{} crossing tiles cannot present {} (crossing number {})", m.crossing_tiles(), id.name, rec.crossing_number)));
            }
            Ok(id.name)
        }
        Identification::Unidentified => Err(fail("Jones polynomial matches no reference knot".into())),
    }
}

/// Tabulates every reference knot using exhaustive enumeration on boards up
/// to `min(max_n, 5)` and `fixtures` beyond that.
pub fn tabulate(max_n: usize, fixtures: &[Fixture], workers: usize) -> Result<Vec<TabRow>, TabulateError> {
    let exhausted = max_n.min(MAX_EXHAUSTIVE_SIZE);
    let mut realizations: Vec<Realization> = Vec::new();
    for n in 2..=exhausted {
        realizations.push(realizable_knots(n, EnumFilter::default(), workers)?);
    }
    tabulate_from(max_n, &realizations, fixtures)
}

/// As [`tabulate`], from precomputed exhaustive realizations for sizes `2..`.
pub fn tabulate_from(max_n: usize, realizations: &[Realization], fixtures: &[Fixture]) -> Result<Vec<TabRow>, TabulateError> {
    let table = reference_table()?;
    let exhausted = realizations.iter().map(|r| r.size).max().unwrap_or(1);

    let mut named = Vec::with_capacity(fixtures.len());
    for f in fixtures {
        let knot = identify_fixture(f)?;
        named.push((knot, f));
    }

    let mut rows = Vec::with_capacity(table.records().len());
    for rec in table.records() {
        let found = realizations.iter().find_map(|r| r.get(&rec.name).map(|s| (r.size, s)));
        let row = match found {
            Some((n, stats)) => TabRow {
                knot: rec.name.clone(),
                crossing_number: rec.crossing_number,
                table_mosaic_number: rec.mosaic_number,
                mosaic_number: Some(n as u32),
                lower_bound: n as u32,
                upper_bound: Some(n as u32),
                min_tile_count: Some(stats.min_nonblank_tiles),
                tile_count_exact: true,
                witness_crossing_tiles: Some(stats.witness.crossing_tiles()),
                witness_source: Some("enumeration".into()),
                witness: Some(stats.witness.clone()),
            },
            None => {
                let lower = exhausted as u32 + 1;
                let best = named
                    .iter()
                    .filter(|(k, f)| *k == rec.name && f.mosaic.rows() <= max_n)
                    .min_by_key(|(_, f)| (f.mosaic.rows(), f.mosaic.nonblank_tiles(), f.mosaic.crossing_tiles()));
                if let Some((_, f)) = best {
                    if f.mosaic.rows() as u32 <= exhausted as u32 {
                        return Err(TabulateError::Fixture {
                            name: f.name.clone(),
                            reason: format!("presents {} on a board that exhaustive enumeration rules out", rec.name),
                        });
                    }
                }
                let upper = best.map(|(_, f)| f.mosaic.rows() as u32);
                let meets = upper == Some(lower);
                TabRow {
                    knot: rec.name.clone(),
                    crossing_number: rec.crossing_number,
                    table_mosaic_number: rec.mosaic_number,
                    mosaic_number: meets.then_some(lower),
                    lower_bound: lower,
                    upper_bound: upper,
                    min_tile_count: meets.then(|| best.map(|(_, f)| f.mosaic.nonblank_tiles())).flatten(),
                    tile_count_exact: false,
                    witness_crossing_tiles: best.map(|(_, f)| f.mosaic.crossing_tiles()),
                    witness_source: best.map(|(_, f)| f.name.clone()),
                    witness: best.map(|(_, f)| f.mosaic.clone()),
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

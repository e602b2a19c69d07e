//! Embedded reference data for the unknot and the 35 prime knots with at most
//! eight crossings, and identification by Jones polynomial lookup.
//!
//! Jones polynomials are computed once, from the embedded PD codes, with the
//! same state-sum engine used for mosaics. Loading the table checks that the
//! 36 values are pairwise distinct, also up to mirror image, and that exactly
//! the knots listed as amphichiral have mirror-symmetric polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::bracket::normalized_bracket;
use crate::diagram::PlanarDiagram;
use crate::error::ReferenceError;
use crate::poly::LaurentPoly;

pub const REFERENCE_DATA: &str = include_str!("../data/knots.txt");

pub const REFERENCE_COUNT: usize = 36;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chirality {
    /// The polynomial of the embedded diagram.
    AsTable,
    /// The polynomial of the mirror image.
    Mirror,
    Amphichiral,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Chirality::AsTable => "as-table",
            Chirality::Mirror => "mirror",
            Chirality::Amphichiral => "amphichiral",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KnotId {
    pub name: String,
    pub chirality: Chirality,
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chirality {
            Chirality::Mirror => write!(f, "{} (mirror)", self.name),
            _ => write!(f, "{}", self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Identification {
    Known(KnotId),
    Unidentified,
}

impl Identification {
    pub fn name(&self) -> Option<&str> {
        match self {
            Identification::Known(id) => Some(&id.name),
            Identification::Unidentified => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub crossing_number: u32,
    pub mosaic_number: u32,
    pub pd: PlanarDiagram,
    /// Normalized Jones polynomial in `A` of `pd`.
    pub jones: LaurentPoly,
    pub amphichiral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub crossing_number: u32,
    pub mosaic_number: u32,
    /// `ceil(sqrt(c)) + 3`, as printed.
    pub lower_printed: u32,
    /// `c + 1`.
    pub upper: u32,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

#[derive(Debug)]
pub struct ReferenceTable {
    records: Vec<KnotRecord>,
    lookup: HashMap<LaurentPoly, (usize, Chirality)>,
}

impl ReferenceTable {
    /// Parses reference data and runs the distinctness self-check.
    pub fn from_text(text: &str) -> Result<ReferenceTable, ReferenceError> {
        let mut amphichiral: Vec<String> = Vec::new();
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(rest) = t.strip_prefix("amphichiral:") {
                amphichiral.extend(rest.split_whitespace().map(str::to_string));
                continue;
            }
            if let Some(rest) = t.strip_prefix("version:") {
                if rest.trim() != "1" {
                    return Err(ReferenceError::Parse { line, reason: format!("unsupported version {}", rest.trim()) });
                }
                continue;
            }
            rows.push(parse_record(line, t)?);
        }

        let mut records = Vec::with_capacity(rows.len());
        for (name, c, m, code) in rows {
            let pd = if code.is_empty() {
                PlanarDiagram::unknot()
            } else {
                PlanarDiagram::from_code(&code).map_err(|source| ReferenceError::Diagram { name: name.clone(), source })?
            };
            let jones = normalized_bracket(&pd).map_err(|source| ReferenceError::Diagram { name: name.clone(), source })?;
            let amph = amphichiral.contains(&name);
            records.push(KnotRecord { name, crossing_number: c, mosaic_number: m, pd, jones, amphichiral: amph });
        }
        if records.len() != REFERENCE_COUNT {
            return Err(ReferenceError::Count(records.len()));
        }
        if let Some(a) = amphichiral.iter().find(|a| !records.iter().any(|r| &r.name == *a)) {
            return Err(ReferenceError::UnknownKnot(a.clone()));
        }

        let mut lookup = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            let symmetric = r.jones == r.jones.mirror();
            if symmetric != r.amphichiral {
                return Err(ReferenceError::Chirality { name: r.name.clone() });
            }
            let entries = if symmetric {
                vec![(r.jones.clone(), Chirality::Amphichiral)]
            } else {
                vec![(r.jones.clone(), Chirality::AsTable), (r.jones.mirror(), Chirality::Mirror)]
            };
            for (poly, chir) in entries {
                if let Some((j, _)) = lookup.insert(poly, (i, chir)) {
                    return Err(ReferenceError::Collision(records[j].name.clone(), r.name.clone()));
                }
            }
        }
        Ok(ReferenceTable { records, lookup })
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&KnotRecord, ReferenceError> {
        self.get(name).ok_or_else(|| ReferenceError::UnknownKnot(name.to_string()))
    }

    /// Matches a normalized Jones polynomial (in `A`) against the table and mirrors.
    pub fn identify(&self, jones: &LaurentPoly) -> Identification {
        match self.lookup.get(jones) {
            Some(&(i, chirality)) => Identification::Known(KnotId { name: self.records[i].name.clone(), chirality }),
            None => Identification::Unidentified,
        }
    }

    /// Position of a knot in table order, for sorting results.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.records.iter().position(|r| r.name == name)
    }
}

type RawRecord = (String, u32, u32, Vec<[u32; 4]>);

fn parse_record(line: usize, t: &str) -> Result<RawRecord, ReferenceError> {
    let err = |reason: &str| ReferenceError::Parse { line, reason: reason.to_string() };
    let mut parts = t.splitn(4, ' ');
    let name = parts.next().ok_or_else(|| err("missing name"))?.to_string();
    let c = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| err("bad crossing number"))?;
    let m = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| err("bad mosaic number"))?;
    let pd = parts
        .next()
        .and_then(|s| s.trim().strip_prefix("pd:["))
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err("expected pd:[...]"))?;
    let mut code = Vec::new();
    let mut rest = pd.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let (tuple, after) = body.split_once(')').ok_or_else(|| err("unclosed tuple"))?;
        let nums: Vec<u32> = tuple
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| err("bad arc label")))
            .collect::<Result<_, _>>()?;
        let arr: [u32; 4] = nums.try_into().map_err(|_| err("crossing needs four labels"))?;
        code.push(arr);
        rest = after.trim_start_matches(',').trim();
    }
    if code.len() as u32 != c {
        return Err(err("PD crossing count differs from crossing number"));
    }
    Ok((name, c, m, code))
}

static TABLE: OnceLock<Result<ReferenceTable, ReferenceError>> = OnceLock::new();

/// The embedded table, loaded and self-checked on first use.
pub fn reference_table() -> Result<&'static ReferenceTable, ReferenceError> {
    TABLE.get_or_init(|| ReferenceTable::from_text(REFERENCE_DATA)).as_ref().map_err(Clone::clone)
}

pub fn identify(jones: &LaurentPoly) -> Result<Identification, ReferenceError> {
    Ok(reference_table()?.identify(jones))
}

fn ceil_sqrt(c: u32) -> u32 {
    (0..).find(|k| k * k >= c).unwrap()
}

/// Evaluates `ceil(sqrt(c)) + 3 <= m` and `m <= c + 1` against a record's
/// mosaic number.
pub fn bound_report(k: &KnotRecord) -> BoundReport {
    let c = k.crossing_number;
    let m = k.mosaic_number;
    let lower = ceil_sqrt(c) + 3;
    let upper = c + 1;
    BoundReport {
        name: k.name.clone(),
        crossing_number: c,
        mosaic_number: m,
        lower_printed: lower,
        upper,
        lower_ok: lower <= m,
        upper_ok: m <= upper,
    }
}

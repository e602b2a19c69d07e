//! Knot mosaics: boards of the eleven mosaic tiles, their Reidemeister moves,
//! identification of the represented knot through the Jones polynomial, and
//! exhaustive enumeration of small boards to determine mosaic numbers.

pub mod bracket;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod mosaic;
pub mod moves;
pub mod poly;
pub mod reference;
pub mod symmetry;
pub mod tabulate;
pub mod tile;

pub use bracket::{determinant, determinant_of, kauffman_bracket, normalized_bracket, normalized_jones, to_t_form};
pub use diagram::PlanarDiagram;
pub use enumerate::{absence_proof, count_mosaics, enumerate_mosaics, fold_mosaics, realizable_knots, AbsenceCertificate, EnumFilter, JonesCache, KnotStats, Realization};
pub use error::*;
pub use mosaic::{InnerBoard, Mosaic, StrandLoop};
pub use moves::{apply_move, complete_boundary, corner_reduce, find_moves, Direction, MoveKind, MoveSite};
pub use poly::LaurentPoly;
pub use reference::{bound_report, identify, reference_table, Chirality, Identification, KnotId, KnotRecord};
pub use symmetry::{transform, Dihedral, Symmetry};
pub use tabulate::{identify_fixture, tabulate, tabulate_from, Fixture, TabRow};
pub use tile::{Edge, Tile};

//! The bundled fixture boards: format, identification, and moves on each.

mod common;

use std::path::PathBuf;

use common::{alexander_at, strip_units};
use knot_mosaic::moves::{find_introductions, MoveKind};
use knot_mosaic::{
    apply_move, corner_reduce, determinant, find_moves, normalized_jones, reference_table, DiagramError, Mosaic, PlanarDiagram,
};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(name: &str) -> Mosaic {
    let text = std::fs::read_to_string(dir().join(format!("{name}.mosaic"))).unwrap();
    Mosaic::parse(&text).unwrap()
}

/// Every top-level fixture with its file stem.
fn corpus() -> Vec<(String, Mosaic)> {
    let mut out: Vec<(String, Mosaic)> = std::fs::read_dir(dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "mosaic"))
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), Mosaic::parse(&std::fs::read_to_string(&p).unwrap()).unwrap()))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn name_of(m: &Mosaic) -> String {
    reference_table().unwrap().identify(&normalized_jones(m).unwrap()).name().unwrap().to_string()
}

#[test]
fn corpus_round_trips() {
    for (name, m) in corpus() {
        let text = std::fs::read_to_string(dir().join(format!("{name}.mosaic"))).unwrap();
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(m.to_text(), body.join("\n"), "{name}");
        assert_eq!(Mosaic::parse(&m.to_text()).unwrap(), m.clone().with_provenance(""), "{name}");
    }
}

#[test]
fn every_fixture_names_the_knot_in_its_header() {
    let table = reference_table().unwrap();
    for (name, m) in corpus() {
        assert!(m.is_square() && m.is_suitably_connected(), "{name}");
        assert_eq!(m.component_count(), Ok(1), "{name}");
        let knot = name_of(&m);
        let header = m.provenance().unwrap().split_whitespace().next().unwrap().to_string();
        assert_eq!(knot, header, "{name}");
        assert!(m.crossing_tiles() as u32 >= table.get(&knot).unwrap().crossing_number, "{name}");
    }
}

/// One 6×6 board for each knot the table places at six, plus 6_1.
#[test]
fn six_by_six_witnesses_cover_the_table() {
    let table = reference_table().unwrap();
    let mut want: Vec<String> = table.records().iter().filter(|r| r.mosaic_number == 6).map(|r| r.name.clone()).collect();
    want.push("6_1".into());
    want.sort();
    let mut have: Vec<String> = corpus().iter().filter(|(_, m)| m.rows() == 6).map(|(_, m)| name_of(m)).collect();
    have.sort();
    assert_eq!(have.len(), 29);
    assert_eq!(have, want);
    for (name, m) in corpus().iter().filter(|(_, m)| m.rows() == 6) {
        // Nine or fewer crossings keep ten-crossing look-alikes out.
        assert!(m.crossing_tiles() <= 9, "{name}");
    }
}

/// 4_1#4_1 shares its Jones polynomial with 8_9; the Alexander polynomial
/// tells them apart (253 against 1 at t = 3).
#[test]
fn eight_nine_witness_is_prime() {
    let m = load("89_6");
    let code = PlanarDiagram::from_mosaic(&m).unwrap().code();
    assert_eq!(strip_units(alexander_at(&code, 3), 3), 253);
    assert_eq!(determinant(&m).unwrap(), 25);
}

#[test]
fn moves_preserve_jones_on_the_corpus() {
    let mut applied = 0;
    for (name, m) in corpus() {
        let j = normalized_jones(&m).unwrap();
        let mut sites = find_moves(&m);
        sites.extend(find_introductions(&m));
        for s in sites {
            let after = apply_move(&m, s).unwrap();
            assert!(after.is_suitably_connected(), "{name} {s:?}");
            assert_eq!(after.crossing_tiles() as i32, m.crossing_tiles() as i32 + s.crossing_delta());
            assert_eq!(normalized_jones(&after).unwrap(), j, "{name} {s:?}");
            assert_eq!(apply_move(&after, s.inverse()).unwrap(), m.clone().with_provenance(m.provenance().unwrap()));
            applied += 1;
        }
        if let Some(r) = corner_reduce(&m) {
            assert_eq!(normalized_jones(&r).unwrap(), j, "{name} corner");
            applied += 1;
        }
    }
    assert!(applied > 100, "{applied}");
}

#[test]
fn hopf_link_has_two_components() {
    let text = std::fs::read_to_string(dir().join("links/hopf4.mosaic")).unwrap();
    let m = Mosaic::parse(&text).unwrap();
    assert!(m.is_suitably_connected());
    assert_eq!(m.crossing_tiles(), 2);
    assert_eq!(m.trace_components().unwrap().len(), 2);
    assert_eq!(PlanarDiagram::from_mosaic(&m).unwrap_err(), DiagramError::NotAKnot(2));
}

#[test]
fn trefoil_on_four_by_four() {
    let m = load("trefoil4");
    assert_eq!(m.crossing_tiles(), 3);
    let pd = PlanarDiagram::from_mosaic(&m).unwrap();
    assert_eq!((pd.crossing_count(), pd.arc_count()), (3, 6));
    assert_eq!(pd.writhe().abs(), 3);
    assert_eq!(determinant(&m).unwrap(), 3);
}

#[test]
fn six_one_on_five_and_six() {
    let (five, six) = (load("61_5"), load("61_6"));
    assert_eq!(five.crossing_tiles(), 7);
    assert_eq!(name_of(&five), "6_1");
    let (a, b) = (normalized_jones(&five).unwrap(), normalized_jones(&six).unwrap());
    assert!(a == b || a == b.mirror());
}

#[test]
fn seven_four_is_alternating_and_irreducible() {
    let m = load("74_5");
    assert_eq!(m.crossing_tiles(), 7);
    assert!(PlanarDiagram::from_mosaic(&m).unwrap().is_alternating());
    assert!(find_moves(&m).is_empty());
}

#[test]
fn non_alternating_pair() {
    let m = load("2b_nonalt");
    assert_eq!(m.crossing_tiles(), 7);
    assert_eq!(m.get(1, 2), m.get(2, 2));
    assert!(!PlanarDiagram::from_mosaic(&m).unwrap().is_alternating());
    assert!(["6_1", "3_1"].contains(&name_of(&m).as_str()));
}

#[test]
fn non_reduced_trefoil_loses_a_clasp() {
    let m = load("nonred_trefoil");
    assert_eq!(m.crossing_tiles(), 5);
    let r2: Vec<_> = find_moves(&m).into_iter().filter(|s| s.kind == MoveKind::R2).collect();
    assert!(!r2.is_empty());
    let reduced = apply_move(&m, r2[0]).unwrap();
    assert_eq!(reduced.crossing_tiles(), 3);
    assert_eq!(name_of(&reduced), "3_1");
}

#[test]
fn kink_is_removable() {
    let m = load("kink4");
    assert_eq!(m.crossing_tiles(), 1);
    let sites = find_moves(&m);
    assert!(!sites.is_empty() && sites.iter().all(|s| s.kind == MoveKind::R1));
    assert_eq!(apply_move(&m, sites[0]).unwrap().crossing_tiles(), 0);
}

/// Boards with exactly as many crossing tiles as the crossing number, kept
/// out of the top-level corpus so the witness set stays one board per knot.
#[test]
fn eight_crossing_boards_on_six_by_six() {
    let load = |file: &str| {
        let text = std::fs::read_to_string(dir().join(format!("eight_crossings/{file}.mosaic"))).unwrap();
        let m = Mosaic::parse(&text).unwrap();
        assert_eq!((m.rows(), m.crossing_tiles()), (6, 8), "{file}");
        let pd = PlanarDiagram::from_mosaic(&m).unwrap();
        assert!(pd.is_alternating() && pd.is_reduced(), "{file}");
        (m, pd)
    };
    let (m, _) = load("811_6");
    assert_eq!(name_of(&m), "8_11");
    // Reads as 8_9 by its Jones polynomial, but the Alexander polynomial is
    // that of 4_1#4_1: (t^2 - 3t + 1)^2 is 1 at t = 3.
    let (m, pd) = load("41x41_6");
    assert_eq!(name_of(&m), "8_9");
    assert_eq!(strip_units(alexander_at(&pd.code(), 3), 3), 1);
    assert_eq!(determinant(&m).unwrap(), 25);
}

//! Picks the small fixture boards (sizes 2 to 5) out of the enumeration.
//! Each choice is the first board in enumeration order with the stated
//! properties, so rerunning reproduces the same files.
//!
//! Usage: small_fixtures OUT_DIR

use knot_mosaic::moves::MoveKind;
use knot_mosaic::{
    apply_move, enumerate_mosaics, find_moves, normalized_jones, realizable_knots, reference_table, EnumFilter, Mosaic, PlanarDiagram,
};

fn name_of(m: &Mosaic) -> Option<String> {
    let j = normalized_jones(m).ok()?;
    reference_table().unwrap().identify(&j).name().map(str::to_string)
}

fn first(n: usize, filter: EnumFilter, pick: impl Fn(&Mosaic) -> bool) -> Mosaic {
    enumerate_mosaics(n, filter).unwrap().find(|m| pick(m)).expect("a matching board")
}

fn write(dir: &str, file: &str, note: &str, m: &Mosaic) {
    let text = format!("# {note}\n{}\n", m.to_text());
    std::fs::write(format!("{dir}/{file}.mosaic"), text).unwrap();
    println!("{file}: {note}");
}

fn main() {
    let dir = std::env::args().nth(1).expect("usage: small_fixtures OUT_DIR");
    let exact = |k| EnumFilter { exact_crossing_tiles: Some(k), ..EnumFilter::default() };

    write(&dir, "unknot2", "0_1 on a 2x2 board", &Mosaic::parse("2 2\n2 1\n3 4").unwrap());

    let r4 = realizable_knots(4, EnumFilter::default(), 1).unwrap();
    write(&dir, "trefoil4", "3_1 on a 4x4 board, fewest non-blank tiles", &r4.get("3_1").unwrap().witness);

    let hopf = first(4, EnumFilter { exact_crossing_tiles: Some(2), ..EnumFilter::all_boards() }, |m| m.component_count() == Ok(2));
    write(&dir, "hopf4", "two-component link with 2 crossing tiles on a 4x4 board", &hopf);

    let kink = first(4, exact(1), |_| true);
    write(&dir, "kink4", "0_1 with one kink on a 4x4 board", &kink);

    let r5 = realizable_knots(5, EnumFilter::default(), 1).unwrap();
    for knot in ["4_1", "5_1", "5_2", "6_2"] {
        let w = &r5.get(knot).unwrap().witness;
        write(&dir, &format!("{}_5", knot.replace('_', "")), &format!("{knot} on a 5x5 board, fewest non-blank tiles"), w);
    }

    let six1 = first(5, exact(7), |m| name_of(m).as_deref() == Some("6_1"));
    write(&dir, "61_5", "6_1 on a 5x5 board with 7 crossing tiles", &six1);

    let alt = EnumFilter { alternating_only: true, ..exact(7) };
    let seven4 = first(5, alt, |m| name_of(m).as_deref() == Some("7_4") && find_moves(m).is_empty());
    write(&dir, "74_5", "7_4 on a 5x5 board: 7 alternating crossing tiles, no reducing move", &seven4);

    // Inner cells I2 and I5 sit at (1, 2) and (2, 2); equal crossing tiles there
    // put the same strand over (or under) twice in a row.
    let nonalt = first(5, exact(7), |m| {
        let (a, b) = (m.get(1, 2), m.get(2, 2));
        a.is_crossing()
            && a == b
            && !PlanarDiagram::from_mosaic(m).unwrap().is_alternating()
            && matches!(name_of(m).as_deref(), Some("6_1") | Some("3_1"))
    });
    let label = name_of(&nonalt).unwrap();
    write(&dir, "2b_nonalt", &format!("{label} on a 5x5 board: 7 crossing tiles, I2 and I5 not alternating"), &nonalt);

    let nonred = first(5, exact(5), |m| {
        name_of(m).as_deref() == Some("3_1")
            && find_moves(m).iter().any(|s| s.kind == MoveKind::R2 && apply_move(m, *s).map(|r| r.crossing_tiles()) == Ok(3))
    });
    write(&dir, "nonred_trefoil", "3_1 on a 5x5 board with 5 crossing tiles, two removable by a type II move", &nonred);
}

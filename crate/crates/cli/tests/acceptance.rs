//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.
//! Mosaic numbers are compared against the published table, written out
//! here independently of the bundled reference data.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use common::{random_inner, recursive_bracket};
use knot_mosaic::moves::{all_crossing_inner, complete_boundary, corner_reduce, find_introductions};
use knot_mosaic::tile::ALL_TILES;
use knot_mosaic::{
    absence_proof, apply_move, enumerate_mosaics, find_moves, kauffman_bracket, normalized_jones, realizable_knots, reference_table,
    transform, EnumFilter, InnerBoard, LaurentPoly, Mosaic, PlanarDiagram, Realization, Symmetry,
};
use knot_mosaic_cli::run;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Published mosaic numbers for knots with up to eight crossings.
fn published_mosaic_number(knot: &str) -> u32 {
    match knot {
        "0_1" => 2,
        "3_1" => 4,
        "4_1" | "5_1" | "5_2" | "6_1" | "6_2" | "7_4" => 5,
        k if k.starts_with("6_") || k.starts_with("7_") || k.starts_with("8_") => 6,
        k => panic!("no published value for {k}"),
    }
}

fn five_by_five() -> &'static (Realization, Duration) {
    static R: OnceLock<(Realization, Duration)> = OnceLock::new();
    R.get_or_init(|| {
        let start = Instant::now();
        let r = realizable_knots(5, EnumFilter::default(), 1).unwrap();
        (r, start.elapsed())
    })
}

fn criterion_1() -> Verdict {
    let dir = fixtures_dir();
    let dir = dir.to_str().unwrap();
    let mut files: Vec<PathBuf> =
        std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|x| x == "mosaic")).collect();
    files.sort();
    let mut six = 0;
    for f in &files {
        let f = f.to_str().unwrap();
        for cmd in ["validate", "identify"] {
            let out = run(["mosaic", cmd, f]);
            ensure(out.code == 0, format!("{cmd} {f} exited {}: {}", out.code, out.stderr))?;
        }
        six += usize::from(Mosaic::parse(&std::fs::read_to_string(f).unwrap()).unwrap().rows() == 6);
    }
    ensure(six >= 29, format!("only {six} 6x6 fixtures"))?;

    let out = run(["mosaic", "tabulate", "--max-size", "6", "--fixtures", dir, "--json"]);
    ensure(out.code == 0, format!("tabulate exited {}: {}", out.code, out.stderr))?;
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    ensure(rows.len() == 36, format!("{} rows", rows.len()))?;
    for row in &rows {
        let knot = row["knot"].as_str().unwrap();
        let want = published_mosaic_number(knot);
        let got = row["mosaic_number"].as_u64();
        ensure(got == Some(want as u64), format!("{knot}: tabulated {got:?}, published {want}"))?;
    }
    Ok(format!("36 rows match the published mosaic numbers; {} fixtures ({six} on 6x6) validate and identify", files.len()))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let cert = absence_proof(5, "6_3", 1).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(cert.absent, "6_3 found on a 5x5 board")?;
    // Also the other exclusions used for lower bounds, from the shared run.
    let (r, _) = five_by_five();
    for k in ["7_1", "8_1", "8_21"] {
        ensure(!r.contains_polynomial_of(k), format!("{k} found on a 5x5 board"))?;
    }
    ensure(took < Duration::from_secs(30 * 60), format!("took {took:?}"))?;
    Ok(format!("6_3 absent from all {} one-component 5x5 boards, single worker, {:.1}s", cert.boards_enumerated, took.as_secs_f64()))
}

fn criterion_3() -> Verdict {
    let (r, took) = five_by_five();
    let got: BTreeSet<&str> = r.names().into_iter().collect();
    let want: BTreeSet<&str> = ["0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "7_4"].into();
    ensure(got == want, format!("realizable(5) = {got:?}"))?;
    // Alternating boards with nugatory crossings present smaller knots, so the
    // run is restricted to reduced diagrams as in the published argument.
    let f = EnumFilter { alternating_only: true, reduced_only: true, exact_crossing_tiles: Some(7), ..EnumFilter::default() };
    let alt = realizable_knots(5, f, 1).map_err(|e| e.to_string())?;
    ensure(alt.names() == vec!["7_4"] && alt.unidentified.boards == 0, format!("reduced alternating 7-crossing run: {:?}", alt.names()))?;
    let loose = realizable_knots(5, EnumFilter { reduced_only: false, ..f }, 1).map_err(|e| e.to_string())?;
    Ok(format!(
        "realizable(5) = {got:?} in {:.1}s; reduced alternating 7-crossing boards give only 7_4 ({} boards; without the reduced restriction {} boards give {:?})",
        took.as_secs_f64(),
        alt.boards,
        loose.boards,
        loose.names()
    ))
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let r = realizable_knots(4, EnumFilter::default(), 1).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(r.names() == vec!["0_1", "3_1"], format!("realizable(4) = {:?}", r.names()))?;
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    let boards = complete_boundary(&all_crossing_inner(4).unwrap());
    let mut comps: Vec<usize> = boards.iter().map(|m| m.component_count().unwrap()).collect();
    comps.sort();
    ensure(comps == vec![1, 2], format!("all-crossing 4x4 completions have components {comps:?}"))?;
    Ok(format!("realizable(4) = {{0_1, 3_1}} in {:.2}s; all-crossing inner board completes two ways with components {{1, 2}}", took.as_secs_f64()))
}

fn criterion_5() -> Verdict {
    // Two-fold rule, every 4x4 inner board.
    let mut by_inner: HashMap<InnerBoard, Vec<Mosaic>> = HashMap::new();
    for m in enumerate_mosaics(4, EnumFilter::all_boards()).unwrap() {
        by_inner.entry(m.inner_board()).or_default().push(m);
    }
    let mut completable4 = 0;
    for a in ALL_TILES {
        for b in ALL_TILES {
            for c in ALL_TILES {
                for d in ALL_TILES {
                    let inner = InnerBoard::new(4, vec![a, b, c, d]);
                    let got = complete_boundary(&inner);
                    let want = by_inner.remove(&inner).unwrap_or_default();
                    ensure(got == want, format!("{inner:?}: completions disagree with enumeration"))?;
                    if !got.is_empty() {
                        ensure(got.len() == 2, format!("{inner:?}: {} completions", got.len()))?;
                        completable4 += 1;
                    }
                }
            }
        }
    }
    ensure(by_inner.is_empty(), "enumerated boards without a matching inner board")?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    while sampled < 10_000 {
        let got = complete_boundary(&random_inner(5, &mut rng));
        ensure(got.len() == 2, format!("sampled 5x5 inner board with {} completions", got.len()))?;
        ensure(got.iter().all(Mosaic::is_suitably_connected), "completion not suitably connected")?;
        sampled += 1;
    }

    for n in [4, 6] {
        let mut comps: Vec<usize> = complete_boundary(&all_crossing_inner(n).unwrap()).iter().map(|m| m.component_count().unwrap()).collect();
        comps.sort();
        ensure(comps == vec![n - 3, n - 2], format!("n = {n}: components {comps:?}"))?;
    }
    let five = complete_boundary(&all_crossing_inner(5).unwrap());
    ensure(five.len() == 2 && five.iter().all(|m| m.component_count() == Ok(1)), "5x5 all-crossing completions are not knots")?;
    for m in &five {
        let r = corner_reduce(m).ok_or("corner rule does not apply")?;
        ensure(m.crossing_tiles() == 9 && r.crossing_tiles() == 8, "corner reduction is not 9 -> 8")?;
        ensure(normalized_jones(&r).unwrap() == normalized_jones(m).unwrap(), "corner reduction changed the Jones polynomial")?;
    }
    Ok(format!(
        "two-fold rule on all {completable4} completable 4x4 inner boards and {sampled} sampled 5x5; components {{n-3, n-2}} at n = 4, 6; one component at n = 5; corner reduction 9 -> 8 keeps Jones"
    ))
}

fn criterion_6() -> Verdict {
    let unknot = PlanarDiagram::from_mosaic(&Mosaic::parse("2 2\n2 1\n3 4").unwrap()).unwrap();
    ensure(kauffman_bracket(&unknot).unwrap() == LaurentPoly::one(), "unknot bracket is not 1")?;

    let kink = Mosaic::parse("3 3\n2 1 0\n3 9 1\n0 3 4").unwrap();
    let brackets: BTreeSet<String> = [kink.clone(), transform(&kink, Symmetry::mirror())]
        .iter()
        .map(|m| kauffman_bracket(&PlanarDiagram::from_mosaic(m).unwrap()).unwrap().to_string())
        .collect();
    let want: BTreeSet<String> = [LaurentPoly::monomial(-1, 3).to_string(), LaurentPoly::monomial(-1, -3).to_string()].into();
    ensure(brackets == want, format!("kink brackets {brackets:?}"))?;

    let mut checked = 0;
    let mut boards: Vec<Mosaic> = Vec::new();
    for e in std::fs::read_dir(fixtures_dir()).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "mosaic") {
            boards.push(Mosaic::parse(&std::fs::read_to_string(p).unwrap()).unwrap());
        }
    }
    let corpus = boards.len();
    boards.extend(enumerate_mosaics(4, EnumFilter::default()).unwrap().filter(|m| m.crossing_tiles() > 0).take(150));
    let enumerated = boards.len() - corpus;
    for m in &boards {
        let j = normalized_jones(m).unwrap();
        let mut sites = find_moves(m);
        sites.extend(find_introductions(m));
        for s in sites {
            let after = apply_move(m, s).map_err(|e| e.to_string())?;
            ensure(normalized_jones(&after).unwrap() == j, format!("{s:?} changed the Jones polynomial of\n{m}"))?;
            checked += 1;
        }
        let mirrored = normalized_jones(&transform(m, Symmetry::new(knot_mosaic::Dihedral::IDENTITY, true))).unwrap();
        ensure(mirrored == j.mirror(), "crossing swap does not negate exponents")?;
    }

    let mut skein = 0;
    for n in 2..=4 {
        for m in enumerate_mosaics(n, EnumFilter::default()).unwrap() {
            let pd = PlanarDiagram::from_mosaic(&m).unwrap();
            ensure(kauffman_bracket(&pd).unwrap() == recursive_bracket(&pd.code()), format!("skein recursion disagrees on\n{m}"))?;
            skein += 1;
        }
    }
    Ok(format!(
        "unknot bracket 1, kink -A^3 / -A^-3; {checked} moves on {corpus} fixtures and {enumerated} enumerated boards keep Jones; mirror negates exponents; skein recursion equals the state sum on all {skein} one-component boards with n <= 4"
    ))
}

fn criterion_7() -> Verdict {
    let t = reference_table().map_err(|e| e.to_string())?;
    let records = t.records();
    ensure(records.len() == 36, format!("{} entries", records.len()))?;
    for (i, a) in records.iter().enumerate() {
        for b in &records[i + 1..] {
            ensure(a.jones != b.jones && a.jones != b.jones.mirror(), format!("{} and {} collide", a.name, b.name))?;
        }
        ensure((a.jones == a.jones.mirror()) == a.amphichiral, format!("{}: amphichirality disagrees with its polynomial", a.name))?;
        ensure(t.identify(&a.jones).name() == Some(a.name.as_str()), format!("identify({}) is wrong", a.name))?;
        ensure(t.identify(&a.jones.mirror()).name() == Some(a.name.as_str()), format!("identify(mirror {}) is wrong", a.name))?;
    }
    let amph = records.iter().filter(|r| r.amphichiral).count();
    Ok(format!("36 Jones polynomials pairwise distinct up to mirror; {amph} amphichiral; identify is the identity on the table"))
}

/// Returns the upper-bound violations alongside the verdict so the test can
/// pin the known failure.
fn criterion_8() -> (Verdict, Vec<String>) {
    let out = run(["mosaic", "bounds", "--json"]);
    if out.code != 0 {
        return (Err(format!("bounds exited {}", out.code)), Vec::new());
    }
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out.stdout).unwrap();
    let flagged = |key: &str| -> Vec<String> {
        rows.iter().filter(|r| !r[key].as_bool().unwrap()).map(|r| r["name"].as_str().unwrap().to_string()).collect()
    };
    let lower = flagged("lower_ok");
    let upper = flagged("upper_ok");
    let checker = ["3_1", "5_1"].iter().all(|k| lower.iter().any(|l| l == k));
    let verdict = if !checker {
        Err(format!("lower-bound discrepancies {lower:?} miss 3_1 or 5_1"))
    } else if !upper.is_empty() {
        Err(format!("m <= c + 1 fails for {upper:?} (0_1 has m = 2, c + 1 = 1); lower bound flagged for {lower:?}"))
    } else {
        Ok(format!("m <= c + 1 on all {} rows; lower bound flagged for {lower:?}", rows.len()))
    };
    (verdict, upper)
}

use std::io::Write;

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    // Written straight to stderr so the lines show without --nocapture.
    let mut report = |n: u32, v: Verdict| {
        let line = match &v {
            Ok(detail) => format!("criterion {n}: PASS - {detail}"),
            Err(detail) => format!("criterion {n}: FAIL - {detail}"),
        };
        let _ = writeln!(std::io::stderr(), "{line}");
        if v.is_err() {
            failures.push(n);
        }
    };
    report(1, criterion_1());
    report(2, criterion_2());
    report(3, criterion_3());
    report(4, criterion_4());
    report(5, criterion_5());
    report(6, criterion_6());
    report(7, criterion_7());
    let (v8, upper_violations) = criterion_8();
    report(8, v8);

    // Criterion 8 cannot hold as stated: the unknot's mosaic number 2 exceeds
    // c + 1 = 1. Any other outcome is a regression.
    assert_eq!(upper_violations, vec!["0_1".to_string()]);
    assert_eq!(failures, vec![8], "criteria other than 8 failed");
}

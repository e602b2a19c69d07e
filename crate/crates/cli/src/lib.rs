//! The `mosaic` command-line tool.
//!
//! [`run`] takes the argument vector and returns what to print and the exit
//! code, so the binary is a thin wrapper and tests can drive every
//! subcommand in-process. Exit codes: 0 success, 1 domain failure (invalid
//! board, unidentified knot, bad fixture), 2 usage error.

pub mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use knot_mosaic::moves::{find_introductions, reduce_greedy};
use knot_mosaic::tabulate::{tabulate, Fixture, TabRow};
use knot_mosaic::{
    bound_report, complete_boundary, count_mosaics, determinant_of, find_moves, kauffman_bracket, normalized_bracket, realizable_knots,
    reference_table, to_t_form, EnumFilter, Identification, InnerBoard, Mosaic, MoveSite, PlanarDiagram, Tile,
};

pub use svg::render_svg;

#[derive(Parser, Debug)]
#[command(name = "mosaic", version, about = "Knot mosaics: validation, identification, Reidemeister moves, enumeration and mosaic numbers")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that every connection point meets a partner.
    Validate { file: PathBuf },
    /// List the closed strands of a board.
    Trace { file: PathBuf },
    /// Name the knot a board presents.
    Identify { file: PathBuf },
    /// Kauffman bracket, writhe, Jones polynomial and determinant.
    Jones { file: PathBuf },
    /// Apply reducing Reidemeister moves until none is left.
    Reduce { file: PathBuf },
    /// List reducing and introducing move sites.
    Moves { file: PathBuf },
    /// Complete an inner board (given as its own square board) to full boards.
    Complete { file: PathBuf },
    /// Enumerate the boards of one size and identify the knots on them.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        filter: FilterArgs,
        /// Count every suitably connected board, links included, without identifying.
        #[arg(long)]
        links: bool,
    },
    /// Decide whether a knot fits on a board by exhausting all boards of that size.
    Absence {
        knot: String,
        #[arg(long, default_value_t = 5)]
        size: usize,
    },
    /// Mosaic numbers of all reference knots.
    Tabulate {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Directory of `.mosaic` witness boards.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
    /// Check the crossing-number bounds on the mosaic number for every reference knot.
    Bounds,
    /// Draw a board as SVG.
    Render { file: PathBuf },
}

#[derive(clap::Args, Debug)]
struct FilterArgs {
    /// At most this many crossing tiles.
    #[arg(long)]
    crossings: Option<usize>,
    /// Exactly this many crossing tiles.
    #[arg(long)]
    exact_crossings: Option<usize>,
    /// Only boards whose diagram is alternating.
    #[arg(long)]
    alternating: bool,
    /// Only boards whose diagram has no nugatory crossing.
    #[arg(long)]
    reduced: bool,
}

impl FilterArgs {
    fn filter(&self) -> EnumFilter {
        EnumFilter {
            max_crossing_tiles: self.crossings,
            exact_crossing_tiles: self.exact_crossings,
            alternating_only: self.alternating,
            reduced_only: self.reduced,
            ..EnumFilter::default()
        }
    }
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A domain failure: reported on stderr (and as JSON when requested), exit 1.
#[derive(Debug)]
struct Failure {
    message: String,
    /// Output still worth printing, e.g. the mismatch list of an invalid board.
    payload: Option<Payload>,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { message: e.to_string(), payload: None }
    }
}

struct Payload {
    text: String,
    json: serde_json::Value,
}

impl std::fmt::Debug for Payload {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

fn payload(text: String, json: impl Serialize) -> Payload {
    Payload { text, json: serde_json::to_value(json).expect("serializable output") }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let workers = cli.workers as usize;
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Trace { file } => trace(file),
        Command::Identify { file } => identify(file),
        Command::Jones { file } => jones(file),
        Command::Reduce { file } => reduce(file),
        Command::Moves { file } => moves(file),
        Command::Complete { file } => complete(file),
        Command::Enumerate { size, filter, links } => enumerate(*size, filter, *links, workers),
        Command::Absence { knot, size } => absence(knot, *size, workers, cli.out.as_deref()),
        Command::Tabulate { max_size, fixtures } => tab(*max_size, fixtures.as_deref(), workers, cli.out.as_deref()),
        Command::Bounds => bounds(),
        Command::Render { file } => render(file),
    };
    let (code, payload, message) = match result {
        Ok(p) => (0, Some(p), None),
        Err(f) => (1, f.payload, Some(f.message)),
    };
    let mut stdout = match (&payload, cli.json) {
        (Some(p), true) => {
            let mut v = p.json.clone();
            if let (Some(m), serde_json::Value::Object(obj)) = (&message, &mut v) {
                obj.insert("error".into(), m.clone().into());
            }
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        (Some(p), false) => p.text.clone(),
        (None, true) => serde_json::to_string_pretty(&serde_json::json!({ "error": message })).expect("json") + "\n",
        (None, false) => String::new(),
    };
    let mut stderr = message.map(|m| format!("error: {m}\n")).unwrap_or_default();
    if let Some(path) = &cli.out {
        // Commands that write their own files (absence, tabulate) already did.
        let own = matches!(cli.command, Command::Absence { .. } | Command::Tabulate { .. });
        if !own && !stdout.is_empty() {
            if let Err(e) = std::fs::write(path, &stdout) {
                stderr.push_str(&format!("error: writing {}: {e}\n", path.display()));
                return Outcome { code: 1, stdout, stderr };
            }
        }
        if own || code == 0 {
            stdout = String::new();
        }
    }
    Outcome { code, stdout, stderr }
}

fn load(file: &Path) -> Result<Mosaic, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    Mosaic::parse(&text).map_err(|e| Failure::from(format!("{}: {e}", file.display())))
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

#[derive(Serialize)]
struct EdgeRef {
    row: usize,
    col: usize,
    edge: String,
}

#[derive(Serialize)]
struct ValidateJson {
    rows: usize,
    cols: usize,
    suitably_connected: bool,
    components: Option<usize>,
    crossing_tiles: usize,
    nonblank_tiles: usize,
    mismatches: Vec<EdgeRef>,
}

fn validate(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    let mismatches: Vec<EdgeRef> = m.mismatched_edges().into_iter().map(|(row, col, e)| EdgeRef { row, col, edge: e.to_string() }).collect();
    let ok = mismatches.is_empty();
    let components = if ok { Some(m.component_count()?) } else { None };
    let json = ValidateJson {
        rows: m.rows(),
        cols: m.cols(),
        suitably_connected: ok,
        components,
        crossing_tiles: m.crossing_tiles(),
        nonblank_tiles: m.nonblank_tiles(),
        mismatches,
    };
    if let Some(c) = components {
        return Ok(payload(format!("suitably connected; {}\n", plural(c, "component")), json));
    }
    let mut text = format!("not suitably connected; {}\n", plural(json.mismatches.len(), "unmatched connection point"));
    for e in &json.mismatches {
        let _ = writeln!(text, "  row {} col {} edge {}", e.row, e.col, e.edge);
    }
    let message = format!("{}: not suitably connected", file.display());
    Err(Failure { message, payload: Some(payload(text, json)) })
}

#[derive(Serialize)]
struct StepJson {
    row: usize,
    col: usize,
    entry: String,
}

fn trace(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    let loops = m.trace_components()?;
    let json: Vec<Vec<StepJson>> = loops
        .iter()
        .map(|l| l.steps.iter().map(|s| StepJson { row: s.row, col: s.col, entry: s.entry.to_string() }).collect())
        .collect();
    let mut text = format!("{}\n", plural(loops.len(), "component"));
    for (i, l) in json.iter().enumerate() {
        let steps: Vec<String> = l.iter().map(|s| format!("{},{}{}", s.row, s.col, s.entry)).collect();
        let _ = writeln!(text, "component {}: {}: {}", i + 1, plural(l.len(), "step"), steps.join(" "));
    }
    Ok(payload(text, serde_json::json!({ "components": json })))
}

#[derive(Serialize)]
struct IdentifyJson {
    knot: Option<String>,
    chirality: Option<String>,
    components: usize,
    crossing_tiles: usize,
    jones_a: String,
    jones_t: Option<String>,
}

fn identify(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    let components = m.component_count()?;
    let pd = PlanarDiagram::from_mosaic(&m)?;
    let f = normalized_bracket(&pd)?;
    let t = to_t_form(&f).map(|p| p.render("t"));
    let id = reference_table()?.identify(&f);
    let (knot, chirality) = match &id {
        Identification::Known(k) => (Some(k.name.clone()), Some(k.chirality.to_string())),
        Identification::Unidentified => (None, None),
    };
    let mut text = match &id {
        Identification::Known(k) => format!("{k}\n"),
        Identification::Unidentified => "unidentified\n".to_string(),
    };
    let _ = writeln!(text, "jones: {}", t.as_deref().unwrap_or(&f.to_string()));
    let json = IdentifyJson { knot, chirality, components, crossing_tiles: m.crossing_tiles(), jones_a: f.to_string(), jones_t: t };
    match id {
        Identification::Known(_) => Ok(payload(text, json)),
        Identification::Unidentified => {
            let what = if components == 1 { "knot" } else { "link" };
            let message = format!("{}: {what} not in the reference table", file.display());
            Err(Failure { message, payload: Some(payload(text, json)) })
        }
    }
}

#[derive(Serialize)]
struct JonesJson {
    crossings: usize,
    writhe: i32,
    bracket: String,
    normalized: String,
    jones_t: Option<String>,
    determinant: Option<u64>,
}

fn jones(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    let pd = PlanarDiagram::from_mosaic(&m)?;
    let bracket = kauffman_bracket(&pd)?;
    let f = normalized_bracket(&pd)?;
    let json = JonesJson {
        crossings: pd.crossing_count(),
        writhe: pd.writhe(),
        bracket: bracket.to_string(),
        normalized: f.to_string(),
        jones_t: to_t_form(&f).map(|p| p.render("t")),
        determinant: determinant_of(&f),
    };
    let mut text = String::new();
    let _ = writeln!(text, "crossings: {}", json.crossings);
    let _ = writeln!(text, "writhe: {}", json.writhe);
    let _ = writeln!(text, "bracket: {}", json.bracket);
    let _ = writeln!(text, "normalized: {}", json.normalized);
    if let Some(t) = &json.jones_t {
        let _ = writeln!(text, "jones: {t}");
    }
    if let Some(d) = json.determinant {
        let _ = writeln!(text, "determinant: {d}");
    }
    Ok(payload(text, json))
}

#[derive(Serialize)]
struct MoveJson {
    kind: String,
    direction: String,
    row: usize,
    col: usize,
    rotation: u16,
    /// Code of the crossing tile removed or placed, in board orientation.
    crossing_tile: u8,
    crossing_delta: i32,
}

fn move_json(s: &MoveSite) -> MoveJson {
    MoveJson {
        kind: format!("{:?}", s.kind),
        direction: format!("{:?}", s.direction).to_lowercase(),
        row: s.anchor.0,
        col: s.anchor.1,
        rotation: 90 * s.orientation.quarter_turns() as u16,
        crossing_tile: s.orientation.map_tile(Tile::Crossing(s.over)).code(),
        crossing_delta: s.crossing_delta(),
    }
}

fn move_line(s: &MoveSite) -> String {
    let j = move_json(s);
    let delta = if j.crossing_delta.abs() == 1 { "crossing" } else { "crossings" };
    format!(
        "{} {} at row {} col {} rot{} tile {} ({:+} {delta})",
        j.kind, j.direction, j.row, j.col, j.rotation, j.crossing_tile, j.crossing_delta
    )
}

fn require_valid(file: &Path, m: &Mosaic) -> Result<(), Failure> {
    if m.is_suitably_connected() {
        Ok(())
    } else {
        Err(format!("{}: not suitably connected", file.display()).into())
    }
}

fn reduce(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    require_valid(file, &m)?;
    let (reduced, steps) = reduce_greedy(&m);
    let mut text = String::new();
    for s in &steps {
        let _ = writeln!(text, "{}", move_line(s));
    }
    let _ = writeln!(text, "crossing tiles: {} -> {}", m.crossing_tiles(), reduced.crossing_tiles());
    let _ = writeln!(text, "{}", reduced.to_text());
    let json = serde_json::json!({
        "moves": steps.iter().map(move_json).collect::<Vec<_>>(),
        "crossing_tiles_before": m.crossing_tiles(),
        "crossing_tiles_after": reduced.crossing_tiles(),
        "mosaic": reduced.to_text(),
    });
    Ok(payload(text, json))
}

fn moves(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    require_valid(file, &m)?;
    let mut sites = find_moves(&m);
    sites.extend(find_introductions(&m));
    let mut text = format!("{}\n", plural(sites.len(), "move site"));
    for s in &sites {
        let _ = writeln!(text, "{}", move_line(s));
    }
    Ok(payload(text, serde_json::json!({ "moves": sites.iter().map(move_json).collect::<Vec<_>>() })))
}

fn complete(file: &Path) -> Result<Payload, Failure> {
    let inner = load(file)?;
    if !inner.is_square() {
        return Err(format!("{}: an inner board must be square", file.display()).into());
    }
    let board = InnerBoard::new(inner.rows() + 2, inner.cells().to_vec());
    let done = complete_boundary(&board);
    let mut text = format!("{}\n", plural(done.len(), "completion"));
    let mut json = Vec::new();
    for m in &done {
        let components = m.component_count()?;
        let _ = writeln!(text, "\n# {}\n{}", plural(components, "component"), m.to_text());
        json.push(serde_json::json!({ "components": components, "mosaic": m.to_text() }));
    }
    let json = serde_json::json!({ "completions": json });
    if done.is_empty() {
        let message = format!("{}: inner board has no suitably connected completion", file.display());
        return Err(Failure { message, payload: Some(payload(text, json)) });
    }
    Ok(payload(text, json))
}

fn enumerate(n: usize, args: &FilterArgs, links: bool, workers: usize) -> Result<Payload, Failure> {
    if links {
        let filter = EnumFilter { require_single_component: false, ..args.filter() };
        let count = count_mosaics(n, filter, workers)?;
        let text = format!("{n}x{n}: {count} suitably connected boards\n");
        return Ok(payload(text, serde_json::json!({ "size": n, "filter": filter, "boards": count })));
    }
    let r = realizable_knots(n, args.filter(), workers)?;
    let mut text = format!("{n}x{n}: {} one-component boards\n", r.boards);
    let _ = writeln!(text, "{:<6} {:>10} {:>9} {:>6}", "knot", "boards", "crossings", "tiles");
    for k in &r.knots {
        let _ = writeln!(text, "{:<6} {:>10} {:>9} {:>6}", k.name, k.boards, k.min_crossing_tiles, k.min_nonblank_tiles);
    }
    let u = &r.unidentified;
    if u.boards > 0 {
        let _ = writeln!(text, "unidentified: {} boards, {}", u.boards, plural(u.distinct_polynomials, "distinct polynomial"));
    }
    Ok(payload(text, &r))
}

fn absence(knot: &str, n: usize, workers: usize, out: Option<&Path>) -> Result<Payload, Failure> {
    let start = Instant::now();
    let r = realizable_knots(n, EnumFilter::default(), workers)?;
    reference_table()?.require(knot)?;
    let cert = knot_mosaic::enumerate::certificate(&r, knot, start.elapsed().as_millis());
    let verdict = if cert.absent { "absent from" } else { "present on" };
    let text = format!(
        "{knot}: {verdict} {n}x{n} boards ({} one-component boards, {} knot types, {} unidentified boards)\n",
        cert.boards_enumerated, cert.distinct_knot_types, cert.unidentified_boards
    );
    let mut json = serde_json::to_value(&cert).expect("json");
    if let Some(path) = out {
        let body = serde_json::to_string_pretty(&json).expect("json") + "\n";
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    // Wall time stays out of stdout so output is reproducible.
    json.as_object_mut().expect("object").remove("elapsed_ms");
    Ok(Payload { text, json })
}

#[derive(Serialize)]
struct TabCsv<'a> {
    knot: &'a str,
    crossing_number: u32,
    table_mosaic_number: u32,
    mosaic_number: Option<u32>,
    lower_bound: u32,
    upper_bound: Option<u32>,
    min_tile_count: Option<usize>,
    tile_count_exact: bool,
    witness_crossing_tiles: Option<usize>,
    witness_source: Option<&'a str>,
    /// Tile codes, rows separated by `/`.
    witness: Option<String>,
}

/// The CSV mirror of a tabulation.
pub fn tabulation_csv(rows: &[TabRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        let witness = r.witness.as_ref().map(|m| {
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).code().to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("/")
        });
        w.serialize(TabCsv {
            knot: &r.knot,
            crossing_number: r.crossing_number,
            table_mosaic_number: r.table_mosaic_number,
            mosaic_number: r.mosaic_number,
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            min_tile_count: r.min_tile_count,
            tile_count_exact: r.tile_count_exact,
            witness_crossing_tiles: r.witness_crossing_tiles,
            witness_source: r.witness_source.as_deref(),
            witness,
        })
        .expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
}

/// Reads every `*.mosaic` file in `dir`, named by file stem, in name order.
pub fn load_fixtures(dir: &Path) -> Result<Vec<Fixture>, String> {
    let entries = std::fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut paths: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "mosaic")).collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_stem().expect("file name").to_string_lossy().into_owned();
            let text = std::fs::read_to_string(p).map_err(|e| format!("fixture {name}: {e}"))?;
            let mosaic = Mosaic::parse(&text).map_err(|e| format!("fixture {name}: {e}"))?;
            Ok(Fixture { name, mosaic })
        })
        .collect()
}

fn tab(max_n: usize, fixtures: Option<&Path>, workers: usize, out: Option<&Path>) -> Result<Payload, Failure> {
    if !(2..=knot_mosaic::enumerate::MAX_SIZE).contains(&max_n) {
        return Err(format!("--max-size must be between 2 and {}", knot_mosaic::enumerate::MAX_SIZE).into());
    }
    let fixtures = match fixtures {
        Some(dir) => load_fixtures(dir)?,
        None => Vec::new(),
    };
    let rows = tabulate(max_n, &fixtures, workers)?;
    let show = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
    let mut text = format!("{:<6} {:>2} {:>7} {:>2} {:>5} {:>5} {:>5}  {}\n", "knot", "c", "table m", "m", "lower", "upper", "tiles", "witness");
    for r in &rows {
        let tiles = match (r.min_tile_count, r.tile_count_exact) {
            (Some(t), true) => t.to_string(),
            (Some(t), false) => format!("<={t}"),
            (None, _) => "-".to_string(),
        };
        let status = if r.matches_table() { "" } else { "  (differs from table)" };
        let _ = writeln!(
            text,
            "{:<6} {:>2} {:>7} {:>2} {:>5} {:>5} {:>5}  {}{status}",
            r.knot,
            r.crossing_number,
            r.table_mosaic_number,
            show(r.mosaic_number),
            r.lower_bound,
            show(r.upper_bound),
            tiles,
            r.witness_source.as_deref().unwrap_or("-"),
        );
    }
    let json = serde_json::to_value(&rows).expect("json");
    if let Some(path) = out {
        let body = serde_json::to_string_pretty(&json).expect("json") + "\n";
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        let csv_path = path.with_extension("csv");
        std::fs::write(&csv_path, tabulation_csv(&rows)).map_err(|e| format!("{}: {e}", csv_path.display()))?;
    }
    Ok(Payload { text, json })
}

fn bounds() -> Result<Payload, Failure> {
    let table = reference_table()?;
    let reports: Vec<_> = table.records().iter().map(bound_report).collect();
    let mut text = format!("{:<6} {:>2} {:>2} {:>14} {:>8}  {}\n", "knot", "c", "m", "ceil(sqrt c)+3", "c+1", "flags");
    for b in &reports {
        let mut flags = Vec::new();
        if !b.lower_ok {
            flags.push("lower bound exceeds m");
        }
        if !b.upper_ok {
            flags.push("m exceeds upper bound");
        }
        let _ = writeln!(text, "{:<6} {:>2} {:>2} {:>14} {:>8}  {}", b.name, b.crossing_number, b.mosaic_number, b.lower_printed, b.upper, flags.join("; "));
    }
    let lower = reports.iter().filter(|b| !b.lower_ok).count();
    let upper = reports.iter().filter(|b| !b.upper_ok).count();
    let _ = writeln!(text, "lower bound violated by {}; upper bound violated by {}", plural(lower, "knot"), plural(upper, "knot"));
    Ok(payload(text, &reports))
}

fn render(file: &Path) -> Result<Payload, Failure> {
    let m = load(file)?;
    let svg = render_svg(&m);
    Ok(Payload { json: serde_json::json!({ "svg": svg }), text: svg })
}

mod failure;
mod input;
mod svg;

use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use concyclic::circle_model::{classify_degeneracy, degeneracy_class, DegeneracyClass, Witness};
use concyclic::degenerate::{enumerate_optimal, solve_canonical, DEFAULT_LIMIT};
use concyclic::fast_solver::{
    solve_extended, solve_simplified, solve_simplified_counted, CLASSIFY_LIMIT,
};
use concyclic::instances;
use concyclic::oracle::optimal_set;
use concyclic::triangulation::{length_vector, DualStructure, Triangulation};
use concyclic::Error;
use serde::Serialize;
use serde_json::{json, Value};

use failure::Failure;
use input::Input;

#[derive(Parser)]
#[command(name = "concyclic", version, about = "Max-min angle triangulations of points on a circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the input: distinct diagonals, equal diagonals, or symmetric quadruples.
    Check {
        /// Input JSON file, or "-" for stdin.
        input: String,
        #[arg(long)]
        exact: bool,
    },
    /// Compute one optimal triangulation.
    Triangulate {
        input: String,
        #[arg(long, value_enum, default_value_t = SolveMode::Auto)]
        mode: SolveMode,
        /// Parse angles exactly (degrees must be multiples of 1e-6).
        #[arg(long)]
        exact: bool,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<String>,
    },
    /// List all optimal triangulations.
    Enumerate {
        input: String,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        exact: bool,
    },
    /// Brute-force every triangulation (at most 16 points).
    Oracle {
        input: String,
        #[arg(long)]
        exact: bool,
    },
    /// Print a generated instance as an input document.
    #[command(group(ArgGroup::new("kind").required(true).args(["regular", "random", "equal_ears"])))]
    Gen {
        #[arg(long, value_name = "N")]
        regular: Option<usize>,
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, value_name = "N")]
        equal_ears: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the distinct-diagonal solver on random instances and report
    /// operations per point.
    Bench {
        /// Sizes as integers or powers of two such as 2^14.
        #[arg(long, value_delimiter = ',', value_parser = parse_size,
              default_value = "2^10,2^12,2^14,2^16")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMode {
    Auto,
    Simplified,
    Extended,
    Canonical,
}

fn parse_size(s: &str) -> Result<usize, String> {
    let v = match s.trim().strip_prefix("2^") {
        Some(e) => e
            .parse::<u32>()
            .ok()
            .and_then(|e| 1usize.checked_shl(e))
            .ok_or_else(|| format!("bad size {s:?}"))?,
        None => s.trim().parse().map_err(|_| format!("bad size {s:?}"))?,
    };
    Ok(v)
}

#[derive(Default, Serialize)]
struct OutputDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    frame: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degeneracy: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal_pairs: Option<Vec<[Vec<Value>; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagonals: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ears: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_path: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sorted_diagonal_lengths: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triangulations: Option<Vec<Vec<Vec<Value>>>>,
}

/// Diagonals in dual-path order, as label pairs.
fn path_diagonals(input: &Input, t: &Triangulation) -> Vec<Vec<Value>> {
    let ordered = match t.dual_path() {
        DualStructure::Path(path) => path.diagonals(),
        DualStructure::NotAPath { .. } => t.diagonals().to_vec(),
    };
    ordered.iter().map(|d| input.pair(d.lo(), d.hi())).collect()
}

fn describe(input: &Input, t: &Triangulation, doc: &mut OutputDocument) {
    let p = &input.points;
    doc.diagonals = Some(path_diagonals(input, t));
    doc.ears = Some(t.ears().iter().map(|d| input.pair(d.lo(), d.hi())).collect());
    if let DualStructure::Path(path) = t.dual_path() {
        doc.dual_path = Some(
            path.triangles
                .iter()
                .map(|tri| tri.iter().map(|&v| input.label(v)).collect())
                .collect(),
        );
    }
    doc.sorted_diagonal_lengths = Some(length_vector(t, p).values(p.radius()));
}

fn cmd_check(input: &Input) -> OutputDocument {
    const SHOWN: usize = 1000;
    let d = classify_degeneracy(&input.points);
    let mut doc = OutputDocument {
        degeneracy: Some(d.class.name()),
        ..Default::default()
    };
    let mut quads = Vec::new();
    let mut pairs = Vec::new();
    for w in d.witnesses.iter().take(SHOWN) {
        match w {
            Witness::Quadruple(q) => quads.push(q.iter().map(|&v| input.label(v)).collect()),
            Witness::EqualPair(a, b) => {
                pairs.push([input.pair(a[0], a[1]), input.pair(b[0], b[1])])
            }
        }
    }
    doc.truncated = (d.witnesses.len() > SHOWN).then_some(true);
    doc.witnesses = Some(quads);
    if !pairs.is_empty() {
        doc.equal_pairs = Some(pairs);
    }
    doc
}

fn cmd_triangulate(input: &Input, mode: SolveMode) -> Result<(OutputDocument, Triangulation), Failure> {
    let p = &input.points;
    let class = (p.len() <= CLASSIFY_LIMIT).then(|| degeneracy_class(p));
    let mut doc = OutputDocument {
        degeneracy: class.map(|c| c.name()),
        ..Default::default()
    };
    let frame = if input.cartesian { "cartesian" } else { "angles" };
    let canonical = |doc: &mut OutputDocument| {
        doc.mode = Some("canonical");
        doc.frame = Some(frame);
        solve_canonical(p)
    };
    let t = match mode {
        SolveMode::Simplified => {
            doc.mode = Some("simplified");
            solve_simplified(p)
        }
        SolveMode::Extended => {
            doc.mode = Some("extended");
            solve_extended(p)
        }
        SolveMode::Canonical => canonical(&mut doc),
        SolveMode::Auto => match class {
            Some(DegeneracyClass::DistinctDiagonals) => {
                doc.mode = Some("simplified");
                solve_simplified(p)
            }
            Some(DegeneracyClass::NoSymmetricQuadruple) => {
                doc.mode = Some("extended");
                solve_extended(p)
            }
            Some(DegeneracyClass::Degenerate) => canonical(&mut doc),
            None => {
                doc.mode = Some("extended");
                match solve_extended(p) {
                    Err(Error::PreconditionViolated(_)) => canonical(&mut doc),
                    r => r,
                }
            }
        },
    }?;
    describe(input, &t, &mut doc);
    Ok((doc, t))
}

fn cmd_enumerate(input: &Input, limit: usize) -> Result<OutputDocument, Failure> {
    if limit == 0 {
        return Err(Failure::parse(Error::LimitIsZero.to_string()));
    }
    let found = enumerate_optimal(&input.points, limit)?;
    let mut doc = OutputDocument {
        degeneracy: (input.points.len() <= CLASSIFY_LIMIT)
            .then(|| degeneracy_class(&input.points).name()),
        count: Some(found.triangulations.len()),
        truncated: Some(found.truncated),
        triangulations: Some(
            found.triangulations.iter().map(|t| path_diagonals(input, t)).collect(),
        ),
        ..Default::default()
    };
    if found.triangulations.len() == 1 {
        describe(input, &found.triangulations[0], &mut doc);
    }
    Ok(doc)
}

fn cmd_oracle(input: &Input) -> Result<OutputDocument, Failure> {
    let set = optimal_set(&input.points)?;
    let mut doc = OutputDocument {
        degeneracy: Some(degeneracy_class(&input.points).name()),
        count: Some(set.winners.len()),
        sorted_diagonal_lengths: Some(set.score.values(input.points.radius())),
        triangulations: Some(set.winners.iter().map(|t| path_diagonals(input, t)).collect()),
        ..Default::default()
    };
    if set.winners.len() == 1 {
        describe(input, &set.winners[0], &mut doc);
    }
    Ok(doc)
}

fn cmd_gen(regular: Option<usize>, random: Option<usize>, equal_ears: Option<usize>, seed: u64) -> Result<Value, Failure> {
    if let Some(n) = regular {
        instances::regular(n)?;
        let turns: Vec<String> = (0..n).map(|k| format!("{k}/{n}")).collect();
        return Ok(json!({ "angles_turns": turns }));
    }
    let p = match (random, equal_ears) {
        (Some(n), _) => instances::random(n, seed)?,
        (_, Some(n)) => instances::equal_ears(n, seed)?,
        _ => unreachable!("clap requires one generator"),
    };
    let turns: Vec<String> = p.thetas().iter().map(|t| t.to_string()).collect();
    Ok(json!({ "angles_turns": turns }))
}

fn cmd_bench(sizes: &[usize], seed: u64) -> Result<(Value, bool), Failure> {
    if let Some(&n) = sizes.iter().find(|&&n| n < 16) {
        return Err(Failure::parse(format!("bench sizes must be at least 16, got {n}")));
    }
    let mut rows = Vec::new();
    let mut per_n = Vec::new();
    for (k, &n) in sizes.iter().enumerate() {
        let p = instances::random(n, seed.wrapping_add(k as u64))?;
        let start = Instant::now();
        let (_, ops) = solve_simplified_counted(&p)?;
        let secs = start.elapsed().as_secs_f64();
        let ratio = ops.total() as f64 / n as f64;
        per_n.push(ratio);
        rows.push(json!({
            "n": n,
            "seconds": secs,
            "chord_comparisons": ops.chord_comparisons,
            "arc_constructions": ops.arc_constructions,
            "full_scans": ops.full_scans,
            "ops_per_n": ratio,
        }));
    }
    let max = per_n.iter().cloned().fold(f64::MIN, f64::max);
    let min = per_n.iter().cloned().fold(f64::MAX, f64::min);
    let spread = if per_n.is_empty() { 1.0 } else { max / min };
    let ok = spread <= 2.0;
    Ok((json!({ "rows": rows, "ops_per_n_spread": spread, "within_bound": ok }), ok))
}

fn load(path: &str, exact: bool) -> Result<Input, Failure> {
    input::parse(&input::read_source(path)?, exact)
}

fn run(cli: Cli) -> Result<Value, Failure> {
    let to_value = |doc: OutputDocument| serde_json::to_value(doc).expect("serializable");
    match cli.command {
        Command::Check { input, exact } => Ok(to_value(cmd_check(&load(&input, exact)?))),
        Command::Triangulate { input, mode, exact, svg } => {
            let input = load(&input, exact)?;
            let (doc, t) = cmd_triangulate(&input, mode)?;
            if let Some(path) = svg {
                let labels: Vec<String> = (0..input.points.len())
                    .map(|i| match input.label(i) {
                        Value::String(s) => s,
                        v => v.to_string(),
                    })
                    .collect();
                std::fs::write(&path, svg::render(&input.points, &t, &labels))
                    .map_err(|e| Failure::io(format!("{path}: {e}")))?;
            }
            Ok(to_value(doc))
        }
        Command::Enumerate { input, limit, exact } => {
            Ok(to_value(cmd_enumerate(&load(&input, exact)?, limit)?))
        }
        Command::Oracle { input, exact } => Ok(to_value(cmd_oracle(&load(&input, exact)?)?)),
        Command::Gen { regular, random, equal_ears, seed } => {
            cmd_gen(regular, random, equal_ears, seed)
        }
        Command::Bench { sizes, seed } => {
            let (report, ok) = cmd_bench(&sizes, seed)?;
            if ok {
                Ok(report)
            } else {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                Err(Failure::precondition("operations per point vary by more than a factor of 2"))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let f = Failure::parse(e.to_string().trim().to_string());
            eprintln!("{}", serde_json::to_string(&json!({"error": "usage", "message": f.message})).unwrap());
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", serde_json::to_string(&f).unwrap());
            ExitCode::from(f.code as u8)
        }
    }
}

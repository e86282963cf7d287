//! Command-line interface: coefficient queries, game/puzzle enumeration with
//! rendering, tournaments, and exhaustive verification sweeps.

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrcheckers::board::{partition_to_subset, subset_to_partition, Partition, SubsetK};
use lrcheckers::game::{
    expansion, game_to_tableau, play_all_games, play_all_games_checked, tournament, Mode,
};
use lrcheckers::oracle::{companion, count_lr_tableaux, count_set_valued, lr_tableaux};
use lrcheckers::puzzles::{enumerate_puzzles, puzzle_counts, subset_to_boundary, PuzzleMode};
use lrcheckers::render::{ascii_board, svg_game, svg_puzzle};
use lrcheckers::specialization::specialization_sequence;
use lrcheckers::translate::game_to_puzzle;
use lrcheckers::{Error, Tableau, WhiteConfig};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lrck",
    about = "Littlewood-Richardson coefficients and Grothendieck-ring structure \
             constants for Grassmannians, by checker games, puzzles, and tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a product of Schubert classes, or print one coefficient.
    Lrc(LrcArgs),
    /// Multiply Schur polynomials (optionally stable or K-theoretic).
    Schur(SchurArgs),
    /// Expand a product in the Grothendieck ring (alias for `lrc --ktheory`).
    Ktheory(LrcArgs),
    /// Enumerate checker games, with optional traces and diagrams.
    Games(GamesArgs),
    /// Enumerate puzzles, with optional SVG output.
    Puzzles(PuzzlesArgs),
    /// Count solutions of a multi-class Schubert problem.
    Tournament(TournamentArgs),
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct LrcArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Partition as a comma list, e.g. 2,1 (empty string for the trivial class).
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    /// With --gamma, print the single coefficient instead of the expansion.
    #[arg(long)]
    gamma: Option<String>,
    /// Compute in the Grothendieck ring (signed expansion).
    #[arg(long)]
    ktheory: bool,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    /// Rectangle KxM to truncate to, e.g. 2x2.
    #[arg(long, conflicts_with = "stable")]
    rect: Option<String>,
    /// Use a rectangle large enough that nothing truncates.
    #[arg(long)]
    stable: bool,
    #[arg(long)]
    ktheory: bool,
}

#[derive(Args)]
struct GamesArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Subset of {1..n} as a comma list, e.g. 2,4.
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    ktheory: bool,
    /// Write all game traces to this JSON file.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Re-validate a trace file: re-enumerate and check each recorded game
    /// (decision sequence and final subset) matches exactly once.
    #[arg(long, conflicts_with = "trace")]
    replay: Option<PathBuf>,
    /// Emit a diagram per game.
    #[arg(long, value_enum)]
    render: Option<RenderKind>,
    /// Output directory for rendered diagrams.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Ascii,
    Svg,
}

#[derive(Args)]
struct PuzzlesArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    ktheory: bool,
    /// Output directory for one SVG per puzzle.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct TournamentArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Partitions, one comma list per argument, e.g. --classes 1 1 1 1.
    #[arg(long, num_args = 2.., required = true)]
    classes: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Worker cap for the sweep (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Oracle,
    Triality,
    Commutativity,
    Stability,
    Pieri,
    Bijection,
    Midsort,
    Ktheory,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Partition::new(vec![]).map_err(|e| e.to_string());
    }
    let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
    let parts = parts.map_err(|e| format!("bad partition {s:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_subset(s: &str) -> Result<SubsetK, String> {
    let elems: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
    let elems = elems.map_err(|e| format!("bad subset {s:?}: {e}"))?;
    SubsetK::new(elems).map_err(|e| e.to_string())
}

fn class_name(p: &Partition, ktheory: bool) -> String {
    let letter = if ktheory { "O" } else { "s" };
    let body = p
        .parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{letter}({body})")
}

fn format_expansion(terms: &BTreeMap<Partition, i64>, ktheory: bool) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    // Degree first, largest leading parts first within a degree, so the
    // classical layer prints before the K-theory corrections.
    let mut ordered: Vec<(&Partition, &i64)> = terms.iter().collect();
    ordered.sort_by(|(p, _), (q, _)| {
        p.size()
            .cmp(&q.size())
            .then_with(|| q.parts().cmp(p.parts()))
    });
    let mut out = String::new();
    for (gamma, c) in ordered {
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if *c < 0 {
                out.push_str("- ");
            }
        } else {
            out.push_str(if *c < 0 { " - " } else { " + " });
        }
        if mag != 1 {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&class_name(gamma, ktheory));
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Help/version requests are successes; anything else is a usage error.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg.text);
            ExitCode::from(msg.code)
        }
    }
}

struct Failure {
    code: u8,
    text: String,
}

fn usage(text: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        text: text.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvariantViolation(_) | Error::UniquenessViolation(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            text: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Lrc(args) => cmd_lrc(args, false),
        Command::Ktheory(args) => cmd_lrc(args, true),
        Command::Schur(args) => cmd_schur(args),
        Command::Games(args) => cmd_games(args),
        Command::Puzzles(args) => cmd_puzzles(args),
        Command::Tournament(args) => cmd_tournament(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_lrc(args: LrcArgs, force_ktheory: bool) -> Result<u8, Failure> {
    let ktheory = force_ktheory || args.ktheory;
    let alpha = parse_partition(&args.alpha).map_err(usage)?;
    let beta = parse_partition(&args.beta).map_err(usage)?;
    let mode = if ktheory {
        Mode::KTheory
    } else {
        Mode::Cohomology
    };
    let exp = expansion(&alpha, &beta, args.k, args.n, mode)?;
    match args.gamma {
        Some(g) => {
            let gamma = parse_partition(&g).map_err(usage)?;
            println!("{}", exp.coefficient(&gamma));
        }
        None => println!("{}", format_expansion(&exp.terms, ktheory)),
    }
    Ok(EXIT_OK)
}

fn cmd_schur(args: SchurArgs) -> Result<u8, Failure> {
    let alpha = parse_partition(&args.alpha).map_err(usage)?;
    let beta = parse_partition(&args.beta).map_err(usage)?;
    let (k, n) = match (&args.rect, args.stable) {
        (Some(rect), _) => {
            let (k, m) = rect
                .split_once(['x', 'X'])
                .ok_or_else(|| usage(format!("bad rectangle {rect:?}, expected KxM")))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|e| usage(format!("bad rectangle: {e}")))?;
            let m: usize = m
                .trim()
                .parse()
                .map_err(|e| usage(format!("bad rectangle: {e}")))?;
            (k, k + m)
        }
        (None, _) => {
            // Stable by default: pick a rectangle nothing can truncate in.
            let k = (alpha.len() + beta.len()).max(1);
            let width = (alpha.part(0) + beta.part(0)).max(1);
            (k, k + width)
        }
    };
    let mode = if args.ktheory {
        Mode::KTheory
    } else {
        Mode::Cohomology
    };
    let exp = expansion(&alpha, &beta, k, n, mode)?;
    println!("{}", format_expansion(&exp.terms, args.ktheory));
    Ok(EXIT_OK)
}

fn cmd_games(args: GamesArgs) -> Result<u8, Failure> {
    let a = parse_subset(&args.a).map_err(usage)?;
    let b = parse_subset(&args.b).map_err(usage)?;
    if a.k() != args.k || b.k() != args.k {
        return Err(usage("subset sizes must equal --k"));
    }
    if args.render.is_some() && args.out.is_none() {
        if let Some(RenderKind::Svg) = args.render {
            return Err(usage("--render svg requires --out DIR"));
        }
    }
    let mode = if args.ktheory {
        Mode::KTheory
    } else {
        Mode::Cohomology
    };
    let games = play_all_games(&a, &b, args.n, mode)?;
    let order = specialization_sequence(args.n);
    for (i, g) in games.iter().enumerate() {
        println!(
            "game {i}: gamma {{{}}} sign {:+}",
            g.subset
                .elems()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            g.sign
        );
    }
    println!("{} game(s)", games.len());

    if let Some(path) = &args.trace {
        let payload: Vec<serde_json::Value> = games
            .iter()
            .map(|g| {
                serde_json::json!({
                    "finalSubset": g.subset.elems(),
                    "sign": g.sign,
                    "trace": g.trace,
                })
            })
            .collect();
        let json = serde_json::to_string_pretty(&payload)
            .map_err(|e| usage(format!("trace serialization: {e}")))?;
        std::fs::write(path, json)
            .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
    }

    if let Some(path) = &args.replay {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("reading {}: {e}", path.display())))?;
        let recorded: Vec<serde_json::Value> =
            serde_json::from_str(&text).map_err(|e| usage(format!("parsing trace file: {e}")))?;
        let mut live: Vec<(Vec<String>, Vec<usize>)> = games
            .iter()
            .map(|g| {
                (
                    g.trace.iter().map(|r| r.decision.clone()).collect(),
                    g.subset.elems().to_vec(),
                )
            })
            .collect();
        for (i, rec) in recorded.iter().enumerate() {
            let decisions: Vec<String> = rec["trace"]
                .as_array()
                .map(|a| {
                    a.iter()
                        .map(|m| m["decision"].as_str().unwrap_or("").to_string())
                        .collect()
                })
                .unwrap_or_default();
            let subset: Vec<usize> = rec["finalSubset"]
                .as_array()
                .map(|a| {
                    a.iter()
                        .filter_map(|v| v.as_u64())
                        .map(|v| v as usize)
                        .collect()
                })
                .unwrap_or_default();
            match live
                .iter()
                .position(|(d, s)| *d == decisions && *s == subset)
            {
                Some(pos) => {
                    live.remove(pos);
                }
                None => {
                    return Err(Failure {
                        code: EXIT_VERIFY,
                        text: format!("replay: recorded game {i} has no live match"),
                    })
                }
            }
        }
        if !live.is_empty() {
            return Err(Failure {
                code: EXIT_VERIFY,
                text: format!(
                    "replay: {} live game(s) missing from trace file",
                    live.len()
                ),
            });
        }
        println!("replay ok: {} game(s)", recorded.len());
    }

    match args.render {
        None => {}
        Some(RenderKind::Ascii) => {
            let start = match lrcheckers::initial_white(&a, &b, args.n)? {
                lrcheckers::InitialWhite::Config(w) => w,
                lrcheckers::InitialWhite::NoGame => return Ok(EXIT_OK),
            };
            for (i, g) in games.iter().enumerate() {
                println!("--- game {i} ---");
                println!("{}", ascii_board(&order.black_states[0], &start));
                for rec in &g.trace {
                    let whites = WhiteConfig::new(
                        rec.white_after
                            .iter()
                            .map(|&(r, c)| lrcheckers::Square::new(r, c))
                            .collect(),
                    )?;
                    println!(
                        "e{} {}{}",
                        rec.letter,
                        rec.decision,
                        if rec.dagger { "\u{2020}" } else { "" }
                    );
                    println!(
                        "{}",
                        ascii_board(&order.black_states[rec.stage + 1], &whites)
                    );
                }
            }
            if let Some(dir) = &args.out {
                std::fs::create_dir_all(dir)
                    .map_err(|e| usage(format!("creating {}: {e}", dir.display())))?;
            }
        }
        Some(RenderKind::Svg) => {
            let dir = args.out.as_ref().expect("checked above");
            std::fs::create_dir_all(dir)
                .map_err(|e| usage(format!("creating {}: {e}", dir.display())))?;
            let start = match lrcheckers::initial_white(&a, &b, args.n)? {
                lrcheckers::InitialWhite::Config(w) => w,
                lrcheckers::InitialWhite::NoGame => return Ok(EXIT_OK),
            };
            for (i, g) in games.iter().enumerate() {
                let svg = svg_game(args.n, &start, &g.trace)?;
                let path = dir.join(format!("game-{i:03}.svg"));
                std::fs::write(&path, svg)
                    .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
            }
            println!("wrote {} diagram(s) to {}", games.len(), dir.display());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_puzzles(args: PuzzlesArgs) -> Result<u8, Failure> {
    let alpha = parse_partition(&args.alpha).map_err(usage)?;
    let beta = parse_partition(&args.beta).map_err(usage)?;
    let a = partition_to_subset(&alpha, args.k, args.n)?;
    let b = partition_to_subset(&beta, args.k, args.n)?;
    let gamma = match &args.gamma {
        Some(g) => Some(partition_to_subset(
            &parse_partition(g).map_err(usage)?,
            args.k,
            args.n,
        )?),
        None => None,
    };
    let mode = if args.ktheory {
        PuzzleMode::KTheory
    } else {
        PuzzleMode::Cohomology
    };
    let puzzles = enumerate_puzzles(&a, &b, gamma.as_ref(), args.n, mode)?;
    let mut by_gamma: BTreeMap<Vec<usize>, (u64, i64)> = BTreeMap::new();
    for p in &puzzles {
        let e = by_gamma
            .entry(p.gamma_subset().elems().to_vec())
            .or_default();
        e.0 += 1;
        e.1 += p.sign();
    }
    for (g, (count, signed)) in &by_gamma {
        let gp = subset_to_partition(&SubsetK::new(g.clone())?, args.k, args.n)?;
        if args.ktheory {
            println!(
                "{}: {count} puzzle(s), signed {signed:+}",
                class_name(&gp, true)
            );
        } else {
            println!("{}: {count} puzzle(s)", class_name(&gp, false));
        }
    }
    println!("{} puzzle(s)", puzzles.len());
    if let Some(dir) = &args.svg {
        std::fs::create_dir_all(dir)
            .map_err(|e| usage(format!("creating {}: {e}", dir.display())))?;
        for (i, p) in puzzles.iter().enumerate() {
            let path = dir.join(format!("puzzle-{i:03}.svg"));
            std::fs::write(&path, svg_puzzle(p))
                .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
        }
        println!("wrote {} diagram(s) to {}", puzzles.len(), dir.display());
    }
    Ok(EXIT_OK)
}

fn cmd_tournament(args: TournamentArgs) -> Result<u8, Failure> {
    let classes: Result<Vec<Partition>, String> =
        args.classes.iter().map(|s| parse_partition(s)).collect();
    let classes = classes.map_err(usage)?;
    let count = tournament(&classes, args.k, args.n)?;
    println!("{count}");
    Ok(EXIT_OK)
}

/// All k-subsets of {1..n}.
fn subsets(k: usize, n: usize) -> Vec<SubsetK> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<SubsetK>) {
        if cur.len() == k {
            out.push(SubsetK::new(cur.clone()).unwrap());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(1, k, n, &mut vec![], &mut out);
    out
}

fn all_problems(max_n: usize) -> Vec<(usize, usize, SubsetK, SubsetK)> {
    let mut out = vec![];
    for n in 2..=max_n {
        for k in 1..n {
            let subs = subsets(k, n);
            for a in &subs {
                for b in &subs {
                    out.push((k, n, a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| usage(format!("--jobs: {e}")))?;
    }
    let problems = all_problems(args.max_n);
    let check = |(k, n, a, b): &(usize, usize, SubsetK, SubsetK)| -> Result<(), String> {
        verify_one(args.suite, *k, *n, a, b)
    };
    let failures: Vec<String> = problems.par_iter().filter_map(|p| check(p).err()).collect();
    if failures.is_empty() {
        println!("ok: {} problem(s) verified", problems.len());
        Ok(EXIT_OK)
    } else {
        for f in failures.iter().take(10) {
            eprintln!("verify: {f}");
        }
        Err(Failure {
            code: EXIT_VERIFY,
            text: format!("{} verification failure(s)", failures.len()),
        })
    }
}

fn verify_one(suite: Suite, k: usize, n: usize, a: &SubsetK, b: &SubsetK) -> Result<(), String> {
    let alpha = subset_to_partition(a, k, n).map_err(|e| e.to_string())?;
    let beta = subset_to_partition(b, k, n).map_err(|e| e.to_string())?;
    let ctx = format!("n={n} k={k} a={:?} b={:?}", a.elems(), b.elems());
    match suite {
        Suite::Oracle => {
            let exp =
                expansion(&alpha, &beta, k, n, Mode::Cohomology).map_err(|e| e.to_string())?;
            let pc = puzzle_counts(a, b, n, PuzzleMode::Cohomology).map_err(|e| e.to_string())?;
            for gs in subsets(k, n) {
                let gamma = subset_to_partition(&gs, k, n).map_err(|e| e.to_string())?;
                let games = exp.coefficient(&gamma) as u64;
                let tabs = count_lr_tableaux(&gamma, &alpha, &beta);
                let puz = pc.count(&subset_to_boundary(&gs, n));
                if games != tabs || games != puz {
                    return Err(format!(
                        "{ctx} gamma={:?}: games {games}, tableaux {tabs}, puzzles {puz}",
                        gamma.parts()
                    ));
                }
            }
        }
        Suite::Ktheory => {
            let exp = expansion(&alpha, &beta, k, n, Mode::KTheory).map_err(|e| e.to_string())?;
            let pc = puzzle_counts(a, b, n, PuzzleMode::KTheory).map_err(|e| e.to_string())?;
            for gs in subsets(k, n) {
                let gamma = subset_to_partition(&gs, k, n).map_err(|e| e.to_string())?;
                let games = exp.coefficient(&gamma);
                let oracle = count_set_valued(&gamma, &alpha, &beta);
                let puz = pc.signed(&subset_to_boundary(&gs, n));
                if games != oracle || games != puz {
                    return Err(format!(
                        "{ctx} gamma={:?}: games {games}, set-valued {oracle}, puzzles {puz}",
                        gamma.parts()
                    ));
                }
            }
        }
        Suite::Commutativity => {
            for mode in [Mode::Cohomology, Mode::KTheory] {
                let ab = expansion(&alpha, &beta, k, n, mode).map_err(|e| e.to_string())?;
                let ba = expansion(&beta, &alpha, k, n, mode).map_err(|e| e.to_string())?;
                if ab.terms != ba.terms {
                    return Err(format!("{ctx}: product not commutative"));
                }
            }
        }
        Suite::Triality => {
            let exp =
                expansion(&alpha, &beta, k, n, Mode::Cohomology).map_err(|e| e.to_string())?;
            for gs in subsets(k, n) {
                let gamma = subset_to_partition(&gs, k, n).map_err(|e| e.to_string())?;
                let lhs = exp.coefficient(&gamma);
                let gd = gamma.dual(k, n - k).map_err(|e| e.to_string())?;
                let ad = alpha.dual(k, n - k).map_err(|e| e.to_string())?;
                let rhs = expansion(&beta, &gd, k, n, Mode::Cohomology)
                    .map_err(|e| e.to_string())?
                    .coefficient(&ad);
                if lhs != rhs {
                    return Err(format!("{ctx} gamma={:?}: triality fails", gamma.parts()));
                }
            }
        }
        Suite::Stability => {
            let exp =
                expansion(&alpha, &beta, k, n, Mode::Cohomology).map_err(|e| e.to_string())?;
            // Same product one rectangle larger in each direction.
            for (k2, n2) in [(k, n + 1), (k + 1, n + 1)] {
                let big = expansion(&alpha, &beta, k2, n2, Mode::Cohomology)
                    .map_err(|e| e.to_string())?;
                for (gamma, c) in &exp.terms {
                    if big.coefficient(gamma) != *c {
                        return Err(format!(
                            "{ctx} gamma={:?}: coefficient changes in {k2}x{}",
                            gamma.parts(),
                            n2 - k2
                        ));
                    }
                }
            }
        }
        Suite::Pieri => {
            for p in 1..=(n - k) {
                if !lrcheckers::pieri_check(&alpha, p, k, n).map_err(|e| e.to_string())? {
                    return Err(format!("{ctx}: Pieri fails for p={p}"));
                }
            }
        }
        Suite::Bijection => {
            let games = play_all_games(a, b, n, Mode::Cohomology).map_err(|e| e.to_string())?;
            let mut by_gamma: BTreeMap<Vec<usize>, Vec<Tableau>> = BTreeMap::new();
            let mut puzzles: BTreeSet<lrcheckers::Puzzle> = BTreeSet::new();
            for g in &games {
                by_gamma
                    .entry(g.subset.elems().to_vec())
                    .or_default()
                    .push(game_to_tableau(&g.trace).canonical());
                let p = game_to_puzzle(a, b, n, g).map_err(|e| format!("{ctx}: {e}"))?;
                if !puzzles.insert(p) {
                    return Err(format!("{ctx}: game-to-puzzle not injective"));
                }
            }
            for (gs, tabs) in &by_gamma {
                let gamma = subset_to_partition(&SubsetK::new(gs.clone()).unwrap(), k, n)
                    .map_err(|e| e.to_string())?;
                let image: BTreeSet<Tableau> = tabs.iter().cloned().collect();
                if image.len() != tabs.len() {
                    return Err(format!("{ctx}: game-to-tableau not injective"));
                }
                let oracle: BTreeSet<Tableau> = lr_tableaux(&gamma, &alpha, &beta)
                    .iter()
                    .map(companion)
                    .collect();
                if image != oracle {
                    return Err(format!("{ctx} gamma={gs:?}: tableau image mismatch"));
                }
            }
        }
        Suite::Midsort => {
            // Per-move invariant checks (mid-sort, happiness, codimension,
            // dimension law) are enabled inside the engine.
            for mode in [Mode::Cohomology, Mode::KTheory] {
                play_all_games_checked(a, b, n, mode, true).map_err(|e| format!("{ctx}: {e}"))?;
            }
        }
    }
    Ok(())
}

//! Command-line surface: argument parsing, JSON I/O and exit codes.

mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hive::{
    count_gt_patterns, count_lattice_hives, decompose_tensor_product, has_lattice_hive, weight, BoundaryTriple,
};
use crate::honeycomb::{diagram, overlay, prv_witness, reconstruct, Diagram, Honeycomb, HoneycombJson, SegmentJson};
use crate::lift::{find_nonintegral_vertex, largest_lift_seeded, search_space, DEFAULT_SEED};
use crate::oracles::{lr_for_triple, weyl_dim};

pub use svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;
pub const EXIT_MALFORMED: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "hivecomb", version, about = "Littlewood-Richardson coefficients through hives and honeycombs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Pair {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub lambda: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub mu: Vec<i64>,
}

#[derive(Debug, Args)]
pub struct Triple {
    #[command(flatten)]
    pub pair: Pair,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub nu: Vec<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of lattice hives with the given boundary.
    LrCount {
        #[command(flatten)]
        triple: Triple,
        /// Also run the tableaux oracle and fail on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Decomposition of the tensor product of two irreducibles.
    Decompose {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        json: bool,
    },
    /// Largest lift of a boundary triple, as a JSON report.
    Lift {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, env = "HIVECOMB_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Overlay of two honeycombs given as JSON files.
    Overlay {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Overlaid tripods witnessing `V_{wλ+vμ} ⊂ V_λ ⊗ V_μ`.
    Prv {
        #[command(flatten)]
        pair: Pair,
        /// Permutation as 0-based images.
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<usize>,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// SVG drawing of a honeycomb or diagram JSON file.
    Render {
        input: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
        /// Extra room around the vertices before rays are clipped.
        #[arg(long, default_value_t = 2.0)]
        margin: f64,
    },
    /// Checks `c(Nt) > 0 ⇔ c(t) > 0` over a grid or random samples.
    SaturateCheck {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
        /// Random samples instead of the exhaustive grid.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long = "N", value_delimiter = ',', default_value = "2")]
        scale: Vec<i64>,
        #[arg(long, env = "HIVECOMB_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Number of Gelfand-Cetlin patterns with top row `λ`.
    GtCount {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        /// Compare with the Weyl dimension formula.
        #[arg(long)]
        verify: bool,
    },
    /// Scans hive polytopes for a vertex with a nonintegral entry.
    FindNonintegralVertex {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Infeasible => EXIT_INFEASIBLE,
            Error::NotADiagram(_) => EXIT_MALFORMED,
            Error::ZeroSumViolation(_)
            | Error::NotDominant(_)
            | Error::LengthMismatch
            | Error::NonIntegralBoundary
            | Error::TypeDoesNotClose(_)
            | Error::DirectionViolation(_)
            | Error::TensionViolation
            | Error::Invalid(_) => EXIT_INVALID,
            _ => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

fn verify_failure(message: String) -> Failure {
    Failure { code: EXIT_VERIFY, message }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` and runs the command, writing results to `out`. Returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn check_len(name: &str, v: &[i64], n: usize) -> CliResult {
    if v.len() != n {
        return Err(invalid(format!("--{name} has {} entries, expected {n}", v.len())));
    }
    Ok(())
}

fn triple_of(t: &Triple) -> std::result::Result<BoundaryTriple, Failure> {
    let n = t.pair.n;
    check_len("lambda", &t.pair.lambda, n)?;
    check_len("mu", &t.pair.mu, n)?;
    check_len("nu", &t.nu, n)?;
    Ok(BoundaryTriple::from_ints(&t.pair.lambda, &t.pair.mu, &t.nu)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| invalid(format!("{}: {e}", p.display()))),
        None => writeln!(out, "{text}").map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() }),
    }
}

fn say(out: &mut dyn Write, text: impl AsRef<str>) -> CliResult {
    writeln!(out, "{}", text.as_ref()).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn read_honeycomb(path: &Path) -> std::result::Result<Honeycomb, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let j: HoneycombJson =
        serde_json::from_str(&text).map_err(|e| invalid(format!("{}: malformed honeycomb JSON: {e}", path.display())))?;
    Ok(Honeycomb::from_json(&j)?)
}

/// A honeycomb file or a diagram file, as a diagram.
fn read_diagram(path: &Path) -> std::result::Result<Diagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    if let Ok(j) = serde_json::from_str::<HoneycombJson>(&text) {
        return Ok(diagram(&Honeycomb::from_json(&j)?));
    }
    let segs: Vec<SegmentJson> =
        serde_json::from_str(&text).map_err(|e| invalid(format!("{}: malformed JSON: {e}", path.display())))?;
    let d = Diagram::from_json(&segs)?;
    // Only honeycomb diagrams are drawn.
    reconstruct(&d)?;
    Ok(d)
}

fn sigma_label(s: &[i64]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn execute(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::LrCount { triple, verify } => {
            let t = triple_of(&triple)?;
            let c = match count_lattice_hives(&t) {
                Err(e @ Error::ZeroSumViolation(_)) => {
                    // The coefficient is zero, but the input is still rejected.
                    say(out, "0")?;
                    return Err(e.into());
                }
                r => r?,
            };
            if verify {
                let o = lr_for_triple(&triple.pair.lambda, &triple.pair.mu, &triple.nu)?;
                if o != c {
                    return Err(verify_failure(format!("hives give {c}, tableaux give {o}")));
                }
            }
            say(out, c.to_string())
        }
        Command::Decompose { pair, json } => {
            check_len("lambda", &pair.lambda, pair.n)?;
            check_len("mu", &pair.mu, pair.n)?;
            let d = decompose_tensor_product(&pair.lambda, &pair.mu)?;
            if json {
                let m: serde_json::Map<String, serde_json::Value> =
                    d.iter().map(|(s, c)| (sigma_label(s), serde_json::Value::from(*c))).collect();
                say(out, to_json(&m))
            } else {
                for (s, c) in &d {
                    say(out, format!("{}: {c}", sigma_label(s)))?;
                }
                Ok(())
            }
        }
        Command::Lift { triple, seed } => {
            let t = triple_of(&triple)?;
            let report = largest_lift_seeded(&t, seed)?;
            say(out, to_json(&report.to_json()))
        }
        Command::Overlay { a, b, out: path } => {
            let h = overlay(&read_honeycomb(&a)?, &read_honeycomb(&b)?)?;
            // The result must survive its own roundtrip.
            reconstruct(&diagram(&h))?;
            emit(out, path.as_deref(), &to_json(&h.to_json()))
        }
        Command::Prv { pair, w, v, out: path } => {
            check_len("lambda", &pair.lambda, pair.n)?;
            check_len("mu", &pair.mu, pair.n)?;
            let h = prv_witness(&weight(&pair.lambda), &weight(&pair.mu), &w, &v)?;
            emit(out, path.as_deref(), &to_json(&h.to_json()))
        }
        Command::Render { input, out: path, margin } => {
            let d = read_diagram(&input)?;
            emit(out, path.as_deref(), &render_svg(&d, margin))
        }
        Command::SaturateCheck { n, max_entry, samples, scale, seed } => {
            if n == 0 || max_entry < 0 || scale.iter().any(|&s| s < 1) {
                return Err(invalid("need n ≥ 1, --max-entry ≥ 0 and --N ≥ 1"));
            }
            let triples = match samples {
                None => search_space(n, max_entry),
                Some(k) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..k).map(|_| random_triple(&mut rng, n, max_entry)).collect()
                }
            };
            let mut checked = 0usize;
            for t in &triples {
                let base = has_lattice_hive(t)?;
                for &s in &scale {
                    if has_lattice_hive(&t.scaled(s))? != base {
                        let [l, m, nu] = t.to_ints().expect("integral");
                        return Err(verify_failure(format!("saturation fails at N={s} for {l:?} {m:?} {nu:?}")));
                    }
                    checked += 1;
                }
            }
            say(out, format!("pass: {} triples, {checked} checks", triples.len()))
        }
        Command::GtCount { n, lambda, verify } => {
            check_len("lambda", &lambda, n)?;
            let c = count_gt_patterns(&lambda)?;
            if verify && weyl_dim(&lambda) != c {
                return Err(verify_failure(format!("{c} patterns, Weyl dimension {}", weyl_dim(&lambda))));
            }
            say(out, c.to_string())
        }
        Command::FindNonintegralVertex { n, max_entry } => {
            if !(1..=5).contains(&n) {
                return Err(invalid("the search is limited to n ≤ 5"));
            }
            let (found, scanned) = find_nonintegral_vertex(n, max_entry)?;
            let report = match found {
                Some(w) => {
                    let [l, m, nu] = w.triple.to_ints().expect("integral");
                    serde_json::json!({
                        "scanned": scanned,
                        "lambda": l, "mu": m, "nu": nu,
                        "vertex": w.vertex.to_json(),
                        "defect": w.defect,
                    })
                }
                None => serde_json::json!({ "scanned": scanned, "vertex": null }),
            };
            say(out, to_json(&report))
        }
    }
}

/// Random dominant zero-sum integral triple with `λ, μ` in `[0, max]`.
fn random_triple<R: Rng>(rng: &mut R, n: usize, max: i64) -> BoundaryTriple {
    let dominant = |rng: &mut R, lo: i64, hi: i64| {
        let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    };
    let l = dominant(rng, 0, max);
    let m = dominant(rng, 0, max);
    let total: i64 = l.iter().chain(&m).sum();
    loop {
        let mut s = dominant(rng, 0, 2 * max);
        // Move single units until the sum matches, keeping the order.
        let mut diff = total - s.iter().sum::<i64>();
        let mut idx: Vec<usize> = (0..n).collect();
        while diff != 0 {
            idx.shuffle(rng);
            let step = diff.signum();
            let Some(&i) = idx.iter().find(|&&i| {
                let c = s[i] + step;
                (0..=2 * max).contains(&c) && (i == 0 || c <= s[i - 1]) && (i == n - 1 || c >= s[i + 1])
            }) else {
                break;
            };
            s[i] += step;
            diff -= step;
        }
        if diff == 0 {
            let nu: Vec<i64> = s.iter().rev().map(|x| -x).collect();
            return BoundaryTriple::from_ints(&l, &m, &nu).expect("zero sum");
        }
    }
}

/// Reads a honeycomb JSON string.
pub fn parse_honeycomb(text: &str) -> Result<Honeycomb> {
    let j: HoneycombJson = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
    Honeycomb::from_json(&j)
}

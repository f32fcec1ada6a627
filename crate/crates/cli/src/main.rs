//! `fewcol`: construct extremal colourings, evaluate them, run the
//! guarantee algorithms, check hypergraphs and query the exact oracle.
//!
//! Exit codes: 0 success, 1 domain error (precondition or guard), 2 I/O or
//! parse error.

mod formats;
mod manifest;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use fewcol::report::ValKind;
use fewcol::{construct, evaluate, guarantee, hypergraph, oracle, EdgeColouring, Hypergraph};
use formats::{ColouringFile, HypergraphFile, RecordFile, ReportFile};

#[derive(Debug)]
enum AppError {
    /// Precondition, guard or invalid-object failures: exit 1.
    Domain(String),
    /// File system and JSON parse failures: exit 2.
    Io(String),
}

impl From<formats::FormatError> for AppError {
    fn from(e: formats::FormatError) -> Self {
        match e {
            formats::FormatError::Parse(m) => AppError::Io(format!("parse error: {m}")),
            formats::FormatError::Domain(m) => AppError::Domain(m),
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> AppError {
    AppError::Domain(e.to_string())
}

#[derive(Parser)]
#[command(name = "fewcol", version, about = "Few-colour connectivity toolkit for edge-coloured complete graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate colourings and certificate hypergraphs.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Evaluate a colouring: val_f, val_g or the k-connected variant.
    Eval {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value = "f")]
        kind: String,
    },
    /// Constructive lower-bound algorithms with verified witnesses.
    Guarantee {
        #[command(subcommand)]
        what: GuaranteeCmd,
    },
    /// Hypergraph checks, cover numbers, subset minima and samplers.
    Hyper {
        #[command(subcommand)]
        what: HyperCmd,
    },
    /// Exact f/g values by exhaustive search; census mode emits CSV.
    Oracle {
        #[arg(long)]
        census: bool,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_r: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Cube colouring on 2^d parts blown up to n vertices (r = 2^d - 1).
    Cube {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Projective plane of prime order p as a hypergraph.
    Plane {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Colouring of K_n from an intersecting hypergraph file.
    Hyper {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Complete u-uniform hypergraph on r vertices.
    Complete {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Named certificate hypergraph (g519, fano_minus_vertex, g6210, fano).
    Catalogue {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Blow-up of a rejection-sampled random base colouring.
    RandomBase {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GuaranteeCmd {
    /// Touched-vertex bound from a colour-degree threshold d.
    LowerG {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected witness by greedy colour augmentation.
    Augment {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-connected witness by iterated contraction.
    Contract {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value = "1")]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum HyperCmd {
    /// Is the hypergraph intersecting?
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact cover number.
    Cover {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Minimum edges inside any m-subset, with an attaining subset.
    Subsets {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: u32,
    },
    /// Sample m uniform u-subsets and check both target properties.
    SampleUniform {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        u: Option<u32>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Bernoulli exclusion sampler (always intersecting).
    SampleExclusion {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        x: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Double-counting lower bound C(r,s)/C(r-u,s) on the edge count.
    Bound {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        u: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let subcommand = args.first().cloned().unwrap_or_default();
    let seed = seed_of(&cli.command);
    match run(cli.command) {
        Ok(output) => {
            manifest::append(&manifest::ManifestLine {
                subcommand,
                args,
                seed,
                version: env!("CARGO_PKG_VERSION"),
                output_sha256: Some(manifest::sha256_hex(&output)),
            });
            ExitCode::SUCCESS
        }
        Err(AppError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(AppError::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn seed_of(cmd: &Command) -> Option<u64> {
    match cmd {
        Command::Construct { what: ConstructCmd::RandomBase { seed, .. } } => Some(*seed),
        Command::Hyper { what: HyperCmd::SampleUniform { seed, .. } } => Some(*seed),
        Command::Hyper { what: HyperCmd::SampleExclusion { seed, .. } } => Some(*seed),
        _ => None,
    }
}

fn read_file(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), AppError> {
    std::fs::write(path, contents)
        .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))
}

fn load_colouring(path: &Path) -> Result<EdgeColouring, AppError> {
    let text = read_file(path)?;
    let file: ColouringFile = formats::from_json(&text)?;
    Ok(file.try_into()?)
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, AppError> {
    let text = read_file(path)?;
    let file: HypergraphFile = formats::from_json(&text)?;
    Ok(file.try_into()?)
}

/// Writes to `out` when given, always echoes to stdout, and returns the
/// text that was hashed for the manifest.
fn emit(out: Option<&Path>, text: &str) -> Result<String, AppError> {
    if let Some(path) = out {
        write_file(path, text)?;
    }
    println!("{text}");
    Ok(text.to_owned())
}

fn run(cmd: Command) -> Result<String, AppError> {
    match cmd {
        Command::Construct { what } => run_construct(what),
        Command::Eval { colouring, s, k, kind } => run_eval(&colouring, s, k, &kind),
        Command::Guarantee { what } => run_guarantee(what),
        Command::Hyper { what } => run_hyper(what),
        Command::Oracle { census, n, r, s, kind, max_n, max_r, out } => {
            run_oracle(census, n, r, s, kind, max_n, max_r, out)
        }
    }
}

fn run_construct(cmd: ConstructCmd) -> Result<String, AppError> {
    match cmd {
        ConstructCmd::Cube { d, n, out } => {
            let c = construct::cube_colouring(d, n).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&ColouringFile::from(&c)))
        }
        ConstructCmd::Plane { p, out } => {
            let h = construct::projective_plane_hypergraph(p).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&HypergraphFile::from(&h)))
        }
        ConstructCmd::Hyper { input, n, out } => {
            let h = load_hypergraph(&input)?;
            let c = construct::hypergraph_colouring(&h, n).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&ColouringFile::from(&c)))
        }
        ConstructCmd::Complete { r, u, out } => {
            let h = construct::complete_uniform_hypergraph(r, u).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&HypergraphFile::from(&h)))
        }
        ConstructCmd::Catalogue { name, out } => {
            let h = construct::certificate_catalogue(&name).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&HypergraphFile::from(&h)))
        }
        ConstructCmd::RandomBase { r, s, n, seed, out } => {
            let c = construct::random_base_blowup(r, s, n, seed).map_err(domain)?;
            emit(Some(&out), &formats::to_json(&ColouringFile::from(&c)))
        }
    }
}

fn run_eval(colouring: &Path, s: u32, k: Option<u32>, kind: &str) -> Result<String, AppError> {
    let c = load_colouring(colouring)?;
    let kind = formats::parse_kind(kind)?;
    let output = match (kind, k) {
        (ValKind::F, Some(k)) => {
            let eval = evaluate::val_f_k(&c, s, k).map_err(domain)?;
            json!({
                "value": eval.value,
                "argmax_colours": eval.colours.iter().collect::<Vec<u32>>(),
                "witness": eval.witness,
                "exact": eval.exact,
            })
        }
        (ValKind::F, None) => {
            let eval = evaluate::val_f_detailed(&c, s).map_err(domain)?;
            json!({
                "value": eval.value,
                "argmax_colours": eval.colours.iter().collect::<Vec<u32>>(),
                "witness": eval.witness,
            })
        }
        (ValKind::G, None) => {
            let eval = evaluate::val_g_detailed(&c, s).map_err(domain)?;
            json!({
                "value": eval.value,
                "argmax_colours": eval.colours.iter().collect::<Vec<u32>>(),
                "witness": eval.witness,
            })
        }
        (ValKind::G, Some(_)) => {
            return Err(AppError::Domain("--k applies to kind f only".into()));
        }
    };
    emit(None, &serde_json::to_string_pretty(&output).expect("json"))
}

fn run_guarantee(cmd: GuaranteeCmd) -> Result<String, AppError> {
    let (rep, out) = match cmd {
        GuaranteeCmd::LowerG { colouring, s, d, out } => {
            let c = load_colouring(&colouring)?;
            (guarantee::best_colour_set_d(&c, s, d).map_err(domain)?, out)
        }
        GuaranteeCmd::Augment { colouring, s, out } => {
            let c = load_colouring(&colouring)?;
            (guarantee::greedy_augment(&c, s).map_err(domain)?, out)
        }
        GuaranteeCmd::Contract { colouring, s, k, out } => {
            let c = load_colouring(&colouring)?;
            (guarantee::iterated_contraction(&c, s, k).map_err(domain)?, out)
        }
    };
    emit(out.as_deref(), &formats::to_json(&ReportFile::from(&rep)))
}

fn run_hyper(cmd: HyperCmd) -> Result<String, AppError> {
    match cmd {
        HyperCmd::Check { input } => {
            let h = load_hypergraph(&input)?;
            let output = match h.is_intersecting() {
                Ok(()) => json!({"intersecting": true}),
                Err((i, j)) => json!({"intersecting": false, "witness": [i, j]}),
            };
            emit(None, &serde_json::to_string_pretty(&output).expect("json"))
        }
        HyperCmd::Cover { input } => {
            let h = load_hypergraph(&input)?;
            let cover = h.cover_number().map_err(domain)?;
            emit(None, &serde_json::to_string_pretty(&json!({"cover_number": cover})).expect("json"))
        }
        HyperCmd::Subsets { input, m } => {
            let h = load_hypergraph(&input)?;
            let (t, w) = h.min_edges_in_subsets(m).map_err(domain)?;
            let subset: Vec<u32> = fewcol::bits::iter_bits(w).collect();
            emit(None, &serde_json::to_string_pretty(&json!({"t": t, "subset": subset})).expect("json"))
        }
        HyperCmd::SampleUniform { r, s, seed, u, m, out } => {
            let outcome =
                hypergraph::uniform_intersecting_sample(r, s, seed, u, m).map_err(domain)?;
            if let Some(path) = &out {
                write_file(path, &formats::to_json(&HypergraphFile::from(&outcome.hypergraph)))?;
            }
            let output = json!({
                "uniformity": outcome.uniformity,
                "edge_target": outcome.edge_target,
                "edges": outcome.hypergraph.edge_count(),
                "intersecting": outcome.intersecting,
                "disjoint_witness": outcome.disjoint_witness,
                "covers_exceed_s": outcome.covers_exceed_s,
                "success": outcome.success,
            });
            emit(None, &serde_json::to_string_pretty(&output).expect("json"))
        }
        HyperCmd::SampleExclusion { r, x, seed, out } => {
            let h = hypergraph::exclusion_sample(r, x, seed).map_err(domain)?;
            emit(out.as_deref(), &formats::to_json(&HypergraphFile::from(&h)))
        }
        HyperCmd::Bound { r, s, u } => {
            let bound = hypergraph::double_count_lower_bound(r, s, u).map_err(domain)?;
            let output = json!({"bound": {"num": bound.numer(), "den": bound.denom()}});
            emit(None, &serde_json::to_string_pretty(&output).expect("json"))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_oracle(
    census: bool,
    n: Option<u32>,
    r: Option<u32>,
    s: Option<u32>,
    kind: Option<String>,
    max_n: Option<u32>,
    max_r: Option<u32>,
    out: Option<PathBuf>,
) -> Result<String, AppError> {
    if census {
        let (max_n, max_r) = match (max_n, max_r) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(AppError::Domain("census mode needs --max-n and --max-r".into())),
        };
        let mut csv = String::from("n,r,s,kind,value\n");
        for n in 2..=max_n {
            for r in 1..=max_r {
                for s in 1..=r {
                    for kind in [ValKind::F, ValKind::G] {
                        match oracle::exact_value(n, r, s, kind) {
                            Ok(rec) => {
                                csv.push_str(&format!("{n},{r},{s},{kind},{}\n", rec.value));
                            }
                            Err(oracle::OracleError::Budget { .. }) => {}
                            Err(e) => return Err(domain(e)),
                        }
                    }
                }
            }
        }
        return emit(out.as_deref(), &csv);
    }
    let (n, r, s) = match (n, r, s) {
        (Some(n), Some(r), Some(s)) => (n, r, s),
        _ => return Err(AppError::Domain("need --n, --r and --s (or --census)".into())),
    };
    let kind = formats::parse_kind(kind.as_deref().unwrap_or("f"))?;
    let rec = oracle::exact_value(n, r, s, kind).map_err(domain)?;
    emit(out.as_deref(), &formats::to_json(&RecordFile::from(&rec)))
}

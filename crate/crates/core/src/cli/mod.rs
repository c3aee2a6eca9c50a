//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a requested check fails, 2 on usage
//! errors and unreadable or invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::{self, compare_report, RunRecord};
use crate::constructions::{build_is_lattice, build_kms_columns, build_perp_lines_3d, LatticeMode, LatticeSpec};
use crate::counting::{
    alpha_lines, count_embeddings, count_homomorphisms, distinct_dot_products, distinct_weight_tuples,
    hyperplane_descent, incidences, max_pinned, pair_multiplicity, pinned_set, pinned_sizes, proof_multigraph,
    radial_histogram, CountOptions, SpillConfig, TupleOptions,
};
use crate::geometry::{read_point_set, write_point_set};
use crate::report::CountReport;
use crate::sampling::{integer_grid, random_integer_set};
use crate::tree::{bipartition, parse_builtin};
use crate::{verify, Error, Point, PointSet, Result, Scalar, Tree, WeightVector, WeightedTree};

#[derive(Debug, Parser)]
#[command(
    name = "dot-trees",
    version,
    about = "Construct, count, and verify dot-product-weighted trees in point sets"
)]
pub struct Cli {
    /// Worker threads for the counting kernels (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Seed for randomized generators
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    /// Count zero dot products as ordinary values
    #[arg(long, global = true)]
    include_zero: bool,
    /// Also write the report as JSON to this path
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record elapsed wall time in reports
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated point set (and a JSON sidecar)
    Generate(GenerateArgs),
    /// Count labeled copies of a weighted tree
    Count(CountArgs),
    /// Distinct dot products, or distinct weight tuples of a tree
    Distinct(DistinctArgs),
    /// Pinned dot-product sets, the best pin, or the hyperplane descent
    Pinned(PinnedArgs),
    /// Incidences between points and the alpha-lines of a set of pins
    Incidence(IncidenceArgs),
    /// Histogram of points by radial line
    Radial(RadialArgs),
    /// Statistics of the alpha-line crossing multigraph
    Proofgraph(ProofgraphArgs),
    /// Run the self-contained acceptance checks
    Verify,
    /// Compare measured counts against an exponent formula
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Kms,
    PerpLines,
    Lattice,
    Grid,
    Random,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// which point set to build
    #[arg(long, value_enum)]
    construction: Construction,
    /// builtin:path:K, builtin:star:K, builtin:binary:H, or a .tree file
    #[arg(long)]
    tree: Option<String>,
    /// number of points (kms, perp-lines, random)
    #[arg(long)]
    n: Option<usize>,
    /// dimension (lattice, grid, random)
    #[arg(long)]
    d: Option<usize>,
    /// lattice parameter
    #[arg(long)]
    q: Option<u64>,
    /// paper or calibrated
    #[arg(long, default_value = "calibrated")]
    mode: LatticeMode,
    /// grid side length
    #[arg(long)]
    side: Option<usize>,
    /// first grid coordinate
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    start: i64,
    /// random sets draw coordinates from [-W, W]
    #[arg(long, default_value_t = 16)]
    half_width: i64,
    /// .pts file to write
    #[arg(short, long)]
    output: PathBuf,
    /// sidecar path (default: output with a .json extension)
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CountArgs {
    /// builtin:path:K, builtin:star:K, builtin:binary:H, or a .tree file
    #[arg(long)]
    tree: String,
    /// comma-separated weights in canonical edge order
    #[arg(long)]
    weights: Option<String>,
    /// .pts file to count in
    #[arg(long)]
    points: PathBuf,
    /// also count not necessarily injective maps
    #[arg(long)]
    homomorphisms: bool,
}

#[derive(Debug, Args)]
struct DistinctArgs {
    /// .pts input
    #[arg(long)]
    points: PathBuf,
    /// count distinct weight tuples of this tree instead of dot products
    #[arg(long)]
    tree: Option<String>,
    /// print every tuple
    #[arg(long)]
    list: bool,
    /// spill sorted runs of this many tuples to disk
    #[arg(long, value_name = "TUPLES")]
    spill: Option<usize>,
}

#[derive(Debug, Args)]
struct PinnedArgs {
    /// .pts input
    #[arg(long)]
    points: PathBuf,
    /// pin as comma-separated coordinates
    #[arg(long, allow_hyphen_values = true)]
    pin: Option<String>,
    /// run the hyperplane descent (dimension >= 3)
    #[arg(long)]
    descent: bool,
}

#[derive(Debug, Args)]
struct IncidenceArgs {
    /// .pts input
    #[arg(long)]
    points: PathBuf,
    /// pins whose alpha-lines are used
    #[arg(long)]
    pins: PathBuf,
    /// the value alpha of every line
    #[arg(long, allow_hyphen_values = true)]
    alpha: Scalar,
}

#[derive(Debug, Args)]
struct RadialArgs {
    /// .pts input
    #[arg(long)]
    points: PathBuf,
    /// constant C in max <= C n^(2/3)
    #[arg(long, default_value = "1")]
    c: Scalar,
    /// exit 1 when the check fails
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct ProofgraphArgs {
    /// the pin set E
    #[arg(long)]
    points: PathBuf,
    /// the set F (default: E)
    #[arg(long)]
    dual: Option<PathBuf>,
    /// exit 1 when the crossing bound fails
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Experiment {
    Kms,
    PerpLines,
    Lattice,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// experiment to run; omit when using --input
    #[arg(long, value_enum)]
    experiment: Option<Experiment>,
    /// tree for the kms and perp-lines experiments
    #[arg(long)]
    tree: Option<String>,
    /// comma-separated sizes
    #[arg(long)]
    n: Option<String>,
    /// comma-separated lattice parameters
    #[arg(long)]
    q: Option<String>,
    /// lattice dimension
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// JSON array of run records
    #[arg(long)]
    input: Option<PathBuf>,
    /// exponent to compare against (default: the experiment's formula)
    #[arg(long)]
    exponent: Option<Scalar>,
    /// threshold constant c
    #[arg(long, default_value = "1/8")]
    c: Scalar,
}

/// Result of a successful command.
enum Outcome {
    Ok,
    CheckFailed,
}

struct Context<'a> {
    opts: CountOptions,
    json: Option<PathBuf>,
    timing: bool,
    seed: Option<u64>,
    started: Instant,
    out: &'a mut Vec<u8>,
}

impl Context<'_> {
    fn emit(&mut self, mut report: CountReport) -> Result<()> {
        if self.timing {
            report.elapsed_ms = Some(self.started.elapsed().as_millis() as u64);
        }
        write!(self.out, "{}", report.to_text())?;
        if let Some(path) = &self.json {
            std::fs::write(path, report.to_json())?;
        }
        Ok(())
    }

    fn write_json<T: Serialize>(&self, value: &T) -> Result<()> {
        if let Some(path) = &self.json {
            let mut text = serde_json::to_string_pretty(value)?;
            text.push('\n');
            std::fs::write(path, text)?;
        }
        Ok(())
    }
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut buffer: Vec<u8> = Vec::new();
    let result = match cli.threads {
        Some(0) => Err(Error::param("--threads must be positive")),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::param(format!("cannot build thread pool: {e}")))
            .and_then(|pool| pool.install(|| dispatch(&cli, &mut buffer))),
        None => dispatch(&cli, &mut buffer),
    };
    let result = result.and_then(|outcome| {
        out.write_all(&buffer)?;
        out.flush()?;
        Ok(outcome)
    });
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::CheckFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<Outcome> {
    let mut ctx = Context {
        opts: CountOptions {
            include_zero: cli.include_zero,
        },
        json: cli.json.clone(),
        timing: cli.timing,
        seed: cli.seed,
        started: Instant::now(),
        out,
    };
    let outcome = match &cli.command {
        Command::Generate(a) => generate(&mut ctx, a)?,
        Command::Count(a) => count(&mut ctx, a)?,
        Command::Distinct(a) => distinct(&mut ctx, a)?,
        Command::Pinned(a) => pinned(&mut ctx, a)?,
        Command::Incidence(a) => incidence(&mut ctx, a)?,
        Command::Radial(a) => radial(&mut ctx, a)?,
        Command::Proofgraph(a) => proofgraph(&mut ctx, a)?,
        Command::Verify => run_verify(&mut ctx)?,
        Command::Report(a) => report(&mut ctx, a)?,
    };
    Ok(outcome)
}

fn required<T: Clone>(value: &Option<T>, flag: &str, what: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::param(format!("{what} requires --{flag}")))
}

fn load_points(path: &Path) -> Result<PointSet> {
    let file = File::open(path).map_err(|e| Error::param(format!("cannot open {}: {e}", path.display())))?;
    read_point_set(BufReader::new(file))
}

fn save_points(set: &PointSet, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_point_set(set, &mut w)?;
    w.flush()?;
    Ok(())
}

fn parse_point(text: &str) -> Result<Point> {
    let coords = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Scalar>()
                .map_err(|e| Error::param(format!("invalid pin `{text}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::new(coords))
}

fn parse_list<T: std::str::FromStr>(text: &str, flag: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::param(format!("invalid value `{s}` in --{flag}")))
        })
        .collect()
}

fn weighted_tree(spec: &str, weights: Option<&str>) -> Result<WeightedTree> {
    let (tree, file_weights) = parse_builtin(spec)?;
    let weights = match weights {
        Some(text) => WeightVector::parse_list(text)?,
        None => {
            file_weights.ok_or_else(|| Error::param("weights are required: pass --weights or a weighted .tree file"))?
        }
    };
    WeightedTree::new(tree, weights)
}

fn sidecar_path(output: &Path, explicit: &Option<PathBuf>) -> PathBuf {
    explicit.clone().unwrap_or_else(|| output.with_extension("json"))
}

#[derive(Serialize)]
struct SimpleSidecar<'a> {
    construction: &'a str,
    points_digest: String,
    num_points: usize,
    dim: usize,
    parameters: BTreeMap<&'a str, serde_json::Value>,
}

#[derive(Serialize)]
struct LatticeSidecar<'a> {
    construction: &'a str,
    spec: LatticeSpec,
    e_path: String,
    f_path: String,
    e_digest: String,
    f_digest: String,
    a: &'a [Scalar],
    b: &'a [Scalar],
    e_last: &'a [Scalar],
    window_start: Option<u64>,
    unit_pairs: usize,
    populated_hyperplanes: usize,
    identity_checks: usize,
}

fn write_pretty<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn generate(ctx: &mut Context<'_>, a: &GenerateArgs) -> Result<Outcome> {
    let sidecar = sidecar_path(&a.output, &a.sidecar);
    match a.construction {
        Construction::Kms | Construction::PerpLines => {
            let spec = required(&a.tree, "tree", "this construction")?;
            let n = required(&a.n, "n", "this construction")?;
            let (tree, _) = parse_builtin(&spec)?;
            let built = if a.construction == Construction::Kms {
                build_kms_columns(&tree, n)?
            } else {
                build_perp_lines_3d(&tree, n)?
            };
            save_points(&built.points, &a.output)?;
            let mut w = BufWriter::new(File::create(&sidecar)?);
            built.write_sidecar(&mut w)?;
            w.flush()?;
            let weights: Vec<String> = built.weights.weights().iter().map(ToString::to_string).collect();
            let report = CountReport::new("generate", built.points.digest())
                .param("construction", &built.metadata.name)
                .param("tree", spec)
                .param("n", n)
                .count("points", built.points.len())
                .count("weights", weights.join(","))
                .count("predicted_count", built.predicted_count.to_string());
            ctx.emit(report)?;
        }
        Construction::Lattice => {
            let q = required(&a.q, "q", "the lattice construction")?;
            let spec = LatticeSpec {
                d: a.d.unwrap_or(2),
                q,
                mode: a.mode,
            };
            let l = build_is_lattice(spec)?;
            let f_path = a.output.with_extension("dual.pts");
            save_points(&l.e, &a.output)?;
            save_points(&l.f, &f_path)?;
            write_pretty(
                &sidecar,
                &LatticeSidecar {
                    construction: "lattice",
                    spec,
                    e_path: a.output.display().to_string(),
                    f_path: f_path.display().to_string(),
                    e_digest: l.e.digest(),
                    f_digest: l.f.digest(),
                    a: &l.a,
                    b: &l.b,
                    e_last: &l.e_last,
                    window_start: l.window_start,
                    unit_pairs: l.unit_pairs,
                    populated_hyperplanes: l.populated_hyperplanes(),
                    identity_checks: l.identity_checks,
                },
            )?;
            let report = CountReport::new("generate", l.e.digest())
                .param("construction", "lattice")
                .param("spec", spec)
                .count("points", l.e.len())
                .count("dual_points", l.f.len())
                .count("unit_pairs", l.unit_pairs)
                .count("populated_hyperplanes", l.populated_hyperplanes())
                .count("identity_checks", l.identity_checks);
            ctx.emit(report)?;
        }
        Construction::Grid | Construction::Random => {
            let d = a.d.unwrap_or(2);
            let mut params = BTreeMap::new();
            params.insert("d", serde_json::json!(d));
            let (name, set) = if a.construction == Construction::Grid {
                let side = required(&a.side, "side", "the grid generator")?;
                params.insert("side", serde_json::json!(side));
                params.insert("start", serde_json::json!(a.start));
                ("grid", integer_grid(d, side, a.start)?)
            } else {
                let n = required(&a.n, "n", "the random generator")?;
                let seed = required(&ctx.seed, "seed", "the random generator")?;
                params.insert("n", serde_json::json!(n));
                params.insert("seed", serde_json::json!(seed));
                params.insert("half_width", serde_json::json!(a.half_width));
                params.insert("rng", serde_json::json!("ChaCha8Rng::seed_from_u64"));
                ("random", random_integer_set(d, n, a.half_width, seed)?)
            };
            save_points(&set, &a.output)?;
            write_pretty(
                &sidecar,
                &SimpleSidecar {
                    construction: name,
                    points_digest: set.digest(),
                    num_points: set.len(),
                    dim: set.dim(),
                    parameters: params,
                },
            )?;
            let report = CountReport::new("generate", set.digest())
                .param("construction", name)
                .count("points", set.len());
            ctx.emit(report)?;
        }
    }
    Ok(Outcome::Ok)
}

fn count(ctx: &mut Context<'_>, a: &CountArgs) -> Result<Outcome> {
    let wt = weighted_tree(&a.tree, a.weights.as_deref())?;
    let points = load_points(&a.points)?;
    let embeddings = count_embeddings(&wt, &points, &ctx.opts)?;
    writeln!(ctx.out, "{embeddings}")?;
    let weights: Vec<String> = wt.weights().weights().iter().map(ToString::to_string).collect();
    let mut report = CountReport::new("count", points.digest())
        .param("tree", &a.tree)
        .param("weights", weights.join(","))
        .param("include_zero", ctx.opts.include_zero)
        .count("embeddings", embeddings.to_string());
    if a.homomorphisms {
        let homs = count_homomorphisms(&wt, &points, &ctx.opts)?;
        writeln!(ctx.out, "homomorphisms {homs}")?;
        report = report.count("homomorphisms", homs.to_string());
    }
    if let Some(path) = &ctx.json {
        std::fs::write(path, with_timing(report, ctx).to_json())?;
    }
    Ok(Outcome::Ok)
}

fn with_timing(mut report: CountReport, ctx: &Context<'_>) -> CountReport {
    if ctx.timing {
        report.elapsed_ms = Some(ctx.started.elapsed().as_millis() as u64);
    }
    report
}

fn distinct(ctx: &mut Context<'_>, a: &DistinctArgs) -> Result<Outcome> {
    let points = load_points(&a.points)?;
    match &a.tree {
        Some(spec) => {
            let (tree, _) = parse_builtin(spec)?;
            let opts = TupleOptions {
                include_zero: ctx.opts.include_zero,
                keep_tuples: a.list && a.spill.is_none(),
                spill: a.spill.map(|max_in_memory| SpillConfig {
                    max_in_memory,
                    dir: None,
                }),
            };
            let result = distinct_weight_tuples(&tree, &points, &opts)?;
            if let Some(tuples) = &result.tuples {
                for t in tuples {
                    let cells: Vec<String> = t.iter().map(ToString::to_string).collect();
                    writeln!(ctx.out, "({})", cells.join(", "))?;
                }
            }
            let report = CountReport::new("distinct_weight_tuples", points.digest())
                .param("tree", spec)
                .param("include_zero", ctx.opts.include_zero)
                .count("distinct_tuples", result.count);
            ctx.emit(report)?;
        }
        None => {
            let stats = distinct_dot_products(&points, &ctx.opts);
            let report = CountReport::new("distinct_dot_products", points.digest())
                .param("include_zero", ctx.opts.include_zero)
                .count("distinct", stats.distinct)
                .count("max_multiplicity", stats.max_multiplicity)
                .count("most_common", stats.most_common.as_ref().map(ToString::to_string))
                .count("zero_pairs", stats.zero_pairs);
            ctx.emit(report)?;
        }
    }
    Ok(Outcome::Ok)
}

fn pinned(ctx: &mut Context<'_>, a: &PinnedArgs) -> Result<Outcome> {
    let points = load_points(&a.points)?;
    if a.descent {
        let trace = hyperplane_descent(&points)?;
        let mut rows = vec![vec![
            "level".to_string(),
            "pin".to_string(),
            "t".to_string(),
            "alpha".to_string(),
            "before".to_string(),
            "remaining".to_string(),
        ]];
        for (i, l) in trace.levels.iter().enumerate() {
            rows.push(vec![
                (i + 1).to_string(),
                l.pin.to_string(),
                l.t.to_string(),
                l.alpha.to_string(),
                l.before.to_string(),
                l.remaining.to_string(),
            ]);
        }
        write!(ctx.out, "{}", crate::report::render_table(&rows))?;
        let report = CountReport::new("hyperplane_descent", points.digest())
            .count("levels", trace.levels.len())
            .count("final_points", trace.final_points.len())
            .count("final_affine_dim", trace.final_affine_dim)
            .count("planar_pinned", trace.planar_pinned)
            .count("final_count", trace.final_count)
            .count("pigeonhole_floor", trace.pigeonhole_floor().to_string());
        ctx.emit(report)?;
        return Ok(Outcome::Ok);
    }
    match &a.pin {
        Some(text) => {
            let pin = parse_point(text)?;
            let set = pinned_set(&pin, &points, &ctx.opts)?;
            let values: Vec<String> = set.iter().map(ToString::to_string).collect();
            writeln!(ctx.out, "{{{}}}", values.join(", "))?;
            let report = CountReport::new("pinned_set", points.digest())
                .param("pin", pin.to_string())
                .param("include_zero", ctx.opts.include_zero)
                .count("size", set.len());
            ctx.emit(report)?;
        }
        None => {
            let best = max_pinned(&points, &ctx.opts)?;
            let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
            for s in pinned_sizes(&points, &ctx.opts) {
                *hist.entry(s).or_default() += 1;
            }
            let report = CountReport::new("max_pinned", points.digest())
                .param("include_zero", ctx.opts.include_zero)
                .count("pin_index", best.index)
                .count("pin", best.point.to_string())
                .count("count", best.count)
                .histogram(
                    "pinned_set_size",
                    hist.into_iter().map(|(k, v)| (format!("{k:>8}"), v)).collect(),
                );
            ctx.emit(report)?;
        }
    }
    Ok(Outcome::Ok)
}

fn incidence(ctx: &mut Context<'_>, a: &IncidenceArgs) -> Result<Outcome> {
    let points = load_points(&a.points)?;
    let pins = load_points(&a.pins)?;
    let lines = alpha_lines(&pins, &a.alpha)?;
    let total = incidences(&points, &lines)?;
    let report = CountReport::new("incidences", points.digest())
        .param("pins", pins.digest())
        .param("alpha", a.alpha.to_string())
        .count("lines", lines.len())
        .count("incidences", total);
    ctx.emit(report)?;
    Ok(Outcome::Ok)
}

fn radial(ctx: &mut Context<'_>, a: &RadialArgs) -> Result<Outcome> {
    let points = load_points(&a.points)?;
    let h = radial_histogram(&points);
    let sparse = h.sparse_radial_lines(&a.c);
    let report = CountReport::new("radial_histogram", points.digest())
        .param("c", a.c.to_string())
        .count("points", h.total())
        .count("origin", h.origin_count)
        .count("lines", h.buckets.len())
        .count("max", h.max)
        .count("max_direction", h.max_direction.as_ref().map(ToString::to_string))
        .count("max_le_c_n^(2/3)", sparse)
        .histogram(
            "direction",
            h.buckets.iter().map(|(d, &c)| (d.to_string(), c)).collect(),
        );
    ctx.emit(report)?;
    Ok(if a.check && !sparse {
        Outcome::CheckFailed
    } else {
        Outcome::Ok
    })
}

fn proofgraph(ctx: &mut Context<'_>, a: &ProofgraphArgs) -> Result<Outcome> {
    let e = load_points(&a.points)?;
    let f = match &a.dual {
        Some(p) => load_points(p)?,
        None => e.clone(),
    };
    let g = proof_multigraph(&e, &f, &ctx.opts)?;
    let st = &g.stats;
    let within = st.crossings_within_bound();
    let report = CountReport::new("proof_multigraph", e.digest())
        .param("dual", f.digest())
        .count("v", st.v)
        .count("e", st.e)
        .count("m", st.m)
        .count("t = max pinned cardinality (per proof usage)", st.t)
        .count("drawing_crossings", st.drawing_crossings)
        .count("crossing_bound |E|^2 t^2", st.crossing_bound.to_string())
        .count("crossings_within_bound", within);
    ctx.emit(report)?;
    Ok(if a.check && !within {
        Outcome::CheckFailed
    } else {
        Outcome::Ok
    })
}

fn run_verify(ctx: &mut Context<'_>) -> Result<Outcome> {
    let report = verify::run_all()?;
    write!(ctx.out, "{}", report.render())?;
    ctx.write_json(&report)?;
    Ok(if report.pass() {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn kms_records(spec: &str, tree: &Tree, ns: &[usize], perp: bool) -> Result<Vec<RunRecord>> {
    ns.iter()
        .map(|&n| {
            let built = if perp {
                build_perp_lines_3d(tree, n)?
            } else {
                build_kms_columns(tree, n)?
            };
            let wt = WeightedTree::new(tree.clone(), built.weights.clone())?;
            let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
            Ok(RunRecord {
                experiment: if perp { "perp-lines" } else { "kms" }.to_string(),
                params: bounds::ReportParams {
                    k: Some(tree.num_edges() as u64),
                    d: Some(built.points.dim() as u64),
                    n: n as u64,
                    q: None,
                    tree: Some(spec.to_string()),
                },
                count: BigUint::from(count),
                predicted: Some(built.predicted_count),
            })
        })
        .collect()
}

fn report(ctx: &mut Context<'_>, a: &ReportArgs) -> Result<Outcome> {
    let (records, default_exponent) = match (a.experiment, &a.input) {
        (Some(_), Some(_)) => return Err(Error::param("pass either --experiment or --input, not both")),
        (None, None) => return Err(Error::param("report requires --experiment or --input")),
        (None, Some(path)) => {
            let file = File::open(path).map_err(|e| Error::param(format!("cannot open {}: {e}", path.display())))?;
            let records: Vec<RunRecord> = serde_json::from_reader(BufReader::new(file))?;
            (records, None)
        }
        (Some(exp @ (Experiment::Kms | Experiment::PerpLines)), None) => {
            let spec = required(&a.tree, "tree", "this experiment")?;
            let ns: Vec<usize> = parse_list(&required(&a.n, "n", "this experiment")?, "n")?;
            let (tree, _) = parse_builtin(&spec)?;
            let perp = exp == Experiment::PerpLines;
            let exponent = if perp {
                Scalar::from(tree.num_edges() + 1)
            } else {
                Scalar::from(bipartition(&tree).k1()).min(bounds::kms(tree.num_edges() as u64)?)
            };
            (kms_records(&spec, &tree, &ns, perp)?, Some(exponent))
        }
        (Some(Experiment::Lattice), None) => {
            let qs: Vec<u64> = parse_list(&required(&a.q, "q", "the lattice experiment")?, "q")?;
            let records = qs
                .iter()
                .map(|&q| {
                    let l = build_is_lattice(LatticeSpec {
                        d: a.d,
                        q,
                        mode: LatticeMode::Calibrated,
                    })?;
                    let pairs = pair_multiplicity(&l.e, &l.f, &Scalar::one())?;
                    Ok(RunRecord {
                        experiment: "lattice-unit-pairs".to_string(),
                        params: bounds::ReportParams {
                            k: None,
                            d: Some(a.d as u64),
                            n: l.e.len() as u64,
                            q: Some(q),
                            tree: None,
                        },
                        count: BigUint::from(pairs),
                        predicted: Some(BigUint::from(l.unit_pairs)),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            // unit pairs between E and F grow like N^{2d/(d+1)}
            (records, Some(bounds::lattice(1, a.d as u64)?))
        }
    };
    let exponent = a
        .exponent
        .clone()
        .or(default_exponent)
        .ok_or_else(|| Error::param("--exponent is required with --input"))?;
    let cmp = compare_report(&records, &exponent, &a.c)?;
    write!(ctx.out, "{}", cmp.to_text())?;
    ctx.write_json(&cmp)?;
    Ok(if cmp.pass { Outcome::Ok } else { Outcome::CheckFailed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("dot-trees").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&[]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        let (code, _, err) = run_capture(&["generate", "--construction", "kms", "-o", "/nonexistent/x.pts"]);
        assert_eq!(code, 2);
        assert!(err.contains("--tree"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("generate"));
    }
}

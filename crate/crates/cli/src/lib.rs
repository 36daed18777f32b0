//! The `chibound` command line. [`run`] is the whole program; `main` only
//! wires it to the process streams.
//!
//! Vertex ids are 1-based everywhere on this surface, as in DIMACS.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use chibound::cliques::{check_hajnal, clique_components, kostochka_for_family, maximum_cliques_with_limit};
use chibound::coloring::{verify_coloring, Coloring};
use chibound::graph::{parse_dimacs, planted_dense_instance, random_graph, write_dimacs};
use chibound::pipeline::{bound_chi, ColoringReport, PipelineConfig};
use chibound::rational::Rational;
use chibound::sparse::{monte_carlo_stats, regularize_with_limit, SparseConfig, DEFAULT_REGULARIZE_LIMIT};
use chibound::transversal::{
    extend_to_maximal, find_isr, hitting_stable_set_with_limit, lopsided_condition_holds, ClassMode,
    HittingOutcome, PartitionedGraph, TransversalResult,
};
use chibound::{Error, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chibound", version, about = "Color graphs within ⌈(1−ε)(Δ+1)+εω⌉ and audit every step")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (tabular commands only).
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the coloring pipeline and print its report (JSON by default).
    Color(ColorArgs),
    /// Maximum cliques, clique-graph components and the intersection certificates.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 256)]
        clique_limit: usize,
    },
    /// A stable set meeting every maximum clique.
    Hit {
        file: PathBuf,
        #[arg(long, default_value_t = 256)]
        clique_limit: usize,
    },
    /// Independent system of representatives for a vertex partition.
    Isr(IsrArgs),
    /// Monte Carlo statistics of the naive coloring procedure.
    SparseSim(SparseArgs),
    /// Write a generated graph in DIMACS format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check that a coloring file is a proper total coloring of a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
}

#[derive(Args, Debug)]
struct ColorArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Overrides CHIBOUND_SEED and the built-in default.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    delta0: Option<usize>,
    /// Rational such as `1/160`.
    #[arg(long)]
    epsilon: Option<Rational>,
    #[arg(long)]
    rho: Option<Rational>,
    #[arg(long)]
    alpha: Option<Rational>,
    /// Also write the coloring as `v color` lines (single input only).
    #[arg(long)]
    coloring_out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Stable,
    Clique,
}

#[derive(Args, Debug)]
struct IsrArgs {
    file: PathBuf,
    /// Classes separated by `;`, vertices by `,`: `1,2;3,4`.
    #[arg(long)]
    classes: String,
    #[arg(long, value_enum, default_value_t = Mode::Stable)]
    mode: Mode,
    /// A vertex the transversal must contain.
    #[arg(long)]
    required: Option<usize>,
    /// Report whether the lopsided degree condition holds for this `k`.
    #[arg(long)]
    k: Option<Rational>,
}

#[derive(Args, Debug)]
struct SparseArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1000)]
    trials: u32,
    /// Edge deficit `B` of every neighbourhood.
    #[arg(long = "B", alias = "b")]
    b: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Palette size; defaults to `⌊Δ/2⌋` (at least 1).
    #[arg(long = "C", alias = "c")]
    c: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_REGULARIZE_LIMIT)]
    regularize_limit: usize,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Erdős–Rényi G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A graph with one dense neighbourhood and ω ≤ (2/3)(Δ+1).
    Dense {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value = "1/160")]
        alpha: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Embed a graph in a Δ-regular one by doubling.
    Regularize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_REGULARIZE_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn contract(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CONTRACT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidEdge(..) | Error::UnknownVertex(_) | Error::InvalidParameter(_) => {
                EXIT_USAGE
            }
            _ => EXIT_CONTRACT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the program on `argv` (including the program name) and returns the
/// exit status.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let result = match cli.command {
        Command::Color(args) => color(args, format),
        Command::Analyze { file, clique_limit } => analyze(&file, clique_limit, format),
        Command::Hit { file, clique_limit } => hit(&file, clique_limit, format),
        Command::Isr(args) => isr(args, format),
        Command::SparseSim(args) => sparse_sim(args, format),
        Command::Gen { kind } => gen(kind, format),
        Command::Verify { graph, coloring } => verify(&graph, &coloring, format),
    };
    match result {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "chibound: {e}");
                EXIT_CONTRACT
            }
        },
        Err(f) => {
            let _ = writeln!(err, "chibound: {}", f.message);
            f.code
        }
    }
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_dimacs(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn no_csv(format: Format, command: &str) -> std::result::Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::usage(format!("`{command}` has no CSV output")));
    }
    Ok(())
}

fn color(args: ColorArgs, format: Format) -> Outcome {
    let mut cfg = PipelineConfig::from_env().map_err(|e| Failure::usage(e.to_string()))?;
    if let Some(d) = args.delta0 {
        cfg = PipelineConfig { seed: cfg.seed, ..PipelineConfig::with_delta0(d) };
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(e) = args.epsilon {
        cfg.epsilon = e;
    }
    if let Some(r) = args.rho {
        cfg.rho = r;
    }
    if let Some(a) = args.alpha {
        cfg.alpha = a;
    }
    cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
    if args.coloring_out.is_some() && args.files.len() != 1 {
        return Err(Failure::usage("--coloring-out needs exactly one input"));
    }

    let mut reports: Vec<(String, ColoringReport)> = Vec::new();
    for file in &args.files {
        let g = read_graph(file)?;
        let report = bound_chi(&g, &cfg)?;
        if !report.proper {
            return Err(Failure::contract(format!("{}: produced coloring is not proper", file.display())));
        }
        reports.push((file.display().to_string(), report));
    }
    if let Some(path) = &args.coloring_out {
        std::fs::write(path, reports[0].1.coloring.to_text())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }

    let text = match format {
        Format::Csv => {
            let mut s = String::from("file,n,m,delta,omega,omega_exact,chi,bound,colors_used,passes,reed_met,seed\n");
            for (name, r) in &reports {
                let chi = r.input.chi.map(|c| c.to_string()).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{name},{},{},{},{},{},{chi},{},{},{},{},{}",
                    r.input.n,
                    r.input.m,
                    r.input.delta,
                    r.input.omega,
                    r.input.omega_exact,
                    r.bound,
                    r.colors_used,
                    r.passes,
                    r.reed.met,
                    r.seed
                );
            }
            s
        }
        _ if reports.len() == 1 => reports[0].1.to_json() + "\n",
        _ => {
            let all: Vec<Value> = reports
                .iter()
                .map(|(name, r)| json!({"file": name, "report": serde_json::to_value(r).expect("json")}))
                .collect();
            pretty(&Value::Array(all))
        }
    };
    if let Some((name, r)) = reports.iter().find(|(_, r)| !r.passes) {
        return Err(Failure::contract(format!(
            "{name}: {} colors exceed the bound {}\n{text}",
            r.colors_used, r.bound
        )));
    }
    Ok(text)
}

fn analyze(file: &Path, limit: usize, format: Format) -> Outcome {
    no_csv(format, "analyze")?;
    let g = read_graph(file)?;
    let fam = maximum_cliques_with_limit(&g, limit)?;
    let comps = clique_components(&fam);
    let delta = g.max_degree();
    let mut hajnal = Vec::new();
    for c in &comps {
        hajnal.push(check_hajnal(&g, &fam, &c.members)?);
    }
    let kostochka = kostochka_for_family(&g, &fam, &comps);
    let pass = hajnal.iter().all(|h| h.pass) && kostochka.pass();

    let text = if format == Format::Json {
        let components: Vec<Value> = comps
            .iter()
            .zip(&hajnal)
            .map(|(c, h)| {
                json!({
                    "cliques": c.members.iter().map(|&i| one_based(&fam.cliques[i])).collect::<Vec<_>>(),
                    "union": one_based(&c.union),
                    "intersection": one_based(&c.intersection),
                    "hajnal": h,
                })
            })
            .collect();
        pretty(&json!({
            "n": g.n(),
            "m": g.m(),
            "delta": delta,
            "omega": fam.omega,
            "maximum_cliques": fam.cliques.len(),
            "components": components,
            "kostochka": kostochka,
            "pass": pass,
        }))
    } else {
        let mut s = format!(
            "n={} m={} Δ={delta} ω={} maximum cliques={} components={}\n",
            g.n(),
            g.m(),
            fam.omega,
            fam.cliques.len(),
            comps.len()
        );
        for (i, (c, h)) in comps.iter().zip(&hajnal).enumerate() {
            let _ = writeln!(
                s,
                "component {}: {} cliques, |D|={} |F|={} F={:?} hajnal {}+{} ≥ {} {}",
                i + 1,
                c.members.len(),
                c.union.len(),
                c.intersection.len(),
                one_based(&c.intersection),
                h.intersection_size,
                h.union_size,
                h.bound,
                if h.pass { "ok" } else { "FAILED" }
            );
        }
        let _ = writeln!(s, "kostochka: {}", serde_json::to_string(&kostochka).expect("json"));
        s
    };
    if !pass {
        return Err(Failure::contract(format!("an intersection certificate failed\n{text}")));
    }
    Ok(text)
}

fn hit(file: &Path, limit: usize, format: Format) -> Outcome {
    no_csv(format, "hit")?;
    let g = read_graph(file)?;
    match hitting_stable_set_with_limit(&g, limit)? {
        HittingOutcome::Inapplicable { omega, delta } => Ok(if format == Format::Json {
            pretty(&json!({"status": "inapplicable", "omega": omega, "delta": delta}))
        } else {
            format!("inapplicable: ω={omega} ≤ 2(Δ+1)/3 with Δ={delta}\n")
        }),
        HittingOutcome::Found(h) => {
            let maximal = extend_to_maximal(&g, &h.set)?;
            Ok(if format == Format::Json {
                pretty(&json!({
                    "status": "found",
                    "set": one_based(&h.set),
                    "maximal": one_based(&maximal),
                    "omega": h.omega,
                    "delta": h.delta,
                    "k": h.k,
                    "maximum_cliques": h.maximum_cliques,
                    "components": h.components,
                    "lopsided": h.lopsided,
                }))
            } else {
                format!(
                    "hitting set {:?} meets all {} maximum cliques (ω={}, Δ={}); maximal extension {:?}\n",
                    one_based(&h.set),
                    h.maximum_cliques,
                    h.omega,
                    h.delta,
                    one_based(&maximal)
                )
            })
        }
    }
}

fn parse_classes(text: &str, n: usize) -> std::result::Result<Vec<Vec<usize>>, Failure> {
    text.split(';')
        .map(|class| {
            class
                .split(',')
                .map(|v| {
                    let v: usize = v
                        .trim()
                        .parse()
                        .map_err(|_| Failure::usage(format!("bad vertex {v:?} in --classes")))?;
                    if v == 0 || v > n {
                        return Err(Failure::usage(format!("vertex {v} outside 1..={n}")));
                    }
                    Ok(v - 1)
                })
                .collect()
        })
        .collect()
}

fn isr(args: IsrArgs, format: Format) -> Outcome {
    no_csv(format, "isr")?;
    let g = read_graph(&args.file)?;
    let classes = parse_classes(&args.classes, g.n())?;
    let mode = match args.mode {
        Mode::Stable => ClassMode::Stable,
        Mode::Clique => ClassMode::Clique,
    };
    let required = match args.required {
        Some(v) if v == 0 || v > g.n() => return Err(Failure::usage(format!("vertex {v} outside 1..={}", g.n()))),
        Some(v) => Some(v - 1),
        None => None,
    };
    let pg = PartitionedGraph::new(g, classes, mode).map_err(|e| Failure::usage(format!("--classes: {e}")))?;
    let lopsided = args.k.map(|k| lopsided_condition_holds(&pg, k));
    let result = find_isr(&pg, required)?;
    // Clique classes satisfying the condition always have a transversal, and
    // in the stable reading one through every vertex.
    let guaranteed = lopsided == Some(true) && (required.is_none() || mode == ClassMode::Stable);
    let text = match (&result, format) {
        (TransversalResult::Found { set }, Format::Json) => {
            pretty(&json!({"status": "found", "set": one_based(set), "lopsided": lopsided}))
        }
        (TransversalResult::Found { set }, _) => format!("found {:?}\n", one_based(set)),
        (TransversalResult::NotFound { witness }, Format::Json) => {
            let witness = witness.as_ref().map(|w| {
                json!({
                    "classes": w.j.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "x": one_based(&w.x),
                    "y": one_based(&w.y),
                    "x1": w.x1 + 1,
                })
            });
            pretty(&json!({"status": "not_found", "witness": witness, "lopsided": lopsided}))
        }
        (TransversalResult::NotFound { witness }, _) => match witness {
            Some(w) => format!(
                "no transversal; dominating certificate on classes {:?} with X={:?} Y={:?}\n",
                w.j.iter().map(|i| i + 1).collect::<Vec<_>>(),
                one_based(&w.x),
                one_based(&w.y)
            ),
            None => "no transversal (exhaustive search)\n".to_string(),
        },
    };
    if guaranteed && !result.is_found() {
        return Err(Failure::contract(format!(
            "lopsided condition holds but no transversal was found\n{text}"
        )));
    }
    Ok(text)
}

fn sparse_sim(args: SparseArgs, format: Format) -> Outcome {
    let g = read_graph(&args.file)?;
    let seed = match args.seed {
        Some(s) => s,
        None => PipelineConfig::from_env().map_err(|e| Failure::usage(e.to_string()))?.seed,
    };
    let reg = regularize_with_limit(&g, args.regularize_limit)?;
    let delta = reg.graph.max_degree();
    let mut cfg = SparseConfig::for_degree(delta, args.b, seed);
    cfg.trials = args.trials;
    cfg.c = args.c.unwrap_or(cfg.c).max(1);
    cfg.regularize_limit = args.regularize_limit;
    let mut stats = monte_carlo_stats(&reg.graph, &cfg)?;
    // Report the original vertices only; copies behave identically in law.
    stats.vertices.truncate(reg.original_n);
    Ok(match format {
        Format::Csv => stats.to_csv(),
        Format::Json => {
            let mut v = serde_json::to_value(&stats).expect("json");
            v["regularized_n"] = json!(reg.graph.n());
            v["doublings"] = json!(reg.doublings);
            if let Some(rows) = v["vertices"].as_array_mut() {
                for row in rows {
                    row["vertex"] = json!(row["vertex"].as_u64().unwrap_or(0) + 1);
                }
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = format!(
                "trials={} seed={} B={} C={} Δ={} regularized n={} ({} doublings)\n",
                stats.trials,
                stats.seed,
                stats.b,
                stats.c,
                stats.delta,
                reg.graph.n(),
                reg.doublings
            );
            let _ = writeln!(
                s,
                "min E(X)={:.4} mean E(X)={:.4} min E(X')={:.4} max E(AT)={:.4}",
                stats.min_mean_x, stats.mean_mean_x, stats.min_mean_x_prime, stats.max_mean_at
            );
            let _ = writeln!(
                s,
                "AT bound {} X' bound {}{}",
                ok(stats.at_bound_ok),
                ok(stats.x_prime_bound_ok),
                if stats.any_clamped { " (B clamped to available non-edges)" } else { "" }
            );
            s
        }
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "not met"
    }
}

fn gen(kind: GenKind, format: Format) -> Outcome {
    if format != Format::Text {
        return Err(Failure::usage("`gen` writes DIMACS only"));
    }
    match kind {
        GenKind::Gnp { n, p, seed } => {
            let g = random_graph(n, p, seed)?;
            Ok(write_dimacs(&g, &[&format!("gnp n={n} p={p} seed={seed}")]))
        }
        GenKind::Dense { delta, alpha, seed } => {
            let inst = planted_dense_instance(delta, alpha.to_f64(), seed).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(write_dimacs(
                &inst.graph,
                &[
                    &format!("dense delta={delta} alpha={alpha} seed={seed}"),
                    &format!("center {}", inst.center + 1),
                ],
            ))
        }
        GenKind::Regularize { file, limit } => {
            let g = read_graph(&file)?;
            let reg = regularize_with_limit(&g, limit)?;
            Ok(write_dimacs(
                &reg.graph,
                &[&format!(
                    "regularized from {} vertices by {} doublings; vertex j copies (j-1) mod {} + 1",
                    reg.original_n, reg.doublings, reg.original_n
                )],
            ))
        }
    }
}

fn verify(graph: &Path, coloring: &Path, format: Format) -> Outcome {
    no_csv(format, "verify")?;
    let g = read_graph(graph)?;
    let text = std::fs::read_to_string(coloring)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", coloring.display())))?;
    let c = if text.trim_start().starts_with('{') {
        Coloring::from_json(&text, g.n())
    } else {
        Coloring::from_text(&text, g.n())
    }
    .map_err(|e| Failure::usage(format!("{}: {e}", coloring.display())))?;
    let conflicts: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| c.get(u).is_some() && c.get(u) == c.get(v))
        .map(|(u, v)| (u + 1, v + 1))
        .collect();
    let uncolored = one_based(&c.uncolored());
    let valid = verify_coloring(&g, &c);
    let body = if format == Format::Json {
        pretty(&json!({
            "valid": valid,
            "colors_used": c.colors_used(),
            "conflicts": conflicts,
            "uncolored": uncolored,
        }))
    } else if valid {
        format!("valid: proper coloring with {} colors\n", c.colors_used())
    } else {
        format!("invalid: {} conflicting edges {:?}, uncolored {:?}\n", conflicts.len(), conflicts, uncolored)
    };
    if valid {
        Ok(body)
    } else {
        Err(Failure::contract(body.trim_end().to_string()))
    }
}

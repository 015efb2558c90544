use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use star_edge::constructions::{
    color_kn, color_knn_from_kn, compose_star_coloring, ComposeOptions, KnMethod,
};
use star_edge::counting::{check_counting_identities, counting_certificate, kn_lower_bound};
use star_edge::cubic::{cubic_seven_coloring_report, find_cover, lift_coloring, CoverMap};
use star_edge::format::{parse_graph, ColoringDocument, CoverDocument, GraphFormat, Provenance};
use star_edge::solver::{
    star_chromatic_index, star_decision, star_decision_parallel, SolveBudget, SolveOutcome,
    SolveStatus,
};
use star_edge::{verify_star, EdgeColoring, Graph, NamedGraph, Verdict};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "star-edge", version, about = "Star edge-coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring document; exit 1 and print a witness on violation.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact star chromatic index, or a single decision with --decision.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        /// Decide whether K colors suffice instead of minimizing.
        #[arg(long, value_name = "K")]
        decision: Option<usize>,
        #[arg(long, value_name = "N")]
        max_nodes: Option<u64>,
        #[arg(long, value_name = "SECONDS")]
        time_cap: Option<f64>,
        /// Split the decision search this many levels deep across threads.
        #[arg(long, value_name = "DEPTH")]
        parallel: Option<usize>,
    },
    /// Explicit colorings.
    #[command(subcommand)]
    Construct(Construct),
    /// Closed-form bounds.
    #[command(subcommand)]
    Bound(Bound),
    /// Counting certificate of a star coloring of a complete graph.
    Certify {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Search for a covering map onto a target graph; exit 1 if none exists.
    Cover {
        #[command(flatten)]
        input: GraphInput,
        /// Named target graph (q3, petersen, K4, ...) or a graph6 file.
        #[arg(long, default_value = "q3")]
        target: String,
    },
    /// Pull a coloring of the target back along a cover.
    Lift {
        #[arg(long)]
        cover: PathBuf,
        /// Coloring document of the cover's target.
        #[arg(long)]
        coloring: PathBuf,
        /// Source graph, when the cover document does not list its edges.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Star coloring with at most 7 colors of a connected cubic graph.
    Cubic7 {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Star coloring of K_n.
    Kn {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ap3")]
        method: KnMethod,
    },
    /// Star coloring of K_{n,n} from one of K_n.
    Knn {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ap3")]
        method: KnMethod,
    },
    /// Product coloring of an arbitrary graph.
    Compose {
        #[command(flatten)]
        input: GraphInput,
        /// Largest K_{Δ+1} colored by the exact solver.
        #[arg(long, default_value_t = star_edge::constructions::DEFAULT_EXACT_THRESHOLD)]
        exact_threshold: usize,
    },
}

#[derive(Subcommand)]
enum Bound {
    /// Lower bound ceil(2n(n-1)/(n+2)) for K_n.
    Kn {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file.
    #[arg(long, required_unless_present = "named", conflicts_with = "named")]
    graph: Option<PathBuf>,
    /// Built-in graph instead of a file: K5, K_{3,3}, C7, P4, q3, petersen, heawood.
    #[arg(long)]
    named: Option<NamedGraph>,
    #[arg(long, default_value = "graph6")]
    format: GraphFormat,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, self.named) {
            (_, Some(named)) => Ok(named.build()?),
            (Some(path), None) => read_graph(path, self.format),
            (None, None) => bail!("either --graph or --named is required"),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    parse_graph(&read(path)?, format).with_context(|| format!("parsing {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<(Graph, EdgeColoring)> {
    let doc = ColoringDocument::from_json(&read(path)?)?;
    Ok(doc.to_graph_coloring()?)
}

fn provenance(method: &str, parameters: Value, palette_size: usize) -> Provenance {
    let parameters: BTreeMap<String, Value> = match parameters {
        Value::Object(map) => map.into_iter().collect(),
        _ => BTreeMap::new(),
    };
    Provenance {
        method: method.to_string(),
        parameters,
        palette_size,
    }
}

fn document(g: &Graph, c: &EdgeColoring, p: Provenance) -> Result<Value> {
    let doc = ColoringDocument::new(g, c)?.with_provenance(p);
    Ok(serde_json::to_value(doc)?)
}

fn print(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("json value");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn budget(max_nodes: Option<u64>, time_cap: Option<f64>) -> Result<SolveBudget> {
    let mut b = SolveBudget::unlimited();
    b.max_nodes = max_nodes;
    if let Some(secs) = time_cap {
        if !(secs.is_finite() && secs >= 0.0) {
            bail!("--time-cap must be a non-negative number of seconds");
        }
        b.time_cap = Some(Duration::from_secs_f64(secs));
    }
    Ok(b)
}

fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Feasible => "feasible",
        SolveStatus::Infeasible => "infeasible",
        SolveStatus::ExhaustedBudget => "exhausted",
    }
}

fn solve(
    g: &Graph,
    decision: Option<usize>,
    budget: SolveBudget,
    parallel: Option<usize>,
) -> Result<u8> {
    if let Some(k) = decision {
        let out: SolveOutcome = match parallel {
            Some(depth) => star_decision_parallel(g, k, budget, depth)?,
            None => star_decision(g, k, budget)?,
        };
        let coloring = match &out.coloring {
            Some(c) => document(
                g,
                c,
                provenance("exact-decision", json!({ "k": k }), c.palette_size()),
            )?,
            None => Value::Null,
        };
        print(&json!({
            "status": status_name(out.status),
            "k": k,
            "nodes_explored": out.nodes_explored,
            "coloring": coloring,
        }));
        return Ok(match out.status {
            SolveStatus::Feasible => 0,
            SolveStatus::Infeasible => EXIT_NEGATIVE,
            SolveStatus::ExhaustedBudget => EXIT_EXHAUSTED,
        });
    }
    match star_chromatic_index(g, budget) {
        Ok(idx) => {
            let p = provenance("exact-index", json!({}), idx.coloring.palette_size());
            print(&json!({
                "status": "optimal",
                "k": idx.value,
                "nodes_explored": idx.nodes_explored,
                "coloring": document(g, &idx.coloring, p)?,
            }));
            Ok(0)
        }
        Err(b) => {
            let p = provenance(
                "greedy-distance-2",
                json!({}),
                b.upper_witness.palette_size(),
            );
            print(&json!({
                "status": "exhausted",
                "lower": b.lower,
                "upper": b.upper,
                "nodes_explored": b.nodes_explored,
                "coloring": document(g, &b.upper_witness, p)?,
            }));
            Ok(EXIT_EXHAUSTED)
        }
    }
}

fn method_name(m: KnMethod) -> &'static str {
    match m {
        KnMethod::Sum => "ap3",
        KnMethod::Exact => "exact",
        KnMethod::Recursive => "recursive",
    }
}

fn construct(cmd: Construct) -> Result<u8> {
    match cmd {
        Construct::Kn { n, method } => {
            let (g, c) = color_kn(n, method)?;
            let p = provenance(
                &format!("kn-{}", method_name(method)),
                json!({ "n": n }),
                c.palette_size(),
            );
            print(&document(&g, &c, p)?);
        }
        Construct::Knn { n, method } => {
            let (kn, c) = color_kn(n, method)?;
            let (g, cc) = color_knn_from_kn(&kn, &c)?;
            let p = provenance(
                "knn-from-kn",
                json!({ "n": n, "kn_method": method_name(method), "kn_palette": c.palette_size() }),
                cc.palette_size(),
            );
            print(&document(&g, &cc, p)?);
        }
        Construct::Compose {
            input,
            exact_threshold,
        } => {
            let g = input.load()?;
            let r = compose_star_coloring(&g, ComposeOptions { exact_threshold })?;
            let p = provenance(
                "frugal-product",
                json!({
                    "outer_method": method_name(r.outer_method),
                    "outer_palette": r.outer_palette(),
                    "beta": r.frugal.beta,
                    "inner_width": r.inner_width,
                }),
                r.flattened.palette_size(),
            );
            print(&document(&g, &r.flattened, p)?);
        }
    }
    Ok(0)
}

fn verify(path: &Path) -> Result<u8> {
    let (g, c) = read_coloring(path)?;
    match verify_star(&g, &c)? {
        Verdict::Pass => {
            println!("pass: star coloring with {} colors", c.palette_size());
            Ok(0)
        }
        Verdict::Fail(v) => {
            println!("violation: {v}");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn certify(path: &Path) -> Result<u8> {
    let (g, c) = read_coloring(path)?;
    let cert = counting_certificate(&g, &c)?;
    println!("n = {}, palette = {:?}", cert.n, cert.palette);
    println!("a = {:?}", cert.a);
    for (i, row) in cert.b.iter().enumerate() {
        println!("b[{}] = {:?}", cert.palette[i], row);
    }
    let report = check_counting_identities(&cert);
    for check in &report.checks {
        println!("{check}");
    }
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_NEGATIVE
    })
}

fn target_graph(spec: &str) -> Result<Graph> {
    if let Ok(named) = spec.parse::<NamedGraph>() {
        return Ok(named.build()?);
    }
    read_graph(Path::new(spec), GraphFormat::Graph6)
}

fn cover(input: &GraphInput, target: &str) -> Result<u8> {
    let g = input.load()?;
    let h = target_graph(target)?;
    match find_cover(&g, &h) {
        Some(m) => {
            println!("{}", m.to_document().to_json());
            Ok(0)
        }
        None => {
            println!("no covering map exists");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn lift(cover: &Path, coloring: &Path, graph: Option<&Path>, format: GraphFormat) -> Result<u8> {
    let doc = CoverDocument::from_json(&read(cover)?)?;
    let (target, c) = read_coloring(coloring)?;
    let source = graph.map(|p| read_graph(p, format)).transpose()?;
    let m = CoverMap::from_document(&doc, source, Some(target))?;
    let lifted = lift_coloring(&m, &c)?;
    let p = provenance(
        "cover-lift",
        json!({ "target_n": m.target().n() }),
        lifted.palette_size(),
    );
    print(&document(m.source(), &lifted, p)?);
    Ok(0)
}

fn cubic7(input: &GraphInput) -> Result<u8> {
    let g = input.load()?;
    let r = cubic_seven_coloring_report(&g)?;
    let route = format!("{:?}", r.route).to_lowercase();
    let p = provenance(
        "cubic-seven",
        json!({ "route": route }),
        r.coloring.palette_size(),
    );
    print(&document(&g, &r.coloring, p)?);
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { coloring } => verify(&coloring),
        Command::Solve {
            input,
            decision,
            max_nodes,
            time_cap,
            parallel,
        } => solve(
            &input.load()?,
            decision,
            budget(max_nodes, time_cap)?,
            parallel,
        ),
        Command::Construct(c) => construct(c),
        Command::Bound(Bound::Kn { n }) => {
            print(&json!({
                "n": n,
                "lower_bound": kn_lower_bound(n),
                "numerator": 2 * n * n.saturating_sub(1),
                "denominator": n + 2,
            }));
            Ok(0)
        }
        Command::Certify { coloring } => certify(&coloring),
        Command::Cover { input, target } => cover(&input, &target),
        Command::Lift {
            cover,
            coloring,
            graph,
            format,
        } => lift(&cover, &coloring, graph.as_deref(), format),
        Command::Cubic7 { input } => cubic7(&input),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

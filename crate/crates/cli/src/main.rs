//! `splitdiam`: generate, inspect and measure split graphs from the shell.
//!
//! Exit codes: 0 success, 1 other failure, 2 usage, 3 unreadable input,
//! 4 not a connected split graph, 5 ordering does not fit the graph,
//! 10 recognition rejected.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use split_diameter::generators::{self, sparse_of};
use split_diameter::harness::{format_report, run_suite, Suite};
use split_diameter::io::{parse_graph_file, parse_ordering, write_edge, write_ordering, write_split, GraphFile};
use split_diameter::{
    clique_interval_number_exact, comparability_ordering, diameter_clique_interval, diameter_comparability,
    diameter_complement_kci_with, diameter_kci_rangetree_with, diameter_naive_with, find_pendant_shortcut,
    max_neighbour_shortcut, recognize_clique_interval, sparse_representation, split_partition, threshold_ordering,
    width_under, CliqueOrdering, DiameterResult, Error, Exec, Side, SparseSplitGraph, Vertex,
};

#[derive(Parser)]
#[command(name = "splitdiam", version, about = "Diameter of split graphs through clique-interval orderings")]
struct Cli {
    /// Worker threads for the per-source loops; the output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write an instance of a graph family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Size parameter: cycle length, spider legs, clique size, or total
        /// vertex count for random-kci.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Runs per stable vertex for random-kci.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the planted clique ordering (random-kci).
        #[arg(long)]
        order_out: Option<PathBuf>,
    },
    /// Compute the diameter.
    Diam {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: Option<PathBuf>,
        /// Side the ordering ranks; defaults to S for complement, K otherwise.
        #[arg(long, value_enum)]
        order_side: Option<OrderSide>,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether some clique ordering makes every neighbourhood one run.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        emit_order: Option<PathBuf>,
    },
    /// Compute a clique ordering.
    Order {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report the width of an ordering.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderSide::K)]
        order_side: OrderSide,
    },
    /// Apply one of the two reductions.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Stable vertices (1-based, comma separated) on the `a` side for
        /// mindeg2; defaults to the first half.
        #[arg(long, value_delimiter = ',')]
        a_side: Option<Vec<usize>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a scaling suite.
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, value_delimiter = ',', default_value = "4096,8192,16384")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sun,
    Spider,
    Threshold,
    RandomKci,
    Fig1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Naive,
    Universal,
    Rangetree,
    Complement,
    Comparability,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderSide {
    K,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Threshold,
    Comparability,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Diam2,
    Mindeg2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    RangetreeScaling,
    ComplementScaling,
    NaiveBaseline,
}

enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Core(Error),
    Other(String),
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::Parse { .. } | Error::InvalidSparse(_) | Error::InvalidPartition(_))
            | Failure::Core(Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..))
            | Failure::Core(Error::EmptyGraph) => 3,
            Failure::Core(Error::NotSplit | Error::Disconnected) => 4,
            Failure::Core(Error::OrderingMismatch(_)) => 5,
            Failure::Rejected => 10,
            Failure::Io(..) | Failure::Core(_) | Failure::Other(_) => 1,
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            Failure::Usage(m) | Failure::Other(m) => Some(m.clone()),
            Failure::Io(p, e) => Some(format!("{}: {e}", p.display())),
            Failure::Core(e) => Some(e.to_string()),
            Failure::Rejected => None,
        }
    }
}

type Outcome = Result<(), Failure>;

/// A split graph read from a file, with the 1-based ids it uses for stable
/// vertices.
struct Loaded {
    sg: SparseSplitGraph,
    stable_ids: Vec<usize>,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    match parse_graph_file(&read(path)?)? {
        GraphFile::Split(sg) => {
            let stable_ids = (1..=sg.s_size()).collect();
            Ok(Loaded { sg, stable_ids })
        }
        GraphFile::Edge(g) => {
            let p = split_partition(&g)?;
            let sg = sparse_representation(&g, &p)?;
            let stable_ids = sg.stable_labels().iter().map(|v| v + 1).collect();
            Ok(Loaded { sg, stable_ids })
        }
    }
}

fn load_order(path: &Path, side: Side) -> Result<CliqueOrdering, Failure> {
    Ok(parse_ordering(&read(path)?, side)?)
}

fn side_of(s: OrderSide) -> Side {
    match s {
        OrderSide::K => Side::Clique,
        OrderSide::S => Side::Stable,
    }
}

fn gen(family: Family, n: usize, k: usize, seed: u64, out: &Path, order_out: Option<&Path>) -> Outcome {
    let (sg, tau) = match family {
        Family::Sun => (sparse_of_result(generators::gen_sun(n))?, None),
        Family::Spider => (sparse_of_result(generators::gen_thin_spider(n))?, None),
        Family::Threshold => {
            let chain: Vec<usize> = (1..n).collect();
            (sparse_of_result(generators::gen_threshold(n, &chain))?, None)
        }
        Family::Fig1 => (generators::fig1(), None),
        Family::RandomKci => {
            let (sg, tau) = generators::gen_random_kci(n / 2, n - n / 2, k, seed)?;
            (sg, Some(tau))
        }
    };
    write(out, &write_split(&sg))?;
    if let Some(path) = order_out {
        let tau = tau.ok_or_else(|| Failure::Usage("--order-out only applies to random-kci".into()))?;
        write(path, &write_ordering(&tau))?;
    }
    Ok(())
}

fn sparse_of_result(r: split_diameter::Result<(split_diameter::Graph, split_diameter::SplitPartition)>) -> Result<SparseSplitGraph, Failure> {
    let (g, p) = r?;
    Ok(sparse_of(&g, &p))
}

#[derive(Serialize)]
struct DiamReport {
    algorithm: String,
    diameter: u8,
    witness: Option<usize>,
    wall_ms: f64,
}

fn auto(sg: &SparseSplitGraph, exec: Exec) -> Result<(&'static str, DiameterResult), Failure> {
    if let Some((v, u)) = find_pendant_shortcut(sg) {
        return Ok(("auto:pendant", max_neighbour_shortcut(sg, Vertex::Stable(v), Vertex::Clique(u))?));
    }
    if recognize_clique_interval(sg).accepted {
        return Ok(("auto:universal", diameter_clique_interval(sg)));
    }
    Ok(("auto:naive", diameter_naive_with(sg, exec)))
}

fn diam(graph: &Path, order: Option<&Path>, order_side: Option<OrderSide>, algo: Algo, json: bool, exec: Exec) -> Outcome {
    let Loaded { sg, stable_ids } = load(graph)?;
    let side = side_of(order_side.unwrap_or(if algo == Algo::Complement { OrderSide::S } else { OrderSide::K }));
    let tau = order.map(|p| load_order(p, side)).transpose()?;
    let need_order = |what: &str| Failure::Usage(format!("--algo {what} needs --order"));
    let start = Instant::now();
    let (name, r) = match algo {
        Algo::Naive => ("naive", diameter_naive_with(&sg, exec)),
        Algo::Universal => {
            if !recognize_clique_interval(&sg).accepted {
                return Err(Failure::Other("the universal-vertex criterion needs a clique-interval graph".into()));
            }
            ("universal", diameter_clique_interval(&sg))
        }
        Algo::Rangetree => ("rangetree", diameter_kci_rangetree_with(&sg, tau.as_ref().ok_or_else(|| need_order("rangetree"))?, exec)?),
        Algo::Complement => ("complement", diameter_complement_kci_with(&sg, tau.as_ref().ok_or_else(|| need_order("complement"))?, exec)?),
        Algo::Comparability => {
            let tau = match tau {
                Some(t) => t,
                None => comparability_ordering(&sg.to_graph(), &sg.partition())?,
            };
            ("comparability", diameter_comparability(&sg, &tau)?)
        }
        Algo::Auto => auto(&sg, exec)?,
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let witness = r.witness.map(|w| stable_ids[w]);
    if json {
        let report = DiamReport { algorithm: name.into(), diameter: r.value, witness, wall_ms };
        println!("{}", serde_json::to_string(&report).map_err(|e| Failure::Other(e.to_string()))?);
    } else {
        println!("diameter={}", r.value);
        if let Some(w) = witness {
            println!("witness={w}");
        }
    }
    Ok(())
}

fn recognize(graph: &Path, emit: Option<&Path>) -> Outcome {
    let Loaded { sg, .. } = load(graph)?;
    let r = recognize_clique_interval(&sg);
    match r.ordering {
        Some(tau) => {
            println!("accepted");
            if let Some(path) = emit {
                write(path, &write_ordering(&tau))?;
            }
            Ok(())
        }
        None => {
            println!("rejected");
            Err(Failure::Rejected)
        }
    }
}

fn order(graph: &Path, method: Method, out: &Path) -> Outcome {
    let Loaded { sg, .. } = load(graph)?;
    let tau = match method {
        Method::Threshold => threshold_ordering(&sg)?,
        Method::Comparability => comparability_ordering(&sg.to_graph(), &sg.partition())?,
        Method::Exact => clique_interval_number_exact(&sg)?.1,
    };
    write(out, &write_ordering(&tau))?;
    println!("width={}", width_under(&sg, &tau));
    Ok(())
}

fn verify(graph: &Path, order: &Path, side: OrderSide) -> Outcome {
    let Loaded { sg, .. } = load(graph)?;
    let tau = load_order(order, side_of(side))?;
    let width = match side {
        OrderSide::K => {
            tau.check_clique(&sg)?;
            width_under(&sg, &tau)
        }
        OrderSide::S => {
            tau.check_stable(&sg)?;
            split_diameter::complement_width(&sg, &tau)
        }
    };
    println!("width={width}");
    Ok(())
}

fn reduce(graph: &Path, mode: Mode, a_side: Option<&[usize]>, out: &Path) -> Outcome {
    let text = read(graph)?;
    match mode {
        Mode::Diam2 => {
            let GraphFile::Edge(g) = parse_graph_file(&text)? else {
                return Err(Failure::Usage("diam2 takes a `p edge` graph".into()));
            };
            let sg = generators::reduce_diam2(&g)?;
            write(out, &write_edge(&sg.to_graph()))
        }
        Mode::Mindeg2 => {
            let Loaded { sg, .. } = load(graph)?;
            let s = sg.s_size();
            let a: Vec<usize> = match a_side {
                Some(ids) => ids.iter().map(|&x| x.checked_sub(1).ok_or_else(|| Failure::Usage("stable ids are 1-based".into()))).collect::<Result<_, _>>()?,
                None => (0..s / 2).collect(),
            };
            let b: Vec<usize> = (0..s).filter(|v| !a.contains(v)).collect();
            let out_sg = generators::gadget_min_degree_two(&sg, &a, &b)?;
            write(out, &write_split(&out_sg))
        }
    }
}

#[derive(Serialize)]
struct BenchJson {
    suite: &'static str,
    rows: Vec<BenchRowJson>,
    slope: f64,
}

#[derive(Serialize)]
struct BenchRowJson {
    n: usize,
    m: usize,
    width: usize,
    diameter: u8,
    wall_ms: f64,
}

fn bench(suite: SuiteArg, sizes: &[usize], k: usize, seed: u64, reps: usize, json: bool, exec: Exec) -> Outcome {
    let suite = match suite {
        SuiteArg::RangetreeScaling => Suite::RangetreeScaling,
        SuiteArg::ComplementScaling => Suite::ComplementScaling,
        SuiteArg::NaiveBaseline => Suite::NaiveBaseline,
    };
    let report = run_suite(suite, sizes, k, seed, exec, reps)?;
    if json {
        let rows = report
            .rows
            .iter()
            .map(|r| BenchRowJson { n: r.n, m: r.m, width: r.width, diameter: r.diameter, wall_ms: r.wall_ms })
            .collect();
        let out = BenchJson { suite: suite.name(), rows, slope: report.slope };
        println!("{}", serde_json::to_string(&out).map_err(|e| Failure::Other(e.to_string()))?);
    } else {
        print!("{}", format_report(&report));
    }
    Ok(())
}

fn dispatch(cmd: Cmd, exec: Exec) -> Outcome {
    match cmd {
        Cmd::Gen { family, n, k, seed, out, order_out } => gen(family, n, k, seed, &out, order_out.as_deref()),
        Cmd::Diam { graph, order, order_side, algo, json } => diam(&graph, order.as_deref(), order_side, algo, json, exec),
        Cmd::Recognize { graph, emit_order } => recognize(&graph, emit_order.as_deref()),
        Cmd::Order { graph, method, out } => order(&graph, method, &out),
        Cmd::Verify { graph, order, order_side } => verify(&graph, &order, order_side),
        Cmd::Reduce { graph, mode, a_side, out } => reduce(&graph, mode, a_side.as_deref(), &out),
        Cmd::Bench { suite, sizes, k, seed, reps, json } => bench(suite, &sizes, k, seed, reps, json, exec),
    }
}

#[cfg(feature = "parallel")]
fn run(threads: Option<usize>, cmd: Cmd) -> Outcome {
    match threads {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().map_err(|e| Failure::Other(e.to_string()))?;
            pool.install(|| dispatch(cmd, Exec::Parallel))
        }
        None => dispatch(cmd, Exec::Parallel),
    }
}

#[cfg(not(feature = "parallel"))]
fn run(threads: Option<usize>, cmd: Cmd) -> Outcome {
    if threads == Some(0) {
        return Err(Failure::Usage("--threads must be positive".into()));
    }
    dispatch(cmd, Exec::Sequential)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.threads, cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message() {
                eprintln!("error: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}

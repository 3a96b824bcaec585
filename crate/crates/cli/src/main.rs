//! `turanlab`: batch front end for edge blow-up Turán numbers.
//!
//! Exit codes: 0 success (or "free" for `verify`), 1 `verify` found a copy,
//! 2 node budget exceeded, 64 bad input, 65 outside the theorems' scope,
//! 74 I/O failure.

mod graph_arg;

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use turanlab::blowup::edge_blowup;
use turanlab::constructions::{build_candidates_un, build_h, build_h_prime, ExtremalCandidate};
use turanlab::decomposition::{decomposition_family, forbidden_family_from};
use turanlab::formula::{self, classify};
use turanlab::graph::{encode_graph6, to_dot};
use turanlab::report::{self, ManifestEntry, SCHEMA_VERSION};
use turanlab::search::{brute_ex_with_budget, Matcher, DEFAULT_BUDGET};
use turanlab::tree::TreeAnalysis;
use turanlab::{Error, Graph};

use graph_arg::GraphArg;

const EXIT_CONTAINS: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_SCOPE: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "turanlab", version, about = "Turán numbers of edge blow-ups of trees")]
struct Cli {
    /// Worker threads for the parallel searches [default: all cores]
    #[arg(long, global = true, env = "TURANLAB_THREADS")]
    threads: Option<usize>,

    /// Omit wall-clock fields so identical runs give identical JSON
    #[arg(long, global = true)]
    deterministic: bool,

    /// Directory for output files (JSON copies, graph6, DOT)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bipartition, α, β, ν, q and the k/a₀/b₀/b parameters of a tree
    Analyze {
        #[arg(long)]
        tree: GraphArg,
    },
    /// Vertex-split family of a tree, its minimum q and the forbidden apex family
    Decompose {
        #[arg(long)]
        tree: GraphArg,
    },
    /// Closed-form ex(n, T^{p+1}) with its term breakdown
    Predict {
        #[arg(long)]
        tree: GraphArg,
        /// Blow-up parameter (each edge becomes a K_{p+1}); at least 3
        #[arg(short, long)]
        p: u64,
        #[arg(short, long)]
        n: u64,
        /// Threshold below which values are flagged unverified [default: 10·|V(T^{p+1})|]
        #[arg(long)]
        nmin_override: Option<u64>,
    },
    /// Write extremal candidates as graph6 and DOT plus a JSON manifest [default --out: out]
    Construct {
        #[arg(long)]
        tree: Option<GraphArg>,
        #[arg(short, long)]
        p: usize,
        #[arg(short, long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Un)]
        kind: Kind,
        /// Apex count plus one, for `h-prime` and `h` without a tree
        #[arg(short, long)]
        q: Option<usize>,
    },
    /// Decide whether a host graph avoids every pattern (exit 0 free, 1 contains, 2 budget)
    Verify {
        #[arg(long)]
        host: GraphArg,
        #[arg(long)]
        pattern: Vec<GraphArg>,
        /// Also forbid the blow-up T^{p+1} of this tree (needs -p)
        #[arg(long, requires = "p")]
        tree: Option<GraphArg>,
        #[arg(short, long)]
        p: Option<usize>,
        /// Backtracking node budget per pattern
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive ex(n, F) with every extremal graph (n ≤ 10)
    Search {
        #[arg(short, long)]
        n: usize,
        /// Forbidden graph; repeat for a family
        #[arg(long, required = true)]
        forbid: Vec<GraphArg>,
        /// Containment-test node budget
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// One graph per extremal apex graph Q: H'(n,p,q) with Q on the apexes
    Un,
    /// Independent apex set joined to T(n−q+1, p)
    HPrime,
    /// Clique apex set joined to T(n−q+1, p)
    H,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Lib(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        // only fails if a global pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => ExitCode::from(report_failure(&failure)),
    }
}

fn report_failure(failure: &Failure) -> u8 {
    let (code, kind, message) = match failure {
        Failure::Io(path, e) => (EXIT_IO, "io", format!("{}: {e}", path.display())),
        Failure::Lib(e) => {
            let (code, kind) = match e {
                Error::OutOfTheoremScope(_) => (EXIT_SCOPE, "out_of_theorem_scope"),
                Error::BudgetExceeded(_) => (EXIT_BUDGET, "budget_exceeded"),
                Error::Parse(_) => (EXIT_USAGE, "parse"),
                _ => (EXIT_USAGE, "invalid_input"),
            };
            (code, kind, e.to_string())
        }
    };
    let doc = json!({ "schema": SCHEMA_VERSION, "error": kind, "message": message });
    eprintln!("{doc}");
    code
}

fn run(cli: &Cli) -> Outcome {
    let det = cli.deterministic;
    match &cli.command {
        Command::Analyze { tree } => {
            let t = tree.build_tree()?;
            emit(cli, "analyze", &report::analyze(&TreeAnalysis::new(&t)?, det))
        }
        Command::Decompose { tree } => {
            let t = tree.build_tree()?;
            let family = decomposition_family(&t)?;
            let forbidden = forbidden_family_from(&TreeAnalysis::new(&t)?, &family)?;
            if let Some(dir) = &cli.out {
                write_file(dir, "family.g6", &graph6_lines(&family.graphs()))?;
                write_file(dir, "forbidden.g6", &graph6_lines(&forbidden.members))?;
            }
            emit(cli, "decompose", &report::decompose(&t, &family, &forbidden, det))
        }
        Command::Predict {
            tree,
            p,
            n,
            nmin_override,
        } => {
            let t = tree.build_tree()?;
            let eval = formula::predict(&t, *p, *n, *nmin_override)?;
            emit(cli, "predict", &report::predict(&t, &eval, det))
        }
        Command::Construct { tree, p, n, kind, q } => construct(cli, tree.as_ref(), *p, *n, *kind, *q),
        Command::Verify {
            host,
            pattern,
            tree,
            p,
            budget,
        } => {
            let mut patterns = pattern
                .iter()
                .map(GraphArg::build)
                .collect::<Result<Vec<_>, _>>()?;
            if let (Some(tree), Some(p)) = (tree, p) {
                patterns.push(edge_blowup(&tree.build_tree()?, *p)?.graph);
            }
            if patterns.is_empty() {
                return Err(Error::Parse("verify needs --pattern or --tree with -p".into()).into());
            }
            verify(cli, &host.build()?, &patterns, *budget)
        }
        Command::Search { n, forbid, budget } => {
            let family = forbid
                .iter()
                .map(GraphArg::build)
                .collect::<Result<Vec<_>, _>>()?;
            let result = brute_ex_with_budget(*n, &family, *budget)?;
            if let Some(dir) = &cli.out {
                write_file(dir, "witnesses.g6", &graph6_lines(&result.witnesses))?;
            }
            emit(cli, "search", &report::search(&result, det))
        }
    }
}

fn verify(cli: &Cli, host: &Graph, patterns: &[Graph], budget: u64) -> Outcome {
    let mut verdict = "free";
    let mut code = 0;
    let mut witness = Value::Null;
    for (index, pattern) in patterns.iter().enumerate() {
        match Matcher::new(host, pattern).budget(budget).find() {
            Ok(Some(map)) => {
                verdict = "contains";
                code = EXIT_CONTAINS;
                witness = json!({ "pattern": index, "map": map });
                break;
            }
            Ok(None) => {}
            Err(Error::BudgetExceeded(_)) => {
                verdict = "budget_exceeded";
                code = EXIT_BUDGET;
                witness = json!({ "pattern": index });
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let payload = json!({
        "verdict": verdict,
        "host": { "vertices": host.order(), "edges": host.edge_count() },
        "patterns": patterns.iter().map(encode_graph6).collect::<Vec<_>>(),
        "budget": budget,
        "witness": witness,
    });
    emit(
        cli,
        "verify",
        &report::envelope("verify", &payload, cli.deterministic),
    )?;
    Ok(code)
}

fn construct(
    cli: &Cli,
    tree: Option<&GraphArg>,
    p: usize,
    n: usize,
    kind: Kind,
    q: Option<usize>,
) -> Outcome {
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("out"));
    let tree = tree.map(GraphArg::build_tree).transpose()?;

    let q = match (q, &tree) {
        (Some(q), _) => q,
        (None, Some(t)) => classify(t, p as u64)?.q as usize,
        (None, None) => return Err(Error::Parse("construct needs --tree or -q".into()).into()),
    };
    let candidates: Vec<ExtremalCandidate> = match kind {
        Kind::Un => {
            let t = tree
                .as_ref()
                .ok_or_else(|| Error::Parse("--kind un needs --tree".into()))?;
            build_candidates_un(t, p, n)?
        }
        Kind::HPrime => vec![build_h_prime(n, p, q)?],
        Kind::H => vec![build_h(n, p, q)?],
    };

    let mut pattern_file = None;
    if let Some(t) = &tree {
        write_file(&dir, "blowup.g6", &graph6_lines(&[edge_blowup(t, p)?.graph]))?;
        pattern_file = Some("blowup.g6");
    }
    write_file(&dir, "hprime.g6", &graph6_lines(&[build_h_prime(n, p, q)?.graph]))?;

    let mut entries = Vec::with_capacity(candidates.len());
    for (i, candidate) in candidates.into_iter().enumerate() {
        let stem = format!("candidate_{i:02}");
        write_file(
            &dir,
            &format!("{stem}.g6"),
            &graph6_lines(std::slice::from_ref(&candidate.graph)),
        )?;
        write_file(&dir, &format!("{stem}.dot"), &to_dot(&candidate.graph, &stem))?;
        entries.push(ManifestEntry {
            graph6_file: format!("{stem}.g6"),
            dot_file: format!("{stem}.dot"),
            vertices: candidate.graph.order(),
            edges: candidate.graph.edge_count(),
            candidate,
        });
    }
    let placeholder = Graph::empty(0);
    let manifest = report::construct(
        tree.as_ref().unwrap_or(&placeholder),
        p,
        n,
        pattern_file,
        &entries,
        cli.deterministic,
    );
    write_file(&dir, "manifest.json", &pretty(&manifest))?;
    print(&manifest)?;
    Ok(0)
}

fn graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| encode_graph6(g) + "\n").collect()
}

fn pretty(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("JSON values always serialize") + "\n"
}

fn print(doc: &Value) -> Result<(), Failure> {
    io::stdout()
        .write_all(pretty(doc).as_bytes())
        .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

/// Prints `doc` and, with `--out`, also stores it as `<command>.json`.
fn emit(cli: &Cli, command: &str, doc: &Value) -> Outcome {
    if let Some(dir) = &cli.out {
        write_file(dir, &format!("{command}.json"), &pretty(doc))?;
    }
    print(doc)?;
    Ok(0)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_path_buf(), e))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Failure::Io(path, e))
}

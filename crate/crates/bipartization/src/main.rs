use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bipartization::{
    bipartize, classify, covering_number, domination_number,
    export_dot_bipartite, invert_bipartization, is_tree_bipartization, max_matching_bipartite,
    parse_edge_list, parse_graph6, parse_graph6_corpus, parse_weighting, run_all, run_suite,
    write_edge_list, write_graph6, write_weighting, BipartiteGraph, Error, Graph, Side, Suite,
    VerifyConfig,
};

/// Bipartite copy-graph expansions: construction, inversion, tree checks,
/// domination and covering numbers, and an exhaustive verification harness.
#[derive(Parser)]
#[command(name = "bipartization", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct HostArgs {
    /// Host graph as an edge-list file
    #[arg(short = 'g', long = "graph")]
    graph: PathBuf,
    /// Weighting file over the host's cliques
    #[arg(short = 'f', long = "weights")]
    weights: PathBuf,
}

#[derive(Args)]
struct Graph6Arg {
    /// Input graph in graph6 format (`-` for standard input)
    #[arg(short = 'g', long = "graph")]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a weighted host graph and print the result as graph6
    Bipartize {
        #[command(flatten)]
        host: HostArgs,
        /// Also write a DOT rendering to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Recover a host graph and weighting from a connected bipartite graph
    Invert {
        #[command(flatten)]
        graph: Graph6Arg,
        /// Which side becomes the host vertex set
        #[arg(long, value_parser = parse_side)]
        side: Side,
    },
    /// Decide whether the expansion of (graph, weights) is a tree
    CheckTree {
        #[command(flatten)]
        host: HostArgs,
    },
    /// Print the domination number and a minimum dominating set
    Gamma {
        #[command(flatten)]
        graph: Graph6Arg,
    },
    /// Print the covering number and a minimum vertex cover
    Beta {
        #[command(flatten)]
        graph: Graph6Arg,
    },
    /// Print a maximum matching of a bipartite graph
    Matching {
        #[command(flatten)]
        graph: Graph6Arg,
    },
    /// Classify a connected bipartite graph against the family 𝓑
    Classify {
        #[command(flatten)]
        graph: Graph6Arg,
    },
    /// Run the verification harness
    Verify {
        /// Which suite to run
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest graph order for the exhaustive sweeps
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        /// Seed for randomized samples
        #[arg(long, default_value_t = 1729)]
        seed: u64,
        /// Worker threads (also settable via BIPARTIZATION_WORKERS)
        #[arg(long)]
        workers: Option<usize>,
        /// Run graph-driven suites over this graph6 corpus instead of the
        /// exhaustive enumeration (`-` for standard input)
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "a" | "A" => Ok(Side::A),
        "b" | "B" => Ok(Side::B),
        _ => Err("side must be `a` or `b`".into()),
    }
}

/// Exit codes: 0 success, 1 negative verdict, 2 input error, 3 size limit.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SizeLimit { .. } => 3,
        _ => 2,
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading {}: {e}", path.display())))
    }
}

fn load_host(args: &HostArgs) -> Result<bipartization::CliqueWeighting, Error> {
    let h = parse_edge_list(&read_input(&args.graph)?)?;
    parse_weighting(&read_input(&args.weights)?, &h)
}

fn load_graph6(args: &Graph6Arg) -> Result<Graph, Error> {
    let text = read_input(&args.graph)?;
    parse_graph6(text.trim())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Bipartize { host, dot } => {
            let f = load_host(&host)?;
            let b = bipartize(&f);
            println!("{}", write_graph6(b.graph())?);
            if let Some(path) = dot {
                std::fs::write(&path, export_dot_bipartite(&b))
                    .map_err(|e| Error::InvalidInput(format!("writing {}: {e}", path.display())))?;
            }
            Ok(0)
        }
        Command::Invert { graph, side } => {
            let g = load_graph6(&graph)?;
            let bg = BipartiteGraph::from_graph(&g)?;
            let inv = invert_bipartization(&bg, side)?;
            print!("{}", write_edge_list(&inv.h));
            print!("{}", write_weighting(&inv.f));
            Ok(0)
        }
        Command::CheckTree { host } => {
            let f = load_host(&host)?;
            match is_tree_bipartization(&f)? {
                None => {
                    println!("tree: yes");
                    Ok(0)
                }
                Some(v) => {
                    println!("tree: no");
                    println!("violation: {v}");
                    Ok(1)
                }
            }
        }
        Command::Gamma { graph } => {
            let g = load_graph6(&graph)?;
            let (k, witness) = domination_number(&g)?;
            println!("gamma: {k}");
            println!("witness: {}", witness.members);
            Ok(0)
        }
        Command::Beta { graph } => {
            let g = load_graph6(&graph)?;
            let (k, witness) = covering_number(&g)?;
            println!("beta: {k}");
            println!("witness: {witness}");
            Ok(0)
        }
        Command::Matching { graph } => {
            let g = load_graph6(&graph)?;
            let bg = BipartiteGraph::from_graph(&g)?;
            let m = max_matching_bipartite(&bg);
            println!("matching: {}", m.len());
            for (u, v) in &m.edges {
                println!("{u} {v}");
            }
            Ok(0)
        }
        Command::Classify { graph } => {
            let g = load_graph6(&graph)?;
            let bg = BipartiteGraph::from_graph(&g)?;
            let report = classify(&bg)?;
            println!("{report}");
            Ok(if report.in_family_b { 0 } else { 1 })
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            workers,
            corpus,
        } => {
            let corpus = match corpus {
                Some(path) => Some(parse_graph6_corpus(&read_input(&path)?)?),
                None => None,
            };
            let config = VerifyConfig {
                max_n,
                seed,
                workers,
                corpus,
            };
            let report = if suite == "all" {
                config.validate_for(&Suite::ALL)?;
                run_all(&config)
            } else {
                let suite = suite.parse::<Suite>()?;
                config.validate_for(&[suite])?;
                bipartization::HarnessReport {
                    outcomes: vec![run_suite(suite, &config)],
                }
            };
            print!("{}", report.render(true));
            Ok(if report.total_failures() == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sqtree::chordality::is_chordal;
use sqtree::classify::{classification_justification, classify_tree, linear_resolution_by_classification};
use sqtree::enumerate::enumerate_trees;
use sqtree::graph::{is_connected, square, Graph};
use sqtree::homology::{hochster_betti, reg_pd_depth};
use sqtree::ideal::{betti_from_lq, edge_ideal, search_linear_quotients};
use sqtree::invariants::{chordal_report, oracle_report, REPORT_CSV_HEADER};
use sqtree::io::{parse_edge_list, to_dot, write_edge_list};
use sqtree::recognize::harary_ross_check;
use sqtree::scan::{scan_conjectures, scan_csv};
use sqtree::verify::{run_criterion, CRITERIA};
use sqtree::Error;

#[derive(Parser)]
#[command(name = "sqtree", version, about = "Edge ideals of squares of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square of a graph as an edge list.
    Square {
        file: PathBuf,
        /// Also write the square in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Invariants of S/I(G) as a CSV row.
    Invariants {
        file: PathBuf,
        /// Use the Hochster oracle even for chordal graphs.
        #[arg(long)]
        oracle: bool,
    },
    /// Tree family and linear-resolution verdict for I(T^2).
    Classify { file: PathBuf },
    /// Betti numbers of the edge ideal.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Hochster)]
        method: Method,
    },
    /// Harary-Ross conditions for being the square of a tree.
    RecognizeSquare { file: PathBuf },
    /// Write every tree on n vertices as an edge-list file.
    Enumerate {
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare reg and projdim of T and T^2 over all small trees.
    Scan {
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the regression suite.
    VerifyPaper {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Linear quotients: Betti numbers of I.
    Lq,
    /// Hochster's formula: graded Betti table of S/I.
    Hochster,
}

enum Failure {
    Verification(String),
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Square { file, dot } => {
            let sq = square(&read_graph(&file)?);
            print!("{}", write_edge_list(&sq));
            if let Some(path) = dot {
                fs::write(&path, to_dot(&sq, "square")).map_err(|e| io_error(&path, e))?;
            }
        }
        Command::Invariants { file, oracle } => {
            let g = read_graph(&file)?;
            let report = if !oracle && is_chordal(&g) && is_connected(&g) {
                chordal_report(&g)?
            } else {
                oracle_report(&g)?
            };
            println!("{REPORT_CSV_HEADER}");
            println!("{}", report.csv_row());
        }
        Command::Classify { file } => {
            let t = read_graph(&file)?;
            let class = classify_tree(&t)?;
            let linear = linear_resolution_by_classification(&t)?;
            let verdict = if linear { "YES" } else { "NO" };
            println!("{class}; linear resolution of I(T^2): {verdict}");
            println!("justification: {}", classification_justification(&class));
        }
        Command::Betti { file, method } => {
            let g = read_graph(&file)?;
            match method {
                Method::Lq => {
                    let ideal = edge_ideal(&g)?;
                    let Some(cert) = search_linear_quotients(&ideal)? else {
                        return Err(Failure::Verification(
                            "I(G) has no linear quotients (no linear resolution)".into(),
                        ));
                    };
                    print!("{}", cert.to_text());
                    let lq = betti_from_lq(&cert);
                    let betti: Vec<String> = lq.betti.iter().map(u64::to_string).collect();
                    println!("betti(I): {}", betti.join(" "));
                    println!("projdim(I): {}", lq.projdim);
                }
                Method::Hochster => {
                    let table = hochster_betti(&g)?;
                    print!("{}", table.to_macaulay());
                    let (reg, pd, depth) = reg_pd_depth(&table, g.n());
                    println!("reg(S/I) = {reg}, projdim(S/I) = {pd}, depth(S/I) = {depth}");
                }
            }
        }
        Command::RecognizeSquare { file } => {
            let g = read_graph(&file)?;
            match harary_ross_check(&g) {
                Err(Error::CompleteGraph) => {
                    println!("complete graph: the square of a star");
                }
                Err(e) => return Err(e.into()),
                Ok(report) => {
                    for c in &report.conditions {
                        println!("{c}");
                    }
                    if !report.b_union_reading {
                        println!("note: condition (b) fails under the union reading");
                    }
                    let verdict = if report.accepted() { "yes" } else { "no" };
                    println!("square of a non-star tree: {verdict}");
                }
            }
        }
        Command::Enumerate { n, out } => {
            let trees = enumerate_trees(n)?;
            fs::create_dir_all(&out).map_err(|e| io_error(&out, e))?;
            for (i, t) in trees.iter().enumerate() {
                let path = out.join(format!("tree_{n}_{:04}.edges", i + 1));
                let text = format!("# {}\n{}", t.code(), write_edge_list(t.graph()));
                fs::write(&path, text).map_err(|e| io_error(&path, e))?;
            }
            println!("{} trees on {n} vertices written to {}", trees.len(), out.display());
        }
        Command::Scan { n_max, out } => {
            let (rows, summary) = scan_conjectures(n_max)?;
            fs::write(&out, scan_csv(&rows)).map_err(|e| io_error(&out, e))?;
            print!("{}", summary.to_text());
        }
        Command::VerifyPaper { only } => {
            let ids: Vec<usize> = match only {
                Some(id) => vec![id],
                None => (1..=CRITERIA).collect(),
            };
            let mut failed = 0;
            for id in ids {
                let outcome = run_criterion(id)?;
                println!("{outcome}");
                failed += usize::from(!outcome.passed);
            }
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} criteria failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("sqtree: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("sqtree: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("sqtree: {msg}");
            ExitCode::from(3)
        }
    }
}

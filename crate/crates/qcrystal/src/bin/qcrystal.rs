//! Command-line surface: enumeration, crystal graphs, axiom checking,
//! polynomials, expansions, rectification, and the exhaustive selftest.
//!
//! Exit codes: 0 success, 1 domain error (bad input), 2 verification
//! failure (axiom violations, identity mismatches).

use clap::{Parser, Subcommand, ValueEnum};
use qcrystal::axioms::{check_queer_regular, check_regular};
use qcrystal::error::{Error, Result};
use qcrystal::graph::{
    graph_from_json, graph_to_dot, graph_to_json, shifted_crystal, young_crystal, ColoredDigraph,
};
use qcrystal::polynomials::{
    expand_p_in_schur, expand_product_in_p, poly_to_json, schur, schur_p, Expansion,
};
use qcrystal::rectification::{rect, rectify, to_symmetric, RectStep};
use qcrystal::tableaux::{
    enumerate_ssht, enumerate_ssyt, parse_parts, shifted_to_json, tableau_from_json,
    young_to_json, Partition, StrictPartition, Tableau,
};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "crystal structures on Young and shifted tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Young,
    Shifted,
}

#[derive(Subcommand)]
enum Command {
    /// List all semistandard tableaux of a shape
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// comma-separated parts, e.g. "3,1"; empty for the empty shape
        #[arg(long, default_value = "")]
        shape: String,
        /// largest letter value
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a crystal graph
    Crystal {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value = "")]
        shape: String,
        #[arg(long)]
        n: usize,
        /// include the 0-colored queer edges (shifted only)
        #[arg(long)]
        queer: bool,
        /// write DOT to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the local axioms on a graph (built from a shape, or JSON
    /// from --input)
    CheckAxioms {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        queer: bool,
        /// graph JSON file, or "-" for stdin
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Schur or Schur P polynomial of a shape
    Poly {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value = "")]
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a Schur P polynomial into Schur polynomials
    ExpandSchur {
        #[arg(long, default_value = "")]
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a product of Schur P polynomials in the Schur P basis
    Product {
        #[arg(long, default_value = "")]
        gamma: String,
        #[arg(long, default_value = "")]
        delta: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rectify a shifted tableau (JSON on --input or stdin) to a Young
    /// tableau
    Rectify {
        /// shifted-tableau JSON file, or "-" for stdin
        #[arg(long, default_value = "-")]
        input: String,
        /// print every slide step
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exhaustive verification suite
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reserves exit code 2; the contract here is 1 for any
            // user-input problem, 0 for --help/--version
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn format_expansion(terms: &[Expansion]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|e| {
            let shape = format!(
                "({})",
                e.shape
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            if e.coef == "1" {
                shape
            } else {
                format!("{}*{}", e.coef, shape)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn build_graph(kind: Kind, shape: &str, n: usize, queer: bool) -> Result<ColoredDigraph> {
    if n < 1 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let parts = parse_parts(shape)?;
    match kind {
        Kind::Young => {
            if queer {
                return Err(Error::Parse("--queer requires --kind shifted".into()));
            }
            young_crystal(&Partition::new(parts)?, n)
        }
        Kind::Shifted => shifted_crystal(&StrictPartition::new(parts)?, n, queer),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate {
            kind,
            shape,
            n,
            json,
            out,
        } => {
            if n < 1 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            let parts = parse_parts(&shape)?;
            let mut text = String::new();
            match kind {
                Kind::Young => {
                    let ts = enumerate_ssyt(&Partition::new(parts)?, n);
                    if json {
                        let docs: Vec<_> = ts.iter().map(young_to_json).collect();
                        text = serde_json::to_string_pretty(&docs)? + "\n";
                    } else {
                        for t in &ts {
                            text.push_str(&t.id());
                            text.push('\n');
                        }
                        text.push_str(&format!("total: {}\n", ts.len()));
                    }
                }
                Kind::Shifted => {
                    let ts = enumerate_ssht(&StrictPartition::new(parts)?, n);
                    if json {
                        let docs: Vec<_> = ts.iter().map(shifted_to_json).collect();
                        text = serde_json::to_string_pretty(&docs)? + "\n";
                    } else {
                        for t in &ts {
                            text.push_str(&t.id());
                            text.push('\n');
                        }
                        text.push_str(&format!("total: {}\n", ts.len()));
                    }
                }
            }
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Crystal {
            kind,
            shape,
            n,
            queer,
            dot,
            out,
        } => {
            let g = build_graph(kind, &shape, n, queer)?;
            if let Some(path) = dot {
                std::fs::write(path, graph_to_dot(&g))?;
            }
            let text = serde_json::to_string_pretty(&graph_to_json(&g))? + "\n";
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckAxioms {
            kind,
            shape,
            n,
            queer,
            input,
            json,
            out,
        } => {
            let (g, queer_check) = match input {
                Some(path) => {
                    let value: serde_json::Value = serde_json::from_str(&read_input(&path)?)?;
                    let g = graph_from_json(&value)?;
                    let q = g.is_queer();
                    (g, q)
                }
                None => {
                    let kind = kind.ok_or_else(|| {
                        Error::Parse("either --input or --kind/--shape/--n required".into())
                    })?;
                    let shape = shape.unwrap_or_default();
                    let n =
                        n.ok_or_else(|| Error::Parse("--n required without --input".into()))?;
                    (build_graph(kind, &shape, n, queer)?, queer)
                }
            };
            let report = if queer_check {
                check_queer_regular(&g)
            } else {
                check_regular(&g)
            };
            let text = if json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                format!("{report}")
            };
            emit(&text, &out)?;
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Poly {
            kind,
            shape,
            n,
            json,
            out,
        } => {
            if n < 1 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            let parts = parse_parts(&shape)?;
            let p = match kind {
                Kind::Young => schur(&Partition::new(parts)?, n),
                Kind::Shifted => schur_p(&StrictPartition::new(parts)?, n),
            };
            let text = if json {
                serde_json::to_string_pretty(&poly_to_json(&p))? + "\n"
            } else {
                format!("{p}\n")
            };
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExpandSchur {
            shape,
            n,
            json,
            out,
        } => {
            if n < 1 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            let gamma = StrictPartition::new(parse_parts(&shape)?)?;
            match expand_p_in_schur(&gamma, n) {
                Ok(terms) => {
                    let text = if json {
                        serde_json::to_string_pretty(&terms)? + "\n"
                    } else {
                        format_expansion(&terms) + "\n"
                    };
                    emit(&text, &out)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Verification(msg)) => {
                    eprintln!("verification failure: {msg}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e),
            }
        }
        Command::Product {
            gamma,
            delta,
            json,
            out,
        } => {
            let g = StrictPartition::new(parse_parts(&gamma)?)?;
            let d = StrictPartition::new(parse_parts(&delta)?)?;
            match expand_product_in_p(&g, &d, true) {
                Ok(terms) => {
                    let text = if json {
                        serde_json::to_string_pretty(&terms)? + "\n"
                    } else {
                        format_expansion(&terms) + "\n"
                    };
                    emit(&text, &out)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Verification(msg)) => {
                    eprintln!("verification failure: {msg}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e),
            }
        }
        Command::Rectify { input, trace, out } => {
            let value: serde_json::Value = serde_json::from_str(&read_input(&input)?)?;
            let t = match tableau_from_json(&value)? {
                Tableau::Shifted(t) => t,
                Tableau::Young(_) => {
                    return Err(Error::Parse("rectify takes a shifted tableau".into()))
                }
            };
            let y = if trace {
                let mut steps: Vec<RectStep> = Vec::new();
                let y = rectify(to_symmetric(&t).filling(), Some(&mut steps))?;
                for s in &steps {
                    eprintln!("[{},{}] {}", s.hole[0], s.hole[1], s.action);
                    eprint!("{}", s.state);
                }
                y
            } else {
                rect(&t)?
            };
            let text = serde_json::to_string_pretty(&young_to_json(&y))? + "\n";
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { max_size, max_n } => {
            if let Ok(threads) = std::env::var("QCRYSTAL_THREADS") {
                let threads: usize = threads
                    .parse()
                    .map_err(|_| Error::Parse("QCRYSTAL_THREADS must be an integer".into()))?;
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global()
                    .ok();
            }
            let mut failed = false;
            for (name, outcome) in qcrystal::verify::selftest(max_size, max_n) {
                match outcome {
                    Ok(stats) => println!("PASS {name} ({stats})"),
                    Err(e) => {
                        failed = true;
                        println!("FAIL {name}: {e}");
                    }
                }
            }
            Ok(if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

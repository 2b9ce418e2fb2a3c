use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ppl_core::tree::DEFAULT_MAX_NODES;
use ppl_core::{
    evaluation_tree_bounded, parse_formula, parse_kb, Alg, AtomLimit, Diagnostic, Formula, Goal, History,
    PlausibleDescription, ProofValue, Prover, TruthValue,
};

mod render;

const PROVED: u8 = 0;
const NOT_PROVED: u8 = 1;
const USAGE: u8 = 2;

/// Propositional plausible logic: check knowledge bases, query formulas and
/// export evaluation trees.
#[derive(Parser, Debug)]
#[command(name = "ppl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a knowledge base and print its axioms, rules and priority
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = AtomLimit::DEFAULT)]
        max_atoms: usize,
    },
    /// Prove a formula with one algorithm, or with every algorithm
    Query {
        file: PathBuf,
        /// phi, pi, psi, beta, beta-p, psi-p, pi-p or all
        #[arg(long)]
        alg: AlgChoice,
        formula: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = AtomLimit::DEFAULT)]
        max_atoms: usize,
    },
    /// Export the evaluation tree of a formula
    Tree {
        file: PathBuf,
        #[arg(long)]
        alg: Alg,
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = AtomLimit::DEFAULT)]
        max_atoms: usize,
        /// Refuse to build trees with more nodes than this
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
    },
}

#[derive(Debug, Clone, Copy)]
enum AlgChoice {
    One(Alg),
    All,
}

impl std::str::FromStr for AlgChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(AlgChoice::All);
        }
        s.parse().map(AlgChoice::One).map_err(|e| format!("{e}"))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// A failure already reported to stderr.
struct Reported;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file, max_atoms } => check(&file, limit(max_atoms)),
        Command::Query {
            file,
            alg,
            formula,
            json,
            max_atoms,
        } => query(&file, alg, &formula, json, limit(max_atoms)),
        Command::Tree {
            file,
            alg,
            formula,
            format,
            max_atoms,
            max_nodes,
        } => tree(&file, alg, &formula, format, limit(max_atoms), max_nodes),
    };
    ExitCode::from(result.unwrap_or(USAGE))
}

fn limit(n: usize) -> AtomLimit {
    if n > AtomLimit::HARD_MAX {
        eprintln!("warning: --max-atoms {n} lowered to {}", AtomLimit::HARD_MAX);
    }
    AtomLimit::new(n)
}

fn report(origin: &str, diags: &[Diagnostic]) -> Reported {
    for d in diags {
        eprintln!("{origin}:{d}");
    }
    Reported
}

fn load(path: &Path, limit: AtomLimit) -> Result<PlausibleDescription, Reported> {
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("{origin}: cannot read: {e}");
        Reported
    })?;
    let kb = parse_kb(&text).map_err(|d| report(&origin, &d))?;
    kb.describe(limit).map_err(|d| report(&origin, &d))
}

fn goal(text: &str) -> Result<Formula, Reported> {
    parse_formula(text).map_err(|d| report("<formula>", &[d]))
}

fn check(path: &Path, limit: AtomLimit) -> Result<u8, Reported> {
    let desc = load(path, limit)?;
    print!("{}", render::summary(&desc));
    Ok(PROVED)
}

#[derive(Debug, Clone, Copy)]
struct Row {
    alg: Alg,
    value: ProofValue,
    truth: TruthValue,
}

fn evaluate(desc: &PlausibleDescription, alg: Alg, f: &Formula) -> Result<Row, Reported> {
    let prover = Prover::new(desc);
    let run = || -> Result<Row, ppl_core::ProofError> {
        Ok(Row {
            alg,
            value: prover.prove(alg, &History::new(), f)?,
            truth: prover.truth_value(alg, f)?,
        })
    };
    run().map_err(|e| {
        eprintln!("error: {e}");
        Reported
    })
}

fn query(path: &Path, choice: AlgChoice, text: &str, as_json: bool, limit: AtomLimit) -> Result<u8, Reported> {
    let desc = load(path, limit)?;
    let f = goal(text)?;
    let rows: Vec<Row> = match choice {
        AlgChoice::One(alg) => vec![evaluate(&desc, alg, &f)?],
        AlgChoice::All => thread::scope(|s| {
            let handles: Vec<_> = Alg::ALL
                .iter()
                .map(|&alg| {
                    let (desc, f) = (&desc, &f);
                    s.spawn(move || evaluate(desc, alg, f))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("query thread"))
                .collect::<Result<_, _>>()
        })?,
    };

    if as_json {
        let results: Vec<_> = rows
            .iter()
            .map(|r| json!({"alg": r.alg, "proofValue": r.value, "truthValue": r.truth}))
            .collect();
        let doc = json!({"formula": f.to_string(), "results": results});
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("formula: {f}");
        println!("{:<8} {:>3}  V", "alg", "P");
        for r in &rows {
            println!("{:<8} {:>3}  {}", r.alg.tag(), r.value.to_string(), r.truth);
        }
    }

    Ok(match choice {
        AlgChoice::One(_) if !rows[0].value.is_plus() => NOT_PROVED,
        _ => PROVED,
    })
}

fn tree(path: &Path, alg: Alg, text: &str, format: Format, limit: AtomLimit, max_nodes: usize) -> Result<u8, Reported> {
    let desc = load(path, limit)?;
    let f = goal(text)?;
    let root = evaluation_tree_bounded(&desc, alg, &History::new(), &Goal::Formula(f), max_nodes).map_err(|e| {
        eprintln!("error: {e}");
        Reported
    })?;
    match format {
        Format::Json => println!("{}", root.to_json_string()),
        Format::Dot => print!("{}", root.to_dot()),
    }
    Ok(if root.value.is_plus() { PROVED } else { NOT_PROVED })
}

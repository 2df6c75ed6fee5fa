use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bmetric::description::{parse_manifold, ManifoldDescription};
use bmetric::examples::sasaki5;
use bmetric::predicates::Witness;
use bmetric::ratlin::{parse_rational, Rational};
use bmetric::report::{run_analysis, AnalysisOptions, Potential, PREDICATE_NAMES};
use bmetric::structure::validate_structure;
use bmetric::Error;

#[derive(Parser)]
#[command(name = "bmetric", version, about = "Exact analysis of left-invariant almost contact B-metric structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(clap::Args)]
struct PotentialArgs {
    /// Vertical potential v = k xi (repeatable)
    #[arg(long = "potential", value_name = "K", value_parser = rational, allow_hyphen_values = true)]
    potential: Vec<Rational>,
    /// Arbitrary constant potential, comma-separated components (repeatable)
    #[arg(long = "potential-vector", value_name = "V", value_parser = vector, allow_hyphen_values = true)]
    potential_vector: Vec<Vec<Rational>>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl PotentialArgs {
    fn options(&self) -> AnalysisOptions {
        let mut potentials: Vec<Potential> = self.potential.iter().cloned().map(Potential::Vertical).collect();
        potentials.extend(self.potential_vector.iter().cloned().map(Potential::Vector));
        if potentials.is_empty() {
            AnalysisOptions::default()
        } else {
            AnalysisOptions { potentials }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the structure axioms of a description file
    Validate { file: PathBuf },
    /// Run the full analysis
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        args: PotentialArgs,
    },
    /// Built-in example family
    Example {
        #[command(subcommand)]
        which: ExampleKind,
    },
    /// Evaluate a single predicate; exit status 0 when it holds
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(PREDICATE_NAMES))]
        predicate: String,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExampleKind {
    /// The five-dimensional Sasaki-like family with parameters p, q
    Sasaki5 {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Rational,
        /// Print the description file (default)
        #[arg(long, conflicts_with = "analyze")]
        emit: bool,
        /// Analyze instead of printing the description
        #[arg(long)]
        analyze: bool,
        #[command(flatten)]
        args: PotentialArgs,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).map_err(|e| e.to_string())
}

fn vector(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(rational).collect()
}

fn load(path: &Path) -> Result<ManifoldDescription, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_manifold(&text)
}

fn analyze(desc: &ManifoldDescription, args: &PotentialArgs) -> Result<ExitCode, Error> {
    let report = run_analysis(desc, &args.options())?;
    match args.format {
        Format::Text => print!("{}", report.text()),
        Format::Machine => print!("{}", report.machine()),
    }
    Ok(status(report.all_checks_passed()))
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { file } => {
            let desc = load(&file)?;
            let verdict = validate_structure(&desc.to_structure()?);
            for c in &verdict.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                match &c.witness {
                    Some(w) => println!("[{mark}] {} at {w:?}", c.name),
                    None => println!("[{mark}] {}", c.name),
                }
            }
            Ok(status(verdict.is_valid()))
        }
        Command::Analyze { file, args } => analyze(&load(&file)?, &args),
        Command::Example {
            which: ExampleKind::Sasaki5 { p, q, analyze: run_it, args, .. },
        } => {
            let desc = sasaki5(&p, &q);
            if run_it {
                analyze(&desc, &args)
            } else {
                print!("{}", desc.serialize());
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Check { predicate, file } => {
            let report = run_analysis(&load(&file)?, &AnalysisOptions::default())?;
            let Some(analysis) = &report.analysis else {
                eprintln!("structure invalid; predicates not evaluated");
                for c in report.structure.failures() {
                    eprintln!("  failed axiom: {}", c.name);
                }
                return Ok(ExitCode::from(1));
            };
            if analysis.not_applicable.contains(&predicate) {
                println!("{predicate}: not applicable (vanishing Ricci tensor)");
                return Ok(ExitCode::from(1));
            }
            let v = report.predicate(&predicate).expect("every listed predicate is evaluated");
            println!("{predicate}: {}", v.holds);
            match &v.witness {
                Some(Witness::Indices(ix)) => println!("witness: {ix:?}"),
                Some(Witness::Forms(f)) => println!("system solvable: {}", f.solvable()),
                None => {}
            }
            Ok(status(v.holds))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `halin`: generate, color, verify and benchmark Halin graph packings.
//!
//! Exit status is 0 on success, 1 for a negative answer (violations,
//! infeasible, degree precondition) and 2 for usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use halin_bench::{
    doubling_ratios, emit_csv, fit_linear, run_scaling, DEFAULT_REPEATS, DEFAULT_SIZES,
};
use halin_core::colorer::{run_pipeline, ColorError};
use halin_core::format::{parse_coloring, parse_graph, write_coloring, write_graph};
use halin_core::generator::{gen_cubic_caterpillar, gen_random_halin, gen_wheel, GeneratorConfig};
use halin_core::oracle::{s_packing_colorable_with_limit, witness_labels, DEFAULT_MAX_VERTICES};
use halin_core::verifier::PackingSequence;
use halin_core::{verify_packing, ClassAssignment, HalinGraph, VertexId};

#[derive(Debug, Parser)]
#[command(
    name = "halin",
    version,
    about = "(1,1,2,2,2)-packing colorings of Halin graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Random leaf-expansion tree
    Random,
    /// Hub joined to a rim of `--leaves` vertices
    Wheel,
    /// Cubic graph over a caterpillar tree
    CubicCaterpillar,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a Halin graph in the graph text format
    Generate {
        /// Number of cycle vertices
        #[arg(long, default_value_t = 16)]
        leaves: usize,
        /// Upper bound on the maximum degree (random family only)
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FamilyArg::Random)]
        family: FamilyArg,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Color a graph with colors 1, 1p, 2a, 2b, 2c
    Color {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        /// Print pipeline stages and repairs to standard error
        #[arg(long)]
        trace: bool,
    },
    /// Check a coloring against per-class distance constraints
    Verify {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        #[arg(short, long)]
        coloring: PathBuf,
        /// `name:radius` pairs, comma-separated
        #[arg(long, default_value = ClassAssignment::<String>::STANDARD_SPEC)]
        classes: String,
    },
    /// Decide S-packing colorability by exhaustive search
    Oracle {
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        /// Radii, comma-separated and non-decreasing
        #[arg(long, default_value = "1,1,2,2,2")]
        sequence: String,
        /// Write a witness coloring here when feasible
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Time the colorer over growing random instances and emit CSV
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SIZES)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_REPEATS)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Negative(String),
    /// Exit 2.
    Input(String),
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if is_stdio(path) {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Fails early when the output file's directory does not exist.
fn check_output(path: &Path) -> CmdResult {
    if is_stdio(path) {
        return Ok(());
    }
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => Err(Failure::Input(format!(
            "{}: directory does not exist",
            path.display()
        ))),
        _ => Ok(()),
    }
}

fn write_output(path: &Path, text: &str) -> CmdResult {
    let result = if is_stdio(path) {
        io::stdout().lock().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    };
    result.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<HalinGraph, Failure> {
    parse_graph(&read_input(path)?).map_err(Failure::input)
}

fn generate(
    leaves: usize,
    max_degree: usize,
    seed: u64,
    family: FamilyArg,
    output: &Path,
) -> CmdResult {
    check_output(output)?;
    let g = match family {
        FamilyArg::Random => {
            gen_random_halin(&GeneratorConfig::new(leaves, seed).with_max_degree(max_degree))
                .map_err(Failure::input)?
        }
        FamilyArg::Wheel => gen_wheel(leaves).map_err(Failure::input)?,
        FamilyArg::CubicCaterpillar => {
            if leaves < 3 {
                return Err(Failure::Input(format!(
                    "a caterpillar needs at least 3 leaves, got {leaves}"
                )));
            }
            gen_cubic_caterpillar((leaves - 2).max(1)).map_err(Failure::input)?
        }
    };
    eprintln!("n_total={} max_degree={}", g.n_total(), g.max_degree());
    write_output(output, &write_graph(&g))
}

fn color(input: &Path, output: &Path, trace: bool) -> CmdResult {
    check_output(output)?;
    let g = read_graph(input)?;
    let run = run_pipeline(&g, trace).map_err(|e| match e {
        ColorError::MaxDegreeExceeded(_) => Failure::Negative(e.to_string()),
        other => Failure::input(other),
    })?;
    for event in &run.trace {
        eprintln!("{event}");
    }
    if let Some(v) = run.violations.first() {
        return Err(Failure::Negative(
            ColorError::InvariantViolated(v.clone()).to_string(),
        ));
    }
    write_output(output, &write_coloring(run.coloring.iter()))
}

fn verify(input: &Path, coloring: &Path, classes: &str) -> CmdResult {
    if is_stdio(input) && is_stdio(coloring) {
        return Err(Failure::Input(
            "graph and coloring cannot both come from standard input".into(),
        ));
    }
    let classes: ClassAssignment<String> = classes.parse().map_err(Failure::input)?;
    let g = read_graph(input)?;
    let labeled = parse_coloring(&read_input(coloring)?).map_err(Failure::input)?;
    let assignment = labeled.to_assignment(g.n_total()).map_err(Failure::input)?;
    let report = verify_packing(&g, &assignment, &classes).map_err(Failure::input)?;
    let mut out = String::new();
    for v in &report.violations {
        out.push_str(&format!("{v}\n"));
    }
    write_output(Path::new("-"), &out)?;
    if report.ok() {
        eprintln!("ok: {} vertices, no violations", g.n_total());
        Ok(())
    } else {
        Err(Failure::Negative(format!(
            "{} violations",
            report.violations.len()
        )))
    }
}

fn oracle(input: &Path, sequence: &str, witness: Option<&Path>, max_vertices: usize) -> CmdResult {
    let seq: PackingSequence = sequence.parse().map_err(Failure::input)?;
    if let Some(path) = witness {
        check_output(path)?;
    }
    let g = read_graph(input)?;
    let result = s_packing_colorable_with_limit(&g, &seq, max_vertices).map_err(Failure::input)?;
    if !result.feasible {
        println!("INFEASIBLE");
        return Err(Failure::Negative(format!(
            "no ({seq})-packing coloring exists"
        )));
    }
    println!("FEASIBLE");
    if let (Some(path), Some(w)) = (witness, result.witness.as_ref()) {
        let labels = witness_labels(w, &seq);
        let entries = labels
            .iter()
            .enumerate()
            .map(|(v, l)| (VertexId::from(v), l));
        write_output(path, &write_coloring(entries))?;
    }
    Ok(())
}

fn bench(sizes: &[usize], repeats: usize, seed: u64, output: &Path) -> CmdResult {
    check_output(output)?;
    let records = run_scaling(sizes, repeats, seed).map_err(Failure::input)?;
    write_output(output, &emit_csv(&records))?;
    if records.len() >= 2 {
        let fit = fit_linear(&records);
        let ratios: Vec<String> = doubling_ratios(&records)
            .iter()
            .map(|r| format!("{r:.2}"))
            .collect();
        eprintln!("r_squared={:.4} ratios={}", fit.r_squared, ratios.join(","));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate {
            leaves,
            max_degree,
            seed,
            family,
            output,
        } => generate(*leaves, *max_degree, *seed, *family, output),
        Command::Color {
            input,
            output,
            trace,
        } => color(input, output, *trace),
        Command::Verify {
            input,
            coloring,
            classes,
        } => verify(input, coloring, classes),
        Command::Oracle {
            input,
            sequence,
            witness,
            max_vertices,
        } => oracle(input, sequence, witness.as_deref(), *max_vertices),
        Command::Bench {
            sizes,
            repeats,
            seed,
            output,
        } => bench(sizes, *repeats, *seed, output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

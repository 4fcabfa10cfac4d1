//! `randic-energy`: descriptor reports, verification and exhaustive sweeps
//! from the command line.
//!
//! Exit codes: 0 success, 1 mathematical violation, 2 input error,
//! 3 numerical error.

use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use randic_energy::descriptors::DescriptorError;
use randic_energy::enumerate::{sweep_parallel, EnumerateError, MAX_ENUMERATION_ORDER};
use randic_energy::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph};
use randic_energy::json::format_f64;
use randic_energy::verify::{verify_graph, Tolerances};

#[derive(Parser, Debug)]
#[command(name = "randic-energy", version, about = "Graph energy and Randić index descriptors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a descriptor report for every input graph.
    Report(GraphArgs),
    /// Check every inequality on every input graph; exit 1 on a violation.
    Verify(GraphArgs),
    /// Run all checks over every labeled graph on n vertices.
    Sweep(SweepArgs),
    /// Convert between graph6 and the edge-list format.
    Convert(InputArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// File path, '-' for standard input, or an inline graph6 string.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Args, Debug)]
struct ToleranceArgs {
    /// Slack allowed on inequality checks.
    #[arg(long, default_value_t = Tolerances::DEFAULT_SLACK)]
    tol_slack: f64,
    /// Band within which E = 2R (and E = n) counts as equality.
    #[arg(long, default_value_t = Tolerances::DEFAULT_EQUALITY)]
    tol_equality: f64,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Vertex count.
    #[arg(long = "n")]
    n: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "RANDIC_ENERGY_JOBS")]
    jobs: Option<usize>,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Debug)]
enum Failure {
    Violation,
    Input(anyhow::Error),
    Numerical(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation => 1,
            Failure::Input(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl From<DescriptorError> for Failure {
    fn from(e: DescriptorError) -> Self {
        Failure::Numerical(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report(args) => cmd_report(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Convert(args) => cmd_convert(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Violation => {}
                Failure::Input(e) => eprintln!("error: {e:#}"),
                Failure::Numerical(e) => eprintln!("numerical error: {e:#}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn tolerances(args: &ToleranceArgs) -> Result<Tolerances, Failure> {
    for (name, value) in [("--tol-slack", args.tol_slack), ("--tol-equality", args.tol_equality)] {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Failure::Input(anyhow!("{name} must be positive, got {value}")));
        }
    }
    Ok(Tolerances {
        slack: args.tol_slack,
        equality: args.tol_equality,
    })
}

fn read_input(input: &str, format: Format) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(anyhow!("reading standard input: {e}")))?;
        return Ok(text);
    }
    let path = Path::new(input);
    if path.exists() || format == Format::Edgelist {
        return fs::read_to_string(path)
            .map_err(|e| Failure::Input(anyhow!("reading {input}: {e}")));
    }
    // Not a file: treat the argument itself as a graph6 string.
    Ok(input.to_string())
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn resolve_format(text: &str, format: Format) -> Format {
    match format {
        Format::Auto => match data_lines(text).next() {
            Some((_, line)) if line.bytes().all(|b| b.is_ascii_digit()) => Format::Edgelist,
            _ => Format::Graph6,
        },
        other => other,
    }
}

/// Parses the input into graphs; an input without data lines yields none.
fn load_graphs(text: &str, format: Format) -> Result<(Format, Vec<Graph>), Failure> {
    let format = resolve_format(text, format);
    if data_lines(text).next().is_none() {
        return Ok((format, Vec::new()));
    }
    let graphs = match format {
        Format::Edgelist => {
            vec![parse_edge_list(text).map_err(|e| Failure::Input(e.into()))?]
        }
        _ => data_lines(text)
            .map(|(line, s)| {
                parse_graph6(s).map_err(|e| Failure::Input(anyhow!("line {line}: {e}")))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok((format, graphs))
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map_or_else(|| "-".to_string(), format_f64)
}

fn cmd_report(args: &GraphArgs) -> Result<(), Failure> {
    let tol = tolerances(&args.tolerances)?;
    let text = read_input(&args.input.input, args.input.format)?;
    let (_, graphs) = load_graphs(&text, args.input.format)?;
    if args.output == Output::Table && !graphs.is_empty() {
        println!(
            "{:<14} {:>3} {:>4} {:>20} {:>20} {:>24} {:>3} {:>15} {:>8} structure",
            "graph6", "n", "m", "energy", "randic", "gap", "nu", "class", "equality"
        );
    }
    for g in &graphs {
        let report = verify_graph(g, tol)?.report;
        match args.output {
            Output::Json => println!("{}", report.to_json()),
            Output::Table => println!(
                "{:<14} {:>3} {:>4} {:>20} {:>20} {:>24} {:>3} {:>15} {:>8} {}",
                to_graph6(g),
                g.order(),
                g.size(),
                format_f64(report.energy),
                format_f64(report.randic),
                format_f64(report.gap),
                report.matching_size,
                report.energy_class.to_string(),
                report.numeric_equality,
                report.structure.label()
            ),
        }
    }
    Ok(())
}

fn cmd_verify(args: &GraphArgs) -> Result<(), Failure> {
    let tol = tolerances(&args.tolerances)?;
    let text = read_input(&args.input.input, args.input.format)?;
    let (_, graphs) = load_graphs(&text, args.input.format)?;
    let mut failed = false;
    for g in &graphs {
        let id = to_graph6(g);
        let verification = verify_graph(g, tol)?;
        for v in &verification.violations {
            eprintln!("{id}: {v}");
        }
        let passed = verification.violations.is_empty();
        failed |= !passed;
        let report = &verification.report;
        let case = if report.numeric_equality {
            "equality"
        } else {
            "strict"
        };
        match args.output {
            Output::Json => println!(
                "{{\"graph6\":{},\"passed\":{passed},\"case\":\"{case}\",\"gap\":{},\"violations\":{}}}",
                serde_json::to_string(&id).expect("string serializes"),
                format_f64(report.gap),
                verification.violations.len()
            ),
            Output::Table => println!(
                "{id}\t{}\t{case}\tgap {}\tmin E(u)E(v) {}",
                if passed { "ok" } else { "VIOLATION" },
                format_f64(report.gap),
                fmt_opt(report.vertex_product_min)
            ),
        }
    }
    if failed {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let tol = tolerances(&args.tolerances)?;
    if args.n > MAX_ENUMERATION_ORDER {
        return Err(Failure::Input(anyhow!(
            "--n {} exceeds the enumeration cap of {MAX_ENUMERATION_ORDER}",
            args.n
        )));
    }
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(Failure::Input(anyhow!("--jobs must be at least 1")));
    }
    let summary = sweep_parallel(args.n, tol, jobs).map_err(|e| match e {
        EnumerateError::Report { .. } => Failure::Numerical(e.into()),
        other => Failure::Input(other.into()),
    })?;
    match args.output {
        Output::Json => println!("{}", summary.to_json()),
        Output::Table => {
            let value: serde_json::Value =
                serde_json::from_str(&summary.to_json()).expect("summary JSON parses");
            for (key, v) in value.as_object().expect("summary is an object") {
                println!("{key:<24} {v}");
            }
        }
    }
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn cmd_convert(args: &InputArgs) -> Result<(), Failure> {
    let text = read_input(&args.input, args.format)?;
    let (format, graphs) = load_graphs(&text, args.format)?;
    if graphs.is_empty() {
        return Err(Failure::Input(anyhow!("no graph in input")));
    }
    match format {
        Format::Edgelist => {
            for g in &graphs {
                println!("{}", to_graph6(g));
            }
        }
        _ => {
            let blocks: Vec<String> = graphs.iter().map(to_edge_list).collect();
            print!("{}", blocks.join("\n"));
        }
    }
    Ok(())
}

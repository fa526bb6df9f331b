use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quickswap::bench::{run_bench, write_csv, BenchConfig};
use quickswap::instances::{parse_caps, InstanceSpec};
use quickswap::verify::{run_verify, tight_report};
use quickswap::{AlgorithmKind, Error, Result};

#[derive(Parser)]
#[command(
    name = "quickswap",
    version,
    about = "Submodular maximization benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InstanceKind {
    Snap,
    Er,
    Sbm,
    Tight,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    instance: InstanceKind,
    /// Edge list for `--instance snap`.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Node label file for `--instance snap`.
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "quickswap,ck,lazy-greedy,threshold-greedy")]
    algs: String,
    /// Per-part caps, e.g. `1-15` or `1,2,5`. Defaults to the usual sweep
    /// of the instance kind.
    #[arg(long)]
    caps: Option<String>,
    #[arg(long, default_value_t = 5)]
    orderings: usize,
    /// Seeds both graph generation and orderings.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tight-family parameter for `--instance tight`.
    #[arg(long, default_value_t = 10)]
    m: u32,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill the wall_ms column (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run algorithms over a cap sweep and write CSV.
    Bench(BenchArgs),
    /// Run QuickSwap on the tight instance and check the exact ratio.
    Tight {
        #[arg(long, default_value_t = 10)]
        m: u32,
    },
    /// Check the lemma inequalities and ratios on random small instances.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also print the lemma slacks on the tight instance with this `m`.
        #[arg(long)]
        m: Option<u32>,
    },
}

fn parse_algorithms(text: &str) -> Result<Vec<AlgorithmKind>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn bench(args: BenchArgs) -> Result<()> {
    let BenchArgs {
        instance,
        edges,
        labels,
        algs,
        caps,
        orderings,
        seed,
        m,
        out,
        timing,
    } = args;
    let (spec, default_caps) = match instance {
        InstanceKind::Snap => {
            let edges = edges
                .ok_or_else(|| Error::InvalidParameter("--instance snap needs --edges".into()))?;
            (InstanceSpec::Snap { edges, labels }, "1-15")
        }
        InstanceKind::Er => (InstanceSpec::paper_erdos_renyi(seed), "1-25"),
        InstanceKind::Sbm => (InstanceSpec::paper_sbm(seed), "1-12"),
        InstanceKind::Tight => (InstanceSpec::Tight { m }, "1"),
    };
    let algorithms = parse_algorithms(&algs)?;
    let caps = parse_caps(caps.as_deref().unwrap_or(default_caps))?;
    let base = spec.build()?;
    let mut config = BenchConfig::new(algorithms, caps, seed);
    config.orderings = orderings;
    config.timing = timing;
    let records = run_bench(&base, &config)?;
    match out {
        Some(path) => write_csv(&records, BufWriter::new(File::create(path)?)),
        None => write_csv(&records, io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Bench(args) => {
            bench(args)?;
            Ok(true)
        }
        Command::Tight { m } => {
            let report = tight_report(m)?;
            println!("{report}");
            if !report.exact() {
                eprintln!("ratio {} differs from {}", report.ratio, report.expected);
            }
            Ok(report.exact())
        }
        Command::Verify { trials, seed, m } => {
            let mut ok = true;
            if let Some(m) = m {
                let t = tight_report(m)?;
                println!(
                    "tight m={m}: share slack {}, union slack {}",
                    t.lemmas.share_slack, t.lemmas.union_slack
                );
                ok &= t.lemmas.all_hold();
            }
            let report = run_verify(trials, seed)?;
            for v in &report.violations {
                println!("violation: {v}");
            }
            println!(
                "{} trials, seed {}: {} violations",
                report.trials,
                report.seed,
                report.violations.len()
            );
            Ok(ok && report.passed())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let _ = writeln!(io::stderr(), "error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::UnknownAlgorithm(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

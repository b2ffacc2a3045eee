use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use vnc_core::constructions::foster::DATA_DIR_ENV;
use vnc_core::verify::{export, run, theorem_suite, CheckKind, ExportFormat, Job, RunConfig, Target};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Theorem61,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Certify,
    SRegularity,
    IsomorphismClass,
    Quotient,
}

/// Builds and certifies cubic vertex-transitive graphs.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// NC0..NC8, NC9 (with --p), F024, F060, F084, F204, X<n>, petersen, or an edge-list path.
    #[arg(long = "graph")]
    graphs: Vec<String>,
    /// Primes for NC9 and for the suite; repeatable or comma-separated.
    #[arg(long = "p", value_delimiter = ',')]
    primes: Vec<usize>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Checks to run on each --graph.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "certify")]
    checks: Vec<CheckArg>,
    /// Write each --graph to this directory.
    #[arg(long, requires = "format")]
    export: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Jobs run concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the JSON run summary here.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    match real_main(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn real_main(args: Args) -> vnc_core::Result<bool> {
    let data_dir = std::env::var_os(DATA_DIR_ENV).map(PathBuf::from);
    let mut targets = Vec::new();
    for name in &args.graphs {
        targets.extend(Target::parse(name, &args.primes)?);
    }
    if let (Some(dir), Some(format)) = (&args.export, args.format) {
        let format = match format {
            Format::Edges => ExportFormat::Edges,
            Format::Dot => ExportFormat::Dot,
        };
        for path in export(&targets, dir, format, data_dir.as_deref())? {
            println!("wrote {}", path.display());
        }
    }

    let (mut jobs, notes) = match args.suite {
        Some(Suite::Theorem61) => {
            let primes = if args.primes.is_empty() { vec![5, 7, 17] } else { args.primes.clone() };
            theorem_suite(&primes)?
        }
        None => (Vec::new(), Vec::new()),
    };
    let kinds: Vec<CheckKind> = args
        .checks
        .iter()
        .map(|c| match c {
            CheckArg::Certify => CheckKind::Certify,
            CheckArg::SRegularity => CheckKind::SRegularity,
            CheckArg::IsomorphismClass => CheckKind::IsomorphismClass,
            CheckArg::Quotient => CheckKind::Quotient,
        })
        .collect();
    let per_graph: Vec<CheckKind> = kinds.iter().copied().filter(|k| *k != CheckKind::IsomorphismClass).collect();
    if !per_graph.is_empty() {
        jobs.extend(targets.iter().map(|t| Job::Graph {
            target: t.clone(),
            checks: per_graph.clone(),
        }));
    }
    if kinds.contains(&CheckKind::IsomorphismClass) && !targets.is_empty() {
        jobs.push(Job::IsomorphismClasses {
            label: "of --graph targets".into(),
            targets: targets.clone(),
            expected: None,
        });
    }
    if jobs.is_empty() && args.export.is_none() {
        return Err(vnc_core::Error::InvalidParameter(
            "nothing to do: give --graph or --suite".into(),
        ));
    }

    let summary = run(&jobs, notes, &RunConfig { jobs: args.jobs, data_dir });
    print!("{}", summary.table());
    if let Some(path) = &args.report {
        std::fs::write(path, summary.to_json()).map_err(|e| vnc_core::Error::Io {
            path: path.clone(),
            source: e,
        })?;
    }
    Ok(summary.passed)
}

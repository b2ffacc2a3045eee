//! Runs the classification battery for a few primes on four threads.
use vnc_core::verify::{run, theorem_suite, RunConfig};

fn main() -> vnc_core::Result<()> {
    let (jobs, notes) = theorem_suite(&[3, 5, 7, 13, 17])?;
    let summary = run(&jobs, notes, &RunConfig { jobs: 4, data_dir: None });
    print!("{}", summary.table());
    std::process::exit(if summary.passed { 0 } else { 1 });
}

//! Run the built-in verification suite end to end and show the deterministic
//! report files it produces.
//!
//! Run with: cargo run --release --example verification_suite
//! Reports land in target/suite_reports/.

use resolvent_lab::grid::SamplingGrid;
use resolvent_lab::suite::{run_suite, SuiteConfig, REGISTERED_CHECKS};

fn main() -> resolvent_lab::Result<()> {
    println!("registered checks:");
    for name in REGISTERED_CHECKS {
        println!("  {name}");
    }

    let out = std::path::Path::new("target/suite_reports");
    let mut cfg = SuiteConfig::default_config(out);
    // trim the grid so the example runs in seconds even unoptimized
    cfg.grid = SamplingGrid::new(16, 32, 1.0 - 1e-3)?;

    let summary = run_suite(&cfg)?;
    println!(
        "\nsuite finished: {}/{} passed, {} failed",
        summary.passed, summary.total, summary.failed
    );
    if let Some((check, margin, witness)) = &summary.worst {
        println!("worst margin {margin:.3e} in `{check}` at witness {witness}");
    }
    println!("\nreport files in {}:", out.display());
    let mut names: Vec<_> = std::fs::read_dir(out)?
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for name in names {
        println!("  {name}");
    }
    Ok(())
}

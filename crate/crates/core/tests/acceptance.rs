//! Runs every acceptance criterion at the slow tier and prints one line per
//! criterion. Exits nonzero if any criterion fails.

use solgraph::suite::{run, Tier};

fn main() {
    let reports = run(Tier::Slow, |r| println!("{r}"));
    let failed: Vec<u32> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!(
        "acceptance: {} passed, {} failed",
        reports.len() - failed.len(),
        failed.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}

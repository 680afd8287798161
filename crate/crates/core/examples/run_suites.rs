//! Runs every verification suite and prints the summary, or JSON with
//! `--json`.

use superrtt::cli::{run_suite, Suite, SuiteOptions};

fn main() -> superrtt::Result<()> {
    let json = std::env::args().any(|a| a == "--json");
    let report = run_suite(Suite::All, &SuiteOptions::default())?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
        for c in report.failures() {
            println!("failed: {}", c.report.identity);
        }
    }
    Ok(())
}

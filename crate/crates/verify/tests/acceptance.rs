//! Acceptance criteria 1-9, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::thread;

use tamerep_verify::{run_suite, Suite, DEFAULT_SEED};

fn main() -> ExitCode {
    let reports: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = Suite::ALL
            .iter()
            .map(|&suite| s.spawn(move || run_suite(suite, DEFAULT_SEED)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut all = true;
    for (k, (suite, report)) in Suite::ALL.iter().zip(reports).enumerate() {
        match report {
            Ok(r) => {
                let checks: usize = r.properties.iter().map(|p| p.checked).sum();
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("criterion {} ({suite}): {verdict} [{checks} checks]", k + 1);
                for p in r.properties.iter().filter(|p| !p.passed()) {
                    println!(
                        "    {}: {}/{} failed; first: {}",
                        p.property,
                        p.failed,
                        p.checked,
                        p.first_failure.as_deref().unwrap_or("-")
                    );
                }
                for n in &r.notes {
                    println!("    note: {n}");
                }
                all &= r.passed;
            }
            Err(e) => {
                println!("criterion {} ({suite}): FAIL [error: {e}]", k + 1);
                all = false;
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

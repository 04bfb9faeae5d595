//! Runs every registered acceptance criterion and prints one line each.
//! Positional arguments select criteria by name or number.

use std::process::ExitCode;

use t5free::verify::{Criterion, Verifier, DEFAULT_SEED};

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let selected: Vec<Criterion> = Criterion::ALL
        .into_iter()
        .filter(|c| filters.is_empty() || filters.iter().any(|f| c.name().contains(f.as_str()) || c.id().to_string() == *f))
        .collect();

    let verifier = Verifier::new(DEFAULT_SEED, 8);
    println!("running {} acceptance criteria", selected.len());
    let mut failed = Vec::new();
    for c in &selected {
        let outcome = verifier.run(*c);
        println!("{}", outcome.line());
        for (k, v) in &outcome.records {
            println!("       record {k} = {v}");
        }
        for (k, v) in &outcome.timings {
            println!("       timing {k} = {v:.3} s");
        }
        if !outcome.passed {
            failed.push(outcome.name);
        }
    }
    println!(
        "\nacceptance result: {}. {} passed; {} failed",
        if failed.is_empty() { "ok" } else { "FAILED" },
        selected.len() - failed.len(),
        failed.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}

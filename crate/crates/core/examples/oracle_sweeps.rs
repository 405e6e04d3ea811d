// Runs every brute-force verification suite with its default bounds.

use std::time::Instant;

use algroup::oracle::{run_suite, Suite};

fn main() {
    let start = Instant::now();
    let verdicts = run_suite(Suite::All, None).expect("default bounds are in range");
    for v in &verdicts {
        println!("{v}");
    }
    println!("{:.2?} total", start.elapsed());
    if verdicts.iter().any(|v| !v.passed()) {
        std::process::exit(1);
    }
}

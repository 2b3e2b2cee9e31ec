//! Runs every verification suite on the curated graphs and prints a summary.

use kladder::cli::{verify_graph, Suite, VerifyOptions};
use kladder::kgraph::samples;

fn main() {
    let opts = VerifyOptions {
        coeff_level: Some(1),
        timings: true,
    };
    for (name, g) in samples::all() {
        let run = verify_graph(name, &g, Suite::All, opts);
        let summary: Vec<String> = run
            .reports
            .iter()
            .map(|r| format!("{}:{}", r.suite, if r.passed() { "ok" } else { "FAIL" }))
            .collect();
        println!("{name:<3} {}", summary.join(" "));
    }
}

//! Runs every built-in pair and compares against its expected values.

use std::time::Instant;

use sphercert::catalog::{catalog_entries, run_entry};

fn main() {
    let start = Instant::now();
    let mut failures = 0;
    for entry in catalog_entries() {
        let run = run_entry(&entry, 0, 100).unwrap();
        let a = &run.analysis;
        println!(
            "{} {:<20} spherical {:<5} adapted {:<10} rank {:<4} dim n(h) {}",
            if run.passed() { "PASS" } else { "FAIL" },
            entry.name,
            a.spherical(),
            format!("{:?}", a.lst.adapted),
            a.lst.rank.map_or("-".into(), |r| r.to_string()),
            a.normalizer.as_ref().map_or("-".into(), |n| n.n_tilde.dim().to_string())
        );
        if !run.passed() {
            failures += 1;
            println!("    {}", run.mismatches.join("; "));
        }
    }
    println!("{failures} failures in {:.2}s", start.elapsed().as_secs_f64());
}

//! Counts the tilings of a notched hexagon with three engines.
//!
//! `cargo run --example count_region`

use lozenge::builders::{build_d, build_d_prime, DParams};
use lozenge::count::{count_via_strip, count_weighted, enumerate_tilings};
use lozenge::number::format_exact;

pub fn run_example() -> Vec<(String, String)> {
    let p = DParams::new(2, 1, 1, 1).expect("valid parameters");
    let mut rows = Vec::new();
    for (name, region) in [
        ("D(2,1,1,1)", build_d(&p)),
        ("D'(2,1,1,1)", build_d_prime(&p)),
    ] {
        let dp = count_weighted(&region).value;
        let strip = count_via_strip(&region).value;
        let oracle = enumerate_tilings(&region, None, false).expect("small region");
        assert_eq!(dp, strip);
        assert_eq!(dp, oracle.result.value);
        println!(
            "{name}: {} triangles, {} weighted positions, M = {} ({} tilings visited)",
            region.len(),
            region.weights().len(),
            format_exact(&dp),
            oracle.result.tilings_enumerated.unwrap_or(0)
        );
        rows.push((name.to_string(), format_exact(&dp)));
    }
    rows
}

fn main() {
    run_example();
}

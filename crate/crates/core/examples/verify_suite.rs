//! Runs every identity on the default grid and prints one line per identity.
//!
//! `cargo run --release --example verify_suite`

use lozenge::identities::{run_grid, Bounds};

pub fn run_example() -> bool {
    let reports = run_grid(&["all"], &Bounds::default()).expect("known ids");
    for r in &reports {
        println!("{r}");
    }
    reports.iter().all(|r| r.passed())
}

fn main() {
    if !run_example() {
        std::process::exit(1);
    }
}

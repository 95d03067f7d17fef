//! Lists every tiling of a small hexagon by lozenge shape.
//!
//! `cargo run --example enumerate`

use lozenge::builders::build_hexagon;
use lozenge::count::enumerate_tilings;
use lozenge::lattice::LozengeKind;

pub fn run_example() -> usize {
    let region = build_hexagon(2, 1, 1);
    let all = enumerate_tilings(&region, None, true).expect("small region");
    let tilings = all.tilings.expect("collected");
    for (i, t) in tilings.iter().enumerate() {
        let count = |k| t.iter().filter(|l| l.kind() == k).count();
        println!(
            "tiling {i}: {} left, {} right, {} vertical",
            count(LozengeKind::Left),
            count(LozengeKind::Right),
            count(LozengeKind::Vertical)
        );
    }
    tilings.len()
}

fn main() {
    println!("{} tilings", run_example());
}

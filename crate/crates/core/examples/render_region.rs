//! Draws a weighted region with one of its tilings.
//!
//! `cargo run --example render_region -- out.svg`

use lozenge::builders::{build_d_prime, DParams};
use lozenge::svg::{render_svg, RenderOptions};

pub fn run_example() -> String {
    let region = build_d_prime(&DParams::new(3, 2, 1, 2).expect("valid parameters"));
    render_svg(
        &region,
        &RenderOptions {
            tiling: true,
            ..RenderOptions::default()
        },
    )
}

fn main() {
    let svg = run_example();
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, svg).expect("writable output path"),
        None => print!("{svg}"),
    }
}

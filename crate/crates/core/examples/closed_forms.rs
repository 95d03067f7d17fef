//! Evaluates the closed forms, including one at a half-integer `x`.
//!
//! `cargo run --example closed_forms`

use lozenge::formulas::{
    eval_conjecture, eval_d, eval_d_prime, eval_macmahon, eval_proctor_sym, ConjectureVariant,
    ProductRule,
};
use lozenge::number::{format_exact, parse_exact};

pub fn run_example() -> Vec<(String, String)> {
    let x = parse_exact("3/2").unwrap();
    let rows = vec![
        ("D(2,1,1,1)", eval_d(&parse_exact("2").unwrap(), 1, 1, 1)),
        (
            "D'(2,1,1,1)",
            eval_d_prime(&parse_exact("2").unwrap(), 1, 1, 1),
        ),
        ("D(3/2,1,1,1)", eval_d(&x, 1, 1, 1)),
        (
            "product form, D(3,2,0,2)",
            eval_conjecture(ConjectureVariant::D, 3, 2, 2, ProductRule::Separate),
        ),
        ("D(3,2,0,2)", eval_d(&parse_exact("3").unwrap(), 2, 0, 2)),
        ("P(1,1,3)", eval_proctor_sym(1, 3)),
        ("H(2,2,2)", eval_macmahon(2, 2, 2)),
    ];
    rows.into_iter()
        .map(|(name, v)| {
            let v = format_exact(&v.expect("defined here"));
            println!("{name:<26} {v}");
            (name.to_string(), v)
        })
        .collect()
}

fn main() {
    run_example();
}

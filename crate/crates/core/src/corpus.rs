//! Fixed collection of small regions for cross-checking the two counters.

use crate::builders::{
    build_cut_hexagon, build_d, build_d_prime, build_hexagon, build_p, build_p_prime, build_rg,
    DParams, RgFamily,
};
use crate::lattice::{LozengePos, Region};
use crate::number::ratio;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub region: Region,
}

fn entry(name: String, region: Region) -> CorpusEntry {
    CorpusEntry { name, region }
}

/// Every family member with at most `max_triangles` triangles, plus hexagons
/// with a lozenge cut out and with ad hoc weights. Order is fixed.
pub fn oracle_corpus(max_triangles: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                out.push(entry(format!("H({a},{b},{c})"), build_hexagon(a, b, c)));
                if let Ok(r) = build_cut_hexagon(a, b, c) {
                    out.push(entry(format!("cutH({a},{b},{c})"), r));
                }
            }
        }
    }
    for x in 0..=4 {
        for y in 0..=3 {
            for m in 0..=3 {
                for z in 0..=y.min(m) {
                    if let Ok(p) = DParams::new(x, y, z, m) {
                        out.push(entry(format!("D({x},{y},{z},{m})"), build_d(&p)));
                        out.push(entry(format!("D'({x},{y},{z},{m})"), build_d_prime(&p)));
                    }
                }
            }
        }
    }
    for b in 0..=4 {
        for a in 0..=b {
            for c in 0..=3 {
                out.push(entry(
                    format!("P({a},{b},{c})"),
                    build_p(a, b, c).expect("a <= b"),
                ));
            }
        }
        for c in 0..=3 {
            out.push(entry(format!("P'({b},{c})"), build_p_prime(b, c)));
        }
    }
    for f in [RgFamily::R, RgFamily::G, RgFamily::RPrime, RgFamily::GPrime] {
        for x in 0..=3 {
            for a in 0..=4 {
                for k in 0..=4 - a {
                    out.push(entry(format!("{f:?}({x},{a},{k})"), build_rg(f, x, a, k)));
                }
            }
        }
    }
    // hexagons with one lozenge removed, and the same with a weight on the
    // first remaining position
    let base = build_hexagon(2, 3, 2);
    for (i, l) in base.lozenges().into_iter().enumerate().step_by(3) {
        let holed = base
            .difference(&l.triangles().into_iter().collect())
            .expect("inside");
        let first: Option<LozengePos> = holed.lozenges().into_iter().next();
        out.push(entry(format!("H(2,3,2)-#{i}"), holed.clone()));
        if let Some(p) = first {
            let w = holed.with_weights([(p, ratio(3, 2))]).expect("inside");
            out.push(entry(format!("H(2,3,2)-#{i} weighted"), w));
        }
    }
    out.retain(|e| e.region.len() <= max_triangles);
    out
}

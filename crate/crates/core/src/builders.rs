//! Constructors for the region families: hexagons, cut-corner hexagons,
//! the notched pentagons `D`/`D'`, Proctor regions `P`/`P'`, the wedges
//! `R`/`G` and their weighted variants, plus forced-lozenge stripping.
//!
//! Every builder starts its boundary walk at the lattice point `(0, 0)` and
//! walks clockwise. A "bump" on a zig-zag side is one `NE`+`E` step pair on
//! the northwestern side, or one `E`+`SE` pair on the northeastern side.

use std::collections::{BTreeSet, VecDeque};

use num::One;
use thiserror::Error;

use crate::lattice::{
    BoundaryWalk, Direction, LatticeError, LatticePoint, LozengePos, Region, UnitTriangle,
};
use crate::number::{half, ExactNumber};

use Direction::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid D parameters (x={x}, y={y}, z={z}, m={m}): {reason}")]
    InvalidD {
        x: u32,
        y: u32,
        z: u32,
        m: u32,
        reason: &'static str,
    },
    #[error("a+b+c must be even, got {a}+{b}+{c}")]
    Parity { a: u32, b: u32, c: u32 },
    #[error("negative staircase length for hexagon ({a},{b},{c})")]
    NegativeStrip { a: u32, b: u32, c: u32 },
    #[error("Proctor region needs a <= b, got a={a}, b={b}")]
    ProctorOrder { a: u32, b: u32 },
    #[error("negative side length {0} in boundary walk")]
    NegativeSide(i64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Parameters of the `D` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DParams {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub m: u32,
}

impl DParams {
    pub fn new(x: u32, y: u32, z: u32, m: u32) -> Result<Self, BuildError> {
        let err = |reason| Err(BuildError::InvalidD { x, y, z, m, reason });
        if z > y {
            return err("gap side z exceeds y");
        }
        if z > m {
            return err("gap side z exceeds m");
        }
        if y - z > x {
            return err("notch depth x-y+z is negative");
        }
        Ok(DParams { x, y, z, m })
    }

    pub fn notch_depth(&self) -> u32 {
        self.x + self.z - self.y
    }
}

/// Which wedge region [`build_rg`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RgFamily {
    R,
    G,
    RPrime,
    GPrime,
}

impl RgFamily {
    pub fn is_primed(self) -> bool {
        matches!(self, RgFamily::RPrime | RgFamily::GPrime)
    }
}

fn walk_region(walk: BoundaryWalk) -> Region {
    Region::from_walk(&walk).expect("builder walks are closed")
}

fn side(n: i64) -> Result<u32, BuildError> {
    u32::try_from(n).map_err(|_| BuildError::NegativeSide(n))
}

fn origin() -> BoundaryWalk {
    BoundaryWalk::from(LatticePoint::new(0, 0))
}

/// Up-pointing triangle of side `n` whose bottom-left corner is `(col, row)`.
pub fn up_triangle(col: i32, row: i32, n: u32) -> BTreeSet<UnitTriangle> {
    let n = n as i32;
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n - a {
            out.insert(UnitTriangle::up(col + a, row + b));
            if a + b < n - 1 {
                out.insert(UnitTriangle::down(col + a, row + b));
            }
        }
    }
    out
}

fn lozenge(a: UnitTriangle, b: UnitTriangle) -> LozengePos {
    LozengePos::new(a, b).expect("adjacent triangles")
}

/// Positions `Up(q,q)+Down(q,q)` for `q < n`: the southeast-facing edges of
/// a northwestern zig-zag starting at the origin.
fn nw_zigzag_positions(n: u32) -> impl Iterator<Item = LozengePos> {
    (0..n as i32).map(|q| lozenge(UnitTriangle::up(q, q), UnitTriangle::down(q, q)))
}

/// Positions under the horizontal steps of a northeastern zig-zag that starts
/// at `(col, row)`.
fn ne_zigzag_positions(col: i32, row: i32, n: u32) -> impl Iterator<Item = LozengePos> {
    (0..n as i32).map(move |q| {
        let (i, j) = (col + 2 * q, row - q - 1);
        lozenge(UnitTriangle::down(i, j), UnitTriangle::up(i + 1, j))
    })
}

fn halves(positions: impl Iterator<Item = LozengePos>) -> Vec<(LozengePos, ExactNumber)> {
    positions.map(|p| (p, half())).collect()
}

/// Hexagon with sides `a, b, c, a, b, c`, clockwise from the northwestern side.
pub fn build_hexagon(a: u32, b: u32, c: u32) -> Region {
    walk_region(
        origin()
            .run(NE, a)
            .run(E, b)
            .run(SE, c)
            .run(SW, a)
            .run(W, b)
            .run(NW, c),
    )
}

/// Hexagon `(a, b, c)` with two partial staircases cut from its top corners,
/// leaving a notch (the "artificial peak") between them.
pub fn build_cut_hexagon(a: u32, b: u32, c: u32) -> Result<Region, BuildError> {
    if !(a + b + c).is_multiple_of(2) {
        return Err(BuildError::Parity { a, b, c });
    }
    let (a_, b_, c_) = (a as i64, b as i64, c as i64);
    if a_ + b_ < c_ || b_ + c_ < a_ || a_ + c_ < b_ {
        return Err(BuildError::NegativeStrip { a, b, c });
    }
    let y = ((a_ + b_ - c_) / 2) as u32;
    let m = ((c_ + b_ - a_) / 2) as u32;
    let x = a;
    let walk = origin()
        .zigzag(NE, E, y)
        .run(NE, x - y)
        .run(SE, x - y)
        .zigzag(E, SE, m)
        .run(SW, x)
        .run(W, y + m)
        .run(NW, x + m - y);
    Ok(walk_region(walk))
}

/// Triangle set of `D_{x,y,z,m}`.
pub fn build_d(p: &DParams) -> Region {
    build_d_unchecked(p.x, p.y, p.z, p.m).expect("valid parameters build")
}

/// `D'`: the triangles of `D` with weight 1/2 on the `y` northwestern and
/// `m` northeastern zig-zag positions.
pub fn build_d_prime(p: &DParams) -> Region {
    let weights = halves(nw_zigzag_positions(p.y).chain(ne_zigzag_positions(
        (p.x + p.z) as i32,
        p.y as i32,
        p.m,
    )));
    build_d(p)
        .with_weights(weights)
        .expect("zig-zag positions lie inside D")
}

/// Builds the `D` outline for any parameters whose side lengths are
/// nonnegative, even when the tiling constraints fail. The gap is clipped to
/// the outline.
pub fn build_d_unchecked(x: u32, y: u32, z: u32, m: u32) -> Result<Region, BuildError> {
    let (xi, yi, zi, mi) = (x as i64, y as i64, z as i64, m as i64);
    let depth = side(xi - yi + zi)?;
    let sw = side(xi + mi - yi)?;
    let walk = origin()
        .zigzag(NE, E, y)
        .run(SE, depth)
        .run(NE, depth)
        .zigzag(E, SE, m)
        .run(SW, x)
        .run(W, y + m + z)
        .run(NW, sw);
    let body = walk_region(walk);
    // the gap hangs from the bottom of the notch at (x+z, 2y-x-z)
    let gap = up_triangle((xi + zi) as i32, (2 * yi - xi - 2 * zi) as i32, z);
    Ok(body.difference_clipped(&gap))
}

/// Proctor region: hexagon `(a, b, c)` with a maximal staircase removed.
pub fn build_p(a: u32, b: u32, c: u32) -> Result<Region, BuildError> {
    if a > b {
        return Err(BuildError::ProctorOrder { a, b });
    }
    Ok(walk_region(
        origin()
            .zigzag(NE, E, a)
            .run(E, b - a)
            .run(SE, c)
            .run(SW, a)
            .run(W, b)
            .run(NW, c),
    ))
}

/// `P_{a,a,c}` with weight 1/2 along the staircase zig-zag.
pub fn build_p_prime(a: u32, c: u32) -> Region {
    build_p(a, a, c)
        .expect("a <= a")
        .with_weights(halves(nw_zigzag_positions(a)))
        .expect("staircase positions lie inside P")
}

/// Wedge regions `R_{x,a,k}`, `G_{x,a,k}` and their weighted variants.
/// With `a + k = 0` the region is empty.
pub fn build_rg(family: RgFamily, x: u32, a: u32, k: u32) -> Region {
    let n = a + k;
    if n == 0 {
        return Region::empty();
    }
    match family {
        RgFamily::R | RgFamily::RPrime => {
            let r = walk_region(
                origin()
                    .zigzag(NE, E, n)
                    .run(SE, x)
                    .run(SW, n - 1)
                    .run(W, k)
                    .run(SE, k)
                    .run(SW, 1)
                    .run(W, a)
                    .run(NW, x + k),
            );
            if family == RgFamily::RPrime {
                // at x = 0 the staircase leaves the region and the weights go with it
                let inside: Vec<_> = nw_zigzag_positions(n)
                    .filter(|p| r.contains_lozenge(p))
                    .collect();
                r.with_weights(halves(inside.into_iter()))
                    .expect("inside R")
            } else {
                r
            }
        }
        RgFamily::G | RgFamily::GPrime => {
            let body = walk_region(
                origin()
                    .run(NE, x + k)
                    .zigzag(E, SE, n)
                    .run(SW, x)
                    .run(W, a + 2 * k)
                    .run(NW, a),
            );
            let dent = up_triangle(0, 1, k);
            let g = body.difference_clipped(&dent);
            if family == RgFamily::GPrime {
                let top = (x + k) as i32;
                let inside: Vec<_> = ne_zigzag_positions(0, top, n)
                    .filter(|p| g.contains_lozenge(p))
                    .collect();
                g.with_weights(halves(inside.into_iter()))
                    .expect("inside G")
            } else {
                g
            }
        }
    }
}

/// Result of [`strip_forced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stripped {
    /// The remaining region and the product of the forced weights.
    Reduced {
        region: Region,
        multiplier: ExactNumber,
    },
    /// Some triangle was left with no partner.
    Untileable,
}

impl Stripped {
    pub fn multiplier(&self) -> ExactNumber {
        match self {
            Stripped::Reduced { multiplier, .. } => multiplier.clone(),
            Stripped::Untileable => ExactNumber::from_integer(0.into()),
        }
    }
}

/// Removes forced lozenges until none remain.
pub fn strip_forced(r: &Region) -> Stripped {
    let mut tris: BTreeSet<UnitTriangle> = r.triangle_set().clone();
    let mut multiplier = ExactNumber::one();
    let mut queue: VecDeque<UnitTriangle> = tris.iter().copied().collect();
    let live = |tris: &BTreeSet<UnitTriangle>, t: &UnitTriangle| {
        t.neighbors()
            .into_iter()
            .filter(|n| tris.contains(n))
            .collect::<Vec<_>>()
    };
    while let Some(t) = queue.pop_front() {
        if !tris.contains(&t) {
            continue;
        }
        let ns = live(&tris, &t);
        match ns.as_slice() {
            [] => return Stripped::Untileable,
            [u] => {
                let u = *u;
                multiplier *= r.weight(&lozenge(t, u));
                tris.remove(&t);
                tris.remove(&u);
                for n in u.neighbors() {
                    if tris.contains(&n) {
                        queue.push_back(n);
                    }
                }
            }
            _ => {}
        }
    }
    Stripped::Reduced {
        region: r.difference_clipped(&complement(r, &tris)),
        multiplier,
    }
}

fn complement(r: &Region, keep: &BTreeSet<UnitTriangle>) -> BTreeSet<UnitTriangle> {
    r.triangles()
        .filter(|t| !keep.contains(t))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::ratio;

    #[test]
    fn hexagon_sizes() {
        let h = build_hexagon(1, 1, 1);
        assert_eq!(h.len(), 6);
        let h = build_hexagon(2, 3, 4);
        assert_eq!(h.len(), 2 * (2 * 3 + 3 * 4 + 4 * 2));
        assert!(h.is_balanced());
        // degenerate hexagon is an a x b rhombus
        assert_eq!(build_hexagon(2, 3, 0).len(), 12);
    }

    #[test]
    fn d_parameter_validation() {
        assert!(DParams::new(2, 1, 1, 1).is_ok());
        assert!(DParams::new(2, 1, 2, 3).is_err());
        assert!(DParams::new(2, 2, 1, 0).is_err());
        assert!(DParams::new(1, 3, 1, 1).is_err());
        assert_eq!(DParams::new(3, 2, 1, 2).unwrap().notch_depth(), 2);
    }

    #[test]
    fn d_regions_are_balanced() {
        for x in 0..4 {
            for y in 0..=3 {
                for m in 0..=3 {
                    for z in 0..=y.min(m) {
                        let Ok(p) = DParams::new(x, y, z, m) else {
                            continue;
                        };
                        assert!(build_d(&p).is_balanced(), "{p:?}");
                        let dp = build_d_prime(&p);
                        assert_eq!(dp.weights().len(), (y + m) as usize, "{p:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn cut_hexagon_rejects_bad_parameters() {
        assert_eq!(
            build_cut_hexagon(1, 1, 1),
            Err(BuildError::Parity { a: 1, b: 1, c: 1 })
        );
        assert!(matches!(
            build_cut_hexagon(5, 1, 2),
            Err(BuildError::NegativeStrip { .. })
        ));
        assert!(build_cut_hexagon(2, 2, 2).is_ok());
    }

    #[test]
    fn proctor_order() {
        assert_eq!(
            build_p(3, 2, 1),
            Err(BuildError::ProctorOrder { a: 3, b: 2 })
        );
        assert!(build_p(0, 0, 3).unwrap().is_empty());
    }

    #[test]
    fn wedges_at_k_zero_are_proctor_regions() {
        for x in 0..3 {
            for a in 0..4 {
                let p = build_p(a, a, x).unwrap().canonicalize();
                assert_eq!(build_rg(RgFamily::R, x, a, 0).canonicalize(), p);
            }
        }
    }

    #[test]
    fn strip_empty_and_single_lozenge() {
        let e = strip_forced(&Region::empty());
        assert_eq!(
            e,
            Stripped::Reduced {
                region: Region::empty(),
                multiplier: ratio(1, 1)
            }
        );

        let (u, d) = (UnitTriangle::up(0, 0), UnitTriangle::down(0, 0));
        let r = Region::new([u, d])
            .with_weights([(lozenge(u, d), half())])
            .unwrap();
        assert_eq!(
            strip_forced(&r),
            Stripped::Reduced {
                region: Region::empty(),
                multiplier: ratio(1, 2)
            }
        );
    }

    #[test]
    fn strip_detects_isolated_triangle() {
        let mut tris: Vec<_> = build_hexagon(1, 1, 1).triangles().copied().collect();
        tris.push(UnitTriangle::up(10, 10));
        assert_eq!(strip_forced(&Region::new(tris)), Stripped::Untileable);
    }

    #[test]
    fn strip_removes_the_peak_of_a_cut_hexagon() {
        // (4,2,2): y = 2, m = 0, so the peak has depth 2 and is filled by forced tiles
        let r = build_cut_hexagon(4, 2, 2).unwrap();
        match strip_forced(&r) {
            Stripped::Reduced { region, multiplier } => {
                assert!(region.len() < r.len());
                assert_eq!(multiplier, ratio(1, 1));
            }
            Stripped::Untileable => panic!("cut hexagon is tileable"),
        }
    }
}

//! Triangular-lattice geometry: unit triangles, lozenge positions and regions.
//!
//! # Coordinates
//!
//! Lattice points are `col * e1 + row * e2` with `e1 = (1, 0)` and
//! `e2 = (1/2, sqrt(3)/2)`. Rows are horizontal bands; `row` grows upward and
//! `col` grows to the east along a row.
//!
//! * `Up(col, row)` has corners `(col, row)`, `(col + 1, row)`, `(col, row + 1)`.
//! * `Down(col, row)` has corners `(col + 1, row)`, `(col, row + 1)`, `(col + 1, row + 1)`.
//!
//! Within a row, `Down(col - 1, row)`, `Up(col, row)`, `Down(col, row)`,
//! `Up(col + 1, row)` follow each other from west to east. The derived `Ord`
//! on [`UnitTriangle`] (row, then col, then `Up < Down`) is therefore the
//! bottom-to-top, west-to-east sweep order used by the profile counter.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed};
use serde::Serialize;
use thiserror::Error;

use crate::number::{format_exact, ExactNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("triangle {0} is not part of the region")]
    NotInRegion(UnitTriangle),
    #[error("lozenge position {0} does not lie inside the region")]
    WeightOutsideRegion(LozengePos),
    #[error("weight {weight} on {pos} is not strictly positive")]
    NonPositiveWeight { pos: LozengePos, weight: String },
    #[error("boundary walk does not close: it ends at {end} instead of {start}")]
    OpenWalk {
        start: LatticePoint,
        end: LatticePoint,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnitTriangle {
    pub row: i32,
    pub col: i32,
    pub orient: Orientation,
}

impl UnitTriangle {
    pub const fn up(col: i32, row: i32) -> Self {
        UnitTriangle {
            row,
            col,
            orient: Orientation::Up,
        }
    }

    pub const fn down(col: i32, row: i32) -> Self {
        UnitTriangle {
            row,
            col,
            orient: Orientation::Down,
        }
    }

    pub fn is_up(&self) -> bool {
        self.orient == Orientation::Up
    }

    /// The three edge-adjacent triangles, in the order west, east, vertical
    /// (below for `Up`, above for `Down`).
    pub fn neighbors(&self) -> [UnitTriangle; 3] {
        let (c, r) = (self.col, self.row);
        match self.orient {
            Orientation::Up => [
                UnitTriangle::down(c - 1, r),
                UnitTriangle::down(c, r),
                UnitTriangle::down(c, r - 1),
            ],
            Orientation::Down => [
                UnitTriangle::up(c, r),
                UnitTriangle::up(c + 1, r),
                UnitTriangle::up(c, r + 1),
            ],
        }
    }

    pub fn corners(&self) -> [LatticePoint; 3] {
        let (c, r) = (self.col, self.row);
        match self.orient {
            Orientation::Up => [
                LatticePoint::new(c, r),
                LatticePoint::new(c + 1, r),
                LatticePoint::new(c, r + 1),
            ],
            Orientation::Down => [
                LatticePoint::new(c + 1, r),
                LatticePoint::new(c + 1, r + 1),
                LatticePoint::new(c, r + 1),
            ],
        }
    }

    pub fn translated(&self, dcol: i32, drow: i32) -> Self {
        UnitTriangle {
            row: self.row + drow,
            col: self.col + dcol,
            orient: self.orient,
        }
    }
}

/// Free-standing adjacency, same as [`UnitTriangle::neighbors`].
pub fn neighbors(t: UnitTriangle) -> [UnitTriangle; 3] {
    t.neighbors()
}

impl fmt::Display for UnitTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = if self.is_up() { "Up" } else { "Down" };
        write!(f, "{o}({},{})", self.col, self.row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub col: i32,
    pub row: i32,
}

impl LatticePoint {
    pub const fn new(col: i32, row: i32) -> Self {
        LatticePoint { col, row }
    }

    pub fn step(self, dir: Direction, n: i32) -> Self {
        let (dc, dr) = dir.delta();
        LatticePoint::new(self.col + dc * n, self.row + dr * n)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// The six unit steps of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    E,
    NE,
    NW,
    W,
    SW,
    SE,
}

impl Direction {
    pub const fn delta(self) -> (i32, i32) {
        match self {
            Direction::E => (1, 0),
            Direction::NE => (0, 1),
            Direction::NW => (-1, 1),
            Direction::W => (-1, 0),
            Direction::SW => (0, -1),
            Direction::SE => (1, -1),
        }
    }
}

/// Shape of a lozenge, named by which way its non-horizontal sides lean.
/// `Vertical` is the one with no horizontal side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LozengeKind {
    Left,
    Right,
    Vertical,
}

/// An unordered pair of edge-adjacent triangles, stored as (up, down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LozengePos {
    up: UnitTriangle,
    down: UnitTriangle,
}

impl LozengePos {
    /// Normalizes the pair; `None` unless the two triangles share an edge.
    pub fn new(a: UnitTriangle, b: UnitTriangle) -> Option<Self> {
        let (up, down) = match (a.orient, b.orient) {
            (Orientation::Up, Orientation::Down) => (a, b),
            (Orientation::Down, Orientation::Up) => (b, a),
            _ => return None,
        };
        up.neighbors()
            .contains(&down)
            .then_some(LozengePos { up, down })
    }

    pub fn up(&self) -> UnitTriangle {
        self.up
    }

    pub fn down(&self) -> UnitTriangle {
        self.down
    }

    pub fn triangles(&self) -> [UnitTriangle; 2] {
        [self.up, self.down]
    }

    pub fn kind(&self) -> LozengeKind {
        if self.down.row < self.up.row {
            LozengeKind::Vertical
        } else if self.down.col < self.up.col {
            LozengeKind::Left
        } else {
            LozengeKind::Right
        }
    }

    pub fn translated(&self, dcol: i32, drow: i32) -> Self {
        LozengePos {
            up: self.up.translated(dcol, drow),
            down: self.down.translated(dcol, drow),
        }
    }
}

impl fmt::Display for LozengePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}]", self.up, self.down)
    }
}

/// A closed lattice path given as runs of unit steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWalk {
    start: LatticePoint,
    runs: Vec<(Direction, u32)>,
}

impl BoundaryWalk {
    pub fn from(start: LatticePoint) -> Self {
        BoundaryWalk {
            start,
            runs: Vec::new(),
        }
    }

    pub fn run(mut self, dir: Direction, n: u32) -> Self {
        if n > 0 {
            self.runs.push((dir, n));
        }
        self
    }

    /// `n` repetitions of one step in `first` followed by one in `second`.
    pub fn zigzag(mut self, first: Direction, second: Direction, n: u32) -> Self {
        for _ in 0..n {
            self = self.run(first, 1).run(second, 1);
        }
        self
    }

    pub fn start(&self) -> LatticePoint {
        self.start
    }

    pub fn runs(&self) -> &[(Direction, u32)] {
        &self.runs
    }

    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut pts = vec![self.start];
        let mut p = self.start;
        for &(d, n) in &self.runs {
            p = p.step(d, n as i32);
            pts.push(p);
        }
        pts
    }
}

/// Even-odd membership of the triangle's centroid in the closed polygon.
/// Coordinates are scaled by 3 so the centroid is integral; a centroid never
/// lies on a lattice line, so there are no degenerate crossings.
fn centroid_inside(t: &UnitTriangle, poly: &[(i64, i64)]) -> bool {
    let (px, py) = match t.orient {
        Orientation::Up => (3 * t.col as i64 + 1, 3 * t.row as i64 + 1),
        Orientation::Down => (3 * t.col as i64 + 2, 3 * t.row as i64 + 2),
    };
    let mut inside = false;
    for w in poly.windows(2) {
        let ((x1, y1), (x2, y2)) = (w[0], w[1]);
        if (y1 > py) != (y2 > py) {
            // crossing column is x1 + (py - y1) (x2 - x1) / (y2 - y1); test it against px
            let lhs = (x1 - px) * (y2 - y1) + (py - y1) * (x2 - x1);
            let crosses = if y2 > y1 { lhs > 0 } else { lhs < 0 };
            if crosses {
                inside = !inside;
            }
        }
    }
    inside
}

/// A finite set of unit triangles together with exact weights on some of its
/// lozenge positions (absent positions weigh 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Region {
    triangles: BTreeSet<UnitTriangle>,
    weights: BTreeMap<LozengePos, ExactNumber>,
    up_count: usize,
}

impl Region {
    pub fn empty() -> Self {
        Region::default()
    }

    pub fn new(triangles: impl IntoIterator<Item = UnitTriangle>) -> Self {
        let triangles: BTreeSet<_> = triangles.into_iter().collect();
        let up_count = triangles.iter().filter(|t| t.is_up()).count();
        Region {
            triangles,
            weights: BTreeMap::new(),
            up_count,
        }
    }

    /// All triangles whose interior lies inside the closed walk.
    pub fn from_walk(walk: &BoundaryWalk) -> Result<Self, LatticeError> {
        let pts = walk.vertices();
        let end = *pts.last().unwrap();
        if end != walk.start {
            return Err(LatticeError::OpenWalk {
                start: walk.start,
                end,
            });
        }
        if pts.len() < 4 {
            return Ok(Region::empty());
        }
        let poly: Vec<(i64, i64)> = pts
            .iter()
            .map(|p| (3 * p.col as i64, 3 * p.row as i64))
            .collect();
        let rmin = pts.iter().map(|p| p.row).min().unwrap();
        let rmax = pts.iter().map(|p| p.row).max().unwrap();
        // skewed x extent: 2 col + row
        let xmin = pts.iter().map(|p| 2 * p.col + p.row).min().unwrap();
        let xmax = pts.iter().map(|p| 2 * p.col + p.row).max().unwrap();
        let mut tris = Vec::new();
        for row in rmin..rmax {
            let cmin = (xmin - row).div_euclid(2) - 1;
            let cmax = (xmax - row).div_euclid(2) + 1;
            for col in cmin..=cmax {
                for t in [UnitTriangle::up(col, row), UnitTriangle::down(col, row)] {
                    if centroid_inside(&t, &poly) {
                        tris.push(t);
                    }
                }
            }
        }
        Ok(Region::new(tris))
    }

    /// Attaches weights; every position must lie inside and every weight be positive.
    pub fn with_weights(
        mut self,
        weights: impl IntoIterator<Item = (LozengePos, ExactNumber)>,
    ) -> Result<Self, LatticeError> {
        for (pos, w) in weights {
            if !self.contains_lozenge(&pos) {
                return Err(LatticeError::WeightOutsideRegion(pos));
            }
            if !w.is_positive() {
                return Err(LatticeError::NonPositiveWeight {
                    pos,
                    weight: format_exact(&w),
                });
            }
            if w.is_one() {
                self.weights.remove(&pos);
            } else {
                self.weights.insert(pos, w);
            }
        }
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.up_count
    }

    pub fn down_count(&self) -> usize {
        self.triangles.len() - self.up_count
    }

    pub fn is_balanced(&self) -> bool {
        self.up_count() == self.down_count()
    }

    pub fn contains(&self, t: &UnitTriangle) -> bool {
        self.triangles.contains(t)
    }

    pub fn contains_lozenge(&self, pos: &LozengePos) -> bool {
        self.contains(&pos.up) && self.contains(&pos.down)
    }

    /// Triangles in sweep order.
    pub fn triangles(&self) -> impl Iterator<Item = &UnitTriangle> + '_ {
        self.triangles.iter()
    }

    pub fn triangle_set(&self) -> &BTreeSet<UnitTriangle> {
        &self.triangles
    }

    /// Explicit (non-unit) weights.
    pub fn weights(&self) -> &BTreeMap<LozengePos, ExactNumber> {
        &self.weights
    }

    pub fn is_weighted(&self) -> bool {
        !self.weights.is_empty()
    }

    pub fn weight(&self, pos: &LozengePos) -> ExactNumber {
        self.weights
            .get(pos)
            .cloned()
            .unwrap_or_else(ExactNumber::one)
    }

    /// In-region neighbors of `t`.
    pub fn neighbors_in(&self, t: &UnitTriangle) -> impl Iterator<Item = UnitTriangle> + '_ {
        let ns = t.neighbors();
        ns.into_iter().filter(move |n| self.contains(n))
    }

    /// Every lozenge position with both triangles inside.
    pub fn lozenges(&self) -> BTreeSet<LozengePos> {
        self.triangles
            .iter()
            .filter(|t| t.is_up())
            .flat_map(|u| {
                self.neighbors_in(u)
                    .map(move |d| LozengePos { up: *u, down: d })
            })
            .collect()
    }

    /// Removes `remove` from the region, dropping weights that no longer fit.
    pub fn difference(&self, remove: &BTreeSet<UnitTriangle>) -> Result<Region, LatticeError> {
        if let Some(t) = remove.iter().find(|t| !self.contains(t)) {
            return Err(LatticeError::NotInRegion(*t));
        }
        Ok(self.difference_clipped(remove))
    }

    /// Like [`Region::difference`] but ignores triangles that are not present.
    pub fn difference_clipped(&self, remove: &BTreeSet<UnitTriangle>) -> Region {
        let triangles: BTreeSet<_> = self.triangles.difference(remove).copied().collect();
        let up_count = triangles.iter().filter(|t| t.is_up()).count();
        let weights = self
            .weights
            .iter()
            .filter(|(p, _)| triangles.contains(&p.up) && triangles.contains(&p.down))
            .map(|(p, w)| (*p, w.clone()))
            .collect();
        Region {
            triangles,
            weights,
            up_count,
        }
    }

    pub fn translate(&self, dcol: i32, drow: i32) -> Region {
        Region {
            triangles: self
                .triangles
                .iter()
                .map(|t| t.translated(dcol, drow))
                .collect(),
            weights: self
                .weights
                .iter()
                .map(|(p, w)| (p.translated(dcol, drow), w.clone()))
                .collect(),
            up_count: self.up_count,
        }
    }

    /// Translates so that the lowest row is 0 and the westmost triangle of the
    /// region starts at column-offset 0 in the skewed x coordinate. Two regions
    /// are translates of each other iff their canonical forms are equal.
    pub fn canonicalize(&self) -> Region {
        let Some(rmin) = self.triangles.iter().map(|t| t.row).min() else {
            return self.clone();
        };
        // westmost extent of a triangle is 2 col + row (+1 for Down)
        let xmin = self
            .triangles
            .iter()
            .map(|t| 2 * (t.col) + (t.row - rmin) + i32::from(!t.is_up()))
            .min()
            .unwrap();
        self.translate(-xmin.div_euclid(2), -rmin)
    }

    /// Row range `(min, max)` of the region, if nonempty.
    pub fn row_span(&self) -> Option<(i32, i32)> {
        let lo = self.triangles.first()?.row;
        let hi = self.triangles.last()?.row;
        Some((lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::ratio;
    use proptest::prelude::*;

    fn unit_hexagon() -> Region {
        let w = BoundaryWalk::from(LatticePoint::new(0, 0))
            .run(Direction::NE, 1)
            .run(Direction::E, 1)
            .run(Direction::SE, 1)
            .run(Direction::SW, 1)
            .run(Direction::W, 1)
            .run(Direction::NW, 1);
        Region::from_walk(&w).unwrap()
    }

    #[test]
    fn up_triangle_has_three_down_neighbors() {
        let ns = UnitTriangle::up(0, 0).neighbors();
        assert_eq!(
            ns,
            [
                UnitTriangle::down(-1, 0),
                UnitTriangle::down(0, 0),
                UnitTriangle::down(0, -1)
            ]
        );
        assert!(ns.iter().all(|n| !n.is_up()));
    }

    #[test]
    fn neighbors_share_an_edge() {
        for t in [UnitTriangle::up(2, -3), UnitTriangle::down(-1, 4)] {
            let mine: BTreeSet<_> = t.corners().into_iter().collect();
            for n in t.neighbors() {
                let theirs: BTreeSet<_> = n.corners().into_iter().collect();
                assert_eq!(mine.intersection(&theirs).count(), 2, "{t} {n}");
            }
        }
    }

    #[test]
    fn lozenge_pos_is_normalized() {
        let a = UnitTriangle::up(1, 1);
        let b = UnitTriangle::down(1, 0);
        assert_eq!(LozengePos::new(a, b), LozengePos::new(b, a));
        assert_eq!(LozengePos::new(a, b).unwrap().kind(), LozengeKind::Vertical);
        assert_eq!(
            LozengePos::new(a, UnitTriangle::down(0, 1)).unwrap().kind(),
            LozengeKind::Left
        );
        assert_eq!(
            LozengePos::new(a, UnitTriangle::down(1, 1)).unwrap().kind(),
            LozengeKind::Right
        );
        assert!(LozengePos::new(a, UnitTriangle::down(3, 3)).is_none());
        assert!(LozengePos::new(a, UnitTriangle::up(0, 1)).is_none());
    }

    #[test]
    fn lozenges_of_small_regions() {
        assert!(Region::empty().lozenges().is_empty());
        let pair = Region::new([UnitTriangle::up(0, 0), UnitTriangle::down(0, 0)]);
        assert_eq!(pair.lozenges().len(), 1);
        let hex = unit_hexagon();
        assert_eq!(hex.len(), 6);
        assert_eq!(hex.up_count(), 3);
        // six adjacent pairs around the ring of the unit hexagon
        assert_eq!(hex.lozenges().len(), 6);
    }

    #[test]
    fn open_walk_is_rejected() {
        let w = BoundaryWalk::from(LatticePoint::new(0, 0)).run(Direction::E, 2);
        assert!(matches!(
            Region::from_walk(&w),
            Err(LatticeError::OpenWalk { .. })
        ));
    }

    #[test]
    fn difference_basics() {
        let hex = unit_hexagon();
        assert_eq!(hex.difference(&BTreeSet::new()).unwrap(), hex);
        let all = hex.triangle_set().clone();
        assert!(hex.difference(&all).unwrap().is_empty());
        let stray: BTreeSet<_> = [UnitTriangle::up(40, 40)].into();
        assert_eq!(
            hex.difference(&stray),
            Err(LatticeError::NotInRegion(UnitTriangle::up(40, 40)))
        );
    }

    #[test]
    fn removing_a_triangle_drops_its_weight() {
        let pos = LozengePos::new(UnitTriangle::up(0, 0), UnitTriangle::down(0, 0)).unwrap();
        let r = unit_hexagon().with_weights([(pos, ratio(1, 2))]).unwrap();
        assert_eq!(r.weight(&pos), ratio(1, 2));
        let cut = r.difference(&[UnitTriangle::up(0, 0)].into()).unwrap();
        assert!(cut.weights().is_empty());
    }

    #[test]
    fn weights_are_validated() {
        let pos = LozengePos::new(UnitTriangle::up(9, 9), UnitTriangle::down(9, 9)).unwrap();
        assert!(matches!(
            unit_hexagon().with_weights([(pos, ratio(1, 2))]),
            Err(LatticeError::WeightOutsideRegion(_))
        ));
        let inside = LozengePos::new(UnitTriangle::up(0, 0), UnitTriangle::down(0, 0)).unwrap();
        assert!(matches!(
            unit_hexagon().with_weights([(inside, ratio(0, 1))]),
            Err(LatticeError::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn canonical_form_is_translation_invariant() {
        let hex = unit_hexagon();
        for (dc, dr) in [(3, -2), (-5, 7), (0, 1), (1, 0)] {
            assert_eq!(hex.translate(dc, dr).canonicalize(), hex.canonicalize());
        }
    }

    fn arb_triangle() -> impl Strategy<Value = UnitTriangle> {
        (-20i32..20, -20i32..20, any::<bool>()).prop_map(|(c, r, up)| {
            if up {
                UnitTriangle::up(c, r)
            } else {
                UnitTriangle::down(c, r)
            }
        })
    }

    proptest! {
        #[test]
        fn adjacency_is_symmetric_and_bipartite(t in arb_triangle()) {
            for n in t.neighbors() {
                prop_assert!(n.neighbors().contains(&t));
                prop_assert_ne!(n.orient, t.orient);
            }
        }

        #[test]
        fn random_removals_keep_region_invariants(mask in proptest::collection::vec(any::<bool>(), 24)) {
            let w = BoundaryWalk::from(LatticePoint::new(0, 0))
                .run(Direction::NE, 2).run(Direction::E, 2).run(Direction::SE, 2)
                .run(Direction::SW, 2).run(Direction::W, 2).run(Direction::NW, 2);
            let hex = Region::from_walk(&w).unwrap();
            prop_assert_eq!(hex.len(), 24);
            let weights: Vec<_> = hex.lozenges().into_iter().map(|p| (p, ratio(1, 2))).collect();
            let hex = hex.with_weights(weights).unwrap();
            let remove: BTreeSet<_> = hex.triangles().zip(&mask).filter(|(_, m)| **m).map(|(t, _)| *t).collect();
            let r = hex.difference(&remove).unwrap();
            prop_assert_eq!(r.up_count() + r.down_count(), r.len());
            prop_assert_eq!(r.up_count(), r.triangles().filter(|t| t.is_up()).count());
            for (p, w) in r.weights() {
                prop_assert!(r.contains_lozenge(p));
                prop_assert!(w.is_positive());
            }
            for p in r.lozenges() {
                prop_assert!(p.up().is_up() && !p.down().is_up());
            }
        }
    }
}

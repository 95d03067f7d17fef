//! Exact weighted tiling counters.
//!
//! [`count_weighted`] is a profile dynamic program over the sweep order of
//! [`UnitTriangle`]; [`enumerate_tilings`] is a plain backtracking search used
//! as an independent oracle on small regions.
//!
//! Both counters scale every weight by the common denominator `L` of all
//! weights, work over integers, and divide by `L^(n/2)` at the end.

use std::collections::HashMap;
use std::hash::Hash;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Zero};
use thiserror::Error;

use crate::builders::{strip_forced, Stripped};
use crate::lattice::{LozengePos, Region, UnitTriangle};
use crate::number::ExactNumber;

/// Default triangle cap for the oracle.
pub const ORACLE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("region has {triangles} triangles, too large for oracle (cap {cap})")]
    TooLargeForOracle { triangles: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: ExactNumber,
    /// Number of tilings visited; only the oracle fills this in.
    pub tilings_enumerated: Option<u64>,
}

impl CountResult {
    fn from_value(value: ExactNumber) -> Self {
        CountResult {
            value,
            tilings_enumerated: None,
        }
    }
}

/// Region flattened into sweep order with integer-scaled weights.
struct Indexed {
    tris: Vec<UnitTriangle>,
    /// For each position, the in-region neighbors after it: (offset, scaled weight).
    forward: Vec<Vec<(usize, BigInt)>>,
    /// Common denominator of the weights.
    scale: BigInt,
}

impl Indexed {
    fn new(r: &Region) -> Self {
        let tris: Vec<UnitTriangle> = r.triangles().copied().collect();
        let scale = r
            .weights()
            .values()
            .fold(BigInt::one(), |l, w| l.lcm(w.denom()));
        let index: HashMap<UnitTriangle, usize> =
            tris.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let forward = tris
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut fw: Vec<(usize, BigInt)> = t
                    .neighbors()
                    .iter()
                    .filter_map(|n| index.get(n).filter(|&&j| j > i).map(|&j| (j, *n)))
                    .map(|(j, n)| {
                        let w = r.weight(&LozengePos::new(*t, n).unwrap());
                        (
                            j - i,
                            (w * ExactNumber::from_integer(scale.clone())).to_integer(),
                        )
                    })
                    .collect();
                fw.sort_by_key(|(d, _)| *d);
                fw
            })
            .collect();
        Indexed {
            tris,
            forward,
            scale,
        }
    }

    fn max_offset(&self) -> usize {
        self.forward
            .iter()
            .flatten()
            .map(|(d, _)| *d)
            .max()
            .unwrap_or(0)
    }

    fn unscale(&self, total: BigInt) -> ExactNumber {
        let pairs = (self.tris.len() / 2) as u32;
        ExactNumber::new(total, num::pow(self.scale.clone(), pairs as usize))
    }
}

/// Frontier bitmask: bit `d` marks the triangle `d` positions ahead as covered.
trait Mask: Copy + Eq + Hash {
    fn empty() -> Self;
    fn bit(&self, d: usize) -> bool;
    fn with(&self, d: usize) -> Self;
    fn shifted(&self) -> Self;
}

impl Mask for u128 {
    fn empty() -> Self {
        0
    }
    fn bit(&self, d: usize) -> bool {
        (self >> d) & 1 == 1
    }
    fn with(&self, d: usize) -> Self {
        self | (1u128 << d)
    }
    fn shifted(&self) -> Self {
        self >> 1
    }
}

/// Wide mask for frontiers of up to 512 positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Wide([u128; 4]);

impl Mask for Wide {
    fn empty() -> Self {
        Wide([0; 4])
    }
    fn bit(&self, d: usize) -> bool {
        self.0[d / 128].bit(d % 128)
    }
    fn with(&self, d: usize) -> Self {
        let mut w = *self;
        w.0[d / 128] = w.0[d / 128].with(d % 128);
        w
    }
    fn shifted(&self) -> Self {
        let mut w = self.0.map(|x| x >> 1);
        for (word, next) in w.iter_mut().zip(&self.0[1..]) {
            *word |= (next & 1) << 127;
        }
        Wide(w)
    }
}

/// Integer accumulator; `None` from an operation means overflow.
trait Acc: Clone {
    fn unit() -> Self;
    fn from_weight(w: &BigInt) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Acc for u128 {
    fn unit() -> Self {
        1
    }
    fn from_weight(w: &BigInt) -> Option<Self> {
        u128::try_from(w).ok()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Acc for BigInt {
    fn unit() -> Self {
        BigInt::one()
    }
    fn from_weight(w: &BigInt) -> Option<Self> {
        Some(w.clone())
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

fn sweep<M: Mask, A: Acc>(ix: &Indexed) -> Option<BigInt> {
    let forward: Vec<Vec<(usize, A)>> = ix
        .forward
        .iter()
        .map(|fw| {
            fw.iter()
                .map(|(d, w)| A::from_weight(w).map(|a| (*d, a)))
                .collect()
        })
        .collect::<Option<_>>()?;
    let mut level: HashMap<M, A> = HashMap::new();
    level.insert(M::empty(), A::unit());
    for fw in &forward {
        let mut next: HashMap<M, A> = HashMap::with_capacity(level.len());
        for (mask, val) in level {
            if mask.bit(0) {
                merge(&mut next, mask.shifted(), val)?;
                continue;
            }
            for (d, w) in fw {
                if !mask.bit(*d) {
                    merge(&mut next, mask.with(*d).shifted(), val.mul(w)?)?;
                }
            }
        }
        if next.is_empty() {
            return Some(BigInt::zero());
        }
        level = next;
    }
    Some(
        level
            .remove(&M::empty())
            .map(A::into_big)
            .unwrap_or_default(),
    )
}

fn merge<M: Mask, A: Acc>(map: &mut HashMap<M, A>, key: M, val: A) -> Option<()> {
    match map.get_mut(&key) {
        Some(slot) => *slot = slot.add(&val)?,
        None => {
            map.insert(key, val);
        }
    }
    Some(())
}

/// Weighted tiling count by profile dynamic programming.
pub fn count_weighted(r: &Region) -> CountResult {
    if !r.is_balanced() {
        return CountResult::from_value(ExactNumber::zero());
    }
    if r.is_empty() {
        return CountResult::from_value(ExactNumber::one());
    }
    let ix = Indexed::new(r);
    let total = if ix.max_offset() < 128 {
        sweep::<u128, u128>(&ix).or_else(|| sweep::<u128, BigInt>(&ix))
    } else {
        assert!(ix.max_offset() < 512, "frontier wider than 512 positions");
        sweep::<Wide, u128>(&ix).or_else(|| sweep::<Wide, BigInt>(&ix))
    }
    .expect("big integer sweep cannot overflow");
    CountResult::from_value(ix.unscale(total))
}

/// Strips forced lozenges, then counts what remains.
pub fn count_via_strip(r: &Region) -> CountResult {
    match strip_forced(r) {
        Stripped::Untileable => CountResult::from_value(ExactNumber::zero()),
        Stripped::Reduced { region, multiplier } => {
            let inner = count_weighted(&region);
            CountResult::from_value(inner.value * multiplier)
        }
    }
}

/// Oracle output: the weighted count and, on request, every tiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub result: CountResult,
    pub tilings: Option<Vec<Vec<LozengePos>>>,
}

struct Search<'a> {
    ix: &'a Indexed,
    covered: Vec<bool>,
    stack: Vec<LozengePos>,
    total: BigInt,
    found: u64,
    keep: Option<Vec<Vec<LozengePos>>>,
    stop_after: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, from: usize, weight: &BigInt) {
        if self.stop_after.is_some_and(|s| self.found >= s) {
            return;
        }
        let Some(pos) = (from..self.covered.len()).find(|&i| !self.covered[i]) else {
            self.total += weight;
            self.found += 1;
            if let Some(k) = self.keep.as_mut() {
                k.push(self.stack.clone());
            }
            return;
        };
        self.covered[pos] = true;
        for (d, w) in &self.ix.forward[pos] {
            let other = pos + d;
            if self.covered[other] {
                continue;
            }
            self.covered[other] = true;
            let loz = LozengePos::new(self.ix.tris[pos], self.ix.tris[other]).unwrap();
            self.stack.push(loz);
            self.run(pos + 1, &(weight * w));
            self.stack.pop();
            self.covered[other] = false;
        }
        self.covered[pos] = false;
    }
}

/// Exhaustive backtracking count, always extending the lowest-indexed
/// uncovered triangle. `limit` overrides the default triangle cap.
pub fn enumerate_tilings(
    r: &Region,
    limit: Option<usize>,
    collect: bool,
) -> Result<Enumeration, CountError> {
    let cap = limit.unwrap_or(ORACLE_CAP);
    if r.len() > cap {
        return Err(CountError::TooLargeForOracle {
            triangles: r.len(),
            cap,
        });
    }
    let ix = Indexed::new(r);
    let mut s = Search {
        ix: &ix,
        covered: vec![false; ix.tris.len()],
        stack: Vec::new(),
        total: BigInt::zero(),
        found: 0,
        keep: collect.then(Vec::new),
        stop_after: None,
    };
    if r.is_balanced() {
        s.run(0, &BigInt::one());
    }
    let (total, found, keep) = (s.total, s.found, s.keep);
    Ok(Enumeration {
        result: CountResult {
            value: ix.unscale(total),
            tilings_enumerated: Some(found),
        },
        tilings: keep,
    })
}

/// The first tiling in backtracking order, or `None` if the region has none.
/// No triangle cap applies; the count is checked first so untileable
/// regions return at once.
pub fn first_tiling(r: &Region) -> Option<Vec<LozengePos>> {
    if count_weighted(r).value.is_zero() {
        return None;
    }
    let ix = Indexed::new(r);
    let mut s = Search {
        ix: &ix,
        covered: vec![false; ix.tris.len()],
        stack: Vec::new(),
        total: BigInt::zero(),
        found: 0,
        keep: Some(Vec::new()),
        stop_after: Some(1),
    };
    s.run(0, &BigInt::one());
    s.keep.and_then(|mut k| k.pop())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_hexagon, build_p};
    use crate::number::{int, ratio};

    #[test]
    fn trivial_regions() {
        assert_eq!(count_weighted(&Region::empty()).value, int(1));
        let lone = Region::new([UnitTriangle::up(0, 0)]);
        assert_eq!(count_weighted(&lone).value, int(0));
        assert_eq!(
            enumerate_tilings(&lone, None, false).unwrap().result.value,
            int(0)
        );
        assert_eq!(
            enumerate_tilings(&Region::empty(), None, false)
                .unwrap()
                .result
                .value,
            int(1)
        );
    }

    #[test]
    fn weighted_single_lozenge() {
        let (u, d) = (UnitTriangle::up(0, 0), UnitTriangle::down(0, 0));
        let r = Region::new([u, d])
            .with_weights([(LozengePos::new(u, d).unwrap(), ratio(1, 2))])
            .unwrap();
        assert_eq!(count_weighted(&r).value, ratio(1, 2));
        assert_eq!(
            enumerate_tilings(&r, None, false).unwrap().result.value,
            ratio(1, 2)
        );
    }

    #[test]
    fn hexagon_counts() {
        let h = build_hexagon(1, 1, 1);
        let e = enumerate_tilings(&h, None, true).unwrap();
        assert_eq!(e.result.value, int(2));
        assert_eq!(e.result.tilings_enumerated, Some(2));
        assert_eq!(e.tilings.unwrap().len(), 2);
        assert_eq!(count_weighted(&build_hexagon(2, 2, 2)).value, int(20));
        assert_eq!(count_weighted(&build_hexagon(3, 2, 0)).value, int(1));
    }

    #[test]
    fn wide_frontier() {
        let h = build_hexagon(2, 70, 1);
        assert!(Indexed::new(&h).max_offset() >= 128);
        assert_eq!(
            count_weighted(&h).value,
            crate::formulas::eval_macmahon(2, 70, 1).unwrap()
        );
        assert_eq!(count_weighted(&h).value, int(72 * 71 / 2));
    }

    #[test]
    fn proctor_small() {
        assert_eq!(count_weighted(&build_p(1, 1, 3).unwrap()).value, int(4));
    }

    #[test]
    fn oracle_cap() {
        let big = build_hexagon(4, 4, 4);
        assert_eq!(
            enumerate_tilings(&big, None, false),
            Err(CountError::TooLargeForOracle {
                triangles: 96,
                cap: 64
            })
        );
    }

    #[test]
    fn first_tiling_is_first_enumerated() {
        let h = build_hexagon(2, 2, 2);
        let all = enumerate_tilings(&h, None, true).unwrap().tilings.unwrap();
        assert_eq!(first_tiling(&h).as_ref(), all.first());
        assert_eq!(first_tiling(&Region::new([UnitTriangle::up(0, 0)])), None);
    }

    #[test]
    fn large_counts_fall_back_to_big_integers() {
        // scaled weights 2^108 per tiling overflow u128
        let h = build_hexagon(6, 6, 6);
        let plain = count_weighted(&h).value;
        let w: Vec<_> = h.lozenges().into_iter().map(|p| (p, ratio(2, 3))).collect();
        let hw = h.with_weights(w).unwrap();
        // every tiling has 108 lozenges, each weighted 2/3
        assert_eq!(
            count_weighted(&hw).value,
            plain * num::pow(ratio(2, 3), 108)
        );
    }
}

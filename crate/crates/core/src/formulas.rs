//! Closed-form product formulas over exact rationals.
//!
//! Bounded products `prod_{i=lo}^{hi}` with `hi < lo` are 1. Unbounded
//! products `prod_{i>=0} (f(i))_{g(i)}` run over the `i` with `g(i) >= 0`;
//! every such `g` here is decreasing, so the product stops at the first
//! negative length.

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::number::{ceil_div, floor_div, format_exact, half, int, ExactNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("singular Pochhammer symbol ({alpha})_{k}: factor {factor} vanishes")]
    SingularPochhammer {
        alpha: String,
        k: i64,
        factor: String,
    },
    #[error("division by zero in {0}")]
    ZeroDenominator(&'static str),
    #[error("Proctor formula needs a <= b, got a={a}, b={b}")]
    ProctorOrder { a: i64, b: i64 },
    #[error("hypergeometric series does not terminate")]
    NonTerminating,
    #[error("denominator parameter {b} vanishes at term {k} of the series")]
    DenominatorVanishes { b: String, k: i64 },
    #[error("parameter {name}={value} must be nonnegative")]
    Negative { name: &'static str, value: i64 },
}

pub type FormulaResult = Result<ExactNumber, FormulaError>;

/// Rising factorial `(alpha)_k`, with `(alpha)_k = 1/((alpha-1)...(alpha+k))`
/// for `k < 0`.
pub fn pochhammer(alpha: &ExactNumber, k: i64) -> FormulaResult {
    let mut r = ExactNumber::one();
    if k >= 0 {
        for t in 0..k {
            r *= alpha + int(t);
        }
        return Ok(r);
    }
    for t in 1..=-k {
        let f = alpha - int(t);
        if f.is_zero() {
            return Err(FormulaError::SingularPochhammer {
                alpha: format_exact(alpha),
                k,
                factor: format_exact(&f),
            });
        }
        r /= f;
    }
    Ok(r)
}

fn poch_i(alpha: i64, k: i64) -> FormulaResult {
    pochhammer(&int(alpha), k)
}

fn factorial(n: i64) -> ExactNumber {
    (1..=n).fold(ExactNumber::one(), |acc, i| acc * int(i))
}

fn recip(v: ExactNumber, what: &'static str) -> FormulaResult {
    if v.is_zero() {
        Err(FormulaError::ZeroDenominator(what))
    } else {
        Ok(v.recip())
    }
}

fn product(lo: i64, hi: i64, mut f: impl FnMut(i64) -> FormulaResult) -> FormulaResult {
    let mut r = ExactNumber::one();
    for i in lo..=hi {
        r *= f(i)?;
    }
    Ok(r)
}

/// `prod_{i>=0} (f(i))_{g(i)}` over the `i` with `g(i) >= 0`.
fn product_while(f: impl Fn(i64) -> ExactNumber, g: impl Fn(i64) -> i64) -> FormulaResult {
    let mut r = ExactNumber::one();
    let mut i = 0;
    while g(i) >= 0 {
        r *= pochhammer(&f(i), g(i))?;
        i += 1;
    }
    Ok(r)
}

fn nonneg(name: &'static str, value: i64) -> Result<(), FormulaError> {
    if value < 0 {
        Err(FormulaError::Negative { name, value })
    } else {
        Ok(())
    }
}

/// Constants that differ between the `D` and `D'` product formulas.
struct DShape {
    c1: i64,
    c2: i64,
    c3: i64,
    c4: i64,
    c5: i64,
    c6: i64,
    c7: i64,
}

const D_PLAIN: DShape = DShape {
    c1: 1,
    c2: 2,
    c3: 3,
    c4: 3,
    c5: 5,
    c6: -1,
    c7: 6,
};
const D_PRIMED: DShape = DShape {
    c1: 0,
    c2: 1,
    c3: 2,
    c4: 2,
    c5: 4,
    c6: -2,
    c7: 5,
};

fn eval_d_shape(x: &ExactNumber, y: i64, z: i64, m: i64, s: &DShape) -> FormulaResult {
    nonneg("y", y)?;
    nonneg("z", z)?;
    nonneg("m", m)?;
    let x2 = x * int(2);
    let lin = |c: i64| &x2 + int(c);
    let mut r = product(0, y - 1, |i| {
        Ok(
            pochhammer(&lin(2 * z - i - y + s.c1), y - i)? * factorial(i)
                / (factorial(2 * i + 1) * int(2)),
        )
    })?;
    r *= product(0, m - 1, |i| {
        Ok(
            pochhammer(&lin(-2 * y + 2 * z + 2 * i + s.c2), m - i)? * factorial(i + 1)
                / factorial(2 * i + 2),
        )
    })?;
    r *= product(0, m - z - 1, |i| {
        let num =
            pochhammer(&lin(m + 3 * z + 2 * i - y + s.c3), y - m)? * poch_i(y + i - z + 1, z)?;
        let den = pochhammer(&lin(-2 * y + 3 * z + i + s.c2), y - z)? * poch_i(i + 1, z)?;
        Ok(num * recip(den, "third product of the D formula")?)
    })?;
    r *= product(0, floor_div(m - z - 1, 3), |i| {
        pochhammer(&lin(y + 2 * z + 3 * i + s.c4), 3 * m - 3 * z - 2 - 9 * i)
    })?;
    r *= product(0, floor_div(m - z - 2, 3), |i| {
        pochhammer(
            &lin(-2 * y + 5 * z + 6 * i + s.c5),
            3 * m - 3 * z - 5 - 9 * i,
        )
    })?;
    r *= product(0, floor_div(m - z - 2, 3), |i| {
        recip(lin(y - z + 3 * m - 6 * i + s.c6), "D formula")
    })?;
    r *= product(0, floor_div(m - z - 3, 3), |i| {
        recip(lin(-2 * y + 5 * z + 6 * i + s.c7), "D formula")
    })?;
    Ok(r)
}

/// Tiling count of `D_{x,y,z,m}` in closed form; `x` may be any rational.
pub fn eval_d(x: &ExactNumber, y: i64, z: i64, m: i64) -> FormulaResult {
    eval_d_shape(x, y, z, m, &D_PLAIN)
}

/// Weighted tiling count of `D'_{x,y,z,m}` in closed form.
pub fn eval_d_prime(x: &ExactNumber, y: i64, z: i64, m: i64) -> FormulaResult {
    eval_d_shape(x, y, z, m, &D_PRIMED)
}

/// How a `prod_{i>=0}` with two Pochhammer factors decides which `i` to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductRule {
    /// Each factor keeps its own range of `i`.
    #[default]
    Separate,
    /// An `i` is kept only if both lengths are nonnegative.
    Joint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureVariant {
    D,
    DPrime,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The three-parameter formulas for `D_{x,y,m}` and `D'_{x,y,m}`
/// (no gap, `0 <= y <= x`).
pub fn eval_conjecture(
    variant: ConjectureVariant,
    x: i64,
    y: i64,
    m: i64,
    rule: ProductRule,
) -> FormulaResult {
    nonneg("y", y)?;
    nonneg("m", m)?;
    nonneg("x - y", x - y)?;
    let primed = variant == ConjectureVariant::DPrime;
    let xq = int(x);
    let h = half();
    let xh = |c: ExactNumber| &xq + c;
    let q = |p: i64, d: i64| ExactNumber::new(p.into(), d.into());

    let p = i64::from(primed);
    let mut r = product(1, m, |i| {
        Ok(factorial(x + i - p) / (factorial(x - i + m + y + 1) * factorial(2 * i - 1)))
    })?;
    r *= product(m + 1, m + y, |i| {
        Ok(factorial(x + 2 * m - i + 1 - p)
            / (factorial(2 * m + 2 * y - 2 * i + 1) * factorial(m + x - y + i - 1)))
    })?;
    r *= num::pow(int(2), (binom2(m) + binom2(y)) as usize);
    r *= product(1, m - 1, |i| Ok(factorial(i)))?;
    r *= product(1, y - 1, |i| Ok(factorial(i)))?;
    r *= product_while(|i| xh(int(i) + q(3, 2)), |i| m - 2 * i - 1)?;
    let m32 = q(3 * m, 2) - int(y);
    if !primed {
        r *= product_while(
            |i| xh(int(3 * i - y) + q(5, 2)),
            |i| floor_div(3 * y - 9 * i, 2) - 2,
        )?;
        r *= product_while(
            |i| xh(&m32 + int(ceil_div(3 * i, 2)) + q(3, 2)),
            |i| 3 * ceil_div(y, 2) - ceil_div(9 * i, 2) - 2,
        )?;
        r *= product_while(
            |i| xh(&m32 + int(floor_div(3 * i, 2) + 2)),
            |i| 3 * floor_div(y, 2) - floor_div(9 * i, 2) - 1,
        )?;
    } else {
        r *= product_while(
            |i| xh(int(3 * i - y) + q(7, 2)),
            |i| ceil_div(3 * y - 9 * i, 2) - 4,
        )?;
        r *= product_while(
            |i| xh(&m32 + int(floor_div(3 * i, 2)) + q(3, 2)),
            |i| 3 * ceil_div(y, 2) - floor_div(9 * i, 2) - 1,
        )?;
        r *= product_while(
            |i| xh(&m32 + int(ceil_div(3 * i, 2) + 1)),
            |i| 3 * floor_div(y, 2) - ceil_div(9 * i, 2) + 1,
        )?;
    }
    let fy = floor_div(y, 2);
    r *= product_while(|i| xh(int(m - fy + i + 1)), |i| 2 * fy - m - 2 * i)?;
    r *= product_while(|i| xh(int(fy + i + 2)), |i| m - 2 * fy - 2 * i - 2)?;

    // shared numerator of the second-to-last fractions
    let mut shared = product(0, y, |i| {
        pochhammer(&xh(int(-y + 3 * i + 1)), m + 2 * y - 4 * i)
    })?;
    shared *= product(0, ceil_div(y, 2) - 1, |i| {
        pochhammer(&xh(int(m - y + i + 1)), 3 * y - m - 4 * i)
    })?;
    let base = xh(q(m - y, 2));
    let den = match rule {
        ProductRule::Separate => {
            product_while(|i| &base + int(i + 1), |i| y - 2 * i)?
                * product_while(|i| &base + int(i) + q(3, 2), |i| y - 2 * i - 1)?
        }
        ProductRule::Joint => {
            let mut d = ExactNumber::one();
            let mut i = 0;
            while y - 2 * i > 0 {
                d *= pochhammer(&(&base + int(i + 1)), y - 2 * i)?;
                d *= pochhammer(&(&base + int(i) + q(3, 2)), y - 2 * i - 1)?;
                i += 1;
            }
            d
        }
    };
    r *= shared * recip(den, "conjecture denominator")?;

    if !primed {
        let num = product(0, y, |i| pochhammer(&xh(int(i + 2)), 2 * m - 2 * i - 1))?;
        let den = pochhammer(&xh(int(y + 2)), m - y - 1)? * pochhammer(&xh(int(m - y + 1)), m + y)?;
        r *= num * recip(den, "conjecture tail")?;
    } else {
        let mut num = pochhammer(&(xh(int(-y)) + &h), floor_div(m, 2) + 2 * y)?;
        num *= product(0, y, |i| pochhammer(&xh(int(i + 1)), 2 * m - 2 * i))?;
        // (x+m-y)_{y+1} / (x+m-y)_{m+y+1} = 1 / (x+m+1)_m, which stays
        // defined at x = y, m = 0 where both symbols vanish
        let mut den = pochhammer(&(&base + &h), floor_div(3 * y, 2))?;
        den *= pochhammer(&xh(q(3 * m - y, 2) + int(1)), y + 1)?;
        den *= pochhammer(&xh(q(m + y, 2) + int(1)), ceil_div(y - 2, 2))?;
        den *= pochhammer(&xh(int(m + 1)), m)?;
        den *= pochhammer(&xh(int(y + ceil_div(m, 2))), floor_div(m, 2) - y + 1)?;
        den *= product(0, ceil_div(y, 2) - 1, |i| Ok(xh(int(-y + 1 + 3 * i))))?;
        r *= num * recip(den, "weighted conjecture tail")?;
    }
    Ok(r)
}

/// Proctor's formula for `P_{a,b,c}`, `a <= b`.
pub fn eval_proctor(a: i64, b: i64, c: i64) -> FormulaResult {
    nonneg("a", a)?;
    nonneg("c", c)?;
    if a > b {
        return Err(FormulaError::ProctorOrder { a, b });
    }
    product(1, a, |i| {
        let first = product(1, b - a + 1, |j| {
            Ok(ExactNumber::new((c + i + j - 1).into(), (i + j - 1).into()))
        })?;
        let second = product(b - a + 2, b - a + i, |j| {
            Ok(ExactNumber::new(
                (2 * c + i + j - 1).into(),
                (i + j - 1).into(),
            ))
        })?;
        Ok(first * second)
    })
}

/// `(c+1)_a/(2c+1)_a * prod_{1<=i<=j<=a} (2c+i+j-1)/(i+j-1)` for rational `c`.
pub fn eval_proctor_sym_at(a: i64, c: &ExactNumber) -> FormulaResult {
    nonneg("a", a)?;
    let c2 = c * int(2);
    let mut r = pochhammer(&(c + int(1)), a)? * recip(pochhammer(&(&c2 + int(1)), a)?, "(2c+1)_a")?;
    for i in 1..=a {
        for j in i..=a {
            r *= (&c2 + int(i + j - 1)) / int(i + j - 1);
        }
    }
    Ok(r)
}

/// Symmetric Proctor count `M(P_{a,a,c})`.
pub fn eval_proctor_sym(a: i64, c: i64) -> FormulaResult {
    eval_proctor_sym_at(a, &int(c))
}

/// `(c+1/2)_a/(2c)_a * prod_{1<=i<=j<=a} (2c+i+j-2)/(i+j-1)` for rational `c`.
pub fn eval_proctor_prime_at(a: i64, c: &ExactNumber) -> FormulaResult {
    nonneg("a", a)?;
    let c2 = c * int(2);
    let mut r = pochhammer(&(c + half()), a)? * recip(pochhammer(&c2, a)?, "(2c)_a")?;
    for i in 1..=a {
        for j in i..=a {
            r *= (&c2 + int(i + j - 2)) / int(i + j - 1);
        }
    }
    Ok(r)
}

/// Weighted count `M(P'_{a,a,c})`; singular at `c = 0`, `a > 0`.
pub fn eval_proctor_prime(a: i64, c: i64) -> FormulaResult {
    eval_proctor_prime_at(a, &int(c))
}

/// MacMahon's box formula for `M(H_{a,b,c})`.
pub fn eval_macmahon(a: i64, b: i64, c: i64) -> FormulaResult {
    nonneg("a", a)?;
    nonneg("b", b)?;
    nonneg("c", c)?;
    let mut r = ExactNumber::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                r *= ExactNumber::new((i + j + k - 1).into(), (i + j + k - 2).into());
            }
        }
    }
    Ok(r)
}

/// Closed forms for the wedge families; `x` may be rational.
pub fn eval_rg_formula_at(
    family: crate::builders::RgFamily,
    x: &ExactNumber,
    a: i64,
    k: i64,
) -> FormulaResult {
    use crate::builders::RgFamily::*;
    nonneg("k", k)?;
    let x2 = x * int(2);
    let shift = if family.is_primed() { 0 } else { 1 };
    let second = match family {
        R | RPrime => poch_i(a + k + 1, k)?,
        G => pochhammer(&x2, k)?,
        GPrime => pochhammer(&(&x2 - int(1)), k)?,
    };
    let den = pochhammer(&(&x2 + int(a + k + shift)), k)? * factorial(k);
    let p = if family.is_primed() {
        eval_proctor_prime_at(a + k, x)?
    } else {
        eval_proctor_sym_at(a + k, x)?
    };
    Ok(poch_i(a + 1, k)? * second * recip(den, "wedge formula")? * p)
}

pub fn eval_rg_formula(family: crate::builders::RgFamily, x: i64, a: i64, k: i64) -> FormulaResult {
    eval_rg_formula_at(family, &int(x), a, k)
}

/// A `pFq` series at argument 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypSpec {
    pub numer: Vec<ExactNumber>,
    pub denom: Vec<ExactNumber>,
}

impl HypSpec {
    pub fn new(numer: Vec<ExactNumber>, denom: Vec<ExactNumber>) -> Self {
        HypSpec { numer, denom }
    }

    /// Index of the last nonzero term: the smallest `n` with `-n` among the
    /// numerator parameters.
    pub fn terminating_order(&self) -> Option<i64> {
        self.numer
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive())
            .map(|a| (-a.to_integer()).try_into().unwrap_or(i64::MAX))
            .min()
    }
}

/// Exact value of a terminating hypergeometric series at 1.
pub fn eval_hyp(spec: &HypSpec) -> FormulaResult {
    let n = spec
        .terminating_order()
        .ok_or(FormulaError::NonTerminating)?;
    let mut term = ExactNumber::one();
    let mut sum = ExactNumber::one();
    for k in 0..n {
        let kq = int(k);
        for b in &spec.denom {
            let f = b + &kq;
            if f.is_zero() {
                return Err(FormulaError::DenominatorVanishes {
                    b: format_exact(b),
                    k: k + 1,
                });
            }
            term /= f;
        }
        for a in &spec.numer {
            term *= a + &kq;
        }
        term /= int(k + 1);
        sum += &term;
    }
    Ok(sum)
}

/// Right-hand side of the classical transformation of a terminating `3F2`:
/// `3F2[-n,a,b;c,d;1] = (c+d-a-b)_n/(c)_n * 3F2[-n,d-a,d-b;d,c+d-a-b;1]`.
pub fn transformed_3f2(
    n: i64,
    a: &ExactNumber,
    b: &ExactNumber,
    c: &ExactNumber,
    d: &ExactNumber,
) -> FormulaResult {
    let e = c + d - a - b;
    let pre = pochhammer(&e, n)? * recip(pochhammer(c, n)?, "(c)_n")?;
    let inner = HypSpec::new(vec![int(-n), d - a, d - b], vec![d.clone(), e]);
    Ok(pre * eval_hyp(&inner)?)
}

/// Assembled closed form for `M(D_{x,y,y-1,m})` from the hypergeometric
/// evaluation; `x` may be rational (pass `x - 1/2` for the weighted region).
pub fn eval_gap_minus_one(x: &ExactNumber, y: i64, m: i64) -> FormulaResult {
    let x2 = x * int(2);
    let prefactor = split_prefactor(x, y, m)?;
    let ratio = pochhammer(&(&x2 + int(2 * m)), y)?
        * recip(pochhammer(&(&x2 + int(m + y)), y)?, "(2x+m+y)_y")?;
    let tail = (&x2 + int(3 * m + 1)) * recip(&x2 + int(2 * m), "2x+2m")?;
    Ok(prefactor * ratio * tail)
}

/// `P_{y,y,x-1} P_{m,m,x} (m-y+2)_{y-1}(2x)_{y-1}/((2x+m+1)_{y-1}(1)_{y-1})`.
pub fn split_prefactor(x: &ExactNumber, y: i64, m: i64) -> FormulaResult {
    let x2 = x * int(2);
    let p = eval_proctor_sym_at(y, &(x - int(1)))? * eval_proctor_sym_at(m, x)?;
    let num = poch_i(m - y + 2, y - 1)? * pochhammer(&x2, y - 1)?;
    let den = pochhammer(&(&x2 + int(m + 1)), y - 1)? * poch_i(1, y - 1)?;
    Ok(p * num * recip(den, "splitting prefactor")?)
}

/// The `3F2` whose value completes `M(D_{x,y,y-1,m})`.
pub fn gap_minus_one_series(x: &ExactNumber, y: i64, m: i64) -> HypSpec {
    HypSpec::new(
        vec![int(-y), int(y + 1), int(-m + y - 1)],
        vec![int(y), x * int(2) + int(m + y)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::RgFamily;
    use crate::number::ratio;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(7), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&int(2), 3).unwrap(), int(24));
        assert_eq!(pochhammer(&int(3), -2).unwrap(), ratio(1, 2));
        assert_eq!(pochhammer(&ratio(1, 2), 2).unwrap(), ratio(3, 4));
        assert!(matches!(
            pochhammer(&int(2), -3),
            Err(FormulaError::SingularPochhammer { .. })
        ));
    }

    #[test]
    fn d_formula_values() {
        for x in 0..4 {
            assert_eq!(eval_d(&int(x), 0, 0, 0).unwrap(), int(1));
            assert_eq!(eval_d_prime(&int(x), 0, 0, 0).unwrap(), int(1));
        }
        assert_eq!(eval_d(&int(2), 1, 1, 1).unwrap(), int(9));
        assert_eq!(eval_d_prime(&int(2), 1, 1, 1).unwrap(), ratio(25, 4));
        assert_eq!(eval_d(&ratio(3, 2), 1, 1, 1).unwrap(), ratio(25, 4));
    }

    #[test]
    fn proctor_values() {
        for x in 0..6 {
            assert_eq!(eval_proctor(1, 1, x).unwrap(), int(x + 1));
            assert_eq!(
                eval_proctor_prime(1, x.max(1)).unwrap(),
                int(x.max(1)) + half()
            );
        }
        for a in 0..5 {
            assert_eq!(eval_proctor_sym(a, 0).unwrap(), int(1));
            assert_eq!(eval_proctor_prime(0, a).unwrap(), int(1));
            for c in 0..4 {
                assert_eq!(eval_proctor(a, a, c), eval_proctor_sym(a, c));
            }
        }
        assert!(eval_proctor(3, 2, 1).is_err());
        assert!(eval_proctor_prime(2, 0).is_err());
    }

    #[test]
    fn macmahon_values() {
        assert_eq!(eval_macmahon(1, 1, 1).unwrap(), int(2));
        assert_eq!(eval_macmahon(3, 4, 0).unwrap(), int(1));
        assert_eq!(eval_macmahon(2, 2, 2).unwrap(), int(20));
        assert_eq!(eval_macmahon(1, 2, 1).unwrap(), int(3));
    }

    #[test]
    fn wedge_formula_values() {
        for x in 0..5 {
            assert_eq!(eval_rg_formula(RgFamily::R, x, 0, 1).unwrap(), int(1));
            for a in 0..4 {
                assert_eq!(
                    eval_rg_formula(RgFamily::G, x, a, 0),
                    eval_proctor_sym(a, x)
                );
            }
        }
        for x in 1..4 {
            for a in 0..3 {
                for k in 0..3 {
                    let shifted = &int(x) - half();
                    assert_eq!(
                        eval_rg_formula(RgFamily::RPrime, x, a, k).unwrap(),
                        eval_rg_formula_at(RgFamily::R, &shifted, a, k).unwrap()
                    );
                    assert_eq!(
                        eval_rg_formula(RgFamily::GPrime, x, a, k).unwrap(),
                        eval_rg_formula_at(RgFamily::G, &shifted, a, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hypergeometric_values() {
        let zero = HypSpec::new(vec![int(0), int(3), int(5)], vec![int(2), int(7)]);
        assert_eq!(eval_hyp(&zero).unwrap(), int(1));
        let s = HypSpec::new(vec![int(-1), int(-1), int(2)], vec![int(1), int(4)]);
        assert_eq!(eval_hyp(&s).unwrap(), ratio(3, 2));
        assert_eq!(
            eval_hyp(&HypSpec::new(vec![int(1)], vec![int(2)])),
            Err(FormulaError::NonTerminating)
        );
        let bad = HypSpec::new(vec![int(-3), int(1)], vec![int(-1)]);
        assert!(matches!(
            eval_hyp(&bad),
            Err(FormulaError::DenominatorVanishes { .. })
        ));
        // (n,a,b,c,d) = (2,1,1,2,3)
        let lhs = eval_hyp(&HypSpec::new(
            vec![int(-2), int(1), int(1)],
            vec![int(2), int(3)],
        ))
        .unwrap();
        let rhs = transformed_3f2(2, &int(1), &int(1), &int(2), &int(3)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjecture_empty_case() {
        for x in 0..5 {
            for rule in [ProductRule::Separate, ProductRule::Joint] {
                assert_eq!(
                    eval_conjecture(ConjectureVariant::D, x, 0, 0, rule).unwrap(),
                    int(1)
                );
            }
        }
    }

    #[test]
    fn empty_products_are_one() {
        assert_eq!(product(3, 2, |_| Ok(int(0))).unwrap(), int(1));
        assert_eq!(product_while(|_| int(0), |_| -1).unwrap(), int(1));
    }

    proptest! {
        #[test]
        fn pochhammer_inversion(p in -30i64..30, q in 1i64..6, k in 0i64..8) {
            let alpha = ExactNumber::new(p.into(), q.into());
            let fwd = pochhammer(&alpha, k).unwrap();
            if let Ok(back) = pochhammer(&(&alpha + int(k)), -k) {
                prop_assert_eq!(fwd * back, int(1));
            } else {
                prop_assert!(fwd.is_zero());
            }
        }

        #[test]
        fn transformation_holds(n in 0i64..7, a in -4i64..5, b in -4i64..5, c in 1i64..6, d in 1i64..6) {
            let lhs = eval_hyp(&HypSpec::new(vec![int(-n), int(a), int(b)], vec![int(c), int(d)]));
            let rhs = transformed_3f2(n, &int(a), &int(b), &int(c), &int(d));
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                prop_assert_eq!(l, r);
            }
        }
    }
}

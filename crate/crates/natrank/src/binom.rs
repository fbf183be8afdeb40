//! Exact generalized binomial coefficients over all integer arguments,
//! plus the counting identities the rank formulas are built on.
//!
//! Everything here is arbitrary precision. Coefficients are computed with
//! the multiplicative formula `C(x, y) = Π_{i=1..y} (x-y+i) / i`, dividing
//! exactly at every step, so intermediates never exceed the result and no
//! factorial tables are needed.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Generalized binomial coefficient `C(x, y)`, total on ℤ².
///
/// * `y < 0` → 0
/// * `0 ≤ x < y` → 0
/// * `x ≥ y ≥ 0` → `x! / (y! (x-y)!)`
/// * `x < 0, y ≥ 0` → `(-1)^y C(y-x-1, y)` (upper negation)
///
/// The negative-`x` rule takes precedence over the `x < y` zero rule where
/// both apply.
pub fn binom(x: &BigInt, y: &BigInt) -> BigInt {
    if y.is_negative() {
        return BigInt::zero();
    }
    let y_mag = y.magnitude();
    if x.is_negative() {
        // C(y - x - 1, y), top argument is y + |x| - 1 ≥ y ≥ 0.
        let top = y_mag + x.magnitude() - 1u32;
        let value = BigInt::from(choose_big(&top, y_mag));
        if y_mag.bit(0) {
            -value
        } else {
            value
        }
    } else {
        BigInt::from(choose_big(x.magnitude(), y_mag))
    }
}

/// `C(x, y)` for naturals, with the small second argument the rank codecs
/// use. Returns 0 when `x < y`.
pub(crate) fn choose(x: &BigUint, y: u64) -> BigUint {
    let y_big = BigUint::from(y);
    if *x < y_big {
        return BigUint::zero();
    }
    let complement = x - &y_big;
    if complement < y_big {
        // C(x, y) = C(x, x-y); the shorter product wins.
        let steps = complement.to_u64().expect("complement below y fits u64");
        rising_product(&y_big, steps)
    } else {
        rising_product(&complement, y)
    }
}

fn choose_big(x: &BigUint, y: &BigUint) -> BigUint {
    if y > x {
        return BigUint::zero();
    }
    let complement = x - y;
    let short = y.min(&complement);
    let steps = short
        .to_u64()
        .expect("binomial coefficient too large to materialize");
    rising_product(&(x - short), steps)
}

/// `Π_{i=1..steps} (base + i) / i = C(base + steps, steps)`.
///
/// Every prefix of the product is itself a binomial coefficient, so each
/// division is exact.
fn rising_product(base: &BigUint, steps: u64) -> BigUint {
    let mut result = BigUint::one();
    let mut factor = base.clone();
    for i in 1..=steps {
        factor += 1u32;
        result *= &factor;
        result /= i;
    }
    result
}

/// Sum of the first `y + 1` diagonal coefficients, `Σ_{i=0..y} C(i+x-1, i)`.
///
/// Computed term by term; the parallel summation identity says the result
/// equals `C(x+y, y)`, and the tests hold it to that.
pub fn parallel_sum(x: &BigInt, y: i64) -> Result<BigInt, Error> {
    if y < 0 {
        return Err(Error::InvalidArgument("parallel_sum needs y >= 0"));
    }
    let mut total = BigInt::zero();
    for i in 0..=y {
        let top = x + (i - 1);
        total += binom(&top, &BigInt::from(i));
    }
    Ok(total)
}

/// Number of `m`-tuples of naturals summing to `j`: `C(m-1+j, j)`.
///
/// Zero for negative `j`; `m` must be at least 1.
pub fn compositions_count(m: u64, j: &BigInt) -> Result<BigInt, Error> {
    if m < 1 {
        return Err(Error::InvalidArgument("compositions_count needs m >= 1"));
    }
    let top = j + (m - 1);
    Ok(binom(&top, j))
}

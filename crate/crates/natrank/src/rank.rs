//! Rank and unrank codecs between tuples of naturals and single naturals,
//! plus resumable enumerator streams.
//!
//! A monotone tuple's rank is the size of its strict down-set in the cone,
//! `Σ_{i=1..k} C(k-i + n_i, k-i+1)`. Substituting `c_i = k-i + n_i` turns
//! the sum into a combinatorial number system digit expansion with strictly
//! decreasing digits `c_1 > c_2 > … > c_k` and degrees `k, k-1, …, 1`, so
//! unranking is greedy: repeatedly take the largest `c` whose coefficient
//! still fits in the remainder. The full-space rank composes the cone rank
//! with [`Tuple::unfold`] and has its own closed form
//! `Σ_{i=1..k} C(i-1 + n_1 + … + n_i, i)`, which this module evaluates
//! directly; the two routes agreeing is one of the test-suite invariants.
//!
//! Everything is exact: ranks grow like the k-th power of the coordinate
//! sum and would overflow any fixed width almost immediately.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::choose;
use crate::monotone::{Dimension, MonotoneTuple, Tuple};

/// Rank of a monotone tuple: how many monotone tuples precede it
/// lexicographically.
pub fn rank_monotone(m: &MonotoneTuple) -> BigUint {
    let k = m.coords().len();
    let mut total = BigUint::zero();
    for (idx, coord) in m.coords().iter().enumerate() {
        let degree = (k - idx) as u64;
        total += choose(&(coord + (degree - 1)), degree);
    }
    total
}

/// Inverse of [`rank_monotone`]: the unique monotone tuple with the given
/// rank.
///
/// Greedy combinadic decoding. For digit positions of degree `k, k-1, …, 1`
/// take the largest `c` with `C(c, degree) ≤ remainder` and subtract; the
/// previous digit is always a valid exclusive upper bound for the next
/// search, and the coordinate is recovered as `c - (degree - 1)`.
pub fn unrank_monotone(rank: &BigUint, k: Dimension) -> MonotoneTuple {
    let k = k.get();
    let mut remainder = rank.clone();
    let mut coords = Vec::with_capacity(k);
    let mut previous_digit: Option<BigUint> = None;
    for idx in 0..k {
        let degree = (k - idx) as u64;
        let digit = largest_digit(&remainder, degree, previous_digit.as_ref());
        remainder -= choose(&digit, degree);
        coords.push(&digit - (degree - 1));
        previous_digit = Some(digit);
    }
    debug_assert!(remainder.is_zero(), "combinadic digits must exhaust the rank");
    MonotoneTuple::new(coords).expect("strictly decreasing digits give nonincreasing coordinates")
}

/// Largest `c` with `C(c, degree) ≤ remainder`, found by doubling then
/// binary search. When `bound` is given, `C(bound, degree) > remainder`
/// already holds and the doubling phase is skipped.
fn largest_digit(remainder: &BigUint, degree: u64, bound: Option<&BigUint>) -> BigUint {
    // C(degree - 1, degree) = 0 ≤ remainder, so `low` always satisfies.
    let mut low = BigUint::from(degree - 1);
    let mut high = match bound {
        Some(b) => b.clone(),
        None => {
            let mut h = BigUint::from(degree);
            while choose(&h, degree) <= *remainder {
                h <<= 1;
            }
            h
        }
    };
    debug_assert!(choose(&high, degree) > *remainder);
    while &high - &low > BigUint::one() {
        let mid = (&low + &high) >> 1;
        if choose(&mid, degree) <= *remainder {
            low = mid;
        } else {
            high = mid;
        }
    }
    low
}

/// Rank of an arbitrary tuple along the diagonal walk of ℕ^k.
///
/// Evaluated directly from the prefix sums; equals
/// `rank_monotone(&n.unfold())`.
pub fn rank_tuple(n: &Tuple) -> BigUint {
    let mut total = BigUint::zero();
    let mut prefix = BigUint::zero();
    for (idx, coord) in n.coords().iter().enumerate() {
        prefix += coord;
        let degree = (idx + 1) as u64;
        total += choose(&(&prefix + (degree - 1)), degree);
    }
    total
}

/// Inverse of [`rank_tuple`]: unrank into the cone, then fold out.
pub fn unrank_tuple(rank: &BigUint, k: Dimension) -> Tuple {
    unrank_monotone(rank, k).fold()
}

/// Which of the two walks an [`Enumerator`] yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Space {
    /// Monotone tuples in lexicographic order.
    Cone,
    /// All of ℕ^k in diagonal-walk order.
    Full,
}

/// Resumable stream of tuples in rank order, starting at rank 0.
///
/// The state is the next monotone tuple and its rank; snapshots serialize,
/// so a stream can be persisted mid-walk and resumed later. The stream
/// never ends on its own.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Enumerator {
    space: Space,
    next_rank: BigUint,
    state: MonotoneTuple,
}

impl Enumerator {
    pub fn space(&self) -> Space {
        self.space
    }

    /// Rank of the element the next call to `next` will yield.
    pub fn next_rank(&self) -> &BigUint {
        &self.next_rank
    }

    pub fn dim(&self) -> Dimension {
        self.state.dim()
    }
}

impl Iterator for Enumerator {
    type Item = Tuple;

    fn next(&mut self) -> Option<Tuple> {
        let out = match self.space {
            Space::Cone => Tuple::from(self.state.clone()),
            Space::Full => self.state.fold(),
        };
        self.state = self.state.successor();
        self.next_rank += 1u32;
        Some(out)
    }
}

/// Stream the chosen walk from rank 0 upward.
pub fn enumerate(k: Dimension, space: Space) -> Enumerator {
    Enumerator {
        space,
        next_rank: BigUint::zero(),
        state: MonotoneTuple::minimum(k),
    }
}

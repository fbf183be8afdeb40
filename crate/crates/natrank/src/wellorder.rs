//! Generic predecessor-counting ranks for successor-generated linear
//! orders.
//!
//! For any infinite linearly ordered set in which every element has only
//! finitely many strict predecessors, mapping each element to the size of
//! its strict down-set is a bijection onto ℕ. This module realizes the
//! counting side executably: an order is described by its minimum, its
//! successor function, and its comparator ([`OrderSpec`]), and
//! [`rank_by_counting`] walks the successor chain tallying smaller
//! elements. Gap-freeness of the successor cannot be proven from the
//! interface, so [`verify_prefix_bijection`] checks the premises
//! mechanically on a finite prefix instead.

use std::cmp::Ordering;

use crate::monotone::{lex_cmp, Dimension, MonotoneTuple};
use crate::Error;

/// A linear order presented by minimum, successor, and comparator.
///
/// The contract, checked by [`verify_prefix_bijection`] rather than
/// assumed: `compare` is a strict total order on the elements the
/// successor chain reaches, `first` is the minimum, and `next` steps to
/// the immediate successor without skipping.
///
/// Implementations with interior mutability must synchronize externally;
/// everything here calls the spec read-only.
pub trait OrderSpec {
    type Elem: Clone;

    /// The minimum element, where the chain starts.
    fn first(&self) -> Self::Elem;

    /// The immediate successor of `a`.
    fn next(&self, a: &Self::Elem) -> Self::Elem;

    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
}

/// The naturals with zero, `+1`, and the usual order.
#[derive(Clone, Copy, Debug, Default)]
pub struct Naturals;

impl OrderSpec for Naturals {
    type Elem = u64;

    fn first(&self) -> u64 {
        0
    }

    fn next(&self, a: &u64) -> u64 {
        a + 1
    }

    fn compare(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }
}

/// The monotone cone of a fixed dimension under the lexicographic order.
#[derive(Clone, Copy, Debug)]
pub struct MonotoneCone {
    k: Dimension,
}

impl MonotoneCone {
    pub fn new(k: Dimension) -> Self {
        Self { k }
    }
}

impl OrderSpec for MonotoneCone {
    type Elem = MonotoneTuple;

    fn first(&self) -> MonotoneTuple {
        MonotoneTuple::minimum(self.k)
    }

    fn next(&self, a: &MonotoneTuple) -> MonotoneTuple {
        a.successor()
    }

    fn compare(&self, a: &MonotoneTuple, b: &MonotoneTuple) -> Ordering {
        lex_cmp(a.coords(), b.coords()).expect("cone elements share the dimension")
    }
}

/// Ad-hoc order built from closures; handy for tests and experiments.
pub struct FnOrder<T, C, N> {
    pub first: T,
    pub compare: C,
    pub next: N,
}

impl<T, C, N> OrderSpec for FnOrder<T, C, N>
where
    T: Clone,
    C: Fn(&T, &T) -> Ordering,
    N: Fn(&T) -> T,
{
    type Elem = T;

    fn first(&self) -> T {
        self.first.clone()
    }

    fn next(&self, a: &T) -> T {
        (self.next)(a)
    }

    fn compare(&self, a: &T, b: &T) -> Ordering {
        (self.compare)(a, b)
    }
}

/// Count the elements strictly below `target` by walking the successor
/// chain from the minimum, stopping on the first comparison that says
/// equal.
///
/// `budget` bounds the number of successor applications, making the walk
/// total: a target outside the enumerated prefix reports
/// [`Error::BudgetExhausted`] instead of looping forever.
pub fn rank_by_counting<S: OrderSpec>(
    spec: &S,
    target: &S::Elem,
    budget: u64,
) -> Result<u64, Error> {
    let mut current = spec.first();
    let mut below = 0u64;
    let mut steps = 0u64;
    loop {
        match spec.compare(&current, target) {
            Ordering::Equal => return Ok(below),
            Ordering::Less => below += 1,
            Ordering::Greater => {}
        }
        if steps == budget {
            return Err(Error::BudgetExhausted { budget });
        }
        steps += 1;
        current = spec.next(&current);
    }
}

/// First problem found while verifying an order prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `compare(a_i, a_i)` did not say equal.
    NotIrreflexive { index: u64 },
    /// Element at `index` has `counted` sampled elements below it instead
    /// of `index`: strict growth or gap-freeness is broken there.
    RankMismatch { index: u64, counted: u64 },
    /// Positions `lower < upper` on the chain whose comparisons do not
    /// agree with the chain order in both directions.
    InconsistentPair { lower: u64, upper: u64 },
    /// Sampled triple on which `compare` fails transitivity.
    NotTransitive { first: u64, second: u64, third: u64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotIrreflexive { index } => {
                write!(f, "element {index} does not compare equal to itself")
            }
            Violation::RankMismatch { index, counted } => write!(
                f,
                "element {index} has {counted} walked elements below it, expected {index}"
            ),
            Violation::InconsistentPair { lower, upper } => write!(
                f,
                "elements {lower} and {upper} compare inconsistently with their chain order"
            ),
            Violation::NotTransitive { first, second, third } => write!(
                f,
                "compare is not transitive on sampled elements {first}, {second}, {third}"
            ),
        }
    }
}

/// Outcome of [`verify_prefix_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// How many chain elements were walked.
    pub checked: u64,
    /// The first violation found, if any.
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.violation {
            None => write!(f, "pass: first {} ranks are 0..{}", self.checked, self.checked),
            Some(v) => write!(f, "fail after walking {} elements: {v}", self.checked),
        }
    }
}

/// Walk the first `n` chain elements and check that predecessor counting
/// is the identity on their indices.
///
/// Checks, in order, reporting the first violation:
/// 1. per element, ascending: `compare(a_i, a_i)` is equal, and the number
///    of walked elements below `a_i` is exactly `i` (ranks are 0..n-1 with
///    no gap — counted over the whole walked sample, so an element a
///    broken successor skips and emits late is caught at its proper rank);
/// 2. per pair `i < j`: `compare` agrees with the chain order both ways;
/// 3. per sampled triple: transitivity.
pub fn verify_prefix_bijection<S: OrderSpec>(spec: &S, n: u64) -> VerificationReport {
    let n_elems = usize::try_from(n).expect("prefix length fits usize");
    let mut chain = Vec::with_capacity(n_elems);
    let mut current = spec.first();
    for _ in 0..n_elems {
        let next = spec.next(&current);
        chain.push(current);
        current = next;
    }

    let report = |violation| VerificationReport {
        checked: n,
        violation: Some(violation),
    };

    for (i, a) in chain.iter().enumerate() {
        if spec.compare(a, a) != Ordering::Equal {
            return report(Violation::NotIrreflexive { index: i as u64 });
        }
        let counted = chain
            .iter()
            .filter(|x| spec.compare(x, a) == Ordering::Less)
            .count() as u64;
        if counted != i as u64 {
            return report(Violation::RankMismatch {
                index: i as u64,
                counted,
            });
        }
    }

    for i in 0..chain.len() {
        for j in (i + 1)..chain.len() {
            let forward = spec.compare(&chain[i], &chain[j]);
            let backward = spec.compare(&chain[j], &chain[i]);
            if forward != Ordering::Less || backward != Ordering::Greater {
                return report(Violation::InconsistentPair {
                    lower: i as u64,
                    upper: j as u64,
                });
            }
        }
    }

    // Transitivity on a strided subsample plus all consecutive triples;
    // the full triple set is cubic.
    let stride = (chain.len() / 40).max(1);
    let sample: Vec<usize> = (0..chain.len()).step_by(stride).collect();
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for (a_pos, &a) in sample.iter().enumerate() {
        for (b_pos, &b) in sample.iter().enumerate().skip(a_pos + 1) {
            for &c in sample.iter().skip(b_pos + 1) {
                triples.push((a, b, c));
            }
        }
    }
    for w in chain.len().checked_sub(2).map(|end| 0..end).unwrap_or(0..0) {
        triples.push((w, w + 1, w + 2));
    }
    for (a, b, c) in triples {
        let ab = spec.compare(&chain[a], &chain[b]) == Ordering::Less;
        let bc = spec.compare(&chain[b], &chain[c]) == Ordering::Less;
        let ac = spec.compare(&chain[a], &chain[c]) == Ordering::Less;
        if ab && bc && !ac {
            return report(Violation::NotTransitive {
                first: a as u64,
                second: b as u64,
                third: c as u64,
            });
        }
    }

    VerificationReport {
        checked: n,
        violation: None,
    }
}

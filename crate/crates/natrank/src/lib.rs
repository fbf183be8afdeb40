//! Exact, arbitrary-precision bijections between tuples of naturals and
//! single naturals.
//!
//! The library enumerates ℕ^k along anti-diagonals of constant coordinate
//! sum (the classic zig-zag walk that proves ℕ×ℕ is countable) and, more
//! importantly, evaluates the position of any tuple in that walk directly:
//!
//! * [`rank_tuple`] maps a k-tuple to its walk index,
//!   `Σ_{i=1..k} C(i-1 + n_1 + … + n_i, i)`;
//! * [`unrank_tuple`] inverts it by greedy combinadic decoding;
//! * [`rank_monotone`] / [`unrank_monotone`] are the same pair on the cone
//!   of nonincreasing tuples, where the rank is
//!   `Σ_{i=1..k} C(k-i + n_i, k-i+1)`;
//! * [`enumerate`] streams either walk from rank 0 without ranking each
//!   element, via the cone's successor function.
//!
//! The two worlds are glued by [`MonotoneTuple::fold`] (last coordinate,
//! then consecutive differences) and its inverse [`Tuple::unfold`] (prefix
//! sums). All arithmetic is exact big-integer arithmetic; there is no
//! fixed-width fast path and no floating point anywhere.
//!
//! The [`wellorder`] module generalizes the construction: for any linear
//! order with a minimum, a gap-free successor, and finite down-sets,
//! counting strict predecessors is a bijection onto ℕ. It ships a
//! predecessor-counting ranker and a mechanical verifier for the premises.
//!
//! ```
//! use natrank::{rank_tuple, unrank_tuple, Dimension, Tuple};
//!
//! let n = Tuple::from_u64s(&[2, 0]).unwrap();
//! let rank = rank_tuple(&n);
//! assert_eq!(rank.to_string(), "5");
//! assert_eq!(unrank_tuple(&rank, Dimension::new(2).unwrap()), n);
//! ```

pub mod binom;
pub mod cli;
pub mod monotone;
pub mod rank;
pub mod wellorder;

mod error;

pub use error::Error;
pub use monotone::{lex_cmp, Dimension, MonotoneTuple, Tuple};
pub use rank::{
    enumerate, rank_monotone, rank_tuple, unrank_monotone, unrank_tuple, Enumerator, Space,
};
pub use wellorder::{
    rank_by_counting, verify_prefix_bijection, FnOrder, MonotoneCone, Naturals, OrderSpec,
    VerificationReport, Violation,
};

//! Tuples of naturals, the lexicographic order, the monotone cone, its
//! successor function, and the fold/unfold bijection between the cone and
//! the full space.
//!
//! The cone is the set of k-tuples with nonincreasing coordinates. Under
//! the lexicographic order it is a well-order whose immediate successor has
//! a closed form: find the trailing block of equal coordinates, bump its
//! first entry, zero the rest. Folding a cone element into its last
//! coordinate followed by consecutive differences lands anywhere in ℕ^k,
//! and taking prefix sums goes back.

use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroUsize;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Arity of an encoding; always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dimension(NonZeroUsize);

impl Dimension {
    pub fn new(k: usize) -> Result<Self, Error> {
        NonZeroUsize::new(k).map(Self).ok_or(Error::ZeroDimension)
    }

    pub fn get(self) -> usize {
        self.0.get()
    }
}

impl TryFrom<usize> for Dimension {
    type Error = Error;

    fn try_from(k: usize) -> Result<Self, Error> {
        Self::new(k)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of ℕ^k: at least one coordinate, every coordinate a natural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<BigUint>", into = "Vec<BigUint>")]
pub struct Tuple {
    coords: Vec<BigUint>,
}

/// An element of the monotone cone: coordinates nonincreasing left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<BigUint>", into = "Vec<BigUint>")]
pub struct MonotoneTuple {
    coords: Vec<BigUint>,
}

impl Tuple {
    pub fn new(coords: Vec<BigUint>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { coords })
    }

    pub fn from_u64s(coords: &[u64]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigUint> {
        self.coords
    }

    pub fn dim(&self) -> Dimension {
        Dimension::new(self.coords.len()).expect("tuples are nonempty")
    }

    /// True iff the coordinates are nonincreasing.
    pub fn is_monotone(&self) -> bool {
        first_increase(&self.coords).is_none()
    }

    /// Inverse of [`MonotoneTuple::fold`]: the i-th output coordinate
    /// (1-based) is the sum of the first k-i+1 input coordinates, so the
    /// result is always monotone.
    pub fn unfold(&self) -> MonotoneTuple {
        let k = self.coords.len();
        let mut prefix = BigUint::zero();
        let mut coords = vec![BigUint::zero(); k];
        for (i, c) in self.coords.iter().enumerate() {
            prefix += c;
            coords[k - 1 - i] = prefix.clone();
        }
        MonotoneTuple { coords }
    }
}

impl MonotoneTuple {
    pub fn new(coords: Vec<BigUint>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        match first_increase(&coords) {
            Some(position) => Err(Error::NotMonotone { position }),
            None => Ok(Self { coords }),
        }
    }

    pub fn from_u64s(coords: &[u64]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The all-zero tuple, the minimum of the cone under [`lex_cmp`].
    pub fn minimum(k: Dimension) -> Self {
        Self {
            coords: vec![BigUint::zero(); k.get()],
        }
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigUint> {
        self.coords
    }

    pub fn dim(&self) -> Dimension {
        Dimension::new(self.coords.len()).expect("tuples are nonempty")
    }

    /// The immediate lexicographic successor within the cone.
    ///
    /// Locates the trailing block of equal coordinates, increments the
    /// coordinate at its start, and zeroes everything after it. When all
    /// coordinates are equal the block starts at the front, so the first
    /// coordinate is bumped and the rest reset to zero.
    pub fn successor(&self) -> MonotoneTuple {
        let k = self.coords.len();
        let last = &self.coords[k - 1];
        let mut block_start = k - 1;
        while block_start > 0 && self.coords[block_start - 1] == *last {
            block_start -= 1;
        }
        let mut coords = Vec::with_capacity(k);
        coords.extend_from_slice(&self.coords[..block_start]);
        coords.push(last + 1u32);
        coords.resize(k, BigUint::zero());
        MonotoneTuple { coords }
    }

    /// Fold into an arbitrary element of ℕ^k: last coordinate first, then
    /// consecutive differences right to left.
    pub fn fold(&self) -> Tuple {
        let coords = self
            .coords
            .windows(2)
            .rev()
            .map(|pair| &pair[0] - &pair[1])
            .collect::<Vec<_>>();
        let mut out = Vec::with_capacity(self.coords.len());
        out.push(self.coords[self.coords.len() - 1].clone());
        out.extend(coords);
        Tuple { coords: out }
    }
}

impl From<MonotoneTuple> for Tuple {
    fn from(m: MonotoneTuple) -> Self {
        Tuple { coords: m.coords }
    }
}

impl TryFrom<Vec<BigUint>> for Tuple {
    type Error = Error;

    fn try_from(coords: Vec<BigUint>) -> Result<Self, Error> {
        Self::new(coords)
    }
}

impl From<Tuple> for Vec<BigUint> {
    fn from(t: Tuple) -> Self {
        t.coords
    }
}

impl TryFrom<Vec<BigUint>> for MonotoneTuple {
    type Error = Error;

    fn try_from(coords: Vec<BigUint>) -> Result<Self, Error> {
        Self::new(coords)
    }
}

impl From<MonotoneTuple> for Vec<BigUint> {
    fn from(m: MonotoneTuple) -> Self {
        m.coords
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_coords(&self.coords, f)
    }
}

impl fmt::Display for MonotoneTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_coords(&self.coords, f)
    }
}

fn display_coords(coords: &[BigUint], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

/// Index of the first coordinate strictly greater than its predecessor
/// (1-based position of the violation), or `None` when nonincreasing.
fn first_increase(coords: &[BigUint]) -> Option<usize> {
    coords
        .windows(2)
        .position(|pair| pair[0] < pair[1])
        .map(|i| i + 1)
}

/// Lexicographic comparison on ℕ^k: decided by the first differing
/// coordinate. Defined on all of ℕ^k, not just the cone.
pub fn lex_cmp(a: &[BigUint], b: &[BigUint]) -> Result<Ordering, Error> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            decided => return Ok(decided),
        }
    }
    Ok(Ordering::Equal)
}

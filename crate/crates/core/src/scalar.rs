//! The integer scalar every exact type in this crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer ring used for surd coordinates, matrix entries and rationals.
///
/// Implemented for `BigInt` (the default everywhere in the public aliases) and
/// for the signed primitive integers. Fixed-width instantiations trap on
/// overflow in every profile of this workspace, so they never wrap silently.
pub trait Int:
    Integer
    + Roots
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Roots
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for small constants inside generic code.
#[inline]
pub(crate) fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("integer literal out of range")
}

/// `Some(r)` when `n` is a perfect square `r²` (with `r ≥ 0`).
pub fn exact_sqrt<T: Int>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if r.clone() * r.clone() == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square<T: Int>(n: &T) -> bool {
    exact_sqrt(n).is_some()
}

/// Squarefree test by trial division; only used on small CM discriminants.
pub fn is_squarefree<T: Int>(n: &T) -> bool {
    let n = n.abs();
    if n.is_zero() {
        return false;
    }
    let mut p: T = int(2);
    while p.clone() * p.clone() <= n {
        if (n.clone() % (p.clone() * p.clone())).is_zero() {
            return false;
        }
        p = p + T::one();
    }
    true
}

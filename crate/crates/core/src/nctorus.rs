//! Invariants of noncommutative tori with real multiplication.
//!
//! A torus is carried entirely by its quadratic irrational `θ`; its K₀ group
//! is `ℤ²` ordered by `p + θq ≥ 0`.

use num_rational::Ratio;

use crate::cfrac::{tail_equivalent, CfExpansion};
use crate::error::{Error, Result};
use crate::qelem::{QElem, Sign};
use crate::scalar::Int;
use crate::surd::{Number, QuadSurd};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcTorus<T: Int> {
    theta: QuadSurd<T>,
}

/// An element `(p, q)` of `K₀ ≅ ℤ²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct K0Class<T> {
    pub p: T,
    pub q: T,
}

impl<T: Int> K0Class<T> {
    pub fn new(p: T, q: T) -> Self {
        Self { p, q }
    }
}

/// The full module `μ(ℤ + θℤ) ⊂ ℝ` with `μ > 0` in the field of `θ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoLattice<T: Int> {
    mu: QElem<T>,
    theta: QuadSurd<T>,
}

impl<T: Int> NcTorus<T> {
    pub fn new(theta: Number<T>) -> Result<Self> {
        match theta {
            Number::Surd(theta) => Ok(Self { theta }),
            Number::Rational(r) => Err(Error::RationalTheta(r.to_string())),
        }
    }

    pub fn theta(&self) -> &QuadSurd<T> {
        &self.theta
    }

    pub fn expansion(&self) -> CfExpansion<T> {
        CfExpansion::of_surd(&self.theta)
    }

    /// Length of the minimal period of the continued fraction of `θ`.
    pub fn arithmetic_complexity(&self) -> usize {
        self.expansion().period().len()
    }

    /// The minimal period divided through by its first entry.
    ///
    /// With `canonicalize` the period is first rotated to its lexicographically
    /// smallest rotation, which makes the result independent of where the
    /// period happens to start. Without it the period is used as it falls out
    /// of the expansion.
    pub fn normalized_period(&self, canonicalize: bool) -> Vec<Ratio<T>> {
        let period = self.expansion().period().to_vec();
        let period = if canonicalize { least_rotation(&period) } else { period };
        normalize_by_first(&period)
    }

    pub fn stably_isomorphic(&self, other: &Self) -> bool {
        tail_equivalent(&self.theta, &other.theta)
    }

    /// Membership in the positive cone `p + θq ≥ 0`.
    pub fn k0_positive(&self, x: &K0Class<T>) -> bool {
        let v = self
            .theta
            .to_qelem()
            .scale(&Ratio::from_integer(x.q.clone()))
            .add_rational(&Ratio::from_integer(x.p.clone()));
        v.sign().is_nonnegative()
    }
}

/// Lexicographically smallest cyclic rotation.
pub fn least_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    (0..word.len())
        .map(|k| word[k..].iter().chain(&word[..k]).cloned().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn normalize_by_first<T: Int>(period: &[T]) -> Vec<Ratio<T>> {
    match period.first() {
        None => Vec::new(),
        Some(first) => period.iter().map(|a| Ratio::new(a.clone(), first.clone())).collect(),
    }
}

impl<T: Int> PseudoLattice<T> {
    pub fn new(mu: QElem<T>, theta: QuadSurd<T>) -> Result<Self> {
        let (mu, _) = QElem::align(&mu, &theta.to_qelem())?;
        if mu.sign() != Sign::Positive {
            return Err(Error::NonPositivePeriod(mu.to_string()));
        }
        Ok(Self { mu, theta })
    }

    pub fn mu(&self) -> &QElem<T> {
        &self.mu
    }

    pub fn theta(&self) -> &QuadSurd<T> {
        &self.theta
    }

    /// Equality of the modules as subsets of `ℝ`.
    ///
    /// Writes the second basis `(μ₂, μ₂θ₂)` in coordinates over `(μ₁, μ₁θ₁)`;
    /// the modules coincide iff the coordinates are integers forming a matrix
    /// of determinant `±1`.
    pub fn module_equal(&self, other: &Self) -> Result<bool> {
        let theta1 = self.theta.to_qelem();
        QElem::align(&theta1, &other.theta.to_qelem())?;
        let r1 = other.mu.div(&self.mu)?;
        let r2 = other.mu.mul(&other.theta.to_qelem())?.div(&self.mu)?;
        let (Some((a, b)), Some((c, d))) = (coords(&r1, &theta1)?, coords(&r2, &theta1)?) else {
            return Ok(false);
        };
        let det = a * d - b * c;
        Ok(det.abs().is_one())
    }
}

/// Integer coordinates `(α, β)` with `v = α + βθ`, if they exist.
fn coords<T: Int>(v: &QElem<T>, theta: &QElem<T>) -> Result<Option<(T, T)>> {
    let (v, theta) = QElem::align(v, theta)?;
    // θ = s + t√D with t ≠ 0: β = y/t, α = x − βs
    let beta = v.y().clone() / theta.y().clone();
    let alpha = v.x().clone() - beta.clone() * theta.x().clone();
    if alpha.is_integer() && beta.is_integer() {
        Ok(Some((alpha.to_integer(), beta.to_integer())))
    } else {
        Ok(None)
    }
}

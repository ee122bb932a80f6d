//! Legendre-form j-invariant.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Int};

/// Leading constant of `C·(λ² − λ + 1)³ / (λ²(λ − 1)²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JConstant {
    /// `2⁸`, the classical normalization (`j = 1728` at `λ = −1, 1/2, 2`).
    #[default]
    Standard256,
    /// `2⁶`, an alternative normalization (`j = 432` at `λ = −1`).
    Alternative64,
}

impl JConstant {
    fn value<T: Int>(self) -> T {
        match self {
            JConstant::Standard256 => int(256),
            JConstant::Alternative64 => int(64),
        }
    }
}

pub fn j_invariant_lambda<T: Int>(lambda: &Ratio<T>, constant: JConstant) -> Result<Ratio<T>> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::SingularLambda(lambda.to_string()));
    }
    let one = Ratio::one();
    let l = lambda.clone();
    let inner = l.clone() * l.clone() - l.clone() + one.clone();
    let num = inner.clone() * inner.clone() * inner;
    let lm1 = l.clone() - one;
    let den = l.clone() * l * lm1.clone() * lm1;
    Ok(Ratio::from_integer(constant.value()) * num / den)
}

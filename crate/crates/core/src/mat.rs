//! Integer 2×2 matrices acting on homology bases in the row convention
//! `λ₁' = aλ₁ + bλ₂`, `λ₂' = cλ₁ + dλ₂`.

use std::fmt;
use std::ops::Mul;

use crate::scalar::{int, Int};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2Z<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Int> Mat2Z<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    /// `det = ±1`, i.e. the matrix lies in GL(2,ℤ).
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// The single matrix equivalent to acting by `first` and then by `self`.
    ///
    /// Row-convention basis changes compose as ordinary products, so this is
    /// `self · first`.
    pub fn after(&self, first: &Self) -> Self {
        self * first
    }

    /// `self + n·I`
    pub fn shift(&self, n: T) -> Self {
        Self::new(
            self.a.clone() + n.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone() + n,
        )
    }
}

impl<T: Int> Mul for &Mat2Z<T> {
    type Output = Mat2Z<T>;

    fn mul(self, rhs: &Mat2Z<T>) -> Mat2Z<T> {
        Mat2Z::new(
            self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
        )
    }
}

impl<T: Int> fmt::Display for Mat2Z<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

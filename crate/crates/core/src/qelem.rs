//! Elements `x + y√D` of a real quadratic field with rational coordinates.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{exact_sqrt, Int};
use crate::surd::QuadSurd;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of<T: Int>(v: &Ratio<T>) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self != Sign::Negative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `x + y√D`. Equality is coordinate-wise, which is value equality once two
/// elements share the same radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QElem<T: Int> {
    x: Ratio<T>,
    y: Ratio<T>,
    d: T,
}

impl<T: Int> QElem<T> {
    pub fn new(x: Ratio<T>, y: Ratio<T>, d: T) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        if exact_sqrt(&d).is_some() {
            return Err(Error::PerfectSquare(d.to_string()));
        }
        Ok(Self { x, y, d })
    }

    pub fn rational(x: Ratio<T>, d: T) -> Result<Self> {
        Self::new(x, Ratio::zero(), d)
    }

    pub fn from_ints(x: T, y: T, d: T) -> Result<Self> {
        Self::new(Ratio::from_integer(x), Ratio::from_integer(y), d)
    }

    pub fn x(&self) -> &Ratio<T> {
        &self.x
    }

    pub fn y(&self) -> &Ratio<T> {
        &self.y
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            x: self.x.clone(),
            y: -self.y.clone(),
            d: self.d.clone(),
        }
    }

    /// `x² − D·y²`
    pub fn norm(&self) -> Ratio<T> {
        self.x.clone() * self.x.clone() - self.y.clone() * self.y.clone() * Ratio::from_integer(self.d.clone())
    }

    /// Exact sign, decided by comparing `x²` with `D·y²` when the two terms
    /// have opposite signs.
    pub fn sign(&self) -> Sign {
        let sx = Sign::of(&self.x);
        let sy = Sign::of(&self.y);
        match (sx, sy) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (a, b) if a == b => a,
            (sx, _) => {
                // x and y√D have opposite signs; the larger magnitude wins.
                let n = Sign::of(&self.norm());
                match n {
                    Sign::Positive => sx,
                    Sign::Negative => {
                        if sx == Sign::Positive {
                            Sign::Negative
                        } else {
                            Sign::Positive
                        }
                    }
                    Sign::Zero => unreachable!("norm vanishes only at zero for nonsquare D"),
                }
            }
        }
    }

    /// The same value written over radicand `target`; `None` if `target` is
    /// not in the same field.
    pub fn rebase(&self, target: &T) -> Option<Self> {
        if *target == self.d {
            return Some(self.clone());
        }
        if self.y.is_zero() {
            return Some(Self {
                x: self.x.clone(),
                y: Ratio::zero(),
                d: target.clone(),
            });
        }
        // √D = (s / target)·√target with s = √(D·target)
        let s = exact_sqrt(&(self.d.clone() * target.clone()))?;
        let y = self.y.clone() * Ratio::new(s, target.clone());
        Some(Self {
            x: self.x.clone(),
            y,
            d: target.clone(),
        })
    }

    /// Brings two elements onto a common radicand (the smaller one, or the
    /// irrational operand's when the other is rational).
    pub fn align(u: &Self, v: &Self) -> Result<(Self, Self)> {
        if u.d == v.d {
            return Ok((u.clone(), v.clone()));
        }
        let target = if u.is_rational() {
            v.d.clone()
        } else if v.is_rational() || u.d < v.d {
            u.d.clone()
        } else {
            v.d.clone()
        };
        match (u.rebase(&target), v.rebase(&target)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::FieldMismatch(u.d.to_string(), v.d.to_string())),
        }
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Self::align(self, other).is_ok()
    }

    pub fn arith(op: FieldOp, u: &Self, v: &Self) -> Result<Self> {
        let (u, v) = Self::align(u, v)?;
        let d = Ratio::from_integer(u.d.clone());
        let (x, y) = match op {
            FieldOp::Add => (u.x + v.x, u.y + v.y),
            FieldOp::Sub => (u.x - v.x, u.y - v.y),
            FieldOp::Mul => (
                u.x.clone() * v.x.clone() + u.y.clone() * v.y.clone() * d,
                u.x * v.y + u.y * v.x,
            ),
            FieldOp::Div => {
                let n = v.norm();
                if n.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                // u·conj(v) / N(v)
                let cx = u.x.clone() * v.x.clone() - u.y.clone() * v.y.clone() * d;
                let cy = u.y * v.x - u.x * v.y;
                (cx / n.clone(), cy / n)
            }
        };
        Ok(Self { x, y, d: u.d })
    }

    pub fn add(&self, v: &Self) -> Result<Self> {
        Self::arith(FieldOp::Add, self, v)
    }

    pub fn sub(&self, v: &Self) -> Result<Self> {
        Self::arith(FieldOp::Sub, self, v)
    }

    pub fn mul(&self, v: &Self) -> Result<Self> {
        Self::arith(FieldOp::Mul, self, v)
    }

    pub fn div(&self, v: &Self) -> Result<Self> {
        Self::arith(FieldOp::Div, self, v)
    }

    pub fn scale(&self, r: &Ratio<T>) -> Self {
        Self {
            x: self.x.clone() * r.clone(),
            y: self.y.clone() * r.clone(),
            d: self.d.clone(),
        }
    }

    pub fn add_rational(&self, r: &Ratio<T>) -> Self {
        Self {
            x: self.x.clone() + r.clone(),
            y: self.y.clone(),
            d: self.d.clone(),
        }
    }

    /// Canonical surd for an irrational element, `None` when `y = 0`.
    pub fn to_surd(&self) -> Option<QuadSurd<T>> {
        if self.y.is_zero() {
            return None;
        }
        // Put x and y over the common denominator L: (X + Y√D)/L.
        let l = self.x.denom().lcm(self.y.denom());
        let big_x = self.x.numer().clone() * (l.clone() / self.x.denom().clone());
        let big_y = self.y.numer().clone() * (l.clone() / self.y.denom().clone());
        let rad = big_y.clone() * big_y.clone() * self.d.clone();
        let s = if big_y.is_positive() {
            QuadSurd::new(big_x, rad, l)
        } else {
            QuadSurd::new(-big_x, rad, -l)
        };
        Some(s.expect("irrational element always yields a valid surd"))
    }

    pub fn cmp_value(&self, other: &Self) -> Result<std::cmp::Ordering> {
        Ok(match self.sub(other)?.sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        })
    }

    pub fn is_one(&self) -> bool {
        self.y.is_zero() && self.x.is_one()
    }
}

impl<T: Int> fmt::Display for QElem<T> {
    /// Prints a literal that re-parses to the same value: a rational `p/q`,
    /// or the canonical `(P+sqrt(D))/Q` surd form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_surd() {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "{}", self.x),
        }
    }
}

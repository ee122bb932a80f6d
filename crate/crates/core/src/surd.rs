//! Canonical quadratic surds `(P + √D)/Q`.
//!
//! The canonical form keeps `Q | (D − P²)`, which is what makes the
//! continued-fraction recurrence stay in the integers, and scales the triple
//! down as far as integrality allows. Two surds with equal value therefore
//! have identical fields.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::mat::Mat2Z;
use crate::qelem::{QElem, Sign};
use crate::scalar::{exact_sqrt, int, Int};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd<T: Int> {
    p: T,
    d: T,
    q: T,
}

/// Which root of `Ax² + Bx + C` to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootChoice {
    Larger,
    Smaller,
    /// The positive root if exactly one root is positive, else the larger.
    #[default]
    PositivePreferred,
}

impl<T: Int> QuadSurd<T> {
    /// Canonicalizing constructor for `(p + √d)/q`.
    pub fn new(p: T, d: T, q: T) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        if exact_sqrt(&d).is_some() {
            return Err(Error::PerfectSquare(d.to_string()));
        }
        let (mut p, mut d, mut q) = (p, d, q);
        let diff = d.clone() - p.clone() * p.clone();
        if !(diff % q.clone()).is_zero() {
            let s = q.abs();
            p = p * s.clone();
            d = d * s.clone() * s.clone();
            q = q * s;
        }
        let rest = (d.clone() - p.clone() * p.clone()) / q.clone();
        // Any common factor g of P, Q and (D − P²)/Q also has g² | D, so
        // dividing it out keeps the triple integral and Q | (D − P²).
        let g = p.gcd(&q).gcd(&rest);
        if !g.is_one() {
            p = p / g.clone();
            q = q / g.clone();
            d = d / (g.clone() * g);
        }
        Ok(Self { p, d, q })
    }

    pub fn from_i64(p: i64, d: i64, q: i64) -> Result<Self> {
        Self::new(int(p), int(d), int(q))
    }

    /// `√n`
    pub fn sqrt(n: T) -> Result<Self> {
        Self::new(T::zero(), n, T::one())
    }

    /// A root of `a·x² + b·x + c = 0`.
    pub fn from_quadratic(a: T, b: T, c: T, which: RootChoice) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::DegenerateLinear);
        }
        let disc = b.clone() * b.clone() - int::<T>(4) * a.clone() * c;
        if disc.is_negative() {
            return Err(Error::NegativeDiscriminant(disc.to_string()));
        }
        if exact_sqrt(&disc).is_some() {
            return Err(Error::RationalRoots(disc.to_string()));
        }
        let two_a = int::<T>(2) * a;
        // (−b + √Δ)/(2a) and (−b − √Δ)/(2a) = (b + √Δ)/(−2a)
        let plus = Self::new(-b.clone(), disc.clone(), two_a.clone())?;
        let minus = Self::new(b, disc, -two_a)?;
        let (larger, smaller) = if plus.cmp_value(&minus) == Ordering::Greater {
            (plus, minus)
        } else {
            (minus, plus)
        };
        Ok(match which {
            RootChoice::Larger => larger,
            RootChoice::Smaller => smaller,
            RootChoice::PositivePreferred => {
                let lp = larger.sign() == Sign::Positive;
                let sp = smaller.sign() == Sign::Positive;
                if sp && !lp {
                    smaller
                } else {
                    larger
                }
            }
        })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn to_qelem(&self) -> QElem<T> {
        QElem::new(
            Ratio::new(self.p.clone(), self.q.clone()),
            Ratio::new(T::one(), self.q.clone()),
            self.d.clone(),
        )
        .expect("canonical surd has a valid radicand")
    }

    pub fn sign(&self) -> Sign {
        self.to_qelem().sign()
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.to_qelem()
            .cmp_value(&other.to_qelem())
            .unwrap_or_else(|_| cross_field_cmp(self, other))
    }

    /// Greatest integer `n ≤ self`.
    pub fn floor(&self) -> T {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (self.p.clone() + s).div_floor(&self.q)
        } else {
            // (−P − √D)/|Q| with ⌊−√D⌋ = −s − 1
            let num = -self.p.clone() - s - T::one();
            num.div_floor(&(-self.q.clone()))
        }
    }

    /// Galois conjugate `(P − √D)/Q`.
    pub fn conjugate(&self) -> Self {
        Self::new(-self.p.clone(), self.d.clone(), -self.q.clone()).expect("conjugate of a canonical surd is valid")
    }

    /// `(c + d·x)/(a + b·x)` for `M = (a, b; c, d)`.
    ///
    /// Acting by `M₁` and then by `M₂` equals acting once by `M₂·M₁`
    /// (see [`Mat2Z::after`]).
    pub fn mobius(&self, m: &Mat2Z<T>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let x = self.to_qelem();
        let num = x
            .scale(&Ratio::from_integer(m.d.clone()))
            .add_rational(&Ratio::from_integer(m.c.clone()));
        let den = x
            .scale(&Ratio::from_integer(m.b.clone()))
            .add_rational(&Ratio::from_integer(m.a.clone()));
        let r = num.div(&den)?;
        Ok(r.to_surd().expect("nonsingular image of an irrational is irrational"))
    }

    /// `self + n`
    pub fn add_int(&self, n: T) -> Self {
        Self::new(self.p.clone() + n * self.q.clone(), self.d.clone(), self.q.clone())
            .expect("translate of a canonical surd is valid")
    }

    /// `1 / self`
    pub fn recip(&self) -> Self {
        self.mobius(&Mat2Z::new(T::zero(), T::one(), T::one(), T::zero()))
            .expect("reciprocal of an irrational is defined")
    }
}

fn cross_field_cmp<T: Int>(a: &QuadSurd<T>, b: &QuadSurd<T>) -> Ordering {
    // Values from distinct fields are never equal. Shrink both by integer
    // translation until their floors differ, which happens after finitely
    // many continued-fraction steps.
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut flipped = false;
    loop {
        let (fa, fb) = (a.floor(), b.floor());
        if fa != fb {
            let o = fa.cmp(&fb);
            return if flipped { o.reverse() } else { o };
        }
        a = a.add_int(-fa.clone()).recip();
        b = b.add_int(-fb).recip();
        flipped = !flipped;
    }
}

impl<T: Int> fmt::Display for QuadSurd<T> {
    /// `(P+sqrt(D))/Q` with `Q > 0`; a negative `Q` is printed as
    /// `(−P-sqrt(D))/|Q|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_positive() {
            write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
        } else {
            write!(f, "({}-sqrt({}))/{}", -self.p.clone(), self.d, -self.q.clone())
        }
    }
}

impl<T: Int> PartialOrd for QuadSurd<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

/// Either kind of exact real this crate handles as input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Number<T: Int> {
    Rational(Ratio<T>),
    Surd(QuadSurd<T>),
}

impl<T: Int> fmt::Display for Number<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(r) => write!(f, "{r}"),
            Number::Surd(s) => write!(f, "{s}"),
        }
    }
}

impl<T: Int> From<QuadSurd<T>> for Number<T> {
    fn from(s: QuadSurd<T>) -> Self {
        Number::Surd(s)
    }
}

impl<T: Int> From<Ratio<T>> for Number<T> {
    fn from(r: Ratio<T>) -> Self {
        Number::Rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = QuadSurd<BigInt>;

    fn s(p: i64, d: i64, q: i64) -> S {
        S::from_i64(p, d, q).unwrap()
    }

    fn triple(x: &S) -> (i64, i64, i64) {
        use num_traits::ToPrimitive;
        (
            x.p().to_i64().unwrap(),
            x.d().to_i64().unwrap(),
            x.q().to_i64().unwrap(),
        )
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(triple(&s(0, 54, 1)), (0, 54, 1));
        assert_eq!(triple(&s(0, 2, 1)), (0, 2, 1));
        assert_eq!(s(0, 2, 1), S::new(0.into(), 2.into(), 1.into()).unwrap());
        // 2 ∤ 7, so (1+√8)/2 is rescaled to (2+√32)/4
        assert_eq!(triple(&s(1, 8, 2)), (2, 32, 4));
        // (2+√8)/2 = 1 + √2
        assert_eq!(s(2, 8, 2), s(1, 2, 1));
        assert_eq!(s(0, 2, -1), s(0, 8, -2));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(S::from_i64(0, 4, 1), Err(Error::PerfectSquare("4".into())));
        assert_eq!(S::from_i64(1, 2, 0), Err(Error::ZeroDenominator));
        assert!(matches!(S::from_i64(1, -2, 1), Err(Error::NegativeRadicand(_))));
    }

    #[test]
    fn quadratic_roots() {
        let golden = S::from_quadratic(1.into(), 1.into(), (-1).into(), RootChoice::Larger).unwrap();
        assert_eq!(golden, s(-1, 5, 2));
        let small = S::from_quadratic(1.into(), 1.into(), (-1).into(), RootChoice::Smaller).unwrap();
        assert_eq!(small, s(1, 5, -2));
        let r2 = S::from_quadratic(1.into(), 0.into(), (-2).into(), RootChoice::PositivePreferred).unwrap();
        assert_eq!(r2, s(0, 2, 1));
        assert_eq!(
            S::from_quadratic(1.into(), 0.into(), (-4).into(), RootChoice::Larger),
            Err(Error::RationalRoots("16".into()))
        );
        assert!(matches!(
            S::from_quadratic(1.into(), 0.into(), 1.into(), RootChoice::Larger),
            Err(Error::NegativeDiscriminant(_))
        ));
        assert_eq!(
            S::from_quadratic(0.into(), 1.into(), 1.into(), RootChoice::Larger),
            Err(Error::DegenerateLinear)
        );
        // negative leading coefficient flips which formula root is larger
        let neg = S::from_quadratic((-1).into(), 0.into(), 2.into(), RootChoice::Larger).unwrap();
        assert_eq!(neg, s(0, 2, 1));
        // both roots negative: x² + 4x + 1, larger is −2 + √3
        let both = S::from_quadratic(1.into(), 4.into(), 1.into(), RootChoice::PositivePreferred).unwrap();
        assert_eq!(both, s(-2, 3, 1));
    }

    #[test]
    fn floors() {
        assert_eq!(s(0, 54, 1).floor(), 7.into());
        assert_eq!(s(-1, 5, 2).floor(), 0.into());
        assert_eq!(s(0, 2, -1).floor(), (-2).into());
        assert_eq!(s(1, 5, -2).floor(), (-2).into());
    }

    #[test]
    fn mobius_examples() {
        let m = Mat2Z::from_i64(1, 0, 1, 1);
        assert_eq!(s(0, 54, 1).mobius(&m).unwrap(), s(1, 54, 1));
        assert_eq!(s(0, 2, 1).mobius(&Mat2Z::identity()).unwrap(), s(0, 2, 1));
        let swap = Mat2Z::from_i64(0, 1, 1, 0);
        assert_eq!(s(-1, 5, 2).mobius(&swap).unwrap(), s(1, 5, 2));
        assert_eq!(
            s(0, 2, 1).mobius(&Mat2Z::from_i64(1, 2, 2, 4)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(s(0, 2, 1).conjugate(), s(0, 2, -1));
        assert_eq!(s(1, 5, 2).conjugate(), s(-1, 5, -2));
        let x = s(3, 7, 2);
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn printing() {
        assert_eq!(s(0, 54, 1).to_string(), "(0+sqrt(54))/1");
        assert_eq!(s(0, 2, -1).to_string(), "(0-sqrt(2))/1");
        assert_eq!(s(-1, 5, 2).to_string(), "(-1+sqrt(5))/2");
    }

    #[test]
    fn cross_field_ordering() {
        assert_eq!(s(0, 2, 1).cmp_value(&s(0, 3, 1)), Ordering::Less);
        assert_eq!(s(1, 5, 2).cmp_value(&s(0, 2, 1)), Ordering::Greater);
        assert_eq!(s(0, 2, -1).cmp_value(&s(0, 3, -1)), Ordering::Greater);
    }
}

//! Regular continued fractions of rationals and quadratic surds.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result};
use crate::mat::Mat2Z;
use crate::scalar::Int;
use crate::surd::{QuadSurd, RootChoice};

/// An eventually periodic expansion `[a₀; a₁, …, (b₁, …, b_p)]`.
///
/// Always stored minimally: the period is primitive, the preperiod cannot be
/// shortened, and a finite expansion never ends in `1` (unless it is a single
/// term). [`CfExpansion::new`] normalizes its input to this form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion<T> {
    preperiod: Vec<T>,
    period: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent<T> {
    pub p: T,
    pub q: T,
}

impl<T: Int> Convergent<T> {
    pub fn to_ratio(&self) -> Ratio<T> {
        Ratio::new(self.p.clone(), self.q.clone())
    }
}

impl<T: Int> fmt::Display for Convergent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Length of the shortest block whose repetition produces `word`.
pub(crate) fn primitive_period_len<T: PartialEq>(word: &[T]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&p| n % p == 0 && (p..n).all(|i| word[i] == word[i - p]))
        .unwrap_or(n)
}

/// `true` when `b` is a cyclic rotation of `a`.
pub fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|k| (0..a.len()).all(|i| a[(i + k) % a.len()] == b[i]))
}

impl<T: Int> CfExpansion<T> {
    pub fn new(preperiod: Vec<T>, period: Vec<T>) -> Result<Self> {
        if preperiod.is_empty() && period.is_empty() {
            return Err(Error::InvalidExpansion("no terms".into()));
        }
        if preperiod.iter().skip(1).any(|a| !a.is_positive()) {
            return Err(Error::InvalidExpansion(
                "partial quotients after a0 must be positive".into(),
            ));
        }
        if period.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidExpansion("period entries must be positive".into()));
        }
        let mut preperiod = preperiod;
        let mut period = period;
        if period.is_empty() {
            if preperiod.len() > 1 && preperiod.last().is_some_and(One::is_one) {
                preperiod.pop();
                let last = preperiod.last_mut().expect("length checked");
                *last = last.clone() + T::one();
            }
        } else {
            let p = primitive_period_len(&period);
            period.truncate(p);
            while preperiod.last().is_some() && preperiod.last() == period.last() {
                preperiod.pop();
                period.rotate_right(1);
            }
        }
        Ok(Self { preperiod, period })
    }

    pub fn from_i64(preperiod: &[i64], period: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&a| crate::scalar::int::<T>(a)).collect();
        Self::new(conv(preperiod), conv(period))
    }

    pub fn preperiod(&self) -> &[T] {
        &self.preperiod
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    pub fn is_rational(&self) -> bool {
        self.period.is_empty()
    }

    /// All partial quotients in order; infinite unless rational.
    pub fn terms(&self) -> impl Iterator<Item = &T> + '_ {
        self.preperiod.iter().chain(self.period.iter().cycle())
    }

    /// Finite expansion of a rational by the Euclidean algorithm with floor
    /// division.
    pub fn of_rational(r: &Ratio<T>) -> Self {
        let mut n = r.numer().clone();
        let mut m = r.denom().clone();
        let mut terms = Vec::new();
        loop {
            let (a, rem) = n.div_mod_floor(&m);
            terms.push(a);
            if rem.is_zero() {
                break;
            }
            n = m;
            m = rem;
        }
        Self {
            preperiod: terms,
            period: Vec::new(),
        }
    }

    /// Expansion of a quadratic surd.
    ///
    /// Runs the integer recurrence on the state `(P, Q)` of each complete
    /// quotient `(P + √D)/Q`; the first repeated state closes the period.
    pub fn of_surd(x: &QuadSurd<T>) -> Self {
        let d = x.d().clone();
        let s = d.sqrt();
        let mut p = x.p().clone();
        let mut q = x.q().clone();
        let mut seen: HashMap<(T, T), usize> = HashMap::new();
        let mut terms = Vec::new();
        let start = loop {
            if let Some(&i) = seen.get(&(p.clone(), q.clone())) {
                break i;
            }
            seen.insert((p.clone(), q.clone()), terms.len());
            let a = if q.is_positive() {
                (p.clone() + s.clone()).div_floor(&q)
            } else {
                (-p.clone() - s.clone() - T::one()).div_floor(&(-q.clone()))
            };
            let next_p = a.clone() * q.clone() - p;
            let next_q = (d.clone() - next_p.clone() * next_p.clone()) / q;
            terms.push(a);
            p = next_p;
            q = next_q;
        };
        let period = terms.split_off(start);
        debug_assert_eq!(primitive_period_len(&period), period.len());
        Self {
            preperiod: terms,
            period,
        }
    }

    /// The first `n` convergents `pₖ/qₖ`.
    pub fn convergents(&self, n: usize) -> Result<Vec<Convergent<T>>> {
        if self.is_rational() && n > self.preperiod.len() {
            return Err(Error::NotEnoughTerms {
                requested: n,
                available: self.preperiod.len(),
            });
        }
        let (mut p0, mut p1) = (T::zero(), T::one());
        let (mut q0, mut q1) = (T::one(), T::zero());
        let mut out = Vec::with_capacity(n);
        for a in self.terms().take(n) {
            let p = a.clone() * p1.clone() + p0;
            let q = a.clone() * q1.clone() + q0;
            p0 = std::mem::replace(&mut p1, p.clone());
            q0 = std::mem::replace(&mut q1, q.clone());
            out.push(Convergent { p, q });
        }
        Ok(out)
    }

    /// Rebuilds the surd: the purely periodic tail is the fixed point of its
    /// own convergent matrix, then the preperiod is applied as a Möbius map.
    pub fn to_surd(&self) -> Result<QuadSurd<T>> {
        if self.is_rational() {
            return Err(Error::RationalExpansion);
        }
        let k = continuant_matrix(&self.period);
        // y = (p_p·y + p_{p−1}) / (q_p·y + q_{p−1}), with y > 1
        let (pp, pp1, qp, qp1) = (k.a, k.b, k.c, k.d);
        let tail = QuadSurd::from_quadratic(qp, qp1 - pp, -pp1, RootChoice::Larger)?;
        if self.preperiod.is_empty() {
            return Ok(tail);
        }
        let h = continuant_matrix(&self.preperiod);
        // x = (P_k·y + P_{k−1}) / (Q_k·y + Q_{k−1})
        let m = Mat2Z::new(h.d, h.c, h.b, h.a);
        tail.mobius(&m)
    }

    pub fn to_rational(&self) -> Option<Ratio<T>> {
        if !self.is_rational() {
            return None;
        }
        let k = continuant_matrix(&self.preperiod);
        Some(Ratio::new(k.a, k.c))
    }
}

/// `(p_n, p_{n−1}; q_n, q_{n−1})` for the given partial quotients.
fn continuant_matrix<T: Int>(terms: &[T]) -> Mat2Z<T> {
    let mut m = Mat2Z::identity();
    for a in terms {
        m = &m * &Mat2Z::new(a.clone(), T::one(), T::one(), T::zero());
    }
    m
}

/// GL(2,ℤ)-equivalence of two surds: their minimal periods are rotations of
/// each other.
pub fn tail_equivalent<T: Int>(x: &QuadSurd<T>, y: &QuadSurd<T>) -> bool {
    let cx = CfExpansion::of_surd(x);
    let cy = CfExpansion::of_surd(y);
    is_rotation(cx.period(), cy.period())
}

impl<T: Int> fmt::Display for CfExpansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[T]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        let period = (!self.period.is_empty()).then(|| format!("({})", join(&self.period)));
        match self.preperiod.split_first() {
            None => write!(f, "[{}]", period.unwrap_or_default()),
            Some((a0, rest)) => {
                let mut items: Vec<String> = rest.iter().map(ToString::to_string).collect();
                items.extend(period);
                if items.is_empty() {
                    write!(f, "[{a0}]")
                } else {
                    write!(f, "[{a0}; {}]", items.join(", "))
                }
            }
        }
    }
}

impl<T: Int> FromStr for CfExpansion<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(0, "expected `[...]`"))?;
        let (head, period_text) = match inner.find('(') {
            Some(i) => {
                let tail = inner[i + 1..]
                    .trim_end()
                    .strip_suffix(')')
                    .ok_or_else(|| Error::syntax(t.len() - 1, "expected `)` closing the period"))?;
                (&inner[..i], Some(tail))
            }
            None => (inner, None),
        };
        let num = |txt: &str| -> Result<T> {
            txt.trim()
                .parse::<T>()
                .map_err(|_| Error::syntax(0, format!("bad partial quotient `{}`", txt.trim())))
        };
        let mut preperiod = Vec::new();
        let head = head.trim();
        if !head.is_empty() {
            let (a0, rest) = match head.split_once(';') {
                Some((a0, rest)) => (a0, rest),
                None => (head, ""),
            };
            preperiod.push(num(a0)?);
            let rest = rest.trim();
            let rest = if period_text.is_some() {
                rest.strip_suffix(',').unwrap_or(rest)
            } else {
                rest
            };
            for item in rest.split(',').filter(|x| !x.trim().is_empty()) {
                preperiod.push(num(item)?);
            }
        }
        let period = match period_text {
            Some(p) => p.split(',').map(num).collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        Self::new(preperiod, period)
    }
}

//! From CM elliptic curves to noncommutative tori with real multiplication.
//!
//! An isogeny acts on a homology basis by an integer matrix `(a, b; c, d)`
//! (row convention) and on `θ = λ₂/λ₁` by `θ ↦ (c + dθ)/(a + bθ)`. An
//! endomorphism maps the module `ℤλ₁ + ℤλ₂` into itself, and classifying its
//! matrix decides whether `θ` is forced to be a quadratic irrationality.

use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::mat::Mat2Z;
use crate::qelem::QElem;
use crate::scalar::{exact_sqrt, int, is_squarefree, Int};
use crate::surd::{Number, QuadSurd, RootChoice};

/// Why a classified matrix gives no irrational `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectedCase {
    /// `Δ > 0` is a perfect square.
    Case2,
    /// `Δ < 0` and `Δ′` is a perfect square.
    Case5,
    /// `b = 0`, `a ≠ d`: the equation is linear with a rational root.
    B0Linear,
}

/// The outcome of classifying an integer matrix acting on a rank-2 module.
///
/// With `Δ = (a+d)² − 4(ad − bc)` and `Δ′ = (a+d)² − 4bc`, exactly one of
/// the variants applies to any matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lemma2Outcome<T: Int> {
    /// `b ≠ 0`, `Δ > 0` not a square: `bθ² + (a−d)θ − c = 0`, `k = a + bθ`.
    Case1 {
        theta: QuadSurd<T>,
        k: QElem<T>,
        delta: T,
    },
    /// `b ≠ 0`, `Δ < 0`, `Δ′` not a square: after flipping the sign of the
    /// second basis vector, `bθ² + (a+d)θ + c = 0`, `k = a + bθ`.
    Case4 {
        theta: QuadSurd<T>,
        k: QElem<T>,
        delta: T,
        delta_prime: T,
    },
    RationalRejected {
        case: RejectedCase,
    },
    /// `b ≠ 0`, `Δ = 0`: a double rational root, so the module has rank 1.
    RankDegenerate,
    /// `b = 0`, `a = d`, `c ≠ 0`: no solution at all.
    EmptySolution,
    /// `b = 0`, `a = d`, `c = 0`: scalar matrix, every irrational `θ` works.
    TrivialInteger {
        k: T,
    },
}

impl<T: Int> Lemma2Outcome<T> {
    pub fn tag(&self) -> &'static str {
        match self {
            Lemma2Outcome::Case1 { .. } => "Case1",
            Lemma2Outcome::Case4 { .. } => "Case4",
            Lemma2Outcome::RationalRejected { .. } => "RationalRejected",
            Lemma2Outcome::RankDegenerate => "RankDegenerate",
            Lemma2Outcome::EmptySolution => "EmptySolution",
            Lemma2Outcome::TrivialInteger { .. } => "TrivialInteger",
        }
    }

    /// `(θ, k)` for the two quadratic cases.
    pub fn quadratic(&self) -> Option<(&QuadSurd<T>, &QElem<T>)> {
        match self {
            Lemma2Outcome::Case1 { theta, k, .. } | Lemma2Outcome::Case4 { theta, k, .. } => Some((theta, k)),
            _ => None,
        }
    }
}

impl<T: Int> fmt::Display for Lemma2Outcome<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma2Outcome::Case1 { theta, k, delta } => {
                write!(f, "Case1 theta={theta} k={k} delta={delta}")
            }
            Lemma2Outcome::Case4 {
                theta,
                k,
                delta,
                delta_prime,
            } => {
                write!(f, "Case4 theta={theta} k={k} delta={delta} delta_prime={delta_prime}")
            }
            Lemma2Outcome::RationalRejected { case } => {
                let c = match case {
                    RejectedCase::Case2 => "2",
                    RejectedCase::Case5 => "5",
                    RejectedCase::B0Linear => "b0-linear",
                };
                write!(f, "RationalRejected case={c}")
            }
            Lemma2Outcome::RankDegenerate => write!(f, "RankDegenerate"),
            Lemma2Outcome::EmptySolution => write!(f, "EmptySolution"),
            Lemma2Outcome::TrivialInteger { k } => write!(f, "TrivialInteger k={k}"),
        }
    }
}

/// `θ′ = (c + dθ)/(a + bθ)` under the isogeny with homology matrix `m`.
pub fn isogeny_transport<T: Int>(theta: &QuadSurd<T>, m: &Mat2Z<T>) -> Result<QuadSurd<T>> {
    theta.mobius(m)
}

/// Classifies an arbitrary integer matrix. Total: every input lands in
/// exactly one variant.
pub fn lemma2_classify<T: Int>(m: &Mat2Z<T>) -> Lemma2Outcome<T> {
    let Mat2Z { a, b, c, d } = m.clone();
    if b.is_zero() {
        return if a != d {
            Lemma2Outcome::RationalRejected {
                case: RejectedCase::B0Linear,
            }
        } else if !c.is_zero() {
            Lemma2Outcome::EmptySolution
        } else {
            Lemma2Outcome::TrivialInteger { k: a }
        };
    }
    let four: T = int(4);
    let tr2 = m.trace() * m.trace();
    let delta = tr2.clone() - four.clone() * m.det();
    let delta_prime = tr2 - four * b.clone() * c.clone();
    let k_of = |theta: &QuadSurd<T>| {
        theta
            .to_qelem()
            .scale(&Ratio::from_integer(b.clone()))
            .add_rational(&Ratio::from_integer(a.clone()))
    };
    if delta.is_positive() {
        if exact_sqrt(&delta).is_some() {
            return Lemma2Outcome::RationalRejected {
                case: RejectedCase::Case2,
            };
        }
        let theta = QuadSurd::from_quadratic(
            b.clone(),
            a.clone() - d.clone(),
            -c.clone(),
            RootChoice::PositivePreferred,
        )
        .expect("discriminant is a positive nonsquare");
        let k = k_of(&theta);
        Lemma2Outcome::Case1 { theta, k, delta }
    } else if delta.is_zero() {
        Lemma2Outcome::RankDegenerate
    } else {
        // Δ < 0 forces bc < 0, hence Δ′ = (a+d)² − 4bc > 0.
        assert!(delta_prime.is_positive(), "Δ < 0 must give Δ′ > 0");
        if exact_sqrt(&delta_prime).is_some() {
            return Lemma2Outcome::RationalRejected {
                case: RejectedCase::Case5,
            };
        }
        let theta = QuadSurd::from_quadratic(
            b.clone(),
            a.clone() + d.clone(),
            c.clone(),
            RootChoice::PositivePreferred,
        )
        .expect("discriminant is a positive nonsquare");
        let k = k_of(&theta);
        Lemma2Outcome::Case4 {
            theta,
            k,
            delta,
            delta_prime,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderForm {
    /// `ℤ[√−d]`
    Sqrt,
    /// `ℤ[(1 + √−d)/2]`, only for `d ≡ 3 (mod 4)`
    Half,
}

impl fmt::Display for OrderForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderForm::Sqrt => "sqrt",
            OrderForm::Half => "half",
        })
    }
}

/// The order `ℤ[ω]` of an imaginary quadratic field used as an endomorphism
/// ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CmOrder<T> {
    d: T,
    form: OrderForm,
}

impl<T: Int> CmOrder<T> {
    pub fn new(d: T, form: OrderForm) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidOrder(format!("d = {d} must be positive")));
        }
        if !is_squarefree(&d) {
            return Err(Error::InvalidOrder(format!("d = {d} is not squarefree")));
        }
        if form == OrderForm::Half && d.mod_floor(&int(4)) != int(3) {
            return Err(Error::InvalidOrder(format!(
                "half form needs d ≡ 3 (mod 4), got d = {d}"
            )));
        }
        Ok(Self { d, form })
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn form(&self) -> OrderForm {
        self.form
    }

    /// Multiplication by `ω` on the basis `{1, ω}`.
    pub fn generator_matrix(&self) -> Mat2Z<T> {
        match self.form {
            // ω·1 = ω, ω·ω = −d
            OrderForm::Sqrt => Mat2Z::new(T::zero(), T::one(), -self.d.clone(), T::zero()),
            // ω² = ω − (1+d)/4
            OrderForm::Half => {
                let n = (self.d.clone() + T::one()) / int(4);
                Mat2Z::new(T::zero(), T::one(), -n, T::one())
            }
        }
    }
}

impl<T: Int> fmt::Display for CmOrder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            OrderForm::Sqrt => write!(f, "Z[sqrt(-{})]", self.d),
            OrderForm::Half => write!(f, "Z[(1+sqrt(-{}))/2]", self.d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Omega,
    OnePlusOmega,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Omega => "omega",
            Generator::OnePlusOmega => "1+omega",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealMultiplication<T: Int> {
    pub theta: QuadSurd<T>,
    pub k: QElem<T>,
    pub generator: Generator,
    pub outcome: Lemma2Outcome<T>,
}

/// `θ` of the torus attached to a CM order: classify multiplication by `ω`,
/// falling back to `1 + ω` when that matrix is degenerate.
pub fn real_multiplication_theta<T: Int>(order: &CmOrder<T>) -> Result<RealMultiplication<T>> {
    let omega = order.generator_matrix();
    for (generator, m) in [
        (Generator::Omega, omega.clone()),
        (Generator::OnePlusOmega, omega.shift(T::one())),
    ] {
        let outcome = lemma2_classify(&m);
        if let Some((theta, k)) = outcome.quadratic() {
            return Ok(RealMultiplication {
                theta: theta.clone(),
                k: k.clone(),
                generator,
                outcome,
            });
        }
    }
    Err(Error::NoNontrivialGenerator(order.to_string()))
}

/// Slope and scale of the measured foliation with periods `λ₁, λ₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationParams<T: Int> {
    pub mu: Ratio<T>,
    pub theta: Number<T>,
}

/// `μ = λ₁`, `θ = λ₂/λ₁`.
pub fn foliation_params<T: Int>(lambda1: &Ratio<T>, lambda2: &Ratio<T>) -> Result<FoliationParams<T>> {
    for l in [lambda1, lambda2] {
        if !l.is_positive() {
            return Err(Error::NonPositivePeriod(l.to_string()));
        }
    }
    Ok(FoliationParams {
        mu: lambda1.clone(),
        theta: Number::Rational(lambda2.clone() / lambda1.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::tail_equivalent;
    use num_bigint::BigInt;

    type M = Mat2Z<BigInt>;

    fn surd(p: i64, d: i64, q: i64) -> QuadSurd<BigInt> {
        QuadSurd::from_i64(p, d, q).unwrap()
    }

    fn order(d: i64, form: OrderForm) -> CmOrder<BigInt> {
        CmOrder::new(d.into(), form).unwrap()
    }

    #[test]
    fn transport() {
        let r2 = surd(0, 2, 1);
        assert_eq!(isogeny_transport(&r2, &M::from_i64(1, 0, 1, 1)).unwrap(), surd(1, 2, 1));
        assert_eq!(isogeny_transport(&r2, &M::from_i64(2, 0, 0, 2)).unwrap(), r2);
        let g = surd(-1, 5, 2);
        let t = isogeny_transport(&g, &M::from_i64(1, 1, 1, 2)).unwrap();
        assert!(tail_equivalent(&g, &t));
        assert_eq!(
            isogeny_transport(&r2, &M::from_i64(1, 1, 1, 1)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn classify_case1() {
        let out = lemma2_classify(&M::from_i64(2, 1, 1, 1));
        let Lemma2Outcome::Case1 { theta, k, delta } = out else {
            panic!("{out}")
        };
        assert_eq!(theta, surd(-1, 5, 2));
        assert_eq!(k.to_surd().unwrap(), surd(3, 5, 2));
        assert_eq!(delta, 5.into());
        assert_eq!(k.mul(&theta.to_qelem()).unwrap().to_surd().unwrap(), surd(1, 5, 2));
    }

    #[test]
    fn classify_case4() {
        let out = lemma2_classify(&M::from_i64(1, 1, -1, 1));
        let Lemma2Outcome::Case4 {
            theta,
            k,
            delta,
            delta_prime,
        } = out
        else {
            panic!("{out}")
        };
        assert_eq!(theta, surd(-1, 2, 1));
        assert_eq!(k.to_surd().unwrap(), surd(0, 2, 1));
        assert_eq!(delta, (-4).into());
        assert_eq!(delta_prime, 8.into());
    }

    #[test]
    fn classify_degenerate() {
        assert_eq!(
            lemma2_classify(&M::from_i64(0, 1, -1, 0)),
            Lemma2Outcome::RationalRejected {
                case: RejectedCase::Case5
            }
        );
        assert_eq!(
            lemma2_classify(&M::from_i64(3, 0, 0, 3)),
            Lemma2Outcome::TrivialInteger { k: 3.into() }
        );
        assert_eq!(
            lemma2_classify(&M::from_i64(2, 0, 0, 5)),
            Lemma2Outcome::RationalRejected {
                case: RejectedCase::B0Linear
            }
        );
        assert_eq!(lemma2_classify(&M::from_i64(2, 0, 1, 2)), Lemma2Outcome::EmptySolution);
        // (1,1;0,1): Δ = 4 − 4 = 0
        assert_eq!(lemma2_classify(&M::from_i64(1, 1, 0, 1)), Lemma2Outcome::RankDegenerate);
        // (2,1;0,1): Δ = 9 − 8 = 1 square
        assert_eq!(
            lemma2_classify(&M::from_i64(2, 1, 0, 1)),
            Lemma2Outcome::RationalRejected {
                case: RejectedCase::Case2
            }
        );
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(order(2, OrderForm::Sqrt).generator_matrix(), M::from_i64(0, 1, -2, 0));
        assert_eq!(order(1, OrderForm::Sqrt).generator_matrix(), M::from_i64(0, 1, -1, 0));
        assert_eq!(order(3, OrderForm::Half).generator_matrix(), M::from_i64(0, 1, -1, 1));
        assert!(matches!(
            CmOrder::<BigInt>::new(5.into(), OrderForm::Half),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            CmOrder::<BigInt>::new(4.into(), OrderForm::Sqrt),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            CmOrder::<BigInt>::new(0.into(), OrderForm::Sqrt),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn rm_theta() {
        let rm = real_multiplication_theta(&order(2, OrderForm::Sqrt)).unwrap();
        assert_eq!((rm.theta, rm.generator), (surd(0, 2, 1), Generator::Omega));
        assert_eq!(rm.k.to_surd().unwrap(), surd(0, 2, 1));

        let rm = real_multiplication_theta(&order(1, OrderForm::Sqrt)).unwrap();
        assert_eq!((rm.theta, rm.generator), (surd(-1, 2, 1), Generator::OnePlusOmega));
        assert_eq!(rm.k.to_surd().unwrap(), surd(0, 2, 1));

        let rm = real_multiplication_theta(&order(3, OrderForm::Half)).unwrap();
        assert_eq!((rm.theta, rm.generator), (surd(-1, 5, 2), Generator::Omega));
    }

    #[test]
    fn foliation() {
        let r = |n: i64, d: i64| Ratio::new(BigInt::from(n), BigInt::from(d));
        let f = foliation_params(&r(2, 1), &r(3, 1)).unwrap();
        assert_eq!((f.mu, f.theta), (r(2, 1), Number::Rational(r(3, 2))));
        let f = foliation_params(&r(1, 1), &r(1, 1)).unwrap();
        assert_eq!((f.mu, f.theta), (r(1, 1), Number::Rational(r(1, 1))));
        let f = foliation_params(&r(1, 2), &r(5, 3)).unwrap();
        assert_eq!((f.mu, f.theta), (r(1, 2), Number::Rational(r(10, 3))));
        assert!(matches!(
            foliation_params(&r(0, 1), &r(1, 1)),
            Err(Error::NonPositivePeriod(_))
        ));
        assert!(matches!(
            foliation_params(&r(1, 1), &r(-1, 1)),
            Err(Error::NonPositivePeriod(_))
        ));
    }
}

//! Exact arithmetic for noncommutative tori with real multiplication and
//! their relation to elliptic curves with complex multiplication.
//!
//! The numeric core ([`surd`], [`qelem`], [`cfrac`], [`nctorus`],
//! [`functor`]) is generic over the integer scalar `T: Int`; the aliases
//! below fix `T = BigInt`, which is what the harness and CLI use.

pub mod cfrac;
pub mod cli;
pub mod error;
pub mod functor;
pub mod harness;
pub mod literal;
pub mod mat;
pub mod nctorus;
pub mod qelem;
pub mod scalar;
pub mod surd;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

pub use cfrac::{is_rotation, tail_equivalent, CfExpansion, Convergent};
pub use error::{Error, Result};
pub use functor::{
    foliation_params, isogeny_transport, lemma2_classify, real_multiplication_theta, CmOrder, FoliationParams,
    Generator, Lemma2Outcome, OrderForm, RealMultiplication, RejectedCase,
};
pub use literal::{parse_number, parse_rational};
pub use mat::Mat2Z;
pub use nctorus::{K0Class, NcTorus, PseudoLattice};
pub use qelem::{FieldOp, QElem, Sign};
pub use scalar::Int;
pub use surd::{Number, QuadSurd, RootChoice};

pub type Rational = Ratio<BigInt>;
pub type Surd = QuadSurd<BigInt>;
pub type Elem = QElem<BigInt>;
pub type Matrix = Mat2Z<BigInt>;
pub type Expansion = CfExpansion<BigInt>;
pub type Torus = NcTorus<BigInt>;
pub type Lattice = PseudoLattice<BigInt>;
pub type Outcome = Lemma2Outcome<BigInt>;
pub type Order = CmOrder<BigInt>;
pub type Real = Number<BigInt>;

/// Fixed-width variants for callers that know their inputs stay small.
/// Overflow panics instead of wrapping.
pub type Surd64 = QuadSurd<i64>;
pub type Elem64 = QElem<i64>;
pub type Expansion64 = CfExpansion<i64>;

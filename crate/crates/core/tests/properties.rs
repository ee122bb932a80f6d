use cmtorus::{
    lemma2_classify, parse_number, tail_equivalent, BigInt, Elem, Expansion, K0Class, Lattice, Matrix, NcTorus, Number,
    Rational, Sign, Surd,
};
use num_integer::Roots;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn nonsquare(d: i64) -> bool {
    let r = d.sqrt();
    r * r != d
}

fn surd() -> impl Strategy<Value = Surd> {
    (
        -60i64..=60,
        (2i64..=3000).prop_filter("nonsquare", |&d| nonsquare(d)),
        (1i64..=40),
        any::<bool>(),
    )
        .prop_map(|(p, d, q, neg)| Surd::from_i64(p, d, if neg { -q } else { q }).unwrap())
}

fn unimodular() -> impl Strategy<Value = Matrix> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
        .prop_filter("det +-1", |(a, b, c, d)| (a * d - b * c).abs() == 1)
        .prop_map(|(a, b, c, d)| Matrix::from_i64(a, b, c, d))
}

fn torus(x: &Surd) -> NcTorus<BigInt> {
    NcTorus::new(Number::Surd(x.clone())).unwrap()
}

/// Sign of `(P + √D)/Q` from a 200-bit truncation of `√D`.
fn fixed_point_sign(x: &Surd) -> Sign {
    let bits = 200u32;
    let root = (x.d() << (2 * bits)).sqrt();
    let s = (x.p() << bits) + root;
    // the true value lies strictly between s and s + 1 (scaled), so s decides
    let positive_numerator = !s.is_negative();
    if positive_numerator == x.q().is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// `|μ|` and `θ'` for the module `μ(ℤ + θ'ℤ)` spanned by `(a + bθ, c + dθ)`.
fn moved(l: &Lattice, m: &Matrix) -> Lattice {
    let t = l.theta().to_qelem();
    let coeff = |x: &BigInt, y: &BigInt| {
        t.scale(&Rational::from_integer(y.clone()))
            .add_rational(&Rational::from_integer(x.clone()))
    };
    let first = l.mu().mul(&coeff(&m.a, &m.b)).unwrap();
    let theta = l.theta().mobius(m).unwrap();
    let mu = if first.sign() == Sign::Negative {
        first.scale(&Rational::from_integer(big(-1)))
    } else {
        first
    };
    Lattice::new(mu, theta).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_is_idempotent(x in surd()) {
        let again = Surd::new(x.p().clone(), x.d().clone(), x.q().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(((x.d() - x.p() * x.p()) % x.q()).is_zero());
    }

    #[test]
    fn sign_matches_fixed_point(x in surd()) {
        prop_assert_eq!(x.sign(), fixed_point_sign(&x));
    }

    #[test]
    fn floor_brackets_value(x in surd()) {
        let f = Rational::from_integer(x.floor());
        let t = x.to_qelem();
        prop_assert_eq!(t.add_rational(&-f.clone()).sign(), Sign::Positive);
        prop_assert_eq!(t.scale(&Rational::from_integer(big(-1))).add_rational(&(f + Rational::from_integer(big(1)))).sign(), Sign::Positive);
    }

    #[test]
    fn mobius_composes(x in surd(), m1 in unimodular(), m2 in unimodular()) {
        let stepwise = x.mobius(&m1).unwrap().mobius(&m2).unwrap();
        prop_assert_eq!(stepwise, x.mobius(&m2.after(&m1)).unwrap());
    }

    #[test]
    fn printed_surds_reparse(x in surd()) {
        prop_assert_eq!(parse_number::<BigInt>(&x.to_string()).unwrap(), Number::Surd(x));
    }

    #[test]
    fn printed_expansions_reparse(x in surd()) {
        let cf = Expansion::of_surd(&x);
        prop_assert_eq!(cf.to_string().parse::<Expansion>().unwrap(), cf);
    }

    #[test]
    fn expansion_is_minimal(x in surd()) {
        let cf = Expansion::of_surd(&x);
        let per = cf.period();
        for len in 1..per.len() {
            if per.len() % len == 0 {
                prop_assert!(per.chunks(len).any(|c| c != &per[..len]), "period {:?} not primitive", per);
            }
        }
        if let (Some(a), Some(b)) = (cf.preperiod().last(), per.last()) {
            // otherwise the period could start one term earlier
            prop_assert!(cf.preperiod().len() == 1 || a != b);
        }
        prop_assert!(per.iter().all(|a| a.is_positive()));
        prop_assert!(cf.preperiod().iter().skip(1).all(|a| a.is_positive()));
    }

    #[test]
    fn normalized_period_ignores_rotation(x in surd(), shift in 0usize..16) {
        let cf = Expansion::of_surd(&x);
        let mut per = cf.period().to_vec();
        let k = shift % per.len();
        per.rotate_left(k);
        let rotated = Expansion::new(vec![big(0)], per).unwrap().to_surd().unwrap();
        prop_assert_eq!(torus(&rotated).normalized_period(true), torus(&x).normalized_period(true));
        prop_assert!(tail_equivalent(&x, &rotated));
    }

    #[test]
    fn positive_cone_is_closed(x in surd(), p1 in -50i64..50, q1 in -50i64..50, p2 in -50i64..50, q2 in -50i64..50) {
        let t = torus(&x);
        let a = K0Class::new(big(p1), big(q1));
        let b = K0Class::new(big(p2), big(q2));
        if t.k0_positive(&a) && t.k0_positive(&b) {
            prop_assert!(t.k0_positive(&K0Class::new(big(p1 + p2), big(q1 + q2))));
        }
    }

    #[test]
    fn module_equality_is_an_equivalence(x in surd(), m1 in unimodular(), m2 in unimodular()) {
        let one = Elem::rational(Rational::from_integer(big(1)), x.d().clone()).unwrap();
        let l1 = Lattice::new(one, x.clone()).unwrap();
        let l2 = moved(&l1, &m1);
        let l3 = moved(&l2, &m2);
        prop_assert!(l1.module_equal(&l1).unwrap());
        prop_assert!(l1.module_equal(&l2).unwrap());
        prop_assert!(l2.module_equal(&l1).unwrap());
        prop_assert!(l2.module_equal(&l3).unwrap());
        prop_assert!(l1.module_equal(&l3).unwrap());
        prop_assert!(tail_equivalent(l1.theta(), l3.theta()));
    }

    #[test]
    fn quadratic_outcomes_have_irrational_k(a in -12i64..=12, b in -12i64..=12, c in -12i64..=12, d in -12i64..=12) {
        let out = lemma2_classify(&Matrix::from_i64(a, b, c, d));
        if let Some((theta, k)) = out.quadratic() {
            prop_assert!(!k.is_rational());
            let expect = theta.to_qelem().scale(&Rational::from_integer(big(b))).add_rational(&Rational::from_integer(big(a)));
            prop_assert!(k.sub(&expect).unwrap().is_zero());
        }
    }
}

#[test]
fn det_two_transport_can_leave_the_class() {
    let x = Surd::sqrt(big(2)).unwrap();
    let y = x.mobius(&Matrix::from_i64(1, 0, 0, 2)).unwrap();
    assert_eq!(y, Surd::sqrt(big(8)).unwrap());
    assert!(!tail_equivalent(&x, &y));
    assert!(!torus(&x).stably_isomorphic(&torus(&y)));
}

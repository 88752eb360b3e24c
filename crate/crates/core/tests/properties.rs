//! Property tests over randomly drawn surds and lines. Oracles are written
//! here from integer arithmetic, independently of the library routines.

use anth_core::anth::{anth_expand, convergents, default_cap, remainders};
use anth_core::kernel::{commensurability_of, Commensurability, Surd};
use anth_core::pell::pell_fundamental;
use anth_core::proportion::{proportion_laws, ratio_equal, scale_invariance, TheaeteteanRatio};
use anth_core::taxonomy::{
    alogos_from_apotome, classify_alogos, conjugate, expected_kind, make_two_term, LineKind, Sign,
};
use anth_core::{parse_expr, Expansion, QuadSurd, Radical, Rational, RootRational, TwoTermLine};
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed};
use proptest::prelude::*;

const RADICANDS: [i64; 10] = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ratio() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn pos_ratio() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn surd_in(m: i64) -> impl Strategy<Value = QuadSurd> {
    (ratio(), ratio()).prop_map(move |(u, v)| Surd::normalize(u, v, Rational::from_integer(m.into())).unwrap())
}

/// Three values of one field `Q(√m)`.
fn triple() -> impl Strategy<Value = (QuadSurd, QuadSurd, QuadSurd)> {
    prop::sample::select(RADICANDS.to_vec()).prop_flat_map(|m| (surd_in(m), surd_in(m), surd_in(m)))
}

fn pos_surd_in(m: i64) -> impl Strategy<Value = QuadSurd> {
    surd_in(m).prop_filter("positive", |s| s.is_positive())
}

fn irrational_pos() -> impl Strategy<Value = QuadSurd> {
    prop::sample::select(RADICANDS.to_vec())
        .prop_flat_map(pos_surd_in)
        .prop_filter("irrational", |s| !s.is_rational())
}

fn approx(s: &QuadSurd) -> f64 {
    let f = |r: &Rational| r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap();
    f(s.u()) + f(s.v()) * (s.radicand().to_string().parse::<f64>().unwrap()).sqrt()
}

fn is_rational_square(r: &Rational) -> bool {
    let sq = |n: &BigInt| !n.is_negative() && {
        let s = n.sqrt();
        &(s.clone() * s) == n
    };
    sq(r.numer()) && sq(r.denom())
}

/// Euclid's quotients of `n : d` by repeated division.
fn euclid_quotients(mut n: i64, mut d: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while d != 0 {
        out.push(n.div_euclid(d));
        (n, d) = (d, n.rem_euclid(d));
    }
    out
}

fn root(sq: &Rational) -> RootRational {
    RootRational::from_square(sq).unwrap()
}

/// Order from the term squares alone: criterion (i) by which square is a
/// rational square, criterion (ii) by whether `(ζ² − η²)/ζ²` is one.
fn order_oracle(z2: &Rational, e2: &Rational) -> u8 {
    let base = if is_rational_square(&((z2 - e2) / z2)) { 0 } else { 3 };
    base + if is_rational_square(z2) {
        1
    } else if is_rational_square(e2) {
        2
    } else {
        3
    }
}

/// Term squares `(ζ², η²)` with `ζ² > η² > 0` and `ζ²/η²` not a rational square.
fn term_squares() -> impl Strategy<Value = (Rational, Rational)> {
    (1i64..=40, 1i64..=6, 1i64..=40, 1i64..=6, prop::sample::select(vec![1i64, 2, 3, 5, 6]))
        .prop_map(|(a, b, c, d, k)| (q(a * k, b), q(c * k, d)))
        .prop_filter_map("ordered, incommensurable terms", |(x, y)| {
            let (z2, e2) = if x > y { (x, y) } else { (y, x) };
            (z2 != e2 && !is_rational_square(&(&z2 / &e2))).then_some((z2, e2))
        })
}

fn line() -> impl Strategy<Value = TwoTermLine> {
    (term_squares(), any::<bool>()).prop_map(|((z2, e2), plus)| {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        make_two_term(root(&z2), root(&e2), sign).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn norm_is_multiplicative((x, y, _) in triple()) {
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        let conj_prod = x.checked_mul(&x.conj()).unwrap();
        prop_assert_eq!(conj_prod.as_rational().cloned(), Some(x.norm()));
    }

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        let add = |a: &QuadSurd, b: &QuadSurd| a.checked_add(b).unwrap();
        let mul = |a: &QuadSurd, b: &QuadSurd| a.checked_mul(b).unwrap();
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
        prop_assert!(add(&x, &-&x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(mul(&x, &x.recip().unwrap()), Surd::one());
        }
    }

    #[test]
    fn order_agrees_with_floats((x, y, _) in triple()) {
        let diff = approx(&x) - approx(&y);
        if diff.abs() > 1e-6 {
            prop_assert_eq!(x > y, diff > 0.0, "{} vs {}", x, y);
        }
    }

    #[test]
    fn expressions_round_trip((x, y, _) in triple()) {
        let r = &Radical::from(&x) * &Radical::from(&y);
        prop_assert_eq!(parse_expr::<BigInt>(&r.to_string()).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn commensurability_relations((x, y, z) in triple(), s in pos_ratio()) {
        prop_assume!(!x.is_zero() && !y.is_zero() && !z.is_zero());
        let (rx, ry, rz) = (Radical::from(&x), Radical::from(&y), Radical::from(&z));
        let c = |a: &Radical, b: &Radical| commensurability_of(a, b).unwrap();
        prop_assert_eq!(c(&rx, &rx), Commensurability::Length);
        prop_assert_eq!(c(&rx, &ry), c(&ry, &rx));
        prop_assert_eq!(c(&rx, &rx.scale(&s)), Commensurability::Length);
        if c(&rx, &ry) == Commensurability::Length && c(&ry, &rz) == Commensurability::Length {
            prop_assert_eq!(c(&rx, &rz), Commensurability::Length);
        }
        let ratio_sq_rational = rx.checked_div(&ry).unwrap().square().is_rational();
        prop_assert_eq!(c(&rx, &ry) != Commensurability::Neither, ratio_sq_rational);
    }

    #[test]
    fn rational_expansion_is_euclid(n in 1i64..100_000, d in 1i64..100_000) {
        let cf = anth_expand(&Surd::rational(q(n, d)), 1000).unwrap();
        let g = num_integer::gcd(n, d);
        prop_assert_eq!(cf.head().to_vec(), euclid_quotients(n / g, d / g).into_iter().map(BigInt::from).collect::<Vec<_>>());
        prop_assert!(cf.is_finite());
    }

    #[test]
    fn irrational_expansion_recovers_value(x in irrational_pos()) {
        let cf = anth_expand(&x, default_cap(&x)).unwrap();
        prop_assert!(cf.is_periodic());
        prop_assert!(cf.denotes(&x).unwrap());
        let text = cf.to_string();
        prop_assert_eq!(text.parse::<Expansion>().unwrap(), cf.clone());
        // determinant identity for consecutive convergents
        let t = convergents(&cf, 12);
        for w in t.rows().windows(2) {
            let det = &w[1].q * &w[0].p - &w[0].q * &w[1].p;
            prop_assert_eq!(det.abs(), BigInt::one());
        }
    }

    #[test]
    fn state_walk_matches_subtraction(x in irrational_pos()) {
        let cf = anth_expand(&x, default_cap(&x)).unwrap();
        let by_subtraction: Vec<BigInt> = remainders(&x, &Surd::one()).unwrap().take(25).map(|(k, _)| k).collect();
        let by_states: Vec<BigInt> = cf.quotients().take(25).cloned().collect();
        prop_assert_eq!(by_subtraction, by_states);
    }

    #[test]
    fn proportion_laws_hold((a, b, c) in prop::sample::select(RADICANDS.to_vec())
        .prop_flat_map(|m| (pos_surd_in(m), pos_surd_in(m), pos_surd_in(m))))
    {
        let d = b.checked_mul(&c).unwrap().checked_div(&a).unwrap();
        let report = proportion_laws(&a, &b, &c, &d).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report);
        prop_assert!(scale_invariance(&a, &b, &c).unwrap());
        let r1 = TheaeteteanRatio::new(a.clone(), b.clone()).unwrap();
        let r2 = TheaeteteanRatio::new(a.checked_add(&Surd::one()).unwrap(), b.clone()).unwrap();
        prop_assert!(!ratio_equal(&r1, &r2).unwrap());
    }

    #[test]
    fn order_matches_integer_criteria(l in line()) {
        let oracle = order_oracle(&l.zeta().square(), &l.eta().square());
        prop_assert_eq!(l.order(), oracle);
        prop_assert_eq!(l.mirror().order(), oracle);
        prop_assert_eq!(l.scale(&q(3, 7)).unwrap().order(), oracle);
        let expected = match l.sign() {
            Sign::Minus => LineKind::Apotome(oracle),
            Sign::Plus => LineKind::Binomial(oracle),
        };
        prop_assert_eq!(l.kind(), expected);
    }

    #[test]
    fn conjugate_is_reciprocal(l in line()) {
        let delta = conjugate(&l).unwrap();
        prop_assert_eq!(&l.value() * &delta.value(), Radical::one());
        prop_assert_eq!(delta.order(), l.order());
        prop_assert_eq!(delta.sign(), match l.sign() { Sign::Plus => Sign::Minus, Sign::Minus => Sign::Plus });
    }

    #[test]
    fn side_squares_back_and_matches_family(l in line()) {
        let omega = alogos_from_apotome(&l).unwrap();
        let sq = omega.square().unwrap();
        prop_assert_eq!(sq, l.value());
        let kind = classify_alogos(&omega).unwrap();
        prop_assert_eq!(kind.family(), expected_kind(l.order(), l.sign()));
    }

    #[test]
    fn pell_solutions_verify(n in 2i64..600) {
        prop_assume!(n.sqrt() * n.sqrt() != n);
        let s = pell_fundamental(&BigInt::from(n)).unwrap();
        prop_assert!(s.x.is_positive());
        prop_assert_eq!(&s.y * &s.y - BigInt::from(n) * &s.x * &s.x, BigInt::one());
    }
}

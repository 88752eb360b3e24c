use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use super::two_term::{make_two_term, TwoTermLine};
use super::{LineError, LineKind, Sign};
use crate::kernel::{commensurability_of, Commensurability, Radical, RootRational};
use crate::periodicity::defect_solve;
use crate::scalar::{int, Int};

/// `√A ± √B`, kept as the term-squares `A > B > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlogosLine<T: Int> {
    a: Radical<T>,
    b: Radical<T>,
    sign: Sign,
}

impl<T: Int> AlogosLine<T> {
    pub fn new(a: Radical<T>, b: Radical<T>, sign: Sign) -> Result<Self, LineError> {
        if !b.is_positive() || a.cmp_exact(&b) != Ordering::Greater {
            return Err(LineError::BadTerms {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { a, b, sign })
    }

    pub fn a(&self) -> &Radical<T> {
        &self.a
    }

    pub fn b(&self) -> &Radical<T> {
        &self.b
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// `Φ² + Ψ² = A + B`.
    pub fn whole(&self) -> Radical<T> {
        &self.a + &self.b
    }

    /// `2ΦΨ = √(4AB)`; defined when `AB` is rational, as for every kind.
    pub fn twice_rectangle(&self) -> Result<RootRational<T>, LineError> {
        let ab = &self.a * &self.b;
        let q = ab.as_rational().ok_or_else(|| LineError::OutsideFamily(self.to_string()))?;
        Ok(RootRational::from_square(&(q * Ratio::from_integer(int::<T>(4))))?)
    }

    /// `Ω² = A + B ± 2√(AB)`.
    pub fn square(&self) -> Result<Radical<T>, LineError> {
        let rect = self.twice_rectangle()?.to_radical();
        Ok(match self.sign {
            Sign::Plus => &self.whole() + &rect,
            Sign::Minus => &self.whole() - &rect,
        })
    }

    /// The line multiplied by a positive rational `q`.
    pub fn scale(&self, q: &Ratio<T>) -> Result<Self, LineError> {
        let q2 = q.clone() * q.clone();
        Self::new(self.a.scale(&q2), self.b.scale(&q2), self.sign)
    }
}

impl<T: Int> fmt::Display for AlogosLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({}) {} sqrt({})", self.a, self.sign.symbol(), self.b)
    }
}

/// A positive rational.
pub fn is_rational_area<T: Int>(x: &Radical<T>) -> bool {
    x.is_positive() && x.is_rational()
}

/// An area `v·√k` with `v > 0` rational and `k > 1` square-free.
pub fn is_medial_area<T: Int>(x: &Radical<T>) -> bool {
    match x.single_term() {
        Some((k, c)) => !k.is_one() && *c > Ratio::from_integer(T::zero()),
        None => false,
    }
}

/// A line is medial when its square is a medial area.
pub fn is_medial_line<T: Int>(square: &Radical<T>) -> bool {
    is_medial_area(square)
}

/// The kind family an apotome (or binomial) of the given order produces
/// as the side of its area with the unit.
pub fn expected_kind(order: u8, sign: Sign) -> &'static str {
    let (minus, plus) = match order {
        1 => ("apotome", "binomial"),
        2 => ("first-apotome-of-medial", "first-bimedial"),
        3 => ("second-apotome-of-medial", "second-bimedial"),
        4 => ("minor", "major"),
        5 => ("producing-rational-and-medial-whole", "side-of-rational-plus-medial"),
        6 => ("producing-medial-and-medial-whole", "side-of-two-medials"),
        _ => panic!("orders run from 1 to 6, got {order}"),
    };
    match sign {
        Sign::Minus => minus,
        Sign::Plus => plus,
    }
}

fn pick(sign: Sign, minus: LineKind, plus: LineKind) -> LineKind {
    match sign {
        Sign::Minus => minus,
        Sign::Plus => plus,
    }
}

/// Decides the kind from (i) `A/B` rational, (ii) `A + B` rational or
/// medial, (iii) `2√(AB)` rational or medial.
pub fn classify_alogos<T: Int>(x: &AlogosLine<T>) -> Result<LineKind, LineError> {
    let rect = x.twice_rectangle()?;
    let sq = x.square()?;
    if sq.is_rational() {
        return Ok(LineKind::Rational);
    }
    if is_medial_area(&sq) {
        return Ok(LineKind::Medial);
    }
    let in_square = x.a.checked_div(&x.b)?.is_rational();
    let whole = x.whole();
    let (whole_rational, whole_medial) = (is_rational_area(&whole), is_medial_area(&whole));
    let rect_rational = rect.is_rational();
    let s = x.sign;
    let kind = match (in_square, whole_rational, whole_medial, rect_rational) {
        (true, true, _, false) => {
            let zeta = RootRational::from_square(&x.a.as_rational().expect("A is rational"))?;
            let eta = RootRational::from_square(&x.b.as_rational().expect("B is rational"))?;
            let order = make_two_term(zeta, eta, s)?.order();
            pick(s, LineKind::Apotome(order), LineKind::Binomial(order))
        }
        (true, false, true, true) => pick(s, LineKind::FirstApotomeOfMedial, LineKind::FirstBimedial),
        (true, false, true, false) => pick(s, LineKind::SecondApotomeOfMedial, LineKind::SecondBimedial),
        (false, true, _, false) => pick(s, LineKind::Minor, LineKind::Major),
        (false, false, true, true) => pick(
            s,
            LineKind::ProducingRationalAndMedialWhole,
            LineKind::SideOfRationalPlusMedial,
        ),
        (false, false, true, false)
            if commensurability_of(&whole, &rect.to_radical())? != Commensurability::Length =>
        {
            pick(s, LineKind::ProducingMedialAndMedialWhole, LineKind::SideOfTwoMedials)
        }
        _ => return Err(LineError::NoKind(x.to_string())),
    };
    // every one of the twelve kinds has a square incommensurable with the unit
    if commensurability_of(&sq, &Radical::one())? == Commensurability::Length {
        return Err(LineError::CheckFailed(format!("{x} has a rational square")));
    }
    Ok(kind)
}

/// The side `Ω` of the area `γ·r` for an apotome or binomial `γ = ζ ∓ η`.
///
/// Follows the construction in a circle of diameter `ζ`: `x` solves
/// `x(ζ − x) = η²/4`, the legs satisfy `Φ² = ζ(ζ − x)` and `Ψ² = ζx`, and
/// rescaling by `r/ζ` gives `φ² = ζ − x`, `ψ² = x` with `φψ = η/2`.
pub fn alogos_from_apotome<T: Int>(gamma: &TwoTermLine<T>) -> Result<AlogosLine<T>, LineError> {
    let sol = defect_solve(gamma.zeta(), gamma.eta())?;
    let zeta = gamma.zeta().to_radical();
    let phi_sq = &zeta * &sol.complement();
    let psi_sq = &zeta * &sol.x;
    if &phi_sq + &psi_sq != zeta.square() {
        return Err(LineError::CheckFailed("Φ² + Ψ² ≠ ζ²".into()));
    }
    let zeta_inv = zeta.recip()?;
    let omega = AlogosLine::new(&phi_sq * &zeta_inv, &psi_sq * &zeta_inv, gamma.sign())?;
    let half_eta = gamma.eta().scale(&Ratio::new(T::one(), int(2)))?;
    if Radical::rational(half_eta.square()) != &omega.a * &omega.b {
        return Err(LineError::CheckFailed("φψ ≠ η/2".into()));
    }
    if omega.square()? != gamma.value() {
        return Err(LineError::CheckFailed(format!("({omega})² ≠ {gamma}")));
    }
    let kind = classify_alogos(&omega)?;
    let expected = expected_kind(gamma.order(), gamma.sign());
    if kind.family() != expected {
        return Err(LineError::CheckFailed(format!(
            "{gamma} of order {} gave {kind}, expected {expected}",
            gamma.order()
        )));
    }
    Ok(omega)
}

/// Recovers `γ = Ω²` as a two-term line: `ζ = A + B`, `η = 2√(AB)`.
pub fn apotome_from_alogos<T: Int>(omega: &AlogosLine<T>) -> Result<TwoTermLine<T>, LineError> {
    let zeta = RootRational::from_radical(&omega.whole())
        .map_err(|_| LineError::OutsideFamily(omega.to_string()))?;
    let eta = omega.twice_rectangle()?;
    let gamma = make_two_term(zeta, eta, omega.sign)?;
    if omega.square()? != gamma.value() {
        return Err(LineError::CheckFailed(format!("({omega})² ≠ {gamma}")));
    }
    let kind = classify_alogos(omega)?;
    let expected = expected_kind(gamma.order(), gamma.sign());
    if kind.family() != expected {
        return Err(LineError::CheckFailed(format!(
            "{omega} is {kind} but its square {gamma} has order {}",
            gamma.order()
        )));
    }
    Ok(gamma)
}

/// For two medial areas: their difference is not a nonzero rational.
/// `None` if either input is not a medial area.
pub fn medial_difference_not_rational<T: Int>(m1: &Radical<T>, m2: &Radical<T>) -> Option<bool> {
    if !is_medial_area(m1) || !is_medial_area(m2) {
        return None;
    }
    let d = m1 - m2;
    Some(d.is_zero() || !d.is_rational())
}

/// Sampled refutation of a second annex.
///
/// Candidates of the same kind come from rescaling the terms of `γ = Ω²`
/// by factors `s/10`, `t/10` with `6 ≤ s, t ≤ 15`. If a candidate
/// `Φ' − Ψ'` equalled `Ω`, the change in `Φ² + Ψ²` would equal the change
/// in `2ΦΨ`; the check confirms that where a component is medial its
/// change is never a nonzero rational, and that the two changes differ.
pub fn uniqueness_check<T: Int>(omega: &AlogosLine<T>) -> Result<bool, LineError> {
    let kind = classify_alogos(omega)?;
    let gamma = apotome_from_alogos(omega)?;
    let whole = omega.whole();
    let rect = omega.twice_rectangle()?.to_radical();
    let mut sampled = 0usize;
    for s in 6..=15i64 {
        for t in 6..=15i64 {
            if (s, t) == (10, 10) {
                continue;
            }
            let zeta = gamma.zeta().scale(&Ratio::new(int(s), int(10)))?;
            let eta = gamma.eta().scale(&Ratio::new(int(t), int(10)))?;
            let Ok(candidate) = make_two_term(zeta, eta, gamma.sign()) else {
                continue;
            };
            let other = alogos_from_apotome(&candidate)?;
            if !classify_alogos(&other)?.same_family(&kind) {
                continue;
            }
            sampled += 1;
            let d_whole = &other.whole() - &whole;
            let d_rect = &other.twice_rectangle()?.to_radical() - &rect;
            if d_whole == d_rect {
                return Ok(false);
            }
            for (c1, c2) in [(&whole, other.whole()), (&rect, other.twice_rectangle()?.to_radical())] {
                if medial_difference_not_rational(&c2, c1) == Some(false) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(sampled > 0)
}

/// The kind, and the order of the recovered two-term line, survive
/// multiplication by a positive rational.
pub fn invariance_check<T: Int>(omega: &AlogosLine<T>, scale: &Ratio<T>) -> Result<bool, LineError> {
    let scaled = omega.scale(scale)?;
    let (k1, k2) = (classify_alogos(omega)?, classify_alogos(&scaled)?);
    if k1 != k2 {
        return Ok(false);
    }
    if matches!(k1, LineKind::Rational | LineKind::Medial) {
        return Ok(true);
    }
    Ok(apotome_from_alogos(omega)?.order() == apotome_from_alogos(&scaled)?.order())
}

#[cfg(test)]
mod tests {
    use super::super::two_term::rr;
    use super::*;
    use num_bigint::BigInt;

    type Rad = Radical<BigInt>;
    type R = RootRational<BigInt>;

    fn q(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(n.into(), d.into())
    }

    fn apotome(zeta: R, eta: R) -> TwoTermLine<BigInt> {
        make_two_term(zeta, eta, Sign::Minus).unwrap()
    }

    fn minor_terms() -> (Rad, Rad) {
        let h = Rad::term(q(1, 2), 2.into());
        (&Rad::one() + &h, &Rad::one() - &h)
    }

    #[test]
    fn medial_predicates() {
        assert!(is_medial_line(&Rad::sqrt(&q(2, 1)).unwrap()));
        assert!(!is_medial_line(&Rad::rational(q(2, 1))));
        assert!(is_medial_area(&Rad::term(q(3, 1), 5.into())));
        assert!(!is_medial_area(&(&Rad::one() + &Rad::term(q(1, 1), 2.into()))));
    }

    #[test]
    fn fourth_apotome_gives_minor() {
        let gamma = apotome(R::integer(2), R::sqrt_of(2));
        let omega = alogos_from_apotome(&gamma).unwrap();
        let (a, b) = minor_terms();
        assert_eq!((omega.a(), omega.b()), (&a, &b));
        assert_eq!(classify_alogos(&omega).unwrap(), LineKind::Minor);
        assert_eq!(apotome_from_alogos(&omega).unwrap(), gamma);
    }

    #[test]
    fn first_apotome_gives_apotome() {
        let gamma = apotome(R::integer(3), R::sqrt_of(5));
        let omega = alogos_from_apotome(&gamma).unwrap();
        assert_eq!((omega.a(), omega.b()), (&Rad::rational(q(5, 2)), &Rad::rational(q(1, 2))));
        assert_eq!(classify_alogos(&omega).unwrap(), LineKind::Apotome(6));
    }

    #[test]
    fn binomial_mirror() {
        let gamma = make_two_term(R::sqrt_of(2), R::integer(1), Sign::Plus).unwrap();
        assert_eq!(gamma.order(), 5);
        let omega = alogos_from_apotome(&gamma).unwrap();
        assert_eq!(classify_alogos(&omega).unwrap(), LineKind::SideOfRationalPlusMedial);
        assert_eq!(omega.square().unwrap(), gamma.value());
    }

    #[test]
    fn classify_examples() {
        let (a, b) = minor_terms();
        let minor = AlogosLine::new(a.clone(), b.clone(), Sign::Minus).unwrap();
        assert_eq!(classify_alogos(&minor).unwrap(), LineKind::Minor);
        let major = AlogosLine::new(a, b, Sign::Plus).unwrap();
        assert_eq!(classify_alogos(&major).unwrap(), LineKind::Major);
        assert_eq!(apotome_from_alogos(&major).unwrap().kind(), LineKind::Binomial(4));
        let apo = AlogosLine::new(Rad::rational(q(2, 1)), Rad::one(), Sign::Minus).unwrap();
        assert_eq!(classify_alogos(&apo).unwrap(), LineKind::Apotome(5));
        let gamma = apotome_from_alogos(&apo).unwrap();
        assert_eq!(gamma.to_string(), "3 - 2*sqrt(2)");
        assert_eq!(gamma.order(), 1);
    }

    #[test]
    fn rational_and_medial_sides() {
        // √4 − √1 = 1
        let one = AlogosLine::new(Rad::rational(q(4, 1)), Rad::one(), Sign::Minus).unwrap();
        assert_eq!(classify_alogos(&one).unwrap(), LineKind::Rational);
        // √(2√2) − √(√2/2): square √2/2, medial
        let m = AlogosLine::new(Rad::term(q(2, 1), 2.into()), Rad::term(q(1, 2), 2.into()), Sign::Minus).unwrap();
        assert_eq!(classify_alogos(&m).unwrap(), LineKind::Medial);
    }

    #[test]
    fn all_orders_round_trip() {
        let lines = [
            (R::integer(3), R::sqrt_of(5)),
            (R::sqrt_of(18), R::integer(4)),
            (R::sqrt_of(24), R::sqrt_of(18)),
            (R::integer(2), R::sqrt_of(2)),
            (R::sqrt_of(6), R::integer(2)),
            (rr((1, 3), 15), rr((1, 3), 3)),
        ];
        for (k, (z, e)) in lines.into_iter().enumerate() {
            for sign in [Sign::Minus, Sign::Plus] {
                let gamma = make_two_term(z.clone(), e.clone(), sign).unwrap();
                assert_eq!(gamma.order() as usize, k + 1);
                let omega = alogos_from_apotome(&gamma).unwrap();
                assert_eq!(classify_alogos(&omega).unwrap().family(), expected_kind(gamma.order(), sign));
                assert_eq!(apotome_from_alogos(&omega).unwrap(), gamma);
            }
        }
    }

    #[test]
    fn uniqueness_examples() {
        let omega = alogos_from_apotome(&apotome(R::integer(2), R::sqrt_of(2))).unwrap();
        assert!(uniqueness_check(&omega).unwrap());
        let apo = AlogosLine::new(Rad::rational(q(2, 1)), Rad::one(), Sign::Minus).unwrap();
        assert!(uniqueness_check(&apo).unwrap());
    }

    #[test]
    fn invariance_examples() {
        let omega = alogos_from_apotome(&apotome(R::integer(2), R::sqrt_of(2))).unwrap();
        assert!(invariance_check(&omega, &q(3, 1)).unwrap());
        assert_eq!(classify_alogos(&omega.scale(&q(3, 1)).unwrap()).unwrap(), LineKind::Minor);
        let apo = AlogosLine::new(Rad::rational(q(2, 1)), Rad::one(), Sign::Minus).unwrap();
        assert!(invariance_check(&apo, &q(5, 2)).unwrap());
        assert!(invariance_check(&apo, &q(1, 1)).unwrap());
    }

    #[test]
    fn bad_terms() {
        assert!(AlogosLine::new(Rad::one(), Rad::rational(q(2, 1)), Sign::Minus).is_err());
        assert!(AlogosLine::new(Rad::one(), Rad::zero(), Sign::Minus).is_err());
    }
}

//! Proportion as equality of anthyphairesis.
//!
//! Two ratios are equal when their quotient sequences agree. Every ratio of
//! magnitudes in this crate expands finitely or periodically, so the
//! comparison is exact and needs no limit argument. Areas are treated as
//! magnitudes of the same representation.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::anth::{anth_expand, default_cap, AnthError, CFExpansion};
use crate::kernel::{KernelError, Radical, Surd};
use crate::scalar::{int, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProportionError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Anth(#[from] AnthError),
    #[error("expected a positive magnitude, got {0}")]
    NonPositive(String),
    #[error("{0} : {1} is not the ratio {2} : {3}")]
    NotProportional(String, String, String, String),
    #[error("{0} does not lie in a single quadratic field")]
    MixedFields(String),
    #[error("the application of areas does not hold for {0}")]
    RelationFails(String),
    #[error("self-check failed: {0}")]
    CheckFailed(String),
}

/// A ratio `a : b` of two positive magnitudes from one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TheaeteteanRatio<T: Int> {
    a: Surd<T>,
    b: Surd<T>,
}

impl<T: Int> TheaeteteanRatio<T> {
    pub fn new(a: Surd<T>, b: Surd<T>) -> Result<Self, ProportionError> {
        for x in [&a, &b] {
            if !x.is_positive() {
                return Err(ProportionError::NonPositive(x.to_string()));
            }
        }
        a.checked_div(&b)?;
        Ok(Self { a, b })
    }

    pub fn antecedent(&self) -> &Surd<T> {
        &self.a
    }

    pub fn consequent(&self) -> &Surd<T> {
        &self.b
    }

    /// `a / b` as a number.
    pub fn quotient(&self) -> Surd<T> {
        self.a.checked_div(&self.b).expect("checked at construction")
    }

    pub fn anth(&self) -> Result<CFExpansion<T>, AnthError> {
        let x = self.quotient();
        anth_expand(&x, default_cap(&x))
    }
}

impl<T: Int> fmt::Display for TheaeteteanRatio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) : ({})", self.a, self.b)
    }
}

/// `Anth(a, b) = Anth(c, d)`, cross-checked against `ad = bc`.
pub fn ratio_equal<T: Int>(
    r1: &TheaeteteanRatio<T>,
    r2: &TheaeteteanRatio<T>,
) -> Result<bool, ProportionError> {
    let by_anth = r1.anth()? == r2.anth()?;
    let ad = &Radical::from(&r1.a) * &Radical::from(&r2.b);
    let bc = &Radical::from(&r1.b) * &Radical::from(&r2.a);
    if by_anth != (ad == bc) {
        return Err(ProportionError::CheckFailed(format!(
            "expansion equality {by_anth} disagrees with cross products for {r1} and {r2}"
        )));
    }
    Ok(by_anth)
}

fn ratio<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<TheaeteteanRatio<T>, ProportionError> {
    TheaeteteanRatio::new(a.clone(), b.clone())
}

fn same<T: Int>(a: &Surd<T>, b: &Surd<T>, c: &Surd<T>, d: &Surd<T>) -> Result<bool, ProportionError> {
    ratio_equal(&ratio(a, b)?, &ratio(c, d)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// `a/b = c/d ⟹ a/c = b/d`.
    Alternando,
    /// `a/b = d/e, b/c = e/f ⟹ a/c = d/f`.
    ExAequali,
    /// `a/b = e/f, b/c = d/e ⟹ a/c = d/f`.
    Perturbed,
    /// `(a + c)/(b + d) = a/b`.
    SumOfTerms,
    /// `(a − c)/(b − d) = a/b` for `a > c`, `b > d`.
    DifferenceOfTerms,
    /// `(a + b)/b = (c + d)/d`.
    Componendo,
    /// `(a − b)/b = (c − d)/d` for `a > b`.
    Dividendo,
}

impl Law {
    pub const ALL: [Law; 7] = [
        Law::Alternando,
        Law::ExAequali,
        Law::Perturbed,
        Law::SumOfTerms,
        Law::DifferenceOfTerms,
        Law::Componendo,
        Law::Dividendo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Law::Alternando => "alternando",
            Law::ExAequali => "ex-aequali",
            Law::Perturbed => "perturbed",
            Law::SumOfTerms => "sum-of-terms",
            Law::DifferenceOfTerms => "difference-of-terms",
            Law::Componendo => "componendo",
            Law::Dividendo => "dividendo",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The law's side condition does not hold for this quadruple.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LawReport {
    pub checks: Vec<(Law, Outcome)>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, o)| *o != Outcome::Fail)
    }

    pub fn outcome(&self, law: Law) -> Option<Outcome> {
        self.checks.iter().find(|(l, _)| *l == law).map(|(_, o)| *o)
    }
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Checks every law on a proportion `a/b = c/d` of four magnitudes from one
/// field. The auxiliary lines for the three-term laws are built from the
/// quadruple: `a+b` and `c+d` for ex aequali, `a+b` and `bc/(a+b)` for the
/// perturbed proportion. Premises are re-verified, never assumed.
pub fn proportion_laws<T: Int>(
    a: &Surd<T>,
    b: &Surd<T>,
    c: &Surd<T>,
    d: &Surd<T>,
) -> Result<LawReport, ProportionError> {
    let all = [a, b, c, d];
    let mut field: Option<&Surd<T>> = None;
    for x in all {
        if !x.is_positive() {
            return Err(ProportionError::NonPositive(x.to_string()));
        }
        if let Some(f) = field {
            if !f.compatible(x) {
                return Err(ProportionError::MixedFields(format!("{a}, {b}, {c}, {d}")));
            }
        }
        if !x.is_rational() {
            field = Some(x);
        }
    }
    if !same(a, b, c, d)? {
        return Err(ProportionError::NotProportional(
            a.to_string(),
            b.to_string(),
            c.to_string(),
            d.to_string(),
        ));
    }
    let mut checks = Vec::new();

    checks.push((Law::Alternando, outcome(same(a, c, b, d)?)));

    // a, b, x = a + b and c, d, y = c + d
    let x = a + b;
    let y = c + d;
    let ex = same(b, &x, d, &y)? && same(a, &x, c, &y)?;
    checks.push((Law::ExAequali, outcome(ex)));

    // a/b = e/f with e = c, f = d; b/x = g/e with x = a + b, g = b·c/x
    let g = (b * c).checked_div(&x)?;
    let perturbed = same(b, &x, &g, c)? && same(a, &x, &g, d)?;
    checks.push((Law::Perturbed, outcome(perturbed)));

    checks.push((Law::SumOfTerms, outcome(same(&(a + c), &(b + d), a, b)?)));

    let diff = match (a.cmp_exact(c)?, b.cmp_exact(d)?) {
        (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => {
            outcome(same(&(a - c), &(b - d), a, b)?)
        }
        (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => outcome(same(&(c - a), &(d - b), a, b)?),
        _ => Outcome::NotApplicable,
    };
    checks.push((Law::DifferenceOfTerms, diff));

    checks.push((Law::Componendo, outcome(same(&(a + b), b, &(c + d), d)?)));

    let dividendo = if a.cmp_exact(b)? == std::cmp::Ordering::Greater {
        outcome(same(&(a - b), b, &(c - d), d)?)
    } else {
        Outcome::NotApplicable
    };
    checks.push((Law::Dividendo, dividendo));

    Ok(LawReport { checks })
}

/// `Anth(ac, bc) = Anth(a, b)` for a multiplier `c` from the same field.
pub fn scale_invariance<T: Int>(a: &Surd<T>, b: &Surd<T>, c: &Surd<T>) -> Result<bool, ProportionError> {
    if !c.is_positive() {
        return Err(ProportionError::NonPositive(c.to_string()));
    }
    let ac = a.checked_mul(c)?;
    let bc = b.checked_mul(c)?;
    same(&ac, &bc, a, b)
}

fn gnomon_holds<T: Int>(coef: &(T, T, T), a: &Surd<T>, b: &Surd<T>) -> Result<bool, KernelError> {
    let (ka, kb, kc) = coef;
    let q = |k: &T| Ratio::from_integer(k.clone());
    let lhs = a.square().scale(&q(ka));
    let rhs = a.checked_mul(b)?.scale(&q(kb)).checked_add(&b.square().scale(&q(kc)))?;
    Ok(lhs == rhs)
}

/// Given `A·a² = B·ab + C·b²`, returns the `d` with `A·c² = B·cd + C·d²`.
///
/// `d` is found twice: as `bc/a` (a proportional fourth) and as the
/// positive root of `C·d² + B·c·d − A·c² = 0`; the two must agree. The
/// relation is also checked to fail for perturbed values of `d`.
pub fn gnomon_preservation<T: Int>(
    coef: (T, T, T),
    a: &Surd<T>,
    b: &Surd<T>,
    c: &Surd<T>,
) -> Result<Surd<T>, ProportionError> {
    let (ka, kb, kc) = &coef;
    if !ka.is_positive() || kb.is_negative() || !kc.is_positive() {
        return Err(ProportionError::RelationFails(format!("coefficients ({ka}, {kb}, {kc})")));
    }
    for x in [a, b, c] {
        if !x.is_positive() {
            return Err(ProportionError::NonPositive(x.to_string()));
        }
    }
    if !gnomon_holds(&coef, a, b)? {
        return Err(ProportionError::RelationFails(format!("a = {a}, b = {b}")));
    }
    // proportional fourth
    let d = b.checked_mul(c)?.checked_div(a)?;
    if !gnomon_holds(&coef, c, &d)? {
        return Err(ProportionError::CheckFailed(format!("relation not inherited by ({c}, {d})")));
    }
    // d/c = (√(B² + 4AC) − B) / 2C
    let disc = kb.clone() * kb.clone() + int::<T>(4) * ka.clone() * kc.clone();
    let two_c = Ratio::from_integer(kc.clone() + kc.clone());
    let t = Surd::normalize(
        -Ratio::from_integer(kb.clone()) / two_c.clone(),
        Ratio::from_integer(T::one()) / two_c,
        Ratio::from_integer(disc),
    )?;
    let root = c.checked_mul(&t)?;
    if root != d {
        return Err(ProportionError::CheckFailed(format!("root {root} differs from bc/a = {d}")));
    }
    for frac in [Ratio::new(int(8), int(7)), Ratio::new(int(6), int(7))] {
        if gnomon_holds(&coef, c, &d.scale(&frac))? {
            return Err(ProportionError::CheckFailed(format!("relation also holds at {}", d.scale(&frac))));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Surd<BigInt>;

    fn r(a: S, b: S) -> TheaeteteanRatio<BigInt> {
        TheaeteteanRatio::new(a, b).unwrap()
    }

    fn n(v: i64) -> S {
        S::from_i64(v)
    }

    #[test]
    fn ratio_equal_examples() {
        let r2 = S::sqrt_of(2);
        assert!(ratio_equal(&r(r2.clone(), n(1)), &r(n(2), r2.clone())).unwrap());
        assert!(ratio_equal(&r(n(7), n(3)), &r(n(14), n(6))).unwrap());
        assert!(!ratio_equal(&r(r2, n(1)), &r(S::sqrt_of(3), n(1))).unwrap());
    }

    #[test]
    fn laws_on_scaled_pair() {
        let r2 = S::sqrt_of(2);
        let rep = proportion_laws(&r2, &n(1), &(n(2) * &r2), &n(2)).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.outcome(Law::Alternando), Some(Outcome::Pass));
        assert_eq!(rep.outcome(Law::Dividendo), Some(Outcome::Pass));
    }

    #[test]
    fn laws_on_golden_style_quadruple() {
        let a = n(1) + S::sqrt_of(2);
        let c = n(3) + n(2) * S::sqrt_of(2);
        let d = c.checked_div(&a).unwrap();
        assert_eq!(d, a);
        let rep = proportion_laws(&a, &n(1), &c, &d).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn degenerate_quadruple() {
        let a = S::sqrt_of(5);
        let rep = proportion_laws(&a, &n(2), &a, &n(2)).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.outcome(Law::DifferenceOfTerms), Some(Outcome::NotApplicable));
    }

    #[test]
    fn laws_reject_bad_input() {
        assert!(matches!(
            proportion_laws(&n(1), &n(2), &n(1), &n(3)),
            Err(ProportionError::NotProportional(..))
        ));
        assert!(matches!(
            proportion_laws(&S::sqrt_of(2), &n(1), &S::sqrt_of(3), &n(1)),
            Err(ProportionError::MixedFields(_))
        ));
    }

    #[test]
    fn scale_invariance_examples() {
        assert!(scale_invariance(&S::sqrt_of(2), &n(1), &n(5)).unwrap());
        assert!(scale_invariance(&n(7), &n(3), &S::sqrt_of(2)).unwrap());
        assert!(scale_invariance(&(n(1) + S::sqrt_of(2)), &n(1), &n(3)).unwrap());
        assert!(scale_invariance(&(n(1) + S::sqrt_of(2)), &n(1), &(n(1) + S::sqrt_of(2))).unwrap());
    }

    #[test]
    fn gnomon_examples() {
        let b = |v: i64| BigInt::from(v);
        let a = n(1) + S::sqrt_of(2);
        let d = gnomon_preservation((b(1), b(2), b(1)), &a, &n(1), &(n(3) * &a)).unwrap();
        assert_eq!(d, n(3));
        let g = (n(1) + S::sqrt_of(5)) / n(2);
        let d = gnomon_preservation((b(1), b(1), b(1)), &g, &n(1), &(n(2) * &g)).unwrap();
        assert_eq!(d, n(2));
        let d = gnomon_preservation((b(1), b(2), b(1)), &a, &n(1), &(n(2) + S::sqrt_of(2))).unwrap();
        assert_eq!(d, S::sqrt_of(2));
        assert!(matches!(
            gnomon_preservation((b(1), b(2), b(1)), &n(2), &n(1), &n(1)),
            Err(ProportionError::RelationFails(_))
        ));
    }
}

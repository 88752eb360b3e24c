//! Periodicity theorems and the application of areas in defect.
//!
//! * A ratio `a : b` with `M·a² = N·b²` and `MN` non-square has an
//!   eventually periodic expansion, hence `a`, `b` are incommensurable.
//! * `√N` expands as `[k0; (k1, …, k_{p−1}, 2·k0)]` with a palindromic
//!   inner block.
//! * For `ζ > η` commensurable in square only, the smaller root `x` of
//!   `x(ζ − x) = η²/4` makes `ζ : x` eventually periodic.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::anth::{anth_expand, default_cap, AnthError, CFExpansion};
use crate::kernel::arith::is_perfect_square;
use crate::kernel::{commensurability_of, Commensurability, KernelError, Radical, RootRational, Surd};
use crate::scalar::{int, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Anth(#[from] AnthError),
    #[error("{0} is a perfect square")]
    SquareInput(String),
    #[error("need zeta > eta > 0, got zeta = {zeta}, eta = {eta}")]
    NotGreater { zeta: String, eta: String },
    #[error("{zeta} and {eta} are commensurable in length")]
    CommensurableTerms { zeta: String, eta: String },
    #[error("{zeta} and {eta} lie in different quadratic fields")]
    MixedRadicands { zeta: String, eta: String },
    #[error("expansion of {0} terminated; a period was expected")]
    NoPeriod(String),
    #[error("expected a positive value, got {0}")]
    NonPositive(String),
    #[error("self-check failed: {0}")]
    CheckFailed(String),
}

/// Expands `√(N/M)` and confirms that it is periodic and irrational.
pub fn theorem1_check<T: Int>(m: &T, n: &T, cap: usize) -> Result<CFExpansion<T>, TheoremError> {
    if !m.is_positive() || !n.is_positive() {
        return Err(TheoremError::NonPositive(format!("M = {m}, N = {n}")));
    }
    let mn = m.clone() * n.clone();
    if is_perfect_square(&mn) {
        return Err(TheoremError::SquareInput(format!("M·N = {mn}")));
    }
    let x = Surd::sqrt(Ratio::new(n.clone(), m.clone()))?;
    let cf = anth_expand(&x, cap)?;
    if cf.is_finite() {
        return Err(TheoremError::NoPeriod(x.to_string()));
    }
    // incommensurability read off the kernel, independently of the expansion
    if x.is_rational() {
        return Err(TheoremError::CheckFailed(format!("{x} has a period but is rational")));
    }
    Ok(cf)
}

/// Whether `cf` has the form `[k0; (k1, …, k_{p−1}, 2·k0)]` with
/// `(k1, …, k_{p−1})` a palindrome.
pub fn is_palindromic_surd_form<T: Int>(cf: &CFExpansion<T>) -> bool {
    let (head, period) = (cf.head(), cf.period());
    let [k0] = head else { return false };
    let Some((last, inner)) = period.split_last() else {
        return false;
    };
    *last == k0.clone() + k0.clone() && inner.iter().eq(inner.iter().rev())
}

/// Expands `√N` for non-square `N ≥ 2` and checks the palindromic form.
pub fn palindrome_check<T: Int>(n: &T) -> Result<(CFExpansion<T>, bool), TheoremError> {
    if *n < int(2) || is_perfect_square(n) {
        return Err(TheoremError::SquareInput(n.to_string()));
    }
    let x = Surd::sqrt(Ratio::from_integer(n.clone()))?;
    let cf = anth_expand(&x, default_cap(&x))?;
    let ok = is_palindromic_surd_form(&cf);
    Ok((cf, ok))
}

/// One line of the batch report: `N head period palindrome_ok`, with
/// quotient lists comma-separated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeRow<T: Int> {
    pub n: T,
    pub cf: CFExpansion<T>,
    pub ok: bool,
}

impl<T: Int> fmt::Display for PalindromeRow<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ks: &[T]| ks.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} {} {} {}", self.n, join(self.cf.head()), join(self.cf.period()), self.ok)
    }
}

/// Rows for every non-square `N` in `lo..=hi`.
pub fn palindrome_report<T: Int>(lo: &T, hi: &T) -> Result<Vec<PalindromeRow<T>>, TheoremError> {
    let mut rows = Vec::new();
    let mut n = lo.clone().max(int(2));
    while n <= *hi {
        if !is_perfect_square(&n) {
            let (cf, ok) = palindrome_check(&n)?;
            rows.push(PalindromeRow { n: n.clone(), cf, ok });
        }
        n = n + T::one();
    }
    Ok(rows)
}

/// The smaller root of `x(ζ − x) = η²/4`, with `θ² = ζ² − η²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefectSolution<T: Int> {
    pub zeta: RootRational<T>,
    pub eta: RootRational<T>,
    /// `(ζ − θ)/2`; involves two radicands when `θ` and `ζ` differ in field.
    pub x: Radical<T>,
    pub theta_sq: Ratio<T>,
}

impl<T: Int> DefectSolution<T> {
    pub fn theta(&self) -> RootRational<T> {
        RootRational::from_square(&self.theta_sq).expect("θ² > 0")
    }

    /// The larger root `ζ − x`.
    pub fn complement(&self) -> Radical<T> {
        &self.zeta.to_radical() - &self.x
    }

    /// `x` as a single-field surd, when it is one.
    pub fn x_surd(&self) -> Result<Surd<T>, KernelError> {
        self.x.to_surd()
    }

    /// `ζ / x = 2(ζ² + ζθ)/η²`, always in one quadratic field.
    pub fn ratio(&self) -> Surd<T> {
        let zeta_theta = self.zeta.mul(&self.theta());
        let two_over_eta_sq = Ratio::from_integer(int::<T>(2)) / self.eta.square();
        zeta_theta
            .to_surd()
            .checked_add(&Surd::rational(self.zeta.square()))
            .expect("rational addend")
            .scale(&two_over_eta_sq)
    }
}

fn ensure_greater<T: Int>(zeta: &RootRational<T>, eta: &RootRational<T>) -> Result<(), TheoremError> {
    if zeta.cmp_len(eta) != Ordering::Greater {
        return Err(TheoremError::NotGreater {
            zeta: zeta.to_string(),
            eta: eta.to_string(),
        });
    }
    Ok(())
}

/// Solves `x(ζ − x) = η²/4` for `ζ > η`, returning the smaller root and
/// confirming the relation exactly.
pub fn defect_solve<T: Int>(
    zeta: &RootRational<T>,
    eta: &RootRational<T>,
) -> Result<DefectSolution<T>, TheoremError> {
    ensure_greater(zeta, eta)?;
    let theta_sq = zeta.square() - eta.square();
    let theta = RootRational::from_square(&theta_sq)?;
    let half = Ratio::new(T::one(), int(2));
    let x = (&zeta.to_radical() - &theta.to_radical()).scale(&half);
    let sol = DefectSolution {
        zeta: zeta.clone(),
        eta: eta.clone(),
        x,
        theta_sq,
    };
    let quarter_eta_sq = Radical::rational(sol.eta.square() / Ratio::from_integer(int::<T>(4)));
    if &sol.x * &sol.complement() != quarter_eta_sq {
        return Err(TheoremError::CheckFailed(format!("x(ζ − x) ≠ η²/4 for x = {}", sol.x)));
    }
    if !sol.x.is_positive() || sol.x.cmp_exact(&sol.complement()) != Ordering::Less {
        return Err(TheoremError::CheckFailed(format!("{} is not the smaller positive root", sol.x)));
    }
    Ok(sol)
}

/// `Anth(ζ, x)` for the defect solution, for `ζ`, `η` commensurable in
/// square only and from one field. Asserts a nonempty period, which
/// exists exactly when `θ` is incommensurable with `ζ`; otherwise `ζ : x`
/// is rational and the result is `NoPeriod`.
pub fn defect_periodicity<T: Int>(
    zeta: &RootRational<T>,
    eta: &RootRational<T>,
) -> Result<CFExpansion<T>, TheoremError> {
    if zeta.commensurable_with(eta) {
        return Err(TheoremError::CommensurableTerms {
            zeta: zeta.to_string(),
            eta: eta.to_string(),
        });
    }
    if !zeta.is_rational() && !eta.is_rational() {
        return Err(TheoremError::MixedRadicands {
            zeta: zeta.to_string(),
            eta: eta.to_string(),
        });
    }
    let sol = defect_solve(zeta, eta)?;
    let ratio = sol.ratio();
    // the closed form must agree with dividing the radicals directly
    if Radical::from(&ratio) != zeta.to_radical().checked_div(&sol.x)? {
        return Err(TheoremError::CheckFailed(format!("ζ/x ≠ {ratio}")));
    }
    let cf = anth_expand(&ratio, default_cap(&ratio))?;
    if cf.is_finite() {
        return Err(TheoremError::NoPeriod(ratio.to_string()));
    }
    Ok(cf)
}

/// Returns `(x ~ ζ − x, θ ~ ζ)` after confirming the two agree.
pub fn x17_x18_check<T: Int>(
    zeta: &RootRational<T>,
    eta: &RootRational<T>,
) -> Result<(bool, bool), TheoremError> {
    let sol = defect_solve(zeta, eta)?;
    let parts = commensurability_of(&sol.x, &sol.complement())? == Commensurability::Length;
    let whole = zeta.commensurable_with(&sol.theta());
    if parts != whole {
        return Err(TheoremError::CheckFailed(format!(
            "parts commensurable: {parts}, θ ~ ζ: {whole} for ζ = {zeta}, η = {eta}"
        )));
    }
    Ok((parts, whole))
}

/// Squares in a right triangle whose altitude cuts the hypotenuse into
/// `f` and `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightTriangle<T: Int> {
    /// Altitude squared, `fg`.
    pub h_sq: Surd<T>,
    /// Leg on the side of `f`, squared: `(f + g)f`.
    pub phi_sq: Surd<T>,
    /// Leg on the side of `g`, squared: `(f + g)g`.
    pub psi_sq: Surd<T>,
    /// `(f + g)²fg`.
    pub phi_psi_sq: Surd<T>,
}

pub fn right_triangle_lemma<T: Int>(f: &Surd<T>, g: &Surd<T>) -> Result<RightTriangle<T>, TheoremError> {
    for s in [f, g] {
        if !s.is_positive() {
            return Err(TheoremError::NonPositive(s.to_string()));
        }
    }
    let hyp = f.checked_add(g)?;
    let h_sq = f.checked_mul(g)?;
    let phi_sq = hyp.checked_mul(f)?;
    let psi_sq = hyp.checked_mul(g)?;
    let phi_psi_sq = hyp.square().checked_mul(&h_sq)?;
    if phi_sq.checked_add(&psi_sq)? != hyp.square() {
        return Err(TheoremError::CheckFailed("Φ² + Ψ² ≠ (f + g)²".into()));
    }
    if phi_sq.checked_mul(&psi_sq)? != phi_psi_sq {
        return Err(TheoremError::CheckFailed("Φ²Ψ² ≠ (ΦΨ)²".into()));
    }
    // the altitude splits each leg's triangle: Φ² = h² + f², Ψ² = h² + g²
    if h_sq.checked_add(&f.square())? != phi_sq || h_sq.checked_add(&g.square())? != psi_sq {
        return Err(TheoremError::CheckFailed("leg squares disagree with h² + segment²".into()));
    }
    Ok(RightTriangle {
        h_sq,
        phi_sq,
        psi_sq,
        phi_psi_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Surd<BigInt>;
    type R = RootRational<BigInt>;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(theorem1_check(&b(1), &b(2), 100).unwrap().to_string(), "[1; (2)]");
        assert_eq!(theorem1_check(&b(2), &b(3), 100).unwrap().to_string(), "[1; (4, 2)]");
        assert!(matches!(theorem1_check(&b(1), &b(4), 100), Err(TheoremError::SquareInput(_))));
    }

    #[test]
    fn palindrome_examples() {
        for (n, s) in [(7, "[2; (1, 1, 1, 4)]"), (2, "[1; (2)]"), (13, "[3; (1, 1, 1, 1, 6)]")] {
            let (cf, ok) = palindrome_check(&b(n)).unwrap();
            assert_eq!(cf.to_string(), s);
            assert!(ok);
        }
        assert!(palindrome_check(&b(9)).is_err());
        assert!(palindrome_check(&b(1)).is_err());
    }

    #[test]
    fn palindrome_rows() {
        let rows = palindrome_report(&b(2), &b(8)).unwrap();
        let text: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
        assert_eq!(text[0], "2 1 2 true");
        assert_eq!(text[4], "7 2 1,1,1,4 true");
        // 4 is skipped
        assert_eq!(rows.len(), 6);
    }

    #[test]
    fn defect_examples() {
        let sol = defect_solve(&R::integer(2), &R::sqrt_of(2)).unwrap();
        assert_eq!(sol.theta_sq, Ratio::from_integer(b(2)));
        assert_eq!(sol.x_surd().unwrap(), (S::from_i64(2) - S::sqrt_of(2)) / S::from_i64(2));
        let sol = defect_solve(&R::sqrt_of(5), &R::integer(1)).unwrap();
        assert_eq!(sol.theta_sq, Ratio::from_integer(b(4)));
        assert_eq!(sol.x_surd().unwrap(), (S::sqrt_of(5) - S::from_i64(2)) / S::from_i64(2));
        assert!(matches!(
            defect_solve(&R::integer(2), &R::integer(2)),
            Err(TheoremError::NotGreater { .. })
        ));
    }

    #[test]
    fn defect_with_two_radicands() {
        // ζ = √3, η = √2: θ = 1, x = (√3 − 1)/2 stays in one field
        let sol = defect_solve(&R::sqrt_of(3), &R::sqrt_of(2)).unwrap();
        assert_eq!(sol.theta_sq, Ratio::from_integer(b(1)));
        // ζ = √5, η = √2: θ = √3, x = (√5 − √3)/2 does not
        let sol = defect_solve(&R::sqrt_of(5), &R::sqrt_of(2)).unwrap();
        assert!(sol.x_surd().is_err());
        assert_eq!(Radical::from(&sol.ratio()), R::sqrt_of(5).to_radical().checked_div(&sol.x).unwrap());
    }

    #[test]
    fn defect_periodicity_examples() {
        // ζ/x = 4/(2 − √2) = 4 + 2√2
        let cf = defect_periodicity(&R::integer(2), &R::sqrt_of(2)).unwrap();
        assert_eq!(cf.value().unwrap(), S::from_i64(4) + S::from_i64(2) * S::sqrt_of(2));
        assert!(cf.is_periodic());
        let cf = defect_periodicity(&R::sqrt_of(5), &R::integer(1)).unwrap();
        assert_eq!(cf.to_string(), "[18; (1, 16)]");
        assert!(matches!(
            defect_periodicity(&R::integer(2), &R::integer(1)),
            Err(TheoremError::CommensurableTerms { .. })
        ));
        assert!(matches!(
            defect_periodicity(&R::sqrt_of(3), &R::sqrt_of(2)),
            Err(TheoremError::MixedRadicands { .. })
        ));
    }

    #[test]
    fn x17_x18_examples() {
        assert_eq!(x17_x18_check(&R::integer(5), &R::integer(4)).unwrap(), (true, true));
        assert_eq!(x17_x18_check(&R::integer(2), &R::sqrt_of(2)).unwrap(), (false, false));
        assert_eq!(x17_x18_check(&R::sqrt_of(5), &R::integer(2)).unwrap(), (false, false));
    }

    #[test]
    fn right_triangle_examples() {
        let t = right_triangle_lemma(&S::one(), &S::one()).unwrap();
        assert_eq!((t.h_sq, t.phi_sq, t.psi_sq), (S::one(), S::from_i64(2), S::from_i64(2)));
        let t = right_triangle_lemma(&S::one(), &S::from_i64(3)).unwrap();
        assert_eq!(
            (t.h_sq, t.phi_sq, t.psi_sq, t.phi_psi_sq),
            (S::from_i64(3), S::from_i64(4), S::from_i64(12), S::from_i64(48))
        );
        let half = S::frac(1, 2);
        let f = (S::from_i64(2) - S::sqrt_of(2)) * &half;
        let g = (S::from_i64(2) + S::sqrt_of(2)) * &half;
        let t = right_triangle_lemma(&f, &g).unwrap();
        assert_eq!(t.h_sq, half);
        assert_eq!(&t.phi_sq + &t.psi_sq, S::from_i64(4));
        assert!(right_triangle_lemma(&S::zero(), &S::one()).is_err());
    }
}

//! Pell's equation `y² = N·x² + 1` from the period of `√N`, and the Pell
//! number `|u² − N·v²|` of a line `u + v√N`.

use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;
use thiserror::Error;

use crate::anth::{anth_expand, convergents, default_cap, AnthError, ConvergentTable};
use crate::kernel::arith::is_perfect_square;
use crate::kernel::{KernelError, Radical, Surd};
use crate::scalar::{int, Int};
use crate::taxonomy::{AlogosLine, TwoTermLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PellError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Anth(#[from] AnthError),
    #[error("N = {0} is a perfect square")]
    SquareN(String),
    #[error("N must be at least 2, got {0}")]
    TooSmall(String),
    #[error("{0} does not lie in a single quadratic field")]
    MixedRadicands(String),
    #[error("self-check failed: {0}")]
    CheckFailed(String),
}

/// The minimal positive solution of `y² − N·x² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution<T: Int> {
    pub n: T,
    pub x: T,
    pub y: T,
    pub period_len: usize,
}

impl<T: Int> fmt::Display for PellSolution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.n, self.x, self.y, self.period_len)
    }
}

fn pell_value<T: Int>(n: &T, x: &T, y: &T) -> T {
    y.clone() * y.clone() - n.clone() * x.clone() * x.clone()
}

/// Expansion of `√N` with its convergent rows up to twice the period.
fn sqrt_data<T: Int>(n: &T) -> Result<(usize, ConvergentTable<T>), PellError> {
    if *n < int(2) {
        return Err(PellError::TooSmall(n.to_string()));
    }
    if is_perfect_square(n) {
        return Err(PellError::SquareN(n.to_string()));
    }
    let x = Surd::sqrt(Ratio::from_integer(n.clone()))?;
    let cf = anth_expand(&x, default_cap(&x))?;
    let p = cf.period().len();
    // row `n` uses quotients `k0 … k_{n−1}`
    Ok((p, convergents(&cf, 2 * p)))
}

/// `y² − N·x²` at the end of the first period, `(−1)^p` for period length `p`.
pub fn period_boundary_value<T: Int>(n: &T) -> Result<(usize, T), PellError> {
    let (p, table) = sqrt_data(n)?;
    let row = table.row(p).expect("table holds 2p rows");
    Ok((p, pell_value(n, &row.p, &row.q)))
}

/// Reads the solution off the convergent at index `p` (even period) or
/// `2p` (odd period), then confirms no earlier convergent solves it.
pub fn pell_fundamental<T: Int>(n: &T) -> Result<PellSolution<T>, PellError> {
    let (p, table) = sqrt_data(n)?;
    let idx = if p % 2 == 0 { p } else { 2 * p };
    let row = table.row(idx).expect("table holds 2p rows");
    let (x, y) = (row.p.clone(), row.q.clone());
    if pell_value(n, &x, &y) != T::one() {
        return Err(PellError::CheckFailed(format!("{y}² − {n}·{x}² ≠ 1")));
    }
    let boundary = table.row(p).expect("table holds 2p rows");
    let expected = if p % 2 == 0 { T::one() } else { -T::one() };
    if pell_value(n, &boundary.p, &boundary.q) != expected {
        return Err(PellError::CheckFailed(format!("parity fails at the period boundary of √{n}")));
    }
    if let Some(r) = table.rows()[..idx - 1].iter().find(|r| pell_value(n, &r.p, &r.q) == T::one()) {
        return Err(PellError::CheckFailed(format!("earlier convergent ({}, {}) solves N = {n}", r.p, r.q)));
    }
    Ok(PellSolution { n: n.clone(), x, y, period_len: p })
}

/// `|u² − N·v²|` for a value `u + v√N`.
pub fn pell_number<T: Int>(v: &Radical<T>) -> Result<Ratio<T>, PellError> {
    let s = v.to_surd().map_err(|_| PellError::MixedRadicands(v.to_string()))?;
    Ok(s.norm().abs())
}

/// The Pell number of an apotome or binomial.
pub fn pell_number_line<T: Int>(line: &TwoTermLine<T>) -> Result<Ratio<T>, PellError> {
    pell_number(&line.value())
}

/// The Pell number of `√A ± √B` with `A`, `B` rational.
pub fn pell_number_alogos<T: Int>(line: &AlogosLine<T>) -> Result<Ratio<T>, PellError> {
    let (Some(a), Some(b)) = (line.a().as_rational(), line.b().as_rational()) else {
        return Err(PellError::MixedRadicands(line.to_string()));
    };
    let (ra, rb) = (Radical::sqrt(&a)?, Radical::sqrt(&b)?);
    let value = match line.sign() {
        crate::taxonomy::Sign::Plus => &ra + &rb,
        crate::taxonomy::Sign::Minus => &ra - &rb,
    };
    pell_number(&value)
}

/// The Pell number of `γ = Ω²` is the square of that of `Ω`.
pub fn x97_squaring_check<T: Int>(omega: &TwoTermLine<T>) -> Result<bool, PellError> {
    let v = omega.value();
    let p = pell_number(&v)?;
    Ok(pell_number(&v.square())? == p.clone() * p)
}

/// The Pell number of `Ω₁·Ω₂` is the product of theirs.
pub fn pell_product_check<T: Int>(o1: &TwoTermLine<T>, o2: &TwoTermLine<T>) -> Result<bool, PellError> {
    let (v1, v2) = (o1.value(), o2.value());
    Ok(pell_number(&(&v1 * &v2))? == pell_number(&v1)? * pell_number(&v2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::RootRational;
    use crate::taxonomy::{make_two_term, Sign};
    use num_bigint::BigInt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn apotome(z: RootRational<BigInt>, e: RootRational<BigInt>) -> TwoTermLine<BigInt> {
        make_two_term(z, e, Sign::Minus).unwrap()
    }

    /// Smallest `x ≥ 1` with `N·x² + 1` a perfect square.
    fn brute(n: i64) -> (i64, i64) {
        (1i64..)
            .find_map(|x| {
                let t = n * x * x + 1;
                let y = (t as f64).sqrt() as i64;
                (y - 1..=y + 1).find(|y| y * y == t).map(|y| (x, y))
            })
            .unwrap()
    }

    #[test]
    fn small_cases() {
        let s = pell_fundamental(&big(2)).unwrap();
        assert_eq!((s.x, s.y), (big(2), big(3)));
        let s = pell_fundamental(&big(3)).unwrap();
        assert_eq!((s.x, s.y), (big(1), big(2)));
    }

    #[test]
    fn sixty_one() {
        let s = pell_fundamental(&big(61)).unwrap();
        assert_eq!(s.x, big(226153980));
        assert_eq!(s.y, big(1766319049));
        assert_eq!(s.period_len, 11);
        assert_eq!(s.to_string(), "61 226153980 1766319049 11");
    }

    #[test]
    fn matches_brute_force() {
        for n in 2i64..=50 {
            if is_perfect_square(&n) {
                continue;
            }
            let s = pell_fundamental(&n).unwrap();
            assert_eq!((s.x, s.y), brute(n), "N = {n}");
        }
    }

    #[test]
    fn parity_at_boundary() {
        for n in 2i64..=200 {
            if is_perfect_square(&n) {
                continue;
            }
            let (p, v) = period_boundary_value(&big(n)).unwrap();
            assert_eq!(v, if p % 2 == 0 { big(1) } else { big(-1) }, "N = {n}");
        }
    }

    #[test]
    fn bad_n() {
        assert!(matches!(pell_fundamental(&big(49)), Err(PellError::SquareN(_))));
        assert!(matches!(pell_fundamental(&big(1)), Err(PellError::TooSmall(_))));
    }

    #[test]
    fn pell_numbers() {
        let r = |n: i64| Ratio::from_integer(big(n));
        let unit = apotome(RootRational::sqrt_of(2), RootRational::integer(1));
        assert_eq!(pell_number_line(&unit).unwrap(), r(1));
        let seven = apotome(RootRational::integer(3), RootRational::sqrt_of(2));
        assert_eq!(pell_number_line(&seven).unwrap(), r(7));
        let g = apotome(RootRational::integer(3), RootRational::new(r(2), big(2)).unwrap());
        assert_eq!(pell_number_line(&g).unwrap(), r(1));
        let mixed = apotome(RootRational::sqrt_of(3), RootRational::sqrt_of(2));
        assert!(matches!(pell_number_line(&mixed), Err(PellError::MixedRadicands(_))));
    }

    #[test]
    fn squaring_and_products() {
        let o1 = apotome(RootRational::sqrt_of(2), RootRational::integer(1));
        let o2 = apotome(RootRational::integer(3), RootRational::sqrt_of(2));
        assert!(x97_squaring_check(&o1).unwrap());
        assert!(x97_squaring_check(&o2).unwrap());
        assert_eq!(o2.value().square().to_string(), "11 - 6*sqrt(2)");
        assert_eq!(pell_number(&o2.value().square()).unwrap(), Ratio::from_integer(big(49)));
        assert_eq!((&o1.value() * &o2.value()).to_string(), "-5 + 4*sqrt(2)");
        assert!(pell_product_check(&o1, &o2).unwrap());
    }

    #[test]
    fn alogos_with_rational_squares() {
        let line = AlogosLine::new(Radical::rational(Ratio::from_integer(big(2))), Radical::one(), Sign::Minus).unwrap();
        assert_eq!(pell_number_alogos(&line).unwrap(), Ratio::from_integer(big(1)));
    }
}

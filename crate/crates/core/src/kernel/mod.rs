//! Exact arithmetic: rationals, canonical quadratic surds, rational-in-square
//! lines, multi-radicand sums, and the commensurability predicates.

pub mod arith;
mod radical;
mod root;
mod surd;

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use radical::Radical;
pub use root::RootRational;
pub use surd::{surd_arith, Surd, SurdOp};

use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(String),
    #[error("operands live in different quadratic fields (radicands {left} and {right})")]
    MixedFields { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("commensurability is undefined for a zero magnitude")]
    ZeroMagnitude,
    #[error("expected a positive value, got {0}")]
    NonPositive(String),
    #[error("{0} is not square-free")]
    NotSquareFree(String),
    #[error("{0} is not of the form q*sqrt(m)")]
    NotRootRational(String),
    #[error("{0} does not lie in a single quadratic field")]
    NotQuadratic(String),
}

/// How two magnitudes compare in the sense of commensurability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Commensurability {
    /// Ratio rational.
    Length,
    /// Ratio irrational, squared ratio rational.
    SquareOnly,
    Neither,
}

/// Classifies `a : b` for nonzero magnitudes given as radical sums.
pub fn commensurability_of<T: Int>(
    a: &Radical<T>,
    b: &Radical<T>,
) -> Result<Commensurability, KernelError> {
    if a.is_zero() || b.is_zero() {
        return Err(KernelError::ZeroMagnitude);
    }
    let ratio = a.checked_div(b)?;
    Ok(if ratio.is_rational() {
        Commensurability::Length
    } else if ratio.square().is_rational() {
        Commensurability::SquareOnly
    } else {
        Commensurability::Neither
    })
}

/// `a/b` rational.
pub fn commensurable<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<bool, KernelError> {
    Ok(commensurability_of(&a.to_radical(), &b.to_radical())? == Commensurability::Length)
}

/// `(a/b)²` rational.
pub fn commensurable_in_square<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<bool, KernelError> {
    Ok(commensurability_of(&a.to_radical(), &b.to_radical())? != Commensurability::Neither)
}

/// Commensurable in square but not in length.
pub fn commensurable_in_square_only<T: Int>(
    a: &Surd<T>,
    b: &Surd<T>,
) -> Result<bool, KernelError> {
    Ok(commensurability_of(&a.to_radical(), &b.to_radical())? == Commensurability::SquareOnly)
}

pub fn commensurable_radicals<T: Int>(a: &Radical<T>, b: &Radical<T>) -> Result<bool, KernelError> {
    Ok(commensurability_of(a, b)? == Commensurability::Length)
}

/// Writes `c₁·√k₁ + c₂·√k₂ + …` in the expression syntax the CLI parses.
pub(crate) fn fmt_terms<'a, T: Int + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Ratio<T>, &'a T)>,
) -> fmt::Result {
    let mut first = true;
    for (c, k) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if k.is_one() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "sqrt({k})")?;
        } else {
            write!(f, "{mag}*sqrt({k})")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Surd<i64>;

    #[test]
    fn commensurability_examples() {
        let r2 = S::sqrt_of(2);
        assert!(commensurable(&r2, &(S::from_i64(3) * &r2)).unwrap());
        assert!(!commensurable(&S::one(), &r2).unwrap());
        assert!(commensurable_in_square_only(&S::one(), &r2).unwrap());
        let golden_ish = S::one() + &r2;
        assert!(!commensurable_in_square(&S::one(), &golden_ish).unwrap());
        assert_eq!(commensurable(&S::zero(), &r2), Err(KernelError::ZeroMagnitude));
    }

    #[test]
    fn mixed_radicands() {
        // √2 and √3 are commensurable in square only; √2 and 1 + √3 are neither
        assert!(commensurable_in_square_only(&S::sqrt_of(2), &S::sqrt_of(3)).unwrap());
        assert!(!commensurable_in_square(&S::sqrt_of(2), &(S::one() + S::sqrt_of(3))).unwrap());
        assert!(commensurable(&S::sqrt_of(8), &S::sqrt_of(2)).unwrap());
    }
}

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use super::arith::{is_square_free, rational_sqrt_parts};
use super::{KernelError, Radical, Surd};
use crate::scalar::{int, Int};

/// A positive line `q·√m` whose square is rational: a line rational in
/// square with respect to the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootRational<T: Int> {
    q: Ratio<T>,
    m: T,
}

impl<T: Int> RootRational<T> {
    /// `q·√m`; `m` must be square-free and `q` positive.
    pub fn new(q: Ratio<T>, m: T) -> Result<Self, KernelError> {
        if !q.is_positive() {
            return Err(KernelError::NonPositive(q.to_string()));
        }
        if !is_square_free(&m) {
            return Err(KernelError::NotSquareFree(m.to_string()));
        }
        Ok(Self { q, m })
    }

    /// The positive square root of a positive rational area.
    pub fn from_square(sq: &Ratio<T>) -> Result<Self, KernelError> {
        if !sq.is_positive() {
            return Err(KernelError::NonPositive(sq.to_string()));
        }
        let (q, m) = rational_sqrt_parts(sq);
        Ok(Self { q, m })
    }

    pub fn rational(q: Ratio<T>) -> Result<Self, KernelError> {
        Self::new(q, T::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Ratio::from_integer(int(n))).expect("integer root must be positive")
    }

    /// `√n` for a small positive integer.
    pub fn sqrt_of(n: i64) -> Self {
        Self::from_square(&Ratio::from_integer(int(n))).expect("sqrt_of needs n > 0")
    }

    /// Reads a surd as a rational-in-square line: `u` alone or `v·√m` alone,
    /// positive.
    pub fn from_surd(s: &Surd<T>) -> Result<Self, KernelError> {
        if !s.is_positive() {
            return Err(KernelError::NonPositive(s.to_string()));
        }
        if s.is_rational() {
            Self::rational(s.u().clone())
        } else if num_traits::Zero::is_zero(s.u()) {
            Self::new(s.v().clone(), s.radicand().clone())
        } else {
            Err(KernelError::NotRootRational(s.to_string()))
        }
    }

    /// Reads a radical sum as a single positive term.
    pub fn from_radical(r: &Radical<T>) -> Result<Self, KernelError> {
        match r.single_term() {
            Some((k, c)) if c.is_positive() => Self::new(c.clone(), k.clone()),
            _ => Err(KernelError::NotRootRational(r.to_string())),
        }
    }

    pub fn coefficient(&self) -> &Ratio<T> {
        &self.q
    }

    pub fn radicand(&self) -> &T {
        &self.m
    }

    pub fn is_rational(&self) -> bool {
        self.m.is_one()
    }

    /// `q²·m`, always rational.
    pub fn square(&self) -> Ratio<T> {
        self.q.clone() * self.q.clone() * Ratio::from_integer(self.m.clone())
    }

    /// Lines of this form are commensurable exactly when their radicands agree.
    pub fn commensurable_with(&self, other: &Self) -> bool {
        self.m == other.m
    }

    pub fn scale(&self, s: &Ratio<T>) -> Result<Self, KernelError> {
        Self::new(self.q.clone() * s.clone(), self.m.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prod = self.square() * other.square();
        Self::from_square(&prod).expect("product of positive lines is positive")
    }

    pub fn div(&self, other: &Self) -> Self {
        let quot = self.square() / other.square();
        Self::from_square(&quot).expect("quotient of positive lines is positive")
    }

    pub fn to_surd(&self) -> Surd<T> {
        Surd::from_parts(Ratio::from_integer(T::zero()), self.q.clone(), self.m.clone())
    }

    pub fn to_radical(&self) -> Radical<T> {
        Radical::term(self.q.clone(), self.m.clone())
    }

    /// Lines compare by their squares.
    pub fn cmp_len(&self, other: &Self) -> Ordering {
        self.square().cmp(&other.square())
    }
}

impl<T: Int> fmt::Display for RootRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_radical().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = RootRational<i64>;

    #[test]
    fn from_square_extracts_factors() {
        let r = R::from_square(&Ratio::new(15, 9)).unwrap();
        assert_eq!((r.coefficient(), r.radicand()), (&Ratio::new(1, 3), &15));
        let r = R::from_square(&Ratio::new(4, 3)).unwrap();
        assert_eq!((r.coefficient(), r.radicand()), (&Ratio::new(2, 3), &3));
    }

    #[test]
    fn validation() {
        assert!(R::new(Ratio::from_integer(1), 8).is_err());
        assert!(R::new(Ratio::from_integer(-1), 2).is_err());
        assert!(R::from_surd(&Surd::from_i64(1).checked_add(&Surd::sqrt_of(2)).unwrap()).is_err());
        assert_eq!(R::from_surd(&Surd::sqrt_of(8)).unwrap(), R::new(Ratio::from_integer(2), 2).unwrap());
    }

    #[test]
    fn products() {
        let a = R::sqrt_of(6);
        let b = R::sqrt_of(10);
        // √60 = 2√15
        assert_eq!(a.mul(&b), R::new(Ratio::from_integer(2), 15).unwrap());
        assert_eq!(a.div(&R::sqrt_of(3)), R::sqrt_of(2));
        assert!(R::sqrt_of(8).commensurable_with(&R::sqrt_of(2)));
        assert!(!R::sqrt_of(3).commensurable_with(&R::integer(1)));
    }
}

//! Finite sums `Σ cₖ·√k` over distinct square-free `k`.
//!
//! Square roots of distinct square-free integers are linearly independent
//! over the rationals, so the sparse map below is a canonical form for the
//! multi-quadratic field they generate. This type carries the values that
//! leave a single quadratic field: two-radicand apotomes such as
//! `(√15 − √3)/3`, and the term-squares of some alogos lines.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::arith::{smallest_prime_factor, square_free_split};
use super::{fmt_terms, KernelError, Surd};
use crate::scalar::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radical<T: Int> {
    // radicand -> nonzero coefficient
    terms: BTreeMap<T, Ratio<T>>,
}

impl<T: Int> Radical<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn rational(q: Ratio<T>) -> Self {
        Self::term(q, T::one())
    }

    pub fn one() -> Self {
        Self::rational(Ratio::one())
    }

    /// `c·√k` for a square-free `k`.
    pub fn term(c: Ratio<T>, k: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `√q` for a positive rational.
    pub fn sqrt(q: &Ratio<T>) -> Result<Self, KernelError> {
        Ok(Surd::sqrt(q.clone())?.to_radical())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&T, &Ratio<T>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.is_one())
    }

    pub fn as_rational(&self) -> Option<Ratio<T>> {
        match self.terms.len() {
            0 => Some(Ratio::zero()),
            1 => self.terms.get(&T::one()).cloned(),
            _ => None,
        }
    }

    /// The only term, if there is exactly one.
    pub fn single_term(&self) -> Option<(&T, &Ratio<T>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The value as a quadratic surd, if at most one irrational radicand occurs.
    pub fn to_surd(&self) -> Result<Surd<T>, KernelError> {
        let mut u = Ratio::zero();
        let mut irr: Option<(&T, &Ratio<T>)> = None;
        for (k, c) in &self.terms {
            if k.is_one() {
                u = c.clone();
            } else if irr.is_some() {
                return Err(KernelError::NotQuadratic(self.to_string()));
            } else {
                irr = Some((k, c));
            }
        }
        Ok(match irr {
            None => Surd::rational(u),
            Some((k, c)) => Surd::from_parts(u, c.clone(), k.clone()),
        })
    }

    fn add_term(&mut self, k: T, c: Ratio<T>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(Ratio::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, q: &Ratio<T>) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * q.clone()))
                .collect(),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse, by conjugating away one prime at a time.
    pub fn recip(&self) -> Result<Self, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::rational(q.recip()));
        }
        let p = self.pivot_prime();
        let (alpha, beta) = self.split(&p);
        if beta.is_zero() {
            return alpha.recip();
        }
        // 1/(α + β√p) = (α − β√p) / (α² − p·β²)
        let denom = &alpha.square() - &beta.square().scale(&Ratio::from_integer(p.clone()));
        let conj = &alpha - &beta.times_sqrt(&p);
        Ok(&conj * &denom.recip()?)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, KernelError> {
        Ok(self * &other.recip()?)
    }

    /// Exact sign. Recurses on one prime at a time: for `α + β√p` with
    /// `α`, `β` free of `p`, opposite signs are settled by the sign of
    /// `α² − p·β²`.
    pub fn sign(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&Ratio::zero());
        }
        let p = self.pivot_prime();
        let (alpha, beta) = self.split(&p);
        let sa = alpha.sign();
        let sb = beta.sign();
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let d = &alpha.square() - &beta.square().scale(&Ratio::from_integer(p));
        match d.sign() {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            // √p is not in the field generated by the other primes
            Ordering::Equal => unreachable!("α² = p·β² with α, β free of p"),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }

    /// Smallest prime dividing any irrational radicand.
    fn pivot_prime(&self) -> T {
        self.terms
            .keys()
            .filter(|k| !k.is_one())
            .map(smallest_prime_factor)
            .min()
            .expect("irrational radical has a radicand > 1")
    }

    /// Writes `self = α + β·√p` with neither part involving `p`.
    fn split(&self, p: &T) -> (Self, Self) {
        let mut alpha = Self::zero();
        let mut beta = Self::zero();
        for (k, c) in &self.terms {
            if k.is_multiple_of(p) {
                beta.add_term(k.clone() / p.clone(), c.clone());
            } else {
                alpha.add_term(k.clone(), c.clone());
            }
        }
        (alpha, beta)
    }

    /// `self·√p` for a prime `p` not occurring in `self`.
    fn times_sqrt(&self, p: &T) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone() * p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bits needed to write every coefficient and radicand.
    pub fn bit_length(&self) -> u64 {
        self.terms
            .iter()
            .map(|(k, c)| k.bit_length() + super::arith::ratio_bits(c))
            .sum()
    }
}

impl<T: Int> Add for &Radical<T> {
    type Output = Radical<T>;
    fn add(self, rhs: &Radical<T>) -> Radical<T> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<T: Int> Sub for &Radical<T> {
    type Output = Radical<T>;
    fn sub(self, rhs: &Radical<T>) -> Radical<T> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl<T: Int> Mul for &Radical<T> {
    type Output = Radical<T>;
    fn mul(self, rhs: &Radical<T>) -> Radical<T> {
        let mut out = Radical::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                // √k1·√k2 = s·√k with k1·k2 = s²·k
                let (s, k) = square_free_split(&(k1.clone() * k2.clone()));
                out.add_term(k, c1.clone() * c2.clone() * Ratio::from_integer(s));
            }
        }
        out
    }
}

impl<T: Int> Neg for &Radical<T> {
    type Output = Radical<T>;
    fn neg(self) -> Radical<T> {
        self.scale(&-Ratio::<T>::one())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Int> $tr for Radical<T> {
            type Output = Radical<T>;
            fn $method(self, rhs: Radical<T>) -> Radical<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Int> Neg for Radical<T> {
    type Output = Radical<T>;
    fn neg(self) -> Radical<T> {
        -&self
    }
}

impl<T: Int> PartialOrd for Radical<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl<T: Int> Ord for Radical<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl<T: Int> Surd<T> {
    pub fn to_radical(&self) -> Radical<T> {
        let mut r = Radical::rational(self.u().clone());
        if !self.is_rational() {
            r.add_term(self.radicand().clone(), self.v().clone());
        }
        r
    }
}

impl<T: Int> From<Surd<T>> for Radical<T> {
    fn from(s: Surd<T>) -> Self {
        s.to_radical()
    }
}

impl<T: Int> From<&Surd<T>> for Radical<T> {
    fn from(s: &Surd<T>) -> Self {
        s.to_radical()
    }
}

impl<T: Int> fmt::Display for Radical<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(k, c)| (c, k)))
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::arith::{floor_ratio, ratio_bits, rational_sqrt_parts};
use super::{fmt_terms, KernelError};
use crate::scalar::{int, Int};

/// An element `u + v·√m` of a real quadratic field, in canonical form.
///
/// `m` is a square-free positive integer, and `m == 1` exactly when
/// `v == 0`, so two surds are equal iff their fields are equal. Rationals
/// are surds with `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd<T: Int> {
    u: Ratio<T>,
    v: Ratio<T>,
    m: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurdOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<T: Int> Surd<T> {
    /// Builds the canonical form of `u + v·√k` for any positive rational `k`.
    ///
    /// `√(a/b)` is rewritten as `√(ab)/b` and square factors are pulled out.
    pub fn normalize(u: Ratio<T>, v: Ratio<T>, k: Ratio<T>) -> Result<Self, KernelError> {
        if !k.is_positive() {
            return Err(KernelError::NonPositiveRadicand(k.to_string()));
        }
        if v.is_zero() {
            return Ok(Self::rational(u));
        }
        let (c, m) = rational_sqrt_parts(&k);
        let v = v * c;
        if m.is_one() {
            Ok(Self::rational(u + v))
        } else {
            Ok(Self { u, v, m })
        }
    }

    /// Assembles a surd whose radicand is already known to be square-free.
    pub(crate) fn from_parts(u: Ratio<T>, v: Ratio<T>, m: T) -> Self {
        debug_assert!(m.is_positive());
        if v.is_zero() || m.is_one() {
            Self::rational(u + v)
        } else {
            Self { u, v, m }
        }
    }

    pub fn rational(q: Ratio<T>) -> Self {
        Self {
            u: q,
            v: Ratio::zero(),
            m: T::one(),
        }
    }

    pub fn integer(n: T) -> Self {
        Self::rational(Ratio::from_integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::integer(int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Ratio::new(int(n), int(d)))
    }

    /// `√k` for a positive rational `k`.
    pub fn sqrt(k: Ratio<T>) -> Result<Self, KernelError> {
        Self::normalize(Ratio::zero(), Ratio::one(), k)
    }

    /// `√n` for a small positive integer.
    pub fn sqrt_of(n: i64) -> Self {
        Self::sqrt(Ratio::from_integer(int(n))).expect("sqrt_of needs a positive integer")
    }

    pub fn zero() -> Self {
        Self::rational(Ratio::zero())
    }

    pub fn one() -> Self {
        Self::rational(Ratio::one())
    }

    pub fn u(&self) -> &Ratio<T> {
        &self.u
    }

    pub fn v(&self) -> &Ratio<T> {
        &self.v
    }

    /// The square-free radicand; `1` for rationals.
    pub fn radicand(&self) -> &T {
        &self.m
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Ratio<T>> {
        self.is_rational().then_some(&self.u)
    }

    /// True when both values live in one quadratic field (a rational is
    /// compatible with everything).
    pub fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.m == other.m
    }

    /// Common radicand of two compatible surds.
    fn field_with(&self, other: &Self) -> Result<T, KernelError> {
        if self.is_rational() {
            Ok(other.m.clone())
        } else if other.is_rational() || self.m == other.m {
            Ok(self.m.clone())
        } else {
            Err(KernelError::MixedFields {
                left: self.m.to_string(),
                right: other.m.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, KernelError> {
        let m = self.field_with(other)?;
        Ok(Self::from_parts(
            self.u.clone() + other.u.clone(),
            self.v.clone() + other.v.clone(),
            m,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, KernelError> {
        let m = self.field_with(other)?;
        let mq = Ratio::from_integer(m.clone());
        let u = self.u.clone() * other.u.clone() + self.v.clone() * other.v.clone() * mq;
        let v = self.u.clone() * other.v.clone() + self.v.clone() * other.u.clone();
        Ok(Self::from_parts(u, v, m))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, KernelError> {
        let inv = other.recip()?;
        self.checked_mul(&inv)
    }

    pub fn recip(&self) -> Result<Self, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::from_parts(
            self.u.clone() / n.clone(),
            -self.v.clone() / n,
            self.m.clone(),
        ))
    }

    pub fn scale(&self, q: &Ratio<T>) -> Self {
        Self::from_parts(self.u.clone() * q.clone(), self.v.clone() * q.clone(), self.m.clone())
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("a surd is compatible with itself")
    }

    /// Galois conjugate `u − v·√m`.
    pub fn conj(&self) -> Self {
        Self::from_parts(self.u.clone(), -self.v.clone(), self.m.clone())
    }

    /// Field norm `u² − m·v²`.
    pub fn norm(&self) -> Ratio<T> {
        self.u.clone() * self.u.clone()
            - Ratio::from_integer(self.m.clone()) * self.v.clone() * self.v.clone()
    }

    /// Exact sign of `u + v·√m`, by the signs of `u`, `v` and a comparison
    /// of `u²` with `m·v²`.
    pub fn sign(&self) -> Ordering {
        let su = self.u.cmp(&Ratio::zero());
        let sv = self.v.cmp(&Ratio::zero());
        if sv == Ordering::Equal {
            return su;
        }
        if su == Ordering::Equal || su == sv {
            return sv;
        }
        // opposite signs: the larger magnitude wins
        let u2 = self.u.clone() * self.u.clone();
        let mv2 = Ratio::from_integer(self.m.clone()) * self.v.clone() * self.v.clone();
        match u2.cmp(&mv2) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Exact comparison of two values from one field.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, KernelError> {
        Ok(self.checked_sub(other)?.sign())
    }

    /// `floor(u + v·√m)`, exact.
    pub fn floor(&self) -> T {
        if self.is_rational() {
            return floor_ratio(&self.u);
        }
        // |v|·√m = √(v²m); floor(√y) = isqrt(floor(y))
        let v2m = self.v.clone() * self.v.clone() * Ratio::from_integer(self.m.clone());
        let root = floor_ratio(&v2m).sqrt();
        let approx = if self.v.is_positive() {
            self.u.clone() + Ratio::from_integer(root)
        } else {
            self.u.clone() - Ratio::from_integer(root)
        };
        let mut k = floor_ratio(&approx);
        // approx is within 1 of the true value; settle the last step exactly
        while self.minus_int(&k).sign() == Ordering::Less {
            k = k - T::one();
        }
        while self.minus_int(&(k.clone() + T::one())).sign() != Ordering::Less {
            k = k + T::one();
        }
        k
    }

    fn minus_int(&self, k: &T) -> Self {
        Self::from_parts(
            self.u.clone() - Ratio::from_integer(k.clone()),
            self.v.clone(),
            self.m.clone(),
        )
    }

    /// Bits needed to write the canonical triple.
    pub fn bit_length(&self) -> u64 {
        ratio_bits(&self.u) + ratio_bits(&self.v) + self.m.bit_length()
    }
}

/// Field arithmetic with an explicit operator; the fallible entry point.
pub fn surd_arith<T: Int>(a: &Surd<T>, b: &Surd<T>, op: SurdOp) -> Result<Surd<T>, KernelError> {
    match op {
        SurdOp::Add => a.checked_add(b),
        SurdOp::Sub => a.checked_sub(b),
        SurdOp::Mul => a.checked_mul(b),
        SurdOp::Div => a.checked_div(b),
    }
}

impl<T: Int> PartialOrd for Surd<T> {
    /// `None` for values from two different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl<T: Int> Neg for Surd<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_parts(-self.u, -self.v, self.m)
    }
}

impl<T: Int> Neg for &Surd<T> {
    type Output = Surd<T>;
    fn neg(self) -> Surd<T> {
        -self.clone()
    }
}

// Operator forms panic on mixed fields; use the `checked_*` methods or
// `surd_arith` when the operands are not known to share a field.
macro_rules! surd_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Int> $tr<&Surd<T>> for &Surd<T> {
            type Output = Surd<T>;
            fn $method(self, rhs: &Surd<T>) -> Surd<T> {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl<T: Int> $tr<Surd<T>> for Surd<T> {
            type Output = Surd<T>;
            fn $method(self, rhs: Surd<T>) -> Surd<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Int> $tr<&Surd<T>> for Surd<T> {
            type Output = Surd<T>;
            fn $method(self, rhs: &Surd<T>) -> Surd<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Int> $tr<Surd<T>> for &Surd<T> {
            type Output = Surd<T>;
            fn $method(self, rhs: Surd<T>) -> Surd<T> {
                self.$method(&rhs)
            }
        }
    };
}

surd_binop!(Add, add, checked_add);
surd_binop!(Sub, sub, checked_sub);
surd_binop!(Mul, mul, checked_mul);
surd_binop!(Div, div, checked_div);

impl<T: Int> From<Ratio<T>> for Surd<T> {
    fn from(q: Ratio<T>) -> Self {
        Self::rational(q)
    }
}

impl<T: Int> fmt::Display for Surd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = T::one();
        fmt_terms(f, [(&self.u, &one), (&self.v, &self.m)].into_iter())
    }
}

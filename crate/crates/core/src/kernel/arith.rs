//! Integer helpers: square-free parts, exact square roots, prime factors.

use num_rational::Ratio;
use num_traits::Signed;

use crate::scalar::{int, Int};

/// Splits `n > 0` as `s² · k` with `k` square-free. Returns `(s, k)`.
///
/// Trial division; radicands in this crate are small.
pub fn square_free_split<T: Int>(n: &T) -> (T, T) {
    assert!(n.is_positive(), "square_free_split needs a positive integer");
    let mut rest = n.clone();
    let mut outside = T::one();
    let mut inside = T::one();
    let mut p: T = int(2);
    while p.clone() * p.clone() <= rest {
        let mut exp = 0u32;
        while rest.is_multiple_of(&p) {
            rest = rest / p.clone();
            exp += 1;
        }
        for _ in 0..exp / 2 {
            outside = outside * p.clone();
        }
        if exp % 2 == 1 {
            inside = inside * p.clone();
        }
        p = if p == int(2) { int(3) } else { p + int(2) };
    }
    // whatever is left is 1 or a prime
    (outside, inside * rest)
}

/// The square-free kernel of `n > 0`.
pub fn square_free_part<T: Int>(n: &T) -> T {
    square_free_split(n).1
}

pub fn is_square_free<T: Int>(n: &T) -> bool {
    n.is_positive() && square_free_split(n).0.is_one()
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt<T: Int>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if r.clone() * r.clone() == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_perfect_square<T: Int>(n: &T) -> bool {
    exact_sqrt(n).is_some()
}

/// Exact square root of a non-negative rational, if it is a rational square.
pub fn rational_sqrt<T: Int>(q: &Ratio<T>) -> Option<Ratio<T>> {
    if q.is_negative() {
        return None;
    }
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Ratio::new(n, d))
}

/// Writes a positive rational `q` as `c² · k` with `k` a square-free integer,
/// returning `(c, k)`; that is `√q = c·√k`.
pub fn rational_sqrt_parts<T: Int>(q: &Ratio<T>) -> (Ratio<T>, T) {
    assert!(q.is_positive(), "rational_sqrt_parts needs a positive rational");
    // √(a/b) = √(ab)/b
    let ab = q.numer().clone() * q.denom().clone();
    let (s, k) = square_free_split(&ab);
    (Ratio::new(s, q.denom().clone()), k)
}

/// Smallest prime factor of `n > 1`.
pub fn smallest_prime_factor<T: Int>(n: &T) -> T {
    assert!(*n > T::one(), "smallest_prime_factor needs n > 1");
    let two: T = int(2);
    if n.is_multiple_of(&two) {
        return two;
    }
    let mut p: T = int(3);
    while p.clone() * p.clone() <= *n {
        if n.is_multiple_of(&p) {
            return p;
        }
        p = p + two.clone();
    }
    n.clone()
}

/// `floor(q)` as an integer.
pub fn floor_ratio<T: Int>(q: &Ratio<T>) -> T {
    q.numer().div_floor(q.denom())
}

/// Bits needed to write `q` as a fraction.
pub fn ratio_bits<T: Int>(q: &Ratio<T>) -> u64 {
    q.numer().bit_length().max(1) + q.denom().bit_length().max(1)
}

//! Seeded instance generators for the verification suites.

use num_bigint::BigInt;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::arith::{is_perfect_square, is_square_free};
use crate::kernel::{RootRational, Surd};
use crate::taxonomy::{make_two_term, Sign, TwoTermLine};

pub type Q = Ratio<BigInt>;

pub struct Gen {
    rng: ChaCha8Rng,
}

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n.into(), d.into())
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A positive rational `n/d` with `n ≤ max_n`, `d ≤ max_d`.
    pub fn pos_ratio(&mut self, max_n: i64, max_d: i64) -> Q {
        q(self.int(1, max_n), self.int(1, max_d))
    }

    /// A non-square in `lo..=hi`.
    pub fn non_square(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let n = self.int(lo, hi);
            if !is_perfect_square(&n) {
                return n;
            }
        }
    }

    /// A square-free integer in `lo..=hi`, `lo ≥ 2`.
    pub fn square_free(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let n = self.int(lo, hi);
            if is_square_free(&n) {
                return n;
            }
        }
    }

    /// A random positive `u + v√m` with small rational parts.
    pub fn pos_surd(&mut self, m: i64) -> Surd<BigInt> {
        loop {
            let u = q(self.int(-12, 12), self.int(1, 6));
            let v = q(self.int(-12, 12), self.int(1, 6));
            let s = Surd::normalize(u, v, Ratio::from_integer(m.into())).expect("m > 0");
            if s.is_positive() {
                return s;
            }
        }
    }

    /// A positive value of `Q(√m)` that is irrational.
    pub fn irrational_surd(&mut self, m: i64) -> Surd<BigInt> {
        loop {
            let s = self.pos_surd(m);
            if !s.is_rational() {
                return s;
            }
        }
    }

    /// `(a, d)` with `a² − b² = d` non-square for some `0 < b < a`.
    fn rational_first_term(&mut self) -> (i64, i64) {
        loop {
            let a = self.int(2, 30);
            let b = self.int(1, a - 1);
            let d = a * a - b * b;
            if !is_perfect_square(&d) {
                return (a, d);
            }
        }
    }

    /// `(a, c)` with `c` and `a² − c` both non-square, `0 < c < a²`.
    fn incommensurable_rest(&mut self) -> (i64, i64) {
        loop {
            let a = self.int(2, 30);
            let c = self.int(1, a * a - 1);
            if !is_perfect_square(&c) && !is_perfect_square(&(a * a - c)) {
                return (a, c);
            }
        }
    }

    /// A non-square `k` with `k·m` non-square.
    fn twist(&mut self, m: i64) -> i64 {
        loop {
            let k = self.non_square(2, 30);
            if !is_perfect_square(&(k * m)) {
                return k;
            }
        }
    }

    /// Term squares `(ζ², η²)` of a line of the given order, before scaling.
    fn order_squares(&mut self, order: u8) -> (i64, i64) {
        match order {
            1 => {
                let (a, d) = self.rational_first_term();
                (a * a, d)
            }
            2 => {
                let (a, d) = self.rational_first_term();
                (a * a * d, d * d)
            }
            3 => {
                let (a, d) = self.rational_first_term();
                let k = self.twist(d);
                (a * a * k, d * k)
            }
            4 => {
                let (a, c) = self.incommensurable_rest();
                (a * a, a * a - c)
            }
            5 => loop {
                let b = self.int(1, 30);
                let c = self.non_square(2, 200);
                if !is_perfect_square(&(b * b + c)) && !is_perfect_square(&(c * (b * b + c))) {
                    return (b * b + c, b * b);
                }
            },
            6 => {
                let (a, c) = self.incommensurable_rest();
                let k = self.twist(a * a - c);
                (a * a * k, (a * a - c) * k)
            }
            _ => panic!("orders run from 1 to 6, got {order}"),
        }
    }

    /// An apotome or binomial of the requested order, rescaled by a random
    /// positive rational.
    pub fn two_term(&mut self, order: u8, sign: Sign) -> TwoTermLine<BigInt> {
        let (z2, e2) = self.order_squares(order);
        let s = self.pos_ratio(9, 9);
        let s2 = s.clone() * s;
        let root = |v: i64| RootRational::from_square(&(Ratio::from_integer(v.into()) * s2.clone())).expect("v > 0");
        make_two_term(root(z2), root(e2), sign).expect("generated terms are commensurable in square only")
    }

    /// A pair `ζ > η` commensurable in square only, one term rational and
    /// `θ = √(ζ² − η²)` incommensurable with `ζ`.
    pub fn defect_pair(&mut self) -> (RootRational<BigInt>, RootRational<BigInt>) {
        let order = [4, 5][self.int(0, 1) as usize];
        let line = self.two_term(order, Sign::Minus);
        (line.zeta().clone(), line.eta().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_construction() {
        let mut g = Gen::new(7);
        for order in 1..=6 {
            for _ in 0..50 {
                for sign in [Sign::Minus, Sign::Plus] {
                    let l = g.two_term(order, sign);
                    assert_eq!(l.order(), order, "{l}");
                    assert_eq!(l.sign(), sign);
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let (mut a, mut b) = (Gen::new(42), Gen::new(42));
        for _ in 0..20 {
            assert_eq!(a.two_term(6, Sign::Minus), b.two_term(6, Sign::Minus));
            assert_eq!(a.pos_surd(5), b.pos_surd(5));
        }
    }
}

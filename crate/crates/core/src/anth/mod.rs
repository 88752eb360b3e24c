//! Anthyphairesis: the reciprocal-subtraction expansion of a ratio.
//!
//! Rationals expand finitely; quadratic irrationals are eventually
//! periodic, and the period is found by the first repeat of a
//! complete-quotient state `x_i = e_{i−1} / e_i`, with `e_{−1} = a`,
//! `e_0 = b` and `e_{i+1} = e_{i−1} − k_i·e_i`. Since every state is hashed
//! the first repeat is the minimal one: no back-tracking is needed.

mod cf;
mod convergent;

use std::collections::HashMap;

use num_rational::Ratio;
use thiserror::Error;

pub use cf::{rational_expansion, CFExpansion};
pub use convergent::{convergents, ConvergentRow, ConvergentTable};

use crate::kernel::{KernelError, Surd};
use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnthError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("expected a positive magnitude, got {0}")]
    NonPositive(String),
    #[error("no period found within {cap} steps")]
    CapExhausted { cap: usize },
    #[error("the ratio is rational; its expansion is finite")]
    RationalInput,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("expansion has an empty quotient list")]
    EmptyExpansion,
    #[error("invalid quotient {0}")]
    BadQuotient(String),
    #[error("remainder index {n} exceeds the expansion length {len}")]
    IndexBeyondExpansion { n: usize, len: usize },
    #[error("cannot parse expansion {0:?}")]
    Parse(String),
}

fn require_positive<T: Int>(x: &Surd<T>) -> Result<(), AnthError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(AnthError::NonPositive(x.to_string()))
    }
}

/// One subtraction round: `a = k·b + c` with `0 ≤ c < b`.
pub fn anth_step<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<(T, Surd<T>), AnthError> {
    require_positive(a)?;
    require_positive(b)?;
    let k = a.checked_div(b)?.floor();
    let c = a.checked_sub(&b.scale(&Ratio::from_integer(k.clone())))?;
    Ok((k, c))
}

/// Iterates [`anth_step`] on successive pairs, yielding `(k_i, e_{i+1})`
/// until a remainder vanishes.
#[derive(Clone, Debug)]
pub struct Remainders<T: Int> {
    prev: Surd<T>,
    cur: Surd<T>,
}

impl<T: Int> Iterator for Remainders<T> {
    type Item = (T, Surd<T>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.cur.is_zero() {
            return None;
        }
        let (k, c) = anth_step(&self.prev, &self.cur).expect("remainders stay positive");
        self.prev = std::mem::replace(&mut self.cur, c.clone());
        Some((k, c))
    }
}

pub fn remainders<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<Remainders<T>, AnthError> {
    require_positive(a)?;
    require_positive(b)?;
    // rejects mixed fields up front
    a.checked_div(b)?;
    Ok(Remainders {
        prev: a.clone(),
        cur: b.clone(),
    })
}

/// `x = (P + √D)/Q` with integers and `Q | D − P²`, the form kept by every
/// complete quotient of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct QuadState<T: Int> {
    p: T,
    q: T,
}

/// `(P, Q, D)` for an irrational `x`.
fn quad_form<T: Int>(x: &Surd<T>) -> (T, T, T) {
    let (u, v) = (x.u(), x.v());
    let l = u.denom().lcm(v.denom());
    let p0 = u.numer().clone() * (l.clone() / u.denom().clone());
    let c = v.numer().clone() * (l.clone() / v.denom().clone());
    let d = c.clone() * c.clone() * x.radicand().clone();
    let (mut p, mut q) = if c.is_negative() { (-p0, -l) } else { (p0, l) };
    let mut d = d;
    if !(d.clone() - p.clone() * p.clone()).is_multiple_of(&q) {
        let aq = q.abs();
        p = p * aq.clone();
        d = d * q.clone() * q.clone();
        q = q * aq;
    }
    (p, q, d)
}

/// Steps to clear the pre-period, plus the number of reduced states
/// `(P + √D)/Q` with `0 < P < √D` and `0 < Q < 2√D`, which bounds the
/// period.
pub fn default_cap<T: Int>(x: &Surd<T>) -> usize {
    let pre = 10 * x.bit_length() as usize;
    if x.is_rational() {
        return pre.max(1);
    }
    let (_, _, d) = quad_form(x);
    let root = d.sqrt() + T::one();
    let states = (root.clone() + root.clone()) * root;
    pre.saturating_add(states.to_usize().unwrap_or(usize::MAX))
}

struct Trace<T: Int> {
    quotients: Vec<T>,
    // state indices i < j with x_i = x_j
    repeat: Option<(usize, usize)>,
}

fn trace<T: Int>(x: &Surd<T>, cap: usize) -> Result<Trace<T>, AnthError> {
    require_positive(x)?;
    if let Some(r) = x.as_rational() {
        let quotients = rational_expansion(r);
        if quotients.len() > cap {
            return Err(AnthError::CapExhausted { cap });
        }
        return Ok(Trace { quotients, repeat: None });
    }
    let (mut p, mut q, d) = quad_form(x);
    let s = d.sqrt();
    let mut seen: HashMap<QuadState<T>, usize> = HashMap::new();
    let mut quotients = Vec::new();
    loop {
        let state = QuadState { p: p.clone(), q: q.clone() };
        if let Some(&i) = seen.get(&state) {
            return Ok(Trace {
                repeat: Some((i, quotients.len())),
                quotients,
            });
        }
        if quotients.len() >= cap {
            return Err(AnthError::CapExhausted { cap });
        }
        // √D lies strictly between s and s + 1
        let top = if q.is_positive() { p.clone() + s.clone() } else { p.clone() + s.clone() + T::one() };
        let k = top.div_floor(&q);
        seen.insert(state, quotients.len());
        p = k.clone() * q.clone() - p;
        q = (d.clone() - p.clone() * p.clone()) / q;
        quotients.push(k);
    }
}

/// Expands `x > 0`. Rationals give a finite head; quadratic irrationals
/// give the minimal pre-period and period.
pub fn anth_expand<T: Int>(x: &Surd<T>, cap: usize) -> Result<CFExpansion<T>, AnthError> {
    let mut t = trace(x, cap)?;
    Ok(match t.repeat {
        None => CFExpansion::from_raw(t.quotients, Vec::new()),
        Some((i, _)) => {
            let period = t.quotients.split_off(i);
            CFExpansion::from_raw(t.quotients, period)
        }
    })
}

/// Expands the ratio `a : b` of two magnitudes from one field.
pub fn anth_expand_ratio<T: Int>(
    a: &Surd<T>,
    b: &Surd<T>,
    cap: usize,
) -> Result<CFExpansion<T>, AnthError> {
    require_positive(a)?;
    require_positive(b)?;
    anth_expand(&a.checked_div(b)?, cap)
}

/// The first coincidence `e_m / e_{m+1} = e_n / e_{n+1}` of
/// consecutive-remainder ratios, by signed remainder index with
/// `e_{−1} = a`, `e_0 = b`.
///
/// The quotient `k_i` is produced from the state `e_{i−1} / e_i`, so the
/// pre-period has `m + 1` quotients and the period `n − m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LogosPair {
    pub m: i64,
    pub n: i64,
}

impl LogosPair {
    pub fn pre_period_len(&self) -> usize {
        (self.m + 1) as usize
    }

    pub fn period_len(&self) -> usize {
        (self.n - self.m) as usize
    }
}

pub fn logos_pair<T: Int>(a: &Surd<T>, b: &Surd<T>) -> Result<LogosPair, AnthError> {
    require_positive(a)?;
    require_positive(b)?;
    let x = a.checked_div(b)?;
    if x.is_rational() {
        return Err(AnthError::RationalInput);
    }
    let t = trace(&x, default_cap(&x))?;
    let (i, j) = t.repeat.expect("irrational input repeats");
    Ok(LogosPair {
        m: i as i64 - 1,
        n: j as i64 - 1,
    })
}

/// `e_n = (−1)^n (q_n·b − p_n·a)`, with `e_0 = b`.
///
/// For a rational ratio of `L` quotients the formula is defined up to
/// `n = L`, where it gives `0`.
pub fn remainder_formula<T: Int>(a: &Surd<T>, b: &Surd<T>, n: usize) -> Result<Surd<T>, AnthError> {
    require_positive(a)?;
    require_positive(b)?;
    let x = a.checked_div(b)?;
    let cf = anth_expand(&x, default_cap(&x))?;
    if let Some(len) = cf.finite_len() {
        if n > len {
            return Err(AnthError::IndexBeyondExpansion { n, len });
        }
    }
    let (p, q) = convergent::convergent_pair(&cf, n).expect("index checked above");
    let e = b
        .scale(&Ratio::from_integer(q))
        .checked_sub(&a.scale(&Ratio::from_integer(p)))?;
    Ok(if n % 2 == 0 { e } else { -e })
}

/// For a purely periodic expansion `(k_0, …, k_n)` returns `(A, B, C)` with
/// `A·a² = B·ab + C·b²`, namely `(p_{n+1}, q_{n+1} − p_n, q_n)`.
pub fn purely_periodic_to_quadratic<T: Int>(period: &[T]) -> Result<(T, T, T), AnthError> {
    if period.is_empty() {
        return Err(AnthError::EmptyPeriod);
    }
    if let Some(k) = period.iter().find(|k| !k.is_positive()) {
        return Err(AnthError::BadQuotient(k.to_string()));
    }
    let cf = CFExpansion::from_raw(period.to_vec(), Vec::new());
    let len = period.len();
    let (p_last, q_last) = convergent::convergent_pair(&cf, len).expect("len rows");
    let (p_prev, q_prev) = convergent::convergent_pair(&cf, len - 1).expect("len - 1 rows");
    Ok((p_last, q_last - p_prev, q_prev))
}

/// Positive root of `A·t² = B·t + C` for positive `A`, `C`.
pub fn periodic_root<T: Int>(a: &T, b: &T, c: &T) -> Surd<T> {
    let two_a = Ratio::from_integer(a.clone() + a.clone());
    let disc = b.clone() * b.clone() + (a.clone() + a.clone()) * (c.clone() + c.clone());
    Surd::normalize(
        Ratio::from_integer(b.clone()) / two_a.clone(),
        Ratio::from_integer(T::one()) / two_a,
        Ratio::from_integer(disc),
    )
    .expect("discriminant is positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Surd<BigInt>;

    fn golden() -> S {
        (S::one() + S::sqrt_of(5)) / S::from_i64(2)
    }

    fn expand(x: &S) -> CFExpansion<BigInt> {
        anth_expand(x, default_cap(x)).unwrap()
    }

    #[test]
    fn step_examples() {
        let (k, c) = anth_step(&S::from_i64(7), &S::from_i64(3)).unwrap();
        assert_eq!((k, c), (BigInt::from(2), S::one()));
        let r2 = S::sqrt_of(2);
        let (k, c) = anth_step(&r2, &S::one()).unwrap();
        assert_eq!((k, c.clone()), (BigInt::from(1), &r2 - S::one()));
        let (k, c2) = anth_step(&S::one(), &c).unwrap();
        assert_eq!((k, c2), (BigInt::from(2), S::from_i64(3) - S::from_i64(2) * &r2));
    }

    #[test]
    fn step_errors() {
        assert!(matches!(anth_step(&S::zero(), &S::one()), Err(AnthError::NonPositive(_))));
        assert!(matches!(
            anth_step(&S::sqrt_of(2), &S::sqrt_of(3)),
            Err(AnthError::Kernel(KernelError::MixedFields { .. }))
        ));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&S::sqrt_of(2)).to_string(), "[1; (2)]");
        assert_eq!(expand(&golden()).to_string(), "[(1)]");
        assert_eq!(expand(&S::frac(7, 3)).to_string(), "[2; 3]");
        assert_eq!(expand(&S::sqrt_of(3)).to_string(), "[1; (1, 2)]");
        assert_eq!(expand(&S::sqrt_of(7)).to_string(), "[2; (1, 1, 1, 4)]");
        assert_eq!(expand(&S::sqrt(Ratio::new(3.into(), 2.into())).unwrap()).to_string(), "[1; (4, 2)]");
        // k0 = 0 when the ratio is below one
        assert_eq!(expand(&S::frac(3, 7)).to_string(), "[0; 2, 3]");
        assert_eq!(expand(&(S::sqrt_of(2) - S::one())).to_string(), "[0; (2)]");
    }

    #[test]
    fn expand_cap() {
        assert_eq!(anth_expand(&S::sqrt_of(7), 3), Err(AnthError::CapExhausted { cap: 3 }));
        assert!(anth_expand(&-S::sqrt_of(2), 10).is_err());
    }

    #[test]
    fn expansion_value_round_trip() {
        for x in [S::sqrt_of(2), golden(), S::frac(7, 3), S::sqrt_of(13), S::from_i64(2) + S::sqrt_of(2)] {
            assert_eq!(expand(&x).value().unwrap(), x);
        }
    }

    #[test]
    fn denotes_matches_value() {
        let long = S::frac(-11, 4) + S::from_i64(8) * S::sqrt_of(2);
        for x in [S::sqrt_of(2), golden(), S::frac(7, 3), S::sqrt_of(13), long] {
            let cf = expand(&x);
            assert!(cf.denotes(&x).unwrap(), "{x}");
            assert!(!cf.denotes(&(x.clone() + S::frac(1, 7))).unwrap(), "{x}");
        }
        let root2 = expand(&S::sqrt_of(2));
        assert!(!root2.denotes(&S::sqrt_of(3)).unwrap_or(false));
        assert!(!root2.denotes(&S::frac(7, 5)).unwrap());
    }

    #[test]
    fn logos_pairs() {
        let lp = logos_pair(&S::sqrt_of(2), &S::one()).unwrap();
        assert_eq!(lp, LogosPair { m: 0, n: 1 });
        let lp = logos_pair(&golden(), &S::one()).unwrap();
        assert_eq!(lp, LogosPair { m: -1, n: 0 });
        assert_eq!(lp.pre_period_len(), 0);
        let lp = logos_pair(&S::sqrt_of(3), &S::one()).unwrap();
        assert_eq!((lp.pre_period_len(), lp.period_len()), (1, 2));
        assert_eq!(logos_pair(&S::from_i64(7), &S::from_i64(3)), Err(AnthError::RationalInput));
    }

    #[test]
    fn remainder_formula_examples() {
        let (r2, one) = (S::sqrt_of(2), S::one());
        assert_eq!(remainder_formula(&r2, &one, 1).unwrap(), &r2 - S::one());
        assert_eq!(remainder_formula(&r2, &one, 2).unwrap(), S::from_i64(3) - S::from_i64(2) * &r2);
        assert_eq!(remainder_formula(&r2, &one, 0).unwrap(), one);
        let (a, b) = (S::from_i64(7), S::from_i64(3));
        assert_eq!(remainder_formula(&a, &b, 1).unwrap(), S::one());
        assert_eq!(remainder_formula(&a, &b, 2).unwrap(), S::zero());
        assert_eq!(
            remainder_formula(&a, &b, 3),
            Err(AnthError::IndexBeyondExpansion { n: 3, len: 2 })
        );
    }

    #[test]
    fn remainders_iterate_steps() {
        let rs: Vec<_> = remainders(&S::from_i64(7), &S::from_i64(3)).unwrap().collect();
        assert_eq!(rs, vec![(BigInt::from(2), S::one()), (BigInt::from(3), S::zero())]);
        let r2 = S::sqrt_of(2);
        for (n, (_, e)) in remainders(&r2, &S::one()).unwrap().take(8).enumerate() {
            assert_eq!(e, remainder_formula(&r2, &S::one(), n + 1).unwrap());
        }
    }

    #[test]
    fn periodic_quadratics() {
        let b = |v: i64| BigInt::from(v);
        assert_eq!(purely_periodic_to_quadratic(&[b(2)]).unwrap(), (b(1), b(2), b(1)));
        assert_eq!(purely_periodic_to_quadratic(&[b(1)]).unwrap(), (b(1), b(1), b(1)));
        let (a, bb, c) = purely_periodic_to_quadratic(&[b(2), b(1)]).unwrap();
        assert_eq!((a.clone(), bb.clone(), c.clone()), (b(1), b(2), b(2)));
        let root = periodic_root(&a, &bb, &c);
        assert_eq!(root, S::one() + S::sqrt_of(3));
        assert_eq!(expand(&root).period(), &[b(2), b(1)]);
        assert_eq!(periodic_root(&b(1), &b(2), &b(1)), S::one() + S::sqrt_of(2));
        assert_eq!(periodic_root(&b(1), &b(1), &b(1)), golden());
        assert_eq!(purely_periodic_to_quadratic::<BigInt>(&[]), Err(AnthError::EmptyPeriod));
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn integer_states_match_surd_steps() {
        let xs = [
            S::sqrt_of(7),
            golden(),
            S::normalize(Ratio::new(big(-11), big(6)), Ratio::new(big(4), big(5)), Ratio::from_integer(big(26))).unwrap(),
            S::normalize(Ratio::new(big(5), big(2)), Ratio::new(big(-3), big(7)), Ratio::from_integer(big(22))).unwrap(),
            S::normalize(Ratio::new(big(1), big(3)), Ratio::new(big(1), big(3)), Ratio::from_integer(big(8))).unwrap(),
        ];
        for x in xs {
            let cf = expand(&x);
            let n = 2 * (cf.head().len() + cf.period().len()) + 3;
            let direct: Vec<BigInt> = remainders(&x, &S::one()).unwrap().take(n).map(|(k, _)| k).collect();
            let via_states: Vec<BigInt> = cf.quotients().take(n).cloned().collect();
            assert_eq!(direct, via_states, "{x}");
        }
    }

    #[test]
    fn default_cap_covers_long_periods() {
        // √919 has period 60 but needs only ten bits
        let x = S::sqrt_of(919);
        let cf = expand(&x);
        assert_eq!(cf.period().len(), 60);
        assert!(default_cap(&x) > 10 * x.bit_length() as usize);
    }
}

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::AnthError;
use crate::kernel::Surd;
use crate::scalar::Int;

/// A quotient sequence: a finite head followed by an optional repeating
/// period. An empty period means the expansion terminates.
///
/// Values built through [`CFExpansion::new`] are canonical: the period is
/// its own minimal cycle and the head is the shortest pre-period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFExpansion<T: Int> {
    head: Vec<T>,
    period: Vec<T>,
}

impl<T: Int> CFExpansion<T> {
    /// Validates quotients (`k0 ≥ 0`, all later ones `≥ 1`) and brings the
    /// pair to canonical form.
    pub fn new(head: Vec<T>, period: Vec<T>) -> Result<Self, AnthError> {
        if head.is_empty() && period.is_empty() {
            return Err(AnthError::EmptyExpansion);
        }
        // only a leading k0 may be zero; a period always recurs after k0
        for (i, k) in head.iter().chain(period.iter()).enumerate() {
            let ok = if i == 0 && !head.is_empty() { !k.is_negative() } else { k.is_positive() };
            if !ok {
                return Err(AnthError::BadQuotient(k.to_string()));
            }
        }
        let mut cf = Self { head, period };
        cf.canonicalize();
        Ok(cf)
    }

    /// Assembles an expansion already known to be canonical.
    pub(crate) fn from_raw(head: Vec<T>, period: Vec<T>) -> Self {
        Self { head, period }
    }

    fn canonicalize(&mut self) {
        let p = self.period.len();
        if p == 0 {
            return;
        }
        // smallest cycle d dividing p that generates the period
        if let Some(d) = (1..=p).find(|&d| p % d == 0 && (d..p).all(|i| self.period[i] == self.period[i - d])) {
            self.period.truncate(d);
        }
        // roll the cycle back into the head while the quotients agree
        while let Some(last) = self.head.last() {
            if *last != *self.period.last().expect("nonempty period") {
                break;
            }
            self.head.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn head(&self) -> &[T] {
        &self.head
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// `k_i`, cycling through the period; `None` past the end of a finite
    /// expansion.
    pub fn quotient(&self, i: usize) -> Option<&T> {
        if i < self.head.len() {
            Some(&self.head[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(&self.period[(i - self.head.len()) % self.period.len()])
        }
    }

    /// All quotients in order; endless for a periodic expansion.
    pub fn quotients(&self) -> impl Iterator<Item = &T> + '_ {
        (0..).map_while(move |i| self.quotient(i))
    }

    /// Number of quotients of a finite expansion.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.head.len())
    }

    /// Whether the expansion denotes `x`. Peels the head off `x`, then
    /// checks that the tail is the positive root of the period's quadratic;
    /// no radicand is factored.
    pub fn denotes(&self, x: &Surd<T>) -> Result<bool, AnthError> {
        let mut y = x.clone();
        let last = self.head.len();
        for (i, k) in self.head.iter().enumerate() {
            let k = Surd::integer(k.clone());
            if i + 1 == last && self.period.is_empty() {
                return Ok(y == k);
            }
            let f = y.checked_sub(&k)?;
            if !f.is_positive() {
                return Ok(false);
            }
            y = f.recip()?;
        }
        if self.period.is_empty() {
            return Ok(false);
        }
        let (a, b, c) = super::purely_periodic_to_quadratic(&self.period)?;
        let q = |v: &T| Surd::integer(v.clone());
        let lhs = q(&a).checked_mul(&y.square())?;
        let rhs = q(&b).checked_mul(&y)?.checked_add(&q(&c))?;
        Ok(y.is_positive() && lhs == rhs)
    }

    /// The number the expansion denotes, recovered exactly. Normalizing
    /// the radicand factors the period's discriminant by trial division,
    /// so long periods are slow; [`Self::denotes`] avoids this.
    pub fn value(&self) -> Result<Surd<T>, AnthError> {
        let mut acc: Option<Surd<T>> = if self.period.is_empty() {
            None
        } else {
            let (a, b, c) = super::purely_periodic_to_quadratic(&self.period)?;
            Some(super::periodic_root(&a, &b, &c))
        };
        for k in self.head.iter().rev() {
            let k = Surd::integer(k.clone());
            acc = Some(match acc {
                None => k,
                Some(x) => k.checked_add(&x.recip()?)?,
            });
        }
        Ok(acc.expect("expansion is nonempty"))
    }
}

impl<T: Int> fmt::Display for CFExpansion<T> {
    /// `[k0; k1, …, (km, …, kn)]`; a purely periodic expansion is written
    /// `[(k0, …, kn)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, ks: &[T]) -> fmt::Result {
            for (i, k) in ks.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{k}")?;
            }
            Ok(())
        }
        f.write_str("[")?;
        if let Some((k0, rest)) = self.head.split_first() {
            write!(f, "{k0}")?;
            if !rest.is_empty() || !self.period.is_empty() {
                f.write_str("; ")?;
            }
            list(f, rest)?;
            if !rest.is_empty() && !self.period.is_empty() {
                f.write_str(", ")?;
            }
        }
        if !self.period.is_empty() {
            f.write_str("(")?;
            list(f, &self.period)?;
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

impl<T: Int> FromStr for CFExpansion<T> {
    type Err = AnthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AnthError::Parse(s.to_string());
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (plain, periodic) = match body.find('(') {
            Some(open) => {
                let inner = body[open + 1..].strip_suffix(')').ok_or_else(bad)?;
                (&body[..open], Some(inner))
            }
            None => (body, None),
        };
        let num = |t: &str| -> Result<T, AnthError> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            T::from_str_radix(t, 10).map_err(|_| bad())
        };
        let mut head = Vec::new();
        let plain = plain.trim();
        if !plain.is_empty() {
            let (k0, rest) = match plain.split_once(';') {
                Some((k0, rest)) => (k0, Some(rest)),
                None => (plain, None),
            };
            head.push(num(k0)?);
            if let Some(rest) = rest {
                let rest = rest.trim().trim_end_matches(',').trim();
                if !rest.is_empty() {
                    for t in rest.split(',') {
                        head.push(num(t)?);
                    }
                }
                // "[k0;]" has no quotient after the separator
                if rest.is_empty() && periodic.is_none() {
                    return Err(bad());
                }
            }
        }
        let period = match periodic {
            Some(inner) => inner.split(',').map(num).collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        };
        Self::new(head, period)
    }
}

/// Expansion of a rational, by the Euclidean algorithm.
pub fn rational_expansion<T: Int>(q: &Ratio<T>) -> Vec<T> {
    let mut ks = Vec::new();
    let (mut a, mut b) = (q.numer().clone(), q.denom().clone());
    while !b.is_zero() {
        let (k, r) = a.div_mod_floor(&b);
        ks.push(k);
        a = b;
        b = r;
    }
    ks
}

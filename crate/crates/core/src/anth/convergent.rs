use super::CFExpansion;
use crate::scalar::Int;

/// One row of the side-and-diameter recurrence: `q_n / p_n` approximates
/// the expanded ratio.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvergentRow<T: Int> {
    pub n: usize,
    pub p: T,
    pub q: T,
}

/// Rows `1..=n` of `p_n = k_{n−1}p_{n−1} + p_{n−2}`,
/// `q_n = k_{n−1}q_{n−1} + q_{n−2}`, seeded with `(p_{-1}, q_{-1}) = (1, 0)`
/// and `(p_0, q_0) = (0, 1)`, so that `p_1 = 1`, `q_1 = k_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvergentTable<T: Int> {
    rows: Vec<ConvergentRow<T>>,
}

impl<T: Int> ConvergentTable<T> {
    pub fn rows(&self) -> &[ConvergentRow<T>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `n` (1-based, as in the recurrence).
    pub fn row(&self, n: usize) -> Option<&ConvergentRow<T>> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn p(&self) -> impl Iterator<Item = &T> {
        self.rows.iter().map(|r| &r.p)
    }

    pub fn q(&self) -> impl Iterator<Item = &T> {
        self.rows.iter().map(|r| &r.q)
    }
}

/// The first `n` convergent rows; a finite expansion of length `L` yields
/// at most `L` rows.
pub fn convergents<T: Int>(cf: &CFExpansion<T>, n: usize) -> ConvergentTable<T> {
    let mut rows = Vec::with_capacity(n);
    let (mut p_prev, mut q_prev) = (T::one(), T::zero());
    let (mut p, mut q) = (T::zero(), T::one());
    for (i, k) in cf.quotients().take(n).enumerate() {
        let p_next = k.clone() * p.clone() + p_prev;
        let q_next = k.clone() * q.clone() + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        rows.push(ConvergentRow {
            n: i + 1,
            p: p.clone(),
            q: q.clone(),
        });
    }
    ConvergentTable { rows }
}

/// `(p_n, q_n)` including the seed row `n = 0`.
pub(crate) fn convergent_pair<T: Int>(cf: &CFExpansion<T>, n: usize) -> Option<(T, T)> {
    if n == 0 {
        return Some((T::zero(), T::one()));
    }
    convergents(cf, n).row(n).map(|r| (r.p.clone(), r.q.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(head: &[i64], period: &[i64]) -> CFExpansion<i64> {
        CFExpansion::new(head.to_vec(), period.to_vec()).unwrap()
    }

    #[test]
    fn side_and_diameter_numbers() {
        let t = convergents(&cf(&[1], &[2]), 4);
        assert_eq!(t.p().cloned().collect::<Vec<_>>(), [1, 2, 5, 12]);
        assert_eq!(t.q().cloned().collect::<Vec<_>>(), [1, 3, 7, 17]);
    }

    #[test]
    fn fibonacci() {
        let t = convergents(&cf(&[], &[1]), 4);
        assert_eq!(t.p().cloned().collect::<Vec<_>>(), [1, 1, 2, 3]);
        assert_eq!(t.q().cloned().collect::<Vec<_>>(), [1, 2, 3, 5]);
    }

    #[test]
    fn first_row_is_one_k0() {
        for k0 in 0..6 {
            let t = convergents(&cf(&[k0, 2], &[]), 1);
            assert_eq!(t.row(1), Some(&ConvergentRow { n: 1, p: 1, q: k0 }));
        }
    }

    #[test]
    fn finite_expansions_truncate() {
        let t = convergents(&cf(&[2, 3], &[]), 10);
        assert_eq!(t.len(), 2);
        // 7/3
        assert_eq!(t.row(2), Some(&ConvergentRow { n: 2, p: 3, q: 7 }));
        assert_eq!(convergent_pair(&cf(&[2, 3], &[]), 0), Some((0, 1)));
        assert_eq!(convergent_pair(&cf(&[2, 3], &[]), 3), None);
    }
}

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use super::{LineError, LineKind, Sign};
use crate::kernel::arith::is_perfect_square;
use crate::kernel::{Radical, RootRational, Surd};
use crate::scalar::Int;

/// `ζ ± η` with `ζ > η > 0` rational in square and commensurable in square
/// only: an apotome (minus) or a binomial (plus).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermLine<T: Int> {
    zeta: RootRational<T>,
    eta: RootRational<T>,
    sign: Sign,
}

/// Which term criterion (i) finds commensurable with the reference line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefTerm {
    Zeta,
    Eta,
    Neither,
}

impl fmt::Display for RefTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RefTerm::Zeta => "zeta",
            RefTerm::Eta => "eta",
            RefTerm::Neither => "neither",
        })
    }
}

/// Simple apotomes `q − √N` with `N = q² − p²` and `√N − q` with
/// `N = q² + p²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Deficit,
    Excess,
}

pub fn make_two_term<T: Int>(
    zeta: RootRational<T>,
    eta: RootRational<T>,
    sign: Sign,
) -> Result<TwoTermLine<T>, LineError> {
    if zeta.cmp_len(&eta) != Ordering::Greater {
        return Err(LineError::NotGreater {
            zeta: zeta.to_string(),
            eta: eta.to_string(),
        });
    }
    if zeta.commensurable_with(&eta) {
        return Err(LineError::CommensurableTerms {
            zeta: zeta.to_string(),
            eta: eta.to_string(),
        });
    }
    Ok(TwoTermLine { zeta, eta, sign })
}

/// Builds the line from the squares of its terms, which must be rational.
pub fn make_two_term_from_squares<T: Int>(
    zeta_sq: &Surd<T>,
    eta_sq: &Surd<T>,
    sign: Sign,
) -> Result<TwoTermLine<T>, LineError> {
    let root = |sq: &Surd<T>| -> Result<RootRational<T>, LineError> {
        let q = sq.as_rational().ok_or_else(|| LineError::SquaresIrrational(sq.to_string()))?;
        Ok(RootRational::from_square(q)?)
    };
    make_two_term(root(zeta_sq)?, root(eta_sq)?, sign)
}

impl<T: Int> TwoTermLine<T> {
    /// Reads `c₁√k₁ ± c₂√k₂` as a two-term line.
    pub fn from_value(v: &Radical<T>) -> Result<Self, LineError> {
        let terms: Vec<_> = v.terms().collect();
        let [(k1, c1), (k2, c2)] = terms[..] else {
            return Err(LineError::NotTwoTerm(v.to_string()));
        };
        let t1 = RootRational::new(c1.abs(), k1.clone())?;
        let t2 = RootRational::new(c2.abs(), k2.clone())?;
        let (zeta, eta, sign) = match (c1.is_positive(), c2.is_positive()) {
            (true, true) => {
                if t1.cmp_len(&t2) == Ordering::Greater {
                    (t1, t2, Sign::Plus)
                } else {
                    (t2, t1, Sign::Plus)
                }
            }
            (true, false) => (t1, t2, Sign::Minus),
            (false, true) => (t2, t1, Sign::Minus),
            (false, false) => return Err(LineError::NotTwoTerm(v.to_string())),
        };
        make_two_term(zeta, eta, sign)
    }

    pub fn zeta(&self) -> &RootRational<T> {
        &self.zeta
    }

    pub fn eta(&self) -> &RootRational<T> {
        &self.eta
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_apotome(&self) -> bool {
        self.sign == Sign::Minus
    }

    pub fn value(&self) -> Radical<T> {
        match self.sign {
            Sign::Plus => &self.zeta.to_radical() + &self.eta.to_radical(),
            Sign::Minus => &self.zeta.to_radical() - &self.eta.to_radical(),
        }
    }

    /// `ζ² − η²`, positive.
    pub fn theta_sq(&self) -> Ratio<T> {
        self.zeta.square() - self.eta.square()
    }

    pub fn theta(&self) -> RootRational<T> {
        RootRational::from_square(&self.theta_sq()).expect("ζ > η")
    }

    /// Criterion (i) against the reference line `r`.
    pub fn criterion_i(&self, r: &RootRational<T>) -> RefTerm {
        if self.zeta.commensurable_with(r) {
            RefTerm::Zeta
        } else if self.eta.commensurable_with(r) {
            RefTerm::Eta
        } else {
            RefTerm::Neither
        }
    }

    /// Criterion (ii): `θ` commensurable with `ζ`.
    pub fn criterion_ii(&self) -> bool {
        self.theta().commensurable_with(&self.zeta)
    }

    pub fn order(&self) -> u8 {
        classify_order(self)
    }

    pub fn kind(&self) -> LineKind {
        match self.sign {
            Sign::Plus => LineKind::Binomial(self.order()),
            Sign::Minus => LineKind::Apotome(self.order()),
        }
    }

    /// Both terms multiplied by a positive rational.
    pub fn scale(&self, q: &Ratio<T>) -> Result<Self, LineError> {
        make_two_term(self.zeta.scale(q)?, self.eta.scale(q)?, self.sign)
    }

    /// The same terms with the other sign.
    pub fn mirror(&self) -> Self {
        Self {
            zeta: self.zeta.clone(),
            eta: self.eta.clone(),
            sign: self.sign.flip(),
        }
    }

    /// The value as a single-field surd, when both terms share a field.
    pub fn to_surd(&self) -> Result<Surd<T>, LineError> {
        Ok(self.value().to_surd()?)
    }
}

impl<T: Int> fmt::Display for TwoTermLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.zeta, self.sign.symbol(), self.eta)
    }
}

pub fn classify_order<T: Int>(line: &TwoTermLine<T>) -> u8 {
    classify_order_with(line, &RootRational::integer(1))
}

/// The order relative to the reference line `r`.
pub fn classify_order_with<T: Int>(line: &TwoTermLine<T>, r: &RootRational<T>) -> u8 {
    let base = if line.criterion_ii() { 0 } else { 3 };
    base + match line.criterion_i(r) {
        RefTerm::Zeta => 1,
        RefTerm::Eta => 2,
        RefTerm::Neither => 3,
    }
}

/// `q − √N` (deficit, `N = q² − p²`) or `√N − q` (excess, `N = q² + p²`).
pub fn construct_simple_apotome<T: Int>(
    n: &T,
    p: &T,
    q: &T,
    flavor: Flavor,
) -> Result<TwoTermLine<T>, LineError> {
    let (p2, q2) = (p.clone() * p.clone(), q.clone() * q.clone());
    let expected = match flavor {
        Flavor::Deficit => q2 - p2,
        Flavor::Excess => q2 + p2,
    };
    if *n != expected || !n.is_positive() || !p.is_positive() || !q.is_positive() {
        return Err(LineError::Mismatch {
            n: n.to_string(),
            expected: expected.to_string(),
        });
    }
    if is_perfect_square(n) {
        return Err(LineError::SquareN(n.to_string()));
    }
    let root_n = RootRational::from_square(&Ratio::from_integer(n.clone()))?;
    let q = RootRational::rational(Ratio::from_integer(q.clone()))?;
    match flavor {
        Flavor::Deficit => make_two_term(q, root_n, Sign::Minus),
        Flavor::Excess => make_two_term(root_n, q, Sign::Minus),
    }
}

/// The line `δ` with `γ·δ = 1`: the opposite sign, both terms divided by
/// `ζ² − η²`. Confirms the product and the order.
pub fn conjugate<T: Int>(line: &TwoTermLine<T>) -> Result<TwoTermLine<T>, LineError> {
    let inv = line.theta_sq().recip();
    let delta = make_two_term(line.zeta.scale(&inv)?, line.eta.scale(&inv)?, line.sign.flip())?;
    if &line.value() * &delta.value() != Radical::one() {
        return Err(LineError::CheckFailed(format!("({line})({delta}) is not 1")));
    }
    if delta.order() != line.order() {
        return Err(LineError::CheckFailed(format!("{delta} changed order from {line}")));
    }
    Ok(delta)
}

/// One classification line: `value kind order (i=…,ii=…) pell=…`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassificationRow {
    pub value: String,
    pub kind: LineKind,
    pub order: Option<u8>,
    pub criterion_i: Option<RefTerm>,
    pub criterion_ii: Option<bool>,
    /// Absolute field norm, when the value lies in one quadratic field.
    pub pell_number: Option<String>,
}

impl ClassificationRow {
    pub fn for_two_term<T: Int>(line: &TwoTermLine<T>) -> Self {
        let value = line.value();
        Self {
            value: compact(&value.to_string()),
            kind: line.kind(),
            order: Some(line.order()),
            criterion_i: Some(line.criterion_i(&RootRational::integer(1))),
            criterion_ii: Some(line.criterion_ii()),
            pell_number: crate::pell::pell_number(&value).ok().map(|q| q.to_string()),
        }
    }

    /// A row for `Ω` of the given kind, with the Pell number of `γ = Ω²`.
    pub fn for_alogos<T: Int>(omega: &super::AlogosLine<T>, kind: LineKind, gamma: &TwoTermLine<T>) -> Self {
        Self {
            value: compact(&omega.to_string()),
            kind,
            order: kind.order(),
            criterion_i: None,
            criterion_ii: None,
            pell_number: crate::pell::pell_number(&gamma.value()).ok().map(|q| q.to_string()),
        }
    }

    pub fn for_single_term(value: String, kind: LineKind) -> Self {
        Self {
            value: compact(&value),
            kind,
            order: None,
            criterion_i: None,
            criterion_ii: None,
            pell_number: None,
        }
    }
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

impl fmt::Display for ClassificationRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dash = || "-".to_string();
        write!(
            f,
            "{} {} {} (i={},ii={})",
            self.value,
            self.kind,
            self.order.map_or_else(dash, |o| o.to_string()),
            self.criterion_i.map_or_else(dash, |c| c.to_string()),
            self.criterion_ii.map_or_else(dash, |c| c.to_string()),
        )?;
        match &self.pell_number {
            Some(p) => write!(f, " pell={p}"),
            None => Ok(()),
        }
    }
}

/// `(c.0 / c.1)·√k` from small integers.
#[cfg(test)]
pub(crate) fn rr<T: Int>(c: (i64, i64), k: i64) -> RootRational<T> {
    RootRational::new(Ratio::new(crate::scalar::int(c.0), crate::scalar::int(c.1)), crate::scalar::int(k)).expect("valid root-rational literal")
}

//! Two-term lines and the irrational-line taxonomy.
//!
//! All classifications are relative to the unit line `r = 1` unless a
//! reference line is passed explicitly. An apotome `ζ − η` or binomial
//! `ζ + η` has terms rational in square and commensurable in square only;
//! its order comes from two criteria:
//!
//! * (i) which term, if any, is commensurable with `r`;
//! * (ii) whether `θ = √(ζ² − η²)` is commensurable with `ζ`.
//!
//! `order = (θ ~ ζ ? 0 : 3) + (ζ ~ r → 1, η ~ r → 2, neither → 3)`.
//!
//! An alogos line `√A ± √B` is stored by its term-squares `A > B`. Its kind
//! is decided by (i) `A/B` rational, (ii) `A + B` rational or medial and
//! (iii) `2√(AB)` rational or medial.

mod alogos;
mod solids;
mod two_term;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use alogos::{
    alogos_from_apotome, apotome_from_alogos, classify_alogos, expected_kind, invariance_check,
    is_medial_area, is_medial_line, is_rational_area, medial_difference_not_rational,
    uniqueness_check, AlogosLine,
};
pub use solids::{solid_side_checks, DodecahedronCheck, IcosahedronCheck, SolidReport};
pub use two_term::{
    classify_order, classify_order_with, conjugate, construct_simple_apotome, make_two_term,
    make_two_term_from_squares, ClassificationRow, Flavor, RefTerm, TwoTermLine,
};

use crate::kernel::KernelError;
use crate::periodicity::TheoremError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error("the greater term must come first: zeta = {zeta}, eta = {eta}")]
    NotGreater { zeta: String, eta: String },
    #[error("terms {zeta} and {eta} are commensurable in length")]
    CommensurableTerms { zeta: String, eta: String },
    #[error("the square {0} of a term is irrational")]
    SquaresIrrational(String),
    #[error("{0} is not a two-term line")]
    NotTwoTerm(String),
    #[error("N = {0} is a perfect square")]
    SquareN(String),
    #[error("N = {n} does not equal {expected}")]
    Mismatch { n: String, expected: String },
    #[error("term-squares must satisfy A > B > 0, got A = {a}, B = {b}")]
    BadTerms { a: String, b: String },
    #[error("{0} matches none of the thirteen kinds")]
    NoKind(String),
    #[error("{0} lies outside the two-term family")]
    OutsideFamily(String),
    #[error("self-check failed: {0}")]
    CheckFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// The thirteen irrational kinds plus the rational line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum LineKind {
    Rational,
    Medial,
    Binomial(u8),
    FirstBimedial,
    SecondBimedial,
    Major,
    SideOfRationalPlusMedial,
    SideOfTwoMedials,
    Apotome(u8),
    FirstApotomeOfMedial,
    SecondApotomeOfMedial,
    Minor,
    ProducingRationalAndMedialWhole,
    ProducingMedialAndMedialWhole,
}

impl LineKind {
    /// The kind name without the order of a binomial or apotome.
    pub fn family(&self) -> &'static str {
        match self {
            LineKind::Rational => "rational",
            LineKind::Medial => "medial",
            LineKind::Binomial(_) => "binomial",
            LineKind::FirstBimedial => "first-bimedial",
            LineKind::SecondBimedial => "second-bimedial",
            LineKind::Major => "major",
            LineKind::SideOfRationalPlusMedial => "side-of-rational-plus-medial",
            LineKind::SideOfTwoMedials => "side-of-two-medials",
            LineKind::Apotome(_) => "apotome",
            LineKind::FirstApotomeOfMedial => "first-apotome-of-medial",
            LineKind::SecondApotomeOfMedial => "second-apotome-of-medial",
            LineKind::Minor => "minor",
            LineKind::ProducingRationalAndMedialWhole => "producing-rational-and-medial-whole",
            LineKind::ProducingMedialAndMedialWhole => "producing-medial-and-medial-whole",
        }
    }

    pub fn order(&self) -> Option<u8> {
        match self {
            LineKind::Binomial(k) | LineKind::Apotome(k) => Some(*k),
            _ => None,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            LineKind::Rational | LineKind::Medial => None,
            LineKind::Binomial(_)
            | LineKind::FirstBimedial
            | LineKind::SecondBimedial
            | LineKind::Major
            | LineKind::SideOfRationalPlusMedial
            | LineKind::SideOfTwoMedials => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        }
    }

    /// Same tag, ignoring the order of a binomial or apotome.
    pub fn same_family(&self, other: &Self) -> bool {
        self.family() == other.family()
    }
}

impl fmt::Display for LineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            Some(k) => write!(f, "{}-{}", self.family(), k),
            None => f.write_str(self.family()),
        }
    }
}

impl FromStr for LineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ordered = |k: &str| -> Result<u8, String> {
            match k.parse::<u8>() {
                Ok(k @ 1..=6) => Ok(k),
                _ => Err(format!("bad order in {s:?}")),
            }
        };
        if let Some(k) = s.strip_prefix("binomial-") {
            return Ok(LineKind::Binomial(ordered(k)?));
        }
        if let Some(k) = s.strip_prefix("apotome-") {
            return Ok(LineKind::Apotome(ordered(k)?));
        }
        Ok(match s {
            "rational" => LineKind::Rational,
            "medial" => LineKind::Medial,
            "first-bimedial" => LineKind::FirstBimedial,
            "second-bimedial" => LineKind::SecondBimedial,
            "major" => LineKind::Major,
            "side-of-rational-plus-medial" => LineKind::SideOfRationalPlusMedial,
            "side-of-two-medials" => LineKind::SideOfTwoMedials,
            "first-apotome-of-medial" => LineKind::FirstApotomeOfMedial,
            "second-apotome-of-medial" => LineKind::SecondApotomeOfMedial,
            "minor" => LineKind::Minor,
            "producing-rational-and-medial-whole" => LineKind::ProducingRationalAndMedialWhole,
            "producing-medial-and-medial-whole" => LineKind::ProducingMedialAndMedialWhole,
            _ => return Err(format!("unknown line kind {s:?}")),
        })
    }
}

impl From<LineKind> for String {
    fn from(k: LineKind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for LineKind {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        let all = [
            LineKind::Rational,
            LineKind::Medial,
            LineKind::Binomial(3),
            LineKind::FirstBimedial,
            LineKind::SecondBimedial,
            LineKind::Major,
            LineKind::SideOfRationalPlusMedial,
            LineKind::SideOfTwoMedials,
            LineKind::Apotome(6),
            LineKind::FirstApotomeOfMedial,
            LineKind::SecondApotomeOfMedial,
            LineKind::Minor,
            LineKind::ProducingRationalAndMedialWhole,
            LineKind::ProducingMedialAndMedialWhole,
        ];
        for k in all {
            assert_eq!(k.to_string().parse::<LineKind>().unwrap(), k);
            let json = serde_json::to_string(&k).unwrap();
            assert_eq!(serde_json::from_str::<LineKind>(&json).unwrap(), k);
        }
        assert!("apotome-7".parse::<LineKind>().is_err());
        assert_eq!(LineKind::Apotome(4).to_string(), "apotome-4");
    }
}

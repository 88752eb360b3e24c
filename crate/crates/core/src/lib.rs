//! Exact anthyphairesis (reciprocal-subtraction expansion) of ratios of
//! quadratic magnitudes, with the machinery built on it: period detection,
//! convergents, a proportion oracle, the periodicity theorems for surds and
//! for the application of areas in defect, the Pell equation, and the
//! taxonomy of apotomes, binomials and the irrational lines they produce.
//!
//! Everything is generic over an integer type `T: Int` (machine integers or
//! `BigInt`); the aliases below fix `T = BigInt`.

pub mod anth;
pub mod expr;
pub mod kernel;
pub mod pell;
pub mod periodicity;
pub mod proportion;
pub mod scalar;
pub mod taxonomy;
pub mod verify;

pub use anth::{anth_expand, default_cap, AnthError, CFExpansion};
pub use expr::{parse_expr, ParseError};
pub use kernel::{KernelError, Surd};
pub use pell::{pell_fundamental, PellError, PellSolution};
pub use scalar::Int;
pub use taxonomy::{LineError, LineKind, Sign};

use num_bigint::BigInt;

/// Arbitrary-precision rational.
pub type Rational = num_rational::Ratio<BigInt>;
/// `u + v·√m` over arbitrary-precision rationals.
pub type QuadSurd = Surd<BigInt>;
/// `q·√m`, a line rational in square.
pub type RootRational = kernel::RootRational<BigInt>;
/// A finite sum of rational multiples of square roots.
pub type Radical = kernel::Radical<BigInt>;
/// Expansion with arbitrary-precision quotients.
pub type Expansion = CFExpansion<BigInt>;
/// An apotome or binomial with arbitrary-precision terms.
pub type TwoTermLine = taxonomy::TwoTermLine<BigInt>;
/// `√A ± √B` with arbitrary-precision term-squares.
pub type AlogosLine = taxonomy::AlogosLine<BigInt>;

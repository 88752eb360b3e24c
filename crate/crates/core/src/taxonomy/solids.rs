//! Sides of the icosahedron and dodecahedron inscribed in a sphere of
//! rational diameter, computed from vertex coordinates in `Q(√5)`.

use num_rational::Ratio;

use super::alogos::{alogos_from_apotome, classify_alogos};
use super::two_term::TwoTermLine;
use super::{LineError, LineKind};
use crate::kernel::Radical;
use crate::scalar::{int, Int};

type Point<T> = [Radical<T>; 3];

fn golden<T: Int>() -> Radical<T> {
    let half = Ratio::new(T::one(), int(2));
    &Radical::rational(half.clone()) + &Radical::term(half, int(5))
}

fn cyclic<T: Int>(p: Point<T>) -> [Point<T>; 3] {
    let [x, y, z] = p;
    [
        [x.clone(), y.clone(), z.clone()],
        [y.clone(), z.clone(), x.clone()],
        [z, x, y],
    ]
}

/// All sign choices on the nonzero coordinates of `(0, a, b)`, cycled.
fn zero_a_b<T: Int>(a: &Radical<T>, b: &Radical<T>) -> Vec<Point<T>> {
    let mut out = Vec::new();
    for sa in [a.clone(), -a] {
        for sb in [b.clone(), -b] {
            out.extend(cyclic([Radical::zero(), sa.clone(), sb]));
        }
    }
    out
}

fn dist_sq<T: Int>(p: &Point<T>, q: &Point<T>) -> Radical<T> {
    p.iter().zip(q).fold(Radical::zero(), |acc, (a, b)| &acc + &(a - b).square())
}

/// `(edge², diameter²)` over all vertex pairs.
fn extremes<T: Int>(pts: &[Point<T>]) -> (Radical<T>, Radical<T>) {
    let mut lo: Option<Radical<T>> = None;
    let mut hi: Option<Radical<T>> = None;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let d = dist_sq(p, q);
            if lo.as_ref().map_or(true, |l| d < *l) {
                lo = Some(d.clone());
            }
            if hi.as_ref().map_or(true, |h| d > *h) {
                hi = Some(d);
            }
        }
    }
    (lo.expect("at least two vertices"), hi.expect("at least two vertices"))
}

fn side_sq_unit_diameter<T: Int>(pts: &[Point<T>]) -> Result<Radical<T>, LineError> {
    let (edge, diam) = extremes(pts);
    Ok(edge.checked_div(&diam)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcosahedronCheck<T: Int> {
    /// Side squared for unit diameter.
    pub side_sq: Radical<T>,
    /// `side_sq` read as a two-term line.
    pub area: TwoTermLine<T>,
    pub kind: LineKind,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DodecahedronCheck<T: Int> {
    /// Side squared for unit diameter.
    pub side_sq: Radical<T>,
    /// Side for unit diameter.
    pub side: TwoTermLine<T>,
    /// Side for unit circumradius.
    pub side_unit_radius: TwoTermLine<T>,
    pub order: u8,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolidReport<T: Int> {
    pub icosahedron: IcosahedronCheck<T>,
    pub dodecahedron: DodecahedronCheck<T>,
}

impl<T: Int> SolidReport<T> {
    pub fn all_pass(&self) -> bool {
        self.icosahedron.passed && self.dodecahedron.passed
    }
}

fn icosahedron<T: Int>() -> Result<IcosahedronCheck<T>, LineError> {
    let pts = zero_a_b(&Radical::one(), &golden());
    let side_sq = side_sq_unit_diameter(&pts)?;
    let area = TwoTermLine::from_value(&side_sq)?;
    let omega = alogos_from_apotome(&area)?;
    let kind = classify_alogos(&omega)?;
    let expected = &Radical::rational(Ratio::new(int(1), int(2)))
        - &Radical::term(Ratio::new(int(1), int(10)), int(5));
    let passed = pts.len() == 12 && side_sq == expected && kind == LineKind::Minor;
    Ok(IcosahedronCheck { side_sq, area, kind, passed })
}

fn dodecahedron<T: Int>() -> Result<DodecahedronCheck<T>, LineError> {
    let phi = golden::<T>();
    let mut pts = zero_a_b(&phi.recip()?, &phi);
    for x in [1, -1] {
        for y in [1, -1] {
            for z in [1, -1] {
                pts.push([x, y, z].map(|c| Radical::rational(Ratio::from_integer(int(c)))));
            }
        }
    }
    let side_sq = side_sq_unit_diameter(&pts)?;
    let sixth = Ratio::new(T::one(), int(6));
    let side_value = &Radical::term(sixth.clone(), int(15)) - &Radical::term(sixth, int(3));
    let side = TwoTermLine::from_value(&side_value)?;
    let side_unit_radius = side.scale(&Ratio::from_integer(int(2)))?;
    let four = Ratio::from_integer(int(4));
    let passed = pts.len() == 20
        && side.value().square() == side_sq
        && side_unit_radius.value().square() == side_sq.scale(&four)
        && side.is_apotome()
        && side.order() == 6
        && side_unit_radius.order() == 6;
    Ok(DodecahedronCheck {
        order: side.order(),
        side_sq,
        side,
        side_unit_radius,
        passed,
    })
}

/// The icosahedron side is minor and the dodecahedron side is a sixth
/// apotome when the circumscribed sphere has rational diameter.
pub fn solid_side_checks<T: Int>() -> Result<SolidReport<T>, LineError> {
    Ok(SolidReport {
        icosahedron: icosahedron()?,
        dodecahedron: dodecahedron()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn solids_pass() {
        let r = solid_side_checks::<BigInt>().unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.icosahedron.side_sq.to_string(), "1/2 - 1/10*sqrt(5)");
        assert_eq!(r.icosahedron.kind, LineKind::Minor);
        assert_eq!(r.dodecahedron.side_sq.to_string(), "1/2 - 1/6*sqrt(5)");
        assert_eq!(r.dodecahedron.side_unit_radius.to_string(), "1/3*sqrt(15) - 1/3*sqrt(3)");
        assert_eq!(r.dodecahedron.order, 6);
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = golden::<i64>();
        assert_eq!(phi.square(), &phi + &Radical::one());
    }
}

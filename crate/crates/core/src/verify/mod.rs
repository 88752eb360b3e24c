//! Seeded verification suites over random and exhaustive instances.
//!
//! Every suite is deterministic for a fixed `(seed, count)`. A check passes
//! when it ran on at least one instance and none failed; errors raised by
//! the library count as failures.

pub mod gen;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::anth::{
    anth_expand, anth_step, default_cap, logos_pair, periodic_root, purely_periodic_to_quadratic, remainder_formula,
    remainders, CFExpansion,
};
use crate::kernel::arith::{is_perfect_square, square_free_part};
use crate::kernel::{commensurable, Radical, RootRational, Surd};
use crate::pell::{pell_fundamental, pell_number, x97_squaring_check};
use crate::periodicity::{defect_periodicity, defect_solve, palindrome_check, right_triangle_lemma, theorem1_check, x17_x18_check};
use crate::proportion::{gnomon_preservation, proportion_laws, ratio_equal, scale_invariance, Law, Outcome, TheaeteteanRatio};
use crate::taxonomy::{
    alogos_from_apotome, apotome_from_alogos, classify_alogos, conjugate, expected_kind, invariance_check,
    is_medial_area, medial_difference_not_rational, solid_side_checks, uniqueness_check, Sign,
};
use gen::{Gen, Q};

type S = Surd<BigInt>;
type Rad = Radical<BigInt>;
type RR = RootRational<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

/// Registered suite names; `all` runs each in turn.
pub const SUITES: [&str; 12] = [
    "palindrome",
    "periodicity",
    "defect",
    "pell",
    "proportion",
    "convergents",
    "conjugation",
    "alogos",
    "lines",
    "kernel",
    "gcd",
    "solids",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} seed {} count {}", self.suite, self.seed, self.count)?;
        for c in &self.checks {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "  {:<34} {:>6} instances {:>4} failures  {verdict}", c.name, c.instances, c.failures)?;
            if let Some(why) = &c.first_failure {
                writeln!(f, "    first failure: {why}")?;
            }
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct Tally {
    result: CheckResult,
}

impl Tally {
    fn new(name: &str) -> Self {
        Self {
            result: CheckResult {
                name: name.to_string(),
                instances: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    /// `Ok(true)` passes; `Ok(false)` and errors fail, described by `ctx`.
    fn record<E: fmt::Display>(&mut self, outcome: Result<bool, E>, ctx: impl FnOnce() -> String) {
        self.result.instances += 1;
        let why = match outcome {
            Ok(true) => return,
            Ok(false) => ctx(),
            Err(e) => format!("{}: {e}", ctx()),
        };
        self.result.failures += 1;
        self.result.first_failure.get_or_insert(why);
    }

    fn done(self) -> CheckResult {
        self.result
    }
}

fn ok<E>(b: bool) -> Result<bool, E> {
    Ok(b)
}

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n.into(), d.into())
}

/// Runs one registered suite, or all of them for `"all"`.
pub fn run_suite(name: &str, seed: u64, count: usize) -> Result<Vec<SuiteReport>, VerifyError> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s, seed, count)).collect());
    }
    if !SUITES.contains(&name) {
        return Err(VerifyError::UnknownSuite(name.to_string()));
    }
    Ok(vec![run_one(name, seed, count)])
}

fn run_one(name: &str, seed: u64, count: usize) -> SuiteReport {
    let mut g = Gen::new(seed);
    let checks = match name {
        "palindrome" => palindrome(count),
        "periodicity" => periodicity(&mut g, count),
        "defect" => defect(&mut g, count),
        "pell" => pell(&mut g, count),
        "proportion" => proportion(&mut g, count),
        "convergents" => convergent_checks(&mut g, count),
        "conjugation" => conjugation(&mut g, count),
        "alogos" => alogos(&mut g, count),
        "lines" => lines(&mut g, count),
        "kernel" => kernel(&mut g, count),
        "gcd" => gcd(&mut g, count),
        "solids" => solids(),
        _ => unreachable!("suite names are validated by run_suite"),
    };
    SuiteReport {
        suite: name.to_string(),
        seed,
        count,
        checks,
    }
}

/// Every non-square `N ≤ count`.
fn palindrome(count: usize) -> Vec<CheckResult> {
    let mut t = Tally::new("palindromic-period");
    for n in 2..=count as i64 {
        if is_perfect_square(&n) {
            continue;
        }
        t.record(palindrome_check(&BigInt::from(n)).map(|(_, ok)| ok), || format!("N = {n}"));
    }
    vec![t.done()]
}

fn periodicity(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut period = Tally::new("surd-ratio-periodic");
    let mut logos = Tally::new("logos-criterion-detects-period");
    let mut irrational = Tally::new("periodic-implies-incommensurable");
    for _ in 0..count {
        let (m, n) = loop {
            let (m, n) = (g.int(1, 50), g.int(1, 50));
            if !is_perfect_square(&(m * n)) {
                break (m, n);
            }
        };
        let ctx = || format!("M = {m}, N = {n}");
        let cf = theorem1_check(&BigInt::from(m), &BigInt::from(n), 10_000);
        period.record(cf.as_ref().map(|cf| cf.is_periodic()).map_err(|e| e.to_string()), ctx);
        let a = S::sqrt(q(n, m)).expect("N/M > 0");
        let b = S::one();
        logos.record(logos_pair(&a, &b).map(|p| p.period_len() > 0), ctx);
        irrational.record(commensurable(&a, &b).map(|c| !c), ctx);
    }
    vec![period.done(), logos.done(), irrational.done()]
}

fn defect(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut periodic = Tally::new("defect-ratio-periodic");
    let mut finite = Tally::new("defect-ratio-rational-when-theta-commensurable");
    let mut x17 = Tally::new("parts-commensurable-iff-theta");
    let mut triangle = Tally::new("right-triangle-lemma");
    for _ in 0..count {
        let (zeta, eta) = g.defect_pair();
        let ctx = || format!("zeta = {zeta}, eta = {eta}");
        periodic.record(defect_periodicity(&zeta, &eta).map(|cf| cf.is_periodic()), ctx);
        // with θ ~ ζ the ratio ζ : x is rational
        let order = g.int(1, 2) as u8;
        let line = g.two_term(order, Sign::Minus);
        finite.record(
            defect_solve(line.zeta(), line.eta()).map(|sol| sol.ratio().is_rational()),
            || line.to_string(),
        );
        let order = g.int(1, 6) as u8;
        let line = g.two_term(order, Sign::Minus);
        // x17_x18_check enforces the biconditional; the flag must follow criterion (ii)
        x17.record(
            x17_x18_check(line.zeta(), line.eta()).map(|(_, whole)| whole == (order <= 3)),
            || line.to_string(),
        );
        let m = g.non_square(2, 30);
        let (f, gg) = (g.pos_surd(m), g.pos_surd(m));
        triangle.record(right_triangle_lemma(&f, &gg).map(|_| true), || format!("f = {f}, g = {gg}"));
    }
    vec![periodic.done(), finite.done(), x17.done(), triangle.done()]
}

fn pell(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut fundamental = Tally::new("pell-fundamental");
    for n in 2..=count as i64 {
        if is_perfect_square(&n) {
            continue;
        }
        fundamental.record(
            pell_fundamental(&BigInt::from(n)).map(|s| s.y.clone() * &s.y - BigInt::from(n) * &s.x * &s.x == 1.into()),
            || format!("N = {n}"),
        );
    }
    let mut squaring = Tally::new("pell-number-squares");
    let mut product = Tally::new("pell-number-multiplicative");
    for _ in 0..count {
        let order = [1u8, 2, 4, 5][g.int(0, 3) as usize];
        let line = g.two_term(order, Sign::Minus);
        squaring.record(x97_squaring_check(&line), || line.to_string());
        let m = g.non_square(2, 50);
        let (a, b) = (Rad::from(g.pos_surd(m)), Rad::from(g.pos_surd(m)));
        let lhs = pell_number(&(&a * &b));
        let rhs = pell_number(&a).and_then(|x| pell_number(&b).map(|y| x * y));
        product.record(lhs.and_then(|l| rhs.map(|r| l == r)), || format!("{a}, {b}"));
    }
    vec![fundamental.done(), squaring.done(), product.done()]
}

fn ratio(a: &S, b: &S) -> TheaeteteanRatio<BigInt> {
    TheaeteteanRatio::new(a.clone(), b.clone()).expect("generated magnitudes are positive")
}

fn proportion(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut cross = Tally::new("equal-ratio-iff-cross-product");
    let mut anth_equal = Tally::new("proportional-expansions-agree");
    let mut cancel = Tally::new("cancellation");
    let mut transitive = Tally::new("transitivity");
    let mut laws: Vec<Tally> = Law::ALL.iter().map(|l| Tally::new(l.name())).collect();
    let mut scale = Tally::new("scale-invariance");
    let mut gnomon = Tally::new("gnomon-preservation");
    for i in 0..count {
        let m = g.non_square(2, 30);
        let (a, b, c) = (g.pos_surd(m), g.pos_surd(m), g.pos_surd(m));
        let d = (&b * &c).checked_div(&a).expect("a > 0");
        let ctx = || format!("a = {a}, b = {b}, c = {c}");

        // half the quadruples are proportional
        let d2 = if i % 2 == 0 { d.clone() } else { g.pos_surd(m) };
        cross.record(ratio_equal(&ratio(&a, &b), &ratio(&c, &d2)).map(|_| true), ctx);
        anth_equal.record(
            ratio(&a, &b).anth().and_then(|x| ratio(&c, &d).anth().map(|y| x == y)),
            ctx,
        );

        // (a, b) ~ (a, c) only when b = c
        let c2 = if i % 2 == 0 { b.clone() } else { c.clone() };
        cancel.record(ratio_equal(&ratio(&a, &b), &ratio(&a, &c2)).map(|eq| eq == (b == c2)), ctx);

        let e = g.pos_surd(m);
        let f = (&b * &e).checked_div(&a).expect("a > 0");
        transitive.record(
            ratio_equal(&ratio(&c, &d), &ratio(&e, &f)).map(|eq| eq),
            || format!("{ctx_s}, e = {e}", ctx_s = ctx()),
        );

        match proportion_laws(&a, &b, &c, &d) {
            Ok(report) => {
                for (tally, law) in laws.iter_mut().zip(Law::ALL) {
                    match report.outcome(law) {
                        Some(Outcome::NotApplicable) => {}
                        Some(o) => tally.record(ok::<String>(o == Outcome::Pass), ctx),
                        None => tally.record(ok::<String>(false), ctx),
                    }
                }
            }
            Err(err) => {
                for tally in &mut laws {
                    tally.record(Err::<bool, _>(&err), ctx);
                }
            }
        }

        let k = g.pos_surd(m);
        scale.record(scale_invariance(&a, &b, &k), ctx);

        let coef = (g.int(1, 5), g.int(0, 5), g.int(1, 5));
        let disc = coef.1 * coef.1 + 4 * coef.0 * coef.2;
        let k_field = square_free_part(&disc);
        let t = S::normalize(
            q(coef.1, 2 * coef.0),
            q(1, 2 * coef.0),
            Ratio::from_integer(disc.into()),
        )
        .expect("disc > 0");
        let bb = g.pos_surd(k_field);
        let aa = t.checked_mul(&bb).expect("one field");
        let cc = g.pos_surd(k_field);
        gnomon.record(
            gnomon_preservation((coef.0.into(), coef.1.into(), coef.2.into()), &aa, &bb, &cc)
                .map(|dd| dd == bb.checked_mul(&cc).and_then(|x| x.checked_div(&aa)).expect("one field")),
            || format!("coefficients {coef:?}, a = {aa}, b = {bb}, c = {cc}"),
        );
    }
    let mut out = vec![cross.done(), anth_equal.done(), cancel.done(), transitive.done()];
    out.extend(laws.into_iter().map(Tally::done));
    out.extend([scale.done(), gnomon.done()]);
    out
}

/// `e_n` by repeated single steps, for `n ≤ max` or until the expansion ends.
fn iterated_remainders(a: &S, b: &S, max: usize) -> Vec<S> {
    let mut out = vec![b.clone()];
    let (mut x, mut y) = (a.clone(), b.clone());
    while out.len() <= max && !y.is_zero() {
        let (_, r) = anth_step(&x, &y).expect("remainders stay positive");
        out.push(r.clone());
        x = std::mem::replace(&mut y, r);
    }
    out
}

fn convergent_checks(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut formula = Tally::new("remainder-formula");
    for _ in 0..count {
        let m = g.non_square(2, 30);
        let (a, b) = (g.pos_surd(m), g.pos_surd(m));
        let direct = iterated_remainders(&a, &b, 20);
        let agrees = direct
            .iter()
            .enumerate()
            .map(|(n, e)| remainder_formula(&a, &b, n).map(|f| f == *e))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.into_iter().all(|x| x));
        formula.record(agrees, || format!("a = {a}, b = {b}"));
    }
    let mut round_trip = Tally::new("periodic-quadratic-round-trip");
    for len in 1..=4u32 {
        for code in 0..4usize.pow(len) {
            let period: Vec<BigInt> = (0..len).map(|i| BigInt::from(1 + (code / 4usize.pow(i)) % 4)).collect();
            let check = || -> Result<bool, String> {
                let (a, b, c) = purely_periodic_to_quadratic(&period).map_err(|e| e.to_string())?;
                let root = periodic_root(&a, &b, &c);
                let lhs = root.square().scale(&Ratio::from_integer(a.clone()));
                let rhs = root
                    .scale(&Ratio::from_integer(b.clone()))
                    .checked_add(&S::integer(c.clone()))
                    .map_err(|e| e.to_string())?;
                let cf = anth_expand(&root, default_cap(&root)).map_err(|e| e.to_string())?;
                let expected = CFExpansion::new(vec![], period.clone()).map_err(|e| e.to_string())?;
                Ok(lhs == rhs && cf == expected)
            };
            round_trip.record(check(), || format!("period {period:?}"));
        }
    }
    vec![formula.done(), round_trip.done()]
}

fn conjugation(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut product = Tally::new("conjugate-product-rational");
    let mut order = Tally::new("conjugate-keeps-order");
    for ord in 1..=6 {
        for _ in 0..count {
            let line = g.two_term(ord, Sign::Minus);
            let ctx = || line.to_string();
            product.record(ok::<String>((&line.value() * &line.mirror().value()).is_rational()), ctx);
            order.record(
                conjugate(&line).map(|d| d.order() == ord && (&line.value() * &d.value()).is_rational()),
                ctx,
            );
        }
    }
    vec![product.done(), order.done()]
}

fn alogos(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut round_trip = Tally::new("alogos-round-trip");
    let mut table = Tally::new("kind-matches-order");
    let mut invariance = Tally::new("kind-invariant-under-scaling");
    let mut unique = Tally::new("annex-unique");
    for ord in 1..=6u8 {
        for sign in [Sign::Minus, Sign::Plus] {
            for i in 0..count {
                let line = g.two_term(ord, sign);
                let ctx = || line.to_string();
                let omega = match alogos_from_apotome(&line) {
                    Ok(o) => o,
                    Err(e) => {
                        round_trip.record(Err::<bool, _>(e), ctx);
                        continue;
                    }
                };
                round_trip.record(apotome_from_alogos(&omega).map(|back| back == line), ctx);
                table.record(
                    classify_alogos(&omega).map(|k| k.family() == expected_kind(ord, sign)),
                    ctx,
                );
                let s = g.pos_ratio(20, 20);
                invariance.record(invariance_check(&omega, &s), ctx);
                if i < 2 {
                    unique.record(uniqueness_check(&omega), ctx);
                }
            }
        }
    }
    vec![round_trip.done(), table.done(), invariance.done(), unique.done()]
}

fn lines(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut x20 = Tally::new("rational-area-on-rational-line");
    let mut x22 = Tally::new("medial-area-on-rational-line");
    let mut x23 = Tally::new("commensurable-with-medial");
    let mut x26 = Tally::new("medial-difference-not-rational");
    let mut x27 = Tally::new("medial-lines-rational-rectangle");
    for _ in 0..count {
        let rho = RR::new(g.pos_ratio(12, 6), BigInt::from(g.square_free(2, 30))).expect("square-free radicand");
        let area = g.pos_ratio(30, 7);
        // breadth = area / ρ
        let breadth = RR::rational(area.clone()).expect("rational").div(&rho);
        x20.record(ok::<String>(breadth.commensurable_with(&rho)), || format!("{area} on {rho}"));

        let medial_line = RR::new(g.pos_ratio(12, 6), BigInt::from(g.square_free(2, 30))).expect("square-free radicand");
        let medial = medial_line.to_radical();
        x22.record(ok::<String>(!medial_line.div(&rho).commensurable_with(&rho)), || format!("{medial} on {rho}"));

        let s = g.pos_ratio(9, 9);
        x23.record(ok::<String>(is_medial_area(&medial.scale(&(s.clone() * s)))), || medial.to_string());

        let other = Rad::term(g.pos_ratio(12, 6), BigInt::from(g.non_square(2, 30)));
        x26.record(
            ok::<String>(medial_difference_not_rational(&medial, &other) == Some(true)),
            || format!("{medial}, {other}"),
        );

        // h² = ζη, x = ηh/ζ: both medial and x·h = η²
        let ord = [1u8, 2, 4, 5][g.int(0, 3) as usize];
        let line = g.two_term(ord, Sign::Minus);
        let (zeta, eta) = (line.zeta(), line.eta());
        let h_sq = zeta.mul(eta).to_radical();
        let x_sq = h_sq.scale(&(eta.square() / zeta.square()));
        let xh_sq = &x_sq * &h_sq;
        x27.record(
            ok::<String>(
                is_medial_area(&h_sq)
                    && is_medial_area(&x_sq)
                    && xh_sq == Rad::rational(eta.square() * eta.square()),
            ),
            || line.to_string(),
        );
    }
    vec![x20.done(), x22.done(), x23.done(), x26.done(), x27.done()]
}

fn kernel(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut norm = Tally::new("norm-multiplicative");
    let mut scaling = Tally::new("commensurable-under-scaling");
    let mut transitive = Tally::new("commensurable-transitive");
    let mut mixed = Tally::new("commensurable-then-incommensurable");
    let mut sums = Tally::new("sum-of-commensurables");
    let mut sum_incomm = Tally::new("sum-with-incommensurable-part");
    for _ in 0..count {
        let m = g.non_square(2, 30);
        let (a, b) = (g.pos_surd(m), g.pos_surd(m));
        let ctx = || format!("a = {a}, b = {b}");
        norm.record(a.checked_mul(&b).map(|p| p.norm() == a.norm() * b.norm()), ctx);

        let (s, t) = (g.pos_ratio(20, 9), g.pos_ratio(20, 9));
        let a2 = a.scale(&s);
        let a3 = a2.scale(&t);
        scaling.record(commensurable(&a, &a2), ctx);
        // a ~ a2 and a2 ~ a3
        transitive.record(commensurable(&a, &a3), ctx);

        let c = g.irrational_surd(m);
        if !commensurable(&a2, &c).unwrap_or(true) {
            mixed.record(commensurable(&a, &c).map(|x| !x), || format!("a = {a}, c = {c}"));
        }

        let sum = &a + &a2;
        sums.record(
            commensurable(&sum, &a).and_then(|x| commensurable(&sum, &a2).map(|y| x && y)),
            ctx,
        );

        // rational r plus an irrational multiple of √m stays incommensurable with r
        let r = S::rational(g.pos_ratio(20, 9));
        let irr = S::sqrt_of(m).scale(&g.pos_ratio(20, 9));
        sum_incomm.record(
            commensurable(&(&r + &irr), &r).map(|x| !x),
            || format!("r = {r}, part = {irr}"),
        );
    }
    vec![norm.done(), scaling.done(), transitive.done(), mixed.done(), sums.done(), sum_incomm.done()]
}

fn gcd(g: &mut Gen, count: usize) -> Vec<CheckResult> {
    let mut last = Tally::new("last-divisor-is-gcd");
    let mut finite = Tally::new("finite-iff-rational");
    for _ in 0..count {
        let (a, b) = (g.int(1, 1_000_000), g.int(1, 1_000_000));
        let ctx = || format!("a = {a}, b = {b}");
        let run = remainders(&S::from_i64(a), &S::from_i64(b)).map(|rs| {
            let mut divisor = S::from_i64(b);
            for (_, r) in rs {
                if r.is_zero() {
                    break;
                }
                divisor = r;
            }
            divisor == S::from_i64(a.gcd(&b))
        });
        last.record(run, ctx);

        let m = g.non_square(2, 30);
        let x = if g.coin() { S::rational(g.pos_ratio(1000, 1000)) } else { g.pos_surd(m) };
        finite.record(
            anth_expand(&x, default_cap(&x)).map(|cf| cf.is_finite() == x.is_rational()),
            || x.to_string(),
        );
    }
    vec![last.done(), finite.done()]
}

fn solids() -> Vec<CheckResult> {
    let mut ico = Tally::new("icosahedron-side-minor");
    let mut dodeca = Tally::new("dodecahedron-side-apotome");
    match solid_side_checks::<BigInt>() {
        Ok(r) => {
            ico.record(ok::<String>(r.icosahedron.passed), || r.icosahedron.side_sq.to_string());
            dodeca.record(ok::<String>(r.dodecahedron.passed), || r.dodecahedron.side.to_string());
        }
        Err(e) => {
            ico.record(Err::<bool, _>(&e), String::new);
            dodeca.record(Err::<bool, _>(&e), String::new);
        }
    }
    vec![ico.done(), dodeca.done()]
}

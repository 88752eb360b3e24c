//! `anth`: expansions, Pell tables, line classification, conjugation and
//! verification reports over exact quadratic surds.

mod render;

use std::process::ExitCode;

use anth_core::anth::{anth_expand, convergents, remainders, AnthError};
use anth_core::pell::{pell_fundamental, PellError};
use anth_core::periodicity::TheoremError;
use anth_core::taxonomy::{
    alogos_from_apotome, classify_alogos, conjugate, ClassificationRow, LineError, LineKind, TwoTermLine,
};
use anth_core::verify::{run_suite, VerifyError};
use anth_core::{default_cap, parse_expr, Radical};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use render::{
    ClassifyOut, ConjugateOut, ConvergentOut, ExpandOut, PellOut, RemainderOut, Render, SolidsOut,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "anth", version, about = "Exact anthyphairesis, Pell tables and irrational-line classification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Step cap for expansions; defaults to a bound that always suffices.
    #[arg(long, env = "ANTH_CAP", global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Expand a surd expression, e.g. "(1+sqrt(5))/2".
    Expand {
        expr: String,
        /// Also list the first N convergents.
        #[arg(long, value_name = "N")]
        convergents: Option<usize>,
        /// Also list the first N remainders of the ratio x : 1.
        #[arg(long, value_name = "N")]
        remainders: Option<usize>,
    },
    /// Fundamental solutions of y² = N·x² + 1 for N in "A..B" or a single N.
    Pell { range: String },
    /// Classify a surd expression as a line relative to the unit line.
    Classify {
        expr: String,
        /// Read the value as the square of the line to classify.
        #[arg(long)]
        as_square: bool,
    },
    /// The reciprocal conjugate of an apotome or binomial.
    Conjugate { expr: String },
    /// Run a seeded verification suite, or "all".
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Side checks for the icosahedron and dodecahedron.
    Solids,
}

enum Failure {
    Usage(String),
    /// A failed suite, or a failed internal self-check.
    Verification(Option<String>),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<AnthError> for Failure {
    fn from(e: AnthError) -> Self {
        match e {
            AnthError::CapExhausted { .. } => Failure::Cap(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<PellError> for Failure {
    fn from(e: PellError) -> Self {
        match e {
            PellError::Anth(a) => a.into(),
            PellError::CheckFailed(_) => Failure::Verification(Some(e.to_string())),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<LineError> for Failure {
    fn from(e: LineError) -> Self {
        match e {
            LineError::Theorem(TheoremError::Anth(a)) => a.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn parse(expr: &str) -> Result<Radical, Failure> {
    parse_expr(expr).map_err(|e| Failure::Usage(format!("cannot parse {expr:?}: {e}")))
}

fn run_expand(expr: &str, cap: Option<usize>, n_conv: Option<usize>, n_rem: Option<usize>, fmt: Format) -> Out {
    let value = parse(expr)?;
    let x = value
        .to_surd()
        .map_err(|_| Failure::Usage(format!("{value} does not lie in a single quadratic field")))?;
    let cf = anth_expand(&x, cap.unwrap_or_else(|| default_cap(&x)))?;
    let conv = n_conv.map(|n| {
        convergents(&cf, n)
            .rows()
            .iter()
            .map(|r| ConvergentOut { n: r.n, p: r.p.to_string(), q: r.q.to_string() })
            .collect()
    });
    let rem = match n_rem {
        Some(n) => Some(
            remainders(&x, &anth_core::QuadSurd::one())?
                .take(n)
                .enumerate()
                .map(|(i, (_, e))| RemainderOut { n: i + 1, value: e.to_string() })
                .collect(),
        ),
        None => None,
    };
    let out = ExpandOut {
        input: expr.to_string(),
        value: value.to_string(),
        expansion: cf.to_string(),
        head: cf.head().iter().map(ToString::to_string).collect(),
        period: cf.period().iter().map(ToString::to_string).collect(),
        convergents: conv,
        remainders: rem,
    };
    Ok(out.render(fmt))
}

/// `"A..B"` (inclusive) or `"N"`.
fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("bad range {s:?}: expected A..B or N"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a > b {
        return Err(Failure::Usage(format!("empty range {s:?}")));
    }
    if a < 2 {
        return Err(Failure::Usage(format!("range {s:?} must start at 2 or more")));
    }
    Ok((a, b))
}

fn run_pell(range: &str, fmt: Format) -> Out {
    let (a, b) = parse_range(range)?;
    let mut rows = Vec::new();
    for n in a..=b {
        match pell_fundamental(&BigInt::from(n)) {
            Ok(s) => rows.push(PellOut {
                n: s.n.to_string(),
                x: s.x.to_string(),
                y: s.y.to_string(),
                period_len: s.period_len,
            }),
            Err(PellError::SquareN(_)) => eprintln!("N={n} skipped: square"),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(rows.render(fmt))
}

/// Rows for the value itself, or with `as_square` for the value read as
/// a square and then for its side.
fn classify_value(value: &Radical, as_square: bool) -> Result<Vec<(&'static str, ClassificationRow)>, Failure> {
    let shown = value.to_string();
    if !value.is_positive() {
        return Err(Failure::Usage(format!("{shown} is not a positive magnitude")));
    }
    let side_shown = format!("sqrt({shown})");
    // a single term c·√k is rational in square
    let single = value.as_rational().is_some() || value.single_term().is_some();
    if single {
        let row = ClassificationRow::for_single_term(shown, LineKind::Rational);
        if !as_square {
            return Ok(vec![("line", row)]);
        }
        let kind = if value.is_rational() { LineKind::Rational } else { LineKind::Medial };
        return Ok(vec![("square", row), ("side", ClassificationRow::for_single_term(side_shown, kind))]);
    }
    let line = TwoTermLine::from_value(value)?;
    let row = ClassificationRow::for_two_term(&line);
    if !as_square {
        return Ok(vec![("line", row)]);
    }
    let omega = alogos_from_apotome(&line)?;
    let kind = classify_alogos(&omega)?;
    Ok(vec![("square", row), ("side", ClassificationRow::for_alogos(&omega, kind, &line))])
}

fn run_classify(expr: &str, as_square: bool, fmt: Format) -> Out {
    let rows = classify_value(&parse(expr)?, as_square)?;
    Ok(ClassifyOut { rows, roles: as_square }.render(fmt))
}

fn run_conjugate(expr: &str, fmt: Format) -> Out {
    let line = TwoTermLine::from_value(&parse(expr)?)?;
    let delta = conjugate(&line)?;
    let out = ConjugateOut {
        line: line.to_string(),
        conjugate: delta.to_string(),
        product: (&line.value() * &delta.value()).to_string(),
        order: delta.order(),
    };
    Ok(out.render(fmt))
}

fn run_verify(suite: &str, seed: u64, count: usize, fmt: Format) -> Result<(String, bool), Failure> {
    let reports = run_suite(suite, seed, count)?;
    let ok = reports.iter().all(|r| r.passed());
    Ok((reports.render(fmt), ok))
}

fn run_solids(fmt: Format) -> Result<(String, bool), Failure> {
    let r = anth_core::taxonomy::solid_side_checks::<BigInt>()?;
    let ok = r.all_pass();
    Ok((SolidsOut::from_report(&r).render(fmt), ok))
}

fn dispatch(cli: Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    let ok = |s: String| (s, true);
    match cli.cmd {
        Cmd::Expand { expr, convergents, remainders } => {
            run_expand(&expr, cli.cap, convergents, remainders, fmt).map(ok)
        }
        Cmd::Pell { range } => run_pell(&range, fmt).map(ok),
        Cmd::Classify { expr, as_square } => run_classify(&expr, as_square, fmt).map(ok),
        Cmd::Conjugate { expr } => run_conjugate(&expr, fmt).map(ok),
        Cmd::Verify { suite, seed, count } => run_verify(&suite, seed, count, fmt),
        Cmd::Solids => run_solids(fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(Failure::Verification(None).code())
            }
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Cap(m) | Failure::Verification(Some(m)) => eprintln!("error: {m}"),
                Failure::Verification(None) => {}
            }
            ExitCode::from(f.code())
        }
    }
}

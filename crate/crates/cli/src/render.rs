//! Text, JSON and CSV renderings of command results. Big integers are
//! strings in JSON and CSV.

use std::fmt::Write as _;

use anth_core::taxonomy::{ClassificationRow, SolidReport};
use anth_core::verify::SuiteReport;
use num_bigint::BigInt;
use serde::Serialize;

use crate::Format;

pub trait Render {
    fn text(&self) -> String;
    fn json(&self) -> serde_json::Value;
    /// Header then records.
    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>);

    fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Text => self.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let (header, rows) = self.csv();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).expect("in-memory write");
                for r in rows {
                    w.write_record(&r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        }
    }
}

fn to_json<S: Serialize>(v: &S) -> serde_json::Value {
    serde_json::to_value(v).expect("values serialize")
}

fn opt<S: ToString>(v: &Option<S>) -> String {
    v.as_ref().map_or_else(String::new, ToString::to_string)
}

#[derive(Serialize)]
pub struct ConvergentOut {
    pub n: usize,
    pub p: String,
    pub q: String,
}

#[derive(Serialize)]
pub struct RemainderOut {
    pub n: usize,
    pub value: String,
}

#[derive(Serialize)]
pub struct ExpandOut {
    pub input: String,
    pub value: String,
    pub expansion: String,
    pub head: Vec<String>,
    pub period: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergents: Option<Vec<ConvergentOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainders: Option<Vec<RemainderOut>>,
}

impl Render for ExpandOut {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.expansion);
        for c in self.convergents.iter().flatten() {
            writeln!(s, "convergent {} {}/{}", c.n, c.q, c.p).expect("string write");
        }
        for r in self.remainders.iter().flatten() {
            writeln!(s, "remainder {} {}", r.n, r.value).expect("string write");
        }
        s
    }

    fn json(&self) -> serde_json::Value {
        to_json(self)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = |field: &str, n: String, v: String| vec![field.to_string(), n, v];
        let mut rows = vec![
            row("value", String::new(), self.value.clone()),
            row("expansion", String::new(), self.expansion.clone()),
        ];
        rows.extend(self.head.iter().enumerate().map(|(i, k)| row("head", i.to_string(), k.clone())));
        rows.extend(self.period.iter().enumerate().map(|(i, k)| row("period", i.to_string(), k.clone())));
        for c in self.convergents.iter().flatten() {
            rows.push(row("convergent", c.n.to_string(), format!("{}/{}", c.q, c.p)));
        }
        for r in self.remainders.iter().flatten() {
            rows.push(row("remainder", r.n.to_string(), r.value.clone()));
        }
        (vec!["field", "n", "value"], rows)
    }
}

#[derive(Serialize)]
pub struct PellOut {
    pub n: String,
    pub x: String,
    pub y: String,
    pub period_len: usize,
}

impl Render for Vec<PellOut> {
    fn text(&self) -> String {
        self.iter().map(|r| format!("{} {} {} {}\n", r.n, r.x, r.y, r.period_len)).collect()
    }

    fn json(&self) -> serde_json::Value {
        to_json(self)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .iter()
            .map(|r| vec![r.n.clone(), r.x.clone(), r.y.clone(), r.period_len.to_string()])
            .collect();
        (vec!["n", "x", "y", "period_len"], rows)
    }
}

pub struct ClassifyOut {
    pub rows: Vec<(&'static str, ClassificationRow)>,
    /// Prefix text rows with their role.
    pub roles: bool,
}

impl Render for ClassifyOut {
    fn text(&self) -> String {
        self.rows
            .iter()
            .map(|(role, r)| if self.roles { format!("{role} {r}\n") } else { format!("{r}\n") })
            .collect()
    }

    fn json(&self) -> serde_json::Value {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|(role, r)| {
                serde_json::json!({
                    "role": role,
                    "value": r.value,
                    "kind": r.kind.to_string(),
                    "order": r.order,
                    "criterion_i": r.criterion_i.map(|c| c.to_string()),
                    "criterion_ii": r.criterion_ii,
                    "pell_number": r.pell_number,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .rows
            .iter()
            .map(|(role, r)| {
                vec![
                    role.to_string(),
                    r.value.clone(),
                    r.kind.to_string(),
                    opt(&r.order),
                    opt(&r.criterion_i),
                    opt(&r.criterion_ii),
                    opt(&r.pell_number),
                ]
            })
            .collect();
        (vec!["role", "value", "kind", "order", "criterion_i", "criterion_ii", "pell_number"], rows)
    }
}

#[derive(Serialize)]
pub struct ConjugateOut {
    pub line: String,
    pub conjugate: String,
    pub product: String,
    pub order: u8,
}

impl Render for ConjugateOut {
    fn text(&self) -> String {
        format!(
            "line {}\nconjugate {}\nproduct {}\norder {}\n",
            self.line, self.conjugate, self.product, self.order
        )
    }

    fn json(&self) -> serde_json::Value {
        to_json(self)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![self.line.clone(), self.conjugate.clone(), self.product.clone(), self.order.to_string()];
        (vec!["line", "conjugate", "product", "order"], vec![row])
    }
}

impl Render for Vec<SuiteReport> {
    fn text(&self) -> String {
        self.iter().map(|r| format!("{r}\n")).collect()
    }

    fn json(&self) -> serde_json::Value {
        to_json(self)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let mut rows = Vec::new();
        for r in self {
            for c in &r.checks {
                rows.push(vec![
                    r.suite.clone(),
                    r.seed.to_string(),
                    r.count.to_string(),
                    c.name.clone(),
                    c.instances.to_string(),
                    c.failures.to_string(),
                    c.passed().to_string(),
                ]);
            }
        }
        (vec!["suite", "seed", "count", "check", "instances", "failures", "passed"], rows)
    }
}

#[derive(Serialize)]
pub struct SolidsOut {
    pub icosahedron_side_sq: String,
    pub icosahedron_kind: String,
    pub icosahedron_passed: bool,
    pub dodecahedron_side_sq: String,
    pub dodecahedron_side: String,
    pub dodecahedron_side_unit_radius: String,
    pub dodecahedron_kind: String,
    pub dodecahedron_order: u8,
    pub dodecahedron_passed: bool,
}

impl SolidsOut {
    pub fn from_report(r: &SolidReport<BigInt>) -> Self {
        let (i, d) = (&r.icosahedron, &r.dodecahedron);
        Self {
            icosahedron_side_sq: i.side_sq.to_string(),
            icosahedron_kind: i.kind.to_string(),
            icosahedron_passed: i.passed,
            dodecahedron_side_sq: d.side_sq.to_string(),
            dodecahedron_side: d.side.to_string(),
            dodecahedron_side_unit_radius: d.side_unit_radius.to_string(),
            dodecahedron_kind: d.side.kind().to_string(),
            dodecahedron_order: d.order,
            dodecahedron_passed: d.passed,
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

impl Render for SolidsOut {
    fn text(&self) -> String {
        format!(
            "icosahedron side^2 {} kind {} {}\n\
             dodecahedron side^2 {} side {} side(unit radius) {} kind {} {}\n",
            self.icosahedron_side_sq,
            self.icosahedron_kind,
            verdict(self.icosahedron_passed),
            self.dodecahedron_side_sq,
            self.dodecahedron_side,
            self.dodecahedron_side_unit_radius,
            self.dodecahedron_kind,
            verdict(self.dodecahedron_passed),
        )
    }

    fn json(&self) -> serde_json::Value {
        to_json(self)
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = vec![
            vec![
                "icosahedron".into(),
                self.icosahedron_side_sq.clone(),
                String::new(),
                self.icosahedron_kind.clone(),
                String::new(),
                self.icosahedron_passed.to_string(),
            ],
            vec![
                "dodecahedron".into(),
                self.dodecahedron_side_sq.clone(),
                self.dodecahedron_side_unit_radius.clone(),
                self.dodecahedron_kind.clone(),
                self.dodecahedron_order.to_string(),
                self.dodecahedron_passed.to_string(),
            ],
        ];
        (vec!["solid", "side_sq_unit_diameter", "side_unit_radius", "kind", "order", "passed"], rows)
    }
}

//! Text and JSON renderings. Both are byte-deterministic unless timings are
//! requested.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use redisc_core::factorize::QhdCheck;
use redisc_core::{FactorizationReport, LemmaReport, Polynomial, RationalConstant, VarTable};
use serde::Serialize;

/// Converts polynomials from the computation table to the display table.
#[derive(Clone, Debug)]
pub struct Naming {
    display: Option<Arc<VarTable>>,
}

impl Naming {
    pub fn new(display: Option<Arc<VarTable>>) -> Self {
        Naming { display }
    }

    pub fn show(&self, p: &Polynomial) -> String {
        match &self.display {
            Some(t) => p.rename(t).expect("display table has the same shape").to_string(),
            None => p.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl From<&RationalConstant> for Fraction {
    fn from(c: &RationalConstant) -> Self {
        Fraction {
            num: c.numerator().to_string(),
            den: c.denominator().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QhdJson {
    pub actual: Option<u32>,
    pub expected: i64,
}

impl From<&QhdCheck> for QhdJson {
    fn from(q: &QhdCheck) -> Self {
        QhdJson {
            actual: q.actual,
            expected: q.expected,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremJson {
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub c: Option<Fraction>,
    #[serde(rename = "M")]
    pub m: Option<String>,
    #[serde(rename = "T")]
    pub t: Option<String>,
    pub qhd: BTreeMap<String, QhdJson>,
    pub checks: BTreeMap<String, bool>,
    pub witnesses: Vec<String>,
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl TheoremJson {
    pub fn new(rep: &FactorizationReport, naming: &Naming, timings: Option<BTreeMap<String, f64>>) -> Self {
        TheoremJson {
            n: rep.n,
            k: rep.k,
            d: rep.d,
            c: rep.c.as_ref().map(Fraction::from),
            m: rep.m.as_ref().map(|p| naming.show(p)),
            t: rep.t.as_ref().map(|p| naming.show(p)),
            qhd: rep.qhd.iter().map(|(k, v)| (k.clone(), v.into())).collect(),
            checks: rep.checks.clone(),
            witnesses: rep.witnesses.clone(),
            timings_ms: timings,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyJson {
    pub object: &'static str,
    pub n: usize,
    pub k: Option<usize>,
    pub terms: usize,
    pub poly: String,
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCaseJson {
    pub label: String,
    pub pass: bool,
    pub omegas: Vec<Fraction>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaJson {
    pub lemma: String,
    pub n: usize,
    pub passed: bool,
    pub cases: Vec<LemmaCaseJson>,
}

impl From<&LemmaReport> for LemmaJson {
    fn from(rep: &LemmaReport) -> Self {
        LemmaJson {
            lemma: rep.lemma.clone(),
            n: rep.n,
            passed: rep.passed(),
            cases: rep
                .cases
                .iter()
                .map(|c| LemmaCaseJson {
                    label: c.label.clone(),
                    pass: c.pass,
                    omegas: c.omegas.iter().map(Fraction::from).collect(),
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }
}

fn timings_text(out: &mut String, timings: &Option<BTreeMap<String, f64>>) {
    if let Some(t) = timings {
        for (name, ms) in t {
            let _ = writeln!(out, "time {name}: {ms:.3} ms");
        }
    }
}

pub fn theorem_text(j: &TheoremJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, k = {}", j.n, j.k);
    let _ = writeln!(out, "d = {}", j.d);
    match &j.c {
        Some(c) if c.den == "1" => _ = writeln!(out, "c = {}", c.num),
        Some(c) => _ = writeln!(out, "c = {}/{}", c.num, c.den),
        None => _ = writeln!(out, "c = (not extracted)"),
    }
    let _ = writeln!(out, "M = {}", j.m.as_deref().unwrap_or("(not extracted)"));
    let _ = writeln!(out, "T = {}", j.t.as_deref().unwrap_or("(not extracted)"));
    for (name, q) in &j.qhd {
        let actual = q.actual.map_or_else(|| "not quasi-homogeneous".to_string(), |a| a.to_string());
        let _ = writeln!(out, "qhd {name}: {actual} (formula {})", q.expected);
    }
    for (name, ok) in &j.checks {
        let _ = writeln!(out, "check {name}: {}", if *ok { "pass" } else { "FAIL" });
    }
    for w in &j.witnesses {
        let _ = writeln!(out, "witness {w}");
    }
    timings_text(&mut out, &j.timings_ms);
    let verdict = if j.checks.values().all(|&ok| ok) { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "result: {verdict}");
    out
}

pub fn poly_text(j: &PolyJson) -> String {
    let mut out = format!("{}\n", j.poly);
    timings_text(&mut out, &j.timings_ms);
    out
}

pub fn lemma_text(j: &LemmaJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", j.lemma);
    for c in &j.cases {
        let _ = write!(out, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.label);
        if !c.omegas.is_empty() {
            let omegas: Vec<String> = c
                .omegas
                .iter()
                .map(|f| if f.den == "1" { f.num.clone() } else { format!("{}/{}", f.num, f.den) })
                .collect();
            let _ = write!(out, "  omega = {}", omegas.join(", "));
        }
        if let Some(w) = &c.witness {
            let _ = write!(out, "  ({w})");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "result: {}", if j.passed { "PASS" } else { "FAIL" });
    out
}

//! Serialized forms of command results.

use serde::Serialize;
use sgr_core::oracle::{Source, VerificationReport};
use sgr_core::{Catalog, CatalogEntry, FractionalIdeal, GluingSpec, IsoClass, NumericalSemigroup, ThreeGenSymmetric};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: Input,
    pub result: Payload,
}

#[derive(Debug, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub force: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Analyze(SemigroupSummary),
    Catalog(CatalogPayload),
    Verify(VerifyPayload),
    Colon(ColonPayload),
    Iso(IsoPayload),
    Glue(GluePayload),
    ThreeGen(ThreeGenPayload),
}

#[derive(Debug, Serialize)]
pub struct SemigroupSummary {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
    pub symmetric: bool,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: usize,
}

impl From<&NumericalSemigroup> for SemigroupSummary {
    fn from(h: &NumericalSemigroup) -> Self {
        SemigroupSummary {
            generators: h.generators().to_vec(),
            minimal_generators: h.minimal_generators().to_vec(),
            multiplicity: h.multiplicity(),
            frobenius: h.frobenius(),
            conductor: h.conductor(),
            genus: h.genus(),
            gaps: h.gaps().to_vec(),
            symmetric: h.is_symmetric(),
            pseudo_frobenius: h.pseudo_frobenius(),
            cm_type: h.cm_type(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EntryRow {
    pub gap: i64,
    pub side: &'static str,
    pub generators: Vec<i64>,
    pub a_quotient: i64,
    pub mu: usize,
}

impl From<&CatalogEntry> for EntryRow {
    fn from(e: &CatalogEntry) -> Self {
        EntryRow {
            gap: e.gap,
            side: e.side.as_str(),
            generators: e.ideal.generators().to_vec(),
            a_quotient: e.a_quotient,
            mu: e.mu,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogPayload {
    pub minimal_generators: Vec<i64>,
    pub a_invariant: i64,
    pub conductor: i64,
    pub count: usize,
    pub entries: Vec<EntryRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl From<&Catalog> for CatalogPayload {
    fn from(c: &Catalog) -> Self {
        CatalogPayload {
            minimal_generators: c.semigroup().minimal_generators().to_vec(),
            a_invariant: c.a_invariant(),
            conductor: c.semigroup().conductor(),
            count: c.len(),
            entries: c.entries().iter().map(EntryRow::from).collect(),
            note: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub oracle: usize,
    pub formula: usize,
    pub conductor: i64,
}

#[derive(Debug, Serialize)]
pub struct MismatchRow {
    pub generators: Vec<i64>,
    pub found_in: &'static str,
}

#[derive(Debug, Serialize)]
pub struct VerifyPayload {
    pub minimal_generators: Vec<i64>,
    pub bound: i64,
    pub poset_size: usize,
    pub verdict: &'static str,
    pub counts: Counts,
    pub oracle_ideals: Vec<Vec<i64>>,
    pub formula_ideals: Vec<Vec<i64>>,
    pub mismatches: Vec<MismatchRow>,
}

fn gens_of(ideals: &[FractionalIdeal]) -> Vec<Vec<i64>> {
    ideals.iter().map(|i| i.generators().to_vec()).collect()
}

impl VerifyPayload {
    pub fn new(r: &VerificationReport, poset_size: usize) -> Self {
        VerifyPayload {
            minimal_generators: r.semigroup.minimal_generators().to_vec(),
            bound: r.bound,
            poset_size,
            verdict: if r.passed() { "PASS" } else { "FAIL" },
            counts: Counts {
                oracle: r.counts.oracle,
                formula: r.counts.formula,
                conductor: r.counts.conductor,
            },
            oracle_ideals: gens_of(&r.oracle_ideals),
            formula_ideals: gens_of(&r.formula_ideals),
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchRow {
                    generators: m.ideal.generators().to_vec(),
                    found_in: match m.source {
                        Source::OracleOnly => "oracle",
                        Source::FormulaOnly => "formula",
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ColonRow {
    pub m: i64,
    pub generators: Vec<i64>,
    pub a_quotient: Option<i64>,
    pub gorenstein: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ColonPayload {
    pub minimal_generators: Vec<i64>,
    pub rows: Vec<ColonRow>,
}

#[derive(Debug, Serialize)]
pub struct IsoRow {
    pub gap: i64,
    pub members: [Vec<i64>; 2],
}

#[derive(Debug, Serialize)]
pub struct IsoPayload {
    pub minimal_generators: Vec<i64>,
    pub conductor: i64,
    pub count: usize,
    pub classes: Vec<IsoRow>,
}

impl IsoPayload {
    pub fn new(h: &NumericalSemigroup, classes: &[IsoClass]) -> Self {
        IsoPayload {
            minimal_generators: h.minimal_generators().to_vec(),
            conductor: h.conductor(),
            count: classes.len(),
            classes: classes
                .iter()
                .map(|c| IsoRow {
                    gap: c.gap,
                    members: [
                        c.below.ideal.generators().to_vec(),
                        c.above.ideal.generators().to_vec(),
                    ],
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GluePayload {
    pub glued: Vec<i64>,
    pub symmetric: bool,
    pub frobenius: i64,
    pub conductor: i64,
}

impl From<&GluingSpec> for GluePayload {
    fn from(g: &GluingSpec) -> Self {
        GluePayload {
            glued: g.glued.minimal_generators().to_vec(),
            symmetric: g.glued.is_symmetric(),
            frobenius: g.glued.frobenius(),
            conductor: g.glued.conductor(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ThreeGenPayload {
    pub semigroup: Vec<i64>,
    pub presentation: String,
    pub presentation_m: i64,
    pub presentation_n: i64,
    pub a_invariant: i64,
    pub predicted: i64,
    pub actual: i64,
    pub agrees: bool,
}

impl ThreeGenPayload {
    pub fn new(s: &ThreeGenSymmetric, actual: i64) -> Self {
        ThreeGenPayload {
            semigroup: s.semigroup.minimal_generators().to_vec(),
            presentation: s.presentation(),
            presentation_m: s.presentation_m,
            presentation_n: s.presentation_n,
            a_invariant: s.a_invariant,
            predicted: s.predicted_count,
            actual,
            agrees: s.predicted_count == actual,
        }
    }
}

fn list(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn ideal(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|g| format!("t^{g}")).collect();
    format!("({})", parts.join(", "))
}

/// Plain-text rendering for `--format table`.
pub fn render_table(doc: &OutputDocument) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match &doc.result {
        Payload::Analyze(s) => {
            line(format!("minimal generators  {}", list(&s.minimal_generators)));
            line(format!("multiplicity        {}", s.multiplicity));
            line(format!("frobenius           {}", s.frobenius));
            line(format!("conductor           {}", s.conductor));
            line(format!("genus               {}", s.genus));
            line(format!("gaps                {}", list(&s.gaps)));
            line(format!("pseudo-frobenius    {}", list(&s.pseudo_frobenius)));
            line(format!("type                {}", s.cm_type));
            line(format!("symmetric           {}", s.symmetric));
        }
        Payload::Catalog(c) => {
            line(format!(
                "H = <{}>  a(R) = {}  c(H) = {}  entries = {}",
                list(&c.minimal_generators),
                c.a_invariant,
                c.conductor,
                c.count
            ));
            line(format!("{:>5}  {:<6}  {:>7}  {:>3}  generators", "m", "side", "a(R/I)", "mu"));
            for e in &c.entries {
                line(format!(
                    "{:>5}  {:<6}  {:>7}  {:>3}  {}",
                    e.gap,
                    e.side,
                    e.a_quotient,
                    e.mu,
                    ideal(&e.generators)
                ));
            }
            if let Some(note) = c.note {
                line(format!("note: {note}"));
            }
        }
        Payload::Verify(v) => {
            line(format!(
                "H = <{}>  bound = {}  poset = {}",
                list(&v.minimal_generators),
                v.bound,
                v.poset_size
            ));
            line(format!(
                "oracle = {}  formula = {}  conductor = {}",
                v.counts.oracle, v.counts.formula, v.counts.conductor
            ));
            for m in &v.mismatches {
                line(format!("only in {}: {}", m.found_in, ideal(&m.generators)));
            }
            line(v.verdict.to_string());
        }
        Payload::Colon(c) => {
            line(format!("{:>5}  {:>7}  {:<10}  R :_R t^m", "m", "a(R/I)", "gorenstein"));
            for r in &c.rows {
                let aq = r.a_quotient.map_or("-".to_string(), |a| a.to_string());
                let g = r.gorenstein.map_or("-".to_string(), |g| g.to_string());
                line(format!("{:>5}  {:>7}  {:<10}  {}", r.m, aq, g, ideal(&r.generators)));
            }
        }
        Payload::Iso(c) => {
            line(format!(
                "H = <{}>  classes = {}  c(H)/2 = {}",
                list(&c.minimal_generators),
                c.count,
                c.conductor / 2
            ));
            for class in &c.classes {
                line(format!(
                    "{:>5}  {}  ~  {}",
                    class.gap,
                    ideal(&class.members[0]),
                    ideal(&class.members[1])
                ));
            }
        }
        Payload::Glue(g) => {
            line(format!("glued       {}", list(&g.glued)));
            line(format!("symmetric   {}", g.symmetric));
            line(format!("frobenius   {}", g.frobenius));
            line(format!("conductor   {}", g.conductor));
        }
        Payload::ThreeGen(t) => {
            line(format!("semigroup     {}", list(&t.semigroup)));
            line(format!("presentation  {}", t.presentation));
            line(format!("a-invariant   {}", t.a_invariant));
            line(format!("predicted     {}", t.predicted));
            line(format!("actual        {}", t.actual));
        }
    }
    out
}

//! JSON input and report formats.
//!
//! | tag           | content                                              |
//! |---------------|------------------------------------------------------|
//! | `sposet-v1`   | explicit face lattice                                |
//! | `scomplex-v1` | facet list of a simplicial complex                   |
//! | `charfn-v1`   | characteristic function                              |
//! | `cone-v1`     | cone quotient problem                                |
//! | `manifold-v1` | manifold-with-corners quotient problem               |
//! | `report-v1`   | output of a quotient problem (emitted only)          |
//!
//! Inside a problem bundle, `poset` is either an inline `sposet-v1` /
//! `scomplex-v1` object or the name of a built-in corpus entry, and `charfn`
//! is an inline `charfn-v1` object (the `format` tag may be omitted there).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::charfn::{CharFnError, CharFunction};
use crate::corpus::{corpus, UnknownName};
use crate::homology::Coefficients;
use crate::poset::{ElementSpec, PosetError, SimplicialPoset};
use crate::spectral::{
    make_problem, tables, verify, ManifoldData, ProblemKind, QuotientProblem, QuotientTables,
    RelativeData, SpectralError,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Corpus(#[from] UnknownName),
    #[error(transparent)]
    CharFn(#[from] CharFnError),
}

/// Where a bundle's poset came from; kept so that emitting reproduces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetSource {
    Corpus(String),
    Inline(Option<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPoset {
    pub source: PosetSource,
    pub poset: SimplicialPoset,
}

impl NamedPoset {
    pub fn corpus(name: &str) -> Result<Self, IoError> {
        Ok(Self {
            source: PosetSource::Corpus(name.to_string()),
            poset: corpus(name)?,
        })
    }

    pub fn name(&self) -> Option<&str> {
        match &self.source {
            PosetSource::Corpus(n) => Some(n),
            PosetSource::Inline(n) => n.as_deref(),
        }
    }
}

/// A decoded `cone-v1` or `manifold-v1` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemBundle {
    pub kind: ProblemKind,
    pub poset: NamedPoset,
    pub n: usize,
    pub coeff: Coefficients,
    pub manifold: Option<ManifoldData>,
    pub charfn: Option<CharFunction>,
}

impl ProblemBundle {
    pub fn to_problem(&self) -> Result<QuotientProblem, SpectralError> {
        make_problem(
            self.kind,
            self.poset.poset.clone(),
            self.n,
            self.coeff,
            self.charfn.clone(),
            self.manifold.clone(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Poset(NamedPoset),
    CharFn(CharFunction),
    Problem(ProblemBundle),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SposetDoc {
    format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    elements: Vec<ElementSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Int(i64),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Text(s) => s,
            Label::Int(i) => i.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScomplexDoc {
    #[allow(dead_code)]
    format: String,
    #[serde(default)]
    name: Option<String>,
    facets: Vec<Vec<Label>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharFnDoc {
    #[serde(default)]
    format: Option<String>,
    n: usize,
    assignment: BTreeMap<String, Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeDoc {
    #[allow(dead_code)]
    format: String,
    poset: Value,
    n: usize,
    #[serde(default = "rationals")]
    field: Coefficients,
    #[serde(default)]
    charfn: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldDoc {
    #[allow(dead_code)]
    format: String,
    poset: Value,
    n: usize,
    #[serde(default = "rationals")]
    field: Coefficients,
    #[serde(rename = "bettiQ")]
    betti_q: Vec<usize>,
    iota: Vec<usize>,
    orientable: bool,
    #[serde(default)]
    charfn: Option<Value>,
}

fn rationals() -> Coefficients {
    Coefficients::Rationals
}

fn decode<T: serde::de::DeserializeOwned>(format: &str, v: Value) -> Result<T, IoError> {
    serde_json::from_value(v).map_err(|e| IoError::SchemaViolation(format!("{format}: {e}")))
}

/// Parses any input format from JSON text.
pub fn parse(text: &str) -> Result<Document, IoError> {
    let v: Value = serde_json::from_str(text).map_err(|e| IoError::SchemaViolation(e.to_string()))?;
    parse_value(v)
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<Document, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn parse_value(v: Value) -> Result<Document, IoError> {
    let format = v
        .get("format")
        .ok_or_else(|| IoError::SchemaViolation("missing `format` tag".into()))?
        .as_str()
        .ok_or_else(|| IoError::SchemaViolation("`format` must be a string".into()))?
        .to_string();
    match format.as_str() {
        "sposet-v1" | "scomplex-v1" => Ok(Document::Poset(poset_value(v)?)),
        "charfn-v1" => Ok(Document::CharFn(charfn_value(v)?)),
        "cone-v1" => {
            let d: ConeDoc = decode(&format, v)?;
            Ok(Document::Problem(ProblemBundle {
                kind: ProblemKind::Cone,
                poset: poset_ref(d.poset)?,
                n: d.n,
                coeff: d.field,
                manifold: None,
                charfn: d.charfn.map(charfn_value).transpose()?,
            }))
        }
        "manifold-v1" => {
            let d: ManifoldDoc = decode(&format, v)?;
            Ok(Document::Problem(ProblemBundle {
                kind: ProblemKind::Manifold,
                poset: poset_ref(d.poset)?,
                n: d.n,
                coeff: d.field,
                manifold: Some(ManifoldData {
                    betti_q: d.betti_q,
                    iota: d.iota,
                    orientable: d.orientable,
                }),
                charfn: d.charfn.map(charfn_value).transpose()?,
            }))
        }
        other => Err(IoError::UnknownFormat(other.to_string())),
    }
}

fn poset_value(v: Value) -> Result<NamedPoset, IoError> {
    match v.get("format").and_then(Value::as_str) {
        Some("sposet-v1") => {
            let d: SposetDoc = decode("sposet-v1", v)?;
            Ok(NamedPoset {
                source: PosetSource::Inline(d.name),
                poset: SimplicialPoset::from_face_lattice(&d.elements)?,
            })
        }
        Some("scomplex-v1") => {
            let d: ScomplexDoc = decode("scomplex-v1", v)?;
            let facets = d
                .facets
                .into_iter()
                .map(|f| f.into_iter().map(Label::into_string).collect::<Vec<_>>());
            Ok(NamedPoset {
                source: PosetSource::Inline(d.name),
                poset: SimplicialPoset::from_facets(facets)?,
            })
        }
        Some(other) => Err(IoError::UnknownFormat(other.to_string())),
        None => Err(IoError::SchemaViolation("poset object needs a `format` tag".into())),
    }
}

fn poset_ref(v: Value) -> Result<NamedPoset, IoError> {
    match v {
        Value::String(name) => NamedPoset::corpus(&name),
        Value::Object(_) => poset_value(v),
        _ => Err(IoError::SchemaViolation(
            "`poset` must be a corpus name or a poset object".into(),
        )),
    }
}

fn charfn_value(v: Value) -> Result<CharFunction, IoError> {
    let d: CharFnDoc = decode("charfn-v1", v)?;
    match d.format.as_deref() {
        None | Some("charfn-v1") => Ok(CharFunction::new(d.n, d.assignment)?),
        Some(other) => Err(IoError::UnknownFormat(other.to_string())),
    }
}

pub fn emit_poset(name: Option<&str>, s: &SimplicialPoset) -> Value {
    serde_json::to_value(SposetDoc {
        format: "sposet-v1".into(),
        name: name.map(String::from),
        elements: s.to_specs(),
    })
    .expect("plain data serializes")
}

pub fn emit_charfn(lambda: &CharFunction) -> Value {
    serde_json::to_value(CharFnDoc {
        format: Some("charfn-v1".into()),
        n: lambda.n(),
        assignment: lambda.assignment().clone(),
    })
    .expect("plain data serializes")
}

fn emit_poset_ref(p: &NamedPoset) -> Value {
    match &p.source {
        PosetSource::Corpus(name) => Value::String(name.clone()),
        PosetSource::Inline(name) => emit_poset(name.as_deref(), &p.poset),
    }
}

pub fn emit_bundle(b: &ProblemBundle) -> Value {
    let mut v = json!({
        "format": match b.kind {
            ProblemKind::Cone => "cone-v1",
            ProblemKind::Manifold => "manifold-v1",
        },
        "poset": emit_poset_ref(&b.poset),
        "n": b.n,
        "field": b.coeff.to_string(),
    });
    if let Some(m) = &b.manifold {
        v["bettiQ"] = json!(m.betti_q);
        v["iota"] = json!(m.iota);
        v["orientable"] = json!(m.orientable);
    }
    if let Some(l) = &b.charfn {
        v["charfn"] = emit_charfn(l);
    }
    v
}

pub fn emit(doc: &Document) -> Value {
    match doc {
        Document::Poset(p) => emit_poset(p.name(), &p.poset),
        Document::CharFn(l) => emit_charfn(l),
        Document::Problem(b) => emit_bundle(b),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLog {
    /// `χ(X)` from the bigraded totals.
    pub euler_x: i64,
    /// `f_{n-1}(S)`, for comparison with `χ(X)` in the cone case.
    pub top_faces: i64,
}

/// The `report-v1` document for one quotient problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub format: String,
    pub inputs: Value,
    pub derived: RelativeData,
    pub tables: QuotientTables,
    pub checks: BTreeMap<String, bool>,
    pub skipped: BTreeMap<String, String>,
    pub log: ReportLog,
}

impl QuotientReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

pub fn quotient_report(bundle: &ProblemBundle, prob: &QuotientProblem) -> QuotientReport {
    let v = verify(prob);
    let mut checks = BTreeMap::new();
    let mut skipped = BTreeMap::new();
    for (name, verdict) in v.checks() {
        match verdict.passed() {
            Some(ok) => {
                checks.insert(name.to_string(), ok);
            }
            None => {
                if let crate::facevec::Verdict::Skipped(why) = verdict {
                    skipped.insert(name.to_string(), why.clone());
                }
            }
        }
    }
    QuotientReport {
        format: "report-v1".into(),
        inputs: emit_bundle(bundle),
        derived: prob.relative_and_delta().clone(),
        tables: tables(prob),
        checks,
        skipped,
        log: ReportLog {
            euler_x: v.euler_x,
            top_faces: v.top_faces,
        },
    }
}

//! Versioned JSON documents: the basis as explicit algebra elements, the
//! structure constants as canonical scalar strings, and the verdicts.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::builder::{BuildError, Gauge, QLieBasis, Scale};
use crate::pipeline::{report_for, Report};
use crate::qforms::AdjointRep;
use crate::report::{raw_tables, Check, StructureConstants};
use crate::scalar::{parse_scalar, ScalarContext, ScalarError};
use crate::uq::{AlgebraKind, CartanData, Element, Monomial, Uq, Weight};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version `{0}`")]
    Version(String),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub schema_version: String,
    pub algebra: AlgebraKind,
    #[serde(rename = "D")]
    pub d: u32,
    pub pairing_scale: String,
    pub gauge: Gauge,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_square: Option<String>,
    /// Squares of the radicals used by the scales; the first one is `C^2`.
    #[serde(default)]
    pub radicands: Vec<String>,
    /// Basis order.
    pub labels: Vec<String>,
    pub basis: BTreeMap<String, BasisVector>,
    pub constants: ConstantsDoc,
    pub verification: Vec<Check>,
}

/// `scale * sqrt(radicands[k])` for each bit `k` of `radicals`, times the
/// element `sum coeff * f-word k e-word`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVector {
    pub weight: String,
    pub scale: String,
    pub radicals: u8,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub f: Vec<u8>,
    pub k: Vec<String>,
    pub e: Vec<u8>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub lhs: String,
    pub rhs: String,
    pub component: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KillingEntry {
    pub lhs: String,
    pub rhs: String,
    pub value: String,
}

/// Structure constants keyed by root labels (`a1`, `-a1-a2`, ...) and
/// 1-based Cartan indices. `brackets` and `killing` list every nonzero
/// entry of the full tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsDoc {
    pub l: BTreeMap<String, Vec<String>>,
    pub r: BTreeMap<String, Vec<String>>,
    #[serde(rename = "N")]
    pub n: BTreeMap<String, String>,
    pub f: BTreeMap<String, String>,
    pub h_alpha: BTreeMap<String, Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
    pub killing: Vec<KillingEntry>,
}

impl ConstantsDoc {
    pub fn new(sc: &StructureConstants) -> Self {
        let cartan = sc.cartan();
        let rank = sc.rank();
        let label = |w: &Weight| cartan.root_label(w);
        let mut l = BTreeMap::new();
        let mut r = BTreeMap::new();
        let mut h_alpha = BTreeMap::new();
        for a in cartan.roots() {
            l.insert(label(&a), (0..rank).map(|i| sc.l(&a, i).to_string()).collect());
            r.insert(label(&a), (0..rank).map(|i| sc.r(&a, i).to_string()).collect());
            h_alpha.insert(label(&a), sc.h_alpha(&a).iter().map(|x| x.to_string()).collect());
        }
        let mut n = BTreeMap::new();
        for a in cartan.roots() {
            for b in cartan.roots() {
                if cartan.is_root(&(a + b)) {
                    n.insert(format!("{},{}", label(&a), label(&b)), sc.n(&a, &b).to_string());
                }
            }
        }
        let mut f = BTreeMap::new();
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    f.insert(format!("{},{},{}", i + 1, j + 1, k + 1), sc.f(i, j, k).to_string());
                }
            }
        }
        let b = sc.b_matrix().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
        let dim = sc.dim();
        let mut brackets = Vec::new();
        let mut killing = Vec::new();
        for x in 0..dim {
            for y in 0..dim {
                for c in 0..dim {
                    let v = &sc.brackets[x][y][c];
                    if !v.is_zero() {
                        brackets.push(BracketEntry {
                            lhs: sc.labels[x].clone(),
                            rhs: sc.labels[y].clone(),
                            component: sc.labels[c].clone(),
                            value: v.to_string(),
                        });
                    }
                }
                let v = &sc.killing[x][y];
                if !v.is_zero() {
                    killing.push(KillingEntry { lhs: sc.labels[x].clone(), rhs: sc.labels[y].clone(), value: v.to_string() });
                }
            }
        }
        ConstantsDoc { l, r, n, f, h_alpha, b, brackets, killing }
    }
}

fn weight_label(cartan: &CartanData, w: &Weight) -> String {
    if w.is_zero() {
        "0".into()
    } else {
        cartan.root_label(w)
    }
}

fn element_terms(x: &Element, rank: usize) -> Vec<Term> {
    x.terms()
        .map(|(m, c)| Term {
            f: m.f.clone(),
            k: (0..rank).map(|i| m.k.coord(i).to_string()).collect(),
            e: m.e.clone(),
            coeff: c.to_string(),
        })
        .collect()
}

impl ExportDocument {
    /// The document for `report`, with `checks` as its verification list.
    pub fn new(report: &Report, checks: Vec<Check>) -> Self {
        let basis = &report.basis;
        let cartan = CartanData::new(basis.kind);
        let rank = cartan.rank;
        let vectors = (0..basis.dim())
            .map(|k| {
                let v = BasisVector {
                    weight: weight_label(&cartan, &basis.weights[k]),
                    scale: basis.scales[k].rational.to_string(),
                    radicals: basis.scales[k].radicals,
                    terms: element_terms(&basis.elements[k], rank),
                };
                (basis.labels[k].clone(), v)
            })
            .collect();
        ExportDocument {
            schema_version: SCHEMA_VERSION.into(),
            algebra: basis.kind,
            d: basis.context.d(),
            pairing_scale: cartan.pairing_scale.to_string(),
            gauge: basis.gauge,
            radical_square: basis.context.radical_square().map(|r| r.to_string()),
            radicands: basis.radicands.iter().map(|r| r.to_string()).collect(),
            labels: basis.labels.clone(),
            basis: vectors,
            constants: ConstantsDoc::new(&report.constants),
            verification: checks,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, ExportError> {
        let doc: ExportDocument = serde_json::from_str(s)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(ExportError::Version(doc.schema_version));
        }
        Ok(doc)
    }

    /// The algebra and basis described by the document.
    pub fn rebuild(&self, cap: Option<usize>) -> Result<(Uq, QLieBasis), ExportError> {
        let invalid = |m: String| ExportError::Invalid(m);
        let kind = self.algebra;
        let cartan = CartanData::new(kind);
        if self.d == 0 || self.d % cartan.default_root_order != 0 {
            return Err(invalid(format!("D = {} is not a multiple of {}", self.d, cartan.default_root_order)));
        }
        if self.pairing_scale != cartan.pairing_scale.to_string() {
            return Err(invalid(format!("pairing scale {} is not supported", self.pairing_scale)));
        }
        let mut uq = Uq::with_root_order(kind, self.d);
        if let Some(c) = cap {
            uq = uq.with_cap(c);
        }
        let context = Arc::new(match &self.radical_square {
            Some(r) => ScalarContext::with_radical(self.d, parse_scalar(r)?)?,
            None => ScalarContext::new(self.d),
        });
        let radicands = self.radicands.iter().map(|r| parse_scalar(r)).collect::<Result<Vec<_>, _>>()?;
        if self.labels.len() != cartan.dim() || self.basis.len() != cartan.dim() {
            return Err(invalid(format!("expected {} basis vectors", cartan.dim())));
        }
        let mut weights = Vec::new();
        let mut elements = Vec::new();
        let mut scales = Vec::new();
        for label in &self.labels {
            let v = self.basis.get(label).ok_or_else(|| invalid(format!("no basis vector `{}`", label)))?;
            let w = if v.weight == "0" {
                Weight::zero()
            } else {
                cartan.parse_root_label(&v.weight).ok_or_else(|| invalid(format!("unknown root `{}`", v.weight)))?
            };
            let mut x = Element::zero();
            for t in &v.terms {
                if t.k.len() != cartan.rank || t.f.iter().chain(&t.e).any(|&l| l as usize >= cartan.rank) {
                    return Err(invalid(format!("bad term in `{}`", label)));
                }
                let mut k = Weight::zero();
                for (i, c) in t.k.iter().enumerate() {
                    k.0[i] = Rational64::from_str(c).map_err(|_| invalid(format!("bad torus exponent `{}`", c)))?;
                }
                x.add_term(Monomial::new(t.f.clone(), k, t.e.clone()), parse_scalar(&t.coeff)?);
            }
            if x.weight() != Some(w) {
                return Err(invalid(format!("`{}` is not homogeneous of weight {}", label, v.weight)));
            }
            if (v.radicals as usize) >> radicands.len() != 0 {
                return Err(invalid(format!("`{}` uses an undeclared radical", label)));
            }
            weights.push(w);
            elements.push(x);
            scales.push(Scale { rational: parse_scalar(&v.scale)?, radicals: v.radicals });
        }
        let basis = QLieBasis {
            kind,
            gauge: self.gauge,
            labels: self.labels.clone(),
            weights,
            elements,
            scales,
            radicands,
            context,
            c: Vec::new(),
            log: vec!["read from document".into()],
        };
        Ok((uq, basis))
    }
}

/// Result of re-verifying a document.
#[derive(Debug)]
pub struct DocumentVerdict {
    pub report: Report,
    pub checks: Vec<Check>,
    /// Whether the recomputed constants equal the stored ones.
    pub constants_match: bool,
    /// Whether the recomputed verdicts equal the stored ones.
    pub verdicts_match: bool,
}

/// Rebuilds the basis of `doc`, recomputes everything and compares.
pub fn verify_document(doc: &ExportDocument, cap: Option<usize>) -> Result<DocumentVerdict, ExportError> {
    let (uq, basis) = doc.rebuild(cap)?;
    let rep = AdjointRep::new(&uq, &basis.elements)?;
    let raw = raw_tables(&uq, &rep)?;
    let report = report_for(&uq, basis, &rep, &raw)?;
    let checks = report.verification();
    let constants_match = ConstantsDoc::new(&report.constants) == doc.constants;
    let verdicts_match = checks == doc.verification;
    Ok(DocumentVerdict { report, checks, constants_match, verdicts_match })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{Construction, Options};
    use crate::scalar::Scalar;

    #[test]
    fn sl2_round_trip() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        for gauge in [Gauge::Rational, Gauge::Canonical, Gauge::Paper] {
            let report = c.report_gauge(gauge).unwrap();
            let doc = ExportDocument::new(&report, report.verification());
            let text = doc.to_json();
            let back = ExportDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            let v = verify_document(&back, None).unwrap();
            assert!(v.constants_match && v.verdicts_match, "{}", gauge);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(ExportDocument::from_json("{"), Err(ExportError::Json(_))));
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let report = c.report_gauge(Gauge::Paper).unwrap();
        let mut doc = ExportDocument::new(&report, Vec::new());
        doc.schema_version = "0".into();
        assert!(matches!(ExportDocument::from_json(&doc.to_json()), Err(ExportError::Version(_))));
        doc.schema_version = SCHEMA_VERSION.into();
        doc.labels.pop();
        assert!(matches!(doc.rebuild(None), Err(ExportError::Invalid(_))));
    }

    #[test]
    fn tampered_constants_are_detected() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let report = c.report_gauge(Gauge::Paper).unwrap();
        let mut doc = ExportDocument::new(&report, report.verification());
        doc.constants.b[0][0] = Scalar::one().to_string();
        let v = verify_document(&doc, None).unwrap();
        assert!(!v.constants_match);
        assert!(v.verdicts_match);
    }
}

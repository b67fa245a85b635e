//! JSON encodings of certificates and fixture files.

use serde::{Deserialize, Serialize};

use super::incidence::{NormalcyKind, NormalcyReport, WeightedIncidence};
use super::scalar::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::hypergraph::{io as hio, Hypergraph};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryJson {
    pub v: usize,
    pub e: usize,
    pub val: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub alpha: String,
    pub entries: Vec<EntryJson>,
}

/// A certificate bundled with the hypergraph it labels and the claimed kind.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FixtureJson {
    pub name: String,
    pub description: String,
    pub claim: String,
    pub hypergraph: serde_json::Value,
    pub certificate: CertificateJson,
}

/// A parsed fixture.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub claim: NormalcyKind,
    pub hypergraph: Hypergraph,
    pub alpha: Rational,
    pub certificate: WeightedIncidence<Rational>,
}

pub fn certificate_to_json(alpha: &Rational, b: &WeightedIncidence<Rational>) -> CertificateJson {
    CertificateJson {
        alpha: format_rational(alpha),
        entries: b.iter().map(|(v, e, val)| EntryJson { v, e, val: format_rational(val) }).collect(),
    }
}

pub fn certificate_from_json(h: &Hypergraph, c: &CertificateJson) -> Result<(Rational, WeightedIncidence<Rational>)> {
    let alpha = parse_rational(&c.alpha)?;
    let mut b = WeightedIncidence::new(h);
    for entry in &c.entries {
        if b.get(entry.v, entry.e).is_some() {
            return Err(Error::Parse(format!("duplicate entry ({}, {})", entry.v, entry.e)));
        }
        b.insert(entry.v, entry.e, parse_rational(&entry.val)?);
    }
    Ok((alpha, b))
}

pub fn parse_certificate(h: &Hypergraph, text: &str) -> Result<(Rational, WeightedIncidence<Rational>)> {
    let c: CertificateJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    certificate_from_json(h, &c)
}

impl Fixture {
    pub fn to_json(&self) -> FixtureJson {
        FixtureJson {
            name: self.name.clone(),
            description: self.description.clone(),
            claim: self.claim.as_str().to_string(),
            hypergraph: hio::to_json_value(&self.hypergraph),
            certificate: certificate_to_json(&self.alpha, &self.certificate),
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let j: FixtureJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let hypergraph = hio::from_json_value(&j.hypergraph)?;
        let claim =
            NormalcyKind::parse(&j.claim).ok_or_else(|| Error::Parse(format!("unknown claim {:?}", j.claim)))?;
        let (alpha, certificate) = certificate_from_json(&hypergraph, &j.certificate)?;
        Ok(Fixture { name: j.name, description: j.description, claim, hypergraph, alpha, certificate })
    }
}

/// JSON view of an exact report.
pub fn report_to_json(report: &NormalcyReport<Rational>) -> serde_json::Value {
    serde_json::json!({
        "alpha": format_rational(&report.alpha),
        "kind": report.kind.as_str(),
        "consistent": report.consistent,
        "row_sum_status": report.row_sum_status,
        "edge_product_status": report.edge_product_status,
        "row_sums": report.row_sums.iter().map(format_rational).collect::<Vec<_>>(),
        "edge_products": report.edge_products.iter().map(format_rational).collect::<Vec<_>>(),
    })
}

//! JSON documents for matrices and SNF certificates.
//!
//! Elements are written as strings in the polynomial grammar, so the same
//! schema serves every ring. Field order is fixed by the struct definitions,
//! which makes the output byte-for-byte reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{MatrixR, ReductionTrace, SnfCertificate, SnfChecks};
use crate::ring::{RingElement, RingId};

/// `{"ring": ..., "rows": [[...], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: RingId,
    pub rows: Vec<Vec<String>>,
}

fn text_rows(m: &MatrixR) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn parse_rows(ring: RingId, rows: &[Vec<String>]) -> Result<MatrixR> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| RingElement::parse(ring, s)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    MatrixR::from_rows(ring, parsed)
}

impl MatrixJson {
    pub fn from_matrix(m: &MatrixR) -> Self {
        MatrixJson {
            ring: m.ring(),
            rows: text_rows(m),
        }
    }

    pub fn to_matrix(&self) -> Result<MatrixR> {
        parse_rows(self.ring, &self.rows)
    }
}

/// Every intermediate of one 2×2 reduction, as grammar strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub t: String,
    pub d: String,
    pub r: String,
    pub s: String,
    pub p: String,
    pub k: String,
    pub q: String,
    pub delta: String,
    pub p1: String,
    pub q1: String,
    pub u: String,
    pub v: String,
}

macro_rules! trace_fields {
    ($m:ident) => {
        $m!(a, b, c, x, y, z, t, d, r, s, p, k, q, delta, p1, q1, u, v)
    };
}

impl TraceJson {
    pub fn from_trace(tr: &ReductionTrace) -> Self {
        macro_rules! build {
            ($($f:ident),*) => { TraceJson { $($f: tr.$f.to_string()),* } };
        }
        trace_fields!(build)
    }

    pub fn to_trace(&self, ring: RingId) -> Result<ReductionTrace> {
        macro_rules! build {
            ($($f:ident),*) => { ReductionTrace { $($f: RingElement::parse(ring, &self.$f)?),* } };
        }
        Ok(trace_fields!(build))
    }
}

/// `{"ring", "input_hash", "P", "D", "Q", "checks", "trace"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub ring: RingId,
    pub input_hash: String,
    #[serde(rename = "P")]
    pub p: Vec<Vec<String>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<String>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<String>>,
    pub checks: SnfChecks,
    pub trace: Vec<TraceJson>,
}

impl CertificateJson {
    pub fn from_certificate(c: &SnfCertificate) -> Self {
        CertificateJson {
            ring: c.ring,
            input_hash: c.input_hash.clone(),
            p: text_rows(&c.p),
            d: text_rows(&c.d),
            q: text_rows(&c.q),
            checks: c.checks,
            trace: c.traces.iter().map(TraceJson::from_trace).collect(),
        }
    }

    pub fn to_certificate(&self) -> Result<SnfCertificate> {
        Ok(SnfCertificate {
            ring: self.ring,
            p: parse_rows(self.ring, &self.p)?,
            d: parse_rows(self.ring, &self.d)?,
            q: parse_rows(self.ring, &self.q)?,
            input_hash: self.input_hash.clone(),
            checks: self.checks,
            traces: self
                .trace
                .iter()
                .map(|t| t.to_trace(self.ring))
                .collect::<Result<_>>()?,
        })
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        position: e.column(),
        message: format!("line {}: {e}", e.line()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::smith_normal_form;

    #[test]
    fn matrix_roundtrip() {
        let text = r#"{"ring": "henriksen", "rows": [["x", "0"], ["3", "1 + x"]]}"#;
        let m: MatrixJson = from_json(text).unwrap();
        let a = m.to_matrix().unwrap();
        assert_eq!(MatrixJson::from_matrix(&a).to_matrix().unwrap(), a);
        let bad = r#"{"ring": "henriksen", "rows": [["1/2"]]}"#;
        let m: MatrixJson = from_json(bad).unwrap();
        assert!(matches!(m.to_matrix(), Err(Error::NonIntegerConstant(_))));
        assert!(matches!(
            from_json::<MatrixJson>("{"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn certificate_roundtrip() {
        let a = MatrixR::from_i64(RingId::Integers, &[&[4, 0], &[0, 6]]).unwrap();
        let cert = smith_normal_form(&a).unwrap();
        let json = to_json(&CertificateJson::from_certificate(&cert));
        assert!(json.contains("\"detP_unit\": true"));
        let back: CertificateJson = from_json(&json).unwrap();
        assert_eq!(back.to_certificate().unwrap(), cert);
        assert_eq!(to_json(&back), json);
    }
}

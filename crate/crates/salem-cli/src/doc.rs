//! Polynomial documents and their JSON/text codecs.
//!
//! Coefficients travel as base-10 strings — for large traces they overflow
//! every native integer width, and downstream tooling must never round them.
//! The text format is the library's line format: ascending coefficients,
//! space-separated, one polynomial per line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use salem_core::bounds::BoundReport;
use salem_core::dyadic::RealInterval;
use salem_core::poly::{IntPolynomial, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyDocument {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<i64>,
    pub degree: usize,
    /// Ascending, base-10, exact.
    pub coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u64>>,
    /// (cyclotomic index, multiplicity) pairs removed during generation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stripped_factors: Option<Vec<(u64, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sieve_passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub verdict: String,
    /// Decimal value of the certified root, truncated, 12 fractional digits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Decode failure with position information.
#[derive(Debug)]
pub enum DocError {
    Parse { line: usize, offset: usize, what: String },
    Shape(String),
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Parse { line, offset, what } => {
                write!(f, "parse error at line {line}, offset {offset}: {what}")
            }
            DocError::Shape(what) => write!(f, "malformed document: {what}"),
        }
    }
}

impl std::error::Error for DocError {}

pub fn poly_to_document(
    kind: &str,
    p: &IntPolynomial,
    metadata: Option<Metadata>,
) -> PolyDocument {
    assert!(!p.is_zero(), "documents hold nonzero polynomials");
    PolyDocument {
        kind: kind.to_owned(),
        trace: p.trace().and_then(|t| t.to_i64()),
        degree: p.degree().unwrap(),
        coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        metadata,
    }
}

pub fn document_to_poly(doc: &PolyDocument) -> Result<IntPolynomial, DocError> {
    if doc.coeffs.is_empty() {
        return Err(DocError::Shape("empty coefficient list".into()));
    }
    let mut coeffs = Vec::with_capacity(doc.coeffs.len());
    for (i, c) in doc.coeffs.iter().enumerate() {
        let v = BigInt::from_str(c).map_err(|_| DocError::Parse {
            line: 1,
            offset: i,
            what: format!("coefficient {i} ({c:?}) is not a base-10 integer"),
        })?;
        coeffs.push(v);
    }
    if coeffs.last().map_or(true, Zero::is_zero) {
        return Err(DocError::Shape("leading coefficient is zero".into()));
    }
    if doc.degree != coeffs.len() - 1 {
        return Err(DocError::Shape(format!(
            "degree {} disagrees with {} coefficients",
            doc.degree,
            coeffs.len()
        )));
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Compact JSON, one document per line.
pub fn encode_json(doc: &PolyDocument) -> String {
    let mut s = serde_json::to_string(doc).expect("document serializes");
    s.push('\n');
    s
}

/// The library line format.
pub fn encode_text(p: &IntPolynomial) -> String {
    let mut s = p.to_text();
    s.push('\n');
    s
}

/// Accepts either a JSON document or a bare text line.
pub fn decode_input(content: &str) -> Result<(IntPolynomial, Option<PolyDocument>), DocError> {
    let trimmed = content.trim_start();
    if trimmed.starts_with('{') {
        let doc: PolyDocument = serde_json::from_str(trimmed).map_err(|e| DocError::Parse {
            line: e.line(),
            offset: e.column(),
            what: e.to_string(),
        })?;
        let p = document_to_poly(&doc)?;
        return Ok((p, Some(doc)));
    }
    for (idx, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let p = IntPolynomial::from_str(line).map_err(|e| DocError::Parse {
            line: idx + 1,
            offset: e.offset,
            what: e.to_string(),
        })?;
        if p.is_zero() {
            return Err(DocError::Shape("zero polynomial".into()));
        }
        return Ok((p, None));
    }
    Err(DocError::Shape("no polynomial found".into()))
}

/// Decimal expansion with `digits` fractional digits, rounded toward −∞
/// (`round_up = false`) or +∞.
fn decimal_with(x: &Rational, digits: u32, round_up: bool) -> String {
    if x.is_negative() {
        return format!("-{}", decimal_with(&-x, digits, !round_up));
    }
    let scale = BigInt::from(10).pow(digits);
    let scaled = x * Rational::from_integer(scale.clone());
    let v = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let (q, r) = v.div_mod_floor(&scale);
    let frac = r.to_string();
    format!("{q}.{}{frac}", "0".repeat(digits as usize - frac.len()))
}

pub fn decimal_floor(x: &Rational, digits: u32) -> String {
    decimal_with(x, digits, false)
}

/// Outward decimal rendering of an interval: [floor(lo), ceil(hi)].
pub fn interval_strings(iv: &RealInterval, digits: u32) -> [String; 2] {
    [
        decimal_with(iv.lo(), digits, false),
        decimal_with(iv.hi(), digits, true),
    ]
}

/// JSON image of a killer-exponent bound report; all big quantities are
/// strings or outward decimal interval endpoints.
#[derive(Serialize)]
pub struct ReportJson {
    pub n: u64,
    pub big_n: String,
    pub d_squared: u64,
    pub m_floor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_pn: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_lcm: Option<[String; 2]>,
    pub log_k: [String; 2],
    pub log_k_exact: bool,
    pub log_k_bound: [String; 2],
    pub loglog_k_bound: [String; 2],
}

impl From<&BoundReport> for ReportJson {
    fn from(r: &BoundReport) -> Self {
        let iv = |v: &RealInterval| interval_strings(v, 12);
        ReportJson {
            n: r.n,
            big_n: r.big_n.to_string(),
            d_squared: r.d_squared,
            m_floor: r.m_floor.to_string(),
            log_pn: r.log_pn.as_ref().map(iv),
            log_lcm: r.log_lcm.as_ref().map(iv),
            log_k: iv(&r.log_k),
            log_k_exact: r.log_k_exact,
            log_k_bound: iv(&r.log_k_bound),
            loglog_k_bound: iv(&r.loglog_k_bound),
        }
    }
}

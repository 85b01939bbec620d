//! Rendering of Kerov polynomials: plain text, LaTeX, and a schema-stable
//! JSON document.
//!
//! The JSON schema is
//! `{"k": int, "formula": string, "terms": [{"coeff": string, "monomial":
//! {"<var index>": exponent}}]}` with terms in the canonical polynomial
//! order. Coefficients are serialized as strings ("15", "1/2") so consumers
//! never face integer-width or float questions; parsing a document and
//! re-rendering it is the identity.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::poly::{GradedPoly, Monomial};
use crate::rat::{is_integer, Rat};

/// A polynomial ready for serialization, with terms in canonical order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OutputDocument {
    pub k: u32,
    pub formula: String,
    pub terms: Vec<OutputTerm>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OutputTerm {
    pub coeff: String,
    pub monomial: BTreeMap<String, u32>,
}

/// Why a document could not be read back into a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DocumentError {
    BadCoefficient(String),
    BadVariable(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::BadCoefficient(s) => write!(f, "unreadable coefficient {s:?}"),
            DocumentError::BadVariable(s) => write!(f, "unreadable variable index {s:?}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl OutputDocument {
    pub fn new(k: u32, formula: &str, poly: &GradedPoly) -> Self {
        let terms = poly
            .terms()
            .map(|(m, c)| OutputTerm {
                coeff: c.to_string(),
                monomial: m.pairs().map(|(j, e)| (j.to_string(), e)).collect(),
            })
            .collect();
        OutputDocument {
            k,
            formula: formula.to_string(),
            terms,
        }
    }

    /// Reconstruct the polynomial; with `new` this is a round trip.
    pub fn to_poly(&self) -> Result<GradedPoly, DocumentError> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let coeff: Rat = t
                .coeff
                .parse()
                .map_err(|_| DocumentError::BadCoefficient(t.coeff.clone()))?;
            let mut pairs = Vec::new();
            for (j, &e) in &t.monomial {
                let j: u32 = j
                    .parse()
                    .map_err(|_| DocumentError::BadVariable(j.clone()))?;
                pairs.push((j, e));
            }
            terms.push((Monomial::from_pairs(pairs), coeff));
        }
        Ok(GradedPoly::from_terms(terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Plain-text rendering, e.g. "R_5 + 5 R_3".
pub fn poly_text(poly: &GradedPoly) -> String {
    poly.to_string()
}

/// Table-style line, e.g. "Sigma_4 = R_5 + 5 R_3".
pub fn sigma_text(k: u32, poly: &GradedPoly) -> String {
    format!("Sigma_{k} = {}", poly_text(poly))
}

fn latex_sub(n: u32) -> String {
    if n < 10 {
        format!("{n}")
    } else {
        format!("{{{n}}}")
    }
}

fn latex_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// LaTeX rendering in the classical table style, e.g.
/// "R_6 + 15R_4 + 5R_2^2 + 8R_2".
pub fn poly_latex(poly: &GradedPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in poly.terms() {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_unit() {
            out.push_str(&latex_rat(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&latex_rat(&abs));
            }
            for (j, e) in m.pairs() {
                out.push_str(&format!("R_{}", latex_sub(j)));
                if e > 1 {
                    out.push_str(&format!("^{}", latex_sub(e)));
                }
            }
        }
    }
    out
}

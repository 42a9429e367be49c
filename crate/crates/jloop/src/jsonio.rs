//! JSON documents for algebras, elements, and series.
//!
//! JSON is the single interchange format; rationals travel as decimal
//! strings `"p/q"` (or `"n"` for integers) so every document is exact.
//!
//! # Algebra documents
//!
//! ```json
//! { "kind": "builtin", "name": "split_null:2" }
//! { "kind": "free_truncated", "name": "F", "generators": [["a",1],["b",2]],
//!   "max_word_degree": 4 }
//! { "kind": "structure_constants", "name": "ev", "basis": ["e","v"],
//!   "table": { "0,0": [[0,"1"]], "0,1": [[1,"1"]] },
//!   "grading": { "e": 1, "v": 1 } }
//! ```
//!
//! `table` keys are `"i,j"` pairs of basis indices; each entry lists
//! `[k, "p/q"]` summands.  Missing table entries are zero products.
//! `grading` (optional) assigns a degree to every basis label.
//! `check_associativity` (default `true`) may be disabled for tables that
//! are only associative on a sub-cone, such as windowed Laurent products.
//!
//! # Series documents
//!
//! ```json
//! { "algebra": "ev", "truncation": 4, "graded": false,
//!   "coeffs": { "1": [["1", ["e"]]], "3": [["-1/2", ["e","v"]]] } }
//! ```
//!
//! `coeffs` maps `k ∈ 1..=T` to the term list of `α_k`, the coefficient of
//! `t^{k+1}` in `t + α₁t² + ⋯`; a term is a rational times a word of basis
//! labels which is multiplied out in the coefficient algebra.  The `algebra` field is
//! either a spec string (`"ev"`, `"split_null:2"`, `"laurent_window:-4:4"`,
//! `"free:a,b:3"`) or an inline algebra document.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElt, Algebra, ScBuilder};
use crate::brackets::GradedElt;
use crate::builtins;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::Series;

fn default_true() -> bool {
    true
}

/// A rational times a word of basis labels, e.g. `["-1/2", ["a","b"]]`.
pub type TermDoc = (String, Vec<String>);

/// A serializable description of a coefficient algebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraDoc {
    /// A named builtin, resolved through [`builtins::by_spec`].
    Builtin { name: String },
    /// An explicit multiplication table on a finite basis.
    StructureConstants {
        name: String,
        basis: Vec<String>,
        #[serde(default)]
        table: BTreeMap<String, Vec<(u32, String)>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grading: Option<BTreeMap<String, i64>>,
        #[serde(default = "default_true")]
        check_associativity: bool,
    },
    /// Free associative algebra on graded generators, truncated above
    /// `max_word_degree`.
    FreeTruncated {
        name: String,
        generators: Vec<(String, i64)>,
        max_word_degree: i64,
    },
}

impl AlgebraDoc {
    /// Constructs the algebra the document describes.
    pub fn build(&self) -> Result<Arc<Algebra>> {
        match self {
            AlgebraDoc::Builtin { name } => builtins::by_spec(name),
            AlgebraDoc::StructureConstants {
                name,
                basis,
                table,
                grading,
                check_associativity,
            } => {
                let mut builder = ScBuilder::new(name);
                for label in basis {
                    match grading {
                        None => builder = builder.basis(label),
                        Some(g) => {
                            let degree = *g.get(label).ok_or_else(|| {
                                Error::BadParams(format!(
                                    "grading is missing basis label `{label}`"
                                ))
                            })?;
                            builder = builder.graded_basis(label, degree);
                        }
                    }
                }
                let at = |i: u32| -> Result<&str> {
                    basis
                        .get(i as usize)
                        .map(String::as_str)
                        .ok_or_else(|| {
                            Error::BadParams(format!("basis index {i} out of range"))
                        })
                };
                for (key, summands) in table {
                    let (si, sj) = key.split_once(',').ok_or_else(|| {
                        Error::BadParams(format!("table key `{key}` is not of the form `i,j`"))
                    })?;
                    let parse_idx = |s: &str| -> Result<u32> {
                        s.trim().parse().map_err(|_| {
                            Error::BadParams(format!("bad basis index `{s}` in table key"))
                        })
                    };
                    let (i, j) = (parse_idx(si)?, parse_idx(sj)?);
                    let mut terms: Vec<(String, Rational)> = Vec::new();
                    for (k, coef) in summands {
                        terms.push((at(*k)?.to_string(), parse_rational(coef)?));
                    }
                    builder = builder.product_rat(at(i)?, at(j)?, terms);
                }
                if !check_associativity {
                    builder = builder.skip_assoc_check();
                }
                builder.build()
            }
            AlgebraDoc::FreeTruncated {
                name,
                generators,
                max_word_degree,
            } => {
                let gens: Vec<(&str, i64)> =
                    generators.iter().map(|(n, d)| (n.as_str(), *d)).collect();
                Algebra::free_truncated(name, &gens, *max_word_degree)
            }
        }
    }
}

/// Either a spec string or an inline algebra document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraDoc),
}

impl AlgebraRef {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        match self {
            AlgebraRef::Name(name) => builtins::by_spec(name),
            AlgebraRef::Inline(doc) => doc.build(),
        }
    }
}

fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse()
        .map_err(|_| Error::BadRational(text.to_string()))
}

/// Serializes an element as a list of terms, splitting word labels such as
/// `a*b` back into their letters.
pub fn elt_to_terms(elt: &AlgElt) -> Vec<TermDoc> {
    let algebra = elt.algebra();
    elt.terms()
        .map(|(i, c)| {
            let word: Vec<String> = algebra
                .label(i)
                .split('*')
                .map(str::to_string)
                .collect();
            (c.to_string(), word)
        })
        .collect()
}

/// Evaluates a term list: each word is multiplied out left to right in the
/// algebra and scaled by its rational.
pub fn elt_from_terms(algebra: &Arc<Algebra>, terms: &[TermDoc]) -> Result<AlgElt> {
    let mut out = AlgElt::zero(algebra);
    for (coef, word) in terms {
        if word.is_empty() {
            return Err(Error::BadParams(
                "a term needs at least one basis label".into(),
            ));
        }
        let mut value = AlgElt::from_label(algebra, &word[0])?;
        for label in &word[1..] {
            value = value.mul(&AlgElt::from_label(algebra, label)?)?;
        }
        out.add_assign_scaled(&value, &parse_rational(coef)?)?;
    }
    Ok(out)
}

/// A serializable truncated series.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub algebra: AlgebraRef,
    pub truncation: usize,
    #[serde(default = "default_true")]
    pub graded: bool,
    #[serde(default)]
    pub coeffs: BTreeMap<String, Vec<TermDoc>>,
}

/// Describes a series as a document, with the algebra reference supplied by
/// the caller (the algebra itself does not remember a construction recipe).
pub fn series_to_doc(series: &Series, algebra: AlgebraRef) -> SeriesDoc {
    let mut coeffs = BTreeMap::new();
    for k in series.occupied_slots() {
        coeffs.insert(k.to_string(), elt_to_terms(&series.coeff(k)));
    }
    SeriesDoc {
        algebra,
        truncation: series.truncation(),
        graded: series.is_graded(),
        coeffs,
    }
}

/// Builds the series a document describes, constructing its algebra.
pub fn series_from_doc(doc: &SeriesDoc) -> Result<Series> {
    let algebra = doc.algebra.build()?;
    series_from_doc_in(&algebra, doc)
}

/// Builds the series over an already-constructed algebra (which must match
/// what `doc.algebra` describes).
pub fn series_from_doc_in(algebra: &Arc<Algebra>, doc: &SeriesDoc) -> Result<Series> {
    let mut series = Series::unit(algebra, doc.truncation, doc.graded)?;
    for (key, terms) in &doc.coeffs {
        let degree: usize = key.trim().parse().map_err(|_| {
            Error::BadParams(format!("bad coefficient degree `{key}`"))
        })?;
        if degree == 0 || degree > doc.truncation {
            return Err(Error::BadParams(format!(
                "coefficient degree {degree} outside 1..={}",
                doc.truncation
            )));
        }
        series.set_coeff(degree, elt_from_terms(algebra, terms)?)?;
    }
    Ok(series)
}

/// A serializable homogeneous element with its degree tag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradedEltDoc {
    pub degree: i64,
    pub terms: Vec<TermDoc>,
}

pub fn graded_to_doc(elt: &GradedElt) -> GradedEltDoc {
    GradedEltDoc {
        degree: elt.degree(),
        terms: elt_to_terms(elt.value()),
    }
}

pub fn graded_from_doc(algebra: &Arc<Algebra>, doc: &GradedEltDoc) -> Result<GradedElt> {
    GradedElt::new(doc.degree, elt_from_terms(algebra, &doc.terms)?)
}

/// Input document for closed-form bracket evaluation: the first group `I`,
/// then the final pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketInputDoc {
    pub algebra: AlgebraRef,
    #[serde(rename = "I", default)]
    pub i_elts: Vec<GradedEltDoc>,
    pub b: GradedEltDoc,
    pub c: GradedEltDoc,
}

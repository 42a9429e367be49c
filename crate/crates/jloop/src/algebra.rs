//! Finite-dimensional coefficient algebras over the rationals.
//!
//! An [`Algebra`] is either given by an explicit structure-constant table on a
//! labelled basis, or is a free associative algebra on weighted generators
//! truncated beyond a maximal word degree.  Elements ([`AlgElt`]) are sparse
//! rational combinations of basis indices.  Algebras are immutable and shared
//! behind [`Arc`]; every binary operation checks that both operands come from
//! the same (pointer-identical or structurally equal) algebra.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Product of two basis elements, borrowed from the table when possible.
pub(crate) enum BasisProd<'a> {
    Zero,
    /// A single basis element with coefficient one.
    One(u32),
    Terms(&'a [(u32, Rational)]),
}

#[derive(Debug, Clone, PartialEq)]
enum AlgebraData {
    StructureConstants {
        table: HashMap<(u32, u32), Vec<(u32, Rational)>>,
    },
    FreeTruncated {
        /// Generator names with their positive weights.
        generators: Vec<(String, i64)>,
        max_word_degree: i64,
        /// Basis words as sequences of generator ids, aligned with labels.
        words: Vec<Vec<u16>>,
        word_index: HashMap<Vec<u16>, u32>,
    },
}

/// A finite-dimensional associative algebra with a distinguished basis.
///
/// The basis never contains a formal series unit; when an algebra happens to
/// have a two-sided multiplicative unit among its basis elements (for example
/// `one` in the split-null extensions) it is detected and recorded, but the
/// series layer keeps its own formal unit separate from the coefficients.
#[derive(Debug)]
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    label_index: HashMap<String, u32>,
    /// Degree of each basis element, when the algebra is graded.
    grading: Option<Vec<i64>>,
    /// Basis index of a two-sided unit, if one exists.
    unit: Option<u32>,
    data: AlgebraData,
}

impl PartialEq for Algebra {
    /// Structural equality: same basis, same grading, same products.  The
    /// display name is ignored so that two independently built copies of the
    /// same algebra are interchangeable.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.grading == other.grading && self.data == other.data
    }
}

/// True when two handles refer to compatible algebras.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Algebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: u32) -> &str {
        &self.labels[index as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.label_index.get(label).copied()
    }

    /// Basis index of the two-sided multiplicative unit, if present.
    pub fn unit_index(&self) -> Option<u32> {
        self.unit
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    pub fn is_free(&self) -> bool {
        matches!(self.data, AlgebraData::FreeTruncated { .. })
    }

    /// Degree of a basis element in a graded algebra.
    pub fn degree_of(&self, index: u32) -> Option<i64> {
        self.grading.as_ref().map(|g| g[index as usize])
    }

    /// All basis indices of the given degree (empty for ungraded algebras).
    pub fn basis_of_degree(&self, degree: i64) -> Vec<u32> {
        match &self.grading {
            None => Vec::new(),
            Some(g) => (0..self.dim() as u32)
                .filter(|&i| g[i as usize] == degree)
                .collect(),
        }
    }

    /// Distinct degrees occurring in the basis, sorted.
    pub fn degrees(&self) -> Vec<i64> {
        match &self.grading {
            None => Vec::new(),
            Some(g) => {
                let set: BTreeSet<i64> = g.iter().copied().collect();
                set.into_iter().collect()
            }
        }
    }

    /// Generator list of a free truncated algebra.
    pub fn generators(&self) -> Result<&[(String, i64)]> {
        match &self.data {
            AlgebraData::FreeTruncated { generators, .. } => Ok(generators),
            _ => Err(Error::SupportNeedsFreeAlgebra),
        }
    }

    /// Word-degree cutoff of a free truncated algebra.
    pub fn max_word_degree(&self) -> Result<i64> {
        match &self.data {
            AlgebraData::FreeTruncated {
                max_word_degree, ..
            } => Ok(*max_word_degree),
            _ => Err(Error::SupportNeedsFreeAlgebra),
        }
    }

    /// Basis word of a free truncated algebra, as generator ids.
    pub(crate) fn word(&self, index: u32) -> Option<&[u16]> {
        match &self.data {
            AlgebraData::FreeTruncated { words, .. } => Some(&words[index as usize]),
            _ => None,
        }
    }

    /// Product of two basis elements.
    pub(crate) fn mul_basis(&self, i: u32, j: u32) -> BasisProd<'_> {
        match &self.data {
            AlgebraData::StructureConstants { table } => match table.get(&(i, j)) {
                None => BasisProd::Zero,
                Some(terms) => BasisProd::Terms(terms),
            },
            AlgebraData::FreeTruncated {
                max_word_degree,
                words,
                word_index,
                generators,
            } => {
                let wi = &words[i as usize];
                let wj = &words[j as usize];
                let deg: i64 = wi
                    .iter()
                    .chain(wj.iter())
                    .map(|&g| generators[g as usize].1)
                    .sum();
                if deg > *max_word_degree {
                    return BasisProd::Zero;
                }
                let mut w = Vec::with_capacity(wi.len() + wj.len());
                w.extend_from_slice(wi);
                w.extend_from_slice(wj);
                BasisProd::One(word_index[&w])
            }
        }
    }

    fn mul_sparse(
        &self,
        a: &BTreeMap<u32, Rational>,
        b: &BTreeMap<u32, Rational>,
    ) -> BTreeMap<u32, Rational> {
        let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&i, ci) in a {
            for (&j, cj) in b {
                let c = ci * cj;
                match self.mul_basis(i, j) {
                    BasisProd::Zero => {}
                    BasisProd::One(k) => {
                        let slot = acc.entry(k).or_default();
                        *slot += &c;
                    }
                    BasisProd::Terms(terms) => {
                        for (k, s) in terms {
                            let slot = acc.entry(*k).or_default();
                            *slot += &(&c * s);
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    fn detect_unit(&self) -> Option<u32> {
        'cand: for u in 0..self.dim() as u32 {
            for i in 0..self.dim() as u32 {
                let left_ok = match self.mul_basis(u, i) {
                    BasisProd::One(k) => k == i,
                    BasisProd::Terms(t) => t.len() == 1 && t[0].0 == i && t[0].1.is_one(),
                    BasisProd::Zero => false,
                };
                if !left_ok {
                    continue 'cand;
                }
                let right_ok = match self.mul_basis(i, u) {
                    BasisProd::One(k) => k == i,
                    BasisProd::Terms(t) => t.len() == 1 && t[0].0 == i && t[0].1.is_one(),
                    BasisProd::Zero => false,
                };
                if !right_ok {
                    continue 'cand;
                }
            }
            return Some(u);
        }
        None
    }

    fn check_associativity(&self) -> Result<()> {
        let dim = self.dim() as u32;
        let single = |i: u32| {
            let mut m = BTreeMap::new();
            m.insert(i, Rational::one());
            m
        };
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mul_sparse(&single(i), &single(j));
                for k in 0..dim {
                    let jk = self.mul_sparse(&single(j), &single(k));
                    let lhs = self.mul_sparse(&ij, &single(k));
                    let rhs = self.mul_sparse(&single(i), &jk);
                    if lhs != rhs {
                        return Err(Error::AssociativityViolation {
                            i: self.label(i).to_string(),
                            j: self.label(j).to_string(),
                            k: self.label(k).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_grading(&self) -> Result<()> {
        let Some(grading) = &self.grading else {
            return Ok(());
        };
        if let AlgebraData::StructureConstants { table } = &self.data {
            for (&(i, j), terms) in table {
                let want = grading[i as usize] + grading[j as usize];
                for (k, c) in terms {
                    if !c.is_zero() && grading[*k as usize] != want {
                        return Err(Error::GradingViolation(format!(
                            "{} * {} produced {} of degree {} (expected {})",
                            self.label(i),
                            self.label(j),
                            self.label(*k),
                            grading[*k as usize],
                            want
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Free associative algebra on weighted generators, with all words of
    /// total weight above `max_word_degree` truncated to zero.
    pub fn free_truncated(
        name: &str,
        generators: &[(&str, i64)],
        max_word_degree: i64,
    ) -> Result<Arc<Algebra>> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.len() > u16::MAX as usize {
            return Err(Error::BadParams("too many generators".into()));
        }
        let mut seen = BTreeSet::new();
        for (g, d) in generators {
            if g.is_empty() || !seen.insert(g.to_string()) {
                return Err(Error::BadParams(format!(
                    "generator names must be nonempty and distinct (got `{g}`)"
                )));
            }
            if *d < 1 {
                return Err(Error::BadParams(format!(
                    "generator `{g}` must have positive degree, got {d}"
                )));
            }
        }
        if max_word_degree < 1 {
            return Err(Error::BadParams(
                "max word degree must be at least 1".into(),
            ));
        }
        let gens: Vec<(String, i64)> = generators
            .iter()
            .map(|(g, d)| (g.to_string(), *d))
            .collect();

        // Enumerate all nonempty words of weight at most the cutoff.
        let mut words: Vec<(i64, Vec<u16>)> = Vec::new();
        let mut stack: Vec<(i64, Vec<u16>)> = vec![(0, Vec::new())];
        while let Some((deg, word)) = stack.pop() {
            for (gid, (_, gdeg)) in gens.iter().enumerate() {
                let nd = deg + gdeg;
                if nd > max_word_degree {
                    continue;
                }
                let mut nw = word.clone();
                nw.push(gid as u16);
                words.push((nd, nw.clone()));
                stack.push((nd, nw));
            }
        }
        words.sort_by(|a, b| {
            (a.0, a.1.len(), &a.1).cmp(&(b.0, b.1.len(), &b.1))
        });
        words.dedup();
        if words.len() > u32::MAX as usize {
            return Err(Error::BadParams("free algebra basis too large".into()));
        }

        let mut labels = Vec::with_capacity(words.len());
        let mut grading = Vec::with_capacity(words.len());
        let mut word_list = Vec::with_capacity(words.len());
        let mut word_index = HashMap::with_capacity(words.len());
        for (idx, (deg, word)) in words.into_iter().enumerate() {
            let label = word
                .iter()
                .map(|&g| gens[g as usize].0.as_str())
                .collect::<Vec<_>>()
                .join("*");
            labels.push(label);
            grading.push(deg);
            word_index.insert(word.clone(), idx as u32);
            word_list.push(word);
        }
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();

        let algebra = Algebra {
            name: name.to_string(),
            labels,
            label_index,
            grading: Some(grading),
            unit: None,
            data: AlgebraData::FreeTruncated {
                generators: gens,
                max_word_degree,
                words: word_list,
                word_index,
            },
        };
        Ok(Arc::new(algebra))
    }
}

/// Incremental builder for structure-constant algebras.
///
/// Unspecified basis products are zero.  By default `build` verifies
/// associativity over all basis triples and (when a grading is supplied)
/// that every product lands in the expected degree; the associativity check
/// can be skipped explicitly for tables that are only associative on a
/// sub-cone, such as windowed Laurent products.
pub struct ScBuilder {
    name: String,
    labels: Vec<(String, Option<i64>)>,
    entries: Vec<(String, String, Vec<(String, Rational)>)>,
    check_assoc: bool,
}

impl ScBuilder {
    pub fn new(name: &str) -> Self {
        ScBuilder {
            name: name.to_string(),
            labels: Vec::new(),
            entries: Vec::new(),
            check_assoc: true,
        }
    }

    /// Adds an ungraded basis element.
    pub fn basis(mut self, label: &str) -> Self {
        self.labels.push((label.to_string(), None));
        self
    }

    /// Adds a basis element with a degree; mixing graded and ungraded basis
    /// declarations is rejected at build time.
    pub fn graded_basis(mut self, label: &str, degree: i64) -> Self {
        self.labels.push((label.to_string(), Some(degree)));
        self
    }

    /// Declares `left * right = sum of coef * label`.
    pub fn product(mut self, left: &str, right: &str, terms: &[(&str, i64)]) -> Self {
        self.entries.push((
            left.to_string(),
            right.to_string(),
            terms
                .iter()
                .map(|(l, c)| (l.to_string(), Rational::int(*c)))
                .collect(),
        ));
        self
    }

    /// Declares a product with arbitrary rational coefficients.
    pub fn product_rat(mut self, left: &str, right: &str, terms: Vec<(String, Rational)>) -> Self {
        self.entries.push((left.to_string(), right.to_string(), terms));
        self
    }

    /// Skips the basis-triple associativity check.  Intended for tables that
    /// are deliberately non-associative outside a designated cone.
    pub fn skip_assoc_check(mut self) -> Self {
        self.check_assoc = false;
        self
    }

    pub fn build(self) -> Result<Arc<Algebra>> {
        if self.labels.is_empty() {
            return Err(Error::BadParams("algebra needs a nonempty basis".into()));
        }
        let mut label_index = HashMap::new();
        for (i, (l, _)) in self.labels.iter().enumerate() {
            if l.is_empty() || label_index.insert(l.clone(), i as u32).is_some() {
                return Err(Error::BadParams(format!(
                    "basis labels must be nonempty and distinct (got `{l}`)"
                )));
            }
        }
        let graded_count = self.labels.iter().filter(|(_, d)| d.is_some()).count();
        if graded_count != 0 && graded_count != self.labels.len() {
            return Err(Error::BadParams(
                "graded and ungraded basis declarations were mixed".into(),
            ));
        }
        let grading = if graded_count == 0 {
            None
        } else {
            Some(self.labels.iter().map(|(_, d)| d.unwrap()).collect())
        };
        let labels: Vec<String> = self.labels.into_iter().map(|(l, _)| l).collect();
        let mut table: HashMap<(u32, u32), Vec<(u32, Rational)>> = HashMap::new();
        for (left, right, terms) in &self.entries {
            let li = *label_index
                .get(left)
                .ok_or_else(|| Error::BadParams(format!("unknown label `{left}`")))?;
            let ri = *label_index
                .get(right)
                .ok_or_else(|| Error::BadParams(format!("unknown label `{right}`")))?;
            let mut resolved: BTreeMap<u32, Rational> = BTreeMap::new();
            for (l, c) in terms {
                let k = *label_index
                    .get(l)
                    .ok_or_else(|| Error::BadParams(format!("unknown label `{l}`")))?;
                let slot = resolved.entry(k).or_default();
                *slot += c;
            }
            resolved.retain(|_, c| !c.is_zero());
            if table
                .insert((li, ri), resolved.into_iter().collect())
                .is_some()
            {
                return Err(Error::BadParams(format!(
                    "duplicate product declaration for {left} * {right}"
                )));
            }
        }
        table.retain(|_, v| !v.is_empty());

        let mut algebra = Algebra {
            name: self.name,
            labels,
            label_index,
            grading,
            unit: None,
            data: AlgebraData::StructureConstants { table },
        };
        algebra.check_grading()?;
        if self.check_assoc {
            algebra.check_associativity()?;
        }
        algebra.unit = algebra.detect_unit();
        Ok(Arc::new(algebra))
    }
}

/// A sparse element of an [`Algebra`].
#[derive(Clone)]
pub struct AlgElt {
    algebra: Arc<Algebra>,
    terms: BTreeMap<u32, Rational>,
}

impl AlgElt {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        AlgElt {
            algebra: Arc::clone(algebra),
            terms: BTreeMap::new(),
        }
    }

    /// The `index`-th basis element.
    pub fn basis(algebra: &Arc<Algebra>, index: u32) -> Result<Self> {
        if index as usize >= algebra.dim() {
            return Err(Error::BadParams(format!(
                "basis index {index} out of range for algebra of dimension {}",
                algebra.dim()
            )));
        }
        let mut terms = BTreeMap::new();
        terms.insert(index, Rational::one());
        Ok(AlgElt {
            algebra: Arc::clone(algebra),
            terms,
        })
    }

    /// The basis element with the given label.
    pub fn from_label(algebra: &Arc<Algebra>, label: &str) -> Result<Self> {
        let index = algebra
            .index_of(label)
            .ok_or_else(|| Error::BadParams(format!("unknown basis label `{label}`")))?;
        AlgElt::basis(algebra, index)
    }

    /// Builds an element from `(basis index, coefficient)` pairs.
    pub fn from_terms(algebra: &Arc<Algebra>, terms: &[(u32, Rational)]) -> Result<Self> {
        let mut elt = AlgElt::zero(algebra);
        for (i, c) in terms {
            if *i as usize >= algebra.dim() {
                return Err(Error::BadParams(format!(
                    "basis index {i} out of range for algebra of dimension {}",
                    algebra.dim()
                )));
            }
            let slot = elt.terms.entry(*i).or_default();
            *slot += c;
        }
        elt.terms.retain(|_, c| !c.is_zero());
        Ok(elt)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff_of(&self, index: u32) -> Rational {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    fn check_same(&self, other: &AlgElt) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &AlgElt) -> Result<AlgElt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            let slot = out.terms.entry(i).or_default();
            *slot += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &AlgElt) -> Result<AlgElt> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            let slot = out.terms.entry(i).or_default();
            *slot -= c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn neg(&self) -> AlgElt {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AlgElt {
        if c.is_zero() {
            return AlgElt::zero(&self.algebra);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// `self += c * other`.
    pub fn add_assign_scaled(&mut self, other: &AlgElt, c: &Rational) -> Result<()> {
        self.check_same(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (&i, v) in &other.terms {
            let slot = self.terms.entry(i).or_default();
            *slot += &(v * c);
        }
        self.terms.retain(|_, v| !v.is_zero());
        Ok(())
    }

    /// Associative product in the coefficient algebra.
    pub fn mul(&self, other: &AlgElt) -> Result<AlgElt> {
        self.check_same(other)?;
        Ok(AlgElt {
            algebra: Arc::clone(&self.algebra),
            terms: self.algebra.mul_sparse(&self.terms, &other.terms),
        })
    }

    /// Ring commutator `self * other - other * self`.
    pub fn commutator(&self, other: &AlgElt) -> Result<AlgElt> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Degree of a nonzero homogeneous element in a graded algebra; `None`
    /// for ungraded algebras, mixed-degree elements, or zero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let grading = self.algebra.grading.as_ref()?;
        let mut degs = self.terms.keys().map(|&i| grading[i as usize]);
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Set of generator names occurring in the words of a free-algebra
    /// element.
    pub fn word_support(&self) -> Result<BTreeSet<String>> {
        let gens = self.algebra.generators()?;
        let mut out = BTreeSet::new();
        for &i in self.terms.keys() {
            for &g in self.algebra.word(i).expect("free algebra word") {
                out.insert(gens[g as usize].0.clone());
            }
        }
        Ok(out)
    }

    /// True when every word of a free-algebra element uses each of the given
    /// generators exactly once and no other generator.
    pub fn is_multilinear_in(&self, gen_names: &[&str]) -> Result<bool> {
        let gens = self.algebra.generators()?;
        let mut want: BTreeMap<u16, usize> = BTreeMap::new();
        for name in gen_names {
            let gid = gens
                .iter()
                .position(|(g, _)| g == name)
                .ok_or_else(|| Error::BadParams(format!("unknown generator `{name}`")))?;
            *want.entry(gid as u16).or_insert(0) += 1;
        }
        for &i in self.terms.keys() {
            let mut counts: BTreeMap<u16, usize> = BTreeMap::new();
            for &g in self.algebra.word(i).expect("free algebra word") {
                *counts.entry(g).or_insert(0) += 1;
            }
            if counts != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Keeps only the words that use each of the given generators exactly
    /// once and nothing else.
    pub fn multilinear_part(&self, gen_names: &[&str]) -> Result<AlgElt> {
        let gens = self.algebra.generators()?;
        let mut want: BTreeMap<u16, usize> = BTreeMap::new();
        for name in gen_names {
            let gid = gens
                .iter()
                .position(|(g, _)| g == name)
                .ok_or_else(|| Error::BadParams(format!("unknown generator `{name}`")))?;
            *want.entry(gid as u16).or_insert(0) += 1;
        }
        let mut out = AlgElt::zero(&self.algebra);
        for (&i, c) in &self.terms {
            let mut counts: BTreeMap<u16, usize> = BTreeMap::new();
            for &g in self.algebra.word(i).expect("free algebra word") {
                *counts.entry(g).or_insert(0) += 1;
            }
            if counts == want {
                out.terms.insert(i, c.clone());
            }
        }
        Ok(out)
    }
}

impl PartialEq for AlgElt {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.terms {
            let label = self.algebra.label(i);
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{label}")?;
            } else if mag.to_string().contains('/') {
                write!(f, "({mag})*{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Report of the two commutator-ideal vanishing predicates used by the
/// group/loop classification of substitution loops.
#[derive(Debug, Clone, PartialEq)]
pub struct CommIdealReport {
    /// `x * [y, z] = 0` for all basis triples.
    pub s_brackets_zero: bool,
    /// Basis labels `(x, y, z)` with `x * [y, z] != 0`, when one exists.
    pub s_brackets_witness: Option<(String, String, String)>,
    /// `[x, y] * u * v * w = 0` (left-normed) for all basis five-tuples.
    pub brackets_s3_zero: bool,
    /// Basis labels `(x, y, u, v, w)` with `[x, y] * u * v * w != 0`.
    pub brackets_s3_witness: Option<(String, String, String, String, String)>,
}

/// Checks by basis enumeration whether `S * [S, S] = 0` and whether
/// `[S, S] * S^3 = 0` in the algebra `S`.
pub fn check_s_comm_ideal(algebra: &Arc<Algebra>) -> CommIdealReport {
    let dim = algebra.dim() as u32;
    // Nonzero commutators of basis pairs, computed once.
    let mut brackets: Vec<(u32, u32, AlgElt)> = Vec::new();
    for y in 0..dim {
        for z in 0..dim {
            let ey = AlgElt::basis(algebra, y).expect("basis");
            let ez = AlgElt::basis(algebra, z).expect("basis");
            let br = ey.commutator(&ez).expect("same algebra");
            if !br.is_zero() {
                brackets.push((y, z, br));
            }
        }
    }

    let mut s_brackets_witness = None;
    'outer: for x in 0..dim {
        let ex = AlgElt::basis(algebra, x).expect("basis");
        for (y, z, br) in &brackets {
            if !ex.mul(br).expect("same algebra").is_zero() {
                s_brackets_witness = Some((
                    algebra.label(x).to_string(),
                    algebra.label(*y).to_string(),
                    algebra.label(*z).to_string(),
                ));
                break 'outer;
            }
        }
    }

    let mut brackets_s3_witness = None;
    'outer2: for (y, z, br) in &brackets {
        for u in 0..dim {
            let eu = AlgElt::basis(algebra, u).expect("basis");
            let bru = br.mul(&eu).expect("same algebra");
            if bru.is_zero() {
                continue;
            }
            for v in 0..dim {
                let ev = AlgElt::basis(algebra, v).expect("basis");
                let bruv = bru.mul(&ev).expect("same algebra");
                if bruv.is_zero() {
                    continue;
                }
                for w in 0..dim {
                    let ew = AlgElt::basis(algebra, w).expect("basis");
                    if !bruv.mul(&ew).expect("same algebra").is_zero() {
                        brackets_s3_witness = Some((
                            algebra.label(*y).to_string(),
                            algebra.label(*z).to_string(),
                            algebra.label(u).to_string(),
                            algebra.label(v).to_string(),
                            algebra.label(w).to_string(),
                        ));
                        break 'outer2;
                    }
                }
            }
        }
    }

    CommIdealReport {
        s_brackets_zero: s_brackets_witness.is_none(),
        s_brackets_witness,
        brackets_s3_zero: brackets_s3_witness.is_none(),
        brackets_s3_witness,
    }
}

//! Lie-identity verification: the Wronskian-type bracket on coefficient
//! polynomials, standard identities `Stₙ`, Jacobi checks on finite spanning
//! sets, and the axiom checker for the closed-form brackets.
//!
//! The bracket `⟨f,g⟩ = g′f − f′g` on `S[t]` is a Lie bracket whenever
//! `S[S,S] = 0`; which standard identities it satisfies depends on finer
//! annihilation conditions on `S`, and the scanners here decide the
//! question exhaustively on spanning sets `{b·tᵏ}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::algebra::{same_algebra, AlgElt, Algebra};
use crate::brackets::{permutations, sabinin_binary, sabinin_closed, GradedElt};
use crate::builtins;
use crate::error::{Error, Result};
use crate::exec::{scan_find, Exec};
use crate::rational::Rational;

/// A polynomial in `t` with coefficients in an associative algebra.
#[derive(Clone)]
pub struct CoeffPoly {
    algebra: Arc<Algebra>,
    coeffs: BTreeMap<usize, AlgElt>,
}

impl CoeffPoly {
    pub fn zero(algebra: &Arc<Algebra>) -> CoeffPoly {
        CoeffPoly {
            algebra: Arc::clone(algebra),
            coeffs: BTreeMap::new(),
        }
    }

    /// The monomial `value·tᵏ`.
    pub fn term(value: AlgElt, exp: usize) -> CoeffPoly {
        let mut poly = CoeffPoly::zero(value.algebra());
        if !value.is_zero() {
            poly.coeffs.insert(exp, value);
        }
        poly
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeff(&self, exp: usize) -> AlgElt {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| AlgElt::zero(&self.algebra))
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            let sum = out.coeff(k).add(c)?;
            if sum.is_zero() {
                out.coeffs.remove(&k);
            } else {
                out.coeffs.insert(k, sum);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CoeffPoly {
        CoeffPoly {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CoeffPoly {
        if c.is_zero() {
            return CoeffPoly::zero(&self.algebra);
        }
        CoeffPoly {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v.scale(c))).collect(),
        }
    }

    /// Product with coefficients multiplied in left-to-right order.
    pub fn mul(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = CoeffPoly::zero(&self.algebra);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let prod = a.mul(b)?;
                if prod.is_zero() {
                    continue;
                }
                let sum = out.coeff(i + j).add(&prod)?;
                if sum.is_zero() {
                    out.coeffs.remove(&(i + j));
                } else {
                    out.coeffs.insert(i + j, sum);
                }
            }
        }
        Ok(out)
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> CoeffPoly {
        let mut out = CoeffPoly::zero(&self.algebra);
        for (&k, c) in &self.coeffs {
            if k == 0 {
                continue;
            }
            out.coeffs.insert(k - 1, c.scale(&Rational::int(k as i64)));
        }
        out
    }
}

impl PartialEq for CoeffPoly {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = format!("{c}");
            let wrapped = if cs.contains(' ') { format!("({cs})") } else { cs };
            match k {
                0 => write!(f, "{wrapped}")?,
                1 => write!(f, "{wrapped}*t")?,
                _ => write!(f, "{wrapped}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffPoly({self})")
    }
}

/// The pairing `⟨f,g⟩ = g′f − f′g`.
pub fn wronskian_bracket(f: &CoeffPoly, g: &CoeffPoly) -> Result<CoeffPoly> {
    g.derivative().mul(f)?.sub(&f.derivative().mul(g)?)
}

/// Elements a bracket can act on: a rational vector space with decidable
/// vanishing.
pub trait BracketSpace: Clone {
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl BracketSpace for CoeffPoly {
    fn add(&self, other: &Self) -> Result<Self> {
        CoeffPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        CoeffPoly::sub(self, other)
    }
    fn neg(&self) -> Self {
        CoeffPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        CoeffPoly::is_zero(self)
    }
}

impl BracketSpace for AlgElt {
    fn add(&self, other: &Self) -> Result<Self> {
        AlgElt::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        AlgElt::sub(self, other)
    }
    fn neg(&self) -> Self {
        AlgElt::neg(self)
    }
    fn is_zero(&self) -> bool {
        AlgElt::is_zero(self)
    }
}

/// `St_{n+1}(x₁,…,xₙ,z) = Σ_{σ∈Sₙ} sgn(σ)·[x_{σ(1)},[x_{σ(2)},[…,[x_{σ(n)},z]…]]]`
/// computed by dynamic programming over index subsets.
///
/// Peeling the outermost bracket shows `A(U) = Σ_{i∈U} (−1)^{rank_U(i)−1}
/// [x_i, A(U∖{i})]` with `A(∅) = z`, turning the `n!` nested sums into
/// `2ⁿ` partial values.  `n ≤ 5` (identities up to `St₆`).
pub fn standard_identity<T, F>(bracket: F, xs: &[T], z: &T) -> Result<T>
where
    T: BracketSpace,
    F: Fn(&T, &T) -> Result<T>,
{
    let n = xs.len();
    if n == 0 || n > 5 {
        return Err(Error::BadParams(format!(
            "standard identity takes 1 to 5 alternated arguments, got {n}"
        )));
    }
    let full = (1usize << n) - 1;
    let mut partial: Vec<Option<T>> = vec![None; full + 1];
    partial[0] = Some(z.clone());
    for mask in 1..=full {
        let mut acc: Option<T> = None;
        let mut rank = 0usize;
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            rank += 1;
            let inner = partial[mask & !(1 << i)]
                .as_ref()
                .expect("submask filled earlier");
            let term = bracket(&xs[i], inner)?;
            let signed = if rank % 2 == 1 { term } else { term.neg() };
            acc = Some(match acc {
                None => signed,
                Some(a) => a.add(&signed)?,
            });
        }
        partial[mask] = acc;
    }
    Ok(partial[full].take().expect("full mask filled"))
}

/// Reference evaluation of the standard identity by its defining `n!` sum.
pub fn standard_identity_by_permutations<T, F>(bracket: F, xs: &[T], z: &T) -> Result<T>
where
    T: BracketSpace,
    F: Fn(&T, &T) -> Result<T>,
{
    let n = xs.len();
    if n == 0 || n > 5 {
        return Err(Error::BadParams(format!(
            "standard identity takes 1 to 5 alternated arguments, got {n}"
        )));
    }
    let mut acc: Option<T> = None;
    for perm in permutations(n) {
        let mut inversions = 0;
        for a in 0..n {
            for b in a + 1..n {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let mut value = z.clone();
        for &i in perm.iter().rev() {
            value = bracket(&xs[i], &value)?;
        }
        let signed = if inversions % 2 == 0 { value } else { value.neg() };
        acc = Some(match acc {
            None => signed,
            Some(a) => a.add(&signed)?,
        });
    }
    Ok(acc.expect("at least one permutation"))
}

/// Strictly increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A counterexample to a standard identity.
#[derive(Debug, Clone)]
pub struct StWitness {
    /// Indices into the spanning set, alternated arguments then `z`.
    pub xs_idx: Vec<usize>,
    pub z_idx: usize,
    pub xs: Vec<String>,
    pub z: String,
    /// The nonzero value of the identity, printed.
    pub value: String,
}

/// Outcome of an exhaustive standard-identity scan.
#[derive(Debug, Clone)]
pub struct StReport {
    /// Which identity was scanned (`n` in `Stₙ`).
    pub identity: usize,
    pub degree_bound: usize,
    /// Printed names of the spanning elements `b·tᵏ`.
    pub spanning: Vec<String>,
    pub passed: bool,
    pub witness: Option<StWitness>,
}

/// Scans `Stₙ` with the Wronskian bracket over the spanning set
/// `{b·tᵏ : b basis of the algebra, k ≤ degree_bound}`.
///
/// The alternated arguments range over strictly increasing index tuples
/// (tuples with a repeat vanish by alternation, and permuted tuples only
/// change sign) while `z`, which is not alternated, ranges over the whole
/// spanning set.  Returns the first counterexample in enumeration order,
/// if any.
pub fn check_st_identity(
    algebra: &Arc<Algebra>,
    n: usize,
    degree_bound: usize,
    exec: Exec,
) -> Result<StReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::BadParams(format!(
            "supported identities are St₂ through St₆, got St{n}"
        )));
    }
    let mut spanning: Vec<CoeffPoly> = Vec::new();
    for k in 0..=degree_bound {
        for i in 0..algebra.dim() as u32 {
            spanning.push(CoeffPoly::term(AlgElt::basis(algebra, i)?, k));
        }
    }
    let names: Vec<String> = spanning.iter().map(|p| p.to_string()).collect();
    let xs_len = n - 1;
    if spanning.len() < xs_len {
        return Err(Error::BadParams(format!(
            "spanning set of size {} cannot fill {} alternated slots",
            spanning.len(),
            xs_len
        )));
    }
    let combos = combinations(spanning.len(), xs_len);
    let witness = scan_find(exec, &combos, |combo| {
        let xs: Vec<CoeffPoly> = combo.iter().map(|&i| spanning[i].clone()).collect();
        for (zi, z) in spanning.iter().enumerate() {
            let value = standard_identity(wronskian_bracket, &xs, z)
                .expect("same algebra throughout");
            if !value.is_zero() {
                return Some(StWitness {
                    xs_idx: combo.clone(),
                    z_idx: zi,
                    xs: combo.iter().map(|&i| names[i].clone()).collect(),
                    z: names[zi].clone(),
                    value: value.to_string(),
                });
            }
        }
        None
    });
    Ok(StReport {
        identity: n,
        degree_bound,
        spanning: names,
        passed: witness.is_none(),
        witness,
    })
}

/// A bilinear bracket given by a table on basis labels; missing entries
/// are zero.
#[derive(Debug, Clone)]
pub struct BracketTable {
    algebra: Arc<Algebra>,
    entries: HashMap<(u32, u32), AlgElt>,
}

impl BracketTable {
    pub fn new(algebra: &Arc<Algebra>) -> BracketTable {
        BracketTable {
            algebra: Arc::clone(algebra),
            entries: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Sets the bracket of two basis labels, replacing any previous entry.
    pub fn set(&mut self, left: &str, right: &str, value: AlgElt) -> Result<()> {
        if !same_algebra(&self.algebra, value.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let li = self
            .algebra
            .index_of(left)
            .ok_or_else(|| Error::BadParams(format!("unknown basis label `{left}`")))?;
        let ri = self
            .algebra
            .index_of(right)
            .ok_or_else(|| Error::BadParams(format!("unknown basis label `{right}`")))?;
        self.entries.insert((li, ri), value);
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn apply(&self, x: &AlgElt, y: &AlgElt) -> Result<AlgElt> {
        if !same_algebra(&self.algebra, x.algebra()) || !same_algebra(&self.algebra, y.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = AlgElt::zero(&self.algebra);
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                if let Some(v) = self.entries.get(&(i, j)) {
                    out.add_assign_scaled(v, &(a.clone() * b.clone()))?;
                }
            }
        }
        Ok(out)
    }
}

/// The Witt bracket table `⟨tⁱ,tʲ⟩ = (j−i)·t^{i+j}` over a Laurent window,
/// with products falling outside the window truncated to zero.
///
/// Truncation is *not* innocuous for identities: triples whose bracket
/// degrees leave the window can violate Jacobi spuriously, so checks should
/// stick to elements whose iterated brackets stay inside.
pub fn witt_table(lo: i64, hi: i64) -> Result<BracketTable> {
    let algebra = builtins::laurent_window(lo, hi)?;
    let mut table = BracketTable::new(&algebra);
    for i in lo..=hi {
        for j in lo..=hi {
            if i == j || i + j < lo || i + j > hi {
                continue;
            }
            let value = AlgElt::from_label(&algebra, &builtins::laurent_label(i + j))?
                .scale(&Rational::int(j - i));
            table.set(
                &builtins::laurent_label(i),
                &builtins::laurent_label(j),
                value,
            )?;
        }
    }
    Ok(table)
}

/// Outcome of antisymmetry plus Jacobi checks on a finite element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub elements: usize,
    /// First pair with `[x,y] + [y,x] ≠ 0`.
    pub antisymmetry_witness: Option<(usize, usize)>,
    /// First triple with a nonzero Jacobi cyclic sum.
    pub jacobi_witness: Option<(usize, usize, usize)>,
    pub passed: bool,
}

/// Verifies antisymmetry on all pairs and the Jacobi identity on all
/// triples of the given elements.
pub fn jacobi_check<T, F>(bracket: F, elements: &[T]) -> Result<JacobiReport>
where
    T: BracketSpace,
    F: Fn(&T, &T) -> Result<T>,
{
    let mut report = JacobiReport {
        elements: elements.len(),
        antisymmetry_witness: None,
        jacobi_witness: None,
        passed: true,
    };
    'anti: for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if !bracket(x, y)?.add(&bracket(y, x)?)?.is_zero() {
                report.antisymmetry_witness = Some((i, j));
                break 'anti;
            }
        }
    }
    'jac: for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            for (k, z) in elements.iter().enumerate() {
                let sum = bracket(x, &bracket(y, z)?)?
                    .add(&bracket(y, &bracket(z, x)?)?)?
                    .add(&bracket(z, &bracket(x, y)?)?)?;
                if !sum.is_zero() {
                    report.jacobi_witness = Some((i, j, k));
                    break 'jac;
                }
            }
        }
    }
    report.passed = report.antisymmetry_witness.is_none() && report.jacobi_witness.is_none();
    Ok(report)
}

/// `⟨x₁,…,x_m; y, z⟩` with the zero-length first group routed to the
/// binary bracket, which is how the bracket family enters its axioms.
fn bracket_multi(i_elts: &[GradedElt], b: &GradedElt, c: &GradedElt) -> Result<GradedElt> {
    if i_elts.is_empty() {
        sabinin_binary(b, c)
    } else {
        sabinin_closed(i_elts, b, c)
    }
}

/// All `(k, r−k)` splittings of `0..r` into two increasing subsequences,
/// for every `k`.
fn shuffle_splits(r: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 0..=r {
        for first in combinations(r, k) {
            let second: Vec<usize> = (0..r).filter(|i| !first.contains(i)).collect();
            out.push((first, second));
        }
    }
    out
}

/// Outcome of the bracket-axiom scan; `None` fields mean no counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Instances checked per axiom family.
    pub instances: (usize, usize, usize),
    pub antisymmetry_witness: Option<String>,
    pub exchange_witness: Option<String>,
    pub cyclic_witness: Option<String>,
    pub passed: bool,
}

/// Verifies the three bracket-axiom families on all tuples from `pool`.
///
/// `max_arity` bounds the length of the longest first group appearing in
/// any term (capped at 4: the shuffle sums grow quickly and the lowest
/// arities already exercise every term shape).  The axiom families are:
/// antisymmetry in the final pair; the exchange identity relating a
/// transposition inside the first group to shuffle sums of nested
/// brackets; and the cyclic identity whose `r = 0` case is Jacobi-like.
pub fn sabinin_axioms_check(
    pool: &[GradedElt],
    max_arity: usize,
    exec: Exec,
) -> Result<AxiomReport> {
    if pool.is_empty() {
        return Err(Error::EmptyArgs);
    }
    if !(1..=4).contains(&max_arity) {
        return Err(Error::BadParams(format!(
            "axiom check supports first-group arities 1 through 4, got {max_arity}"
        )));
    }
    for x in pool {
        if !same_algebra(pool[0].algebra(), x.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let p = pool.len();

    // Antisymmetry: ⟨x₁..x_m; y,z⟩ = −⟨x₁..x_m; z,y⟩ for m ≤ max_arity.
    let mut anti_tuples: Vec<(usize, Vec<usize>)> = Vec::new();
    for m in 0..=max_arity {
        for t in index_tuples(p, m + 2) {
            anti_tuples.push((m, t));
        }
    }
    let antisymmetry_witness = scan_find(exec, &anti_tuples, |(m, t)| {
        let is: Vec<GradedElt> = t[..*m].iter().map(|&i| pool[i].clone()).collect();
        let y = &pool[t[*m]];
        let z = &pool[t[*m + 1]];
        let lhs = bracket_multi(&is, y, z).expect("checked algebra");
        let rhs = bracket_multi(&is, z, y).expect("checked algebra");
        if lhs.value().add(rhs.value()).expect("same algebra").is_zero() {
            None
        } else {
            Some(format!("m={m} tuple {t:?}"))
        }
    });

    // Exchange: swapping adjacent first-group entries a,b at position r is
    // absorbed by shuffle sums of brackets nested in the first group.
    let mut exch_tuples: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    if max_arity >= 2 {
        for m in 0..=max_arity - 2 {
            for r in 0..=m {
                for t in index_tuples(p, m + 4) {
                    exch_tuples.push((m, r, t));
                }
            }
        }
    }
    let exchange_witness = scan_find(exec, &exch_tuples, |(m, r, t)| {
        let xs: Vec<GradedElt> = t[..*m].iter().map(|&i| pool[i].clone()).collect();
        let a = &pool[t[*m]];
        let b = &pool[t[*m + 1]];
        let y = &pool[t[*m + 2]];
        let z = &pool[t[*m + 3]];
        let eval = || -> Result<AlgElt> {
            let group = |first: &GradedElt, second: &GradedElt| -> Vec<GradedElt> {
                let mut g: Vec<GradedElt> = xs[..*r].to_vec();
                g.push(first.clone());
                g.push(second.clone());
                g.extend_from_slice(&xs[*r..]);
                g
            };
            let mut sum = bracket_multi(&group(a, b), y, z)?.into_value();
            sum = sum.sub(bracket_multi(&group(b, a), y, z)?.value())?;
            for (alpha1, alpha2) in shuffle_splits(*r) {
                let inner_args: Vec<GradedElt> =
                    alpha2.iter().map(|&i| xs[i].clone()).collect();
                let inner = bracket_multi(&inner_args, a, b)?;
                let mut outer: Vec<GradedElt> =
                    alpha1.iter().map(|&i| xs[i].clone()).collect();
                outer.push(inner);
                outer.extend_from_slice(&xs[*r..]);
                sum = sum.add(bracket_multi(&outer, y, z)?.value())?;
            }
            Ok(sum)
        };
        let sum = eval().expect("checked algebra");
        if sum.is_zero() {
            None
        } else {
            Some(format!("m={m} r={r} tuple {t:?}"))
        }
    });

    // Cyclic: σ_{x,y,z}(⟨x₁..x_r,x;y,z⟩ + Σ ⟨x_{α₁}..; ⟨x_{α_{k+1}}..; y,z⟩, x⟩) = 0.
    let mut cyc_tuples: Vec<(usize, Vec<usize>)> = Vec::new();
    for r in 0..max_arity {
        for t in index_tuples(p, r + 3) {
            cyc_tuples.push((r, t));
        }
    }
    let cyclic_witness = scan_find(exec, &cyc_tuples, |(r, t)| {
        let xs: Vec<GradedElt> = t[..*r].iter().map(|&i| pool[i].clone()).collect();
        let x = &pool[t[*r]];
        let y = &pool[t[*r + 1]];
        let z = &pool[t[*r + 2]];
        let eval = || -> Result<AlgElt> {
            let mut sum = AlgElt::zero(pool[0].algebra());
            for (p1, q1, s1) in [(x, y, z), (y, z, x), (z, x, y)] {
                let mut head = xs.clone();
                head.push(p1.clone());
                sum = sum.add(bracket_multi(&head, q1, s1)?.value())?;
                for (alpha1, alpha2) in shuffle_splits(*r) {
                    let inner_args: Vec<GradedElt> =
                        alpha2.iter().map(|&i| xs[i].clone()).collect();
                    let inner = bracket_multi(&inner_args, q1, s1)?;
                    let outer_args: Vec<GradedElt> =
                        alpha1.iter().map(|&i| xs[i].clone()).collect();
                    sum = sum.add(bracket_multi(&outer_args, &inner, p1)?.value())?;
                }
            }
            Ok(sum)
        };
        let sum = eval().expect("checked algebra");
        if sum.is_zero() {
            None
        } else {
            Some(format!("r={r} tuple {t:?}"))
        }
    });

    Ok(AxiomReport {
        instances: (anti_tuples.len(), exch_tuples.len(), cyc_tuples.len()),
        passed: antisymmetry_witness.is_none()
            && exchange_witness.is_none()
            && cyclic_witness.is_none(),
        antisymmetry_witness,
        exchange_witness,
        cyclic_witness,
    })
}

/// All `len`-tuples of indices below `p`.
fn index_tuples(p: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * p);
        for t in &out {
            for i in 0..p {
                let mut nt = t.clone();
                nt.push(i);
                next.push(nt);
            }
        }
        out = next;
    }
    out
}

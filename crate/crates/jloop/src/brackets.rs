//! Degree-tagged algebra elements, the `∗`-product, the recursive
//! p-operations, and the closed-form brackets they specialize to.
//!
//! The bilinear product `x ∗ y := (deg x + 1)·x·y` on degree-tagged elements
//! captures the linearization of series substitution.  Out of any bilinear
//! product one obtains a family of multilinear brackets via the p-operation
//! recursion implemented by [`su_p`]; for this particular product the
//! brackets admit the closed form implemented by [`sabinin_closed`], a sum
//! over deconcatenations of the index sequence weighted by the scalars
//! [`n_coefficient`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{same_algebra, AlgElt, Algebra};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// An algebra element tagged with an integer degree.
///
/// The tag drives every scalar in the `∗`-product and bracket formulas.  On
/// a graded algebra the value must be homogeneous of the stated degree; on
/// an ungraded algebra the tag is purely positional, which is what the
/// split-null constructions need (the same ring reappears in many degrees,
/// including negative ones).
#[derive(Debug, Clone, PartialEq)]
pub struct GradedElt {
    degree: i64,
    value: AlgElt,
}

impl GradedElt {
    /// Tags `value` with `degree`, checking homogeneity on graded algebras.
    pub fn new(degree: i64, value: AlgElt) -> Result<GradedElt> {
        if value.algebra().is_graded() && !value.is_zero() {
            match value.homogeneous_degree() {
                Some(d) if d == degree => {}
                Some(d) => {
                    return Err(Error::GradingViolation(format!(
                        "declared degree {degree} but value is homogeneous of degree {d}"
                    )))
                }
                None => {
                    return Err(Error::GradingViolation(format!(
                        "declared degree {degree} but value `{value}` is not homogeneous"
                    )))
                }
            }
        }
        Ok(GradedElt { degree, value })
    }

    /// The zero element in the given degree.
    pub fn zero(algebra: &Arc<Algebra>, degree: i64) -> GradedElt {
        GradedElt {
            degree,
            value: AlgElt::zero(algebra),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn value(&self) -> &AlgElt {
        &self.value
    }

    pub fn into_value(self) -> AlgElt {
        self.value
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.value.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for GradedElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self.value)
    }
}

fn check_same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// The product `x ∗ y = (deg x + 1)·x·y`, of degree `deg x + deg y`.
pub fn star_graded(x: &GradedElt, y: &GradedElt) -> Result<GradedElt> {
    check_same_algebra(x.algebra(), y.algebra())?;
    let value = x
        .value
        .mul(&y.value)?
        .scale(&Rational::int(x.degree + 1));
    Ok(GradedElt {
        degree: x.degree + y.degree,
        value,
    })
}

/// A `∗`-factor that may be the formal unit.
///
/// The p-operation recursion multiplies by `∗`-products over possibly empty
/// index subsequences; the empty product is a formal unit that acts as a
/// two-sided identity for `∗` without requiring the coefficient algebra to
/// be unital.
#[derive(Debug, Clone, PartialEq)]
pub enum StarElt {
    Unit,
    Elt(GradedElt),
}

impl StarElt {
    /// `∗`-product with the formal unit absorbed on either side.
    pub fn star(&self, other: &StarElt) -> Result<StarElt> {
        match (self, other) {
            (StarElt::Unit, y) => Ok(y.clone()),
            (x, StarElt::Unit) => Ok(x.clone()),
            (StarElt::Elt(x), StarElt::Elt(y)) => Ok(StarElt::Elt(star_graded(x, y)?)),
        }
    }

    /// The tagged element, unless this is the formal unit.
    pub fn as_graded(&self) -> Option<&GradedElt> {
        match self {
            StarElt::Unit => None,
            StarElt::Elt(x) => Some(x),
        }
    }
}

/// The left-normed product `((x₁ ∗ x₂) ∗ ⋯) ∗ xₘ`; the empty list gives the
/// formal unit.
pub fn left_normed_star(elts: &[GradedElt]) -> Result<StarElt> {
    let mut acc = StarElt::Unit;
    for x in elts {
        acc = acc.star(&StarElt::Elt(x.clone()))?;
    }
    Ok(acc)
}

/// The scalar `N(I) = (i₁+1)(i₁+i₂+1)⋯(i₁+⋯+iₘ+1)`; `N(∅) = 1`.
pub fn n_coefficient(degrees: &[i64]) -> Rational {
    let mut out = Rational::one();
    let mut partial = 0i64;
    for &d in degrees {
        partial += d;
        out = out * Rational::int(partial + 1);
    }
    out
}

/// All splittings of the positions `0..m` into `k` nonempty ordered blocks.
///
/// Each block lists its positions in increasing order, so a block names an
/// order-preserving subsequence; jointly the blocks partition the position
/// set.  The number of results is `k!·S(m,k)` (Stirling numbers of the
/// second kind) — equivalently, the number of surjections `{0..m} → {0..k}`.
pub fn deconcatenations(m: usize, k: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    if k == 0 || k > m {
        return Err(Error::KTooLarge { m, k });
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    fn assign(
        pos: usize,
        m: usize,
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == m {
            if blocks.iter().all(|b| !b.is_empty()) {
                out.push(blocks.clone());
            }
            return;
        }
        // Prune: the remaining positions must be able to fill every still
        // empty block.
        let empty = blocks.iter().filter(|b| b.is_empty()).count();
        if empty > m - pos {
            return;
        }
        for b in 0..k {
            blocks[b].push(pos);
            assign(pos + 1, m, k, blocks, out);
            blocks[b].pop();
        }
    }
    assign(0, m, k, &mut blocks, &mut out);
    Ok(out)
}

/// The binary bracket `⟨a,b⟩ = b∗a − a∗b = (deg b + 1)·ba − (deg a + 1)·ab`.
pub fn sabinin_binary(a: &GradedElt, b: &GradedElt) -> Result<GradedElt> {
    check_same_algebra(a.algebra(), b.algebra())?;
    let mut value = b.value.mul(&a.value)?.scale(&Rational::int(b.degree + 1));
    value = value.sub(&a.value.mul(&b.value)?.scale(&Rational::int(a.degree + 1)))?;
    Ok(GradedElt {
        degree: a.degree + b.degree,
        value,
    })
}

/// The closed form of the multilinear bracket `⟨a_I; b, c⟩`, `l(I) ≥ 1`:
///
/// ```text
/// Σ_{k≥1} Σ_{deconcatenations (I⁽¹⁾,…,I⁽ᵏ⁾)}
///     (−1)^{k+1} |I⁽ᵏ⁾| N(I⁽¹⁾)⋯N(I⁽ᵏ⁾) · a_{I⁽¹⁾}⋯a_{I⁽ᵏ⁾} · [c,b]
/// ```
///
/// where `a_{I⁽ʲ⁾}` is the plain ordered product over the block,
/// `|I⁽ᵏ⁾|` is the degree sum of the last block, and `[c,b] = cb − bc`.
/// The empty index list is *not* routed to [`sabinin_binary`]: the two
/// entry points are deliberately distinct operations.
pub fn sabinin_closed(i_elts: &[GradedElt], b: &GradedElt, c: &GradedElt) -> Result<GradedElt> {
    if i_elts.is_empty() {
        return Err(Error::EmptyI);
    }
    let algebra = b.algebra();
    check_same_algebra(algebra, c.algebra())?;
    for x in i_elts {
        check_same_algebra(algebra, x.algebra())?;
    }
    let m = i_elts.len();
    let cb = c.value.commutator(&b.value)?;
    let degree =
        i_elts.iter().map(GradedElt::degree).sum::<i64>() + b.degree + c.degree;
    let mut acc = AlgElt::zero(algebra);
    if cb.is_zero() {
        return Ok(GradedElt { degree, value: acc });
    }
    for k in 1..=m {
        let sign = if k % 2 == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        for blocks in deconcatenations(m, k)? {
            let last_sum: i64 = blocks[k - 1].iter().map(|&p| i_elts[p].degree).sum();
            let mut scalar = sign.clone() * Rational::int(last_sum);
            for block in &blocks {
                let degs: Vec<i64> = block.iter().map(|&p| i_elts[p].degree).collect();
                scalar = scalar * n_coefficient(&degs);
            }
            if scalar.is_zero() {
                continue;
            }
            let mut word: Option<AlgElt> = None;
            for &p in blocks.iter().flatten() {
                word = Some(match word {
                    None => i_elts[p].value.clone(),
                    Some(w) => w.mul(&i_elts[p].value)?,
                });
            }
            let word = word.expect("blocks are nonempty").mul(&cb)?;
            acc.add_assign_scaled(&word, &scalar)?;
        }
    }
    Ok(GradedElt { degree, value: acc })
}

/// Memoized evaluation context for one top-level p-operation call.
struct PCtx<'a> {
    xs: &'a [GradedElt],
    ys: &'a [GradedElt],
    a: &'a GradedElt,
    memo: HashMap<(u32, u32), AlgElt>,
}

/// Submasks of `mask`, from `mask` itself down to `0`.
fn submasks(mask: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut s = mask;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out
}

impl<'a> PCtx<'a> {
    fn selected(elts: &[GradedElt], mask: u32) -> Vec<GradedElt> {
        elts.iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, x)| x.clone())
            .collect()
    }

    fn degree(&self, mask_i: u32, mask_j: u32) -> i64 {
        let di: i64 = Self::selected(self.xs, mask_i)
            .iter()
            .map(GradedElt::degree)
            .sum();
        let dj: i64 = Self::selected(self.ys, mask_j)
            .iter()
            .map(GradedElt::degree)
            .sum();
        di + dj + self.a.degree
    }

    /// The head factor `a*_{I₁} ∗ a*_{J₁}` for the given subsequence masks.
    fn head(&self, mask_i: u32, mask_j: u32) -> Result<StarElt> {
        let ai = left_normed_star(&Self::selected(self.xs, mask_i))?;
        let aj = left_normed_star(&Self::selected(self.ys, mask_j))?;
        ai.star(&aj)
    }

    /// `p` over the index subsequences named by the masks.
    ///
    /// Defined by solving the fundamental formula
    /// `(a*_I ∗ a*_J) ∗ a − a*_I ∗ (a*_J ∗ a)
    ///    = Σ_{I₁⊆I, J₁⊆J} (a*_{I₁} ∗ a*_{J₁}) ∗ p(I∖I₁; J∖J₁; a)`
    /// for the top term: the `(∅,∅)` summand is `p(I;J;a)` itself, and the
    /// `(I,J)` summand is dropped because `p(∅;∅;a)` never appears (the
    /// formula is only solved for `l(I)+l(J) ≥ 1`; the empty case is taken
    /// as zero so the recursion needs no extra bookkeeping).
    fn p(&mut self, mask_i: u32, mask_j: u32) -> Result<AlgElt> {
        if mask_i == 0 && mask_j == 0 {
            return Ok(AlgElt::zero(self.a.algebra()));
        }
        if let Some(v) = self.memo.get(&(mask_i, mask_j)) {
            return Ok(v.clone());
        }
        let sa = StarElt::Elt(self.a.clone());
        let ai = left_normed_star(&Self::selected(self.xs, mask_i))?;
        let aj = left_normed_star(&Self::selected(self.ys, mask_j))?;
        let assoc_left = ai.star(&aj)?.star(&sa)?;
        let assoc_right = ai.star(&aj.star(&sa)?)?;
        let mut acc = assoc_left
            .as_graded()
            .expect("rightmost factor is an element")
            .value()
            .sub(
                assoc_right
                    .as_graded()
                    .expect("rightmost factor is an element")
                    .value(),
            )?;
        for sub_i in submasks(mask_i) {
            for sub_j in submasks(mask_j) {
                if (sub_i, sub_j) == (0, 0) || (sub_i, sub_j) == (mask_i, mask_j) {
                    continue;
                }
                let rest_val = self.p(mask_i & !sub_i, mask_j & !sub_j)?;
                if rest_val.is_zero() {
                    continue;
                }
                let rest = StarElt::Elt(GradedElt {
                    degree: self.degree(mask_i & !sub_i, mask_j & !sub_j),
                    value: rest_val,
                });
                let term = self.head(sub_i, sub_j)?.star(&rest)?;
                acc = acc.sub(
                    term.as_graded()
                        .expect("rightmost factor is an element")
                        .value(),
                )?;
            }
        }
        self.memo.insert((mask_i, mask_j), acc.clone());
        Ok(acc)
    }
}

/// The p-operation `p(x₁,…,xₘ; y₁,…,yₙ; a)` defined by the fundamental
/// formula of the `∗`-product (evaluated by a memoized subset recursion).
///
/// Requires `m + n ≥ 1`; the argument lists are capped at 16 combined
/// entries because the recursion enumerates index subsequences by bitmask.
pub fn su_p(xs: &[GradedElt], ys: &[GradedElt], a: &GradedElt) -> Result<GradedElt> {
    if xs.is_empty() && ys.is_empty() {
        return Err(Error::EmptyArgs);
    }
    if xs.len() + ys.len() > 16 {
        return Err(Error::BadParams(format!(
            "p-operation supports at most 16 combined arguments, got {}",
            xs.len() + ys.len()
        )));
    }
    for x in xs.iter().chain(ys) {
        check_same_algebra(a.algebra(), x.algebra())?;
    }
    let full_i = (1u32 << xs.len()) - 1;
    let full_j = (1u32 << ys.len()) - 1;
    let mut ctx = PCtx {
        xs,
        ys,
        a,
        memo: HashMap::new(),
    };
    let degree = ctx.degree(full_i, full_j);
    let value = ctx.p(full_i, full_j)?;
    Ok(GradedElt { degree, value })
}

/// The multilinear bracket through the p-operations:
/// `⟨a_I; b, c⟩ = p(a_I; c; b) − p(a_I; b; c)`, `l(I) ≥ 1`.
pub fn su_bracket(i_elts: &[GradedElt], b: &GradedElt, c: &GradedElt) -> Result<GradedElt> {
    if i_elts.is_empty() {
        return Err(Error::EmptyI);
    }
    let lhs = su_p(i_elts, std::slice::from_ref(c), b)?;
    let rhs = su_p(i_elts, std::slice::from_ref(b), c)?;
    Ok(GradedElt {
        degree: lhs.degree,
        value: lhs.value.sub(&rhs.value)?,
    })
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// The multioperator
/// `Φ(x₁,…,xₘ; y₁,…,y_{n+1}) = (m!(n+1)!)⁻¹ Σ_{σ,τ} p(x_σ; y_{τ(1)},…,y_{τ(n)}; y_{τ(n+1)})`,
/// totally symmetric in each argument group; `m ≥ 1`, `n+1 ≥ 2`.
pub fn multioperator_phi(xs: &[GradedElt], ys: &[GradedElt]) -> Result<GradedElt> {
    if xs.is_empty() || ys.len() < 2 {
        return Err(Error::BadArity(format!(
            "Φ needs at least one first-group and two second-group arguments, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() > 6 || ys.len() > 6 {
        return Err(Error::BadArity(
            "Φ symmetrizes over both groups; at most 6 arguments per group".into(),
        ));
    }
    let algebra = xs[0].algebra();
    let mut acc = AlgElt::zero(algebra);
    let n1 = ys.len();
    for sigma in permutations(xs.len()) {
        let px: Vec<GradedElt> = sigma.iter().map(|&i| xs[i].clone()).collect();
        for tau in permutations(n1) {
            let py: Vec<GradedElt> = tau[..n1 - 1].iter().map(|&j| ys[j].clone()).collect();
            let pa = &ys[tau[n1 - 1]];
            acc = acc.add(su_p(&px, &py, pa)?.value())?;
        }
    }
    let scale = (Rational::factorial(xs.len() as u64)
        * Rational::factorial(n1 as u64))
    .recip()?;
    let degree = xs.iter().chain(ys).map(GradedElt::degree).sum::<i64>();
    Ok(GradedElt {
        degree,
        value: acc.scale(&scale),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn free(gens: &[(&str, i64)], max: i64) -> Arc<Algebra> {
        Algebra::free_truncated("free", gens, max).unwrap()
    }

    fn gelt(algebra: &Arc<Algebra>, label: &str, degree: i64) -> GradedElt {
        GradedElt::new(degree, AlgElt::from_label(algebra, label).unwrap()).unwrap()
    }

    #[test]
    fn star_product_and_left_normed_fold() {
        let alg = free(&[("a", 2), ("b", 3)], 5);
        let a = gelt(&alg, "a", 2);
        let b = gelt(&alg, "b", 3);
        let ab = star_graded(&a, &b).unwrap();
        assert_eq!(ab.degree(), 5);
        assert_eq!(
            *ab.value(),
            AlgElt::from_label(&alg, "a*b").unwrap().scale(&Rational::int(3))
        );

        // Left-normed products carry the prefactor
        // (i₁+1)(i₁+i₂+1)⋯(i₁+⋯+i_{m−1}+1): every factor of N(I) except the
        // last one.
        let alg = free(&[("x", 1), ("y", 2), ("z", 1)], 4);
        let elts = [gelt(&alg, "x", 1), gelt(&alg, "y", 2), gelt(&alg, "z", 1)];
        let prod = left_normed_star(&elts).unwrap();
        let prod = prod.as_graded().unwrap();
        assert_eq!(prod.degree(), 4);
        assert_eq!(
            *prod.value(),
            AlgElt::from_label(&alg, "x*y*z")
                .unwrap()
                .scale(&Rational::int(2 * 4))
        );
        let single = left_normed_star(&elts[..1]).unwrap();
        assert_eq!(single.as_graded().unwrap(), &elts[0]);
        assert_eq!(left_normed_star(&[]).unwrap(), StarElt::Unit);

        assert_eq!(n_coefficient(&[]), Rational::one());
        assert_eq!(n_coefficient(&[1, 2, 1]), Rational::int(2 * 4 * 5));
    }

    #[test]
    fn deconcatenation_enumeration_and_counts() {
        assert_eq!(deconcatenations(1, 1).unwrap(), vec![vec![vec![0]]]);

        let two = deconcatenations(2, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&vec![vec![0], vec![1]]));
        assert!(two.contains(&vec![vec![1], vec![0]]));

        // Counts are k!·S(m,k): surjections onto labelled blocks.
        let stirling = [
            (3, 2, 3),
            (3, 3, 1),
            (4, 2, 7),
            (4, 3, 6),
            (5, 2, 15),
            (5, 3, 25),
            (5, 4, 10),
        ];
        for (m, k, s) in stirling {
            let expect = (1..=k as u64).product::<u64>() * s;
            assert_eq!(
                deconcatenations(m, k).unwrap().len() as u64,
                expect,
                "m={m} k={k}"
            );
        }
        // Every block preserves position order.
        for blocks in deconcatenations(4, 2).unwrap() {
            for block in blocks {
                assert!(block.windows(2).all(|w| w[0] < w[1]));
            }
        }

        assert!(matches!(
            deconcatenations(2, 3),
            Err(Error::KTooLarge { m: 2, k: 3 })
        ));
        assert!(matches!(
            deconcatenations(3, 0),
            Err(Error::KTooLarge { m: 3, k: 0 })
        ));
    }

    /// The three bracket displays in low arity, as identities in free
    /// generators: `⟨a,b⟩ = (|b|+1)ba − (|a|+1)ab`,
    /// `⟨a_i;b,c⟩ = i(i+1)·a[c,b]`, and `⟨a_i,a_j;b,c⟩ =
    /// i(i+1)(i+2j+1)·ab[c,b] − i(i+1)(j+1)·ba[c,b]`.
    #[test]
    fn closed_form_reproduces_low_arity_displays() {
        for (i, j) in [(1i64, 1i64), (1, 2), (2, 3)] {
            let alg = free(&[("a", i), ("b", j), ("y", 1), ("z", 1)], i + j + 2);
            let a = gelt(&alg, "a", i);
            let b = gelt(&alg, "b", j);
            let y = gelt(&alg, "y", 1);
            let z = gelt(&alg, "z", 1);

            let bin = sabinin_binary(&a, &b).unwrap();
            let expect = AlgElt::from_label(&alg, "b*a")
                .unwrap()
                .scale(&Rational::int(j + 1))
                .sub(
                    &AlgElt::from_label(&alg, "a*b")
                        .unwrap()
                        .scale(&Rational::int(i + 1)),
                )
                .unwrap();
            assert_eq!(*bin.value(), expect);
            assert_eq!(bin.degree(), i + j);

            let zy = z.value().commutator(y.value()).unwrap();
            let unary = sabinin_closed(std::slice::from_ref(&a), &y, &z).unwrap();
            let expect = a.value().mul(&zy).unwrap().scale(&Rational::int(i * (i + 1)));
            assert_eq!(*unary.value(), expect);
            assert_eq!(unary.degree(), i + 2);

            let binary_i = sabinin_closed(&[a.clone(), b.clone()], &y, &z).unwrap();
            let mut expect = a
                .value()
                .mul(b.value())
                .unwrap()
                .mul(&zy)
                .unwrap()
                .scale(&Rational::int(i * (i + 1) * (i + 2 * j + 1)));
            expect = expect
                .sub(
                    &b.value()
                        .mul(a.value())
                        .unwrap()
                        .mul(&zy)
                        .unwrap()
                        .scale(&Rational::int(i * (i + 1) * (j + 1))),
                )
                .unwrap();
            assert_eq!(*binary_i.value(), expect);
        }
    }

    #[test]
    fn p_on_singletons_is_the_star_associator() {
        let alg = free(&[("x", 1), ("y", 2), ("z", 1)], 4);
        let x = gelt(&alg, "x", 1);
        let y = gelt(&alg, "y", 2);
        let z = gelt(&alg, "z", 1);
        let p = su_p(
            std::slice::from_ref(&x),
            std::slice::from_ref(&y),
            &z,
        )
        .unwrap();
        let left = star_graded(&star_graded(&x, &y).unwrap(), &z).unwrap();
        let right = star_graded(&x, &star_graded(&y, &z).unwrap()).unwrap();
        assert_eq!(*p.value(), left.value().sub(right.value()).unwrap());
        assert_eq!(p.degree(), 4);

        // One-sided lists collapse: the formal unit absorbs.
        assert!(su_p(&[], std::slice::from_ref(&y), &z).unwrap().is_zero());
        assert!(su_p(std::slice::from_ref(&x), &[], &z).unwrap().is_zero());
        assert!(matches!(su_p(&[], &[], &z), Err(Error::EmptyArgs)));
    }

    #[test]
    fn recursion_matches_closed_form_in_low_arity() {
        let alg = free(&[("a", 1), ("b", 2), ("y", 1), ("z", 1)], 7);
        let a = gelt(&alg, "a", 1);
        let b = gelt(&alg, "b", 2);
        let y = gelt(&alg, "y", 1);
        let z = gelt(&alg, "z", 1);
        let lists: Vec<Vec<GradedElt>> = vec![
            vec![a.clone()],
            vec![b.clone()],
            vec![a.clone(), b.clone()],
            vec![b.clone(), a.clone()],
            vec![a.clone(), a.clone(), b.clone()],
        ];
        for i_elts in lists {
            let via_p = su_bracket(&i_elts, &y, &z).unwrap();
            let closed = sabinin_closed(&i_elts, &y, &z).unwrap();
            assert_eq!(via_p, closed, "I degrees {:?}", {
                i_elts.iter().map(GradedElt::degree).collect::<Vec<_>>()
            });
        }
    }

    /// The expansion used to derive the closed form:
    /// `(a*_I ∗ c)∗b − (a*_I ∗ b)∗c = a*_I ∗ ⟨b,c⟩
    ///   + Σ_{(I⁽¹⁾,I⁽²⁾), I⁽²⁾≠∅} a*_{I⁽¹⁾} ∗ ⟨a_{I⁽²⁾}; b, c⟩`
    /// with the sum over complementary subsequence pairs.
    #[test]
    fn deconcatenation_expansion_identity() {
        let alg = free(&[("a", 1), ("b", 2), ("y", 1), ("z", 1)], 7);
        let y = gelt(&alg, "y", 1);
        let z = gelt(&alg, "z", 1);
        let lists: Vec<Vec<GradedElt>> = vec![
            vec![gelt(&alg, "a", 1)],
            vec![gelt(&alg, "a", 1), gelt(&alg, "b", 2)],
            vec![gelt(&alg, "b", 2), gelt(&alg, "a", 1)],
        ];
        for i_elts in lists {
            let ai = left_normed_star(&i_elts).unwrap();
            let sy = StarElt::Elt(y.clone());
            let sz = StarElt::Elt(z.clone());
            let lhs = ai
                .star(&sz)
                .unwrap()
                .star(&sy)
                .unwrap()
                .as_graded()
                .unwrap()
                .value()
                .sub(
                    ai.star(&sy)
                        .unwrap()
                        .star(&sz)
                        .unwrap()
                        .as_graded()
                        .unwrap()
                        .value(),
                )
                .unwrap();

            let mut rhs = ai
                .star(&StarElt::Elt(sabinin_binary(&y, &z).unwrap()))
                .unwrap()
                .as_graded()
                .unwrap()
                .value()
                .clone();
            let m = i_elts.len();
            for mask in 0..(1u32 << m) {
                let tail: Vec<GradedElt> = (0..m)
                    .filter(|p| mask & (1 << p) != 0)
                    .map(|p| i_elts[p].clone())
                    .collect();
                if tail.is_empty() {
                    continue;
                }
                let headline: Vec<GradedElt> = (0..m)
                    .filter(|p| mask & (1 << p) == 0)
                    .map(|p| i_elts[p].clone())
                    .collect();
                let head = left_normed_star(&headline).unwrap();
                let bracket = sabinin_closed(&tail, &y, &z).unwrap();
                rhs = rhs
                    .add(
                        head.star(&StarElt::Elt(bracket))
                            .unwrap()
                            .as_graded()
                            .unwrap()
                            .value(),
                    )
                    .unwrap();
            }
            assert_eq!(lhs, rhs);
        }
    }

    /// Over a commutative coefficient algebra the binary bracket is the Witt
    /// bracket `⟨tⁱ,tʲ⟩ = (j−i)t^{i+j}` and every bracket with `l(I) ≥ 1`
    /// vanishes, because each closed-form term ends in `[c,b] = 0`.
    #[test]
    fn laurent_window_witt_table_and_vanishing() {
        let win = builtins::laurent_window(-4, 4).unwrap();
        let t = |i: i64| gelt(&win, &builtins::laurent_label(i), i);
        for i in -4..=4i64 {
            for j in -4..=4i64 {
                if i + j < -4 || i + j > 4 {
                    continue;
                }
                let bracket = sabinin_binary(&t(i), &t(j)).unwrap();
                let expect = AlgElt::from_label(&win, &builtins::laurent_label(i + j))
                    .unwrap()
                    .scale(&Rational::int(j - i));
                assert_eq!(*bracket.value(), expect, "i={i} j={j}");
            }
        }
        for degs in [
            vec![1i64],
            vec![-2],
            vec![1, 1],
            vec![2, -1],
            vec![-1, -1],
        ] {
            let i_elts: Vec<GradedElt> = degs.iter().map(|&d| t(d)).collect();
            for (db, dc) in [(1i64, 1i64), (1, 2), (-1, 2)] {
                let v = sabinin_closed(&i_elts, &t(db), &t(dc)).unwrap();
                assert!(v.is_zero(), "I={degs:?} b={db} c={dc}");
                let p = su_bracket(&i_elts, &t(db), &t(dc)).unwrap();
                assert!(p.is_zero());
            }
        }
    }

    /// Positional-degree brackets over the split-null extensions: with
    /// `I = (−2, −1, …, −1)` (`m` entries, all the element `e`) and
    /// degree-0 second-group entries `x, y`, the closed form collapses to
    /// its one-block term `(−1)^{m+1}(m+1)!·eᵐ[y,x]`, which is nonzero for
    /// `m < n` and zero once `eᵐ` annihilates the commutators
    /// (`m = n, n+1`).
    #[test]
    fn split_null_positional_brackets() {
        for n in [2usize, 3] {
            let alg = builtins::split_null(n).unwrap();
            let e = AlgElt::from_label(&alg, "e").unwrap();
            for m in 1..=(n + 1) {
                let mut i_elts = vec![GradedElt::new(-2, e.clone()).unwrap()];
                for _ in 1..m {
                    i_elts.push(GradedElt::new(-1, e.clone()).unwrap());
                }
                let mut e_pow = e.clone();
                for _ in 1..m {
                    e_pow = e_pow.mul(&e).unwrap();
                }
                let sign = if m % 2 == 1 { 1 } else { -1 };
                let scalar =
                    Rational::int(sign) * Rational::factorial(m as u64 + 1);
                for xl in alg.labels() {
                    for yl in alg.labels() {
                        let x = AlgElt::from_label(&alg, xl).unwrap();
                        let y = AlgElt::from_label(&alg, yl).unwrap();
                        let bracket = sabinin_closed(
                            &i_elts,
                            &GradedElt::new(0, x.clone()).unwrap(),
                            &GradedElt::new(0, y.clone()).unwrap(),
                        )
                        .unwrap();
                        let expect = e_pow
                            .mul(&y.commutator(&x).unwrap())
                            .unwrap()
                            .scale(&scalar);
                        assert_eq!(*bracket.value(), expect, "n={n} m={m} x={xl} y={yl}");
                        if m >= n {
                            assert!(bracket.is_zero(), "n={n} m={m} x={xl} y={yl}");
                        }
                        if m < n && xl == "e" && yl == "v0" {
                            assert!(!bracket.is_zero(), "n={n} m={m}");
                        }
                    }
                }
                // The vanishing mechanism: eⁿ kills every commutator.
                if m == n {
                    for xl in alg.labels() {
                        for yl in alg.labels() {
                            let x = AlgElt::from_label(&alg, xl).unwrap();
                            let y = AlgElt::from_label(&alg, yl).unwrap();
                            assert!(e_pow
                                .mul(&x.commutator(&y).unwrap())
                                .unwrap()
                                .is_zero());
                        }
                    }
                }
            }
            // Nonnilpotence witness: iterated binary brackets of e against
            // v⁰ stay nonzero (the v⁰ coordinate survives every step).
            let mut w = GradedElt::new(0, AlgElt::from_label(&alg, "v0").unwrap()).unwrap();
            let e0 = GradedElt::new(0, e.clone()).unwrap();
            for len in 1..=n {
                w = sabinin_binary(&e0, &w).unwrap();
                assert!(!w.is_zero(), "n={n} len={len}");
            }
        }
    }

    #[test]
    fn phi_is_symmetric_in_both_groups() {
        let alg = free(&[("a", 1), ("b", 1), ("c", 2), ("d", 1)], 6);
        let a = gelt(&alg, "a", 1);
        let b = gelt(&alg, "b", 1);
        let c = gelt(&alg, "c", 2);
        let d = gelt(&alg, "d", 1);

        let f1 = multioperator_phi(&[a.clone(), b.clone()], &[c.clone(), d.clone()]).unwrap();
        let f2 = multioperator_phi(&[b.clone(), a.clone()], &[c.clone(), d.clone()]).unwrap();
        let f3 = multioperator_phi(&[a.clone(), b.clone()], &[d.clone(), c.clone()]).unwrap();
        assert_eq!(f1, f2);
        assert_eq!(f1, f3);

        // m = n = 1 unfolds to the two-term average.
        let phi = multioperator_phi(std::slice::from_ref(&a), &[c.clone(), d.clone()]).unwrap();
        let p1 = su_p(
            std::slice::from_ref(&a),
            std::slice::from_ref(&c),
            &d,
        )
        .unwrap();
        let p2 = su_p(
            std::slice::from_ref(&a),
            std::slice::from_ref(&d),
            &c,
        )
        .unwrap();
        let expect = p1.value().add(p2.value()).unwrap().scale(&Rational::new(1, 2).unwrap());
        assert_eq!(*phi.value(), expect);

        // Repeated second-group arguments collapse the symmetrization.
        let phi_bb = multioperator_phi(std::slice::from_ref(&a), &[b.clone(), b.clone()]).unwrap();
        let p_bb = su_p(
            std::slice::from_ref(&a),
            std::slice::from_ref(&b),
            &b,
        )
        .unwrap();
        assert_eq!(phi_bb, p_bb);

        assert!(matches!(
            multioperator_phi(&[], &[c.clone(), d.clone()]),
            Err(Error::BadArity(_))
        ));
        assert!(matches!(
            multioperator_phi(std::slice::from_ref(&a), std::slice::from_ref(&c)),
            Err(Error::BadArity(_))
        ));
    }

    #[test]
    fn degree_tags_and_mismatches_are_checked() {
        let win = builtins::laurent_window(-2, 2).unwrap();
        let t1 = AlgElt::from_label(&win, "t1").unwrap();
        assert!(matches!(
            GradedElt::new(2, t1.clone()),
            Err(Error::GradingViolation(_))
        ));
        let mixed = t1.add(&AlgElt::from_label(&win, "t2").unwrap()).unwrap();
        assert!(matches!(
            GradedElt::new(1, mixed),
            Err(Error::GradingViolation(_))
        ));

        let other = builtins::ev_algebra().unwrap();
        let x = GradedElt::new(1, t1).unwrap();
        let y = GradedElt::new(1, AlgElt::from_label(&other, "e").unwrap()).unwrap();
        assert!(matches!(star_graded(&x, &y), Err(Error::AlgebraMismatch)));
        assert!(matches!(
            sabinin_closed(&[], &x, &x.clone()),
            Err(Error::EmptyI)
        ));
    }
}

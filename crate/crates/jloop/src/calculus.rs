//! Loop-word calculus on series: deviations, the `P_{n,m}` words, the
//! brackets induced by the depth filtration, depth/balancedness property
//! checks, and the normal-subloop coefficient witnesses.
//!
//! A *deviation* refines a loop word one slot at a time: given an `A`-ary
//! word `w` and a slot `i`, the deviated word
//! `w′ᵢ(x₁,…,y,z,…,x_A) = (w[xᵢ→y] ∘ w[xᵢ→z]) \ w[xᵢ→y∘z]` measures how far
//! `w` is from being multiplicative in that slot.  Iterating deviations of
//! the associator yields the words `P_{n,m}` whose top coefficient, read on
//! generic series, recovers the closed-form brackets of the `∗`-product.

use std::sync::Arc;

use crate::algebra::{AlgElt, Algebra};
use crate::brackets::GradedElt;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sample::Sampler;
use crate::series::Series;

/// The two base words a deviation tower can start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordBase {
    /// `[a,b] = (b∘a) \ (a∘b)`, arity 2.
    Commutator,
    /// `(a,b,c) = (a∘(b∘c)) \ ((a∘b)∘c)`, arity 3.
    Associator,
}

impl WordBase {
    fn arity(self) -> usize {
        match self {
            WordBase::Commutator => 2,
            WordBase::Associator => 3,
        }
    }
}

/// An iterated deviation of a base loop word.
///
/// `indices[j]` names the slot deviated at step `j+1`, when the word built
/// so far has arity `base.arity() + j`; deviating slot `i` replaces that
/// argument by two adjacent ones, so the final arity is
/// `base.arity() + indices.len()`.  Every such word is balanced: it
/// evaluates to the unit series whenever any argument is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviationExpr {
    base: WordBase,
    indices: Vec<usize>,
}

impl DeviationExpr {
    /// Validates the index tower: step `j` (1-based) must name a slot of
    /// the arity-`base.arity() + j − 1` word it deviates.
    pub fn new(base: WordBase, indices: &[usize]) -> Result<DeviationExpr> {
        for (j, &i) in indices.iter().enumerate() {
            let max = base.arity() + j;
            if i < 1 || i > max {
                return Err(Error::BadIndex {
                    index: i,
                    level: j + 1,
                    max,
                });
            }
        }
        Ok(DeviationExpr {
            base,
            indices: indices.to_vec(),
        })
    }

    pub fn base(&self) -> WordBase {
        self.base
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of series arguments the word takes.
    pub fn arity(&self) -> usize {
        self.base.arity() + self.indices.len()
    }

    /// Evaluates the word on loop elements.
    pub fn apply(&self, args: &[Series]) -> Result<Series> {
        if args.len() != self.arity() {
            return Err(Error::BadArity(format!(
                "word has arity {}, got {} arguments",
                self.arity(),
                args.len()
            )));
        }
        match self.indices.split_last() {
            None => match self.base {
                WordBase::Commutator => args[0].loop_commutator(&args[1]),
                WordBase::Associator => args[0].loop_associator(&args[1], &args[2]),
            },
            Some((&i, rest)) => {
                let prev = DeviationExpr {
                    base: self.base,
                    indices: rest.to_vec(),
                };
                // Slots i, i+1 (1-based) of `args` hold the two arguments
                // substituted into slot i of the previous word.
                let y = &args[i - 1];
                let z = &args[i];
                let with = |v: Series| -> Vec<Series> {
                    let mut a: Vec<Series> = args[..i - 1].to_vec();
                    a.push(v);
                    a.extend_from_slice(&args[i + 1..]);
                    a
                };
                let wy = prev.apply(&with(y.clone()))?;
                let wz = prev.apply(&with(z.clone()))?;
                let wyz = prev.apply(&with(y.compose(z)?))?;
                wy.compose(&wz)?.left_divide(&wyz)
            }
        }
    }
}

/// Evaluates a deviation word; see [`DeviationExpr::apply`].
pub fn deviation_apply(expr: &DeviationExpr, args: &[Series]) -> Result<Series> {
    expr.apply(args)
}

/// The word `P_{n,m}(x₁,…,xₙ; y₁,…,y_m; z)`: the associator deviated
/// `n−1` times in slot 1 and then `m−1` times in slot `n+1`.  `P_{1,1}` is
/// the plain associator.
pub fn p_nm(n: usize, m: usize) -> Result<DeviationExpr> {
    if n < 1 || m < 1 {
        return Err(Error::BadArity(format!(
            "P_{{n,m}} needs n ≥ 1 and m ≥ 1, got n={n} m={m}"
        )));
    }
    let mut indices = vec![1usize; n - 1];
    indices.extend(std::iter::repeat(n + 1).take(m - 1));
    DeviationExpr::new(WordBase::Associator, &indices)
}

/// The bracket induced by the depth filtration, evaluated symbolically.
///
/// Over the free algebra on generators `x1,…,xn` (degrees `degrees`), `y`
/// (degree `deg_y`) and `z` (degree `deg_z`), instantiate the generic
/// filtration representatives `aᵢ = t + xᵢ t^{dᵢ+1}`, `b = t + y t^{…}`,
/// `c = t + z t^{…}` and form
/// `⟨x₁,…,xₙ; y, z⟩ = P_{n,1}(a₁,…,aₙ; c; b) − P_{n,1}(a₁,…,aₙ; b; c)`,
/// reading off the multilinear stratum of the coefficient in the slot of
/// total degree.  Returns the algebra together with the tagged coefficient.
pub fn filtration_bracket(
    degrees: &[i64],
    deg_y: i64,
    deg_z: i64,
    trunc: usize,
) -> Result<(Arc<Algebra>, GradedElt)> {
    if degrees.is_empty() {
        return Err(Error::BadArity(
            "filtration bracket needs at least one first-group degree".into(),
        ));
    }
    if degrees.iter().any(|&d| d < 1) || deg_y < 1 || deg_z < 1 {
        return Err(Error::BadParams(
            "filtration bracket degrees must be at least 1".into(),
        ));
    }
    let total = degrees.iter().sum::<i64>() + deg_y + deg_z;
    if (trunc as i64) < total {
        return Err(Error::TruncationTooSmall {
            needed: total as usize,
            have: trunc,
        });
    }
    let mut gens: Vec<(String, i64)> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("x{}", i + 1), d))
        .collect();
    gens.push(("y".into(), deg_y));
    gens.push(("z".into(), deg_z));
    let gen_refs: Vec<(&str, i64)> = gens.iter().map(|(g, d)| (g.as_str(), *d)).collect();
    let algebra = Algebra::free_truncated("filtration", &gen_refs, trunc as i64)?;

    let rep = |label: &str, degree: i64| -> Result<Series> {
        Series::unit(&algebra, trunc, true)?
            .with_coeff(degree as usize, AlgElt::from_label(&algebra, label)?)
    };
    let xs: Vec<Series> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| rep(&format!("x{}", i + 1), d))
        .collect::<Result<_>>()?;
    let sy = rep("y", deg_y)?;
    let sz = rep("z", deg_z)?;

    let word = p_nm(degrees.len(), 1)?;
    let mut args_zy: Vec<Series> = xs.clone();
    args_zy.push(sz.clone());
    args_zy.push(sy.clone());
    let mut args_yz: Vec<Series> = xs;
    args_yz.push(sy);
    args_yz.push(sz);
    let first = word.apply(&args_zy)?;
    let second = word.apply(&args_yz)?;

    let mut gen_names: Vec<String> = (1..=degrees.len()).map(|i| format!("x{i}")).collect();
    gen_names.push("y".into());
    gen_names.push("z".into());
    let name_refs: Vec<&str> = gen_names.iter().map(String::as_str).collect();
    let value = first
        .coeff(total as usize)
        .sub(&second.coeff(total as usize))?
        .multilinear_part(&name_refs)?;
    Ok((Arc::clone(&algebra), GradedElt::new(total, value)?))
}

/// Outcome of randomized depth-superadditivity sampling for one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSequenceReport {
    /// Number of sampled argument tuples.
    pub samples: usize,
    /// Tuples where the evaluated word had depth below the depth sum.
    pub violations: usize,
    /// Minimum of `depth(word) − Σ depths` over non-unit results.
    pub min_slack: Option<i64>,
    /// Results that were exactly the unit series (unbounded slack).
    pub unit_results: usize,
}

/// Samples random argument tuples with prescribed depths and checks that
/// the evaluated word always lands at depth at least the depth sum.
pub fn n_sequence_check(
    expr: &DeviationExpr,
    algebra: &Arc<Algebra>,
    depths: &[usize],
    trunc: usize,
    samples: usize,
    seed: u64,
) -> Result<NSequenceReport> {
    if depths.len() != expr.arity() {
        return Err(Error::BadArity(format!(
            "word has arity {}, got {} depths",
            expr.arity(),
            depths.len()
        )));
    }
    let total: usize = depths.iter().sum();
    if trunc < total {
        return Err(Error::TruncationTooSmall {
            needed: total,
            have: trunc,
        });
    }
    let mut sampler = Sampler::new(seed);
    let mut report = NSequenceReport {
        samples,
        violations: 0,
        min_slack: None,
        unit_results: 0,
    };
    for _ in 0..samples {
        let args: Vec<Series> = depths
            .iter()
            .map(|&d| sampler.series_of_depth(algebra, trunc, false, d))
            .collect::<Result<_>>()?;
        let value = expr.apply(&args)?;
        match value.depth() {
            None => report.unit_results += 1,
            Some(d) => {
                let slack = d as i64 - total as i64;
                if slack < 0 {
                    report.violations += 1;
                }
                report.min_slack = Some(match report.min_slack {
                    None => slack,
                    Some(s) => s.min(slack),
                });
            }
        }
    }
    Ok(report)
}

/// The loop commutator `[t + β t^{i+1}, t + αₙ t^{n+1}]` together with its
/// leading coefficient, which the absorption relations pin down as
/// `(i+1)βαₙ − (n+1)αₙβ` in the slot of degree `n+i`.
pub fn absorption_witness(
    alpha_n: &AlgElt,
    beta: &AlgElt,
    n: usize,
    i: usize,
    trunc: usize,
) -> Result<(Series, AlgElt)> {
    if n < 1 || i < 1 {
        return Err(Error::BadParams(
            "absorption witness needs n ≥ 1 and i ≥ 1".into(),
        ));
    }
    if trunc < n + i {
        return Err(Error::TruncationTooSmall {
            needed: n + i,
            have: trunc,
        });
    }
    let algebra = alpha_n.algebra();
    let a = Series::unit(algebra, trunc, false)?.with_coeff(i, beta.clone())?;
    let b = Series::unit(algebra, trunc, false)?.with_coeff(n, alpha_n.clone())?;
    let comm = a.loop_commutator(&b)?;
    let lead = comm.coeff(n + i);
    Ok((comm, lead))
}

/// Which word the composite commutator coefficient should reduce to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlopschTarget {
    /// Coefficient `αβ`.
    AB,
    /// Coefficient `βα`.
    BA,
}

/// Scalars `(λ, μ)` making `[t+λβt^{m−n+1}, t+αt^{n+1}] ∘ [t+μβt^{m−n}, t+αt^{n+2}]`
/// congruent to `t + w·t^{m+1}` with `w` the chosen target word.
///
/// Expanding both commutators to leading order, the composite coefficient
/// in the degree-`m` slot is
/// `((m−n+1)λ + (m−n)μ)·βα − ((n+1)λ + (n+2)μ)·αβ`,
/// so each target amounts to a 2×2 rational system with determinant
/// `m+2 ≠ 0`.  Requires `n ≥ 1` and `m ≥ n+2`.
pub fn klopsch_witness(n: usize, m: usize, target: KlopschTarget) -> Result<(Rational, Rational)> {
    if n < 1 || m < n + 2 {
        return Err(Error::BadParams(format!(
            "klopsch witness needs n ≥ 1 and m ≥ n+2, got n={n} m={m}"
        )));
    }
    let (n, m) = (n as i64, m as i64);
    // Rows: βα coefficient, αβ coefficient; solve for the target vector.
    let (r1, r2) = match target {
        KlopschTarget::BA => (Rational::one(), Rational::zero()),
        KlopschTarget::AB => (Rational::zero(), -Rational::one()),
    };
    let det = Rational::int(m + 2);
    let lambda = (r1.clone() * Rational::int(n + 2) - r2.clone() * Rational::int(m - n)) / det.clone();
    let mu = (r2 * Rational::int(m - n + 1) - r1 * Rational::int(n + 1)) / det;
    Ok((lambda, mu))
}

/// Round-trip check of a [`klopsch_witness`] pair by direct evaluation over
/// free coefficients.
#[derive(Debug, Clone)]
pub struct KlopschVerification {
    pub lambda: Rational,
    pub mu: Rational,
    /// `[a,A] ∘ [b,B]` evaluated at truncation `m+1`.
    pub composite: Series,
    /// Its coefficient in the degree-`m` slot.
    pub coefficient: AlgElt,
    /// Whether that coefficient is exactly the target word.
    pub matches_target: bool,
    /// Whether every slot below `m` vanished.
    pub lower_slots_zero: bool,
}

/// Builds the four series of [`klopsch_witness`] over the free algebra on
/// `alpha`, `beta` and evaluates the composite commutator exactly.
pub fn klopsch_verify(n: usize, m: usize, target: KlopschTarget) -> Result<KlopschVerification> {
    let (lambda, mu) = klopsch_witness(n, m, target)?;
    // Any word in a degree-`k` slot has length at most `k`, so truncating
    // words beyond degree m+1 loses nothing at truncation m+1.
    let algebra = Algebra::free_truncated("klopsch", &[("alpha", 1), ("beta", 1)], m as i64 + 1)?;
    let alpha = AlgElt::from_label(&algebra, "alpha")?;
    let beta = AlgElt::from_label(&algebra, "beta")?;
    let trunc = m + 1;
    let a = Series::unit(&algebra, trunc, false)?.with_coeff(m - n, beta.scale(&lambda))?;
    let b = Series::unit(&algebra, trunc, false)?.with_coeff(m - n - 1, beta.scale(&mu))?;
    let big_a = Series::unit(&algebra, trunc, false)?.with_coeff(n, alpha.clone())?;
    let big_b = Series::unit(&algebra, trunc, false)?.with_coeff(n + 1, alpha.clone())?;
    let composite = a
        .loop_commutator(&big_a)?
        .compose(&b.loop_commutator(&big_b)?)?;
    let coefficient = composite.coeff(m);
    let target_word = match target {
        KlopschTarget::AB => alpha.mul(&beta)?,
        KlopschTarget::BA => beta.mul(&alpha)?,
    };
    let matches_target = coefficient == target_word;
    let lower_slots_zero = (1..m).all(|k| composite.coeff(k).is_zero());
    Ok(KlopschVerification {
        lambda,
        mu,
        composite,
        coefficient,
        matches_target,
        lower_slots_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{sabinin_closed, star_graded};
    use crate::builtins;
    use crate::sample::DEFAULT_SEED;

    #[test]
    fn deviation_index_validation() {
        assert!(DeviationExpr::new(WordBase::Associator, &[1, 4]).is_ok());
        assert!(matches!(
            DeviationExpr::new(WordBase::Associator, &[4]),
            Err(Error::BadIndex {
                index: 4,
                level: 1,
                max: 3
            })
        ));
        assert!(matches!(
            DeviationExpr::new(WordBase::Commutator, &[0]),
            Err(Error::BadIndex { .. })
        ));
        let word = DeviationExpr::new(WordBase::Commutator, &[]).unwrap();
        assert_eq!(word.arity(), 2);
        let err = word.apply(&[]);
        assert!(matches!(err, Err(Error::BadArity(_))));
    }

    #[test]
    fn words_are_balanced() {
        let alg = builtins::split_null(2).unwrap();
        let mut sampler = Sampler::new(DEFAULT_SEED);
        let trunc = 5;
        let unit = Series::unit(&alg, trunc, false).unwrap();
        let words = [
            DeviationExpr::new(WordBase::Commutator, &[]).unwrap(),
            DeviationExpr::new(WordBase::Associator, &[]).unwrap(),
            DeviationExpr::new(WordBase::Associator, &[1]).unwrap(),
            DeviationExpr::new(WordBase::Associator, &[2, 3]).unwrap(),
        ];
        for word in &words {
            for slot in 0..word.arity() {
                let mut args: Vec<Series> = (0..word.arity())
                    .map(|_| sampler.series(&alg, trunc, false).unwrap())
                    .collect();
                args[slot] = unit.clone();
                let out = word.apply(&args).unwrap();
                assert!(out.is_unit(), "word {:?} slot {slot}", word.indices());
            }
        }
    }

    #[test]
    fn depth_superadditivity_reports() {
        let alg = builtins::ev_algebra().unwrap();
        let comm = DeviationExpr::new(WordBase::Commutator, &[]).unwrap();
        let report = n_sequence_check(&comm, &alg, &[1, 2], 5, 25, DEFAULT_SEED).unwrap();
        assert_eq!(report.violations, 0);
        if let Some(s) = report.min_slack {
            assert!(s >= 0);
        }

        let assoc = DeviationExpr::new(WordBase::Associator, &[]).unwrap();
        let report = n_sequence_check(&assoc, &alg, &[1, 1, 1], 5, 25, DEFAULT_SEED).unwrap();
        assert_eq!(report.violations, 0);

        // First deviation of the associator on four depth-1 arguments.
        let dev = DeviationExpr::new(WordBase::Associator, &[1]).unwrap();
        let report = n_sequence_check(&dev, &alg, &[1, 1, 1, 1], 5, 25, DEFAULT_SEED).unwrap();
        assert_eq!(report.violations, 0);

        assert!(matches!(
            n_sequence_check(&dev, &alg, &[1, 1, 1], 5, 5, DEFAULT_SEED),
            Err(Error::BadArity(_))
        ));
        assert!(matches!(
            n_sequence_check(&dev, &alg, &[2, 2, 2, 2], 5, 5, DEFAULT_SEED),
            Err(Error::TruncationTooSmall { needed: 8, have: 5 })
        ));
    }

    #[test]
    fn p11_is_the_associator_and_p21_unfolds() {
        let alg = Algebra::free_truncated("f", &[("a", 1), ("b", 1)], 3).unwrap();
        let mut sampler = Sampler::new(DEFAULT_SEED);
        let trunc = 4;
        let x1 = sampler.series(&alg, trunc, false).unwrap();
        let x2 = sampler.series(&alg, trunc, false).unwrap();
        let y = sampler.series(&alg, trunc, false).unwrap();
        let z = sampler.series(&alg, trunc, false).unwrap();

        let p11 = p_nm(1, 1).unwrap();
        assert!(p11.indices().is_empty());
        assert_eq!(
            p11.apply(&[x1.clone(), y.clone(), z.clone()]).unwrap(),
            x1.loop_associator(&y, &z).unwrap()
        );

        // P₂,₁ deviates the associator's first slot once: with
        // w(v) = (v, y, z), the value is (w(x₁) ∘ w(x₂)) \ w(x₁∘x₂).
        let p21 = p_nm(2, 1).unwrap();
        assert_eq!(p21.indices(), &[1]);
        let w = |v: &Series| v.loop_associator(&y, &z).unwrap();
        let expect = w(&x1)
            .compose(&w(&x2))
            .unwrap()
            .left_divide(&w(&x1.compose(&x2).unwrap()))
            .unwrap();
        assert_eq!(
            p21.apply(&[x1.clone(), x2.clone(), y.clone(), z.clone()])
                .unwrap(),
            expect
        );

        assert!(matches!(p_nm(0, 1), Err(Error::BadArity(_))));
    }

    /// The filtration bracket read off the deviation words agrees with the
    /// closed form on low-degree instances (the full sweep lives in the
    /// acceptance suite).
    #[test]
    fn filtration_bracket_matches_closed_form_spots() {
        for degrees in [vec![1i64], vec![2], vec![1, 1]] {
            let (alg, got) = filtration_bracket(&degrees, 1, 1, 6).unwrap();
            let i_elts: Vec<GradedElt> = degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| {
                    GradedElt::new(d, AlgElt::from_label(&alg, &format!("x{}", i + 1)).unwrap())
                        .unwrap()
                })
                .collect();
            let b = GradedElt::new(1, AlgElt::from_label(&alg, "y").unwrap()).unwrap();
            let c = GradedElt::new(1, AlgElt::from_label(&alg, "z").unwrap()).unwrap();
            let closed = sabinin_closed(&i_elts, &b, &c).unwrap();
            assert_eq!(got, closed, "degrees {degrees:?}");
            assert!(!got.is_zero(), "degrees {degrees:?}");
        }
        assert!(matches!(
            filtration_bracket(&[2, 2], 1, 1, 5),
            Err(Error::TruncationTooSmall { needed: 6, have: 5 })
        ));
    }

    /// At the binary level the loop commutator induces `b∗c − c∗b` on
    /// leading coefficients — the *negative* of the binary bracket
    /// `⟨b,c⟩ = c∗b − b∗c`; the orientation is fixed here once and used
    /// as-is everywhere.
    #[test]
    fn commutator_leading_term_is_star_antisymmetrization() {
        let alg = Algebra::free_truncated("f", &[("u", 1), ("v", 2)], 4).unwrap();
        let u = AlgElt::from_label(&alg, "u").unwrap();
        let v = AlgElt::from_label(&alg, "v").unwrap();
        let su = Series::unit(&alg, 4, true)
            .unwrap()
            .with_coeff(1, u.clone())
            .unwrap();
        let sv = Series::unit(&alg, 4, true)
            .unwrap()
            .with_coeff(2, v.clone())
            .unwrap();
        let comm = su.loop_commutator(&sv).unwrap();
        let gu = GradedElt::new(1, u).unwrap();
        let gv = GradedElt::new(2, v).unwrap();
        let expect = star_graded(&gu, &gv)
            .unwrap()
            .value()
            .sub(star_graded(&gv, &gu).unwrap().value())
            .unwrap();
        assert_eq!(comm.coeff(3), expect);
    }

    #[test]
    fn absorption_witness_leading_coefficient() {
        let alg = Algebra::free_truncated("f", &[("alpha", 1), ("beta", 1)], 4).unwrap();
        let alpha = AlgElt::from_label(&alg, "alpha").unwrap();
        let beta = AlgElt::from_label(&alg, "beta").unwrap();
        let ba = beta.mul(&alpha).unwrap();
        let ab = alpha.mul(&beta).unwrap();

        let (_, lead) = absorption_witness(&alpha, &beta, 1, 1, 4).unwrap();
        assert_eq!(
            lead,
            ba.scale(&Rational::int(2)).sub(&ab.scale(&Rational::int(2))).unwrap()
        );
        let (_, lead) = absorption_witness(&alpha, &beta, 2, 1, 4).unwrap();
        assert_eq!(
            lead,
            ba.scale(&Rational::int(2)).sub(&ab.scale(&Rational::int(3))).unwrap()
        );

        // Coefficients that commute with each other collapse the display
        // to (i−n)·αβ.
        let k = builtins::by_spec("ev").unwrap();
        let e = AlgElt::from_label(&k, "e").unwrap();
        let (_, lead) = absorption_witness(&e, &e, 1, 2, 4).unwrap();
        assert_eq!(lead, e.mul(&e).unwrap());

        let zero = AlgElt::zero(&alg);
        let (comm, lead) = absorption_witness(&alpha, &zero, 1, 1, 4).unwrap();
        assert!(comm.is_unit());
        assert!(lead.is_zero());
    }

    #[test]
    fn klopsch_witnesses_and_round_trip() {
        let (lambda, mu) = klopsch_witness(1, 3, KlopschTarget::BA).unwrap();
        assert_eq!(lambda, Rational::new(3, 5).unwrap());
        assert_eq!(mu, Rational::new(-2, 5).unwrap());
        let (lambda, mu) = klopsch_witness(1, 3, KlopschTarget::AB).unwrap();
        assert_eq!(lambda, Rational::new(2, 5).unwrap());
        assert_eq!(mu, Rational::new(-3, 5).unwrap());

        for target in [KlopschTarget::BA, KlopschTarget::AB] {
            let v = klopsch_verify(1, 3, target).unwrap();
            assert!(v.matches_target, "{target:?}");
            assert!(v.lower_slots_zero, "{target:?}");
        }

        assert!(matches!(
            klopsch_witness(1, 2, KlopschTarget::BA),
            Err(Error::BadParams(_))
        ));
    }
}

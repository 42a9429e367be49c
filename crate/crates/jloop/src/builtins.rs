//! Named builtin coefficient algebras and the textual spec that selects them.
//!
//! Specs have the form `name[:param...]`:
//!
//! * `ev` — the two-dimensional algebra with `e*e = e`, `v*e = v` and all
//!   other basis products zero.
//! * `upper_triangular:n` — strictly upper-triangular `n x n` matrices on the
//!   basis `Eij` (`i < j`), graded by `j - i`.
//! * `split_null:n` — the unital split null extension on the basis
//!   `one, e, e2, ..., en, v0, ..., v{n-1}` with `e^(n+1) = e^n`,
//!   `e * vi = v{i+1}` (and `vn = 0`), `vi * e = vi`, `vi * vj = 0`.
//! * `laurent_window:lo:hi` — the span of `t^lo ... t^hi` with products
//!   falling outside the window truncated to zero.  Labels are `t0, t1, ...`
//!   and `tn1, tn2, ...` for negative exponents.  The windowed product is
//!   associative on the cone of nonnegative exponents but not across the
//!   window boundary, so the basis-triple associativity check is skipped
//!   for this table by design.
//! * `free:g1[^d1],g2[^d2],...:maxdeg` — free associative algebra on the
//!   named generators with the given weights (default 1), truncated beyond
//!   total word weight `maxdeg`.

use std::sync::Arc;

use crate::algebra::{Algebra, ScBuilder};
use crate::error::{Error, Result};

/// The two-dimensional algebra `{e, v}` with `e*e = e`, `v*e = v`, and
/// `e*v = v*v = 0`.  Its substitution loop is a group even though the
/// algebra is neither nilpotent nor commutative.
pub fn ev_algebra() -> Result<Arc<Algebra>> {
    ScBuilder::new("ev")
        .basis("e")
        .basis("v")
        .product("e", "e", &[("e", 1)])
        .product("v", "e", &[("v", 1)])
        .build()
}

/// Strictly upper-triangular `n x n` matrices (`2 <= n <= 9`), graded by
/// `deg(Eij) = j - i`.
pub fn upper_triangular(n: usize) -> Result<Arc<Algebra>> {
    if !(2..=9).contains(&n) {
        return Err(Error::BadParams(format!(
            "upper_triangular size must be between 2 and 9, got {n}"
        )));
    }
    let label = |i: usize, j: usize| format!("E{i}{j}");
    let mut b = ScBuilder::new(&format!("upper_triangular:{n}"));
    for i in 1..=n {
        for j in (i + 1)..=n {
            b = b.graded_basis(&label(i, j), (j - i) as i64);
        }
    }
    // Eij * Ekl = Eil when j == k, else 0.
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..=n {
                let li = label(i, j);
                let lr = label(j, l);
                let lo = label(i, l);
                b = b.product(&li, &lr, &[(&lo, 1)]);
            }
        }
    }
    b.build()
}

/// The unital split null extension of rank `n >= 1`: basis
/// `one, e, ..., en, v0, ..., v{n-1}` with `e^(n+1) = e^n`, `e * vi = v{i+1}`
/// (`vn = 0`), `vi * e = vi`, and `vi * vj = 0`.  Not graded.
pub fn split_null(n: usize) -> Result<Arc<Algebra>> {
    if n < 1 || n > 30 {
        return Err(Error::BadParams(format!(
            "split_null rank must be between 1 and 30, got {n}"
        )));
    }
    let e_label = |i: usize| {
        if i == 0 {
            "one".to_string()
        } else if i == 1 {
            "e".to_string()
        } else {
            format!("e{i}")
        }
    };
    let v_label = |i: usize| format!("v{i}");
    let mut b = ScBuilder::new(&format!("split_null:{n}"));
    for i in 0..=n {
        b = b.basis(&e_label(i));
    }
    for i in 0..n {
        b = b.basis(&v_label(i));
    }
    // Powers of e saturate at e^n.
    for i in 0..=n {
        for j in 0..=n {
            let k = (i + j).min(n);
            b = b.product(&e_label(i), &e_label(j), &[(&e_label(k), 1)]);
        }
    }
    // e^i shifts v^j by i steps and kills it past v^{n-1}; v^j * e^i = v^j.
    for i in 0..=n {
        for j in 0..n {
            if i + j < n {
                b = b.product(&e_label(i), &v_label(j), &[(&v_label(i + j), 1)]);
            }
            if i > 0 {
                b = b.product(&v_label(j), &e_label(i), &[(&v_label(j), 1)]);
            }
        }
    }
    // The unit rows e^0 * v^j and v^j * e^0 are covered above (i = 0 shift
    // keeps v^j; the explicit i = 0 right action is added here).
    for j in 0..n {
        b = b.product(&v_label(j), &e_label(0), &[(&v_label(j), 1)]);
    }
    b.build()
}

/// Label for the Laurent basis element `t^i`.
pub fn laurent_label(i: i64) -> String {
    if i < 0 {
        format!("tn{}", -i)
    } else {
        format!("t{i}")
    }
}

/// Windowed Laurent span of `t^lo ... t^hi`; products leaving the window are
/// truncated to zero.  Graded by the exponent.  The table is deliberately
/// checked only for grading, not associativity: truncation at the window
/// boundary breaks associativity (for instance `(t3*t3)*tn2 = 0` while
/// `t3*(t3*tn2) = t4` in the window `-4..4`), and the cone of nonnegative
/// exponents — the part touched by graded series — is associative.
pub fn laurent_window(lo: i64, hi: i64) -> Result<Arc<Algebra>> {
    if lo > hi {
        return Err(Error::BadParams(format!(
            "laurent_window needs lo <= hi, got {lo}..{hi}"
        )));
    }
    if hi - lo > 200 {
        return Err(Error::BadParams("laurent_window span too large".into()));
    }
    let mut b = ScBuilder::new(&format!("laurent_window:{lo}:{hi}"));
    for i in lo..=hi {
        b = b.graded_basis(&laurent_label(i), i);
    }
    for i in lo..=hi {
        for j in lo..=hi {
            let k = i + j;
            if k >= lo && k <= hi {
                b = b.product(&laurent_label(i), &laurent_label(j), &[(&laurent_label(k), 1)]);
            }
        }
    }
    b.skip_assoc_check().build()
}

/// Resolves a textual algebra spec (see the module docs for the grammar).
pub fn by_spec(spec: &str) -> Result<Arc<Algebra>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = |msg: &str| Error::BadParams(format!("algebra spec `{spec}`: {msg}"));
    match parts[0] {
        "ev" => {
            if parts.len() != 1 {
                return Err(bad("ev takes no parameters"));
            }
            ev_algebra()
        }
        "upper_triangular" => {
            if parts.len() != 2 {
                return Err(bad("expected upper_triangular:n"));
            }
            let n = parts[1].parse().map_err(|_| bad("bad size"))?;
            upper_triangular(n)
        }
        "split_null" => {
            if parts.len() != 2 {
                return Err(bad("expected split_null:n"));
            }
            let n = parts[1].parse().map_err(|_| bad("bad rank"))?;
            split_null(n)
        }
        "laurent_window" => {
            if parts.len() != 3 {
                return Err(bad("expected laurent_window:lo:hi"));
            }
            let lo = parts[1].parse().map_err(|_| bad("bad lower bound"))?;
            let hi = parts[2].parse().map_err(|_| bad("bad upper bound"))?;
            laurent_window(lo, hi)
        }
        "free" => {
            if parts.len() != 3 {
                return Err(bad("expected free:gens:maxdeg"));
            }
            let mut gens: Vec<(String, i64)> = Vec::new();
            for tok in parts[1].split(',') {
                let (name, deg) = match tok.split_once('^') {
                    None => (tok, 1),
                    Some((n, d)) => (n, d.parse().map_err(|_| bad("bad generator degree"))?),
                };
                if name.is_empty() {
                    return Err(bad("empty generator name"));
                }
                gens.push((name.to_string(), deg));
            }
            let max: i64 = parts[2].parse().map_err(|_| bad("bad max degree"))?;
            let refs: Vec<(&str, i64)> = gens.iter().map(|(n, d)| (n.as_str(), *d)).collect();
            Algebra::free_truncated(spec, &refs, max)
        }
        other => Err(Error::BadParams(format!("unknown algebra `{other}`"))),
    }
}

//! Loops of formal power series with noncommutative coefficients under
//! substitution.
//!
//! The crate implements, over exact rational arithmetic:
//!
//! * truncated series `1 + f_1 t + ... + f_T t^T` over a finite-dimensional
//!   associative coefficient algebra, with the substitution product, its two
//!   one-sided divisions, and the associated graded `*`-product
//!   ([`series`]);
//! * the Shestakov–Umirbaev p-operations and the Sabinin brackets they
//!   induce, both by recursion and in closed form ([`brackets`]);
//! * the deviation calculus on the loop — commutators, associators, iterated
//!   deviation words, and the induced brackets on the filtration quotients
//!   ([`calculus`]);
//! * Lie-identity scans: standard identities `St_n`, Jacobi checks, and the
//!   Sabinin axiom battery over several bracket structures ([`identities`]);
//! * a small collection of builtin coefficient algebras ([`builtins`]), a
//!   text format and JSON documents for elements and series ([`textio`],
//!   [`jsonio`]), and seeded sampling ([`sample`]).
//!
//! Scans and sampled checks run data-parallel through `rayon` when the
//! default `parallel` feature is enabled; the sequential fallback is always
//! compiled and can be selected at runtime, so `--no-default-features`
//! builds behave identically.

pub mod algebra;
pub mod brackets;
pub mod builtins;
pub mod calculus;
pub mod error;
pub mod exec;
pub mod identities;
pub mod jsonio;
pub mod rational;
pub mod sample;
pub mod selftest;
pub mod series;
pub mod textio;

pub use algebra::{AlgElt, Algebra};
pub use error::{Error, Result};
pub use rational::Rational;
pub use series::Series;

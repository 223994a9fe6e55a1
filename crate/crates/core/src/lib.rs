//! Continued function expansions of real numbers.
//!
//! A decreasing homeomorphism `f: (1, ∞) → (0, 1)` with inverse `φ` turns a real
//! `x₀` into a sequence of partial quotients `[a₀; a₁, a₂, …]` by iterating
//! `aⱼ = ⌊xⱼ⌋`, `xⱼ₊₁ = φ({xⱼ})`; the reciprocal function gives ordinary continued
//! fractions. This crate provides:
//!
//! * [`cfseq`]: formal quotient sequences, the alternating-lexicographic order and
//!   the `[a0; a1, a2]` text grammar.
//! * [`realkernel`]: exact rationals and quadratic irrationals, dyadic interval
//!   enclosures with outward rounding, certified floors, rational powers, `exp`/`ln`.
//! * [`engine`]: the expansion map `E_f` and evaluation map `V_f` for several
//!   generator families, with certified termination verdicts.
//! * [`powerfam`]: fixed points, bifurcation threshold and basins for `f(x) = x^-α`.
//! * [`chorus`]: piecewise-linear homeomorphisms of `(0,1)` and their chorus-line
//!   conjugates `f_g`.
//! * [`minkowski`]: the question-mark function on rationals and quadratic irrationals.
//! * [`backforth`]: finite stages of the back-and-forth construction, dense-set
//!   oracles and the minimal-polynomial tail encoding.
//! * [`algver`]: integer polynomials, resultants by Bareiss elimination, Sturm
//!   sequences and the period-four cycle eliminant.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod algver;
pub mod backforth;
pub mod cfseq;
pub mod chorus;
pub mod engine;
mod error;
pub mod minkowski;
pub mod powerfam;
pub mod realkernel;

pub use error::{Error, Result};

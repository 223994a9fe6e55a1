//! The expansion map `E_f` and the evaluation map `V_f`.
//!
//! `E_f(x) = [a₀; a₁, …]` with `a₀ = ⌊x⌋`, `x_{j+1} = φ({x_j})`, `a_j = ⌊x_j⌋`,
//! where `φ` is the inverse of the generating function `f : (1, ∞) → (0, 1)`.
//! Exact arithmetic is used as long as the orbit stays rational or quadratic;
//! otherwise the orbit is carried as dyadic enclosures and recomputed from
//! the start at doubled precision whenever a floor cannot be certified.

mod eval;
mod expand;
mod generator;

pub use eval::{detect_period, eval_finite, eval_infinite, eval_prefix, roundtrip_check, EvalOutcome, RoundTrip};
pub use expand::{expand, expand_exact, expand_from, expand_rational_reciprocal, ExpansionResult, Outcome, Step};
pub use generator::{Capabilities, GeneratorFn, GeneratorKind, PATCH_EPS, PATCH_U, PATCH_V};

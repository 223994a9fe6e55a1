use alloc::vec::Vec;

use num_bigint::BigInt;

use super::generator::{GeneratorFn, GeneratorKind};
use crate::cfseq::{PeriodicSpec, Quotients, Status};
use crate::minkowski;
use crate::realkernel::{certified_floor, eval_expr, BitSchedule, CertifiedReal, Exact, Floor, Rat, RealExpr};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Terminated,
    ReachedMaxTerms,
    /// The floor at `step` stayed undecided up to `bits` of precision.
    UndecidedInteger { step: usize, bits: u64 },
}

/// How one partial quotient was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub index: usize,
    /// Working precision of the run that produced it; 0 on the exact path.
    pub precision_bits: u64,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub quotients: Quotients,
    pub outcome: Outcome,
    pub steps: Vec<Step>,
    /// The full periodic expansion, when known in closed form.
    pub periodic: Option<PeriodicSpec>,
}

impl ExpansionResult {
    pub fn is_terminated(&self) -> bool {
        self.outcome == Outcome::Terminated
    }

    /// Largest working precision used by any step.
    pub fn max_bits(&self) -> u64 {
        self.steps.iter().map(|s| s.precision_bits).max().unwrap_or(0)
    }

    fn build(head: BigInt, tail: Vec<BigInt>, outcome: Outcome, steps: Vec<Step>) -> ExpansionResult {
        let status = if outcome == Outcome::Terminated {
            Status::Terminated
        } else {
            Status::Truncated
        };
        ExpansionResult {
            quotients: Quotients::new(head, tail, status).expect("expansion quotients are valid"),
            outcome,
            steps,
            periodic: None,
        }
    }
}

/// `E_f(x)` up to `max_terms` partial quotients after the head.
pub fn expand(f: &GeneratorFn, x: &RealExpr, max_terms: usize, schedule: BitSchedule) -> Result<ExpansionResult> {
    if max_terms == 0 {
        return Err(Error::Invalid("max_terms must be at least 1".into()));
    }
    match (f.kind(), x.exact()) {
        (GeneratorKind::QuestionMark, Some(e)) => {
            // E_{f_?} = E_r ∘ ?̄, and ?̄ sends rationals and quadratics to rationals
            let y = minkowski::question_mark_bar(&e)?;
            expand_exact(&GeneratorFn::reciprocal(), Exact::Rational(y), max_terms, schedule)
        }
        (GeneratorKind::QuestionMark, None) => Err(Error::Unsupported(
            "question-mark expansion needs a rational or quadratic input".into(),
        )),
        (_, Some(e)) => expand_exact(f, e, max_terms, schedule),
        (_, None) => expand_from(f, &|bits| Ok(eval_expr(x, bits)), max_terms, schedule),
    }
}

/// Ordinary continued fraction of a rational, in full.
pub fn expand_rational_reciprocal(y: &Rat) -> ExpansionResult {
    let q = minkowski::euclid(y);
    let steps = (0..q.len())
        .map(|index| Step {
            index,
            precision_bits: 0,
            exact: true,
        })
        .collect();
    ExpansionResult {
        quotients: q,
        outcome: Outcome::Terminated,
        steps,
        periodic: None,
    }
}

fn exact_step(index: usize) -> Step {
    Step {
        index,
        precision_bits: 0,
        exact: true,
    }
}

/// Expansion of an exactly known starting value; switches to enclosures at
/// the first step whose image is not exact.
pub fn expand_exact(f: &GeneratorFn, x: Exact, max_terms: usize, schedule: BitSchedule) -> Result<ExpansionResult> {
    if let GeneratorKind::Reciprocal = f.kind() {
        match &x {
            Exact::Rational(r) => {
                let full = expand_rational_reciprocal(r);
                if full.quotients.tail().len() <= max_terms {
                    return Ok(full);
                }
                let tail = full.quotients.tail()[..max_terms].to_vec();
                let steps = full.steps[..=max_terms].to_vec();
                return Ok(ExpansionResult::build(
                    full.quotients.head().clone(),
                    tail,
                    Outcome::ReachedMaxTerms,
                    steps,
                ));
            }
            Exact::Quadratic(q) => {
                let spec = q.continued_fraction();
                let quotients = spec.prefix(max_terms);
                let steps = (0..=max_terms).map(exact_step).collect();
                return Ok(ExpansionResult {
                    quotients,
                    outcome: Outcome::ReachedMaxTerms,
                    steps,
                    periodic: Some(spec),
                });
            }
        }
    }
    let (head, mut y) = x.split();
    let mut tail: Vec<BigInt> = Vec::new();
    let mut steps = alloc::vec![exact_step(0)];
    loop {
        if y.signum() == 0 {
            return Ok(ExpansionResult::build(head, tail, Outcome::Terminated, steps));
        }
        if tail.len() == max_terms {
            return Ok(ExpansionResult::build(head, tail, Outcome::ReachedMaxTerms, steps));
        }
        match f.phi_exact(&y) {
            Some(next) => {
                let (a, rest) = next.split();
                tail.push(a);
                steps.push(exact_step(tail.len()));
                y = rest;
            }
            None => {
                let y0 = y.clone();
                let start = |bits: u64| f.phi(&CertifiedReal::from_exact(y0.clone(), bits));
                let run = run_schedule(f, &start, tail.len() + 1, max_terms, schedule);
                tail.extend(run.terms);
                steps.extend(run.steps);
                return Ok(ExpansionResult::build(head, tail, run.end, steps));
            }
        }
    }
}

/// Expansion of a value known through enclosures `start(bits)`.
pub fn expand_from(
    f: &GeneratorFn,
    start: &dyn Fn(u64) -> Result<CertifiedReal>,
    max_terms: usize,
    schedule: BitSchedule,
) -> Result<ExpansionResult> {
    if max_terms == 0 {
        return Err(Error::Invalid("max_terms must be at least 1".into()));
    }
    let run = run_schedule(f, start, 0, max_terms, schedule);
    let mut terms = run.terms;
    if terms.is_empty() {
        // not even the integer part could be certified
        return Err(Error::PrecisionExhausted { bits: schedule.cap });
    }
    let head = terms.remove(0);
    Ok(ExpansionResult::build(head, terms, run.end, run.steps))
}

struct Run {
    terms: Vec<BigInt>,
    steps: Vec<Step>,
    end: Outcome,
}

/// Re-runs the whole orbit at doubled precision until every floor up to
/// `last` is certified or the cap is hit.
fn run_schedule(
    f: &GeneratorFn,
    start: &dyn Fn(u64) -> Result<CertifiedReal>,
    first: usize,
    last: usize,
    schedule: BitSchedule,
) -> Run {
    let mut best: Option<Run> = None;
    for bits in schedule.steps() {
        let run = run_once(f, start, first, last, bits);
        match run.end {
            Outcome::UndecidedInteger { .. } => best = Some(run),
            _ => return run,
        }
    }
    let mut run = best.expect("schedule has at least one step");
    if let Outcome::UndecidedInteger { step, .. } = run.end {
        run.end = Outcome::UndecidedInteger {
            step,
            bits: schedule.cap,
        };
    }
    run
}

fn run_once(f: &GeneratorFn, start: &dyn Fn(u64) -> Result<CertifiedReal>, first: usize, last: usize, bits: u64) -> Run {
    let mut terms = Vec::new();
    let mut steps = Vec::new();
    let undecided = |step: usize| Outcome::UndecidedInteger { step, bits };
    let mut x = match start(bits) {
        Ok(x) => x,
        Err(_) => {
            return Run {
                terms,
                steps,
                end: undecided(first),
            }
        }
    };
    let mut j = first;
    loop {
        let exact = x.exact().is_some();
        let a = match certified_floor(&x) {
            Floor::Integer(n) => {
                terms.push(n);
                steps.push(Step {
                    index: j,
                    precision_bits: bits,
                    exact,
                });
                return Run {
                    terms,
                    steps,
                    end: Outcome::Terminated,
                };
            }
            Floor::Interior(n) => n,
            Floor::Bounded(_) | Floor::Undecided => {
                return Run {
                    terms,
                    steps,
                    end: undecided(j),
                }
            }
        };
        terms.push(a.clone());
        steps.push(Step {
            index: j,
            precision_bits: bits,
            exact,
        });
        if j == last {
            return Run {
                terms,
                steps,
                end: Outcome::ReachedMaxTerms,
            };
        }
        let y = x.sub_int(&a);
        x = match f.phi(&y) {
            Ok(v) => v,
            Err(_) => {
                return Run {
                    terms,
                    steps,
                    end: undecided(j + 1),
                }
            }
        };
        j += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    fn power(p: i64, q: i64) -> GeneratorFn {
        GeneratorFn::power(rat(p, q)).unwrap()
    }

    fn ex(f: &GeneratorFn, x: RealExpr, n: usize) -> ExpansionResult {
        expand(f, &x, n, BitSchedule::default()).unwrap()
    }

    #[test]
    fn half_power_examples() {
        let f = power(1, 2);
        let e = ex(&f, RealExpr::ratio(2, 3), 50);
        assert_eq!(e.quotients.to_string(), "[0; 2, 16]");
        assert!(e.is_terminated());
        let e = ex(&f, RealExpr::ratio(27, 47), 50);
        assert_eq!(e.quotients.to_string(), "[0; 3, 1098, 2892, 410, 256]");
        assert!(e.steps.iter().all(|s| s.exact));
    }

    #[test]
    fn reciprocal_paths() {
        let r = GeneratorFn::reciprocal();
        let e = ex(&r, RealExpr::ratio(27, 47), 50);
        assert_eq!(e.quotients.to_string(), "[0; 1, 1, 2, 1, 6]");
        let e = ex(&r, RealExpr::ratio(27, 47), 3);
        assert_eq!(e.outcome, Outcome::ReachedMaxTerms);
        assert_eq!(e.quotients.tail().len(), 3);
        let s2 = RealExpr::nth_root(rat(2, 1), 2).unwrap();
        let e = ex(&r, s2, 6);
        assert_eq!(e.quotients.to_string(), "[1; 2, 2, 2, 2, 2, 2, ...]");
        assert_eq!(e.periodic.unwrap().to_string(), "[1; (2)]");
    }

    #[test]
    fn interval_path_for_roots() {
        let f = power(5, 1);
        let x = RealExpr::nth_root(rat(7, 1), 5).unwrap();
        let e = ex(&f, x, 10);
        assert_eq!(e.quotients.to_string(), "[1; 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, ...]");
        assert_eq!(e.outcome, Outcome::ReachedMaxTerms);
        assert!(e.steps.iter().all(|s| !s.exact));
    }

    #[test]
    fn exact_prefix_then_intervals() {
        // 8/27 ↦ 9/4 exactly, then 1/4 has no rational image
        let f = power(3, 2);
        let e = ex(&f, RealExpr::ratio(8, 27), 4);
        assert_eq!(e.quotients.get(1).unwrap(), &BigInt::from(2));
        assert!(e.steps[1].exact);
        assert!(!e.steps[2].exact);
    }

    #[test]
    fn undecided_integer_is_reported() {
        // (√2)² carried as an enclosure is never certified to be an integer
        let f = power(2, 1);
        let start = |bits: u64| {
            let s = eval_expr(&RealExpr::nth_root(rat(2, 1), 2).unwrap(), bits).forget_exact();
            Ok(s.mul(&s))
        };
        let e = expand_from(&f, &start, 3, BitSchedule::new(64, 256));
        assert!(matches!(e, Err(Error::PrecisionExhausted { .. })));
        let start = |bits: u64| {
            let s = eval_expr(&RealExpr::nth_root(rat(2, 1), 2).unwrap(), bits).forget_exact();
            Ok(s.mul(&s).add_rat(&rat(1, 4)))
        };
        let e = expand_from(&f, &start, 3, BitSchedule::new(64, 256)).unwrap();
        assert_eq!(e.quotients.head(), &BigInt::from(2));
        assert_eq!(e.outcome, Outcome::UndecidedInteger { step: 1, bits: 256 });
    }
}

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::expand::{expand, ExpansionResult};
use super::generator::GeneratorFn;
use crate::cfseq::{PeriodicSpec, Quotients};
use crate::realkernel::{eval_expr, BitSchedule, CertifiedReal, Dyadic, Exact, Rat, RealExpr};
use crate::{Error, Result};

/// Limit behaviour of the truncation values `V_f([a₀; a₁, …, a_n])`.
#[derive(Clone, Debug)]
pub enum EvalOutcome {
    Converged(CertifiedReal),
    /// Enclosures of the accumulation points, in increasing order.
    Oscillating(Vec<CertifiedReal>),
    /// The last few truncation values.
    Inconclusive(Vec<CertifiedReal>),
}

/// `V_f` of a terminated sequence.
pub fn eval_finite(f: &GeneratorFn, q: &Quotients, bits: u64) -> Result<CertifiedReal> {
    if !q.is_terminated() {
        return Err(Error::Invalid("finite evaluation needs a terminated sequence".into()));
    }
    eval_prefix(f, q.head(), q.tail(), bits)
}

/// Right-to-left fold `a₀ + f(a₁ + f(… + f(a_n)))` of any finite sequence,
/// with `f(1) = 1` at the boundary.
pub fn eval_prefix(f: &GeneratorFn, head: &BigInt, tail: &[BigInt], bits: u64) -> Result<CertifiedReal> {
    let int = |a: &BigInt| Rat::from_integer(a.clone());
    let Some((last, rest)) = tail.split_last() else {
        return Ok(CertifiedReal::from_int(head.clone(), bits));
    };
    // exact folds of integer powers grow geometrically; past this size the
    // fold continues on enclosures
    let size_cap = (64 * bits).max(1 << 16);
    let mut exact = Some(Exact::Rational(int(last)));
    let mut interval: Option<CertifiedReal> = None;
    let chain = rest.iter().rev().chain(core::iter::once(head));
    for a in chain {
        if let Some(e) = &exact {
            match f.f_exact(e).filter(|v| exact_size(v) <= size_cap) {
                Some(v) => {
                    exact = Some(v.add_rat(&int(a)));
                    continue;
                }
                None => {
                    interval = Some(CertifiedReal::from_exact(e.clone(), bits).forget_exact());
                    exact = None;
                }
            }
        }
        let v = interval.take().expect("interval state");
        interval = Some(f.f(&v)?.add_rat(&int(a)));
    }
    Ok(match exact {
        Some(e) => CertifiedReal::from_exact(e, bits),
        None => interval.expect("interval state"),
    })
}

fn exact_size(e: &Exact) -> u64 {
    match e {
        Exact::Rational(r) => r.numer().bits() + r.denom().bits(),
        Exact::Quadratic(q) => q.p().bits() + q.q().bits() + q.r().bits() + q.radicand().bits(),
    }
}

fn tol_bits(tol: &Rat) -> u64 {
    // bits needed to resolve tol, with margin for the fold
    let r = tol.recip();
    let b = r.numer().bits().saturating_sub(r.denom().bits());
    (2 * b + 64).max(128)
}

/// Evaluates truncations of `s` of increasing length.
///
/// The limit, when it exists, lies between `V_f` of `[…, a_n]` and of
/// `[…, a_n + 1]`; `Converged` is reported once that hull is narrower than
/// `tol`. Otherwise the even- and odd-length truncations are compared as two
/// clusters.
pub fn eval_infinite(f: &GeneratorFn, s: &PeriodicSpec, n_max: usize, tol: &Rat) -> Result<EvalOutcome> {
    if n_max < 4 * s.period().len() {
        return Err(Error::Invalid("n_max must be at least four periods".into()));
    }
    if !tol.is_positive() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    let bits = tol_bits(tol);
    let mut values: Vec<CertifiedReal> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut tail: Vec<BigInt> = s.prefix(n).tail().to_vec();
        let v = eval_prefix(f, s.head(), &tail, bits)?;
        *tail.last_mut().unwrap() += BigInt::one();
        let w = eval_prefix(f, s.head(), &tail, bits)?;
        let hull = v.hull(&w);
        if hull.width().to_rat() < *tol {
            return Ok(EvalOutcome::Converged(hull));
        }
        values.push(v);
    }
    Ok(classify_clusters(&values, tol))
}

fn classify_clusters(values: &[CertifiedReal], tol: &Rat) -> EvalOutcome {
    const WINDOW: usize = 4;
    let n = values.len();
    let tail_start = n.saturating_sub(2 * WINDOW);
    let recent = &values[tail_start..];
    if recent.len() < 2 * WINDOW {
        return EvalOutcome::Inconclusive(recent.to_vec());
    }
    let cluster = |parity: usize| {
        recent
            .iter()
            .enumerate()
            .filter(|(i, _)| (tail_start + i) % 2 == parity)
            .map(|(_, v)| v.clone())
            .reduce(|a, b| a.hull(&b))
            .expect("nonempty window")
    };
    let a = cluster(0);
    let b = cluster(1);
    let (low, high) = if a.hi() < b.lo() { (a, b) } else { (b, a) };
    let gap = high.lo().sub(low.hi()).to_rat();
    let thousand_tol = tol * Rat::from_integer(1000.into());
    let spread = low.width().max(high.width()).to_rat();
    if gap > thousand_tol && spread * Rat::from_integer(10.into()) < gap {
        EvalOutcome::Oscillating(alloc::vec![low, high])
    } else {
        EvalOutcome::Inconclusive(recent.to_vec())
    }
}

/// Shortest `(preperiod, period)` of the tail consistent with the whole
/// prefix and repeated at least twice. A heuristic candidate, never a proof.
pub fn detect_period(q: &Quotients) -> Option<(usize, usize)> {
    if q.len() < 8 {
        return None;
    }
    let t = q.tail();
    let n = t.len();
    for per in 1..=n / 2 {
        for pre in 0..=n - 2 * per {
            if (pre..n - per).all(|i| t[i] == t[i + per]) {
                return Some((pre, per));
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub expansion: ExpansionResult,
    /// `V_f` of the expansion, or of its known prefix.
    pub value: CertifiedReal,
    /// `|x − value|`.
    pub gap: CertifiedReal,
}

impl RoundTrip {
    pub fn gap_is_zero(&self) -> bool {
        self.gap.exact_rational().is_some_and(|g| g == &Rat::from_integer(0.into()))
    }
}

/// `E_f(x)` followed by `V_f`, with the distance back to `x`.
pub fn roundtrip_check(f: &GeneratorFn, x: &RealExpr, terms: usize, schedule: BitSchedule) -> Result<RoundTrip> {
    let expansion = expand(f, x, terms, schedule)?;
    let bits = schedule.start.max(expansion.max_bits());
    let q = &expansion.quotients;
    let value = eval_prefix(f, q.head(), q.tail(), bits)?;
    let gap = eval_expr(x, bits).sub(&value).abs();
    let gap = match (eval_expr(x, bits).exact(), value.exact()) {
        (Some(a), Some(b)) if a == b => CertifiedReal::point(Dyadic::zero(), bits),
        _ => gap,
    };
    Ok(RoundTrip { expansion, value, gap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    fn q(head: i64, tail: &[i64]) -> Quotients {
        Quotients::from_i64(head, tail, crate::cfseq::Status::Terminated).unwrap()
    }

    #[test]
    fn finite_examples() {
        let r = GeneratorFn::reciprocal();
        let v = eval_finite(&r, &q(0, &[2, 16]), 64).unwrap();
        assert_eq!(v.exact_rational(), Some(&rat(16, 33)));
        let h = GeneratorFn::power(rat(1, 2)).unwrap();
        let v = eval_finite(&h, &q(0, &[2, 16]), 64).unwrap();
        assert_eq!(v.exact_rational(), Some(&rat(2, 3)));
        let v = eval_finite(&h, &q(7, &[]), 64).unwrap();
        assert_eq!(v.exact_rational(), Some(&rat(7, 1)));
        let v = eval_finite(&h, &q(0, &[3, 1098, 2892, 410, 256]), 64).unwrap();
        assert_eq!(v.exact_rational(), Some(&rat(27, 47)));
    }

    #[test]
    fn golden_ratio_converges() {
        let r = GeneratorFn::reciprocal();
        let s = PeriodicSpec::from_i64(1, &[], &[1]).unwrap();
        let tol = rat(1, 1_000_000_000_000);
        match eval_infinite(&r, &s, 100, &tol).unwrap() {
            EvalOutcome::Converged(v) => assert!((v.mid_f64() - 1.618_033_988_749_895).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn power_five_ones_oscillate() {
        let f = GeneratorFn::power(rat(5, 1)).unwrap();
        let s = PeriodicSpec::from_i64(1, &[], &[1]).unwrap();
        match eval_infinite(&f, &s, 120, &rat(1, 1_000_000_000)).unwrap() {
            EvalOutcome::Oscillating(c) => {
                assert_eq!(c.len(), 2);
                assert!(c[0].is_disjoint(&c[1]));
                assert!((c[0].mid_f64() - 1.06377).abs() < 1e-4, "{}", c[0].mid_f64());
                assert!((c[1].mid_f64() - 1.73411).abs() < 1e-4, "{}", c[1].mid_f64());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn periods() {
        let t = Quotients::from_i64(1, &[1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2], crate::cfseq::Status::Truncated).unwrap();
        assert_eq!(detect_period(&t), Some((0, 4)));
        let c = Quotients::from_i64(1, &[1; 8], crate::cfseq::Status::Truncated).unwrap();
        assert_eq!(detect_period(&c), Some((0, 1)));
        let cube = [
            1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 3, 1, 1, 1, 1, 3, 1, 2, 1, 1, 7, 23, 1,
        ];
        let c = Quotients::from_i64(1, &cube, crate::cfseq::Status::Truncated).unwrap();
        assert_eq!(detect_period(&c), None);
    }

    #[test]
    fn roundtrips() {
        let s = BitSchedule::default();
        let r = roundtrip_check(&GeneratorFn::reciprocal(), &RealExpr::ratio(27, 47), 20, s).unwrap();
        assert!(r.gap_is_zero());
        let h = GeneratorFn::power(rat(1, 2)).unwrap();
        let r = roundtrip_check(&h, &RealExpr::ratio(2, 3), 20, s).unwrap();
        assert!(r.gap_is_zero());
        let f5 = GeneratorFn::power(rat(5, 1)).unwrap();
        let x = RealExpr::nth_root(rat(7, 1), 5).unwrap();
        let r = roundtrip_check(&f5, &x, 10, s).unwrap();
        assert!(r.gap.lo().to_f64() > 0.1);
    }
}

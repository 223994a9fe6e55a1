//! Minkowski's question-mark function on rationals and quadratic irrationals.
//!
//! With `x = [0; a₁, a₂, …]`,
//! `?(x) = Σ_k (−1)^(k+1) 2^(1 − (a₁ + … + a_k))`.
//! Rationals map to dyadic rationals and quadratic irrationals to rationals,
//! so every value here is an exact [`Rat`]. The inverse is read off the
//! binary expansion: a run of `a₁ − 1` zeros followed by alternating runs of
//! lengths `a₂, a₃, …`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cfseq::{PeriodicSpec, Quotients};
use crate::engine::{self, ExpansionResult};
use crate::realkernel::{Exact, QuadIrr, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputClass {
    Rational,
    QuadraticIrrational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QMValue {
    pub value: Rat,
    pub class: InputClass,
}

impl QMValue {
    pub fn is_dyadic(&self) -> bool {
        is_dyadic(&self.value)
    }
}

pub fn is_dyadic(r: &Rat) -> bool {
    let d = r.denom();
    (d & (d - BigInt::one())).is_zero()
}

fn pow2(k: &BigInt) -> Result<Rat> {
    let k = k.to_i64().ok_or_else(|| Error::Unsupported("partial quotient too large".into()))?;
    let one = BigInt::one();
    Ok(if k >= 0 {
        Rat::from_integer(one << k as u64)
    } else {
        Rat::new(one, BigInt::one() << (-k) as u64)
    })
}

/// Contribution of the digits `a₁ … a_n` to the series, with the running
/// exponent and sign threaded through.
fn partial_sum(digits: &[BigInt], start_exp: &BigInt, start_sign: bool) -> Result<(Rat, BigInt, bool)> {
    let mut sum = Rat::zero();
    let mut s = start_exp.clone();
    let mut positive = start_sign;
    for a in digits {
        s += a;
        let t = pow2(&(BigInt::one() - &s))?;
        if positive {
            sum += t;
        } else {
            sum -= t;
        }
        positive = !positive;
    }
    Ok((sum, s, positive))
}

/// `?` of a number in `(0, 1)` given by its continued fraction tail.
fn from_digits(pre: &[BigInt], period: &[BigInt]) -> Result<Rat> {
    let (head, s, sign) = partial_sum(pre, &BigInt::zero(), true)?;
    if period.is_empty() {
        return Ok(head);
    }
    let (block, s_end, _) = partial_sum(period, &s, sign)?;
    // each further repetition scales the block by ±2^(−S)
    let big_s = &s_end - &s;
    let mut ratio = pow2(&-big_s)?;
    if period.len() % 2 == 1 {
        ratio = -ratio;
    }
    Ok(head + block / (Rat::one() - ratio))
}

fn in_unit(x: &Exact) -> bool {
    x.signum() > 0 && x.cmp_rat(&Rat::one()).is_lt()
}

/// `?(x)` for `x` in `(0, 1)`.
pub fn question_mark(x: &Exact) -> Result<QMValue> {
    if !in_unit(x) {
        return Err(Error::Domain("question mark is evaluated on (0, 1)".into()));
    }
    match x {
        Exact::Rational(r) => {
            let cf = euclid(r);
            Ok(QMValue {
                value: from_digits(cf.tail(), &[])?,
                class: InputClass::Rational,
            })
        }
        Exact::Quadratic(q) => {
            let cf = q.continued_fraction();
            Ok(QMValue {
                value: from_digits(cf.preperiod(), cf.period())?,
                class: InputClass::QuadraticIrrational,
            })
        }
    }
}

/// Chorus-line extension `⌊x⌋ + ?({x})`, defined on all of ℝ.
pub fn question_mark_bar(x: &Exact) -> Result<Rat> {
    let (n, f) = x.split();
    if f.signum() == 0 {
        return Ok(Rat::from_integer(n));
    }
    Ok(Rat::from_integer(n) + question_mark(&f)?.value)
}

/// `?⁻¹(y)` for a dyadic `y` in `(0, 1)`.
pub fn question_mark_inverse(y: &Rat) -> Result<Rat> {
    if !is_dyadic(y) {
        return Err(Error::Domain("inverse question mark of a non-dyadic rational is irrational".into()));
    }
    match question_mark_inverse_exact(y)? {
        Exact::Rational(r) => Ok(r),
        Exact::Quadratic(_) => unreachable!("dyadic preimages are rational"),
    }
}

/// `?⁻¹(y)` for any rational `y` in `(0, 1)`: rational when `y` is dyadic,
/// a quadratic irrational otherwise.
pub fn question_mark_inverse_exact(y: &Rat) -> Result<Exact> {
    if !y.is_positive() || *y >= Rat::one() {
        return Err(Error::Domain("inverse question mark is evaluated on (0, 1)".into()));
    }
    let (pre, period) = binary_digits(y);
    if period == [false] {
        // terminating expansion: the final zero run is infinite
        let runs = run_lengths(&pre);
        let tail = cf_terms(&runs, pre.first() == Some(&true));
        return Ok(Exact::Rational(cf_value(&tail)));
    }
    // start the repeating part at a run boundary inside the period
    let p = period.len();
    let digit = |i: usize| if i < pre.len() { pre[i] } else { period[(i - pre.len()) % p] };
    let s = (pre.len().max(1)..pre.len().max(1) + p)
        .find(|&i| digit(i) != digit(i - 1))
        .expect("a non-dyadic period holds both digits");
    let head: Vec<bool> = (0..s).map(digit).collect();
    let cycle: Vec<bool> = (s..s + p).map(digit).collect();
    let pre_terms = cf_terms(&run_lengths(&head), head[0]);
    let period_terms: Vec<BigInt> = run_lengths(&cycle).into_iter().map(BigInt::from).collect();
    let spec = PeriodicSpec::new(BigInt::zero(), pre_terms, period_terms)?;
    Ok(Exact::Quadratic(QuadIrr::from_periodic(&spec)))
}

/// Binary digits after the point: `(preperiod, period)`.
fn binary_digits(y: &Rat) -> (Vec<bool>, Vec<bool>) {
    let q = y.denom().clone();
    let mut r = y.numer().clone();
    let mut seen: BTreeMap<BigInt, usize> = BTreeMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&i) = seen.get(&r) {
            let period = digits.split_off(i);
            return (digits, period);
        }
        seen.insert(r.clone(), digits.len());
        r <<= 1;
        let bit = r >= q;
        if bit {
            r -= &q;
        }
        digits.push(bit);
    }
}

fn run_lengths(bits: &[bool]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    let mut last = None;
    for &b in bits {
        if Some(b) == last {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
            last = Some(b);
        }
    }
    runs
}

/// Partial quotients from the leading runs: the first zero run (possibly
/// empty) contributes `a₁ − 1`.
fn cf_terms(runs: &[usize], starts_with_one: bool) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::new();
    let mut it = runs.iter();
    if starts_with_one {
        out.push(BigInt::one());
    } else if let Some(&z) = it.next() {
        out.push(BigInt::from(z + 1));
    }
    out.extend(it.map(|&k| BigInt::from(k)));
    out
}

fn cf_value(tail: &[BigInt]) -> Rat {
    let mut v: Option<Rat> = None;
    for a in tail.iter().rev() {
        let a = Rat::from_integer(a.clone());
        v = Some(match v {
            None => a,
            Some(t) => a + t.recip(),
        });
    }
    v.map(|t| t.recip()).unwrap_or_else(Rat::zero)
}

/// Ordinary continued fraction of a rational, final entry at least 2.
pub(crate) fn euclid(r: &Rat) -> Quotients {
    let mut n = r.numer().clone();
    let mut d = r.denom().clone();
    let (a0, rem) = n.div_mod_floor(&d);
    let mut tail = Vec::new();
    n = d;
    d = rem;
    while !d.is_zero() {
        let (a, rem) = n.div_mod_floor(&d);
        tail.push(a);
        n = d;
        d = rem;
    }
    Quotients::terminated(a0, tail).expect("Euclid yields a canonical sequence")
}

/// `E_{f_?}(x) = E_r(?̄(x))`; always terminates.
pub fn expand_fquestion(x: &Exact) -> Result<ExpansionResult> {
    let y = question_mark_bar(x)?;
    Ok(engine::expand_rational_reciprocal(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    fn qm(x: Rat) -> Rat {
        question_mark(&Exact::Rational(x)).unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(qm(rat(1, 2)), rat(1, 2));
        assert_eq!(qm(rat(1, 3)), rat(1, 4));
        assert_eq!(qm(rat(2, 3)), rat(3, 4));
        assert_eq!(qm(rat(2, 5)), rat(3, 8));
        let golden = QuadIrr::from_i64(-1, 1, 5, 2).unwrap();
        let v = question_mark(&Exact::Quadratic(golden)).unwrap();
        assert_eq!(v.value, rat(2, 3));
        assert_eq!(v.class, InputClass::QuadraticIrrational);
    }

    #[test]
    fn inverse() {
        assert_eq!(question_mark_inverse(&rat(1, 2)).unwrap(), rat(1, 2));
        assert_eq!(question_mark_inverse(&rat(1, 4)).unwrap(), rat(1, 3));
        assert_eq!(question_mark_inverse(&rat(3, 8)).unwrap(), rat(2, 5));
        assert!(question_mark_inverse(&rat(1, 3)).is_err());
        let g = question_mark_inverse_exact(&rat(2, 3)).unwrap();
        assert_eq!(g, Exact::Quadratic(QuadIrr::from_i64(-1, 1, 5, 2).unwrap()));
    }

    #[test]
    fn sqrt2_minus_one() {
        let x = QuadIrr::from_i64(-1, 1, 2, 1).unwrap();
        let v = question_mark(&Exact::Quadratic(x.clone())).unwrap().value;
        // 2^-1 − 2^-3 + 2^-5 − … = (1/2)/(1 + 1/4)
        assert_eq!(v, rat(2, 5));
        assert_eq!(question_mark_inverse_exact(&v).unwrap(), Exact::Quadratic(x));
    }

    #[test]
    fn domain() {
        assert!(question_mark(&Exact::Rational(rat(3, 2))).is_err());
        assert!(question_mark(&Exact::Rational(rat(0, 1))).is_err());
        assert_eq!(question_mark_bar(&Exact::Rational(rat(7, 3))).unwrap(), rat(9, 4));
    }
}

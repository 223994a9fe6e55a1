//! Exact quadratic irrationals `(p + q√D)/r`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use super::Rat;
use crate::cfseq::PeriodicSpec;
use crate::{Error, Result};

/// `(p + q√D)/r` with `D > 1` squarefree (best effort), `q ≠ 0`, `r > 0` and
/// `gcd(p, q, r) = 1`.
#[derive(Clone, Debug)]
pub struct QuadIrr {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

/// Either a rational or a quadratic irrational, for results of field operations.
#[derive(Clone, Debug, PartialEq)]
pub enum QuadOrRat {
    Rational(Rat),
    Quadratic(QuadIrr),
}

/// `a + b√d` with rational coordinates, `d` held by the caller.
#[derive(Clone, Debug)]
pub(crate) struct QElem {
    pub a: Rat,
    pub b: Rat,
}

impl QElem {
    pub fn rat(a: Rat) -> QElem {
        QElem { a, b: Rat::zero() }
    }

    pub fn add(&self, o: &QElem) -> QElem {
        QElem {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    pub fn mul(&self, o: &QElem, d: &BigInt) -> QElem {
        let d = Rat::from_integer(d.clone());
        QElem {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn scale(&self, k: &Rat) -> QElem {
        QElem {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    pub fn inv(&self, d: &BigInt) -> QElem {
        let norm = &self.a * &self.a - &self.b * &self.b * Rat::from_integer(d.clone());
        assert!(!norm.is_zero(), "inverse of zero in a quadratic field");
        QElem {
            a: &self.a / &norm,
            b: -&self.b / &norm,
        }
    }

    pub fn div(&self, o: &QElem, d: &BigInt) -> QElem {
        self.mul(&o.inv(d), d)
    }
}

/// Sign of `a + b√m` for `m ≥ 0`.
pub(crate) fn sign_lin(a: &BigInt, b: &BigInt, m: &BigInt) -> Ordering {
    let sa = a.sign_cmp();
    let sb = if m.is_zero() { Ordering::Equal } else { b.sign_cmp() };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // opposite signs: compare a² with b²m
    let lhs = a * a;
    let rhs = b * b * m;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `a + b√m + c√n` for `m, n ≥ 0`.
pub(crate) fn sign_lin2(a: &BigInt, b: &BigInt, m: &BigInt, c: &BigInt, n: &BigInt) -> Ordering {
    let sy = sign_surd_pair(b, m, c, n);
    let sa = a.sign_cmp();
    if sy == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sy {
        return sy;
    }
    // |a| vs |b√m + c√n|: a² − b²m − c²n vs 2bc√(mn)
    let lhs = a * a - b * b * m - c * c * n;
    let t = BigInt::from(-2) * b * c;
    match sign_lin(&lhs, &t, &(m * n)) {
        Ordering::Greater => sa,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

fn sign_surd_pair(b: &BigInt, m: &BigInt, c: &BigInt, n: &BigInt) -> Ordering {
    let sb = if m.is_zero() { Ordering::Equal } else { b.sign_cmp() };
    let sc = if n.is_zero() { Ordering::Equal } else { c.sign_cmp() };
    if sb == Ordering::Equal {
        return sc;
    }
    if sc == Ordering::Equal || sb == sc {
        return sb;
    }
    match (b * b * m).cmp(&(c * c * n)) {
        Ordering::Greater => sb,
        Ordering::Less => sc,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Splits `d = s²·m` removing square factors `k²` with `k ≤ 4096`, then a final
/// perfect-square cofactor.
fn square_split(d: &BigInt) -> (BigInt, BigInt) {
    let mut m = d.clone();
    let mut s = BigInt::one();
    let mut k = BigInt::from(2u32);
    let limit = BigInt::from(4096u32);
    while k <= limit {
        let k2 = &k * &k;
        if k2 > m {
            break;
        }
        while (&m % &k2).is_zero() {
            m /= &k2;
            s *= &k;
        }
        k += 1u32;
    }
    let t = m.sqrt();
    if &t * &t == m {
        s *= &t;
        m = BigInt::one();
    }
    (s, m)
}

/// `⌊(P + √D)/Q⌋` for `D` not a perfect square and `Q ≠ 0`.
pub(crate) fn floor_surd(p: &BigInt, d: &BigInt, q: &BigInt) -> BigInt {
    let t = p + d.sqrt();
    if q.is_positive() {
        t.div_floor(q)
    } else {
        -t.div_floor(&-q) - 1
    }
}

impl QuadIrr {
    /// Builds `(p + q√D)/r`; fails when the value is rational or `r = 0`.
    pub fn new(p: BigInt, q: BigInt, d: BigInt, r: BigInt) -> Result<QuadIrr> {
        if r.is_zero() {
            return Err(Error::Invalid("quadratic irrational with zero denominator".into()));
        }
        if !d.is_positive() {
            return Err(Error::Invalid("radicand must be positive".into()));
        }
        let (s, m) = square_split(&d);
        let q = q * s;
        if q.is_zero() || m.is_one() {
            return Err(Error::Invalid("value is rational".into()));
        }
        let (mut p, mut q, mut r) = (p, q, r);
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Ok(QuadIrr { p, q, d: m, r })
    }

    pub fn from_i64(p: i64, q: i64, d: i64, r: i64) -> Result<QuadIrr> {
        QuadIrr::new(p.into(), q.into(), d.into(), r.into())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub(crate) fn to_qelem(&self) -> QElem {
        QElem {
            a: Rat::new(self.p.clone(), self.r.clone()),
            b: Rat::new(self.q.clone(), self.r.clone()),
        }
    }

    pub(crate) fn from_qelem(e: &QElem, d: &BigInt) -> QuadOrRat {
        if e.b.is_zero() {
            return QuadOrRat::Rational(e.a.clone());
        }
        let r = e.a.denom().lcm(e.b.denom());
        let p = e.a.numer() * (&r / e.a.denom());
        let q = e.b.numer() * (&r / e.b.denom());
        match QuadIrr::new(p, q, d.clone(), r) {
            Ok(x) => QuadOrRat::Quadratic(x),
            // only reachable when d is a perfect square, which callers exclude
            Err(_) => unreachable!("quadratic field element collapsed"),
        }
    }

    pub fn signum(&self) -> i32 {
        match sign_lin(&self.p, &self.q, &self.d) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn cmp_rat(&self, x: &Rat) -> Ordering {
        // sign of (p b − a r + q b √D)
        let (a, b) = (x.numer(), x.denom());
        sign_lin(&(&self.p * b - a * &self.r), &(&self.q * b), &self.d)
    }

    pub fn floor(&self) -> BigInt {
        let t = if self.q.is_positive() {
            &self.p + (&self.q * &self.q * &self.d).sqrt()
        } else {
            &self.p - (&self.q * &self.q * &self.d).sqrt() - 1
        };
        t.div_floor(&self.r)
    }

    /// `self − ⌊self⌋`, in `(0, 1)`.
    pub fn fract(&self) -> QuadIrr {
        let f = self.floor();
        self.add_rat(&Rat::from_integer(-f))
    }

    pub fn neg(&self) -> QuadIrr {
        QuadIrr::new(-&self.p, -&self.q, self.d.clone(), self.r.clone()).expect("negation")
    }

    pub fn add_rat(&self, x: &Rat) -> QuadIrr {
        let e = self.to_qelem().add(&QElem::rat(x.clone()));
        match QuadIrr::from_qelem(&e, &self.d) {
            QuadOrRat::Quadratic(q) => q,
            QuadOrRat::Rational(_) => unreachable!(),
        }
    }

    pub fn mul_rat(&self, x: &Rat) -> QuadOrRat {
        QuadIrr::from_qelem(&self.to_qelem().scale(x), &self.d)
    }

    pub fn recip(&self) -> QuadIrr {
        match QuadIrr::from_qelem(&self.to_qelem().inv(&self.d), &self.d) {
            QuadOrRat::Quadratic(q) => q,
            QuadOrRat::Rational(_) => unreachable!(),
        }
    }

    /// `(a·self + b)/(c·self + d)` for rationals with `ad − bc ≠ 0`.
    pub fn mobius(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> QuadIrr {
        let t = self.to_qelem();
        let num = t.scale(a).add(&QElem::rat(b.clone()));
        let den = t.scale(c).add(&QElem::rat(d.clone()));
        match QuadIrr::from_qelem(&num.div(&den, &self.d), &self.d) {
            QuadOrRat::Quadratic(q) => q,
            QuadOrRat::Rational(_) => panic!("degenerate Möbius map"),
        }
    }

    /// Outward dyadic enclosure with at least `bits` significant bits.
    pub fn enclose(&self, bits: u64) -> (Dyadic, Dyadic) {
        let extra = self.p.bits() + self.q.bits() + self.r.bits() + 16;
        let prec = bits + extra;
        let d = Dyadic::from_int(self.d.clone());
        let s_lo = d.sqrt_round(prec, Round::Down);
        let s_hi = d.sqrt_round(prec, Round::Up);
        let q = Dyadic::from_int(self.q.clone());
        let (t_lo, t_hi) = if self.q.is_positive() {
            (q.mul(&s_lo), q.mul(&s_hi))
        } else {
            (q.mul(&s_hi), q.mul(&s_lo))
        };
        let p = Dyadic::from_int(self.p.clone());
        let r = Dyadic::from_int(self.r.clone());
        let lo = p.add(&t_lo).div_round(&r, prec, Round::Down);
        let hi = p.add(&t_hi).div_round(&r, prec, Round::Up);
        (lo.round(bits + 2, Round::Down), hi.round(bits + 2, Round::Up))
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(60);
        (lo.to_f64() + hi.to_f64()) / 2.0
    }

    /// Ordinary continued fraction, eventually periodic.
    pub fn continued_fraction(&self) -> PeriodicSpec {
        // rewrite as (P + √D)/Q with Q | D − P²
        let mut d = &self.q * &self.q * &self.d;
        let (mut p, mut q) = if self.q.is_positive() {
            (self.p.clone(), self.r.clone())
        } else {
            (-&self.p, -&self.r)
        };
        if !((&d - &p * &p) % &q).is_zero() {
            let qa = q.abs();
            p *= &qa;
            d *= &qa * &qa;
            q *= &qa;
        }
        let head = floor_surd(&p, &d, &q);
        p = &head * &q - &p;
        q = (&d - &p * &p) / &q;
        let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
        let mut terms: Vec<BigInt> = Vec::new();
        loop {
            let key = (p.clone(), q.clone());
            if let Some(&start) = seen.get(&key) {
                let period = terms.split_off(start);
                return PeriodicSpec::new(head, terms, period).expect("periodic expansion");
            }
            seen.insert(key, terms.len());
            let a = floor_surd(&p, &d, &q);
            p = &a * &q - &p;
            q = (&d - &p * &p) / &q;
            terms.push(a);
        }
    }

    /// Value of an eventually periodic ordinary continued fraction.
    pub fn from_periodic(spec: &PeriodicSpec) -> QuadIrr {
        // purely periodic part t = [c1; c2, …, ck, t]: t = (A t + B)/(C t + D)
        let (a, b, c, dd) = matrix_product(spec.period());
        let disc = (&a - &dd) * (&a - &dd) + BigInt::from(4) * &b * &c;
        let t = QuadIrr::new(&a - &dd, BigInt::one(), disc, BigInt::from(2) * &c)
            .expect("periodic continued fraction is irrational");
        let mut prefix = Vec::with_capacity(spec.preperiod().len() + 1);
        prefix.push(spec.head().clone());
        prefix.extend(spec.preperiod().iter().cloned());
        let (a, b, c, dd) = matrix_product(&prefix);
        let r = |x: &BigInt| Rat::from_integer(x.clone());
        t.mobius(&r(&a), &r(&b), &r(&c), &r(&dd))
    }
}

/// `Π [[a_i, 1], [1, 0]]` as `(A, B, C, D)`.
fn matrix_product(terms: &[BigInt]) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut a, mut b, mut c, mut d) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for t in terms {
        let na = &a * t + &b;
        let nc = &c * t + &d;
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    (a, b, c, d)
}

impl PartialEq for QuadIrr {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QuadIrr {}

impl PartialOrd for QuadIrr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadIrr {
    fn cmp(&self, other: &Self) -> Ordering {
        // sign of (p1 r2 − p2 r1) + q1 r2 √D1 − q2 r1 √D2
        let a = &self.p * &other.r - &other.p * &self.r;
        let b = &self.q * &other.r;
        let c = -(&other.q * &self.r);
        sign_lin2(&a, &b, &self.d, &c, &other.d)
    }
}

impl fmt::Display for QuadIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quad({},{},{},{})", self.p, self.q, self.d, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, qq: i64, d: i64, r: i64) -> QuadIrr {
        QuadIrr::from_i64(p, qq, d, r).unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = q(2, 2, 8, 4); // (2 + 2√8)/4 = (1 + 2√2)/2
        assert_eq!((x.p(), x.q(), x.radicand(), x.r()), (&1.into(), &2.into(), &2.into(), &2.into()));
        assert!(QuadIrr::from_i64(1, 1, 9, 1).is_err());
        let y = q(1, 1, 2, -1);
        assert_eq!(y.r(), &BigInt::one());
        assert_eq!(y.p(), &BigInt::from(-1));
    }

    #[test]
    fn floors_and_order() {
        let s2m1 = q(-1, 1, 2, 1);
        assert_eq!(s2m1.floor(), BigInt::zero());
        assert_eq!(s2m1.neg().floor(), BigInt::from(-1));
        let phi = q(1, 1, 5, 2);
        assert_eq!(phi.floor(), BigInt::one());
        assert!(s2m1 < phi);
        assert_eq!(phi.cmp_rat(&Rat::new(1618.into(), 1000.into())), Ordering::Greater);
        assert_eq!(phi.cmp_rat(&Rat::new(1619.into(), 1000.into())), Ordering::Less);
        // √2 + √3 vs √10 (3.146 vs 3.162)
        let a = sign_lin2(&0.into(), &1.into(), &2.into(), &1.into(), &3.into());
        assert_eq!(a, Ordering::Greater);
        let b = sign_lin2(&0.into(), &1.into(), &2.into(), &(-1).into(), &3.into());
        assert_eq!(b, Ordering::Less);
        let c = sign_lin2(&(-3).into(), &1.into(), &2.into(), &1.into(), &3.into());
        assert_eq!(c, Ordering::Greater);
    }

    #[test]
    fn periodic_expansions() {
        let s2m1 = q(-1, 1, 2, 1);
        let cf = s2m1.continued_fraction();
        assert_eq!(cf, PeriodicSpec::from_i64(0, &[], &[2]).unwrap());
        let s7 = q(0, 1, 7, 1);
        assert_eq!(s7.continued_fraction(), PeriodicSpec::from_i64(2, &[], &[1, 1, 1, 4]).unwrap());
        let x = q(3, -1, 13, 5);
        let back = QuadIrr::from_periodic(&x.continued_fraction());
        assert_eq!(back, x);
        let phi = q(1, 1, 5, 2);
        assert_eq!(phi.continued_fraction(), PeriodicSpec::from_i64(1, &[], &[1]).unwrap());
        let neg = q(-7, 3, 11, 4);
        assert_eq!(QuadIrr::from_periodic(&neg.continued_fraction()), neg);
    }

    #[test]
    fn enclosure_contains_value() {
        let x = q(-1, 1, 2, 1);
        let (lo, hi) = x.enclose(80);
        let r_lo = lo.to_rat();
        let r_hi = hi.to_rat();
        assert_eq!(x.cmp_rat(&r_lo), Ordering::Greater);
        assert_eq!(x.cmp_rat(&r_hi), Ordering::Less);
        assert!(hi.sub(&lo).magnitude() < -78);
    }

    #[test]
    fn mobius_and_recip() {
        let x = q(-1, 1, 2, 1);
        let y = x.recip(); // 1 + √2
        assert_eq!(y, q(1, 1, 2, 1));
        let one = Rat::one();
        let zero = Rat::zero();
        let z = x.mobius(&one, &one, &zero, &one);
        assert_eq!(z, q(0, 1, 2, 1));
    }
}

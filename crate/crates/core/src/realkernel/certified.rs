use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball;
use super::dyadic::{Dyadic, Round};
use super::quad::{QuadIrr, QuadOrRat};
use super::Rat;
use crate::{Error, Result};

/// A value known in closed form.
#[derive(Clone, Debug, PartialEq)]
pub enum Exact {
    Rational(Rat),
    Quadratic(QuadIrr),
}

impl Exact {
    pub fn floor(&self) -> BigInt {
        match self {
            Exact::Rational(r) => r.floor().to_integer(),
            Exact::Quadratic(q) => q.floor(),
        }
    }

    pub fn enclose(&self, bits: u64) -> (Dyadic, Dyadic) {
        match self {
            Exact::Rational(r) => (Dyadic::from_rat(r, bits, Round::Down), Dyadic::from_rat(r, bits, Round::Up)),
            Exact::Quadratic(q) => q.enclose(bits),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Exact::Rational(r) => Some(r),
            Exact::Quadratic(_) => None,
        }
    }

    pub fn cmp_rat(&self, x: &Rat) -> Ordering {
        match self {
            Exact::Rational(r) => r.cmp(x),
            Exact::Quadratic(q) => q.cmp_rat(x),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Exact::Rational(r) if r.is_integer())
    }

    pub fn signum(&self) -> i32 {
        match self.cmp_rat(&Rat::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn add_rat(&self, x: &Rat) -> Exact {
        match self {
            Exact::Rational(r) if x.is_integer() => {
                // keeps huge numerators out of gcd
                Exact::Rational(Rat::new_raw(r.numer() + x.numer() * r.denom(), r.denom().clone()))
            }
            Exact::Rational(r) => Exact::Rational(r + x),
            Exact::Quadratic(q) => Exact::Quadratic(q.add_rat(x)),
        }
    }

    pub fn mul_rat(&self, x: &Rat) -> Exact {
        match self {
            Exact::Rational(r) => Exact::Rational(r * x),
            Exact::Quadratic(q) => q.mul_rat(x).into(),
        }
    }

    /// `1/x`; `None` at zero.
    pub fn recip(&self) -> Option<Exact> {
        match self {
            Exact::Rational(r) if r.is_zero() => None,
            Exact::Rational(r) => Some(Exact::Rational(r.recip())),
            Exact::Quadratic(q) => Some(Exact::Quadratic(q.recip())),
        }
    }

    /// `(⌊x⌋, x − ⌊x⌋)`.
    pub fn split(&self) -> (BigInt, Exact) {
        let n = self.floor();
        let f = self.add_rat(&Rat::from_integer(-&n));
        (n, f)
    }

    /// Exact comparison of two closed forms.
    pub fn cmp_exact(&self, other: &Exact) -> Ordering {
        cmp_exact(self, other)
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclose(64);
        (lo.to_f64() + hi.to_f64()) / 2.0
    }
}

impl From<QuadOrRat> for Exact {
    fn from(v: QuadOrRat) -> Exact {
        match v {
            QuadOrRat::Rational(r) => Exact::Rational(r),
            QuadOrRat::Quadratic(q) => Exact::Quadratic(q),
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Rational(r) => write!(f, "{r}"),
            Exact::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// Outcome of a certified floor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Floor {
    /// The value is exactly this integer.
    Integer(BigInt),
    /// `n < x < n + 1`.
    Interior(BigInt),
    /// `n ≤ x < n + 1`, but `x = n` is not excluded.
    Bounded(BigInt),
    Undecided,
}

impl Floor {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            Floor::Integer(n) | Floor::Interior(n) | Floor::Bounded(n) => Some(n),
            Floor::Undecided => None,
        }
    }
}

/// Interval `[lo, hi]` with dyadic endpoints, and the exact value when known.
#[derive(Clone, Debug)]
pub struct CertifiedReal {
    lo: Dyadic,
    hi: Dyadic,
    bits: u64,
    exact: Option<Exact>,
}

impl CertifiedReal {
    pub fn from_bounds(lo: Dyadic, hi: Dyadic, bits: u64) -> CertifiedReal {
        assert!(lo <= hi, "inverted enclosure");
        CertifiedReal {
            lo,
            hi,
            bits,
            exact: None,
        }
    }

    pub fn from_exact(e: Exact, bits: u64) -> CertifiedReal {
        let (lo, hi) = e.enclose(bits);
        CertifiedReal {
            lo,
            hi,
            bits,
            exact: Some(e),
        }
    }

    pub fn from_rat(r: Rat, bits: u64) -> CertifiedReal {
        CertifiedReal::from_exact(Exact::Rational(r), bits)
    }

    pub fn from_int(n: impl Into<BigInt>, bits: u64) -> CertifiedReal {
        CertifiedReal::from_rat(Rat::from_integer(n.into()), bits)
    }

    pub fn from_quad(q: QuadIrr, bits: u64) -> CertifiedReal {
        CertifiedReal::from_exact(Exact::Quadratic(q), bits)
    }

    /// Exact dyadic point.
    pub fn point(d: Dyadic, bits: u64) -> CertifiedReal {
        CertifiedReal {
            exact: Some(Exact::Rational(d.to_rat())),
            lo: d.clone(),
            hi: d,
            bits,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn exact(&self) -> Option<&Exact> {
        self.exact.as_ref()
    }

    pub fn exact_rational(&self) -> Option<&Rat> {
        self.exact.as_ref().and_then(Exact::as_rational)
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).shl(-1)
    }

    /// Drops the closed form, keeping the enclosure.
    pub fn forget_exact(mut self) -> CertifiedReal {
        self.exact = None;
        self
    }

    pub fn with_bits(mut self, bits: u64) -> CertifiedReal {
        self.bits = bits;
        self
    }

    /// Whether the enclosure contains `x`.
    pub fn contains_rat(&self, x: &Rat) -> bool {
        &self.lo.to_rat() <= x && x <= &self.hi.to_rat()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// `Some(ordering)` when the enclosures decide `self` vs `other`.
    pub fn compare(&self, other: &CertifiedReal) -> Option<Ordering> {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            return Some(cmp_exact(a, b));
        }
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if other.hi < self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn compare_rat(&self, x: &Rat) -> Option<Ordering> {
        if let Some(e) = &self.exact {
            return Some(e.cmp_rat(x));
        }
        if self.hi.to_rat() < *x {
            Some(Ordering::Less)
        } else if self.lo.to_rat() > *x {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &CertifiedReal) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Intersection of two enclosures of the same real.
    pub fn intersect(&self, other: &CertifiedReal) -> Option<CertifiedReal> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo > hi {
            return None;
        }
        Some(CertifiedReal {
            lo,
            hi,
            bits: self.bits.max(other.bits),
            exact: self.exact.clone().or_else(|| other.exact.clone()),
        })
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &CertifiedReal) -> CertifiedReal {
        CertifiedReal {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            bits: self.bits.max(other.bits),
            exact: None,
        }
    }

    pub fn abs(&self) -> CertifiedReal {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg()
        } else {
            let m = self.lo.neg().max(self.hi.clone());
            CertifiedReal::from_bounds(Dyadic::zero(), m, self.bits)
        }
    }

    fn with(&self, other: &CertifiedReal) -> u64 {
        self.bits.max(other.bits)
    }

    fn build(lo: Dyadic, hi: Dyadic, bits: u64, exact: Option<Exact>) -> CertifiedReal {
        match exact {
            // keep the rounded enclosure tight and consistent with the exact value
            Some(e) => CertifiedReal::from_exact(e, bits),
            None => CertifiedReal {
                lo: lo.round(bits, Round::Down),
                hi: hi.round(bits, Round::Up),
                bits,
                exact: None,
            },
        }
    }

    pub fn neg(&self) -> CertifiedReal {
        CertifiedReal {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            bits: self.bits,
            exact: self.exact.as_ref().map(|e| match e {
                Exact::Rational(r) => Exact::Rational(-r),
                Exact::Quadratic(q) => Exact::Quadratic(q.neg()),
            }),
        }
    }

    pub fn add(&self, other: &CertifiedReal) -> CertifiedReal {
        let exact = match (&self.exact, &other.exact) {
            (Some(Exact::Rational(a)), Some(Exact::Rational(b))) => Some(Exact::Rational(a + b)),
            (Some(Exact::Quadratic(q)), Some(Exact::Rational(r)))
            | (Some(Exact::Rational(r)), Some(Exact::Quadratic(q))) => Some(Exact::Quadratic(q.add_rat(r))),
            _ => None,
        };
        CertifiedReal::build(self.lo.add(&other.lo), self.hi.add(&other.hi), self.with(other), exact)
    }

    pub fn sub(&self, other: &CertifiedReal) -> CertifiedReal {
        self.add(&other.neg())
    }

    pub fn add_rat(&self, x: &Rat) -> CertifiedReal {
        self.add(&CertifiedReal::from_rat(x.clone(), self.bits))
    }

    pub fn mul(&self, other: &CertifiedReal) -> CertifiedReal {
        let exact = match (&self.exact, &other.exact) {
            (Some(Exact::Rational(a)), Some(Exact::Rational(b))) => Some(Exact::Rational(a * b)),
            (Some(Exact::Quadratic(q)), Some(Exact::Rational(r)))
            | (Some(Exact::Rational(r)), Some(Exact::Quadratic(q))) => Some(q.mul_rat(r).into()),
            _ => None,
        };
        let c = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        CertifiedReal::build(lo, hi, self.with(other), exact)
    }

    pub fn recip(&self) -> Result<CertifiedReal> {
        if !(self.lo.is_positive() || self.hi.signum() < 0) {
            return Err(Error::Domain("reciprocal of an enclosure containing zero".into()));
        }
        let exact = self.exact.as_ref().map(|e| match e {
            Exact::Rational(r) => Exact::Rational(r.recip()),
            Exact::Quadratic(q) => Exact::Quadratic(q.recip()),
        });
        let one = Dyadic::from_int(1);
        let prec = self.bits + 2;
        let lo = one.div_round(&self.hi, prec, Round::Down);
        let hi = one.div_round(&self.lo, prec, Round::Up);
        Ok(CertifiedReal::build(lo, hi, self.bits, exact))
    }

    pub fn div(&self, other: &CertifiedReal) -> Result<CertifiedReal> {
        Ok(self.mul(&other.recip()?))
    }

    /// `x^n` for an integer exponent (`x > 0` required when `n < 0`).
    pub fn powi(&self, n: i64) -> Result<CertifiedReal> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let exact = self.exact_rational().map(|r| Exact::Rational(num_traits::pow(r.clone(), n as usize)));
        if n == 0 {
            return Ok(CertifiedReal::from_int(1, self.bits));
        }
        let n32 = n as u32;
        let (lo, hi) = if self.lo.signum() >= 0 {
            (self.lo.pow(n32), self.hi.pow(n32))
        } else if self.hi.signum() <= 0 {
            if n % 2 == 0 {
                (self.hi.pow(n32), self.lo.pow(n32))
            } else {
                (self.lo.pow(n32), self.hi.pow(n32))
            }
        } else if n % 2 == 0 {
            (Dyadic::zero(), self.lo.pow(n32).max(self.hi.pow(n32)))
        } else {
            (self.lo.pow(n32), self.hi.pow(n32))
        };
        Ok(CertifiedReal::build(lo, hi, self.bits, exact))
    }

    /// `x^e` for `x > 0` and rational `e`.
    pub fn pow_rat(&self, e: &Rat) -> Result<CertifiedReal> {
        if !self.lo.is_positive() {
            return Err(Error::Domain("real power of a non-positive enclosure".into()));
        }
        if e.is_integer() {
            let n = e.to_integer().to_i64().ok_or_else(|| Error::Domain("exponent too large".into()))?;
            return self.powi(n);
        }
        let exact = self.exact_rational().and_then(|r| exact_rat_power(r, e)).map(Exact::Rational);
        if let Some(x) = exact {
            return Ok(CertifiedReal::from_exact(x, self.bits));
        }
        let prec = self.bits + 8;
        let num = e.numer().abs();
        let den = e.denom();
        let small = den <= &BigInt::from(16) && num <= BigInt::from(64);
        let increasing = e.is_positive();
        let (lo, hi) = if small {
            let n = den.to_u32().unwrap();
            let k = num.to_u32().unwrap();
            let root_lo = self.lo.root_round(n, prec + 2 * k as u64, Round::Down).pow(k);
            let root_hi = self.hi.root_round(n, prec + 2 * k as u64, Round::Up).pow(k);
            if increasing {
                (root_lo, root_hi)
            } else {
                let one = Dyadic::from_int(1);
                (one.div_round(&root_hi, prec, Round::Down), one.div_round(&root_lo, prec, Round::Up))
            }
        } else {
            let (a_lo, a_hi) = ball::pow_bounds(&self.lo, e, prec);
            let (b_lo, b_hi) = ball::pow_bounds(&self.hi, e, prec);
            if increasing {
                (a_lo, b_hi)
            } else {
                (b_lo, a_hi)
            }
        };
        Ok(CertifiedReal::build(lo, hi, self.bits, None))
    }

    /// `x^(-q/p)`.
    pub fn pow_neg_rational(&self, q: u64, p: u64) -> Result<CertifiedReal> {
        pow_neg_rational(self, q, p)
    }

    pub fn ln(&self) -> Result<CertifiedReal> {
        if !self.lo.is_positive() {
            return Err(Error::Domain("logarithm of a non-positive enclosure".into()));
        }
        if self.exact_rational().is_some_and(|r| r.is_one()) {
            return Ok(CertifiedReal::from_int(0, self.bits));
        }
        let prec = self.bits + 8;
        let (lo, _) = ball::ln_bounds(&self.lo, prec);
        let (_, hi) = ball::ln_bounds(&self.hi, prec);
        Ok(CertifiedReal::build(lo, hi, self.bits, None))
    }

    pub fn exp(&self) -> CertifiedReal {
        if self.exact_rational().is_some_and(|r| r.is_zero()) {
            return CertifiedReal::from_int(1, self.bits);
        }
        let prec = self.bits + 8;
        let (lo, _) = ball::exp_bounds(&self.lo, prec);
        let (_, hi) = ball::exp_bounds(&self.hi, prec);
        CertifiedReal::build(lo, hi, self.bits, None)
    }

    pub fn floor(&self) -> Floor {
        certified_floor(self)
    }

    /// `x − n`, where `n` is a certified floor.
    pub fn sub_int(&self, n: &BigInt) -> CertifiedReal {
        self.add(&CertifiedReal::from_int(-n, self.bits))
    }

    /// Decimal rendering `[lo, hi]` with `places` digits after the point.
    pub fn to_decimal(&self, places: usize) -> alloc::string::String {
        alloc::format!(
            "[{}, {}]",
            super::decimal(&self.lo.to_rat(), places, Round::Down),
            super::decimal(&self.hi.to_rat(), places, Round::Up)
        )
    }
}

fn cmp_exact(a: &Exact, b: &Exact) -> Ordering {
    match (a, b) {
        (Exact::Rational(x), Exact::Rational(y)) => x.cmp(y),
        (Exact::Quadratic(x), Exact::Rational(y)) => x.cmp_rat(y),
        (Exact::Rational(x), Exact::Quadratic(y)) => y.cmp_rat(x).reverse(),
        (Exact::Quadratic(x), Exact::Quadratic(y)) => x.cmp(y),
    }
}

/// `r^e` when it is rational: the numerator and denominator of `r` must be
/// perfect powers of `e`'s denominator.
pub(crate) fn exact_rat_power(r: &Rat, e: &Rat) -> Option<Rat> {
    let n = e.denom().to_u32()?;
    let k = e.numer().to_i64()?;
    if r.is_negative() {
        return None;
    }
    let (a, b) = if n == 1 {
        (r.numer().clone(), r.denom().clone())
    } else {
        let a = r.numer().nth_root(n);
        let b = r.denom().nth_root(n);
        if num_traits::pow(a.clone(), n as usize) != *r.numer() || num_traits::pow(b.clone(), n as usize) != *r.denom() {
            return None;
        }
        (a, b)
    };
    // powers and roots of a reduced fraction stay reduced
    let m = k.unsigned_abs() as usize;
    if k >= 0 {
        Some(Rat::new_raw(num_traits::pow(a, m), num_traits::pow(b, m)))
    } else if a.is_zero() {
        None
    } else {
        Some(Rat::new_raw(num_traits::pow(b, m), num_traits::pow(a, m)))
    }
}

/// Floor with an integrality verdict.
pub fn certified_floor(x: &CertifiedReal) -> Floor {
    if let Some(e) = &x.exact {
        return match e {
            Exact::Rational(r) if r.is_integer() => Floor::Integer(r.to_integer()),
            Exact::Rational(r) => Floor::Interior(r.floor().to_integer()),
            Exact::Quadratic(q) => Floor::Interior(q.floor()),
        };
    }
    let n = x.lo.floor();
    let n1 = Dyadic::from_int(&n + 1);
    if x.hi >= n1 {
        return Floor::Undecided;
    }
    if x.lo == x.hi && x.lo.is_integer() {
        return Floor::Integer(n);
    }
    if x.lo.is_integer() {
        Floor::Bounded(n)
    } else {
        Floor::Interior(n)
    }
}

/// `x^(-q/p)` for `x > 0`; exact for rational `x` whenever the result is rational.
pub fn pow_neg_rational(x: &CertifiedReal, q: u64, p: u64) -> Result<CertifiedReal> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("exponent must be −q/p with positive p and q".into()));
    }
    if !x.lo.is_positive() {
        return Err(Error::Domain("real power of a non-positive enclosure".into()));
    }
    x.pow_rat(&Rat::new(-BigInt::from(q), BigInt::from(p)))
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(e) => write!(f, "{e}"),
            None => f.write_str(&self.to_decimal(12)),
        }
    }
}

impl PartialEq<Rat> for Exact {
    fn eq(&self, other: &Rat) -> bool {
        self.cmp_rat(other) == Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    #[test]
    fn floor_cases() {
        assert_eq!(certified_floor(&CertifiedReal::from_rat(rat(9, 4), 64)), Floor::Interior(2.into()));
        assert_eq!(certified_floor(&CertifiedReal::from_rat(rat(16, 1), 64)), Floor::Integer(16.into()));
        let lo = Dyadic::from_f64(1.9999).unwrap();
        let hi = Dyadic::from_f64(2.0001).unwrap();
        assert_eq!(certified_floor(&CertifiedReal::from_bounds(lo, hi, 64)), Floor::Undecided);
        let lo = Dyadic::from_int(2);
        let hi = Dyadic::from_f64(2.5).unwrap();
        assert_eq!(certified_floor(&CertifiedReal::from_bounds(lo, hi, 64)), Floor::Bounded(2.into()));
    }

    #[test]
    fn negative_powers() {
        let x = CertifiedReal::from_rat(rat(2, 3), 64);
        let y = pow_neg_rational(&x, 2, 1).unwrap();
        assert_eq!(y.exact_rational(), Some(&rat(9, 4)));
        let y = pow_neg_rational(&CertifiedReal::from_rat(rat(1, 4), 64), 2, 1).unwrap();
        assert_eq!(y.exact_rational(), Some(&rat(16, 1)));
        let four = CertifiedReal::from_bounds(Dyadic::from_f64(3.999).unwrap(), Dyadic::from_f64(4.001).unwrap(), 64);
        let h = pow_neg_rational(&four, 1, 2).unwrap();
        assert!(h.contains(&Dyadic::from_f64(0.5).unwrap()));
        let w_in = four.width().to_f64();
        assert!(h.width().to_f64() <= 2.0 * w_in);
        let e = pow_neg_rational(&CertifiedReal::from_rat(rat(4, 9), 64), 1, 2).unwrap();
        assert_eq!(e.exact_rational(), Some(&rat(3, 2)));
        assert!(pow_neg_rational(&CertifiedReal::from_int(0, 64), 1, 2).is_err());
    }

    #[test]
    fn general_powers_bracket() {
        let x = CertifiedReal::from_rat(rat(3, 7), 100);
        let e = rat(-500, 1121);
        let y = x.pow_rat(&e).unwrap();
        let f = libm_like_pow(3.0 / 7.0, -500.0 / 1121.0);
        assert!(y.lo().to_f64() <= f + 1e-14 && f - 1e-14 <= y.hi().to_f64());
        assert!(y.width().magnitude() < -90);
    }

    fn libm_like_pow(x: f64, e: f64) -> f64 {
        // exp(e ln x) through std-free series is overkill here; 1/ x^(-e) by bisection
        let target = x;
        let (mut lo, mut hi) = (0.0f64, 10.0f64);
        // find y with y^(1/e) = x, i.e. y = x^e; y^(1/e) decreasing in y for e < 0
        for _ in 0..200 {
            let m = (lo + hi) / 2.0;
            let v = powf_series(m, 1.0 / e);
            if v > target {
                lo = m;
            } else {
                hi = m;
            }
        }
        (lo + hi) / 2.0
    }

    fn powf_series(x: f64, e: f64) -> f64 {
        exp_series(e * ln_series(x))
    }

    fn ln_series(x: f64) -> f64 {
        let z = (x - 1.0) / (x + 1.0);
        let mut s = 0.0;
        let mut t = z;
        for i in 0..400 {
            s += t / (2 * i + 1) as f64;
            t *= z * z;
        }
        2.0 * s
    }

    fn exp_series(x: f64) -> f64 {
        let mut s = 1.0;
        let mut t = 1.0;
        for i in 1..200 {
            t *= x / i as f64;
            s += t;
        }
        s
    }

    #[test]
    fn arithmetic_exactness() {
        let a = CertifiedReal::from_rat(rat(1, 3), 64);
        let b = CertifiedReal::from_rat(rat(2, 5), 64);
        assert_eq!(a.mul(&b).exact_rational(), Some(&rat(2, 15)));
        assert_eq!(a.add(&b).exact_rational(), Some(&rat(11, 15)));
        assert_eq!(a.div(&b).unwrap().exact_rational(), Some(&rat(5, 6)));
        let s = CertifiedReal::from_quad(QuadIrr::from_i64(0, 1, 2, 1).unwrap(), 64);
        let t = s.add(&CertifiedReal::from_int(-1, 64));
        assert_eq!(t.floor(), Floor::Interior(0.into()));
        assert!(matches!(t.recip().unwrap().exact(), Some(Exact::Quadratic(_))));
    }
}

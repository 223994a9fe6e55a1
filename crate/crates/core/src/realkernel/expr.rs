use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::certified::{CertifiedReal, Exact};
use super::dyadic::{Dyadic, Round};
use super::quad::QuadIrr;
use super::{parse_rat, Rat};
use crate::algver::ZPoly;
use crate::{Error, Result};

/// Real algebraic root of an integer polynomial isolated in `(lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRoot {
    poly: ZPoly,
    squarefree: ZPoly,
    lo: Rat,
    hi: Rat,
}

impl PolyRoot {
    /// Checks that `(lo, hi)` isolates exactly one real root of `poly`.
    pub fn new(poly: ZPoly, lo: Rat, hi: Rat) -> Result<PolyRoot> {
        if lo >= hi {
            return Err(Error::Invalid("isolating interval must have lo < hi".into()));
        }
        if poly.degree() < 1 {
            return Err(Error::Invalid("polynomial must be non-constant".into()));
        }
        let squarefree = poly.squarefree_part();
        if squarefree.sign_at(&lo) == 0 || squarefree.sign_at(&hi) == 0 {
            return Err(Error::Invalid("isolating interval endpoint is a root".into()));
        }
        let count = squarefree.sturm_count(Some(&lo), Some(&hi));
        if count != 1 {
            return Err(Error::Invalid(format!("interval contains {count} real roots, expected 1")));
        }
        Ok(PolyRoot {
            poly,
            squarefree,
            lo,
            hi,
        })
    }

    pub fn poly(&self) -> &ZPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    /// Bisects the isolating interval until its width is at most `tol`.
    /// Returns the exact root when a midpoint hits it.
    pub fn isolate(&self, tol: &Rat) -> core::result::Result<(Rat, Rat), Rat> {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let s_lo = self.squarefree.sign_at(&lo);
        let two = Rat::from_integer(BigInt::from(2));
        while &(&hi - &lo) > tol {
            let mid = (&lo + &hi) / &two;
            let s = self.squarefree.sign_at(&mid);
            if s == 0 {
                return Err(mid);
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((lo, hi))
    }
}

/// Closed-form real inputs.
#[derive(Clone, Debug, PartialEq)]
pub enum RealExpr {
    Rational(Rat),
    Quadratic(QuadIrr),
    /// `base^(1/n)`, never an exact `n`-th power.
    NthRoot { base: Rat, n: u32 },
    PolyRoot(PolyRoot),
}

impl RealExpr {
    pub fn rational(r: Rat) -> RealExpr {
        RealExpr::Rational(r)
    }

    pub fn ratio(p: i64, q: i64) -> RealExpr {
        RealExpr::Rational(Rat::new(p.into(), q.into()))
    }

    /// `base^(1/n)`, normalized to a rational or a quadratic irrational when possible.
    pub fn nth_root(base: Rat, n: u32) -> Result<RealExpr> {
        if n < 2 {
            return Err(Error::Invalid("root index must be at least 2".into()));
        }
        if !base.is_positive() {
            return Err(Error::Domain("root of a non-positive number".into()));
        }
        let a = base.numer().nth_root(n);
        let b = base.denom().nth_root(n);
        let pow = |x: &BigInt| num_traits::pow(x.clone(), n as usize);
        if &pow(&a) == base.numer() && &pow(&b) == base.denom() {
            return Ok(RealExpr::Rational(Rat::new(a, b)));
        }
        if n == 2 {
            // √(a/b) = √(ab)/b
            let q = QuadIrr::new(BigInt::zero(), BigInt::one(), base.numer() * base.denom(), base.denom().clone())?;
            return Ok(RealExpr::Quadratic(q));
        }
        Ok(RealExpr::NthRoot { base, n })
    }

    pub fn poly_root(poly: ZPoly, lo: Rat, hi: Rat) -> Result<RealExpr> {
        Ok(RealExpr::PolyRoot(PolyRoot::new(poly, lo, hi)?))
    }

    pub fn exact(&self) -> Option<Exact> {
        match self {
            RealExpr::Rational(r) => Some(Exact::Rational(r.clone())),
            RealExpr::Quadratic(q) => Some(Exact::Quadratic(q.clone())),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        eval_expr(self, 64).mid_f64()
    }
}

/// Enclosure of width at most `2^(1−bits)·max(1, |value|)`.
pub fn eval_expr(e: &RealExpr, bits: u64) -> CertifiedReal {
    let bits = bits.max(2);
    match e {
        RealExpr::Rational(r) => CertifiedReal::from_rat(r.clone(), bits),
        RealExpr::Quadratic(q) => CertifiedReal::from_quad(q.clone(), bits),
        RealExpr::NthRoot { base, n } => {
            let prec = bits + 8;
            let lo = Dyadic::from_rat(base, prec, Round::Down).root_round(*n, prec, Round::Down);
            let hi = Dyadic::from_rat(base, prec, Round::Up).root_round(*n, prec, Round::Up);
            CertifiedReal::from_bounds(lo.round(bits + 2, Round::Down), hi.round(bits + 2, Round::Up), bits)
        }
        RealExpr::PolyRoot(p) => {
            let scale = p.lo.abs().max(p.hi.abs()).max(Rat::one());
            let tol = scale / Rat::from_integer(BigInt::one() << (bits + 1));
            match p.isolate(&tol) {
                Err(root) => CertifiedReal::from_rat(root, bits),
                Ok((lo, hi)) => CertifiedReal::from_bounds(
                    Dyadic::from_rat(&lo, bits + 4, Round::Down),
                    Dyadic::from_rat(&hi, bits + 4, Round::Up),
                    bits,
                ),
            }
        }
    }
}

/// Precision escalation: start, doubling each retry, up to the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitSchedule {
    pub start: u64,
    pub cap: u64,
}

impl Default for BitSchedule {
    fn default() -> Self {
        BitSchedule {
            start: 128,
            cap: 1 << 23,
        }
    }
}

impl BitSchedule {
    pub fn new(start: u64, cap: u64) -> BitSchedule {
        BitSchedule {
            start: start.max(32),
            cap: cap.max(start.max(32)),
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = u64> {
        let cap = self.cap;
        core::iter::successors(Some(self.start), move |&b| if b >= cap { None } else { Some((b * 2).min(cap)) })
    }
}

/// A decided predicate and the precision that decided it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    pub value: bool,
    pub bits: u64,
}

/// Evaluates `e` at escalating precision until `pred` decides.
pub fn refine<F>(e: &RealExpr, mut pred: F, schedule: BitSchedule) -> Result<Decision>
where
    F: FnMut(&CertifiedReal) -> Option<bool>,
{
    for bits in schedule.steps() {
        let x = eval_expr(e, bits);
        if let Some(value) = pred(&x) {
            return Ok(Decision { value, bits });
        }
    }
    Err(Error::PrecisionExhausted { bits: schedule.cap })
}

fn split_args(inner: &str) -> Vec<&str> {
    inner.split(',').map(str::trim).collect()
}

fn strip_call<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    let rest = text.strip_prefix(name)?.trim_start();
    rest.strip_prefix('(')?.strip_suffix(')')
}

/// Parses `p/q`, `root(n,p/q)` and `quad(p,q,D,r)`.
///
/// `polyroot(...)` names a file and is handled by the caller.
pub fn parse_expr(text: &str) -> Result<RealExpr> {
    let t = text.trim();
    if let Some(inner) = strip_call(t, "root") {
        let args = split_args(inner);
        if args.len() != 2 {
            return Err(Error::Syntax(format!("root expects 2 arguments: {t}")));
        }
        let n: u32 = args[0]
            .parse()
            .map_err(|_| Error::Syntax(format!("bad root index: {}", args[0])))?;
        return RealExpr::nth_root(parse_rat(args[1])?, n);
    }
    if let Some(inner) = strip_call(t, "quad") {
        let args = split_args(inner);
        if args.len() != 4 {
            return Err(Error::Syntax(format!("quad expects 4 arguments: {t}")));
        }
        let mut v = Vec::with_capacity(4);
        for a in args {
            v.push(BigInt::from_str(a).map_err(|_| Error::Syntax(format!("bad integer: {a}")))?);
        }
        let r = v.pop().unwrap();
        let d = v.pop().unwrap();
        let q = v.pop().unwrap();
        let p = v.pop().unwrap();
        return Ok(RealExpr::Quadratic(QuadIrr::new(p, q, d, r)?));
    }
    if strip_call(t, "polyroot").is_some() {
        return Err(Error::Unsupported("polyroot needs a polynomial loader".into()));
    }
    Ok(RealExpr::Rational(parse_rat(t)?))
}

impl FromStr for RealExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<RealExpr> {
        parse_expr(s)
    }
}

impl fmt::Display for RealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealExpr::Rational(r) => write!(f, "{r}"),
            RealExpr::Quadratic(q) => write!(f, "{q}"),
            RealExpr::NthRoot { base, n } => write!(f, "root({n},{base})"),
            RealExpr::PolyRoot(p) => write!(f, "polyroot(deg {},{},{})", p.poly.degree(), p.lo, p.hi),
        }
    }
}

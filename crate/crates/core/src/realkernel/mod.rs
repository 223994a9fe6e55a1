//! Exact rationals and quadratic irrationals, dyadic interval enclosures with
//! outward rounding, and precision escalation.

mod ball;
mod certified;
mod dyadic;
mod expr;
mod quad;

use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) use certified::exact_rat_power;
pub use certified::{certified_floor, pow_neg_rational, CertifiedReal, Exact, Floor};
pub use dyadic::{Dyadic, Round};
pub use expr::{eval_expr, parse_expr, refine, BitSchedule, Decision, PolyRoot, RealExpr};
pub use quad::{QuadIrr, QuadOrRat};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rat = num_rational::BigRational;

/// Parses `n`, `p/q` or a finite decimal `d.ddd` into an exact rational.
pub fn parse_rat(text: &str) -> crate::Result<Rat> {
    let t = text.trim();
    let bad = || crate::Error::Syntax(format!("not a rational: {t:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(crate::Error::Domain("zero denominator".into()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((i, f)) = t.split_once('.') {
        if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = i.starts_with('-');
        let whole = if i.is_empty() || i == "-" || i == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(i).map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), f.len());
        let frac = BigInt::from_str(f).map_err(|_| bad())?;
        let mag = whole.abs() * &scale + frac;
        let n = if neg { -mag } else { mag };
        return Ok(Rat::new(n, scale));
    }
    Ok(Rat::from_integer(BigInt::from_str(t).map_err(|_| bad())?))
}

/// Decimal string of `r` with `places` digits after the point, rounded in `dir`.
pub fn decimal(r: &Rat, places: usize, dir: Round) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r.numer() * &scale;
    let v = match dir {
        Round::Down => scaled.div_floor(r.denom()),
        Round::Up => scaled.div_ceil(r.denom()),
    };
    let neg = v.is_negative();
    let digits = v.abs().to_str_radix(10);
    let digits = if digits.len() <= places {
        let mut s = String::with_capacity(places + 1);
        for _ in 0..(places + 1 - digits.len()) {
            s.push('0');
        }
        s.push_str(&digits);
        s
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `⌊r⌋`.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.numer().div_floor(r.denom())
}

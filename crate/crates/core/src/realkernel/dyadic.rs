use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

/// Rounding direction for directed (outward) rounding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// `man · 2^exp`, normalized so that `man` is odd (or zero with `exp = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

pub(crate) fn shr_round(m: &BigInt, k: u64, dir: Round) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    // `>>` on BigInt rounds toward -inf
    match dir {
        Round::Down => m >> k,
        Round::Up => -((-m) >> k),
    }
}

pub(crate) fn div_round(n: &BigInt, d: &BigInt, dir: Round) -> BigInt {
    match dir {
        Round::Down => n.div_floor(d),
        Round::Up => n.div_ceil(d),
    }
}

pub(crate) fn nth_root_round(m: &BigInt, n: u32, dir: Round) -> BigInt {
    debug_assert!(!m.is_negative());
    let r = m.nth_root(n);
    match dir {
        Round::Down => r,
        Round::Up => {
            if num_traits::pow(r.clone(), n as usize) == *m {
                r
            } else {
                r + 1
            }
        }
    }
}

fn bits(m: &BigInt) -> i64 {
    m.bits() as i64
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Dyadic {
        if man.is_zero() {
            return Dyadic {
                man,
                exp: 0,
            };
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            Dyadic {
                man: man >> tz,
                exp: exp + tz as i64,
            }
        } else {
            Dyadic { man, exp }
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Dyadic {
        Dyadic::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// Position just above the leading bit: `2^(mag-1) ≤ |self| < 2^mag`.
    pub fn magnitude(&self) -> i64 {
        bits(&self.man) + self.exp
    }

    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.man << self.exp as u64)
        } else {
            Rat::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn is_integer(&self) -> bool {
        self.exp >= 0 || self.man.is_zero()
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            shr_round(&self.man, (-self.exp) as u64, Round::Down)
        }
    }

    pub fn ceil(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            shr_round(&self.man, (-self.exp) as u64, Round::Up)
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            man: self.man.clone(),
            exp: self.exp + k,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    pub fn pow(&self, n: u32) -> Dyadic {
        Dyadic::new(num_traits::pow(self.man.clone(), n as usize), self.exp * n as i64)
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u64, dir: Round) -> Dyadic {
        let b = self.man.bits();
        if b <= prec {
            return self.clone();
        }
        let k = b - prec;
        Dyadic::new(shr_round(&self.man, k, dir), self.exp + k as i64)
    }

    /// Rounds to a multiple of `2^-frac_bits`.
    pub fn round_abs(&self, frac_bits: i64, dir: Round) -> Dyadic {
        if self.exp >= -frac_bits {
            return self.clone();
        }
        let k = (-frac_bits - self.exp) as u64;
        Dyadic::new(shr_round(&self.man, k, dir), -frac_bits)
    }

    pub fn add_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        self.add(other).round(prec, dir)
    }

    pub fn mul_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        self.mul(other).round(prec, dir)
    }

    /// `self / other` rounded to `prec` significant bits.
    pub fn div_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let k = (prec as i64 + bits(&other.man) - bits(&self.man) + 2).max(0);
        let num = &self.man << k as u64;
        let q = div_round(&num, &other.man, dir);
        Dyadic::new(q, self.exp - other.exp - k)
    }

    /// Rational `n/d` rounded to `prec` significant bits.
    pub fn from_rat(r: &Rat, prec: u64, dir: Round) -> Dyadic {
        let (n, d) = (r.numer(), r.denom());
        if n.is_zero() {
            return Dyadic::zero();
        }
        let k = prec as i64 + 2 - (bits(n) - bits(d));
        let q = if k >= 0 {
            div_round(&(n << k as u64), d, dir)
        } else {
            div_round(n, &(d << (-k) as u64), dir)
        };
        Dyadic::new(q, -k)
    }

    /// `self^(1/n)` for `self ≥ 0`, rounded to `prec` significant bits.
    pub fn root_round(&self, n: u32, prec: u64, dir: Round) -> Dyadic {
        assert!(!self.man.is_negative(), "root of a negative number");
        if self.is_zero() || n == 1 {
            return self.round(prec, dir);
        }
        let n64 = n as i64;
        let top = self.magnitude();
        let t = top.div_euclid(n64) - prec as i64 - 2;
        let s = self.exp - n64 * t;
        let m = if s >= 0 {
            &self.man << s as u64
        } else {
            shr_round(&self.man, (-s) as u64, dir)
        };
        Dyadic::new(nth_root_round(&m, n, dir), t)
    }

    pub fn sqrt_round(&self, prec: u64, dir: Round) -> Dyadic {
        self.root_round(2, prec, dir)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = self.man.bits();
        let (m, e) = if b > 60 {
            (shr_round(&self.man, b - 60, Round::Down), self.exp + (b - 60) as i64)
        } else {
            (self.man.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        mf * pow2_f64(e)
    }

    pub fn from_f64(x: f64) -> Option<Dyadic> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (man, exp) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        Some(Dyadic::new(BigInt::from(man) * sign, exp))
    }
}

pub(crate) fn pow2_f64(e: i64) -> f64 {
    let mut e = e;
    let mut acc = 1.0f64;
    while e > 1000 {
        acc *= f64::from_bits(((1000 + 1023) as u64) << 52);
        e -= 1000;
    }
    while e < -1000 {
        acc *= f64::from_bits(((-1000 + 1023) as u64) << 52);
        e += 1000;
    }
    acc * f64::from_bits(((e + 1023) as u64) << 52)
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ma, mb) = (self.magnitude(), other.magnitude());
        if ma != mb {
            let by_mag = ma.cmp(&mb);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", self.floor())
        } else {
            write!(f, "{}*2^{}", self.man, self.exp)
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic::from_int(n)
    }
}

//! Fixed-point balls `mid ± rad`, both scaled by `2^w`, used to enclose `ln`,
//! `exp` and real powers at dyadic points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::{shr_round, Dyadic, Round};
use super::Rat;

#[derive(Clone, Debug)]
pub(crate) struct Ball {
    pub mid: BigInt,
    pub rad: BigInt,
}

impl Ball {
    pub fn exact(mid: BigInt) -> Ball {
        Ball {
            mid,
            rad: BigInt::zero(),
        }
    }

    /// Ball around the dyadic `d` at scale `w`.
    pub fn from_dyadic(d: &Dyadic, w: u64) -> Ball {
        let s = d.exponent() + w as i64;
        if s >= 0 {
            Ball::exact(d.mantissa() << s as u64)
        } else {
            Ball {
                mid: shr_round(d.mantissa(), (-s) as u64, Round::Down),
                rad: BigInt::one(),
            }
        }
    }

    pub fn mag(&self) -> BigInt {
        self.mid.abs() + &self.rad
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
        }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid - &o.mid,
            rad: &self.rad + &o.rad,
        }
    }

    pub fn mul(&self, o: &Ball, w: u64) -> Ball {
        let mid = (&self.mid * &o.mid) >> w;
        let err = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball {
            mid,
            rad: shr_round(&err, w, Round::Up) + 1,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Ball {
        Ball {
            mid: &self.mid * k,
            rad: &self.rad * k.abs(),
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Ball {
        debug_assert!(k.is_positive());
        Ball {
            mid: self.mid.div_floor(k),
            rad: self.rad.div_ceil(k) + 1,
        }
    }

    /// Quotient of balls; the divisor must exclude zero.
    pub fn div(&self, o: &Ball, w: u64) -> Ball {
        let b = o.mid.abs();
        assert!(b > o.rad, "ball division by a ball containing zero");
        let mid = (&self.mid << w).div_floor(&o.mid);
        let num = (&self.rad * &b + self.mid.abs() * &o.rad) << w;
        let den = (&b - &o.rad) * &b;
        Ball {
            mid,
            rad: num.div_ceil(&den) + 1,
        }
    }

    pub fn shr(&self, s: u64) -> Ball {
        Ball {
            mid: shr_round(&self.mid, s, Round::Down),
            rad: shr_round(&self.rad, s, Round::Up) + 1,
        }
    }

    /// Lower and upper dyadic bounds of `ball · 2^(shift - w)`.
    pub fn bounds(&self, shift: i64, w: u64) -> (Dyadic, Dyadic) {
        let e = shift - w as i64;
        (
            Dyadic::new(&self.mid - &self.rad, e),
            Dyadic::new(&self.mid + &self.rad, e),
        )
    }
}

/// `atanh(z) = z + z³/3 + z⁵/5 + …` for `|z| ≤ 1/2`.
fn atanh_series(z: &Ball, w: u64) -> Ball {
    let z2 = z.mul(z, w);
    let mut term = z.clone();
    let mut sum = z.clone();
    let small = BigInt::from(8);
    let mut i: u64 = 1;
    loop {
        term = term.mul(&z2, w);
        if term.mag() < small || i > w {
            break;
        }
        sum = sum.add(&term.div_int(&BigInt::from(2 * i + 1)));
        i += 1;
    }
    // remaining terms are bounded by |term| / (1 - z²) ≤ 2 |term|
    sum.rad += term.mag() * 2 + 1;
    sum
}

/// `ln 2 = 2 atanh(1/3)` at scale `w`.
pub(crate) fn ln2(w: u64) -> Ball {
    let third = Ball {
        mid: (BigInt::one() << w) / 3,
        rad: BigInt::one(),
    };
    let a = atanh_series(&third, w);
    a.mul_int(&BigInt::from(2))
}

/// `ln d` for a dyadic `d > 0`, at scale `w`.
pub(crate) fn ln_point(d: &Dyadic, w: u64) -> Ball {
    assert!(d.is_positive(), "logarithm of a non-positive number");
    let man = d.mantissa();
    let b = man.bits();
    let mut k = d.exponent() + b as i64;
    // x = man / 2^b in [1/2, 1), as a ball at scale w
    let mut x = if b <= w {
        Ball::exact(man << (w - b))
    } else {
        Ball {
            mid: man >> (b - w),
            rad: BigInt::one(),
        }
    };
    let one = BigInt::one() << w;
    if (&x.mid * &x.mid) * 2 < (&one * &one) {
        x.mid <<= 1;
        x.rad <<= 1;
        k -= 1;
    }
    let num = Ball {
        mid: &x.mid - &one,
        rad: x.rad.clone(),
    };
    let den = Ball {
        mid: &x.mid + &one,
        rad: x.rad.clone(),
    };
    let z = num.div(&den, w);
    let at = atanh_series(&z, w).mul_int(&BigInt::from(2));
    if k == 0 {
        at
    } else {
        at.add(&ln2(w).mul_int(&BigInt::from(k)))
    }
}

/// `exp(x)` as `(ball, k)` with the value in `ball · 2^(k - w)`.
pub(crate) fn exp_ball(x: &Ball, w: u64) -> (Ball, i64) {
    let l2 = ln2(w);
    let half = &l2.mid >> 1u32;
    let k = (&x.mid + half).div_floor(&l2.mid);
    let r = x.sub(&l2.mul_int(&k));
    const HALVINGS: u64 = 12;
    let t = r.shr(HALVINGS);
    let one = BigInt::one() << w;
    let mut sum = Ball::exact(one.clone());
    let mut term = Ball::exact(one);
    let small = BigInt::from(8);
    let mut i: u64 = 1;
    loop {
        term = term.mul(&t, w).div_int(&BigInt::from(i));
        sum = sum.add(&term);
        if term.mag() < small || i > w {
            break;
        }
        i += 1;
    }
    // |t| < 1/2 so the tail is bounded by the last term
    sum.rad += term.mag() + 1;
    for _ in 0..HALVINGS {
        sum = sum.mul(&sum, w);
    }
    let k = k.to_i64().expect("exponent out of range");
    (sum, k)
}

/// Guard-padded scale for evaluating at relative precision `prec` when the
/// intermediate logarithm has magnitude about `2^extra`.
fn working_scale(prec: u64, extra: u64) -> u64 {
    prec + 64 + extra
}

/// Enclosure of `ln d` rounded outward to `prec` bits.
pub(crate) fn ln_bounds(d: &Dyadic, prec: u64) -> (Dyadic, Dyadic) {
    let extra = (d.magnitude().unsigned_abs() + 1).ilog2() as u64 + 1;
    let w = working_scale(prec, extra);
    let l = ln_point(d, w);
    let (lo, hi) = l.bounds(0, w);
    (lo.round(prec, Round::Down), hi.round(prec, Round::Up))
}

/// Enclosure of `exp d` rounded outward to `prec` bits.
pub(crate) fn exp_bounds(d: &Dyadic, prec: u64) -> (Dyadic, Dyadic) {
    let extra = d.magnitude().max(1) as u64 + 1;
    let w = working_scale(prec, extra);
    let x = Ball::from_dyadic(d, w);
    let (e, k) = exp_ball(&x, w);
    let (lo, hi) = e.bounds(k, w);
    (lo.round(prec, Round::Down), hi.round(prec, Round::Up))
}

/// Enclosure of `d^e = exp(e ln d)` for `d > 0` and rational `e`.
pub(crate) fn pow_bounds(d: &Dyadic, e: &Rat, prec: u64) -> (Dyadic, Dyadic) {
    let mag = BigInt::from(d.magnitude().unsigned_abs() + 1);
    let est = (e.numer().abs() * mag / e.denom() + 1u32).bits();
    let w = working_scale(prec, est);
    let l = ln_point(d, w);
    let y = l.mul_int(e.numer()).div_int(e.denom());
    let (v, k) = exp_ball(&y, w);
    let (lo, hi) = v.bounds(k, w);
    (lo.round(prec, Round::Down), hi.round(prec, Round::Up))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brackets(lo: &Dyadic, hi: &Dyadic, x: f64, tol: f64) {
        assert!(lo <= hi);
        assert!(lo.to_f64() <= x + tol && x - tol <= hi.to_f64(), "{} {} {}", lo.to_f64(), hi.to_f64(), x);
    }

    #[test]
    fn ln2_digits() {
        let w = 200;
        let l = ln2(w);
        let (lo, hi) = l.bounds(0, w);
        brackets(&lo, &hi, core::f64::consts::LN_2, 1e-16);
        assert!(hi.sub(&lo).magnitude() < -180);
    }

    #[test]
    fn ln_and_exp_agree_with_f64() {
        for &x in &[0.001, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 1234.5678] {
            let d = Dyadic::from_f64(x).unwrap();
            let (lo, hi) = ln_bounds(&d, 100);
            brackets(&lo, &hi, libm_ln(x), 1e-14);
            assert!(hi.sub(&lo).magnitude() < -80);
        }
        for &x in &[-30.0, -1.0, -0.001, 0.0, 0.3, 1.0, 10.0, 200.0] {
            let d = Dyadic::from_f64(x).unwrap();
            let (lo, hi) = exp_bounds(&d, 100);
            let ex = libm_exp(x);
            brackets(&lo, &hi, ex, ex * 1e-14);
        }
    }

    #[test]
    fn pow_cube_root_of_three() {
        let three = Dyadic::from_int(3);
        let (lo, hi) = pow_bounds(&three, &Rat::new(1.into(), 3.into()), 120);
        let lo3 = lo.pow(3);
        let hi3 = hi.pow(3);
        assert!(lo3 < three && three < hi3);
        assert!(hi.sub(&lo).magnitude() < -110);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let d = Dyadic::new(BigInt::from(12345), -10);
        let (l_lo, l_hi) = ln_bounds(&d, 150);
        let (lo, _) = exp_bounds(&l_lo, 150);
        let (_, hi) = exp_bounds(&l_hi, 150);
        assert!(lo <= d && d <= hi);
    }

    // Reference values computed through f64 series, independent of the ball code.
    fn libm_ln(x: f64) -> f64 {
        // ln x = 2 atanh((x-1)/(x+1)) after scaling into [0.5, 2)
        let mut k = 0i32;
        let mut m = x;
        while m > 1.5 {
            m /= 2.0;
            k += 1;
        }
        while m < 0.75 {
            m *= 2.0;
            k -= 1;
        }
        let z = (m - 1.0) / (m + 1.0);
        let z2 = z * z;
        let mut term = z;
        let mut s = 0.0;
        for i in 0..60 {
            s += term / (2 * i + 1) as f64;
            term *= z2;
        }
        2.0 * s + k as f64 * core::f64::consts::LN_2
    }

    fn libm_exp(x: f64) -> f64 {
        let k = (x / core::f64::consts::LN_2).round();
        let r = x - k * core::f64::consts::LN_2;
        let mut s = 1.0;
        let mut term = 1.0;
        for i in 1..40 {
            term *= r / i as f64;
            s += term;
        }
        s * super::super::dyadic::pow2_f64(k as i64)
    }
}

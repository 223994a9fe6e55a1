use alloc::format;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chorus::{self, PWLHomeo};
use crate::minkowski;
use crate::realkernel::{exact_rat_power, parse_rat, CertifiedReal, Dyadic, Exact, Rat, Round};
use crate::{Error, Result};

/// Left end of the patched window for `φ` in the `power5-patched` generator.
pub const PATCH_U: (i64, i64) = (7, 100);
/// Right end of the patched window.
pub const PATCH_V: (i64, i64) = (73, 100);
/// Bump height factor.
pub const PATCH_EPS: (i64, i64) = (1, 10);

fn ratio(p: (i64, i64)) -> Rat {
    Rat::new(p.0.into(), p.1.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `r(x) = 1/x`.
    Reciprocal,
    /// `f_α(x) = x^(−α)`.
    Power(Rat),
    /// `f_g = g⁻¹ ∘ r ∘ ḡ`.
    ChorusConjugate(PWLHomeo),
    /// `f_? = ?⁻¹ ∘ r ∘ ?̄`.
    QuestionMark,
    /// `f_5` with `φ(y) = y^(−1/5) + ε(y − u)²(v − y)²` on `[u, v]`, which
    /// changes `f` only on `(φ₅(v), φ₅(u)) ⊂ (1.06377, 1.73411)`.
    Power5Patched,
}

/// Which inputs keep the orbit in exact arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub exact_on_rationals: bool,
    pub exact_on_quadratics: bool,
}

/// A decreasing homeomorphism `f : (1, ∞) → (0, 1)` with inverse `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorFn {
    kind: GeneratorKind,
}

impl GeneratorFn {
    pub fn new(kind: GeneratorKind) -> Result<GeneratorFn> {
        if let GeneratorKind::Power(a) = &kind {
            if !a.is_positive() {
                return Err(Error::Invalid(format!("power exponent must be positive, got {a}")));
            }
        }
        Ok(GeneratorFn { kind })
    }

    pub fn reciprocal() -> GeneratorFn {
        GeneratorFn {
            kind: GeneratorKind::Reciprocal,
        }
    }

    pub fn power(alpha: Rat) -> Result<GeneratorFn> {
        GeneratorFn::new(GeneratorKind::Power(alpha))
    }

    pub fn chorus(g: PWLHomeo) -> GeneratorFn {
        GeneratorFn {
            kind: GeneratorKind::ChorusConjugate(g),
        }
    }

    pub fn question_mark() -> GeneratorFn {
        GeneratorFn {
            kind: GeneratorKind::QuestionMark,
        }
    }

    pub fn power5_patched() -> GeneratorFn {
        GeneratorFn {
            kind: GeneratorKind::Power5Patched,
        }
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    pub fn capabilities(&self) -> Capabilities {
        let (r, q) = match &self.kind {
            GeneratorKind::Reciprocal => (true, true),
            GeneratorKind::Power(a) => (a.numer().is_one(), a.is_one()),
            GeneratorKind::ChorusConjugate(_) | GeneratorKind::QuestionMark => (true, true),
            GeneratorKind::Power5Patched => (false, false),
        };
        Capabilities {
            exact_on_rationals: r,
            exact_on_quadratics: q,
        }
    }

    /// Conjugate to `r` by a chorus-line homeomorphism, hence faithful.
    pub fn is_faithful_by_construction(&self) -> bool {
        matches!(
            self.kind,
            GeneratorKind::Reciprocal | GeneratorKind::ChorusConjugate(_) | GeneratorKind::QuestionMark
        )
    }

    /// `φ(y)` for exact `y` in `(0, 1)`, when the result is exact.
    pub fn phi_exact(&self, y: &Exact) -> Option<Exact> {
        match &self.kind {
            GeneratorKind::Reciprocal => y.recip(),
            GeneratorKind::Power(a) => match y {
                Exact::Rational(r) if a.numer().is_one() => {
                    // y^(−m) of a reduced fraction is reduced
                    let m = a.denom();
                    let e: usize = m.try_into().ok()?;
                    Some(Exact::Rational(Rat::new_raw(
                        num_traits::pow(r.denom().clone(), e),
                        num_traits::pow(r.numer().clone(), e),
                    )))
                }
                Exact::Rational(r) => exact_rat_power(r, &-a.recip()).map(Exact::Rational),
                Exact::Quadratic(_) if a.is_one() => y.recip(),
                Exact::Quadratic(_) => None,
            },
            GeneratorKind::ChorusConjugate(g) => chorus::phig_exact(g, y).ok(),
            GeneratorKind::QuestionMark => {
                let t = minkowski::question_mark(y).ok()?.value.recip();
                question_bar_inverse(&t).ok()
            }
            GeneratorKind::Power5Patched => {
                let r = y.as_rational()?;
                let base = exact_rat_power(r, &Rat::new((-1).into(), 5.into()))?;
                Some(Exact::Rational(base + patch_bump(r)))
            }
        }
    }

    /// `f(x)` for exact `x ≥ 1`, when the result is exact (`f(1) = 1`).
    pub fn f_exact(&self, x: &Exact) -> Option<Exact> {
        if x.cmp_rat(&Rat::one()) == Ordering::Equal {
            return Some(Exact::Rational(Rat::one()));
        }
        match &self.kind {
            GeneratorKind::Reciprocal => x.recip(),
            GeneratorKind::Power(a) => match x {
                Exact::Rational(r) => exact_rat_power(r, &-a).map(Exact::Rational),
                Exact::Quadratic(_) if a.is_one() => x.recip(),
                Exact::Quadratic(_) => None,
            },
            GeneratorKind::ChorusConjugate(g) => chorus::fg_exact(g, x).ok(),
            GeneratorKind::QuestionMark => {
                let t = minkowski::question_mark_bar(x).ok()?.recip();
                minkowski::question_mark_inverse_exact(&t).ok()
            }
            GeneratorKind::Power5Patched => {
                let r = x.as_rational()?;
                let y = exact_rat_power(r, &Rat::from_integer((-5).into()))?;
                (!in_patch(&y)).then_some(Exact::Rational(y))
            }
        }
    }

    /// Enclosure of `φ` over `y ⊂ (0, 1)`.
    pub fn phi(&self, y: &CertifiedReal) -> Result<CertifiedReal> {
        if let Some(v) = y.exact().and_then(|e| self.phi_exact(e)) {
            return Ok(CertifiedReal::from_exact(v, y.bits()));
        }
        if !y.lo().is_positive() || y.hi() >= &Dyadic::from_int(1) {
            return Err(Error::Domain("φ is evaluated on (0, 1)".into()));
        }
        match &self.kind {
            GeneratorKind::Reciprocal => y.recip(),
            GeneratorKind::Power(a) => y.pow_rat(&-a.recip()),
            GeneratorKind::Power5Patched => monotone(y, false, |r| patched_phi_point(r, y.bits())),
            _ => monotone(y, false, |r| {
                let e = self
                    .phi_exact(&Exact::Rational(r.clone()))
                    .ok_or_else(|| Error::Domain("φ endpoint".into()))?;
                Ok(CertifiedReal::from_exact(e, y.bits() + 4))
            }),
        }
    }

    /// Enclosure of `f` over `x ⊂ [1, ∞)`.
    pub fn f(&self, x: &CertifiedReal) -> Result<CertifiedReal> {
        if let Some(v) = x.exact().and_then(|e| self.f_exact(e)) {
            return Ok(CertifiedReal::from_exact(v, x.bits()));
        }
        if x.lo() < &Dyadic::from_int(1) {
            return Err(Error::Domain("f is evaluated on [1, ∞)".into()));
        }
        match &self.kind {
            GeneratorKind::Reciprocal => x.recip(),
            GeneratorKind::Power(a) => x.pow_rat(&-a),
            GeneratorKind::Power5Patched => monotone(x, false, |r| patched_f_point(r, x.bits())),
            _ => monotone(x, false, |r| {
                let e = self
                    .f_exact(&Exact::Rational(r.clone()))
                    .ok_or_else(|| Error::Domain("f endpoint".into()))?;
                Ok(CertifiedReal::from_exact(e, x.bits() + 4))
            }),
        }
    }

    /// Spot checks: `f` decreasing with values in `(0, 1)`, and `φ(f(x)) = x`
    /// up to enclosure width.
    pub fn validate(&self) -> Result<()> {
        let bits = 96;
        let xs = [(17, 16), (5, 4), (3, 2), (2, 1), (3, 1), (17, 2), (40, 1)];
        let mut prev: Option<CertifiedReal> = None;
        let tol = Rat::new(BigInt::one(), BigInt::one() << 40u32);
        for (p, q) in xs {
            let x = Rat::new(p.into(), q.into());
            let fx = self.f(&CertifiedReal::from_rat(x.clone(), bits))?;
            if !fx.lo().is_positive() || fx.hi() >= &Dyadic::from_int(1) {
                return Err(Error::Invalid(format!("{self}: f({x}) not inside (0, 1)")));
            }
            if let Some(p) = &prev {
                if p.compare(&fx) != Some(Ordering::Greater) {
                    return Err(Error::Invalid(format!("{self}: f is not decreasing at {x}")));
                }
            }
            let back = self.phi(&fx)?;
            let gap = back.add_rat(&-x.clone()).abs();
            if gap.hi().to_rat() > tol {
                return Err(Error::Invalid(format!("{self}: φ(f({x})) differs from {x}")));
            }
            prev = Some(fx);
        }
        Ok(())
    }
}

fn in_patch(y: &Rat) -> bool {
    *y > ratio(PATCH_U) && *y < ratio(PATCH_V)
}

fn patch_bump(y: &Rat) -> Rat {
    if !in_patch(y) {
        return Rat::zero();
    }
    let a = y - ratio(PATCH_U);
    let b = ratio(PATCH_V) - y;
    ratio(PATCH_EPS) * &a * &a * &b * &b
}

fn patched_phi_point(y: &Rat, bits: u64) -> Result<CertifiedReal> {
    let base = CertifiedReal::from_rat(y.clone(), bits + 8).pow_rat(&Rat::new((-1).into(), 5.into()))?;
    Ok(base.add_rat(&patch_bump(y)))
}

/// Solves `φ(y) = x` by bisection inside the patch window.
fn patched_f_point(x: &Rat, bits: u64) -> Result<CertifiedReal> {
    if x.is_one() {
        return Ok(CertifiedReal::from_int(1, bits));
    }
    let y0 = exact_rat_power(x, &Rat::from_integer((-5).into())).expect("integer power");
    if !in_patch(&y0) {
        return Ok(CertifiedReal::from_rat(y0, bits));
    }
    let mut lo = ratio(PATCH_U);
    let mut hi = ratio(PATCH_V);
    let two = Rat::from_integer(2.into());
    let tol = Rat::new(BigInt::one(), BigInt::one() << (bits + 4));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        match patched_phi_point(&mid, bits + 16)?.compare_rat(x) {
            Some(Ordering::Greater) => lo = mid,
            Some(Ordering::Less) => hi = mid,
            Some(Ordering::Equal) => return Ok(CertifiedReal::from_rat(mid, bits)),
            None => break,
        }
    }
    Ok(CertifiedReal::from_bounds(
        Dyadic::from_rat(&lo, bits + 4, Round::Down),
        Dyadic::from_rat(&hi, bits + 4, Round::Up),
        bits,
    ))
}

/// `?̄⁻¹(t)` for rational `t`.
fn question_bar_inverse(t: &Rat) -> Result<Exact> {
    let n = t.floor();
    let frac = t - &n;
    if frac.is_zero() {
        return Ok(Exact::Rational(n));
    }
    Ok(minkowski::question_mark_inverse_exact(&frac)?.add_rat(&n))
}

/// Enclosure of a monotone map over `x` from enclosures at its endpoints.
fn monotone<F>(x: &CertifiedReal, increasing: bool, point: F) -> Result<CertifiedReal>
where
    F: Fn(&Rat) -> Result<CertifiedReal>,
{
    let bits = x.bits();
    let a = point(&x.lo().to_rat())?;
    let b = point(&x.hi().to_rat())?;
    let (lo, hi) = if increasing {
        (a.lo().clone(), b.hi().clone())
    } else {
        (b.lo().clone(), a.hi().clone())
    };
    Ok(CertifiedReal::from_bounds(
        lo.round(bits + 4, Round::Down),
        hi.round(bits + 4, Round::Up),
        bits,
    ))
}

impl fmt::Display for GeneratorFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GeneratorKind::Reciprocal => f.write_str("reciprocal"),
            GeneratorKind::Power(a) => write!(f, "power:{a}"),
            GeneratorKind::ChorusConjugate(g) => write!(f, "chorus:{g}"),
            GeneratorKind::QuestionMark => f.write_str("question"),
            GeneratorKind::Power5Patched => f.write_str("power5-patched"),
        }
    }
}

impl FromStr for GeneratorFn {
    type Err = Error;

    /// `reciprocal`, `power:α`, `chorus:u:v,…`, `question`, `power5-patched`.
    fn from_str(s: &str) -> Result<GeneratorFn> {
        let t = s.trim();
        let (name, arg) = match t.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a)),
            None => (t, None),
        };
        match (name, arg) {
            ("reciprocal", None) => Ok(GeneratorFn::reciprocal()),
            ("power", Some(a)) => GeneratorFn::power(parse_rat(a)?),
            ("chorus", Some(a)) => Ok(GeneratorFn::chorus(PWLHomeo::parse_inline(a)?)),
            ("chorus", None) => Ok(GeneratorFn::chorus(PWLHomeo::identity())),
            ("question", None) => Ok(GeneratorFn::question_mark()),
            ("power5-patched", None) => Ok(GeneratorFn::power5_patched()),
            _ => Err(Error::Syntax(format!("unknown generating function {:?}", t.to_string()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    #[test]
    fn parse_and_display() {
        for s in ["reciprocal", "power:1/2", "power:3/2", "chorus:1/2:1/3,3/4:4/5", "question", "power5-patched"] {
            let f: GeneratorFn = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("power:0".parse::<GeneratorFn>().is_err());
        assert!("power:-1".parse::<GeneratorFn>().is_err());
        assert!("bogus".parse::<GeneratorFn>().is_err());
    }

    #[test]
    fn all_generators_validate() {
        for s in ["reciprocal", "power:1/2", "power:3/2", "power:5", "chorus:1/2:1/3,3/4:4/5", "question", "power5-patched"] {
            let f: GeneratorFn = s.parse().unwrap();
            f.validate().unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn exact_values() {
        let f = GeneratorFn::power(rat(1, 2)).unwrap();
        assert_eq!(f.phi_exact(&Exact::Rational(rat(2, 3))), Some(Exact::Rational(rat(9, 4))));
        assert_eq!(f.f_exact(&Exact::Rational(rat(9, 4))), Some(Exact::Rational(rat(2, 3))));
        assert!(f.capabilities().exact_on_rationals);
        let g = GeneratorFn::power(rat(3, 2)).unwrap();
        assert_eq!(g.phi_exact(&Exact::Rational(rat(1, 8))), Some(Exact::Rational(rat(4, 1))));
        assert_eq!(g.phi_exact(&Exact::Rational(rat(1, 3))), None);
    }

    #[test]
    fn patched_agrees_outside_window() {
        let p = GeneratorFn::power5_patched();
        let f5 = GeneratorFn::power(rat(5, 1)).unwrap();
        let y = CertifiedReal::from_rat(rat(1, 20), 128);
        let a = p.phi(&y).unwrap();
        let b = f5.phi(&y).unwrap();
        assert!(a.intersect(&b).is_some());
        let y = CertifiedReal::from_rat(rat(1, 2), 128);
        let a = p.phi(&y).unwrap();
        let b = f5.phi(&y).unwrap();
        assert!(a.is_disjoint(&b));
    }
}

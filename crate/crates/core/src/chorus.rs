//! Piecewise-linear homeomorphisms `g` of `(0, 1)`, their chorus-line
//! extensions `ḡ(x) = ⌊x⌋ + g({x})`, and the conjugate generating functions
//! `f_g = g⁻¹ ∘ r ∘ ḡ` with `r(x) = 1/x`.
//!
//! Nodes are rational, so `g` maps rationals to rationals and quadratic
//! irrationals to quadratic irrationals; every evaluation here is exact.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;


use num_traits::{One, Zero};

use crate::engine::{self, ExpansionResult, GeneratorFn};
use crate::realkernel::{parse_rat, BitSchedule, CertifiedReal, Exact, Rat, RealExpr};
use crate::{Error, Result};

/// Increasing piecewise-linear bijection of `(0, 1)` through the given
/// interior nodes, with `g(0⁺) = 0` and `g(1⁻) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PWLHomeo {
    nodes: Vec<(Rat, Rat)>,
}

impl PWLHomeo {
    pub fn new(nodes: Vec<(Rat, Rat)>) -> Result<PWLHomeo> {
        let zero = Rat::zero();
        let one = Rat::one();
        for (u, v) in &nodes {
            if *u <= zero || *u >= one || *v <= zero || *v >= one {
                return Err(Error::Invalid(format!("node ({u}, {v}) is not inside the unit square")));
            }
        }
        for w in nodes.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::Invalid("nodes must increase in both coordinates".into()));
            }
        }
        Ok(PWLHomeo { nodes })
    }

    pub fn identity() -> PWLHomeo {
        PWLHomeo { nodes: Vec::new() }
    }

    /// `g` with the single interior node `(u, v)`.
    pub fn single(u: Rat, v: Rat) -> Result<PWLHomeo> {
        PWLHomeo::new(alloc::vec![(u, v)])
    }

    pub fn nodes(&self) -> &[(Rat, Rat)] {
        &self.nodes
    }

    pub fn is_identity(&self) -> bool {
        self.nodes.iter().all(|(u, v)| u == v)
    }

    pub fn inverse(&self) -> PWLHomeo {
        PWLHomeo {
            nodes: self.nodes.iter().map(|(u, v)| (v.clone(), u.clone())).collect(),
        }
    }

    fn knot(&self, i: usize) -> (Rat, Rat) {
        if i == 0 {
            (Rat::zero(), Rat::zero())
        } else if i <= self.nodes.len() {
            self.nodes[i - 1].clone()
        } else {
            (Rat::one(), Rat::one())
        }
    }

    /// Index `i` of the cell `[knot i, knot i+1]` containing `x`.
    fn cell(&self, x: &Exact) -> usize {
        self.nodes
            .iter()
            .take_while(|(u, _)| x.cmp_rat(u) != Ordering::Less)
            .count()
    }

    /// `g(x)` for `x` in `(0, 1)`.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        match self.eval_exact(&Exact::Rational(x.clone()))? {
            Exact::Rational(r) => Ok(r),
            Exact::Quadratic(_) => unreachable!(),
        }
    }

    pub fn eval_inv(&self, y: &Rat) -> Result<Rat> {
        self.inverse().eval(y)
    }

    pub fn eval_exact(&self, x: &Exact) -> Result<Exact> {
        if x.signum() <= 0 || x.cmp_rat(&Rat::one()) != Ordering::Less {
            return Err(Error::Domain("g is evaluated on (0, 1)".into()));
        }
        let i = self.cell(x);
        let (u0, v0) = self.knot(i);
        let (u1, v1) = self.knot(i + 1);
        if x.cmp_rat(&u0) == Ordering::Equal {
            return Ok(Exact::Rational(v0));
        }
        let slope = (&v1 - &v0) / (&u1 - &u0);
        Ok(x.add_rat(&-u0).mul_rat(&slope).add_rat(&v0))
    }

    pub fn eval_inv_exact(&self, y: &Exact) -> Result<Exact> {
        self.inverse().eval_exact(y)
    }

    /// Parses `u:v,u:v,…`; an empty string or `id` is the identity.
    pub fn parse_inline(text: &str) -> Result<PWLHomeo> {
        let t = text.trim();
        if t.is_empty() || t == "id" || t == "identity" {
            return Ok(PWLHomeo::identity());
        }
        let mut nodes = Vec::new();
        for part in t.split(',') {
            let (u, v) = part
                .split_once(':')
                .ok_or_else(|| Error::Syntax(format!("expected u:v, got {part:?}")))?;
            nodes.push((parse_rat(u)?, parse_rat(v)?));
        }
        PWLHomeo::new(nodes)
    }
}

impl fmt::Display for PWLHomeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return f.write_str("id");
        }
        for (i, (u, v)) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}:{v}")?;
        }
        Ok(())
    }
}

impl FromStr for PWLHomeo {
    type Err = Error;

    fn from_str(s: &str) -> Result<PWLHomeo> {
        PWLHomeo::parse_inline(s)
    }
}

pub fn eval_g(g: &PWLHomeo, x: &Rat) -> Result<Rat> {
    g.eval(x)
}

pub fn eval_g_inv(g: &PWLHomeo, y: &Rat) -> Result<Rat> {
    g.eval_inv(y)
}

/// Chorus-line extension `ḡ` of `g` to all of ℝ, with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChorusLine {
    g: PWLHomeo,
    inv: PWLHomeo,
}

pub fn chorus_extend(g: &PWLHomeo) -> ChorusLine {
    ChorusLine {
        g: g.clone(),
        inv: g.inverse(),
    }
}

fn extend(g: &PWLHomeo, x: &Exact) -> Exact {
    let (n, f) = x.split();
    if f.signum() == 0 {
        return f.add_rat(&Rat::from_integer(n));
    }
    g.eval_exact(&f)
        .expect("fractional part lies in (0, 1)")
        .add_rat(&Rat::from_integer(n))
}

impl ChorusLine {
    pub fn g(&self) -> &PWLHomeo {
        &self.g
    }

    pub fn eval(&self, x: &Exact) -> Exact {
        extend(&self.g, x)
    }

    pub fn eval_inv(&self, y: &Exact) -> Exact {
        extend(&self.inv, y)
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        match self.eval(&Exact::Rational(x.clone())) {
            Exact::Rational(r) => r,
            Exact::Quadratic(_) => unreachable!(),
        }
    }

    pub fn eval_inv_rat(&self, y: &Rat) -> Rat {
        match self.eval_inv(&Exact::Rational(y.clone())) {
            Exact::Rational(r) => r,
            Exact::Quadratic(_) => unreachable!(),
        }
    }

    /// Enclosure of `ḡ` over an interval; `ḡ` is increasing, so the endpoint
    /// images bound it.
    pub fn eval_interval(&self, x: &CertifiedReal) -> CertifiedReal {
        if let Some(e) = x.exact() {
            return CertifiedReal::from_exact(self.eval(e), x.bits());
        }
        let bits = x.bits();
        let lo = self.eval(&Exact::Rational(x.lo().to_rat()));
        let hi = self.eval(&Exact::Rational(x.hi().to_rat()));
        CertifiedReal::from_bounds(lo.enclose(bits + 4).0, hi.enclose(bits + 4).1, bits)
    }
}

/// `f_g(x) = g⁻¹(1/ḡ(x))` for `x > 1`.
pub fn fg_exact(g: &PWLHomeo, x: &Exact) -> Result<Exact> {
    if x.cmp_rat(&Rat::one()) != Ordering::Greater {
        return Err(Error::Domain("f_g is evaluated on (1, ∞)".into()));
    }
    let y = extend(g, x).recip().expect("positive");
    g.eval_inv_exact(&y)
}

/// `φ_g(y) = ḡ⁻¹(1/g(y))` for `y` in `(0, 1)`.
pub fn phig_exact(g: &PWLHomeo, y: &Exact) -> Result<Exact> {
    let t = g.eval_exact(y)?.recip().expect("positive");
    Ok(extend(&g.inverse(), &t))
}

pub fn fg_eval(g: &PWLHomeo, x: &Rat) -> Result<Rat> {
    match fg_exact(g, &Exact::Rational(x.clone()))? {
        Exact::Rational(r) => Ok(r),
        Exact::Quadratic(_) => unreachable!(),
    }
}

pub fn phig_eval(g: &PWLHomeo, y: &Rat) -> Result<Rat> {
    match phig_exact(g, &Exact::Rational(y.clone()))? {
        Exact::Rational(r) => Ok(r),
        Exact::Quadratic(_) => unreachable!(),
    }
}

/// `E_{f_g}(x)` computed as `E_r(ḡ(x))`.
pub fn expand_conjugate(g: &PWLHomeo, x: &RealExpr, max_terms: usize, schedule: BitSchedule) -> Result<ExpansionResult> {
    let line = chorus_extend(g);
    if let Some(e) = x.exact() {
        let y = line.eval(&e);
        return engine::expand_exact(&GeneratorFn::reciprocal(), y, max_terms, schedule);
    }
    let start = |bits: u64| Ok(line.eval_interval(&crate::realkernel::eval_expr(x, bits)));
    engine::expand_from(&GeneratorFn::reciprocal(), &start, max_terms, schedule)
}

/// `V_r(E_f(x))` on each sample; for `f = f_g` this reproduces `g`.
pub fn recover_g(f: &GeneratorFn, samples: &[Rat], max_terms: usize, schedule: BitSchedule) -> Result<Vec<(Rat, Rat)>> {
    if !f.is_faithful_by_construction() {
        return Err(Error::Unsupported(format!("{f} is not faithful by construction")));
    }
    let r = GeneratorFn::reciprocal();
    let mut out = Vec::with_capacity(samples.len());
    for x in samples {
        if *x <= Rat::zero() || *x >= Rat::one() {
            return Err(Error::Domain("samples must lie in (0, 1)".into()));
        }
        let e = engine::expand(f, &RealExpr::Rational(x.clone()), max_terms, schedule)?;
        if !e.is_terminated() {
            return Err(Error::Unsupported(format!("expansion of {x} did not terminate within {max_terms} terms")));
        }
        let v = engine::eval_finite(&r, &e.quotients, schedule.start)?;
        let v = v.exact_rational().cloned().expect("reciprocal evaluation of a finite sequence is exact");
        out.push((x.clone(), v));
    }
    Ok(out)
}

/// The single-node `g` sending `x` to `y`, and `E_{f_g}(x)`, which equals the
/// ordinary continued fraction of `y`.
pub fn theorem1_demo(x: &Rat, y: &Rat, max_terms: usize) -> Result<(PWLHomeo, ExpansionResult)> {
    let g = if x == y {
        PWLHomeo::identity()
    } else {
        PWLHomeo::single(x.clone(), y.clone())?
    };
    let f = GeneratorFn::chorus(g.clone());
    let e = engine::expand(&f, &RealExpr::Rational(x.clone()), max_terms, BitSchedule::default())?;
    Ok((g, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    fn int(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn node_and_identity() {
        let id = PWLHomeo::identity();
        assert_eq!(id.eval(&rat(1, 3)).unwrap(), rat(1, 3));
        let g = PWLHomeo::single(rat(1, 2), rat(1, 3)).unwrap();
        assert_eq!(g.eval(&rat(1, 2)).unwrap(), rat(1, 3));
        assert_eq!(g.eval(&rat(1, 4)).unwrap(), rat(1, 6));
        assert_eq!(g.eval(&rat(3, 4)).unwrap(), rat(2, 3));
        assert_eq!(g.eval_inv(&rat(2, 3)).unwrap(), rat(3, 4));
        assert!(g.eval(&rat(1, 1)).is_err());
    }

    #[test]
    fn extension() {
        let g = PWLHomeo::single(rat(1, 2), rat(1, 3)).unwrap();
        let line = chorus_extend(&g);
        assert_eq!(line.eval_rat(&rat(-1, 2)), rat(-2, 3));
        assert_eq!(line.eval_rat(&int(7)), int(7));
        assert_eq!(line.eval_inv_rat(&rat(-2, 3)), rat(-1, 2));
    }

    #[test]
    fn conjugate_maps() {
        let id = PWLHomeo::identity();
        assert_eq!(fg_eval(&id, &int(4)).unwrap(), rat(1, 4));
        let g = PWLHomeo::parse_inline("1/2:1/3,3/4:4/5").unwrap();
        for x in [rat(3, 2), int(2), rat(17, 5), int(9)] {
            let y = fg_eval(&g, &x).unwrap();
            assert_eq!(phig_eval(&g, &y).unwrap(), x);
        }
        assert!(fg_eval(&g, &int(2)).unwrap() > fg_eval(&g, &int(3)).unwrap());
    }

    #[test]
    fn inline_format() {
        let g: PWLHomeo = "1/2:1/3, 3/4:4/5".parse().unwrap();
        assert_eq!(g.to_string(), "1/2:1/3,3/4:4/5");
        assert!(PWLHomeo::parse_inline("1/2:1/3,1/3:1/2").is_err());
        assert!(PWLHomeo::parse_inline("1/2").is_err());
    }
}

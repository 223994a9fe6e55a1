//! Finite stages of the back-and-forth construction between countable dense
//! subsets of `(0, 1)`, and the `η`/`δ` coding of integer polynomials as
//! terminal blocks of an expansion.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algver::ZPoly;
use crate::cfseq::Quotients;
use crate::chorus::PWLHomeo;
use crate::minkowski::euclid;
use crate::realkernel::{Dyadic, Exact, QuadIrr, Rat};
use crate::{Error, Result};

/// How many enumerated elements a single stage may inspect.
pub const SCAN_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DenseOracle {
    /// Rationals in `(0, 1)` in Calkin–Wilf order.
    Rationals,
    /// `k/2^n` level by level.
    Dyadics,
    /// `(p + q√D)/r` in `(0, 1)` ordered by `|p| + |q| + D + r`.
    QuadIrr,
    /// Rationals whose continued fraction ends in `d + 1`.
    Q1d(u32),
}

impl DenseOracle {
    pub fn name(&self) -> String {
        match self {
            DenseOracle::Rationals => "rationals".into(),
            DenseOracle::Dyadics => "dyadics".into(),
            DenseOracle::QuadIrr => "quadirr".into(),
            DenseOracle::Q1d(d) => format!("q1d:{d}"),
        }
    }

    /// `rationals`, `dyadics`, `quadirr` or `q1d:d`.
    pub fn parse(text: &str) -> Result<DenseOracle> {
        let t = text.trim();
        match t {
            "rationals" => Ok(DenseOracle::Rationals),
            "dyadics" => Ok(DenseOracle::Dyadics),
            "quadirr" => Ok(DenseOracle::QuadIrr),
            _ => {
                let d = t
                    .strip_prefix("q1d:")
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::Syntax(format!("unknown oracle {t:?}")))?;
                if d == 0 {
                    return Err(Error::Invalid("q1d needs d >= 1".into()));
                }
                Ok(DenseOracle::Q1d(d))
            }
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = Exact>> {
        match self {
            DenseOracle::Rationals => Box::new(calkin_wilf().map(Exact::Rational)),
            DenseOracle::Dyadics => Box::new(dyadics().map(Exact::Rational)),
            DenseOracle::QuadIrr => Box::new(quadratics().map(Exact::Quadratic)),
            DenseOracle::Q1d(d) => {
                let d = *d as usize;
                Box::new(calkin_wilf().filter(move |r| q1d_class(r) == Some(d)).map(Exact::Rational))
            }
        }
    }

    /// The `i`-th element, counting from 0.
    pub fn nth(&self, i: usize) -> Exact {
        self.iter().nth(i).expect("dense oracles are infinite")
    }

    pub fn contains(&self, x: &Exact) -> bool {
        let inside = x.signum() > 0 && x.cmp_rat(&Rat::one()) == Ordering::Less;
        inside
            && match (self, x) {
                (DenseOracle::Rationals, Exact::Rational(_)) => true,
                (DenseOracle::Dyadics, Exact::Rational(r)) => r.denom().magnitude().count_ones() == 1,
                (DenseOracle::QuadIrr, Exact::Quadratic(_)) => true,
                (DenseOracle::Q1d(d), Exact::Rational(r)) => q1d_class(r) == Some(*d as usize),
                _ => false,
            }
    }
}

impl fmt::Display for DenseOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn oracle_rationals() -> DenseOracle {
    DenseOracle::Rationals
}

pub fn oracle_dyadics() -> DenseOracle {
    DenseOracle::Dyadics
}

pub fn oracle_quadirr() -> DenseOracle {
    DenseOracle::QuadIrr
}

pub fn oracle_q1d(d: u32) -> Result<DenseOracle> {
    if d == 0 {
        return Err(Error::Invalid("q1d needs d >= 1".into()));
    }
    Ok(DenseOracle::Q1d(d))
}

/// Calkin–Wilf sequence restricted to `(0, 1)`.
fn calkin_wilf() -> impl Iterator<Item = Rat> {
    let one = Rat::one();
    let two = Rat::from_integer(BigInt::from(2));
    core::iter::successors(Some(Rat::one()), move |q: &Rat| {
        Some((&two * q.floor() - q + &one).recip())
    })
    .filter(|q| *q < Rat::one())
}

fn dyadics() -> impl Iterator<Item = Rat> {
    (1u32..).flat_map(|k| {
        let den = BigInt::one() << k;
        (0..(1u64 << (k - 1).min(62))).map(move |i| Rat::new(BigInt::from(2 * i + 1), den.clone()))
    })
}

/// Canonical `(p, q, D, r)` in `(0, 1)`: `D` squarefree, `gcd(p, q, r) = 1`,
/// `r > 0`.
fn quadratics() -> impl Iterator<Item = QuadIrr> {
    (4i64..).flat_map(|h| {
        let mut out = Vec::new();
        for r in 1..h {
            for d in 2..h - r {
                for qa in 1..h - r - d + 1 {
                    let pa = h - r - d - qa;
                    for q in [-qa, qa] {
                        let ps: &[i64] = if pa == 0 { &[0] } else { &[-pa, pa] };
                        for &p in ps {
                            if let Some(x) = canonical_quad(p, q, d, r) {
                                out.push(x);
                            }
                        }
                    }
                }
            }
        }
        out
    })
}

fn canonical_quad(p: i64, q: i64, d: i64, r: i64) -> Option<QuadIrr> {
    let x = QuadIrr::from_i64(p, q, d, r).ok()?;
    let same = x.p() == &BigInt::from(p)
        && x.q() == &BigInt::from(q)
        && x.radicand() == &BigInt::from(d)
        && x.r() == &BigInt::from(r);
    (same && x.signum() > 0 && x.cmp_rat(&Rat::one()) == Ordering::Less).then_some(x)
}

/// The `d` with `r ∈ Q(1, d)`, i.e. last continued-fraction term minus one.
pub fn q1d_class(r: &Rat) -> Option<usize> {
    if !r.is_positive() || *r >= Rat::one() {
        return None;
    }
    let q = euclid(r);
    let last = q.tail().last()?;
    let d: usize = (last - BigInt::one()).try_into().ok()?;
    Some(d)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Match {
    pub stage: usize,
    pub a: Exact,
    pub b: Exact,
}

/// A finite order-preserving bijection built stage by stage.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PartialIso {
    /// In stage order.
    pub matches: Vec<Match>,
}

impl PartialIso {
    pub fn stage(&self) -> usize {
        self.matches.len()
    }

    /// Pairs sorted by `a` (hence by `b`).
    pub fn sorted_pairs(&self) -> Vec<(Exact, Exact)> {
        let mut v: Vec<(Exact, Exact)> = self.matches.iter().map(|m| (m.a.clone(), m.b.clone())).collect();
        v.sort_by(|x, y| x.0.cmp_exact(&y.0));
        v
    }

    /// Checks `a < a′ ⇔ b < b′` on every pair of matches.
    pub fn is_order_preserving(&self) -> bool {
        let m = &self.matches;
        (0..m.len()).all(|i| {
            (i + 1..m.len()).all(|j| {
                let oa = m[i].a.cmp_exact(&m[j].a);
                oa != Ordering::Equal && oa == m[i].b.cmp_exact(&m[j].b)
            })
        })
    }

    pub fn image(&self, a: &Exact) -> Option<&Exact> {
        self.matches.iter().find(|m| m.a.cmp_exact(a) == Ordering::Equal).map(|m| &m.b)
    }
}

/// Sorted view of the matches for neighbour lookups.
struct Table {
    pairs: Vec<(Exact, Exact)>,
}

impl Table {
    fn find(&self, x: &Exact, side: usize) -> core::result::Result<usize, usize> {
        self.pairs.binary_search_by(|p| {
            let key = if side == 0 { &p.0 } else { &p.1 };
            key.cmp_exact(x)
        })
    }

    /// Open interval on the other side that a partner of `x` must lie in.
    fn window(&self, x: &Exact, side: usize) -> (Option<Exact>, Option<Exact>) {
        let i = self.find(x, side).expect_err("x is unmatched");
        let other = |p: &(Exact, Exact)| if side == 0 { p.1.clone() } else { p.0.clone() };
        let lo = i.checked_sub(1).map(|j| other(&self.pairs[j]));
        let hi = self.pairs.get(i).map(other);
        (lo, hi)
    }

    fn insert(&mut self, a: Exact, b: Exact) {
        let i = self.find(&a, 0).expect_err("a is unmatched");
        self.pairs.insert(i, (a, b));
    }
}

fn strictly_between(x: &Exact, lo: &Option<Exact>, hi: &Option<Exact>) -> bool {
    lo.as_ref().is_none_or(|l| l.cmp_exact(x) == Ordering::Less)
        && hi.as_ref().is_none_or(|h| x.cmp_exact(h) == Ordering::Less)
}

/// Lazily enumerated oracle with a cache, so that every stage can rescan
/// from the start.
struct Cursor {
    name: String,
    source: Box<dyn Iterator<Item = Exact>>,
    seen: Vec<Exact>,
}

impl Cursor {
    fn new(o: &DenseOracle) -> Cursor {
        Cursor {
            name: o.name(),
            source: o.iter(),
            seen: Vec::new(),
        }
    }

    fn get(&mut self, i: usize) -> &Exact {
        while self.seen.len() <= i {
            let x = self.source.next().expect("dense oracles are infinite");
            self.seen.push(x);
        }
        &self.seen[i]
    }

    /// Enumeration-first element that is unmatched on `side` and satisfies `ok`.
    fn first<F>(&mut self, table: &Table, side: usize, ok: F) -> Result<Exact>
    where
        F: Fn(&Exact) -> bool,
    {
        for i in 0..SCAN_LIMIT {
            let x = self.get(i);
            if table.find(x, side).is_err() && ok(x) {
                return Ok(x.clone());
            }
        }
        Err(Error::OracleExhausted(format!(
            "{}: no admissible element among the first {SCAN_LIMIT}",
            self.name
        )))
    }
}

/// `stages` steps of the back-and-forth construction between `a` and `b`.
///
/// Odd stages take the first unmatched element of `a` and pair it with the
/// first element of `b` in the order-compatible gap; even stages do the
/// same from `b`.
pub fn back_and_forth(a: &DenseOracle, b: &DenseOracle, stages: usize) -> Result<PartialIso> {
    back_and_forth_multi(&[(a.clone(), b.clone())], stages)
}

/// The construction for several pairs `(A_i, B_i)` at once, with `A_i` and
/// `B_i` pairwise disjoint on each side.
///
/// Stages are interleaved: stage `s` serves pair `⌊(s − 1)/2⌋ mod m`, from `A`
/// when `s` is odd and from `B` when even. The partner of an element of `A_i`
/// is always drawn from `B_i`, so the limit sends each `A_i` onto `B_i`.
pub fn back_and_forth_multi(pairs: &[(DenseOracle, DenseOracle)], stages: usize) -> Result<PartialIso> {
    if stages == 0 {
        return Err(Error::Invalid("stages must be at least 1".into()));
    }
    if pairs.is_empty() {
        return Err(Error::Invalid("at least one oracle pair is needed".into()));
    }
    let mut cursors: Vec<(Cursor, Cursor)> = pairs.iter().map(|(a, b)| (Cursor::new(a), Cursor::new(b))).collect();
    let mut table = Table { pairs: Vec::new() };
    let mut iso = PartialIso::default();
    for s in 1..=stages {
        let k = ((s - 1) / 2) % pairs.len();
        let (ca, cb) = &mut cursors[k];
        let (a, b) = if s % 2 == 1 {
            let a = ca.first(&table, 0, |_| true)?;
            let (lo, hi) = table.window(&a, 0);
            let b = cb.first(&table, 1, |y| strictly_between(y, &lo, &hi))?;
            (a, b)
        } else {
            let b = cb.first(&table, 1, |_| true)?;
            let (lo, hi) = table.window(&b, 1);
            let a = ca.first(&table, 0, |x| strictly_between(x, &lo, &hi))?;
            (a, b)
        };
        table.insert(a.clone(), b.clone());
        iso.matches.push(Match { stage: s, a, b });
    }
    Ok(iso)
}

/// Rational stand-ins for the coordinates of sorted pairs, exact for
/// rationals and otherwise chosen inside enclosures that keep strict order.
fn rational_column(xs: &[&Exact]) -> Vec<Rat> {
    let mut bits = 64;
    loop {
        let boxes: Vec<(Dyadic, Dyadic)> = xs.iter().map(|x| x.enclose(bits)).collect();
        let separated = boxes.windows(2).all(|w| w[0].1 < w[1].0);
        let inside = boxes
            .iter()
            .all(|(lo, hi)| lo.is_positive() && hi < &Dyadic::from_int(1));
        if separated && inside {
            return xs
                .iter()
                .zip(&boxes)
                .map(|(x, (lo, hi))| match x.as_rational() {
                    Some(r) => r.clone(),
                    None => lo.add(hi).shl(-1).to_rat(),
                })
                .collect();
        }
        bits *= 2;
    }
}

/// Piecewise-linear increasing interpolant through the matched pairs.
pub fn extend_to_pwl(iso: &PartialIso) -> Result<PWLHomeo> {
    let pairs = iso.sorted_pairs();
    let us = rational_column(&pairs.iter().map(|p| &p.0).collect::<Vec<_>>());
    let vs = rational_column(&pairs.iter().map(|p| &p.1).collect::<Vec<_>>());
    PWLHomeo::new(us.into_iter().zip(vs).collect())
}

/// `η(k) = 2|k| + 1` for `k ≤ 0` and `2k` for `k > 0`.
pub fn eta(k: &BigInt) -> BigInt {
    if k.is_positive() {
        k * 2
    } else {
        k.abs() * 2 + 1
    }
}

/// `δ(k) = (−1)^k ⌊k/2⌋`, the inverse of `η`.
pub fn delta(k: &BigInt) -> Result<BigInt> {
    if !k.is_positive() {
        return Err(Error::Domain(format!("delta needs a positive integer, got {k}")));
    }
    let h = k.div_floor(&BigInt::from(2));
    Ok(if k.is_even() { h } else { -h })
}

/// `(η(c₀), …, η(c_d), d + 1)` for a primitive `c₀ + c₁t + … + c_d t^d`.
pub fn encode_minpoly(coeffs: &[BigInt]) -> Result<Vec<BigInt>> {
    if coeffs.len() < 2 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    if coeffs.last().is_some_and(Zero::is_zero) {
        return Err(Error::Invalid("leading coefficient must be nonzero".into()));
    }
    let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_one() {
        return Err(Error::Invalid(format!("coefficients are not primitive (gcd {g})")));
    }
    let d = coeffs.len() - 1;
    let mut out: Vec<BigInt> = coeffs.iter().map(eta).collect();
    out.push(BigInt::from(d + 1));
    Ok(out)
}

/// Reads the terminal block `(…, a_{n−a_n}, …, a_{n−1}, a_n)` as
/// `δ(a_{n−1}) t^(a_n − 1) + … + δ(a_{n−a_n})`.
pub fn decode_tail(q: &Quotients) -> Result<ZPoly> {
    if !q.is_terminated() {
        return Err(Error::Invalid("decoding needs a terminated sequence".into()));
    }
    if !q.head().is_zero() {
        return Err(Error::Invalid("decoding needs head 0".into()));
    }
    let t = q.tail();
    let (last, rest) = t.split_last().ok_or_else(|| Error::Invalid("empty tail".into()))?;
    let n: usize = last
        .try_into()
        .ok()
        .filter(|&n: &usize| n >= 2)
        .ok_or_else(|| Error::Invalid(format!("last entry {last} must be at least 2")))?;
    if rest.len() < n {
        return Err(Error::Invalid(format!("need {n} entries before the last, found {}", rest.len())));
    }
    let block = &rest[rest.len() - n..];
    let coeffs = block.iter().map(delta).collect::<Result<Vec<_>>>()?;
    Ok(ZPoly::new(coeffs))
}

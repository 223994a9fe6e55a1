//! Dynamics of the power family `f_α(x) = x^(−α)` around the expansion
//! `[1; 1, 1, …]`.
//!
//! Expanding `x ∈ (1, 2)` with all partial quotients equal to 1 iterates
//! `T(x) = (x − 1)^(−1/α)`, and evaluating truncations of `[1; 1, 1, …]`
//! iterates its inverse `W(x) = 1 + x^(−α)`. Both share the fixed point in
//! `(1, 2)`; the 2-cycles of `T` are the outer fixed points of `W ∘ W`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cfseq::{altlex_compare, AltLex, Quotients};
use crate::engine::{expand, ExpansionResult, GeneratorFn, Outcome};
use crate::realkernel::{decimal, eval_expr, BitSchedule, CertifiedReal, Rat, RealExpr, Round};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Attracting,
    Repelling,
    /// The multiplier enclosure contains 1.
    Marginal,
}

impl Classification {
    fn from_multiplier(m: &CertifiedReal) -> Classification {
        match m.compare_rat(&Rat::one()) {
            Some(Ordering::Less) => Classification::Attracting,
            Some(Ordering::Greater) => Classification::Repelling,
            _ => Classification::Marginal,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Attracting => "attracting",
            Classification::Repelling => "repelling",
            Classification::Marginal => "marginal",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct FixedPointReport {
    pub location: CertifiedReal,
    /// `|F′|` over the location enclosure.
    pub multiplier: CertifiedReal,
    pub classification: Classification,
}

impl FixedPointReport {
    fn new(location: CertifiedReal, multiplier: CertifiedReal) -> FixedPointReport {
        let classification = Classification::from_multiplier(&multiplier);
        FixedPointReport {
            location,
            multiplier,
            classification,
        }
    }
}

/// Grid and iteration limits for the sweeps.
#[derive(Clone, Debug)]
pub struct Settings {
    /// Spacing of the sign-change grid on `(1, 2)`.
    pub grid_step: Rat,
    /// Iterations before an orbit counts as undecided.
    pub escape_cap: usize,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings {
            grid_step: Rat::new(BigInt::one(), BigInt::from(1000)),
            escape_cap: 10_000,
        }
    }
}

fn one() -> Rat {
    Rat::one()
}

fn two() -> Rat {
    Rat::from_integer(BigInt::from(2))
}

fn half_width(bits: u64) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    if !alpha.is_positive() {
        return Err(Error::Invalid(format!("alpha must be positive, got {alpha}")));
    }
    Ok(())
}

/// An enclosure of `r` with no closed form attached, so that powers stay on
/// the interval path.
fn point(r: &Rat, bits: u64) -> CertifiedReal {
    CertifiedReal::from_rat(r.clone(), bits).forget_exact()
}

/// `T(x) = (x − 1)^(−1/α)`.
pub fn t_map(alpha: &Rat, x: &CertifiedReal) -> Result<CertifiedReal> {
    x.add_rat(&-one()).pow_rat(&-alpha.recip())
}

/// `W(x) = 1 + x^(−α)`.
pub fn w_map(alpha: &Rat, x: &CertifiedReal) -> Result<CertifiedReal> {
    Ok(x.pow_rat(&-alpha)?.add_rat(&one()))
}

/// `|T′(x)| = (1/α)(x − 1)^(−1/α − 1)`.
fn t_slope(alpha: &Rat, x: &CertifiedReal) -> Result<CertifiedReal> {
    let e = -(alpha.recip() + one());
    let p = x.add_rat(&-one()).pow_rat(&e)?;
    Ok(p.mul(&CertifiedReal::from_rat(alpha.recip(), x.bits())))
}

/// `|W′(x)| = α x^(−α − 1)`.
fn w_slope(alpha: &Rat, x: &CertifiedReal) -> Result<CertifiedReal> {
    let p = x.pow_rat(&-(alpha + one()))?;
    Ok(p.mul(&CertifiedReal::from_rat(alpha.clone(), x.bits())))
}

/// Bisection of `[lo, hi]` down to width `width`. `side(m)` is `Some(true)`
/// when the sought point lies below `m`; `None` stops with the current bracket.
fn bisect<F>(mut lo: Rat, mut hi: Rat, width: &Rat, mut side: F) -> Result<(Rat, Rat)>
where
    F: FnMut(&Rat) -> Result<Option<bool>>,
{
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / two();
        match side(&mid)? {
            Some(true) => hi = mid,
            Some(false) => lo = mid,
            None => break,
        }
    }
    Ok((lo, hi))
}

fn enclosure(lo: &Rat, hi: &Rat, bits: u64) -> CertifiedReal {
    let a = CertifiedReal::from_rat(lo.clone(), bits);
    let b = CertifiedReal::from_rat(hi.clone(), bits);
    a.hull(&b).forget_exact()
}

/// The unique fixed point of `T` in `(1, 2)`, with its multiplier `|T′|`.
pub fn fixed_point_ones(alpha: &Rat, bits: u64) -> Result<FixedPointReport> {
    check_alpha(alpha)?;
    let work = bits + 32;
    // T − id is decreasing, positive near 1 and negative at 2
    let (lo, hi) = bisect(one(), two(), &half_width(bits), |m| {
        Ok(match t_map(alpha, &point(m, work))?.compare_rat(m) {
            Some(Ordering::Less) => Some(true),
            Some(Ordering::Greater) => Some(false),
            _ => None,
        })
    })?;
    let location = enclosure(&lo, &hi, work);
    let multiplier = t_slope(alpha, &location)?;
    Ok(FixedPointReport::new(location, multiplier))
}

/// `y ln y − (y + 1) ln(y − 1) + (y + 1) ln n`, the logarithm of
/// `n^(y+1) y^y / (y − 1)^(y+1)`.
fn log_balance(n: u32, y: &CertifiedReal) -> Result<CertifiedReal> {
    let bits = y.bits();
    let y1 = y.add_rat(&one());
    let mut v = y.mul(&y.ln()?).sub(&y1.mul(&y.add_rat(&-one()).ln()?));
    if n > 1 {
        let ln_n = CertifiedReal::from_int(n, bits).ln()?;
        v = v.add(&y1.mul(&ln_n));
    }
    Ok(v)
}

/// Derivative in `y`: `ln y − ln(y − 1) + 1 − (y + 1)/(y − 1) + ln n`.
fn log_balance_slope(n: u32, y: &CertifiedReal) -> Result<CertifiedReal> {
    let bits = y.bits();
    let ym = y.add_rat(&-one());
    let mut v = y.ln()?.sub(&ym.ln()?).add_rat(&one()).sub(&y.add_rat(&one()).div(&ym)?);
    if n > 1 {
        v = v.add(&CertifiedReal::from_int(n, bits).ln()?);
    }
    Ok(v)
}

fn sign_at(n: u32, y: &Rat, bits: u64) -> Result<Option<Ordering>> {
    Ok(log_balance(n, &point(y, bits))?.compare_rat(&Rat::zero()))
}

/// `α₀` as the root of `y^y = (y − 1)^(y + 1)` on `(1, ∞)`.
pub fn alpha0_by_equation(bits: u64) -> Result<CertifiedReal> {
    let work = bits + 32;
    let mut hi = two();
    // positive at 2, negative for large y
    while sign_at(1, &hi, work)? != Some(Ordering::Less) {
        hi += one();
        if hi > Rat::from_integer(BigInt::from(64)) {
            return Err(Error::PrecisionExhausted { bits: work });
        }
    }
    let lo = &hi - one();
    if sign_at(1, &lo, work)? != Some(Ordering::Greater) {
        return Err(Error::PrecisionExhausted { bits: work });
    }
    let (lo, hi) = bisect(lo, hi, &half_width(bits), |m| {
        Ok(match sign_at(1, m, work)? {
            Some(Ordering::Less) => Some(true),
            Some(Ordering::Greater) => Some(false),
            _ => None,
        })
    })?;
    Ok(enclosure(&lo, &hi, work))
}

fn multiplier_side(alpha: &Rat, bits: u64) -> Result<Option<Ordering>> {
    Ok(fixed_point_ones(alpha, bits)?.multiplier.compare_rat(&one()))
}

/// `α₀` as the `α` where the multiplier of the fixed point of `T` crosses 1.
pub fn alpha0_by_stability(bits: u64) -> Result<CertifiedReal> {
    let inner = bits + 16;
    let lo = Rat::from_integer(BigInt::from(2));
    let hi = Rat::from_integer(BigInt::from(8));
    if multiplier_side(&lo, inner)? != Some(Ordering::Greater) || multiplier_side(&hi, inner)? != Some(Ordering::Less)
    {
        return Err(Error::PrecisionExhausted { bits: inner });
    }
    let (lo, hi) = bisect(lo, hi, &half_width(bits), |a| {
        Ok(match multiplier_side(a, inner)? {
            Some(Ordering::Less) => Some(true),
            Some(Ordering::Greater) => Some(false),
            _ => None,
        })
    })?;
    Ok(enclosure(&lo, &hi, inner))
}

fn double_gap(alpha: &Rat, x: &Rat, bits: u64) -> Result<CertifiedReal> {
    let p = point(x, bits);
    Ok(w_map(alpha, &w_map(alpha, &p)?)?.sub(&p))
}

fn double_sign(alpha: &Rat, x: &Rat, bits: u64) -> Result<Ordering> {
    for b in BitSchedule::new(bits, bits * 16).steps() {
        if let Some(o) = double_gap(alpha, x, b)?.compare_rat(&Rat::zero()) {
            return Ok(o);
        }
    }
    Err(Error::PrecisionExhausted { bits: bits * 16 })
}

/// Fixed points of `W ∘ W` in `(1, 2)`, in increasing order.
pub fn double_fixed_points(alpha: &Rat, bits: u64) -> Result<Vec<FixedPointReport>> {
    double_fixed_points_with(alpha, bits, &Settings::default())
}

pub fn double_fixed_points_with(alpha: &Rat, bits: u64, settings: &Settings) -> Result<Vec<FixedPointReport>> {
    check_alpha(alpha)?;
    if !settings.grid_step.is_positive() || settings.grid_step >= one() {
        return Err(Error::Invalid("grid step must lie in (0, 1)".into()));
    }
    let work = bits + 32;
    // W ∘ W − id is positive at 1 and negative at 2
    let mut grid: Vec<(Rat, Ordering)> = alloc::vec![(one(), Ordering::Greater)];
    let mut x = one() + &settings.grid_step;
    while x < two() {
        grid.push((x.clone(), double_sign(alpha, &x, work)?));
        x += &settings.grid_step;
    }
    grid.push((two(), Ordering::Less));
    let mut out = Vec::new();
    for pair in grid.windows(2) {
        let ((a, sa), (b, sb)) = (&pair[0], &pair[1]);
        if sa == sb {
            continue;
        }
        let rising = *sa == Ordering::Less;
        let (lo, hi) = bisect(a.clone(), b.clone(), &half_width(bits), |m| {
            Ok(match double_gap(alpha, m, work)?.compare_rat(&Rat::zero()) {
                Some(Ordering::Equal) | None => None,
                Some(o) => Some((o == Ordering::Greater) == rising),
            })
        })?;
        let location = enclosure(&lo, &hi, work);
        let inner = w_map(alpha, &location)?;
        let multiplier = w_slope(alpha, &inner)?.mul(&w_slope(alpha, &location)?);
        out.push(FixedPointReport::new(location, multiplier));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fate {
    Confined,
    Escaped,
    Undecided,
}

/// A neighbourhood `[c − δ, c + δ]` of the attracting fixed point mapped
/// into itself by `T`.
fn trapping_interval(alpha: &Rat, c: &CertifiedReal, bits: u64) -> Result<Option<(Rat, Rat)>> {
    let lo_c = c.lo().to_rat();
    let hi_c = c.hi().to_rat();
    let mut delta = (&lo_c - one()) / two();
    for _ in 0..(bits as usize + 32) {
        let a = &lo_c - &delta;
        let b = &hi_c + &delta;
        let ta = t_map(alpha, &point(&a, bits))?;
        let tb = t_map(alpha, &point(&b, bits))?;
        // T is decreasing, so T([a, b]) = [T(b), T(a)]
        if tb.compare_rat(&a) == Some(Ordering::Greater) && ta.compare_rat(&b) == Some(Ordering::Less) {
            return Ok(Some((a, b)));
        }
        delta /= two();
    }
    Ok(None)
}

fn orbit_fate(alpha: &Rat, x: &CertifiedReal, trap: &(Rat, Rat), cap: usize) -> Result<Fate> {
    let (ta, tb) = trap;
    let mut y = x.clone();
    for _ in 0..=cap {
        if y.compare_rat(ta) == Some(Ordering::Greater) && y.compare_rat(tb) == Some(Ordering::Less) {
            return Ok(Fate::Confined);
        }
        if y.compare_rat(&one()) != Some(Ordering::Greater) {
            return Ok(if y.hi().to_rat() <= one() { Fate::Escaped } else { Fate::Undecided });
        }
        match y.compare_rat(&two()) {
            Some(Ordering::Less) => {}
            Some(_) => return Ok(Fate::Escaped),
            None => return Ok(if y.lo().to_rat() >= two() { Fate::Escaped } else { Fate::Undecided }),
        }
        y = t_map(alpha, &y)?;
    }
    Ok(Fate::Undecided)
}

/// Whether the `T`-orbit of the value `at(bits)` stays in `(1, 2)` forever.
fn confined<F>(alpha: &Rat, at: F, trap: &(Rat, Rat), bits: u64, cap: usize) -> Result<Option<bool>>
where
    F: Fn(u64) -> CertifiedReal,
{
    for b in BitSchedule::new(bits, bits * 32).steps() {
        match orbit_fate(alpha, &at(b), trap, cap)? {
            Fate::Confined => return Ok(Some(true)),
            Fate::Escaped => return Ok(Some(false)),
            Fate::Undecided => {}
        }
    }
    Ok(None)
}

struct Basin {
    center: CertifiedReal,
    trap: (Rat, Rat),
}

fn basin_setup(alpha: &Rat, bits: u64) -> Result<Basin> {
    let fp = fixed_point_ones(alpha, bits)?;
    if fp.classification != Classification::Attracting {
        return Err(Error::InvalidRegime(format!(
            "the fixed point is {} at alpha = {alpha}; the basin needs alpha > alpha0",
            fp.classification
        )));
    }
    let trap = trapping_interval(alpha, &fp.location, bits)?
        .ok_or(Error::PrecisionExhausted { bits })?;
    Ok(Basin {
        center: fp.location,
        trap,
    })
}

/// The set of `x ∈ (1, 2)` whose `T`-orbit stays in `(1, 2)`, so that
/// `E_{f_α}(x) = [1; 1, 1, …]`, as enclosures of its two endpoints.
pub fn ones_basin(alpha: &Rat, bits: u64) -> Result<(CertifiedReal, CertifiedReal)> {
    ones_basin_with(alpha, bits, &Settings::default())
}

pub fn ones_basin_with(alpha: &Rat, bits: u64, settings: &Settings) -> Result<(CertifiedReal, CertifiedReal)> {
    check_alpha(alpha)?;
    let work = bits + 64;
    let basin = basin_setup(alpha, work)?;
    let cap = settings.escape_cap;
    let width = half_width(bits);
    let test = |m: &Rat| confined(alpha, |b| point(m, b), &basin.trap, work, cap);
    let (a, b) = bisect(one(), basin.center.lo().to_rat(), &width, test)?;
    let lower = enclosure(&a, &b, work);
    let (a, b) = bisect(basin.center.hi().to_rat(), two(), &width, |m| Ok(test(m)?.map(|inside| !inside)))?;
    let upper = enclosure(&a, &b, work);
    Ok((lower, upper))
}

/// Whether `x` lies in the basin of `[1; 1, 1, …]` for `f_α`; `false` when
/// `α ≤ α₀`.
pub fn in_ones_basin(alpha: &Rat, x: &RealExpr, bits: u64) -> Result<Option<bool>> {
    check_alpha(alpha)?;
    let basin = match basin_setup(alpha, bits) {
        Ok(b) => b,
        Err(Error::InvalidRegime(_)) => return Ok(Some(false)),
        Err(e) => return Err(e),
    };
    confined(alpha, |b| eval_expr(x, b), &basin.trap, bits, Settings::default().escape_cap)
}

/// The infimum `α(x)` of the `α` for which `x` lies in the basin of
/// `[1; 1, 1, …]`.
pub fn ones_threshold(x: &RealExpr, bits: u64) -> Result<CertifiedReal> {
    let v = eval_expr(x, 64);
    if v.compare_rat(&one()) != Some(Ordering::Greater) || v.compare_rat(&two()) != Some(Ordering::Less) {
        return Err(Error::Domain("threshold needs x in (1, 2)".into()));
    }
    let work = bits + 64;
    let mut lo = Rat::from_integer(BigInt::from(4));
    let mut hi = Rat::from_integer(BigInt::from(8));
    let inside = |a: &Rat| in_ones_basin(a, x, work);
    if inside(&lo)? != Some(false) {
        return Err(Error::PrecisionExhausted { bits: work });
    }
    while inside(&hi)? != Some(true) {
        lo = hi.clone();
        hi *= two();
        if hi > Rat::from_integer(BigInt::from(1 << 20)) {
            return Err(Error::PrecisionExhausted { bits: work });
        }
    }
    let (lo, hi) = bisect(lo, hi, &half_width(bits), inside)?;
    Ok(enclosure(&lo, &hi, work))
}

/// Outcome of the sign scan of `n^(y+1) y^y − (y − 1)^(y+1)` on `(1, y_max]`.
#[derive(Clone, Debug)]
pub struct SignScan {
    pub n: u32,
    pub y_max: Rat,
    /// Brackets `[a, b]` with opposite certified signs at the ends.
    pub sign_changes: Vec<(Rat, Rat)>,
    /// Cells whose sign could not be settled.
    pub unresolved: Vec<(Rat, Rat)>,
    pub cells: usize,
}

impl SignScan {
    pub fn is_sign_definite(&self) -> bool {
        self.sign_changes.is_empty() && self.unresolved.is_empty()
    }
}

/// Interval scan of the sign of `n^(y+1) y^y − (y − 1)^(y+1)` over
/// `(1, y_max]`, through its logarithm.
pub fn no_bifurcation_check(n: u32, y_max: &Rat) -> Result<SignScan> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if *y_max <= one() {
        return Err(Error::Invalid("y_max must exceed 1".into()));
    }
    const BITS: u64 = 96;
    const MIN_WIDTH_BITS: u64 = 40;
    // on (1, 1 + 1/4] the terms y ln y and (y + 1) ln n are nonnegative and
    // −(y + 1) ln(y − 1) ≥ 2 ln 4, so the logarithm is positive there
    let start = one() + Rat::new(BigInt::one(), BigInt::from(4));
    let step = Rat::new(BigInt::one(), BigInt::from(4));
    let mut scan = SignScan {
        n,
        y_max: y_max.clone(),
        sign_changes: Vec::new(),
        unresolved: Vec::new(),
        cells: 1,
    };
    let mut stack: Vec<(Rat, Rat)> = Vec::new();
    let mut a = start;
    while a < *y_max {
        let b = (&a + &step).min(y_max.clone());
        stack.push((a.clone(), b.clone()));
        a = b;
    }
    stack.reverse();
    let min_width = half_width(MIN_WIDTH_BITS);
    while let Some((a, b)) = stack.pop() {
        scan.cells += 1;
        let cell = enclosure(&a, &b, BITS);
        if log_balance(n, &cell)?.compare_rat(&Rat::zero()).is_some_and(|o| o != Ordering::Equal) {
            continue;
        }
        if &b - &a > min_width {
            let m = (&a + &b) / two();
            stack.push((m.clone(), b));
            stack.push((a, m));
            continue;
        }
        // endpoint signs settle the cell once the function is monotone on it
        let monotone = log_balance_slope(n, &cell)?
            .compare_rat(&Rat::zero())
            .is_some_and(|o| o != Ordering::Equal);
        match (sign_at(n, &a, BITS)?, sign_at(n, &b, BITS)?) {
            (Some(x), Some(y)) if monotone && x != Ordering::Equal && y != Ordering::Equal => {
                if x != y {
                    scan.sign_changes.push((a, b))
                }
            }
            _ => scan.unresolved.push((a, b)),
        }
    }
    merge_adjacent(&mut scan.sign_changes);
    Ok(scan)
}

fn merge_adjacent(v: &mut Vec<(Rat, Rat)>) {
    let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(v.len());
    for (a, b) in v.drain(..) {
        match out.last_mut() {
            Some(last) if last.1 == a => last.1 = b,
            _ => out.push((a, b)),
        }
    }
    *v = out;
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub alpha: Rat,
    pub expansion: ExpansionResult,
}

#[derive(Clone, Debug)]
pub struct MonotonicityScan {
    pub rows: Vec<ScanRow>,
    /// Alt-lex comparison of each row with the next.
    pub comparisons: Vec<AltLex>,
}

/// Expands `x` under each `f_α` of an ascending grid and compares
/// consecutive expansions.
pub fn alpha_monotonicity_scan(
    x: &RealExpr,
    grid: &[Rat],
    terms: usize,
    schedule: BitSchedule,
) -> Result<MonotonicityScan> {
    if grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Invalid("alpha grid must be ascending".into()));
    }
    let mut rows = Vec::with_capacity(grid.len());
    for a in grid {
        let f = GeneratorFn::power(a.clone())?;
        let expansion = expand(&f, x, terms, schedule)?;
        rows.push(ScanRow {
            alpha: a.clone(),
            expansion,
        });
    }
    let comparisons = rows
        .windows(2)
        .map(|w| {
            if w[0].alpha == w[1].alpha {
                AltLex::Equal
            } else {
                altlex_compare(&w[0].expansion.quotients, &w[1].expansion.quotients)
            }
        })
        .collect();
    Ok(MonotonicityScan { rows, comparisons })
}

fn expansion_at(x: &RealExpr, alpha: &Rat, terms: usize, schedule: BitSchedule) -> Result<Quotients> {
    let e = expand(&GeneratorFn::power(alpha.clone())?, x, terms, schedule)?;
    if let Outcome::UndecidedInteger { bits, .. } = e.outcome {
        return Err(Error::PrecisionExhausted { bits });
    }
    Ok(e.quotients)
}

/// Direction of `α ↦ E_{f_α}(x)` at `α`, from the expansions at `α ± δ`.
pub fn local_direction(x: &RealExpr, alpha: &Rat, delta: &Rat, terms: usize, schedule: BitSchedule) -> Result<AltLex> {
    let a = expansion_at(x, &(alpha - delta), terms, schedule)?;
    let b = expansion_at(x, &(alpha + delta), terms, schedule)?;
    Ok(altlex_compare(&a, &b))
}

/// Bisects `[lo, hi]` for the `α` where `α ↦ E_{f_α}(x)` turns from
/// increasing to decreasing, down to width `tol`.
pub fn monotonicity_switch(
    x: &RealExpr,
    lo: &Rat,
    hi: &Rat,
    delta: &Rat,
    terms: usize,
    tol: &Rat,
    schedule: BitSchedule,
) -> Result<(Rat, Rat)> {
    let dir = |a: &Rat| local_direction(x, a, delta, terms, schedule);
    if dir(lo)? != AltLex::Less || dir(hi)? != AltLex::Greater {
        return Err(Error::Invalid(format!("no increasing-to-decreasing switch bracketed by [{lo}, {hi}]")));
    }
    bisect(lo.clone(), hi.clone(), tol, |a| {
        Ok(match dir(a)? {
            AltLex::Less => Some(false),
            AltLex::Greater => Some(true),
            _ => None,
        })
    })
}

/// One line of a sweep over `α`.
#[derive(Clone, Debug)]
pub struct BifurcationRow {
    pub alpha: Rat,
    pub single: FixedPointReport,
    pub double: Vec<FixedPointReport>,
    pub basin: Option<(CertifiedReal, CertifiedReal)>,
}

pub const CSV_HEADER: &str = "alpha,fp1,mult1,class1,fp2a,fp2b,fp2c,basin_lo,basin_hi";

pub fn bifurcation_row(alpha: &Rat, bits: u64) -> Result<BifurcationRow> {
    let single = fixed_point_ones(alpha, bits)?;
    let double = double_fixed_points(alpha, bits)?;
    let basin = match ones_basin(alpha, bits) {
        Ok(b) => Some(b),
        Err(Error::InvalidRegime(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(BifurcationRow {
        alpha: alpha.clone(),
        single,
        double,
        basin,
    })
}

impl BifurcationRow {
    /// Values are enclosure midpoints to `places` decimals. A lone
    /// double-iterate fixed point goes in the central column `fp2b`.
    pub fn to_csv(&self, places: usize) -> String {
        let mid = |c: &CertifiedReal| decimal(&c.mid().to_rat(), places, Round::Down);
        let mut cols: Vec<String> = alloc::vec![
            format!("{}", self.alpha),
            mid(&self.single.location),
            mid(&self.single.multiplier),
            self.single.classification.as_str().into(),
        ];
        let d: Vec<String> = self.double.iter().map(|r| mid(&r.location)).collect();
        match d.len() {
            1 => cols.extend([String::new(), d[0].clone(), String::new()]),
            3 => cols.extend(d),
            _ => {
                let mut d = d;
                d.resize(3, String::new());
                cols.extend(d);
            }
        }
        match &self.basin {
            Some((a, b)) => cols.extend([mid(a), mid(b)]),
            None => cols.extend([String::new(), String::new()]),
        }
        cols.join(",")
    }
}

//! End-to-end reproduction scenarios, one per acceptance criterion.
//!
//! Each claim recomputes a published value (or runs a property sweep) and
//! reports the computed and expected values side by side.

use std::fmt::Write as _;

use fexpand_core::algver::{eliminate_cycle, verify_candidate};
use fexpand_core::backforth::{
    back_and_forth, decode_tail, delta, encode_minpoly, eta, extend_to_pwl, DenseOracle,
};
use fexpand_core::cfseq::{altlex_compare, AltLex, PeriodicSpec, Quotients};
use fexpand_core::chorus::{chorus_extend, recover_g, PWLHomeo};
use fexpand_core::engine::{
    eval_finite, eval_infinite, expand, expand_rational_reciprocal, EvalOutcome, GeneratorFn,
    Outcome,
};
use fexpand_core::powerfam::{
    alpha0_by_equation, alpha0_by_stability, double_fixed_points, in_ones_basin, local_direction,
    monotonicity_switch, no_bifurcation_check, ones_basin, ones_threshold, Classification,
};
use fexpand_core::realkernel::{eval_expr, BitSchedule, CertifiedReal, QuadIrr, Rat, RealExpr};
use fexpand_core::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formats::deg93;

pub const DEFAULT_SEED: u64 = 1;

pub struct Claim {
    pub id: &'static str,
    pub criterion: u32,
    pub summary: &'static str,
}

pub const CLAIMS: [Claim; 13] = [
    Claim { id: "half-power-two-thirds", criterion: 1, summary: "E_{f_1/2}(2/3) = [0; 2, 16]" },
    Claim { id: "half-power-27-47", criterion: 2, summary: "E_{f_1/2}(27/47) = [0; 3, 1098, 2892, 410, 256]" },
    Claim { id: "half-power-three-quarters", criterion: 3, summary: "first 19 terms of E_{f_1/2}(3/4)" },
    Claim { id: "cube-root-three", criterion: 4, summary: "first 27 terms of E_{f_3/2}(cube root of 3)" },
    Claim { id: "periodic-neighbour", criterion: 5, summary: "V_{f_3/2}[1; (1, 1, 2, 1)] is not the cube root of 3" },
    Claim { id: "alpha0", criterion: 6, summary: "the threshold alpha0 two ways" },
    Claim { id: "basin", criterion: 7, summary: "basin of the all-ones orbit at alpha = 5 and the threshold of 7^(1/5)" },
    Claim { id: "double-fixed-points", criterion: 8, summary: "fixed points of the double iterate" },
    Claim { id: "no-bifurcation", criterion: 9, summary: "no sign change for n = 2, 3, 4; one for n = 1" },
    Claim { id: "monotonicity", criterion: 10, summary: "monotonicity switch in alpha for x = 1/2" },
    Claim { id: "deg93", criterion: 11, summary: "degree-93 polynomial of the 4-cycle" },
    Claim { id: "properties", criterion: 12, summary: "randomized property suite" },
    Claim { id: "patched-power5", criterion: 13, summary: "patched generator expands like f_5" },
];

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: &'static str,
    pub criterion: u32,
    pub pass: bool,
    /// `label: computed ... expected ...` lines.
    pub lines: Vec<String>,
}

impl Report {
    fn new(c: &'static Claim) -> Report {
        Report {
            id: c.id,
            criterion: c.criterion,
            pass: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, ok: bool, computed: impl std::fmt::Display, expected: impl std::fmt::Display) {
        self.pass &= ok;
        let mark = if ok { "ok" } else { "MISMATCH" };
        self.lines.push(format!("{label}: computed {computed}; expected {expected} [{mark}]"));
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn render(&self) -> String {
        let mut s = format!("{} {} (criterion {})\n", self.verdict(), self.id, self.criterion);
        for l in &self.lines {
            let _ = writeln!(s, "  {l}");
        }
        s
    }
}

/// Runs the claim called `id`; `seed` only affects the property suite.
pub fn run(id: &str, seed: u64) -> Result<Report> {
    let c = claim(id).ok_or_else(|| fexpand_core::Error::Invalid(format!("unknown claim id {id:?}")))?;
    let mut r = Report::new(c);
    match c.criterion {
        1 => half_power(&mut r, rat(2, 3), "[0; 2, 16]", usize::MAX),
        2 => half_power(&mut r, rat(27, 47), "[0; 3, 1098, 2892, 410, 256]", usize::MAX),
        3 => half_power(
            &mut r,
            rat(3, 4),
            "[0; 1, 1, 2, 8, 5, 1, 3, 3, 14, 321, 2, 300, 1, 13, 2, 6, 1, 1, 2, ...]",
            19,
        ),
        4 => cube_root_three(&mut r)?,
        5 => periodic_neighbour(&mut r)?,
        6 => alpha0(&mut r)?,
        7 => basin(&mut r)?,
        8 => double_points(&mut r)?,
        9 => no_bifurcation(&mut r)?,
        10 => monotonicity(&mut r)?,
        11 => deg93_claim(&mut r),
        12 => properties(&mut r, seed, &PropertyCounts::default())?,
        _ => patched(&mut r)?,
    }
    Ok(r)
}

fn rat(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}

fn near(c: &CertifiedReal, v: f64, tol: f64) -> bool {
    (c.mid_f64() - v).abs() < tol
}

fn half_power(r: &mut Report, x: Rat, want: &str, terms: usize) {
    let f = GeneratorFn::power(rat(1, 2)).expect("1/2 is a valid exponent");
    let n = terms.min(50);
    let e = expand(&f, &RealExpr::Rational(x.clone()), n, BitSchedule::default());
    match e {
        Ok(e) => {
            let got = e.quotients.to_string();
            r.check(&format!("E_f({x})"), got == want, &got, want);
            let want_outcome = if terms == usize::MAX { Outcome::Terminated } else { Outcome::ReachedMaxTerms };
            r.check("outcome", e.outcome == want_outcome, format!("{:?}", e.outcome), format!("{want_outcome:?}"));
            r.check("exact path", e.steps.iter().all(|s| s.exact), e.steps.iter().all(|s| s.exact), true);
        }
        Err(err) => r.check(&format!("E_f({x})"), false, err, want),
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cube_root_three(r: &mut Report) -> Result<()> {
    let f = GeneratorFn::power(rat(3, 2))?;
    let x = RealExpr::nth_root(rat(3, 1), 3)?;
    let e = expand(&f, &x, 27, BitSchedule::default())?;
    let want = Quotients::truncated(
        BigInt::one(),
        ints(&[1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 3, 1, 1, 1, 1, 3, 1, 2, 1, 1, 7, 23, 1]),
    )?;
    r.check("E_f(3^(1/3))", e.quotients == want, &e.quotients, &want);
    let certified = e.steps.iter().all(|s| !s.exact && s.precision_bits > 0);
    r.check("every floor certified on intervals", certified, certified, true);
    r.check("largest precision (bits)", true, e.max_bits(), "any");
    Ok(())
}

fn periodic_neighbour(r: &mut Report) -> Result<()> {
    let f = GeneratorFn::power(rat(3, 2))?;
    let s = PeriodicSpec::from_i64(1, &[], &[1, 1, 2, 1])?;
    let v = match eval_infinite(&f, &s, 400, &rat(1, 1_000_000_000_000))? {
        EvalOutcome::Converged(v) => v,
        other => {
            r.check("V_f converges", false, format!("{other:?}"), "converged");
            return Ok(());
        }
    };
    r.check(&format!("V_f({s})"), near(&v, 1.44225029, 5e-8), v.to_decimal(10), "1.44225029 +- 5e-8");
    let c = eval_expr(&RealExpr::nth_root(rat(3, 1), 3)?, 128);
    r.check("3^(1/3)", near(&c, 1.44224957, 5e-8), c.to_decimal(10), "1.44224957 +- 5e-8");
    r.check("enclosures disjoint", v.is_disjoint(&c), v.is_disjoint(&c), true);
    Ok(())
}

fn alpha0(r: &mut Report) -> Result<()> {
    let a = alpha0_by_equation(40)?;
    let b = alpha0_by_stability(30)?;
    r.check("root of y^y = (y-1)^(y+1)", near(&a, 4.1410415, 1e-6), a.to_decimal(10), "4.1410415 +- 1e-6");
    r.check("stability bisection", near(&b, 4.1410415, 1e-6), b.to_decimal(10), "4.1410415 +- 1e-6");
    let both = a.intersect(&b);
    r.check(
        "enclosures intersect",
        both.is_some(),
        both.map_or("empty".into(), |c| c.to_decimal(10)),
        "nonempty",
    );
    Ok(())
}

fn basin(r: &mut Report) -> Result<()> {
    let (lo, hi) = ones_basin(&rat(5, 1), 40)?;
    r.check("basin left end", near(&lo, 1.06377, 1e-5), lo.to_decimal(8), "1.06377 +- 1e-5");
    r.check("basin right end", near(&hi, 1.73411, 1e-5), hi.to_decimal(8), "1.73411 +- 1e-5");
    let x = RealExpr::nth_root(rat(7, 1), 5)?;
    let inside = in_ones_basin(&rat(5, 1), &x, 128)?;
    r.check("7^(1/5) in basin", inside == Some(true), format!("{inside:?}"), "Some(true)");
    let t = ones_threshold(&x, 30)?;
    r.check("threshold alpha(7^(1/5))", near(&t, 4.26159, 1e-5), t.to_decimal(8), "4.26159 +- 1e-5");
    Ok(())
}

fn double_points(r: &mut Report) -> Result<()> {
    for a in [rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)] {
        let d = double_fixed_points(&a, 40)?;
        r.check(&format!("alpha = {a}: fixed points"), d.len() == 1, d.len(), 1);
    }
    for a in [rat(9, 2), rat(5, 1), rat(8, 1)] {
        let d = double_fixed_points(&a, 40)?;
        let classes: Vec<&str> = d.iter().map(|p| p.classification.as_str()).collect();
        let ok = d.len() == 3
            && d[0].classification == Classification::Attracting
            && d[1].classification == Classification::Repelling
            && d[2].classification == Classification::Attracting;
        r.check(&format!("alpha = {a}: fixed points"), ok, classes.join(" "), "attracting repelling attracting");
    }
    Ok(())
}

fn no_bifurcation(r: &mut Report) -> Result<()> {
    let cap = rat(100, 1);
    for n in [2, 3, 4] {
        let s = no_bifurcation_check(n, &cap)?;
        let got = format!("{} sign changes, {} unresolved cells", s.sign_changes.len(), s.unresolved.len());
        r.check(&format!("n = {n}"), s.is_sign_definite(), got, "0 sign changes, 0 unresolved cells");
    }
    let s = no_bifurcation_check(1, &cap)?;
    let a0 = rat(41410415, 10_000_000);
    let hits = s.sign_changes.len() == 1
        && s.unresolved.is_empty()
        && (&s.sign_changes[0].0 - &a0).abs() < rat(1, 1_000_000)
        && (&s.sign_changes[0].1 - &a0).abs() < rat(1, 1_000_000);
    let got = s
        .sign_changes
        .iter()
        .map(|(a, b)| format!("({:.9}, {:.9})", a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN)))
        .collect::<Vec<_>>()
        .join(" ");
    r.check("n = 1", hits, got, "one sign change at 4.1410415");
    Ok(())
}

fn monotonicity(r: &mut Report) -> Result<()> {
    let half = RealExpr::ratio(1, 2);
    let s = BitSchedule::default();
    let delta = rat(1, 100_000);
    let before = local_direction(&half, &rat(2, 1), &delta, 60, s)?;
    let after = local_direction(&half, &rat(5, 2), &delta, 60, s)?;
    r.check("direction at alpha = 2", before == AltLex::Less, format!("{before:?}"), "Less (increasing)");
    r.check("direction at alpha = 5/2", after == AltLex::Greater, format!("{after:?}"), "Greater (decreasing)");
    let (lo, hi) = monotonicity_switch(&half, &rat(2, 1), &rat(5, 2), &delta, 60, &rat(1, 10_000), s)?;
    let (lo, hi) = (lo.to_f64().unwrap_or(f64::NAN), hi.to_f64().unwrap_or(f64::NAN));
    let ok = (lo - 2.24228).abs() < 1e-3 && (hi - 2.24228).abs() < 1e-3;
    r.check("switch", ok, format!("({lo:.6}, {hi:.6})"), "2.24228 +- 1e-3");
    Ok(())
}

fn deg93_claim(r: &mut Report) {
    let p = deg93();
    let elim = eliminate_cycle();
    let rep = verify_candidate(&p, &elim, 128);
    r.check("candidate degree", rep.candidate_degree == 93, rep.candidate_degree, 93);
    r.check("eliminant degree", true, rep.eliminant_degree, "any");
    r.check("divides the eliminant", rep.divides, rep.divides, true);
    r.check("real roots (Sturm)", rep.real_roots == 7, rep.real_roots, 7);
    let idx = rep.root_index();
    r.check("index of the cycle point", idx == Some(4), format!("{idx:?}"), "Some(4)");
    r.check("interval value at the root contains 0", rep.candidate_vanishes, rep.candidate_vanishes, true);
    r.check("cycle point", near(&rep.root, 1.44225029, 5e-8), rep.root.to_decimal(12), "1.44225029");
}

fn patched(r: &mut Report) -> Result<()> {
    let p = GeneratorFn::power5_patched();
    let f5 = GeneratorFn::power(rat(5, 1))?;
    let mut xs: Vec<RealExpr> = (1..25).map(|k| RealExpr::ratio(25 + k, 25)).collect();
    xs.push(RealExpr::nth_root(rat(7, 1), 5)?);
    xs.extend((1..=25).map(|k| RealExpr::ratio(7 * k + 3, 7)));
    let mut agree = 0;
    let mut inside = 0;
    for x in &xs {
        let v = eval_expr(x, 64).mid_f64();
        if 1.06377 < v && v < 1.73411 {
            inside += 1;
        }
        let a = expand(&p, x, 12, BitSchedule::default())?;
        let b = expand(&f5, x, 12, BitSchedule::default())?;
        if a.quotients == b.quotients {
            agree += 1;
        } else {
            r.check(&format!("x = {x}"), false, &a.quotients, &b.quotients);
        }
    }
    r.check("sample points", xs.len() == 50, xs.len(), 50);
    r.check("points inside the patched interval", inside > 0 && inside < 50, inside, "some but not all");
    r.check("agreeing expansions", agree == xs.len(), agree, xs.len());
    Ok(())
}

/// Sample sizes for the property suite.
#[derive(Clone, Debug)]
pub struct PropertyCounts {
    pub roundtrips: usize,
    pub conjugates: usize,
    pub rationals: usize,
    pub quadratics: usize,
    pub stages: usize,
    pub codes: usize,
    pub triples: usize,
}

impl Default for PropertyCounts {
    fn default() -> Self {
        PropertyCounts {
            roundtrips: 1000,
            conjugates: 100,
            rationals: 200,
            quadratics: 200,
            stages: 40,
            codes: 200,
            triples: 1000,
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    Rat::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

fn random_pwl(rng: &mut ChaCha8Rng) -> PWLHomeo {
    let k = rng.gen_range(0..5);
    let mut us: Vec<i64> = (0..k).map(|_| rng.gen_range(1..1000)).collect();
    let mut vs: Vec<i64> = (0..k).map(|_| rng.gen_range(1..1000)).collect();
    us.sort_unstable();
    us.dedup();
    vs.sort_unstable();
    vs.dedup();
    let nodes = us.iter().zip(&vs).map(|(&u, &v)| (rat(u, 1000), rat(v, 1000))).collect();
    PWLHomeo::new(nodes).expect("sorted distinct nodes")
}

fn random_quadratic(rng: &mut ChaCha8Rng) -> QuadIrr {
    loop {
        let d: i64 = rng.gen_range(2..60);
        let s = (d as f64).sqrt().round() as i64;
        if s * s == d {
            continue;
        }
        let q = rng.gen_range(1..6) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if let Ok(x) = QuadIrr::from_i64(rng.gen_range(-20..20), q, d, rng.gen_range(1..30)) {
            return x.fract();
        }
    }
}

fn random_quotients(rng: &mut ChaCha8Rng) -> Quotients {
    let n = rng.gen_range(0..5);
    let mut tail: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(1..5))).collect();
    if let Some(last) = tail.last_mut() {
        if last.is_one() {
            *last += 1;
        }
    }
    Quotients::terminated(BigInt::from(rng.gen_range(-2..3)), tail).expect("canonical terminated sequence")
}

fn oracles() -> Vec<DenseOracle> {
    vec![
        DenseOracle::Rationals,
        DenseOracle::Dyadics,
        DenseOracle::QuadIrr,
        DenseOracle::Q1d(1),
        DenseOracle::Q1d(2),
        DenseOracle::Q1d(3),
    ]
}

/// Criterion 12, parts (a) to (g).
pub fn properties(r: &mut Report, seed: u64, n: &PropertyCounts) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let recip = GeneratorFn::reciprocal();
    let s = BitSchedule::default();

    // (a) E_r and V_r are inverse on rationals
    let mut ok = 0;
    for _ in 0..n.roundtrips {
        let x = random_rat(&mut rng, 1_000_000, 1_000_000);
        let e = expand(&recip, &RealExpr::Rational(x.clone()), 1000, s)?;
        let v = eval_finite(&recip, &e.quotients, 64)?;
        ok += usize::from(e.is_terminated() && v.exact_rational() == Some(&x));
    }
    r.check("(a) E_r/V_r roundtrips", ok == n.roundtrips, ok, n.roundtrips);

    // (b) E_{f_g} = E_r o g-bar and (c) V_r o E_{f_g} = g on (0, 1)
    let (mut ok_b, mut ok_c) = (0, 0);
    for _ in 0..n.conjugates {
        let g = random_pwl(&mut rng);
        let x = random_rat(&mut rng, 5000, 700).abs();
        let f = GeneratorFn::chorus(g.clone());
        let e = expand(&f, &RealExpr::Rational(x.clone()), 500, s)?;
        let want = expand_rational_reciprocal(&chorus_extend(&g).eval_rat(&x));
        ok_b += usize::from(e.is_terminated() && e.quotients == want.quotients);
        let samples: Vec<Rat> = (0..3).map(|_| rat(rng.gen_range(1..1000), 1000)).collect();
        let got = recover_g(&f, &samples, 500, s)?;
        let all = got.iter().all(|(u, v)| g.eval(u).is_ok_and(|w| &w == v));
        ok_c += usize::from(all && got.len() == samples.len());
    }
    r.check("(b) E_{f_g} = E_r o g-bar", ok_b == n.conjugates, ok_b, n.conjugates);
    r.check("(c) g recovered from E_{f_g}", ok_c == n.conjugates, ok_c, n.conjugates);

    // (d) E_{f_?} terminates on rationals and quadratic irrationals
    let question = GeneratorFn::question_mark();
    let mut ok = 0;
    for _ in 0..n.rationals {
        let x = random_rat(&mut rng, 10_000, 500);
        ok += usize::from(expand(&question, &RealExpr::Rational(x), 100_000, s)?.is_terminated());
    }
    r.check("(d) E_{f_?} terminates on rationals", ok == n.rationals, ok, n.rationals);
    let mut ok = 0;
    for _ in 0..n.quadratics {
        let x = random_quadratic(&mut rng).add_rat(&rat(rng.gen_range(0..4), 1));
        ok += usize::from(expand(&question, &RealExpr::Quadratic(x), 100_000, s)?.is_terminated());
    }
    r.check("(d) E_{f_?} terminates on quadratics", ok == n.quadratics, ok, n.quadratics);

    // (e) back and forth for every ordered pair of oracles
    let os = oracles();
    let (mut ok, mut total) = (0, 0);
    for a in &os {
        for b in &os {
            total += 1;
            let iso = back_and_forth(a, b, n.stages)?;
            let covered = (0..n.stages / 4).all(|i| {
                iso.image(&a.nth(i)).is_some() && iso.matches.iter().any(|m| m.b == b.nth(i))
            });
            let members = iso.matches.iter().all(|m| a.contains(&m.a) && b.contains(&m.b));
            let pwl = extend_to_pwl(&iso).is_ok();
            ok += usize::from(iso.is_order_preserving() && covered && members && pwl && iso.stage() == n.stages);
        }
    }
    r.check(&format!("(e) back and forth at {} stages", n.stages), ok == total, ok, total);

    // (f) eta/delta inverse, encode/decode roundtrip
    let etas = (-10_000i64..=10_000).all(|k| {
        let k = BigInt::from(k);
        delta(&eta(&k)).is_ok_and(|d| d == k)
    });
    r.check("(f) delta o eta = id on [-10^4, 10^4]", etas, etas, true);
    let mut ok = 0;
    for _ in 0..n.codes {
        let deg = rng.gen_range(1..6);
        let mut c: Vec<BigInt> = (0..=deg).map(|_| BigInt::from(rng.gen_range(-50..50))).collect();
        if c[deg].is_zero() {
            c[deg] = BigInt::one();
        }
        let g = c.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
        let c: Vec<BigInt> = c.into_iter().map(|x| x / &g).collect();
        let mut tail: Vec<BigInt> = (0..rng.gen_range(0..4)).map(|_| BigInt::from(rng.gen_range(1..9))).collect();
        tail.extend(encode_minpoly(&c)?);
        let q = Quotients::terminated(BigInt::zero(), tail)?;
        ok += usize::from(decode_tail(&q)?.coeffs() == c.as_slice());
    }
    r.check("(f) decode o encode = id", ok == n.codes, ok, n.codes);

    // (g) alt-lex is a total order that agrees with V_r
    let mut ok = 0;
    for _ in 0..n.triples {
        let t = [random_quotients(&mut rng), random_quotients(&mut rng), random_quotients(&mut rng)];
        let v: Vec<Rat> = t
            .iter()
            .map(|q| eval_finite(&recip, q, 64).map(|c| c.exact_rational().cloned().expect("exact")))
            .collect::<Result<_>>()?;
        let c = |i: usize, j: usize| altlex_compare(&t[i], &t[j]);
        let antisym = (0..3).all(|i| (0..3).all(|j| c(i, j) == c(j, i).reverse()));
        let total = (0..3).all(|i| (0..3).all(|j| c(i, j) != AltLex::Unknown && ((c(i, j) == AltLex::Equal) == (i == j || t[i] == t[j]))));
        let trans = (0..3).all(|i| {
            (0..3).all(|j| (0..3).all(|k| !(c(i, j) == AltLex::Less && c(j, k) == AltLex::Less) || c(i, k) == AltLex::Less))
        });
        let order = (0..3).all(|i| {
            (0..3).all(|j| match c(i, j) {
                AltLex::Less => v[i] < v[j],
                AltLex::Equal => v[i] == v[j],
                AltLex::Greater => v[i] > v[j],
                AltLex::Unknown => false,
            })
        });
        ok += usize::from(antisym && total && trans && order);
    }
    r.check("(g) alt-lex order axioms", ok == n.triples, ok, n.triples);
    Ok(())
}

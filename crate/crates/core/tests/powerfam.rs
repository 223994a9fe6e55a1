use fexpand_core::cfseq::{AltLex, PeriodicSpec};
use fexpand_core::engine::{eval_infinite, EvalOutcome, GeneratorFn};
use fexpand_core::powerfam::*;
use fexpand_core::realkernel::{BitSchedule, CertifiedReal, Rat, RealExpr};
use num_bigint::BigInt;
use num_traits::One;

fn rat(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}

fn f(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

fn bisect_f64(mut lo: f64, mut hi: f64, g: impl Fn(f64) -> f64) -> f64 {
    let s = g(lo) > 0.0;
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if (g(m) > 0.0) == s {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

fn fixed_point_f64(a: f64) -> f64 {
    bisect_f64(1.0 + 1e-12, 2.0, |x| (x - 1.0).powf(-1.0 / a) - x)
}

fn alpha0_f64() -> f64 {
    bisect_f64(2.0, 10.0, |y| y * y.ln() - (y + 1.0) * (y - 1.0).ln())
}

fn contains(c: &CertifiedReal, v: f64, slack: f64) -> bool {
    c.lo().to_f64() - slack <= v && v <= c.hi().to_f64() + slack
}

#[test]
fn fixed_points_match_float_oracle() {
    for k in 1..40 {
        let a = rat(k, 8);
        let r = fixed_point_ones(&a, 48).unwrap();
        assert!(contains(&r.location, fixed_point_f64(f(&a)), 1e-12), "alpha {a}");
        let x = fixed_point_f64(f(&a));
        let m = (x - 1.0).powf(-1.0 / f(&a) - 1.0) / f(&a);
        assert!((r.multiplier.mid_f64() - m).abs() < 1e-8, "alpha {a}");
    }
}

#[test]
fn golden_fixed_point_agrees_with_reciprocal_evaluation() {
    let r = fixed_point_ones(&Rat::one(), 60).unwrap();
    let s = PeriodicSpec::from_i64(1, &[], &[1]).unwrap();
    let EvalOutcome::Converged(v) = eval_infinite(&GeneratorFn::reciprocal(), &s, 200, &rat(1, 1_000_000_000_000_000)).unwrap() else {
        panic!("golden ratio should converge")
    };
    assert!((r.location.mid_f64() - v.mid_f64()).abs() < 1e-12);
    assert!(r.location.intersect(&v).is_some());
}

#[test]
fn classification_flips_across_alpha0() {
    let a0 = alpha0_f64();
    let below = Rat::new(BigInt::from((a0 * 1e6) as i64 - 100), BigInt::from(1_000_000));
    let above = Rat::new(BigInt::from((a0 * 1e6) as i64 + 100), BigInt::from(1_000_000));
    assert_eq!(fixed_point_ones(&below, 60).unwrap().classification, Classification::Repelling);
    assert_eq!(fixed_point_ones(&above, 60).unwrap().classification, Classification::Attracting);
    assert_eq!(fixed_point_ones(&rat(5, 1), 40).unwrap().classification, Classification::Attracting);
}

#[test]
fn alpha0_routes_agree() {
    let a = alpha0_by_equation(40).unwrap();
    let b = alpha0_by_stability(30).unwrap();
    let both = a.intersect(&b).expect("the two enclosures intersect");
    assert!(contains(&both, alpha0_f64(), 1e-9));
    assert!((both.mid_f64() - 4.1410415).abs() < 1e-6);
    assert!(a.width().to_f64() < 1e-9);
}

#[test]
fn alpha0_sign_bracket() {
    // 4^4 = 256 > 243 = 3^5
    assert!(BigInt::from(4).pow(4) > BigInt::from(3).pow(5));
    let g = |y: f64| y * y.ln() - (y + 1.0) * (y - 1.0).ln();
    assert!(g(4.2) < 0.0);
    let changes = (0..10_000)
        .map(|i| 1.01 + (100.0 - 1.01) * i as f64 / 9_999.0)
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|w| (g(w[0]) > 0.0) != (g(w[1]) > 0.0))
        .count();
    assert_eq!(changes, 1);
}

#[test]
fn double_iterate_below_alpha0_has_one_point() {
    for k in 1..50 {
        let a = rat(k, 12);
        let d = double_fixed_points(&a, 40).unwrap();
        assert_eq!(d.len(), 1, "alpha {a}");
        let s = fixed_point_ones(&a, 40).unwrap();
        assert!(d[0].location.intersect(&s.location).is_some(), "alpha {a}");
    }
}

#[test]
fn double_iterate_above_alpha0_has_three_points() {
    let mut prev: Option<(f64, f64)> = None;
    for a in [rat(42, 10), rat(45, 10), rat(5, 1), rat(6, 1), rat(8, 1), rat(12, 1), rat(20, 1)] {
        let d = double_fixed_points(&a, 40).unwrap();
        assert_eq!(d.len(), 3, "alpha {a}");
        assert_eq!(d[0].classification, Classification::Attracting);
        assert_eq!(d[1].classification, Classification::Repelling);
        assert_eq!(d[2].classification, Classification::Attracting);
        let (lo, hi) = (d[0].location.mid_f64(), d[2].location.mid_f64());
        if let Some((plo, phi)) = prev {
            assert!(lo < plo && hi > phi, "outer points move apart at {a}");
        }
        prev = Some((lo, hi));
    }
}

#[test]
fn basin_endpoints_are_the_two_cycle() {
    for a in [rat(9, 2), rat(5, 1), rat(7, 1)] {
        let (lo, hi) = ones_basin(&a, 40).unwrap();
        let d = double_fixed_points(&a, 40).unwrap();
        assert!(lo.intersect(&d[0].location).is_some(), "alpha {a}");
        assert!(hi.intersect(&d[2].location).is_some(), "alpha {a}");
    }
    let (lo, hi) = ones_basin(&rat(5, 1), 40).unwrap();
    assert!((lo.mid_f64() - 1.06377).abs() < 1e-5);
    assert!((hi.mid_f64() - 1.73411).abs() < 1e-5);
}

#[test]
fn orbit_simulation_agrees_with_basin() {
    let t = |x: f64| (x - 1.0).powf(-0.2);
    let mut x = 7f64.powf(0.2);
    for _ in 0..500 {
        x = t(x);
        assert!(1.0 < x && x < 2.0);
    }
    let mut y = 1.01f64;
    let mut steps = 0;
    while 1.0 < y && y < 2.0 {
        y = t(y);
        steps += 1;
    }
    assert!(steps < 5);
    let seven = RealExpr::nth_root(rat(7, 1), 5).unwrap();
    assert_eq!(in_ones_basin(&rat(5, 1), &seven, 128).unwrap(), Some(true));
    assert_eq!(in_ones_basin(&rat(5, 1), &RealExpr::ratio(101, 100), 128).unwrap(), Some(false));
}

#[test]
fn threshold_of_fifth_root_of_seven() {
    let x = RealExpr::nth_root(rat(7, 1), 5).unwrap();
    assert_eq!(in_ones_basin(&rat(42, 10), &x, 128).unwrap(), Some(false));
    assert_eq!(in_ones_basin(&rat(43, 10), &x, 128).unwrap(), Some(true));
    let t = ones_threshold(&x, 30).unwrap();
    assert!((t.mid_f64() - 4.26159).abs() < 1e-5);
}

#[test]
fn threshold_separates_basin_membership() {
    let x = RealExpr::ratio(3, 2);
    let t = ones_threshold(&x, 24).unwrap();
    assert!(t.mid_f64() > alpha0_f64());
    let below = Rat::new(BigInt::from(((t.mid_f64() - 0.01) * 1e4) as i64), BigInt::from(10_000));
    let above = Rat::new(BigInt::from(((t.mid_f64() + 0.01) * 1e4) as i64), BigInt::from(10_000));
    assert_eq!(in_ones_basin(&below, &x, 128).unwrap(), Some(false));
    assert_eq!(in_ones_basin(&above, &x, 128).unwrap(), Some(true));
}

#[test]
fn sign_checks() {
    for n in [2, 3, 4] {
        assert!(no_bifurcation_check(n, &rat(100, 1)).unwrap().is_sign_definite(), "n = {n}");
    }
    let s = no_bifurcation_check(1, &rat(100, 1)).unwrap();
    assert!(s.unresolved.is_empty(), "{:?}", s.unresolved);
    assert_eq!(s.sign_changes.len(), 1);
    let (a, b) = &s.sign_changes[0];
    assert!(f(a) <= alpha0_f64() && alpha0_f64() <= f(b));
}

#[test]
fn monotonicity_in_alpha() {
    let half = RealExpr::ratio(1, 2);
    let s = BitSchedule::default();
    let grid = [rat(3, 2), rat(7, 4), rat(2, 1), rat(2, 1), rat(11, 4), rat(3, 1)];
    let scan = alpha_monotonicity_scan(&half, &grid, 40, s).unwrap();
    assert_eq!(scan.comparisons[0], AltLex::Less);
    assert_eq!(scan.comparisons[2], AltLex::Equal);
    assert_eq!(scan.comparisons[4], AltLex::Greater);
    let big = alpha_monotonicity_scan(&half, &[rat(60, 1)], 12, s).unwrap();
    assert!(big.rows[0].expansion.quotients.tail().iter().all(|a| a.is_one()));
    let (lo, hi) = monotonicity_switch(&half, &rat(2, 1), &rat(5, 2), &rat(1, 100_000), 60, &rat(1, 10_000), s).unwrap();
    assert!((f(&lo) - 2.24228).abs() < 1e-3 && (f(&hi) - 2.24228).abs() < 1e-3);
}

#[test]
fn below_alpha0_basin_is_refused() {
    assert!(matches!(
        ones_basin(&rat(4, 1), 30),
        Err(fexpand_core::Error::InvalidRegime(_))
    ));
}

use fexpand_core::cfseq::{PeriodicSpec, Quotients, Status};
use fexpand_core::engine::{
    eval_finite, eval_infinite, expand, EvalOutcome, GeneratorFn, Outcome,
};
use fexpand_core::realkernel::{BitSchedule, Rat, RealExpr};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rat(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn expand_rat(f: &GeneratorFn, x: Rat, n: usize) -> fexpand_core::engine::ExpansionResult {
    expand(f, &RealExpr::Rational(x), n, BitSchedule::default()).unwrap()
}

// Euclid on (num, den), written out independently of the library.
fn euclid_oracle(mut n: BigInt, mut d: BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    while !d.is_zero() {
        let (q, r) = n.div_mod_floor(&d);
        out.push(q);
        n = d;
        d = r;
    }
    out
}

// x ↦ 1/{x}² on exact fractions; the half-power expansion of a rational.
fn half_power_oracle(x: &Rat, max: usize) -> (Vec<BigInt>, bool) {
    let mut out = vec![x.floor().to_integer()];
    let mut y = x - x.floor();
    while out.len() <= max {
        if y.is_zero() {
            return (out, true);
        }
        let z = (&y * &y).recip();
        out.push(z.floor().to_integer());
        y = &z - z.floor();
    }
    (out, y.is_zero())
}

#[test]
fn half_power_two_thirds() {
    let f = GeneratorFn::power(rat(1, 2)).unwrap();
    let e = expand_rat(&f, rat(2, 3), 50);
    assert_eq!(e.quotients.to_string(), "[0; 2, 16]");
    assert_eq!(e.outcome, Outcome::Terminated);
}

#[test]
fn half_power_twenty_seven_over_forty_seven() {
    let f = GeneratorFn::power(rat(1, 2)).unwrap();
    let e = expand_rat(&f, rat(27, 47), 50);
    assert_eq!(e.quotients.tail(), ints(&[3, 1098, 2892, 410, 256]).as_slice());
    assert!(e.is_terminated());
    assert!(e.steps.iter().all(|s| s.exact));
}

#[test]
fn half_power_three_quarters_prefix() {
    let f = GeneratorFn::power(rat(1, 2)).unwrap();
    let e = expand_rat(&f, rat(3, 4), 19);
    let want = [1, 1, 2, 8, 5, 1, 3, 3, 14, 321, 2, 300, 1, 13, 2, 6, 1, 1, 2];
    assert_eq!(e.quotients.tail(), ints(&want).as_slice());
    assert_eq!(e.outcome, Outcome::ReachedMaxTerms);
    let (oracle, _) = half_power_oracle(&rat(3, 4), 12);
    assert_eq!(&e.quotients.tail()[..12], &oracle[1..13]);
}

#[test]
fn cube_root_three_prefix() {
    let f = GeneratorFn::power(rat(3, 2)).unwrap();
    let x = RealExpr::nth_root(rat(3, 1), 3).unwrap();
    let e = expand(&f, &x, 27, BitSchedule::default()).unwrap();
    let want = [
        1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 3, 1, 1, 1, 1, 3, 1, 2, 1, 1, 7, 23, 1,
    ];
    assert_eq!(e.quotients.head(), &BigInt::one());
    assert_eq!(e.quotients.tail(), ints(&want).as_slice());
    assert!(e.steps.iter().all(|s| !s.exact && s.precision_bits > 0));
}

#[test]
fn periodic_neighbour_of_cube_root() {
    let f = GeneratorFn::power(rat(3, 2)).unwrap();
    let s = PeriodicSpec::from_i64(1, &[], &[1, 1, 2, 1]).unwrap();
    let tol = rat(1, 1_000_000_000_000);
    let v = match eval_infinite(&f, &s, 400, &tol).unwrap() {
        EvalOutcome::Converged(v) => v,
        other => panic!("{other:?}"),
    };
    assert!((v.mid_f64() - 1.44225029).abs() < 5e-8);
    let c = fexpand_core::realkernel::eval_expr(&RealExpr::nth_root(rat(3, 1), 3).unwrap(), 128);
    assert!((c.mid_f64() - 1.44224957).abs() < 5e-8);
    assert!(v.is_disjoint(&c));
}

#[test]
fn power_five_root_seven_is_all_ones() {
    let f = GeneratorFn::power(rat(5, 1)).unwrap();
    let x = RealExpr::nth_root(rat(7, 1), 5).unwrap();
    let e = expand(&f, &x, 40, BitSchedule::default()).unwrap();
    assert!(e.quotients.tail().iter().all(|a| a.is_one()));
    assert_eq!(e.quotients.tail().len(), 40);
}

#[test]
fn patched_generator_matches_power_five() {
    let p = GeneratorFn::power5_patched();
    let f5 = GeneratorFn::power(rat(5, 1)).unwrap();
    for x in [
        RealExpr::nth_root(rat(7, 1), 5).unwrap(),
        RealExpr::ratio(3, 2),
        RealExpr::ratio(17, 10),
        RealExpr::ratio(5, 2),
        RealExpr::ratio(1, 3),
    ] {
        let a = expand(&p, &x, 12, BitSchedule::default()).unwrap();
        let b = expand(&f5, &x, 12, BitSchedule::default()).unwrap();
        assert_eq!(a.quotients, b.quotients, "{x:?}");
    }
}

#[test]
fn finite_values() {
    let r = GeneratorFn::reciprocal();
    let q = Quotients::new(BigInt::zero(), ints(&[1, 1, 2, 1, 6]), Status::Terminated).unwrap();
    assert_eq!(eval_finite(&r, &q, 64).unwrap().exact_rational(), Some(&rat(27, 47)));
}

proptest! {
    #[test]
    fn reciprocal_matches_euclid(n in 1i64..1_000_000, d in 1i64..1_000_000) {
        let x = rat(n, d);
        let r = GeneratorFn::reciprocal();
        let e = expand_rat(&r, x.clone(), 200);
        let oracle = euclid_oracle(x.numer().clone(), x.denom().clone());
        prop_assert!(e.is_terminated());
        prop_assert_eq!(e.quotients.head(), &oracle[0]);
        // Euclid may end in 1 where the canonical form ends in a larger term
        let mut canon = oracle.clone();
        if canon.len() > 1 && canon.last().unwrap().is_one() {
            canon.pop();
            *canon.last_mut().unwrap() += 1;
        }
        prop_assert_eq!(e.quotients.tail(), &canon[1..]);
        let v = eval_finite(&r, &e.quotients, 64).unwrap();
        prop_assert_eq!(v.exact_rational(), Some(&x));
    }

    #[test]
    fn half_power_prefix_matches_oracle(n in 1i64..200, d in 1i64..200) {
        let x = rat(n, d);
        let f = GeneratorFn::power(rat(1, 2)).unwrap();
        let e = expand_rat(&f, x.clone(), 5);
        let (oracle, done) = half_power_oracle(&x, 5);
        prop_assert_eq!(e.quotients.head(), &oracle[0]);
        prop_assert_eq!(e.quotients.tail(), &oracle[1..]);
        prop_assert_eq!(e.is_terminated(), done);
        if done {
            let v = eval_finite(&f, &e.quotients, 64).unwrap();
            prop_assert_eq!(v.exact_rational(), Some(&x));
        }
    }

    #[test]
    fn power_expansions_bracket_their_input(p in 1i64..6, q in 1i64..4, n in 2i64..500) {
        // V of [a₀; …, a_k] and [a₀; …, a_k + 1] bracket x
        let f = GeneratorFn::power(rat(p, q)).unwrap();
        let x = rat(n, 7);
        let e = expand_rat(&f, x.clone(), 4);
        if !e.is_terminated() {
            let mut t = e.quotients.tail().to_vec();
            let a = fexpand_core::engine::eval_prefix(&f, e.quotients.head(), &t, 96).unwrap();
            *t.last_mut().unwrap() += 1;
            let b = fexpand_core::engine::eval_prefix(&f, e.quotients.head(), &t, 96).unwrap();
            let h = a.hull(&b);
            prop_assert!(h.lo().to_rat() <= x && x <= h.hi().to_rat());
        }
        prop_assert!(e.quotients.tail().iter().all(|a| a.is_positive()));
    }
}

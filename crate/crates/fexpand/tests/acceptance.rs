//! Acceptance gate: one PASS/FAIL line per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use fexpand::repro::{self, Report, CLAIMS, DEFAULT_SEED};
use fexpand_core::engine::{expand, GeneratorFn};
use fexpand_core::realkernel::{BitSchedule, Rat, RealExpr};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Time budgets per criterion, in seconds.
const BUDGET: [u64; 13] = [1, 1, 60, 120, 10, 10, 60, 30, 10, 120, 600, 300, 10];

fn euclid(mut n: BigInt, mut d: BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    while !d.is_zero() {
        let (q, r) = n.div_mod_floor(&d);
        out.push(q);
        n = d;
        d = r;
    }
    if out.len() > 1 && out.last().is_some_and(One::is_one) {
        out.pop();
        *out.last_mut().unwrap() += 1;
    }
    out
}

// E_r against a hand-rolled Euclidean algorithm on 10^3 random rationals.
fn euclid_agreement() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    (0..1000).all(|_| {
        let x = Rat::new(rng.gen_range(-1_000_000i64..=1_000_000).into(), rng.gen_range(1i64..=1_000_000).into());
        let e = expand(&GeneratorFn::reciprocal(), &RealExpr::Rational(x.clone()), 1000, BitSchedule::default()).unwrap();
        let want = euclid(x.numer().clone(), x.denom().clone());
        e.is_terminated() && e.quotients.head() == &want[0] && e.quotients.tail() == &want[1..]
    })
}

// Literal values checked here as well as inside the claims.
fn literal(r: &Report, needle: &str) -> bool {
    r.lines.iter().any(|l| l.contains(needle))
}

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    let mut stdout = std::io::stdout();
    for c in &CLAIMS {
        let start = Instant::now();
        let report = repro::run(c.id, DEFAULT_SEED);
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(BUDGET[c.criterion as usize - 1]);
        let (mut pass, detail) = match &report {
            Ok(r) => (r.pass, r.render()),
            Err(e) => (false, format!("error: {e}\n")),
        };
        if let Ok(r) = &report {
            pass &= match c.criterion {
                1 => literal(r, "computed [0; 2, 16];"),
                2 => literal(r, "computed [0; 3, 1098, 2892, 410, 256];"),
                3 => literal(r, "computed [0; 1, 1, 2, 8, 5, 1, 3, 3, 14, 321, 2, 300, 1, 13, 2, 6, 1, 1, 2, ...]"),
                4 => literal(r, "1, 1, 7, 23, 1, ...];"),
                12 => euclid_agreement(),
                _ => true,
            };
        }
        pass &= elapsed <= budget;
        let verdict = if pass { "PASS" } else { "FAIL" };
        let line = format!(
            "criterion {:>2} {verdict} {} ({:.2}s, budget {}s)\n",
            c.criterion,
            c.id,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        // written past the test harness capture so the gate is visible in the log
        stdout.write_all(line.as_bytes()).unwrap();
        if !pass {
            stdout.write_all(detail.as_bytes()).unwrap();
            failed.push(c.criterion);
        }
    }
    stdout.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

use fexpand_core::cfseq::{altlex_compare, parse, AltLex, Quotients, Status};
use fexpand_core::engine::{eval_finite, GeneratorFn};
use num_bigint::BigInt;
use proptest::prelude::*;

fn seq() -> impl Strategy<Value = Quotients> {
    (0i64..3, prop::collection::vec(1i64..4, 0..6), 2i64..4).prop_map(|(h, mut t, last)| {
        if !t.is_empty() {
            *t.last_mut().unwrap() = last;
        }
        Quotients::from_i64(h, &t, Status::Terminated).unwrap()
    })
}

fn value(q: &Quotients) -> fexpand_core::realkernel::Rat {
    eval_finite(&GeneratorFn::reciprocal(), q, 64)
        .unwrap()
        .exact_rational()
        .unwrap()
        .clone()
}

fn to_ord(a: AltLex) -> std::cmp::Ordering {
    match a {
        AltLex::Less => std::cmp::Ordering::Less,
        AltLex::Equal => std::cmp::Ordering::Equal,
        AltLex::Greater => std::cmp::Ordering::Greater,
        AltLex::Unknown => panic!("terminated sequences always compare"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn altlex_is_a_total_order(a in seq(), b in seq(), c in seq()) {
        let ab = altlex_compare(&a, &b);
        prop_assert_eq!(ab, altlex_compare(&b, &a).reverse());
        prop_assert_eq!(ab == AltLex::Equal, a == b);
        prop_assert_eq!(altlex_compare(&a, &a), AltLex::Equal);
        let bc = altlex_compare(&b, &c);
        if ab == AltLex::Less && bc == AltLex::Less {
            prop_assert_eq!(altlex_compare(&a, &c), AltLex::Less);
        }
        if ab == AltLex::Greater && bc == AltLex::Greater {
            prop_assert_eq!(altlex_compare(&a, &c), AltLex::Greater);
        }
    }

    #[test]
    fn altlex_matches_the_real_order(a in seq(), b in seq()) {
        prop_assert_eq!(to_ord(altlex_compare(&a, &b)), value(&a).cmp(&value(&b)));
    }

    #[test]
    fn text_roundtrip(h in -5i64..5, t in prop::collection::vec(1i64..1_000_000, 0..8), cut in any::<bool>()) {
        let status = if cut { Status::Truncated } else { Status::Terminated };
        let q = Quotients::new(BigInt::from(h), t.iter().map(|&x| BigInt::from(x)).collect(), status).unwrap();
        prop_assert_eq!(parse(&q.to_string()).unwrap(), q);
    }
}

#[test]
fn truncated_prefixes_can_be_undecided() {
    let a = Quotients::from_i64(1, &[2, 3], Status::Truncated).unwrap();
    let b = Quotients::from_i64(1, &[2, 3, 4], Status::Terminated).unwrap();
    assert_eq!(altlex_compare(&a, &b), AltLex::Unknown);
    let c = Quotients::from_i64(1, &[2, 4], Status::Truncated).unwrap();
    assert_eq!(altlex_compare(&a, &c), AltLex::Less);
}

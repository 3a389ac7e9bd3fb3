use num_bigint::{BigInt, BigUint};
use polycount::oracle::brute_power_censuses;
use polycount::ratgen::{fit_genfun, RationalGF};
use polycount::{Budget, DigitAutomaton, FieldElem, FieldPoly, FieldSpec};
use proptest::prelude::*;

fn field(choice: u8) -> FieldSpec {
    match choice % 3 {
        0 => FieldSpec::prime(2).unwrap(),
        1 => FieldSpec::prime(3).unwrap(),
        _ => FieldSpec::parse("2^2").unwrap(),
    }
}

fn small_poly(f: &FieldSpec, terms: &[(u64, u64, u64)]) -> FieldPoly {
    let q = f.q();
    let mut all = vec![(vec![0, 0], f.one())];
    for &(a, b, c) in terms {
        let exps = if a + b == 0 { vec![1, 0] } else { vec![a, b] };
        all.push((exps, f.elem(c % q).unwrap()));
    }
    FieldPoly::from_terms(f, 2, all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(choice in 0u8..3, a in 0u64..4, b in 0u64..4, c in 0u64..4) {
        let f = field(choice);
        let (a, b, c) = (f.elem(a % f.q()).unwrap(), f.elem(b % f.q()).unwrap(), f.elem(c % f.q()).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.pow(a, f.q()), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn automaton_matches_expansion(
        choice in 0u8..3,
        terms in prop::collection::vec((0u64..3, 0u64..3, 1u64..4), 1..4),
    ) {
        let f = field(choice);
        let poly = small_poly(&f, &terms);
        let budget = Budget::default();
        let a = DigitAutomaton::build(&poly, &budget).unwrap();
        let censuses = brute_power_censuses(&poly, 20, &budget).unwrap();
        for (n, census) in censuses.iter().enumerate() {
            for alpha in f.nonzero_elements() {
                prop_assert_eq!(a.count(&BigUint::from(n), alpha).unwrap(), BigUint::from(census.get(&alpha)));
            }
        }
    }

    #[test]
    fn leading_zero_digits_do_not_change_counts(
        choice in 0u8..3,
        terms in prop::collection::vec((0u64..3, 0u64..3, 1u64..4), 1..4),
        digits in prop::collection::vec(0u64..4, 0..10),
        pad in 1usize..5,
    ) {
        let f = field(choice);
        let a = DigitAutomaton::build(&small_poly(&f, &terms), &Budget::default()).unwrap();
        let digits: Vec<u64> = digits.into_iter().map(|d| d % f.q()).collect();
        let mut padded = digits.clone();
        padded.extend(std::iter::repeat(0).take(pad));
        prop_assert_eq!(a.count_digits(&digits, FieldElem(1)).unwrap(), a.count_digits(&padded, FieldElem(1)).unwrap());
    }

    #[test]
    fn column_sums_equal_field_power(
        choice in 0u8..3,
        terms in prop::collection::vec((0u64..3, 0u64..3, 1u64..4), 1..4),
    ) {
        let f = field(choice);
        let a = DigitAutomaton::build(&small_poly(&f, &terms), &Budget::default()).unwrap();
        let target = f.q().pow(2);
        for row in a.column_sums() {
            prop_assert!(row.iter().all(|&s| s == target));
        }
    }

    #[test]
    fn berlekamp_massey_recovers_rational_series(
        num in prop::collection::vec(-5i64..6, 1..3),
        den_tail in prop::collection::vec(-4i64..5, 1..4),
    ) {
        let mut den = vec![1];
        den.extend(den_tail);
        prop_assume!(*den.last().unwrap() != 0);
        let g = RationalGF::from_ints(&num, &den).unwrap();
        let seq: Vec<BigInt> = g.expand(24).unwrap();
        let (fit, rec) = fit_genfun(&seq, 8).unwrap();
        prop_assert!(rec.fits(&seq));
        prop_assert_eq!(fit.expand(40).unwrap(), g.expand(40).unwrap());
    }
}

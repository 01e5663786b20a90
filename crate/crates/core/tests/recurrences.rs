use proptest::prelude::*;
use recdet::sample::SpecSampler;
use recdet::{
    det_hessenberg_fast, embed_fixed_order, eval_fixed_order, eval_full_history, fixed_order_matrix,
    full_history_matrix, FullHistorySpec, Rational, RingValue, Structure,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn full_history_determinants(seed in any::<u64>()) {
        let spec = SpecSampler::new(seed).full_history(30);
        let terms = eval_full_history(&spec, 31).unwrap();
        for k in 1..=30 {
            let m = full_history_matrix(&spec, k).unwrap();
            prop_assert_eq!(m.structure(), Structure::UpperHessenberg);
            let det = det_hessenberg_fast(&m).unwrap();
            prop_assert_eq!(&(spec.initial() * &det), terms.term(k + 1).unwrap(), "k = {}", k);
        }
    }

    #[test]
    fn fixed_order_determinants(seed in any::<u64>(), variable in any::<bool>()) {
        let mut s = SpecSampler::new(seed);
        let spec = if variable { s.fixed_order_variable() } else { s.fixed_order_constant() };
        let terms = eval_fixed_order(&spec, 15).unwrap();
        for k in 1..=15 {
            let det = det_hessenberg_fast(&fixed_order_matrix(&spec, k).unwrap()).unwrap();
            prop_assert_eq!(&det, terms.term(k).unwrap(), "k = {}", k);
        }
    }

    #[test]
    fn embedding_shifts_by_one(seed in any::<u64>(), variable in any::<bool>()) {
        let mut s = SpecSampler::new(seed);
        let spec = if variable { s.fixed_order_variable() } else { s.fixed_order_constant() };
        let n = 12;
        let direct = eval_fixed_order(&spec, n).unwrap();
        let embedded = eval_full_history(&embed_fixed_order(&spec), n + 1).unwrap();
        prop_assert_eq!(embedded.term(1).unwrap(), &RingValue::one());
        for j in 1..=n {
            prop_assert_eq!(embedded.term(j + 1), direct.term(j));
        }
    }

    #[test]
    fn scaling_the_initial_scales_every_term(seed in any::<u64>(), c in -5i64..=5) {
        prop_assume!(c != 0);
        let spec = SpecSampler::new(seed).full_history(12);
        let c = RingValue::Rational(Rational::from(c));
        let scaled = spec.with_initial(&c * spec.initial());
        let base = eval_full_history(&spec, 12).unwrap();
        let other = eval_full_history(&scaled, 12).unwrap();
        for k in 1..=12 {
            prop_assert_eq!(other.term(k).unwrap(), &(&c * base.term(k).unwrap()));
        }
        let det = det_hessenberg_fast(&full_history_matrix(&scaled, 8).unwrap()).unwrap();
        prop_assert_eq!(&(scaled.initial() * &det), other.term(9).unwrap());
    }
}

#[test]
fn polynomial_coefficients() {
    // a_{k+1} = x a_k + a_{k-1}: Fibonacci polynomials, checked against a
    // direct loop.
    let spec = FullHistorySpec::new(RingValue::one(), |k, i| {
        Ok(if i == k {
            RingValue::x()
        } else if i + 1 == k {
            RingValue::one()
        } else {
            RingValue::zero()
        })
    });
    let terms = eval_full_history(&spec, 10).unwrap();
    let (mut a, mut b) = (RingValue::zero(), RingValue::one());
    for k in 1..=9 {
        let next = &(&RingValue::x() * &b) + &a;
        a = b;
        b = next;
        assert_eq!(terms.term(k + 1).unwrap(), &b);
        assert_eq!(det_hessenberg_fast(&full_history_matrix(&spec, k).unwrap()).unwrap(), b);
    }
}

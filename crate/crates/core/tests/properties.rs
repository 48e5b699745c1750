mod common;

use proptest::prelude::*;

fn value() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => -1e6f64..1e6,
        1 => Just(f64::NAN),
        1 => prop::num::f64::NORMAL,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_linear(a in -5.0f64..5.0, b in -5.0f64..5.0, w in 0.1f64..8.0,
                            c in prop::array::uniform3(-3.0f64..3.0), lo in -2.0f64..0.0, len in 0.1f64..4.0) {
        prop_assert_eq!(common::quad_linearity(a, b, w, c, lo, lo + len), Ok(()));
    }

    #[test]
    fn quadrature_is_additive(w in 0.1f64..10.0, a in -3.0f64..0.0, l1 in 0.05f64..3.0, l2 in 0.05f64..3.0) {
        prop_assert_eq!(common::quad_additivity(w, a, a + l1, a + l1 + l2), Ok(()));
    }

    #[test]
    fn cvz_agrees_with_direct(q in 0.05f64..0.98, a in 0.2f64..5.0) {
        prop_assert_eq!(common::cvz_matches_direct(q, a), Ok(()));
    }

    #[test]
    fn rational_polylog_path(s in 4u32..=6, q in 1i64..=40, p in 0i64..80) {
        prop_assert_eq!(common::rational_vs_direct(s, p % (2 * q), q), Ok(()));
    }

    #[test]
    fn report_json_round_trip(
        rows in prop::collection::vec(
            ("[a-z0-9-]{1,12}", prop::array::uniform7(value()), any::<bool>(), prop::option::of("[ -~]{0,20}")),
            0..6,
        )
    ) {
        let reports: Vec<_> = rows
            .into_iter()
            .map(|(id, v, pass, err)| common::synthetic_report(id, v, pass, err))
            .collect();
        prop_assert_eq!(common::json_round_trip(&reports), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn verify_is_deterministic(idx in 0usize..4, a in 1usize..4, b in 1usize..6) {
        let filter = ["duplication", "lambda-series", "barnes", "zeta3"][idx];
        prop_assert_eq!(common::reports_deterministic(filter, a, b), Ok(()));
    }
}

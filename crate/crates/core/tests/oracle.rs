use edr_core::gelfand::is_gelfand;
use edr_core::numeric::Integer;
use edr_core::oracle::{
    check_avoidable_def, check_gelfand_def, is_pm_zmod, revalidate, s_closure_check, DefSearch,
};
use edr_core::{RingElement, RingId};

#[test]
fn gelfand_predicate_matches_pm_quotients() {
    for a in (-50i64..=50).filter(|a| a.abs() >= 2) {
        let pm = is_pm_zmod(&Integer::from(a.abs())).unwrap();
        assert_eq!(
            is_gelfand(&RingElement::from_i64(RingId::Integers, a)),
            pm.verdict
        );
    }
}

#[test]
fn integer_elements_are_avoidable() {
    for a in (-24i64..=24).filter(|&a| a != 0) {
        let r = check_avoidable_def(&Integer::from(a), 12).unwrap();
        assert!(r.verdict, "{a}: {:?}", r.witness);
        let r = check_gelfand_def(
            RingId::Integers,
            &RingElement::from_i64(RingId::Integers, a),
            DefSearch::Bound(12),
        )
        .unwrap();
        assert!(r.verdict);
    }
}

#[test]
fn henriksen_multiples_of_x_have_witnesses() {
    let search = DefSearch::Samples { count: 6, seed: 3 };
    for text in ["x", "-x", "1/3*x", "x^2 + 5*x", "2*x - x^3"] {
        let a = RingElement::parse(RingId::Henriksen, text).unwrap();
        let r = check_gelfand_def(RingId::Henriksen, &a, search).unwrap();
        assert!(!r.verdict, "{text}");
        assert!(revalidate(&r).unwrap(), "{text}");
    }
}

#[test]
fn closure_small_bound() {
    assert!(s_closure_check(10).unwrap().verdict);
}

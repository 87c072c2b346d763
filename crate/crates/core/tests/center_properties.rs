use liejordan_core::center::{center_classes, center_order, is_faithful, WeightSet};
use liejordan_core::rootdata::{build_root_datum, Budget, DominantWeight, Family};
use proptest::prelude::*;

fn weight_set(l: usize, raw: Vec<Vec<u32>>) -> Option<WeightSet> {
    let mut ws: Vec<DominantWeight> = raw
        .into_iter()
        .map(|mut c| {
            c.truncate(l);
            DominantWeight::new(c)
        })
        .filter(|w| !w.is_zero())
        .collect();
    ws.sort();
    ws.dedup();
    WeightSet::new(ws).ok()
}

fn raw_sets() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, 9), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn type_b_odd_last_coordinate(l in 2usize..=9, raw in raw_sets()) {
        let d = build_root_datum(Family::B, l).unwrap();
        if let Some(ws) = weight_set(l, raw) {
            let closed = ws.weights().iter().any(|w| w.coords()[l - 1] % 2 == 1);
            prop_assert_eq!(is_faithful(&d, &ws).unwrap(), closed);
        }
    }

    #[test]
    fn type_d_odd_exactly_one_spin_coordinate_odd(l in prop::sample::select(vec![3usize, 5, 7, 9]), raw in raw_sets()) {
        let d = build_root_datum(Family::D, l).unwrap();
        if let Some(ws) = weight_set(l, raw) {
            let closed = ws
                .weights()
                .iter()
                .any(|w| (w.coords()[l - 2] + w.coords()[l - 1]) % 2 == 1);
            prop_assert_eq!(is_faithful(&d, &ws).unwrap(), closed);
        }
    }
}

#[test]
fn type_d_even_single_weights_never_faithful() {
    let budget = Budget::default();
    for l in [4, 6, 8] {
        let d = build_root_datum(Family::D, l).unwrap();
        let cap = (1u64 << l) + 10;
        for (w, _) in d.enumerate_dominant_weights(cap, &budget).unwrap() {
            let ws = WeightSet::new(vec![w.clone()]).unwrap();
            assert!(!is_faithful(&d, &ws).unwrap(), "D{l} {w}");
        }
    }
}

#[test]
fn classes_form_a_group_of_order_det() {
    for ty in liejordan_core::SimpleType::all_up_to(9) {
        let d = liejordan_core::RootDatum::new(ty);
        let classes = center_classes(&d);
        assert_eq!(classes.len() as u64 + 1, center_order(&d), "{ty}");
        for a in &classes {
            // closed under addition, and every element has an inverse
            let mut has_inverse = false;
            for b in &classes {
                match a.add(b) {
                    Some(c) => assert!(classes.contains(&c), "{ty}"),
                    None => has_inverse = true,
                }
            }
            assert!(has_inverse, "{ty}");
        }
    }
}

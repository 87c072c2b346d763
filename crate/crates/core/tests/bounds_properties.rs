use liejordan_core::bounds::{
    consistency_check_bounds, digit_summary, factorial, BoundExpr, Evaluator, FamilyOfGroups,
    GroupDims,
};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

fn naive_factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 1..=n {
        acc *= k;
    }
    acc
}

/// Value of an expression with `J(m) = (m+1)!` substituted.
fn value(e: &BoundExpr) -> BigUint {
    match e {
        BoundExpr::Exact { value } => value.clone(),
        BoundExpr::SymbolicJ { arg } => naive_factorial(arg + 1),
        BoundExpr::Product { operands } => operands.iter().map(value).product(),
        BoundExpr::Power { operands, exponent } => {
            num_traits::pow(value(operands), *exponent as usize)
        }
    }
}

fn expr() -> impl Strategy<Value = BoundExpr> {
    let leaf = prop_oneof![
        (1u64..1000).prop_map(BoundExpr::exact),
        (1u64..12).prop_map(|arg| BoundExpr::SymbolicJ { arg }),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4)
                .prop_map(|operands| BoundExpr::Product { operands }),
            (inner, 1u64..4).prop_map(|(b, exponent)| BoundExpr::Power {
                operands: Box::new(b),
                exponent
            }),
        ]
    })
}

proptest! {
    #[test]
    fn json_round_trip(e in expr()) {
        let s = serde_json::to_string(&e).unwrap();
        let back: BoundExpr = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn normalize_preserves_value(e in expr()) {
        let n = e.clone().normalize();
        prop_assert_eq!(value(&n), value(&e));
        prop_assert_eq!(n.is_symbolic(), e.is_symbolic());
        prop_assert_eq!(n.clone().normalize(), n);
    }

    #[test]
    fn factorial_matches_naive(n in 0u64..400) {
        prop_assert_eq!(factorial(n), naive_factorial(n));
    }
}

#[test]
fn headline_values() {
    let ev = Evaluator::default();
    let j4 = ev.bound_lie_connected(4).unwrap();
    assert_eq!(j4.as_exact().unwrap(), &naive_factorial(105));
    assert_eq!(
        ev.jordan_gl(71).unwrap().as_exact().unwrap(),
        &naive_factorial(72)
    );
    assert_eq!(
        ev.jordan_gl(63).unwrap().as_exact().unwrap(),
        &naive_factorial(64)
    );
    let (digits, _) = digit_summary(&naive_factorial(105), 6);
    assert_eq!(digits, 169);
    for n in 1..=20 {
        assert!(consistency_check_bounds(n));
    }
}

#[test]
fn components_enter_as_power_and_factor() {
    let ev = Evaluator::default();
    let one = ev.bound(FamilyOfGroups::Lie, GroupDims::new(4, 1)).unwrap();
    let three = ev.bound(FamilyOfGroups::Lie, GroupDims::new(4, 3)).unwrap();
    let j = one.as_exact().unwrap();
    assert_eq!(
        three.as_exact().unwrap(),
        &(num_traits::pow(j.clone(), 3) * 3u32)
    );
}

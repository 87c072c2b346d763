//! The set-cover optimum against brute force over all small weight subsets.

use liejordan_core::center::{is_faithful, WeightSet};
use liejordan_core::minfaithful::{rdim, upper_bound};
use liejordan_core::rootdata::{Budget, Family, RootDatum, SimpleType};

fn exhaustive_min(d: &RootDatum, budget: &Budget) -> u64 {
    let weights = d
        .enumerate_dominant_weights(upper_bound(d.rank()), budget)
        .unwrap();
    let mut best = u64::MAX;
    let n = weights.len();
    for i in 0..n {
        for j in i..=n {
            for k in j..=n {
                let mut picked = vec![i];
                if j < n && j > i {
                    picked.push(j);
                }
                if k < n && k > j && j > i {
                    picked.push(k);
                }
                let total: u64 = picked.iter().map(|&x| weights[x].1).sum();
                if total >= best {
                    continue;
                }
                let ws =
                    WeightSet::new(picked.iter().map(|&x| weights[x].0.clone()).collect()).unwrap();
                if is_faithful(d, &ws).unwrap() {
                    best = total;
                }
            }
        }
    }
    best
}

#[test]
fn dp_matches_exhaustive_search() {
    let budget = Budget::default();
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    for (f, l) in types {
        let d = RootDatum::new(SimpleType::new(f, l).unwrap());
        let r = rdim(&d, &budget).unwrap();
        assert_eq!(r.total_dim, exhaustive_min(&d, &budget), "{f}{l}");
        assert!(is_faithful(&d, &r.witness).unwrap());
        let dims: Vec<u64> = r
            .witness
            .weights()
            .iter()
            .map(|w| u64::try_from(d.weyl_dim(w).unwrap()).unwrap())
            .collect();
        assert_eq!(dims, r.per_weight_dims);
    }
}

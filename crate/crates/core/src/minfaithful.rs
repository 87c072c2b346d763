//! Minimal dimension of a faithful representation of a simply connected
//! simple group.
//!
//! A representation is a direct sum of irreducibles `R(λ)`, and it is faithful
//! iff every nonidentity center class is detected by some summand. Minimising
//! the total dimension is therefore a weighted set cover whose universe is
//! the set of center classes and whose sets are the coverage masks of the
//! nonzero dominant weights.
//!
//! Every simple type has a faithful representation of dimension at most
//! `2^ℓ + 10`, so any summand of an optimal cover has dimension at most that
//! and enumerating weights up to this cap loses nothing.

use std::cmp::{Ordering, Reverse};
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::center::{center_classes, coverage_mask, is_faithful, CenterError, WeightSet};
use crate::rootdata::{Budget, DominantWeight, Family, RootDataError, RootDatum, SimpleType};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum RdimError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error("no faithful representation of dimension <= {cap} found for {ty}")]
    NoCover { ty: SimpleType, cap: u64 },
}

/// `2^ℓ + 10`.
pub fn upper_bound(rank: usize) -> u64 {
    (1u64 << rank) + 10
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdimResult {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub total_dim: u64,
    pub witness: WeightSet,
    pub per_weight_dims: Vec<u64>,
}

/// Orders candidate weights of equal dimension. Lower node indices win, except
/// that for type D the spin node `ℓ` is ranked before `ℓ-1`, which keeps
/// `ϖ_ℓ` as the preferred half-spin weight.
fn priority_key(ty: SimpleType, w: &DominantWeight) -> Reverse<Vec<u32>> {
    let mut key = w.coords().to_vec();
    if ty.family() == Family::D {
        let l = key.len();
        key.swap(l - 2, l - 1);
    }
    Reverse(key)
}

fn compare(ty: SimpleType, a: &(DominantWeight, u64), b: &(DominantWeight, u64)) -> Ordering {
    a.1.cmp(&b.1)
        .then_with(|| priority_key(ty, &a.0).cmp(&priority_key(ty, &b.0)))
}

/// Candidate summands: one weight per distinct nonempty coverage mask, the
/// cheapest one (ties broken by [`priority_key`]), in preference order.
fn candidates(
    datum: &RootDatum,
    classes: &[crate::center::CenterClass],
    budget: &Budget,
) -> Result<Vec<(DominantWeight, u64, u64)>, RdimError> {
    let ty = datum.simple_type();
    let mut weights = datum.enumerate_dominant_weights(upper_bound(ty.rank()), budget)?;
    weights.sort_by(|a, b| compare(ty, a, b));
    let mut best: HashMap<u64, usize> = HashMap::new();
    let mut out = Vec::new();
    for (w, dim) in weights {
        let mask = coverage_mask(&w, classes)?;
        if mask == 0 && !classes.is_empty() {
            continue;
        }
        if best.contains_key(&mask) {
            continue;
        }
        best.insert(mask, out.len());
        out.push((w, dim, mask));
    }
    Ok(out)
}

/// Exact minimum-weight set cover over bitmasks.
///
/// `table[k][r]` is the best `(total, count)` covering the classes in `r`
/// using only candidates `k..`. Walking the table from `k = 0` and taking a
/// candidate whenever it is part of some optimum yields the lexicographically
/// smallest index list among optimal covers.
fn set_cover(items: &[(u64, u64)], universe: u64) -> Option<Vec<usize>> {
    const NONE: (u64, u64) = (u64::MAX, u64::MAX);
    let states = (universe + 1) as usize;
    let n = items.len();
    let mut table = vec![vec![NONE; states]; n + 1];
    table[n][0] = (0, 0);
    for k in (0..n).rev() {
        let (cost, mask) = items[k];
        for r in 0..states {
            let skip = table[k + 1][r];
            let rest = table[k + 1][r & !(mask as usize)];
            let take = if rest == NONE || (r as u64) & mask == 0 {
                NONE
            } else {
                (rest.0 + cost, rest.1 + 1)
            };
            table[k][r] = skip.min(take);
        }
    }
    if table[0][universe as usize] == NONE {
        return None;
    }
    let mut chosen = Vec::new();
    let mut r = universe as usize;
    for k in 0..n {
        if r == 0 {
            break;
        }
        let (cost, mask) = items[k];
        if (r as u64) & mask == 0 {
            continue;
        }
        let rest = table[k + 1][r & !(mask as usize)];
        if rest != NONE && (rest.0 + cost, rest.1 + 1) == table[k][r] {
            chosen.push(k);
            r &= !(mask as usize);
        }
    }
    Some(chosen)
}

/// Minimal total dimension of a faithful representation, with a witness.
pub fn rdim(datum: &RootDatum, budget: &Budget) -> Result<RdimResult, RdimError> {
    let ty = datum.simple_type();
    budget.check_rank(ty.rank())?;
    let classes = center_classes(datum);
    let cands = candidates(datum, &classes, budget)?;
    let no_cover = RdimError::NoCover {
        ty,
        cap: upper_bound(ty.rank()),
    };

    let picked: Vec<usize> = if classes.is_empty() {
        // trivial center: the cheapest nonzero irreducible is already faithful
        if cands.is_empty() {
            return Err(no_cover);
        }
        vec![0]
    } else {
        let universe = (1u64 << classes.len()) - 1;
        let items: Vec<(u64, u64)> = cands.iter().map(|&(_, dim, mask)| (dim, mask)).collect();
        set_cover(&items, universe).ok_or(no_cover)?
    };

    let weights: Vec<DominantWeight> = picked.iter().map(|&i| cands[i].0.clone()).collect();
    let per_weight_dims: Vec<u64> = picked.iter().map(|&i| cands[i].1).collect();
    let witness = WeightSet::new(weights)?;
    debug_assert!(is_faithful(datum, &witness)?);
    Ok(RdimResult {
        ty,
        total_dim: per_weight_dims.iter().sum(),
        witness,
        per_weight_dims,
    })
}

/// Whether `rdim ≤ 2^ℓ + 10`.
pub fn verify_upb(datum: &RootDatum, budget: &Budget) -> Result<bool, RdimError> {
    Ok(rdim(datum, budget)?.total_dim <= upper_bound(datum.rank()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: Family,
    pub rank: usize,
    pub rdim: u64,
    pub witness: WeightSet,
    pub per_weight_dims: Vec<u64>,
    pub upper_bound: u64,
}

/// One row per valid type of rank at most `max_rank`, ordered by family then
/// rank. Types are solved in parallel; the order is independent of scheduling.
pub fn rdim_table(max_rank: usize, budget: &Budget) -> Result<Vec<TableRow>, RdimError> {
    budget.check_rank(max_rank)?;
    SimpleType::all_up_to(max_rank)
        .into_par_iter()
        .map(|ty| {
            let r = rdim(&RootDatum::new(ty), budget)?;
            Ok(TableRow {
                family: ty.family(),
                rank: ty.rank(),
                rdim: r.total_dim,
                witness: r.witness,
                per_weight_dims: r.per_weight_dims,
                upper_bound: upper_bound(ty.rank()),
            })
        })
        .collect()
}

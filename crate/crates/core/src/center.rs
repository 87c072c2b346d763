//! Center of the simply connected group and the faithfulness criterion.
//!
//! The center is the coweight lattice modulo the coroot lattice. Its elements
//! are represented by rational vectors in simple-coroot coordinates reduced
//! into `[0, 1)`; the fundamental coweights (rows of the inverse Cartan matrix)
//! generate it. A weight `λ` kills a center element `x` exactly when
//! `λ(x) = Σ λ_i μ_i` is an integer, and a direct sum of irreducibles is
//! faithful iff every nonidentity center element is detected by some summand.
//!
//! Representatives are compared after reduction mod 1, so a lift such as
//! `(α_{ℓ-1}^∨ - α_ℓ^∨)/4` for odd `D_ℓ` shows up with coordinates
//! `(…, 1/4, 3/4)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::rootdata::{DominantWeight, RootDatum};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("weight set is empty")]
    EmptyWeightSet,
    #[error("weight set contains the zero weight")]
    ZeroWeight,
    #[error("weight {0} appears twice")]
    DuplicateWeight(DominantWeight),
    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },
}

/// Reduces a rational into `[0, 1)`.
pub fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// A nonidentity center element, as coroot coordinates reduced mod 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterClass(Vec<BigRational>);

impl CenterClass {
    /// Reduces `coords` mod 1. Returns `None` for the identity class.
    pub fn from_lift(coords: &[BigRational]) -> Option<Self> {
        let reduced: Vec<BigRational> = coords.iter().map(frac).collect();
        if reduced.iter().all(Zero::is_zero) {
            None
        } else {
            Some(CenterClass(reduced))
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    /// Coordinatewise sum mod 1 (`None` if it is the identity).
    pub fn add(&self, other: &CenterClass) -> Option<CenterClass> {
        let sum: Vec<BigRational> = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        CenterClass::from_lift(&sum)
    }

    /// Order of the element in the center.
    pub fn order(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()))
    }
}

impl fmt::Display for CenterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for CenterClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

/// A nonempty set of distinct nonzero dominant weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightSet(Vec<DominantWeight>);

impl WeightSet {
    pub fn new(weights: Vec<DominantWeight>) -> Result<Self, CenterError> {
        if weights.is_empty() {
            return Err(CenterError::EmptyWeightSet);
        }
        let mut seen = HashSet::new();
        for w in &weights {
            if w.is_zero() {
                return Err(CenterError::ZeroWeight);
            }
            if !seen.insert(w) {
                return Err(CenterError::DuplicateWeight(w.clone()));
            }
        }
        Ok(WeightSet(weights))
    }

    pub fn weights(&self) -> &[DominantWeight] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `|Z| = det(cartan)`.
pub fn center_order(datum: &RootDatum) -> u64 {
    datum.cartan_determinant()
}

/// The nonidentity center classes, sorted lexicographically.
///
/// Closes the fundamental coweights under addition mod 1; the closure is the
/// whole cokernel, so exactly `det(cartan) - 1` classes come back.
pub fn center_classes(datum: &RootDatum) -> Vec<CenterClass> {
    let generators: Vec<CenterClass> = datum
        .inverse_cartan()
        .iter()
        .filter_map(|row| CenterClass::from_lift(row))
        .collect();
    let mut found: BTreeSet<CenterClass> = BTreeSet::new();
    let mut frontier: Vec<CenterClass> = generators.clone();
    for g in &generators {
        found.insert(g.clone());
    }
    while let Some(x) = frontier.pop() {
        for g in &generators {
            if let Some(y) = x.add(g) {
                if found.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    let classes: Vec<CenterClass> = found.into_iter().collect();
    debug_assert_eq!(classes.len() as u64 + 1, center_order(datum));
    classes
}

/// `λ(x) mod 1`.
pub fn pair(weight: &DominantWeight, class: &CenterClass) -> Result<BigRational, CenterError> {
    if weight.rank() != class.0.len() {
        return Err(CenterError::RankMismatch {
            expected: class.0.len(),
            got: weight.rank(),
        });
    }
    let s: BigRational = weight
        .coords()
        .iter()
        .zip(&class.0)
        .map(|(&l, mu)| mu * BigInt::from(l))
        .sum();
    Ok(frac(&s))
}

/// Bitmask of the classes (by index in `classes`) that `weight` detects.
pub fn coverage_mask(weight: &DominantWeight, classes: &[CenterClass]) -> Result<u64, CenterError> {
    assert!(
        classes.len() <= 64,
        "coverage masks hold at most 64 classes"
    );
    let mut mask = 0u64;
    for (i, x) in classes.iter().enumerate() {
        if !pair(weight, x)?.is_zero() {
            mask |= 1 << i;
        }
    }
    Ok(mask)
}

/// Whether `⊕_{λ ∈ D} R(λ)` is faithful on the simply connected group.
pub fn is_faithful(datum: &RootDatum, weights: &WeightSet) -> Result<bool, CenterError> {
    for w in weights.weights() {
        if w.rank() != datum.rank() {
            return Err(CenterError::RankMismatch {
                expected: datum.rank(),
                got: w.rank(),
            });
        }
    }
    let classes = center_classes(datum);
    for x in &classes {
        let mut detected = false;
        for w in weights.weights() {
            if !pair(w, x)?.is_zero() {
                detected = true;
                break;
            }
        }
        if !detected {
            return Ok(false);
        }
    }
    Ok(true)
}

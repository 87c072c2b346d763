//! Root-system combinatorics for the simple types.
//!
//! Nodes are numbered as in Onishchik–Vinberg's reference tables, which is
//! what fixes `ϖ₁` for the exceptional types:
//!
//! | type | diagram (OV numbering)                | Bourbaki label of OV node 1..ℓ |
//! |------|---------------------------------------|--------------------------------|
//! | A, C | chain `1 - 2 - … - ℓ`                 | identical                      |
//! | B    | chain, node ℓ short                   | identical                      |
//! | D    | chain `1 - … - (ℓ-2)`, ℓ-1 and ℓ on ℓ-2 | identical                    |
//! | E₆   | chain `1 - 2 - 3 - 4 - 5`, 6 on 3     | 1 3 4 5 6 2                    |
//! | E₇   | chain `1 - … - 6`, 7 on 4             | 7 6 5 4 3 1 2                  |
//! | E₈   | chain `1 - … - 7`, 8 on 5             | 8 7 6 5 4 3 1 2                |
//! | F₄   | `1 - 2 => 3 - 4`, nodes 1, 2 short    | 4 3 2 1                        |
//! | G₂   | node 1 short                          | identical                      |
//!
//! The Cartan matrix uses `a[i][j] = ⟨α_i^∨, α_j⟩`. Weights are written in the
//! fundamental-weight basis and coroots in the simple-coroot basis, so the
//! pairing `⟨Σ λ_i ϖ_i, Σ c_i α_i^∨⟩` is simply `Σ λ_i c_i`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg;

/// Rank used when no budget is configured.
pub const DEFAULT_MAX_RANK: usize = 9;

/// Environment variable overriding the rank budget.
pub const MAX_RANK_ENV: &str = "LIEJORDAN_MAX_RANK";

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid type {family}{rank}: {constraint}")]
    InvalidType {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },
    #[error("unknown family {0:?}; expected one of A, B, C, D, E, F, G")]
    UnknownFamily(String),
    #[error("weight has {got} coordinates but the root datum has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("cap {cap} exceeds the budget limit {limit}; an explicit override is required")]
    CapOverBudget { cap: u64, limit: u64 },
    #[error("rank {rank} exceeds the rank budget {max_rank}")]
    RankOverBudget { rank: usize, max_rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    /// Whether `rank` is admissible for this family.
    pub fn check_rank(self, rank: usize) -> Result<(), &'static str> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            Family::A => "type A requires rank >= 1",
            Family::B => "type B requires rank >= 2",
            Family::C => "type C requires rank >= 2",
            Family::D => "type D requires rank >= 3",
            Family::E => "type E requires rank 6, 7 or 8",
            Family::F => "type F requires rank 4",
            Family::G => "type G requires rank 2",
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootDataError::UnknownFamily(s.to_string())),
        }
    }
}

/// A simple type such as `E₈` or `D₄`, with a validated rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        family
            .check_rank(rank)
            .map_err(|constraint| RootDataError::InvalidType {
                family,
                rank,
                constraint,
            })?;
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All valid types with rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        Family::ALL
            .iter()
            .flat_map(|&family| {
                (1..=max_rank).filter_map(move |rank| SimpleType::new(family, rank).ok())
            })
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Resource budget for the searches over dominant weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_rank: usize,
    /// Allow enumeration caps above `2^max_rank + 10`.
    pub allow_large_cap: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rank: DEFAULT_MAX_RANK,
            allow_large_cap: false,
        }
    }
}

impl Budget {
    /// Default budget, with the rank overridden by `LIEJORDAN_MAX_RANK` when set.
    pub fn from_env() -> Result<Self, String> {
        let mut budget = Budget::default();
        if let Ok(v) = std::env::var(MAX_RANK_ENV) {
            budget.max_rank = v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_RANK_ENV}={v:?} is not a non-negative integer"))?;
        }
        Ok(budget)
    }

    /// Largest enumeration cap allowed without override: `2^max_rank + 10`.
    pub fn cap_limit(&self) -> u64 {
        1u64.checked_shl(self.max_rank as u32)
            .unwrap_or(u64::MAX)
            .saturating_add(10)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), RootDataError> {
        if rank > self.max_rank {
            return Err(RootDataError::RankOverBudget {
                rank,
                max_rank: self.max_rank,
            });
        }
        Ok(())
    }

    pub fn check_cap(&self, cap: u64) -> Result<(), RootDataError> {
        if cap == 0 {
            return Err(RootDataError::ZeroCap);
        }
        if !self.allow_large_cap && cap > self.cap_limit() {
            return Err(RootDataError::CapOverBudget {
                cap,
                limit: self.cap_limit(),
            });
        }
        Ok(())
    }
}

/// A dominant weight `λ = Σ λ_i ϖ_i`, stored by its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(coords: Vec<u32>) -> Self {
        DominantWeight(coords)
    }

    /// The fundamental weight `ϖ_i` (1-based, as in the node numbering).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "node {i} out of range 1..={rank}");
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        DominantWeight(c)
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DominantWeight {
    type Err = String;

    /// Parses `1,0,2` (whitespace insensitive, optional surrounding parentheses).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err("empty weight".to_string());
        }
        s.split(',')
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| format!("invalid weight coordinate {p:?}"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DominantWeight)
    }
}

/// Cartan matrix, positive coroots and `ρ` for one simple type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    ty: SimpleType,
    cartan: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<u32>>,
    rho: Vec<u32>,
}

impl RootDatum {
    pub fn new(ty: SimpleType) -> Self {
        let cartan = cartan_matrix(ty);
        let positive_coroots = positive_roots(&transpose(&cartan));
        RootDatum {
            ty,
            rho: vec![1; ty.rank()],
            cartan,
            positive_coroots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive coroots in the simple-coroot basis, sorted by height then lexicographically.
    pub fn positive_coroots(&self) -> &[Vec<u32>] {
        &self.positive_coroots
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn cartan_determinant(&self) -> u64 {
        linalg::determinant(&self.cartan)
            .to_u64()
            .expect("Cartan determinant of a simple type is a small positive integer")
    }

    /// Inverse Cartan matrix; row `j` holds the fundamental coweight `ϖ_j^∨`
    /// in simple-coroot coordinates.
    pub fn inverse_cartan(&self) -> Vec<Vec<BigRational>> {
        linalg::inverse(&self.cartan).expect("Cartan matrix of a simple type is invertible")
    }

    fn check_weight(&self, weight: &DominantWeight) -> Result<(), RootDataError> {
        if weight.rank() != self.rank() {
            return Err(RootDataError::RankMismatch {
                expected: self.rank(),
                got: weight.rank(),
            });
        }
        Ok(())
    }

    /// Weyl's product `Π ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩` as a reduced rational.
    pub fn weyl_dim_ratio(&self, weight: &DominantWeight) -> Result<BigRational, RootDataError> {
        self.check_weight(weight)?;
        let (num, den) = self.weyl_products(weight.coords());
        Ok(BigRational::new(num.into(), den.into()))
    }

    /// Dimension of the irreducible representation with highest weight `weight`.
    pub fn weyl_dim(&self, weight: &DominantWeight) -> Result<BigUint, RootDataError> {
        self.check_weight(weight)?;
        Ok(self.weyl_dim_unchecked(weight.coords()))
    }

    fn weyl_dim_unchecked(&self, coords: &[u32]) -> BigUint {
        let (num, den) = self.weyl_products(coords);
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(
            r.is_zero(),
            "Weyl product for {} at {coords:?} is not integral",
            self.ty
        );
        q
    }

    fn weyl_products(&self, coords: &[u32]) -> (BigUint, BigUint) {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for c in &self.positive_coroots {
            let shifted: u64 = c
                .iter()
                .zip(coords)
                .map(|(&ci, &li)| u64::from(ci) * (u64::from(li) + 1))
                .sum();
            let height: u64 = c.iter().map(|&ci| u64::from(ci)).sum();
            num *= shifted;
            den *= height;
        }
        (num, den)
    }

    /// All nonzero dominant weights of dimension at most `cap`, ordered by
    /// dimension and then lexicographically.
    ///
    /// Depth-first over coordinates: raising one coordinate strictly raises the
    /// dimension, so a branch stops at the first value whose partial weight
    /// (remaining coordinates zero) already exceeds `cap`.
    pub fn enumerate_dominant_weights(
        &self,
        cap: u64,
        budget: &Budget,
    ) -> Result<Vec<(DominantWeight, u64)>, RootDataError> {
        budget.check_cap(cap)?;
        let cap_big = BigUint::from(cap);
        let mut coords = vec![0u32; self.rank()];
        let mut out = Vec::new();
        self.extend(0, &mut coords, &cap_big, &mut out);
        out.sort_by(|(a, da), (b, db)| da.cmp(db).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn extend(
        &self,
        pos: usize,
        coords: &mut Vec<u32>,
        cap: &BigUint,
        out: &mut Vec<(DominantWeight, u64)>,
    ) {
        let mut v = 0u32;
        loop {
            coords[pos] = v;
            let dim = self.weyl_dim_unchecked(coords);
            if &dim > cap {
                break;
            }
            if pos + 1 < coords.len() {
                self.extend(pos + 1, coords, cap, out);
            } else if coords.iter().any(|&c| c != 0) {
                out.push((
                    DominantWeight(coords.clone()),
                    dim.to_u64().expect("bounded by cap"),
                ));
            }
            v += 1;
        }
        coords[pos] = 0;
    }
}

/// Convenience wrapper matching [`RootDatum::new`] after validating the type.
pub fn build_root_datum(family: Family, rank: usize) -> Result<RootDatum, RootDataError> {
    Ok(RootDatum::new(SimpleType::new(family, rank)?))
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Cartan matrix in OV numbering, `a[i][j] = ⟨α_i^∨, α_j⟩`.
fn cartan_matrix(ty: SimpleType) -> Vec<Vec<i64>> {
    let l = ty.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // simply laced edge between 0-based nodes i and j
    let mut link = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
        a[i][j] = a_ij;
        a[j][i] = a_ji;
    };
    match ty.family() {
        Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            // node l short
            link(l - 2, l - 1, -1, -2);
        }
        Family::C => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            // node l long
            link(l - 2, l - 1, -2, -1);
        }
        Family::D => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 3, l - 1, -1, -1);
        }
        Family::E => {
            let branch = match l {
                6 => 2,
                7 => 3,
                _ => 4,
            };
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(branch, l - 1, -1, -1);
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    a
}

/// Positive roots of the system with Cartan matrix `a` (`a[i][j] = ⟨α_i^∨, α_j⟩`),
/// in simple-root coordinates, by closing the simple roots under simple
/// reflections and keeping the positive images. Every positive root is
/// reachable from a simple root through positive roots, so this is complete.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let l = a.len();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier = simple;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..l {
                // s_i(β) = β - ⟨β, α_i^∨⟩ α_i
                let pairing: i64 = (0..l).map(|j| beta[j] * a[i][j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[i] -= pairing;
                if image.iter().all(|&x| x >= 0) && seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Vec<u32>> = seen
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as u32).collect())
        .collect();
    roots.sort_by(|x, y| {
        let hx: u32 = x.iter().sum();
        let hy: u32 = y.iter().sum();
        hx.cmp(&hy).then_with(|| x.cmp(y))
    });
    roots
}

/// Checks the structural invariants of a root datum; returns the first violation.
#[allow(clippy::needless_range_loop)]
pub fn check_invariants(datum: &RootDatum) -> Result<(), String> {
    let l = datum.rank();
    let a = datum.cartan();
    for i in 0..l {
        if a[i][i] != 2 {
            return Err(format!("diagonal entry {i} is {}", a[i][i]));
        }
        for j in 0..l {
            if i != j && a[i][j] > 0 {
                return Err(format!("off-diagonal entry ({i},{j}) is positive"));
            }
        }
    }
    if !linalg::determinant(a).is_positive() {
        return Err("Cartan determinant is not positive".into());
    }
    let roots: BTreeSet<&Vec<u32>> = datum.positive_coroots().iter().collect();
    for i in 1..=l {
        if !roots.contains(&DominantWeight::fundamental(l, i).0) {
            return Err(format!("simple coroot {i} missing"));
        }
    }
    if roots.iter().any(|r| r.iter().all(|&x| x == 0)) {
        return Err("zero vector among positive coroots".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, l: usize) -> RootDatum {
        build_root_datum(f, l).unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::C, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        let err = SimpleType::new(Family::F, 5).unwrap_err();
        assert!(err.to_string().contains("type F requires rank 4"));
        assert!(SimpleType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn a1_datum() {
        let d = datum(Family::A, 1);
        assert_eq!(d.cartan(), &[vec![2]]);
        assert_eq!(d.positive_coroots(), &[vec![1]]);
    }

    #[test]
    fn g2_and_e8_coroot_counts() {
        assert_eq!(datum(Family::G, 2).positive_coroots().len(), 6);
        assert_eq!(datum(Family::E, 8).positive_coroots().len(), 120);
    }

    #[test]
    fn g2_highest_coroot() {
        // α1 short, so α1∨ is the long simple coroot: highest coroot 2α1∨ + 3α2∨
        let d = datum(Family::G, 2);
        assert_eq!(d.positive_coroots().last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn weyl_dim_examples() {
        for l in 1..=9 {
            let d = datum(Family::A, l);
            assert_eq!(
                d.weyl_dim(&DominantWeight::zero(l)).unwrap(),
                BigUint::one()
            );
            assert_eq!(
                d.weyl_dim(&DominantWeight::fundamental(l, 1)).unwrap(),
                BigUint::from(l as u64 + 1)
            );
        }
        let e8 = datum(Family::E, 8);
        assert_eq!(
            e8.weyl_dim(&DominantWeight::fundamental(8, 1)).unwrap(),
            BigUint::from(248u32)
        );
        let b5 = datum(Family::B, 5);
        assert_eq!(
            b5.weyl_dim(&DominantWeight::fundamental(5, 5)).unwrap(),
            BigUint::from(32u32)
        );
    }

    #[test]
    fn first_fundamental_pins_numbering() {
        let cases = [
            (Family::E, 6, 27u32),
            (Family::E, 7, 56),
            (Family::E, 8, 248),
            (Family::F, 4, 26),
            (Family::G, 2, 7),
        ];
        for (f, l, dim) in cases {
            let d = datum(f, l);
            assert_eq!(
                d.weyl_dim(&DominantWeight::fundamental(l, 1)).unwrap(),
                BigUint::from(dim),
                "{f}{l}"
            );
        }
    }

    #[test]
    fn d_spin_nodes() {
        for l in 3..=9 {
            let d = datum(Family::D, l);
            let spin = BigUint::from(1u64 << (l - 1));
            assert_eq!(
                d.weyl_dim(&DominantWeight::fundamental(l, l)).unwrap(),
                spin
            );
            assert_eq!(
                d.weyl_dim(&DominantWeight::fundamental(l, l - 1)).unwrap(),
                spin
            );
            assert_eq!(
                d.weyl_dim(&DominantWeight::fundamental(l, 1)).unwrap(),
                BigUint::from(2 * l as u64)
            );
        }
    }

    #[test]
    fn weyl_dim_rank_mismatch() {
        let d = datum(Family::B, 3);
        assert_eq!(
            d.weyl_dim(&DominantWeight::new(vec![1, 0])),
            Err(RootDataError::RankMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn enumerate_examples() {
        let budget = Budget::default();
        let a1 = datum(Family::A, 1);
        assert_eq!(
            a1.enumerate_dominant_weights(3, &budget).unwrap(),
            vec![
                (DominantWeight::new(vec![1]), 2),
                (DominantWeight::new(vec![2]), 3)
            ]
        );
        assert!(datum(Family::G, 2)
            .enumerate_dominant_weights(6, &budget)
            .unwrap()
            .is_empty());
        let e7 = datum(Family::E, 7)
            .enumerate_dominant_weights(56, &budget)
            .unwrap();
        assert!(e7.contains(&(DominantWeight::fundamental(7, 1), 56)));
    }

    #[test]
    fn enumerate_cap_guards() {
        let d = datum(Family::A, 2);
        assert_eq!(
            d.enumerate_dominant_weights(0, &Budget::default()),
            Err(RootDataError::ZeroCap)
        );
        assert!(matches!(
            d.enumerate_dominant_weights(523, &Budget::default()),
            Err(RootDataError::CapOverBudget {
                cap: 523,
                limit: 522
            })
        ));
        let permissive = Budget {
            allow_large_cap: true,
            ..Budget::default()
        };
        assert!(d.enumerate_dominant_weights(600, &permissive).is_ok());
    }

    #[test]
    fn parse_weight() {
        assert_eq!(
            " 1, 0 ,2".parse::<DominantWeight>().unwrap(),
            DominantWeight::new(vec![1, 0, 2])
        );
        assert_eq!(
            "(0,1)".parse::<DominantWeight>().unwrap(),
            DominantWeight::new(vec![0, 1])
        );
        assert!("1,-1".parse::<DominantWeight>().is_err());
        assert!("".parse::<DominantWeight>().is_err());
    }

    #[test]
    fn invariants_hold_for_all_budget_types() {
        for ty in SimpleType::all_up_to(9) {
            check_invariants(&RootDatum::new(ty)).unwrap();
        }
    }
}

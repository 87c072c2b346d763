//! Brute-force Jordan constants of explicit finite groups.
//!
//! For a finite group `G` the Jordan constant is the maximum, over all
//! subgroups `F`, of the smallest index `[F:A]` of an abelian subgroup `A`
//! normal in `F`. Everything here is exhaustive over the subgroup lattice.
//!
//! Input format (UTF-8, `#` starts a comment, blank lines ignored):
//!
//! ```text
//! perm 3          table 2
//! 2 1 3           0 1
//! 2 3 1           1 0
//! ```
//!
//! Permutation generators are images of `1..=degree` in one-line notation and
//! compose left to right: `(p·q)(x) = q(p(x))`. Table rows/columns are 0-based
//! element indices with entry `(i, j)` holding `i·j`; index 0 must be the
//! identity.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("generated group exceeds the order limit {limit}")]
    OrderLimit { limit: usize },
    #[error("group of order {order} exceeds the subgroup-lattice limit {limit}")]
    LatticeLimit { order: usize, limit: usize },
}

impl GroupError {
    /// Whether the error comes from a resource guard rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            GroupError::OrderLimit { .. } | GroupError::LatticeLimit { .. }
        )
    }
}

/// Resource guards for closure and lattice enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLimits {
    /// Maximum order of a group generated from permutations (or given as a table).
    pub max_order: usize,
    /// Maximum order for which the full subgroup lattice is built.
    pub max_lattice_order: usize,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits {
            max_order: 5000,
            max_lattice_order: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Permutations {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Table,
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    source: GroupSource,
}

/// A subgroup as a sorted set of element indices, with the generators it was
/// built from.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<u32>,
    generators: Vec<u32>,
    bits: Vec<u64>,
}

/// Serialized as the sorted element indices.
impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn new(mut elements: Vec<u32>, generators: Vec<u32>, order: usize) -> Self {
        elements.sort_unstable();
        let mut bits = vec![0u64; order.div_ceil(64)];
        for &e in &elements {
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        Subgroup {
            elements,
            generators,
            bits,
        }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.bits[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanResult {
    pub order: usize,
    pub jordan_constant: u64,
    #[serde(rename = "witness_subgroup")]
    pub witness: Subgroup,
    /// `b` of a finite group is its order.
    pub b: usize,
}

fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn source(&self) -> &GroupSource {
        &self.source
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.order + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> Vec<Vec<u32>> {
        self.mult.chunks(self.order).map(<[u32]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The group generated by permutations of `1..=degree` (given 0-based).
    pub fn from_permutations(
        degree: usize,
        generators: Vec<Vec<u32>>,
        limits: &GroupLimits,
    ) -> Result<Self, GroupError> {
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let p = compose(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() >= limits.max_order {
                        return Err(GroupError::OrderLimit {
                            limit: limits.max_order,
                        });
                    }
                    index.insert(p.clone(), elements.len() as u32);
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut mult = vec![0u32; n * n];
        for (i, p) in elements.iter().enumerate() {
            for (j, q) in elements.iter().enumerate() {
                mult[i * n + j] = index[&compose(p, q)];
            }
        }
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| mult[i * n + j] == 0).unwrap() as u32)
            .collect();
        Ok(FiniteGroup {
            order: n,
            mult,
            inv,
            source: GroupSource::Permutations { degree, generators },
        })
    }

    /// Validates a Cayley table: identity at index 0, Latin square, associativity.
    #[allow(clippy::needless_range_loop)]
    pub fn from_table(table: Vec<Vec<u32>>, limits: &GroupLimits) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if n > limits.max_order {
            return Err(GroupError::OrderLimit {
                limit: limits.max_order,
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x as usize >= n) {
                return Err(GroupError::NotAGroup(format!(
                    "entry {x} in row {i} is out of range"
                )));
            }
        }
        for i in 0..n {
            if table[0][i] as usize != i || table[i][0] as usize != i {
                return Err(GroupError::NotAGroup(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            for (axis, get) in [("row", 0), ("column", 1)] {
                seen.iter_mut().for_each(|s| *s = false);
                for j in 0..n {
                    let x = if get == 0 { table[i][j] } else { table[j][i] } as usize;
                    if std::mem::replace(&mut seen[x], true) {
                        return Err(GroupError::NotAGroup(format!(
                            "{axis} {i} repeats element {x}"
                        )));
                    }
                }
            }
        }
        let mult: Vec<u32> = table.into_iter().flatten().collect();
        let inv: Vec<u32> = (0..n)
            .map(|i| (0..n).find(|&j| mult[i * n + j] == 0).unwrap() as u32)
            .collect();
        for (i, &j) in inv.iter().enumerate() {
            if mult[j as usize * n + i] != 0 {
                return Err(GroupError::NotAGroup(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
        }
        let g = FiniteGroup {
            order: n,
            mult,
            inv,
            source: GroupSource::Table,
        };
        g.check_associative()?;
        Ok(g)
    }

    /// Light's test: the elements `g` with `(x·g)·y = x·(g·y)` for all `x, y`
    /// form a submagma, so checking a generating set is enough.
    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order as u32;
        let mut generated = vec![false; self.order];
        generated[0] = true;
        let mut members = vec![0u32];
        let mut gens = Vec::new();
        for candidate in 0..n {
            if generated[candidate as usize] {
                continue;
            }
            gens.push(candidate);
            // magma closure of the generators found so far
            let mut queue: Vec<u32> = members.clone();
            queue.push(candidate);
            if !std::mem::replace(&mut generated[candidate as usize], true) {
                members.push(candidate);
            }
            while let Some(x) = queue.pop() {
                for i in 0..members.len() {
                    let y = members[i];
                    for z in [self.mul(x, y), self.mul(y, x)] {
                        if !std::mem::replace(&mut generated[z as usize], true) {
                            members.push(z);
                            queue.push(z);
                        }
                    }
                }
            }
        }
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(GroupError::NonAssociative {
                            a: x as usize,
                            b: g as usize,
                            c: y as usize,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the `perm` or `table` text format.
    pub fn parse(input: &str, limits: &GroupLimits) -> Result<Self, GroupError> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GroupError::Malformed {
            line: 1,
            message: "empty input".into(),
        })?;
        let mut parts = header.split_whitespace();
        let kind = parts.next().unwrap_or("");
        let size: usize =
            parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GroupError::Malformed {
                    line: hline,
                    message: format!("expected `perm <degree>` or `table <n>`, got {header:?}"),
                })?;
        if parts.next().is_some() {
            return Err(GroupError::Malformed {
                line: hline,
                message: "trailing tokens in header".into(),
            });
        }
        let parse_row = |line: usize, text: &str| -> Result<Vec<u32>, GroupError> {
            text.split_whitespace()
                .map(|t| {
                    t.parse::<u32>().map_err(|_| GroupError::Malformed {
                        line,
                        message: format!("invalid integer {t:?}"),
                    })
                })
                .collect()
        };
        match kind {
            "perm" => {
                if size == 0 {
                    return Err(GroupError::Malformed {
                        line: hline,
                        message: "degree must be positive".into(),
                    });
                }
                let mut gens = Vec::new();
                for (line, text) in lines {
                    let row = parse_row(line, text)?;
                    if row.len() != size {
                        return Err(GroupError::Malformed {
                            line,
                            message: format!("expected {size} images, got {}", row.len()),
                        });
                    }
                    let mut seen = vec![false; size];
                    for &x in &row {
                        if x == 0
                            || x as usize > size
                            || std::mem::replace(&mut seen[x as usize - 1], true)
                        {
                            return Err(GroupError::Malformed {
                                line,
                                message: format!("not a permutation of 1..={size}"),
                            });
                        }
                    }
                    gens.push(row.into_iter().map(|x| x - 1).collect());
                }
                FiniteGroup::from_permutations(size, gens, limits)
            }
            "table" => {
                let rows: Vec<(usize, &str)> = lines.collect();
                if rows.len() != size {
                    return Err(GroupError::Malformed {
                        line: rows.last().map_or(hline, |r| r.0),
                        message: format!("expected {size} table rows, got {}", rows.len()),
                    });
                }
                let table = rows
                    .into_iter()
                    .map(|(line, text)| parse_row(line, text))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::from_table(table, limits)
            }
            other => Err(GroupError::Malformed {
                line: hline,
                message: format!("unknown group format {other:?}; expected `perm` or `table`"),
            }),
        }
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut elements = vec![0u32];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !std::mem::replace(&mut inside[y as usize], true) {
                    elements.push(y);
                }
            }
            i += 1;
        }
        Subgroup::new(elements, gens.to_vec(), self.order)
    }

    /// Every subgroup, ordered by size and then by element set.
    ///
    /// Starts from the trivial subgroup and repeatedly adjoins one element
    /// (one per coset, since `⟨H, g⟩ = ⟨H, gh⟩`); every subgroup is reached by
    /// such a chain.
    pub fn all_subgroups(&self, limits: &GroupLimits) -> Result<Vec<Subgroup>, GroupError> {
        self.check_lattice_limit(limits)?;
        let trivial = self.generate(&[]);
        let mut found: HashMap<Vec<u64>, Subgroup> = HashMap::new();
        found.insert(trivial.bits.clone(), trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            let mut covered = h.bits.clone();
            for g in 0..self.order as u32 {
                if covered[g as usize / 64] >> (g % 64) & 1 == 1 {
                    continue;
                }
                for &x in &h.elements {
                    let y = self.mul(g, x);
                    covered[y as usize / 64] |= 1 << (y % 64);
                }
                let mut gens = h.generators.clone();
                gens.push(g);
                let k = self.generate(&gens);
                if !found.contains_key(&k.bits) {
                    found.insert(k.bits.clone(), k.clone());
                    queue.push_back(k);
                }
            }
        }
        let mut all: Vec<Subgroup> = found.into_values().collect();
        all.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(all)
    }

    fn check_lattice_limit(&self, limits: &GroupLimits) -> Result<(), GroupError> {
        if self.order > limits.max_lattice_order {
            return Err(GroupError::LatticeLimit {
                order: self.order,
                limit: limits.max_lattice_order,
            });
        }
        Ok(())
    }

    pub fn is_abelian_subgroup(&self, a: &Subgroup) -> bool {
        let g = &a.generators;
        g.iter()
            .enumerate()
            .all(|(i, &x)| g[..i].iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Whether `a` is normal in `f`, by conjugating generators of `a` by generators of `f`.
    pub fn is_normal_in(&self, a: &Subgroup, f: &Subgroup) -> bool {
        f.generators.iter().all(|&s| {
            let s_inv = self.inverse(s);
            a.generators
                .iter()
                .all(|&x| a.contains(self.mul(self.mul(s_inv, x), s)))
        })
    }

    /// `min [F:A]` over abelian subgroups `A` normal in `F`; `lattice` must be
    /// the full subgroup list of this group.
    pub fn min_normal_abelian_index(&self, f: &Subgroup, lattice: &[Subgroup]) -> u64 {
        let abelian: Vec<&Subgroup> = lattice
            .iter()
            .filter(|a| self.is_abelian_subgroup(a))
            .collect();
        self.min_index_among(f, &abelian)
    }

    fn min_index_among(&self, f: &Subgroup, abelian_desc: &[&Subgroup]) -> u64 {
        abelian_desc
            .iter()
            .filter(|a| {
                f.order().is_multiple_of(a.order()) && a.is_subset_of(f) && self.is_normal_in(a, f)
            })
            .map(|a| (f.order() / a.order()) as u64)
            .min()
            .unwrap_or(f.order() as u64)
    }

    /// `J_G = max_F min_A [F:A]`, with the first subgroup (in lattice order)
    /// attaining it as witness.
    pub fn jordan_constant(&self, limits: &GroupLimits) -> Result<JordanResult, GroupError> {
        let lattice = self.all_subgroups(limits)?;
        let mut abelian: Vec<&Subgroup> = lattice
            .iter()
            .filter(|a| self.is_abelian_subgroup(a))
            .collect();
        abelian.sort_by_key(|a| std::cmp::Reverse(a.order()));
        let indices: Vec<u64> = lattice
            .par_iter()
            .map(|f| {
                if self.is_abelian_subgroup(f) {
                    1
                } else {
                    self.min_index_among(f, &abelian)
                }
            })
            .collect();
        let best = *indices
            .iter()
            .max()
            .expect("lattice contains the trivial subgroup");
        let pos = indices.iter().position(|&v| v == best).unwrap();
        Ok(JordanResult {
            order: self.order,
            jordan_constant: best,
            witness: lattice[pos].clone(),
            b: self.boundedness_constant(),
        })
    }

    /// `b_H = |H|` for a finite group.
    pub fn boundedness_constant(&self) -> usize {
        self.order
    }

    /// The subgroup as a group in its own right, elements relabelled in sorted order.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let pos: HashMap<u32, u32> = h
            .elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let n = h.order();
        let mut mult = vec![0u32; n * n];
        for (i, &a) in h.elements.iter().enumerate() {
            for (j, &b) in h.elements.iter().enumerate() {
                mult[i * n + j] = pos[&self.mul(a, b)];
            }
        }
        let inv = h.elements.iter().map(|&a| pos[&self.inverse(a)]).collect();
        FiniteGroup {
            order: n,
            mult,
            inv,
            source: GroupSource::Table,
        }
    }
}

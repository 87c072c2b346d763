//! Jordan-constant bounds in exact arithmetic.
//!
//! `J(n)` is the Jordan constant of `GL_n` over an algebraically closed field
//! of characteristic zero. It is known to equal `(n+1)!` for `n ≥ 71` and for
//! `n ∈ {63, 65, 67, 69}`; everywhere else in `1..71` it stays a symbolic atom
//! `J(n)`. `J(0) = 1` is a convention (the trivial group), as are the `n = 0`
//! results of the family bounds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Largest `J`-argument whose factorial is materialised by default.
pub const DEFAULT_FACTORIAL_LIMIT: u64 = 50_000;

const EXACT_SPORADIC: [u64; 4] = [63, 65, 67, 69];

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("J({arg}) = ({arg}+1)! exceeds the factorial limit {limit}")]
    FactorialTooLarge { arg: BigUint, limit: u64 },
    #[error("the J-argument of the {family:?} bound at n = {n} has more than 64 bits and exceeds the factorial limit {limit}")]
    ArgumentTooLarge {
        family: FamilyOfGroups,
        n: u64,
        limit: u64,
    },
    #[error("the exact bound would have about {bits} bits, above the limit of {limit}")]
    ResultTooLarge { bits: u64, limit: u64 },
}

/// Largest exact result materialised by default, in bits (about 5 million digits).
pub const DEFAULT_RESULT_BITS_LIMIT: u64 = 1 << 24;

/// Whether `J(n) = (n+1)!` is known exactly.
pub fn is_exact_range(n: u64) -> bool {
    n >= 71 || EXACT_SPORADIC.contains(&n)
}

/// An evaluated bound: an exact integer, or an expression over unevaluated
/// `J(m)` atoms. Expressions without atoms are always collapsed to `Exact`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundExpr {
    Exact {
        #[serde(with = "decimal")]
        value: BigUint,
    },
    SymbolicJ {
        arg: u64,
    },
    Product {
        operands: Vec<BoundExpr>,
    },
    Power {
        #[serde(with = "single_operand")]
        operands: Box<BoundExpr>,
        exponent: u64,
    },
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("invalid decimal {s:?}")))
    }
}

mod single_operand {
    use super::BoundExpr;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    #[allow(clippy::borrowed_box)]
    pub fn serialize<S: Serializer>(v: &Box<BoundExpr>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(std::iter::once(v.as_ref()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Box<BoundExpr>, D::Error> {
        let mut v = Vec::<BoundExpr>::deserialize(d)?;
        if v.len() != 1 {
            return Err(D::Error::custom("power takes exactly one operand"));
        }
        Ok(Box::new(v.pop().unwrap()))
    }
}

impl BoundExpr {
    pub fn exact(value: impl Into<BigUint>) -> Self {
        BoundExpr::Exact {
            value: value.into(),
        }
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            BoundExpr::Exact { value } => Some(value),
            _ => None,
        }
    }

    /// Whether some `J(m)` atom remains.
    pub fn is_symbolic(&self) -> bool {
        match self {
            BoundExpr::Exact { .. } => false,
            BoundExpr::SymbolicJ { .. } => true,
            BoundExpr::Product { operands } => operands.iter().any(BoundExpr::is_symbolic),
            BoundExpr::Power { operands, .. } => operands.is_symbolic(),
        }
    }

    /// `factor · base^exponent`, normalised: exact parts are multiplied out,
    /// unit factors and unit exponents disappear.
    pub fn scaled_power(factor: u64, base: BoundExpr, exponent: u64) -> BoundExpr {
        let power = match base {
            BoundExpr::Exact { value } => BoundExpr::exact(Pow::pow(value, exponent)),
            b if exponent == 1 => b,
            b => BoundExpr::Power {
                operands: Box::new(b),
                exponent,
            },
        };
        match power {
            BoundExpr::Exact { value } => BoundExpr::exact(value * factor),
            p if factor == 1 => p,
            p => BoundExpr::Product {
                operands: vec![BoundExpr::exact(factor), p],
            },
        }
    }

    /// Collapses every atom-free subtree to `Exact`.
    pub fn normalize(self) -> BoundExpr {
        match self {
            BoundExpr::Product { operands } => {
                let mut exact = BigUint::one();
                let mut rest = Vec::new();
                for op in operands.into_iter().map(BoundExpr::normalize) {
                    match op {
                        BoundExpr::Exact { value } => exact *= value,
                        other => rest.push(other),
                    }
                }
                if rest.is_empty() {
                    return BoundExpr::exact(exact);
                }
                if !exact.is_one() {
                    rest.insert(0, BoundExpr::exact(exact));
                }
                if rest.len() == 1 {
                    rest.pop().unwrap()
                } else {
                    BoundExpr::Product { operands: rest }
                }
            }
            BoundExpr::Power { operands, exponent } => match operands.normalize() {
                BoundExpr::Exact { value } => BoundExpr::exact(Pow::pow(value, exponent)),
                b if exponent == 1 => b,
                b => BoundExpr::Power {
                    operands: Box::new(b),
                    exponent,
                },
            },
            other => other,
        }
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundExpr::Exact { value } => write!(f, "{value}"),
            BoundExpr::SymbolicJ { arg } => write!(f, "J({arg})"),
            BoundExpr::Product { operands } => {
                let parts: Vec<String> = operands.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" * "))
            }
            BoundExpr::Power { operands, exponent } => match operands.as_ref() {
                BoundExpr::Product { .. } => write!(f, "({operands})^{exponent}"),
                b => write!(f, "{b}^{exponent}"),
            },
        }
    }
}

/// `n!` by a balanced product tree.
pub fn factorial(n: u64) -> BigUint {
    fn range_product(lo: u64, hi: u64) -> BigUint {
        // product of lo..=hi
        if lo > hi {
            return BigUint::one();
        }
        if hi - lo < 16 {
            return (lo..=hi).fold(BigUint::one(), |acc, k| acc * k);
        }
        let mid = lo + (hi - lo) / 2;
        range_product(lo, mid) * range_product(mid + 1, hi)
    }
    range_product(2, n)
}

/// Evaluates `J(n)` under a factorial-size limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluator {
    pub factorial_limit: u64,
    pub result_bits_limit: u64,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            factorial_limit: DEFAULT_FACTORIAL_LIMIT,
            result_bits_limit: DEFAULT_RESULT_BITS_LIMIT,
        }
    }
}

/// Families of groups with a uniform Jordan bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyOfGroups {
    /// Real Lie groups with bounded component group.
    Lie,
    /// Connected real Lie groups.
    LieConnected,
    /// Algebraic groups over an algebraically closed field of characteristic 0.
    Algebraic,
    /// Identity components of automorphism groups of compact complex manifolds.
    CompactComplex,
    /// Identity components of automorphism groups of Kobayashi-hyperbolic manifolds.
    Hyperbolic,
    /// Point stabilizers in automorphism groups of hyperbolic manifolds.
    HyperbolicStabilizer,
    /// Identity components of isometry groups of Riemannian manifolds.
    Riemannian,
}

impl FamilyOfGroups {
    pub const ALL: [FamilyOfGroups; 7] = [
        FamilyOfGroups::Lie,
        FamilyOfGroups::LieConnected,
        FamilyOfGroups::Algebraic,
        FamilyOfGroups::CompactComplex,
        FamilyOfGroups::Hyperbolic,
        FamilyOfGroups::HyperbolicStabilizer,
        FamilyOfGroups::Riemannian,
    ];

    /// Whether the component count `b` enters the bound.
    pub fn uses_components(self) -> bool {
        matches!(self, FamilyOfGroups::Lie | FamilyOfGroups::Algebraic)
    }
}

/// Dimension and component bound of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDims {
    pub n: u64,
    /// `b_{G/G⁰}` for Lie groups, `[G:G⁰]` for algebraic groups.
    pub b: u64,
}

impl GroupDims {
    pub fn new(n: u64, b: u64) -> Self {
        assert!(b >= 1, "component bound must be at least 1");
        GroupDims { n, b }
    }

    pub fn connected(n: u64) -> Self {
        GroupDims { n, b: 1 }
    }
}

/// Exponent of the power of two inside a family's `J`-argument (`None` on overflow).
fn power_of_two_exponent(family: FamilyOfGroups, n: u64) -> Option<u64> {
    match family {
        FamilyOfGroups::Lie | FamilyOfGroups::LieConnected => Some(n),
        FamilyOfGroups::Algebraic => n.checked_mul(2)?.checked_add(1),
        FamilyOfGroups::CompactComplex => n.checked_mul(n)?.checked_mul(2)?.checked_add(n),
        FamilyOfGroups::Hyperbolic => n.checked_mul(n)?.checked_add(n.checked_mul(2)?),
        FamilyOfGroups::HyperbolicStabilizer => Some(0),
        FamilyOfGroups::Riemannian => Some(n.checked_mul(n)?.checked_add(n)?.saturating_sub(2) / 2),
    }
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `m(2^m + 10)`: the degree of `GL` into which every connected `m`-dimensional
/// real Lie group's maximal compact subgroup embeds.
pub fn lie_argument(m: u64) -> BigUint {
    BigUint::from(m) * (pow2(m) + 10u32)
}

/// `n(2^{2n+1} + 20)`.
pub fn algebraic_argument(n: u64) -> BigUint {
    BigUint::from(n) * (pow2(2 * n + 1) + 20u32)
}

/// `(2n²+n)(2^{2n²+n} + 10)`.
pub fn compact_complex_argument(n: u64) -> BigUint {
    let m = 2 * n * n + n;
    BigUint::from(m) * (pow2(m) + 10u32)
}

/// `(2n+n²)(2^{2n+n²} + 10)`.
pub fn hyperbolic_argument(n: u64) -> BigUint {
    let m = 2 * n + n * n;
    BigUint::from(m) * (pow2(m) + 10u32)
}

/// `(n²+n)(2^{(n²+n-2)/2} + 5)`, only for `n ≥ 1`.
pub fn riemannian_argument(n: u64) -> BigUint {
    assert!(n >= 1, "the Riemannian argument is defined for n >= 1");
    let s = n * n + n;
    BigUint::from(s) * (pow2((s - 2) / 2) + 5u32)
}

impl Evaluator {
    pub fn new(factorial_limit: u64) -> Self {
        Evaluator {
            factorial_limit,
            ..Evaluator::default()
        }
    }

    /// Rejects `n` whose `J`-argument is too large to even write down.
    fn check_argument(&self, family: FamilyOfGroups, n: u64) -> Result<(), BoundError> {
        match power_of_two_exponent(family, n) {
            Some(e) if e < 64 => Ok(()),
            _ => Err(BoundError::ArgumentTooLarge {
                family,
                n,
                limit: self.factorial_limit,
            }),
        }
    }

    fn scaled(&self, b: u64, j: BoundExpr) -> Result<BoundExpr, BoundError> {
        if let Some(v) = j.as_exact() {
            let bits = v.bits().saturating_mul(b).saturating_add(64);
            if bits > self.result_bits_limit {
                return Err(BoundError::ResultTooLarge {
                    bits,
                    limit: self.result_bits_limit,
                });
            }
        }
        Ok(BoundExpr::scaled_power(b, j, b))
    }

    /// `J(n)`: `(n+1)!` in the exact range, `1` at `n = 0`, symbolic otherwise.
    pub fn jordan_gl(&self, n: u64) -> Result<BoundExpr, BoundError> {
        if n == 0 {
            return Ok(BoundExpr::exact(1u32));
        }
        if !is_exact_range(n) {
            return Ok(BoundExpr::SymbolicJ { arg: n });
        }
        if n > self.factorial_limit {
            return Err(BoundError::FactorialTooLarge {
                arg: n.into(),
                limit: self.factorial_limit,
            });
        }
        Ok(BoundExpr::exact(factorial(n + 1)))
    }

    fn jordan_gl_big(&self, m: &BigUint) -> Result<BoundExpr, BoundError> {
        match m.to_u64() {
            Some(m) => self.jordan_gl(m),
            None => Err(BoundError::FactorialTooLarge {
                arg: m.clone(),
                limit: self.factorial_limit,
            }),
        }
    }

    /// `b · J(n(2^n+10))^b`.
    pub fn bound_lie(&self, dims: GroupDims) -> Result<BoundExpr, BoundError> {
        self.check_argument(FamilyOfGroups::Lie, dims.n)?;
        let j = self.jordan_gl_big(&lie_argument(dims.n))?;
        self.scaled(dims.b, j)
    }

    /// `J(n(2^n+10))`.
    pub fn bound_lie_connected(&self, n: u64) -> Result<BoundExpr, BoundError> {
        self.bound_lie(GroupDims::connected(n))
    }

    /// `[G:G⁰] · J(n(2^{2n+1}+20))^{[G:G⁰]}`.
    pub fn bound_algebraic(&self, dims: GroupDims) -> Result<BoundExpr, BoundError> {
        self.check_argument(FamilyOfGroups::Algebraic, dims.n)?;
        let j = self.jordan_gl_big(&algebraic_argument(dims.n))?;
        self.scaled(dims.b, j)
    }

    pub fn bound_compact_complex(&self, n: u64) -> Result<BoundExpr, BoundError> {
        self.check_argument(FamilyOfGroups::CompactComplex, n)?;
        self.jordan_gl_big(&compact_complex_argument(n))
    }

    pub fn bound_hyperbolic(&self, n: u64) -> Result<BoundExpr, BoundError> {
        self.check_argument(FamilyOfGroups::Hyperbolic, n)?;
        self.jordan_gl_big(&hyperbolic_argument(n))
    }

    /// `J(n)`: point stabilizers act faithfully through the unitary group.
    pub fn stabilizer_bound_hyperbolic(&self, n: u64) -> Result<BoundExpr, BoundError> {
        self.jordan_gl(n)
    }

    pub fn bound_riemannian(&self, n: u64) -> Result<BoundExpr, BoundError> {
        if n == 0 {
            return Ok(BoundExpr::exact(1u32));
        }
        self.check_argument(FamilyOfGroups::Riemannian, n)?;
        self.jordan_gl_big(&riemannian_argument(n))
    }

    /// Dispatches on the family; `b` is ignored for families without components.
    pub fn bound(&self, family: FamilyOfGroups, dims: GroupDims) -> Result<BoundExpr, BoundError> {
        match family {
            FamilyOfGroups::Lie => self.bound_lie(dims),
            FamilyOfGroups::LieConnected => self.bound_lie_connected(dims.n),
            FamilyOfGroups::Algebraic => self.bound_algebraic(dims),
            FamilyOfGroups::CompactComplex => self.bound_compact_complex(dims.n),
            FamilyOfGroups::Hyperbolic => self.bound_hyperbolic(dims.n),
            FamilyOfGroups::HyperbolicStabilizer => self.stabilizer_bound_hyperbolic(dims.n),
            FamilyOfGroups::Riemannian => self.bound_riemannian(dims.n),
        }
    }
}

/// The `J`-argument of a family bound, without evaluating `J`. `None` for the
/// `n = 0` conventions that skip the formula.
pub fn family_argument(family: FamilyOfGroups, n: u64) -> Option<BigUint> {
    match family {
        FamilyOfGroups::Lie | FamilyOfGroups::LieConnected => Some(lie_argument(n)),
        FamilyOfGroups::Algebraic => Some(algebraic_argument(n)),
        FamilyOfGroups::CompactComplex => Some(compact_complex_argument(n)),
        FamilyOfGroups::Hyperbolic => Some(hyperbolic_argument(n)),
        FamilyOfGroups::HyperbolicStabilizer => Some(n.into()),
        FamilyOfGroups::Riemannian => (n >= 1).then(|| riemannian_argument(n)),
    }
}

/// Checks that the compact-complex, hyperbolic and Riemannian arguments are the
/// connected Lie argument `m(2^m+10)` at the dimension caps `2n²+n`, `2n+n²`
/// and `n(n+1)/2` respectively.
pub fn consistency_check_bounds(n: u64) -> bool {
    assert!(n >= 1);
    compact_complex_argument(n) == lie_argument(2 * n * n + n)
        && hyperbolic_argument(n) == lie_argument(2 * n + n * n)
        && riemannian_argument(n) == lie_argument(n * (n + 1) / 2)
}

/// Number of decimal digits and the leading `k` digits.
pub fn digit_summary(v: &BigUint, k: usize) -> (usize, String) {
    let s = v.to_str_radix(10);
    let lead = s.chars().take(k).collect();
    (s.len(), lead)
}

//! Exact computations around the Jordan property of Lie and algebraic groups.
//!
//! * [`rootdata`]: Cartan matrices, positive coroots, Weyl's dimension formula
//!   and enumeration of small dominant weights for every simple type.
//! * [`center`]: center classes of the simply connected group, the
//!   weight/center pairing and the faithfulness test for a set of weights.
//! * [`minfaithful`]: minimal dimension of a faithful representation via an
//!   exact weighted set cover over center classes.
//! * [`bounds`]: `J(n)` where it is known exactly and the Jordan-constant
//!   bounds for Lie, algebraic and automorphism/isometry groups.
//! * [`finitegroup`]: brute-force Jordan constants of explicit finite groups.

pub mod bounds;
pub mod center;
pub mod finitegroup;
mod linalg;
pub mod minfaithful;
pub mod rootdata;

pub use bounds::{BoundError, BoundExpr, Evaluator, FamilyOfGroups, GroupDims};
pub use center::{CenterClass, CenterError, WeightSet};
pub use finitegroup::{FiniteGroup, GroupError, GroupLimits, JordanResult, Subgroup};
pub use minfaithful::{RdimError, RdimResult, TableRow};
pub use rootdata::{Budget, DominantWeight, Family, RootDataError, RootDatum, SimpleType};

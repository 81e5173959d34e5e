//! Exact computation of relative dimension subgroups and relative Fox subgroups of
//! finite groups.
//!
//! The crate offers two independent routes to the same subgroups:
//!
//! * brute force: linear algebra over Z or Z/m inside the group ring, see [`groupring`];
//! * closed formulas built from commutators, powers and torsion sets, see [`formulas`].
//!
//! Supporting layers are finite groups as Cayley tables ([`group`], [`families`],
//! [`subgroup`]) and exact calculus on finitely generated abelian groups ([`abelian`]).

pub mod abelian;
pub mod bitset;
pub mod coeff;
pub mod echelon;
pub mod error;
pub mod families;
pub mod formulas;
pub mod group;
pub mod groupring;
pub mod smith;
pub mod subgroup;

pub use abelian::{AbHom, AbSubgroup, FgAb};
pub use error::{Error, Result};
pub use families::{build_group, build_group_with_cap, class2_counterexample, Family, GroupSpec};
pub use group::{Elem, FiniteGroup, DEFAULT_ORDER_CAP};
pub use groupring::{CoeffRing, RModuleSpan};
pub use subgroup::{NSeries, Subgroup};

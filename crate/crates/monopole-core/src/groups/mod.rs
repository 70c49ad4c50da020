//! Finite groups of unit quaternions: closure generation, conjugacy classes,
//! Casimir class sums, cyclic subgroups, coset spaces, character tables and
//! induced-representation multiplicities.

mod characters;
mod classes;
mod cosets;
mod group;

pub use characters::{induced_decomposition, CharacterTable, CyclicCharacter};
pub use classes::{
    casimir_from_classes, casimir_eigenvalue, class_of_elements, conjugacy_classes,
    CasimirElement, ConjClass,
};
pub use cosets::{
    canonical_cyclic_subgroup, coset_space, cyclic_subgroups_of_order, CosetSpace, Subgroup,
};
pub use group::{generators, FiniteGroup, GroupSummary, DEFAULT_CLOSURE_BOUND};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("group closure exceeded {bound} elements; generator set is wrong or non-finite")]
    ClosureOverflow { bound: usize },
    #[error("no cyclic subgroup of order {order}")]
    NoneFound { order: usize },
    #[error("class-matrix combination stayed degenerate after {retries} retries")]
    DegenerateCombination { retries: usize },
    #[error("induced multiplicity for irrep {irrep} is {value}, not a non-negative integer")]
    NonIntegerMultiplicity { irrep: usize, value: f64 },
}

//! The case catalog: monopole families on the four admissible Platonic
//! graphs, the exhaustive Casimir search, the dodecahedron obstruction
//! certificate and the pentadodecahedral multigraph extension.

mod catalog;
mod nogo;
mod penta;
mod search;

pub use catalog::{
    build_catalog, laplacian_lines, build_case_with_subgroup, Catalog, CharacterRow, GroupData,
    MonopoleCase, MonopoleRow,
};
pub use nogo::{dodecahedron_no_go, NoGoCertificate};
pub use penta::{pentadodecahedral_case, PentaCase, PentaContribution, PentaRow};
pub use search::{find_good_casimirs, inverse_closed_unions};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MonopoleError {
    #[error("catalog construction failed a consistency check: {0}")]
    CatalogInconsistent(String),
    #[error("obstruction certificate check failed: {0}")]
    CertificateFailed(String),
    #[error("Chern number {chern} outside the admissible range [-{max}, {max}]")]
    OutOfRange { chern: i64, max: i64 },
    #[error("Chern number {chern} is reached by phase powers only; no character backs it")]
    DegenerateCharacter { chern: i64 },
}

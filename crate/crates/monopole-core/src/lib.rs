//! Discrete analogues of the Dirac magnetic monopole on Platonic-solid graphs.
//!
//! The pipeline: exact quaternion arithmetic over Q(√2,√5) builds the binary
//! polyhedral groups 2T, 2O, 2I; class sums (Casimir elements) acting on coset
//! spaces G/H produce the polyhedral graphs; characters of the cyclic stabilizer
//! H induce U(1) edge phases whose magnetic adjacency/Laplacian spectra are
//! computed both by dense Hermitian diagonalization and by decomposing the
//! induced representation with Frobenius reciprocity.

pub mod algebra;
pub mod graphs;
pub mod magnetic;
pub mod monopoles;
pub mod groups;
pub mod spectra;

pub use algebra::{AlgebraicScalar, Quaternion};
pub use graphs::{CosetGraph, GraphMode, PlanarEmbedding, Solid};
pub use magnetic::{HermitianMatrix, InducedCasimirMatrix, MagneticPotential};
pub use monopoles::{Catalog, MonopoleCase, MonopoleError, NoGoCertificate, PentaCase};
pub use groups::{
    CasimirElement, CharacterTable, ConjClass, CosetSpace, CyclicCharacter, FiniteGroup, Subgroup,
};
pub use spectra::{Spectrum, SpectrumLine, SpectrumMethod, WuYangLine};
pub use spectra::{cluster_multiplicities, frobenius_spectrum, hermitian_eigenvalues, wu_yang_spectrum};

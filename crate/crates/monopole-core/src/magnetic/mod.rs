//! Magnetic structures on coset graphs: induced Casimir matrices, U(1) edge
//! potentials from characters of the stabilizer, gauge transformations,
//! fluxes and Chern numbers.

mod induced;
mod matrix;
mod potential;

pub use induced::{induced_casimir_matrix, magnetic_adjacency, InducedCasimirMatrix};
pub use matrix::{magnetic_laplacian, phase_power, HermitianMatrix};
pub use potential::{
    chern_number, flux, gauge_transform, magnetic_potential, unit_potential, MagneticPotential,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MagneticError {
    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:.3e}")]
    NotHermitian { max_asymmetry: f64 },
    #[error("off-diagonal moduli vary from {min:.12} to {max:.12}; triple is not good")]
    NonConstantModulus { min: f64, max: f64 },
    #[error("character sum vanishes on an edge; the potential is degenerate")]
    DegenerateSum,
    #[error("vertex list is not a closed cycle of adjacent vertices")]
    NotACycle,
    #[error("face-flux sum / 2π = {value} is not an integer")]
    NonIntegerChern { value: f64 },
}

/// Reduce an angle to the principal branch (−π, π].
pub(crate) fn principal_angle(angle: f64) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let r = angle.rem_euclid(tau);
    if r > std::f64::consts::PI {
        r - tau
    } else {
        r
    }
}

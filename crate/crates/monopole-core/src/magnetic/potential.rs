//! U(1) vector potentials on graphs: edge phases, gauge moves, flux, Chern numbers.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde_json::json;

use super::matrix::HermitianMatrix;
use super::{principal_angle, MagneticError};
use crate::magnetic::InducedCasimirMatrix;
use crate::PlanarEmbedding;

/// Unit phase attached to every directed edge of a graph, with
/// `phase(y, x) = phase(x, y).conj()`.
#[derive(Debug, Clone, PartialEq)]
pub struct MagneticPotential {
    phases: BTreeMap<(usize, usize), Complex64>,
    vertex_count: usize,
}

impl MagneticPotential {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Unit phase carried by the directed edge x -> y, if x ~ y.
    pub fn phase(&self, x: usize, y: usize) -> Option<Complex64> {
        self.phases.get(&(x, y)).copied()
    }

    /// Undirected edges as ordered pairs (x, y) with x < y.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.phases.keys().copied().filter(|&(x, y)| x < y).collect()
    }

    /// Dense phased adjacency matrix: entry (y, x) is the phase of x -> y.
    pub fn adjacency(&self) -> HermitianMatrix {
        let n = self.vertex_count;
        let mut entries = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for (&(x, y), &u) in &self.phases {
            entries[y][x] = u;
        }
        HermitianMatrix::new(entries).expect("conjugate-paired phases form a Hermitian matrix")
    }

    /// Edge angles in turns to 12 decimals, keyed by "x-y" over x < y.
    pub fn export(&self) -> serde_json::Value {
        let mut angles = serde_json::Map::new();
        for (x, y) in self.edges() {
            let u = self.phases[&(x, y)];
            let turns = u.im.atan2(u.re) / (2.0 * PI);
            angles.insert(format!("{x}-{y}"), json!((turns * 1e12).round() / 1e12 + 0.0));
        }
        json!({
            "vertex_count": self.vertex_count,
            "edge_angles_turns": angles,
        })
    }
}

/// Reads the vector potential off an induced Casimir matrix by normalising
/// each off-diagonal edge entry to unit modulus.
pub fn magnetic_potential(cm: &InducedCasimirMatrix) -> Result<MagneticPotential, MagneticError> {
    let mut phases = BTreeMap::new();
    for &(x, y) in &cm.edges {
        let entry = cm.matrix[y][x];
        if entry.norm() <= 1e-12 {
            return Err(MagneticError::DegenerateSum);
        }
        let u = entry / entry.norm();
        phases.insert((x, y), u);
        phases.insert((y, x), u.conj());
    }
    Ok(MagneticPotential {
        phases,
        vertex_count: cm.dim(),
    })
}

/// Reads a vector potential off a phased adjacency matrix whose nonzero
/// entries all lie on the unit circle.
pub fn unit_potential(a: &HermitianMatrix) -> Result<MagneticPotential, MagneticError> {
    let n = a.dim();
    let mut phases = BTreeMap::new();
    let mut min = f64::INFINITY;
    let mut max: f64 = 0.0;
    for x in 0..n {
        for y in x + 1..n {
            let entry = a.entry(y, x);
            if entry.norm() <= 1e-12 {
                continue;
            }
            min = min.min(entry.norm());
            max = max.max(entry.norm());
            phases.insert((x, y), entry / entry.norm());
            phases.insert((y, x), entry.conj() / entry.norm());
        }
    }
    if phases.is_empty() {
        return Err(MagneticError::DegenerateSum);
    }
    if (min - 1.0).abs() > 1e-9 || (max - 1.0).abs() > 1e-9 {
        return Err(MagneticError::NonConstantModulus { min, max });
    }
    Ok(MagneticPotential {
        phases,
        vertex_count: n,
    })
}

/// Applies the vertex gauge change σ: the phase of x -> y picks up
/// exp(i(σ_y - σ_x)).
pub fn gauge_transform(potential: &MagneticPotential, sigma: &[f64]) -> MagneticPotential {
    assert_eq!(sigma.len(), potential.vertex_count);
    let phases = potential
        .phases
        .iter()
        .map(|(&(x, y), &u)| ((x, y), u * Complex64::from_polar(1.0, sigma[y] - sigma[x])))
        .collect();
    MagneticPotential {
        phases,
        vertex_count: potential.vertex_count,
    }
}

/// Flux through a closed walk, as the principal value of the summed edge
/// angles along it.
pub fn flux(potential: &MagneticPotential, cycle: &[usize]) -> Result<f64, MagneticError> {
    if cycle.len() < 3 {
        return Err(MagneticError::NotACycle);
    }
    let mut total = 0.0;
    for i in 0..cycle.len() {
        let x = cycle[i];
        let y = cycle[(i + 1) % cycle.len()];
        let u = potential.phase(x, y).ok_or(MagneticError::NotACycle)?;
        total += u.im.atan2(u.re);
    }
    Ok(principal_angle(total))
}

/// Total flux through all faces of the embedding divided by 2π. Fails if the
/// result is not an integer to within 1e-9.
///
/// A face flux of exactly half a turn sits on the branch point and rounding
/// noise can land it on either side, so fluxes within 1e-9 of −π are taken
/// as +π; without this, the face contributions of a half-turn monopole would
/// split between ±π arbitrarily.
pub fn chern_number(
    potential: &MagneticPotential,
    embedding: &PlanarEmbedding,
) -> Result<i64, MagneticError> {
    let mut total = 0.0;
    for face in &embedding.faces {
        let mut f = flux(potential, face)?;
        if f <= -PI + 1e-9 {
            f += 2.0 * PI;
        }
        total += f;
    }
    let scaled = total / (2.0 * PI);
    let rounded = scaled.round();
    if (scaled - rounded).abs() > 1e-9 {
        return Err(MagneticError::NonIntegerChern { value: scaled });
    }
    Ok(rounded as i64)
}

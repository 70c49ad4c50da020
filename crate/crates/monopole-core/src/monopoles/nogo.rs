//! Why the dodecahedron carries no invariant monopole: the exhaustive
//! Casimir search comes back empty, and the induced representation forces an
//! eigenvalue multiplicity the dodecahedral spectrum cannot accommodate.

use num_complex::Complex64;
use serde_json::json;

use crate::graphs::dodecahedral_skeleton;
use crate::groups::{canonical_cyclic_subgroup, induced_decomposition, CyclicCharacter};
use crate::magnetic::HermitianMatrix;
use crate::spectra::{cluster_multiplicities, hermitian_eigenvalues, SpectrumLine};

use super::catalog::{GroupData, CLUSTER_TOL};
use super::search::{find_good_casimirs, inverse_closed_unions};
use super::MonopoleError;

/// The two independent reasons recorded by `dodecahedron_no_go`.
#[derive(Debug, Clone)]
pub struct NoGoCertificate {
    /// Inverse-closed class unions the exhaustive search examined.
    pub searched_casimirs: usize,
    /// (irrep dim, multiplicity in the induced representation, implied
    /// eigenvalue multiplicity, max multiplicity in the dodecahedral
    /// adjacency spectrum).
    pub spectral_argument: (usize, usize, usize, usize),
    /// Adjacency spectrum of the dodecahedral graph itself.
    pub reference_spectrum: Vec<SpectrumLine>,
}

impl NoGoCertificate {
    pub fn export(&self) -> serde_json::Value {
        let (dim, mult, implied, max) = self.spectral_argument;
        json!({
            "searched_casimirs": self.searched_casimirs,
            "matching_casimirs": 0,
            "spectral_argument": {
                "irrep_dim": dim,
                "induced_multiplicity": mult,
                "implied_multiplicity": implied,
                "max_adjacency_multiplicity": max,
            },
            "reference_spectrum": self.reference_spectrum,
        })
    }
}

/// Checks both branches of the negative result on the order-120 quaternion
/// group; any discrepancy is an implementation bug surfaced as
/// `CertificateFailed`.
pub fn dodecahedron_no_go(data: &GroupData) -> Result<NoGoCertificate, MonopoleError> {
    let g = &data.group;
    let fail = |msg: String| MonopoleError::CertificateFailed(msg);
    if g.len() != 120 {
        return Err(fail(format!("expected the order-120 group, got {}", g.len())));
    }
    let h = canonical_cyclic_subgroup(g, 6).map_err(|e| fail(e.to_string()))?;

    let searched = inverse_closed_unions(g, &data.classes).len();
    let target = dodecahedral_skeleton();
    let matching = find_good_casimirs(g, &h, Some(&target)).len();
    if matching != 0 {
        return Err(fail(format!(
            "search found {matching} Casimir elements with a dodecahedral coset graph"
        )));
    }

    let n = target.len();
    let mut entries = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (x, neighbors) in target.iter().enumerate() {
        for &y in neighbors {
            entries[y][x] = Complex64::new(1.0, 0.0);
        }
    }
    let adjacency = HermitianMatrix::new(entries).map_err(|e| fail(e.to_string()))?;
    let reference = cluster_multiplicities(&hermitian_eigenvalues(&adjacency), CLUSTER_TOL)
        .map_err(|e| fail(e.to_string()))?;
    let max_multiplicity = reference
        .iter()
        .map(|l| l.multiplicity)
        .max()
        .unwrap_or(0);

    let trivial = CyclicCharacter::new(6, 0);
    let decomposition = induced_decomposition(g, &data.classes, &data.table, &h, &trivial)
        .map_err(|e| fail(e.to_string()))?;
    let (dim, mult) = decomposition
        .iter()
        .map(|&(irrep, mult)| (data.table.irrep_dims[irrep], mult))
        .filter(|&(_, mult)| mult >= 2)
        .max_by_key(|&(dim, mult)| dim * mult)
        .ok_or_else(|| fail("no repeated irrep in the induced representation".into()))?;
    let implied = dim * mult;
    if implied <= max_multiplicity {
        return Err(fail(format!(
            "implied multiplicity {implied} does not exceed the spectrum's maximum {max_multiplicity}"
        )));
    }

    Ok(NoGoCertificate {
        searched_casimirs: searched,
        spectral_argument: (dim, mult, implied, max_multiplicity),
        reference_spectrum: reference,
    })
}

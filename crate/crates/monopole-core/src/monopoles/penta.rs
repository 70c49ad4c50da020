//! The pentadodecahedral multigraph: the icosahedral Casimir element acting
//! on the 20 cosets of Z₆ in the order-120 quaternion group, with the
//! unnormalised Laplacian L = sI − C_ρ.

use serde_json::json;

use crate::graphs::{build_graph, CosetGraph, GraphMode};
use crate::groups::{
    canonical_cyclic_subgroup, casimir_eigenvalue, coset_space, induced_decomposition,
    CasimirElement, CyclicCharacter,
};
use crate::magnetic::{induced_casimir_matrix, magnetic_laplacian};
use crate::spectra::{
    cluster_multiplicities, cross_validate, frobenius_spectrum, hermitian_eigenvalues,
    SpectrumLine,
};

use super::catalog::{GroupData, CHECK_TOL, CLUSTER_TOL};
use super::MonopoleError;

/// One irreducible summand's contribution to the trivial-character Laplacian.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PentaContribution {
    pub irrep_dim: usize,
    pub multiplicity: usize,
    pub eigenvalue: f64,
}

/// Laplacian spectrum of one character of Z₆ on the multigraph.
#[derive(Debug, Clone)]
pub struct PentaRow {
    pub exponent: i64,
    pub laplacian_lines: Vec<SpectrumLine>,
    pub frobenius_lines: Vec<SpectrumLine>,
}

/// The 20-vertex multigraph with single and double edges, its per-character
/// Laplacian spectra, and the irrep decomposition behind the trivial one.
#[derive(Debug)]
pub struct PentaCase {
    pub graph: CosetGraph,
    /// Number of Casimir summands, the diagonal of L.
    pub summand_count: usize,
    pub rows: Vec<PentaRow>,
    /// Trivial-character decomposition, sorted by eigenvalue.
    pub contributions: Vec<PentaContribution>,
}

impl PentaCase {
    /// The trivial-character Laplacian spectrum.
    pub fn laplacian_lines(&self) -> &[SpectrumLine] {
        &self.rows[0].laplacian_lines
    }

    pub fn export(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "exponent": row.exponent,
                    "laplacian_spectrum": row.laplacian_lines,
                })
            })
            .collect();
        json!({
            "vertices": self.graph.vertex_count,
            "edge_multiplicity_sum": self.summand_count,
            "laplacian_spectrum": self.laplacian_lines(),
            "characters": rows,
            "irrep_contributions": self.contributions,
        })
    }
}

/// Builds the multigraph case from the icosahedral group data and the
/// Casimir element shared with the icosahedron.
pub fn pentadodecahedral_case(
    data: &GroupData,
    casimir: &CasimirElement,
) -> Result<PentaCase, MonopoleError> {
    let g = &data.group;
    let fail =
        |msg: String| MonopoleError::CatalogInconsistent(format!("pentadodecahedron: {msg}"));
    let h = canonical_cyclic_subgroup(g, 6).map_err(|e| fail(e.to_string()))?;
    let space = coset_space(g, &h);
    let graph = build_graph(g, &space, casimir, GraphMode::Multi);
    let s = casimir.summand_count();

    let mut rows = Vec::with_capacity(h.order());
    for exponent in 0..h.order() as i64 {
        let rho = CyclicCharacter::new(h.order(), exponent);
        let cm = induced_casimir_matrix(g, &h, &rho, casimir, &space, &graph);
        let laplacian = magnetic_laplacian(&cm.to_hermitian(), s);
        let laplacian_lines =
            cluster_multiplicities(&hermitian_eigenvalues(&laplacian), CLUSTER_TOL)
                .map_err(|e| fail(format!("exponent {exponent}: {e}")))?;
        // λ_L = s − λ_C, which is (λ_C − q)/p at p = −1, q = s
        let frobenius_lines = frobenius_spectrum(
            g,
            &data.classes,
            &data.table,
            &h,
            &rho,
            casimir,
            -1.0,
            s as f64,
        )
        .map_err(|e| fail(format!("exponent {exponent}: {e}")))?;
        cross_validate(&laplacian_lines, &frobenius_lines, CHECK_TOL)
            .map_err(|e| fail(format!("exponent {exponent}: {e}")))?;
        rows.push(PentaRow {
            exponent,
            laplacian_lines,
            frobenius_lines,
        });
    }

    let trivial = CyclicCharacter::new(h.order(), 0);
    let mut contributions: Vec<PentaContribution> =
        induced_decomposition(g, &data.classes, &data.table, &h, &trivial)
            .map_err(|e| fail(e.to_string()))?
            .into_iter()
            .map(|(irrep, mult)| PentaContribution {
                irrep_dim: data.table.irrep_dims[irrep],
                multiplicity: mult,
                eigenvalue: s as f64 - casimir_eigenvalue(casimir, irrep, &data.table).re,
            })
            .collect();
    contributions.sort_by(|a, b| {
        a.eigenvalue
            .total_cmp(&b.eigenvalue)
            .then(a.irrep_dim.cmp(&b.irrep_dim))
    });

    Ok(PentaCase {
        graph,
        summand_count: s,
        rows,
        contributions,
    })
}

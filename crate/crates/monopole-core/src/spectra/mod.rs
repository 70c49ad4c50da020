//! Spectra: dense Hermitian eigensolver, multiplicity clustering, the
//! character-theoretic spectrum route and the Wu–Yang reference spectrum.

mod eigen;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub(crate) use eigen::eigh;
pub use eigen::EigenDecomposition;

use crate::groups::{
    casimir_eigenvalue, induced_decomposition, CasimirElement, CharacterTable, ConjClass,
    CyclicCharacter, FiniteGroup, GroupError, Subgroup,
};
use crate::magnetic::HermitianMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("ambiguous clustering: gap {gap:.3e} lies in the knife-edge band [{tol:.3e}, {:.3e}]", 10.0 * tol)]
    AmbiguousClustering { gap: f64, tol: f64 },
    #[error("spectra have different line counts: {left} vs {right}")]
    LineCountMismatch { left: usize, right: usize },
    #[error("spectrum mismatch at line {index}: [{:.12}]^{} vs [{:.12}]^{}", left.eigenvalue, left.multiplicity, right.eigenvalue, right.multiplicity)]
    Mismatch {
        index: usize,
        left: SpectrumLine,
        right: SpectrumLine,
    },
}

/// One eigenvalue together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumLine {
    #[serde(rename = "value")]
    pub eigenvalue: f64,
    pub multiplicity: usize,
}

impl SpectrumLine {
    pub fn new(eigenvalue: f64, multiplicity: usize) -> Self {
        Self {
            eigenvalue,
            multiplicity,
        }
    }
}

pub fn total_multiplicity(lines: &[SpectrumLine]) -> usize {
    lines.iter().map(|l| l.multiplicity).sum()
}

/// How a spectrum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMethod {
    Numeric,
    Frobenius,
}

impl std::fmt::Display for SpectrumMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumMethod::Numeric => write!(f, "numeric"),
            SpectrumMethod::Frobenius => write!(f, "frobenius"),
        }
    }
}

/// A full spectrum with provenance, the JSON export shape.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Spectrum {
    pub lines: Vec<SpectrumLine>,
    pub method: SpectrumMethod,
    pub tolerance: f64,
}

/// One level of the continuous Wu–Yang monopole spectrum on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WuYangLine {
    pub q: i64,
    pub l: usize,
    pub eigenvalue: f64,
    pub degeneracy: usize,
}

/// Spectrum of the Wu–Yang Hamiltonian with magnetic charge q:
/// λ_l = l(l+1) + |q|(l + 1/2) with degeneracy 2l + |q| + 1, l = 0..l_max.
pub fn wu_yang_spectrum(q: i64, l_max: usize) -> Vec<WuYangLine> {
    let aq = q.unsigned_abs() as usize;
    (0..=l_max)
        .map(|l| WuYangLine {
            q,
            l,
            eigenvalue: (l * (l + 1)) as f64 + aq as f64 * (l as f64 + 0.5),
            degeneracy: 2 * l + aq + 1,
        })
        .collect()
}

/// Eigenvalues of a validated Hermitian matrix, sorted ascending.
pub fn hermitian_eigenvalues(a: &HermitianMatrix) -> Vec<f64> {
    eigen::eigenvalues(a.entries())
}

/// Spectrum of the normalised adjacency operator (C_ρ − qI)/p computed
/// without diagonalisation: the induced representation splits into irreps V
/// with multiplicities i_V, the Casimir acts on each V as the scalar λ_V,
/// and each V contributes the line ((λ_V − q)/p, i_V · dim V). Lines closer
/// than 1e-9 are merged.
#[allow(clippy::too_many_arguments)]
pub fn frobenius_spectrum(
    g: &FiniteGroup,
    classes: &[ConjClass],
    table: &CharacterTable,
    h: &Subgroup,
    rho: &CyclicCharacter,
    casimir: &CasimirElement,
    p: f64,
    q: f64,
) -> Result<Vec<SpectrumLine>, GroupError> {
    let decomposition = induced_decomposition(g, classes, table, h, rho)?;
    let mut raw: Vec<(f64, usize)> = decomposition
        .into_iter()
        .map(|(irrep, mult)| {
            let lambda = casimir_eigenvalue(casimir, irrep, table);
            debug_assert!(lambda.im.abs() < 1e-9, "real Casimir has real eigenvalues");
            ((lambda.re - q) / p, mult * table.irrep_dims[irrep])
        })
        .collect();
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut lines: Vec<SpectrumLine> = Vec::new();
    for (value, mult) in raw {
        match lines.last_mut() {
            Some(last) if (last.eigenvalue - value).abs() < 1e-9 => last.multiplicity += mult,
            _ => lines.push(SpectrumLine::new(value, mult)),
        }
    }
    Ok(lines)
}

/// Merge sorted eigenvalues into lines, grouping values closer than `tol`.
/// Each line's eigenvalue is the cluster mean. A gap between consecutive
/// values inside [tol, 10·tol] means the tolerance sits on a knife edge and
/// the grouping would be unreliable, so that is rejected.
pub fn cluster_multiplicities(
    values: &[f64],
    tol: f64,
) -> Result<Vec<SpectrumLine>, SpectraError> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(
        values.windows(2).all(|w| w[0] <= w[1]),
        "eigenvalues must be sorted ascending"
    );
    let mut lines = Vec::new();
    let mut start = 0;
    for i in 0..values.len() {
        let gap = if i + 1 < values.len() {
            values[i + 1] - values[i]
        } else {
            f64::INFINITY
        };
        if gap >= tol && gap <= 10.0 * tol {
            return Err(SpectraError::AmbiguousClustering { gap, tol });
        }
        if gap >= tol {
            let cluster = &values[start..=i];
            lines.push(SpectrumLine::new(
                cluster.iter().sum::<f64>() / cluster.len() as f64,
                cluster.len(),
            ));
            start = i + 1;
        }
    }
    Ok(lines)
}

/// Compare two spectra line by line: multiplicities must match exactly and
/// eigenvalues within `tol`. Returns the per-line deltas on success.
pub fn cross_validate(
    left: &[SpectrumLine],
    right: &[SpectrumLine],
    tol: f64,
) -> Result<CrossValidation, SpectraError> {
    if left.len() != right.len() {
        return Err(SpectraError::LineCountMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let mut deltas = Vec::with_capacity(left.len());
    for (index, (a, b)) in left.iter().zip(right).enumerate() {
        let delta = (a.eigenvalue - b.eigenvalue).abs();
        if a.multiplicity != b.multiplicity || delta > tol {
            return Err(SpectraError::Mismatch {
                index,
                left: *a,
                right: *b,
            });
        }
        deltas.push(delta);
    }
    Ok(CrossValidation {
        max_delta: deltas.iter().cloned().fold(0.0, f64::max),
        line_deltas: deltas,
    })
}

/// Outcome of a successful spectrum comparison.
#[derive(Debug, Clone, Serialize)]
pub struct CrossValidation {
    pub line_deltas: Vec<f64>,
    pub max_delta: f64,
}

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    use super::*;
    use crate::graphs::{build_graph, GraphMode};
    use crate::groups::{
        canonical_cyclic_subgroup, casimir_from_classes, conjugacy_classes, coset_space,
        generators,
    };
    use crate::magnetic::{induced_casimir_matrix, magnetic_adjacency};

    fn tetra_spectra(exponent: i64) -> (Vec<SpectrumLine>, Vec<SpectrumLine>) {
        let g = FiniteGroup::generate(&generators::binary_tetrahedral()).unwrap();
        let classes = conjugacy_classes(&g);
        let mut rng = StdRng::seed_from_u64(11);
        let table = CharacterTable::compute(&g, &classes, &mut rng).unwrap();
        let h = canonical_cyclic_subgroup(&g, 6).unwrap();
        let space = coset_space(&g, &h);
        let order6: Vec<usize> = (0..classes.len())
            .filter(|&ci| g.element_order(classes[ci].representative) == 6)
            .collect();
        let casimir = casimir_from_classes(&g, &classes, &order6);
        let graph = build_graph(&g, &space, &casimir, GraphMode::Simple);
        let rho = CyclicCharacter::new(6, exponent);
        let cm = induced_casimir_matrix(&g, &h, &rho, &casimir, &space, &graph);
        let p = cm.p().unwrap();
        let numeric = cluster_multiplicities(
            &hermitian_eigenvalues(&magnetic_adjacency(&cm).unwrap()),
            1e-7,
        )
        .unwrap();
        let frobenius =
            frobenius_spectrum(&g, &classes, &table, &h, &rho, &casimir, p, cm.q).unwrap();
        (numeric, frobenius)
    }

    #[test]
    fn frobenius_route_matches_diagonalisation() {
        let (numeric, frobenius) = tetra_spectra(0);
        cross_validate(&numeric, &frobenius, 1e-9).unwrap();
        assert_eq!(frobenius.len(), 2);
        assert!((frobenius[0].eigenvalue + 1.0).abs() < 1e-12);
        assert_eq!(frobenius[0].multiplicity, 3);
        assert!((frobenius[1].eigenvalue - 3.0).abs() < 1e-12);

        let (numeric, frobenius) = tetra_spectra(1);
        cross_validate(&numeric, &frobenius, 1e-9).unwrap();
        assert_eq!(total_multiplicity(&frobenius), 4);
        for line in &frobenius {
            assert!((line.eigenvalue.abs() - 3.0f64.sqrt()).abs() < 1e-9);
            assert_eq!(line.multiplicity, 2);
        }
    }

    #[test]
    fn clustering_merges_and_averages() {
        let lines = cluster_multiplicities(&[1.0, 1.0 + 1e-10, 2.0], 1e-7).unwrap();
        assert_eq!(lines.len(), 2);
        assert!((lines[0].eigenvalue - 1.0).abs() < 1e-9);
        assert_eq!(lines[0].multiplicity, 2);
        assert_eq!(lines[1], SpectrumLine::new(2.0, 1));
    }

    #[test]
    fn clustering_rejects_knife_edge_gap() {
        let err = cluster_multiplicities(&[0.0, 5e-7], 1e-7).unwrap_err();
        assert!(matches!(err, SpectraError::AmbiguousClustering { .. }));
        // Just below tol merges, well above splits.
        assert_eq!(cluster_multiplicities(&[0.0, 9e-8], 1e-7).unwrap().len(), 1);
        assert_eq!(cluster_multiplicities(&[0.0, 2e-6], 1e-7).unwrap().len(), 2);
    }

    #[test]
    fn wu_yang_levels() {
        let free = wu_yang_spectrum(0, 3);
        for (l, line) in free.iter().enumerate() {
            assert_eq!(line.eigenvalue, (l * (l + 1)) as f64);
            assert_eq!(line.degeneracy, 2 * l + 1);
        }
        let q1 = wu_yang_spectrum(1, 0);
        assert_eq!(q1[0].eigenvalue, 0.5);
        assert_eq!(q1[0].degeneracy, 2);
        let q2 = wu_yang_spectrum(2, 1);
        assert_eq!(q2[1].eigenvalue, 5.0);
        assert_eq!(q2[1].degeneracy, 5);
        assert_eq!(wu_yang_spectrum(-2, 1), wu_yang_spectrum(2, 1).iter().map(|l| WuYangLine { q: -2, ..*l }).collect::<Vec<_>>());
    }

    #[test]
    fn cross_validation_passes_and_fails() {
        let a = [SpectrumLine::new(-1.0, 3), SpectrumLine::new(3.0, 1)];
        let b = [SpectrumLine::new(-1.0 + 1e-12, 3), SpectrumLine::new(3.0, 1)];
        let report = cross_validate(&a, &b, 1e-9).unwrap();
        assert!(report.max_delta <= 1e-9);
        let perturbed = [SpectrumLine::new(-1.0 + 1e-6, 3), SpectrumLine::new(3.0, 1)];
        assert!(matches!(
            cross_validate(&a, &perturbed, 1e-9),
            Err(SpectraError::Mismatch { index: 0, .. })
        ));
        let wrong_mult = [SpectrumLine::new(-1.0, 2), SpectrumLine::new(3.0, 2)];
        assert!(cross_validate(&a, &wrong_mult, 1e-9).is_err());
        assert!(matches!(
            cross_validate(&a, &a[..1], 1e-9),
            Err(SpectraError::LineCountMismatch { .. })
        ));
    }

    #[test]
    fn spectrum_line_json_shape() {
        let line = SpectrumLine::new(1.5, 2);
        assert_eq!(
            serde_json::to_string(&line).unwrap(),
            r#"{"value":1.5,"multiplicity":2}"#
        );
    }
}

use num_complex::Complex64;

use super::matrix::HermitianMatrix;
use super::MagneticError;
use crate::graphs::CosetGraph;
use crate::groups::{CasimirElement, CosetSpace, CyclicCharacter, FiniteGroup, Subgroup};

/// The matrix of a Casimir element C in the representation induced from a
/// character ρ of the cyclic stabilizer H: entry (y, x) = Σ ρ(h_i) over the
/// summands c_i with c_i·g_x = g_y·h_i. Hermitian whenever C is real.
#[derive(Debug, Clone)]
pub struct InducedCasimirMatrix {
    pub matrix: Vec<Vec<Complex64>>,
    /// The constant diagonal value.
    pub q: f64,
    /// Simple edges of the underlying coset graph.
    pub edges: Vec<(usize, usize)>,
}

pub fn induced_casimir_matrix(
    g: &FiniteGroup,
    h: &Subgroup,
    rho: &CyclicCharacter,
    casimir: &CasimirElement,
    space: &CosetSpace,
    graph: &CosetGraph,
) -> InducedCasimirMatrix {
    assert!(casimir.real, "induced matrices need a real Casimir element");
    assert_eq!(rho.order, h.order(), "character order must match |H|");
    let n = space.len();

    // Discrete logarithm inside H: element index ↦ power of the generator.
    let mut log = vec![usize::MAX; g.len()];
    for (a, &elem) in h.powers(g).iter().enumerate() {
        log[elem] = a;
    }

    let mut matrix = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for x in 0..n {
        let gx = space.representatives[x];
        for &c in &casimir.summands {
            let y = space.act(c, x);
            let gy_inv = g.inv(space.representatives[y]);
            let h_elem = g.mul(g.mul(gy_inv, c), gx);
            let a = log[h_elem];
            assert_ne!(a, usize::MAX, "g_y^-1 c g_x must land in H");
            matrix[y][x] += rho.value_at_power(a);
        }
    }

    // Vertex transitivity forces a constant real diagonal.
    let q = matrix[0][0].re;
    for (i, row) in matrix.iter().enumerate() {
        debug_assert!((row[i] - q).norm() < 1e-10, "diagonal must be constant");
    }
    for i in 0..n {
        for j in 0..n {
            debug_assert!(
                (matrix[i][j] - matrix[j][i].conj()).norm() < 1e-10,
                "real Casimir must induce a Hermitian matrix"
            );
        }
    }

    InducedCasimirMatrix {
        matrix,
        q,
        edges: graph.edges.iter().map(|&(x, y, _)| (x, y)).collect(),
    }
}

impl InducedCasimirMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// The common modulus p of the off-diagonal entries on edges. Fails with
    /// DegenerateSum when the character sum vanishes on the edges, and with
    /// NonConstantModulus when the triple is not good.
    pub fn p(&self) -> Result<f64, MagneticError> {
        assert!(!self.edges.is_empty(), "graph has no edges");
        let moduli: Vec<f64> = self
            .edges
            .iter()
            .map(|&(x, y)| self.matrix[y][x].norm())
            .collect();
        let max = moduli.iter().cloned().fold(0.0, f64::max);
        if max < 1e-12 {
            return Err(MagneticError::DegenerateSum);
        }
        let min = moduli.iter().cloned().fold(f64::INFINITY, f64::min);
        if max - min > 1e-9 {
            return Err(MagneticError::NonConstantModulus { min, max });
        }
        Ok(moduli.iter().sum::<f64>() / moduli.len() as f64)
    }

    pub fn to_hermitian(&self) -> HermitianMatrix {
        HermitianMatrix::new(self.matrix.clone()).expect("induced matrix is Hermitian")
    }
}

/// A_ρ = (C_ρ − qI)/p: zero diagonal, unit-modulus entries on edges.
pub fn magnetic_adjacency(cm: &InducedCasimirMatrix) -> Result<HermitianMatrix, MagneticError> {
    let p = cm.p()?;
    let n = cm.dim();
    let mut entries = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            entries[i][j] = cm.matrix[i][j] / p;
        }
        entries[i][i] -= cm.q / p;
    }
    HermitianMatrix::new(entries)
}

use num_complex::Complex64;

/// Eigenvalues ascending, `vectors[k]` the unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

/// Full eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. A plane rotation at (p,q) first absorbs the phase of a_pq so
/// the 2×2 block is real symmetric, then annihilates it with the classical
/// rotation; sweeps repeat until the off-diagonal mass is negligible.
///
/// Sized for dense matrices up to the catalog scale (n ≤ 64), where Jacobi's
/// quadratic convergence makes it both simple and accurate.
pub fn eigh(matrix: &[Vec<Complex64>]) -> EigenDecomposition {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");

    // Work on the Hermitian average so 1e-16-level input asymmetry cannot
    // push the iteration off the Hermitian manifold.
    let mut a = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        a[i][i] = Complex64::new(matrix[i][i].re, 0.0);
        for j in i + 1..n {
            let avg = 0.5 * (matrix[i][j] + matrix[j][i].conj());
            a[i][j] = avg;
            a[j][i] = avg.conj();
        }
    }

    let mut v = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }

    let scale = frobenius_norm(&a).max(1.0);
    let target = 1e-14 * scale;
    let mut converged = false;
    for _sweep in 0..64 {
        if off_diagonal_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    assert!(
        converged || off_diagonal_norm(&a) <= target,
        "Jacobi iteration failed to converge"
    );

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].re.partial_cmp(&a[j][j].re).unwrap());
    EigenDecomposition {
        values: order.iter().map(|&i| a[i][i].re).collect(),
        vectors: order
            .iter()
            .map(|&col| (0..n).map(|row| v[row][col]).collect())
            .collect(),
    }
}

/// Sorted eigenvalues only.
pub(crate) fn eigenvalues(matrix: &[Vec<Complex64>]) -> Vec<f64> {
    eigh(matrix).values
}

fn rotate(a: &mut [Vec<Complex64>], v: &mut [Vec<Complex64>], p: usize, q: usize) {
    let apq = a[p][q];
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let phase_conj = (apq / r).conj();
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.len();
    for rix in 0..n {
        if rix == p || rix == q {
            continue;
        }
        let arp = a[rix][p];
        let arq = a[rix][q];
        let new_p = c * arp - s * phase_conj * arq;
        let new_q = s * arp + c * phase_conj * arq;
        a[rix][p] = new_p;
        a[p][rix] = new_p.conj();
        a[rix][q] = new_q;
        a[q][rix] = new_q.conj();
    }
    a[p][p] = Complex64::new(app - t * r, 0.0);
    a[q][q] = Complex64::new(aqq + t * r, 0.0);
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);

    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * phase_conj * vq;
        row[q] = s * vp + c * phase_conj * vq;
    }
}

fn frobenius_norm(a: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .flat_map(|row| row.iter().map(|z| z.norm_sqr()))
        .sum::<f64>()
        .sqrt()
}

fn off_diagonal_norm(a: &[Vec<Complex64>]) -> f64 {
    let n = a.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i][j].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

use num_complex::Complex64;
use serde_json::json;

use super::MagneticError;

/// A validated Hermitian matrix: entries(x,y) = conj(entries(y,x)) within
/// 1e-12 at construction, stored exactly Hermitian (upper triangle mirrored,
/// diagonal forced real).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    entries: Vec<Vec<Complex64>>,
}

impl HermitianMatrix {
    pub fn new(entries: Vec<Vec<Complex64>>) -> Result<Self, MagneticError> {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "matrix must be square");
        let mut max_asymmetry = 0.0f64;
        for i in 0..n {
            max_asymmetry = max_asymmetry.max(entries[i][i].im.abs());
            for j in i + 1..n {
                max_asymmetry = max_asymmetry.max((entries[i][j] - entries[j][i].conj()).norm());
            }
        }
        if max_asymmetry > 1e-12 {
            return Err(MagneticError::NotHermitian { max_asymmetry });
        }
        let mut fixed = entries;
        for i in 0..n {
            fixed[i][i] = Complex64::new(fixed[i][i].re, 0.0);
            for j in i + 1..n {
                let z = fixed[i][j];
                fixed[j][i] = z.conj();
            }
        }
        Ok(Self { entries: fixed })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Complex64>] {
        &self.entries
    }

    /// JSON export, complex entries as [re, im] pairs.
    pub fn export(&self) -> serde_json::Value {
        json!({
            "dim": self.dim(),
            "entries": self.entries.iter().map(|row| {
                row.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Replace every off-diagonal phase by its m-th power; zero entries and the
/// diagonal are untouched. Requires unit-modulus off-diagonals.
pub fn phase_power(a: &HermitianMatrix, m: i64) -> HermitianMatrix {
    let n = a.dim();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        out[i][i] = a.entry(i, i);
        for j in i + 1..n {
            let z = a.entry(i, j);
            if z.norm() > 1e-12 {
                assert!(
                    (z.norm() - 1.0).abs() < 1e-9,
                    "phase_power needs unit-modulus off-diagonals"
                );
                let angle = z.arg() * m as f64;
                let powered = Complex64::new(angle.cos(), angle.sin());
                out[i][j] = powered;
                out[j][i] = powered.conj();
            }
        }
    }
    HermitianMatrix::new(out).expect("phase powers stay Hermitian")
}

/// L = dI − A for a d-regular graph.
pub fn magnetic_laplacian(a: &HermitianMatrix, d: usize) -> HermitianMatrix {
    let n = a.dim();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = -a.entry(i, j);
        }
        out[i][i] += d as f64;
    }
    HermitianMatrix::new(out).expect("dI - A stays Hermitian")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_phase_matrix() -> HermitianMatrix {
        let z = Complex64::from_polar(1.0, 0.7);
        HermitianMatrix::new(vec![
            vec![cx(0.0, 0.0), z, cx(0.0, 0.0)],
            vec![z.conj(), cx(0.0, 0.0), cx(-1.0, 0.0)],
            vec![cx(0.0, 0.0), cx(-1.0, 0.0), cx(0.0, 0.0)],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_non_hermitian() {
        let err = HermitianMatrix::new(vec![
            vec![cx(1.0, 0.0), cx(2.0, 0.0)],
            vec![cx(2.0, 1e-6), cx(1.0, 0.0)],
        ])
        .unwrap_err();
        assert!(matches!(err, MagneticError::NotHermitian { .. }));
    }

    #[test]
    fn phase_power_identity_and_flatten() {
        let a = unit_phase_matrix();
        let same = phase_power(&a, 1);
        for i in 0..3 {
            for j in 0..3 {
                assert!((same.entry(i, j) - a.entry(i, j)).norm() < 1e-12);
            }
        }
        let flat = phase_power(&a, 0);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if a.entry(i, j).norm() > 1e-12 && i != j {
                    1.0
                } else {
                    0.0
                };
                assert!((flat.entry(i, j) - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn phase_power_multiplies_angles() {
        let a = unit_phase_matrix();
        let cubed = phase_power(&a, 3);
        assert!((cubed.entry(0, 1).arg() - super::super::principal_angle(3.0 * 0.7)).abs() < 1e-12);
        assert!((cubed.entry(1, 0) - cubed.entry(0, 1).conj()).norm() < 1e-15);
    }

    #[test]
    fn laplacian_of_path() {
        let a = HermitianMatrix::new(vec![
            vec![cx(0.0, 0.0), cx(1.0, 0.0)],
            vec![cx(1.0, 0.0), cx(0.0, 0.0)],
        ])
        .unwrap();
        let l = magnetic_laplacian(&a, 1);
        assert_eq!(l.entry(0, 0), cx(1.0, 0.0));
        assert_eq!(l.entry(0, 1), cx(-1.0, 0.0));
    }
}

use num_complex::Complex64;
use rand::Rng;
use serde_json::json;

use super::classes::class_of_elements;
use super::{ConjClass, FiniteGroup, GroupError, Subgroup};
use crate::spectra::eigh;

/// Complex irreducible character table. Rows are irreps (sorted by dimension,
/// then by rounded values for determinism), columns follow the class order
/// the table was built with.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub irrep_dims: Vec<usize>,
    pub values: Vec<Vec<Complex64>>,
    pub class_sizes: Vec<usize>,
    pub group_order: usize,
    pub identity_class: usize,
}

impl CharacterTable {
    /// Burnside's class-matrix method. The class-sum matrices are rescaled to
    /// the orthonormal class basis, where the matrix of a class and that of
    /// its inverse class are mutual transposes; together with i·(differences)
    /// this yields a commuting Hermitian family whose common eigenvectors are
    /// the central characters. A random real combination separates them; a
    /// degenerate draw is retried up to 10 times.
    pub fn compute(
        g: &FiniteGroup,
        classes: &[ConjClass],
        rng: &mut impl Rng,
    ) -> Result<Self, GroupError> {
        let k = classes.len();
        let class_of = class_of_elements(g, classes);
        let sizes: Vec<usize> = classes.iter().map(ConjClass::size).collect();
        let identity_class = class_of[g.identity()];

        // n[i][j][l]: K_i K_j = Σ_l n[i][j][l] K_l.
        let mut coeff = vec![vec![vec![0usize; k]; k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut counts = vec![0usize; k];
                for &x in &classes[i].members {
                    for &y in &classes[j].members {
                        counts[class_of[g.mul(x, y)]] += 1;
                    }
                }
                for l in 0..k {
                    debug_assert_eq!(counts[l] % sizes[l], 0);
                    coeff[i][j][l] = counts[l] / sizes[l];
                }
            }
        }

        // Rescaled class matrices: Â_i[j][l] = n_ijl·√(|C_l|/|C_j|).
        let rescaled: Vec<Vec<Vec<f64>>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .map(|l| {
                                coeff[i][j][l] as f64 * (sizes[l] as f64 / sizes[j] as f64).sqrt()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let inverse_class: Vec<usize> = (0..k)
            .map(|i| class_of[g.inv(classes[i].representative)])
            .collect();
        let mut hermitian_family: Vec<Vec<Vec<Complex64>>> = Vec::new();
        for i in 0..k {
            let ip = inverse_class[i];
            if ip < i {
                continue;
            }
            if ip == i {
                hermitian_family.push(
                    rescaled[i]
                        .iter()
                        .map(|row| row.iter().map(|&a| Complex64::new(a, 0.0)).collect())
                        .collect(),
                );
            } else {
                let sum: Vec<Vec<Complex64>> = (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|c| Complex64::new(rescaled[i][r][c] + rescaled[ip][r][c], 0.0))
                            .collect()
                    })
                    .collect();
                let diff: Vec<Vec<Complex64>> = (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|c| Complex64::new(0.0, rescaled[i][r][c] - rescaled[ip][r][c]))
                            .collect()
                    })
                    .collect();
                hermitian_family.push(sum);
                hermitian_family.push(diff);
            }
        }
        debug_assert_eq!(hermitian_family.len(), k);

        const RETRIES: usize = 10;
        for _ in 0..RETRIES {
            let weights: Vec<f64> = (0..hermitian_family.len())
                .map(|_| rng.gen_range(-1.0..1.0))
                .collect();
            let mut combo = vec![vec![Complex64::new(0.0, 0.0); k]; k];
            for (w, m) in weights.iter().zip(&hermitian_family) {
                for r in 0..k {
                    for c in 0..k {
                        combo[r][c] += w * m[r][c];
                    }
                }
            }
            let dec = eigh(&combo);
            let scale = dec.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            let simple = dec
                .values
                .windows(2)
                .all(|w| (w[1] - w[0]).abs() > 1e-6 * scale);
            if !simple {
                continue;
            }
            if let Some(table) =
                Self::from_eigenvectors(g, &rescaled, &sizes, identity_class, &dec.vectors)
            {
                return Ok(table);
            }
        }
        Err(GroupError::DegenerateCombination { retries: RETRIES })
    }

    /// Turn common eigenvectors into character rows; None if validation
    /// fails, which sends the caller back for a fresh random combination.
    fn from_eigenvectors(
        g: &FiniteGroup,
        rescaled: &[Vec<Vec<f64>>],
        sizes: &[usize],
        identity_class: usize,
        vectors: &[Vec<Complex64>],
    ) -> Option<Self> {
        let k = sizes.len();
        let order = g.len() as f64;
        let mut rows: Vec<(usize, Vec<Complex64>)> = Vec::with_capacity(k);
        for v in vectors {
            // ω_i = ⟨Â_i v, v⟩, the central character on class i.
            let omega: Vec<Complex64> = (0..k)
                .map(|i| {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for r in 0..k {
                        let mut av = Complex64::new(0.0, 0.0);
                        for c in 0..k {
                            av += rescaled[i][r][c] * v[c];
                        }
                        acc += av * v[r].conj();
                    }
                    acc
                })
                .collect();
            let inv_sum: f64 = omega
                .iter()
                .zip(sizes)
                .map(|(w, &s)| w.norm_sqr() / s as f64)
                .sum();
            let dim_f = (order / inv_sum).sqrt();
            let dim = dim_f.round();
            if dim < 1.0 || (dim_f - dim).abs() > 1e-6 {
                return None;
            }
            let chi: Vec<Complex64> = omega
                .iter()
                .zip(sizes)
                .map(|(w, &s)| w * dim / s as f64)
                .collect();
            rows.push((dim as usize, chi));
        }

        rows.sort_by(|(da, va), (db, vb)| {
            da.cmp(db).then_with(|| {
                let key = |vals: &[Complex64]| -> Vec<(i64, i64)> {
                    vals.iter()
                        .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
                        .collect()
                };
                key(va).cmp(&key(vb))
            })
        });

        let table = Self {
            irrep_dims: rows.iter().map(|(d, _)| *d).collect(),
            values: rows.into_iter().map(|(_, v)| v).collect(),
            class_sizes: sizes.to_vec(),
            group_order: g.len(),
            identity_class,
        };
        if table.validate(1e-9) {
            Some(table)
        } else {
            None
        }
    }

    fn validate(&self, tol: f64) -> bool {
        let k = self.class_sizes.len();
        if self.irrep_dims.iter().map(|d| d * d).sum::<usize>() != self.group_order {
            return false;
        }
        for (dim, row) in self.irrep_dims.iter().zip(&self.values) {
            if (row[self.identity_class] - *dim as f64).norm() > 1e-6 {
                return false;
            }
        }
        for i in 0..k {
            for j in 0..k {
                let mut inner = Complex64::new(0.0, 0.0);
                for c in 0..k {
                    inner += self.class_sizes[c] as f64 * self.values[i][c]
                        * self.values[j][c].conj();
                }
                inner /= self.group_order as f64;
                let target = f64::from(u8::from(i == j));
                if (inner - target).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn irrep_count(&self) -> usize {
        self.irrep_dims.len()
    }

    /// Maximum deviation from row orthonormality.
    pub fn orthogonality_defect(&self) -> f64 {
        let k = self.class_sizes.len();
        let mut worst = 0.0f64;
        for i in 0..self.irrep_count() {
            for j in 0..self.irrep_count() {
                let mut inner = Complex64::new(0.0, 0.0);
                for c in 0..k {
                    inner += self.class_sizes[c] as f64 * self.values[i][c]
                        * self.values[j][c].conj();
                }
                inner /= self.group_order as f64;
                let target = f64::from(u8::from(i == j));
                worst = worst.max((inner - target).norm());
            }
        }
        worst
    }

    /// JSON export with complex values as [re, im] pairs.
    pub fn export(&self) -> serde_json::Value {
        json!({
            "group_order": self.group_order,
            "class_sizes": self.class_sizes,
            "irrep_dims": self.irrep_dims,
            "values": self.values.iter().map(|row| {
                row.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// A character of a cyclic group of the given order, sending the generator
/// to exp(2πi·exponent/order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicCharacter {
    pub order: usize,
    pub exponent: i64,
}

impl CyclicCharacter {
    pub fn new(order: usize, exponent: i64) -> Self {
        let n = order as i64;
        Self {
            order,
            exponent: exponent.rem_euclid(n),
        }
    }

    /// Value on the a-th power of the generator.
    pub fn value_at_power(&self, a: usize) -> Complex64 {
        let angle =
            2.0 * std::f64::consts::PI * (self.exponent * (a as i64 % self.order as i64)) as f64
                / self.order as f64;
        Complex64::new(angle.cos(), angle.sin())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.order, -self.exponent)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    /// All characters of the cyclic group, exponents 0..order.
    pub fn all(order: usize) -> Vec<Self> {
        (0..order as i64).map(|k| Self::new(order, k)).collect()
    }
}

/// Frobenius reciprocity: multiplicities of each irrep of G inside the
/// representation induced from the character ρ of the cyclic subgroup H,
/// i_k = (1/|H|) Σ_{h∈H} χ_k(h)·conj(ρ(h)). Returns (irrep, multiplicity)
/// for the irreps that occur.
pub fn induced_decomposition(
    g: &FiniteGroup,
    classes: &[ConjClass],
    table: &CharacterTable,
    h: &Subgroup,
    rho: &CyclicCharacter,
) -> Result<Vec<(usize, usize)>, GroupError> {
    assert_eq!(rho.order, h.order(), "character order must match |H|");
    let class_of = class_of_elements(g, classes);
    let powers = h.powers(g);
    let mut result = Vec::new();
    let mut total_dim = 0usize;
    for irrep in 0..table.irrep_count() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, &elem) in powers.iter().enumerate() {
            acc += table.values[irrep][class_of[elem]] * rho.value_at_power(a).conj();
        }
        acc /= h.order() as f64;
        let mult = acc.re.round();
        if (acc - mult).norm() > 1e-6 || mult < 0.0 {
            return Err(GroupError::NonIntegerMultiplicity {
                irrep,
                value: acc.re,
            });
        }
        let mult = mult as usize;
        if mult > 0 {
            result.push((irrep, mult));
            total_dim += mult * table.irrep_dims[irrep];
        }
    }
    debug_assert_eq!(total_dim, g.len() / h.order());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::super::group::generators::*;
    use super::super::{canonical_cyclic_subgroup, conjugacy_classes};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn table_for(generators: &[crate::algebra::Quaternion]) -> (FiniteGroup, Vec<ConjClass>, CharacterTable) {
        let g = FiniteGroup::generate(generators).unwrap();
        let classes = conjugacy_classes(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let table = CharacterTable::compute(&g, &classes, &mut rng).unwrap();
        (g, classes, table)
    }

    #[test]
    fn binary_tetrahedral_table() {
        let (_, _, table) = table_for(&binary_tetrahedral());
        assert_eq!(table.irrep_dims, vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(table.orthogonality_defect() < 1e-9);
        // Trivial character sorts first among dim-1 rows? Not guaranteed by
        // dimension alone; find it and check it is constant 1.
        let trivial = table
            .values
            .iter()
            .position(|row| row.iter().all(|z| (z - 1.0).norm() < 1e-9))
            .unwrap();
        assert_eq!(table.irrep_dims[trivial], 1);
    }

    #[test]
    fn binary_octahedral_and_icosahedral_tables() {
        let (_, _, t48) = table_for(&binary_octahedral());
        assert_eq!(t48.irrep_count(), 8);
        assert_eq!(t48.irrep_dims.iter().map(|d| d * d).sum::<usize>(), 48);
        let (g, classes, t120) = table_for(&binary_icosahedral());
        assert_eq!(t120.irrep_count(), 9);
        assert_eq!(t120.irrep_dims.iter().map(|d| d * d).sum::<usize>(), 120);
        assert!(t120.orthogonality_defect() < 1e-9);
        // −1 is central: |χ(−1)| = dim for every irrep.
        let class_of = class_of_elements(&g, &classes);
        let mc = class_of[g.minus_one().unwrap()];
        for (dim, row) in t120.irrep_dims.iter().zip(&t120.values) {
            assert!((row[mc].norm() - *dim as f64).abs() < 1e-9);
            assert!(row[mc].im.abs() < 1e-9);
        }
    }

    #[test]
    fn trivial_group_table() {
        let g = FiniteGroup::generate(&[]).unwrap();
        let classes = conjugacy_classes(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let table = CharacterTable::compute(&g, &classes, &mut rng).unwrap();
        assert_eq!(table.irrep_dims, vec![1]);
        assert!((table.values[0][0] - 1.0).norm() < 1e-12);
    }

    #[test]
    fn cyclic_character_values() {
        let chi = CyclicCharacter::new(6, 1);
        assert!((chi.value_at_power(3) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((chi.value_at_power(0) - 1.0).norm() < 1e-12);
        let conj = chi.conjugate();
        assert_eq!(conj.exponent, 5);
        for a in 0..6 {
            assert!((conj.value_at_power(a) - chi.value_at_power(a).conj()).norm() < 1e-12);
            // Homomorphism into U(1).
            for b in 0..6 {
                assert!(
                    (chi.value_at_power((a + b) % 6)
                        - chi.value_at_power(a) * chi.value_at_power(b))
                    .norm()
                        < 1e-12
                );
            }
        }
    }

    #[test]
    fn induced_dimensions_add_up() {
        let (g, classes, table) = table_for(&binary_tetrahedral());
        let h = canonical_cyclic_subgroup(&g, 6).unwrap();
        for rho in CyclicCharacter::all(6) {
            let decomposition =
                induced_decomposition(&g, &classes, &table, &h, &rho).unwrap();
            let total: usize = decomposition
                .iter()
                .map(|&(irrep, mult)| mult * table.irrep_dims[irrep])
                .sum();
            assert_eq!(total, 4);
        }
    }

    #[test]
    fn dodecahedral_induction_has_doubled_dim4_irrep() {
        let (g, classes, table) = table_for(&binary_icosahedral());
        let h = canonical_cyclic_subgroup(&g, 6).unwrap();
        let trivial = CyclicCharacter::new(6, 0);
        let decomposition = induced_decomposition(&g, &classes, &table, &h, &trivial).unwrap();
        let total: usize = decomposition
            .iter()
            .map(|&(irrep, mult)| mult * table.irrep_dims[irrep])
            .sum();
        assert_eq!(total, 20);
        assert!(decomposition
            .iter()
            .any(|&(irrep, mult)| table.irrep_dims[irrep] == 4 && mult == 2));
    }

    #[test]
    fn self_induction_of_trivial_character() {
        // G = H = Z_6 generated by (1+i+j+k)/2: inducing the trivial
        // character up to the whole group leaves just the trivial irrep.
        let (g, classes, table) = table_for(&[omega()]);
        assert_eq!(g.len(), 6);
        assert_eq!(table.irrep_dims, vec![1; 6]);
        let h = canonical_cyclic_subgroup(&g, 6).unwrap();
        assert_eq!(h.order(), 6);
        let decomposition =
            induced_decomposition(&g, &classes, &table, &h, &CyclicCharacter::new(6, 0)).unwrap();
        assert_eq!(decomposition.len(), 1);
        let (irrep, mult) = decomposition[0];
        assert_eq!(mult, 1);
        assert!(table.values[irrep].iter().all(|z| (z - 1.0).norm() < 1e-9));
    }
}

//! Acceptance suite: one test per closed-form claim of the catalog, at the
//! stated tolerance.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monopole_core::magnetic::{flux, gauge_transform};
use monopole_core::monopoles::Catalog;
use monopole_core::spectra::hermitian_eigenvalues;
use monopole_core::{HermitianMatrix, Solid, SpectrumLine, SpectrumMethod};

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::build(0).expect("catalog builds"))
}

const TOL: f64 = 1e-9;

fn assert_lines(actual: &[SpectrumLine], expected: &[(f64, usize)], what: &str) {
    assert_eq!(actual.len(), expected.len(), "{what}: line count");
    for (line, &(value, mult)) in actual.iter().zip(expected) {
        assert!(
            (line.eigenvalue - value).abs() <= TOL,
            "{what}: {} vs {value}",
            line.eigenvalue
        );
        assert_eq!(line.multiplicity, mult, "{what}: multiplicity at {value}");
    }
}

/// Checks one table row against its closed form by every applicable route:
/// numeric and (when a character carries the field) Frobenius adjacency,
/// plus the Laplacian as degree − adjacency.
fn assert_row(solid: Solid, chern: i64, adjacency: &[(f64, usize)]) {
    let case = catalog().case(solid);
    for k in [chern, -chern] {
        let k = case.normalize_chern(k).unwrap();
        let what = format!("{} chern {k}", solid.name());
        let numeric = case.spectrum_for_chern(k, SpectrumMethod::Numeric).unwrap();
        assert_lines(&numeric.lines, adjacency, &format!("{what} numeric"));
        let laplacian: Vec<(f64, usize)> = adjacency
            .iter()
            .rev()
            .map(|&(v, m)| (case.degree as f64 - v, m))
            .collect();
        let lap = case
            .laplacian_spectrum_for_chern(k, SpectrumMethod::Numeric)
            .unwrap();
        assert_lines(&lap.lines, &laplacian, &format!("{what} laplacian"));
        if case.row_for_chern(k).is_some() {
            let frobenius = case
                .spectrum_for_chern(k, SpectrumMethod::Frobenius)
                .unwrap();
            assert_lines(&frobenius.lines, adjacency, &format!("{what} frobenius"));
            let frob_lap = case
                .laplacian_spectrum_for_chern(k, SpectrumMethod::Frobenius)
                .unwrap();
            assert_lines(&frob_lap.lines, &laplacian, &format!("{what} frobenius laplacian"));
        }
    }
}

#[test]
fn criterion_01_tetrahedron_spectra() {
    let s3 = 3.0f64.sqrt();
    assert_row(Solid::Tetrahedron, 0, &[(-1.0, 3), (3.0, 1)]);
    assert_row(Solid::Tetrahedron, 1, &[(-s3, 2), (s3, 2)]);
    assert_row(Solid::Tetrahedron, 2, &[(-3.0, 1), (1.0, 3)]);
}

#[test]
fn criterion_02_octahedron_spectra() {
    let s2 = 2.0f64.sqrt();
    assert_row(Solid::Octahedron, 0, &[(-2.0, 2), (0.0, 3), (4.0, 1)]);
    assert_row(Solid::Octahedron, 1, &[(-s2, 4), (2.0 * s2, 2)]);
    assert_row(Solid::Octahedron, 2, &[(-2.0, 3), (2.0, 3)]);
    assert_row(Solid::Octahedron, 3, &[(-2.0 * s2, 2), (s2, 4)]);
    assert_row(Solid::Octahedron, 4, &[(-4.0, 1), (0.0, 3), (2.0, 2)]);
}

#[test]
fn criterion_03_cube_spectra() {
    let s3 = 3.0f64.sqrt();
    let s6 = 6.0f64.sqrt();
    assert_row(Solid::Cube, 0, &[(-3.0, 1), (-1.0, 3), (1.0, 3), (3.0, 1)]);
    assert_row(Solid::Cube, 1, &[(-s6, 2), (0.0, 4), (s6, 2)]);
    assert_row(Solid::Cube, 2, &[(-2.0, 3), (0.0, 2), (2.0, 3)]);
    assert_row(Solid::Cube, 3, &[(-s3, 4), (s3, 4)]);
}

#[test]
fn criterion_04_icosahedron_spectra() {
    let s5 = 5.0f64.sqrt();
    let half_p = ((5.0 + s5) / 2.0).sqrt();
    let half_m = ((5.0 - s5) / 2.0).sqrt();
    let two_p = (5.0 + 2.0 * s5).sqrt();
    let two_m = (5.0 - 2.0 * s5).sqrt();
    let five_p = (5.0 * (5.0 + s5) / 2.0).sqrt();
    let five_m = (5.0 * (5.0 - s5) / 2.0).sqrt();
    let golden_p = (3.0 + s5) / 2.0;
    let golden_m = (3.0 - s5) / 2.0;
    let round_p = (5.0 + s5) / 2.0;
    let round_m = (5.0 - s5) / 2.0;
    assert_row(Solid::Icosahedron, 0, &[(-s5, 3), (-1.0, 5), (s5, 3), (5.0, 1)]);
    assert_row(Solid::Icosahedron, 1, &[(-half_p, 6), (two_m, 4), (five_p, 2)]);
    assert_row(Solid::Icosahedron, 2, &[(-s5, 4), (-golden_m, 5), (round_p, 3)]);
    assert_row(Solid::Icosahedron, 3, &[(-five_m, 2), (-half_m, 6), (two_p, 4)]);
    assert_row(Solid::Icosahedron, 4, &[(-s5, 4), (-round_m, 3), (golden_p, 5)]);
    assert_row(Solid::Icosahedron, 5, &[(-s5, 6), (s5, 6)]);
    assert_row(Solid::Icosahedron, 6, &[(-golden_p, 5), (round_m, 3), (s5, 4)]);
    assert_row(Solid::Icosahedron, 7, &[(-two_p, 4), (half_m, 6), (five_m, 2)]);
    assert_row(Solid::Icosahedron, 8, &[(-round_p, 3), (golden_m, 5), (s5, 4)]);
    assert_row(Solid::Icosahedron, 9, &[(-five_p, 2), (-two_m, 4), (half_p, 6)]);
    assert_row(Solid::Icosahedron, 10, &[(-5.0, 1), (-s5, 3), (1.0, 5), (s5, 3)]);
    // the ±5 rows exist only through phase powers
    let case = catalog().case(Solid::Icosahedron);
    for k in [5, -5] {
        assert!(case.row_for_chern(k).is_none());
        assert!(case
            .spectrum_for_chern(k, SpectrumMethod::Frobenius)
            .is_err());
    }
}

#[test]
fn criterion_05_chern_numbers_are_integral_flux_sums() {
    for case in &catalog().cases {
        for k in case.chern_range() {
            let potential = case.potential_for_chern(k).unwrap();
            let mut total = 0.0;
            for face in &case.embedding.faces {
                let mut f = flux(&potential, face).unwrap();
                // fold the boundary fluxes of half-turn faces consistently
                if f <= -PI + 1e-9 {
                    f += 2.0 * PI;
                }
                total += f;
            }
            let cycles = total / (2.0 * PI);
            assert!(
                (cycles - cycles.round()).abs() <= TOL,
                "{} chern {k}: flux sum {cycles} not integral",
                case.solid.name()
            );
            assert_eq!(cycles.round() as i64, k, "{} chern {k}", case.solid.name());
        }
    }
}

#[test]
fn criterion_06_gauge_invariance_and_zero_modes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in &catalog().cases {
        let fields: Vec<_> = case
            .chern_range()
            .into_iter()
            .map(|k| {
                let p = case.potential_for_chern(k).unwrap();
                let fluxes: Vec<f64> = case
                    .embedding
                    .faces
                    .iter()
                    .map(|f| flux(&p, f).unwrap())
                    .collect();
                let eigen = hermitian_eigenvalues(&p.adjacency());
                (k, p, fluxes, eigen)
            })
            .collect();
        for _ in 0..100 {
            let sigma: Vec<f64> = (0..case.graph.vertex_count)
                .map(|_| rng.gen_range(-PI..PI))
                .collect();
            for (k, potential, fluxes, eigen) in &fields {
                let gauged = gauge_transform(potential, &sigma);
                for (face, original) in case.embedding.faces.iter().zip(fluxes) {
                    let diff = flux(&gauged, face).unwrap() - original;
                    let wrapped = (diff + PI).rem_euclid(2.0 * PI) - PI;
                    assert!(
                        wrapped.abs() <= 1e-12,
                        "{} chern {k}: flux moved {wrapped:e}",
                        case.solid.name()
                    );
                }
                for (a, b) in eigen
                    .iter()
                    .zip(hermitian_eigenvalues(&gauged.adjacency()))
                {
                    assert!(
                        (a - b).abs() <= 1e-10,
                        "{} chern {k}: eigenvalue moved {:e}",
                        case.solid.name(),
                        (a - b).abs()
                    );
                }
            }
        }
        // zero mode exactly for the flat field
        for (k, _, fluxes, _) in &fields {
            let flat = fluxes.iter().all(|f| {
                let w = (f + PI).rem_euclid(2.0 * PI) - PI;
                w.abs() <= TOL
            });
            let lap = case
                .laplacian_spectrum_for_chern(*k, SpectrumMethod::Numeric)
                .unwrap();
            let min = lap.lines[0].eigenvalue;
            assert_eq!(
                flat,
                min.abs() <= TOL,
                "{} chern {k}: min Laplacian eigenvalue {min}",
                case.solid.name()
            );
            assert_eq!(flat, *k == 0);
        }
    }
}

#[test]
fn criterion_07_dodecahedron_no_go() {
    let s5 = 5.0f64.sqrt();
    let cert = &catalog().nogo;
    assert_eq!(cert.searched_casimirs, 255);
    assert_eq!(cert.spectral_argument, (4, 2, 8, 5));
    assert_lines(
        &cert.reference_spectrum,
        &[(-s5, 3), (-2.0, 4), (0.0, 4), (1.0, 5), (s5, 3), (3.0, 1)],
        "dodecahedral adjacency",
    );
}

#[test]
fn criterion_08_pentadodecahedral_laplacian() {
    let s5 = 5.0f64.sqrt();
    let penta = &catalog().penta;
    assert_lines(
        penta.laplacian_lines(),
        &[
            (0.0, 1),
            (10.0 - 2.0 * s5, 3),
            (12.0, 5),
            (10.0 + 2.0 * s5, 3),
            (15.0, 8),
        ],
        "pentadodecahedral laplacian",
    );
    let fifteen: Vec<_> = penta
        .contributions
        .iter()
        .filter(|c| (c.eigenvalue - 15.0).abs() <= TOL)
        .collect();
    assert!(fifteen.iter().all(|c| c.irrep_dim == 4));
    assert_eq!(fifteen.iter().map(|c| c.multiplicity).sum::<usize>(), 2);
    assert_eq!(
        fifteen
            .iter()
            .map(|c| c.multiplicity * c.irrep_dim)
            .sum::<usize>(),
        8
    );
}

#[test]
fn criterion_09_wu_yang_oracle() {
    for q in 0..=5i64 {
        let levels = monopole_core::wu_yang_spectrum(q, 10);
        assert_eq!(levels.len(), 11);
        for (l, line) in levels.iter().enumerate() {
            let aq = q.unsigned_abs() as usize;
            assert_eq!(line.eigenvalue, (2 * l * (l + 1) + aq * (2 * l + 1)) as f64 / 2.0);
            assert_eq!(line.degeneracy, 2 * l + aq + 1);
        }
    }
}

#[test]
fn criterion_10_property_suites() {
    // character tables: orthogonality and the dimension formula
    for case in [Solid::Tetrahedron, Solid::Octahedron, Solid::Icosahedron] {
        let data = &catalog().case(case).data;
        let table = &data.table;
        let order = data.group.len();
        assert_eq!(
            table.irrep_dims.iter().map(|d| d * d).sum::<usize>(),
            order
        );
        for i in 0..table.irrep_dims.len() {
            for j in 0..table.irrep_dims.len() {
                let inner: Complex64 = (0..table.class_sizes.len())
                    .map(|c| {
                        table.values[i][c] * table.values[j][c].conj()
                            * table.class_sizes[c] as f64
                    })
                    .sum::<Complex64>()
                    / order as f64;
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (inner - expect).norm() <= TOL,
                    "orthogonality ({i},{j}) = {inner}"
                );
            }
        }
    }

    // Frobenius multiplicities: integral (construction rejects anything else)
    // and filling the coset space
    for case in &catalog().cases {
        for row in &case.rows {
            if let Some(m) = row.monopole() {
                let total: usize = m.frobenius_lines.iter().map(|l| l.multiplicity).sum();
                assert_eq!(total, case.graph.vertex_count);
            }
        }
    }

    // spectra symmetric under k ↦ −k
    for case in &catalog().cases {
        for k in case.chern_range() {
            let plus = case.spectrum_for_chern(k, SpectrumMethod::Numeric).unwrap();
            let minus = case
                .spectrum_for_chern(-k, SpectrumMethod::Numeric)
                .unwrap();
            assert_eq!(plus.lines.len(), minus.lines.len());
            for (a, b) in plus.lines.iter().zip(&minus.lines) {
                assert!((a.eigenvalue - b.eigenvalue).abs() <= TOL);
                assert_eq!(a.multiplicity, b.multiplicity);
            }
        }
    }

    // eigensolver trace identities on random Hermitian matrices
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=64);
        let mut entries = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            entries[i][i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            for j in i + 1..n {
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                entries[i][j] = z;
                entries[j][i] = z.conj();
            }
        }
        let trace: f64 = (0..n).map(|i| entries[i][i].re).sum();
        let trace_sq: f64 = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (entries[i][j] * entries[j][i]).re)
                    .sum::<f64>()
            })
            .sum();
        let a = HermitianMatrix::new(entries).unwrap();
        let eigen = hermitian_eigenvalues(&a);
        let sum: f64 = eigen.iter().sum();
        let sum_sq: f64 = eigen.iter().map(|v| v * v).sum();
        assert!((sum - trace).abs() <= 1e-9 * n as f64, "Σλ = {sum} vs {trace}");
        assert!(
            (sum_sq - trace_sq).abs() <= 1e-8 * n as f64,
            "Σλ² = {sum_sq} vs {trace_sq}"
        );
    }
}

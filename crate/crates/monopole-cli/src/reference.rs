//! Closed-form spectra the verification scopes compare against.

use monopole_core::{Solid, SpectrumLine};

fn lines(pairs: &[(f64, usize)]) -> Vec<SpectrumLine> {
    pairs
        .iter()
        .map(|&(v, m)| SpectrumLine::new(v, m))
        .collect()
}

/// Tabulated adjacency spectrum at |Chern| = k, ascending.
pub fn adjacency_reference(solid: Solid, chern: i64) -> Option<Vec<SpectrumLine>> {
    let s2 = 2.0f64.sqrt();
    let s3 = 3.0f64.sqrt();
    let s5 = 5.0f64.sqrt();
    let s6 = 6.0f64.sqrt();
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
    let pairs: &[(f64, usize)] = match (solid, chern.unsigned_abs()) {
        (Solid::Tetrahedron, 0) => &[(-1.0, 3), (3.0, 1)],
        (Solid::Tetrahedron, 1) => &[(-s3, 2), (s3, 2)],
        (Solid::Tetrahedron, 2) => &[(-3.0, 1), (1.0, 3)],
        (Solid::Octahedron, 0) => &[(-2.0, 2), (0.0, 3), (4.0, 1)],
        (Solid::Octahedron, 1) => &[(-s2, 4), (2.0 * s2, 2)],
        (Solid::Octahedron, 2) => &[(-2.0, 3), (2.0, 3)],
        (Solid::Octahedron, 3) => &[(-2.0 * s2, 2), (s2, 4)],
        (Solid::Octahedron, 4) => &[(-4.0, 1), (0.0, 3), (2.0, 2)],
        (Solid::Cube, 0) => &[(-3.0, 1), (-1.0, 3), (1.0, 3), (3.0, 1)],
        (Solid::Cube, 1) => &[(-s6, 2), (0.0, 4), (s6, 2)],
        (Solid::Cube, 2) => &[(-2.0, 3), (0.0, 2), (2.0, 3)],
        (Solid::Cube, 3) => &[(-s3, 4), (s3, 4)],
        (Solid::Icosahedron, 0) => &[(-s5, 3), (-1.0, 5), (s5, 3), (5.0, 1)],
        (Solid::Icosahedron, 1) => &[(-half_p, 6), (two_m, 4), (five_p, 2)],
        (Solid::Icosahedron, 2) => &[(-s5, 4), (-golden_m, 5), (round_p, 3)],
        (Solid::Icosahedron, 3) => &[(-five_m, 2), (-half_m, 6), (two_p, 4)],
        (Solid::Icosahedron, 4) => &[(-s5, 4), (-round_m, 3), (golden_p, 5)],
        (Solid::Icosahedron, 5) => &[(-s5, 6), (s5, 6)],
        (Solid::Icosahedron, 6) => &[(-golden_p, 5), (round_m, 3), (s5, 4)],
        (Solid::Icosahedron, 7) => &[(-two_p, 4), (half_m, 6), (five_m, 2)],
        (Solid::Icosahedron, 8) => &[(-round_p, 3), (golden_m, 5), (s5, 4)],
        (Solid::Icosahedron, 9) => &[(-five_p, 2), (-two_m, 4), (half_p, 6)],
        (Solid::Icosahedron, 10) => &[(-5.0, 1), (-s5, 3), (1.0, 5), (s5, 3)],
        _ => return None,
    };
    Some(lines(pairs))
}

/// Adjacency spectrum of the plain dodecahedral graph.
pub fn dodecahedral_reference() -> Vec<SpectrumLine> {
    let s5 = 5.0f64.sqrt();
    lines(&[(-s5, 3), (-2.0, 4), (0.0, 4), (1.0, 5), (s5, 3), (3.0, 1)])
}

/// Laplacian spectrum of the pentadodecahedral multigraph.
pub fn pentadodecahedral_reference() -> Vec<SpectrumLine> {
    let s5 = 5.0f64.sqrt();
    lines(&[
        (0.0, 1),
        (10.0 - 2.0 * s5, 3),
        (12.0, 5),
        (10.0 + 2.0 * s5, 3),
        (15.0, 8),
    ])
}

/// Name for an eigenvalue that matches a known closed form within 1e-9.
pub fn closed_form(value: f64) -> Option<String> {
    let s5 = 5.0f64.sqrt();
    let table = [
        ("√2", 2.0f64.sqrt()),
        ("√3", 3.0f64.sqrt()),
        ("√5", s5),
        ("√6", 6.0f64.sqrt()),
        ("(3+√5)/2", (3.0 + s5) / 2.0),
        ("(3−√5)/2", (3.0 - s5) / 2.0),
        ("√((5+√5)/2)", ((5.0 + s5) / 2.0).sqrt()),
        ("√((5−√5)/2)", ((5.0 - s5) / 2.0).sqrt()),
        ("√(5+2√5)", (5.0 + 2.0 * s5).sqrt()),
        ("√(5−2√5)", (5.0 - 2.0 * s5).sqrt()),
        ("√(5(5+√5)/2)", (5.0 * (5.0 + s5) / 2.0).sqrt()),
        ("√(5(5−√5)/2)", (5.0 * (5.0 - s5) / 2.0).sqrt()),
    ];
    for (name, v) in table {
        if (value - v).abs() <= 1e-9 {
            return Some(name.to_string());
        }
        if (value + v).abs() <= 1e-9 {
            return Some(format!("−{name}"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reference_row_fills_the_vertex_count() {
        for solid in Solid::ALL {
            let max = solid.face_count() as i64 / 2;
            for k in 0..=max {
                let lines = adjacency_reference(solid, k).unwrap();
                let total: usize = lines.iter().map(|l| l.multiplicity).sum();
                assert_eq!(total, solid.vertex_count(), "{} {k}", solid.name());
                assert!(lines
                    .windows(2)
                    .all(|w| w[0].eigenvalue < w[1].eigenvalue));
            }
            assert!(adjacency_reference(solid, max + 1).is_none());
        }
    }

    #[test]
    fn closed_forms_label_the_icosahedral_values() {
        assert_eq!(closed_form(5.0f64.sqrt()).unwrap(), "√5");
        assert_eq!(closed_form(-(3.0f64.sqrt())).unwrap(), "−√3");
        assert_eq!(
            closed_form(-((5.0 + 5.0f64.sqrt()) / 2.0).sqrt()).unwrap(),
            "−√((5+√5)/2)"
        );
        assert!(closed_form(0.5).is_none());
    }
}

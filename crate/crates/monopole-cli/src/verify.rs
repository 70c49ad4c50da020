//! The verification scopes behind `monopole verify`.

use std::f64::consts::PI;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monopole_core::magnetic::{flux, gauge_transform};
use monopole_core::monopoles::{laplacian_lines, Catalog, MonopoleCase};
use monopole_core::spectra::{cross_validate, hermitian_eigenvalues};
use monopole_core::{Solid, SpectrumMethod};

use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    Tables,
    Gauge,
    Nogo,
    Penta,
    Wuyang,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn of(name: impl Into<String>, outcome: Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => Self {
                name: name.into(),
                passed: true,
                detail,
            },
            Err(detail) => Self {
                name: name.into(),
                passed: false,
                detail,
            },
        }
    }
}

pub fn run(
    catalog: &Catalog,
    scope: Scope,
    tol: f64,
    seed: u64,
    q: Option<i64>,
    lmax: Option<usize>,
) -> Vec<Check> {
    match scope {
        Scope::All => {
            let mut checks = run(catalog, Scope::Tables, tol, seed, q, lmax);
            checks.extend(run(catalog, Scope::Gauge, tol, seed, q, lmax));
            checks.extend(run(catalog, Scope::Nogo, tol, seed, q, lmax));
            checks.extend(run(catalog, Scope::Penta, tol, seed, q, lmax));
            checks.extend(run(catalog, Scope::Wuyang, tol, seed, q, lmax));
            checks
        }
        Scope::Tables => tables(catalog, tol),
        Scope::Gauge => gauge(catalog, seed),
        Scope::Nogo => nogo(catalog, tol),
        Scope::Penta => penta(catalog, tol),
        Scope::Wuyang => wuyang(q, lmax),
    }
}

fn table_rows(case: &MonopoleCase, tol: f64) -> Result<String, String> {
    let mut max_delta = 0.0f64;
    let mut rows = 0usize;
    for k in 0..=case.max_chern() {
        let reference = reference::adjacency_reference(case.solid, k)
            .ok_or_else(|| format!("no reference row for |Chern| = {k}"))?;
        rows += 1;
        for signed in if k == 0 { vec![0] } else { vec![k, -k] } {
            let err = |stage: &str, e: String| format!("Chern {signed} {stage}: {e}");
            let numeric = case
                .spectrum_for_chern(signed, SpectrumMethod::Numeric)
                .map_err(|e| err("numeric", e.to_string()))?;
            let cv = cross_validate(&numeric.lines, &reference, tol)
                .map_err(|e| err("numeric", e.to_string()))?;
            max_delta = max_delta.max(cv.max_delta);
            let lap = case
                .laplacian_spectrum_for_chern(signed, SpectrumMethod::Numeric)
                .map_err(|e| err("laplacian", e.to_string()))?;
            let cv = cross_validate(&lap.lines, &laplacian_lines(&reference, case.degree), tol)
                .map_err(|e| err("laplacian", e.to_string()))?;
            max_delta = max_delta.max(cv.max_delta);
            let normalized = case.normalize_chern(signed).map_err(|e| e.to_string())?;
            if case.row_for_chern(normalized).is_some() {
                let frob = case
                    .spectrum_for_chern(signed, SpectrumMethod::Frobenius)
                    .map_err(|e| err("frobenius", e.to_string()))?;
                let cv = cross_validate(&frob.lines, &reference, tol)
                    .map_err(|e| err("frobenius", e.to_string()))?;
                max_delta = max_delta.max(cv.max_delta);
            }
        }
    }
    Ok(format!(
        "{rows} rows matched within {tol:.0e}; max |Δ| = {max_delta:.2e}"
    ))
}

fn tables(catalog: &Catalog, tol: f64) -> Vec<Check> {
    Solid::ALL
        .iter()
        .map(|&solid| {
            Check::of(
                format!("table {}", solid.name()),
                table_rows(catalog.case(solid), tol),
            )
        })
        .collect()
}

const GAUGE_DRAWS: usize = 100;
const FLUX_TOL: f64 = 1e-12;
const SPECTRUM_TOL: f64 = 1e-10;

fn principal(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    t
}

fn gauge_case(case: &MonopoleCase, rng: &mut impl Rng) -> Result<String, String> {
    let range = case.chern_range();
    let mut bases = Vec::new();
    for &k in &range {
        let potential = case.potential_for_chern(k).map_err(|e| e.to_string())?;
        let fluxes: Vec<f64> = case
            .embedding
            .faces
            .iter()
            .map(|face| flux(&potential, face))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let eigen = hermitian_eigenvalues(&potential.adjacency());
        bases.push((k, potential, fluxes, eigen));
    }
    let n = case.graph.vertex_count;
    for draw in 0..GAUGE_DRAWS {
        let sigma: Vec<f64> = (0..n).map(|_| rng.gen_range(-PI..PI)).collect();
        for (k, potential, fluxes, _) in &bases {
            let gauged = gauge_transform(potential, &sigma);
            for (face, original) in case.embedding.faces.iter().zip(fluxes) {
                let f = flux(&gauged, face).map_err(|e| e.to_string())?;
                if principal(f - original).abs() > FLUX_TOL {
                    return Err(format!(
                        "Chern {k}: flux moved by {:.2e} under a gauge change",
                        principal(f - original).abs()
                    ));
                }
            }
        }
        // eigenvalues are exactly conjugation-invariant; spot-check one field
        // per draw, cycling through the whole range
        let (k, potential, _, eigen) = &bases[draw % bases.len()];
        let gauged = gauge_transform(potential, &sigma);
        let moved = hermitian_eigenvalues(&gauged.adjacency());
        for (a, b) in eigen.iter().zip(&moved) {
            if (a - b).abs() > SPECTRUM_TOL {
                return Err(format!(
                    "Chern {k}: eigenvalue moved by {:.2e} under a gauge change",
                    (a - b).abs()
                ));
            }
        }
    }
    Ok(format!(
        "{GAUGE_DRAWS} gauge changes × {} fields: fluxes within {FLUX_TOL:.0e}, spectra within {SPECTRUM_TOL:.0e}",
        range.len()
    ))
}

fn zero_mode(catalog: &Catalog) -> Result<String, String> {
    let mut pairs = 0usize;
    for case in &catalog.cases {
        for k in case.chern_range() {
            let potential = case.potential_for_chern(k).map_err(|e| e.to_string())?;
            let flat = case
                .embedding
                .faces
                .iter()
                .map(|face| flux(&potential, face).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?
                .iter()
                .all(|f| principal(*f).abs() <= 1e-9);
            let lap = case
                .laplacian_spectrum_for_chern(k, SpectrumMethod::Numeric)
                .map_err(|e| e.to_string())?;
            let min = lap.lines.first().map(|l| l.eigenvalue).unwrap_or(f64::NAN);
            if flat != (min.abs() <= 1e-9) {
                return Err(format!(
                    "{} Chern {k}: min Laplacian eigenvalue {min:.3e}, fluxes {} zero",
                    case.solid.name(),
                    if flat { "all" } else { "not all" }
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} (case, field) pairs: zero mode present exactly when every flux vanishes"
    ))
}

fn gauge(catalog: &Catalog, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut checks: Vec<Check> = catalog
        .cases
        .iter()
        .map(|case| {
            Check::of(
                format!("gauge {}", case.solid.name()),
                gauge_case(case, &mut rng),
            )
        })
        .collect();
    checks.push(Check::of("zero-mode criterion", zero_mode(catalog)));
    checks
}

fn nogo(catalog: &Catalog, tol: f64) -> Vec<Check> {
    let cert = &catalog.nogo;
    let search = if cert.searched_casimirs == 255 {
        Ok("255 inverse-closed class unions searched, none is dodecahedral".into())
    } else {
        Err(format!(
            "searched {} candidates, expected 255",
            cert.searched_casimirs
        ))
    };
    let (dim, mult, implied, max) = cert.spectral_argument;
    let spectral = if (dim, mult) == (4, 2) && implied == 8 && max == 5 {
        Ok("dim-4 irrep × 2 forces multiplicity 8 > 5".into())
    } else {
        Err(format!(
            "got dim {dim} × mult {mult} ⇒ {implied}, reference max {max}"
        ))
    };
    let reference = cross_validate(
        &cert.reference_spectrum,
        &reference::dodecahedral_reference(),
        tol,
    )
    .map(|cv| format!("6 lines matched; max |Δ| = {:.2e}", cv.max_delta))
    .map_err(|e| e.to_string());
    vec![
        Check::of("no-go search", search),
        Check::of("no-go decomposition", spectral),
        Check::of("no-go reference spectrum", reference),
    ]
}

fn penta(catalog: &Catalog, tol: f64) -> Vec<Check> {
    let case = &catalog.penta;
    let spectrum = cross_validate(
        case.laplacian_lines(),
        &reference::pentadodecahedral_reference(),
        tol,
    )
    .map(|cv| format!("5 lines matched; max |Δ| = {:.2e}", cv.max_delta))
    .map_err(|e| e.to_string());

    let block: Vec<_> = case
        .contributions
        .iter()
        .filter(|c| (c.eigenvalue - 15.0).abs() <= 1e-9)
        .collect();
    let copies: usize = block.iter().map(|c| c.multiplicity).sum();
    let total: usize = block.iter().map(|c| c.multiplicity * c.irrep_dim).sum();
    let fifteen = if block.iter().all(|c| c.irrep_dim == 4) && copies == 2 && total == 8 {
        Ok("two dim-4 summands share eigenvalue 15, total multiplicity 8".into())
    } else {
        Err(format!(
            "eigenvalue-15 block: {copies} summands, total multiplicity {total}"
        ))
    };

    let graph = &case.graph;
    let shape = (|| {
        if graph.vertex_count != 20 {
            return Err(format!("vertex count {}", graph.vertex_count));
        }
        if graph.loops.iter().any(|&l| l != 0) {
            return Err("unexpected loops".into());
        }
        for v in 0..graph.vertex_count {
            let mut single = 0;
            let mut double = 0;
            for &(x, y, m) in &graph.edges {
                if x == v || y == v {
                    match m {
                        1 => single += 1,
                        2 => double += 1,
                        m => return Err(format!("edge multiplicity {m}")),
                    }
                }
            }
            if (single, double) != (6, 3) {
                return Err(format!(
                    "vertex {v} has {single} single and {double} double edges"
                ));
            }
        }
        Ok("20 vertices, each on 6 single and 3 double edges".into())
    })();

    vec![
        Check::of("pentadodecahedral spectrum", spectrum),
        Check::of("pentadodecahedral eigenvalue-15 block", fifteen),
        Check::of("pentadodecahedral graph", shape),
    ]
}

fn wuyang(q: Option<i64>, lmax: Option<usize>) -> Vec<Check> {
    let qs: Vec<i64> = match q {
        Some(q) => vec![q],
        None => (0..=5).collect(),
    };
    let lmax = lmax.unwrap_or(10);
    qs.iter()
        .map(|&q| {
            let levels = monopole_core::wu_yang_spectrum(q, lmax);
            let outcome = (|| {
                for (l, line) in levels.iter().enumerate() {
                    let aq = q.unsigned_abs() as usize;
                    let eigen = (2 * l * (l + 1) + aq * (2 * l + 1)) as f64 / 2.0;
                    if line.eigenvalue != eigen || line.degeneracy != 2 * l + aq + 1 {
                        return Err(format!("level l = {l} off the closed form"));
                    }
                }
                let degeneracies: Vec<String> =
                    levels.iter().map(|l| l.degeneracy.to_string()).collect();
                Ok(format!(
                    "l = 0..{lmax}: degeneracies {}",
                    degeneracies.join(", ")
                ))
            })();
            Check::of(format!("wu-yang q = {q}"), outcome)
        })
        .collect()
}

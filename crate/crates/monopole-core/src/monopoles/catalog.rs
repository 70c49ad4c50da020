//! The case catalog: one solved monopole family per Platonic solid.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde_json::json;

use crate::algebra::Quaternion;
use crate::graphs::{
    attach_embedding, build_graph, is_good_triple, CosetGraph, GraphMode, PlanarEmbedding, Solid,
};
use crate::groups::{
    canonical_cyclic_subgroup, conjugacy_classes, coset_space, generators, CasimirElement,
    CharacterTable, ConjClass, CosetSpace, CyclicCharacter, FiniteGroup, Subgroup,
};
use crate::magnetic::{
    chern_number, flux, induced_casimir_matrix, magnetic_adjacency, magnetic_laplacian,
    magnetic_potential, phase_power, principal_angle, unit_potential, HermitianMatrix,
    MagneticError, MagneticPotential,
};
use crate::spectra::{
    cluster_multiplicities, cross_validate, frobenius_spectrum, hermitian_eigenvalues, Spectrum,
    SpectrumLine, SpectrumMethod,
};

use super::nogo::{dodecahedron_no_go, NoGoCertificate};
use super::penta::{pentadodecahedral_case, PentaCase};
use super::search::find_good_casimirs;
use super::MonopoleError;

/// Tolerance for clustering numeric eigenvalues into spectrum lines.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Tolerance for the consistency checks run while the catalog is built.
pub const CHECK_TOL: f64 = 1e-9;

/// A binary polyhedral group bundled with its conjugacy classes and
/// character table, shared between the cases that live on it.
#[derive(Debug)]
pub struct GroupData {
    pub group: FiniteGroup,
    pub classes: Vec<ConjClass>,
    pub table: CharacterTable,
}

impl GroupData {
    pub fn new(gens: &[Quaternion], rng: &mut impl Rng) -> Result<Self, MonopoleError> {
        let group = FiniteGroup::generate(gens)
            .map_err(|e| MonopoleError::CatalogInconsistent(format!("group closure: {e}")))?;
        let classes = conjugacy_classes(&group);
        let table = CharacterTable::compute(&group, &classes, rng)
            .map_err(|e| MonopoleError::CatalogInconsistent(format!("character table: {e}")))?;
        Ok(Self {
            group,
            classes,
            table,
        })
    }
}

/// Everything computed for a character whose induced Casimir matrix carries
/// a genuine unit-modulus potential.
#[derive(Debug, Clone)]
pub struct MonopoleRow {
    pub exponent: i64,
    pub chern: i64,
    /// Common modulus of the off-diagonal Casimir entries.
    pub p: f64,
    /// Constant diagonal of the induced Casimir matrix.
    pub q: f64,
    /// Normalised phased adjacency matrix (C_ρ − qI)/p.
    pub adjacency: HermitianMatrix,
    pub adjacency_lines: Vec<SpectrumLine>,
    pub frobenius_lines: Vec<SpectrumLine>,
    pub laplacian_lines: Vec<SpectrumLine>,
}

/// Outcome of inducing from one character of the cyclic subgroup.
#[derive(Debug, Clone)]
pub enum CharacterRow {
    Monopole(MonopoleRow),
    /// The off-diagonal edge sums cancel; no potential can be read off.
    Degenerate { exponent: i64 },
}

impl CharacterRow {
    pub fn exponent(&self) -> i64 {
        match self {
            CharacterRow::Monopole(row) => row.exponent,
            CharacterRow::Degenerate { exponent } => *exponent,
        }
    }

    pub fn monopole(&self) -> Option<&MonopoleRow> {
        match self {
            CharacterRow::Monopole(row) => Some(row),
            CharacterRow::Degenerate { .. } => None,
        }
    }
}

/// One solved solid: the group data, the subgroup and Casimir element, the
/// coset graph with its planar embedding, and the full table of characters.
#[derive(Debug)]
pub struct MonopoleCase {
    pub solid: Solid,
    pub data: Arc<GroupData>,
    pub subgroup: Subgroup,
    pub casimir: CasimirElement,
    pub space: CosetSpace,
    pub graph: CosetGraph,
    pub embedding: PlanarEmbedding,
    pub degree: usize,
    pub rows: Vec<CharacterRow>,
    chern_rows: BTreeMap<i64, usize>,
    base_row: usize,
}

impl MonopoleCase {
    pub fn group(&self) -> &FiniteGroup {
        &self.data.group
    }

    /// Largest admissible Chern number: half the face count.
    pub fn max_chern(&self) -> i64 {
        self.embedding.faces.len() as i64 / 2
    }

    /// All admissible Chern numbers (−F/2, F/2], ascending.
    pub fn chern_range(&self) -> Vec<i64> {
        (1 - self.max_chern()..=self.max_chern()).collect()
    }

    /// Folds k into (−F/2, F/2]; −F/2 names the same field as F/2.
    pub fn normalize_chern(&self, chern: i64) -> Result<i64, MonopoleError> {
        let max = self.max_chern();
        if chern == -max {
            Ok(max)
        } else if -max < chern && chern <= max {
            Ok(chern)
        } else {
            Err(MonopoleError::OutOfRange { chern, max })
        }
    }

    /// The character row realising this Chern number directly, if any.
    pub fn row_for_chern(&self, chern: i64) -> Option<&MonopoleRow> {
        self.chern_rows
            .get(&chern)
            .and_then(|&i| self.rows[i].monopole())
    }

    /// The character exponent realising this Chern number directly, if any.
    pub fn exponent_for_chern(&self, chern: i64) -> Option<i64> {
        self.row_for_chern(chern).map(|row| row.exponent)
    }

    /// Phased adjacency with total flux 2πk: a character row where one
    /// exists, otherwise the k-th entrywise phase power of the unit-flux row.
    pub fn adjacency_for_chern(&self, chern: i64) -> Result<HermitianMatrix, MonopoleError> {
        let k = self.normalize_chern(chern)?;
        if let Some(row) = self.row_for_chern(k) {
            return Ok(row.adjacency.clone());
        }
        let base = self.rows[self.base_row]
            .monopole()
            .expect("base row carries the unit-Chern potential");
        Ok(phase_power(&base.adjacency, k))
    }

    pub fn potential_for_chern(&self, chern: i64) -> Result<MagneticPotential, MonopoleError> {
        let a = self.adjacency_for_chern(chern)?;
        unit_potential(&a).map_err(|e| {
            MonopoleError::CatalogInconsistent(format!(
                "{}: potential at Chern {chern}: {e}",
                self.solid.name()
            ))
        })
    }

    /// Adjacency spectrum at the given Chern number. The Frobenius route
    /// needs a character behind the field, so it reports the phase-power-only
    /// entries as degenerate.
    pub fn spectrum_for_chern(
        &self,
        chern: i64,
        method: SpectrumMethod,
    ) -> Result<Spectrum, MonopoleError> {
        let k = self.normalize_chern(chern)?;
        match method {
            SpectrumMethod::Frobenius => match self.row_for_chern(k) {
                Some(row) => Ok(Spectrum {
                    lines: row.frobenius_lines.clone(),
                    method,
                    tolerance: CHECK_TOL,
                }),
                None => Err(MonopoleError::DegenerateCharacter { chern: k }),
            },
            SpectrumMethod::Numeric => {
                if let Some(row) = self.row_for_chern(k) {
                    return Ok(Spectrum {
                        lines: row.adjacency_lines.clone(),
                        method,
                        tolerance: CLUSTER_TOL,
                    });
                }
                let a = self.adjacency_for_chern(k)?;
                let lines = cluster_multiplicities(&hermitian_eigenvalues(&a), CLUSTER_TOL)
                    .map_err(|e| {
                        MonopoleError::CatalogInconsistent(format!(
                            "{}: clustering at Chern {k}: {e}",
                            self.solid.name()
                        ))
                    })?;
                Ok(Spectrum {
                    lines,
                    method,
                    tolerance: CLUSTER_TOL,
                })
            }
        }
    }

    /// Laplacian spectrum dI − A at the given Chern number.
    pub fn laplacian_spectrum_for_chern(
        &self,
        chern: i64,
        method: SpectrumMethod,
    ) -> Result<Spectrum, MonopoleError> {
        let spectrum = self.spectrum_for_chern(chern, method)?;
        Ok(Spectrum {
            lines: laplacian_lines(&spectrum.lines, self.degree),
            ..spectrum
        })
    }

    pub fn export(&self) -> serde_json::Value {
        let characters: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| match row {
                CharacterRow::Monopole(m) => json!({
                    "exponent": m.exponent,
                    "status": "ok",
                    "chern": m.chern,
                    "p": m.p,
                    "q": m.q,
                    "adjacency_spectrum": m.adjacency_lines,
                    "laplacian_spectrum": m.laplacian_lines,
                }),
                CharacterRow::Degenerate { exponent } => json!({
                    "exponent": exponent,
                    "status": "degenerate",
                }),
            })
            .collect();
        json!({
            "solid": self.solid.name(),
            "group_order": self.group().len(),
            "subgroup_order": self.subgroup.order(),
            "vertices": self.graph.vertex_count,
            "degree": self.degree,
            "faces": self.embedding.faces.len(),
            "max_chern": self.max_chern(),
            "casimir_class_ids": self.casimir.class_ids,
            "casimir_summands": self.casimir.summand_count(),
            "characters": characters,
        })
    }
}

/// Adjacency lines pushed through λ ↦ d − λ, re-sorted ascending.
pub fn laplacian_lines(adjacency: &[SpectrumLine], degree: usize) -> Vec<SpectrumLine> {
    adjacency
        .iter()
        .rev()
        .map(|l| SpectrumLine::new(degree as f64 - l.eigenvalue, l.multiplicity))
        .collect()
}

fn inconsistent(solid: Solid, msg: impl std::fmt::Display) -> MonopoleError {
    MonopoleError::CatalogInconsistent(format!("{}: {msg}", solid.name()))
}

/// Builds one case on an explicitly given cyclic subgroup.
pub fn build_case_with_subgroup(
    solid: Solid,
    data: &Arc<GroupData>,
    subgroup: Subgroup,
    casimir: CasimirElement,
) -> Result<MonopoleCase, MonopoleError> {
    let g = &data.group;
    let space = coset_space(g, &subgroup);
    let graph = build_graph(g, &space, &casimir, GraphMode::Simple);
    if !is_good_triple(g, &space, &graph) {
        return Err(inconsistent(solid, "edges form more than one orbit"));
    }
    let degree = match graph.is_regular() {
        Some(d) if d >= 1 => d,
        _ => return Err(inconsistent(solid, "coset graph is not regular")),
    };
    let embedding =
        attach_embedding(&graph, solid).map_err(|e| inconsistent(solid, format!("{e}")))?;
    let faces = embedding.faces.len() as i64;
    let max = faces / 2;

    let mut rows = Vec::with_capacity(subgroup.order());
    for exponent in 0..subgroup.order() as i64 {
        let rho = CyclicCharacter::new(subgroup.order(), exponent);
        let cm = induced_casimir_matrix(g, &subgroup, &rho, &casimir, &space, &graph);
        let p = match cm.p() {
            Ok(p) => p,
            Err(MagneticError::DegenerateSum) => {
                rows.push(CharacterRow::Degenerate { exponent });
                continue;
            }
            Err(e) => return Err(inconsistent(solid, format!("exponent {exponent}: {e}"))),
        };
        let q = cm.q;
        let adjacency =
            magnetic_adjacency(&cm).map_err(|e| inconsistent(solid, format!("{e}")))?;
        let potential =
            magnetic_potential(&cm).map_err(|e| inconsistent(solid, format!("{e}")))?;
        let chern = chern_number(&potential, &embedding)
            .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        if chern <= -max || chern > max {
            return Err(inconsistent(
                solid,
                format!("exponent {exponent}: Chern {chern} outside (−{max}, {max}]"),
            ));
        }
        // every face must carry the same flux 2π·chern/F up to whole turns
        let uniform = 2.0 * PI * chern as f64 / faces as f64;
        for face in &embedding.faces {
            let f = flux(&potential, face).map_err(|e| inconsistent(solid, format!("{e}")))?;
            if principal_angle(f - uniform).abs() > 1e-8 {
                return Err(inconsistent(
                    solid,
                    format!("exponent {exponent}: non-uniform face flux {f}"),
                ));
            }
        }
        let adjacency_lines =
            cluster_multiplicities(&hermitian_eigenvalues(&adjacency), CLUSTER_TOL)
                .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        let frobenius_lines = frobenius_spectrum(
            g,
            &data.classes,
            &data.table,
            &subgroup,
            &rho,
            &casimir,
            p,
            q,
        )
        .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        cross_validate(&adjacency_lines, &frobenius_lines, CHECK_TOL)
            .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        let laplacian = magnetic_laplacian(&adjacency, degree);
        let numeric_laplacian =
            cluster_multiplicities(&hermitian_eigenvalues(&laplacian), CLUSTER_TOL)
                .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        cross_validate(
            &numeric_laplacian,
            &laplacian_lines(&adjacency_lines, degree),
            CHECK_TOL,
        )
        .map_err(|e| inconsistent(solid, format!("exponent {exponent}: {e}")))?;
        rows.push(CharacterRow::Monopole(MonopoleRow {
            exponent,
            chern,
            p,
            q,
            adjacency,
            adjacency_lines,
            frobenius_lines,
            laplacian_lines: numeric_laplacian,
        }));
    }

    // conjugate characters carry opposite fields (mod one flux quantum per face)
    let n = subgroup.order() as i64;
    for row in &rows {
        if let CharacterRow::Monopole(m) = row {
            let conj = rows
                .iter()
                .find(|r| r.exponent() == (n - m.exponent) % n)
                .expect("conjugate exponent is in range");
            if let CharacterRow::Monopole(c) = conj {
                if (m.chern + c.chern).rem_euclid(faces) != 0 {
                    return Err(inconsistent(
                        solid,
                        format!(
                            "conjugate exponents {} and {} carry Chern {} and {}",
                            m.exponent, c.exponent, m.chern, c.chern
                        ),
                    ));
                }
            }
        }
    }

    let mut chern_rows = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        if let CharacterRow::Monopole(m) = row {
            chern_rows.entry(m.chern).or_insert(i);
        }
    }
    if !chern_rows.contains_key(&0) {
        return Err(inconsistent(solid, "no flat row"));
    }
    let base_row = *chern_rows
        .get(&1)
        .ok_or_else(|| inconsistent(solid, "no unit-Chern row"))?;

    Ok(MonopoleCase {
        solid,
        data: Arc::clone(data),
        subgroup,
        casimir,
        space,
        graph,
        embedding,
        degree,
        rows,
        chern_rows,
        base_row,
    })
}

fn build_case(
    solid: Solid,
    data: &Arc<GroupData>,
    subgroup_order: usize,
    casimir: CasimirElement,
) -> Result<MonopoleCase, MonopoleError> {
    let h = canonical_cyclic_subgroup(&data.group, subgroup_order)
        .map_err(|e| inconsistent(solid, format!("{e}")))?;
    build_case_with_subgroup(solid, data, h, casimir)
}

/// True when some character of H induces a potential of Chern number +1.
fn has_unit_chern(
    data: &GroupData,
    solid: Solid,
    h: &Subgroup,
    casimir: &CasimirElement,
) -> bool {
    let g = &data.group;
    let space = coset_space(g, h);
    let graph = build_graph(g, &space, casimir, GraphMode::Simple);
    let Ok(embedding) = attach_embedding(&graph, solid) else {
        return false;
    };
    for exponent in 0..h.order() as i64 {
        let rho = CyclicCharacter::new(h.order(), exponent);
        let cm = induced_casimir_matrix(g, h, &rho, casimir, &space, &graph);
        if cm.p().is_err() {
            continue;
        }
        let Ok(potential) = magnetic_potential(&cm) else {
            continue;
        };
        if matches!(chern_number(&potential, &embedding), Ok(1)) {
            return true;
        }
    }
    false
}

/// Search for the case's Casimir element: the first good triple on the
/// solid's skeleton (fewest summands, lowest class ids) whose characters
/// realise a unit Chern number.
fn pick_casimir(
    data: &GroupData,
    solid: Solid,
    subgroup_order: usize,
) -> Result<CasimirElement, MonopoleError> {
    let h = canonical_cyclic_subgroup(&data.group, subgroup_order)
        .map_err(|e| inconsistent(solid, format!("{e}")))?;
    let target = solid.skeleton_sets();
    for casimir in find_good_casimirs(&data.group, &h, Some(&target)) {
        if has_unit_chern(data, solid, &h, &casimir) {
            return Ok(casimir);
        }
    }
    Err(inconsistent(solid, "no Casimir element yields a unit-Chern row"))
}

/// The whole computed catalog: the four solved solids, the pentadodecahedral
/// multigraph Laplacian, and the dodecahedron no-go certificate.
#[derive(Debug)]
pub struct Catalog {
    pub seed: u64,
    pub cases: Vec<MonopoleCase>,
    pub penta: PentaCase,
    pub nogo: NoGoCertificate,
}

impl Catalog {
    /// Builds everything from scratch, deterministically in the seed.
    pub fn build(seed: u64) -> Result<Self, MonopoleError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tetra = Arc::new(GroupData::new(&generators::binary_tetrahedral(), &mut rng)?);
        let octa = Arc::new(GroupData::new(&generators::binary_octahedral(), &mut rng)?);
        let icosa = Arc::new(GroupData::new(&generators::binary_icosahedral(), &mut rng)?);

        let tetra_casimir = pick_casimir(&tetra, Solid::Tetrahedron, 6)?;
        let octa_casimir = pick_casimir(&octa, Solid::Octahedron, 8)?;
        let icosa_casimir = pick_casimir(&icosa, Solid::Icosahedron, 10)?;

        let cases = vec![
            build_case(Solid::Tetrahedron, &tetra, 6, tetra_casimir)?,
            build_case(Solid::Octahedron, &octa, 8, octa_casimir.clone())?,
            // the cube lives on the same group and Casimir element as the
            // octahedron; only the cyclic subgroup changes
            build_case(Solid::Cube, &octa, 6, octa_casimir)?,
            build_case(Solid::Icosahedron, &icosa, 10, icosa_casimir.clone())?,
        ];
        let penta = pentadodecahedral_case(&icosa, &icosa_casimir)?;
        let nogo = dodecahedron_no_go(&icosa)?;
        Ok(Self {
            seed,
            cases,
            penta,
            nogo,
        })
    }

    pub fn case(&self, solid: Solid) -> &MonopoleCase {
        self.cases
            .iter()
            .find(|c| c.solid == solid)
            .expect("all four solids are built")
    }

    pub fn export(&self) -> serde_json::Value {
        json!({
            "seed": self.seed,
            "cases": self.cases.iter().map(MonopoleCase::export).collect::<Vec<_>>(),
            "pentadodecahedral": self.penta.export(),
            "no_go": self.nogo.export(),
        })
    }
}

/// The four solved cases, built with a fixed default seed.
pub fn build_catalog(seed: u64) -> Result<Vec<MonopoleCase>, MonopoleError> {
    Ok(Catalog::build(seed)?.cases)
}

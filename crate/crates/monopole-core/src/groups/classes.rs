use num_complex::Complex64;

use super::{CharacterTable, FiniteGroup};

/// A conjugacy class, stored as a sorted set of element indices. The
/// representative is the lowest-index member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub members: Vec<usize>,
    pub representative: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Full partition of the group into conjugacy classes, sorted by
/// (size, element order, representative index) so the ordering is stable.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjClass> {
    let n = g.len();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|x| g.conjugate(x, start)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(ConjClass {
            representative: members[0],
            members,
        });
    }
    classes.sort_by_key(|c| {
        (
            c.size(),
            g.element_order(c.representative),
            c.representative,
        )
    });
    classes
}

/// Map from element index to its class index within `classes`.
pub fn class_of_elements(g: &FiniteGroup, classes: &[ConjClass]) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; g.len()];
    for (ci, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = ci;
        }
    }
    class_of
}

/// A Casimir element: the formal sum of a union of conjugacy classes,
/// an element of the centre of the group ring. It is flagged real when the
/// summand set is closed under inversion, which makes the induced matrices
/// Hermitian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirElement {
    pub summands: Vec<usize>,
    pub class_ids: Vec<usize>,
    pub real: bool,
}

impl CasimirElement {
    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }
}

pub fn casimir_from_classes(
    g: &FiniteGroup,
    classes: &[ConjClass],
    class_ids: &[usize],
) -> CasimirElement {
    let mut ids: Vec<usize> = class_ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut summands: Vec<usize> = ids
        .iter()
        .flat_map(|&ci| classes[ci].members.iter().copied())
        .collect();
    summands.sort_unstable();
    let real = summands
        .iter()
        .all(|&s| summands.binary_search(&g.inv(s)).is_ok());
    CasimirElement {
        summands,
        class_ids: ids,
        real,
    }
}

/// Scalar by which the Casimir element acts on an irreducible representation:
/// the sum over its constituent classes of χ(c)·|[c]| / dim. Real whenever the
/// Casimir element is real.
pub fn casimir_eigenvalue(
    casimir: &CasimirElement,
    irrep: usize,
    table: &CharacterTable,
) -> Complex64 {
    let dim = table.irrep_dims[irrep] as f64;
    casimir
        .class_ids
        .iter()
        .map(|&ci| table.values[irrep][ci] * table.class_sizes[ci] as f64 / dim)
        .sum()
}

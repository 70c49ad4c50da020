use std::collections::BTreeSet;

use crate::graphs::{build_graph, find_isomorphism_on_sets, is_good_triple, GraphMode};
use crate::groups::{
    casimir_from_classes, class_of_elements, conjugacy_classes, coset_space, CasimirElement,
    ConjClass, FiniteGroup, Subgroup,
};

/// All nonempty unions of nontrivial conjugacy classes that are closed under
/// inversion, as sorted class-id lists. Self-inverse classes form singleton
/// atoms; a class and its distinct inverse class always appear together.
pub fn inverse_closed_unions(g: &FiniteGroup, classes: &[ConjClass]) -> Vec<Vec<usize>> {
    let class_of = class_of_elements(g, classes);
    let identity_class = class_of[g.identity()];
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    let mut seen = BTreeSet::new();
    for ci in 0..classes.len() {
        if ci == identity_class || seen.contains(&ci) {
            continue;
        }
        let inverse = class_of[g.inv(classes[ci].representative)];
        let atom = if inverse == ci {
            vec![ci]
        } else {
            vec![ci.min(inverse), ci.max(inverse)]
        };
        for &id in &atom {
            seen.insert(id);
        }
        atoms.push(atom);
    }
    let mut unions = Vec::with_capacity((1 << atoms.len()) - 1);
    for mask in 1u32..(1 << atoms.len()) {
        let mut ids: Vec<usize> = Vec::new();
        for (bit, atom) in atoms.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                ids.extend_from_slice(atom);
            }
        }
        ids.sort_unstable();
        unions.push(ids);
    }
    unions
}

/// Exhaustive search for real Casimir elements whose simple coset graph on
/// G/H is regular of degree ≥ 1 and edge-transitive, optionally filtered by
/// isomorphism to a target skeleton. The result is ordered by (summand
/// count, class ids).
pub fn find_good_casimirs(
    g: &FiniteGroup,
    h: &Subgroup,
    target: Option<&[BTreeSet<usize>]>,
) -> Vec<CasimirElement> {
    let classes = conjugacy_classes(g);
    let space = coset_space(g, h);
    let mut hits: Vec<CasimirElement> = Vec::new();
    for ids in inverse_closed_unions(g, &classes) {
        let casimir = casimir_from_classes(g, &classes, &ids);
        let graph = build_graph(g, &space, &casimir, GraphMode::Simple);
        match graph.is_regular() {
            Some(d) if d >= 1 => {}
            _ => continue,
        }
        if !is_good_triple(g, &space, &graph) {
            continue;
        }
        if let Some(reference) = target {
            if find_isomorphism_on_sets(&graph.adjacency_sets(), reference).is_none() {
                continue;
            }
        }
        hits.push(casimir);
    }
    hits.sort_by_key(|c| (c.summand_count(), c.class_ids.clone()));
    hits
}

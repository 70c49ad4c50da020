use std::collections::BTreeSet;

use super::CosetGraph;

/// Backtracking isomorphism search on adjacency sets, pruned by degree and
/// consistency with already-mapped neighbors. Instance sizes here are at most
/// 30 vertices, where this is instant.
pub fn find_isomorphism_on_sets(
    a: &[BTreeSet<usize>],
    b: &[BTreeSet<usize>],
) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let mut deg_a: Vec<usize> = a.iter().map(BTreeSet::len).collect();
    let mut deg_b: Vec<usize> = b.iter().map(BTreeSet::len).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return None;
    }

    // Map vertices in order of decreasing degree to fail fast.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a[v].len()));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        pos: usize,
        order: &[usize],
        a: &[BTreeSet<usize>],
        b: &[BTreeSet<usize>],
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..b.len() {
            if used[w] || a[v].len() != b[w].len() {
                continue;
            }
            let consistent = a[v].iter().all(|&u| {
                mapping[u] == usize::MAX || b[w].contains(&mapping[u])
            }) && (0..a.len()).all(|u| {
                mapping[u] == usize::MAX || a[v].contains(&u) == b[w].contains(&mapping[u])
            });
            if !consistent {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if backtrack(pos + 1, order, a, b, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    backtrack(0, &order, a, b, &mut mapping, &mut used).then_some(mapping)
}

/// Vertex mapping from g1 onto g2 preserving adjacency, if one exists.
pub fn find_isomorphism(g1: &CosetGraph, g2: &CosetGraph) -> Option<Vec<usize>> {
    find_isomorphism_on_sets(&g1.adjacency_sets(), &g2.adjacency_sets())
}

pub fn graph_isomorphic(g1: &CosetGraph, g2: &CosetGraph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

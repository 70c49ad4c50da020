use super::{FiniteGroup, GroupError};

/// A subgroup given by its sorted member indices. Cyclic subgroups carry the
/// canonical generator (the lowest-index element of full order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub members: Vec<usize>,
    pub generator: Option<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn whole_group(g: &FiniteGroup) -> Self {
        Self {
            members: (0..g.len()).collect(),
            generator: None,
        }
    }

    /// For a cyclic subgroup, its members as g⁰, g¹, …, gⁿ⁻¹.
    pub fn powers(&self, g: &FiniteGroup) -> Vec<usize> {
        let gen = self.generator.expect("powers need a cyclic generator");
        let mut out = Vec::with_capacity(self.order());
        let mut p = g.identity();
        for _ in 0..self.order() {
            out.push(p);
            p = g.mul(p, gen);
        }
        debug_assert_eq!(p, g.identity());
        out
    }

    /// The conjugate subgroup x H x⁻¹, generator mapped along.
    pub fn conjugate_by(&self, g: &FiniteGroup, x: usize) -> Self {
        let mut members: Vec<usize> = self.members.iter().map(|&m| g.conjugate(x, m)).collect();
        members.sort_unstable();
        Self {
            members,
            generator: self.generator.map(|gen| g.conjugate(x, gen)),
        }
    }

    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.members.binary_search(&g.identity()).is_ok()
            && self.members.iter().all(|&a| {
                self.members.binary_search(&g.inv(a)).is_ok()
                    && self
                        .members
                        .iter()
                        .all(|&b| self.members.binary_search(&g.mul(a, b)).is_ok())
            })
    }
}

/// All cyclic subgroups of the given order, deduplicated, grouped into
/// conjugacy orbits. Orbits and their members are ordered by canonical
/// generator index, so the first subgroup of the first orbit is the
/// deterministic pick.
pub fn cyclic_subgroups_of_order(
    g: &FiniteGroup,
    n: usize,
) -> Result<Vec<Vec<Subgroup>>, GroupError> {
    assert!(n >= 1);
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for e in 0..g.len() {
        if g.element_order(e) != n {
            continue;
        }
        let mut members = Vec::with_capacity(n);
        let mut p = g.identity();
        for _ in 0..n {
            members.push(p);
            p = g.mul(p, e);
        }
        members.sort_unstable();
        if seen.contains(&members) {
            continue;
        }
        seen.push(members.clone());
        // e is the lowest-index generator: any smaller one was visited first.
        subgroups.push(Subgroup {
            members,
            generator: Some(e),
        });
    }
    if subgroups.is_empty() {
        return Err(GroupError::NoneFound { order: n });
    }

    subgroups.sort_by_key(|s| s.generator);
    let mut orbits: Vec<Vec<Subgroup>> = Vec::new();
    let mut placed = vec![false; subgroups.len()];
    for i in 0..subgroups.len() {
        if placed[i] {
            continue;
        }
        let mut orbit = vec![i];
        placed[i] = true;
        for x in 0..g.len() {
            let conj = subgroups[i].conjugate_by(g, x);
            if let Some(j) = subgroups.iter().position(|s| s.members == conj.members) {
                if !placed[j] {
                    placed[j] = true;
                    orbit.push(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|j| subgroups[j].clone()).collect());
    }
    Ok(orbits)
}

/// The deterministic cyclic subgroup of order n: lowest canonical generator.
pub fn canonical_cyclic_subgroup(g: &FiniteGroup, n: usize) -> Result<Subgroup, GroupError> {
    Ok(cyclic_subgroups_of_order(g, n)?[0][0].clone())
}

/// The left cosets G/H with the left-translation action of G on them.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    pub cosets: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    /// action[g][x] = coset of g·(coset x).
    pub action: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    pub fn act(&self, g: usize, coset: usize) -> usize {
        self.action[g][coset]
    }
}

pub fn coset_space(g: &FiniteGroup, h: &Subgroup) -> CosetSpace {
    debug_assert!(h.is_subgroup_of(g));
    let n = g.len();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    let mut representatives = Vec::new();
    for e in 0..n {
        if coset_of[e] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        let mut members: Vec<usize> = h.members.iter().map(|&m| g.mul(e, m)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = id;
        }
        representatives.push(members[0]);
        cosets.push(members);
    }
    let action = (0..n)
        .map(|x| {
            representatives
                .iter()
                .map(|&rep| coset_of[g.mul(x, rep)])
                .collect()
        })
        .collect();
    CosetSpace {
        cosets,
        representatives,
        action,
        coset_of,
    }
}

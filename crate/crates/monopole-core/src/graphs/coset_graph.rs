use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::groups::{CasimirElement, CosetSpace, FiniteGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphMode {
    /// Distinct neighbors only, loops dropped, multiplicity 1.
    Simple,
    /// Edge multiplicity = number of mapping summands; loops recorded
    /// separately, never as edges.
    Multi,
}

/// The graph of a real Casimir element acting on the cosets G/H: an edge
/// joins x and y whenever some summand c satisfies c·x = y.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub vertex_count: usize,
    /// (x, y, multiplicity) with x < y, sorted.
    pub edges: Vec<(usize, usize, usize)>,
    /// Number of summands fixing each vertex.
    pub loops: Vec<usize>,
    /// Ordered pair (x, y) ↦ summand indices c with c·x = y, including x = y.
    pub summand_map: BTreeMap<(usize, usize), Vec<usize>>,
    pub mode: GraphMode,
}

impl CosetGraph {
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(x, y, _)| {
                if x == v {
                    Some(y)
                } else if y == v {
                    Some(x)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Number of distinct neighbors.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Sum of edge multiplicities at the vertex.
    pub fn multi_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y, _)| x == v || y == v)
            .map(|&(_, _, m)| m)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertex_count];
        for &(x, y, _) in &self.edges {
            adj[x].insert(y);
            adj[y].insert(x);
        }
        adj
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.simple_degree(0);
        (1..self.vertex_count)
            .all(|v| self.simple_degree(v) == d)
            .then_some(d)
    }

    /// DOT format, edge multiplicity as an attribute.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  {v};");
        }
        for &(x, y, m) in &self.edges {
            let _ = writeln!(out, "  {x} -- {y} [multiplicity={m}];");
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_graph(
    g: &FiniteGroup,
    space: &CosetSpace,
    casimir: &CasimirElement,
    mode: GraphMode,
) -> CosetGraph {
    assert!(
        casimir.real,
        "graph construction needs a real (inverse-closed) Casimir element"
    );
    let n = space.len();
    let mut summand_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut loops = vec![0usize; n];
    for x in 0..n {
        for &c in &casimir.summands {
            let y = space.act(c, x);
            summand_map.entry((x, y)).or_default().push(c);
            if y == x {
                loops[x] += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let forward = summand_map.get(&(x, y)).map_or(0, Vec::len);
            let backward = summand_map.get(&(y, x)).map_or(0, Vec::len);
            debug_assert_eq!(forward, backward, "reality must balance edge directions");
            if forward > 0 {
                let multiplicity = match mode {
                    GraphMode::Simple => 1,
                    GraphMode::Multi => forward,
                };
                edges.push((x, y, multiplicity));
            }
        }
    }
    let graph = CosetGraph {
        vertex_count: n,
        edges,
        loops,
        summand_map,
        mode,
    };
    debug_assert!(g.len() % space.len() == 0);
    graph
}

/// A triple is good when G acts transitively on the unordered edges of the
/// simple graph. Edgeless graphs are not good.
pub fn is_good_triple(g: &FiniteGroup, space: &CosetSpace, graph: &CosetGraph) -> bool {
    if graph.edges.is_empty() {
        return false;
    }
    let edge_set: BTreeSet<(usize, usize)> =
        graph.edges.iter().map(|&(x, y, _)| (x, y)).collect();
    let first = *edge_set.iter().next().unwrap();
    let mut orbit = BTreeSet::new();
    for t in 0..g.len() {
        let a = space.act(t, first.0);
        let b = space.act(t, first.1);
        orbit.insert((a.min(b), a.max(b)));
    }
    debug_assert!(orbit.iter().all(|e| edge_set.contains(e)));
    orbit.len() == edge_set.len()
}

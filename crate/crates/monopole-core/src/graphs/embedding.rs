use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::isomorphism::find_isomorphism_on_sets;
use super::{CosetGraph, GraphError};

/// The four Platonic solids whose skeletons carry monopole potentials.
/// (The dodecahedron appears only through its skeleton, as the target of the
/// no-go argument; see `dodecahedral_skeleton`.)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 4] = [
        Solid::Tetrahedron,
        Solid::Octahedron,
        Solid::Cube,
        Solid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Octahedron => "octahedron",
            Solid::Cube => "cube",
            Solid::Icosahedron => "icosahedron",
        }
    }

    pub fn vertex_count(self) -> usize {
        self.rotation_table().len()
    }

    pub fn face_count(self) -> usize {
        match self {
            Solid::Tetrahedron => 4,
            Solid::Octahedron => 8,
            Solid::Cube => 6,
            Solid::Icosahedron => 20,
        }
    }

    /// Canonical rotation system: the cyclic order of neighbors around each
    /// vertex of the standard skeleton, oriented consistently so face tracing
    /// closes up.
    pub fn rotation_table(self) -> &'static [&'static [usize]] {
        match self {
            Solid::Tetrahedron => &[&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[1, 0, 2]],
            Solid::Octahedron => &[
                &[2, 4, 3, 5],
                &[2, 5, 3, 4],
                &[0, 5, 1, 4],
                &[0, 4, 1, 5],
                &[0, 2, 1, 3],
                &[0, 3, 1, 2],
            ],
            Solid::Cube => &[
                &[2, 1, 4],
                &[0, 3, 5],
                &[3, 0, 6],
                &[1, 2, 7],
                &[0, 5, 6],
                &[1, 7, 4],
                &[2, 4, 7],
                &[3, 6, 5],
            ],
            Solid::Icosahedron => &[
                &[8, 4, 6, 10, 2],
                &[4, 9, 3, 11, 6],
                &[5, 8, 0, 10, 7],
                &[9, 5, 7, 11, 1],
                &[8, 9, 1, 6, 0],
                &[9, 8, 2, 7, 3],
                &[0, 4, 1, 11, 10],
                &[3, 5, 2, 10, 11],
                &[5, 9, 4, 0, 2],
                &[4, 8, 5, 3, 1],
                &[2, 0, 6, 11, 7],
                &[1, 3, 7, 10, 6],
            ],
        }
    }

    pub fn skeleton_sets(self) -> Vec<BTreeSet<usize>> {
        self.rotation_table()
            .iter()
            .map(|nbrs| nbrs.iter().copied().collect())
            .collect()
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Solid {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(Solid::Tetrahedron),
            "octahedron" => Ok(Solid::Octahedron),
            "cube" => Ok(Solid::Cube),
            "icosahedron" => Ok(Solid::Icosahedron),
            other => Err(format!("unknown solid: {other}")),
        }
    }
}

/// Adjacency sets of the dodecahedron skeleton (20 vertices, 30 edges),
/// used as the reference target in the no-go search.
pub fn dodecahedral_skeleton() -> Vec<BTreeSet<usize>> {
    const EDGES: [(usize, usize); 30] = [
        (0, 8), (0, 12), (0, 16), (1, 9), (1, 14), (1, 16), (2, 10), (2, 12),
        (2, 17), (3, 11), (3, 14), (3, 17), (4, 8), (4, 13), (4, 18), (5, 9),
        (5, 15), (5, 18), (6, 10), (6, 13), (6, 19), (7, 11), (7, 15), (7, 19),
        (8, 9), (10, 11), (12, 13), (14, 15), (16, 17), (18, 19),
    ];
    let mut adj = vec![BTreeSet::new(); 20];
    for (x, y) in EDGES {
        adj[x].insert(y);
        adj[y].insert(x);
    }
    adj
}

/// A rotation system on the graph's own vertex labels plus the face cycles
/// traced from it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<usize>>,
    /// Directed boundary cycles; [a, b, c] means edges a→b, b→c, c→a.
    pub faces: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

/// Transport the solid's canonical rotation system onto the coset graph
/// through a discovered isomorphism, then trace faces.
pub fn attach_embedding(graph: &CosetGraph, solid: Solid) -> Result<PlanarEmbedding, GraphError> {
    let reference = solid.skeleton_sets();
    let mapping = find_isomorphism_on_sets(&reference, &graph.adjacency_sets())
        .ok_or(GraphError::NotIsomorphic(solid))?;
    let n = reference.len();
    let mut rotation = vec![Vec::new(); n];
    for (v, nbrs) in solid.rotation_table().iter().enumerate() {
        rotation[mapping[v]] = nbrs.iter().map(|&u| mapping[u]).collect();
    }
    let faces = trace_faces(&rotation);
    let embedding = PlanarEmbedding { rotation, faces };
    debug_assert_eq!(embedding.euler_characteristic(), 2);
    debug_assert_eq!(embedding.faces.len(), solid.face_count());
    Ok(embedding)
}

/// Walk every directed edge once: the dart after (u, v) is (v, w) where w
/// follows u in the rotation at v.
fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotation.len();
    let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for start_v in 0..n {
        for &start_w in &rotation[start_v] {
            if visited.contains(&(start_v, start_w)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut v) = (start_v, start_w);
            loop {
                visited.insert((u, v));
                face.push(u);
                let idx = rotation[v].iter().position(|&x| x == u).unwrap();
                let w = rotation[v][(idx + 1) % rotation[v].len()];
                u = v;
                v = w;
                if (u, v) == (start_v, start_w) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

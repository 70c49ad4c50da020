//! Coset graphs of Casimir elements, graph isomorphism, and canonical planar
//! embeddings of the Platonic-solid skeletons with face data.

mod coset_graph;
mod embedding;
mod isomorphism;

pub use coset_graph::{build_graph, is_good_triple, CosetGraph, GraphMode};
pub use embedding::{attach_embedding, dodecahedral_skeleton, PlanarEmbedding, Solid};
pub use isomorphism::{find_isomorphism, find_isomorphism_on_sets, graph_isomorphic};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not isomorphic to the {0} skeleton")]
    NotIsomorphic(Solid),
}

//! Graphs, digraphs and the group-theoretic graph constructions.

mod construct;
mod graph;

pub use construct::{
    cayley_graph, coset_graph, coset_graph_of_element, quotient_graph, special_graph, CayleyGraph,
    CosetGraph, QuotientGraph, SpecialKind, VertexAction,
};
pub use graph::{Digraph, Graph};

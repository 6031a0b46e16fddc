//! Lexicographic product `G ∘ H` and its layers.
//!
//! Vertex `(a, b)` of the product lives at index `a * |V(H)| + b`, so every
//! H-layer is a contiguous index range.

use crate::edgelist::write_edge_list;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct ProductGraph {
    g: Graph,
    h: Graph,
    graph: Graph,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn factor_g(&self) -> &Graph {
        &self.g
    }

    pub fn factor_h(&self) -> &Graph {
        &self.h
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.h.order() + b
    }

    pub fn coords(&self, idx: usize) -> (usize, usize) {
        (idx / self.h.order(), idx % self.h.order())
    }

    /// `H^a = {(a, b) : b ∈ V(H)}`.
    pub fn h_layer(&self, a: usize) -> Result<VertexSet> {
        if a >= self.g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                order: self.g.order(),
            });
        }
        let nh = self.h.order();
        VertexSet::from_indices(self.graph.order(), a * nh..(a + 1) * nh)
    }

    /// `G^b = {(a, b) : a ∈ V(G)}`.
    pub fn g_layer(&self, b: usize) -> Result<VertexSet> {
        if b >= self.h.order() {
            return Err(Error::VertexOutOfRange {
                vertex: b,
                order: self.h.order(),
            });
        }
        VertexSet::from_indices(self.graph.order(), (0..self.g.order()).map(|a| self.index(a, b)))
    }

    pub fn to_edge_list(&self) -> String {
        write_edge_list(
            &self.graph,
            &[format!("product {} {}", self.g.order(), self.h.order())],
        )
    }
}

pub fn lex_product(g: &Graph, h: &Graph) -> ProductGraph {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::with_capacity(g.size() * nh * nh + ng * h.size());
    for (a, a2) in g.edges() {
        for b in 0..nh {
            for b2 in 0..nh {
                edges.push((a * nh + b, a2 * nh + b2));
            }
        }
    }
    for a in 0..ng {
        for (b, b2) in h.edges() {
            edges.push((a * nh + b, a * nh + b2));
        }
    }
    let graph = Graph::from_edges(ng * nh, edges).expect("product edges are simple by construction");
    ProductGraph {
        g: g.clone(),
        h: h.clone(),
        graph,
    }
}

/// Predicted bipartiteness of `g ∘ h`: one factor is edgeless and the other
/// is bipartite.
pub fn product_bipartite_iff(g: &Graph, h: &Graph) -> bool {
    (h.size() == 0 && g.is_bipartite()) || (g.size() == 0 && h.is_bipartite())
}

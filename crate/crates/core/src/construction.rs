//! The bipartite family Γ(k, t) with γ_{[1,k]}(Γ) = |V(Γ)|, and checks
//! for the product identity it is built on.
//!
//! Γ(k, t) takes `G1 = S(2, ..., 2)` with `k + 1` arms, blows every vertex
//! up into an independent set of size `k + 1` (the product `G1 ∘ K̄_{k+1}`),
//! and adds `t` pendant vertices, each joined to the whole layer over the
//! centre-adjacent vertex of the first arm.

use crate::domination::{gamma_exact, is_1k_dominating, GammaKind, Method};
use crate::edgelist::write_edge_list;
use crate::error::{Error, Result};
use crate::graph::{make_empty_graph, make_star_like, Graph, StarLikeSpec, VertexSet};
use crate::product::{lex_product, ProductGraph};

/// Base vertex (in `G1`) the pendants attach over.
pub const ATTACHMENT: usize = 1;

#[derive(Clone, Debug)]
pub struct GammaConstruction {
    k: usize,
    t: usize,
    product: ProductGraph,
    graph: Graph,
}

pub fn base_order(k: usize) -> usize {
    (k + 1) * (2 * k + 3)
}

pub fn build_gamma(k: usize, t: usize) -> Result<GammaConstruction> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let g1 = make_star_like(&StarLikeSpec::uniform(k + 1, 2)?)?;
    let h = make_empty_graph(k + 1)?;
    let product = lex_product(&g1, &h);
    let base = product.graph().order();
    let layer = product.h_layer(ATTACHMENT)?;
    let mut edges: Vec<(usize, usize)> = product.graph().edges().collect();
    for a in 0..t {
        edges.extend(layer.iter().map(|v| (v, base + a)));
    }
    let graph = Graph::from_edges(base + t, edges)?;
    Ok(GammaConstruction { k, t, product, graph })
}

impl GammaConstruction {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn product(&self) -> &ProductGraph {
        &self.product
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// `G1` vertices adjacent to the centre (odd indices `1, 3, ...`).
    pub fn mid_arm_vertices(&self) -> Vec<usize> {
        (0..=self.k).map(|i| 1 + 2 * i).collect()
    }

    pub fn leaf_vertices(&self) -> Vec<usize> {
        (0..=self.k).map(|i| 2 + 2 * i).collect()
    }

    /// The H-layer over base vertex `a`, in Γ's indices.
    pub fn layer(&self, a: usize) -> Result<VertexSet> {
        let l = self.product.h_layer(a)?;
        VertexSet::from_indices(self.order(), l.iter())
    }

    pub fn pendants(&self) -> VertexSet {
        let base = self.product.graph().order();
        VertexSet::from_indices(self.order(), base..base + self.t).unwrap()
    }

    pub fn to_edge_list(&self) -> String {
        let mut comments = vec![format!("gamma {} {}", self.k, self.t)];
        let base = self.product.graph().order();
        for v in 0..base {
            let (a, b) = self.product.coords(v);
            comments.push(format!("label {} v{},{}", v + 1, a + 1, b + 1));
        }
        for i in 0..self.t {
            comments.push(format!("label {} a{}", base + i + 1, i + 1));
        }
        write_edge_list(&self.graph, &comments)
    }
}

/// Facts along the forced-layer cascade for a candidate set `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedLayers {
    pub dominating: bool,
    /// (a) every mid-arm layer meets `s`.
    pub mid_layers_meet: bool,
    /// (b) the centre layer lies in `s`.
    pub centre_layer_in: bool,
    /// (c) every mid-arm layer lies in `s`.
    pub mid_layers_in: bool,
    /// (d) every leaf layer and every pendant lies in `s`.
    pub rest_in: bool,
    pub full: bool,
}

impl ForcedLayers {
    /// `[a, a ⇒ b, b ⇒ c, c ⇒ d]`.
    pub fn implications(&self) -> [bool; 4] {
        [
            self.mid_layers_meet,
            !self.mid_layers_meet || self.centre_layer_in,
            !self.centre_layer_in || self.mid_layers_in,
            !self.mid_layers_in || self.rest_in,
        ]
    }

    /// For a [1,k]-dominating set every step holds and `s = V`; anything
    /// else must fail the checker.
    pub fn consistent(&self) -> bool {
        !self.dominating || (self.implications().iter().all(|&b| b) && self.full)
    }
}

pub fn check_forced_layers(gc: &GammaConstruction, s: &VertexSet) -> Result<ForcedLayers> {
    let dominating = is_1k_dominating(gc.graph(), s, gc.k)?;
    let mids = gc
        .mid_arm_vertices()
        .into_iter()
        .map(|a| gc.layer(a))
        .collect::<Result<Vec<_>>>()?;
    let leaves = gc
        .leaf_vertices()
        .into_iter()
        .map(|a| gc.layer(a))
        .collect::<Result<Vec<_>>>()?;
    Ok(ForcedLayers {
        dominating,
        mid_layers_meet: mids.iter().all(|l| l.intersects(s)),
        centre_layer_in: gc.layer(0)?.is_subset(s),
        mid_layers_in: mids.iter().all(|l| l.is_subset(s)),
        rest_in: leaves.iter().all(|l| l.is_subset(s)) && gc.pendants().is_subset(s),
        full: s.is_full(),
    })
}

/// Exact check that γ_{[1,k]}(Γ(k,t)) = |V(Γ)| with the witness `V`.
pub fn verify_gamma_extremal(k: usize, t: usize, method: Method) -> Result<bool> {
    let gc = build_gamma(k, t)?;
    let r = gamma_exact(gc.graph(), GammaKind::OneK(k), method)?;
    Ok(r.value() == Some(gc.order()) && r.witness().is_some_and(VertexSet::is_full))
}

/// Both sides of the product identity for `g ∘ K̄_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIdentity {
    pub base_order: usize,
    pub k: usize,
    /// γ_{[1,k]}(g ∘ K̄_{k+1}).
    pub product_value: usize,
    /// γ_{t[1,k]}(g), `None` when no total [1,k]-dominating set exists.
    pub total_value: Option<usize>,
}

impl ProductIdentity {
    pub fn product_order(&self) -> usize {
        self.base_order * (self.k + 1)
    }

    /// The value the identity predicts for the product.
    pub fn predicted(&self) -> usize {
        self.total_value.unwrap_or(self.product_order())
    }

    pub fn case1_holds(&self) -> bool {
        self.product_value == self.predicted()
    }

    pub fn corollary_holds(&self) -> bool {
        (self.product_value == self.product_order()) == self.total_value.is_none()
    }
}

pub fn product_identity(g: &Graph, k: usize, method: Method) -> Result<ProductIdentity> {
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = lex_product(g, &make_empty_graph(k + 1)?);
    let product_value = gamma_exact(p.graph(), GammaKind::OneK(k), method)?
        .value()
        .expect("[1,k]-domination is always finite");
    let total_value = gamma_exact(g, GammaKind::TotalOneK(k), method)?.value();
    Ok(ProductIdentity {
        base_order: g.order(),
        k,
        product_value,
        total_value,
    })
}

pub fn verify_theorem_case1(g: &Graph, k: usize, method: Method) -> Result<bool> {
    product_identity(g, k, method).map(|r| r.case1_holds())
}

pub fn verify_corollary(g: &Graph, k: usize, method: Method) -> Result<bool> {
    product_identity(g, k, method).map(|r| r.corollary_holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_star_like};

    #[test]
    fn orders() {
        assert_eq!(build_gamma(2, 0).unwrap().order(), 21);
        assert_eq!(build_gamma(3, 0).unwrap().order(), 36);
        let gc = build_gamma(2, 3).unwrap();
        assert_eq!(gc.order(), 24);
        for a in gc.pendants().iter() {
            assert_eq!(gc.graph().degree(a), 3);
            assert!(gc.graph().neighbors(a).eq(gc.layer(ATTACHMENT).unwrap().iter()));
        }
        assert!(matches!(build_gamma(1, 0), Err(Error::InvalidK { k: 1, min: 2 })));
    }

    #[test]
    fn bipartite_and_connected() {
        for k in 2..5 {
            for t in 0..4 {
                let g = build_gamma(k, t).unwrap();
                assert_eq!(g.order(), base_order(k) + t);
                assert!(g.graph().is_bipartite() && g.graph().is_connected());
            }
        }
    }

    #[test]
    fn edge_list_header() {
        let text = build_gamma(2, 1).unwrap().to_edge_list();
        assert!(text.starts_with("p 22 57\nc gamma 2 1\nc label 1 v1,1\n"));
        assert!(text.contains("c label 22 a1\n"));
    }

    #[test]
    fn forced_layers_on_v_and_near_misses() {
        let gc = build_gamma(2, 1).unwrap();
        let all = gc.graph().vertices();
        let d = check_forced_layers(&gc, &all).unwrap();
        assert!(d.dominating && d.full && d.consistent());
        assert_eq!(d.implications(), [true; 4]);

        let leaf = gc.layer(gc.leaf_vertices()[0]).unwrap().iter().next().unwrap();
        let mut near = all.clone();
        near.remove(leaf);
        let d = check_forced_layers(&gc, &near).unwrap();
        assert!(!d.dominating && d.consistent());

        let centre = gc.layer(0).unwrap();
        let d = check_forced_layers(&gc, &centre).unwrap();
        assert!(!d.dominating);
        assert!(!d.mid_layers_meet && d.centre_layer_in);
    }

    #[test]
    fn extremal_small() {
        assert!(verify_gamma_extremal(2, 0, Method::BranchBound).unwrap());
        assert!(verify_gamma_extremal(2, 1, Method::BranchBound).unwrap());
    }

    #[test]
    fn product_identity_examples() {
        let s222 = make_star_like(&StarLikeSpec::uniform(3, 2).unwrap()).unwrap();
        let r = product_identity(&s222, 2, Method::BranchBound).unwrap();
        assert_eq!((r.total_value, r.product_value), (None, 21));
        assert!(r.case1_holds() && r.corollary_holds());

        let k2 = make_path(2).unwrap();
        let r = product_identity(&k2, 2, Method::Oracle).unwrap();
        assert_eq!((r.total_value, r.product_value), (Some(2), 2));
        assert!(r.corollary_holds());

        let p4 = make_path(4).unwrap();
        assert!(verify_theorem_case1(&p4, 2, Method::Oracle).unwrap());
        let p3 = make_path(3).unwrap();
        assert!(verify_corollary(&p3, 2, Method::Oracle).unwrap());

        let split = make_empty_graph(2).unwrap();
        assert!(matches!(verify_corollary(&split, 2, Method::Oracle), Err(Error::Disconnected)));
    }
}

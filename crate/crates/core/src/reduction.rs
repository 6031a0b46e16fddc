//! Reduction from [1,k]-triple set cover to the existence of a total
//! [1,k]-dominating set in a bipartite gadget.
//!
//! For an instance with universe `x_1..x_n`, triples `C_1..C_t` and bound
//! `k`, the gadget has one vertex per element, one per triple, and for each
//! triple `j` a guard path `c_j - p_{j,j'} - l_{j,j'}` for `j' = 1..k`.
//! Element `x_i` is joined to `c_j` whenever `x_i ∈ C_j`.
//!
//! Index layout (0-based): elements `0..n`, triples `n..n+t`, then all
//! guards row-major, then all leaves row-major.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domination::{self, oracle, GammaKind};
use crate::edgelist::write_edge_list;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ORACLE_TRIPLES: usize = 24;

/// Lemma sweeps run both oracles, so they are held to tighter limits.
pub const MAX_EQUIVALENCE_TRIPLES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: usize,
    triples: Vec<[usize; 3]>,
    k: usize,
}

/// On-disk instance, 1-based elements.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub n: usize,
    pub k: usize,
    pub triples: Vec<[usize; 3]>,
}

impl SetCoverInstance {
    pub fn new(universe: usize, triples: Vec<[usize; 3]>, k: usize) -> Result<Self> {
        if universe < 3 {
            return Err(Error::InvalidInstance(format!("universe size {universe} < 3")));
        }
        if k == 0 {
            return Err(Error::InvalidK { k, min: 1 });
        }
        for (j, t) in triples.iter().enumerate() {
            if t.iter().any(|&x| x >= universe) {
                return Err(Error::InvalidInstance(format!("triple {} has an element out of range", j + 1)));
            }
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(Error::InvalidInstance(format!("triple {} is not a 3-element set", j + 1)));
            }
        }
        Ok(Self { universe, triples, k })
    }

    /// Builds from 1-based triples.
    pub fn from_one_based(universe: usize, triples: &[[usize; 3]], k: usize) -> Result<Self> {
        let mut zero = Vec::with_capacity(triples.len());
        for (j, t) in triples.iter().enumerate() {
            if t.contains(&0) {
                return Err(Error::InvalidInstance(format!("triple {} uses element 0 (indices are 1-based)", j + 1)));
            }
            zero.push(t.map(|x| x - 1));
        }
        Self::new(universe, zero, k)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: InstanceJson = serde_json::from_str(text)?;
        Self::from_one_based(raw.n, &raw.triples, raw.k)
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            n: self.universe,
            k: self.k,
            triples: self.triples.iter().map(|t| t.map(|x| x + 1)).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// How many triples of `cover` contain each element.
    fn coverage(&self, cover: &[usize]) -> Vec<usize> {
        let mut hits = vec![0; self.universe];
        for &j in cover {
            for &x in &self.triples[j] {
                hits[x] += 1;
            }
        }
        hits
    }

    /// Checks that `cover` (0-based triple indices, no repeats) hits every
    /// element between 1 and `k` times.
    pub fn check_cover(&self, cover: &[usize]) -> Result<()> {
        let invalid = |reason: String| Error::InvalidCover { k: self.k, reason };
        let mut seen = vec![false; self.triples.len()];
        for &j in cover {
            if j >= self.triples.len() {
                return Err(invalid(format!("triple index {} out of range", j + 1)));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(invalid(format!("triple {} listed twice", j + 1)));
            }
        }
        for (x, &h) in self.coverage(cover).iter().enumerate() {
            if h == 0 || h > self.k {
                return Err(invalid(format!("element x{} covered {h} times", x + 1)));
            }
        }
        Ok(())
    }

    pub fn is_cover(&self, cover: &[usize]) -> bool {
        self.check_cover(cover).is_ok()
    }
}

/// Brute force over subcollections, by size then lexicographically.
pub fn solve_set_cover_1k(inst: &SetCoverInstance) -> Result<Option<Vec<usize>>> {
    let t = inst.triples.len();
    if t > MAX_ORACLE_TRIPLES {
        return Err(Error::Guardrail {
            what: "set-cover oracle triple count",
            actual: t,
            limit: MAX_ORACLE_TRIPLES,
        });
    }
    // Per-element bitmask of containing triples.
    let mut holders = vec![0u64; inst.universe];
    for (j, triple) in inst.triples.iter().enumerate() {
        for &x in triple {
            holders[x] |= 1 << j;
        }
    }
    let k = inst.k as u32;
    for r in 0..=t {
        let hit = oracle::scan_combinations(t, r, |m| {
            holders.iter().all(|&h| {
                let c = (h & m).count_ones();
                c >= 1 && c <= k
            })
        });
        if let Some(m) = hit {
            return Ok(Some((0..t).filter(|&j| m >> j & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Element(usize),
    Triple(usize),
    Guard(usize, usize),
    Leaf(usize, usize),
}

impl fmt::Display for Role {
    /// 1-based, e.g. `x3`, `c2`, `p1,2`, `l4,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Element(i) => write!(f, "x{}", i + 1),
            Role::Triple(j) => write!(f, "c{}", j + 1),
            Role::Guard(j, q) => write!(f, "p{},{}", j + 1, q + 1),
            Role::Leaf(j, q) => write!(f, "l{},{}", j + 1, q + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionGraph {
    instance: SetCoverInstance,
    graph: Graph,
    labels: Vec<Role>,
}

impl ReductionGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn instance(&self) -> &SetCoverInstance {
        &self.instance
    }

    pub fn role(&self, v: usize) -> Role {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Role] {
        &self.labels
    }

    pub fn index(&self, role: Role) -> usize {
        let (n, t, k) = (self.instance.universe, self.instance.triples.len(), self.instance.k);
        match role {
            Role::Element(i) => i,
            Role::Triple(j) => n + j,
            Role::Guard(j, q) => n + t + j * k + q,
            Role::Leaf(j, q) => n + t + t * k + j * k + q,
        }
    }

    pub fn element_vertices(&self) -> VertexSet {
        self.vertices_where(|r| matches!(r, Role::Element(_)))
    }

    pub fn guard_vertices(&self) -> VertexSet {
        self.vertices_where(|r| matches!(r, Role::Guard(..)))
    }

    fn vertices_where(&self, pred: impl Fn(Role) -> bool) -> VertexSet {
        let members = (0..self.labels.len()).filter(|&v| pred(self.labels[v]));
        VertexSet::from_indices(self.graph.order(), members).unwrap()
    }

    pub fn to_edge_list(&self) -> String {
        let comments: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, r)| format!("label {} {r}", v + 1))
            .collect();
        write_edge_list(&self.graph, &comments)
    }
}

pub fn build_reduction(inst: &SetCoverInstance) -> ReductionGraph {
    let (n, t, k) = (inst.universe, inst.triples.len(), inst.k);
    let mut labels: Vec<Role> = (0..n).map(Role::Element).collect();
    labels.extend((0..t).map(Role::Triple));
    labels.extend((0..t).flat_map(|j| (0..k).map(move |q| Role::Guard(j, q))));
    labels.extend((0..t).flat_map(|j| (0..k).map(move |q| Role::Leaf(j, q))));

    let guard = |j: usize, q: usize| n + t + j * k + q;
    let leaf = |j: usize, q: usize| n + t + t * k + j * k + q;
    let mut edges = Vec::with_capacity(t * (2 * k + 3));
    for (j, triple) in inst.triples.iter().enumerate() {
        for q in 0..k {
            edges.push((n + j, guard(j, q)));
            edges.push((guard(j, q), leaf(j, q)));
        }
        edges.extend(triple.iter().map(|&x| (x, n + j)));
    }
    let graph = Graph::from_edges(labels.len(), edges).expect("gadget edges are simple");
    ReductionGraph {
        instance: inst.clone(),
        graph,
        labels,
    }
}

/// `D = (all guards) ∪ {c_j : j ∈ cover} ∪ (leaves of every j ∉ cover)`.
pub fn witness_forward(inst: &SetCoverInstance, cover: &[usize]) -> Result<VertexSet> {
    inst.check_cover(cover)?;
    let (n, t, k) = (inst.universe, inst.triples.len(), inst.k);
    let mut d = VertexSet::empty(n + t * (2 * k + 1));
    let mut in_cover = vec![false; t];
    for &j in cover {
        in_cover[j] = true;
    }
    for (j, &chosen) in in_cover.iter().enumerate() {
        for q in 0..k {
            d.insert(n + t + j * k + q);
            if !chosen {
                d.insert(n + t + t * k + j * k + q);
            }
        }
        if chosen {
            d.insert(n + j);
        }
    }
    Ok(d)
}

/// `C' = {C_j : c_j ∈ d}` for a total [1,k]-dominating set `d`.
pub fn witness_backward(rg: &ReductionGraph, d: &VertexSet) -> Result<Vec<usize>> {
    let k = rg.instance.k;
    if let Some(v) = domination::first_violation(&rg.graph, d, GammaKind::TotalOneK(k))? {
        return Err(Error::InvalidWitness { k, vertex: v });
    }
    let n = rg.instance.universe;
    Ok((0..rg.instance.triples.len()).filter(|&j| d.contains(n + j)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub cover: Option<Vec<usize>>,
    pub total_set: Option<VertexSet>,
}

impl LemmaCheck {
    pub fn agrees(&self) -> bool {
        self.cover.is_some() == self.total_set.is_some()
    }
}

/// Solves both sides with brute force and reports them.
pub fn check_lemma(inst: &SetCoverInstance) -> Result<LemmaCheck> {
    let t = inst.triples.len();
    if t > MAX_EQUIVALENCE_TRIPLES {
        return Err(Error::Guardrail {
            what: "equivalence check triple count",
            actual: t,
            limit: MAX_EQUIVALENCE_TRIPLES,
        });
    }
    let rg = build_reduction(inst);
    let cover = solve_set_cover_1k(inst)?;
    let total = oracle::solve(rg.graph(), GammaKind::TotalOneK(inst.k))?;
    Ok(LemmaCheck {
        cover,
        total_set: total.witness().cloned(),
    })
}

pub fn verify_lemma_equivalence(inst: &SetCoverInstance) -> Result<bool> {
    check_lemma(inst).map(|c| c.agrees())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_total_1k_dominating;

    pub(crate) fn figure_instance() -> SetCoverInstance {
        SetCoverInstance::from_one_based(
            9,
            &[[1, 2, 4], [2, 5, 7], [4, 5, 6], [3, 5, 9], [3, 8, 9]],
            3,
        )
        .unwrap()
    }

    #[test]
    fn figure_gadget_shape() {
        let rg = build_reduction(&figure_instance());
        let g = rg.graph();
        assert_eq!((g.order(), g.size()), (44, 45));
        assert!(g.is_bipartite());
        assert_eq!(rg.role(9), Role::Triple(0));
        assert_eq!(rg.index(Role::Leaf(4, 2)), 43);
        assert_eq!(rg.role(43), Role::Leaf(4, 2));
        assert_eq!(rg.role(43).to_string(), "l5,3");
    }

    #[test]
    fn tiny_gadgets() {
        let rg = build_reduction(&SetCoverInstance::new(3, vec![], 2).unwrap());
        assert_eq!((rg.graph().order(), rg.graph().size()), (3, 0));
        let rg = build_reduction(&SetCoverInstance::new(3, vec![[0, 1, 2]], 2).unwrap());
        assert_eq!((rg.graph().order(), rg.graph().size()), (8, 7));
    }

    #[test]
    fn instance_validation() {
        assert!(SetCoverInstance::new(3, vec![[0, 1, 1]], 2).is_err());
        assert!(SetCoverInstance::new(3, vec![[0, 1, 3]], 2).is_err());
        assert!(SetCoverInstance::new(2, vec![], 2).is_err());
        assert!(SetCoverInstance::new(3, vec![], 0).is_err());
        assert!(SetCoverInstance::from_one_based(3, &[[0, 1, 2]], 1).is_err());
        assert!(SetCoverInstance::from_json(r#"{"n":3,"k":1,"triples":[[1,2,3]],"extra":1}"#).is_err());
        let inst = SetCoverInstance::from_json(r#"{"n":3,"k":1,"triples":[[1,2,3]]}"#).unwrap();
        assert_eq!(inst.triples(), &[[0, 1, 2]]);
        assert_eq!(inst.to_json().triples, vec![[1, 2, 3]]);
    }

    #[test]
    fn set_cover_oracle() {
        let fig = figure_instance();
        assert_eq!(solve_set_cover_1k(&fig).unwrap(), Some(vec![0, 1, 2, 4]));
        let one = SetCoverInstance::new(3, vec![[0, 1, 2]], 1).unwrap();
        assert_eq!(solve_set_cover_1k(&one).unwrap(), Some(vec![0]));
        let clash = SetCoverInstance::new(4, vec![[0, 1, 2], [1, 2, 3]], 1).unwrap();
        assert_eq!(solve_set_cover_1k(&clash).unwrap(), None);
        // Same instance is fine once elements may be hit twice.
        let relaxed = SetCoverInstance::new(4, vec![[0, 1, 2], [1, 2, 3]], 2).unwrap();
        assert_eq!(solve_set_cover_1k(&relaxed).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn forward_sizes() {
        let fig = figure_instance();
        let d = witness_forward(&fig, &[0, 1, 2, 4]).unwrap();
        assert_eq!(d.len(), 22);
        assert!(is_total_1k_dominating(build_reduction(&fig).graph(), &d, 3).unwrap());
        for (k, size) in [(2, 3), (3, 4)] {
            let inst = SetCoverInstance::new(3, vec![[0, 1, 2]], k).unwrap();
            assert_eq!(witness_forward(&inst, &[0]).unwrap().len(), size);
        }
        assert!(matches!(witness_forward(&fig, &[0, 1, 2]), Err(Error::InvalidCover { .. })));
        assert!(matches!(witness_forward(&fig, &[0, 0, 1, 2, 4]), Err(Error::InvalidCover { .. })));
    }

    #[test]
    fn backward_round_trip_and_rejection() {
        let fig = figure_instance();
        let rg = build_reduction(&fig);
        let d = witness_forward(&fig, &[0, 1, 2, 4]).unwrap();
        assert_eq!(witness_backward(&rg, &d).unwrap(), vec![0, 1, 2, 4]);
        let mut broken = d.clone();
        broken.remove(rg.index(Role::Guard(3, 1)));
        assert!(matches!(witness_backward(&rg, &broken), Err(Error::InvalidWitness { k: 3, .. })));
    }

    #[test]
    fn lemma_examples() {
        let yes = SetCoverInstance::new(3, vec![[0, 1, 2]], 2).unwrap();
        let c = check_lemma(&yes).unwrap();
        assert!(c.cover.is_some() && c.total_set.is_some());
        let no = SetCoverInstance::new(4, vec![[0, 1, 2]], 2).unwrap();
        let c = check_lemma(&no).unwrap();
        assert!(c.cover.is_none() && c.total_set.is_none());
        let clash = SetCoverInstance::new(4, vec![[0, 1, 2], [1, 2, 3]], 1).unwrap();
        assert_eq!(build_reduction(&clash).graph().order(), 10);
        let c = check_lemma(&clash).unwrap();
        assert!(c.cover.is_none() && c.total_set.is_none());
    }

    #[test]
    fn gadget_edge_list_labels() {
        let rg = build_reduction(&SetCoverInstance::new(3, vec![[0, 1, 2]], 1).unwrap());
        let text = rg.to_edge_list();
        assert!(text.starts_with("p 6 5\nc label 1 x1\n"));
        assert!(text.contains("c label 5 p1,1\nc label 6 l1,1\n"));
    }
}

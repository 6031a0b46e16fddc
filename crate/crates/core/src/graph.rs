//! Simple undirected graphs stored as per-vertex adjacency bitmasks.
//!
//! Vertices are `0..n`. Every constructor rejects order 0. Rows are packed
//! into `u64` words, so for `n <= 64` the neighbourhood of a vertex is a
//! single word (see [`Graph::row_mask`]), which the exact solvers rely on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of the vertices of a graph of order `arity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    arity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(arity: usize) -> Self {
        Self {
            arity,
            words: vec![0; words_for(arity)],
        }
    }

    pub fn full(arity: usize) -> Self {
        let mut s = Self::empty(arity);
        for v in 0..arity {
            s.insert(v);
        }
        s
    }

    pub fn from_indices(arity: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(arity);
        for v in members {
            if v >= arity {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: arity,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from a bitmask; bits at or above `arity` are dropped.
    pub fn from_mask(arity: usize, mask: u64) -> Self {
        let mut s = Self::empty(arity);
        if arity > 0 {
            let keep = if arity >= WORD { u64::MAX } else { (1u64 << arity) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The set as a single word, if the arity fits in one.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.arity && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`. Panics if `v` is outside the arity.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.arity, "vertex {v} outside arity {}", self.arity);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.arity {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.arity
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.arity == other.arity
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects order 0, out-of-range
    /// endpoints, self-loops and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let stride = words_for(n);
        let mut g = Graph {
            n,
            m: 0,
            stride,
            rows: vec![0; n * stride],
        };
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.rows[u * stride + v / WORD] |= 1 << (v % WORD);
            g.rows[v * stride + u / WORD] |= 1 << (u % WORD);
            g.m += 1;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbourhood of `v` as a bitmask. Only available for `n <= 64`.
    pub fn row_mask(&self, v: usize) -> Option<u64> {
        (self.stride == 1).then(|| self.rows[v])
    }

    /// All neighbourhood masks, for `n <= 64`.
    pub fn row_masks(&self) -> Option<Vec<u64>> {
        (self.stride == 1).then(|| self.rows.clone())
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `|N(v) ∩ set|`.
    pub fn neighbors_in(&self, v: usize, set: &VertexSet) -> usize {
        self.row(v)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges as `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_arity(&self, set: &VertexSet) -> Result<()> {
        if set.arity() != self.n {
            return Err(Error::ArityMismatch {
                set: set.arity(),
                graph: self.n,
            });
        }
        Ok(())
    }

    /// A proper 2-colouring (`false`/`true` per vertex), or `None` if the
    /// graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.is_full()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Arm lengths of a star-like tree `S(n_1, ..., n_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarLikeSpec {
    arms: Vec<usize>,
}

impl StarLikeSpec {
    /// Needs at least three arms (otherwise the centre has degree at most
    /// two), each of positive length.
    pub fn new(arms: Vec<usize>) -> Result<Self> {
        if arms.len() < 3 {
            return Err(Error::TooFewArms(arms.len()));
        }
        if arms.contains(&0) {
            return Err(Error::EmptyArm);
        }
        Ok(Self { arms })
    }

    /// `S(len, len, ..., len)` with `count` arms.
    pub fn uniform(count: usize, len: usize) -> Result<Self> {
        Self::new(vec![len; count])
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn order(&self) -> usize {
        1 + self.arms.iter().sum::<usize>()
    }

    /// Index of the first vertex of arm `i` (0-based), the one adjacent to
    /// the centre.
    pub fn arm_start(&self, i: usize) -> usize {
        1 + self.arms[..i].iter().sum::<usize>()
    }
}

/// The edgeless graph on `t` vertices.
pub fn make_empty_graph(t: usize) -> Result<Graph> {
    Graph::from_edges(t, [])
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { what: "cycle", n, min: 3 });
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with the `a` side at `0..a`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Star-like tree with the centre at index 0. Arm `i` follows contiguously,
/// nearest-to-centre first.
///
/// For `S(2,2,2)` the figure labelling maps as: centre `v7 -> 0`, and arm
/// pairs `(v2, v1) -> (1, 2)`, `(v4, v3) -> (3, 4)`, `(v6, v5) -> (5, 6)`.
pub fn make_star_like(spec: &StarLikeSpec) -> Result<Graph> {
    let mut edges = Vec::with_capacity(spec.order() - 1);
    for (i, &len) in spec.arms().iter().enumerate() {
        let start = spec.arm_start(i);
        edges.push((0, start));
        edges.extend((start + 1..start + len).map(|v| (v - 1, v)));
    }
    Graph::from_edges(spec.order(), edges)
}

//! Small-instance catalogs: exhaustive labeled graphs and seeded random
//! graphs and set-cover instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::reduction::SetCoverInstance;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n` vertices, in order of the edge-subset mask.
/// Intended for `n <= 6`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=6).contains(&n), "labeled catalog supports 1..=6 vertices");
    let pairs = vertex_pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(Graph::is_connected)
}

/// Connected labeled graphs on `1..=max_n` vertices.
pub fn connected_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_labeled_graphs).collect()
}

/// `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<_> = vertex_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Rejection-samples `G(n, 1/2)` until connected.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let g = random_graph(n, 0.5, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// The solver cross-check catalog: every connected labeled graph on at
/// most 5 vertices, then `random` graphs on 6..=14 vertices with edge
/// density drawn from `[0.15, 0.6]`.
pub fn solver_catalog(random: usize, seed: u64) -> Vec<Graph> {
    let mut out = connected_up_to(5);
    let mut r = rng(seed);
    for _ in 0..random {
        let n = r.gen_range(6..=14);
        let p = r.gen_range(0.15..=0.6);
        out.push(random_graph(n, p, &mut r));
    }
    out
}

pub fn all_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every instance over universe `n` with exactly `t` triples, as multisets
/// of 3-subsets (repeats allowed, order ignored).
pub fn instances_exhaustive(n: usize, t: usize, k: usize) -> Vec<SetCoverInstance> {
    let triples = all_triples(n);
    let mut out = Vec::new();
    let mut pick = vec![0usize; t];
    loop {
        let chosen = pick.iter().map(|&i| triples[i]).collect();
        out.push(SetCoverInstance::new(n, chosen, k).unwrap());
        // Next non-decreasing index sequence.
        let Some(i) = (0..t).rev().find(|&i| pick[i] + 1 < triples.len()) else {
            return out;
        };
        pick[i] += 1;
        for j in i + 1..t {
            pick[j] = pick[i];
        }
    }
}

pub fn random_instance(max_n: usize, max_t: usize, max_k: usize, rng: &mut impl Rng) -> SetCoverInstance {
    let n = rng.gen_range(3..=max_n);
    let t = rng.gen_range(0..=max_t);
    let k = rng.gen_range(1..=max_k);
    let universe: Vec<usize> = (0..n).collect();
    let triples = (0..t)
        .map(|_| {
            let mut pick: Vec<usize> = universe.choose_multiple(rng, 3).copied().collect();
            pick.sort_unstable();
            [pick[0], pick[1], pick[2]]
        })
        .collect();
    SetCoverInstance::new(n, triples, k).unwrap()
}

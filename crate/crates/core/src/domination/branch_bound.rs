//! Branch and bound over (chosen, excluded) vertex masks.
//!
//! At each node the lowest-index vertex that still lacks a chosen
//! neighbour (or, for non-total kinds, is neither chosen nor covered) is
//! selected, and the search branches on which of its admissible
//! neighbours joins the set. Candidates tried earlier are excluded in
//! later siblings, so every set is reached at most once.
//!
//! Propagation before branching:
//! * a vertex with no admissible candidate left kills the node;
//! * a vertex with exactly one candidate forces it;
//! * `OneK`: an undecided vertex with more than `k` chosen neighbours is
//!   forced into the set; an excluded one kills the node;
//! * `TotalOneK`: any vertex with more than `k` chosen neighbours kills
//!   the node.
//!
//! Nodes are pruned when `|chosen| + ceil(uncovered / reach) >= best`,
//! with `reach = Δ + 1` for non-total kinds and `Δ` for total kinds.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{DominationResult, GammaKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Split the root's branches across threads. The value is unaffected;
    /// the witness may vary between runs.
    pub parallel: bool,
}

struct Problem<'a> {
    rows: &'a [u64],
    n: usize,
    kind: GammaKind,
    cap: u32,
    reach: usize,
}

#[derive(Clone, Copy)]
struct Node {
    chosen: u64,
    excluded: u64,
}

enum Outcome {
    Dead,
    Leaf,
    Branch { candidates: u64 },
}

impl Problem<'_> {
    fn needs_cover(&self, node: Node, v: usize) -> bool {
        let bit = 1u64 << v;
        if !self.kind.is_total() && node.chosen & bit != 0 {
            return false;
        }
        self.rows[v] & node.chosen == 0
    }

    fn candidates(&self, node: Node, v: usize) -> u64 {
        let mut pool = self.rows[v];
        if !self.kind.is_total() {
            pool |= 1 << v;
        }
        pool & !node.excluded & !node.chosen
    }

    /// Runs propagation to a fixpoint, then reports what to do next.
    fn propagate(&self, node: &mut Node) -> Outcome {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                let bit = 1u64 << v;
                let seen = (self.rows[v] & node.chosen).count_ones();
                if seen > self.cap {
                    match self.kind {
                        GammaKind::TotalOneK(_) => return Outcome::Dead,
                        GammaKind::OneK(_) if node.chosen & bit == 0 => {
                            if node.excluded & bit != 0 {
                                return Outcome::Dead;
                            }
                            node.chosen |= bit;
                            changed = true;
                            continue;
                        }
                        _ => {}
                    }
                }
                if self.needs_cover(*node, v) {
                    let cands = self.candidates(*node, v);
                    if cands == 0 {
                        return Outcome::Dead;
                    }
                    if cands.count_ones() == 1 {
                        node.chosen |= cands;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        match (0..self.n).find(|&v| self.needs_cover(*node, v)) {
            None => Outcome::Leaf,
            Some(v) => Outcome::Branch {
                candidates: self.candidates(*node, v),
            },
        }
    }

    fn lower_bound(&self, node: Node) -> usize {
        let uncovered = (0..self.n).filter(|&v| self.needs_cover(node, v)).count();
        uncovered.div_ceil(self.reach)
    }

    /// Children of a branching node, best-covering candidate first.
    fn children(&self, node: Node, candidates: u64) -> Vec<Node> {
        let mut order: Vec<(usize, usize)> = bits(candidates)
            .map(|u| {
                let probe = Node {
                    chosen: node.chosen | 1 << u,
                    ..node
                };
                let gain = (0..self.n)
                    .filter(|&v| self.needs_cover(node, v) && !self.needs_cover(probe, v))
                    .count();
                (u, gain)
            })
            .collect();
        order.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut excluded = node.excluded;
        order
            .into_iter()
            .map(|(u, _)| {
                let child = Node {
                    chosen: node.chosen | 1 << u,
                    excluded,
                };
                excluded |= 1 << u;
                child
            })
            .collect()
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

struct Search<'a, 'p> {
    problem: &'a Problem<'p>,
    best: usize,
    witness: Option<u64>,
    shared: Option<&'a AtomicUsize>,
}

impl Search<'_, '_> {
    fn bound(&self) -> usize {
        match self.shared {
            Some(s) => self.best.min(s.load(Ordering::Relaxed)),
            None => self.best,
        }
    }

    fn record(&mut self, chosen: u64) {
        let size = chosen.count_ones() as usize;
        if size < self.bound() {
            self.best = size;
            self.witness = Some(chosen);
            if let Some(s) = self.shared {
                s.fetch_min(size, Ordering::Relaxed);
            }
        }
    }

    fn run(&mut self, mut node: Node) {
        match self.problem.propagate(&mut node) {
            Outcome::Dead => {}
            Outcome::Leaf => self.record(node.chosen),
            Outcome::Branch { candidates, .. } => {
                if node.chosen.count_ones() as usize + self.problem.lower_bound(node) >= self.bound() {
                    return;
                }
                for child in self.problem.children(node, candidates) {
                    self.run(child);
                }
            }
        }
    }
}

pub fn solve(g: &Graph, kind: GammaKind, opts: Options) -> Result<DominationResult> {
    kind.validate()?;
    let n = g.order();
    let rows = g.row_masks().ok_or(Error::Guardrail {
        what: "branch-and-bound graph order",
        actual: n,
        limit: MAX_ORDER,
    })?;
    let max_deg = g.max_degree();
    let reach = if kind.is_total() { max_deg } else { max_deg + 1 };
    if reach == 0 {
        // Total kind on an edgeless graph.
        return Ok(DominationResult::Infinite);
    }
    let problem = Problem {
        rows: &rows,
        n,
        kind,
        cap: kind.cap().min(u32::MAX as usize) as u32,
        reach,
    };
    // The whole vertex set is always valid for non-total kinds.
    let (best, witness) = if kind.is_total() {
        (n + 1, None)
    } else {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (n, Some(all))
    };
    let mut root = Node {
        chosen: 0,
        excluded: 0,
    };
    let found = match problem.propagate(&mut root) {
        Outcome::Dead => None,
        Outcome::Leaf => Some(root.chosen),
        Outcome::Branch { candidates, .. } if opts.parallel => {
            let shared = AtomicUsize::new(best);
            let children = problem.children(root, candidates);
            children
                .into_par_iter()
                .filter_map(|child| {
                    let mut s = Search {
                        problem: &problem,
                        best,
                        witness: None,
                        shared: Some(&shared),
                    };
                    s.run(child);
                    s.witness
                })
                .min_by_key(|m| m.count_ones())
        }
        Outcome::Branch { .. } => {
            let mut s = Search {
                problem: &problem,
                best,
                witness: None,
                shared: None,
            };
            s.run(root);
            s.witness
        }
    };
    let found = match (found, witness) {
        (Some(f), Some(w)) if w.count_ones() <= f.count_ones() => Some(w),
        (Some(f), _) => Some(f),
        (None, w) => w,
    };
    Ok(DominationResult::from_witness(found.map(|m| VertexSet::from_mask(n, m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_valid, oracle};
    use crate::graph::{make_cycle, make_empty_graph, make_path, make_star_like, StarLikeSpec};
    use crate::product::lex_product;

    fn both(g: &Graph, kind: GammaKind) -> (DominationResult, DominationResult) {
        let seq = solve(g, kind, Options::default()).unwrap();
        let par = solve(g, kind, Options { parallel: true }).unwrap();
        (seq, par)
    }

    #[test]
    fn small_values() {
        let p4 = make_path(4).unwrap();
        for (kind, want) in [
            (GammaKind::Plain, Some(2)),
            (GammaKind::OneK(2), Some(2)),
            (GammaKind::Total, Some(2)),
            (GammaKind::TotalOneK(1), Some(2)),
        ] {
            let (a, b) = both(&p4, kind);
            assert_eq!(a.value(), want, "{kind}");
            assert_eq!(b.value(), want, "{kind}");
            assert!(is_valid(&p4, a.witness().unwrap(), kind).unwrap());
        }
        let c4 = make_cycle(4).unwrap();
        assert_eq!(both(&c4, GammaKind::TotalOneK(2)).0.value(), Some(2));
    }

    #[test]
    fn infinite_cases() {
        let s222 = make_star_like(&StarLikeSpec::uniform(3, 2).unwrap()).unwrap();
        let (a, b) = both(&s222, GammaKind::TotalOneK(2));
        assert!(a.is_infinite() && b.is_infinite());
        let e3 = make_empty_graph(3).unwrap();
        assert!(solve(&e3, GammaKind::Total, Options::default()).unwrap().is_infinite());
        assert_eq!(solve(&e3, GammaKind::OneK(2), Options::default()).unwrap().value(), Some(3));
        let k1 = make_empty_graph(1).unwrap();
        assert_eq!(solve(&k1, GammaKind::OneK(1), Options::default()).unwrap().value(), Some(1));
    }

    #[test]
    fn exam21_is_full() {
        let s222 = make_star_like(&StarLikeSpec::uniform(3, 2).unwrap()).unwrap();
        let g = lex_product(&s222, &make_empty_graph(3).unwrap()).into_graph();
        let (a, b) = both(&g, GammaKind::OneK(2));
        assert_eq!(a.value(), Some(21));
        assert!(a.witness().unwrap().is_full());
        assert_eq!(b.value(), Some(21));
    }

    #[test]
    fn agrees_with_oracle_on_products() {
        let p3 = make_path(3).unwrap();
        let g = lex_product(&p3, &make_empty_graph(3).unwrap()).into_graph();
        for kind in GammaKind::all(2) {
            let want = oracle::solve(&g, kind).unwrap().value();
            assert_eq!(both(&g, kind).0.value(), want, "{kind}");
        }
    }

    #[test]
    fn guardrail() {
        let g = make_path(65).unwrap();
        assert!(matches!(
            solve(&g, GammaKind::Plain, Options::default()),
            Err(Error::Guardrail { .. })
        ));
        // 64 fits.
        let g = make_path(64).unwrap();
        assert_eq!(solve(&g, GammaKind::Plain, Options::default()).unwrap().value(), Some(22));
    }
}

use kdom::catalog;
use kdom::edgelist::{parse_edge_list, write_edge_list};
use kdom::graph::{make_empty_graph, make_path, make_star_like, Graph, StarLikeSpec};
use kdom::product::{lex_product, product_bipartite_iff};
use proptest::prelude::*;

/// Bipartite iff some 2-colouring of all vertices leaves every edge
/// bichromatic. Independent of the BFS colouring.
fn brute_force_bipartite(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|col| g.edges().all(|(u, v)| (col >> u & 1) != (col >> v & 1)))
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

#[test]
fn bipartite_matches_brute_force_exhaustive() {
    for n in 1..=5 {
        for g in catalog::labeled_graphs(n) {
            assert_eq!(g.is_bipartite(), brute_force_bipartite(&g), "{g:?}");
        }
    }
}

proptest! {
    #[test]
    fn bipartite_matches_brute_force_random(g in arb_graph(7)) {
        prop_assert_eq!(g.is_bipartite(), brute_force_bipartite(&g));
    }

    #[test]
    fn adjacency_is_symmetric(g in arb_graph(12)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
            prop_assert_eq!(g.degree(u), g.neighbors(u).count());
        }
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn edge_list_fixpoint(g in arb_graph(20)) {
        let text = write_edge_list::<&str>(&g, &[]);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list::<&str>(&back, &[]), text);
    }

    #[test]
    fn star_like_shape(arms in proptest::collection::vec(1usize..5, 3..7)) {
        let spec = StarLikeSpec::new(arms.clone()).unwrap();
        let g = make_star_like(&spec).unwrap();
        prop_assert_eq!(g.order(), 1 + arms.iter().sum::<usize>());
        prop_assert_eq!(g.size(), arms.iter().sum::<usize>());
        prop_assert_eq!((0..g.order()).filter(|&v| g.degree(v) > 2).count(), 1);
        prop_assert_eq!(g.degree(0), arms.len());
        prop_assert!(g.is_bipartite() && g.is_connected());
    }

    #[test]
    fn product_laws(g in arb_graph(5), h in arb_graph(4)) {
        let p = lex_product(&g, &h);
        let pg = p.graph();
        let nh = h.order();
        prop_assert_eq!(pg.order(), g.order() * nh);
        prop_assert_eq!(pg.size(), g.size() * nh * nh + g.order() * h.size());
        for a in 0..g.order() {
            for b in 0..nh {
                let v = p.index(a, b);
                prop_assert_eq!(pg.degree(v), g.degree(a) * nh + h.degree(b));
            }
        }
        // Definition, pair by pair.
        for x in 0..pg.order() {
            for y in 0..pg.order() {
                let ((a, b), (a2, b2)) = (p.coords(x), p.coords(y));
                let want = g.has_edge(a, a2) || (a == a2 && h.has_edge(b, b2));
                prop_assert_eq!(pg.has_edge(x, y), want);
            }
        }
        // H-layers partition V(p).
        let mut seen = vec![0; pg.order()];
        for a in 0..g.order() {
            let layer = p.h_layer(a).unwrap();
            prop_assert_eq!(layer.len(), nh);
            for v in layer.iter() {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }
}

#[test]
fn product_bipartite_criterion_exhaustive() {
    // All pairs with both factors on at most 3 vertices, plus 4-vertex g
    // against factors on up to 3 vertices (product order <= 12).
    let small: Vec<Graph> = (1..=3).flat_map(catalog::labeled_graphs).collect();
    let four: Vec<Graph> = catalog::labeled_graphs(4).collect();
    let mut pairs = 0;
    for g in small.iter().chain(&four) {
        for h in &small {
            if g.order() * h.order() > 12 {
                continue;
            }
            let p = lex_product(g, h);
            assert_eq!(product_bipartite_iff(g, h), p.graph().is_bipartite(), "{g:?} ∘ {h:?}");
            pairs += 1;
        }
    }
    assert!(pairs > 500);
}

#[test]
fn product_bipartite_criterion_random() {
    let mut rng = catalog::rng(11);
    use rand::Rng;
    for _ in 0..400 {
        let ng = rng.gen_range(1..=6);
        let nh = rng.gen_range(1..=12 / ng);
        let g = catalog::random_graph(ng, rng.gen_range(0.0..=1.0), &mut rng);
        let h = catalog::random_graph(nh, rng.gen_range(0.0..=1.0), &mut rng);
        assert_eq!(product_bipartite_iff(&g, &h), lex_product(&g, &h).graph().is_bipartite());
    }
}

#[test]
fn generated_trees_are_connected_bipartite() {
    for n in 1..30 {
        let p = make_path(n).unwrap();
        assert_eq!(p.size(), n - 1);
        assert!(p.is_bipartite() && p.is_connected());
        let e = make_empty_graph(n).unwrap();
        assert_eq!(e.size(), 0);
        assert_eq!(e.is_connected(), n == 1);
    }
}

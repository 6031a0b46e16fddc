use kdom::catalog;
use kdom::domination::{is_total_1k_dominating, oracle, GammaKind};
use kdom::reduction::{
    build_reduction, check_lemma, solve_set_cover_1k, witness_backward, witness_forward, Role, SetCoverInstance,
};
use kdom::suite::{lemma_suite, LemmaCatalog};

/// Every valid cover, by direct enumeration of subcollections.
fn all_covers(inst: &SetCoverInstance) -> Vec<Vec<usize>> {
    let t = inst.triples().len();
    (0u32..1 << t)
        .map(|m| (0..t).filter(|&j| m >> j & 1 == 1).collect::<Vec<_>>())
        .filter(|c| inst.is_cover(c))
        .collect()
}

#[test]
fn gadget_structure_on_random_instances() {
    let mut rng = catalog::rng(500);
    for _ in 0..500 {
        let inst = catalog::random_instance(8, 6, 4, &mut rng);
        let (n, t, k) = (inst.universe(), inst.triples().len(), inst.k());
        let rg = build_reduction(&inst);
        let g = rg.graph();
        assert_eq!(g.order(), n + t * (2 * k + 1));
        assert_eq!(g.size(), t * (2 * k + 3));
        let col = g.two_coloring().expect("gadget is bipartite");
        for v in 0..g.order() {
            let side = matches!(rg.role(v), Role::Element(_) | Role::Guard(..));
            // Parts: {x, p} vs {c, l}.
            for u in g.neighbors(v) {
                let other = matches!(rg.role(u), Role::Element(_) | Role::Guard(..));
                assert_ne!(side, other);
            }
            match rg.role(v) {
                Role::Leaf(j, q) => {
                    assert_eq!(g.degree(v), 1);
                    assert!(g.has_edge(v, rg.index(Role::Guard(j, q))));
                }
                Role::Guard(j, q) => {
                    assert_eq!(g.degree(v), 2);
                    assert!(g.has_edge(v, rg.index(Role::Triple(j))));
                    assert!(g.has_edge(v, rg.index(Role::Leaf(j, q))));
                }
                Role::Triple(j) => {
                    assert_eq!(g.degree(v), k + 3);
                    for &x in &inst.triples()[j] {
                        assert!(g.has_edge(v, x));
                    }
                }
                Role::Element(i) => {
                    let hits = inst.triples().iter().filter(|t| t.contains(&i)).count();
                    assert_eq!(g.degree(v), hits);
                }
            }
            assert_eq!(rg.index(rg.role(v)), v);
        }
        assert_eq!(col.len(), g.order());
    }
}

#[test]
fn witness_round_trip_on_every_cover() {
    let mut instances = Vec::new();
    for k in 1..=3 {
        for n in 3..=5 {
            for t in 0..=3 {
                if n == 5 && t == 3 {
                    continue;
                }
                instances.extend(catalog::instances_exhaustive(n, t, k));
            }
        }
    }
    let mut covers = 0;
    for inst in &instances {
        let rg = build_reduction(inst);
        for cover in all_covers(inst) {
            let d = witness_forward(inst, &cover).unwrap();
            let t = inst.triples().len();
            let k = inst.k();
            assert_eq!(d.len(), t * k + cover.len() + k * (t - cover.len()));
            assert!(is_total_1k_dominating(rg.graph(), &d, k).unwrap());
            assert_eq!(witness_backward(&rg, &d).unwrap(), cover);
            covers += 1;
        }
    }
    assert!(covers > 100, "only {covers} covers exercised");
}

#[test]
fn oracle_witnesses_have_forced_structure() {
    for k in 1..=2 {
        for n in 3..=4 {
            for t in 0..=2 {
                for inst in catalog::instances_exhaustive(n, t, k) {
                    let rg = build_reduction(&inst);
                    let r = oracle::solve(rg.graph(), GammaKind::TotalOneK(k)).unwrap();
                    if let Some(d) = r.witness() {
                        assert!(rg.guard_vertices().is_subset(d));
                        assert!(!rg.element_vertices().intersects(d));
                        let cover = witness_backward(&rg, d).unwrap();
                        assert!(inst.is_cover(&cover));
                    }
                }
            }
        }
    }
}

#[test]
fn set_cover_oracle_is_minimum_and_canonical() {
    let mut rng = catalog::rng(99);
    for _ in 0..300 {
        let inst = catalog::random_instance(6, 6, 3, &mut rng);
        let covers = all_covers(&inst);
        let got = solve_set_cover_1k(&inst).unwrap();
        let best = covers.iter().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).cloned();
        assert_eq!(got, best);
    }
}

#[test]
fn lemma_small_sweep() {
    let report = lemma_suite(&LemmaCatalog {
        max_n: 4,
        max_t: 2,
        ks: vec![1, 2],
        random: 20,
        seed: 3,
    })
    .unwrap();
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
    assert_eq!(report.cases.len(), 2 * (1 + 1 + 1 + 1 + 4 + 10) + 20);
}

#[test]
fn lemma_guardrail() {
    let triples = vec![[0, 1, 2]; 13];
    let inst = SetCoverInstance::new(3, triples, 1).unwrap();
    assert!(check_lemma(&inst).is_err());
}

//! Verification sweeps over catalogs. Each case yields one outcome line;
//! cases run in parallel but are reported in catalog order.

use std::fmt;

use rayon::prelude::*;

use crate::catalog;
use crate::construction::{build_gamma, check_forced_layers, product_identity, verify_gamma_extremal};
use crate::domination::Method;
use crate::error::Result;
use crate::graph::Graph;
use crate::reduction::{build_reduction, check_lemma, SetCoverInstance};

/// Largest Γ order the gamma suite hands to the exact solver.
pub const EXACT_GAMMA_LIMIT: usize = 40;

/// Sweeps use the oracle up to this order and branch and bound above it.
pub const ORACLE_SWEEP_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.label, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.cases.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn summary(&self) -> String {
        format!("summary {}: {}/{} passed", self.name, self.passed(), self.cases.len())
    }
}

fn method_for(order: usize) -> Method {
    if order <= ORACLE_SWEEP_LIMIT {
        Method::Oracle
    } else {
        Method::BranchBound
    }
}

fn graph_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("n={} [{}]", g.order(), edges.join(" "))
}

#[derive(Clone, Copy, Debug)]
pub struct GraphCatalog {
    /// Exhaustive over connected labeled graphs on `1..=max_n` vertices.
    pub max_n: usize,
    /// Extra random connected graphs on `max_n + 1` vertices.
    pub samples: usize,
    pub seed: u64,
}

impl GraphCatalog {
    pub fn graphs(&self) -> Vec<Graph> {
        let mut out = catalog::connected_up_to(self.max_n);
        let mut r = catalog::rng(self.seed);
        out.extend((0..self.samples).map(|_| catalog::random_connected_graph(self.max_n + 1, &mut r)));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IdentityCheck {
    Case1,
    Corollary,
}

fn identity_suite(which: IdentityCheck, k: usize, cat: GraphCatalog) -> Result<SuiteReport> {
    let graphs = cat.graphs();
    let cases = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let r = product_identity(g, k, method_for(g.order() * (k + 1)))?;
            let total = r.total_value.map_or("inf".to_string(), |v| v.to_string());
            let (pass, detail) = match which {
                IdentityCheck::Case1 => (
                    r.case1_holds(),
                    format!(
                        "gamma_1k(product)={} gamma_t1k={} predicted={}",
                        r.product_value,
                        total,
                        r.predicted()
                    ),
                ),
                IdentityCheck::Corollary => (
                    r.corollary_holds(),
                    format!(
                        "product_full={} no_total_set={}",
                        r.product_value == r.product_order(),
                        r.total_value.is_none()
                    ),
                ),
            };
            Ok(CaseOutcome {
                label: format!("case {} {}", i + 1, graph_label(g)),
                pass,
                detail,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let name = match which {
        IdentityCheck::Case1 => "case1",
        IdentityCheck::Corollary => "corollary",
    };
    Ok(SuiteReport {
        name: format!("{name} k={k}"),
        cases,
    })
}

pub fn case1_suite(k: usize, cat: GraphCatalog) -> Result<SuiteReport> {
    identity_suite(IdentityCheck::Case1, k, cat)
}

pub fn corollary_suite(k: usize, cat: GraphCatalog) -> Result<SuiteReport> {
    identity_suite(IdentityCheck::Corollary, k, cat)
}

#[derive(Clone, Debug)]
pub struct LemmaCatalog {
    /// Exhaustive over universes `3..=max_n` and `0..=max_t` triples.
    pub max_n: usize,
    pub max_t: usize,
    pub ks: Vec<usize>,
    /// Random instances with `n <= 5`, `t <= 3`, `k` drawn from `ks`.
    pub random: usize,
    pub seed: u64,
}

impl LemmaCatalog {
    pub fn instances(&self) -> Vec<SetCoverInstance> {
        let mut out = Vec::new();
        for &k in &self.ks {
            for n in 3..=self.max_n {
                for t in 0..=self.max_t {
                    out.extend(catalog::instances_exhaustive(n, t, k));
                }
            }
        }
        let mut r = catalog::rng(self.seed);
        let max_k = self.ks.iter().copied().max().unwrap_or(1);
        let target = out.len() + self.random;
        while out.len() < target {
            let inst = catalog::random_instance(5, 3, max_k, &mut r);
            if self.ks.contains(&inst.k()) {
                out.push(inst);
            }
        }
        out
    }
}

fn instance_label(inst: &SetCoverInstance) -> String {
    let triples: Vec<String> = inst
        .triples()
        .iter()
        .map(|t| format!("{{{},{},{}}}", t[0] + 1, t[1] + 1, t[2] + 1))
        .collect();
    format!("n={} k={} C=[{}]", inst.universe(), inst.k(), triples.join(" "))
}

pub fn lemma_suite(cat: &LemmaCatalog) -> Result<SuiteReport> {
    let instances = cat.instances();
    let cases = instances
        .par_iter()
        .enumerate()
        .map(|(i, inst)| {
            let c = check_lemma(inst)?;
            Ok(CaseOutcome {
                label: format!("case {} {}", i + 1, instance_label(inst)),
                pass: c.agrees(),
                detail: format!(
                    "triple_cover={} total_set={} gadget_order={}",
                    yes_no(c.cover.is_some()),
                    yes_no(c.total_set.is_some()),
                    build_reduction(inst).graph().order()
                ),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        name: "lemma".into(),
        cases,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Structural checks on Γ(k, t) for each `t <= max_t`, plus the exact
/// extremal value when the order is at most [`EXACT_GAMMA_LIMIT`].
pub fn gamma_suite(k: usize, max_t: usize) -> Result<SuiteReport> {
    let cases = (0..=max_t)
        .into_par_iter()
        .map(|t| gamma_case(k, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        name: format!("gamma k={k}"),
        cases: cases.into_iter().flatten().collect(),
    })
}

fn gamma_case(k: usize, t: usize) -> Result<Vec<CaseOutcome>> {
    let gc = build_gamma(k, t)?;
    let g = gc.graph();
    let label = |what: &str| format!("gamma({k},{t}) {what}");
    let mut out = Vec::new();

    let attach = gc.layer(crate::construction::ATTACHMENT)?;
    let attach_ok = gc
        .pendants()
        .iter()
        .all(|a| g.degree(a) == k + 1 && g.neighbors(a).eq(attach.iter()));
    out.push(CaseOutcome {
        label: label("structure"),
        pass: g.order() == crate::construction::base_order(k) + t
            && g.is_bipartite()
            && g.is_connected()
            && attach_ok,
        detail: format!(
            "order={} bipartite={} connected={} pendant_attachment={}",
            g.order(),
            g.is_bipartite(),
            g.is_connected(),
            attach_ok
        ),
    });

    let full = check_forced_layers(&gc, &g.vertices())?;
    let mut near_ok = true;
    for v in 0..g.order() {
        let mut s = g.vertices();
        s.remove(v);
        let d = check_forced_layers(&gc, &s)?;
        near_ok &= !d.dominating && d.consistent();
    }
    out.push(CaseOutcome {
        label: label("forced layers"),
        pass: full.dominating && full.consistent() && near_ok,
        detail: format!("V passes cascade={} all V-v rejected={near_ok}", full.consistent()),
    });

    if g.order() <= EXACT_GAMMA_LIMIT {
        let ok = verify_gamma_extremal(k, t, Method::BranchBound)?;
        out.push(CaseOutcome {
            label: label("extremal"),
            pass: ok,
            detail: format!("gamma_[1,{k}] == {} : {ok}", g.order()),
        });
    }
    Ok(out)
}

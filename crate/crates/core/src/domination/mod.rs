//! Domination parameters: validity checkers and exact solvers.
//!
//! Four kinds are supported:
//!
//! * `Plain` – γ: every vertex outside `D` has a neighbour in `D`.
//! * `OneK(k)` – γ_{[1,k]}: every vertex outside `D` has between 1 and `k`
//!   neighbours in `D`. Members of `D` are unconstrained.
//! * `Total` – γ_t: every vertex (members included) has a neighbour in `D`.
//! * `TotalOneK(k)` – γ_{t[1,k]}: every vertex has between 1 and `k`
//!   neighbours in `D`. May not exist, in which case the result is
//!   [`DominationResult::Infinite`].
//!
//! Two exact solvers are provided: a brute-force [`oracle`] and a pruned
//! [`branch_bound`] search. They must agree on every value.

pub mod branch_bound;
pub mod oracle;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaKind {
    Plain,
    OneK(usize),
    Total,
    TotalOneK(usize),
}

impl GammaKind {
    pub fn k(self) -> Option<usize> {
        match self {
            GammaKind::OneK(k) | GammaKind::TotalOneK(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_total(self) -> bool {
        matches!(self, GammaKind::Total | GammaKind::TotalOneK(_))
    }

    /// Upper bound on chosen neighbours, `usize::MAX` when unbounded.
    pub(crate) fn cap(self) -> usize {
        self.k().unwrap_or(usize::MAX)
    }

    pub fn name(self) -> &'static str {
        match self {
            GammaKind::Plain => "plain",
            GammaKind::OneK(_) => "one_k",
            GammaKind::Total => "total",
            GammaKind::TotalOneK(_) => "total_one_k",
        }
    }

    pub fn validate(self) -> Result<()> {
        match self.k() {
            Some(0) => Err(Error::InvalidK { k: 0, min: 1 }),
            _ => Ok(()),
        }
    }

    pub fn all(k: usize) -> [GammaKind; 4] {
        [
            GammaKind::Plain,
            GammaKind::OneK(k),
            GammaKind::Total,
            GammaKind::TotalOneK(k),
        ]
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationResult {
    Finite { value: usize, witness: VertexSet },
    Infinite,
}

impl DominationResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            DominationResult::Finite { value, .. } => Some(*value),
            DominationResult::Infinite => None,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            DominationResult::Finite { witness, .. } => Some(witness),
            DominationResult::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, DominationResult::Infinite)
    }

    pub(crate) fn from_witness(witness: Option<VertexSet>) -> Self {
        match witness {
            Some(w) => DominationResult::Finite {
                value: w.len(),
                witness: w,
            },
            None => DominationResult::Infinite,
        }
    }

    pub fn to_json(&self, kind: GammaKind) -> ResultJson {
        ResultJson {
            kind: kind.name(),
            k: kind.k(),
            value: self.value(),
            infinite: self.is_infinite(),
            witness: self.witness().map(|w| w.iter().map(|v| v + 1).collect()),
        }
    }
}

/// Serialized form of a result. Witness indices are 1-based.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ResultJson {
    pub kind: &'static str,
    pub k: Option<usize>,
    pub value: Option<usize>,
    pub infinite: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    BranchBound,
}

/// First vertex (lowest index) whose neighbour count in `d` violates the
/// condition for `kind`, or `None` if `d` is valid.
pub fn first_violation(g: &Graph, d: &VertexSet, kind: GammaKind) -> Result<Option<usize>> {
    g.check_arity(d)?;
    kind.validate()?;
    let cap = kind.cap();
    let total = kind.is_total();
    Ok((0..g.order()).find(|&v| {
        if !total && d.contains(v) {
            return false;
        }
        let c = g.neighbors_in(v, d);
        c == 0 || c > cap
    }))
}

pub fn is_valid(g: &Graph, d: &VertexSet, kind: GammaKind) -> Result<bool> {
    first_violation(g, d, kind).map(|v| v.is_none())
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    is_valid(g, d, GammaKind::Plain)
}

pub fn is_1k_dominating(g: &Graph, d: &VertexSet, k: usize) -> Result<bool> {
    is_valid(g, d, GammaKind::OneK(k))
}

pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    is_valid(g, d, GammaKind::Total)
}

pub fn is_total_1k_dominating(g: &Graph, d: &VertexSet, k: usize) -> Result<bool> {
    is_valid(g, d, GammaKind::TotalOneK(k))
}

/// Mask-level validity test shared by both solvers (`n <= 64`).
#[inline]
pub(crate) fn mask_is_valid(rows: &[u64], kind: GammaKind, d: u64) -> bool {
    let cap = kind.cap() as u32;
    let total = kind.is_total();
    rows.iter().enumerate().all(|(v, &row)| {
        if !total && d >> v & 1 == 1 {
            return true;
        }
        let c = (row & d).count_ones();
        c >= 1 && c <= cap
    })
}

/// Exact value of the parameter. Both methods are deterministic here; see
/// [`branch_bound::solve`] for the parallel variant.
pub fn gamma_exact(g: &Graph, kind: GammaKind, method: Method) -> Result<DominationResult> {
    match method {
        Method::Oracle => oracle::solve(g, kind),
        Method::BranchBound => branch_bound::solve(g, kind, branch_bound::Options::default()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialBounds {
    pub n: usize,
    pub k: usize,
    pub gamma: usize,
    pub gamma_1k: usize,
    pub gamma_1k_next: usize,
}

impl TrivialBounds {
    /// `γ <= γ_{[1,k]} <= n` and `γ_{[1,k+1]} <= γ_{[1,k]}`.
    pub fn holds(&self) -> bool {
        self.gamma <= self.gamma_1k && self.gamma_1k <= self.n && self.gamma_1k_next <= self.gamma_1k
    }
}

pub fn verify_trivial_bounds(g: &Graph, k: usize, method: Method) -> Result<TrivialBounds> {
    let finite = |kind| -> Result<usize> {
        Ok(gamma_exact(g, kind, method)?
            .value()
            .expect("non-total parameters are always finite"))
    };
    Ok(TrivialBounds {
        n: g.order(),
        k,
        gamma: finite(GammaKind::Plain)?,
        gamma_1k: finite(GammaKind::OneK(k))?,
        gamma_1k_next: finite(GammaKind::OneK(k + 1))?,
    })
}

//! Brute-force subset enumeration.
//!
//! Subsets are scanned by increasing cardinality and lexicographically
//! (on sorted member lists) within a cardinality; the first valid set is
//! returned. The witness is therefore canonical, and no valid set smaller
//! than the returned one exists.

use super::{mask_is_valid, DominationResult, GammaKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ORDER: usize = 28;

/// Visits the `r`-subsets of `0..n` in lexicographic order as bitmasks,
/// stopping early when `visit` returns `true`. Returns the mask that
/// stopped the scan.
pub fn scan_combinations(n: usize, r: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    if r > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if visit(mask) {
            return Some(mask);
        }
        // Rightmost position that can still advance.
        let i = (0..r).rev().find(|&i| idx[i] < n - r + i)?;
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn solve(g: &Graph, kind: GammaKind) -> Result<DominationResult> {
    kind.validate()?;
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Guardrail {
            what: "oracle graph order",
            actual: n,
            limit: MAX_ORDER,
        });
    }
    let rows = g.row_masks().expect("order within one word");
    for r in 0..=n {
        if let Some(mask) = scan_combinations(n, r, |d| mask_is_valid(&rows, kind, d)) {
            return Ok(DominationResult::from_witness(Some(VertexSet::from_mask(n, mask))));
        }
    }
    Ok(DominationResult::Infinite)
}

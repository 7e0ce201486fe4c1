//! Closed form and tiling witnesses for paths and cycles.

use super::SolveError;
use crate::burning::BurningSequence;
use crate::generators::indexed_label;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Path,
    Cycle,
}

fn ceil_sqrt(n: usize) -> usize {
    let mut k = (n as f64).sqrt() as usize;
    while k * k < n {
        k += 1;
    }
    while k > 0 && (k - 1) * (k - 1) >= n {
        k -= 1;
    }
    k
}

/// `ceil(sqrt(n))`, the burning number of `P_n` and `C_n`.
pub fn path_cycle_burning_number(n: usize, _kind: LineKind) -> usize {
    ceil_sqrt(n)
}

/// Sequence of length `ceil(sqrt(n))` on the labels of
/// [`generators::path`](crate::generators::path) /
/// [`generators::cycle`](crate::generators::cycle).
///
/// Source `i` covers the block of `2(k - i) + 1` positions around it. The
/// `k^2 - n` surplus positions are absorbed by overlapping consecutive
/// blocks, earliest gap first, keeping consecutive centers at least one apart.
pub fn path_cycle_witness(n: usize, kind: LineKind) -> Result<BurningSequence, SolveError> {
    if n == 0 || (kind == LineKind::Cycle && n < 3) {
        return Err(SolveError::InvalidInput(format!(
            "no simple {kind:?} on {n} vertices"
        )));
    }
    let label = |pos: usize| indexed_label(pos + 1, n);
    if n == 2 {
        return Ok(BurningSequence::new([label(0), label(1)]));
    }
    let k = ceil_sqrt(n);
    let mut excess = k * k - n;
    let mut centers = vec![k - 1];
    for i in 1..k {
        let cap = 2 * (k - i) - 1;
        let overlap = excess.min(cap);
        excess -= overlap;
        let prev = centers[i - 1];
        centers.push(prev + 2 * k - 2 * i - overlap);
    }
    debug_assert_eq!(excess, 0);
    debug_assert_eq!(*centers.last().unwrap(), n - 1);
    Ok(BurningSequence(centers.into_iter().map(label).collect()))
}

//! Brute-force minimum-weight search.
//!
//! Codewords are enumerated projectively: every nonzero codeword has exactly
//! one scalar multiple whose first nonzero message coefficient is 1. When the
//! basis lists rows outside a subcode B before the rows of B, a codeword is
//! outside B exactly when its leading coefficient sits in the first block,
//! so restricting the leading index is enough to enumerate A \ B.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::fmatrix::FMatrix;

/// Outcome of a (possibly truncated) search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Search {
    /// Smallest weight seen, `None` if nothing was enumerated.
    pub best: Option<usize>,
    /// True when every candidate was visited (or weight 1 was hit).
    pub complete: bool,
}

/// Number of projective codewords whose leading index is below `lead_limit`.
pub(crate) fn candidate_count(q: u64, k: usize, lead_limit: usize) -> u128 {
    let q = u128::from(q);
    (0..lead_limit.min(k)).map(|l| q.saturating_pow((k - 1 - l) as u32)).fold(0u128, u128::saturating_add)
}

struct Tables {
    order: usize,
    n: usize,
    // mults[j][v] is v * row j, as packed coefficient vectors
    mults: Vec<Vec<Vec<u16>>>,
    add: Vec<u16>,
    char_two: bool,
}

impl Tables {
    fn new(basis: &FMatrix) -> Tables {
        let f = basis.field();
        let order = f.order() as usize;
        let n = basis.cols();
        let mults = (0..basis.rows())
            .map(|j| {
                f.elements().map(|v| basis.row(j).iter().map(|&x| f.poly_int(f.mul(v, x)) as u16).collect()).collect()
            })
            .collect();
        let char_two = f.p() == 2;
        let add = if char_two {
            Vec::new()
        } else {
            let mut t = vec![0u16; order * order];
            for a in 0..order as u32 {
                for b in 0..order as u32 {
                    t[a as usize * order + b as usize] = f.poly_int_add(a, b) as u16;
                }
            }
            t
        };
        Tables { order, n, mults, add, char_two }
    }

    #[inline]
    fn add_into(&self, dst: &mut [u16], a: &[u16], b: &[u16]) {
        if self.char_two {
            for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
                *d = x ^ y;
            }
        } else {
            for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
                *d = self.add[x as usize * self.order + y as usize];
            }
        }
    }
}

struct Walk<'a> {
    t: &'a Tables,
    rows: std::ops::Range<usize>,
    stack: Vec<Vec<u16>>,
    visited: u64,
    limit: u64,
    best: usize,
    shared_best: Option<&'a AtomicUsize>,
}

impl Walk<'_> {
    // Returns true when the walk should stop.
    fn dfs(&mut self, level: usize) -> bool {
        let row = self.rows.start + level;
        if row == self.rows.end {
            let w = self.stack[level].iter().filter(|&&x| x != 0).count();
            self.visited += 1;
            if w < self.best {
                self.best = w;
                if let Some(s) = self.shared_best {
                    s.fetch_min(w, Ordering::Relaxed);
                }
            }
            let floor = self.shared_best.map_or(self.best, |s| s.load(Ordering::Relaxed));
            return floor <= 1 || self.visited >= self.limit;
        }
        for v in 0..self.t.order {
            let (lo, hi) = self.stack.split_at_mut(level + 1);
            self.t.add_into(&mut hi[0], &lo[level], &self.t.mults[row][v]);
            if self.dfs(level + 1) {
                return true;
            }
        }
        false
    }
}

struct Block {
    base: Vec<u16>,
    rows: std::ops::Range<usize>,
}

fn blocks(t: &Tables, k: usize, lead_limit: usize) -> Vec<Block> {
    let mut out = Vec::new();
    for lead in 0..lead_limit.min(k) {
        let head = &t.mults[lead][1];
        if lead + 1 == k {
            out.push(Block { base: head.clone(), rows: k..k });
            continue;
        }
        for v in 0..t.order {
            let mut base = vec![0u16; t.n];
            t.add_into(&mut base, head, &t.mults[lead + 1][v]);
            out.push(Block { base, rows: lead + 2..k });
        }
    }
    out
}

fn walk_block(t: &Tables, b: &Block, limit: u64, shared: Option<&AtomicUsize>) -> (usize, u64, bool) {
    let depth = b.rows.len();
    let mut stack = vec![vec![0u16; t.n]; depth + 1];
    stack[0].clone_from(&b.base);
    let mut w = Walk { t, rows: b.rows.clone(), stack, visited: 0, limit, best: usize::MAX, shared_best: shared };
    let stopped = w.dfs(0);
    (w.best, w.visited, stopped)
}

/// Minimum weight of the codewords of `basis` with leading index below
/// `lead_limit`, visiting at most `budget` codewords.
pub(crate) fn min_weight(basis: &FMatrix, lead_limit: usize, budget: u64) -> Search {
    let k = basis.rows();
    if k == 0 || lead_limit == 0 {
        return Search { best: None, complete: true };
    }
    let t = Tables::new(basis);
    let bl = blocks(&t, k, lead_limit);
    let total = candidate_count(t.order as u64, k, lead_limit);
    if total <= u128::from(budget) {
        let shared = AtomicUsize::new(usize::MAX);
        bl.par_iter().for_each(|b| {
            if shared.load(Ordering::Relaxed) > 1 {
                walk_block(&t, b, u64::MAX, Some(&shared));
            }
        });
        let best = shared.into_inner();
        return Search { best: (best != usize::MAX).then_some(best), complete: true };
    }
    // Truncated: walk blocks in order until the budget is spent.
    let mut left = budget.max(1);
    let mut best = usize::MAX;
    for b in &bl {
        if left == 0 {
            break;
        }
        let (w, visited, _) = walk_block(&t, b, left, None);
        best = best.min(w);
        left -= visited.min(left);
        if best <= 1 {
            return Search { best: Some(best), complete: true };
        }
    }
    Search { best: (best != usize::MAX).then_some(best), complete: false }
}

/// Smallest `w <= max_w` such that some `w` columns of `h` are dependent.
///
/// Returns `Ok(Some(w))`, `Ok(None)` when every subset up to `max_w` is
/// independent, or `Err(w)` when the budget ran out while checking size `w`
/// (so every smaller subset was independent).
pub(crate) fn first_dependent_columns(h: &FMatrix, max_w: usize, budget: u64) -> Result<Option<usize>, usize> {
    let n = h.cols();
    let mut spent = 0u64;
    for w in 1..=max_w.min(n) {
        if w > h.rows() {
            return Ok(Some(w));
        }
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            spent += 1;
            if spent > budget {
                return Err(w);
            }
            if h.select_columns(&idx).expect("indices in range").rank() < w {
                return Ok(Some(w));
            }
            // next combination
            let mut i = w;
            while i > 0 && idx[i - 1] == n - w + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..w {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

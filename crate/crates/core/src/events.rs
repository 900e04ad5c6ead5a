//! Disjoint range queries that count, for a source stable vertex `v`, every
//! stable vertex `w` whose neighbourhood meets `N(v)`.
//!
//! Points are `p(w) = (l_1(w), u_1(w), ..., l_k(w), u_k(w))` over 1-based clique
//! positions. A vertex `w` meeting `N(v)` is charged to the least `j` such that
//! run `j` of `w` meets `N(v)`, and to the least run `i` of `v` that run `j`
//! meets. For a pair `(i, j)`:
//!
//! * run `j` of `w` meets run `i` of `v` but no earlier run of `v`, split in
//!   three by where its endpoints fall ([`Overlap`]);
//! * every earlier run `j' < j` of `w` lies inside one of the gaps before
//!   `l_1(v)` or between runs `i' < i` of `v`. The gap index is monotone in
//!   `j'`, and each monotone assignment is its own event.
//!
//! All bounds are closed: an open bound `(a; b)` becomes `[a + 1, b - 1]`.

use crate::ordering::IntervalSet;
use crate::range_tree::{RangeBox, NEG_INF, POS_INF};

/// How run `j` of `w` meets run `i = [l_i, u_i]` of `v`, given that it starts
/// after `u_{i-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Overlap {
    /// `u_{i-1} < l_j(w) <= l_i` and `u_i <= u_j(w)`.
    Covers,
    /// `u_{i-1} < l_j(w) <= l_i` and `l_i <= u_j(w) < u_i`.
    EndsInside,
    /// `l_i < l_j(w) <= u_i`.
    StartsInside,
}

/// One disjoint event, as a box over the `2k` point coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventBox {
    /// 1-based run index of the source `v`.
    pub i: usize,
    /// 1-based run index of the counted vertex `w`.
    pub j: usize,
    pub overlap: Overlap,
    /// Gap holding run `j'` of `w`, for `j' = 1..j`; gap 0 precedes `l_1(v)`,
    /// gap `g` lies between runs `g` and `g + 1` of `v`.
    pub gaps: Vec<usize>,
    pub bbox: RangeBox,
}

/// Non-decreasing sequences of length `len` over `0..gaps`, in lexicographic
/// order.
fn monotone_assignments(len: usize, gaps: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, gaps: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for g in from..gaps {
            cur.push(g);
            rec(len, gaps, g, cur, out);
            cur.pop();
        }
    }
    rec(len, gaps, 0, &mut cur, &mut out);
    out
}

/// Closed bounds of gap `g` before run `g + 1` of `v`, or `None` if the gap
/// holds no clique position.
fn gap_bounds(runs: &[(usize, usize)], g: usize) -> Option<(i64, i64)> {
    let hi = runs[g].0 as i64 - 1;
    let lo = if g == 0 { NEG_INF } else { runs[g - 1].1 as i64 + 1 };
    if hi < 1 || lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

/// One event as seen by [`for_each_event`]; the bounds are borrowed from a
/// buffer reused between events.
pub(crate) struct EventRef<'a> {
    pub i: usize,
    pub j: usize,
    pub overlap: Overlap,
    pub gaps: &'a [usize],
    pub lo: &'a [i64],
    pub hi: &'a [i64],
}

/// Calls `f` on every event of a source with runs `ivs_v`, without
/// allocating per event.
pub(crate) fn for_each_event(ivs_v: &IntervalSet, k: usize, k_size: usize, mut f: impl FnMut(EventRef<'_>)) {
    let runs = ivs_v.runs();
    debug_assert!(runs.len() <= k);
    debug_assert!(runs.iter().all(|&(l, u)| 1 <= l && l <= u && u <= k_size));
    let dim = 2 * k;
    let mut lo = vec![NEG_INF; dim];
    let mut hi = vec![POS_INF; dim];
    for i in 1..=runs.len() {
        let (l_i, u_i) = (runs[i - 1].0 as i64, runs[i - 1].1 as i64);
        let u_prev = if i == 1 { 0 } else { runs[i - 2].1 as i64 };
        let mut cases = [(Overlap::Covers, (u_prev + 1, l_i), (u_i, POS_INF)); 3];
        let n_cases = if l_i < u_i {
            cases[1] = (Overlap::EndsInside, (u_prev + 1, l_i), (l_i, u_i - 1));
            cases[2] = (Overlap::StartsInside, (l_i + 1, u_i), (NEG_INF, POS_INF));
            3
        } else {
            1
        };
        let gaps: Vec<Option<(i64, i64)>> = (0..i).map(|g| gap_bounds(runs, g)).collect();
        for j in 1..=k {
            'event: for assign in monotone_assignments(j - 1, i) {
                lo.fill(NEG_INF);
                hi.fill(POS_INF);
                for (jp, &g) in assign.iter().enumerate() {
                    let Some((a, b)) = gaps[g] else { continue 'event };
                    (lo[2 * jp], hi[2 * jp]) = (a, b);
                    (lo[2 * jp + 1], hi[2 * jp + 1]) = (a, b);
                }
                for &(overlap, lo_bound, hi_bound) in &cases[..n_cases] {
                    (lo[2 * j - 2], hi[2 * j - 2]) = lo_bound;
                    (lo[2 * j - 1], hi[2 * j - 1]) = hi_bound;
                    f(EventRef { i, j, overlap, gaps: &assign, lo: &lo, hi: &hi });
                }
            }
        }
    }
}

/// All event boxes for a source with runs `ivs_v`, over points of `k` runs.
///
/// `k_size` is the clique size; it bounds real positions and is only used to
/// sanity-check the runs.
pub fn build_event_boxes(ivs_v: &IntervalSet, k: usize, k_size: usize) -> Vec<EventBox> {
    let mut out = Vec::new();
    for_each_event(ivs_v, k, k_size, |e| {
        let bbox = RangeBox::new(e.lo.to_vec(), e.hi.to_vec()).expect("event bounds are non-empty");
        out.push(EventBox { i: e.i, j: e.j, overlap: e.overlap, gaps: e.gaps.to_vec(), bbox });
    });
    out
}

/// Point of a vertex with the given runs, padded to `k` runs with the
/// sentinel runs `[k_size + 2t, k_size + 2t]`, `t = 1, 2, ...`.
pub fn padded_point(ivs: &IntervalSet, k: usize, k_size: usize) -> Vec<i64> {
    let runs = ivs.runs();
    debug_assert!(runs.len() <= k);
    let mut p = Vec::with_capacity(2 * k);
    for &(l, u) in runs {
        p.push(l as i64);
        p.push(u as i64);
    }
    for t in 1..=k - runs.len() {
        let s = (k_size + 2 * t) as i64;
        p.push(s);
        p.push(s);
    }
    p
}

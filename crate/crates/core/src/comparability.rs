//! Transitive orientation and the prefix/suffix ordering of comparability
//! split graphs.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition};
use crate::ordering::{CliqueOrdering, Side};
use crate::sparse::{DiameterResult, SparseSplitGraph};

/// Transitive orientation by repeated implication-class decomposition.
///
/// Each round takes the smallest remaining edge, grows its implication class
/// inside the remaining edge set, fails if the class meets its own reversal,
/// and removes the class with its reversal. The chosen classes together
/// orient the graph transitively. Returns, for every vertex, the sorted list
/// of out-neighbours. Runs in `O(n m)`.
pub fn transitive_orientation(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut live: HashSet<(usize, usize)> = g.edges().collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut out = vec![Vec::new(); n];
    let mut pending: Vec<(usize, usize)> = g.edges().collect();
    pending.reverse();
    while let Some((a0, b0)) = pending.pop() {
        if !live.contains(&(a0, b0)) {
            continue;
        }
        let mut class: HashSet<(usize, usize)> = HashSet::new();
        let mut stack = vec![(a0, b0)];
        class.insert((a0, b0));
        while let Some((a, b)) = stack.pop() {
            // (a, b) forces (a, c) when bc is missing, and (c, b) when ac is.
            let mut forced = Vec::new();
            for &c in g.neighbours(a) {
                if c != b && live.contains(&key(a, c)) && !live.contains(&key(b, c)) {
                    forced.push((a, c));
                }
            }
            for &c in g.neighbours(b) {
                if c != a && live.contains(&key(b, c)) && !live.contains(&key(a, c)) {
                    forced.push((c, b));
                }
            }
            for arc in forced {
                if class.insert(arc) {
                    stack.push(arc);
                }
            }
        }
        if class.iter().any(|&(a, b)| class.contains(&(b, a))) {
            return Err(Error::NotComparability);
        }
        for &(a, b) in &class {
            live.remove(&key(a, b));
            out[a].push(b);
        }
    }
    for list in &mut out {
        list.sort_unstable();
    }
    Ok(out)
}

/// Linear extension of an acyclic orientation, smallest available vertex
/// first.
fn linear_extension(out: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = out.len();
    let mut indeg = vec![0usize; n];
    for list in out {
        for &b in list {
            indeg[b] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &b in &out[v] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                heap.push(Reverse(b));
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotComparability);
    }
    Ok(order)
}

/// Clique ordering induced by a linear extension of a transitive orientation
/// of `g`. Every stable neighbourhood is a prefix plus a suffix of it.
pub fn comparability_ordering(g: &Graph, p: &SplitPartition) -> Result<CliqueOrdering> {
    p.validate(g)?;
    let out = transitive_orientation(g)?;
    let extension = linear_extension(&out)?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in p.clique.iter().enumerate() {
        index[v] = i;
    }
    let order = extension.into_iter().filter(|&v| index[v] != usize::MAX).map(|v| index[v]).collect();
    CliqueOrdering::new(Side::Clique, order)
}

/// Length of the prefix and of the suffix that make up `N(v)` under `tau`.
fn prefix_suffix(sg: &SparseSplitGraph, tau: &CliqueOrdering, v: usize) -> Option<(usize, usize)> {
    let k = sg.k_size();
    let mut ranks: Vec<usize> = sg.neighbours(v).iter().map(|&u| tau.rank(u)).collect();
    ranks.sort_unstable();
    let prefix = ranks.iter().enumerate().take_while(|&(i, &r)| r == i + 1).count();
    let suffix = ranks.iter().rev().enumerate().take_while(|&(i, &r)| r == k - i).count();
    (prefix + suffix >= ranks.len()).then_some((prefix, ranks.len() - prefix))
}

/// Diameter from a prefix/suffix ordering.
///
/// Neighbourhoods holding the first clique position pairwise meet, as do those
/// holding the last one, so only a prefix-only vertex `x` and a suffix-only
/// vertex `y` can be at distance three, which happens iff the smallest prefix
/// and the smallest suffix do not overlap.
pub fn diameter_comparability(sg: &SparseSplitGraph, tau: &CliqueOrdering) -> Result<DiameterResult> {
    tau.check_clique(sg)?;
    let k = sg.k_size();
    let s = sg.s_size();
    if s == 0 {
        return Ok(DiameterResult::at_most_two(sg.complete_diameter()));
    }
    let mut parts = Vec::with_capacity(s);
    for v in 0..s {
        parts.push(prefix_suffix(sg, tau, v).ok_or(Error::CertificateViolation(v))?);
    }
    let min_prefix = parts.iter().filter(|p| p.1 == 0).map(|p| p.0).min();
    let min_suffix = parts.iter().filter(|p| p.0 == 0).map(|p| p.1).min();
    let (Some(a), Some(c)) = (min_prefix, min_suffix) else {
        return Ok(DiameterResult::at_most_two(2));
    };
    if a + c > k {
        return Ok(DiameterResult::at_most_two(2));
    }
    let witness = parts
        .iter()
        .position(|&(p, q)| (q == 0 && p + c <= k) || (p == 0 && q + a <= k))
        .expect("the minimising vertices are far apart");
    Ok(DiameterResult::three(witness))
}

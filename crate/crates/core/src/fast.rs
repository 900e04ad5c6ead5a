//! Diameter algorithms that exploit a clique-interval structure.

use crate::error::{Error, Result};
use crate::events::{for_each_event, padded_point};
use crate::exec::Exec;
use crate::ordering::{decompose_intervals, CliqueOrdering, IntervalSet};
use crate::range_tree::{PointSet, RangeTree, NEG_INF, POS_INF};
use crate::recognition::recognize_clique_interval;
use crate::sparse::{universal_vertex, DiameterResult, SparseSplitGraph};

/// A vertex of a split graph, by side and index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Clique(usize),
    Stable(usize),
}

/// Diameter of a clique-interval split graph: two exactly when some clique
/// vertex sees the whole stable set.
///
/// The input is assumed clique-interval; on other inputs the value may be
/// wrong. The witness is the smallest stable vertex of eccentricity three,
/// located through the interval representation.
pub fn diameter_clique_interval(sg: &SparseSplitGraph) -> DiameterResult {
    if sg.s_size() == 0 {
        return DiameterResult::at_most_two(sg.complete_diameter());
    }
    if universal_vertex(sg).is_some() {
        return DiameterResult::at_most_two(2);
    }
    let witness = match recognize_clique_interval(sg).ordering {
        Some(tau) => {
            let ends: Vec<(usize, usize)> =
                (0..sg.s_size()).map(|v| decompose_intervals(sg, &tau, v).runs()[0]).collect();
            let min_right = ends.iter().map(|e| e.1).min().unwrap_or(0);
            let max_left = ends.iter().map(|e| e.0).max().unwrap_or(0);
            ends.iter().position(|&(l, u)| min_right < l || max_left > u)
        }
        None => first_disjoint_pair(sg),
    };
    DiameterResult { value: 3, witness }
}

/// Smallest stable vertex whose neighbourhood misses another one entirely.
fn first_disjoint_pair(sg: &SparseSplitGraph) -> Option<usize> {
    let lists = sg.stable_lists();
    let meets = |a: &[usize], b: &[usize]| {
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    };
    (0..lists.len()).find(|&v| lists.iter().any(|w| !meets(&lists[v], w)))
}

/// Closed neighbourhood containment test `N[w] ⊆ N[u]` for every `w` in
/// `N[v]`, then the diameter from whether `u` is universal.
pub fn max_neighbour_shortcut(sg: &SparseSplitGraph, v: Vertex, u: Vertex) -> Result<DiameterResult> {
    let by_clique = sg.clique_neighbours();
    let s = sg.s_size();
    let not_max = || Error::NotMaxNeighbour { v: vertex_label(sg, v), u: vertex_label(sg, u) };
    let Vertex::Clique(uc) = u else {
        // A stable vertex never contains a clique vertex's closed neighbourhood.
        return Err(not_max());
    };
    let mut in_u = vec![false; s];
    for &x in &by_clique[uc] {
        in_u[x] = true;
    }
    let covered = match v {
        // N[v] holds every clique vertex, whose union of neighbourhoods is V.
        Vertex::Clique(_) => by_clique[uc].len() == s,
        Vertex::Stable(vs) => {
            in_u[vs] && sg.neighbours(vs).iter().all(|&w| by_clique[w].iter().all(|&x| in_u[x]))
        }
    };
    if !covered {
        return Err(not_max());
    }
    if s == 0 {
        return Ok(DiameterResult::at_most_two(sg.complete_diameter()));
    }
    if by_clique[uc].len() == s {
        return Ok(DiameterResult::at_most_two(2));
    }
    match v {
        // Anything outside N[u] is at distance three from v.
        Vertex::Stable(vs) => Ok(DiameterResult::three(vs)),
        Vertex::Clique(_) => unreachable!("covered forces u universal"),
    }
}

fn vertex_label(sg: &SparseSplitGraph, v: Vertex) -> usize {
    match v {
        Vertex::Clique(i) => sg.clique_labels().get(i).copied().unwrap_or(i),
        Vertex::Stable(j) => sg.stable_labels().get(j).copied().unwrap_or(j),
    }
}

/// A stable vertex of degree one and its neighbour, smallest index first.
pub fn find_pendant_shortcut(sg: &SparseSplitGraph) -> Option<(usize, usize)> {
    (0..sg.s_size()).find(|&v| sg.neighbours(v).len() == 1).map(|v| (v, sg.neighbours(v)[0]))
}

/// Range-tree diameter for a clique ordering of width `k`.
///
/// One `2k`-dimensional tree over the padded points of all stable vertices is
/// shared by every source. A source `v` has eccentricity at most two iff its
/// event boxes count all of `S`; `v` itself lands in exactly one event.
pub fn diameter_kci_rangetree(sg: &SparseSplitGraph, tau: &CliqueOrdering) -> Result<DiameterResult> {
    diameter_kci_rangetree_with(sg, tau, Exec::default())
}

pub fn diameter_kci_rangetree_with(sg: &SparseSplitGraph, tau: &CliqueOrdering, exec: Exec) -> Result<DiameterResult> {
    tau.check_clique(sg)?;
    let s = sg.s_size();
    match s {
        0 => return Ok(DiameterResult::at_most_two(sg.complete_diameter())),
        1 => return Ok(DiameterResult::at_most_two(2)),
        _ => {}
    }
    let k_size = sg.k_size();
    let runs: Vec<IntervalSet> = exec.map_range(s, |v| decompose_intervals(sg, tau, v));
    let k = runs.iter().map(IntervalSet::len).max().unwrap_or(0);
    let mut points = PointSet::with_capacity(2 * k, s)?;
    for (w, r) in runs.iter().enumerate() {
        points.push(&padded_point(r, k, k_size), w)?;
    }
    // Later runs are padded for most points, so nesting them outermost lets
    // more queries stop early.
    let order: Vec<usize> = (0..2 * k).rev().collect();
    let tree = RangeTree::build_ordered(&points, &order)?;
    // Every source is counted, as in the all-sources bound; the witness is the
    // smallest deficient one.
    let reached = exec.map_range(s, |v| {
        let mut reached = 0;
        let (mut lo, mut hi) = (vec![0; 2 * k], vec![0; 2 * k]);
        for_each_event(&runs[v], k, k_size, |e| {
            tighten_bounds(e.lo, e.hi, &mut lo, &mut hi);
            if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
                reached += tree.count_bounds(&lo, &hi);
            }
        });
        reached
    });
    debug_assert!(reached.iter().all(|&r| r <= s));
    let witness = reached.iter().position(|&r| r < s);
    Ok(match witness {
        Some(v) => DiameterResult::three(v),
        None => DiameterResult::at_most_two(2),
    })
}

/// Copies a box, tightening each bound by the others.
///
/// Point coordinates never decrease, so every point in the box also lies at
/// or above the running maximum of the lower bounds and at or below the
/// running minimum (from the right) of the upper bounds. Narrower ranges
/// cost the tree less.
fn tighten_bounds(lo: &[i64], hi: &[i64], out_lo: &mut [i64], out_hi: &mut [i64]) {
    let d = lo.len();
    let mut max_lo = NEG_INF;
    for t in 0..d {
        max_lo = max_lo.max(lo[t]);
        out_lo[t] = max_lo;
    }
    let mut min_hi = POS_INF;
    for t in (0..d).rev() {
        min_hi = min_hi.min(hi[t]);
        out_hi[t] = min_hi;
    }
}

/// Runs of every clique vertex's stable neighbourhood under `sigma`.
pub fn clique_runs_over_stable(sg: &SparseSplitGraph, sigma: &CliqueOrdering) -> Vec<IntervalSet> {
    sg.clique_neighbours()
        .into_iter()
        .map(|list| IntervalSet::from_positions(list.into_iter().map(|v| sigma.rank(v)).collect()))
        .collect()
}

/// Width of a stable-side ordering: the most runs any clique vertex's stable
/// neighbourhood has, less one (the complement's clique-interval width).
pub fn complement_width(sg: &SparseSplitGraph, sigma: &CliqueOrdering) -> usize {
    clique_runs_over_stable(sg, sigma).iter().map(IntervalSet::len).max().unwrap_or(0).saturating_sub(1)
}

/// Diameter from a stable-side ordering: `w` has eccentricity at most two iff
/// the runs of the clique vertices it sees cover all of `S`.
pub fn diameter_complement_kci(sg: &SparseSplitGraph, sigma: &CliqueOrdering) -> Result<DiameterResult> {
    diameter_complement_kci_with(sg, sigma, Exec::default())
}

pub fn diameter_complement_kci_with(sg: &SparseSplitGraph, sigma: &CliqueOrdering, exec: Exec) -> Result<DiameterResult> {
    sigma.check_stable(sg)?;
    let s = sg.s_size();
    if s == 0 {
        return Ok(DiameterResult::at_most_two(sg.complete_diameter()));
    }
    let runs = clique_runs_over_stable(sg, sigma);
    let far = exec.map_range(s, |w| {
        let mut pairs: Vec<(usize, usize)> =
            sg.neighbours(w).iter().flat_map(|&u| runs[u].runs().iter().copied()).collect();
        pairs.sort_unstable();
        let mut reach = 0;
        for (l, u) in pairs {
            if l > reach + 1 {
                break;
            }
            reach = reach.max(u);
        }
        reach < s
    });
    Ok(match far.iter().position(|&f| f) {
        Some(w) => DiameterResult::three(w),
        None => DiameterResult::at_most_two(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig1, gen_threshold, sparse_of, sun, thin_spider};
    use crate::ordering::Side;
    use crate::sparse::diameter_naive;

    fn identity(n: usize) -> CliqueOrdering {
        CliqueOrdering::identity(Side::Clique, n)
    }

    #[test]
    fn clique_interval_fixtures() {
        assert_eq!(diameter_clique_interval(&thin_spider(3)), DiameterResult::three(0));
        let (g, p) = gen_threshold(3, &[1, 2]).unwrap();
        assert_eq!(diameter_clique_interval(&sparse_of(&g, &p)).value, 2);
        let k3 = SparseSplitGraph::new(3, vec![]).unwrap();
        assert_eq!(diameter_clique_interval(&k3).value, 1);
    }

    #[test]
    fn max_neighbour_fixtures() {
        let pendant = SparseSplitGraph::new(2, vec![vec![0]]).unwrap();
        assert_eq!(
            max_neighbour_shortcut(&pendant, Vertex::Stable(0), Vertex::Clique(0)).unwrap(),
            DiameterResult::at_most_two(2)
        );
        assert_eq!(
            max_neighbour_shortcut(&fig1(), Vertex::Stable(0), Vertex::Clique(1)).unwrap().value,
            2
        );
        assert!(matches!(
            max_neighbour_shortcut(&sun(4), Vertex::Stable(0), Vertex::Clique(0)),
            Err(Error::NotMaxNeighbour { .. })
        ));
        let spider = thin_spider(3);
        assert_eq!(
            max_neighbour_shortcut(&spider, Vertex::Stable(1), Vertex::Clique(1)).unwrap(),
            DiameterResult::three(1)
        );
    }

    #[test]
    fn pendant_search() {
        assert_eq!(find_pendant_shortcut(&thin_spider(3)), Some((0, 0)));
        assert_eq!(find_pendant_shortcut(&sun(4)), None);
        let pendant = SparseSplitGraph::new(2, vec![vec![0]]).unwrap();
        assert_eq!(find_pendant_shortcut(&pendant), Some((0, 0)));
    }

    #[test]
    fn rangetree_fixtures() {
        assert_eq!(diameter_kci_rangetree(&fig1(), &identity(4)).unwrap().value, 2);
        let cyclic = identity(4);
        assert_eq!(diameter_kci_rangetree(&sun(4), &cyclic).unwrap(), DiameterResult::three(0));
        assert_eq!(diameter_kci_rangetree(&thin_spider(3), &identity(3)).unwrap(), DiameterResult::three(0));
        assert!(matches!(
            diameter_kci_rangetree(&fig1(), &identity(3)),
            Err(Error::OrderingMismatch(_))
        ));
    }

    #[test]
    fn complement_fixtures() {
        let stable = |n| CliqueOrdering::identity(Side::Stable, n);
        let sg = SparseSplitGraph::new(3, vec![vec![0, 2], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(diameter_complement_kci(&sg, &stable(3)).unwrap(), diameter_naive(&sg));

        let far = SparseSplitGraph::new(3, vec![vec![0], vec![0, 1], vec![1]]).unwrap();
        assert_eq!(diameter_complement_kci(&far, &stable(3)).unwrap(), DiameterResult::three(0));
        assert_eq!(diameter_naive(&far), DiameterResult::three(0));

        let near = SparseSplitGraph::new(3, vec![vec![0], vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(diameter_complement_kci(&near, &stable(3)).unwrap().value, 2);

        let single = SparseSplitGraph::new(2, vec![vec![0]]).unwrap();
        assert_eq!(diameter_complement_kci(&single, &stable(1)).unwrap().value, 2);
        assert!(diameter_complement_kci(&single, &identity(2)).is_err());
    }
}

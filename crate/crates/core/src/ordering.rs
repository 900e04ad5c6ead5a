//! Orderings of one side of a split graph and the runs they induce.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::sparse::SparseSplitGraph;

/// Which side of the split graph an ordering permutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Clique,
    Stable,
}

/// A total ordering of the clique (or of the stable set).
///
/// `order[p]` is the vertex at position `p` (0-based); `position` is the
/// inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrdering {
    side: Side,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl CliqueOrdering {
    pub fn new(side: Side, order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::OrderingMismatch(format!("{order:?} is not a permutation of 0..{n}")));
            }
            position[v] = p;
        }
        Ok(CliqueOrdering { side, order, position })
    }

    pub fn identity(side: Side, n: usize) -> Self {
        CliqueOrdering { side, order: (0..n).collect(), position: (0..n).collect() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-based position of vertex `v`.
    pub fn rank(&self, v: usize) -> usize {
        self.position[v] + 1
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        CliqueOrdering::new(self.side, order).expect("reversal of a permutation")
    }

    /// Fails unless this orders the clique of `sg`.
    pub fn check_clique(&self, sg: &SparseSplitGraph) -> Result<()> {
        if self.side != Side::Clique || self.len() != sg.k_size() {
            return Err(Error::OrderingMismatch(format!(
                "expected an ordering of the {} clique vertices",
                sg.k_size()
            )));
        }
        Ok(())
    }

    pub fn check_stable(&self, sg: &SparseSplitGraph) -> Result<()> {
        if self.side != Side::Stable || self.len() != sg.s_size() {
            return Err(Error::OrderingMismatch(format!(
                "expected an ordering of the {} stable vertices",
                sg.s_size()
            )));
        }
        Ok(())
    }
}

/// Maximal runs `(l_1, u_1), (l_2, u_2), ...` of 1-based positions with
/// `u_i + 1 < l_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    runs: Vec<(usize, usize)>,
}

impl IntervalSet {
    /// Run decomposition of a set of distinct positions in any order.
    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        Self::from_sorted(&positions)
    }

    pub fn from_sorted(positions: &[usize]) -> Self {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &p in positions {
            match runs.last_mut() {
                Some(last) if last.1 + 1 == p => last.1 = p,
                _ => runs.push((p, p)),
            }
        }
        IntervalSet { runs }
    }

    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.runs.iter().any(|&(l, u)| l <= p && p <= u)
    }
}

/// Runs of `N(v)` under `tau`.
pub fn decompose_intervals(sg: &SparseSplitGraph, tau: &CliqueOrdering, v: usize) -> IntervalSet {
    debug_assert_eq!(tau.side(), Side::Clique);
    IntervalSet::from_positions(sg.neighbours(v).iter().map(|&u| tau.rank(u)).collect())
}

/// Number of runs of a sorted set of positions.
fn run_count(positions: &mut [usize]) -> usize {
    positions.sort_unstable();
    let mut runs = 0;
    let mut prev = None;
    for &p in positions.iter() {
        if prev.is_none_or(|q| q + 1 != p) {
            runs += 1;
        }
        prev = Some(p);
    }
    runs
}

/// Largest number of runs any stable neighbourhood has under `tau`; zero when
/// the stable set is empty.
pub fn width_under(sg: &SparseSplitGraph, tau: &CliqueOrdering) -> usize {
    let mut buf = Vec::new();
    sg.stable_lists()
        .iter()
        .map(|list| {
            buf.clear();
            buf.extend(list.iter().map(|&u| tau.rank(u)));
            run_count(&mut buf)
        })
        .max()
        .unwrap_or(0)
}

/// Largest clique for which [`clique_interval_number_exact`] searches.
pub const EXACT_LIMIT: usize = 10;

/// Branch-and-bound search over clique orderings, one branch per first vertex.
struct ExactSearch<'a> {
    members: &'a [Vec<usize>],
    k: usize,
}

struct Branch {
    prefix: Vec<usize>,
    used: Vec<bool>,
    runs: Vec<usize>,
    best: usize,
    best_order: Option<Vec<usize>>,
}

impl ExactSearch<'_> {
    /// Places `u` after the current prefix; returns the stable vertices whose
    /// run count grew.
    fn place(&self, b: &mut Branch, u: usize, touched: &mut Vec<usize>) -> usize {
        let prev = b.prefix.last().copied();
        let mut worst = 0;
        for &v in &self.members[u] {
            let continues = prev.is_some_and(|p| self.members[p].binary_search(&v).is_ok());
            if !continues {
                b.runs[v] += 1;
                touched.push(v);
            }
            worst = worst.max(b.runs[v]);
        }
        b.prefix.push(u);
        b.used[u] = true;
        worst
    }

    fn unplace(&self, b: &mut Branch, touched: &[usize]) {
        let u = b.prefix.pop().expect("non-empty prefix");
        b.used[u] = false;
        for &v in touched {
            b.runs[v] -= 1;
        }
    }

    fn dfs(&self, b: &mut Branch, current: usize) {
        if b.prefix.len() == self.k {
            // Reversal preserves run counts, keep the representative with first < last.
            if self.k > 1 && b.prefix[0] > b.prefix[self.k - 1] {
                return;
            }
            if current < b.best || b.best_order.is_none() {
                b.best = current;
                b.best_order = Some(b.prefix.clone());
            }
            return;
        }
        for u in 0..self.k {
            if b.used[u] {
                continue;
            }
            let mut touched = Vec::new();
            let worst = self.place(b, u, &mut touched).max(current);
            let viable = if b.best_order.is_some() { worst < b.best } else { worst <= b.best };
            if viable {
                self.dfs(b, worst);
            }
            self.unplace(b, &touched);
        }
    }
}

/// Exact clique-interval number by exhaustive search, with the
/// lexicographically smallest optimal ordering among those whose first vertex
/// precedes the last.
pub fn clique_interval_number_exact(sg: &SparseSplitGraph) -> Result<(usize, CliqueOrdering)> {
    clique_interval_number_exact_with(sg, Exec::default())
}

pub fn clique_interval_number_exact_with(sg: &SparseSplitGraph, exec: Exec) -> Result<(usize, CliqueOrdering)> {
    let k = sg.k_size();
    if k > EXACT_LIMIT {
        return Err(Error::TooLarge { what: "clique size", size: k, limit: EXACT_LIMIT });
    }
    if sg.s_size() == 0 || k == 1 {
        return Ok((if sg.s_size() == 0 { 0 } else { 1 }, CliqueOrdering::identity(Side::Clique, k)));
    }
    let members = sg.clique_neighbours();
    let search = ExactSearch { members: &members, k };
    // Every ordering has width at most ceil(k / 2).
    let bound = k.div_ceil(2);
    let branches = exec.map_range(k, |first| {
        let mut b = Branch {
            prefix: Vec::with_capacity(k),
            used: vec![false; k],
            runs: vec![0; sg.s_size()],
            best: bound,
            best_order: None,
        };
        let mut touched = Vec::new();
        let worst = search.place(&mut b, first, &mut touched);
        search.dfs(&mut b, worst);
        b.best_order.map(|o| (b.best, o))
    });
    let (width, order) = branches
        .into_iter()
        .flatten()
        .min()
        .expect("some ordering meets the ceil(k/2) bound");
    Ok((width, CliqueOrdering::new(Side::Clique, order)?))
}

/// For a threshold graph, the ordering that lists `N(v_1)`, `N(v_2) \ N(v_1)`,
/// ..., `K \ N(v_p)` as consecutive blocks, where `N(v_1) ⊆ ... ⊆ N(v_p)`.
pub fn threshold_ordering(sg: &SparseSplitGraph) -> Result<CliqueOrdering> {
    let k = sg.k_size();
    let mut chain: Vec<usize> = (0..sg.s_size()).collect();
    chain.sort_by_key(|&v| (sg.neighbours(v).len(), v));
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    if chain.windows(2).any(|w| !is_subset(sg.neighbours(w[0]), sg.neighbours(w[1]))) {
        return Err(Error::NotThreshold);
    }
    // Clique-side neighbourhoods within S must be nested as well.
    let mut by_clique = sg.clique_neighbours();
    by_clique.sort_by_key(Vec::len);
    if by_clique.windows(2).any(|w| !is_subset(&w[0], &w[1])) {
        return Err(Error::NotThreshold);
    }
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for &v in &chain {
        for &u in sg.neighbours(v) {
            if !placed[u] {
                placed[u] = true;
                order.push(u);
            }
        }
    }
    order.extend((0..k).filter(|&u| !placed[u]));
    CliqueOrdering::new(Side::Clique, order)
}

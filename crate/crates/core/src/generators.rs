//! Graph families, seeded random instances with planted orderings, and the two
//! reductions (diameter-two to split graphs, and the minimum-degree-two gadget).
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)` so instances are
//! reproducible bit for bit.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition};
use crate::ordering::{CliqueOrdering, Side};
use crate::sparse::{sparse_representation, SparseSplitGraph};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds `(Graph, SplitPartition)` from a clique size and stable lists, with
/// clique vertex `i` as vertex `i` and stable vertex `j` as `k_size + j`.
fn assemble(k_size: usize, lists: &[Vec<usize>]) -> Result<(Graph, SplitPartition)> {
    let mut edges = Vec::new();
    for a in 0..k_size {
        for b in a + 1..k_size {
            edges.push((a, b));
        }
    }
    for (j, list) in lists.iter().enumerate() {
        edges.extend(list.iter().map(|&u| (u, k_size + j)));
    }
    let g = Graph::from_edges(k_size + lists.len(), &edges)?;
    let p = SplitPartition { clique: (0..k_size).collect(), stable: (k_size..k_size + lists.len()).collect() };
    p.validate(&g)?;
    Ok((g, p))
}

pub fn sparse_of(g: &Graph, p: &SplitPartition) -> SparseSplitGraph {
    sparse_representation(g, p).expect("generated partitions are valid")
}

/// The n-sun: clique `u_0..u_{n-1}`, stable `v_i` adjacent to `u_i, u_{i+1 mod n}`.
pub fn gen_sun(n: usize) -> Result<(Graph, SplitPartition)> {
    if n < 3 {
        return Err(Error::InfeasibleParameters(format!("a sun needs n >= 3, got {n}")));
    }
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut l = vec![i, (i + 1) % n];
            l.sort_unstable();
            l
        })
        .collect();
    assemble(n, &lists)
}

/// Thin spider: clique `u_0..u_{n-1}` matched to stable `v_i`.
pub fn gen_thin_spider(n: usize) -> Result<(Graph, SplitPartition)> {
    if n < 2 {
        return Err(Error::InfeasibleParameters(format!("a thin spider needs n >= 2, got {n}")));
    }
    let lists: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    assemble(n, &lists)
}

/// Threshold graph whose stable vertex `i` sees the first `chain[i]` clique
/// vertices. The chain must be non-decreasing, positive and below `k_size`.
pub fn gen_threshold(k_size: usize, chain: &[usize]) -> Result<(Graph, SplitPartition)> {
    if chain.windows(2).any(|w| w[0] > w[1]) || chain.iter().any(|&d| d == 0 || d >= k_size) {
        return Err(Error::InfeasibleParameters(format!(
            "degree chain {chain:?} must be non-decreasing within 1..{k_size}"
        )));
    }
    let lists: Vec<Vec<usize>> = chain.iter().map(|&d| (0..d).collect()).collect();
    assemble(k_size, &lists)
}

/// The interval split graph on `K = {1,2,3,4}` with `N(a) = {1,2}`,
/// `N(b) = {1,2,3}`, `N(c) = {2,3,4}`, `N(d) = {2,4}` (0-based here).
pub fn gen_fig1() -> (Graph, SplitPartition) {
    assemble(4, &[vec![0, 1], vec![0, 1, 2], vec![1, 2, 3], vec![1, 3]]).expect("fixed fixture")
}

pub fn fig1() -> SparseSplitGraph {
    let (g, p) = gen_fig1();
    sparse_of(&g, &p)
}

pub fn sun(n: usize) -> SparseSplitGraph {
    let (g, p) = gen_sun(n).expect("n >= 3");
    sparse_of(&g, &p)
}

pub fn thin_spider(n: usize) -> SparseSplitGraph {
    let (g, p) = gen_thin_spider(n).expect("n >= 2");
    sparse_of(&g, &p)
}

/// Parameters of [`gen_random_kci_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KciParams {
    pub k_size: usize,
    pub s_size: usize,
    /// Maximum number of runs per stable vertex.
    pub k: usize,
    /// Longest run length; `None` lets a run fill whatever room is left.
    pub max_run: Option<usize>,
    pub seed: u64,
}

/// Writes `r` runs with lengths `lens` into a row of `len` slots, spreading the
/// free slots uniformly over the `r + 1` gaps (stars and bars) with at least
/// one free slot between consecutive runs.
fn place_runs(rng: &mut Rng64, len: usize, lens: &[usize]) -> Vec<usize> {
    let r = lens.len();
    let used: usize = lens.iter().sum::<usize>() + r - 1;
    let slack = len - used;
    // Choose r bar positions among slack + r slots; gaps are the star counts.
    let mut bars: Vec<usize> = sample(rng, slack + r, r).into_vec();
    bars.sort_unstable();
    let mut out = Vec::new();
    let mut cursor = 0;
    let mut stars_before = 0;
    for (q, (&bar, &l)) in bars.iter().zip(lens).enumerate() {
        let stars = bar - q - stars_before;
        stars_before += stars;
        cursor += stars;
        out.extend(cursor..cursor + l);
        cursor += l + 1;
    }
    out
}

/// Random runs for one row: `1..=k` runs whose total footprint fits `len`,
/// never covering the whole row.
fn random_row(rng: &mut Rng64, len: usize, k: usize, max_run: Option<usize>) -> Vec<usize> {
    let r_max = k.min(len.div_ceil(2));
    let r = rng.gen_range(1..=r_max);
    let cap = max_run.unwrap_or(len).max(1);
    let mut lens = vec![1; r];
    // Room available for lengths beyond 1, keeping one gap between runs.
    let mut room = len - (2 * r - 1);
    for l in lens.iter_mut() {
        let extra_cap = (cap - 1).min(room);
        let extra = rng.gen_range(0..=extra_cap);
        *l += extra;
        room -= extra;
    }
    if r == 1 && lens[0] == len {
        lens[0] -= 1;
    }
    place_runs(rng, len, &lens)
}

/// Random split graph whose identity clique ordering has width at most `k`.
pub fn gen_random_kci(k_size: usize, s_size: usize, k: usize, seed: u64) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    gen_random_kci_with(KciParams { k_size, s_size, k, max_run: None, seed })
}

pub fn gen_random_kci_with(params: KciParams) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    let KciParams { k_size, s_size, k, max_run, seed } = params;
    if k_size < 2 && s_size > 0 {
        return Err(Error::InfeasibleParameters("stable vertices need a clique of size >= 2".into()));
    }
    if k == 0 || k > k_size.div_ceil(2).max(1) {
        return Err(Error::InfeasibleParameters(format!("k = {k} outside 1..=ceil({k_size}/2)")));
    }
    if max_run == Some(0) {
        return Err(Error::InfeasibleParameters("max_run must be positive".into()));
    }
    let mut rng = rng(seed);
    let lists = (0..s_size).map(|_| random_row(&mut rng, k_size, k, max_run)).collect();
    let sg = SparseSplitGraph::new(k_size.max(1), lists)?;
    Ok((sg, CliqueOrdering::identity(Side::Clique, k_size.max(1))))
}

/// Random split graph with a planted stable-side ordering (the identity)
/// under which every clique vertex's stable neighbourhood has at most
/// `k + 1` runs.
///
/// Stable vertices left without a neighbour get one random clique vertex, and
/// a stable vertex seeing the whole clique loses its last one; both repairs
/// can add a run, so callers measure the width rather than trust `k`.
pub fn gen_random_complement_kci_with(params: KciParams) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    let KciParams { k_size, s_size, k, max_run, seed } = params;
    if k_size < 2 || s_size == 0 {
        return Err(Error::InfeasibleParameters("need k_size >= 2 and s_size >= 1".into()));
    }
    if k == 0 {
        return Err(Error::InfeasibleParameters("k must be positive".into()));
    }
    let mut rng = rng(seed);
    let mut lists = vec![Vec::new(); s_size];
    for u in 0..k_size {
        let row = if s_size == 1 {
            if rng.gen_bool(0.5) { vec![0] } else { vec![] }
        } else {
            random_row(&mut rng, s_size, k + 1, max_run)
        };
        for v in row {
            lists[v].push(u);
        }
    }
    for list in lists.iter_mut() {
        if list.is_empty() {
            list.push(rng.gen_range(0..k_size));
        }
        if list.len() == k_size {
            list.pop();
        }
    }
    let sg = SparseSplitGraph::new(k_size, lists)?;
    Ok((sg, CliqueOrdering::identity(Side::Stable, s_size)))
}

/// Stable-side planted instance with exact shape: every clique vertex sees
/// `degree` stable vertices forming exactly `runs` runs under the identity
/// ordering of `S`. Fixing `degree` fixes `m` while `runs` varies.
///
/// Stable vertices left without a neighbour are attached to a random clique
/// vertex, so a few rows can end up one longer.
pub fn gen_planted_complement(
    k_size: usize,
    s_size: usize,
    runs: usize,
    degree: usize,
    seed: u64,
) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    if k_size < 2 || runs == 0 || degree < runs || degree + runs - 1 > s_size || degree == s_size {
        return Err(Error::InfeasibleParameters(format!(
            "{runs} runs of total length {degree} over {s_size} stable vertices with a clique of {k_size}"
        )));
    }
    let mut rng = rng(seed);
    let mut lists = vec![Vec::new(); s_size];
    for u in 0..k_size {
        // Random composition of `degree` into `runs` positive parts.
        let mut cuts: Vec<usize> = sample(&mut rng, degree - 1, runs - 1).into_iter().map(|c| c + 1).collect();
        cuts.sort_unstable();
        cuts.push(degree);
        let mut prev = 0;
        let lens: Vec<usize> = cuts.iter().map(|&c| std::mem::replace(&mut prev, c)).zip(&cuts).map(|(a, &b)| b - a).collect();
        for v in place_runs(&mut rng, s_size, &lens) {
            lists[v].push(u);
        }
    }
    for list in lists.iter_mut() {
        if list.is_empty() {
            list.push(rng.gen_range(0..k_size));
        }
        if list.len() == k_size {
            list.pop();
        }
    }
    let sg = SparseSplitGraph::new(k_size, lists)?;
    Ok((sg, CliqueOrdering::identity(Side::Stable, s_size)))
}

/// Uniformly random split graph: each stable vertex picks a random proper
/// non-empty subset of the clique.
pub fn gen_random_split(rng: &mut Rng64, k_size: usize, s_size: usize) -> SparseSplitGraph {
    assert!(k_size >= 2 || s_size == 0);
    let lists = (0..s_size)
        .map(|_| loop {
            let list: Vec<usize> = (0..k_size).filter(|_| rng.gen_bool(0.5)).collect();
            if !list.is_empty() && list.len() < k_size {
                break list;
            }
        })
        .collect();
    SparseSplitGraph::new(k_size, lists).expect("proper non-empty subsets")
}

/// Split graph on `2n` vertices with clique `V'` and stable `V`, where `v`
/// sees the copies of its closed neighbourhood; it has diameter at most two
/// exactly when `g` does.
///
/// A vertex of `g` adjacent to everything would see all of `V'`; the first
/// such vertex is moved into the clique so that `V'` plus it is maximal.
pub fn reduce_diam2(g: &Graph) -> Result<SparseSplitGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let closed = |v: usize| {
        let mut l = g.neighbours(v).to_vec();
        l.push(v);
        l.sort_unstable();
        l
    };
    let promoted = (0..n).find(|&v| g.degree(v) == n - 1);
    let mut clique_labels: Vec<usize> = (n..2 * n).collect();
    let mut stable = Vec::new();
    let mut stable_labels = Vec::new();
    for v in 0..n {
        if Some(v) == promoted {
            continue;
        }
        stable.push(closed(v));
        stable_labels.push(v);
    }
    if let Some(v) = promoted {
        clique_labels.push(v);
    }
    SparseSplitGraph::with_labels(clique_labels.len(), stable, clique_labels, stable_labels)
}

/// Adds clique vertices `a`, `b` and a stable vertex `v_0`: `a` sees `A`, `b`
/// sees `B`, both see `K` and `v_0`, and `ab` is an edge.
///
/// When every diametral pair of the input crosses `A x B` the diameter-two
/// question is unchanged; that promise is the caller's to keep.
pub fn gadget_min_degree_two(sg: &SparseSplitGraph, a_side: &[usize], b_side: &[usize]) -> Result<SparseSplitGraph> {
    let s = sg.s_size();
    let mut owner = vec![None; s];
    for (side, tag) in [(a_side, 0usize), (b_side, 1)] {
        for &v in side {
            if v >= s {
                return Err(Error::BadPartition(format!("stable index {v} out of range")));
            }
            if owner[v].is_some() {
                return Err(Error::BadPartition(format!("stable vertex {v} listed twice")));
            }
            owner[v] = Some(tag);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(Error::BadPartition(format!("stable vertex {v} in neither side")));
    }
    let k = sg.k_size();
    let (a, b) = (k, k + 1);
    let mut stable: Vec<Vec<usize>> = sg
        .stable_lists()
        .iter()
        .zip(&owner)
        .map(|(list, side)| {
            let mut l = list.clone();
            l.push(if *side == Some(0) { a } else { b });
            l
        })
        .collect();
    stable.push(vec![a, b]);
    let n = sg.n();
    let mut clique_labels = sg.clique_labels().to_vec();
    clique_labels.extend([n, n + 1]);
    let mut stable_labels = sg.stable_labels().to_vec();
    stable_labels.push(n + 2);
    SparseSplitGraph::with_labels(k + 2, stable, clique_labels, stable_labels)
}

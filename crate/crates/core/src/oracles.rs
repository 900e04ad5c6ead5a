//! Exhaustive set-system invariants and bounded sun search, used to check
//! structural bounds on small instances.

use crate::error::{Error, Result};
use crate::fast::Vertex;
use crate::sparse::SparseSplitGraph;

pub const VC_LIMIT: usize = 20;
pub const STABBING_LIMIT: usize = 10;
pub const SUN_CLIQUE_LIMIT: usize = 12;
pub const SUN_SIZE_LIMIT: usize = 6;

/// A family of subsets of `0..ground_size`, without repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Sorts every set and drops repeated sets, keeping first occurrences.
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(sets.len());
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            if let Some(&x) = set.last().filter(|&&x| x >= ground_size) {
                return Err(Error::InvalidSetSystem(format!("element {x} outside 0..{ground_size}")));
            }
            if seen.insert(set.clone()) {
                out.push(set);
            }
        }
        Ok(SetSystem { ground_size, sets: out })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    fn masks(&self) -> Vec<u32> {
        self.sets.iter().map(|s| s.iter().fold(0u32, |m, &x| m | 1 << x)).collect()
    }
}

/// Stable neighbourhoods as subsets of the clique.
pub fn neighbourhood_system(sg: &SparseSplitGraph) -> SetSystem {
    SetSystem::new(sg.k_size(), sg.stable_lists().to_vec()).expect("lists lie inside the clique")
}

/// Largest shattered subset of the ground set. The empty family has
/// dimension zero.
pub fn vc_dimension(ss: &SetSystem) -> Result<usize> {
    let n = ss.ground_size;
    if n > VC_LIMIT {
        return Err(Error::TooLarge { what: "ground set", size: n, limit: VC_LIMIT });
    }
    let masks = ss.masks();
    if masks.is_empty() {
        return Ok(0);
    }
    let mut traces = vec![0u64; 1];
    let shattered = |y: u32, traces: &mut Vec<u64>| {
        let d = y.count_ones();
        let words = (1usize << d).div_ceil(64);
        traces.clear();
        traces.resize(words, 0);
        let mut distinct = 0;
        for &r in &masks {
            let t = compress(r & y, y) as usize;
            let bit = 1u64 << (t % 64);
            if traces[t / 64] & bit == 0 {
                traces[t / 64] |= bit;
                distinct += 1;
            }
        }
        distinct == 1usize << d
    };
    // Shattering is hereditary, so sizes are tried upwards until one fails.
    let mut best = 0;
    for d in 1..=n {
        if 1usize << d > masks.len() {
            break;
        }
        if !subsets_of_size(n, d).any(|y| shattered(y, &mut traces)) {
            break;
        }
        best = d;
    }
    Ok(best)
}

/// Bits of `x` selected by `mask`, packed to the low end.
fn compress(x: u32, mask: u32) -> u32 {
    let (mut out, mut bit, mut m) = (0, 0, mask);
    while m != 0 {
        let low = m & m.wrapping_neg();
        if x & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        m ^= low;
    }
    out
}

/// All `d`-subsets of `0..n` as bitmasks, in increasing order.
fn subsets_of_size(n: usize, d: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut cur = (1u64 << d) - 1;
    std::iter::from_fn(move || {
        if cur >= limit {
            return None;
        }
        let out = cur as u32;
        // Gosper's hack.
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(out)
    })
}

/// Minimum over orderings of the ground set of the largest number of
/// consecutive pairs one set separates.
pub fn stabbing_number(ss: &SetSystem) -> Result<usize> {
    let n = ss.ground_size;
    if n > STABBING_LIMIT {
        return Err(Error::TooLarge { what: "ground set", size: n, limit: STABBING_LIMIT });
    }
    if n <= 1 || ss.sets.is_empty() {
        return Ok(0);
    }
    let masks = ss.masks();
    let mut search = Stabbing { n, masks: &masks, best: usize::MAX, path: Vec::with_capacity(n), counts: vec![0; masks.len()] };
    search.extend(0, 0);
    Ok(search.best)
}

struct Stabbing<'a> {
    n: usize,
    masks: &'a [u32],
    best: usize,
    path: Vec<usize>,
    counts: Vec<usize>,
}

impl Stabbing<'_> {
    fn extend(&mut self, used: u32, worst: usize) {
        if worst >= self.best {
            return;
        }
        if self.path.len() == self.n {
            // Each path and its reversal are both reached; keep one.
            if self.path[0] < self.path[self.n - 1] {
                self.best = worst;
            }
            return;
        }
        for x in 0..self.n {
            if used & 1 << x != 0 {
                continue;
            }
            let mut new_worst = worst;
            if let Some(&y) = self.path.last() {
                for (r, &m) in self.masks.iter().enumerate() {
                    if (m >> x & 1) != (m >> y & 1) {
                        self.counts[r] += 1;
                        new_worst = new_worst.max(self.counts[r]);
                    }
                }
            }
            self.path.push(x);
            self.extend(used | 1 << x, new_worst);
            self.path.pop();
            if let Some(&y) = self.path.last() {
                for (r, &m) in self.masks.iter().enumerate() {
                    if (m >> x & 1) != (m >> y & 1) {
                        self.counts[r] -= 1;
                    }
                }
            }
        }
    }
}

/// The dual family: one set per ground element, listing the sets holding it.
pub fn dual(ss: &SetSystem) -> SetSystem {
    let mut by_element = vec![Vec::new(); ss.ground_size];
    for (i, set) in ss.sets.iter().enumerate() {
        for &x in set {
            by_element[x].push(i);
        }
    }
    SetSystem::new(ss.sets.len(), by_element).expect("indices lie inside the family")
}

/// An induced sun: `stable[i]` sees exactly `clique[i]` and
/// `clique[(i + 1) % n]` among the clique vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunEmbedding {
    pub clique: Vec<Vertex>,
    pub stable: Vec<Vertex>,
}

/// Searches for an induced `n`-sun, `3 <= n <= max_n`, smallest `n` first.
///
/// The sun's clique may use one stable vertex of the graph and its stable
/// side may use a clique vertex, so the search runs on the whole graph.
pub fn find_induced_sun(sg: &SparseSplitGraph, max_n: usize) -> Result<Option<SunEmbedding>> {
    if sg.k_size() > SUN_CLIQUE_LIMIT {
        return Err(Error::TooLarge { what: "clique", size: sg.k_size(), limit: SUN_CLIQUE_LIMIT });
    }
    if max_n > SUN_SIZE_LIMIT {
        return Err(Error::TooLarge { what: "sun size", size: max_n, limit: SUN_SIZE_LIMIT });
    }
    let k = sg.k_size();
    let total = sg.n();
    let mut adj = vec![vec![false; total]; total];
    for (a, row) in adj.iter_mut().enumerate().take(k) {
        for (b, cell) in row.iter_mut().enumerate().take(k) {
            *cell = a != b;
        }
    }
    for (v, list) in sg.stable_lists().iter().enumerate() {
        for &u in list {
            adj[u][k + v] = true;
            adj[k + v][u] = true;
        }
    }
    let as_vertex = |x: usize| if x < k { Vertex::Clique(x) } else { Vertex::Stable(x - k) };
    let mut search = SunSearch { adj: &adj, cycle: Vec::new(), stable: Vec::new() };
    for n in 3..=max_n {
        if search.cycles(n) {
            return Ok(Some(SunEmbedding {
                clique: search.cycle.iter().map(|&x| as_vertex(x)).collect(),
                stable: search.stable.iter().map(|&x| as_vertex(x)).collect(),
            }));
        }
    }
    Ok(None)
}

struct SunSearch<'a> {
    adj: &'a [Vec<bool>],
    cycle: Vec<usize>,
    stable: Vec<usize>,
}

impl SunSearch<'_> {
    /// Cliques `u_0 < u_1, ..., u_{n-1}` in cyclic order, then their stable part.
    fn cycles(&mut self, n: usize) -> bool {
        let total = self.adj.len();
        for u0 in 0..total {
            self.cycle.clear();
            self.cycle.push(u0);
            if self.grow(n) {
                return true;
            }
        }
        false
    }

    fn grow(&mut self, n: usize) -> bool {
        if self.cycle.len() == n {
            self.stable.clear();
            return self.attach(n);
        }
        let u0 = self.cycle[0];
        for x in u0 + 1..self.adj.len() {
            if self.cycle.contains(&x) || !self.cycle.iter().all(|&c| self.adj[c][x]) {
                continue;
            }
            self.cycle.push(x);
            if self.grow(n) {
                return true;
            }
            self.cycle.pop();
        }
        false
    }

    /// Picks `v_i` seeing exactly `u_i, u_{i+1}` on the cycle, pairwise
    /// non-adjacent.
    fn attach(&mut self, n: usize) -> bool {
        let i = self.stable.len();
        if i == n {
            return true;
        }
        let (a, b) = (self.cycle[i], self.cycle[(i + 1) % n]);
        for x in 0..self.adj.len() {
            if self.cycle.contains(&x) || self.stable.iter().any(|&s| s == x || self.adj[s][x]) {
                continue;
            }
            let exact = self.cycle.iter().all(|&c| self.adj[c][x] == (c == a || c == b));
            if !exact {
                continue;
            }
            self.stable.push(x);
            if self.attach(n) {
                return true;
            }
            self.stable.pop();
        }
        false
    }
}

//! Simple undirected graphs and split partitions.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n` stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Exact diameter by BFS from every vertex, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

/// A bipartition of the vertices into a maximal clique and a stable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub stable: Vec<usize>,
}

impl SplitPartition {
    /// Checks every partition invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        let n = g.n();
        let mut side = vec![None; n];
        for (list, tag) in [(&self.clique, true), (&self.stable, false)] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return bad("vertex lists must be sorted and duplicate-free".into());
            }
            for &v in list {
                if v >= n {
                    return bad(format!("vertex {v} out of range"));
                }
                if side[v].is_some() {
                    return bad(format!("vertex {v} on both sides"));
                }
                side[v] = Some(tag);
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return bad(format!("vertex {v} missing from the partition"));
        }
        let k = self.clique.len();
        for &u in &self.clique {
            let inside = g.neighbours(u).iter().filter(|&&w| side[w] == Some(true)).count();
            if inside != k - 1 {
                return bad(format!("clique vertex {u} misses part of the clique"));
            }
        }
        for &v in &self.stable {
            if g.neighbours(v).iter().any(|&w| side[w] == Some(false)) {
                return bad(format!("stable vertex {v} has a stable neighbour"));
            }
            if g.degree(v) == k {
                return bad(format!("clique is not maximal: {v} sees all of it"));
            }
        }
        Ok(())
    }
}

/// Splits a connected graph into a maximal clique and a stable set using the
/// degree-sequence test.
///
/// Vertices are ranked by decreasing degree, ties by increasing id; the clique
/// is the longest prefix `d_i >= i - 1` of that ranking, then grown by the
/// smallest-id stable vertex that sees all of it (at most one can).
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut rank: Vec<usize> = (0..n).collect();
    rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = rank.iter().map(|&v| g.degree(v)).collect();
    let m_split = (0..n).take_while(|&i| deg[i] >= i).count();
    let head: usize = deg[..m_split].iter().sum();
    let tail: usize = deg[m_split..].iter().sum();
    if head != m_split * (m_split - 1) + tail {
        return Err(Error::NotSplit);
    }
    let mut in_clique = vec![false; n];
    for &v in &rank[..m_split] {
        in_clique[v] = true;
    }
    if let Some(v) = (0..n).find(|&v| !in_clique[v] && g.degree(v) == m_split) {
        in_clique[v] = true;
    }
    let (clique, stable): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| in_clique[v]);
    let p = SplitPartition { clique, stable };
    p.validate(g).map_err(|_| Error::NotSplit)?;
    Ok(p)
}

//! The sparse representation of a split graph: the clique size plus one sorted
//! clique-neighbour list per stable vertex.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{Graph, SplitPartition};

/// A split graph stored as `(K, {N(v) : v in S})`.
///
/// Clique vertices are indices `0..k_size`, stable vertices indices
/// `0..stable.len()`. `clique_labels` and `stable_labels` map both back to the
/// vertex ids of the graph the representation was taken from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSplitGraph {
    k_size: usize,
    stable: Vec<Vec<usize>>,
    clique_labels: Vec<usize>,
    stable_labels: Vec<usize>,
}

/// Diameter of a split graph, with a stable vertex of eccentricity three when
/// the diameter is three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiameterResult {
    pub value: u8,
    pub witness: Option<usize>,
}

impl DiameterResult {
    pub const fn at_most_two(value: u8) -> Self {
        DiameterResult { value, witness: None }
    }

    pub const fn three(witness: usize) -> Self {
        DiameterResult { value: 3, witness: Some(witness) }
    }
}

impl SparseSplitGraph {
    /// Builds and validates a sparse split graph with default labels: clique
    /// index `i` is vertex `i`, stable index `j` is vertex `k_size + j`.
    pub fn new(k_size: usize, stable: Vec<Vec<usize>>) -> Result<Self> {
        let clique_labels = (0..k_size).collect();
        let stable_labels = (k_size..k_size + stable.len()).collect();
        Self::with_labels(k_size, stable, clique_labels, stable_labels)
    }

    pub fn with_labels(
        k_size: usize,
        stable: Vec<Vec<usize>>,
        clique_labels: Vec<usize>,
        stable_labels: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSparse(msg));
        if k_size == 0 {
            return bad("the clique must be non-empty".into());
        }
        if clique_labels.len() != k_size || stable_labels.len() != stable.len() {
            return bad("label maps do not match the vertex counts".into());
        }
        for (j, list) in stable.iter().enumerate() {
            if list.is_empty() {
                return bad(format!("stable vertex {j} has no neighbour"));
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("neighbour list of stable vertex {j} is not strictly increasing"));
            }
            if list[list.len() - 1] >= k_size {
                return bad(format!("stable vertex {j} names a clique index out of range"));
            }
            if list.len() == k_size {
                return bad(format!("stable vertex {j} sees the whole clique, which is then not maximal"));
            }
        }
        Ok(SparseSplitGraph { k_size, stable, clique_labels, stable_labels })
    }

    pub fn k_size(&self) -> usize {
        self.k_size
    }

    pub fn s_size(&self) -> usize {
        self.stable.len()
    }

    pub fn n(&self) -> usize {
        self.k_size + self.stable.len()
    }

    /// Edges between the clique and the stable set.
    pub fn cross_edges(&self) -> usize {
        self.stable.iter().map(Vec::len).sum()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.stable[v]
    }

    pub fn stable_lists(&self) -> &[Vec<usize>] {
        &self.stable
    }

    pub fn clique_labels(&self) -> &[usize] {
        &self.clique_labels
    }

    pub fn stable_labels(&self) -> &[usize] {
        &self.stable_labels
    }

    /// For every clique vertex, the sorted list of its stable neighbours.
    pub fn clique_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k_size];
        for (v, list) in self.stable.iter().enumerate() {
            for &u in list {
                out[u].push(v);
            }
        }
        out
    }

    /// Expands into an ordinary graph whose vertex ids are the stored labels.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for (a, &la) in self.clique_labels.iter().enumerate() {
            for &lb in &self.clique_labels[a + 1..] {
                edges.push((la, lb));
            }
        }
        for (v, list) in self.stable.iter().enumerate() {
            for &u in list {
                edges.push((self.clique_labels[u], self.stable_labels[v]));
            }
        }
        Graph::from_edges(n, &edges).expect("labels form a permutation of 0..n")
    }

    /// The partition of [`Self::to_graph`] matching this representation.
    pub fn partition(&self) -> SplitPartition {
        let mut clique = self.clique_labels.clone();
        let mut stable = self.stable_labels.clone();
        clique.sort_unstable();
        stable.sort_unstable();
        SplitPartition { clique, stable }
    }

    /// Diameter of a graph with no stable vertex.
    pub(crate) fn complete_diameter(&self) -> u8 {
        debug_assert!(self.stable.is_empty());
        u8::from(self.k_size > 1)
    }
}

/// Sparse representation of `g` under `p`, clique and stable vertices indexed
/// in the sorted order of `p`.
pub fn sparse_representation(g: &Graph, p: &SplitPartition) -> Result<SparseSplitGraph> {
    p.validate(g)?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &u) in p.clique.iter().enumerate() {
        index[u] = i;
    }
    let stable = p
        .stable
        .iter()
        .map(|&v| {
            let mut list: Vec<usize> = g.neighbours(v).iter().map(|&u| index[u]).collect();
            list.sort_unstable();
            list
        })
        .collect();
    SparseSplitGraph::with_labels(p.clique.len(), stable, p.clique.clone(), p.stable.clone())
}

/// BFS over the sparse representation without materialising clique edges.
///
/// Vertices `0..k_size` are the clique, `k_size..` the stable set. The first
/// clique vertex taken off the queue discovers the whole clique, so the scan
/// of clique-clique adjacency happens once per search.
fn eccentricity(sg: &SparseSplitGraph, by_clique: &[Vec<usize>], source: usize, dist: &mut [u32]) -> u32 {
    const UNSEEN: u32 = u32::MAX;
    let k = sg.k_size();
    dist.fill(UNSEEN);
    let mut queue = VecDeque::with_capacity(dist.len());
    dist[source] = 0;
    queue.push_back(source);
    let mut clique_expanded = false;
    let mut far = 0;
    while let Some(x) = queue.pop_front() {
        let d = dist[x];
        far = far.max(d);
        let mut visit = |y: usize, queue: &mut VecDeque<usize>| {
            if dist[y] == UNSEEN {
                dist[y] = d + 1;
                queue.push_back(y);
            }
        };
        if x < k {
            if !clique_expanded {
                clique_expanded = true;
                for u in 0..k {
                    visit(u, &mut queue);
                }
            }
            for &v in &by_clique[x] {
                visit(k + v, &mut queue);
            }
        } else {
            for &u in sg.neighbours(x - k) {
                visit(u, &mut queue);
            }
        }
    }
    far
}

/// Exact diameter by breadth-first search from every vertex.
pub fn diameter_naive(sg: &SparseSplitGraph) -> DiameterResult {
    diameter_naive_with(sg, Exec::default())
}

pub fn diameter_naive_with(sg: &SparseSplitGraph, exec: Exec) -> DiameterResult {
    let by_clique = sg.clique_neighbours();
    let n = sg.n();
    let k = sg.k_size();
    let ecc = exec.map_range_init(n, || vec![0u32; n], |dist, s| eccentricity(sg, &by_clique, s, dist));
    let value = ecc.iter().copied().max().unwrap_or(0) as u8;
    if value == 3 {
        let w = (k..n).find(|&x| ecc[x] == 3).expect("only stable vertices reach eccentricity three");
        DiameterResult::three(w - k)
    } else {
        DiameterResult::at_most_two(value)
    }
}

/// Smallest clique index adjacent to every stable vertex, if any.
pub fn universal_vertex(sg: &SparseSplitGraph) -> Option<usize> {
    let mut hits = vec![0usize; sg.k_size()];
    for list in sg.stable_lists() {
        for &u in list {
            hits[u] += 1;
        }
    }
    hits.iter().position(|&h| h == sg.s_size())
}

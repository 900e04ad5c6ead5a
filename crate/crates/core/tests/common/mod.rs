#![allow(dead_code)]

pub mod checks;

use rand::seq::SliceRandom;
use rand::Rng;
use split_diameter::generators::{gen_random_split, Rng64};
use split_diameter::{CliqueOrdering, Side, SparseSplitGraph};

/// Random split graph with `2 <= |K| <= k_max` and `1 <= |S| <= s_max`.
pub fn random_split(rng: &mut Rng64, k_max: usize, s_max: usize) -> SparseSplitGraph {
    let k = rng.gen_range(2..=k_max);
    let s = rng.gen_range(1..=s_max);
    gen_random_split(rng, k, s)
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// All orderings of one side when there are at most `exhaustive_up_to`
/// vertices, otherwise `samples` random ones.
pub fn orderings(rng: &mut Rng64, side: Side, n: usize, exhaustive_up_to: usize, samples: usize) -> Vec<CliqueOrdering> {
    let perms = if n <= exhaustive_up_to {
        permutations(n)
    } else {
        (0..samples)
            .map(|_| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(rng);
                p
            })
            .collect()
    };
    perms.into_iter().map(|p| CliqueOrdering::new(side, p).unwrap()).collect()
}

/// Diameter of the expanded graph by plain BFS.
pub fn bfs_diameter(sg: &SparseSplitGraph) -> u8 {
    sg.to_graph().diameter().expect("split graphs here are connected") as u8
}

/// Eccentricity of every stable vertex in the expanded graph.
pub fn stable_eccentricities(sg: &SparseSplitGraph) -> Vec<usize> {
    let g = sg.to_graph();
    sg.stable_labels()
        .iter()
        .map(|&v| g.bfs(v).into_iter().map(|d| d.expect("connected")).max().unwrap_or(0))
        .collect()
}

/// Every non-empty proper subset of `0..k`, as sorted lists.
pub fn proper_subsets(k: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << k) - 1).map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

/// All multisets of `size` elements drawn from `0..n`, as non-decreasing
/// index lists.
pub fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in from..n {
            cur.push(x);
            rec(n, size, x, cur, out);
            cur.pop();
        }
    }
    rec(n, size, 0, &mut cur, &mut out);
    out
}

/// Every split graph with clique `k` and `1..=s_max` stable vertices, up to
/// reordering the stable set.
pub fn all_split_graphs(k: usize, s_max: usize) -> Vec<SparseSplitGraph> {
    let subsets = proper_subsets(k);
    let mut out = Vec::new();
    for s in 1..=s_max {
        for pick in multisets(subsets.len(), s) {
            let lists = pick.iter().map(|&i| subsets[i].clone()).collect();
            out.push(SparseSplitGraph::new(k, lists).unwrap());
        }
    }
    out
}

/// Runs of a sorted position list as `(first, last)` pairs.
pub fn runs_of(sorted: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in sorted {
        match out.last_mut() {
            Some(last) if last.1 + 1 == p => last.1 = p,
            _ => out.push((p, p)),
        }
    }
    out
}

/// Proptest strategy for split graphs with `2 <= |K| <= k_max` and
/// `s_min <= |S| <= s_max`, each stable list a random proper non-empty subset.
pub fn split_graphs(k_max: usize, s_min: usize, s_max: usize) -> impl proptest::strategy::Strategy<Value = SparseSplitGraph> {
    use proptest::prelude::*;
    (2..=k_max).prop_flat_map(move |k| {
        proptest::collection::vec(1u32..(1 << k) - 1, s_min..=s_max).prop_map(move |masks| {
            let lists = masks.iter().map(|&m| (0..k).filter(|&i| m >> i & 1 == 1).collect()).collect();
            SparseSplitGraph::new(k, lists).expect("proper non-empty subsets")
        })
    })
}

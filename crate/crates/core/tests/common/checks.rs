//! Checks shared by the area suites and the acceptance run. Each one walks a
//! seeded family and records every disagreement with an independent oracle.

use rand::seq::SliceRandom;
use rand::Rng;
use split_diameter::generators::{self, gen_random_kci, gen_threshold, reduce_diam2, sparse_of, Rng64};
use split_diameter::range_tree::{NEG_INF, POS_INF};
use split_diameter::*;

use super::*;

/// Number of cases looked at and the first few violations.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub violations: usize,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, msg: String) {
        self.violations += 1;
        if self.examples.len() < 5 {
            self.examples.push(msg);
        }
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.case();
        if !ok {
            self.fail(msg());
        }
    }

    pub fn ok(&self) -> bool {
        self.violations == 0
    }

    pub fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations += other.violations;
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
    }

    pub fn assert_clean(&self, what: &str) {
        assert!(self.ok(), "{what}: {} of {} cases violated, e.g. {:?}", self.violations, self.cases, self.examples);
        assert!(self.cases > 0, "{what}: nothing checked");
    }
}

/// The diameter and the smallest stable vertex of eccentricity three, from
/// BFS on the expanded graph.
pub fn bfs_oracle(sg: &SparseSplitGraph) -> (u8, Option<usize>) {
    let d = bfs_diameter(sg);
    let w = if d == 3 { stable_eccentricities(sg).iter().position(|&e| e == 3) } else { None };
    (d, w)
}

/// `count` seeded split graphs with `2 <= |K| <= 8` and `1 <= |S| <= 8`.
pub fn random_family(seed: u64, count: usize) -> Vec<SparseSplitGraph> {
    let mut rng = generators::rng(seed);
    (0..count).map(|_| random_split(&mut rng, 8, 8)).collect()
}

fn agrees(got: DiameterResult, oracle: (u8, Option<usize>), naive: DiameterResult) -> bool {
    got.value == oracle.0 && got.witness == oracle.1 && naive.value == oracle.0 && naive.witness == oracle.1
}

/// Range-tree diameter against BFS under every clique ordering when
/// `|K| <= 6`, else `samples` random ones. Returns the tally and the number of
/// orderings run.
pub fn rangetree_equivalence(graphs: &[SparseSplitGraph], seed: u64, samples: usize) -> (Tally, usize) {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    let mut runs = 0;
    for sg in graphs {
        let oracle = bfs_oracle(sg);
        let naive = diameter_naive(sg);
        for tau in orderings(&mut rng, Side::Clique, sg.k_size(), 6, samples) {
            runs += 1;
            match diameter_kci_rangetree(sg, &tau) {
                Ok(r) => t.check(agrees(r, oracle, naive), || format!("{:?} under {:?}: {r:?} vs {oracle:?}", sg.stable_lists(), tau.order())),
                Err(e) => t.check(false, || format!("{:?}: {e}", sg.stable_lists())),
            }
        }
    }
    (t, runs)
}

/// Stable-side diameter against BFS under every stable ordering when
/// `|S| <= 6`, else `samples` random ones.
pub fn complement_equivalence(graphs: &[SparseSplitGraph], seed: u64, samples: usize) -> (Tally, usize) {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    let mut runs = 0;
    for sg in graphs {
        let oracle = bfs_oracle(sg);
        let naive = diameter_naive(sg);
        for sigma in orderings(&mut rng, Side::Stable, sg.s_size(), 6, samples) {
            runs += 1;
            match diameter_complement_kci(sg, &sigma) {
                Ok(r) => t.check(agrees(r, oracle, naive), || format!("{:?} under {:?}: {r:?} vs {oracle:?}", sg.stable_lists(), sigma.order())),
                Err(e) => t.check(false, || format!("{:?}: {e}", sg.stable_lists())),
            }
        }
    }
    (t, runs)
}

/// Every subset of `1..=k_size` (as 1-based positions) with between one and
/// `k` runs.
pub fn position_sets(k_size: usize, k: usize) -> Vec<IntervalSet> {
    (1u32..1 << k_size)
        .map(|m| IntervalSet::from_positions((0..k_size).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect()))
        .filter(|s| s.len() <= k)
        .collect()
}

fn meets(a: &IntervalSet, b: &IntervalSet) -> bool {
    a.runs().iter().any(|&(l, u)| (l..=u).any(|p| b.contains(p)))
}

/// Event family of source `v` against point `w`: the number of boxes holding
/// the padded point must be one when the neighbourhoods meet and zero
/// otherwise.
fn event_case(t: &mut Tally, v: &IntervalSet, w: &IntervalSet, k: usize, k_size: usize, boxes: &[EventBox]) {
    let p = padded_point(w, k, k_size);
    let hits = boxes.iter().filter(|b| b.bbox.contains(&p)).count();
    let want = usize::from(meets(v, w));
    t.check(hits == want, || format!("kSize {k_size}, k {k}: v {:?}, w {:?} hit {hits} boxes, want {want}", v.runs(), w.runs()));
}

/// Exhaustive event check over all sources and targets with at most `k` runs
/// in a clique of at most `k_size_max` positions.
pub fn event_grid(k_size_max: usize, k_max: usize) -> Tally {
    let mut t = Tally::default();
    for k_size in 1..=k_size_max {
        for k in 1..=k_max {
            let sets = position_sets(k_size, k);
            for v in &sets {
                let boxes = build_event_boxes(v, k, k_size);
                for w in &sets {
                    event_case(&mut t, v, w, k, k_size, &boxes);
                }
            }
        }
    }
    t
}

/// Random position set over `1..=k_size` with between one and `k` runs.
pub fn random_runs(rng: &mut Rng64, k_size: usize, k: usize) -> IntervalSet {
    loop {
        let s = IntervalSet::from_positions((1..=k_size).filter(|_| rng.gen_bool(0.5)).collect());
        if !s.is_empty() && s.len() <= k {
            return s;
        }
    }
}

/// Sampled event check for larger `k`.
pub fn event_sampling(k_size: usize, k: usize, sources: usize, targets: usize, seed: u64) -> Tally {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    for _ in 0..sources {
        let v = random_runs(&mut rng, k_size, k);
        let boxes = build_event_boxes(&v, k, k_size);
        for _ in 0..targets {
            let w = random_runs(&mut rng, k_size, k);
            event_case(&mut t, &v, &w, k, k_size, &boxes);
        }
    }
    t
}

fn random_bound(rng: &mut Rng64, span: i64) -> (i64, i64) {
    match rng.gen_range(0..6) {
        0 => (NEG_INF, POS_INF),
        1 => (NEG_INF, rng.gen_range(-2..span + 2)),
        2 => (rng.gen_range(-2..span + 2), POS_INF),
        _ => {
            let a = rng.gen_range(-2..span + 2);
            (a, a + rng.gen_range(0..span / 2 + 2))
        }
    }
}

/// Upper bound on the point count per dimension, keeping high-dimensional
/// builds affordable.
pub fn max_points(dim: usize) -> usize {
    match dim {
        0..=4 => 2000,
        5..=6 => 500,
        _ => 200,
    }
}

/// `sets * boxes` random (point set, box) trials over `1 <= d <= 8`.
pub fn range_tree_trials(sets: usize, boxes: usize, seed: u64) -> Tally {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    for _ in 0..sets {
        let dim = rng.gen_range(1..=8);
        let n = rng.gen_range(0..=max_points(dim));
        // Narrow spans produce many ties.
        let span: i64 = if rng.gen_bool(0.5) { 8 } else { 1000 };
        let points: Vec<Vec<i64>> = (0..n).map(|_| (0..dim).map(|_| rng.gen_range(0..span)).collect()).collect();
        let ps = PointSet::from_points(dim, &points).expect("fixed arity");
        let tree = RangeTree::build(&ps).expect("non-zero dimension");
        for _ in 0..boxes {
            let b = RangeBox::from_bounds(&(0..dim).map(|_| random_bound(&mut rng, span)).collect::<Vec<_>>()).expect("ordered bounds");
            let got = tree.count(&b).expect("same dimension");
            let want = count_bruteforce(&ps, &b).expect("same dimension");
            t.check(got == want, || format!("d {dim}, n {n}, box {b:?}: {got} vs {want}"));
        }
    }
    t
}

/// Split graphs with clique `k`, `1..=s_max` stable vertices, for the
/// exhaustive recognition family.
pub fn exhaustive_family() -> Vec<SparseSplitGraph> {
    [(2, 4), (3, 4), (4, 4), (5, 3), (6, 2), (7, 2)].iter().flat_map(|&(k, s)| all_split_graphs(k, s)).collect()
}

/// Random instances with a fair share of clique-interval ones: uniformly
/// random split graphs alternate with single-run planted instances under a
/// shuffled clique.
pub fn recognition_random_family(seed: u64, count: usize) -> Vec<SparseSplitGraph> {
    let mut rng = generators::rng(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_split(&mut rng, 8, 8)
            } else {
                let k_size: usize = rng.gen_range(2..=8);
                let s_size = rng.gen_range(1..=8);
                let (sg, _) = gen_random_kci(k_size, s_size, 1, rng.gen()).expect("k = 1 is feasible");
                let mut relabel: Vec<usize> = (0..k_size).collect();
                relabel.shuffle(&mut rng);
                let lists = sg
                    .stable_lists()
                    .iter()
                    .map(|l| {
                        let mut l: Vec<usize> = l.iter().map(|&u| relabel[u]).collect();
                        l.sort_unstable();
                        l
                    })
                    .collect();
                SparseSplitGraph::new(k_size, lists).expect("relabelling keeps validity")
            }
        })
        .collect()
}

/// Fast recognition against the exhaustive oracle, with the certificate of
/// every acceptance checked under the plain width measure.
pub fn recognition_agreement(graphs: &[SparseSplitGraph]) -> Tally {
    let mut t = Tally::default();
    for sg in graphs {
        let fast = recognize_clique_interval(sg);
        let slow = recognize_bruteforce(sg).expect("family within the oracle limit");
        let cert_ok = match &fast.ordering {
            Some(tau) => fast.accepted && width_under(sg, tau) <= 1,
            None => !fast.accepted,
        };
        t.check(fast.accepted == slow.accepted && cert_ok, || {
            format!("{:?} on K{}: fast {} oracle {}", sg.stable_lists(), sg.k_size(), fast.accepted, slow.accepted)
        });
    }
    t
}

/// The four-vertex example graph rejected, thin spiders accepted, suns 3..=6 rejected.
pub fn recognition_fixtures() -> Tally {
    let mut t = Tally::default();
    t.check(!recognize_clique_interval(&generators::fig1()).accepted, || "example graph accepted".into());
    for n in 2..=8 {
        t.check(recognize_clique_interval(&generators::thin_spider(n)).accepted, || format!("spider {n} rejected"));
    }
    for n in 3..=6 {
        t.check(!recognize_clique_interval(&generators::sun(n)).accepted, || format!("{n}-sun accepted"));
    }
    t
}

/// Every ordering has width at most `ceil(|K| / 2)`.
pub fn width_bound_check(graphs: &[SparseSplitGraph], seed: u64) -> Tally {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    for sg in graphs {
        let bound = sg.k_size().div_ceil(2);
        for tau in orderings(&mut rng, Side::Clique, sg.k_size(), 6, 50) {
            let w = width_under(sg, &tau);
            t.check(w <= bound, || format!("{:?} under {:?}: width {w} > {bound}", sg.stable_lists(), tau.order()));
        }
    }
    t
}

/// VC-dimension at most twice the width of a known ordering: the exact
/// clique-interval number, and for planted instances their planted ordering.
pub fn vc_bound_check(graphs: &[SparseSplitGraph], seed: u64, planted: usize) -> Tally {
    let mut t = Tally::default();
    for sg in graphs {
        let (k, _) = clique_interval_number_exact(sg).expect("small clique");
        let vc = vc_dimension(&neighbourhood_system(sg)).expect("small ground set");
        t.check(vc <= 2 * k, || format!("{:?}: vc {vc} > 2 * {k}", sg.stable_lists()));
    }
    let mut rng = generators::rng(seed);
    for _ in 0..planted {
        let k_size: usize = rng.gen_range(2..=16);
        let k = rng.gen_range(1..=k_size.div_ceil(2));
        let (sg, tau) = gen_random_kci(k_size, rng.gen_range(1..=24), k, rng.gen()).expect("feasible");
        let w = width_under(&sg, &tau);
        let vc = vc_dimension(&neighbourhood_system(&sg)).expect("ground set within limit");
        t.check(w <= k && vc <= 2 * w, || format!("{:?}: vc {vc}, planted width {w}", sg.stable_lists()));
    }
    t
}

/// Clique-interval number within one of the stabbing number.
pub fn stabbing_check(graphs: &[SparseSplitGraph]) -> Tally {
    let mut t = Tally::default();
    for sg in graphs {
        let (k, _) = clique_interval_number_exact(sg).expect("small clique");
        let st = stabbing_number(&neighbourhood_system(sg)).expect("small ground set");
        t.check(k.abs_diff(st) <= 1, || format!("{:?}: clique-interval {k}, stabbing {st}", sg.stable_lists()));
    }
    t
}

/// Threshold graphs have a width-one ordering, from generated chains and from
/// any random instance the ordering accepts.
pub fn threshold_check(graphs: &[SparseSplitGraph], seed: u64, chains: usize) -> Tally {
    let mut t = Tally::default();
    let mut rng = generators::rng(seed);
    for _ in 0..chains {
        let k_size = rng.gen_range(2..=10);
        let mut chain: Vec<usize> = (0..rng.gen_range(1..=8)).map(|_| rng.gen_range(1..k_size)).collect();
        chain.sort_unstable();
        let (g, p) = gen_threshold(k_size, &chain).expect("valid chain");
        let sg = sparse_of(&g, &p);
        match threshold_ordering(&sg) {
            Ok(tau) => t.check(width_under(&sg, &tau) == 1, || format!("chain {chain:?}: width above one")),
            Err(e) => t.check(false, || format!("chain {chain:?} over {k_size}: {e}")),
        }
    }
    for sg in graphs {
        if let Ok(tau) = threshold_ordering(sg) {
            t.check(width_under(sg, &tau) == 1, || format!("{:?}: width above one", sg.stable_lists()));
        }
    }
    t
}

/// Prefix plus suffix positions of `N(v)` under `tau`, checked directly.
fn prefix_suffix_ok(sg: &SparseSplitGraph, tau: &CliqueOrdering, v: usize) -> bool {
    let k = sg.k_size();
    let mut ranks: Vec<usize> = sg.neighbours(v).iter().map(|&u| tau.rank(u)).collect();
    ranks.sort_unstable();
    (0..=ranks.len()).any(|cut| {
        ranks[..cut].iter().enumerate().all(|(i, &r)| r == i + 1)
            && ranks[cut..].iter().rev().enumerate().all(|(i, &r)| r == k - i)
    })
}

/// Comparability split graphs: width at most two with a prefix plus suffix
/// certificate, and the matching diameter. Returns the tally and how many
/// instances were comparability graphs.
pub fn comparability_check(graphs: &[SparseSplitGraph]) -> (Tally, usize) {
    let mut t = Tally::default();
    let mut hits = 0;
    for sg in graphs {
        let Ok(tau) = comparability_ordering(&sg.to_graph(), &sg.partition()) else {
            continue;
        };
        hits += 1;
        let w = width_under(sg, &tau);
        let cert = (0..sg.s_size()).all(|v| prefix_suffix_ok(sg, &tau, v));
        t.check(w <= 2 && cert, || format!("{:?} under {:?}: width {w}, certificate {cert}", sg.stable_lists(), tau.order()));
        let oracle = bfs_oracle(sg);
        match diameter_comparability(sg, &tau) {
            Ok(r) => {
                let witness_ok = match r.witness {
                    Some(w) => stable_eccentricities(sg)[w] == 3,
                    None => r.value < 3,
                };
                t.check(r.value == oracle.0 && witness_ok, || {
                    format!("{:?}: comparability diameter {r:?} vs {oracle:?}", sg.stable_lists())
                })
            }
            Err(e) => t.check(false, || format!("{:?}: {e}", sg.stable_lists())),
        }
    }
    (t, hits)
}

/// Whenever the maximum-neighbour check passes, the shortcut value is the
/// diameter and a reported witness has eccentricity three. Returns the tally
/// and the number of passing pairs.
pub fn max_neighbour_check(graphs: &[SparseSplitGraph]) -> (Tally, usize) {
    let mut t = Tally::default();
    let mut passing = 0;
    for sg in graphs {
        let oracle = bfs_oracle(sg);
        let ecc = stable_eccentricities(sg);
        let vs = (0..sg.k_size()).map(Vertex::Clique).chain((0..sg.s_size()).map(Vertex::Stable));
        for v in vs {
            for u in (0..sg.k_size()).map(Vertex::Clique).chain((0..sg.s_size()).map(Vertex::Stable)) {
                let Ok(r) = max_neighbour_shortcut(sg, v, u) else {
                    continue;
                };
                passing += 1;
                let witness_ok = match r.witness {
                    Some(w) => ecc[w] == 3,
                    None => r.value < 3,
                };
                t.check(r.value == oracle.0 && witness_ok, || format!("{:?} with {v:?}, {u:?}: {r:?} vs {oracle:?}", sg.stable_lists()));
            }
        }
    }
    (t, passing)
}

/// Random connected graph on `2..=n_max` vertices.
pub fn random_connected(rng: &mut Rng64, n_max: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=n_max);
        let p = rng.gen_range(0.15..0.8);
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).expect("simple edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Diameter at most two is preserved by the split reduction.
pub fn reduction_check(count: usize, seed: u64) -> Tally {
    let mut rng = generators::rng(seed);
    let mut t = Tally::default();
    for _ in 0..count {
        let g = random_connected(&mut rng, 12);
        let d = g.diameter().expect("connected");
        match reduce_diam2(&g) {
            Ok(sg) => {
                let d2 = bfs_diameter(&sg);
                t.check((d <= 2) == (d2 <= 2), || format!("{} vertices, diameter {d}, reduced {d2}", g.n()));
            }
            Err(e) => t.check(false, || format!("{e}")),
        }
    }
    t
}

pub fn summary(t: &Tally) -> String {
    if t.ok() {
        format!("{} cases, 0 violations", t.cases)
    } else {
        format!("{} cases, {} violations, e.g. {}", t.cases, t.violations, t.examples.join("; "))
    }
}

mod common;

use common::checks::*;
use common::split_graphs;
use proptest::prelude::*;
use split_diameter::generators::{self, fig1, gen_random_kci, sun, thin_spider};
use split_diameter::*;

fn identity(n: usize) -> CliqueOrdering {
    CliqueOrdering::identity(Side::Clique, n)
}

#[test]
fn rangetree_fixtures() {
    assert_eq!(diameter_kci_rangetree(&fig1(), &identity(fig1().k_size())).unwrap().value, 2);
    let r = diameter_kci_rangetree(&sun(4), &identity(4)).unwrap();
    assert_eq!(r.value, 3);
    assert!(r.witness.is_some());
    assert_eq!(diameter_kci_rangetree(&thin_spider(3), &identity(3)).unwrap(), DiameterResult::three(0));
    let one = SparseSplitGraph::new(3, vec![vec![1]]).unwrap();
    assert_eq!(diameter_kci_rangetree(&one, &identity(3)).unwrap().value, 2);
    let wrong = CliqueOrdering::identity(Side::Clique, 5);
    assert!(matches!(diameter_kci_rangetree(&sun(4), &wrong), Err(Error::OrderingMismatch(_))));
}

#[test]
fn complement_fixtures() {
    // N(u1) = {s1, s2}, N(u2) = {s2, s3}, and u3 sees s1 so that K stays
    // maximal: s1 and s3 are three apart.
    let far = SparseSplitGraph::new(3, vec![vec![0, 2], vec![0, 1], vec![1]]).unwrap();
    let sigma = CliqueOrdering::identity(Side::Stable, 3);
    assert_eq!(diameter_complement_kci(&far, &sigma).unwrap(), DiameterResult::three(0));
    // N(u1) = S.
    let near = SparseSplitGraph::new(3, vec![vec![0], vec![0, 1], vec![0, 2]]).unwrap();
    assert_eq!(diameter_complement_kci(&near, &sigma).unwrap().value, 2);
    assert!(matches!(diameter_complement_kci(&near, &identity(3)), Err(Error::OrderingMismatch(_))));
}

#[test]
fn rangetree_matches_bfs() {
    let (t, _) = rangetree_equivalence(&random_family(41, 250), 1, 10);
    t.assert_clean("rangetree");
}

#[test]
fn complement_matches_bfs() {
    let (t, _) = complement_equivalence(&random_family(42, 250), 2, 10);
    t.assert_clean("complement");
}

#[test]
fn planted_instances_agree_everywhere() {
    for seed in 0..30 {
        let (sg, tau) = gen_random_kci(40, 60, 1 + (seed as usize % 4), seed).unwrap();
        let naive = diameter_naive(&sg);
        assert_eq!(diameter_kci_rangetree(&sg, &tau).unwrap(), naive);
        assert_eq!(diameter_kci_rangetree_with(&sg, &tau, Exec::Sequential).unwrap(), naive);
        let sigma = CliqueOrdering::identity(Side::Stable, sg.s_size());
        assert_eq!(diameter_complement_kci_with(&sg, &sigma, Exec::Sequential).unwrap(), naive);
    }
}

#[test]
fn events_exhaustive_small() {
    event_grid(5, 2).assert_clean("event grid");
}

#[test]
fn events_sampled_up_to_four_runs() {
    for k in 1..=4 {
        event_sampling(14, k, 60, 60, k as u64).assert_clean("event sampling");
    }
}

#[test]
fn padding_never_changes_counts() {
    let mut rng = generators::rng(43);
    for _ in 0..200 {
        let k = 1 + rng.gen_range(0..3);
        let k_size = 12;
        let v = random_runs(&mut rng, k_size, k);
        let targets: Vec<IntervalSet> = (0..20).map(|_| random_runs(&mut rng, k_size, k)).collect();
        let want = targets.iter().filter(|w| w.runs().iter().any(|&(l, u)| (l..=u).any(|p| v.contains(p)))).count();
        for pad in k..=k + 2 {
            let boxes = build_event_boxes(&v, pad, k_size);
            let got: usize = targets
                .iter()
                .map(|w| {
                    let p = padded_point(w, pad, k_size);
                    boxes.iter().filter(|b| b.bbox.contains(&p)).count()
                })
                .sum();
            assert_eq!(got, want, "v {:?} padded to {pad}", v.runs());
        }
    }
}

#[test]
fn max_neighbour_shortcut_is_exact() {
    let graphs = random_family(44, 400);
    let (t, passing) = max_neighbour_check(&graphs);
    t.assert_clean("max neighbour");
    assert!(passing > 100);
}

#[test]
fn pendant_vertex_shortcut() {
    let mut seen = 0;
    for sg in random_family(45, 600) {
        let Some((v, u)) = find_pendant_shortcut(&sg) else {
            continue;
        };
        seen += 1;
        let r = max_neighbour_shortcut(&sg, Vertex::Stable(v), Vertex::Clique(u)).unwrap();
        assert_eq!(r.value, bfs_oracle(&sg).0);
    }
    assert!(seen > 50);
}

#[test]
fn clique_interval_diameter_on_accepted_instances() {
    let mut accepted = 0;
    for sg in recognition_random_family(46, 1500) {
        if recognize_clique_interval(&sg).accepted {
            accepted += 1;
            let r = diameter_clique_interval(&sg);
            assert_eq!((r.value, r.witness), bfs_oracle(&sg), "{:?}", sg.stable_lists());
        }
    }
    assert!(accepted > 300);
}

use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ordering_never_changes_the_answer(sg in split_graphs(10, 1, 10), seed in any::<u64>()) {
        let mut rng = generators::rng(seed);
        let naive = diameter_naive(&sg);
        let tau = common::orderings(&mut rng, Side::Clique, sg.k_size(), 0, 1).pop().unwrap();
        prop_assert_eq!(diameter_kci_rangetree(&sg, &tau).unwrap(), naive);
        let sigma = common::orderings(&mut rng, Side::Stable, sg.s_size(), 0, 1).pop().unwrap();
        prop_assert_eq!(diameter_complement_kci(&sg, &sigma).unwrap(), naive);
    }
}

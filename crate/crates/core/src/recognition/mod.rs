//! Recognition of split graphs whose stable neighbourhoods can all be made
//! consecutive by one ordering of the clique.

mod pq;

use crate::error::{Error, Result};
use crate::ordering::{clique_interval_number_exact, width_under, CliqueOrdering, Side, EXACT_LIMIT};
use crate::sparse::SparseSplitGraph;

use pq::PqTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub accepted: bool,
    /// Present iff accepted; every stable neighbourhood is one run under it.
    pub ordering: Option<CliqueOrdering>,
}

impl RecognitionResult {
    fn accept(tau: CliqueOrdering) -> Self {
        RecognitionResult { accepted: true, ordering: Some(tau) }
    }

    fn reject() -> Self {
        RecognitionResult { accepted: false, ordering: None }
    }
}

/// Consecutive-ones test on the stable-set by clique incidence, one PQ-tree
/// reduction per stable vertex.
pub fn recognize_clique_interval(sg: &SparseSplitGraph) -> RecognitionResult {
    let mut tree = PqTree::new(sg.k_size());
    for list in sg.stable_lists() {
        if !tree.reduce(list) {
            return RecognitionResult::reject();
        }
    }
    let tau = CliqueOrdering::new(Side::Clique, tree.frontier()).expect("the frontier is a permutation");
    debug_assert!(verify_ordering_certificate(sg, &tau));
    RecognitionResult::accept(tau)
}

/// True iff every stable neighbourhood is a single run under `tau`.
pub fn verify_ordering_certificate(sg: &SparseSplitGraph, tau: &CliqueOrdering) -> bool {
    tau.side() == Side::Clique && tau.len() == sg.k_size() && width_under(sg, tau) <= 1
}

/// Exhaustive search over clique orderings.
pub fn recognize_bruteforce(sg: &SparseSplitGraph) -> Result<RecognitionResult> {
    if sg.k_size() > EXACT_LIMIT {
        return Err(Error::TooLarge { what: "clique", size: sg.k_size(), limit: EXACT_LIMIT });
    }
    let (k, tau) = clique_interval_number_exact(sg)?;
    Ok(if k <= 1 { RecognitionResult::accept(tau) } else { RecognitionResult::reject() })
}

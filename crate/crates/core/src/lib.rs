//! Diameter of split graphs through clique-interval orderings.
//!
//! A split graph is stored in its sparse form: the clique size plus, for each
//! stable vertex, the sorted list of its clique neighbours. Every split graph
//! has diameter at most three, and the interesting question is whether it is
//! two. The crate offers the all-sources BFS baseline next to faster methods
//! that exploit an ordering of the clique under which every stable
//! neighbourhood is a union of few runs:
//!
//! * [`diameter_kci_rangetree`] counts, for each stable vertex, the stable
//!   vertices it reaches in two steps with orthogonal range queries;
//! * [`diameter_complement_kci`] sweeps runs given an ordering of the stable
//!   set instead;
//! * [`diameter_clique_interval`], [`diameter_comparability`] and
//!   [`max_neighbour_shortcut`] handle special classes.
//!
//! Exhaustive oracles for small instances live in [`oracles`] and
//! [`ordering`], instance families in [`generators`].
//!
//! ```
//! use split_diameter::{diameter_kci_rangetree, diameter_naive, generators};
//!
//! let (sg, tau) = generators::gen_random_kci(40, 40, 2, 7).unwrap();
//! assert_eq!(diameter_kci_rangetree(&sg, &tau).unwrap(), diameter_naive(&sg));
//! ```

pub mod comparability;
pub mod error;
pub mod events;
pub mod exec;
pub mod fast;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracles;
pub mod ordering;
pub mod range_tree;
pub mod recognition;
pub mod sparse;

pub use comparability::{comparability_ordering, diameter_comparability, transitive_orientation};
pub use error::{Error, Result};
pub use events::{build_event_boxes, padded_point, EventBox, Overlap};
pub use exec::Exec;
pub use fast::{
    complement_width, diameter_clique_interval, diameter_complement_kci, diameter_complement_kci_with,
    diameter_kci_rangetree, diameter_kci_rangetree_with, find_pendant_shortcut, max_neighbour_shortcut, Vertex,
};
pub use graph::{split_partition, Graph, SplitPartition};
pub use oracles::{dual, find_induced_sun, neighbourhood_system, stabbing_number, vc_dimension, SetSystem, SunEmbedding};
pub use ordering::{
    clique_interval_number_exact, clique_interval_number_exact_with, decompose_intervals, threshold_ordering,
    width_under, CliqueOrdering, IntervalSet, Side,
};
pub use range_tree::{count_bruteforce, PointSet, RangeBox, RangeTree};
pub use recognition::{recognize_bruteforce, recognize_clique_interval, verify_ordering_certificate, RecognitionResult};
pub use sparse::{
    diameter_naive, diameter_naive_with, sparse_representation, universal_vertex, DiameterResult, SparseSplitGraph,
};

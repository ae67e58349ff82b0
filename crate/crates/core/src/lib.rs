//! Graph invariants from neighbourhood-matrix power sequences.
//!
//! The crate computes the neighbourhood matrix of a simple graph and its
//! power sequence, a per-vertex structural descriptor built from it, maximal
//! clique catalogs with a clique sequence, descriptor-pruned automorphism
//! groups, and a staged classifier for graph collections. Brute-force
//! oracles for small graphs live in [`oracles`].
//!
//! Algorithm variants sit behind traits and are registered by name:
//! [`nm::builders`], [`cliques::enumerators`] and [`iso::checkers`].
//!
//! ```
//! use nmseq::{automorphism_group, descriptor_sequence, named, AutConfig, WeightSet};
//!
//! let g = named::cycle(5);
//! let d = descriptor_sequence(&g, &WeightSet::default());
//! assert!(d.values.iter().all(|&v| (v - d.values[0]).abs() < 1e-12));
//!
//! let aut = automorphism_group(&g, &AutConfig::default()).unwrap();
//! assert_eq!(aut.len(), 10);
//! ```

pub mod automorphism;
pub mod cliques;
pub mod descriptor;
pub mod error;
pub mod formats;
pub mod graph;
pub mod grouping;
pub mod iso;
pub mod named;
pub mod nm;
pub mod oracles;
pub mod pipeline;
pub mod registry;
pub mod weights;

pub use automorphism::{
    automorphism_group, candidate_groups, verify_group, AutConfig, AutomorphismSet, Permutation,
};
pub use cliques::{clique_sequence, maximal_cliques, CliqueCatalog, CliqueSequence};
pub use descriptor::{descriptor_sequence, DescriptorSequence};
pub use error::{Error, Result};
pub use graph::{Graph, IntMatrix};
pub use iso::exact_isomorphic;
pub use nm::{nm_direct, nm_product, power_sequence, NmMatrix, NmSequence};
pub use pipeline::{classify, ClassificationReport, PipelineConfig};
pub use registry::{Named, Registry};
pub use weights::{IrrSequence, WeightSet};

/// Default tolerance for comparing descriptor values.
pub const DEFAULT_EPS: f64 = 1e-9;

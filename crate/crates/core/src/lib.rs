//! Permutation groups, graph constructions and automorphism machinery for
//! certifying cubic vertex-transitive non-Cayley graphs.

pub mod analysis;
pub mod automorphisms;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Girth, Graph};
pub use group::{OrbitPartition, PermutationGroup, StabilizerChain};
pub use perm::Permutation;

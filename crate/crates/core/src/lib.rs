//! Permutation groups, coset enumeration, and symmetric-graph analysis for
//! tetravalent half-arc-transitive graphs.

pub mod altcycles;
pub mod autgraph;
pub mod error;
pub mod fpgroup;
pub mod graphcore;
pub mod pairsearch;
pub mod perm;
pub mod reports;
pub mod permgroup;
pub mod symmetry;

pub use error::{FpError, GraphError, GroupError};
pub use perm::{evaluate_word, Permutation};
pub use permgroup::{PermutationGroup, SubgroupHandle};

//! Permutation groups: stabilizer chains, orbits, blocks, cosets, cores,
//! normalizers, and small-subgroup machinery.

pub mod blocks;
pub mod chain;
pub mod cosets;
pub mod group;
pub mod io;
pub mod signature;
pub mod subgroups;

pub use blocks::{is_primitive, minimal_block_system, minimal_blocks};
pub use chain::StabChain;
pub use cosets::{core, coset_action, coset_action_bounded, double_coset, is_maximal_subgroup, CosetAction};
pub use group::{Giant, Orbit, PermutationGroup, SubgroupHandle, TransitivityProfile};
pub use io::{format_generators, format_group, parse_generators, parse_group};
pub use signature::{signature, GroupSignature};
pub use subgroups::{
    centralizer, centralizer_in_sym, class_representatives, conjugate_closure, conjugation_stabilizer, normalizer, normalizer_in_sym,
    normalizer_in_sym_fixing, small_subgroups, sylow_subgroup, wreath_square, WreathSquare,
};

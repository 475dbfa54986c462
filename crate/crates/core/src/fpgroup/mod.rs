//! Finitely presented groups, coset enumeration and the amalgam catalog.

mod catalog;
mod enumerate;
mod presentation;

pub use catalog::{amalgam_by_name, amalgam_catalog, AmalgamSpec};
pub use enumerate::{
    faithful_representation, group_order, permutation_image, todd_coxeter, CosetTable,
    EnumerationLog, PermutationImage, DEFAULT_COSET_LIMIT,
};
pub use presentation::{
    cyclic_reduce, free_reduce, inverse_letter, invert_word, word_pairs, FpPresentation, Letter,
};

//! Transitivity classification, local actions and the case analysis of
//! maximal (½, t)-pairs.

mod theorem;
mod transitivity;

pub use theorem::{
    cayley_normality_report, classify_theorem_case, describe_group, local_normality_identities,
    CaseLabel, CayleyNormality, Fact, LocalNormalityReport, TheoremCase,
};
pub use transitivity::{
    arc_orbits, local_action, transitivity_report, LocalAction, SDegree, TransitivityReport,
};
pub(crate) use transitivity::{arc_orbit_labels, ArcIndex};

//! F2[G]-modules, their first cohomology, and finite models M^T ⋊ G for
//! checking the torsor lemmas.

mod cohom;
mod finite;
mod linalg;
mod model;
mod module;
mod torsor;

pub use cohom::{h1_dim, h1_dim_full_table, H1_ORDER_LIMIT};
pub use finite::{
    characters_to_f2, commutator_subgroup, conjugacy_classes, generate, normal_closure, normal_subgroups,
    FiniteGroup, Subgroup,
};
pub use linalg::{Mat, XorBasis};
pub use model::{Cocycle, SemidirectGroup, MODEL_ORDER_LIMIT};
pub use module::{F2GModule, MAX_DIM};
pub use torsor::{
    abelianization_check, check_lemma_f1, check_prop_a1, lift_with_targets, torsor_field_no_quadratic_subext,
    PropA1Report, ENUMERATION_LIMIT,
};

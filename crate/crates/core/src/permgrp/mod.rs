//! Permutation groups on at most 7 letters and Galois group certification.

mod galois;
mod group;
mod perm;

pub use galois::{
    cycle_types_up_to, frobenius_cycle_type, galois_group_cubic, galois_group_quartic,
    galois_group_quintic, CycleWitness, GaloisClass, GaloisVerdict, DEFAULT_PRIME_BUDGET,
};
pub use group::PermGroup;
pub use perm::{Permutation, MAX_DEGREE};

//! Exact arithmetic over Q and F_p.

mod factor;
mod irreducible;
pub mod nt;
mod polyfp;
mod polyq;
mod quotient;
mod rational;
mod resultant;
mod sturm;

pub use factor::{
    distinct_degree, equal_degree_split, factor_fp, factor_mod_p, factor_mod_p_seeded,
    squarefree_decomposition, FactorizationFp,
};
pub use irreducible::{find_factor, is_irreducible, rational_root, square_part};
pub use polyfp::{inverse_mod_p, pow_mod_p, PolyFp};
pub(crate) use polyfp::default_rng;
pub use polyq::PolyQ;
pub use quotient::{det_rational, trace_powers, QuotientRing};
pub use rational::{
    common_denominator, format_rational, from_bigint, int, is_p_integral, is_perfect_square,
    is_rational_square, mod_inverse_big, parse_rational, ratio, residue_mod, residue_mod_u64,
    sign, val_int, val_q, Rational,
};
pub use resultant::{bareiss_det, discriminant, resultant};
pub use sturm::{
    count_roots, isolate_real_roots, isolate_real_roots_tol, refine, root_bound, sturm_sequence,
    variations, RootInterval,
};

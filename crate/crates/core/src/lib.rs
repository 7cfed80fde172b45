//! Hypothesis checking for Hasse-principle theorems on Kummer surfaces over Q.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, polynomials over Q and F_p, resultants, factorization
//!   mod p, real root isolation and arithmetic in Q\[x\]/(f).
//! * [`permgrp`]: permutation groups on at most 7 letters and Galois group
//!   certification for quartics and quintics.
//! * [`modf2`]: F2 G-modules, first cohomology, and the finite torsor models
//!   (semidirect products M^T ⋊ G) used to check the torsor lemmas.
//! * [`localarith`]: p-adic valuations, reduction types, Hensel lifting and the
//!   λ class tests.
//! * [`kumgeo`]: the Kummer surface equations (three quadrics in P^5 and the
//!   double cover z² = g1(x) g2(y)).
//! * [`locsol`]: local solubility over R and Q_p.
//! * [`pipeline`]: theorem-level orchestration and reports.
//!
//! Permutations act on the left: `(σ∘τ)(i) = σ(τ(i))`. See [`permgrp::Permutation`].

pub mod error;
pub mod exact;
pub mod kumgeo;
pub mod localarith;
pub mod locsol;
pub mod modf2;
pub mod permgrp;
pub mod pipeline;

pub use error::{Error, Result};
pub use exact::{FactorizationFp, PolyFp, PolyQ, Rational};
pub use kumgeo::{KummerSurfaceA, KummerSurfaceB, QuadricForm, ResolventData};
pub use localarith::{LambdaElement, PadicApprox, ReductionType};
pub use permgrp::{GaloisVerdict, PermGroup, Permutation};
pub use locsol::{LocalVerdict, Outcome, Place};
pub use modf2::{Cocycle, F2GModule, SemidirectGroup};
pub use pipeline::{Effort, TheoremReport};

//! Torsor lemmas checked on finite models M^T ⋊ G.

use serde::Serialize;

use super::cohom::{h1_dim, CocycleSpace};
use super::finite::{characters_to_f2, commutator_subgroup, generate, normal_subgroups, FiniteGroup};
use super::linalg::XorBasis;
use super::model::{Cocycle, SemidirectGroup};
use super::module::F2GModule;
use crate::error::{input, Error, Result};
use crate::permgrp::Permutation;

/// Largest model on which normal subgroups are enumerated.
pub const ENUMERATION_LIMIT: usize = 10_000;

fn require_simple_faithful(m: &F2GModule) -> Result<()> {
    if !m.is_simple() {
        return Err(Error::Precondition("module is not simple".into()));
    }
    if !m.is_faithful() {
        return Err(Error::Precondition("module is not faithful".into()));
    }
    Ok(())
}

/// Every normal subgroup H of M^n ⋊ G satisfies M^n ⊂ H or H ⊂ M^n.
pub fn check_lemma_f1(m: &F2GModule, n: usize) -> Result<bool> {
    require_simple_faithful(m)?;
    let model = SemidirectGroup::new(m.clone(), n)?;
    if model.order() > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!(
            "model of order {} exceeds {ENUMERATION_LIMIT}",
            model.order()
        )));
    }
    let kernel: Vec<usize> = (0..model.kernel_dim()).map(|j| model.element(1 << j, 0)).collect();
    Ok(normal_subgroups(&model).iter().all(|h| {
        kernel.iter().all(|&k| h.contains(k)) || h.elements().iter().all(|&x| model.project(x) == 0)
    }))
}

/// The five conditions, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropA1Report {
    /// Classes linearly independent in H^1 of the model.
    pub independent: bool,
    /// Classes form a basis of H^1(G_T, M).
    pub basis: bool,
    /// W_T -> M^T is bijective.
    pub kernel_iso: bool,
    /// (a_T, φ): G_T -> M^T ⋊ G is bijective.
    pub group_iso: bool,
    /// Each W_t is all of M and W_T -> ∏ W_t is bijective.
    pub disjoint: bool,
}

impl PropA1Report {
    pub fn all(&self) -> [bool; 5] {
        [self.independent, self.basis, self.kernel_iso, self.group_iso, self.disjoint]
    }

    pub fn all_equal(&self) -> bool {
        self.all().iter().all(|&b| b == self.independent)
    }
}

fn check_hypotheses(model: &SemidirectGroup) -> Result<()> {
    let m = model.module();
    if !m.is_simple() {
        return Err(Error::Precondition("M is not simple".into()));
    }
    if m.endomorphism_dim() != 1 {
        return Err(Error::Precondition("End_G(M) is not F2".into()));
    }
    if h1_dim(m)? != 0 {
        return Err(Error::Precondition("H^1(G, M) is nonzero".into()));
    }
    Ok(())
}

/// Evaluates the five equivalent conditions for cocycles α_t on a model Γ
/// that maps onto G.
///
/// G_T is the image of Γ under γ -> ((α_t(γ))_t, φ(γ)) in M^T ⋊ G, and
/// W_T = G_T ∩ M^T. Returns a contract error if the conditions disagree.
pub fn check_prop_a1(model: &SemidirectGroup, cocycles: &[Cocycle]) -> Result<PropA1Report> {
    check_hypotheses(model)?;
    let t = cocycles.len();
    if t == 0 {
        return input("at least one class is required");
    }
    if cocycles.iter().any(|c| c.values().len() != model.order()) {
        return input("cocycle does not live on this model");
    }
    let d = model.module().dim();
    let gens = model.generators();
    let gen_values = |c: &Cocycle| gens.iter().map(|&s| c.value(s)).collect::<Vec<u64>>();

    let on_model = CocycleSpace::new(model, &gens, d, |x| model.point_mat(x).clone());
    let values: Vec<Vec<u64>> = cocycles.iter().map(gen_values).collect();
    let independent = on_model.independent_classes(&values);

    let target = SemidirectGroup::new(model.module().clone(), t)?;
    let image = |x: usize| {
        let v = cocycles.iter().enumerate().fold(0u64, |acc, (k, c)| acc | c.value(x) << (k * d));
        target.element(v, model.project(x))
    };
    let img_gens: Vec<usize> = gens.iter().map(|&s| image(s)).collect();
    let gt = generate(&target, &img_gens);
    let w: Vec<u64> =
        gt.elements().iter().filter(|&&x| target.project(x) == 0).map(|&x| target.parts(x).0).collect();

    let on_gt = CocycleSpace::new(&target, &img_gens, d, |x| target.point_mat(x).clone());
    let proj_values: Vec<Vec<u64>> = (0..t)
        .map(|k| img_gens.iter().map(|&s| target.block(target.parts(s).0, k)).collect())
        .collect();
    let basis = on_gt.independent_classes(&proj_values) && on_gt.h1_dim() == t;

    let kernel_iso = w.len() == 1usize << target.kernel_dim();
    let group_iso = gt.order() == target.order();
    // Each W_t must be all of M (so K_t/K is a genuine M-extension) and W_T their product.
    let factor_ranks: Vec<usize> = (0..t)
        .map(|k| {
            let mut b = XorBasis::new(1);
            for &v in &w {
                b.insert(vec![target.block(v, k)]);
            }
            b.rank()
        })
        .collect();
    let disjoint = factor_ranks.iter().all(|&r| r == d) && w.len() == 1usize << (d * t);

    let report = PropA1Report { independent, basis, kernel_iso, group_iso, disjoint };
    if !report.all_equal() {
        return Err(Error::Contract(format!("conditions disagree: {:?}", report.all())));
    }
    Ok(report)
}

/// First γ over `g` (in index order) with α_t(γ) ≡ targets[t] mod (g-1)M for every t.
pub fn lift_with_targets(
    model: &SemidirectGroup,
    cocycles: &[Cocycle],
    g: &Permutation,
    targets: &[u64],
) -> Result<usize> {
    if targets.len() != cocycles.len() {
        return input(format!("{} targets for {} classes", targets.len(), cocycles.len()));
    }
    let report = check_prop_a1(model, cocycles)?;
    if !report.independent {
        return Err(Error::Precondition("classes are linearly dependent".into()));
    }
    let group = model.module().group();
    let gi = group.index_of(g).ok_or_else(|| Error::Input(format!("{g} is not in G")))?;
    let d = model.module().dim();
    if targets.iter().any(|&x| d < 64 && x >> d != 0) {
        return input("target outside M");
    }
    let image = model.module().mat(gi).add_identity().image();
    let same_class = |a: u64, b: u64| image.contains(vec![a ^ b]);
    (0..1u64 << model.kernel_dim())
        .map(|v| model.element(v, gi))
        .find(|&x| cocycles.iter().zip(targets).all(|(c, &tgt)| same_class(c.value(x), tgt)))
        .ok_or_else(|| Error::Contract(format!("no lift of {g} with the requested classes")))
}

/// Checks that the torsor with cocycle `a` (points M, action γ z = φ(γ) z + a(γ))
/// is connected and that no index-2 subgroup contains the stabiliser of a point.
pub fn torsor_field_no_quadratic_subext(model: &SemidirectGroup, a: &Cocycle) -> Result<bool> {
    if model.order() > ENUMERATION_LIMIT * 100 || model.generators().len() > 20 {
        return Err(Error::Resource(format!("model of order {} is too large", model.order())));
    }
    if a.values().len() != model.order() {
        return input("cocycle does not live on this model");
    }
    let d = model.module().dim();
    let mut orbit = vec![false; 1 << d];
    for &v in a.values() {
        orbit[v as usize] = true;
    }
    if !orbit.iter().all(|&b| b) {
        return Ok(false);
    }
    let stabiliser: Vec<usize> = (0..model.order()).filter(|&x| a.value(x) == 0).collect();
    Ok(characters_to_f2(model).iter().all(|chi| stabiliser.iter().any(|&x| chi[x])))
}

/// M^n ⊂ [Γ, Γ] for Γ = M^n ⋊ G, so Γ and G have the same abelianization.
pub fn abelianization_check(model: &SemidirectGroup) -> Result<bool> {
    if model.point_order() == 1 {
        return Err(Error::Precondition("G is trivial".into()));
    }
    require_simple_faithful(model.module())?;
    let c = commutator_subgroup(model);
    Ok((0..model.kernel_dim()).all(|j| c.contains(model.element(1 << j, 0))))
}

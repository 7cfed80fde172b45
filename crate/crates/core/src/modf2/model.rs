//! Finite models M^n ⋊ G and cocycles on them.

use super::finite::FiniteGroup;
use super::linalg::Mat;
use super::module::{F2GModule, MAX_DIM};
use crate::error::{input, Error, Result};

/// Largest semidirect product that may be built.
pub const MODEL_ORDER_LIMIT: usize = 1 << 22;

/// Cached multiplication table of G when it is small enough.
const TABLE_LIMIT: usize = 1024;

/// M^n ⋊ G with (v, g)(w, h) = (v + g w, g h).
///
/// Element (v, g) has index `v * |G| + g`, where bit `c * dim + j` of `v` is
/// coordinate j of copy c. The identity is index 0.
#[derive(Clone, Debug)]
pub struct SemidirectGroup {
    module: F2GModule,
    copies: usize,
    gorder: usize,
    order: usize,
    table: Option<Vec<u32>>,
    ginv: Vec<usize>,
}

impl SemidirectGroup {
    pub fn new(module: F2GModule, copies: usize) -> Result<Self> {
        let bits = copies * module.dim();
        if bits > MAX_DIM || bits >= usize::BITS as usize {
            return input(format!("M^{copies} has dimension {bits} > {MAX_DIM}"));
        }
        let gorder = module.group().order();
        let order = (1usize << bits)
            .checked_mul(gorder)
            .filter(|&o| o <= MODEL_ORDER_LIMIT)
            .ok_or_else(|| Error::Resource(format!("M^{copies} ⋊ G exceeds {MODEL_ORDER_LIMIT} elements")))?;
        let g = module.group();
        let table = (gorder <= TABLE_LIMIT).then(|| {
            (0..gorder).flat_map(|a| (0..gorder).map(move |b| (a, b))).map(|(a, b)| g.mul(a, b) as u32).collect()
        });
        let ginv = (0..gorder).map(|a| g.inv(a)).collect();
        Ok(SemidirectGroup { module, copies, gorder, order, table, ginv })
    }

    pub fn module(&self) -> &F2GModule {
        &self.module
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// dim M^n
    pub fn kernel_dim(&self) -> usize {
        self.copies * self.module.dim()
    }

    pub fn point_order(&self) -> usize {
        self.gorder
    }

    pub fn element(&self, v: u64, g: usize) -> usize {
        v as usize * self.gorder + g
    }

    pub fn parts(&self, x: usize) -> (u64, usize) {
        ((x / self.gorder) as u64, x % self.gorder)
    }

    /// Image in G.
    pub fn project(&self, x: usize) -> usize {
        x % self.gorder
    }

    /// Copy `c` of `v`.
    pub fn block(&self, v: u64, c: usize) -> u64 {
        let d = self.module.dim();
        (v >> (c * d)) & ((1u64 << d) - 1)
    }

    /// g acting diagonally on M^n.
    pub fn act(&self, g: usize, v: u64) -> u64 {
        let d = self.module.dim();
        let m = self.module.mat(g);
        (0..self.copies).fold(0u64, |acc, c| acc | (m.apply(self.block(v, c)) << (c * d)))
    }

    /// Matrix of x acting on M through its image in G.
    pub fn point_mat(&self, x: usize) -> &Mat {
        self.module.mat(self.project(x))
    }

    fn gmul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.gorder + b] as usize,
            None => self.module.group().mul(a, b),
        }
    }
}

impl FiniteGroup for SemidirectGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (v, g) = self.parts(a);
        let (w, h) = self.parts(b);
        self.element(v ^ self.act(g, w), self.gmul(g, h))
    }

    fn inv(&self, a: usize) -> usize {
        let (v, g) = self.parts(a);
        let gi = self.ginv[g];
        self.element(self.act(gi, v), gi)
    }

    /// (0, s) for the generators s of G, then (e_j, 1) for every basis vector of M^n.
    fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self.module.group().generator_indices();
        gens.extend((0..self.kernel_dim()).map(|j| self.element(1 << j, 0)));
        gens
    }
}

/// A 1-cocycle on a model with values in M (one copy), acting through the
/// projection to G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    values: Vec<u64>,
}

impl Cocycle {
    /// Checks c(x s) = c(x) + x c(s) for every element x and generator s, which
    /// is equivalent to the identity on all pairs.
    pub fn new(model: &SemidirectGroup, values: Vec<u64>) -> Result<Self> {
        if values.len() != model.order() {
            return input(format!("{} values for a group of order {}", values.len(), model.order()));
        }
        let mask = if model.module.dim() == 64 { u64::MAX } else { (1u64 << model.module.dim()) - 1 };
        if values.iter().any(|v| v & !mask != 0) {
            return input("cocycle value outside M");
        }
        let gens = model.generators();
        for x in 0..model.order() {
            let mx = model.point_mat(x);
            for &s in &gens {
                if values[model.mul(x, s)] != values[x] ^ mx.apply(values[s]) {
                    return input("values do not satisfy the cocycle identity");
                }
            }
        }
        Ok(Cocycle { values })
    }

    /// The identity c(xy) = c(x) + x c(y) on every pair.
    pub fn verify_full(&self, model: &SemidirectGroup) -> bool {
        let n = model.order();
        (0..n).all(|x| {
            let mx = model.point_mat(x);
            (0..n).all(|y| self.values[model.mul(x, y)] == self.values[x] ^ mx.apply(self.values[y]))
        })
    }

    /// (v, g) -> copy `c` of v.
    pub fn projection(model: &SemidirectGroup, c: usize) -> Result<Self> {
        if c >= model.copies {
            return input(format!("copy {c} out of range"));
        }
        let values = (0..model.order()).map(|x| model.block(model.parts(x).0, c)).collect();
        Ok(Cocycle { values })
    }

    /// x -> x m + m.
    pub fn coboundary(model: &SemidirectGroup, m: u64) -> Self {
        Cocycle { values: (0..model.order()).map(|x| model.point_mat(x).apply(m) ^ m).collect() }
    }

    pub fn zero(model: &SemidirectGroup) -> Self {
        Cocycle { values: vec![0; model.order()] }
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        Cocycle { values: self.values.iter().zip(&other.values).map(|(a, b)| a ^ b).collect() }
    }

    pub fn value(&self, x: usize) -> u64 {
        self.values[x]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modf2::finite::normal_subgroups;
    use crate::permgrp::PermGroup;
    use proptest::prelude::*;

    fn s3_model(n: usize) -> SemidirectGroup {
        SemidirectGroup::new(F2GModule::zero_sum(3).unwrap(), n).unwrap()
    }

    #[test]
    fn s3_model_is_s4() {
        let g = s3_model(1);
        assert_eq!(g.order(), 24);
        // Oracle: S4 has exactly the normal subgroup orders 1, 4, 12, 24.
        let orders: Vec<usize> = normal_subgroups(&g).iter().map(|h| h.order()).collect();
        let s4 = PermGroup::symmetric(4).unwrap();
        let s4_orders: Vec<usize> = normal_subgroups(&s4).iter().map(|h| h.order()).collect();
        assert_eq!(orders, s4_orders);
    }

    #[test]
    fn group_axioms() {
        let g = s3_model(2);
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
            for b in (0..n).step_by(7) {
                for c in (0..n).step_by(11) {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
                assert_eq!(g.project(g.mul(a, b)), g.module().group().mul(g.project(a), g.project(b)));
            }
        }
    }

    #[test]
    fn constructed_cocycles_pass_full_verification() {
        let g = s3_model(2);
        for c in 0..2 {
            assert!(Cocycle::projection(&g, c).unwrap().verify_full(&g));
        }
        for m in 0..4 {
            assert!(Cocycle::coboundary(&g, m).verify_full(&g));
        }
        let bad = Cocycle { values: vec![1; g.order()] };
        assert!(!bad.verify_full(&g));
        assert!(Cocycle::new(&g, bad.values.clone()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn generator_check_agrees_with_full_check(mask in 0u64..4, m in 0u64..4, flip in 0usize..96) {
            let g = s3_model(2);
            let mut c = Cocycle::coboundary(&g, m);
            if mask & 1 == 1 {
                c = c.add(&Cocycle::projection(&g, 0).unwrap());
            }
            if mask & 2 == 2 {
                c = c.add(&Cocycle::projection(&g, 1).unwrap());
            }
            prop_assert!(c.verify_full(&g));
            prop_assert!(Cocycle::new(&g, c.values.clone()).is_ok());
            let mut broken = c.values.clone();
            broken[flip] ^= 1;
            prop_assert_eq!(Cocycle::new(&g, broken.clone()).is_ok(), Cocycle { values: broken }.verify_full(&g));
        }
    }
}

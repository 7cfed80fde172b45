//! F2[G]-modules for permutation groups G.

use std::collections::VecDeque;
use std::sync::Arc;

use super::linalg::{set_bit, words_for, Mat, XorBasis};
use crate::error::{input, Error, Result};
use crate::permgrp::{PermGroup, Permutation};

/// Largest module dimension; vectors are `u64` bitmasks.
pub const MAX_DIM: usize = 64;

/// A finite-dimensional F2 representation of a permutation group.
///
/// `mats[i]` is the matrix of `group.element(i)`; the constructor builds it
/// from the generator matrices and rejects inconsistent input.
#[derive(Clone, Debug)]
pub struct F2GModule {
    group: Arc<PermGroup>,
    dim: usize,
    gen_mats: Vec<Mat>,
    mats: Vec<Mat>,
}

impl PartialEq for F2GModule {
    fn eq(&self, other: &Self) -> bool {
        self.group.elements() == other.group.elements() && self.mats == other.mats
    }
}

impl Eq for F2GModule {}

impl F2GModule {
    pub fn new(group: Arc<PermGroup>, dim: usize, gen_mats: Vec<Mat>) -> Result<Self> {
        if dim > MAX_DIM {
            return input(format!("module dimension {dim} exceeds {MAX_DIM}"));
        }
        if gen_mats.len() != group.generators().len() {
            return input(format!(
                "{} generator matrices for {} generators",
                gen_mats.len(),
                group.generators().len()
            ));
        }
        if gen_mats.iter().any(|m| m.dim() != dim) {
            return input(format!("generator matrices must be {dim}x{dim}"));
        }
        let gen_idx = group.generator_indices();
        let mut mats: Vec<Option<Mat>> = vec![None; group.order()];
        mats[0] = Some(Mat::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = mats[x].clone().unwrap();
            for (s, ms) in gen_idx.iter().zip(&gen_mats) {
                let y = group.mul(*s, x);
                let my = ms.mul(&mx);
                match &mats[y] {
                    None => {
                        mats[y] = Some(my);
                        queue.push_back(y);
                    }
                    Some(m) if *m != my => {
                        return input("generator matrices do not satisfy the relations of the group");
                    }
                    _ => {}
                }
            }
        }
        let mats = mats.into_iter().map(Option::unwrap).collect();
        Ok(F2GModule { group, dim, gen_mats, mats })
    }

    /// F2^m with G permuting coordinates: g e_i = e_{g(i)}.
    pub fn permutation_module(group: Arc<PermGroup>) -> Self {
        let m = group.degree();
        let gen_mats = group
            .generators()
            .iter()
            .map(|g| Mat::from_cols(m, (0..m).map(|i| 1u64 << g.apply(i)).collect()))
            .collect();
        Self::new(group, m, gen_mats).expect("permutation action is a homomorphism")
    }

    /// Zero-sum vectors of each orbit, summed over orbits. For a transitive
    /// group on m letters this is the kernel of the sum map F2^m -> F2.
    ///
    /// Basis: `e_i + e_r` for each orbit with last letter r and each other letter i.
    pub fn zero_sum_of(group: Arc<PermGroup>) -> Self {
        let orbits = group.orbits();
        let mut basis = Vec::new();
        for o in &orbits {
            let r = *o.iter().max().unwrap();
            basis.extend(o.iter().filter(|&&i| i != r).map(|&i| (1u64 << i) | (1u64 << r)));
        }
        Self::submodule_in_basis(group, &basis)
    }

    /// The zero-sum submodule of F2^m under S_m, m odd.
    pub fn zero_sum(m: usize) -> Result<Self> {
        if m % 2 == 0 || m < 3 {
            return input(format!("zero-sum module needs an odd number of letters >= 3, got {m}"));
        }
        Ok(Self::zero_sum_of(Arc::new(PermGroup::symmetric(m)?)))
    }

    /// Restriction of the permutation action to a G-stable subspace with the given basis.
    fn submodule_in_basis(group: Arc<PermGroup>, basis: &[u64]) -> Self {
        let d = basis.len();
        let coords = |w: u64| -> u64 {
            // Solve w = sum c_k basis[k] by elimination over the basis vectors.
            let mut rows: Vec<(u64, u64)> = basis.iter().enumerate().map(|(k, &v)| (v, 1u64 << k)).collect();
            let mut target = (w, 0u64);
            for i in 0..rows.len() {
                let Some(piv) = (0..64).rev().find(|&bit| rows[i].0 >> bit & 1 == 1) else { continue };
                for j in 0..rows.len() {
                    if j != i && rows[j].0 >> piv & 1 == 1 {
                        rows[j].0 ^= rows[i].0;
                        rows[j].1 ^= rows[i].1;
                    }
                }
                if target.0 >> piv & 1 == 1 {
                    target.0 ^= rows[i].0;
                    target.1 ^= rows[i].1;
                }
            }
            debug_assert_eq!(target.0, 0, "vector outside the submodule");
            target.1
        };
        let gen_mats = group
            .generators()
            .iter()
            .map(|g| {
                let perm = |v: u64| (0..64).filter(|i| v >> i & 1 == 1).fold(0u64, |a, i| a | 1u64 << g.apply(i));
                Mat::from_cols(d, basis.iter().map(|&v| coords(perm(v))).collect())
            })
            .collect();
        Self::new(group, d, gen_mats).expect("submodule of a permutation module")
    }

    /// G acting trivially on F2^dim.
    pub fn trivial(group: Arc<PermGroup>, dim: usize) -> Result<Self> {
        let n = group.generators().len();
        Self::new(group, dim, vec![Mat::identity(dim); n])
    }

    pub fn direct_sum(&self, other: &F2GModule) -> Result<Self> {
        if self.group.elements() != other.group.elements() || self.group.generators() != other.group.generators() {
            return input("direct sum needs modules over the same group");
        }
        let d = self.dim + other.dim;
        if d > MAX_DIM {
            return input(format!("module dimension {d} exceeds {MAX_DIM}"));
        }
        let gen_mats = self
            .gen_mats
            .iter()
            .zip(&other.gen_mats)
            .map(|(a, b)| {
                let mut cols = a.cols().to_vec();
                cols.extend(b.cols().iter().map(|c| c << self.dim));
                Mat::from_cols(d, cols)
            })
            .collect();
        Self::new(self.group.clone(), d, gen_mats)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn generator_matrices(&self) -> &[Mat] {
        &self.gen_mats
    }

    /// Matrix of the element with index `i`.
    pub fn mat(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn mat_of(&self, g: &Permutation) -> Result<&Mat> {
        match self.group.index_of(g) {
            Some(i) => Ok(&self.mats[i]),
            None => input(format!("{g} is not in the group")),
        }
    }

    /// Only the identity acts as the identity matrix.
    pub fn is_faithful(&self) -> bool {
        self.mats.iter().skip(1).all(|m| !m.is_identity())
    }

    /// Span of the G-orbit of `v`.
    pub fn spin(&self, v: u64) -> XorBasis {
        let mut b = XorBasis::new(1);
        let mut queue = VecDeque::new();
        if b.insert(vec![v]) {
            queue.push_back(v);
        }
        while let Some(w) = queue.pop_front() {
            for m in &self.gen_mats {
                let u = m.apply(w);
                if b.insert(vec![u]) {
                    queue.push_back(u);
                }
            }
        }
        b
    }

    /// Every nonzero vector generates the whole module; cost is 2^dim spins.
    /// The zero module is not simple.
    pub fn is_simple(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        (1u64..1 << self.dim).all(|v| self.spin(v).rank() == self.dim)
    }

    /// dim over F2 of the matrices commuting with every generator.
    pub fn endomorphism_dim(&self) -> usize {
        let d = self.dim;
        let n = d * d;
        let words = words_for(n);
        let mut eqs = XorBasis::new(words);
        // Unknown X[i][k] has index i*d + k; (XA + AX)[i][j] = 0 for every generator A.
        for a in &self.gen_mats {
            for i in 0..d {
                for j in 0..d {
                    let mut row = vec![0u64; words];
                    for k in 0..d {
                        if a.entry(k, j) {
                            set_bit(&mut row, i * d + k);
                        }
                        if a.entry(i, k) {
                            set_bit(&mut row, k * d + j);
                        }
                    }
                    eqs.insert(row);
                }
            }
        }
        n - eqs.rank()
    }

    /// dim M/(g-1)M.
    pub fn coinvariant_dim(&self, g: &Permutation) -> Result<usize> {
        Ok(self.dim - self.mat_of(g)?.add_identity().rank())
    }

    /// Local H^1 of an unramified place with Frobenius `frob`: 2 dim M/(frob-1).
    pub fn local_h1_dim(&self, frob: &Permutation) -> Result<usize> {
        let a = self.mat_of(frob)?.add_identity();
        let coker = self.dim - a.rank();
        let ker = (0u64..1 << self.dim.min(20)).filter(|&v| a.apply(v) == 0).count();
        if self.dim <= 20 && ker != 1 << coker {
            return Err(Error::Contract(format!("ker(frob-1) has {ker} elements but coker has dimension {coker}")));
        }
        Ok(2 * coker)
    }
}

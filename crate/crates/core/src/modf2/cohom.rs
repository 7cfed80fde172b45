//! First cohomology H^1(G, M) over F2.

use std::collections::{HashMap, VecDeque};

use super::finite::FiniteGroup;
use super::linalg::{set_bit, words_for, Mat, XorBasis};
use super::module::F2GModule;
use crate::error::{Error, Result};

/// Largest group order accepted by [`h1_dim`].
pub const H1_ORDER_LIMIT: usize = 10_000;

/// A 1-cochain restricted to a generating set: `values[k]` is c(gens[k]).
pub(crate) fn generator_vector(values: &[u64], dim: usize) -> Vec<u64> {
    let mut row = vec![0u64; words_for(values.len() * dim)];
    for (k, &v) in values.iter().enumerate() {
        for j in 0..dim {
            if v >> j & 1 == 1 {
                set_bit(&mut row, k * dim + j);
            }
        }
    }
    row
}

/// Linear systems for Z^1 and B^1 on the subgroup generated by `gens`, with
/// `act(x)` the matrix of `x`. Cocycles are encoded by their values on `gens`.
pub(crate) struct CocycleSpace {
    pub dim: usize,
    /// Relations every cocycle satisfies.
    pub relations: XorBasis,
    pub coboundaries: XorBasis,
    unknowns: usize,
}

impl CocycleSpace {
    pub fn new<G, F>(group: &G, gens: &[usize], dim: usize, act: F) -> Self
    where
        G: FiniteGroup + ?Sized,
        F: Fn(usize) -> Mat,
    {
        let unknowns = gens.len() * dim;
        let words = words_for(unknowns);
        // c(x) as `dim` rows of coefficients over the unknowns.
        let mut value: HashMap<usize, Vec<Vec<u64>>> = HashMap::new();
        value.insert(0, vec![vec![0u64; words]; dim]);
        let mut relations = XorBasis::new(words);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let ax = act(x);
            let cx = value[&x].clone();
            for (k, &s) in gens.iter().enumerate() {
                // c(xs) = c(x) + x c(s)
                let mut expr = cx.clone();
                for (i, row) in expr.iter_mut().enumerate() {
                    for j in 0..dim {
                        if ax.entry(i, j) {
                            set_bit(row, k * dim + j);
                        }
                    }
                }
                let y = group.mul(x, s);
                match value.get(&y) {
                    None => {
                        value.insert(y, expr);
                        queue.push_back(y);
                    }
                    Some(cy) => {
                        for (a, b) in expr.iter().zip(cy) {
                            let diff: Vec<u64> = a.iter().zip(b).map(|(p, q)| p ^ q).collect();
                            relations.insert(diff);
                        }
                    }
                }
            }
        }
        let mut coboundaries = XorBasis::new(words);
        let gen_mats: Vec<Mat> = gens.iter().map(|&s| act(s).add_identity()).collect();
        for j in 0..dim {
            let vals: Vec<u64> = gen_mats.iter().map(|m| m.apply(1 << j)).collect();
            coboundaries.insert(generator_vector(&vals, dim));
        }
        CocycleSpace { dim, relations, coboundaries, unknowns }
    }

    pub fn z1_dim(&self) -> usize {
        self.unknowns - self.relations.rank()
    }

    pub fn h1_dim(&self) -> usize {
        self.z1_dim() - self.coboundaries.rank()
    }

    /// Whether the cocycles with the given generator values have linearly
    /// independent classes.
    pub fn independent_classes(&self, cocycles: &[Vec<u64>]) -> bool {
        let mut b = self.coboundaries.clone();
        cocycles.iter().all(|c| b.insert(generator_vector(c, self.dim)))
    }
}

/// dim H^1(G, M), from cocycles on generators subject to the relations read off
/// the Cayley graph.
pub fn h1_dim(m: &F2GModule) -> Result<usize> {
    let g = m.group().as_ref();
    if g.order() > H1_ORDER_LIMIT {
        return Err(Error::Resource(format!("group of order {} exceeds {H1_ORDER_LIMIT}", g.order())));
    }
    let gens = FiniteGroup::generators(g);
    Ok(CocycleSpace::new(g, &gens, m.dim(), |x| m.mat(x).clone()).h1_dim())
}

/// dim H^1(G, M) from full cochain tables: Z^1 = ker(C^1 -> C^2), B^1 = im(C^0 -> C^1).
/// Quadratic in |G|; used as an independent check on small groups.
pub fn h1_dim_full_table(m: &F2GModule) -> usize {
    let g = m.group().as_ref();
    let n = g.order();
    let d = m.dim();
    let words = words_for(n * d);
    let bit = |x: usize, j: usize| x * d + j;
    let mut eqs = XorBasis::new(words);
    for x in 0..n {
        let mx = m.mat(x);
        for y in 0..n {
            let xy = g.mul(x, y);
            // c(xy) + c(x) + x c(y) = 0, coordinate i
            for i in 0..d {
                let mut row = vec![0u64; words];
                set_bit(&mut row, bit(xy, i));
                set_bit(&mut row, bit(x, i));
                for j in 0..d {
                    if mx.entry(i, j) {
                        set_bit(&mut row, bit(y, j));
                    }
                }
                eqs.insert(row);
            }
        }
    }
    let mut cob = XorBasis::new(words);
    for j in 0..d {
        let mut row = vec![0u64; words];
        for x in 0..n {
            let v = m.mat(x).apply(1 << j) ^ (1 << j);
            for i in 0..d {
                if v >> i & 1 == 1 {
                    set_bit(&mut row, bit(x, i));
                }
            }
        }
        cob.insert(row);
    }
    n * d - eqs.rank() - cob.rank()
}

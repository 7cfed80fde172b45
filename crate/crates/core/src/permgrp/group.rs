use std::collections::{BTreeMap, HashMap, VecDeque};

use super::perm::{Permutation, MAX_DEGREE};
use crate::error::{input, Result};

/// A permutation group with its full element list.
///
/// `elements()[0]` is the identity; the rest follow BFS order from the
/// generators, which makes element indices deterministic.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|e| other.contains(e))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Group generated by `generators`. At least one generator is required;
    /// use [`PermGroup::closure_with_degree`] for the trivial group.
    pub fn closure(generators: &[Permutation]) -> Result<Self> {
        match generators.first() {
            Some(g) => Self::closure_with_degree(g.degree(), generators),
            None => input("closure needs at least one generator or an explicit degree"),
        }
    }

    pub fn closure_with_degree(m: usize, generators: &[Permutation]) -> Result<Self> {
        if m > MAX_DEGREE {
            return input(format!("degree {m} > {MAX_DEGREE}"));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != m) {
            return input(format!("generator {g} has degree {} but {m} was expected", g.degree()));
        }
        let id = Permutation::identity(m);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let h = g.compose(&elements[i]);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup { degree: m, generators: generators.to_vec(), elements, index })
    }

    pub fn trivial(m: usize) -> Self {
        Self::closure_with_degree(m, &[]).expect("degree checked by caller")
    }

    pub fn symmetric(m: usize) -> Result<Self> {
        if m <= 1 {
            return Self::closure_with_degree(m, &[]);
        }
        let t = Permutation::from_cycles(m, &[&[0, 1]])?;
        let cyc: Vec<usize> = (0..m).collect();
        let c = Permutation::from_cycles(m, &[&cyc])?;
        Self::closure(&[t, c])
    }

    pub fn alternating(m: usize) -> Result<Self> {
        let gens: Vec<Permutation> = (0..m.saturating_sub(2))
            .map(|i| Permutation::from_cycles(m, &[&[i, i + 1, i + 2]]))
            .collect::<Result<_>>()?;
        Self::closure_with_degree(m, &gens)
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        let cyc: Vec<usize> = (0..m).collect();
        Self::closure_with_degree(m, &[Permutation::from_cycles(m, &[&cyc])?])
    }

    /// The affine group x -> ax + b of F_5, generated by (0 1 2 3 4) and (1 2 4 3).
    pub fn aff5() -> Self {
        let t = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let a = Permutation::from_cycles(5, &[&[1, 2, 4, 3]]).unwrap();
        Self::closure(&[t, a]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Indices of the generators in the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(j) = stack.pop() {
            for g in &self.generators {
                let k = g.apply(j);
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        (0..self.degree).filter(|&k| seen[k]).collect()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.degree {
            if !out.iter().any(|o| o.contains(&i)) {
                out.push(self.orbit(i));
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Multiset of cycle types, keyed by partition.
    pub fn cycle_types(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for e in &self.elements {
            *out.entry(e.cycle_type()).or_insert(0) += 1;
        }
        out
    }

    /// Whether some element has the given cycle type.
    pub fn has_cycle_type(&self, t: &[usize]) -> bool {
        self.elements.iter().any(|e| e.cycle_type() == t)
    }
}

//! Finite groups given by a multiplication oracle on element indices, and the
//! subgroup computations the torsor checks need.

use std::collections::VecDeque;

use crate::permgrp::PermGroup;

/// A finite group whose elements are `0..order()`, with 0 the identity.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn generators(&self) -> Vec<usize>;
}

impl FiniteGroup for PermGroup {
    fn order(&self) -> usize {
        PermGroup::order(self)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        PermGroup::mul(self, a, b)
    }

    fn inv(&self, a: usize) -> usize {
        PermGroup::inv(self, a)
    }

    fn generators(&self) -> Vec<usize> {
        self.generator_indices()
    }
}

/// A subgroup as a membership mask plus its elements in BFS order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Subgroup generated by `gens`.
pub fn generate<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize]) -> Subgroup {
    let mut members = vec![false; g.order()];
    members[0] = true;
    let mut elements = vec![0];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !members[y] {
                members[y] = true;
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    Subgroup { members, elements, generators: gens.to_vec() }
}

/// Smallest subgroup containing `h` and every element of `extra`.
pub fn join<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, extra: &[usize]) -> Subgroup {
    let mut cur = h.clone();
    for &x in extra {
        if !cur.contains(x) {
            let mut gens = cur.generators.clone();
            gens.push(x);
            cur = generate(g, &gens);
        }
    }
    cur
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, set: &[usize]) -> Subgroup {
    let outer = g.generators();
    let mut cur = join(g, &generate(g, &[]), set);
    loop {
        let conj: Vec<usize> = cur
            .generators
            .iter()
            .flat_map(|&h| outer.iter().map(move |&s| (h, s)))
            .map(|(h, s)| g.mul(g.mul(s, h), g.inv(s)))
            .filter(|&x| !cur.contains(x))
            .collect();
        if conj.is_empty() {
            return cur;
        }
        cur = join(g, &cur, &conj);
    }
}

pub fn commutator_subgroup<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    let gens = g.generators();
    let comms: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))))
        .collect();
    normal_closure(g, &comms)
}

/// Conjugacy classes, ordered by smallest element.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let inv: Vec<usize> = gens.iter().map(|&s| g.inv(s)).collect();
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for (s, si) in gens.iter().zip(&inv) {
                let z = g.mul(g.mul(*s, y), *si);
                if !seen[z] {
                    seen[z] = true;
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// All normal subgroups, as joins of normal closures of conjugacy classes.
/// Sorted by order, then by element set.
pub fn normal_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let classes = conjugacy_classes(g);
    let mut found = vec![generate(g, &[])];
    let mut i = 0;
    while i < found.len() {
        let n = found[i].clone();
        for c in &classes {
            if n.contains(c[0]) {
                continue;
            }
            let j = join(g, &n, c);
            if !found.iter().any(|f| f.members == j.members) {
                found.push(j);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.order().cmp(&b.order()).then_with(|| {
            let (mut x, mut y) = (a.elements.clone(), b.elements.clone());
            x.sort_unstable();
            y.sort_unstable();
            x.cmp(&y)
        })
    });
    found
}

/// Nontrivial homomorphisms to Z/2 as element labels, found by trying every
/// assignment of values on the generators.
pub fn characters_to_f2<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Vec<bool>> {
    let gens = g.generators();
    let mut out = Vec::new();
    for mask in 1u64..1 << gens.len() {
        let mut label: Vec<Option<bool>> = vec![None; g.order()];
        label[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop_front() {
            let lx = label[x].unwrap();
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let ly = lx ^ (mask >> k & 1 == 1);
                match label[y] {
                    None => {
                        label[y] = Some(ly);
                        queue.push_back(y);
                    }
                    Some(v) if v != ly => {
                        ok = false;
                        break 'bfs;
                    }
                    _ => {}
                }
            }
        }
        if ok {
            let chi: Vec<bool> = label.into_iter().map(Option::unwrap).collect();
            if chi.iter().any(|&b| b) && !out.contains(&chi) {
                out.push(chi);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_normal_subgroups() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let orders: Vec<usize> = normal_subgroups(&s4).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(conjugacy_classes(&s4).len(), 5);
        assert_eq!(commutator_subgroup(&s4).order(), 12);
        assert_eq!(characters_to_f2(&s4).len(), 1);
    }

    #[test]
    fn characters_of_klein_group() {
        use crate::permgrp::Permutation;
        let a = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[2, 3]]).unwrap();
        let v = PermGroup::closure(&[a, b]).unwrap();
        assert_eq!(characters_to_f2(&v).len(), 3);
        assert_eq!(normal_subgroups(&v).len(), 5);
    }

    /// Oracle: brute-force normality test over all subgroups generated by two elements.
    #[test]
    fn normal_subgroups_match_brute_force() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let ns = normal_subgroups(&s4);
        let n = s4.order();
        for a in 0..n {
            for b in 0..n {
                let h = generate(&s4, &[a, b]);
                let normal = (0..n).all(|x| {
                    h.elements().iter().all(|&y| h.contains(s4.mul(s4.mul(x, y), s4.inv(x))))
                });
                let listed = ns.iter().any(|m| m.members == h.members);
                assert_eq!(normal, listed, "{a} {b}");
            }
        }
    }
}

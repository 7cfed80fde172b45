use std::fmt;

use serde::Serialize;

use crate::error::{input, Result};

/// Largest supported number of letters.
pub const MAX_DEGREE: usize = 7;

/// A permutation of `{0, .., m-1}` stored by images.
///
/// Permutations act on the left and compose as functions:
/// `a.compose(&b)` is `a ∘ b`, so `a.compose(&b).apply(i) == a.apply(b.apply(i))`.
/// Every module in the crate relies on this convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m > MAX_DEGREE {
            return input(format!("permutations of degree {m} > {MAX_DEGREE} are not supported"));
        }
        let mut seen = [false; MAX_DEGREE];
        for &i in &images {
            if i >= m || seen[i] {
                return input(format!("{images:?} is not a permutation"));
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u8).collect() })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (0..m as u8).collect() }
    }

    /// Product of the given cycles (disjoint or not, applied right to left).
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(m);
        for c in cycles.iter().rev() {
            let mut img: Vec<usize> = (0..m).collect();
            for (k, &i) in c.iter().enumerate() {
                if i >= m {
                    return input(format!("cycle entry {i} out of range for degree {m}"));
                }
                img[i] = c[(k + 1) % c.len()];
            }
            let cyc = Self::new(img)?;
            acc = cyc.compose(&acc);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

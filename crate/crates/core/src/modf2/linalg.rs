//! Dense linear algebra over F2.
//!
//! Vectors of length at most 64 are `u64` bitmasks (bit i = coordinate i).
//! Longer rows used in linear systems are `Vec<u64>` words.

use serde::Serialize;

/// A square matrix over F2 stored by columns: `cols[j]` is the image of e_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mat {
    dim: usize,
    cols: Vec<u64>,
}

impl Mat {
    pub fn identity(dim: usize) -> Self {
        Mat { dim, cols: (0..dim).map(|j| 1u64 << j).collect() }
    }

    pub fn from_cols(dim: usize, cols: Vec<u64>) -> Self {
        debug_assert_eq!(cols.len(), dim);
        Mat { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.cols[j] >> i & 1 == 1
    }

    pub fn apply(&self, v: u64) -> u64 {
        let mut out = 0;
        let mut w = v;
        while w != 0 {
            let j = w.trailing_zeros() as usize;
            out ^= self.cols[j];
            w &= w - 1;
        }
        out
    }

    /// `self ∘ other`.
    pub fn mul(&self, other: &Mat) -> Mat {
        Mat { dim: self.dim, cols: other.cols.iter().map(|&c| self.apply(c)).collect() }
    }

    pub fn add_identity(&self) -> Mat {
        Mat { dim: self.dim, cols: self.cols.iter().enumerate().map(|(j, c)| c ^ (1 << j)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, &c)| c == 1 << j)
    }

    pub fn rank(&self) -> usize {
        let mut b = XorBasis::new(1);
        self.cols.iter().filter(|&&c| b.insert(vec![c])).count()
    }

    /// Column space as a basis.
    pub fn image(&self) -> XorBasis {
        let mut b = XorBasis::new(1);
        for &c in &self.cols {
            b.insert(vec![c]);
        }
        b
    }
}

/// Incremental row-echelon basis: `rows[h]` has highest set bit h.
#[derive(Clone, Debug)]
pub struct XorBasis {
    words: usize,
    rows: Vec<Option<Vec<u64>>>,
    rank: usize,
}

fn top_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| 64 * i + 63 - w.leading_zeros() as usize)
}

impl XorBasis {
    pub fn new(words: usize) -> Self {
        XorBasis { words, rows: vec![None; 64 * words], rank: 0 }
    }

    /// Inserts `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.words);
        while let Some(h) = top_bit(&v) {
            match &self.rows[h] {
                Some(r) => v.iter_mut().zip(r).for_each(|(a, b)| *a ^= b),
                None => {
                    self.rows[h] = Some(v);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for h in (0..64 * self.words).rev() {
            if v[h / 64] >> (h % 64) & 1 == 1 {
                if let Some(r) = &self.rows[h] {
                    v.iter_mut().zip(r).for_each(|(a, b)| *a ^= b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&w| w == 0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Number of 64-bit words needed for `bits` bits.
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64).max(1)
}

pub fn set_bit(v: &mut [u64], i: usize) {
    v[i / 64] ^= 1u64 << (i % 64);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let m = Mat::from_cols(3, vec![0b011, 0b110, 0b101]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.apply(0b111), 0);
        assert!(Mat::identity(4).is_identity());
        assert_eq!(m.mul(&Mat::identity(3)), m);
    }

    proptest! {
        #[test]
        fn rank_matches_subset_count(cols in prop::collection::vec(0u64..64, 1..7)) {
            let m = Mat::from_cols(cols.len(), cols.iter().map(|c| c & ((1 << cols.len()) - 1)).collect());
            // Oracle: the image has exactly 2^rank elements.
            let n = m.dim();
            let mut img: Vec<u64> = (0..1u64 << n).map(|v| m.apply(v)).collect();
            img.sort();
            img.dedup();
            prop_assert_eq!(img.len(), 1usize << m.rank());
        }

        #[test]
        fn reduce_is_membership(rows in prop::collection::vec(0u64..256, 0..6), v in 0u64..256) {
            let mut b = XorBasis::new(1);
            for r in &rows {
                b.insert(vec![*r]);
            }
            let span: Vec<u64> = (0..1u32 << rows.len())
                .map(|s| rows.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0, |a, (_, r)| a ^ r))
                .collect();
            prop_assert_eq!(b.contains(vec![v]), span.contains(&v));
        }
    }
}

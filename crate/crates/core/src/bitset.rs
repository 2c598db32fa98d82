//! Fixed-universe vertex sets backed by `u64` blocks.
//!
//! All graph algorithms in this crate manipulate subsets of a vertex set
//! `{0, .., n-1}` where `n` is fixed at construction time. Sets over
//! universes of at most 64 elements fit in a single word; that case is the
//! fast path used throughout the homology engine.

const BITS: usize = 64;

#[inline]
fn blocks_for(universe: usize) -> usize {
    universe.div_ceil(BITS)
}

/// A subset of `{0, .., universe-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; blocks_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, iter: I) -> Self {
        let mut s = Self::empty(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Interpret the low `universe` bits of `mask` as a set. Universe must be <= 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= BITS);
        debug_assert!(universe == BITS || mask < (1u64 << universe));
        VertexSet {
            universe,
            blocks: vec![mask],
        }
    }

    /// The single-word mask of this set. Panics if the universe exceeds 64.
    pub fn as_mask(&self) -> u64 {
        assert!(self.universe <= BITS);
        self.blocks[0]
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.blocks[v / BITS] |= 1 << (v % BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe);
        self.blocks[v / BITS] &= !(1 << (v % BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.blocks[v / BITS] >> (v % BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn min(&self) -> Option<usize> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(i * BITS + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for b in &mut out.blocks {
            *b = !*b;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            block: 0,
            bits: self.blocks.first().copied().unwrap_or(0),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mut out = VertexSet {
            universe: self.universe,
            blocks,
        };
        out.trim();
        out
    }

    /// Clear bits beyond the universe (after block-wise NOT).
    fn trim(&mut self) {
        let rem = self.universe % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.universe == 0 {
            self.blocks.clear();
        }
    }

    /// Members as 1-based indices, the convention of every file format.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    block: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.block * BITS + tz);
            }
            self.block += 1;
            if self.block >= self.set.blocks.len() {
                return None;
            }
            self.bits = self.set.blocks[self.block];
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

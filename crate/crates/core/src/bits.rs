//! Word-backed vertex sets.
//!
//! The search-heavy modules (minor detection, canonical labeling, enumeration)
//! work on adjacency *masks* rather than sorted neighbor lists. Two shapes are
//! used: a plain `u64` mask where the host is known to have at most 64
//! vertices (canonical forms, enumeration), and [`VertexSet`] — a small vector
//! of words — where the host can be arbitrarily large (minor search on
//! user-supplied graphs).

/// A set of vertices `0..n` stored as little-endian 64-bit words.
///
/// All binary operations require both operands to have the same word length;
/// sets produced by [`VertexSet::empty`] with the same universe size are
/// always compatible.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set over a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0u64; n.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    /// Lowest-index member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let bit = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set just large enough for the maximum element.
    /// Mostly for tests; algorithm code sizes sets off the host order.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let n = items.iter().max().map_or(0, |&m| m + 1);
        let mut s = VertexSet::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }
}

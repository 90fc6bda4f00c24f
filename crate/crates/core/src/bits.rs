//! Fixed-width bitset over poset element indices.
//!
//! 256 bits is plenty for desk-scale posets (a 6x6x6 box has 216 elements);
//! the poset constructors reject anything larger.

/// Maximum number of elements a poset may have.
pub const MAX_ELEMENTS: usize = 256;

const WORDS: usize = MAX_ELEMENTS / 64;

/// A set of element indices in `0..MAX_ELEMENTS`.
///
/// Ordering compares the underlying bits as one big little-endian integer
/// (bit `i` has weight `2^i`), which is the "bitset value" used for
/// deterministic tie-breaking in enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet {
    words: [u64; WORDS],
}

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet { words: [0; WORDS] };

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < MAX_ELEMENTS);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of set bits, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Most significant word first.
        for w in (0..WORDS).rev() {
            match self.words[w].cmp(&other.words[w]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_roundtrip() {
        let mut s = ElementSet::EMPTY;
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(255);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 255]);
        assert_eq!(s.len(), 4);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn ordering_is_bitset_value() {
        let a = ElementSet::from_indices([0]);
        let b = ElementSet::from_indices([1]);
        let c = ElementSet::from_indices([0, 1]);
        assert!(a < b && b < c);
        assert!(ElementSet::EMPTY < a);
        let hi = ElementSet::from_indices([200]);
        assert!(c < hi);
    }
}

//! Small index sets backed by a `u64` mask.
//!
//! Every carrier in this crate (poset elements, lattice elements, space
//! points) is index-addressed and capped at [`MAX_UNIVERSE`] elements, so a
//! machine word is enough for any subset that shows up.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub};

/// Largest carrier size supported by [`Subset`].
pub const MAX_UNIVERSE: usize = 64;

/// A subset of an index-addressed universe of at most 64 elements.
///
/// The universe size is carried by the owning structure, not the subset;
/// operations that need it (complement, full set) take it as an argument.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_UNIVERSE, "universe too large: {n}");
        if n == MAX_UNIVERSE {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        assert!(i < MAX_UNIVERSE);
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut s = Subset::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_UNIVERSE && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_UNIVERSE);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_UNIVERSE {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0) & Subset::full(n)
    }

    /// Iterates member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All `2^n` subsets of `{0, .., n-1}` in mask order.
    pub fn powerset(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < MAX_UNIVERSE, "powerset too large: 2^{n}");
        (0..1u64 << n).map(Subset)
    }

    /// Sort key giving the canonical family order: by size, then by the
    /// lexicographic order of the sorted member-index list.
    pub fn canonical_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.iter().collect())
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitOrAssign for Subset {
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitAndAssign for Subset {
    fn bitand_assign(&mut self, rhs: Subset) {
        self.0 &= rhs.0;
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        Subset::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([2, 3]);
        assert_eq!(a | b, Subset::from_indices([0, 2, 3]));
        assert_eq!(a & b, Subset::singleton(2));
        assert_eq!(a - b, Subset::singleton(0));
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.complement(4), Subset::from_indices([1, 3]));
        assert_eq!(a.len(), 2);
        assert!(Subset::EMPTY.is_subset_of(a));
        assert!(a.is_subset_of(Subset::full(4)));
    }

    #[test]
    fn powerset_counts() {
        assert_eq!(Subset::powerset(0).count(), 1);
        assert_eq!(Subset::powerset(5).count(), 32);
    }

    #[test]
    fn iter_order() {
        let s = Subset::from_indices([5, 1, 3]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
    }
}

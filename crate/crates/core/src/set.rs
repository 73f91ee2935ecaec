//! Word-sized bitsets.
//!
//! Carriers and prime collections are capped at 64 members, so every subset
//! fits in one `u64`. [`ElementSet`] indexes carrier elements, [`PointSet`]
//! indexes members of a filter collection (points of a topology).
//!
//! Both order canonically by cardinality first and then by the raw mask.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported carrier or collection size.
pub const MAX_BITS: usize = 64;

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
        pub struct $name(u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            pub const fn from_bits(bits: u64) -> Self {
                Self(bits)
            }

            pub const fn bits(self) -> u64 {
                self.0
            }

            /// `{0, .., n-1}`.
            pub fn full(n: usize) -> Self {
                debug_assert!(n <= MAX_BITS);
                if n >= MAX_BITS {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                debug_assert!(i < MAX_BITS);
                Self(1u64 << i)
            }

            pub fn contains(self, i: usize) -> bool {
                i < MAX_BITS && self.0 >> i & 1 == 1
            }

            pub fn insert(&mut self, i: usize) {
                debug_assert!(i < MAX_BITS);
                self.0 |= 1u64 << i;
            }

            pub fn remove(&mut self, i: usize) {
                if i < MAX_BITS {
                    self.0 &= !(1u64 << i);
                }
            }

            pub fn with(mut self, i: usize) -> Self {
                self.insert(i);
                self
            }

            pub fn without(mut self, i: usize) -> Self {
                self.remove(i);
                self
            }

            pub const fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub const fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub const fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            /// Complement relative to `{0, .., n-1}`.
            pub fn complement(self, n: usize) -> Self {
                Self::full(n).difference(self)
            }

            pub const fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub const fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub const fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            pub const fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            /// Smallest member, if any.
            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn iter(self) -> Bits {
                Bits(self.0)
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// All subsets of `self`, starting with the empty set.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let set = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let current = next?;
                    next = if current == set {
                        None
                    } else {
                        Some(current.wrapping_sub(set) & set)
                    };
                    Some(Self(current))
                })
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                self.len()
                    .cmp(&other.len())
                    .then_with(|| self.0.cmp(&other.0))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut set = Self::EMPTY;
                for i in iter {
                    set.insert(i);
                }
                set
            }
        }

        impl IntoIterator for $name {
            type Item = usize;
            type IntoIter = Bits;

            fn into_iter(self) -> Bits {
                self.iter()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset! {
    /// Subset of a carrier `{0, .., n-1}`.
    ElementSet
}

bitset! {
    /// Subset of the members of a filter collection.
    PointSet
}

/// Iterator over set bits in increasing order.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(64).len(), 64);
        let s: ElementSet = [1, 3].into_iter().collect();
        assert_eq!(s.complement(4).to_vec(), vec![0, 2]);
    }

    #[test]
    fn canonical_order_is_cardinality_first() {
        let big: ElementSet = [0].into_iter().collect();
        let small: ElementSet = [5].into_iter().collect();
        let pair: ElementSet = [0, 1].into_iter().collect();
        assert!(big < small);
        assert!(small < pair);
    }

    #[test]
    fn subsets_of_three() {
        let s: PointSet = [0, 2, 5].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], PointSet::EMPTY);
    }

    proptest! {
        #[test]
        fn iter_roundtrips(bits in any::<u64>()) {
            let s = ElementSet::from_bits(bits);
            let back: ElementSet = s.iter().collect();
            prop_assert_eq!(back, s);
            prop_assert_eq!(s.iter().len(), s.len());
        }

        #[test]
        fn de_morgan(a in any::<u64>(), b in any::<u64>()) {
            let (a, b) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
            prop_assert_eq!(
                a.union(b).complement(64),
                a.complement(64).intersection(b.complement(64))
            );
        }
    }
}

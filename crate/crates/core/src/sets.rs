//! Dense vertex and edge subsets.
//!
//! Both types are thin wrappers over [`FixedBitSet`] sized to the universe of
//! one graph. Iteration is always in increasing index order, which is what
//! gives every reported set a reproducible layout.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

macro_rules! dense_set {
    ($(#[$meta:meta])* $name:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name {
            bits: FixedBitSet,
        }

        impl $name {
            #[doc = concat!("Empty set over a universe of `universe` ", $what, " indices.")]
            pub fn new(universe: usize) -> Self {
                Self { bits: FixedBitSet::with_capacity(universe) }
            }

            #[doc = concat!("Set containing every ", $what, " of the universe.")]
            pub fn full(universe: usize) -> Self {
                let mut bits = FixedBitSet::with_capacity(universe);
                bits.insert_range(..);
                Self { bits }
            }

            /// Builds a set from member indices.
            ///
            /// # Panics
            /// If a member is outside the universe.
            pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
                let mut set = Self::new(universe);
                for m in members {
                    set.insert(m);
                }
                set
            }

            #[allow(dead_code)]
            pub(crate) fn from_word(universe: usize, word: u64) -> Self {
                let mut set = Self::new(universe);
                let mut rest = word;
                while rest != 0 {
                    set.insert(rest.trailing_zeros() as usize);
                    rest &= rest - 1;
                }
                set
            }

            pub fn universe(&self) -> usize {
                self.bits.len()
            }

            pub fn len(&self) -> usize {
                self.bits.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.bits.is_clear()
            }

            pub fn contains(&self, index: usize) -> bool {
                self.bits.contains(index)
            }

            /// # Panics
            /// If `index` is outside the universe.
            pub fn insert(&mut self, index: usize) {
                assert!(
                    index < self.bits.len(),
                    concat!($what, " index {} outside universe of {}"),
                    index,
                    self.bits.len()
                );
                self.bits.insert(index);
            }

            pub fn remove(&mut self, index: usize) {
                if index < self.bits.len() {
                    self.bits.set(index, false);
                }
            }

            /// Members in increasing order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.bits.ones()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn union_with(&mut self, other: &Self) {
                self.bits.union_with(&other.bits);
            }

            pub fn difference_with(&mut self, other: &Self) {
                self.bits.difference_with(&other.bits);
            }

            pub fn intersect_with(&mut self, other: &Self) {
                self.bits.intersect_with(&other.bits);
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.bits.is_subset(&other.bits)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.bits.is_disjoint(&other.bits)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (k, m) in self.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{m}")?;
                }
                f.write_str("}")
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.iter())
            }
        }
    };
}

dense_set!(
    /// Subset of the vertices of one graph.
    VertexSet,
    "vertex"
);

dense_set!(
    /// Subset of the edges of one graph, addressed by canonical edge index.
    EdgeSet,
    "edge"
);

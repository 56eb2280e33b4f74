use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Largest vertex label a `VertexSet` can hold.
pub const MAX_VERTEX: u32 = 64;

/// A set of vertices drawn from `1..=64`, stored as a bitmask.
///
/// Vertex `v` occupies bit `v - 1`. The derived `Ord` compares masks
/// numerically, which is the tie-break order used everywhere a canonical
/// choice among equal-cardinality sets is needed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full ground set `{1, ..., n}`.
    pub fn full(n: u32) -> VertexSet {
        assert!(n <= MAX_VERTEX, "ground set too large: {n}");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: u32) -> VertexSet {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex out of range: {v}");
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_members<I: IntoIterator<Item = u32>>(members: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in members {
            s = s.with(v);
        }
        s
    }

    /// Build directly from a bitmask (bit `v-1` encodes vertex `v`).
    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: u32) -> VertexSet {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: u32) -> VertexSet {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex out of range: {v}");
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All `k`-subsets, in ascending mask order.
    pub fn subsets_of_size(self, k: u32) -> Vec<VertexSet> {
        let members = self.to_vec();
        let k = k as usize;
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VertexSet::from_members(idx.iter().map(|&i| members[i])));
            // next combination in lexicographic index order
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort_unstable();
                    return out;
                }
                i -= 1;
                if idx[i] != i + members.len() - k {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets of `self`, including the empty set, in ascending mask order.
    pub fn subsets(self) -> Vec<VertexSet> {
        let mut out = Vec::with_capacity(1usize << self.len().min(63));
        let mut sub = self.0;
        loop {
            out.push(VertexSet(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.0;
        }
        out.reverse();
        out
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        self.intersection(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = VertexSet;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a sequence of vertex labels in 1..=64")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<VertexSet, A::Error> {
                let mut s = VertexSet::EMPTY;
                while let Some(v) = seq.next_element::<u32>()? {
                    if !(1..=MAX_VERTEX).contains(&v) {
                        return Err(de::Error::custom(format!("vertex out of range: {v}")));
                    }
                    s = s.with(v);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

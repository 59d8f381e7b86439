//! Bit-vector subsets of a small ground set and canonically ordered families of them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of points a ground set may carry.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set `{0, .., n-1}`; bit `i` set means point `i` is a member.
///
/// The width is carried by the owning space, so the set itself is a plain word.
/// Bits at or above the width are always zero for sets produced by this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        PointSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The full ground set on `n` points.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the ground set on `n` points.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn insert(self, i: usize) -> Self {
        PointSet(self.0 | (1 << i))
    }

    /// True when every set bit lies below position `n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.0 & !Self::full(n).0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of the ground set on `n` points, in numeric order.
    pub fn all(n: usize) -> impl Iterator<Item = PointSet> + Clone {
        (0..(1u32 << n)).map(PointSet)
    }

    /// Canonical order: cardinality first, then numeric value.
    #[inline]
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`PointSet`].
#[derive(Clone)]
pub struct Points(u32);

impl Iterator for Points {
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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

/// A set membership bitmap over all `2^n` subsets of an `n`-point ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn new(n: usize) -> Self {
        let len = (1usize << n).div_ceil(64);
        SubsetMask { words: vec![0; len] }
    }

    #[inline]
    pub fn get(&self, s: PointSet) -> bool {
        let i = s.bits() as usize;
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, s: PointSet) {
        let i = s.bits() as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }
}

/// A duplicate-free collection of subsets kept in canonical order
/// (ascending cardinality, ties by numeric value) with O(1) membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<PointSet>,
    index: SubsetMask,
}

impl SetFamily {
    /// Builds a family over an `n`-point ground set, discarding duplicates.
    ///
    /// Panics if a member does not fit in `n` points; callers validate first.
    pub fn new<I: IntoIterator<Item = PointSet>>(n: usize, sets: I) -> Self {
        assert!(n <= MAX_POINTS, "ground set of {n} points exceeds {MAX_POINTS}");
        let mut index = SubsetMask::new(n);
        let mut members = Vec::new();
        for s in sets {
            assert!(s.fits(n), "{s:?} does not fit in {n} points");
            if !index.get(s) {
                index.set(s);
                members.push(s);
            }
        }
        members.sort_by(PointSet::canonical_cmp);
        SetFamily { n, members, index }
    }

    /// Builds a family from an already populated membership mask.
    pub fn from_mask(n: usize, index: SubsetMask) -> Self {
        let mut members: Vec<PointSet> = PointSet::all(n).filter(|s| index.get(*s)).collect();
        members.sort_by(PointSet::canonical_cmp);
        SetFamily { n, members, index }
    }

    /// Every subset satisfying `pred`.
    pub fn filter_all<F: FnMut(PointSet) -> bool>(n: usize, mut pred: F) -> Self {
        let mut index = SubsetMask::new(n);
        for s in PointSet::all(n) {
            if pred(s) {
                index.set(s);
            }
        }
        Self::from_mask(n, index)
    }

    /// The power set of the ground set.
    pub fn power_set(n: usize) -> Self {
        Self::filter_all(n, |_| true)
    }

    pub fn points(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, s: PointSet) -> bool {
        s.fits(self.n) && self.index.get(s)
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, PointSet>> {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn mask(&self) -> &SubsetMask {
        &self.index
    }

    /// Members containing every point of `s`.
    pub fn supersets_of(&self, s: PointSet) -> impl Iterator<Item = PointSet> + '_ {
        self.iter().filter(move |m| s.is_subset(*m))
    }

    /// Members containing point `x`.
    pub fn containing(&self, x: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.iter().filter(move |m| m.contains(x))
    }

    /// Family of complements of the members.
    pub fn complements(&self) -> SetFamily {
        SetFamily::new(self.n, self.iter().map(|s| s.complement(self.n)))
    }

    pub fn is_subfamily(&self, other: &SetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn intersect(&self, other: &SetFamily) -> SetFamily {
        SetFamily::new(self.n, self.iter().filter(|s| other.contains(*s)))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

/// `out[A] = ⋂ { B ∈ family : A ⊆ B }`, with the full set as the empty meet.
pub(crate) fn meet_of_supersets(n: usize, family: &SubsetMask) -> Vec<PointSet> {
    let full = PointSet::full(n);
    let mut out: Vec<PointSet> = PointSet::all(n)
        .map(|s| if family.get(s) { s } else { full })
        .collect();
    for bit in 0..n {
        let b = 1usize << bit;
        for a in 0..out.len() {
            if a & b == 0 {
                out[a] = out[a].intersection(out[a | b]);
            }
        }
    }
    out
}

/// `out[A] = ⋃ { B ∈ family : B ⊆ A }`, with the empty set as the empty join.
pub(crate) fn join_of_subsets(n: usize, family: &SubsetMask) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = PointSet::all(n)
        .map(|s| if family.get(s) { s } else { PointSet::EMPTY })
        .collect();
    for bit in 0..n {
        let b = 1usize << bit;
        for a in 0..out.len() {
            if a & b != 0 {
                out[a] = out[a].union(out[a ^ b]);
            }
        }
    }
    out
}

/// Downward closure of a mask: `out[A]` is true iff some marked set contains `A`.
pub(crate) fn down_closure(n: usize, marks: &mut [bool]) {
    for bit in 0..n {
        let b = 1usize << bit;
        for a in 0..marks.len() {
            if a & b == 0 && marks[a | b] {
                marks[a] = true;
            }
        }
    }
}

/// Upward closure of a mask: `out[A]` is true iff some marked set lies inside `A`.
pub(crate) fn up_closure(n: usize, marks: &mut [bool]) {
    for bit in 0..n {
        let b = 1usize << bit;
        for a in 0..marks.len() {
            if a & b != 0 && marks[a ^ b] {
                marks[a] = true;
            }
        }
    }
}

/// Cluster-point operator over every subset.
///
/// `shields(x)` yields the sets guarding point `x`; `x` lands in `out[A]` unless
/// some shield of `x` misses `A` entirely.
pub(crate) fn cluster_operator<F, I>(n: usize, mut shields: F) -> Vec<PointSet>
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = PointSet>,
{
    let size = 1usize << n;
    let mut out = vec![PointSet::EMPTY; size];
    let mut escapes = vec![false; size];
    for x in 0..n {
        escapes.iter_mut().for_each(|e| *e = false);
        for s in shields(x) {
            escapes[s.complement(n).bits() as usize] = true;
        }
        down_closure(n, &mut escapes);
        for (a, escaped) in escapes.iter().enumerate() {
            if !escaped {
                out[a] = out[a].insert(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_order_is_cardinality_then_value() {
        let fam = SetFamily::new(3, [0b110, 0b001, 0b000, 0b111, 0b100].map(PointSet::from_bits));
        let bits: Vec<u32> = fam.iter().map(PointSet::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b100, 0b110, 0b111]);
    }

    #[test]
    fn duplicates_are_dropped() {
        let fam = SetFamily::new(2, [1, 1, 2, 1].map(PointSet::from_bits));
        assert_eq!(fam.len(), 2);
        assert!(fam.contains(PointSet::from_bits(2)));
        assert!(!fam.contains(PointSet::from_bits(3)));
        assert!(!fam.contains(PointSet::from_bits(8)));
    }

    #[test]
    fn meet_and_join_transforms_match_brute_force() {
        let n = 4;
        let fam = SetFamily::new(n, [0b0011, 0b0111, 0b1100, 0b1111].map(PointSet::from_bits));
        let meet = meet_of_supersets(n, fam.mask());
        let join = join_of_subsets(n, fam.mask());
        for a in PointSet::all(n) {
            let m = fam.supersets_of(a).fold(PointSet::full(n), PointSet::intersection);
            let j = fam.iter().filter(|b| b.is_subset(a)).fold(PointSet::EMPTY, PointSet::union);
            assert_eq!(meet[a.bits() as usize], m);
            assert_eq!(join[a.bits() as usize], j);
        }
    }

    proptest! {
        #[test]
        fn complement_laws(n in 1usize..=16, raw in any::<u32>()) {
            let a = PointSet::from_bits(raw & PointSet::full(n).bits());
            prop_assert_eq!(a.complement(n).complement(n), a);
            prop_assert_eq!(a.union(a.complement(n)), PointSet::full(n));
            prop_assert!(a.complement(n).fits(n));
            prop_assert_eq!(a.iter().count() as u32, a.len());
        }

        #[test]
        fn equal_families_have_identical_members(sets in proptest::collection::vec(0u32..64, 0..20)) {
            let a = SetFamily::new(6, sets.iter().copied().map(PointSet::from_bits));
            let mut rev = sets.clone();
            rev.reverse();
            let b = SetFamily::new(6, rev.into_iter().map(PointSet::from_bits));
            prop_assert_eq!(a.members(), b.members());
        }
    }
}

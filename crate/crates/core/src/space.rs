//! Finite topological spaces: validation, generation, subspaces, products and
//! exhaustive enumeration through the preorder correspondence.

use std::collections::HashSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{PointSet, SetFamily, MAX_POINTS};

/// Largest carrier accepted by [`enumerate_topologies`].
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// A ground set of named points together with its open sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: SetFamily,
    /// Smallest open set containing each point.
    neighbourhoods: Vec<PointSet>,
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("points", &self.names)
            .field("opens", &self.opens)
            .finish()
    }
}

fn check_labels<S: AsRef<str>>(points: &[S]) -> Result<Vec<String>> {
    if points.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if points.len() > MAX_POINTS {
        return Err(Error::CarrierTooLarge { points: points.len(), limit: MAX_POINTS });
    }
    let mut seen = HashSet::new();
    for p in points {
        if !seen.insert(p.as_ref()) {
            return Err(Error::DuplicateLabel(p.as_ref().to_string()));
        }
    }
    Ok(points.iter().map(|p| p.as_ref().to_string()).collect())
}

/// Labels `a, b, c, ...` used for generated spaces.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// Checks the topology axioms on `family` and builds the space.
///
/// The first violated law is reported: a missing empty set, a missing full set,
/// then the first pair in canonical order whose union or intersection is absent.
pub fn validate_topology<S: AsRef<str>>(points: &[S], family: &SetFamily) -> Result<FiniteSpace> {
    let names = check_labels(points)?;
    let n = names.len();
    if family.points() != n {
        return Err(Error::PointOutOfRange(PointSet::full(family.points())));
    }
    if !family.contains(PointSet::EMPTY) {
        return Err(Error::MissingEmpty);
    }
    if !family.contains(PointSet::full(n)) {
        return Err(Error::MissingFull);
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains(a.union(b)) {
                return Err(Error::NotClosedUnderUnion(a, b));
            }
            if !family.contains(a.intersection(b)) {
                return Err(Error::NotClosedUnderIntersection(a, b));
            }
        }
    }
    Ok(FiniteSpace::from_parts(names, family.clone()))
}

/// Closes `family` (which must already contain the empty set) under pairwise unions.
fn union_closure(n: usize, generators: &[PointSet]) -> SetFamily {
    let mut seen = crate::set::SubsetMask::new(n);
    let mut sets = vec![PointSet::EMPTY];
    seen.set(PointSet::EMPTY);
    for &g in generators {
        let len = sets.len();
        for i in 0..len {
            let u = sets[i].union(g);
            if !seen.get(u) {
                seen.set(u);
                sets.push(u);
            }
        }
    }
    SetFamily::from_mask(n, seen)
}

/// The coarsest topology containing every member of `subbasis`.
pub fn generate_topology<S: AsRef<str>>(points: &[S], subbasis: &SetFamily) -> Result<FiniteSpace> {
    let names = check_labels(points)?;
    let n = names.len();
    for s in subbasis.iter() {
        if !s.fits(n) {
            return Err(Error::PointOutOfRange(s));
        }
    }
    // finite intersections; the empty intersection is the whole space
    let mut seen = crate::set::SubsetMask::new(n);
    let mut basis = vec![PointSet::full(n)];
    seen.set(PointSet::full(n));
    for s in subbasis.iter() {
        let len = basis.len();
        for i in 0..len {
            let m = basis[i].intersection(s);
            if !seen.get(m) {
                seen.set(m);
                basis.push(m);
            }
        }
        if !seen.get(s) {
            seen.set(s);
            basis.push(s);
        }
    }
    let opens = union_closure(n, &basis);
    Ok(FiniteSpace::from_parts(names, opens))
}

impl FiniteSpace {
    /// Assumes `opens` is a valid topology on `names.len()` points.
    pub(crate) fn from_parts(names: Vec<String>, opens: SetFamily) -> Self {
        let n = names.len();
        let neighbourhoods = (0..n)
            .map(|x| opens.containing(x).fold(PointSet::full(n), PointSet::intersection))
            .collect();
        FiniteSpace { names, opens, neighbourhoods }
    }

    pub fn discrete<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let names = check_labels(points)?;
        let n = names.len();
        Ok(Self::from_parts(names, SetFamily::power_set(n)))
    }

    pub fn indiscrete<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let names = check_labels(points)?;
        let n = names.len();
        Ok(Self::from_parts(names, SetFamily::new(n, [PointSet::EMPTY, PointSet::full(n)])))
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.opens.contains(a.complement(self.len()))
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.neighbourhoods[x]
    }

    /// Smallest closed superset of `a`: the points whose smallest neighbourhood meets `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        PointSet::from_points((0..self.len()).filter(|&x| !self.neighbourhoods[x].is_disjoint(a)))
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        PointSet::from_points((0..self.len()).filter(|&x| self.neighbourhoods[x].is_subset(a)))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|p| p == label)
    }

    /// Parses comma-joined labels, e.g. `a,b`. The empty string is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<PointSet> {
        let mut s = PointSet::EMPTY;
        for label in text.split(',').map(str::trim).filter(|l| !l.is_empty()) {
            let i = self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            s = s.insert(i);
        }
        Ok(s)
    }

    pub fn labels_of(&self, a: PointSet) -> Vec<String> {
        a.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{a,b}` style rendering.
    pub fn format_set(&self, a: PointSet) -> String {
        format!("{{{}}}", self.labels_of(a).join(","))
    }

    /// Specialization preorder: `x ≤ y` iff every open set containing `x` contains `y`.
    pub fn specialization(&self) -> Preorder {
        Preorder { rows: self.neighbourhoods.clone() }
    }

    /// Subspace topology on a nonempty subset, points kept in ground order.
    pub fn subspace(&self, a: PointSet) -> Result<FiniteSpace> {
        if a.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if !a.fits(self.len()) {
            return Err(Error::PointOutOfRange(a));
        }
        let keep: Vec<usize> = a.iter().collect();
        let project = |u: PointSet| {
            PointSet::from_points(keep.iter().enumerate().filter(|(_, &p)| u.contains(p)).map(|(i, _)| i))
        };
        let opens = SetFamily::new(keep.len(), self.opens.iter().map(project));
        let names = keep.iter().map(|&p| self.names[p].clone()).collect();
        Ok(FiniteSpace::from_parts(names, opens))
    }

    /// Product topology with the default point limit.
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace> {
        self.product_with_limit(other, MAX_POINTS)
    }

    /// Product topology; point `(i, j)` sits at index `i * |other| + j` and is labelled `x.y`.
    pub fn product_with_limit(&self, other: &FiniteSpace, limit: usize) -> Result<FiniteSpace> {
        let (nx, ny) = (self.len(), other.len());
        let n = nx * ny;
        if n > limit.min(MAX_POINTS) {
            return Err(Error::CarrierTooLarge { points: n, limit: limit.min(MAX_POINTS) });
        }
        let rect = |u: PointSet, v: PointSet| {
            let mut bits = 0u32;
            for i in u.iter() {
                bits |= v.bits() << (i * ny);
            }
            PointSet::from_bits(bits)
        };
        let mut basis = Vec::new();
        for u in self.opens.iter() {
            for v in other.opens.iter() {
                basis.push(rect(u, v));
            }
        }
        let opens = union_closure(n, &basis);
        let mut names = Vec::with_capacity(n);
        for x in &self.names {
            for y in &other.names {
                names.push(format!("{x}.{y}"));
            }
        }
        Ok(FiniteSpace::from_parts(names, opens))
    }

    pub fn to_document(&self) -> SpaceDocument {
        SpaceDocument {
            points: self.names.clone(),
            opens: self.opens.iter().map(|u| self.labels_of(u)).collect(),
        }
    }
}

/// The serialized form of a space: `points` fixes the bit order, `opens` lists
/// label arrays. On input the empty and the full set may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceDocument {
    pub fn to_space(&self) -> Result<FiniteSpace> {
        let names = check_labels(&self.points)?;
        let n = names.len();
        let mut sets = vec![PointSet::EMPTY, PointSet::full(n)];
        for open in &self.opens {
            let mut s = PointSet::EMPTY;
            for label in open {
                let i = names
                    .iter()
                    .position(|p| p == label)
                    .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
                s = s.insert(i);
            }
            sets.push(s);
        }
        validate_topology(&names, &SetFamily::new(n, sets))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("space documents always serialize")
    }
}

/// A reflexive, transitive relation; `rows[i]` holds every `j` with `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    rows: Vec<PointSet>,
}

impl Preorder {
    /// Validates reflexivity and transitivity of an adjacency matrix.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Option<Self> {
        let n = matrix.len();
        let rows: Vec<PointSet> = matrix
            .iter()
            .map(|r| PointSet::from_points((0..n).filter(|&j| r[j])))
            .collect();
        let p = Preorder { rows };
        (matrix.iter().all(|r| r.len() == n) && p.is_reflexive() && p.is_transitive()).then_some(p)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.contains(i))
    }

    pub fn is_transitive(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|j| self.rows[j].is_subset(*r)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|i| self.rows[i].iter().all(|j| j == i || !self.le(j, i)))
    }

    /// Up-sets of the relation, which form a topology.
    pub fn up_set_topology(&self) -> SetFamily {
        let n = self.len();
        SetFamily::filter_all(n, |u| u.iter().all(|i| self.rows[i].is_subset(u)))
    }

    pub fn to_space(&self) -> FiniteSpace {
        FiniteSpace::from_parts(default_labels(self.len()), self.up_set_topology())
    }
}

/// Number of relation codes for `n` points: one bit per off-diagonal pair.
pub fn relation_code_count(n: usize) -> u64 {
    1u64 << (n * (n - 1))
}

/// Decodes a relation code; off-diagonal pairs `(i, j)` are numbered in row-major order.
fn decode_relation(n: usize, code: u64) -> Preorder {
    let mut rows: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    let mut bit = 0;
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            if i != j {
                if code & (1 << bit) != 0 {
                    *row = row.insert(j);
                }
                bit += 1;
            }
        }
    }
    Preorder { rows }
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::CarrierTooLarge { points: n, limit: MAX_ENUMERATION_POINTS });
    }
    Ok(())
}

/// Preorders whose relation code lies in `codes`, in increasing code order.
pub fn preorders_in(n: usize, t0_only: bool, codes: Range<u64>) -> impl Iterator<Item = Preorder> {
    codes
        .map(move |c| decode_relation(n, c))
        .filter(move |p| p.is_transitive() && (!t0_only || p.is_antisymmetric()))
}

/// Every labeled topology on `n` points exactly once, ordered by relation code.
pub fn enumerate_topologies(n: usize, t0_only: bool) -> Result<impl Iterator<Item = FiniteSpace>> {
    check_enumeration_size(n)?;
    Ok(preorders_in(n, t0_only, 0..relation_code_count(n)).map(|p| p.to_space()))
}

/// Collects [`enumerate_topologies`] using the given executor, splitting the code range into chunks.
pub fn collect_topologies(n: usize, t0_only: bool, exec: &crate::par::Executor) -> Result<Vec<FiniteSpace>> {
    check_enumeration_size(n)?;
    let total = relation_code_count(n);
    let chunk = (total / 64).max(1);
    let ranges: Vec<Range<u64>> = (0..total.div_ceil(chunk))
        .map(|k| k * chunk..((k + 1) * chunk).min(total))
        .collect();
    let parts = exec.map(&ranges, |r| {
        preorders_in(n, t0_only, r.clone()).map(|p| p.to_space()).collect::<Vec<_>>()
    });
    Ok(parts.into_iter().flatten().collect())
}

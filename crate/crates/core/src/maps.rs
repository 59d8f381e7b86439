//! Functions between finite spaces and the continuity-style predicates on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::operators::{named_enum, FamilyKind, OperatorTable};
use crate::set::{PointSet, MAX_POINTS};
use crate::space::FiniteSpace;

named_enum! {
    MapPropertyKind {
        Continuous => "continuous",
        OpenMap => "open",
        EStarOpenMap => "e*-open",
        EStarIrresolute => "e*-irresolute",
        WeaklyEStarIrresolute => "weakly-e*-irresolute",
        StronglyEStarIrresolute => "strongly-e*-irresolute",
        SContinuous => "S-continuous",
        SEStarContinuous => "S-e*-continuous",
        ThetaSEStarContinuous => "theta-S-e*-continuous",
        StronglyEStarThetaClosedGraph => "strongly-e*-theta-closed-graph",
    }
}

/// A total function between two spaces, given pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    domain: FiniteSpace,
    codomain: FiniteSpace,
    images: Vec<u8>,
}

impl SpaceMap {
    pub fn new(domain: FiniteSpace, codomain: FiniteSpace, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.len() {
            let missing = domain.names().get(images.len()).cloned().unwrap_or_default();
            return Err(Error::MissingImage(missing));
        }
        if let Some(&bad) = images.iter().find(|&&i| i >= codomain.len()) {
            return Err(Error::ImageOutOfRange(bad));
        }
        Ok(SpaceMap { domain, codomain, images: images.into_iter().map(|i| i as u8).collect() })
    }

    /// Builds a map from `(domain label, codomain label)` pairs; every domain point must appear once.
    pub fn from_labels<'a, I>(domain: FiniteSpace, codomain: FiniteSpace, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut images: Vec<Option<usize>> = vec![None; domain.len()];
        for (from, to) in pairs {
            let i = domain.index_of(from).ok_or_else(|| Error::UnknownLabel(from.to_string()))?;
            let j = codomain.index_of(to).ok_or_else(|| Error::UnknownLabel(to.to_string()))?;
            if images[i].replace(j).is_some_and(|prev| prev != j) {
                return Err(Error::PreconditionUnmet(format!("point {from:?} is mapped twice")));
            }
        }
        let images = images
            .iter()
            .enumerate()
            .map(|(i, img)| img.ok_or_else(|| Error::MissingImage(domain.names()[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }

    pub fn identity(space: FiniteSpace) -> Self {
        let images = (0..space.len() as u8).collect();
        SpaceMap { domain: space.clone(), codomain: space, images }
    }

    pub fn constant(domain: FiniteSpace, codomain: FiniteSpace, value: usize) -> Result<Self> {
        let n = domain.len();
        Self::new(domain, codomain, vec![value; n])
    }

    pub fn domain(&self) -> &FiniteSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSpace {
        &self.codomain
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn image_of(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        image(&self.images, a)
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        preimage(&self.images, b)
    }

    /// Builds operator tables for both ends.
    pub fn analyze(&self) -> Result<MapAnalysis> {
        for s in [&self.domain, &self.codomain] {
            if s.len() > MAX_POINTS {
                return Err(Error::CarrierTooLarge { points: s.len(), limit: MAX_POINTS });
            }
        }
        Ok(MapAnalysis {
            domain: OperatorTable::new(self.domain.clone()),
            codomain: OperatorTable::new(self.codomain.clone()),
            images: self.images.clone(),
        })
    }

    /// `(x, f(x))` labels in domain order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.domain.names()[i].clone(), self.codomain.names()[j as usize].clone()))
            .collect()
    }
}

/// `g ∘ f`.
pub fn compose(f: &SpaceMap, g: &SpaceMap) -> Result<SpaceMap> {
    if f.codomain != g.domain {
        return Err(Error::DomainMismatch);
    }
    let images = f.images.iter().map(|&y| g.images[y as usize]).collect();
    Ok(SpaceMap { domain: f.domain.clone(), codomain: g.codomain.clone(), images })
}

/// `f|_A` on the subspace `A` of the domain.
pub fn restrict(f: &SpaceMap, a: PointSet) -> Result<SpaceMap> {
    let domain = f.domain.subspace(a)?;
    let images = a.iter().map(|i| f.images[i]).collect();
    Ok(SpaceMap { domain, codomain: f.codomain.clone(), images })
}

#[inline]
pub(crate) fn image(images: &[u8], a: PointSet) -> PointSet {
    a.iter().fold(PointSet::EMPTY, |acc, i| acc.insert(images[i] as usize))
}

#[inline]
pub(crate) fn preimage(images: &[u8], b: PointSet) -> PointSet {
    PointSet::from_points(images.iter().enumerate().filter(|(_, &j)| b.contains(j as usize)).map(|(i, _)| i))
}

/// Operator tables for both ends of a map, owned.
pub struct MapAnalysis {
    pub domain: OperatorTable,
    pub codomain: OperatorTable,
    pub images: Vec<u8>,
}

impl MapAnalysis {
    pub fn view(&self) -> MapView<'_> {
        MapView { dom: &self.domain, cod: &self.codomain, images: &self.images }
    }
}

/// A map seen through precomputed tables; the cheap handle used in bulk checks.
#[derive(Clone, Copy)]
pub struct MapView<'a> {
    pub dom: &'a OperatorTable,
    pub cod: &'a OperatorTable,
    pub images: &'a [u8],
}

/// Why a map property fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapWitness {
    /// A set whose preimage or image has the wrong kind.
    Set(PointSet),
    /// The first point and codomain neighbourhood for which no domain set works.
    PointAndSet(usize, PointSet),
    /// A point `(x, y)` off the graph with no separating rectangle.
    OffGraph(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapOutcome {
    pub holds: bool,
    pub witness: Option<MapWitness>,
}

impl From<Option<MapWitness>> for MapOutcome {
    fn from(w: Option<MapWitness>) -> Self {
        MapOutcome { holds: w.is_none(), witness: w }
    }
}

impl<'a> MapView<'a> {
    pub fn image(&self, a: PointSet) -> PointSet {
        image(self.images, a)
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        preimage(self.images, b)
    }

    pub fn fx(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.full()) == self.cod.full()
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.dom.full()).len() as usize == self.dom.len()
    }

    fn preimages_stay_in(&self, from: FamilyKind, to: FamilyKind) -> Option<MapWitness> {
        let target = self.dom.family(to);
        self.cod.family(from).iter().find(|&v| !target.contains(self.preimage(v))).map(MapWitness::Set)
    }

    fn images_stay_in(&self, from: FamilyKind, to: FamilyKind) -> Option<MapWitness> {
        let target = self.cod.family(to);
        self.dom.family(from).iter().find(|&u| !target.contains(self.image(u))).map(MapWitness::Set)
    }

    /// First `(x, V)` with `V` an e*-open neighbourhood of `f(x)` such that no
    /// `U ∈ family(x)` satisfies `ok(U, V)`.
    fn pointwise(
        &self,
        domain_family: FamilyKind,
        mut ok: impl FnMut(PointSet, PointSet) -> bool,
    ) -> Option<MapWitness> {
        let us = self.dom.family(domain_family);
        let vs = self.cod.estar_open();
        for x in 0..self.dom.len() {
            for v in vs.containing(self.fx(x)) {
                if !us.containing(x).any(|u| ok(u, v)) {
                    return Some(MapWitness::PointAndSet(x, v));
                }
            }
        }
        None
    }

    /// Pointwise weak e*-irresoluteness: `f[U] ⊆ e*-cl(V)`.
    pub fn weakly_irresolute_pointwise(&self) -> Option<MapWitness> {
        self.pointwise(FamilyKind::EStarOpen, |u, v| self.image(u).is_subset(self.cod.estar_cl(v)))
    }

    /// Preimages of e*-θ-open sets are e*-θ-open.
    pub fn weakly_irresolute_by_preimages(&self) -> Option<MapWitness> {
        self.preimages_stay_in(FamilyKind::EStarThetaOpen, FamilyKind::EStarThetaOpen)
    }

    /// `f[e*-cl(A)] ⊆ e*-cl_θ(f[A])` for every `A`.
    pub fn weakly_irresolute_by_closures(&self) -> Option<MapWitness> {
        PointSet::all(self.dom.len())
            .find(|&a| !self.image(self.dom.estar_cl(a)).is_subset(self.cod.cl_theta(self.image(a))))
            .map(MapWitness::Set)
    }

    /// Rectangle form: some `e*-cl(U) × V` with `U ∈ e*O(X,x)`, `V ∈ e*θO(Y,y)` misses the graph.
    pub fn closed_graph_by_rectangles(&self) -> Option<MapWitness> {
        self.closed_graph(|closure, v| {
            closure.iter().all(|x2| v.iter().all(|y2| self.fx(x2) != y2))
        })
    }

    /// Image form: `f[e*-cl(U)] ∩ V = ∅`.
    pub fn closed_graph_by_images(&self) -> Option<MapWitness> {
        self.closed_graph(|closure, v| self.image(closure).is_disjoint(v))
    }

    fn closed_graph(&self, misses: impl Fn(PointSet, PointSet) -> bool) -> Option<MapWitness> {
        let us = self.dom.estar_open();
        let vs = self.cod.theta_open();
        for x in 0..self.dom.len() {
            for y in (0..self.cod.len()).filter(|&y| y != self.fx(x)) {
                let found = us
                    .containing(x)
                    .any(|u| vs.containing(y).any(|v| misses(self.dom.estar_cl(u), v)));
                if !found {
                    return Some(MapWitness::OffGraph(x, y));
                }
            }
        }
        None
    }

    pub fn property(&self, kind: MapPropertyKind) -> Result<MapOutcome> {
        use FamilyKind as F;
        use MapPropertyKind::*;
        let w = match kind {
            Continuous => self.preimages_stay_in(F::Open, F::Open),
            OpenMap => self.images_stay_in(F::Open, F::Open),
            EStarOpenMap => self.images_stay_in(F::Open, F::EStarOpen),
            EStarIrresolute => self.preimages_stay_in(F::EStarOpen, F::EStarOpen),
            WeaklyEStarIrresolute => {
                let pointwise = self.weakly_irresolute_pointwise();
                let by_preimages = self.weakly_irresolute_by_preimages();
                if pointwise.is_none() != by_preimages.is_none() {
                    return Err(Error::InternalCharacterizationMismatch(format!(
                        "weak e*-irresoluteness: pointwise form gives {} but the θ-open preimage form gives {}",
                        pointwise.is_none(),
                        by_preimages.is_none()
                    )));
                }
                pointwise
            }
            StronglyEStarIrresolute => {
                self.pointwise(F::EStarOpen, |u, v| self.image(self.dom.estar_cl(u)).is_subset(v))
            }
            SContinuous => self.pointwise(F::Open, |u, v| self.cod.cl(self.image(u)).is_subset(v)),
            SEStarContinuous => self.pointwise(F::Open, |u, v| self.cod.estar_cl(self.image(u)).is_subset(v)),
            ThetaSEStarContinuous => self.pointwise(F::Open, |u, v| self.cod.cl_theta(self.image(u)).is_subset(v)),
            StronglyEStarThetaClosedGraph => {
                let rect = self.closed_graph_by_rectangles();
                let lemma = self.closed_graph_by_images();
                if rect != lemma {
                    return Err(Error::InternalCharacterizationMismatch(format!(
                        "strongly e*-θ-closed graph: rectangle form gives {rect:?} but the image form gives {lemma:?}"
                    )));
                }
                rect
            }
        };
        Ok(w.into())
    }
}

/// Decides `kind` on `map`.
pub fn property(map: &SpaceMap, kind: MapPropertyKind) -> Result<MapOutcome> {
    map.analyze()?.view().property(kind)
}

/// Pullback of a D-set along a weakly e*-irresolute surjection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DSetPullback {
    /// `(f⁻¹[U], f⁻¹[V])` for the first decomposition `A = U ∖ V` in canonical order.
    pub decomposition: (PointSet, PointSet),
    /// Whether `f⁻¹[A]` is a D-set of the domain.
    pub holds: bool,
}

pub fn preimage_dset(view: &MapView<'_>, a: PointSet) -> Result<DSetPullback> {
    if view.property(MapPropertyKind::WeaklyEStarIrresolute)?.witness.is_some() {
        return Err(Error::PreconditionUnmet("map is not weakly e*-irresolute".into()));
    }
    if !view.is_surjective() {
        return Err(Error::PreconditionUnmet("map is not surjective".into()));
    }
    if !view.cod.contains(FamilyKind::DSet, a) {
        return Err(Error::PreconditionUnmet("set is not an e*-θ-D-set of the codomain".into()));
    }
    let full = view.cod.full();
    let theta_open = view.cod.theta_open();
    let (u, v) = theta_open
        .iter()
        .filter(|&u| u != full && a.is_subset(u))
        .find_map(|u| theta_open.iter().find(|&v| u.difference(v) == a).map(|v| (u, v)))
        .expect("every D-set has a decomposition");
    let pre = view.preimage(a);
    Ok(DSetPullback {
        decomposition: (view.preimage(u), view.preimage(v)),
        holds: view.dom.contains(FamilyKind::DSet, pre),
    })
}

/// Every map between carriers of `nx` and `ny` points, in lexicographic image order.
pub fn all_images(nx: usize, ny: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (ny as u64).pow(nx as u32);
    (0..total).map(move |mut code| {
        let mut images = vec![0u8; nx];
        for slot in images.iter_mut().rev() {
            *slot = (code % ny as u64) as u8;
            code /= ny as u64;
        }
        images
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::fixtures::*;
    use crate::space::enumerate_topologies;

    fn tables(n: usize) -> Vec<OperatorTable> {
        enumerate_topologies(n, false).unwrap().map(OperatorTable::new).collect()
    }

    #[test]
    fn constant_map_on_example4() {
        let s = example4();
        let f = SpaceMap::constant(s.clone(), s, 2).unwrap();
        assert!(property(&f, MapPropertyKind::SEStarContinuous).unwrap().holds);
        assert!(!property(&f, MapPropertyKind::SContinuous).unwrap().holds);
    }

    #[test]
    fn identity_is_continuous_and_irresolute() {
        for n in 1..=3 {
            for t in tables(n) {
                let f = SpaceMap::identity(t.space().clone());
                for kind in [
                    MapPropertyKind::Continuous,
                    MapPropertyKind::EStarIrresolute,
                    MapPropertyKind::WeaklyEStarIrresolute,
                ] {
                    assert!(property(&f, kind).unwrap().holds, "{kind}");
                }
            }
        }
    }

    #[test]
    fn identity_on_example5_is_theta_s_continuous() {
        let f = SpaceMap::identity(example5());
        let a = f.analyze().unwrap();
        let v = a.view();
        // brute force: every open U ∋ x, every e*-open V ∋ x, e*-cl_θ(U) ⊆ V for some U
        let brute = (0..4).all(|x| {
            v.cod.estar_open().containing(x).all(|vv| {
                v.dom.space().opens().containing(x).any(|u| v.cod.cl_theta(u).is_subset(vv))
            })
        });
        // V = {b} is e*-open but no open set around b fits inside it
        assert!(!brute);
        assert_eq!(v.property(MapPropertyKind::ThetaSEStarContinuous).unwrap().holds, brute);
    }

    #[test]
    fn composition_and_restriction() {
        let s = example4();
        let id = SpaceMap::identity(s.clone());
        let f = SpaceMap::constant(s.clone(), s.clone(), 2).unwrap();
        assert_eq!(compose(&id, &f).unwrap(), f);
        assert_eq!(restrict(&f, s.full()).unwrap(), f);
        let r = restrict(&f, set(&[0, 1])).unwrap();
        assert_eq!(r.domain().opens().len(), 3);
        assert_eq!(r.images(), &[2, 2]);
        // the restricted constant map is still S-e*-continuous but not S-continuous
        assert!(property(&r, MapPropertyKind::SEStarContinuous).unwrap().holds);
        assert!(!property(&r, MapPropertyKind::SContinuous).unwrap().holds);
        let other = example5();
        let g = SpaceMap::identity(other);
        assert_eq!(compose(&f, &g).unwrap_err(), Error::DomainMismatch);
        assert_eq!(restrict(&f, PointSet::EMPTY).unwrap_err(), Error::EmptyCarrier);
    }

    #[test]
    fn from_labels_requires_totality() {
        let s = example4();
        let err = SpaceMap::from_labels(s.clone(), s.clone(), [("a", "c")]).unwrap_err();
        assert_eq!(err, Error::MissingImage("b".into()));
        let err = SpaceMap::from_labels(s.clone(), s, [("a", "q")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("q".into()));
    }

    #[test]
    fn dset_pullback_along_identity() {
        let f = SpaceMap::identity(example4());
        let a = f.analyze().unwrap();
        let v = a.view();
        let p = preimage_dset(&v, set(&[1])).unwrap();
        assert!(p.holds);
        let (u, w) = p.decomposition;
        assert!(v.dom.is_theta_open(u) && v.dom.is_theta_open(w) && u.difference(w) == set(&[1]));
        for u in v.cod.theta_open().iter().filter(|&u| u != v.cod.full()) {
            let p = preimage_dset(&v, u).unwrap();
            assert_eq!(p.decomposition, (u, PointSet::EMPTY));
        }
        assert!(matches!(preimage_dset(&v, v.cod.full()), Err(Error::PreconditionUnmet(_))));
    }

    #[test]
    fn preimage_adjunction_and_distribution() {
        let ts = tables(3);
        let (x, y) = (&ts[5], &ts[11]);
        for images in all_images(3, 3) {
            let v = MapView { dom: x, cod: y, images: &images };
            for a in PointSet::all(3) {
                assert!(a.is_subset(v.preimage(v.image(a))));
                assert!(v.image(v.preimage(a)).is_subset(a));
                assert_eq!(v.preimage(a.complement(3)), v.preimage(a).complement(3));
                for b in PointSet::all(3) {
                    assert_eq!(v.preimage(a.union(b)), v.preimage(a).union(v.preimage(b)));
                    assert_eq!(v.preimage(a.intersection(b)), v.preimage(a).intersection(v.preimage(b)));
                }
            }
        }
    }

    #[test]
    fn all_images_is_lexicographic() {
        let v: Vec<_> = all_images(2, 2).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_images(3, 3).count(), 27);
    }

    #[test]
    fn characterizations_agree_on_small_maps() {
        for nx in 1..=3 {
            for ny in 1..=3 {
                let (xs, ys) = (tables(nx), tables(ny));
                for x in &xs {
                    for y in &ys {
                        for images in all_images(nx, ny) {
                            let v = MapView { dom: x, cod: y, images: &images };
                            let wei = v.property(MapPropertyKind::WeaklyEStarIrresolute).unwrap().holds;
                            assert_eq!(wei, v.weakly_irresolute_by_closures().is_none());
                            v.property(MapPropertyKind::StronglyEStarThetaClosedGraph).unwrap();
                        }
                    }
                }
            }
        }
    }
}

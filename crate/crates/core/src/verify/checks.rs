//! One check per catalogued claim. Each returns the verdict for a single instance.

use serde_json::{json, Value};

use crate::axioms::{self, is_quasi_theta_closed, singleton_closure_meet, AxiomKind};
use crate::error::Result;
use crate::maps::{preimage_dset, restrict, MapPropertyKind as P, MapView, SpaceMap};
use crate::operators::{FamilyKind as F, OperatorKind, OperatorTable};
use crate::set::{PointSet, SetFamily};

use super::fixtures;
use super::universe::{decode, encode, map_count, MapInstance, SpaceId, Universe};
use super::Verdict;

fn each<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Verdict) -> Verdict {
    let mut applied = false;
    for item in items {
        match f(item) {
            Verdict::Vacuous => {}
            Verdict::Holds => applied = true,
            fail => return fail,
        }
    }
    if applied {
        Verdict::Holds
    } else {
        Verdict::Vacuous
    }
}

fn try_each<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Result<Verdict>) -> Result<Verdict> {
    let mut applied = false;
    for item in items {
        match f(item)? {
            Verdict::Vacuous => {}
            Verdict::Holds => applied = true,
            fail => return Ok(fail),
        }
    }
    Ok(if applied { Verdict::Holds } else { Verdict::Vacuous })
}

fn require(ok: bool, detail: impl FnOnce() -> Value) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails(detail())
    }
}

fn implies(hypothesis: bool, conclusion: impl FnOnce() -> Verdict) -> Verdict {
    if hypothesis {
        conclusion()
    } else {
        Verdict::Vacuous
    }
}

fn fmt(t: &OperatorTable, a: PointSet) -> Value {
    Value::String(t.space().format_set(a))
}

fn subsets(t: &OperatorTable) -> impl Iterator<Item = PointSet> {
    PointSet::all(t.len())
}

fn holds(t: &OperatorTable, kind: AxiomKind) -> bool {
    axioms::holds(t, kind).holds
}

fn meet(t: &OperatorTable, sets: impl Iterator<Item = PointSet>) -> PointSet {
    sets.fold(t.full(), PointSet::intersection)
}

fn join(sets: impl Iterator<Item = PointSet>) -> PointSet {
    sets.fold(PointSet::EMPTY, PointSet::union)
}

fn first_missing(family: &SetFamily, of: &SetFamily) -> Option<PointSet> {
    family.iter().find(|&s| !of.contains(s))
}

fn same_family(t: &OperatorTable, a: &SetFamily, b: &SetFamily) -> Verdict {
    let extra = first_missing(a, b).or_else(|| first_missing(b, a));
    require(extra.is_none(), || json!({ "set": fmt(t, extra.expect("some set differs")) }))
}

// Set-level claims on one space.

pub fn estar_open_iff_closure_regular(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(subsets(t), |a| {
        let open = t.contains(F::EStarOpen, a) == regular.contains(t.estar_cl(a));
        let closed = t.contains(F::EStarClosed, a) == regular.contains(t.estar_int(a));
        require(open && closed, || json!({ "set": fmt(t, a), "open_part": open, "closed_part": closed }))
    })
}

pub fn theta_open_by_regular_neighbourhoods(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(subsets(t), |a| {
        let local = a.iter().all(|x| regular.containing(x).any(|u| u.is_subset(a)));
        require(t.is_theta_open(a) == local, || json!({ "set": fmt(t, a), "theta_open": t.is_theta_open(a) }))
    })
}

pub fn theta_open_union_closed(t: &OperatorTable) -> Verdict {
    let open = t.theta_open();
    each(open.iter(), |u| {
        each(open.iter(), |v| require(open.contains(u.union(v)), || json!({ "sets": [fmt(t, u), fmt(t, v)] })))
    })
}

pub fn closures_agree_on_estar_open(t: &OperatorTable) -> Verdict {
    each(t.estar_open().iter(), |a| {
        require(t.estar_cl(a) == t.cl_theta(a), || json!({ "set": fmt(t, a) }))
    })
}

pub fn regular_iff_theta_clopen(t: &OperatorTable) -> Verdict {
    same_family(t, t.family(F::EStarRegular), &t.theta_open().intersect(t.theta_closed()))
}

pub fn estar_regular_space_equivalences(t: &OperatorTable) -> Verdict {
    let n = t.len();
    let a = holds(t, AxiomKind::EStarRegularSpace);
    let b = (0..n).all(|x| {
        t.space().opens().containing(x).all(|u| t.estar_open().containing(x).any(|v| t.estar_cl(v).is_subset(u)))
    });
    let regular = t.family(F::EStarRegular);
    let c = t.estar_open().iter().all(|u| u.iter().all(|x| regular.containing(x).any(|v| v.is_subset(u))));
    require(a == b && b == c, || json!({ "separation": a, "shrinking": b, "regular_base": c }))
}

pub fn regular_theta_open_chain(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    let theta = t.theta_open();
    let outside = first_missing(regular, theta).or_else(|| first_missing(theta, t.estar_open()));
    require(outside.is_none(), || json!({ "set": fmt(t, outside.expect("a set escapes the chain")) }))
}

pub fn theta_closure_as_meets(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(subsets(t), |a| {
        let closure = t.cl_theta(a);
        let by_closed = meet(t, t.theta_closed().supersets_of(a));
        let by_regular = meet(t, regular.supersets_of(a));
        require(closure == by_closed && closure == by_regular, || {
            json!({
                "set": fmt(t, a),
                "closure": fmt(t, closure),
                "meet_theta_closed": fmt(t, by_closed),
                "meet_regular": fmt(t, by_regular),
            })
        })
    })
}

pub fn theta_closed_intersections(t: &OperatorTable) -> Verdict {
    let closed = t.theta_closed();
    let ends = require(closed.contains(PointSet::EMPTY) && closed.contains(t.full()), || json!({ "missing": "empty or full set" }));
    if ends != Verdict::Holds {
        return ends;
    }
    each(closed.iter(), |u| {
        each(closed.iter(), |v| require(closed.contains(u.intersection(v)), || json!({ "sets": [fmt(t, u), fmt(t, v)] })))
    })
}

pub fn regular_by_closure_interior(t: &OperatorTable) -> Verdict {
    each(subsets(t), |a| {
        let r = t.contains(F::EStarRegular, a);
        let b = a == t.estar_cl(t.estar_int(a));
        let c = a == t.estar_int(t.estar_cl(a));
        require(r == b && b == c, || json!({ "set": fmt(t, a), "regular": r, "cl_int": b, "int_cl": c }))
    })
}

pub fn theta_closure_idempotent(t: &OperatorTable) -> Verdict {
    each(subsets(t), |a| {
        let once = t.cl_theta(a);
        require(t.cl_theta(once) == once, || json!({ "set": fmt(t, a) }))
    })
}

pub fn theta_complement_open(t: &OperatorTable) -> Verdict {
    let n = t.len();
    let family = SetFamily::new(n, subsets(t).map(|u| t.cl_theta(u).complement(n)));
    same_family(t, &family, t.theta_open())
}

pub fn interior_of_theta_closure(t: &OperatorTable) -> Verdict {
    each(t.estar_open().iter(), |a| {
        let b = t.estar_int(t.cl_theta(a));
        require(t.is_theta_open(b), || json!({ "set": fmt(t, a), "interior": fmt(t, b) }))
    })
}

pub fn theta_open_regular_iff_closures_regular(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    let equal = t.theta_open() == regular;
    let closures = subsets(t).all(|a| regular.contains(t.cl_theta(a)));
    require(equal == closures, || json!({ "families_equal": equal, "closures_regular": closures }))
}

pub fn theta_open_union_of_regular(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(t.theta_open().iter(), |b| {
        require(join(regular.iter().filter(|r| r.is_subset(b))) == b, || json!({ "set": fmt(t, b) }))
    })
}

pub fn theta_closed_meet_of_regular(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(t.theta_closed().iter(), |b| {
        require(meet(t, regular.supersets_of(b)) == b, || json!({ "set": fmt(t, b) }))
    })
}

// Separation.

pub fn proper_theta_open_is_dset(t: &OperatorTable) -> Verdict {
    each(t.theta_open().iter().filter(|&u| u != t.full()), |u| {
        require(t.contains(F::DSet, u), || json!({ "set": fmt(t, u) }))
    })
}

pub fn separation_diagram(t: &OperatorTable) -> Verdict {
    use AxiomKind::*;
    let mut arrows = vec![
        (EStarThetaT2, EStarThetaT1),
        (EStarThetaT1, EStarThetaT0),
        (EStarThetaD2, EStarThetaD1),
        (EStarThetaD1, EStarThetaD0),
    ];
    if t.len() > 1 {
        arrows.extend([(EStarThetaT2, EStarThetaD2), (EStarThetaT1, EStarThetaD1), (EStarThetaT0, EStarThetaD0)]);
    }
    each(arrows, |(from, to)| {
        implies(holds(t, from), || require(holds(t, to), || json!({ "holds": from.name(), "fails": to.name() })))
    })
}

pub fn axiom_implies(t: &OperatorTable, from: AxiomKind, to: AxiomKind) -> Verdict {
    implies(holds(t, from), || require(holds(t, to), || json!({ "fails": to.name() })))
}

pub fn separation_equivalent(t: &OperatorTable) -> Verdict {
    use AxiomKind::*;
    let kinds = [EStarThetaD0, EStarThetaD1, EStarThetaD2, EStarThetaT0, EStarThetaT1, EStarThetaT2];
    let values: Vec<bool> = kinds.iter().map(|&k| holds(t, k)).collect();
    require(values.iter().all(|&v| v == values[0]), || {
        json!(kinds.iter().zip(&values).map(|(k, v)| (k.name().to_string(), json!(v))).collect::<serde_json::Map<_, _>>())
    })
}

pub fn d1_has_no_cc_point(t: &OperatorTable) -> Verdict {
    implies(holds(t, AxiomKind::EStarThetaD1), || {
        let cc = axioms::cc_points(t);
        require(cc.is_empty(), || json!({ "cc_points": fmt(t, cc) }))
    })
}

pub fn theta_closure_by_regular(t: &OperatorTable) -> Verdict {
    let regular = t.family(F::EStarRegular);
    each(subsets(t), |a| {
        let by_regular =
            PointSet::from_points((0..t.len()).filter(|&x| regular.containing(x).all(|u| !u.is_disjoint(a))));
        require(by_regular == t.cl_theta(a), || json!({ "set": fmt(t, a), "by_regular": fmt(t, by_regular) }))
    })
}

pub fn singleton_closure_symmetry(t: &OperatorTable) -> Verdict {
    let n = t.len();
    each((0..n).flat_map(|x| (0..n).map(move |y| (x, y))), |(x, y)| {
        let xy = t.cl_theta(PointSet::singleton(y)).contains(x);
        implies(xy, || {
            require(t.cl_theta(PointSet::singleton(x)).contains(y), || {
                json!({ "x": t.space().names()[x], "y": t.space().names()[y] })
            })
        })
    })
}

pub fn singletons_quasi_closed(t: &OperatorTable) -> Verdict {
    each(0..t.len(), |x| {
        let s = PointSet::singleton(x);
        require(is_quasi_theta_closed(t, s), || json!({ "set": fmt(t, s) }))
    })
}

pub fn thalf_iff_t1(t: &OperatorTable) -> Verdict {
    let thalf = subsets(t).all(|a| !is_quasi_theta_closed(t, a) || t.is_theta_closed(a));
    let t1 = holds(t, AxiomKind::EStarThetaT1);
    require(thalf == t1, || json!({ "t_half": thalf, "t1": t1 }))
}

pub fn d1_by_surjections(u: &Universe, x: SpaceId) -> Result<Verdict> {
    let t = u.table(x);
    let n = t.len();
    let k = u.bounds().max_map_points;
    let lhs = holds(t, AxiomKind::EStarThetaD1);
    let targets: Vec<SpaceId> = u.spaces_sized(1..=k).filter(|&y| holds(u.table(y), AxiomKind::EStarThetaD1)).collect();
    let full = |y: SpaceId, images: &[u8]| images.iter().fold(PointSet::EMPTY, |s, &j| s.insert(j as usize)) == u.table(y).full();
    let mut unseparated = None;
    'pairs: for p in 0..n {
        for q in p + 1..n {
            let mut found = false;
            'search: for &y in &targets {
                for code in 0..map_count(n, u.size(y)) {
                    let images = decode(code, n, u.size(y));
                    if images[p] != images[q] && full(y, &images) && u.has(x, y, code, P::WeaklyEStarIrresolute)? {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                unseparated = Some((p, q));
                break 'pairs;
            }
        }
    }
    let rhs = unseparated.is_none();
    Ok(require(lhs == rhs, || {
        let names = t.space().names();
        json!({
            "d1": lhs,
            "by_surjections": rhs,
            "pair": unseparated.map(|(p, q)| [names[p].clone(), names[q].clone()]),
        })
    }))
}

// Kernels and slight R0.

pub fn kernel_by_singleton_closures(t: &OperatorTable) -> Verdict {
    each(subsets(t), |a| {
        let by_closures =
            PointSet::from_points((0..t.len()).filter(|&x| !t.cl_theta(PointSet::singleton(x)).is_disjoint(a)));
        require(by_closures == t.ker_theta(a), || json!({ "set": fmt(t, a), "by_closures": fmt(t, by_closures) }))
    })
}

pub fn slightly_r0_iff_kernels(t: &OperatorTable) -> Verdict {
    let r0 = holds(t, AxiomKind::SlightlyEStarThetaR0);
    let kernels = (0..t.len()).all(|x| t.ker_theta(PointSet::singleton(x)) != t.full());
    require(r0 == kernels, || json!({ "slightly_r0": r0, "kernels_proper": kernels }))
}

pub fn product_slightly_r0(x: &OperatorTable, y: &OperatorTable) -> Result<Verdict> {
    if !holds(x, AxiomKind::SlightlyEStarThetaR0) {
        return Ok(Verdict::Vacuous);
    }
    let product = OperatorTable::new(x.space().product(y.space())?);
    let meet = singleton_closure_meet(&product, OperatorKind::EStarClTheta);
    Ok(require(meet.is_empty(), || json!({ "meet": fmt(&product, meet) })))
}

// R1.

pub fn r1_iff_closures_agree(t: &OperatorTable) -> Verdict {
    let r1 = holds(t, AxiomKind::EStarR1);
    let agree = (0..t.len()).all(|x| {
        let s = PointSet::singleton(x);
        t.cl_theta(s) == t.estar_cl(s)
    });
    require(r1 == agree, || json!({ "r1": r1, "closures_agree": agree }))
}

pub fn r1_iff_closures_inside(t: &OperatorTable) -> Verdict {
    let r1 = holds(t, AxiomKind::EStarR1);
    let inside = t.estar_open().iter().all(|a| a.iter().all(|x| t.cl_theta(PointSet::singleton(x)).is_subset(a)));
    require(r1 == inside, || json!({ "r1": r1, "closures_inside": inside }))
}

// Maps.

fn has(v: &MapView<'_>, kind: P) -> Result<bool> {
    Ok(v.property(kind)?.holds)
}

fn map_detail(v: &MapView<'_>, kind: P) -> Result<Value> {
    let w = v.property(kind)?.witness;
    Ok(json!({ "property": kind.name(), "witness": w.map(|w| format!("{w:?}")) }))
}

pub fn weakly_irresolute_three_ways(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let a = v.weakly_irresolute_pointwise().is_none();
    let b = v.weakly_irresolute_by_preimages().is_none();
    let c = v.weakly_irresolute_by_closures().is_none();
    Ok(require(a == b && b == c, || json!({ "pointwise": a, "theta_open_preimages": b, "closures": c })))
}

pub fn weakly_irresolute_closed_preimages(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let wei = has(&v, P::WeaklyEStarIrresolute)?;
    let closed = v.cod.theta_closed().iter().all(|b| v.dom.is_theta_closed(v.preimage(b)));
    let open = v.cod.theta_open().iter().all(|b| v.dom.is_theta_open(v.preimage(b)));
    Ok(require(wei == closed && closed == open, || {
        json!({ "weakly_irresolute": wei, "theta_closed_preimages": closed, "theta_open_preimages": open })
    }))
}

pub fn dset_preimage(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !v.is_surjective() || !has(&v, P::WeaklyEStarIrresolute)? {
        return Ok(Verdict::Vacuous);
    }
    try_each(v.cod.family(F::DSet).iter(), |a| {
        let pullback = preimage_dset(&v, a)?;
        Ok(require(pullback.holds, || {
            json!({
                "set": fmt(v.cod, a),
                "preimage": fmt(v.dom, v.preimage(a)),
                "decomposition": [fmt(v.dom, pullback.decomposition.0), fmt(v.dom, pullback.decomposition.1)],
            })
        }))
    })
}

pub fn d1_pullback(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let hypothesis = v.is_injective()
        && v.is_surjective()
        && holds(v.cod, AxiomKind::EStarThetaD1)
        && has(&v, P::WeaklyEStarIrresolute)?;
    Ok(implies(hypothesis, || {
        let w = axioms::holds(v.dom, AxiomKind::EStarThetaD1);
        require(w.holds, || json!({ "domain_witness": format!("{:?}", w.witness) }))
    }))
}

pub fn continuity_diagram(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let s_estar = has(&v, P::SEStarContinuous)?;
    let arrows = [(P::ThetaSEStarContinuous, has(&v, P::ThetaSEStarContinuous)?), (P::SContinuous, has(&v, P::SContinuous)?)];
    Ok(each(arrows, |(kind, h)| implies(h, || require(s_estar, || json!({ "holds": kind.name(), "fails": P::SEStarContinuous.name() })))))
}

pub fn open_s_estar_is_theta(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !(has(&v, P::SEStarContinuous)? && has(&v, P::EStarOpenMap)?) {
        return Ok(Verdict::Vacuous);
    }
    Ok(if has(&v, P::ThetaSEStarContinuous)? {
        Verdict::Holds
    } else {
        Verdict::Fails(map_detail(&v, P::ThetaSEStarContinuous)?)
    })
}

pub fn question(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !has(&v, P::SEStarContinuous)? {
        return Ok(Verdict::Vacuous);
    }
    Ok(if has(&v, P::ThetaSEStarContinuous)? {
        Verdict::Holds
    } else {
        Verdict::Fails(map_detail(&v, P::ThetaSEStarContinuous)?)
    })
}

pub fn graph_lemma(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let rect = v.closed_graph_by_rectangles();
    let image = v.closed_graph_by_images();
    Ok(require(rect == image, || json!({ "rectangles": format!("{rect:?}"), "images": format!("{image:?}") })))
}

pub fn closed_graph(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    let hypothesis = has(&v, P::ThetaSEStarContinuous)?
        && has(&v, P::WeaklyEStarIrresolute)?
        && holds(v.cod, AxiomKind::EStarT1);
    if !hypothesis {
        return Ok(Verdict::Vacuous);
    }
    Ok(if has(&v, P::StronglyEStarThetaClosedGraph)? {
        Verdict::Holds
    } else {
        Verdict::Fails(map_detail(&v, P::StronglyEStarThetaClosedGraph)?)
    })
}

fn open_neighbourhoods(t: &OperatorTable, x: usize) -> impl Iterator<Item = PointSet> + '_ {
    t.space().opens().containing(x)
}

pub fn theta_s_by_closed_sets(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !has(&v, P::WeaklyEStarIrresolute)? {
        return Ok(Verdict::Vacuous);
    }
    let theta = has(&v, P::ThetaSEStarContinuous)?;
    let separated = (0..v.dom.len()).all(|x| {
        v.cod.family(F::EStarClosed).iter().filter(|f| !f.contains(v.fx(x))).all(|f| {
            open_neighbourhoods(v.dom, x).any(|o| {
                let image = v.image(v.dom.estar_cl(o));
                v.cod.theta_open().supersets_of(f).any(|w| image.is_disjoint(w))
            })
        })
    });
    Ok(require(theta == separated, || json!({ "theta_s_estar": theta, "closed_set_form": separated })))
}

pub fn theta_s_by_closure_images(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !has(&v, P::WeaklyEStarIrresolute)? {
        return Ok(Verdict::Vacuous);
    }
    let theta = has(&v, P::ThetaSEStarContinuous)?;
    let nested = (0..v.dom.len()).all(|x| {
        v.cod.estar_open().containing(v.fx(x)).all(|w| {
            open_neighbourhoods(v.dom, x).any(|o| v.cod.cl_theta(v.image(v.dom.estar_cl(o))).is_subset(w))
        })
    });
    Ok(require(theta == nested, || json!({ "theta_s_estar": theta, "closure_image_form": nested })))
}

/// Calls `f(z, g_code, g∘f code)` for every map `g` out of the codomain.
fn for_each_follow_up(
    u: &Universe,
    m: &MapInstance,
    mut f: impl FnMut(SpaceId, u64, u64) -> Result<Verdict>,
) -> Result<Verdict> {
    let k = u.bounds().max_map_points;
    let ny = u.size(m.cod);
    try_each(u.spaces_sized(1..=k), |z| {
        let nz = u.size(z);
        try_each(0..map_count(ny, nz), |g| {
            let gi = decode(g, ny, nz);
            let composed: Vec<u8> = m.images.iter().map(|&y| gi[y as usize]).collect();
            f(z, g, encode(&composed, nz))
        })
    })
}

fn follow_up_json(u: &Universe, from: SpaceId, z: SpaceId, g: u64) -> Value {
    let g = MapInstance { dom: from, cod: z, code: g, images: decode(g, u.size(from), u.size(z)) };
    u.map_json(&g)
}

pub fn composition(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    if !u.has(m.dom, m.cod, m.code, P::Continuous)? {
        return Ok(Verdict::Vacuous);
    }
    for_each_follow_up(u, m, |z, g, h| {
        if !u.has(m.cod, z, g, P::ThetaSEStarContinuous)? {
            return Ok(Verdict::Vacuous);
        }
        let ok = u.has(m.dom, z, h, P::ThetaSEStarContinuous)?;
        Ok(require(ok, || json!({ "g": follow_up_json(u, m.cod, z, g) })))
    })
}

pub fn open_surjection_quotient(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !(v.is_surjective() && u.has(m.dom, m.cod, m.code, P::OpenMap)?) {
        return Ok(Verdict::Vacuous);
    }
    for_each_follow_up(u, m, |z, g, h| {
        if !u.has(m.dom, z, h, P::ThetaSEStarContinuous)? {
            return Ok(Verdict::Vacuous);
        }
        let ok = u.has(m.cod, z, g, P::ThetaSEStarContinuous)?;
        Ok(require(ok, || json!({ "g": follow_up_json(u, m.cod, z, g) })))
    })
}

pub fn restriction(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !has(&v, P::ThetaSEStarContinuous)? {
        return Ok(Verdict::Vacuous);
    }
    let f = SpaceMap::new(v.dom.space().clone(), v.cod.space().clone(), m.images.iter().map(|&j| j as usize).collect())?;
    try_each(PointSet::all(v.dom.len()).filter(|a| !a.is_empty()), |a| {
        let r = restrict(&f, a)?;
        let dom = OperatorTable::new(r.domain().clone());
        let rv = MapView { dom: &dom, cod: v.cod, images: r.images() };
        let ok = has(&rv, P::ThetaSEStarContinuous)?;
        Ok(require(ok, || json!({ "subset": fmt(v.dom, a) })))
    })
}

pub fn surjection_r1(u: &Universe, m: &MapInstance) -> Result<Verdict> {
    let v = u.view(m);
    if !(v.is_surjective() && has(&v, P::ThetaSEStarContinuous)?) {
        return Ok(Verdict::Vacuous);
    }
    let w = axioms::holds(v.cod, AxiomKind::EStarR1);
    Ok(require(w.holds, || json!({ "codomain_witness": format!("{:?}", w.witness) })))
}

// Worked examples.

fn parts(checks: &[(&str, bool)]) -> Verdict {
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    require(failed.is_empty(), || json!({ "failed": failed }))
}

fn sets(n: usize, lists: &[&[usize]]) -> SetFamily {
    SetFamily::new(n, lists.iter().map(|l| PointSet::from_points(l.iter().copied())))
}

pub fn union_counterexample() -> Verdict {
    let t = OperatorTable::new(fixtures::two_points_open());
    parts(&[
        ("{1} closed", t.is_theta_closed(PointSet::singleton(0))),
        ("{2} closed", t.is_theta_closed(PointSet::singleton(1))),
        ("{1,2} not closed", !t.is_theta_closed(PointSet::from_points([0, 1]))),
    ])
}

pub fn dset_example() -> Verdict {
    let t = OperatorTable::new(fixtures::star());
    let b = PointSet::singleton(1);
    let theta = SetFamily::filter_all(4, |a| a != b);
    let dsets = SetFamily::filter_all(4, |a| a != t.full());
    parts(&[
        ("theta-open family", *t.theta_open() == theta),
        ("D-set family", *t.family(F::DSet) == dsets),
        ("{b} D-set", t.contains(F::DSet, b)),
        ("{b} not theta-open", !t.is_theta_open(b)),
    ])
}

pub fn kernel_example() -> Verdict {
    let t = OperatorTable::new(fixtures::chain());
    let all = SetFamily::power_set(4);
    let trivial = sets(4, &[&[], &[0, 1, 2, 3]]);
    let beta = sets(4, &[&[], &[0, 1, 2, 3], &[0], &[0, 1], &[0, 2], &[0, 3], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3]]);
    let ab = PointSet::from_points([0, 1]);
    parts(&[
        ("e*-regular = 2^X", *t.family(F::EStarRegular) == all),
        ("e*-theta-open = 2^X", *t.theta_open() == all),
        ("e*-open = 2^X", *t.estar_open() == all),
        ("beta-regular trivial", *t.family(F::BetaRegular) == trivial),
        ("beta-theta-open trivial", *t.family(F::BetaThetaOpen) == trivial),
        ("beta-open list", *t.family(F::BetaOpen) == beta),
        ("e*-kernel", t.ker_theta(ab) == ab),
        ("beta-kernel", t.apply(OperatorKind::BetaKerTheta, ab) == t.full()),
    ])
}

pub fn slightly_example() -> Verdict {
    let t = OperatorTable::new(fixtures::chain());
    parts(&[
        ("slightly e*-theta-R0", holds(&t, AxiomKind::SlightlyEStarThetaR0)),
        ("not slightly beta-theta-R0", !holds(&t, AxiomKind::SlightlyBetaThetaR0)),
        ("beta meet is X", singleton_closure_meet(&t, OperatorKind::BetaClTheta) == t.full()),
    ])
}

pub fn constant_map_example() -> Result<Verdict> {
    let s = fixtures::star();
    let f = SpaceMap::constant(s.clone(), s, 2)?;
    let a = f.analyze()?;
    let v = a.view();
    Ok(parts(&[
        ("S-e*-continuous", has(&v, P::SEStarContinuous)?),
        ("not S-continuous", !has(&v, P::SContinuous)?),
    ]))
}

pub fn r1_example() -> Verdict {
    let t = OperatorTable::new(fixtures::star());
    parts(&[("e*-R1", holds(&t, AxiomKind::EStarR1)), ("not beta-R1", !holds(&t, AxiomKind::BetaR1))])
}

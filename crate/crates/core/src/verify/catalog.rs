//! The claim catalog: one entry per statement, in document order.

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::axioms::AxiomKind;
use crate::error::{Error, Result};

use super::checks as c;
use super::universe::{MapInstance, SpaceId, Universe};
use super::{Tier, Verdict};

pub const QUESTION_ID: &str = "Q5.1-open-question";

/// What a claim quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Every enumerated space with between `min_points` and `max_points` points.
    Spaces { min_points: usize },
    /// Every enumerated space with between `min_points` and `max_map_points` points.
    MapSpaces { min_points: usize },
    /// Ordered pairs of spaces on at most `max_map_points` points.
    SpacePairs,
    /// Maps between spaces on at most `max_map_points` points.
    Maps,
    /// Maps between spaces on exactly `max_map_points` points.
    Question,
    /// A single worked example.
    Fixed,
}

pub(crate) enum Check {
    Space(fn(&Universe, SpaceId) -> Result<Verdict>),
    Pair(fn(&Universe, SpaceId, SpaceId) -> Result<Verdict>),
    Map(fn(&Universe, &MapInstance) -> Result<Verdict>),
    Fixed(fn() -> Result<Verdict>),
}

pub struct ClaimSpec {
    pub id: &'static str,
    pub tier: Tier,
    pub domain: Domain,
    /// The statement as quoted from its source.
    pub citation: &'static str,
    pub(crate) check: Check,
}

impl ClaimSpec {
    fn space_ids(&self, u: &Universe) -> std::ops::Range<SpaceId> {
        let b = u.bounds();
        let sizes = match self.domain {
            Domain::Spaces { min_points } => min_points..=b.max_points,
            Domain::MapSpaces { min_points } => min_points..=b.max_map_points,
            _ => 0..=0,
        };
        let ids: Vec<SpaceId> = u.spaces_sized(sizes).collect();
        match (ids.first(), ids.last()) {
            (Some(&a), Some(&z)) => a..z + 1,
            _ => 0..0,
        }
    }

    pub fn instance_count(&self, u: &Universe) -> u64 {
        match self.domain {
            Domain::Spaces { .. } | Domain::MapSpaces { .. } => self.space_ids(u).len() as u64,
            Domain::SpacePairs => u.pairs().len() as u64,
            Domain::Maps => u.maps().len(),
            Domain::Question => u.question_maps().len(),
            Domain::Fixed => 1,
        }
    }

    fn map(&self, u: &Universe, i: u64) -> MapInstance {
        match self.domain {
            Domain::Question => u.question_maps().get(u, i),
            _ => u.maps().get(u, i),
        }
    }

    pub fn check(&self, u: &Universe, i: u64) -> Result<Verdict> {
        match &self.check {
            Check::Space(f) => f(u, self.space_ids(u).start + i as usize),
            Check::Pair(f) => {
                let (a, b) = u.pairs()[i as usize];
                f(u, a, b)
            }
            Check::Map(f) => f(u, &self.map(u, i)),
            Check::Fixed(f) => f(),
        }
    }

    pub fn describe(&self, u: &Universe, i: u64) -> Value {
        match self.domain {
            Domain::Spaces { .. } | Domain::MapSpaces { .. } => json!({ "space": u.space_json(self.space_ids(u).start + i as usize) }),
            Domain::SpacePairs => {
                let (a, b) = u.pairs()[i as usize];
                json!({ "x": u.space_json(a), "y": u.space_json(b) })
            }
            Domain::Maps | Domain::Question => u.map_json(&self.map(u, i)),
            Domain::Fixed => json!({ "example": self.id }),
        }
    }

    /// The section number embedded in the id.
    pub fn section(&self) -> u32 {
        let digits: String = self.id.chars().skip_while(|c| !c.is_ascii_digit()).take_while(|c| c.is_ascii_digit()).collect();
        digits.parse().unwrap_or(0)
    }
}

pub fn find(id: &str) -> Result<&'static ClaimSpec> {
    catalog().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

macro_rules! space {
    ($f:path) => {
        Check::Space(|u, id| Ok($f(u.table(id))))
    };
}

macro_rules! axiom_arrow {
    ($from:ident => $to:ident) => {
        Check::Space(|u, id| Ok(c::axiom_implies(u.table(id), AxiomKind::$from, AxiomKind::$to)))
    };
}

fn claim(id: &'static str, tier: Tier, domain: Domain, citation: &'static str, check: Check) -> ClaimSpec {
    ClaimSpec { id, tier, domain, citation, check }
}

pub fn catalog() -> &'static [ClaimSpec] {
    static CATALOG: OnceLock<Vec<ClaimSpec>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

fn build() -> Vec<ClaimSpec> {
    use Domain::*;
    use Tier::*;
    let all = Spaces { min_points: 1 };
    vec![
        claim(
            "T2.1-estar-regular-closure",
            Core,
            all,
            "A ∈ e*O(X) if and only if e*-cl(A) ∈ e*R(X); A ∈ e*C(X) if and only if e*-int(A) ∈ e*R(X)",
            space!(c::estar_open_iff_closure_regular),
        ),
        claim(
            "C2.2a-theta-open-regular-base",
            Core,
            all,
            "A is e*-θ-open in X if and only if for each x ∈ A there exists U ∈ e*R(X,x) such that x ∈ U ⊆ A",
            space!(c::theta_open_by_regular_neighbourhoods),
        ),
        claim(
            "C2.2b-theta-open-unions",
            Core,
            all,
            "If A_α is e*-θ-open in X for each α, then ⋃ A_α is e*-θ-open in X",
            space!(c::theta_open_union_closed),
        ),
        claim(
            "T2.3a-closures-agree-on-estar-open",
            Core,
            all,
            "If A ∈ e*O(X), then e*-cl(A) = e*-cl_θ(A)",
            space!(c::closures_agree_on_estar_open),
        ),
        claim(
            "T2.3b-regular-iff-theta-clopen",
            Core,
            all,
            "A ∈ e*R(X) if and only if A is e*-θ-open and e*-θ-closed",
            space!(c::regular_iff_theta_clopen),
        ),
        claim(
            "T2.5-estar-regular-space-equivalences",
            Core,
            all,
            "X is e*-regular; for each open U ∋ x there exists V ∈ e*O(X) with x ∈ V ⊆ e*-cl(V) ⊆ U; for each U ∈ e*O(X) and x ∈ U there exists V ∈ e*R(X) with x ∈ V ⊆ U",
            space!(c::estar_regular_space_equivalences),
        ),
        claim(
            "T2.7-weakly-irresolute-equivalences",
            Core,
            Maps,
            "f is weakly e*-irresolute; f[e*-cl(A)] ⊆ e*-cl_θ(f[A]) for every subset A; f⁻¹[V] is e*-θ-open for every e*-θ-open V",
            Check::Map(c::weakly_irresolute_three_ways),
        ),
        claim(
            "R2.7-regular-theta-open-chain",
            Core,
            all,
            "e*-regular ⇒ e*-θ-open ⇒ e*-open",
            space!(c::regular_theta_open_chain),
        ),
        claim(
            "T2.8-kapanis",
            Core,
            all,
            "e*-cl_θ(A) = ⋂{V | A ⊆ V and V is e*-θ-closed} = ⋂{V | A ⊆ V and V ∈ e*R(X)}",
            space!(c::theta_closure_as_meets),
        ),
        claim(
            "R2.9-theta-closed-intersections",
            Core,
            all,
            "the intersection of an arbitrary collection of e*-θ-closed sets is e*-θ-closed; X and ∅ are e*-θ-closed",
            space!(c::theta_closed_intersections),
        ),
        claim(
            "EX2.12-union-counterexample",
            Core,
            Fixed,
            "The subsets {1} and {2} are e*-θ-closed in (X,τ) but {1,2} is not e*-θ-closed",
            Check::Fixed(|| Ok(c::union_counterexample())),
        ),
        claim(
            "T2.11-regular-by-closure-interior",
            Core,
            all,
            "A ∈ e*R(X); A = e*-cl(e*-int(A)); A = e*-int(e*-cl(A))",
            space!(c::regular_by_closure_interior),
        ),
        claim(
            "T2.12-theta-closure-idempotent",
            Core,
            all,
            "e*-cl_θ(e*-cl_θ(A)) = e*-cl_θ(A)",
            space!(c::theta_closure_idempotent),
        ),
        claim(
            "R3.2-theta-complement-open",
            PaperNew,
            all,
            "the equivalence of θ-c-e*-open and e*-θ-open is obvious",
            space!(c::theta_complement_open),
        ),
        claim(
            "T3.3-interior-of-theta-closure",
            PaperNew,
            all,
            "If A is e*-open, then e*-int(e*-cl_θ(A)) is e*-θ-open",
            space!(c::interior_of_theta_closure),
        ),
        claim(
            "T3.4-theta-open-regular-iff-closures-regular",
            PaperNew,
            all,
            "the notion of e*-θ-open is equivalent to the notion of e*-regular if and only if e*-cl_θ(A) is e*-regular for every set A ⊆ X",
            space!(c::theta_open_regular_iff_closures_regular),
        ),
        claim(
            "T3.5-theta-open-union-of-regular",
            PaperNew,
            all,
            "If B is e*-θ-open, then B is an union some of e*-regular sets",
            space!(c::theta_open_union_of_regular),
        ),
        claim(
            "C3.6-theta-closed-meet-of-regular",
            PaperNew,
            all,
            "If B is e*-θ-closed, then B is an intersection some of e*-regular sets",
            space!(c::theta_closed_meet_of_regular),
        ),
        claim(
            "R4.2-theta-open-is-dset",
            PaperNew,
            all,
            "every e*-θ-open set U different from X is an e*-θ-D-set",
            space!(c::proper_theta_open_is_dset),
        ),
        claim(
            "R4.3-separation-diagram",
            PaperNew,
            all,
            "e*θ-T2 ⇒ e*θ-T1 ⇒ e*θ-T0, e*-θ-D2 ⇒ e*-θ-D1 ⇒ e*-θ-D0, and each e*θ-Ti ⇒ e*-θ-Di",
            space!(c::separation_diagram),
        ),
        claim(
            "EX4.4-dset-not-theta-open",
            PaperNew,
            Fixed,
            "e*θO(X) = 2^X∖{{b}} and e*θD(X) = 2^X∖{X}; the set {b} is an e*-θ-D-set but it is not e*-θ-open",
            Check::Fixed(|| Ok(c::dset_example())),
        ),
        claim(
            "T4.5-T0-implies-T2",
            PaperNew,
            all,
            "If X is e*θ-T0, then it is e*θ-T2",
            axiom_arrow!(EStarThetaT0 => EStarThetaT2),
        ),
        claim(
            "T4.6-D0-implies-T0",
            PaperNew,
            all,
            "If X is e*-θ-D0, then it is e*θ-T0",
            axiom_arrow!(EStarThetaD0 => EStarThetaT0),
        ),
        claim(
            "C4.7-separation-equivalence",
            PaperNew,
            Spaces { min_points: 2 },
            "all notions given in the diagram are equivalent",
            space!(c::separation_equivalent),
        ),
        claim(
            "T4.10-D1-no-cc-point",
            PaperNew,
            all,
            "If X is e*-θ-D1, then X has no e*-θ-cc-point",
            space!(c::d1_has_no_cc_point),
        ),
        claim(
            "L4.12-theta-closure-by-regular",
            PaperNew,
            all,
            "x ∈ e*-cl_θ(A) if and only if U ∩ A ≠ ∅ for each U ∈ e*R(X,x)",
            space!(c::theta_closure_by_regular),
        ),
        claim(
            "T4.13a-singleton-closure-symmetry",
            PaperNew,
            all,
            "x ∈ e*-cl_θ({y}) implies y ∈ e*-cl_θ({x})",
            space!(c::singleton_closure_symmetry),
        ),
        claim(
            "T4.13b-singletons-quasi-closed",
            PaperNew,
            all,
            "For each x ∈ X, the singleton {x} is qe*θ-closed in X",
            space!(c::singletons_quasi_closed),
        ),
        claim(
            "T4.14-Thalf-iff-T1",
            PaperNew,
            all,
            "X is e*-θ-T1/2 if and only if X is e*θ-T1",
            space!(c::thalf_iff_t1),
        ),
        claim(
            "R4.15-weakly-irresolute-preimages",
            PaperNew,
            Maps,
            "f is weakly e*-irresolute if and only if f⁻¹[V] is e*-θ-closed (resp. e*-θ-open) for every e*-θ-closed (resp. e*-θ-open) V",
            Check::Map(c::weakly_irresolute_closed_preimages),
        ),
        claim(
            "T4.15-dset-preimage",
            PaperNew,
            Maps,
            "If f is a weakly e*-irresolute surjection and A is an e*-θ-D-set in Y, then the inverse image of A is an e*-θ-D-set in X",
            Check::Map(c::dset_preimage),
        ),
        claim(
            "T4.16-D1-pullback",
            PaperNew,
            Maps,
            "If Y is an e*-θ-D1 space and f is a weakly e*-irresolute bijection, then X is e*-θ-D1",
            Check::Map(c::d1_pullback),
        ),
        claim(
            "T4.17-D1-characterization",
            PaperNew,
            MapSpaces { min_points: 2 },
            "X is e*-θ-D1 if and only if for each pair of distinct points x, y there exists a weakly e*-irresolute surjection f onto an e*-θ-D1 space with f(x) ≠ f(y)",
            Check::Space(c::d1_by_surjections),
        ),
        claim(
            "EX5.2-kernel-example",
            PaperNew,
            Fixed,
            "e*R(X) = e*θO(X) = e*O(X) = 2^X, βR(X) = βθO(X) = {∅,X}, βO(X) has nine members; e*-ker_θ(A) = A ≠ X = β-ker_θ(A)",
            Check::Fixed(|| Ok(c::kernel_example())),
        ),
        claim(
            "EX5.4-slightly-R0-example",
            PaperNew,
            Fixed,
            "the space X is a slightly e*-θ-R0 space; the space X is not a slightly β-θ-R0 space",
            Check::Fixed(|| Ok(c::slightly_example())),
        ),
        claim(
            "T5.5-kernel-characterization",
            PaperNew,
            all,
            "e*-ker_θ(A) = {x ∈ X | e*-cl_θ({x}) ∩ A ≠ ∅}",
            space!(c::kernel_by_singleton_closures),
        ),
        claim(
            "T5.6-slightly-R0-iff-kernels",
            PaperNew,
            all,
            "X is slightly e*-θ-R0 if and only if e*-ker_θ({x}) ≠ X for any x ∈ X",
            space!(c::slightly_r0_iff_kernels),
        ),
        claim(
            "T5.7-product-slightly-R0",
            PaperNew,
            SpacePairs,
            "If X is slightly e*-θ-R0, then the product X × Y is slightly e*-θ-R0",
            Check::Pair(|u, a, b| c::product_slightly_r0(u.table(a), u.table(b))),
        ),
        claim(
            "R5.8-continuity-diagram",
            PaperNew,
            Maps,
            "θ-S-e*-continuous → S-e*-continuous ← S-continuous",
            Check::Map(c::continuity_diagram),
        ),
        claim(
            "EX5.9-constant-map",
            PaperNew,
            Fixed,
            "The function f is S-e*-continuous but it is not S-continuous",
            Check::Fixed(c::constant_map_example),
        ),
        claim(
            QUESTION_ID,
            PaperNew,
            Question,
            "Is there any S-e*-continuous function which is not θ-S-e*-continuous?",
            Check::Map(c::question),
        ),
        claim(
            "T5.10-S-estar-and-estar-open",
            PaperNew,
            Maps,
            "If f is S-e*-continuous and e*-open, then f is θ-S-e*-continuous",
            Check::Map(c::open_s_estar_is_theta),
        ),
        claim(
            "L5.12-graph-lemma",
            PaperNew,
            Maps,
            "G(f) is strongly e*-θ-closed if and only if for each (x,y) ∉ G(f) there exist U ∈ e*O(X,x) and V ∈ e*θO(Y,y) such that f[e*-cl(U)] ∩ V = ∅",
            Check::Map(c::graph_lemma),
        ),
        claim(
            "T5.14-closed-graph",
            PaperNew,
            Maps,
            "If f is θ-S-e*-continuous weak e*-irresolute and Y is e*-T1, then G(f) is strongly e*-θ-closed",
            Check::Map(c::closed_graph),
        ),
        claim(
            "T5.15-theta-S-by-closed-sets",
            PaperNew,
            Maps,
            "for weak e*-irresolute f: f is θ-S-e*-continuous if and only if for each x and each e*-closed F with f(x) ∉ F there exist an open U ∋ x and an e*-θ-open V ⊇ F with f[e*-cl(U)] ∩ V = ∅",
            Check::Map(c::theta_s_by_closed_sets),
        ),
        claim(
            "C5.16-theta-S-by-closure-images",
            PaperNew,
            Maps,
            "for weak e*-irresolute f: f is θ-S-e*-continuous if and only if for each x and each e*-open V ∋ f(x) there exists an open U ∋ x with e*-cl_θ(f[e*-cl(U)]) ⊆ V",
            Check::Map(c::theta_s_by_closure_images),
        ),
        claim(
            "T5.17-composition",
            PaperNew,
            Maps,
            "If f is continuous and g is θ-S-e*-continuous, then g∘f is θ-S-e*-continuous",
            Check::Map(c::composition),
        ),
        claim(
            "T5.18-open-surjection-quotient",
            PaperNew,
            Maps,
            "If g∘f is θ-S-e*-continuous and f is an open surjection, then g is θ-S-e*-continuous",
            Check::Map(c::open_surjection_quotient),
        ),
        claim(
            "T5.19-restriction",
            PaperNew,
            Maps,
            "If f is θ-S-e*-continuous, then f|_A : A → Y is θ-S-e*-continuous",
            Check::Map(c::restriction),
        ),
        claim(
            "EX6.2-R1-example",
            PaperNew,
            Fixed,
            "the space X is an e*-R1 space but it is not β-R1",
            Check::Fixed(|| Ok(c::r1_example())),
        ),
        claim(
            "T6.3-R1-iff-closures-agree",
            PaperNew,
            all,
            "X is e*-R1 if and only if e*-cl_θ({x}) = e*-cl({x}) for all x ∈ X",
            space!(c::r1_iff_closures_agree),
        ),
        claim(
            "T6.4-R1-iff-closures-inside",
            PaperNew,
            all,
            "X is e*-R1 if and only if for each e*-open set A and each x ∈ A, e*-cl_θ({x}) ⊆ A",
            space!(c::r1_iff_closures_inside),
        ),
        claim(
            "T6.5-surjection-R1",
            PaperNew,
            Maps,
            "If f is a θ-S-e*-continuous surjection, then Y is an e*-R1 space",
            Check::Map(c::surjection_r1),
        ),
    ]
}

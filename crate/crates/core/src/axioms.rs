//! Space-level predicates: D-set and θ-open separation, T½, slight R0, R1,
//! e*-T1 and e*-regularity, plus θ-neighbourhoods and kernels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::operators::{named_enum, FamilyKind, OperatorKind, OperatorTable};
use crate::set::{join_of_subsets, up_closure, PointSet, SetFamily};

named_enum! {
    AxiomKind {
        EStarThetaD0 => "e*-theta-D0",
        EStarThetaD1 => "e*-theta-D1",
        EStarThetaD2 => "e*-theta-D2",
        EStarThetaT0 => "e*theta-T0",
        EStarThetaT1 => "e*theta-T1",
        EStarThetaT2 => "e*theta-T2",
        EStarThetaTHalf => "e*-theta-T1/2",
        SlightlyEStarThetaR0 => "slightly-e*-theta-R0",
        SlightlyBetaThetaR0 => "slightly-beta-theta-R0",
        EStarR1 => "e*-R1",
        BetaR1 => "beta-R1",
        EStarT1 => "e*-T1",
        EStarRegularSpace => "e*-regular",
    }
}

/// Why an axiom fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomWitness {
    /// The first pair, in lexicographic order, that cannot be separated.
    Pair(usize, usize),
    /// A point that lies in no proper D-set (only possible on one point).
    Uncovered(usize),
    /// The nonempty meet of all singleton θ-closures.
    Intersection(PointSet),
    /// A quasi θ-closed set that is not θ-closed.
    QuasiNotClosed(PointSet),
    /// A point and a closed set missing it that admit no disjoint e*-open separation.
    PointAndClosed(usize, PointSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub holds: bool,
    pub witness: Option<AxiomWitness>,
}

impl AxiomOutcome {
    fn from_failure(w: Option<AxiomWitness>) -> Self {
        AxiomOutcome { holds: w.is_none(), witness: w }
    }
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

fn separates(family: &SetFamily, x: usize, y: usize) -> bool {
    family.containing(x).any(|u| !u.contains(y))
}

/// `x` has a member containing it but not `y` or the reverse (`both` = false), or both hold.
fn pair_separated(family: &SetFamily, x: usize, y: usize, both: bool) -> bool {
    let (a, b) = (separates(family, x, y), separates(family, y, x));
    if both {
        a && b
    } else {
        a || b
    }
}

fn first_failing_pair(n: usize, mut ok: impl FnMut(usize, usize) -> bool) -> Option<AxiomWitness> {
    distinct_pairs(n).find(|&(x, y)| !ok(x, y)).map(|(x, y)| AxiomWitness::Pair(x, y))
}

/// Disjoint separation by members of a union-closed family: for some `U ∋ x`,
/// the largest member inside `X ∖ U` must contain `y`.
fn disjointly_separated(family: &SetFamily, inner: &[PointSet], n: usize, x: PointSet, y: PointSet) -> bool {
    family
        .supersets_of(x)
        .any(|u| y.is_subset(inner[u.complement(n).bits() as usize]))
}

fn r1_failure(
    n: usize,
    open: &SetFamily,
    cl: impl Fn(PointSet) -> PointSet,
) -> Option<AxiomWitness> {
    let inner = join_of_subsets(n, open.mask());
    first_failing_pair(n, |x, y| {
        let (cx, cy) = (cl(PointSet::singleton(x)), cl(PointSet::singleton(y)));
        cx == cy || disjointly_separated(open, &inner, n, cx, cy)
    })
}

fn d2_failure(t: &OperatorTable) -> Option<AxiomWitness> {
    let n = t.len();
    let dsets = t.family(FamilyKind::DSet);
    // inside[y][M]: some D-set containing y lies inside M
    let inside: Vec<Vec<bool>> = (0..n)
        .map(|y| {
            let mut marks = vec![false; 1 << n];
            for d in dsets.containing(y) {
                marks[d.bits() as usize] = true;
            }
            up_closure(n, &mut marks);
            marks
        })
        .collect();
    first_failing_pair(n, |x, y| dsets.containing(x).any(|d| inside[y][d.complement(n).bits() as usize]))
}

/// Decides `axiom` on the space behind `t`.
pub fn holds(t: &OperatorTable, axiom: AxiomKind) -> AxiomOutcome {
    use AxiomKind::*;
    let n = t.len();
    let failure = match axiom {
        EStarThetaD0 | EStarThetaD1 | EStarThetaD2 if n == 1 => Some(AxiomWitness::Uncovered(0)),
        EStarThetaD0 => first_failing_pair(n, |x, y| pair_separated(t.family(FamilyKind::DSet), x, y, false)),
        EStarThetaD1 => first_failing_pair(n, |x, y| pair_separated(t.family(FamilyKind::DSet), x, y, true)),
        EStarThetaD2 => d2_failure(t),
        EStarThetaT0 => first_failing_pair(n, |x, y| pair_separated(t.theta_open(), x, y, false)),
        EStarThetaT1 => first_failing_pair(n, |x, y| pair_separated(t.theta_open(), x, y, true)),
        EStarThetaT2 => {
            let inner = join_of_subsets(n, t.theta_open().mask());
            first_failing_pair(n, |x, y| {
                disjointly_separated(t.theta_open(), &inner, n, PointSet::singleton(x), PointSet::singleton(y))
            })
        }
        EStarThetaTHalf => SetFamily::power_set(n)
            .iter()
            .find(|&a| t.cl_theta(a).is_subset(t.ker_theta(a)) && !t.is_theta_closed(a))
            .map(AxiomWitness::QuasiNotClosed),
        SlightlyEStarThetaR0 => {
            let meet = singleton_closure_meet(t, OperatorKind::EStarClTheta);
            (!meet.is_empty()).then_some(AxiomWitness::Intersection(meet))
        }
        SlightlyBetaThetaR0 => {
            let meet = singleton_closure_meet(t, OperatorKind::BetaClTheta);
            (!meet.is_empty()).then_some(AxiomWitness::Intersection(meet))
        }
        EStarR1 => r1_failure(n, t.estar_open(), |a| t.estar_cl(a)),
        BetaR1 => r1_failure(n, t.family(FamilyKind::BetaOpen), |a| t.apply(OperatorKind::BetaCl, a)),
        EStarT1 => first_failing_pair(n, |x, y| pair_separated(t.estar_open(), x, y, true)),
        EStarRegularSpace => {
            let open = t.estar_open();
            let inner = join_of_subsets(n, open.mask());
            t.family(FamilyKind::Closed).iter().find_map(|f| {
                f.complement(n)
                    .iter()
                    .find(|&x| !disjointly_separated(open, &inner, n, f, PointSet::singleton(x)))
                    .map(|x| AxiomWitness::PointAndClosed(x, f))
            })
        }
    };
    AxiomOutcome::from_failure(failure)
}

/// `⋂ { op({x}) : x ∈ X }` for a θ-closure operator.
pub fn singleton_closure_meet(t: &OperatorTable, op: OperatorKind) -> PointSet {
    (0..t.len()).fold(t.full(), |acc, x| acc.intersection(t.apply(op, PointSet::singleton(x))))
}

impl AxiomWitness {
    /// Re-evaluates the failure this witness claims, straight from the definitions.
    pub fn certifies(&self, t: &OperatorTable, axiom: AxiomKind) -> bool {
        use AxiomKind::*;
        let n = t.len();
        let full = t.full();
        match (*self, axiom) {
            (AxiomWitness::Uncovered(x), EStarThetaD0 | EStarThetaD1 | EStarThetaD2) => {
                n == 1 && t.family(FamilyKind::DSet).containing(x).next().is_none()
            }
            (AxiomWitness::Pair(x, y), _) => {
                let sets = |k| t.family(k).iter().collect::<Vec<_>>();
                let sep = |fam: &[PointSet], p: usize, q: usize| fam.iter().any(|u| u.contains(p) && !u.contains(q));
                let disjoint = |fam: &[PointSet], a: PointSet, b: PointSet| {
                    fam.iter().any(|u| a.is_subset(*u) && fam.iter().any(|v| b.is_subset(*v) && u.is_disjoint(*v)))
                };
                let (sx, sy) = (PointSet::singleton(x), PointSet::singleton(y));
                match axiom {
                    EStarThetaD0 => { let d = sets(FamilyKind::DSet); !sep(&d, x, y) && !sep(&d, y, x) }
                    EStarThetaD1 => { let d = sets(FamilyKind::DSet); !sep(&d, x, y) || !sep(&d, y, x) }
                    EStarThetaD2 => !disjoint(&sets(FamilyKind::DSet), sx, sy),
                    EStarThetaT0 => { let o = sets(FamilyKind::EStarThetaOpen); !sep(&o, x, y) && !sep(&o, y, x) }
                    EStarThetaT1 => { let o = sets(FamilyKind::EStarThetaOpen); !sep(&o, x, y) || !sep(&o, y, x) }
                    EStarThetaT2 => !disjoint(&sets(FamilyKind::EStarThetaOpen), sx, sy),
                    EStarT1 => { let o = sets(FamilyKind::EStarOpen); !sep(&o, x, y) || !sep(&o, y, x) }
                    EStarR1 | BetaR1 => {
                        let (fam, op) = if axiom == EStarR1 {
                            (sets(FamilyKind::EStarOpen), OperatorKind::EStarCl)
                        } else {
                            (sets(FamilyKind::BetaOpen), OperatorKind::BetaCl)
                        };
                        let (cx, cy) = (t.apply(op, sx), t.apply(op, sy));
                        cx != cy && !disjoint(&fam, cx, cy)
                    }
                    _ => false,
                }
            }
            (AxiomWitness::Intersection(m), SlightlyEStarThetaR0 | SlightlyBetaThetaR0) => {
                let op = if axiom == SlightlyEStarThetaR0 { OperatorKind::EStarClTheta } else { OperatorKind::BetaClTheta };
                !m.is_empty() && (0..n).fold(full, |acc, x| acc.intersection(t.apply(op, PointSet::singleton(x)))) == m
            }
            (AxiomWitness::QuasiNotClosed(a), EStarThetaTHalf) => is_quasi_theta_closed(t, a) && !t.is_theta_closed(a),
            (AxiomWitness::PointAndClosed(x, f), EStarRegularSpace) => {
                let o = t.estar_open();
                t.space().is_closed(f)
                    && !f.contains(x)
                    && !o.containing(x).any(|u| o.supersets_of(f).any(|v| u.is_disjoint(v)))
            }
            _ => false,
        }
    }
}

/// True iff `cl_θ(A) ⊆ U` for every e*-θ-open `U ⊇ A`.
pub fn is_quasi_theta_closed(t: &OperatorTable, a: PointSet) -> bool {
    let c = t.cl_theta(a);
    t.theta_open().supersets_of(a).all(|u| c.is_subset(u))
}

/// `{ N : x ∈ U ⊆ N for some e*-θ-open U }`.
pub fn theta_neighbourhoods(t: &OperatorTable, x: usize) -> SetFamily {
    let n = t.len();
    let mut marks = vec![false; 1 << n];
    for u in t.theta_open().containing(x) {
        marks[u.bits() as usize] = true;
    }
    up_closure(n, &mut marks);
    SetFamily::filter_all(n, |a| marks[a.bits() as usize])
}

/// Points whose only e*-θ-neighbourhood is the whole space.
pub fn cc_points(t: &OperatorTable) -> PointSet {
    PointSet::from_points((0..t.len()).filter(|&x| t.theta_open().containing(x).all(|u| u == t.full())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    /// `e*-ker_θ({x})` for each point.
    pub kernels: Vec<PointSet>,
    pub slightly_r0: bool,
}

/// Singleton kernels, checking that slight R0 holds exactly when no singleton kernel is `X`.
pub fn kernel_diagnostics(t: &OperatorTable) -> Result<KernelReport> {
    let kernels: Vec<PointSet> = (0..t.len()).map(|x| t.ker_theta(PointSet::singleton(x))).collect();
    let slightly_r0 = holds(t, AxiomKind::SlightlyEStarThetaR0).holds;
    let by_kernels = kernels.iter().all(|k| *k != t.full());
    if slightly_r0 != by_kernels {
        return Err(Error::InternalCharacterizationMismatch(format!(
            "slightly e*-θ-R0 is {slightly_r0} but the kernel test gives {by_kernels}"
        )));
    }
    Ok(KernelReport { kernels, slightly_r0 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub outcomes: Vec<(AxiomKind, AxiomOutcome)>,
    pub cc_points: PointSet,
}

impl AxiomReport {
    pub fn get(&self, kind: AxiomKind) -> AxiomOutcome {
        self.outcomes.iter().find(|(k, _)| *k == kind).map(|(_, o)| *o).expect("every kind is reported")
    }
}

pub fn report(t: &OperatorTable) -> AxiomReport {
    AxiomReport {
        outcomes: AxiomKind::ALL.iter().map(|&k| (k, holds(t, k))).collect(),
        cc_points: cc_points(t),
    }
}

//! Generalized open sets and their closure, interior and kernel operators.
//!
//! Everything is evaluated over all `2^n` subsets once per space and memoized in
//! an [`OperatorTable`]; the heavier e*-, β- and D-set groups are filled on
//! first use.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::{cluster_operator, down_closure, join_of_subsets, meet_of_supersets, PointSet, SetFamily, SubsetMask};
use crate::space::FiniteSpace;

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $label:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $label),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|k| k.name() == s)
                    .ok_or_else(|| {
                        let names: Vec<_> = $name::ALL.iter().map(|k| k.name()).collect();
                        format!("unknown {} {s:?}; expected one of {}", stringify!($name), names.join(", "))
                    })
            }
        }
    };
}
pub(crate) use named_enum;

named_enum! {
    /// The set families a space carries.
    FamilyKind {
        Open => "open",
        Closed => "closed",
        RegularOpen => "regular-open",
        RegularClosed => "regular-closed",
        DeltaOpen => "delta-open",
        EStarOpen => "e*-open",
        EStarClosed => "e*-closed",
        EStarRegular => "e*-regular",
        EStarThetaOpen => "e*-theta-open",
        EStarThetaClosed => "e*-theta-closed",
        BetaOpen => "beta-open",
        BetaClosed => "beta-closed",
        BetaRegular => "beta-regular",
        BetaThetaOpen => "beta-theta-open",
        DSet => "e*-theta-d",
    }
}

named_enum! {
    /// Set operators; the `*Cl*` and kernel kinds are extensive, the `*Int*` kinds intensive.
    OperatorKind {
        Cl => "cl",
        Int => "int",
        DeltaCl => "delta-cl",
        DeltaInt => "delta-int",
        EStarCl => "e*-cl",
        EStarInt => "e*-int",
        EStarClTheta => "e*-cl_theta",
        EStarIntTheta => "e*-int_theta",
        EStarKerTheta => "e*-ker_theta",
        BetaCl => "beta-cl",
        BetaInt => "beta-int",
        BetaClTheta => "beta-cl_theta",
        BetaKerTheta => "beta-ker_theta",
    }
}

impl OperatorKind {
    /// The interior operator dual to a closure operator under complementation.
    pub fn dual(self) -> Option<OperatorKind> {
        use OperatorKind::*;
        match self {
            Cl => Some(Int),
            Int => Some(Cl),
            DeltaCl => Some(DeltaInt),
            DeltaInt => Some(DeltaCl),
            EStarCl => Some(EStarInt),
            EStarInt => Some(EStarCl),
            EStarClTheta => Some(EStarIntTheta),
            EStarIntTheta => Some(EStarClTheta),
            BetaCl => Some(BetaInt),
            BetaInt => Some(BetaCl),
            EStarKerTheta | BetaClTheta | BetaKerTheta => None,
        }
    }

    pub fn is_interior(self) -> bool {
        use OperatorKind::*;
        matches!(self, Int | DeltaInt | EStarInt | EStarIntTheta | BetaInt)
    }
}

/// Operators derived from one family of generalized open sets
/// (e*-open or β-open): closure, interior, θ-closure and θ-kernel.
struct Generalized {
    open: SetFamily,
    closed: SetFamily,
    regular: SetFamily,
    cl: Vec<PointSet>,
    int: Vec<PointSet>,
    cl_theta: Vec<PointSet>,
    theta_closed: SetFamily,
    theta_open: SetFamily,
    ker_theta: Vec<PointSet>,
}

impl Generalized {
    fn new(n: usize, open: SetFamily) -> Self {
        let closed = open.complements();
        let regular = open.intersect(&closed);
        let cl = meet_of_supersets(n, closed.mask());
        let int = join_of_subsets(n, open.mask());
        // x is a θ-cluster point of A unless some generalized-open U ∋ x has cl(U) ∩ A = ∅
        let cl_theta = cluster_operator(n, |x| open.containing(x).map(|u| cl[u.bits() as usize]).collect::<Vec<_>>());
        let theta_closed = SetFamily::filter_all(n, |a| cl_theta[a.bits() as usize] == a);
        let theta_open = theta_closed.complements();
        let ker_theta = meet_of_supersets(n, theta_open.mask());
        Generalized { open, closed, regular, cl, int, cl_theta, theta_closed, theta_open, ker_theta }
    }
}

struct Base {
    closed: SetFamily,
    cl: Vec<PointSet>,
    int: Vec<PointSet>,
    regular_open: SetFamily,
    regular_closed: SetFamily,
    delta_open: SetFamily,
    delta_cl: Vec<PointSet>,
    delta_int: Vec<PointSet>,
}

/// Memoized families and operator values for one space.
///
/// Cached values always equal a recomputation from the definitions; the lazily
/// filled groups use [`OnceLock`], so concurrent readers see one consistent fill.
pub struct OperatorTable {
    space: FiniteSpace,
    base: Base,
    estar: OnceLock<Generalized>,
    beta: OnceLock<Generalized>,
    dset: OnceLock<SetFamily>,
}

impl fmt::Debug for OperatorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorTable").field("space", &self.space).finish_non_exhaustive()
    }
}

#[inline]
fn at(values: &[PointSet], a: PointSet) -> PointSet {
    values[a.bits() as usize]
}

impl OperatorTable {
    pub fn new(space: FiniteSpace) -> Self {
        let n = space.len();
        let cl: Vec<PointSet> = PointSet::all(n).map(|a| space.closure(a)).collect();
        let int: Vec<PointSet> = PointSet::all(n).map(|a| space.interior(a)).collect();
        let closed = space.opens().complements();
        let regular_open = SetFamily::filter_all(n, |a| at(&int, at(&cl, a)) == a);
        let regular_closed = SetFamily::filter_all(n, |a| at(&cl, at(&int, a)) == a);

        // δ-cl(A) = { x : int(cl(U)) ∩ A ≠ ∅ for every open U ∋ x }
        let delta_cl = cluster_operator(n, |x| {
            space.opens().containing(x).map(|u| at(&int, at(&cl, u))).collect::<Vec<_>>()
        });
        let delta_int = join_of_subsets(n, regular_open.mask());
        for a in PointSet::all(n) {
            assert_eq!(
                at(&delta_cl, a),
                at(&delta_int, a.complement(n)).complement(n),
                "δ-closure disagrees with the complement of the δ-interior at {a:?}"
            );
        }
        let delta_open = SetFamily::filter_all(n, |a| at(&delta_int, a) == a);

        OperatorTable {
            space,
            base: Base { closed, cl, int, regular_open, regular_closed, delta_open, delta_cl, delta_int },
            estar: OnceLock::new(),
            beta: OnceLock::new(),
            dset: OnceLock::new(),
        }
    }

    /// Like [`OperatorTable::new`] but refuses carriers above `limit` points.
    pub fn with_limit(space: FiniteSpace, limit: usize) -> Result<Self> {
        if space.len() > limit {
            return Err(Error::CarrierTooLarge { points: space.len(), limit });
        }
        Ok(Self::new(space))
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn full(&self) -> PointSet {
        self.space.full()
    }

    fn estar(&self) -> &Generalized {
        self.estar.get_or_init(|| {
            let n = self.len();
            let b = &self.base;
            // A ⊆ cl(int(δ-cl(A)))
            let open = SetFamily::filter_all(n, |a| a.is_subset(at(&b.cl, at(&b.int, at(&b.delta_cl, a)))));
            Generalized::new(n, open)
        })
    }

    fn beta(&self) -> &Generalized {
        self.beta.get_or_init(|| {
            let n = self.len();
            let b = &self.base;
            // A ⊆ cl(int(cl(A)))
            let open = SetFamily::filter_all(n, |a| a.is_subset(at(&b.cl, at(&b.int, at(&b.cl, a)))));
            Generalized::new(n, open)
        })
    }

    fn dsets(&self) -> &SetFamily {
        self.dset.get_or_init(|| compute_dsets(self))
    }

    pub fn family(&self, kind: FamilyKind) -> &SetFamily {
        use FamilyKind::*;
        match kind {
            Open => self.space.opens(),
            Closed => &self.base.closed,
            RegularOpen => &self.base.regular_open,
            RegularClosed => &self.base.regular_closed,
            DeltaOpen => &self.base.delta_open,
            EStarOpen => &self.estar().open,
            EStarClosed => &self.estar().closed,
            EStarRegular => &self.estar().regular,
            EStarThetaOpen => &self.estar().theta_open,
            EStarThetaClosed => &self.estar().theta_closed,
            BetaOpen => &self.beta().open,
            BetaClosed => &self.beta().closed,
            BetaRegular => &self.beta().regular,
            BetaThetaOpen => &self.beta().theta_open,
            DSet => self.dsets(),
        }
    }

    /// β-θ-closed sets; not a reported family kind but needed by the β axioms.
    pub fn beta_theta_closed(&self) -> &SetFamily {
        &self.beta().theta_closed
    }

    pub fn contains(&self, kind: FamilyKind, a: PointSet) -> bool {
        self.family(kind).contains(a)
    }

    pub fn apply(&self, kind: OperatorKind, a: PointSet) -> PointSet {
        use OperatorKind::*;
        let n = self.len();
        debug_assert!(a.fits(n));
        match kind {
            Cl => at(&self.base.cl, a),
            Int => at(&self.base.int, a),
            DeltaCl => at(&self.base.delta_cl, a),
            DeltaInt => at(&self.base.delta_int, a),
            EStarCl => at(&self.estar().cl, a),
            EStarInt => at(&self.estar().int, a),
            EStarClTheta => at(&self.estar().cl_theta, a),
            EStarIntTheta => at(&self.estar().cl_theta, a.complement(n)).complement(n),
            EStarKerTheta => at(&self.estar().ker_theta, a),
            BetaCl => at(&self.beta().cl, a),
            BetaInt => at(&self.beta().int, a),
            BetaClTheta => at(&self.beta().cl_theta, a),
            BetaKerTheta => at(&self.beta().ker_theta, a),
        }
    }

    // Shorthands used throughout the axiom, map and claim code.

    pub fn cl(&self, a: PointSet) -> PointSet {
        at(&self.base.cl, a)
    }

    pub fn estar_cl(&self, a: PointSet) -> PointSet {
        at(&self.estar().cl, a)
    }

    pub fn estar_int(&self, a: PointSet) -> PointSet {
        at(&self.estar().int, a)
    }

    pub fn cl_theta(&self, a: PointSet) -> PointSet {
        at(&self.estar().cl_theta, a)
    }

    pub fn ker_theta(&self, a: PointSet) -> PointSet {
        at(&self.estar().ker_theta, a)
    }

    pub fn is_estar_open(&self, a: PointSet) -> bool {
        self.estar().open.contains(a)
    }

    pub fn is_theta_open(&self, a: PointSet) -> bool {
        self.estar().theta_open.contains(a)
    }

    pub fn is_theta_closed(&self, a: PointSet) -> bool {
        self.estar().theta_closed.contains(a)
    }

    pub fn estar_open(&self) -> &SetFamily {
        &self.estar().open
    }

    pub fn estar_regular(&self) -> &SetFamily {
        &self.estar().regular
    }

    pub fn theta_open(&self) -> &SetFamily {
        &self.estar().theta_open
    }

    pub fn theta_closed(&self) -> &SetFamily {
        &self.estar().theta_closed
    }

    /// e*-closure through the cluster-point form:
    /// `{ x : U ∩ A ≠ ∅ for every e*-open U ∋ x }`.
    pub fn estar_cl_by_clusters(&self, a: PointSet) -> PointSet {
        let open = &self.estar().open;
        PointSet::from_points((0..self.len()).filter(|&x| open.containing(x).all(|u| !u.is_disjoint(a))))
    }

    /// e*-θ-closure evaluated pointwise from the cluster definition, without the cached table.
    pub fn cl_theta_by_definition(&self, a: PointSet) -> PointSet {
        let g = self.estar();
        PointSet::from_points(
            (0..self.len()).filter(|&x| g.open.containing(x).all(|u| !at(&g.cl, u).is_disjoint(a))),
        )
    }
}

fn compute_dsets(table: &OperatorTable) -> SetFamily {
    let n = table.len();
    let full = PointSet::full(n);
    let theta_open = table.theta_open();
    let theta_closed = table.theta_closed();
    let hull = meet_of_supersets(n, theta_closed.mask());
    let inner = join_of_subsets(n, theta_open.mask());
    let mut proper_superset = vec![false; 1 << n];
    for u in theta_open.iter().filter(|u| *u != full) {
        proper_superset[u.bits() as usize] = true;
    }
    down_closure(n, &mut proper_superset);

    let brute = |a: PointSet| {
        theta_open
            .iter()
            .filter(|u| *u != full && a.is_subset(*u))
            .any(|u| theta_closed.iter().any(|c| u.intersection(c) == a))
    };

    // A = U ∖ V with U, V θ-open and U ≠ X. Any such U must avoid H(A) ∖ A, where
    // H(A) is the smallest θ-closed superset of A, and U ∩ H(A) = A then works.
    let mut mask = SubsetMask::new(n);
    for a in PointSet::all(n) {
        let h = at(&hull, a);
        let room = h.difference(a).complement(n);
        let j = at(&inner, room);
        let is_dset = if !theta_closed.contains(h) || !theta_open.contains(j) {
            brute(a)
        } else if !a.is_subset(j) {
            false
        } else if j != full {
            true
        } else {
            proper_superset[a.bits() as usize]
        };
        if is_dset {
            mask.set(a);
        }
    }
    SetFamily::from_mask(n, mask)
}

/// Exact family of `kind` on `space`.
pub fn family(space: &FiniteSpace, kind: FamilyKind) -> Result<SetFamily> {
    Ok(OperatorTable::with_limit(space.clone(), crate::set::MAX_POINTS)?.family(kind).clone())
}

/// Value of operator `kind` at `a` on `space`.
pub fn apply(space: &FiniteSpace, kind: OperatorKind, a: PointSet) -> Result<PointSet> {
    if !a.fits(space.len()) {
        return Err(Error::PointOutOfRange(a));
    }
    Ok(OperatorTable::with_limit(space.clone(), crate::set::MAX_POINTS)?.apply(kind, a))
}

/// Which closure law failed, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFailure {
    pub set: PointSet,
    pub law: &'static str,
}

/// Largest carrier [`cross_check_closures`] accepts.
pub const CROSS_CHECK_LIMIT: usize = 12;

/// Exhausts every subset, checking the θ-closure formulas against each other
/// and the regular-set characterizations. Returns the first failure.
pub fn cross_check_closures(table: &OperatorTable) -> Result<Option<ClosureFailure>> {
    let n = table.len();
    if n > CROSS_CHECK_LIMIT {
        return Err(Error::CarrierTooLarge { points: n, limit: CROSS_CHECK_LIMIT });
    }
    let full = PointSet::full(n);
    let regular = table.estar_regular();
    let theta_closed = table.theta_closed();
    let theta_open = table.theta_open();
    let estar_open = table.estar_open();

    let fail = |set, law| Ok(Some(ClosureFailure { set, law }));
    for a in PointSet::all(n) {
        let c = table.cl_theta(a);
        let via_regular = regular.supersets_of(a).fold(full, PointSet::intersection);
        let via_theta_closed = theta_closed.supersets_of(a).fold(full, PointSet::intersection);
        if c != via_regular {
            return fail(a, "e*-cl_theta equals the meet of e*-regular supersets");
        }
        if c != via_theta_closed {
            return fail(a, "e*-cl_theta equals the meet of e*-theta-closed supersets");
        }
        if table.cl_theta(c) != c {
            return fail(a, "e*-cl_theta is idempotent");
        }
        let is_regular = regular.contains(a);
        if is_regular != (table.estar_cl(table.estar_int(a)) == a) {
            return fail(a, "e*-regular iff A = e*-cl(e*-int(A))");
        }
        if is_regular != (table.estar_int(table.estar_cl(a)) == a) {
            return fail(a, "e*-regular iff A = e*-int(e*-cl(A))");
        }
        if !table.estar_cl(a).is_subset(c) {
            return fail(a, "e*-cl(A) is contained in e*-cl_theta(A)");
        }
        if estar_open.contains(a) && table.estar_cl(a) != c {
            return fail(a, "e*-cl and e*-cl_theta agree on e*-open sets");
        }
        if is_regular != (theta_open.contains(a) && theta_closed.contains(a)) {
            return fail(a, "e*-regular iff e*-theta-open and e*-theta-closed");
        }
        if is_regular && !theta_open.contains(a) {
            return fail(a, "e*-regular sets are e*-theta-open");
        }
        if theta_open.contains(a) && !estar_open.contains(a) {
            return fail(a, "e*-theta-open sets are e*-open");
        }
    }
    Ok(None)
}

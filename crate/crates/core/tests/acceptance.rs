//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use etheta::axioms::{self, AxiomKind};
use etheta::maps::{all_images, property, MapPropertyKind, MapView, SpaceMap};
use etheta::operators::cross_check_closures;
use etheta::par::Executor;
use etheta::space::collect_topologies;
use etheta::verify::{self, catalog, fixtures, Bounds, Status, Tier, Universe};
use etheta::{FamilyKind, FiniteSpace, OperatorKind, OperatorTable, PointSet, SetFamily};

const WORKERS: usize = 4;

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const SMALL_ENUMERATION_LIMIT: Duration = Duration::from_secs(10);
const FIVE_POINT_LIMIT: Duration = Duration::from_secs(120);
const CORE_SUITE_LIMIT: Duration = Duration::from_secs(60);
const FULL_SUITE_LIMIT: Duration = Duration::from_secs(600);
const QUESTION_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t <= limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn family(n: usize, sets: &[&[usize]]) -> SetFamily {
    SetFamily::new(n, sets.iter().map(|s| PointSet::from_points(s.iter().copied())))
}

fn all_but(n: usize, excluded: PointSet) -> SetFamily {
    SetFamily::filter_all(n, |a| a != excluded)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let t = OperatorTable::new(fixtures::two_points_open());
    let s = |p: &[usize]| PointSet::from_points(p.iter().copied());
    check(t.is_theta_closed(s(&[0])), "{1} should be e*-theta-closed")?;
    check(t.is_theta_closed(s(&[1])), "{2} should be e*-theta-closed")?;
    check(!t.is_theta_closed(s(&[0, 1])), "{1,2} should not be e*-theta-closed")?;
    within(start, GOLDEN_LIMIT)?;
    Ok("{1}, {2} e*-theta-closed; {1,2} not".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let t = OperatorTable::new(fixtures::star());
    let b = PointSet::singleton(1);
    check(t.theta_open() == &all_but(4, b), format!("e*-theta-open = {:?}", t.theta_open()))?;
    check(t.family(FamilyKind::DSet) == &all_but(4, PointSet::full(4)), "D-sets differ from 2^X minus X")?;
    within(start, GOLDEN_LIMIT)?;
    Ok("e*θO = 2^X∖{{b}}, e*θD = 2^X∖{X}".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let t = OperatorTable::new(fixtures::chain());
    let power = SetFamily::filter_all(4, |_| true);
    for k in [FamilyKind::EStarRegular, FamilyKind::EStarThetaOpen, FamilyKind::EStarOpen] {
        check(t.family(k) == &power, format!("{k} is not 2^X"))?;
    }
    check(t.family(FamilyKind::BetaThetaOpen) == &family(4, &[&[], &[0, 1, 2, 3]]), "βθO is not {∅,X}")?;
    let beta = family(4, &[&[], &[0, 1, 2, 3], &[0], &[0, 1], &[0, 2], &[0, 3], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3]]);
    check(t.family(FamilyKind::BetaOpen) == &beta, "βO differs from the nine listed sets")?;
    let ab = PointSet::from_points([0, 1]);
    check(t.apply(OperatorKind::EStarKerTheta, ab) == ab, "e*-ker_θ({a,b}) ≠ {a,b}")?;
    check(t.apply(OperatorKind::BetaKerTheta, ab) == t.full(), "β-ker_θ({a,b}) ≠ X")?;
    check(axioms::holds(&t, AxiomKind::SlightlyEStarThetaR0).holds, "not slightly e*-θ-R0")?;
    check(!axioms::holds(&t, AxiomKind::SlightlyBetaThetaR0).holds, "slightly β-θ-R0")?;
    within(start, GOLDEN_LIMIT)?;
    Ok("families, kernels and slight R0 match".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let x = fixtures::star();
    let c = x.index_of("c").unwrap();
    let f = SpaceMap::constant(x.clone(), x.clone(), c).map_err(|e| e.to_string())?;
    let has = |k| property(&f, k).map(|o| o.holds).map_err(|e| e.to_string());
    check(has(MapPropertyKind::SEStarContinuous)?, "constant map is not S-e*-continuous")?;
    check(!has(MapPropertyKind::SContinuous)?, "constant map is S-continuous")?;
    let t = OperatorTable::new(x);
    check(axioms::holds(&t, AxiomKind::EStarR1).holds, "space is not e*-R1")?;
    check(!axioms::holds(&t, AxiomKind::BetaR1).holds, "space is β-R1")?;
    within(start, GOLDEN_LIMIT)?;
    Ok("f ≡ c S-e*-continuous, not S-continuous; e*-R1, not β-R1".into())
}

/// Every family of subsets that contains ∅ and X and is closed under ∪ and ∩.
fn topologies_by_filter(n: usize) -> BTreeSet<Vec<u32>> {
    let subsets = 1usize << n;
    let full = (subsets - 1) as u32;
    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << subsets) {
        let has = |s: u32| mask >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<u32> = (0..subsets as u32).filter(|&s| has(s)).collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)));
        if closed {
            found.insert(members);
        }
    }
    found
}

fn opens_key(s: &FiniteSpace) -> Vec<u32> {
    let mut v: Vec<u32> = s.opens().iter().map(|a| a.bits()).collect();
    v.sort_unstable();
    v
}

fn criterion_5(exec: &Executor, spaces: &mut Vec<FiniteSpace>) -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let got = collect_topologies(n, false, exec).map_err(|e| e.to_string())?;
        let keys: BTreeSet<Vec<u32>> = got.iter().map(opens_key).collect();
        check(keys.len() == got.len(), format!("n={n}: duplicate topologies"))?;
        check(got.len() == expected, format!("n={n}: {} topologies, expected {expected}", got.len()))?;
        check(keys == topologies_by_filter(n), format!("n={n}: differs from the family filter"))?;
        counts.push(got.len());
        spaces.extend(got);
    }
    within(start, SMALL_ENUMERATION_LIMIT)?;
    let start = Instant::now();
    let five = collect_topologies(5, false, exec).map_err(|e| e.to_string())?;
    check(five.len() == 6942, format!("n=5: {} topologies, expected 6942", five.len()))?;
    within(start, FIVE_POINT_LIMIT)?;
    counts.push(five.len());
    spaces.extend(five);
    Ok(format!("counts {counts:?}, n ≤ 4 equal to the brute-force filter"))
}

fn criterion_6(universe: &Universe) -> Outcome {
    let start = Instant::now();
    let core: Vec<_> = catalog().iter().filter(|c| c.tier == Tier::Core).collect();
    let reports = verify::run_suite_in(universe, core.iter().copied());
    for (id, r) in &reports {
        let r = r.as_ref().map_err(|e| format!("{id}: {e}"))?;
        check(r.status == Status::Confirmed, format!("{id}: {}", r.status))?;
        if matches!(verify::find(id).unwrap().domain, verify::Domain::Spaces { .. }) {
            check(r.instances == 389, format!("{id}: {} spaces", r.instances))?;
        }
    }
    within(start, CORE_SUITE_LIMIT)?;
    Ok(format!("{} core claims CONFIRMED over 389 spaces", reports.len()))
}

fn criterion_7(universe: &Universe) -> Outcome {
    let start = Instant::now();
    let reports = verify::run_suite_in(universe, catalog().iter());
    check(reports.len() == catalog().len(), "missing reports")?;
    let mut refuted = Vec::new();
    for (id, r) in &reports {
        let r = r.as_ref().map_err(|e| format!("{id}: {e}"))?;
        check(r.status != Status::BudgetExceeded, format!("{id}: budget exceeded"))?;
        if r.status == Status::Refuted {
            let claim = verify::find(id).unwrap();
            check(verify::recheck(universe, claim, r).map_err(|e| e.to_string())?, format!("{id}: witness does not recheck"))?;
            refuted.push(*id);
        }
    }
    within(start, FULL_SUITE_LIMIT)?;
    Ok(format!("{} claims reported, refuted: {refuted:?}", reports.len()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let run = |w| verify::search_question(&Bounds::new(3).with_workers(w)).map_err(|e| e.to_string());
    let one = run(1)?;
    let eight = run(8)?;
    check(one.to_json() == eight.to_json(), "reports differ across worker counts")?;
    check(one.instances == 22_707, format!("{} instances", one.instances))?;
    check(
        matches!(one.status, Status::ExhaustedNoWitness | Status::Refuted),
        format!("status {}", one.status),
    )?;
    within(start, QUESTION_LIMIT)?;
    Ok(format!("{} over {} maps, identical at 1 and 8 workers", one.status, one.instances))
}

fn dualities_hold(t: &OperatorTable) -> Result<(), String> {
    let full = t.full();
    for &k in OperatorKind::ALL {
        let Some(d) = k.dual().filter(|_| !k.is_interior()) else { continue };
        for a in PointSet::all(t.len()) {
            if t.apply(d, a) != full.difference(t.apply(k, full.difference(a))) {
                return Err(format!("{d} is not dual to {k} at {a:?} in {:?}", t.space()));
            }
        }
    }
    for a in PointSet::all(t.len()) {
        check(t.estar_cl_by_clusters(a) == t.estar_cl(a), format!("e*-cl cluster form at {a:?}"))?;
        check(t.cl_theta_by_definition(a) == t.cl_theta(a), format!("e*-cl_θ cluster form at {a:?}"))?;
    }
    match cross_check_closures(t).map_err(|e| e.to_string())? {
        None => Ok(()),
        Some(f) => Err(format!("{} fails at {:?}", f.law, f.set)),
    }
}

fn criterion_9(spaces: &[FiniteSpace], exec: &Executor) -> Outcome {
    let tables: Vec<OperatorTable> = exec.map(spaces, |s| OperatorTable::new(s.clone()));
    for r in exec.map(&tables, dualities_hold) {
        r?;
    }
    let small: Vec<&OperatorTable> = tables.iter().filter(|t| t.len() <= 3).collect();
    let mut maps = 0u64;
    for x in &small {
        for y in &small {
            for images in all_images(x.len(), y.len()) {
                let v = MapView { dom: x, cod: y, images: &images };
                let pointwise = v.weakly_irresolute_pointwise().is_none();
                let preimages = v.weakly_irresolute_by_preimages().is_none();
                let closures = v.weakly_irresolute_by_closures().is_none();
                check(pointwise == preimages && preimages == closures, format!("weak irresoluteness forms disagree on {images:?}"))?;
                let rect = v.closed_graph_by_rectangles().is_none();
                let img = v.closed_graph_by_images().is_none();
                check(rect == img, format!("closed-graph forms disagree on {images:?}"))?;
                maps += 1;
            }
        }
    }
    check(maps == 24_872, format!("{maps} maps"))?;
    Ok(format!("{} spaces and {maps} maps consistent", tables.len()))
}

fn main() -> ExitCode {
    let exec = Executor::new(WORKERS);
    let mut spaces = Vec::new();
    let mut results: Vec<(u8, Outcome)> = vec![(1, criterion_1()), (2, criterion_2()), (3, criterion_3()), (4, criterion_4())];
    results.push((5, criterion_5(&exec, &mut spaces)));
    match Universe::new(Bounds::new(4).with_workers(WORKERS)) {
        Ok(u) => {
            results.push((6, criterion_6(&u)));
            results.push((7, criterion_7(&u)));
        }
        Err(e) => {
            results.push((6, Err(e.to_string())));
            results.push((7, Err(e.to_string())));
        }
    }
    results.push((8, criterion_8()));
    results.push((9, criterion_9(&spaces, &exec)));

    let mut failed = 0;
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL  {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

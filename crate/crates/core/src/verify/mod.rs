//! Exhaustive checking of the catalogued claims over enumerated spaces and maps.
//!
//! A claim is evaluated instance by instance over its quantifier domain: spaces,
//! ordered pairs of spaces, maps, or a fixed example. Instances come in canonical
//! order, so the first failing instance is the reported witness no matter how the
//! work is split across workers.

mod catalog;
mod checks;
pub mod fixtures;
mod universe;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::space::MAX_ENUMERATION_POINTS;

pub use catalog::{catalog, find, ClaimSpec, Domain, QUESTION_ID};
pub use universe::{MapInstance, SpaceId, Universe};

/// Largest map domain the engine accepts.
pub const MAX_MAP_POINTS: usize = 4;

/// Instances evaluated per parallel batch.
const BATCH: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_points: usize,
    pub max_map_points: usize,
    #[serde(skip, default = "crate::par::default_workers")]
    pub workers: usize,
    /// Most instances one call may evaluate before stopping with a cursor.
    #[serde(skip)]
    pub budget: Option<u64>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::new(4)
    }
}

impl Bounds {
    /// Spaces up to `max_points`, maps up to `min(max_points, 3)`.
    pub fn new(max_points: usize) -> Self {
        Bounds {
            max_points,
            max_map_points: max_points.min(3),
            workers: crate::par::default_workers(),
            budget: None,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_map_points(mut self, max_map_points: usize) -> Self {
        self.max_map_points = max_map_points;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_points == 0 || self.max_map_points == 0 {
            return Err(Error::EmptyCarrier);
        }
        if self.max_points > MAX_ENUMERATION_POINTS {
            return Err(Error::CarrierTooLarge { points: self.max_points, limit: MAX_ENUMERATION_POINTS });
        }
        if self.max_map_points > MAX_MAP_POINTS {
            return Err(Error::CarrierTooLarge { points: self.max_map_points, limit: MAX_MAP_POINTS });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tier {
    /// Results restated from earlier literature; a refutation is a hard failure.
    #[serde(rename = "core")]
    Core,
    #[serde(rename = "paper-new")]
    PaperNew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Refuted,
    ExhaustedNoWitness,
    BudgetExceeded,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("status serializes");
        f.write_str(s.as_str().expect("status is a string"))
    }
}

/// The outcome of one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// The hypothesis never applied.
    Vacuous,
    Holds,
    /// Hypothesis true and conclusion false; the value says where.
    Fails(Value),
}

/// Where an interrupted run stopped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cursor {
    pub claim: String,
    pub bounds: Bounds,
    pub next: u64,
    pub instances: u64,
    pub substantive: u64,
    pub vacuous: u64,
    pub failure: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub tier: Tier,
    pub status: Status,
    pub instances: u64,
    pub substantive: u64,
    pub vacuous: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cursor: Option<Cursor>,
    #[serde(skip)]
    pub wall: Duration,
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    substantive: u64,
    vacuous: u64,
    failure: Option<u64>,
}

/// Runs one claim with a fresh universe.
pub fn run_claim(id: &str, bounds: &Bounds) -> Result<ClaimReport> {
    let claim = find(id)?;
    let universe = Universe::new(bounds.clone())?;
    evaluate(&universe, claim, None)
}

/// Continues a run that stopped at `cursor`.
pub fn resume_claim(cursor: &Cursor, budget: Option<u64>, workers: usize) -> Result<ClaimReport> {
    let claim = find(&cursor.claim)?;
    let mut bounds = cursor.bounds.clone().with_workers(workers);
    bounds.budget = budget;
    let universe = Universe::new(bounds)?;
    evaluate(&universe, claim, Some(cursor))
}

/// The open-question search; exhausting the domain without a witness is reported as such.
pub fn search_question(bounds: &Bounds) -> Result<ClaimReport> {
    run_claim(QUESTION_ID, bounds)
}

/// Runs the whole catalog in order. A failing claim does not stop the others.
pub fn run_suite(bounds: &Bounds) -> Result<Vec<(&'static str, Result<ClaimReport>)>> {
    let universe = Universe::new(bounds.clone())?;
    Ok(run_suite_in(&universe, catalog().iter()))
}

/// Runs the given claims against an existing universe.
pub fn run_suite_in<'a>(
    universe: &Universe,
    claims: impl IntoIterator<Item = &'a ClaimSpec>,
) -> Vec<(&'static str, Result<ClaimReport>)> {
    claims.into_iter().map(|c| (c.id, evaluate(universe, c, None))).collect()
}

/// Evaluates `claim` over its whole domain, or from `cursor` onwards.
pub fn evaluate(universe: &Universe, claim: &ClaimSpec, cursor: Option<&Cursor>) -> Result<ClaimReport> {
    let started = Instant::now();
    let bounds = universe.bounds();
    let mut tally = Tally::default();
    let mut next = 0;
    if let Some(c) = cursor {
        if c.claim != claim.id || c.bounds.max_points != bounds.max_points || c.bounds.max_map_points != bounds.max_map_points {
            return Err(Error::PreconditionUnmet(format!("cursor belongs to {} under other bounds", c.claim)));
        }
        tally = Tally { instances: c.instances, substantive: c.substantive, vacuous: c.vacuous, failure: c.failure };
        next = c.next;
    }
    let total = claim.instance_count(universe);
    let stop = match bounds.budget {
        Some(b) => total.min(next.saturating_add(b)),
        None => total,
    };
    while next < stop {
        let end = stop.min(next + BATCH);
        let verdicts = universe.exec.map_range((end - next) as usize, |i| claim.check(universe, next + i as u64));
        for (i, v) in verdicts.into_iter().enumerate() {
            tally.instances += 1;
            match v? {
                Verdict::Vacuous => tally.vacuous += 1,
                Verdict::Holds => tally.substantive += 1,
                Verdict::Fails(_) => {
                    tally.substantive += 1;
                    tally.failure.get_or_insert(next + i as u64);
                }
            }
        }
        next = end;
    }
    let witness = tally.failure.map(|i| witness(universe, claim, i)).transpose()?;
    let (status, cursor) = if next < total {
        let cursor = Cursor {
            claim: claim.id.to_string(),
            bounds: bounds.clone(),
            next,
            instances: tally.instances,
            substantive: tally.substantive,
            vacuous: tally.vacuous,
            failure: tally.failure,
        };
        (Status::BudgetExceeded, Some(cursor))
    } else if witness.is_some() {
        (Status::Refuted, None)
    } else if claim.domain == Domain::Question {
        (Status::ExhaustedNoWitness, None)
    } else {
        (Status::Confirmed, None)
    };
    Ok(ClaimReport {
        id: claim.id.to_string(),
        tier: claim.tier,
        status,
        instances: tally.instances,
        substantive: tally.substantive,
        vacuous: tally.vacuous,
        witness,
        cursor,
        wall: started.elapsed(),
    })
}

/// Re-evaluates the failing instance through the same check and packages it.
fn witness(universe: &Universe, claim: &ClaimSpec, i: u64) -> Result<Value> {
    match claim.check(universe, i)? {
        Verdict::Fails(detail) => Ok(json!({
            "index": i,
            "instance": claim.describe(universe, i),
            "detail": detail,
        })),
        other => Err(Error::InternalCharacterizationMismatch(format!(
            "{}: instance {i} failed once but re-evaluates to {other:?}",
            claim.id
        ))),
    }
}

/// Re-checks a witness produced by [`evaluate`]: the instance must still fail with the same detail.
pub fn recheck(universe: &Universe, claim: &ClaimSpec, report: &ClaimReport) -> Result<bool> {
    let Some(w) = &report.witness else { return Ok(false) };
    let Some(i) = w["index"].as_u64().filter(|&i| i < claim.instance_count(universe)) else {
        return Ok(false);
    };
    if claim.describe(universe, i) != w["instance"] {
        return Ok(false);
    }
    Ok(matches!(claim.check(universe, i)?, Verdict::Fails(d) if d == w["detail"]))
}

/// Exit status contract: any core-tier refutation is fatal.
pub fn core_refuted(reports: &[(&'static str, Result<ClaimReport>)]) -> bool {
    reports
        .iter()
        .any(|(_, r)| matches!(r, Ok(r) if r.tier == Tier::Core && r.status == Status::Refuted))
}

#[cfg(test)]
mod tests {
    use super::catalog::Check;
    use super::*;
    use crate::operators::FamilyKind;

    fn discrete_only() -> ClaimSpec {
        ClaimSpec {
            id: "every-space-discrete",
            tier: Tier::PaperNew,
            domain: Domain::Spaces { min_points: 1 },
            citation: "",
            check: Check::Space(|u, id| {
                let t = u.table(id);
                let n = t.len();
                Ok(if t.space().opens().len() == 1 << n {
                    Verdict::Holds
                } else {
                    Verdict::Fails(json!({ "opens": t.space().opens().len() }))
                })
            }),
        }
    }

    #[test]
    fn ids_are_unique_and_ordered() {
        let ids: Vec<_> = catalog().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        let sections: Vec<_> = catalog().iter().map(|c| c.section()).collect();
        assert!(sections.windows(2).all(|w| w[0] <= w[1]), "{sections:?}");
        assert_eq!((sections[0], *sections.last().unwrap()), (2, 6));
    }

    #[test]
    fn fixed_examples_confirm() {
        let u = Universe::new(Bounds::new(1)).unwrap();
        for c in catalog().iter().filter(|c| c.domain == Domain::Fixed) {
            assert_eq!(evaluate(&u, c, None).unwrap().status, Status::Confirmed, "{}", c.id);
        }
    }

    #[test]
    fn one_point_bounds_are_mostly_vacuous() {
        let reports = run_suite(&Bounds::new(1)).unwrap();
        let d0 = reports.iter().find(|(id, _)| *id == "T4.6-D0-implies-T0").unwrap().1.as_ref().unwrap();
        assert_eq!((d0.status, d0.instances, d0.vacuous, d0.substantive), (Status::Confirmed, 1, 1, 0));
        assert!(reports.iter().all(|(_, r)| r.as_ref().unwrap().status != Status::Refuted));
        assert!(!core_refuted(&reports));
    }

    #[test]
    fn refutation_is_first_in_canonical_order_and_rechecks() {
        let claim = discrete_only();
        let u = Universe::new(Bounds::new(3).with_workers(4)).unwrap();
        let r = evaluate(&u, &claim, None).unwrap();
        assert_eq!(r.status, Status::Refuted);
        // the point and the discrete pair come first; the next pair fails
        assert_eq!(r.witness.as_ref().unwrap()["index"], 2);
        assert!(recheck(&u, &claim, &r).unwrap());
        let larger = Universe::new(Bounds::new(4)).unwrap();
        let again = evaluate(&larger, &claim, None).unwrap();
        assert_eq!(again.witness, r.witness);
    }

    #[test]
    fn recheck_rejects_tampered_witnesses() {
        let claim = discrete_only();
        let u = Universe::new(Bounds::new(2)).unwrap();
        let mut r = evaluate(&u, &claim, None).unwrap();
        r.witness.as_mut().unwrap()["index"] = json!(0);
        assert!(!recheck(&u, &claim, &r).unwrap());
    }

    #[test]
    fn budget_and_resume_match_a_full_run() {
        let bounds = Bounds::new(3).with_workers(2);
        let full = search_question(&bounds).unwrap();
        let mut partial = run_claim(QUESTION_ID, &bounds.clone().with_budget(5000)).unwrap();
        assert_eq!(partial.status, Status::BudgetExceeded);
        assert_eq!(partial.instances, 5000);
        while let Some(cursor) = partial.cursor.take() {
            partial = resume_claim(&cursor, Some(7000), 3).unwrap();
        }
        assert_eq!(partial.to_json(), full.to_json());
    }

    #[test]
    fn cursor_must_match_claim() {
        let bounds = Bounds::new(2).with_budget(3);
        let r = run_claim(QUESTION_ID, &bounds).unwrap();
        let mut cursor = r.cursor.unwrap();
        cursor.claim = "T2.8-kapanis".into();
        let u = Universe::new(Bounds::new(2)).unwrap();
        assert!(evaluate(&u, find(QUESTION_ID).unwrap(), Some(&cursor)).is_err());
    }

    #[test]
    fn question_domain_sizes() {
        let r = search_question(&Bounds::new(2)).unwrap();
        assert_eq!(r.instances, 64);
        assert_eq!(r.instances, r.substantive + r.vacuous);
    }

    #[test]
    fn unknown_claims_and_bounds_are_rejected() {
        assert_eq!(run_claim("nope", &Bounds::new(2)).unwrap_err(), Error::UnknownClaim("nope".into()));
        assert!(matches!(Universe::new(Bounds::new(6)), Err(Error::CarrierTooLarge { .. })));
        assert!(matches!(Universe::new(Bounds::new(3).with_map_points(5)), Err(Error::CarrierTooLarge { .. })));
        assert_eq!(Universe::new(Bounds::new(0)).err(), Some(Error::EmptyCarrier));
    }

    #[test]
    fn map_claims_touch_the_whole_map_domain() {
        let u = Universe::new(Bounds::new(3)).unwrap();
        let r = evaluate(&u, find("L5.12-graph-lemma").unwrap(), None).unwrap();
        assert_eq!(r.instances, 24_872);
        assert_eq!(r.vacuous, 0);
        // the star space is e*-θ-D-rich; its D-set family is everything but X
        let star = crate::OperatorTable::new(fixtures::star());
        assert_eq!(star.family(FamilyKind::DSet).len(), 15);
    }
}

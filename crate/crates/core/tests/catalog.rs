use std::path::PathBuf;

use etheta::verify::{catalog, Tier};

fn manifest_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("claims.manifest")
}

fn rendered() -> String {
    let mut out = String::from("# Claim manifest: one claim per line, `id<TAB>tier<TAB>statement`.\n");
    for c in catalog() {
        let tier = match c.tier {
            Tier::Core => "core",
            Tier::PaperNew => "paper-new",
        };
        out.push_str(&format!("{}\t{}\t{}\n", c.id, tier, c.citation));
    }
    out
}

/// Set `ETHETA_BLESS=1` to rewrite the manifest from the catalog.
#[test]
fn catalog_matches_manifest() {
    let expected = rendered();
    if std::env::var_os("ETHETA_BLESS").is_some() {
        std::fs::write(manifest_path(), &expected).unwrap();
    }
    let manifest = std::fs::read_to_string(manifest_path()).unwrap();
    let listed: Vec<&str> = manifest.lines().filter(|l| !l.starts_with('#')).map(|l| l.split('\t').next().unwrap()).collect();
    let ids: Vec<&str> = catalog().iter().map(|c| c.id).collect();
    for id in &listed {
        assert!(ids.contains(id), "manifest lists {id} but the catalog does not");
    }
    for id in &ids {
        assert!(listed.contains(id), "catalog has {id} but the manifest does not");
    }
    assert_eq!(manifest, expected);
}

#[test]
fn every_section_is_covered() {
    for section in 2..=6 {
        let ids: Vec<_> = catalog().iter().filter(|c| c.section() == section).map(|c| c.id).collect();
        assert!(ids.iter().any(|id| id.starts_with('T')), "section {section}: {ids:?}");
    }
    for required in ["T2.8-kapanis", "T4.14-Thalf-iff-T1", "EX2.12-union-counterexample", "Q5.1-open-question", "T4.6-D0-implies-T0"] {
        assert!(catalog().iter().any(|c| c.id == required), "{required}");
    }
}

#[test]
fn core_tier_is_the_restated_literature() {
    for c in catalog() {
        assert_eq!(c.tier == Tier::Core, c.section() == 2, "{}", c.id);
    }
}

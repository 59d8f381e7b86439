//! Reading space and map documents from disk.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use etheta::maps::SpaceMap;
use etheta::{FiniteSpace, SpaceDocument};
use serde::Deserialize;
use serde_json::Value;

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        anyhow::anyhow!("{}:{}:{}: {}", path.display(), e.line(), e.column(), e)
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_space(path: &Path) -> Result<FiniteSpace> {
    let doc: SpaceDocument = parse(path, &read(path)?)?;
    doc.to_space().with_context(|| format!("{}: invalid space", path.display()))
}

#[derive(Deserialize)]
struct MapDocument {
    domain: Value,
    codomain: Value,
    map: serde_json::Map<String, Value>,
}

/// A space given inline or as a path relative to the referring document.
fn space_ref(base: &Path, value: Value, role: &str) -> Result<FiniteSpace> {
    match value {
        Value::String(p) => {
            let p = PathBuf::from(p);
            load_space(&if p.is_absolute() { p } else { base.join(p) })
        }
        other => {
            let doc: SpaceDocument = serde_json::from_value(other).with_context(|| format!("{role}: not a space document"))?;
            Ok(doc.to_space().with_context(|| format!("{role}: invalid space"))?)
        }
    }
}

pub fn load_map(path: &Path) -> Result<SpaceMap> {
    let doc: MapDocument = parse(path, &read(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let x = space_ref(base, doc.domain, "domain")?;
    let y = space_ref(base, doc.codomain, "codomain")?;
    let mut pairs = Vec::new();
    for (k, v) in &doc.map {
        let Some(v) = v.as_str() else { bail!("{}: image of {k:?} is not a label", path.display()) };
        pairs.push((k.as_str(), v));
    }
    Ok(SpaceMap::from_labels(x, y, pairs)?)
}

/// `a:c,b:c` into label pairs.
pub fn parse_assignment(text: &str) -> Result<Vec<(&str, &str)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.split_once(':').map(|(a, b)| (a.trim(), b.trim())).with_context(|| format!("expected `from:to`, got {s:?}")))
        .collect()
}

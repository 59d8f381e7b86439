//! The enumerated quantifier domains shared by every claim in a run.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::error::Result;
use crate::maps::{MapPropertyKind, MapView};
use crate::operators::OperatorTable;
use crate::par::Executor;
use crate::space::collect_topologies;

use super::Bounds;

/// Global index of an enumerated space: sizes ascending, canonical order within a size.
pub type SpaceId = usize;

pub struct Universe {
    pub(crate) bounds: Bounds,
    pub(crate) exec: Executor,
    tables: Vec<OperatorTable>,
    by_size: Vec<Range<SpaceId>>,
    by_opens: HashMap<Vec<u32>, SpaceId>,
    maps: MapDomain,
    question: OnceLock<MapDomain>,
    atlas: HashMap<(SpaceId, SpaceId), OnceLock<Result<Vec<u16>>>>,
}

/// An ordered list of space pairs; instance `i` is a map between one of them.
pub(crate) struct MapDomain {
    pairs: Vec<(SpaceId, SpaceId)>,
    offsets: Vec<u64>,
}

/// One map from the enumeration, with the codes needed to look it up again.
pub struct MapInstance {
    pub dom: SpaceId,
    pub cod: SpaceId,
    pub code: u64,
    pub images: Vec<u8>,
}

impl Universe {
    pub fn new(bounds: Bounds) -> Result<Self> {
        bounds.validate()?;
        let exec = Executor::new(bounds.workers);
        let top = bounds.max_points.max(bounds.max_map_points);
        let mut tables = Vec::new();
        // index 0 is the empty size class
        let mut by_size = Vec::with_capacity(top + 1);
        by_size.push(0..0);
        for n in 1..=top {
            let spaces = collect_topologies(n, false, &exec)?;
            let start = tables.len();
            tables.extend(exec.map(&spaces, |s| OperatorTable::new(s.clone())));
            by_size.push(start..tables.len());
        }
        let by_opens = tables.iter().enumerate().map(|(i, t)| (opens_key(t), i)).collect();
        let mut u = Universe {
            bounds,
            exec,
            tables,
            by_size,
            by_opens,
            maps: MapDomain { pairs: Vec::new(), offsets: vec![0] },
            question: OnceLock::new(),
            atlas: HashMap::new(),
        };
        let k = u.bounds.max_map_points;
        let mut pairs: Vec<(SpaceId, SpaceId)> = u
            .spaces_sized(1..=k)
            .flat_map(|a| u.spaces_sized(1..=k).map(move |b| (a, b)))
            .collect();
        pairs.sort_by_key(|&(a, b)| (u.size(a).max(u.size(b)), a, b));
        u.atlas = pairs.iter().map(|&p| (p, OnceLock::new())).collect();
        u.maps = u.map_domain(pairs);
        Ok(u)
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn table(&self, id: SpaceId) -> &OperatorTable {
        &self.tables[id]
    }

    pub fn size(&self, id: SpaceId) -> usize {
        self.tables[id].len()
    }

    /// Ids of every enumerated space whose size lies in `sizes`.
    pub fn spaces_sized(&self, sizes: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = SpaceId> + '_ {
        sizes.filter(|&n| n < self.by_size.len()).flat_map(move |n| self.by_size[n].clone())
    }

    /// The enumerated space with the same open sets, if any.
    pub fn lookup(&self, t: &OperatorTable) -> Option<SpaceId> {
        self.by_opens.get(&opens_key(t)).copied()
    }

    fn map_domain(&self, pairs: Vec<(SpaceId, SpaceId)>) -> MapDomain {
        let mut offsets = Vec::with_capacity(pairs.len() + 1);
        let mut total = 0u64;
        offsets.push(0);
        for &(a, b) in &pairs {
            total += map_count(self.size(a), self.size(b));
            offsets.push(total);
        }
        MapDomain { pairs, offsets }
    }

    /// Ordered pairs of spaces on at most `max_map_points` points, larger pairs last.
    pub(crate) fn pairs(&self) -> &[(SpaceId, SpaceId)] {
        &self.maps.pairs
    }

    /// Maps between spaces on at most `max_map_points` points.
    pub(crate) fn maps(&self) -> &MapDomain {
        &self.maps
    }

    /// Maps between spaces on exactly `max_map_points` points.
    pub(crate) fn question_maps(&self) -> &MapDomain {
        self.question.get_or_init(|| {
            let k = self.bounds.max_map_points;
            let pairs = self
                .spaces_sized(k..=k)
                .flat_map(|a| self.spaces_sized(k..=k).map(move |b| (a, b)))
                .collect();
            self.map_domain(pairs)
        })
    }

    pub fn view<'a>(&'a self, m: &'a MapInstance) -> MapView<'a> {
        MapView { dom: self.table(m.dom), cod: self.table(m.cod), images: &m.images }
    }

    /// Which properties every map between `dom` and `cod` has, one bit per [`MapPropertyKind`].
    pub fn atlas(&self, dom: SpaceId, cod: SpaceId) -> Result<&[u16]> {
        let cell = self.atlas.get(&(dom, cod)).expect("atlas covers every map pair");
        let bits = cell.get_or_init(|| {
            let (nx, ny) = (self.size(dom), self.size(cod));
            let (x, y) = (self.table(dom), self.table(cod));
            (0..map_count(nx, ny))
                .map(|code| {
                    let images = decode(code, nx, ny);
                    let v = MapView { dom: x, cod: y, images: &images };
                    let mut bits = 0u16;
                    for (i, &k) in MapPropertyKind::ALL.iter().enumerate() {
                        if v.property(k)?.holds {
                            bits |= 1 << i;
                        }
                    }
                    Ok(bits)
                })
                .collect()
        });
        bits.as_deref().map_err(Clone::clone)
    }

    pub fn has(&self, dom: SpaceId, cod: SpaceId, code: u64, kind: MapPropertyKind) -> Result<bool> {
        let bit = MapPropertyKind::ALL.iter().position(|&k| k == kind).expect("kind is listed");
        Ok(self.atlas(dom, cod)?[code as usize] & (1 << bit) != 0)
    }

    pub fn space_json(&self, id: SpaceId) -> Value {
        serde_json::to_value(self.table(id).space().to_document()).expect("documents serialize")
    }

    pub fn map_json(&self, m: &MapInstance) -> Value {
        let (x, y) = (self.table(m.dom).space(), self.table(m.cod).space());
        let assoc: serde_json::Map<String, Value> = m
            .images
            .iter()
            .enumerate()
            .map(|(i, &j)| (x.names()[i].clone(), Value::String(y.names()[j as usize].clone())))
            .collect();
        json!({ "domain": self.space_json(m.dom), "codomain": self.space_json(m.cod), "map": assoc })
    }
}

impl MapDomain {
    pub fn len(&self) -> u64 {
        *self.offsets.last().expect("offsets start at zero")
    }

    pub fn get(&self, u: &Universe, i: u64) -> MapInstance {
        let p = self.offsets.partition_point(|&o| o <= i) - 1;
        let (dom, cod) = self.pairs[p];
        let code = i - self.offsets[p];
        MapInstance { dom, cod, code, images: decode(code, u.size(dom), u.size(cod)) }
    }
}

fn opens_key(t: &OperatorTable) -> Vec<u32> {
    t.space().opens().iter().map(|s| s.bits()).collect()
}

pub(crate) fn map_count(nx: usize, ny: usize) -> u64 {
    (ny as u64).pow(nx as u32)
}

/// Images of map number `code` in lexicographic order, first point most significant.
pub(crate) fn decode(mut code: u64, nx: usize, ny: usize) -> Vec<u8> {
    let mut images = vec![0u8; nx];
    for slot in images.iter_mut().rev() {
        *slot = (code % ny as u64) as u8;
        code /= ny as u64;
    }
    images
}

pub(crate) fn encode(images: &[u8], ny: usize) -> u64 {
    images.iter().fold(0u64, |acc, &j| acc * ny as u64 + j as u64)
}

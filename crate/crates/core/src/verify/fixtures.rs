//! The small named spaces the worked examples are stated on.

use crate::set::{PointSet, SetFamily};
use crate::space::{validate_topology, FiniteSpace};

fn build(labels: &[&str], opens: &[&[usize]]) -> FiniteSpace {
    let n = labels.len();
    let family = SetFamily::new(
        n,
        opens
            .iter()
            .map(|s| PointSet::from_points(s.iter().copied()))
            .chain([PointSet::EMPTY, PointSet::full(n)]),
    );
    validate_topology(labels, &family).expect("fixture is a topology")
}

/// `{1,2,3}` with opens `{1}`, `{2}`, `{1,2}`.
pub fn two_points_open() -> FiniteSpace {
    build(&["1", "2", "3"], &[&[0], &[1], &[0, 1]])
}

/// `{a,b,c,d}` with opens `{a}`, `{c}`, `{a,c}`, `{c,d}`, `{a,c,d}`.
pub fn star() -> FiniteSpace {
    build(&["a", "b", "c", "d"], &[&[0], &[2], &[0, 2], &[2, 3], &[0, 2, 3]])
}

/// `{a,b,c,d}` with the nested opens `{a}`, `{a,b}`, `{a,b,c}`.
pub fn chain() -> FiniteSpace {
    build(&["a", "b", "c", "d"], &[&[0], &[0, 1], &[0, 1, 2]])
}

pub fn point() -> FiniteSpace {
    FiniteSpace::discrete(&["x"]).expect("one point is a space")
}

//! Finite topological spaces and the generalized open-set families built on
//! them: δ-, e*-, e*-θ- and β-variants, the separation axioms they induce, map
//! properties, and an exhaustive checker for statements about all of them.

pub mod axioms;
pub mod error;
pub mod maps;
pub mod operators;
pub mod par;
pub mod set;
pub mod space;
pub mod verify;

pub use error::{Error, Result};
pub use operators::{FamilyKind, OperatorKind, OperatorTable};
pub use set::{PointSet, SetFamily};
pub use space::{FiniteSpace, Preorder, SpaceDocument};

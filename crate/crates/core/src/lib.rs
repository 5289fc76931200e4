//! Exact computations with representations of bound quivers: Hom and Ext
//! spaces in cocycle models, Yoneda composition, and tangent-space
//! accounting on module varieties.

pub mod dsl;
pub mod error;
pub mod ext2;
pub mod fixtures;
pub mod homext;
pub mod linalg;
mod poly;
pub mod quiver;
pub mod report;
pub mod sample;
pub mod variety;

pub use error::{Error, Result};
pub use homext::{ArrowCochain, RelationCochain, Representation, VertexCochain};
pub use linalg::{Field, Matrix, Scalar, SubspaceBasis};
pub use quiver::{Algebra, BoundQuiver, Path, Quiver};

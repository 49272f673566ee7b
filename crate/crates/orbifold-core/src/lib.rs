//! Compact 2-orbifolds with mirrors, cone points, corner reflectors and a
//! boundary split into ∂₀ and ∂₁ parts.
//!
//! An [`Orbifold2`] is stored combinatorially: the underlying surface is
//! given by orientability and genus, interior cone points by their orders,
//! and each boundary circle of the underlying surface by a cyclic list of
//! [`Segment`]s. A segment is a mirror (`M`), a piece of ∂₀ (`D0`), a piece
//! of ∂₁ (`D1`) or a scar left by cutting along an arc (`CUT`). Corner
//! reflectors sit between two mirror segments and carry their rotation order.

mod canon;
mod chi;
mod double;
mod io;
mod types;
mod validate;

pub use canon::{CanonMap, Symmetry};
pub use chi::{Pi1Class, WeightedChi};
pub use double::{DoubleMap, DoubleSide, SegmentImages};
pub use io::ParseError;
pub use types::{BoundaryCircle, Junction, OrbifoldError, Orbifold2, SegKind, Segment};
pub use validate::Violation;

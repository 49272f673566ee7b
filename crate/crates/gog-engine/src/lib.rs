//! Bipartite graphs of groups over VPC subgroups of a PD(n+2) pair.
//!
//! Groups are symbolic: a [`GroupMark`] names a commensurability class and
//! its Hirsch length relative to the ambient dimension. Vertices of
//! commensuriser type carry their base 2-orbifold, which is where the arc
//! calculus finds exceptional annuli. All transformations return new graphs
//! and break ties by ascending id.

mod error;
mod export;
mod reduce;
mod special;
mod types;
mod validate;
mod waldhausen;

pub use error::GogError;
pub use export::{dot_export, isomorphic};
pub use reduce::{complete, reduce, Completion, EdgeMap};
pub use special::{
    classify_edges, collapse_special_intervals, detect_special_canonical, parallel_edges_check, special_splittings,
    EdgeClass, ParallelCase, ParallelPair,
};
pub use types::{Constituent, Edge, EdgeKind, GraphOfGroups, GroupMark, Length, Part, Vertex, VertexKind};
pub use validate::{is_isolated_vertex, validate_graph};
pub use waldhausen::{exceptional_annuli, waldhausen_refine};

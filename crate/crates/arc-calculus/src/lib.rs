//! Simple arcs and closed curves on 2-orbifolds relative to ∂₀.
//!
//! Arc classes are encoded by their end segments and the cones, circles
//! and segments on each side ([`ArcClass`]). On planar orbifolds an
//! exhaustive oracle decides essentiality, crossing and isolation; mirrors
//! are handled through the mirror double. The orbifolds F1a to F4h
//! are kept in a catalog with their isolated arcs.

mod arc;
mod catalog;
mod cross;
mod cut;
mod error;
mod isolate;
mod lift;
mod oracle;
mod scc;
mod threshold;

pub use arc::{ArcClass, CurveClass, Fold, Marked, Separation};
pub use catalog::{
    catalog_all, catalog_chi_neg_configs, catalog_chi_neg_orbifolds, catalog_chi_zero, catalog_dim3, catalog_entry,
    catalog_export, catalog_instance, catalog_match, catalog_match_with_map, CatalogEntry, FOURTEEN_NOTE,
};
pub use cross::{arcs_compatible, crosses, curve_arc_compatible, curves_compatible, Suborbifold};
pub use cut::{cut_along_arc, cut_unchecked};
pub use error::ArcError;
pub use isolate::{isolated_arcs, oracle_isolated, same_orbit, up_to_symmetry};
pub use lift::{deck_involution, lift_arc, lift_check, LiftReport};
pub use oracle::{candidate_arcs, essential_arcs_oracle, is_essential, is_rigid};
pub use scc::{has_essential_scc, scc_analysis, SccAnalysis};
pub use threshold::{classify_positive, threshold_k, PositiveFamily};

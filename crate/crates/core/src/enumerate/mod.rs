//! Exhaustive enumeration over small groups.
//!
//! Candidate checks run in parallel; results always come back in the same order as a
//! sequential scan would produce them.

mod catalog;
mod equivalence;
mod morphisms;
mod objects;
mod pool;

pub use catalog::{catalog, catalog_each, CatalogEntry};
pub use equivalence::{
    isomorphic_liftings, verify_equivalence, CoveringRoundTrip, EquivalenceReport, FunctorImages,
    MorphismRecord, TallyReport,
};
pub use morphisms::{
    covering_morphisms, lifting_morphisms, morphism_cap_from_env, MorphismList,
    DEFAULT_MORPHISM_CAP, MORPHISM_CAP_VAR,
};
pub use objects::{
    aut_group, enumerate_coverings, enumerate_ext_actions, enumerate_gcat1s, enumerate_gxmods,
    enumerate_liftings, enumerate_self_actions, gwa_objects, AutGroup,
};
pub use pool::{SearchPool, MAX_POOL_BOUND};

//! Finite groups, homomorphisms, subgroups, and groups with action.
//!
//! Elements of a group of order `n` are the indices `0..n`; every table is dense.
//! The additive notation used in printed witnesses (`g + h`, `-g`, `0`) does not assume
//! commutativity.

mod group;
mod gwa;
mod hom;
mod subgroup;

pub use group::{validate_group, GroupTable};
pub(crate) use gwa::{check_gwa_shape, preserves_self_action};
pub use gwa::{
    is_ideal, is_subobject, quotient_gwa, subobject_witness, validate_action, validate_gwa,
    validate_gwa_morphism, Action, ActionNotation, Gwa, IdealReport, SelfAction,
};
pub use hom::{
    are_isomorphic, automorphisms, for_each_hom, homomorphisms, image, isomorphisms, kernel,
    validate_hom, Hom,
};
pub use subgroup::{quotient_group, validate_subgroup, Subgroup};

use serde::Serialize;

use crate::algebra::{GroupTable, Gwa};
use crate::error::{Error, Result};

use super::objects::gwa_objects;

/// Largest order bound the shipped pool covers.
pub const MAX_POOL_BOUND: usize = 8;

/// One group per isomorphism class, up to an order bound.
#[derive(Clone, Debug, Serialize)]
pub struct SearchPool {
    order_bound: usize,
    #[serde(serialize_with = "names")]
    groups: Vec<GroupTable>,
}

fn names<S: serde::Serializer>(
    groups: &[GroupTable],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(groups.iter().map(GroupTable::name))
}

fn curated() -> Vec<GroupTable> {
    let z = GroupTable::cyclic;
    let v4 = GroupTable::direct_product(&z(2), &z(2)).with_name("Z2xZ2");
    vec![
        GroupTable::trivial().with_name("1"),
        z(2),
        z(3),
        z(4),
        v4.clone(),
        z(5),
        z(6),
        GroupTable::symmetric(3),
        z(7),
        z(8),
        GroupTable::direct_product(&z(4), &z(2)).with_name("Z4xZ2"),
        GroupTable::direct_product(&v4, &z(2)).with_name("Z2xZ2xZ2"),
        GroupTable::dihedral(4),
        GroupTable::quaternion().with_name("Q8"),
    ]
}

impl SearchPool {
    /// The curated groups of order at most `order_bound`, which must lie in
    /// `1..=MAX_POOL_BOUND`.
    pub fn new(order_bound: usize) -> Result<Self> {
        if order_bound == 0 || order_bound > MAX_POOL_BOUND {
            return Err(Error::Precondition(format!(
                "order bound must lie in 1..={MAX_POOL_BOUND}, got {order_bound}"
            )));
        }
        let groups = curated()
            .into_iter()
            .filter(|g| g.order() <= order_bound)
            .collect();
        Ok(Self {
            order_bound,
            groups,
        })
    }

    pub fn order_bound(&self) -> usize {
        self.order_bound
    }

    pub fn groups(&self) -> &[GroupTable] {
        &self.groups
    }

    /// Every pool group with every self-action, in pool order.
    pub fn gwas(&self) -> Vec<Gwa> {
        self.groups.iter().flat_map(gwa_objects).collect()
    }
}

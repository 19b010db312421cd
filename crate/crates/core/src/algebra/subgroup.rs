use serde::Serialize;

use super::group::GroupTable;
use super::hom::Hom;
use crate::error::{ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};

/// A subgroup of a finite group, as a sorted list of member elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup {
    #[serde(skip)]
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks that `members` form a subgroup of `parent`.
    pub fn new(parent: &GroupTable, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&x) = members.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::Structural(format!(
                "{x} is not an element of {} (order {})",
                parent.name(),
                parent.order()
            )));
        }
        let sub = Self {
            parent_order: parent.order(),
            members,
        };
        ensure_valid(
            format!("subset {:?}", sub.members),
            validate_subgroup(parent, &sub),
        )?;
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(parent_order: usize, members: Vec<usize>) -> Self {
        Self {
            parent_order,
            members,
        }
    }

    pub fn generated_by(parent: &GroupTable, gens: &[usize]) -> Self {
        Self {
            parent_order: parent.order(),
            members: parent.closure(gens),
        }
    }

    pub fn trivial(parent: &GroupTable) -> Self {
        Self {
            parent_order: parent.order(),
            members: vec![parent.identity()],
        }
    }

    pub fn whole(parent: &GroupTable) -> Self {
        Self {
            parent_order: parent.order(),
            members: parent.elements().collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Position of `x` in the sorted member list, i.e. its index in [`Self::to_group`].
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_normal(&self, parent: &GroupTable) -> bool {
        self.normality_witness(parent).is_none()
    }

    /// First `(g, n)` with `g n g⁻¹ ∉ N`.
    pub fn normality_witness(&self, parent: &GroupTable) -> Option<(usize, usize)> {
        parent.elements().find_map(|g| {
            self.members
                .iter()
                .find(|&&n| !self.contains(parent.conjugate(g, n)))
                .map(|&n| (g, n))
        })
    }

    /// The subgroup as a standalone group on `0..len`, with member `members[i]` renumbered
    /// `i`, and the embedding back into the parent.
    pub fn to_group(&self, parent: &GroupTable, name: impl Into<String>) -> (GroupTable, Hom) {
        let rows: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|&a| {
                self.members
                    .iter()
                    .map(|&b| self.position(parent.op(a, b)).expect("subgroup is closed"))
                    .collect()
            })
            .collect();
        let table = GroupTable::from_rows(name, &rows).expect("in-range by construction");
        (table, Hom::new(self.members.clone()))
    }
}

/// Checks that a subset contains the identity and is closed under products and inverses.
pub fn validate_subgroup(parent: &GroupTable, sub: &Subgroup) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !sub.contains(parent.identity()) {
        report.push(
            Rule::SubgroupIdentity,
            vec![parent.identity()],
            "identity missing",
        );
    }
    for &a in sub.members() {
        if !sub.contains(parent.inv(a)) {
            report.push(
                Rule::SubgroupInverse,
                vec![a],
                format!("-{a} = {} missing", parent.inv(a)),
            );
        }
        for &b in sub.members() {
            let ab = parent.op(a, b);
            if !sub.contains(ab) {
                report.push(
                    Rule::SubgroupClosure,
                    vec![a, b],
                    format!("{a} + {b} = {ab} missing"),
                );
            }
        }
    }
    report
}

/// Cosets `g N` of a normal subgroup, each labelled by its smallest member; cosets are
/// numbered in increasing order of that label.
///
/// Returns the quotient table and the projection `G -> G/N`. The coset of the identity
/// is element 0 whenever the parent's identity is 0.
pub fn quotient_group(parent: &GroupTable, normal: &Subgroup) -> Result<(GroupTable, Hom)> {
    if let Some((g, n)) = normal.normality_witness(parent) {
        return Err(Error::Precondition(format!(
            "subgroup is not normal: {g} + {n} - {g} = {} is outside it",
            parent.conjugate(g, n)
        )));
    }
    let mut label = vec![usize::MAX; parent.order()];
    let mut reps = Vec::new();
    for g in parent.elements() {
        if label[g] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(g);
        for &n in normal.members() {
            label[parent.op(g, n)] = class;
        }
    }
    let rows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| label[parent.op(a, b)]).collect())
        .collect();
    let name = format!("{}/N", parent.name());
    let table = GroupTable::from_rows(name, &rows)?;
    Ok((table, Hom::new(label)))
}

use std::fmt;

use serde::Serialize;

use super::group::{validate_group, GroupTable};
use super::hom::{check_shape, validate_hom, Hom};
use super::subgroup::{quotient_group, Subgroup};
use crate::error::{ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};

/// A left action of one finite group on another, as the table `act[x][y] = x·y`.
///
/// Both self-actions (`^g h`) and external actions (`b·a`) use this representation;
/// validity means identity law, compatibility, and acting by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Action {
    actor_order: usize,
    space_order: usize,
    table: Vec<usize>,
}

/// The action of a group on itself.
pub type SelfAction = Action;

impl Action {
    pub fn from_rows(actor_order: usize, space_order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != actor_order {
            return Err(Error::Structural(format!(
                "action table has {} rows, expected {actor_order}",
                rows.len()
            )));
        }
        let mut table = Vec::with_capacity(actor_order * space_order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != space_order {
                return Err(Error::Structural(format!(
                    "action row {i} has {} entries, expected {space_order}",
                    row.len()
                )));
            }
            if let Some((j, x)) = row.iter().enumerate().find(|(_, &x)| x >= space_order) {
                return Err(Error::Structural(format!(
                    "action entry [{i}][{j}] = {x} is out of range 0..{space_order}"
                )));
            }
            table.extend_from_slice(row);
        }
        Ok(Self {
            actor_order,
            space_order,
            table,
        })
    }

    pub(crate) fn from_flat(actor_order: usize, space_order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), actor_order * space_order);
        Self {
            actor_order,
            space_order,
            table,
        }
    }

    /// Every actor fixes every element.
    pub fn trivial(actor_order: usize, space_order: usize) -> Self {
        let table = (0..actor_order * space_order)
            .map(|i| i % space_order)
            .collect();
        Self {
            actor_order,
            space_order,
            table,
        }
    }

    /// The action in which `x` acts through the automorphism `auts[rep(x)]`.
    pub fn from_automorphisms(space_order: usize, rows: impl IntoIterator<Item = Hom>) -> Self {
        let mut table = Vec::new();
        let mut actor_order = 0;
        for row in rows {
            table.extend_from_slice(row.as_slice());
            actor_order += 1;
        }
        Self {
            actor_order,
            space_order,
            table,
        }
    }

    #[inline]
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.table[x * self.space_order + y]
    }

    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    pub fn space_order(&self) -> usize {
        self.space_order
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.space_order..(x + 1) * self.space_order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.space_order.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.table
            .iter()
            .enumerate()
            .all(|(i, &x)| i % self.space_order == x)
    }

    /// The action precomposed with `along: new_actor -> actor`.
    pub fn pull_back_actor(&self, along: &Hom) -> Action {
        let table = along
            .as_slice()
            .iter()
            .flat_map(|&x| self.row(x).iter().copied())
            .collect();
        Action {
            actor_order: along.len(),
            space_order: self.space_order,
            table,
        }
    }
}

impl Serialize for Action {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Checks the three action laws of `actor` acting on `space`.
///
/// Witnesses: `[y]` for `e·y = y`, `[x1, x2, y]` for `(x1 x2)·y = x1·(x2·y)`, and
/// `[x, y1, y2]` for `x·(y1 y2) = (x·y1)(x·y2)`.
pub fn validate_action(
    actor: &GroupTable,
    space: &GroupTable,
    action: &Action,
    notation: ActionNotation,
) -> Result<ValidationReport> {
    if action.actor_order != actor.order() || action.space_order != space.order() {
        return Err(Error::Structural(format!(
            "action table is {}x{}, expected {}x{}",
            action.actor_order,
            action.space_order,
            actor.order(),
            space.order()
        )));
    }
    let show = |x: usize, y: String| notation.show(x, &y);
    let mut report = ValidationReport::new();
    let e = actor.identity();
    for y in space.elements() {
        let got = action.act(e, y);
        if got != y {
            report.push(
                Rule::ActionIdentity,
                vec![y],
                format!("{} = {got}, expected {y}", show(e, y.to_string())),
            );
        }
    }
    for x1 in actor.elements() {
        for x2 in actor.elements() {
            let x12 = actor.op(x1, x2);
            for y in space.elements() {
                let left = action.act(x12, y);
                let right = action.act(x1, action.act(x2, y));
                if left != right {
                    report.push(
                        Rule::ActionCompatibility,
                        vec![x1, x2, y],
                        format!(
                            "{} = {left} but {} = {right}",
                            show(x12, y.to_string()),
                            show(x1, show(x2, y.to_string()))
                        ),
                    );
                }
            }
        }
    }
    for x in actor.elements() {
        for y1 in space.elements() {
            for y2 in space.elements() {
                let left = action.act(x, space.op(y1, y2));
                let right = space.op(action.act(x, y1), action.act(x, y2));
                if left != right {
                    report.push(
                        Rule::ActionByAutomorphisms,
                        vec![x, y1, y2],
                        format!(
                            "{} = {left} but {} + {} = {right}",
                            show(x, format!("({y1} + {y2})")),
                            show(x, y1.to_string()),
                            show(x, y2.to_string())
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// How an action is printed in witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionNotation {
    /// `^g h`
    SelfAction,
    /// `b·a`
    External,
}

impl ActionNotation {
    pub(crate) fn show(self, x: usize, y: &str) -> String {
        match self {
            ActionNotation::SelfAction => format!("^{x} {y}"),
            ActionNotation::External => format!("{x}·{y}"),
        }
    }
}

/// A group together with an action of itself on itself by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gwa {
    group: GroupTable,
    action: SelfAction,
}

impl Gwa {
    /// Pairs a group with a self-action table, checking only the table's shape.
    pub fn from_parts(group: GroupTable, action: SelfAction) -> Result<Self> {
        if action.actor_order != group.order() || action.space_order != group.order() {
            return Err(Error::Structural(format!(
                "self-action of {} must be {n}x{n}",
                group.name(),
                n = group.order()
            )));
        }
        Ok(Self { group, action })
    }

    /// Pairs a group with a self-action and validates the pair.
    pub fn new(group: GroupTable, action: SelfAction) -> Result<Self> {
        let gwa = Self::from_parts(group, action)?;
        ensure_valid(
            format!("group with action {}", gwa.group.name()),
            validate_gwa(&gwa),
        )?;
        Ok(gwa)
    }

    pub fn trivial(group: GroupTable) -> Self {
        let n = group.order();
        Self {
            group,
            action: Action::trivial(n, n),
        }
    }

    /// `^g h = g h g⁻¹`.
    pub fn conjugation(group: GroupTable) -> Self {
        let n = group.order();
        let table = (0..n * n).map(|i| group.conjugate(i / n, i % n)).collect();
        Self {
            group,
            action: Action::from_flat(n, n, table),
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn action(&self) -> &SelfAction {
        &self.action
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    /// `^g h`.
    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action.act(g, h)
    }

    pub fn is_conjugation(&self) -> bool {
        self.group.elements().all(|g| {
            self.group
                .elements()
                .all(|h| self.act(g, h) == self.group.conjugate(g, h))
        })
    }

    /// Restricts the self-action to a subgroup closed under it, renumbering members as in
    /// [`Subgroup::to_group`]. Returns the embedding alongside.
    pub fn restrict(&self, sub: &Subgroup, name: impl Into<String>) -> Result<(Gwa, Hom)> {
        for &h in sub.members() {
            for &k in sub.members() {
                let x = self.act(h, k);
                if !sub.contains(x) {
                    return Err(Error::Precondition(format!(
                        "subgroup not closed under the self-action: ^{h} {k} = {x}"
                    )));
                }
            }
        }
        let (group, embed) = sub.to_group(&self.group, name);
        let m = sub.len();
        let table = (0..m * m)
            .map(|i| {
                let v = self.act(sub.members()[i / m], sub.members()[i % m]);
                sub.position(v).expect("closure checked")
            })
            .collect();
        Ok((
            Gwa {
                group,
                action: Action::from_flat(m, m, table),
            },
            embed,
        ))
    }

    /// The group with action on `group` making the bijective homomorphism
    /// `iso: group -> self.group` a morphism of groups with action:
    /// `^x y = iso⁻¹(^iso(x) iso(y))`.
    pub fn pull_back(&self, group: GroupTable, iso: &Hom) -> Result<Gwa> {
        let back = iso
            .inverse()
            .ok_or_else(|| Error::Precondition("pull-back map is not bijective".into()))?;
        let n = group.order();
        let table = (0..n * n)
            .map(|i| back.at(self.act(iso.at(i / n), iso.at(i % n))))
            .collect();
        Ok(Gwa {
            group,
            action: Action::from_flat(n, n, table),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.group = self.group.with_name(name);
        self
    }
}

impl fmt::Display for Gwa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.action.is_trivial() {
            "trivial action"
        } else if self.is_conjugation() {
            "conjugation"
        } else {
            "self-action"
        };
        write!(f, "{} with {kind}", self.group)
    }
}

/// Group axioms plus the self-action laws.
pub fn validate_gwa(g: &Gwa) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.absorb("group", validate_group(&g.group));
    let laws = validate_action(&g.group, &g.group, &g.action, ActionNotation::SelfAction)
        .expect("shape checked at construction");
    report.absorb("self_action", laws);
    report
}

/// Checks that `f` is a homomorphism and `f(^g h) = ^f(g) f(h)` for all `g, h`.
pub fn validate_gwa_morphism(src: &Gwa, tgt: &Gwa, f: &Hom) -> Result<ValidationReport> {
    let mut report = validate_hom(&src.group, &tgt.group, f)?;
    for g in src.group.elements() {
        for h in src.group.elements() {
            let left = f.at(src.act(g, h));
            let right = tgt.act(f.at(g), f.at(h));
            if left != right {
                report.push(
                    Rule::PreservesSelfAction,
                    vec![g, h],
                    format!("f(^{g} {h}) = {left} but ^f({g}) f({h}) = {right}"),
                );
            }
        }
    }
    Ok(report)
}

/// Fast form of the self-action half of [`validate_gwa_morphism`]; assumes the shape is right.
pub(crate) fn preserves_self_action(src: &Gwa, tgt: &Gwa, f: &Hom) -> bool {
    src.group.elements().all(|g| {
        src.group
            .elements()
            .all(|h| f.at(src.act(g, h)) == tgt.act(f.at(g), f.at(h)))
    })
}

pub(crate) fn check_gwa_shape(src: &Gwa, tgt: &Gwa, f: &Hom) -> Result<()> {
    check_shape(&src.group, &tgt.group, f)
}

/// Whether `h` is closed under the action of every element of `g`: `^x n ∈ H` for all
/// `x ∈ G`, `n ∈ H`.
pub fn is_subobject(h: &Subgroup, g: &Gwa) -> bool {
    subobject_witness(h, g).is_none()
}

/// First `(x, n)` with `^x n ∉ H`.
pub fn subobject_witness(h: &Subgroup, g: &Gwa) -> Option<(usize, usize)> {
    g.group.elements().find_map(|x| {
        h.members()
            .iter()
            .find(|&&n| !h.contains(g.act(x, n)))
            .map(|&n| (x, n))
    })
}

/// The three ideal conditions, each with its first failing pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    /// `(g, n)` with `g + n - g ∉ N`.
    pub normal: Option<(usize, usize)>,
    /// `(g, n)` with `^g n ∉ N`.
    pub action_closed: Option<(usize, usize)>,
    /// `(n, g)` with `^n g - g ∉ N`.
    pub absorbs: Option<(usize, usize)>,
}

impl IdealReport {
    pub fn is_ideal(&self) -> bool {
        self.normal.is_none() && self.action_closed.is_none() && self.absorbs.is_none()
    }

    /// Human-readable name of the first failing condition.
    pub fn first_failure(&self) -> Option<String> {
        if let Some((g, n)) = self.normal {
            Some(format!("(i) not normal: {g} + {n} - {g} outside N"))
        } else if let Some((g, n)) = self.action_closed {
            Some(format!(
                "(ii) not closed under the action: ^{g} {n} outside N"
            ))
        } else {
            self.absorbs
                .map(|(n, g)| format!("(iii) ^{n} {g} - {g} outside N"))
        }
    }
}

pub fn is_ideal(n: &Subgroup, g: &Gwa) -> Result<IdealReport> {
    if n.parent_order() != g.order() {
        return Err(Error::Mismatch(format!(
            "subgroup of a group of order {} checked against {}",
            n.parent_order(),
            g.group.name()
        )));
    }
    let grp = &g.group;
    let absorbs = n.members().iter().find_map(|&m| {
        grp.elements()
            .find(|&x| !n.contains(grp.op(g.act(m, x), grp.inv(x))))
            .map(|x| (m, x))
    });
    Ok(IdealReport {
        normal: n.normality_witness(grp),
        action_closed: subobject_witness(n, g),
        absorbs,
    })
}

/// `G/N` with `^(g+N) (h+N) = (^g h) + N`, and the projection `G -> G/N`.
pub fn quotient_gwa(g: &Gwa, n: &Subgroup) -> Result<(Gwa, Hom)> {
    let ideal = is_ideal(n, g)?;
    if let Some(why) = ideal.first_failure() {
        return Err(Error::Precondition(format!("N is not an ideal: {why}")));
    }
    let (table, proj) = quotient_group(&g.group, n)?;
    let m = table.order();
    let mut reps = vec![usize::MAX; m];
    for x in g.group.elements().rev() {
        reps[proj.at(x)] = x;
    }
    let action = (0..m * m)
        .map(|i| proj.at(g.act(reps[i / m], reps[i % m])))
        .collect::<Vec<_>>();
    let quotient = Gwa {
        group: table,
        action: Action::from_flat(m, m, action),
    };
    Ok((quotient, proj))
}

use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::GroupTable;
use super::subgroup::Subgroup;
use crate::error::{ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};

/// A map between finite groups, stored as the table `x -> map[x]`.
///
/// The endpoints are not stored; they are supplied by whatever structure the map lives
/// in (a crossed module's `alpha`, a covering's `f`...). Whether the map is a
/// homomorphism is checked by [`validate_hom`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hom(Vec<usize>);

impl Hom {
    pub fn new(map: Vec<usize>) -> Self {
        Self(map)
    }

    /// Builds a map and checks it is a homomorphism `source -> target`.
    pub fn checked(source: &GroupTable, target: &GroupTable, map: Vec<usize>) -> Result<Self> {
        let hom = Self(map);
        ensure_valid(
            format!("map {} -> {}", source.name(), target.name()),
            validate_hom(source, target, &hom)?,
        )?;
        Ok(hom)
    }

    pub fn identity(order: usize) -> Self {
        Self((0..order).collect())
    }

    /// The map sending everything to `target`'s identity.
    pub fn zero(source_order: usize, target: &GroupTable) -> Self {
        Self(vec![target.identity(); source_order])
    }

    #[inline]
    pub fn at(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &Hom) -> Hom {
        Hom(inner.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.0.len());
        self.0.iter().all(|x| seen.insert(*x))
    }

    pub fn is_surjective(&self, target_order: usize) -> bool {
        let mut hit = vec![false; target_order];
        for &x in &self.0 {
            if x < target_order {
                hit[x] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self, target_order: usize) -> bool {
        self.0.len() == target_order && self.is_injective()
    }

    /// The inverse map of a bijection.
    pub fn inverse(&self) -> Option<Hom> {
        let n = self.0.len();
        let mut back = vec![usize::MAX; n];
        for (x, &y) in self.0.iter().enumerate() {
            if y >= n || back[y] != usize::MAX {
                return None;
            }
            back[y] = x;
        }
        Some(Hom(back))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for Hom {
    fn from(map: Vec<usize>) -> Self {
        Self(map)
    }
}

pub(crate) fn check_shape(source: &GroupTable, target: &GroupTable, h: &Hom) -> Result<()> {
    if h.len() != source.order() {
        return Err(Error::Structural(format!(
            "map has {} entries but its source {} has order {}",
            h.len(),
            source.name(),
            source.order()
        )));
    }
    if let Some((x, &y)) = h.0.iter().enumerate().find(|(_, &y)| y >= target.order()) {
        return Err(Error::Structural(format!(
            "map sends {x} to {y}, outside its target {} of order {}",
            target.name(),
            target.order()
        )));
    }
    Ok(())
}

/// Checks `h(g h') = h(g) h(h')` for all pairs and `h(e) = e`.
///
/// A map of the wrong length, or with values outside the target, is a structural error.
pub fn validate_hom(source: &GroupTable, target: &GroupTable, h: &Hom) -> Result<ValidationReport> {
    check_shape(source, target, h)?;
    let mut report = ValidationReport::new();
    if h.at(source.identity()) != target.identity() {
        report.push(
            Rule::HomIdentity,
            vec![source.identity()],
            format!("identity is sent to {}", h.at(source.identity())),
        );
    }
    for a in source.elements() {
        for b in source.elements() {
            let left = h.at(source.op(a, b));
            let right = target.op(h.at(a), h.at(b));
            if left != right {
                report.push(
                    Rule::HomMultiplicative,
                    vec![a, b],
                    format!("f({a} + {b}) = {left} but f({a}) + f({b}) = {right}"),
                );
            }
        }
    }
    Ok(report)
}

/// `{g : f(g) = e}`.
pub fn kernel(source: &GroupTable, target: &GroupTable, f: &Hom) -> Subgroup {
    let members = source
        .elements()
        .filter(|&g| f.at(g) == target.identity())
        .collect();
    Subgroup::from_sorted_unchecked(source.order(), members)
}

/// `{f(g) : g ∈ source}`.
pub fn image(target: &GroupTable, f: &Hom) -> Subgroup {
    let mut hit = vec![false; target.order()];
    for &y in f.as_slice() {
        hit[y] = true;
    }
    let members = target.elements().filter(|&y| hit[y]).collect();
    Subgroup::from_sorted_unchecked(target.order(), members)
}

/// Calls `visit` with every homomorphism `source -> target`, in lexicographic order of
/// the generator images.
///
/// Images of a generating set are chosen one generator at a time; after each choice the
/// map is propagated to the subgroup generated so far, and a conflicting propagation
/// prunes the branch. A map consistent on every edge `x -> x s` of the Cayley graph is a
/// homomorphism, so no further check is needed.
pub fn for_each_hom(source: &GroupTable, target: &GroupTable, mut visit: impl FnMut(&Hom)) {
    let gens = source.generators();
    let mut map = vec![usize::MAX; source.order()];
    map[source.identity()] = target.identity();
    let mut images = Vec::with_capacity(gens.len());
    extend_hom(source, target, &gens, &mut images, &mut map, &mut visit);
}

fn extend_hom(
    source: &GroupTable,
    target: &GroupTable,
    gens: &[usize],
    images: &mut Vec<usize>,
    map: &mut Vec<usize>,
    visit: &mut impl FnMut(&Hom),
) {
    let level = images.len();
    if level == gens.len() {
        let hom = Hom(map.clone());
        visit(&hom);
        return;
    }
    let s = gens[level];
    for candidate in target.elements() {
        // a generator already determined by earlier ones must keep its forced image
        if map[s] != usize::MAX && map[s] != candidate {
            continue;
        }
        images.push(candidate);
        let mut assigned = Vec::new();
        if propagate(source, target, &gens[..=level], images, map, &mut assigned) {
            extend_hom(source, target, gens, images, map, visit);
        }
        for x in assigned {
            map[x] = usize::MAX;
        }
        images.pop();
    }
}

fn propagate(
    source: &GroupTable,
    target: &GroupTable,
    gens: &[usize],
    images: &[usize],
    map: &mut [usize],
    assigned: &mut Vec<usize>,
) -> bool {
    let s_new = gens[gens.len() - 1];
    let img_new = images[images.len() - 1];
    if map[s_new] == usize::MAX {
        // s_new's image is set through the edge e -> e s_new below
    } else if map[s_new] != img_new {
        return false;
    }
    let mut queue: Vec<usize> = source
        .elements()
        .filter(|&x| map[x] != usize::MAX)
        .collect();
    while let Some(x) = queue.pop() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = source.op(x, s);
            let fy = target.op(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                assigned.push(y);
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    true
}

/// All homomorphisms `source -> target`, sorted.
pub fn homomorphisms(source: &GroupTable, target: &GroupTable) -> Vec<Hom> {
    let mut out = Vec::new();
    for_each_hom(source, target, |h| out.push(h.clone()));
    out.sort();
    out
}

/// All bijective homomorphisms `source -> target`, sorted.
pub fn isomorphisms(source: &GroupTable, target: &GroupTable) -> Vec<Hom> {
    if source.order() != target.order() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for_each_hom(source, target, |h| {
        if h.is_injective() {
            out.push(h.clone());
        }
    });
    out.sort();
    out
}

pub fn automorphisms(g: &GroupTable) -> Vec<Hom> {
    isomorphisms(g, g)
}

pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut found = false;
    for_each_hom(a, b, |h| found |= h.is_injective());
    found
}

use rayon::prelude::*;

use crate::algebra::{homomorphisms, preserves_self_action, GroupTable, Hom};
use crate::covering::{Covering, CoveringMorphism};
use crate::lifting::{Lifting, LiftingMorphism};
use crate::xmod::is_gxmod_morphism;

/// Environment variable overriding [`DEFAULT_MORPHISM_CAP`].
pub const MORPHISM_CAP_VAR: &str = "GXMOD_MAX_MORPHISMS";

pub const DEFAULT_MORPHISM_CAP: usize = 20_000;

/// The cap from `GXMOD_MAX_MORPHISMS`, or the default when unset or unparsable.
pub fn morphism_cap_from_env() -> usize {
    std::env::var(MORPHISM_CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MORPHISM_CAP)
}

/// Morphisms `source -> target` between objects of a list, by index.
#[derive(Clone, Debug)]
pub struct MorphismList<M> {
    pub entries: Vec<(usize, usize, M)>,
    /// Set when the cap cut the list short.
    pub truncated: bool,
}

impl<M: PartialEq> MorphismList<M> {
    pub fn position(&self, source: usize, target: usize, m: &M) -> Option<usize> {
        self.entries
            .iter()
            .position(|(s, t, x)| *s == source && *t == target && x == m)
    }
}

/// Homomorphisms between every pair of the distinct groups in `groups`, computed once.
struct HomCache {
    class: Vec<usize>,
    homs: Vec<Vec<Vec<Hom>>>,
}

impl HomCache {
    fn new(groups: &[&GroupTable]) -> Self {
        let mut distinct: Vec<&GroupTable> = Vec::new();
        let class = groups
            .iter()
            .map(|g| match distinct.iter().position(|d| d == g) {
                Some(i) => i,
                None => {
                    distinct.push(g);
                    distinct.len() - 1
                }
            })
            .collect();
        let homs = distinct
            .par_iter()
            .map(|a| distinct.iter().map(|b| homomorphisms(a, b)).collect())
            .collect();
        Self { class, homs }
    }

    fn between(&self, i: usize, j: usize) -> &[Hom] {
        &self.homs[self.class[i]][self.class[j]]
    }
}

/// Runs `search` on every ordered pair `(i, j)` of `0..n` in order, in parallel chunks,
/// stopping once more than `cap` morphisms are known.
fn collect_capped<M, I>(
    n: usize,
    cap: usize,
    search: impl Fn(usize, usize) -> I + Sync,
) -> MorphismList<M>
where
    M: Send,
    I: Iterator<Item = M>,
{
    const CHUNK: usize = 4096;
    let mut entries = Vec::new();
    let mut start = 0;
    while start < n * n && entries.len() <= cap {
        let stop = (start + CHUNK).min(n * n);
        let found: Vec<(usize, usize, M)> = (start..stop)
            .into_par_iter()
            .flat_map_iter(|k| {
                let (i, j) = (k / n, k % n);
                search(i, j).map(move |m| (i, j, m))
            })
            .collect();
        entries.extend(found);
        start = stop;
    }
    let truncated = entries.len() > cap;
    entries.truncate(cap);
    MorphismList { entries, truncated }
}

fn agrees(outer: &Hom, inner: &Hom, expected: &Hom) -> bool {
    (0..inner.len()).all(|x| outer.at(inner.at(x)) == expected.at(x))
}

/// Every morphism between the given liftings of one base, ordered by source, target,
/// then map.
pub fn lifting_morphisms(ls: &[Lifting], cap: usize) -> MorphismList<LiftingMorphism> {
    let cache = HomCache::new(&ls.iter().map(|l| l.x().group()).collect::<Vec<_>>());
    collect_capped(ls.len(), cap, |i, j| {
        let (l1, l2) = (&ls[i], &ls[j]);
        cache
            .between(i, j)
            .iter()
            .filter(move |f| {
                agrees(l2.omega(), f, l1.omega())
                    && agrees(f, l1.phi(), l2.phi())
                    && preserves_self_action(l1.x(), l2.x(), f)
            })
            .map(|f| LiftingMorphism::new(f.clone()))
    })
}

/// Every morphism between the given coverings of one base, ordered by source, target,
/// then map. The first component is forced to be `f'⁻¹ f̃`.
pub fn covering_morphisms(cs: &[Covering], cap: usize) -> MorphismList<CoveringMorphism> {
    let cache = HomCache::new(&cs.iter().map(|c| c.total().b().group()).collect::<Vec<_>>());
    collect_capped(cs.len(), cap, |i, j| {
        let (c1, c2) = (&cs[i], &cs[j]);
        let u = c2
            .f()
            .inverse()
            .expect("covering map is bijective")
            .after(c1.f());
        cache.between(i, j).iter().filter_map(move |v| {
            if !agrees(c2.g(), v, c1.g()) {
                return None;
            }
            let m = CoveringMorphism::new(u.clone(), v.clone());
            is_gxmod_morphism(c1.total(), c2.total(), &m.as_gxmod_morphism()).then_some(m)
        })
    })
}

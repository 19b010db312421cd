use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{isomorphisms, preserves_self_action, Hom};
use crate::covering::{Covering, CoveringMorphism};
use crate::error::Result;
use crate::functor::{
    covering_to_lifting, covering_unit, functor_on_covering_morphism, functor_on_lifting_morphism,
    lifting_to_covering,
};
use crate::lifting::{image_lifting, natural_lifting, Lifting, LiftingMorphism};
use crate::xmod::{is_gxmod_morphism, GXMod};

use super::morphisms::{covering_morphisms, lifting_morphisms, MorphismList};
use super::objects::{enumerate_coverings, enumerate_liftings};
use super::pool::SearchPool;

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct MorphismRecord<M> {
    pub source: usize,
    pub target: usize,
    pub map: M,
}

/// Where each functor sends each object and morphism, as indices into the other side's
/// lists. `None` means the image was not found.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FunctorImages {
    pub lifting_to_covering: Vec<Option<usize>>,
    pub covering_to_lifting: Vec<Option<usize>>,
    pub lifting_morphisms: Vec<Option<usize>>,
    pub covering_morphisms: Vec<Option<usize>>,
}

/// The covering-side round trip for one covering.
#[derive(Clone, Debug, Serialize)]
pub struct CoveringRoundTrip {
    pub covering: usize,
    /// Index of the covering obtained by going to liftings and back.
    pub image: Option<usize>,
    /// The first isomorphism of coverings found by exhaustive search.
    pub witness: Option<CoveringMorphism>,
    /// Whether `<f, 1>` is itself such an isomorphism.
    pub unit_is_witness: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TallyReport {
    pub passed: usize,
    pub failed: usize,
}

impl TallyReport {
    fn record(&mut self, ok: bool) -> bool {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        ok
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub base: GXMod,
    pub pool: SearchPool,
    pub morphism_cap: usize,
    pub liftings: Vec<Lifting>,
    pub coverings: Vec<Covering>,
    pub lifting_morphisms: Vec<MorphismRecord<LiftingMorphism>>,
    pub covering_morphisms: Vec<MorphismRecord<CoveringMorphism>>,
    pub morphisms_truncated: bool,
    pub functor_images: FunctorImages,
    pub roundtrip_lifting_exact: bool,
    pub roundtrip_lifting_failures: Vec<usize>,
    pub roundtrip_covering_iso_witnesses: Vec<CoveringRoundTrip>,
    /// Images of objects and morphisms found, identities preserved, composites preserved.
    pub morphism_functor_checks: TallyReport,
    /// Covering side: `η ∘ m = F(G(m)) ∘ η`; lifting side: `G(F(m)) = m`.
    pub naturality_checks: TallyReport,
    pub incomplete: bool,
    pub incompleteness: Vec<String>,
    pub failure_count: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Counts agree with list lengths.
    pub fn is_consistent(&self) -> bool {
        let fi = &self.functor_images;
        fi.lifting_to_covering.len() == self.liftings.len()
            && fi.covering_to_lifting.len() == self.coverings.len()
            && fi.lifting_morphisms.len() == self.lifting_morphisms.len()
            && fi.covering_morphisms.len() == self.covering_morphisms.len()
            && self.roundtrip_covering_iso_witnesses.len() == self.coverings.len()
            && self.roundtrip_lifting_exact == self.roundtrip_lifting_failures.is_empty()
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what);
        }
    }
}

/// An isomorphism `f: X -> X'` of groups with action with `ω' f = ω` and `f φ = φ'`.
pub fn isomorphic_liftings(l1: &Lifting, l2: &Lifting) -> Option<Hom> {
    isomorphisms(l1.x().group(), l2.x().group())
        .into_iter()
        .find(|f| {
            l2.omega().after(f) == *l1.omega()
                && f.after(l1.phi()) == *l2.phi()
                && preserves_self_action(l1.x(), l2.x(), f)
        })
}

fn is_covering_morphism(c1: &Covering, c2: &Covering, m: &CoveringMorphism) -> bool {
    c2.f().after(&m.f) == *c1.f()
        && c2.g().after(&m.g) == *c1.g()
        && is_gxmod_morphism(c1.total(), c2.total(), &m.as_gxmod_morphism())
}

fn records<M: Clone>(list: &MorphismList<M>) -> Vec<MorphismRecord<M>> {
    list.entries
        .iter()
        .map(|(s, t, m)| MorphismRecord {
            source: *s,
            target: *t,
            map: m.clone(),
        })
        .collect()
}

/// Enumerates coverings and liftings of `base` over the pool with all their morphisms,
/// applies both functors everywhere, and records every check.
pub fn verify_equivalence(
    base: &GXMod,
    pool: &SearchPool,
    morphism_cap: usize,
) -> Result<EquivalenceReport> {
    let liftings = enumerate_liftings(base, pool);
    let coverings = enumerate_coverings(base, pool);
    let lm = lifting_morphisms(&liftings, morphism_cap);
    let cm = covering_morphisms(&coverings, morphism_cap);

    let mut r = EquivalenceReport {
        base: base.clone(),
        pool: pool.clone(),
        morphism_cap,
        lifting_morphisms: records(&lm),
        covering_morphisms: records(&cm),
        morphisms_truncated: lm.truncated || cm.truncated,
        functor_images: FunctorImages::default(),
        roundtrip_lifting_exact: true,
        roundtrip_lifting_failures: Vec::new(),
        roundtrip_covering_iso_witnesses: Vec::new(),
        morphism_functor_checks: TallyReport::default(),
        naturality_checks: TallyReport::default(),
        incomplete: false,
        incompleteness: Vec::new(),
        failure_count: 0,
        failures: Vec::new(),
        liftings,
        coverings,
    };

    for (what, l) in [
        ("natural lifting", natural_lifting(base)?),
        ("image lifting", image_lifting(base)?),
    ] {
        if !r
            .liftings
            .iter()
            .any(|m| isomorphic_liftings(&l, m).is_some())
        {
            r.incompleteness.push(format!(
                "no {what} (X of order {}) in the pool",
                l.x().order()
            ));
        }
    }
    if r.morphisms_truncated {
        r.incompleteness
            .push(format!("morphism lists cut off at {morphism_cap}"));
    }
    r.incomplete = !r.incompleteness.is_empty();

    check_objects(&mut r)?;
    check_lifting_morphisms(&mut r, &lm)?;
    check_covering_morphisms(&mut r, &cm)?;
    Ok(r)
}

fn check_objects(r: &mut EquivalenceReport) -> Result<()> {
    let lift_images: Vec<Covering> = r
        .liftings
        .iter()
        .map(lifting_to_covering)
        .collect::<Result<_>>()?;
    for (i, c) in lift_images.iter().enumerate() {
        let idx = r.coverings.iter().position(|d| d == c);
        r.functor_images.lifting_to_covering.push(idx);
        if !r.morphism_functor_checks.record(idx.is_some()) {
            r.fail(format!(
                "covering of lifting {i} not among the enumerated coverings"
            ));
        }
        if covering_to_lifting(c)? != r.liftings[i] {
            r.roundtrip_lifting_failures.push(i);
            r.fail(format!("lifting {i} does not survive the round trip"));
        }
    }
    r.roundtrip_lifting_exact = r.roundtrip_lifting_failures.is_empty();

    let cov_images: Vec<Lifting> = r
        .coverings
        .iter()
        .map(covering_to_lifting)
        .collect::<Result<_>>()?;
    for (j, l) in cov_images.iter().enumerate() {
        let idx = r.liftings.iter().position(|m| m == l);
        r.functor_images.covering_to_lifting.push(idx);
        if !r.morphism_functor_checks.record(idx.is_some()) {
            r.fail(format!(
                "lifting of covering {j} not among the enumerated liftings"
            ));
        }
    }

    let round: Vec<CoveringRoundTrip> = r
        .coverings
        .par_iter()
        .zip(cov_images.par_iter())
        .enumerate()
        .map(|(j, (c, l))| {
            let back = lifting_to_covering(l).expect("valid lifting");
            let image = r.coverings.iter().position(|d| *d == back);
            let witness = isomorphisms(c.total().a().group(), back.total().a().group())
                .into_iter()
                .flat_map(|u| {
                    isomorphisms(c.total().b().group(), back.total().b().group())
                        .into_iter()
                        .map(move |v| CoveringMorphism::new(u.clone(), v))
                })
                .find(|m| is_covering_morphism(c, &back, m));
            let unit_is_witness = is_covering_morphism(c, &back, &covering_unit(c));
            CoveringRoundTrip {
                covering: j,
                image,
                witness,
                unit_is_witness,
            }
        })
        .collect();
    for rt in &round {
        if rt.witness.is_none() || !rt.unit_is_witness || rt.image.is_none() {
            r.fail(format!(
                "covering {} has no isomorphism to its round-trip image",
                rt.covering
            ));
        }
    }
    r.roundtrip_covering_iso_witnesses = round;

    let lifting_ids = r
        .liftings
        .iter()
        .zip(&lift_images)
        .map(|(l, c)| {
            Ok(
                functor_on_lifting_morphism(l, l, &LiftingMorphism::identity(l))?
                    == CoveringMorphism::identity(c),
            )
        })
        .collect::<Result<Vec<bool>>>()?;
    for (i, ok) in lifting_ids.into_iter().enumerate() {
        if !r.morphism_functor_checks.record(ok) {
            r.fail(format!("identity of lifting {i} not preserved"));
        }
    }
    let covering_ids = r
        .coverings
        .iter()
        .zip(&cov_images)
        .map(|(c, l)| {
            Ok(
                functor_on_covering_morphism(c, c, &CoveringMorphism::identity(c))?
                    == LiftingMorphism::identity(l),
            )
        })
        .collect::<Result<Vec<bool>>>()?;
    for (j, ok) in covering_ids.into_iter().enumerate() {
        if !r.morphism_functor_checks.record(ok) {
            r.fail(format!("identity of covering {j} not preserved"));
        }
    }
    Ok(())
}

fn index<M: Clone + Eq + std::hash::Hash>(
    list: &MorphismList<M>,
) -> HashMap<(usize, usize, M), usize> {
    list.entries
        .iter()
        .enumerate()
        .map(|(k, (s, t, m))| ((*s, *t, m.clone()), k))
        .collect()
}

/// Positions of the morphisms leaving each object.
fn by_source<M>(list: &MorphismList<M>) -> HashMap<usize, Vec<usize>> {
    let mut out: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, (s, _, _)) in list.entries.iter().enumerate() {
        out.entry(*s).or_default().push(k);
    }
    out
}

fn check_lifting_morphisms(
    r: &mut EquivalenceReport,
    lm: &MorphismList<LiftingMorphism>,
) -> Result<()> {
    let cm_index: HashMap<_, _> = r
        .covering_morphisms
        .iter()
        .enumerate()
        .map(|(k, rec)| ((rec.source, rec.target, rec.map.clone()), k))
        .collect();
    let mut images = Vec::with_capacity(lm.entries.len());
    for (k, (s, t, m)) in lm.entries.iter().enumerate() {
        let fm = functor_on_lifting_morphism(&r.liftings[*s], &r.liftings[*t], m)?;
        let idx = match (
            r.functor_images.lifting_to_covering[*s],
            r.functor_images.lifting_to_covering[*t],
        ) {
            (Some(cs), Some(ct)) => cm_index.get(&(cs, ct, fm.clone())).copied(),
            _ => None,
        };
        if !r
            .morphism_functor_checks
            .record(idx.is_some() || r.morphisms_truncated)
        {
            r.fail(format!(
                "image of lifting morphism {k} not among the covering morphisms"
            ));
        }
        let back = functor_on_covering_morphism(
            &lifting_to_covering(&r.liftings[*s])?,
            &lifting_to_covering(&r.liftings[*t])?,
            &fm,
        )?;
        if !r.naturality_checks.record(back == *m) {
            r.fail(format!("lifting morphism {k} changes under the round trip"));
        }
        r.functor_images.lifting_morphisms.push(idx);
        images.push(fm);
    }
    let lm_index = index(lm);
    let outgoing = by_source(lm);
    for (k1, (s, j, m1)) in lm.entries.iter().enumerate() {
        for &k2 in outgoing.get(j).map_or(&[][..], Vec::as_slice) {
            let (_, t, m2) = &lm.entries[k2];
            let composite = m2.after(m1);
            let Some(&kc) = lm_index.get(&(*s, *t, composite)) else {
                if !r.morphisms_truncated {
                    r.morphism_functor_checks.record(false);
                    r.fail(format!("lifting morphisms {k2} ∘ {k1} not closed"));
                }
                continue;
            };
            let ok = images[kc] == images[k2].after(&images[k1]);
            if !r.morphism_functor_checks.record(ok) {
                r.fail(format!(
                    "composite of lifting morphisms {k2} ∘ {k1} not preserved"
                ));
            }
        }
    }
    Ok(())
}

fn check_covering_morphisms(
    r: &mut EquivalenceReport,
    cm: &MorphismList<CoveringMorphism>,
) -> Result<()> {
    let lm_index: HashMap<_, _> = r
        .lifting_morphisms
        .iter()
        .enumerate()
        .map(|(k, rec)| ((rec.source, rec.target, rec.map.clone()), k))
        .collect();
    let mut images = Vec::with_capacity(cm.entries.len());
    for (k, (s, t, m)) in cm.entries.iter().enumerate() {
        let (c1, c2) = (r.coverings[*s].clone(), r.coverings[*t].clone());
        let gm = functor_on_covering_morphism(&c1, &c2, m)?;
        let idx = match (
            r.functor_images.covering_to_lifting[*s],
            r.functor_images.covering_to_lifting[*t],
        ) {
            (Some(ls), Some(lt)) => lm_index.get(&(ls, lt, gm.clone())).copied(),
            _ => None,
        };
        if !r
            .morphism_functor_checks
            .record(idx.is_some() || r.morphisms_truncated)
        {
            r.fail(format!(
                "image of covering morphism {k} not among the lifting morphisms"
            ));
        }
        let (l1, l2) = (covering_to_lifting(&c1)?, covering_to_lifting(&c2)?);
        let fgm = functor_on_lifting_morphism(&l1, &l2, &gm)?;
        let natural = covering_unit(&c2).after(m) == fgm.after(&covering_unit(&c1));
        if !r.naturality_checks.record(natural) {
            r.fail(format!("naturality square fails at covering morphism {k}"));
        }
        r.functor_images.covering_morphisms.push(idx);
        images.push(gm);
    }
    let cm_index = index(cm);
    let outgoing = by_source(cm);
    for (k1, (s, j, m1)) in cm.entries.iter().enumerate() {
        for &k2 in outgoing.get(j).map_or(&[][..], Vec::as_slice) {
            let (_, t, m2) = &cm.entries[k2];
            let Some(&kc) = cm_index.get(&(*s, *t, m2.after(m1))) else {
                if !r.morphisms_truncated {
                    r.morphism_functor_checks.record(false);
                    r.fail(format!("covering morphisms {k2} ∘ {k1} not closed"));
                }
                continue;
            };
            let ok = images[kc] == images[k2].after(&images[k1]);
            if !r.morphism_functor_checks.record(ok) {
                r.fail(format!(
                    "composite of covering morphisms {k2} ∘ {k1} not preserved"
                ));
            }
        }
    }
    Ok(())
}

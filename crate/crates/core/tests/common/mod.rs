//! Brute-force oracles over raw tables.
//!
//! Nothing here calls a validator or a search routine of the library; objects are read
//! back as plain `Vec<Vec<usize>>` tables and checked against the definitions directly.

#![allow(dead_code)]

pub mod corrupt;
pub mod lemmas;

use gxmod::algebra::{GroupTable, Gwa, Hom};
use gxmod::covering::Covering;
use gxmod::lifting::Lifting;
use gxmod::xmod::{GXMod, GXModMorphism};

pub type Table = Vec<Vec<usize>>;

/// Every map `0..n -> 0..m` sending 0 to 0, in lexicographic order.
pub fn pointed_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut digits = vec![0; n];
    loop {
        out.push(digits.clone());
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < m {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub fn is_hom(src: &Table, tgt: &Table, f: &[usize]) -> bool {
    let n = src.len();
    (0..n).all(|a| (0..n).all(|b| f[src[a][b]] == tgt[f[a]][f[b]]))
}

/// Every homomorphism, by assigning images in the order `0, 1, 2, ...` and abandoning a
/// partial map as soon as `f(ab) = f(a)f(b)` fails on assigned elements.
pub fn homs(src: &Table, tgt: &Table) -> Vec<Vec<usize>> {
    fn extend(src: &Table, tgt: &Table, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = f.len();
        if k == src.len() {
            out.push(f.clone());
            return;
        }
        for y in 0..tgt.len() {
            f.push(y);
            let consistent = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let ab = src[a][b];
                    a.max(b).max(ab) != k || f[ab] == tgt[f[a]][f[b]]
                })
            });
            if consistent {
                extend(src, tgt, f, out);
            }
            f.pop();
        }
    }
    let mut out = Vec::new();
    extend(src, tgt, &mut vec![0], &mut out);
    out.retain(|f| is_hom(src, tgt, f));
    out
}

pub fn is_bijection(f: &[usize], m: usize) -> bool {
    let mut seen = vec![false; m];
    f.len() == m && f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

pub fn automorphisms(t: &Table) -> Vec<Vec<usize>> {
    homs(t, t)
        .into_iter()
        .filter(|f| is_bijection(f, t.len()))
        .collect()
}

/// `act[x][y]` is an action of `actor` on `space` by automorphisms.
pub fn is_action(actor: &Table, space: &Table, act: &Table) -> bool {
    let (n, m) = (actor.len(), space.len());
    (0..m).all(|y| act[0][y] == y)
        && (0..n).all(|x| (0..n).all(|z| (0..m).all(|y| act[actor[x][z]][y] == act[x][act[z][y]])))
        && (0..n).all(|x| {
            (0..m).all(|y| (0..m).all(|w| act[x][space[y][w]] == space[act[x][y]][act[x][w]]))
        })
}

/// Every action by automorphisms, found by choosing each row among the automorphisms
/// of `space` and checking the laws.
pub fn actions(actor: &Table, space: &Table) -> Vec<Table> {
    let auts = automorphisms(space);
    let n = actor.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut act: Table = choice.iter().map(|&c| auts[c].clone()).collect();
        act[0] = (0..space.len()).collect();
        if is_action(actor, space, &act) {
            out.push(act);
        }
        let mut i = n;
        loop {
            if i <= 1 {
                out.sort();
                out.dedup();
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < auts.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

pub fn self_actions(t: &Table) -> Vec<Table> {
    actions(t, t)
}

/// Conditions (i) and (ii) with raw tables.
pub fn is_gxmod(a_act: &Table, b_act: &Table, alpha: &[usize], action: &Table) -> bool {
    let (na, nb) = (a_act.len(), b_act.len());
    (0..na).all(|a| (0..nb).all(|b| alpha[action[b][a]] == b_act[b][alpha[a]]))
        && (0..na).all(|a| (0..na).all(|a1| action[alpha[a]][a1] == a_act[a][a1]))
}

/// Number of crossed modules on `(a, b)`: every homomorphism times every action, checked.
pub fn gxmod_count(a: &Gwa, b: &Gwa) -> usize {
    let (ta, tb) = (a.group().rows(), b.group().rows());
    let (aa, ba) = (a.action().rows(), b.action().rows());
    let acts = actions(&tb, &ta);
    homs(&ta, &tb)
        .iter()
        .map(|alpha| {
            acts.iter()
                .filter(|act| is_gxmod(&aa, &ba, alpha, act))
                .count()
        })
        .sum()
}

pub struct Raw {
    pub a: Table,
    pub a_act: Table,
    pub b: Table,
    pub b_act: Table,
    pub alpha: Vec<usize>,
    pub action: Table,
}

impl Raw {
    pub fn of(x: &GXMod) -> Self {
        Self {
            a: x.a().group().rows(),
            a_act: x.a().action().rows(),
            b: x.b().group().rows(),
            b_act: x.b().action().rows(),
            alpha: x.alpha().as_slice().to_vec(),
            action: x.action().rows(),
        }
    }
}

pub fn preserves(src_act: &Table, tgt_act: &Table, f: &[usize]) -> bool {
    let n = src_act.len();
    (0..n).all(|x| (0..n).all(|y| f[src_act[x][y]] == tgt_act[f[x]][f[y]]))
}

/// `<f, g>` is a morphism of crossed modules, checked on raw tables.
pub fn is_morphism(src: &Raw, tgt: &Raw, f: &[usize], g: &[usize]) -> bool {
    let (na, nb) = (src.a.len(), src.b.len());
    is_hom(&src.a, &tgt.a, f)
        && is_hom(&src.b, &tgt.b, g)
        && preserves(&src.a_act, &tgt.a_act, f)
        && preserves(&src.b_act, &tgt.b_act, g)
        && (0..na).all(|a| g[src.alpha[a]] == tgt.alpha[f[a]])
        && (0..nb).all(|b| (0..na).all(|a| f[src.action[b][a]] == tgt.action[g[b]][f[a]]))
}

/// Every `<f, g>: src -> tgt` with `f` among `fs`.
pub fn morphisms_with(
    src: &GXMod,
    tgt: &GXMod,
    fs: &[Vec<usize>],
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (rs, rt) = (Raw::of(src), Raw::of(tgt));
    let gs = homs(&rs.b, &rt.b);
    let mut out = Vec::new();
    for f in fs {
        for g in &gs {
            if is_morphism(&rs, &rt, f, g) {
                out.push((f.clone(), g.clone()));
            }
        }
    }
    out
}

pub fn morphisms(src: &GXMod, tgt: &GXMod) -> Vec<(Vec<usize>, Vec<usize>)> {
    let fs = homs(&src.a().group().rows(), &tgt.a().group().rows());
    morphisms_with(src, tgt, &fs)
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// Some `l: src -> c.total` with `c ∘ l = m`, by exhaustive search.
pub fn search_covering_factorization(
    src: &GXMod,
    m: &GXModMorphism,
    c: &Covering,
) -> Option<GXModMorphism> {
    morphisms(src, c.total())
        .into_iter()
        .find(|(f, g)| {
            compose(c.f().as_slice(), f) == m.f.as_slice()
                && compose(c.g().as_slice(), g) == m.g.as_slice()
        })
        .map(|(f, g)| GXModMorphism::new(Hom::new(f), Hom::new(g)))
}

/// Some `e: src -> (A, X, φ)` with `<1, ω> ∘ e = m`, by exhaustive search.
pub fn search_lifting_extension(
    src: &GXMod,
    m: &GXModMorphism,
    l: &Lifting,
) -> Option<GXModMorphism> {
    let lifted = l.lifted();
    morphisms_with(src, &lifted, &[m.f.as_slice().to_vec()])
        .into_iter()
        .find(|(_, g)| compose(l.omega().as_slice(), g) == m.g.as_slice())
        .map(|(f, g)| GXModMorphism::new(Hom::new(f), Hom::new(g)))
}

/// Subgroups of a raw table, as sorted member lists.
pub fn subgroups(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if members
            .iter()
            .all(|&x| members.iter().all(|&y| mask >> t[x][y] & 1 == 1))
        {
            out.push(members);
        }
    }
    out
}

pub fn table(g: &GroupTable) -> Table {
    g.rows()
}

/// Outcome counts of comparing a criterion with exhaustive search.
#[derive(Debug, Default)]
pub struct Agreement {
    pub instances: usize,
    pub constructed: usize,
    pub witnessed: usize,
    pub disagreements: Vec<String>,
}

/// Simply connected crossed modules on pool groups of order at most `bound`.
pub fn simply_connected_sources(bound: usize) -> Vec<GXMod> {
    let gwas = gxmod::enumerate::SearchPool::new(bound).unwrap().gwas();
    gwas.iter()
        .flat_map(|a| {
            gwas.iter()
                .flat_map(move |b| gxmod::enumerate::enumerate_gxmods(a, b))
        })
        .filter(gxmod::xmod::is_simply_connected)
        .collect()
}

/// Runs `factor_through_covering` and `extend_morphism_through_lifting` on every
/// `(src, m, c)` and `(src, m, l)` with `src` among `sources`, `m: src -> base` any
/// morphism, and `c`, `l` every covering and lifting of `base` over the pool, comparing
/// each answer with exhaustive search.
pub fn criterion_agreement(base: &GXMod, sources: &[GXMod], pool_bound: usize) -> Agreement {
    use gxmod::covering::{factor_through_covering, Outcome};
    use gxmod::enumerate::{enumerate_coverings, enumerate_liftings, SearchPool};
    use gxmod::lifting::extend_morphism_through_lifting;

    let pool = SearchPool::new(pool_bound).unwrap();
    let coverings = enumerate_coverings(base, &pool);
    let liftings = enumerate_liftings(base, &pool);
    let mut out = Agreement::default();
    for src in sources {
        for (f, g) in morphisms(src, base) {
            let m = GXModMorphism::new(Hom::new(f), Hom::new(g));
            let src_kernel: Vec<usize> = (0..src.a().order())
                .filter(|&k| src.alpha().at(k) == 0)
                .collect();
            for c in &coverings {
                out.instances += 1;
                let found = search_covering_factorization(src, &m, c);
                match factor_through_covering(src, &m, c).unwrap() {
                    Outcome::Constructed(l) => {
                        out.constructed += 1;
                        let ok = found.is_some()
                            && is_morphism(
                                &Raw::of(src),
                                &Raw::of(c.total()),
                                l.f.as_slice(),
                                l.g.as_slice(),
                            )
                            && c.morphism().after(&l) == m;
                        if !ok {
                            out.disagreements
                                .push(format!("covering: {src} via {m:?} through {}", c.total()));
                        }
                    }
                    Outcome::WitnessFailure { element } => {
                        out.witnessed += 1;
                        let covered = (0..c.total().a().order())
                            .filter(|&k| c.total().alpha().at(k) == 0)
                            .map(|k| c.f().at(k))
                            .any(|v| v == element);
                        let from_kernel = src_kernel.iter().any(|&k| m.f.at(k) == element);
                        if found.is_some() || covered || !from_kernel {
                            out.disagreements
                                .push(format!("covering witness {element}: {src} via {m:?}"));
                        }
                    }
                }
            }
            for l in &liftings {
                out.instances += 1;
                let found = search_lifting_extension(src, &m, l);
                match extend_morphism_through_lifting(src, &m, l).unwrap() {
                    Outcome::Constructed(e) => {
                        out.constructed += 1;
                        let ok = found.is_some()
                            && is_morphism(
                                &Raw::of(src),
                                &Raw::of(&l.lifted()),
                                e.f.as_slice(),
                                e.g.as_slice(),
                            )
                            && compose(l.omega().as_slice(), e.g.as_slice()) == m.g.as_slice()
                            && e.f == m.f;
                        if !ok {
                            out.disagreements
                                .push(format!("lifting: {src} via {m:?} through {}", l.x()));
                        }
                    }
                    Outcome::WitnessFailure { element } => {
                        out.witnessed += 1;
                        let from_kernel = src_kernel.iter().any(|&k| m.f.at(k) == element);
                        if found.is_some() || l.phi().at(element) == 0 || !from_kernel {
                            out.disagreements
                                .push(format!("lifting witness {element}: {src} via {m:?}"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `criterion_agreement` over the simply connected sources up to `source_bound` (and the
/// base itself when it is simply connected), asserting agreement everywhere.
pub fn criterion_check(base: &GXMod, source_bound: usize, pool_bound: usize) {
    let mut sources = simply_connected_sources(source_bound);
    if gxmod::xmod::is_simply_connected(base) {
        sources.push(base.clone());
    }
    let r = criterion_agreement(base, &sources, pool_bound);
    assert!(
        r.disagreements.is_empty(),
        "{:#?}",
        &r.disagreements[..r.disagreements.len().min(5)]
    );
    assert!(r.constructed > 0, "{base}: {r:?}");
    // over an aspherical base every morphism factors, so failures need ker α ≠ 0
    assert_eq!(
        r.witnessed > 0,
        !gxmod::xmod::is_aspherical(base),
        "{base}: {r:?}"
    );
}

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{
    automorphisms, for_each_hom, homomorphisms, preserves_self_action, Action, GroupTable, Gwa,
    Hom, SelfAction,
};
use crate::cat1::{satisfies_cat1, GCat1};
use crate::covering::Covering;
use crate::lifting::Lifting;
use crate::xmod::{satisfies_conditions, ExtAction, GXMod};

use super::pool::SearchPool;

/// `Aut(G)` as a group table on `0..|Aut(G)|`, element `i` being `maps[i]`, composed as
/// `maps[op(i, j)] = maps[i] ∘ maps[j]`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub table: GroupTable,
    pub maps: Vec<Hom>,
}

pub fn aut_group(g: &GroupTable) -> AutGroup {
    let maps = automorphisms(g);
    let index: HashMap<&Hom, usize> = maps.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let rows: Vec<Vec<usize>> = maps
        .iter()
        .map(|p| maps.iter().map(|q| index[&p.after(q)]).collect())
        .collect();
    let table = GroupTable::from_rows(format!("Aut({})", g.name()), &rows).expect("square table");
    AutGroup { table, maps }
}

/// All actions of `actor` on `space` by automorphisms, one per homomorphism
/// `actor -> Aut(space)`, sorted.
pub fn enumerate_ext_actions(actor: &GroupTable, space: &GroupTable) -> Vec<ExtAction> {
    let aut = aut_group(space);
    let mut out: Vec<Action> = homomorphisms(actor, &aut.table)
        .into_iter()
        .map(|h| {
            Action::from_automorphisms(
                space.order(),
                h.as_slice().iter().map(|&i| aut.maps[i].clone()),
            )
        })
        .collect();
    out.sort();
    out
}

/// All self-actions of `g`, sorted; the trivial action comes first.
pub fn enumerate_self_actions(g: &GroupTable) -> Vec<SelfAction> {
    enumerate_ext_actions(g, g)
}

/// `g` with each of its self-actions.
pub fn gwa_objects(g: &GroupTable) -> Vec<Gwa> {
    enumerate_self_actions(g)
        .into_iter()
        .map(|a| Gwa::from_parts(g.clone(), a).expect("square table"))
        .collect()
}

/// All generalized crossed modules `(a, b, alpha)`, ordered by `alpha` then action.
pub fn enumerate_gxmods(a: &Gwa, b: &Gwa) -> Vec<GXMod> {
    let actions = enumerate_ext_actions(b.group(), a.group());
    let alphas: Vec<Hom> = homomorphisms(a.group(), b.group())
        .into_iter()
        .filter(|h| preserves_self_action(a, b, h))
        .collect();
    alphas
        .par_iter()
        .flat_map_iter(|alpha| {
            actions.iter().filter_map(move |act| {
                let x = GXMod::from_parts(a.clone(), b.clone(), alpha.clone(), act.clone())
                    .expect("shapes");
                satisfies_conditions(&x).then_some(x)
            })
        })
        .collect()
}

/// All liftings `(X, φ, ω)` of `base` with `X` a pool group under any self-action.
///
/// Ordered by `X` (pool order, then self-action), then `ω`, then `φ`.
pub fn enumerate_liftings(base: &GXMod, pool: &SearchPool) -> Vec<Lifting> {
    let xs = pool.gwas();
    xs.par_iter()
        .flat_map_iter(|x| liftings_through(base, x))
        .collect()
}

fn liftings_through(base: &GXMod, x: &Gwa) -> Vec<Lifting> {
    let mut out = Vec::new();
    let phis = homomorphisms(base.a().group(), x.group());
    for_each_hom(x.group(), base.b().group(), |omega| {
        if !preserves_self_action(x, base.b(), omega) {
            return;
        }
        for phi in &phis {
            if omega.after(phi) != *base.alpha() {
                continue;
            }
            let equivariant = x.group().elements().all(|y| {
                base.a()
                    .group()
                    .elements()
                    .all(|a| phi.at(base.act(omega.at(y), a)) == x.act(y, phi.at(a)))
            });
            if equivariant {
                let l = Lifting::from_parts(base.clone(), x.clone(), phi.clone(), omega.clone())
                    .expect("shapes");
                out.push(l);
            }
        }
    });
    out.sort_by(|l, m| (l.omega(), l.phi()).cmp(&(m.omega(), m.phi())));
    out
}

/// All coverings `<f, g>: (Ã, B̃, α̃) -> base` where `Ã` carries the group table of `A`,
/// `f` ranges over its group automorphisms, and `B̃` is a pool group under any
/// self-action.
///
/// `f` determines the self-action of `Ã` and `g` the action of `B̃` on `Ã`, so only
/// `α̃` remains free. Ordered by `f`, then `B̃`, then `g`, then `α̃`.
pub fn enumerate_coverings(base: &GXMod, pool: &SearchPool) -> Vec<Covering> {
    let bts = pool.gwas();
    let fs = automorphisms(base.a().group());
    let jobs: Vec<(&Hom, &Gwa)> = fs
        .iter()
        .flat_map(|f| bts.iter().map(move |bt| (f, bt)))
        .collect();
    jobs.par_iter()
        .flat_map_iter(|&(f, bt)| coverings_through(base, f, bt))
        .collect()
}

fn coverings_through(base: &GXMod, f: &Hom, bt: &Gwa) -> Vec<Covering> {
    let a = base.a();
    let f_inv = f.inverse().expect("automorphism");
    let at = a.pull_back(a.group().clone(), f).expect("bijective");
    let n = a.order();
    let af = base.alpha().after(f);
    let alpha_ts = homomorphisms(a.group(), bt.group());
    let mut out = Vec::new();
    for_each_hom(bt.group(), base.b().group(), |g| {
        if !preserves_self_action(bt, base.b(), g) {
            return;
        }
        let table = (0..bt.order() * n)
            .map(|i| f_inv.at(base.act(g.at(i / n), f.at(i % n))))
            .collect();
        let action = Action::from_flat(bt.order(), n, table);
        for alpha_t in &alpha_ts {
            if g.after(alpha_t) != af {
                continue;
            }
            let total = GXMod::from_parts(at.clone(), bt.clone(), alpha_t.clone(), action.clone())
                .expect("shapes");
            if satisfies_conditions(&total) {
                out.push(
                    Covering::from_parts(total, base.clone(), f.clone(), g.clone())
                        .expect("shapes"),
                );
            }
        }
    });
    out.sort_by(|c, d| (c.g(), c.total().alpha()).cmp(&(d.g(), d.total().alpha())));
    out
}

/// All generalized cat¹-groups `(g, s, t)`, ordered by `s` then `t`.
///
/// `st = t` and `ts = s` force `s` and `t` to be idempotent, so only idempotent
/// endomorphisms preserving the self-action are paired up.
pub fn enumerate_gcat1s(g: &Gwa) -> Vec<GCat1> {
    let idempotents: Vec<Hom> = homomorphisms(g.group(), g.group())
        .into_iter()
        .filter(|e| e.after(e) == *e && preserves_self_action(g, g, e))
        .collect();
    let mut out = Vec::new();
    for s in &idempotents {
        for t in &idempotents {
            if satisfies_cat1(g, s, t) {
                out.push(GCat1::from_parts(g.clone(), s.clone(), t.clone()).expect("shapes"));
            }
        }
    }
    out
}

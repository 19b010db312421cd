//! The lemma suite: universally quantified statements checked over every object the
//! pool generates. Each check panics on the first counterexample.

use gxmod::algebra::{automorphisms, homomorphisms, validate_gwa_morphism, Gwa, Hom};
use gxmod::covering::{covering_kernel_check, validate_covering, Covering};
use gxmod::enumerate::{enumerate_coverings, enumerate_gxmods, enumerate_liftings, SearchPool};
use gxmod::lifting::{
    image_lifting, lifting_criterion, lifting_criterion_witness, natural_lifting, validate_lifting,
    Lifting,
};
use gxmod::xmod::{
    check_alpha_gwa_morphism, check_kernel_acts_trivially, image_gxmod, is_aspherical,
    kernel_gxmod, transport_codomain, transport_domain, validate_gxmod, validate_gxmod_morphism,
    GXMod,
};

pub fn gxmods(bound: usize) -> Vec<GXMod> {
    let gwas = SearchPool::new(bound).unwrap().gwas();
    gwas.iter()
        .flat_map(|a| gwas.iter().flat_map(move |b| enumerate_gxmods(a, b)))
        .collect()
}

/// Automorphisms of the group that preserve the self-action.
fn gwa_automorphisms(g: &Gwa) -> Vec<Hom> {
    automorphisms(g.group())
        .into_iter()
        .filter(|f| validate_gwa_morphism(g, g, f).unwrap().is_valid())
        .collect()
}

pub fn kernel_and_image_constructions() {
    let all = gxmods(6);
    assert!(all.len() > 500);
    for x in &all {
        let k = kernel_gxmod(x).unwrap();
        let i = image_gxmod(x).unwrap();
        assert!(validate_gxmod(&k).is_valid(), "kernel of {x}");
        assert!(validate_gxmod(&i).is_valid(), "image of {x}");
        assert!(is_aspherical(&i), "image of {x}");
        assert_eq!(k.a().order(), x.kernel().len());
        assert_eq!(i.a().order(), x.image().len());
    }
}

pub fn kernel_acts_trivially_and_alpha_preserves_self_action() {
    for x in gxmods(6) {
        assert!(check_kernel_acts_trivially(&x), "{x}");
        assert!(check_alpha_gwa_morphism(&x), "{x}");
        let r = super::Raw::of(&x);
        for k in (0..r.a.len()).filter(|&k| r.alpha[k] == 0) {
            assert!((0..r.a.len()).all(|a| r.a_act[k][a] == a));
        }
    }
}

pub fn transports_round_trip_exactly() {
    for x in gxmods(6) {
        for f in gwa_automorphisms(x.b()) {
            let there = transport_codomain(&x, x.b(), &f).unwrap();
            assert!(validate_gxmod(&there.xmod).is_valid());
            let w = validate_gxmod_morphism(&x, &there.xmod, &there.witness).unwrap();
            assert!(w.is_valid() && there.witness.is_bijective());
            let back = transport_codomain(&there.xmod, x.b(), &f.inverse().unwrap()).unwrap();
            assert_eq!(back.xmod, x);
        }
        for g in gwa_automorphisms(x.a()) {
            let there = transport_domain(&x, x.a(), &g).unwrap();
            assert!(validate_gxmod(&there.xmod).is_valid());
            let w = validate_gxmod_morphism(&there.xmod, &x, &there.witness).unwrap();
            assert!(w.is_valid() && there.witness.is_bijective());
            let back = transport_domain(&there.xmod, x.a(), &g.inverse().unwrap()).unwrap();
            assert_eq!(back.xmod, x);
        }
    }
}

fn small_bases() -> Vec<GXMod> {
    gxmods(4)
}

pub fn coverings_send_kernel_into_kernel() {
    let pool = SearchPool::new(6).unwrap();
    let mut seen = 0;
    for base in small_bases() {
        for c in enumerate_coverings(&base, &pool) {
            assert!(covering_kernel_check(&c));
            let r = super::Raw::of(c.total());
            for k in (0..r.a.len()).filter(|&k| r.alpha[k] == 0) {
                assert_eq!(base.alpha().at(c.f().at(k)), 0);
            }
            seen += 1;
        }
    }
    assert!(seen > 1000, "{seen}");
}

pub fn liftings_have_kernel_of_phi_inside_kernel_of_alpha() {
    let pool = SearchPool::new(6).unwrap();
    for base in small_bases() {
        for l in enumerate_liftings(&base, &pool) {
            for a in base.a().group().elements() {
                if l.phi().at(a) == 0 {
                    assert_eq!(base.alpha().at(a), 0);
                }
            }
        }
    }
}

pub fn enumerated_objects_validate() {
    let pool = SearchPool::new(4).unwrap();
    for base in small_bases() {
        assert!(enumerate_liftings(&base, &pool)
            .iter()
            .all(|l| validate_lifting(l).is_valid()));
        assert!(enumerate_coverings(&base, &pool)
            .iter()
            .all(|c| validate_covering(c).is_valid()));
    }
}

pub fn natural_and_image_liftings() {
    for base in gxmods(6) {
        let n = natural_lifting(&base).unwrap();
        assert!(validate_lifting(&n).is_valid());
        assert_eq!(n.x().order() * base.kernel().len(), base.a().order());
        let i = image_lifting(&base).unwrap();
        assert!(validate_lifting(&i).is_valid());
        assert!(i.omega().is_injective());
    }
}

/// On every candidate `(X, φ, ω)` with `ω φ = α` and `ω` a morphism of groups with
/// action, the criterion and the full validator agree.
pub fn lifting_criterion_agrees_with_validator() {
    let gwas = SearchPool::new(4).unwrap().gwas();
    let (mut yes, mut no) = (0, 0);
    for base in small_bases() {
        for x in &gwas {
            let omegas: Vec<Hom> = homomorphisms(x.group(), base.b().group())
                .into_iter()
                .filter(|w| validate_gwa_morphism(x, base.b(), w).unwrap().is_valid())
                .collect();
            for phi in homomorphisms(base.a().group(), x.group()) {
                for omega in &omegas {
                    if omega.after(&phi) != *base.alpha() {
                        continue;
                    }
                    let criterion = lifting_criterion(&base, x, &phi, omega).unwrap();
                    let l =
                        Lifting::from_parts(base.clone(), x.clone(), phi.clone(), omega.clone())
                            .unwrap();
                    assert_eq!(criterion, validate_lifting(&l).is_valid(), "{base} via {x}");
                    if criterion {
                        yes += 1;
                    } else {
                        no += 1;
                        let (y, a) = lifting_criterion_witness(&base, x, &phi, omega)
                            .unwrap()
                            .unwrap();
                        assert_ne!(phi.at(base.act(omega.at(y), a)), x.act(y, phi.at(a)));
                    }
                }
            }
        }
    }
    assert!(yes > 0 && no > 0, "{yes} / {no}");
}

pub fn identity_covering_and_lifting() {
    for base in gxmods(4) {
        assert!(validate_covering(&Covering::identity(&base)).is_valid());
        assert!(validate_lifting(&Lifting::identity(&base)).is_valid());
    }
}

//! The two functors between liftings and coverings of a fixed generalized crossed module.

use crate::algebra::Hom;
use crate::covering::{validate_covering, validate_covering_morphism, Covering, CoveringMorphism};
use crate::error::{ensure_constructed, ensure_valid, Error, Result};
use crate::lifting::{validate_lifting, validate_lifting_morphism, Lifting, LiftingMorphism};

/// `(X, φ, ω) ↦ <1_A, ω>: (A, X, φ) -> (A, B, α)`.
pub fn lifting_to_covering(l: &Lifting) -> Result<Covering> {
    let c = Covering::from_parts(
        l.lifted(),
        l.base().clone(),
        Hom::identity(l.base().a().order()),
        l.omega().clone(),
    )?;
    ensure_constructed("covering of a lifting", validate_covering(&c))?;
    Ok(c)
}

/// `<f, g>: (Ã, B̃, α̃) -> (A, B, α) ↦ (B̃, α̃ f⁻¹, g)`.
pub fn covering_to_lifting(c: &Covering) -> Result<Lifting> {
    let f_inv = c
        .f()
        .inverse()
        .ok_or_else(|| Error::Precondition("covering map is not bijective".into()))?;
    let l = Lifting::from_parts(
        c.base().clone(),
        c.total().b().clone(),
        c.total().alpha().after(&f_inv),
        c.g().clone(),
    )?;
    ensure_constructed("lifting of a covering", validate_lifting(&l))?;
    Ok(l)
}

/// `f ↦ <1_A, f>`.
pub fn functor_on_lifting_morphism(
    src: &Lifting,
    tgt: &Lifting,
    m: &LiftingMorphism,
) -> Result<CoveringMorphism> {
    ensure_valid("lifting morphism", validate_lifting_morphism(src, tgt, m)?)?;
    let out = CoveringMorphism::new(Hom::identity(src.base().a().order()), m.f.clone());
    let report =
        validate_covering_morphism(&lifting_to_covering(src)?, &lifting_to_covering(tgt)?, &out)?;
    ensure_constructed("image of a lifting morphism", report)?;
    Ok(out)
}

/// `<u, v> ↦ v`.
pub fn functor_on_covering_morphism(
    src: &Covering,
    tgt: &Covering,
    m: &CoveringMorphism,
) -> Result<LiftingMorphism> {
    ensure_valid(
        "covering morphism",
        validate_covering_morphism(src, tgt, m)?,
    )?;
    let out = LiftingMorphism::new(m.g.clone());
    let report =
        validate_lifting_morphism(&covering_to_lifting(src)?, &covering_to_lifting(tgt)?, &out)?;
    ensure_constructed("image of a covering morphism", report)?;
    Ok(out)
}

/// The isomorphism `<f, 1_B̃>` from a covering to the covering of its lifting.
pub fn covering_unit(c: &Covering) -> CoveringMorphism {
    CoveringMorphism::new(c.f().clone(), Hom::identity(c.total().b().order()))
}

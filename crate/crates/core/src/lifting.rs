//! Liftings `(X, φ, ω)` of a generalized crossed module `(A, B, α)`: factorizations
//! `α = ω φ` through a group with action `X` making `(A, X, φ)` a generalized crossed
//! module under `x·a = ω(x)·a`.

use serde::Serialize;

use crate::algebra::{
    check_gwa_shape, is_ideal, kernel, quotient_gwa, validate_action, validate_gwa,
    validate_gwa_morphism, validate_hom, Action, ActionNotation, Gwa, Hom, Subgroup,
};
use crate::covering::Outcome;
use crate::error::{ensure_constructed, ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};
use crate::xmod::{
    check_conditions, is_simply_connected, require_gwa_iso, transport_codomain,
    validate_gxmod_morphism, GXMod, GXModMorphism,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifting {
    base: GXMod,
    x: Gwa,
    phi: Hom,
    omega: Hom,
}

impl Lifting {
    /// Checks only that the maps have the right shape.
    pub fn from_parts(base: GXMod, x: Gwa, phi: Hom, omega: Hom) -> Result<Self> {
        check_gwa_shape(base.a(), &x, &phi)?;
        check_gwa_shape(&x, base.b(), &omega)?;
        Ok(Self {
            base,
            x,
            phi,
            omega,
        })
    }

    pub fn new(base: GXMod, x: Gwa, phi: Hom, omega: Hom) -> Result<Self> {
        let l = Self::from_parts(base, x, phi, omega)?;
        ensure_valid("lifting", validate_lifting(&l))?;
        Ok(l)
    }

    /// `(B, α, 1_B)`.
    pub fn identity(base: &GXMod) -> Self {
        Self {
            base: base.clone(),
            x: base.b().clone(),
            phi: base.alpha().clone(),
            omega: Hom::identity(base.b().order()),
        }
    }

    pub fn base(&self) -> &GXMod {
        &self.base
    }

    pub fn x(&self) -> &Gwa {
        &self.x
    }

    pub fn phi(&self) -> &Hom {
        &self.phi
    }

    pub fn omega(&self) -> &Hom {
        &self.omega
    }

    /// `x·a = ω(x)·a`.
    pub fn induced_action(&self) -> Action {
        self.base.action().pull_back_actor(&self.omega)
    }

    /// `(A, X, φ)` under the induced action.
    pub fn lifted(&self) -> GXMod {
        GXMod::from_parts(
            self.base.a().clone(),
            self.x.clone(),
            self.phi.clone(),
            self.induced_action(),
        )
        .expect("shapes checked at construction")
    }
}

/// Validates the base, `X`, `ω` as a morphism of groups with action, `ω φ = α`
/// (witness `[a]`), and `(A, X, φ)` under the induced action.
pub fn validate_lifting(l: &Lifting) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.absorb("base", crate::xmod::validate_gxmod(&l.base));
    report.absorb("X", validate_gwa(&l.x));
    report.absorb(
        "omega",
        validate_gwa_morphism(&l.x, l.base.b(), &l.omega).expect("shape checked"),
    );
    report.absorb(
        "phi",
        validate_hom(l.base.a().group(), l.x.group(), &l.phi).expect("shape checked"),
    );
    for a in l.base.a().group().elements() {
        let (w, al) = (l.omega.at(l.phi.at(a)), l.base.alpha().at(a));
        if w != al {
            report.push(
                Rule::LiftingFactorization,
                vec![a],
                format!("omega(phi({a})) = {w} but alpha({a}) = {al}"),
            );
        }
    }
    let lifted = l.lifted();
    report.absorb(
        "action",
        validate_action(
            l.x.group(),
            l.base.a().group(),
            lifted.action(),
            ActionNotation::External,
        )
        .expect("shape checked"),
    );
    let mut conditions = ValidationReport::new();
    check_conditions(&lifted, &mut conditions);
    report.absorb("lifted", conditions);
    report
}

/// For `ω φ = α`: the first `(x, a)` with `φ(ω(x)·a) ≠ ^x φ(a)`, if any.
///
/// No such pair exists exactly when `(X, φ, ω)` is a lifting.
pub fn lifting_criterion_witness(
    base: &GXMod,
    x: &Gwa,
    phi: &Hom,
    omega: &Hom,
) -> Result<Option<(usize, usize)>> {
    check_gwa_shape(base.a(), x, phi)?;
    check_gwa_shape(x, base.b(), omega)?;
    if let Some(a) = base
        .a()
        .group()
        .elements()
        .find(|&a| omega.at(phi.at(a)) != base.alpha().at(a))
    {
        return Err(Error::Precondition(format!(
            "omega(phi({a})) differs from alpha({a})"
        )));
    }
    let found = x.group().elements().find_map(|y| {
        base.a()
            .group()
            .elements()
            .find(|&a| phi.at(base.act(omega.at(y), a)) != x.act(y, phi.at(a)))
            .map(|a| (y, a))
    });
    // condition (ii) holds automatically: φ(a)·a1 = ω(φ(a))·a1 = α(a)·a1 = ^a a1
    debug_assert!(base.a().group().elements().all(|a| base
        .a()
        .group()
        .elements()
        .all(|a1| base.act(omega.at(phi.at(a)), a1) == base.a().act(a, a1))));
    Ok(found)
}

pub fn lifting_criterion(base: &GXMod, x: &Gwa, phi: &Hom, omega: &Hom) -> Result<bool> {
    Ok(lifting_criterion_witness(base, x, phi, omega)?.is_none())
}

/// `<1_A, ω>: (A, X, φ) -> (A, B, α)`.
pub fn lifting_to_base_morphism(l: &Lifting) -> Result<GXModMorphism> {
    let ker_phi = kernel(l.base.a().group(), l.x.group(), &l.phi);
    if !ker_phi.is_subset_of(&l.base.kernel()) {
        return Err(Error::Counterexample {
            what: "ker phi is not contained in ker alpha".into(),
            report: ValidationReport::new(),
        });
    }
    let m = GXModMorphism::new(Hom::identity(l.base.a().order()), l.omega.clone());
    ensure_constructed(
        "base morphism of lifting",
        validate_gxmod_morphism(&l.lifted(), &l.base, &m)?,
    )?;
    Ok(m)
}

/// `(A/N, p, ω)` with `ω(a + N) = α(a)`, for an ideal `N ⊆ ker α`.
pub fn quotient_lifting(x: &GXMod, n: &Subgroup) -> Result<Lifting> {
    if let Some(&k) = n.members().iter().find(|&&k| x.alpha().at(k) != 0) {
        return Err(Error::Precondition(format!(
            "N not contained in kernel: alpha({k}) ≠ 0"
        )));
    }
    let report = is_ideal(n, x.a())?;
    if let Some(why) = report.first_failure() {
        return Err(Error::Precondition(format!("N is not an ideal: {why}")));
    }
    let (q, p) = quotient_gwa(x.a(), n)?;
    let mut omega = vec![0; q.order()];
    for a in x.a().group().elements() {
        omega[p.at(a)] = x.alpha().at(a);
    }
    let l = Lifting {
        base: x.clone(),
        x: q,
        phi: p,
        omega: Hom::new(omega),
    };
    ensure_constructed("quotient lifting", validate_lifting(&l))?;
    debug_assert_eq!(
        kernel(l.base.a().group(), l.x.group(), &l.phi).members(),
        n.members()
    );
    Ok(l)
}

/// The quotient lifting by `ker α`.
pub fn natural_lifting(x: &GXMod) -> Result<Lifting> {
    quotient_lifting(x, &x.kernel())
}

/// `(α(A), α, incl)`.
pub fn image_lifting(x: &GXMod) -> Result<Lifting> {
    let im = x.image();
    let (k, incl) = x.b().restrict(&im, format!("im<{}", x.b().name()))?;
    let phi = Hom::new(
        x.alpha()
            .as_slice()
            .iter()
            .map(|&b| im.position(b).expect("in image"))
            .collect(),
    );
    let l = Lifting {
        base: x.clone(),
        x: k,
        phi,
        omega: incl,
    };
    ensure_constructed("image lifting", validate_lifting(&l))?;
    Ok(l)
}

/// Transports a lifting along isomorphisms `f: X -> X'` and `g: B -> B'`, giving the lifting
/// `(X', f φ, g ω f⁻¹)` of the codomain transport of the base along `g`.
pub fn lifting_transport(l: &Lifting, x2: &Gwa, f: &Hom, b2: &Gwa, g: &Hom) -> Result<Lifting> {
    let f_inv = require_gwa_iso(&l.x, x2, f, "f")?;
    let base = transport_codomain(&l.base, b2, g)?.xmod;
    let out = Lifting {
        base,
        x: x2.clone(),
        phi: f.after(&l.phi),
        omega: g.after(&l.omega).after(&f_inv),
    };
    ensure_constructed("transported lifting", validate_lifting(&out))?;
    Ok(out)
}

/// `inner` lifts `(A, X, φ)` of `outer`; the composite lifts the base over `ω ω'`.
pub fn compose_liftings(outer: &Lifting, inner: &Lifting) -> Result<Lifting> {
    if inner.base != outer.lifted() {
        return Err(Error::Mismatch(
            "inner lifting is not a lifting of the outer lifted module".into(),
        ));
    }
    let l = Lifting {
        base: outer.base.clone(),
        x: inner.x.clone(),
        phi: inner.phi.clone(),
        omega: outer.omega.after(&inner.omega),
    };
    ensure_constructed("composite lifting", validate_lifting(&l))?;
    Ok(l)
}

/// A morphism `f: X -> X'` of groups with action with `ω' f = ω` and `f φ = φ'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LiftingMorphism {
    pub f: Hom,
}

impl LiftingMorphism {
    pub fn new(f: Hom) -> Self {
        Self { f }
    }

    pub fn identity(l: &Lifting) -> Self {
        Self {
            f: Hom::identity(l.x.order()),
        }
    }

    pub fn after(&self, inner: &LiftingMorphism) -> Self {
        Self {
            f: self.f.after(&inner.f),
        }
    }
}

/// Witnesses are `[x]` for `ω' f = ω` and `[a]` for `f φ = φ'`.
pub fn validate_lifting_morphism(
    src: &Lifting,
    tgt: &Lifting,
    m: &LiftingMorphism,
) -> Result<ValidationReport> {
    if src.base != tgt.base {
        return Err(Error::Mismatch(
            "liftings of different crossed modules".into(),
        ));
    }
    let mut report = ValidationReport::new();
    report.absorb("f", validate_gwa_morphism(&src.x, &tgt.x, &m.f)?);
    for x in src.x.group().elements() {
        let (l, r) = (tgt.omega.at(m.f.at(x)), src.omega.at(x));
        if l != r {
            report.push(
                Rule::LiftingMorphismTriangle,
                vec![x],
                format!("omega'(f({x})) = {l} but omega({x}) = {r}"),
            );
        }
    }
    for a in src.base.a().group().elements() {
        let (l, r) = (m.f.at(src.phi.at(a)), tgt.phi.at(a));
        if l != r {
            report.push(
                Rule::LiftingMorphismPhi,
                vec![a],
                format!("f(phi({a})) = {l} but phi'({a}) = {r}"),
            );
        }
    }
    Ok(report)
}

/// Either a lifting, or no conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaybeLifting {
    Lifting(Box<Lifting>),
    Inconclusive,
}

/// For a morphism `f: X -> X'` of groups with action with `ω' f = ω`: when `ω'` is
/// injective, `(X, φ, f)` is a lifting of `(A, X', φ')`.
pub fn lifting_morphism_as_lifting(src: &Lifting, tgt: &Lifting, f: &Hom) -> Result<MaybeLifting> {
    let report = validate_lifting_morphism(src, tgt, &LiftingMorphism::new(f.clone()))?;
    if report
        .violations
        .iter()
        .any(|v| v.rule != Rule::LiftingMorphismPhi)
    {
        return Err(Error::Precondition(format!(
            "not a morphism over the base: {}",
            report.violations[0]
        )));
    }
    if !tgt.omega.is_injective() {
        return Ok(MaybeLifting::Inconclusive);
    }
    let l = Lifting {
        base: tgt.lifted(),
        x: src.x.clone(),
        phi: src.phi.clone(),
        omega: f.clone(),
    };
    ensure_constructed("lifting over a monomorphism", validate_lifting(&l))?;
    Ok(MaybeLifting::Lifting(Box::new(l)))
}

/// Extends `m = <f, g>: (Ã, B̃, α̃) -> (A, B, α)` to `<f, g̃>` into `(A, X, φ)` with
/// `ω g̃ = g`, for `α̃` onto.
///
/// This exists iff `f(ker α̃) ⊆ ker φ`; `g̃(α̃(a)) = φ(f(a))`. Otherwise the witness is an
/// element of `f(ker α̃) ∖ ker φ`.
pub fn extend_morphism_through_lifting(
    src: &GXMod,
    m: &GXModMorphism,
    l: &Lifting,
) -> Result<Outcome<GXModMorphism>> {
    if !is_simply_connected(src) {
        return Err(Error::Precondition("source is not simply connected".into()));
    }
    ensure_valid("morphism", validate_gxmod_morphism(src, &l.base, m)?)?;
    for &k in src.kernel().members() {
        let v = m.f.at(k);
        if l.phi.at(v) != 0 {
            return Ok(Outcome::WitnessFailure { element: v });
        }
    }
    let mut g1 = vec![usize::MAX; src.b().order()];
    for a in src.a().group().elements() {
        let (d, v) = (src.alpha().at(a), l.phi.at(m.f.at(a)));
        if g1[d] == usize::MAX {
            g1[d] = v;
        } else if g1[d] != v {
            return Err(Error::Counterexample {
                what: format!("extension is not well defined at {d}"),
                report: ValidationReport::new(),
            });
        }
    }
    let ext = GXModMorphism::new(m.f.clone(), Hom::new(g1));
    ensure_constructed(
        "extension through lifting",
        validate_gxmod_morphism(src, &l.lifted(), &ext)?,
    )?;
    debug_assert_eq!(l.omega.after(&ext.g), m.g);
    Ok(Outcome::Constructed(ext))
}

//! Generalized crossed modules: a homomorphism `alpha: A -> B` of groups with action
//! together with an action `b·a` of `B` on `A` such that
//!
//! * (i) `alpha(b·a) = ^b alpha(a)` and
//! * (ii) `alpha(a)·a1 = ^a a1`.
//!
//! Also their morphisms, the kernel and image sub-crossed-modules, and transport of
//! structure along isomorphisms of groups with action.

use std::fmt;

use serde::Serialize;

use crate::algebra::{
    check_gwa_shape, image, is_subobject, kernel, preserves_self_action, subobject_witness,
    validate_action, validate_gwa, validate_gwa_morphism, validate_hom, Action, ActionNotation,
    Gwa, Hom, Subgroup,
};
use crate::error::{ensure_constructed, ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};

/// The action `b·a` of `B` on `A`.
pub type ExtAction = Action;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GXMod {
    a: Gwa,
    b: Gwa,
    alpha: Hom,
    action: ExtAction,
}

impl GXMod {
    /// Assembles a crossed module, checking only that the tables fit together.
    pub fn from_parts(a: Gwa, b: Gwa, alpha: Hom, action: ExtAction) -> Result<Self> {
        check_gwa_shape(&a, &b, &alpha)?;
        if action.actor_order() != b.order() || action.space_order() != a.order() {
            return Err(Error::Structural(format!(
                "action table is {}x{}, expected {}x{}",
                action.actor_order(),
                action.space_order(),
                b.order(),
                a.order()
            )));
        }
        Ok(Self {
            a,
            b,
            alpha,
            action,
        })
    }

    /// Assembles and validates a crossed module.
    pub fn new(a: Gwa, b: Gwa, alpha: Hom, action: ExtAction) -> Result<Self> {
        let x = Self::from_parts(a, b, alpha, action)?;
        ensure_valid("generalized crossed module", validate_gxmod(&x))?;
        Ok(x)
    }

    /// `alpha` with every action trivial. Valid exactly when both self-actions are trivial.
    pub fn with_trivial_actions(a: Gwa, b: Gwa, alpha: Hom) -> Result<Self> {
        let action = Action::trivial(b.order(), a.order());
        Self::new(a, b, alpha, action)
    }

    pub fn a(&self) -> &Gwa {
        &self.a
    }

    pub fn b(&self) -> &Gwa {
        &self.b
    }

    pub fn alpha(&self) -> &Hom {
        &self.alpha
    }

    pub fn action(&self) -> &ExtAction {
        &self.action
    }

    /// `b·a`.
    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.action.act(b, a)
    }

    pub fn kernel(&self) -> Subgroup {
        kernel(self.a.group(), self.b.group(), &self.alpha)
    }

    pub fn image(&self) -> Subgroup {
        image(self.b.group(), &self.alpha)
    }

    pub(crate) fn rename_a(&mut self, name: &str) {
        self.a = self.a.clone().with_name(name);
    }
}

impl fmt::Display for GXMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a.name(), self.b.name(), self.alpha)
    }
}

/// Checks every component and then conditions (i) and (ii).
///
/// Witnesses are `[a, b]` for (i) and `[a, a1]` for (ii).
pub fn validate_gxmod(x: &GXMod) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.absorb("A", validate_gwa(&x.a));
    report.absorb("B", validate_gwa(&x.b));
    report.absorb(
        "alpha",
        validate_hom(x.a.group(), x.b.group(), &x.alpha).expect("shape checked at construction"),
    );
    report.absorb(
        "action",
        validate_action(
            x.b.group(),
            x.a.group(),
            &x.action,
            ActionNotation::External,
        )
        .expect("shape checked at construction"),
    );
    check_conditions(x, &mut report);
    report
}

pub(crate) fn check_conditions(x: &GXMod, report: &mut ValidationReport) {
    for a in x.a.group().elements() {
        for b in x.b.group().elements() {
            let left = x.alpha.at(x.act(b, a));
            let right = x.b.act(b, x.alpha.at(a));
            if left != right {
                report.push(
                    Rule::XModEquivariance,
                    vec![a, b],
                    format!("alpha({b}·{a}) = {left} but ^{b} alpha({a}) = {right}"),
                );
            }
        }
    }
    for a in x.a.group().elements() {
        for a1 in x.a.group().elements() {
            let left = x.act(x.alpha.at(a), a1);
            let right = x.a.act(a, a1);
            if left != right {
                report.push(
                    Rule::XModSelfActionMatch,
                    vec![a, a1],
                    format!("alpha({a})·{a1} = {left} but ^{a} {a1} = {right}"),
                );
            }
        }
    }
}

/// Conditions (i) and (ii) only, assuming the components are valid.
pub(crate) fn satisfies_conditions(x: &GXMod) -> bool {
    let (a, b) = (x.a.group(), x.b.group());
    a.elements().all(|p| {
        b.elements()
            .all(|q| x.alpha.at(x.act(q, p)) == x.b.act(q, x.alpha.at(p)))
    }) && a.elements().all(|p| {
        a.elements()
            .all(|p1| x.act(x.alpha.at(p), p1) == x.a.act(p, p1))
    })
}

/// A pair of maps `<f, g>: (A, B, alpha) -> (A', B', alpha')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GXModMorphism {
    pub f: Hom,
    pub g: Hom,
}

impl GXModMorphism {
    pub fn new(f: Hom, g: Hom) -> Self {
        Self { f, g }
    }

    pub fn identity(x: &GXMod) -> Self {
        Self {
            f: Hom::identity(x.a.order()),
            g: Hom::identity(x.b.order()),
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &GXModMorphism) -> Self {
        Self {
            f: self.f.after(&inner.f),
            g: self.g.after(&inner.g),
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.f.inverse().is_some() && self.g.inverse().is_some()
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(Self {
            f: self.f.inverse()?,
            g: self.g.inverse()?,
        })
    }
}

/// Checks that `f` and `g` are morphisms of groups with action, `g alpha = alpha' f`,
/// and `f(b·a) = g(b)·f(a)`.
///
/// Witnesses are `[a]` for the square and `[b, a]` for equivariance.
pub fn validate_gxmod_morphism(
    src: &GXMod,
    tgt: &GXMod,
    m: &GXModMorphism,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    report.absorb("f", validate_gwa_morphism(&src.a, &tgt.a, &m.f)?);
    report.absorb("g", validate_gwa_morphism(&src.b, &tgt.b, &m.g)?);
    for a in src.a.group().elements() {
        let left = m.g.at(src.alpha.at(a));
        let right = tgt.alpha.at(m.f.at(a));
        if left != right {
            report.push(
                Rule::MorphismSquare,
                vec![a],
                format!("g(alpha({a})) = {left} but alpha'(f({a})) = {right}"),
            );
        }
    }
    for b in src.b.group().elements() {
        for a in src.a.group().elements() {
            let left = m.f.at(src.act(b, a));
            let right = tgt.act(m.g.at(b), m.f.at(a));
            if left != right {
                report.push(
                    Rule::MorphismEquivariance,
                    vec![b, a],
                    format!("f({b}·{a}) = {left} but g({b})·f({a}) = {right}"),
                );
            }
        }
    }
    Ok(report)
}

/// Fast yes/no form of [`validate_gxmod_morphism`] for search loops. `f` and `g` must
/// already be homomorphisms of the right shape.
pub(crate) fn is_gxmod_morphism(src: &GXMod, tgt: &GXMod, m: &GXModMorphism) -> bool {
    let (ga, gb) = (src.a.group(), src.b.group());
    ga.elements()
        .all(|a| m.g.at(src.alpha.at(a)) == tgt.alpha.at(m.f.at(a)))
        && gb.elements().all(|b| {
            ga.elements()
                .all(|a| m.f.at(src.act(b, a)) == tgt.act(m.g.at(b), m.f.at(a)))
        })
        && preserves_self_action(&src.a, &tgt.a, &m.f)
        && preserves_self_action(&src.b, &tgt.b, &m.g)
}

/// `alpha(^a a1) = ^alpha(a) alpha(a1)`: for a valid crossed module `alpha` is a morphism
/// of groups with action.
pub fn check_alpha_gwa_morphism(x: &GXMod) -> bool {
    preserves_self_action(&x.a, &x.b, &x.alpha)
}

/// `ker alpha = 0`.
pub fn is_aspherical(x: &GXMod) -> bool {
    x.alpha.is_injective()
}

/// `alpha` is onto.
pub fn is_simply_connected(x: &GXMod) -> bool {
    x.alpha.is_surjective(x.b.order())
}

/// `^k a = a` for every `k ∈ ker alpha`, `a ∈ A`.
pub fn check_kernel_acts_trivially(x: &GXMod) -> bool {
    let ker = x.kernel();
    ker.members()
        .iter()
        .all(|&k| x.a.group().elements().all(|a| x.a.act(k, a) == a))
}

/// `(H, G, i)` for a subgroup `H` invariant under the self-action of `G`, with `G`
/// acting on `H` by the restricted self-action. `H` is renumbered `0..|H|` in increasing
/// order of its members.
pub fn from_invariant_subgroup(g: &Gwa, h: &Subgroup) -> Result<GXMod> {
    if let Some((x, n)) = subobject_witness(h, g) {
        return Err(Error::Precondition(format!(
            "subgroup is not invariant: ^{x} {n} = {} lies outside it",
            g.act(x, n)
        )));
    }
    let name = format!("{}<{}", h.len(), g.name());
    let (sub, incl) = g.restrict(h, name)?;
    let m = h.len();
    let table = (0..g.order() * m)
        .map(|i| {
            h.position(g.act(i / m, h.members()[i % m]))
                .expect("invariant")
        })
        .collect();
    let x = GXMod::from_parts(sub, g.clone(), incl, Action::from_flat(g.order(), m, table))?;
    ensure_constructed("subgroup crossed module", validate_gxmod(&x))?;
    Ok(x)
}

/// `(ker alpha, A, i)`.
pub fn kernel_gxmod(x: &GXMod) -> Result<GXMod> {
    let ker = x.kernel();
    debug_assert!(is_subobject(&ker, &x.a));
    from_invariant_subgroup(&x.a, &ker)
}

/// `(alpha(A), B, i)`.
pub fn image_gxmod(x: &GXMod) -> Result<GXMod> {
    from_invariant_subgroup(&x.b, &x.image())
}

/// A transported crossed module with the isomorphism relating it to the original.
#[derive(Clone, Debug)]
pub struct Transported {
    pub xmod: GXMod,
    /// For codomain transport: `<1_A, f>: original -> xmod`.
    /// For domain transport: `<g, 1_B>: xmod -> original`.
    pub witness: GXModMorphism,
}

pub(crate) fn require_gwa_iso(src: &Gwa, tgt: &Gwa, f: &Hom, what: &str) -> Result<Hom> {
    let report = validate_gwa_morphism(src, tgt, f)?;
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "{what} is not a morphism of groups with action: {}",
            report.violations[0]
        )));
    }
    if !f.is_bijective(tgt.order()) {
        return Err(Error::Precondition(format!("{what} is not bijective")));
    }
    Ok(f.inverse().expect("bijective"))
}

/// `(A, B', f alpha)` with `b'·a = f⁻¹(b')·a`, for an isomorphism `f: B -> B'`.
pub fn transport_codomain(x: &GXMod, target: &Gwa, f: &Hom) -> Result<Transported> {
    let f_inv = require_gwa_iso(&x.b, target, f, "f")?;
    let action = x.action.pull_back_actor(&f_inv);
    let xmod = GXMod::from_parts(x.a.clone(), target.clone(), f.after(&x.alpha), action)?;
    ensure_constructed("codomain transport", validate_gxmod(&xmod))?;
    let witness = GXModMorphism::new(Hom::identity(x.a.order()), f.clone());
    Ok(Transported { xmod, witness })
}

/// `(A', B, alpha g)` with `b·a' = g⁻¹(b·g(a'))`, for an isomorphism `g: A' -> A`.
pub fn transport_domain(x: &GXMod, source: &Gwa, g: &Hom) -> Result<Transported> {
    let g_inv = require_gwa_iso(source, &x.a, g, "g")?;
    let n = source.order();
    let table = (0..x.b.order() * n)
        .map(|i| g_inv.at(x.act(i / n, g.at(i % n))))
        .collect();
    let action = Action::from_flat(x.b.order(), n, table);
    let xmod = GXMod::from_parts(source.clone(), x.b.clone(), x.alpha.after(g), action)?;
    ensure_constructed("domain transport", validate_gxmod(&xmod))?;
    let witness = GXModMorphism::new(g.clone(), Hom::identity(x.b.order()));
    Ok(Transported { xmod, witness })
}

/// The four mutually isomorphic crossed modules obtained from isomorphisms
/// `f: B -> B'` and `g: A' -> A`.
#[derive(Clone, Debug)]
pub struct TransportSquare {
    /// `(A, B', f alpha)`
    pub codomain: GXMod,
    /// `(A', B, alpha g)`
    pub domain: GXMod,
    /// `(A', B', f alpha g)` with `b'·a' = g⁻¹(f⁻¹(b')·g(a'))`
    pub both: GXMod,
    /// `<1_A, f>: original -> codomain`
    pub original_to_codomain: GXModMorphism,
    /// `<g, 1_B>: domain -> original`
    pub domain_to_original: GXModMorphism,
    /// `<1_A', f>: domain -> both`
    pub domain_to_both: GXModMorphism,
    /// `<g, 1_B'>: both -> codomain`
    pub both_to_codomain: GXModMorphism,
}

pub fn transport_both(
    x: &GXMod,
    target: &Gwa,
    f: &Hom,
    source: &Gwa,
    g: &Hom,
) -> Result<TransportSquare> {
    let f_inv = require_gwa_iso(&x.b, target, f, "f")?;
    let g_inv = require_gwa_iso(source, &x.a, g, "g")?;
    let n = source.order();
    let table = (0..target.order() * n)
        .map(|i| g_inv.at(x.act(f_inv.at(i / n), g.at(i % n))))
        .collect();
    let both = GXMod::from_parts(
        source.clone(),
        target.clone(),
        f.after(&x.alpha).after(g),
        Action::from_flat(target.order(), n, table),
    )?;
    ensure_constructed("transport along both isomorphisms", validate_gxmod(&both))?;
    let codomain = transport_codomain(x, target, f)?;
    let domain = transport_domain(x, source, g)?;
    Ok(TransportSquare {
        original_to_codomain: codomain.witness,
        domain_to_original: domain.witness,
        domain_to_both: GXModMorphism::new(Hom::identity(n), f.clone()),
        both_to_codomain: GXModMorphism::new(g.clone(), Hom::identity(target.order())),
        codomain: codomain.xmod,
        domain: domain.xmod,
        both,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_are_valid() {
        for x in [
            fixtures::gx1(),
            fixtures::gx3(),
            fixtures::a3_s3(),
            fixtures::z4_z2_trivial(),
        ] {
            assert!(validate_gxmod(&x).is_valid(), "{x}");
            assert!(check_alpha_gwa_morphism(&x));
            assert!(check_kernel_acts_trivially(&x));
        }
    }

    #[test]
    fn asphericity() {
        let a3 = fixtures::a3_s3();
        assert!(is_aspherical(&a3) && !is_simply_connected(&a3));
        let gx3 = fixtures::gx3();
        assert!(!is_aspherical(&gx3) && is_simply_connected(&gx3));
        assert_eq!(gx3.kernel().members(), &[0, 2]);
        let gx1 = fixtures::gx1();
        assert!(is_aspherical(&gx1) && is_simply_connected(&gx1));
    }

    #[test]
    fn kernel_and_image_sub_xmods() {
        let k = kernel_gxmod(&fixtures::gx3()).unwrap();
        assert_eq!(k.a().order(), 2);
        assert_eq!(k.b(), fixtures::gx3().a());
        assert!(is_aspherical(&k));
        assert_eq!(k.alpha().as_slice(), &[0, 2]);

        let im = image_gxmod(&fixtures::gx3()).unwrap();
        assert_eq!(im.a(), &fixtures::z2_trivial());
        assert!(im.alpha().is_identity());
        assert!(im.action().is_trivial());

        let a3 = fixtures::a3_s3();
        assert_eq!(image_gxmod(&a3).unwrap(), a3);

        let ker = kernel_gxmod(&fixtures::gx1()).unwrap();
        assert_eq!(ker.a().order(), 1);

        // zero map Z2 -> Z2, all trivial: the kernel is everything
        let zero = GXMod::with_trivial_actions(
            fixtures::z2_trivial(),
            fixtures::z2_trivial(),
            Hom::new(vec![0, 0]),
        )
        .unwrap();
        let ker = kernel_gxmod(&zero).unwrap();
        assert_eq!(ker.a(), &fixtures::z2_trivial());
        assert!(ker.alpha().is_identity());
        let im = image_gxmod(&zero).unwrap();
        assert_eq!(im.a().order(), 1);
    }

    #[test]
    fn invariant_subgroup_precondition() {
        let s3 = fixtures::s3_conjugation();
        let h = Subgroup::new(s3.group(), [0, 1]).unwrap();
        let err = from_invariant_subgroup(&s3, &h).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let e = from_invariant_subgroup(&s3, &Subgroup::trivial(s3.group())).unwrap();
        assert_eq!(e.a().order(), 1);
        let z4 = fixtures::z4_inversion();
        let half =
            from_invariant_subgroup(&z4, &Subgroup::new(z4.group(), [0, 2]).unwrap()).unwrap();
        assert!(is_aspherical(&half));
    }

    #[test]
    fn identity_transport_is_identity() {
        let gx3 = fixtures::gx3();
        let t = transport_codomain(&gx3, gx3.b(), &Hom::identity(2)).unwrap();
        assert_eq!(t.xmod, gx3);
        let t = transport_domain(&gx3, gx3.a(), &Hom::identity(4)).unwrap();
        assert_eq!(t.xmod, gx3);
    }

    #[test]
    fn transport_rejects_non_isomorphisms() {
        let gx3 = fixtures::gx3();
        let err = transport_domain(&gx3, gx3.a(), &Hom::new(vec![0, 2, 0, 2])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn morphism_identity_and_mod2() {
        let gx3 = fixtures::gx3();
        let id = GXModMorphism::identity(&gx3);
        assert!(validate_gxmod_morphism(&gx3, &gx3, &id).unwrap().is_valid());
        let m = GXModMorphism::new(Hom::new(vec![0, 1, 0, 1]), Hom::identity(2));
        assert!(validate_gxmod_morphism(&gx3, &fixtures::gx1(), &m)
            .unwrap()
            .is_valid());
    }
}

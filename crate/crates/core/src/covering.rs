//! Coverings: morphisms `<f, g>: (Ã, B̃, α̃) -> (A, B, α)` of generalized crossed
//! modules whose first component `f` is bijective.

use serde::Serialize;

use crate::algebra::{Gwa, Hom};
use crate::error::{ensure_constructed, Error, Result};
use crate::report::{Rule, ValidationReport};
use crate::xmod::{
    is_simply_connected, require_gwa_iso, transport_codomain, validate_gxmod,
    validate_gxmod_morphism, GXMod, GXModMorphism,
};

/// Result of a construction that exists exactly when a criterion holds.
///
/// When it does not, `WitnessFailure` carries an element showing why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome<T> {
    Constructed(T),
    WitnessFailure { element: usize },
}

impl<T> Outcome<T> {
    pub fn constructed(self) -> Option<T> {
        match self {
            Outcome::Constructed(t) => Some(t),
            Outcome::WitnessFailure { .. } => None,
        }
    }

    pub fn is_constructed(&self) -> bool {
        matches!(self, Outcome::Constructed(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    total: GXMod,
    base: GXMod,
    f: Hom,
    g: Hom,
}

impl Covering {
    /// Checks only that the maps have the right shape.
    pub fn from_parts(total: GXMod, base: GXMod, f: Hom, g: Hom) -> Result<Self> {
        crate::algebra::check_gwa_shape(total.a(), base.a(), &f)?;
        crate::algebra::check_gwa_shape(total.b(), base.b(), &g)?;
        Ok(Self { total, base, f, g })
    }

    pub fn new(total: GXMod, base: GXMod, f: Hom, g: Hom) -> Result<Self> {
        let c = Self::from_parts(total, base, f, g)?;
        crate::error::ensure_valid("covering", validate_covering(&c))?;
        Ok(c)
    }

    /// `<1_A, 1_B>`.
    pub fn identity(base: &GXMod) -> Self {
        let m = GXModMorphism::identity(base);
        Self {
            total: base.clone(),
            base: base.clone(),
            f: m.f,
            g: m.g,
        }
    }

    pub fn total(&self) -> &GXMod {
        &self.total
    }

    pub fn base(&self) -> &GXMod {
        &self.base
    }

    pub fn f(&self) -> &Hom {
        &self.f
    }

    pub fn g(&self) -> &Hom {
        &self.g
    }

    pub fn morphism(&self) -> GXModMorphism {
        GXModMorphism::new(self.f.clone(), self.g.clone())
    }
}

/// Validates both crossed modules, the morphism, and bijectivity of `f`.
///
/// A non-injective `f` is witnessed by a colliding pair `[a1, a2]`; a non-surjective one
/// by the missed element `[a]`.
pub fn validate_covering(c: &Covering) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.absorb("total", validate_gxmod(&c.total));
    report.absorb("base", validate_gxmod(&c.base));
    report.absorb(
        "",
        validate_gxmod_morphism(&c.total, &c.base, &c.morphism()).expect("shape checked"),
    );
    let n = c.base.a().order();
    let mut seen = vec![None; n];
    for a in 0..c.f.len() {
        let v = c.f.at(a);
        if let Some(prev) = seen[v] {
            report.push(
                Rule::CoveringBijective,
                vec![prev, a],
                format!("f({prev}) = f({a}) = {v}"),
            );
        } else {
            seen[v] = Some(a);
        }
    }
    if c.f.len() == n {
        if let Some(a) = seen.iter().position(Option::is_none) {
            report.push(
                Rule::CoveringBijective,
                vec![a],
                format!("{a} is not in the image of f"),
            );
        }
    } else {
        report.push(
            Rule::CoveringBijective,
            vec![],
            format!("|Ã| = {} but |A| = {n}", c.f.len()),
        );
    }
    report
}

/// An element of `ker α̃` that `f` sends outside `ker α`. Never exists for a valid covering.
pub fn covering_kernel_witness(c: &Covering) -> Option<usize> {
    c.total
        .kernel()
        .members()
        .iter()
        .copied()
        .find(|&k| c.base.alpha().at(c.f.at(k)) != 0)
}

/// `f(ker α̃) ⊆ ker α`.
pub fn covering_kernel_check(c: &Covering) -> bool {
    covering_kernel_witness(c).is_none()
}

/// `<f f̃, g g̃>` where `inner` covers the total object of `outer`.
pub fn compose_coverings(outer: &Covering, inner: &Covering) -> Result<Covering> {
    if inner.base != outer.total {
        return Err(Error::Mismatch(
            "inner covering's base is not the outer covering's total object".into(),
        ));
    }
    let c = Covering {
        total: inner.total.clone(),
        base: outer.base.clone(),
        f: outer.f.after(&inner.f),
        g: outer.g.after(&inner.g),
    };
    ensure_constructed("composite covering", validate_covering(&c))?;
    Ok(c)
}

/// Transports a covering along isomorphisms `h: B̃ -> C̃` and `k: B -> C`, giving the
/// covering `<f, k g h⁻¹>: (Ã, C̃, h α̃) -> (A, C, k α)`.
pub fn covering_transport(
    c: &Covering,
    c_tilde: &Gwa,
    h: &Hom,
    c_base: &Gwa,
    k: &Hom,
) -> Result<Covering> {
    let h_inv = require_gwa_iso(c.total.b(), c_tilde, h, "h")?;
    let total = transport_codomain(&c.total, c_tilde, h)?.xmod;
    let base = transport_codomain(&c.base, c_base, k)?.xmod;
    let out = Covering {
        total,
        base,
        f: c.f.clone(),
        g: k.after(&c.g).after(&h_inv),
    };
    ensure_constructed("transported covering", validate_covering(&out))?;
    Ok(out)
}

/// A morphism `<f, g>` between two coverings of the same base, commuting with both
/// covering maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoveringMorphism {
    pub f: Hom,
    pub g: Hom,
}

impl CoveringMorphism {
    pub fn new(f: Hom, g: Hom) -> Self {
        Self { f, g }
    }

    pub fn identity(c: &Covering) -> Self {
        Self {
            f: Hom::identity(c.total.a().order()),
            g: Hom::identity(c.total.b().order()),
        }
    }

    pub fn after(&self, inner: &CoveringMorphism) -> Self {
        Self {
            f: self.f.after(&inner.f),
            g: self.g.after(&inner.g),
        }
    }

    pub fn as_gxmod_morphism(&self) -> GXModMorphism {
        GXModMorphism::new(self.f.clone(), self.g.clone())
    }
}

/// Witnesses for the triangle are `[a]` (first component) or `[b]` (second component).
pub fn validate_covering_morphism(
    src: &Covering,
    tgt: &Covering,
    m: &CoveringMorphism,
) -> Result<ValidationReport> {
    if src.base != tgt.base {
        return Err(Error::Mismatch(
            "coverings of different crossed modules".into(),
        ));
    }
    let mut report = validate_gxmod_morphism(&src.total, &tgt.total, &m.as_gxmod_morphism())?;
    for a in 0..m.f.len() {
        let (l, r) = (tgt.f.at(m.f.at(a)), src.f.at(a));
        if l != r {
            report.push(
                Rule::CoveringMorphismTriangle,
                vec![a],
                format!("f'(f({a})) = {l} but f̃({a}) = {r}"),
            );
        }
    }
    for b in 0..m.g.len() {
        let (l, r) = (tgt.g.at(m.g.at(b)), src.g.at(b));
        if l != r {
            report.push(
                Rule::CoveringMorphismTriangle,
                vec![b],
                format!("g'(g({b})) = {l} but g̃({b}) = {r}"),
            );
        }
    }
    Ok(report)
}

/// A morphism of coverings is itself a covering of the target's total object.
pub fn morphism_between_coverings(
    src: &Covering,
    tgt: &Covering,
    m: &CoveringMorphism,
) -> Result<Covering> {
    crate::error::ensure_valid(
        "covering morphism",
        validate_covering_morphism(src, tgt, m)?,
    )?;
    let c = Covering {
        total: src.total.clone(),
        base: tgt.total.clone(),
        f: m.f.clone(),
        g: m.g.clone(),
    };
    ensure_constructed("morphism of coverings as a covering", validate_covering(&c))?;
    Ok(c)
}

/// Lifts `m = <f, g>: (C, D, γ) -> (A, B, α)` through the covering `c`, for `γ` onto.
///
/// The lift exists iff `f(ker γ) ⊆ f̃(ker α̃)`; it is `<f̃⁻¹ f, g'>` with
/// `g'(γ(x)) = α̃(f̃⁻¹ f(x))`. Otherwise the witness is an element of
/// `f(ker γ) ∖ f̃(ker α̃)`.
pub fn factor_through_covering(
    src: &GXMod,
    m: &GXModMorphism,
    c: &Covering,
) -> Result<Outcome<GXModMorphism>> {
    if !is_simply_connected(src) {
        return Err(Error::Precondition("source is not simply connected".into()));
    }
    crate::error::ensure_valid("morphism", validate_gxmod_morphism(src, &c.base, m)?)?;
    let covered: Vec<usize> = c
        .total
        .kernel()
        .members()
        .iter()
        .map(|&k| c.f.at(k))
        .collect();
    for &k in src.kernel().members() {
        let v = m.f.at(k);
        if !covered.contains(&v) {
            return Ok(Outcome::WitnessFailure { element: v });
        }
    }
    let f_inv =
        c.f.inverse()
            .ok_or_else(|| Error::Precondition("covering map is not bijective".into()))?;
    let f1 = f_inv.after(&m.f);
    let mut g1 = vec![usize::MAX; src.b().order()];
    for x in src.a().group().elements() {
        let d = src.alpha().at(x);
        let v = c.total.alpha().at(f1.at(x));
        if g1[d] == usize::MAX {
            g1[d] = v;
        } else if g1[d] != v {
            return Err(Error::Counterexample {
                what: format!("lift is not well defined at {d}"),
                report: ValidationReport::new(),
            });
        }
    }
    let lift = GXModMorphism::new(f1, Hom::new(g1));
    ensure_constructed(
        "lift through covering",
        validate_gxmod_morphism(src, &c.total, &lift)?,
    )?;
    debug_assert_eq!(&c.morphism().after(&lift), m);
    Ok(Outcome::Constructed(lift))
}

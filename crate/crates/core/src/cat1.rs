//! Generalized cat¹-groups `(G, s, t)`: endomorphisms of a group with action with
//! `st = t`, `ts = s`, and `^y x = x` whenever `s(x) = e` and `t(y) = e`.

use serde::Serialize;

use crate::algebra::{
    check_gwa_shape, image, kernel, validate_gwa, validate_gwa_morphism, Action, Gwa, Hom, Subgroup,
};
use crate::error::{ensure_constructed, ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};
use crate::xmod::{validate_gxmod, GXMod, GXModMorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCat1 {
    g: Gwa,
    s: Hom,
    t: Hom,
}

impl GCat1 {
    pub fn from_parts(g: Gwa, s: Hom, t: Hom) -> Result<Self> {
        check_gwa_shape(&g, &g, &s)?;
        check_gwa_shape(&g, &g, &t)?;
        Ok(Self { g, s, t })
    }

    pub fn new(g: Gwa, s: Hom, t: Hom) -> Result<Self> {
        let c = Self::from_parts(g, s, t)?;
        ensure_valid("generalized cat1-group", validate_gcat1(&c))?;
        Ok(c)
    }

    pub fn g(&self) -> &Gwa {
        &self.g
    }

    pub fn s(&self) -> &Hom {
        &self.s
    }

    pub fn t(&self) -> &Hom {
        &self.t
    }

    pub fn kernel_s(&self) -> Subgroup {
        kernel(self.g.group(), self.g.group(), &self.s)
    }

    pub fn kernel_t(&self) -> Subgroup {
        kernel(self.g.group(), self.g.group(), &self.t)
    }

    pub fn image_s(&self) -> Subgroup {
        image(self.g.group(), &self.s)
    }
}

/// Checks the components, then `st = t` (witness `[g]`), `ts = s` (witness `[g]`), and
/// `^y x = x` for `x ∈ ker s`, `y ∈ ker t` (witness `[x, y]`).
pub fn validate_gcat1(c: &GCat1) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.absorb("G", validate_gwa(&c.g));
    report.absorb(
        "s",
        validate_gwa_morphism(&c.g, &c.g, &c.s).expect("shape checked"),
    );
    report.absorb(
        "t",
        validate_gwa_morphism(&c.g, &c.g, &c.t).expect("shape checked"),
    );
    for g in c.g.group().elements() {
        let st = c.s.at(c.t.at(g));
        if st != c.t.at(g) {
            report.push(
                Rule::Cat1SourceTarget,
                vec![g],
                format!("s(t({g})) = {st} but t({g}) = {}", c.t.at(g)),
            );
        }
    }
    for g in c.g.group().elements() {
        let ts = c.t.at(c.s.at(g));
        if ts != c.s.at(g) {
            report.push(
                Rule::Cat1TargetSource,
                vec![g],
                format!("t(s({g})) = {ts} but s({g}) = {}", c.s.at(g)),
            );
        }
    }
    let (ks, kt) = (c.kernel_s(), c.kernel_t());
    for &x in ks.members() {
        for &y in kt.members() {
            let v = c.g.act(y, x);
            if v != x {
                report.push(
                    Rule::Cat1KernelsAct,
                    vec![x, y],
                    format!("^{y} {x} = {v}, expected {x}"),
                );
            }
        }
    }
    report
}

/// Whether the self-action is conjugation, i.e. `c` is an ordinary cat¹-group. In that
/// case the kernel condition says exactly that `ker s` and `ker t` commute elementwise.
pub fn check_ordinary_cat1(c: &GCat1) -> bool {
    let ordinary = c.g.is_conjugation();
    if ordinary {
        let grp = c.g.group();
        let commute = c.kernel_s().members().iter().all(|&x| {
            c.kernel_t()
                .members()
                .iter()
                .all(|&y| grp.op(x, y) == grp.op(y, x))
        });
        let kernel_condition = !validate_gcat1(c).has(Rule::Cat1KernelsAct);
        assert_eq!(
            commute, kernel_condition,
            "conjugation kernel condition is commutation"
        );
    }
    ordinary
}

/// A map `f: G -> G'` with `fs = s'f` and `ft = t'f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GCat1Morphism {
    pub f: Hom,
}

impl GCat1Morphism {
    pub fn new(f: Hom) -> Self {
        Self { f }
    }

    pub fn identity(c: &GCat1) -> Self {
        Self {
            f: Hom::identity(c.g.order()),
        }
    }

    pub fn after(&self, inner: &GCat1Morphism) -> Self {
        Self {
            f: self.f.after(&inner.f),
        }
    }
}

/// Witnesses are `[g]` for both commuting squares.
pub fn validate_gcat1_morphism(
    src: &GCat1,
    tgt: &GCat1,
    m: &GCat1Morphism,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    report.absorb("f", validate_gwa_morphism(&src.g, &tgt.g, &m.f)?);
    for g in src.g.group().elements() {
        let (l, r) = (m.f.at(src.s.at(g)), tgt.s.at(m.f.at(g)));
        if l != r {
            report.push(
                Rule::Cat1MorphismSource,
                vec![g],
                format!("f(s({g})) = {l} but s'(f({g})) = {r}"),
            );
        }
    }
    for g in src.g.group().elements() {
        let (l, r) = (m.f.at(src.t.at(g)), tgt.t.at(m.f.at(g)));
        if l != r {
            report.push(
                Rule::Cat1MorphismTarget,
                vec![g],
                format!("f(t({g})) = {l} but t'(f({g})) = {r}"),
            );
        }
    }
    Ok(report)
}

/// `(ker s, im s, t|ker s)` with `im s` acting on `ker s` through the self-action of `G`.
///
/// Both subgroups are renumbered `0..k` in increasing order of their members.
pub fn cat1_to_gxmod(c: &GCat1) -> Result<GXMod> {
    Ok(cat1_parts(c)?.0)
}

fn cat1_parts(c: &GCat1) -> Result<(GXMod, Subgroup, Subgroup)> {
    let (ks, is) = (c.kernel_s(), c.image_s());
    let name = c.g.name();
    let (kg, _) = c.g.restrict(&ks, format!("ker s<{name}"))?;
    let (ig, _) = c.g.restrict(&is, format!("im s<{name}"))?;
    let mut t_bar = Vec::with_capacity(ks.len());
    for &k in ks.members() {
        let v = c.t.at(k);
        let Some(p) = is.position(v) else {
            return Err(Error::Precondition(format!(
                "t({k}) = {v} lies outside im s"
            )));
        };
        t_bar.push(p);
    }
    let m = ks.len();
    let mut table = Vec::with_capacity(is.len() * m);
    for &x in is.members() {
        for &g in ks.members() {
            let v = c.g.act(x, g);
            let Some(p) = ks.position(v) else {
                return Err(Error::Precondition(format!(
                    "^{x} {g} = {v} lies outside ker s"
                )));
            };
            table.push(p);
        }
    }
    let x = GXMod::from_parts(
        kg,
        ig,
        Hom::new(t_bar),
        Action::from_flat(is.len(), m, table),
    )?;
    ensure_constructed("cat1 crossed module", validate_gxmod(&x))?;
    Ok((x, ks, is))
}

/// `<f|ker s, f|im s>` between the associated crossed modules.
pub fn cat1_functor_on_morphism(
    src: &GCat1,
    tgt: &GCat1,
    m: &GCat1Morphism,
) -> Result<GXModMorphism> {
    let report = validate_gcat1_morphism(src, tgt, m)?;
    ensure_valid("cat1 morphism", report)?;
    let (_, ks, is) = cat1_parts(src)?;
    let (_, ks2, is2) = cat1_parts(tgt)?;
    let restrict = |from: &Subgroup, to: &Subgroup| {
        Hom::new(
            from.members()
                .iter()
                .map(|&x| to.position(m.f.at(x)).expect("f commutes with s"))
                .collect(),
        )
    };
    Ok(GXModMorphism::new(restrict(&ks, &ks2), restrict(&is, &is2)))
}

/// Cheap form of the conditions, skipping component validation. `s`, `t` must be
/// endomorphisms preserving the self-action.
pub(crate) fn satisfies_cat1(g: &Gwa, s: &Hom, t: &Hom) -> bool {
    let grp = g.group();
    if !grp
        .elements()
        .all(|x| s.at(t.at(x)) == t.at(x) && t.at(s.at(x)) == s.at(x))
    {
        return false;
    }
    let ks: Vec<usize> = grp.elements().filter(|&x| s.at(x) == 0).collect();
    let kt: Vec<usize> = grp.elements().filter(|&y| t.at(y) == 0).collect();
    ks.iter().all(|&x| kt.iter().all(|&y| g.act(y, x) == x))
}

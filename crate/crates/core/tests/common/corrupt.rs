//! Single-entry corruptions of the shipped fixtures, judged on raw tables.
//!
//! Every violation a validator keeps is re-evaluated here: the law it names must really
//! fail at the witness it reports. A corruption the validator accepts must be valid by
//! the raw definitions.

use gxmod::algebra::{Action, GroupTable, Gwa, Hom};
use gxmod::cat1::{validate_gcat1, GCat1};
use gxmod::covering::{validate_covering, Covering};
use gxmod::fixtures::{self, Fixture};
use gxmod::lifting::{image_lifting, natural_lifting, validate_lifting, Lifting};
use gxmod::xmod::{validate_gxmod, GXMod};
use gxmod::{Rule, ValidationReport, Violation};

use super::{is_action, is_gxmod, is_hom, preserves, Table};

#[derive(Clone)]
struct G {
    op: Table,
    act: Table,
}

impl G {
    fn of(g: &Gwa) -> Self {
        Self {
            op: g.group().rows(),
            act: g.action().rows(),
        }
    }

    fn e(&self) -> usize {
        identity(&self.op)
    }
}

#[derive(Clone)]
struct X {
    a: G,
    b: G,
    alpha: Vec<usize>,
    action: Table,
}

impl X {
    fn of(x: &GXMod) -> Self {
        Self {
            a: G::of(x.a()),
            b: G::of(x.b()),
            alpha: x.alpha().as_slice().to_vec(),
            action: x.action().rows(),
        }
    }
}

/// The first two-sided identity, or 0.
fn identity(op: &Table) -> usize {
    let n = op.len();
    (0..n)
        .find(|&e| (0..n).all(|g| op[e][g] == g && op[g][e] == g))
        .unwrap_or(0)
}

fn group_ok(op: &Table) -> bool {
    let n = op.len();
    let e = identity(op);
    (0..n).all(|g| op[e][g] == g && op[g][e] == g)
        && (0..n).all(|g| (0..n).any(|h| op[g][h] == e && op[h][g] == e))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op[op[a][b]][c] == op[a][op[b][c]])))
}

fn gwa_ok(g: &G) -> bool {
    group_ok(&g.op) && is_action(&g.op, &g.op, &g.act)
}

fn xmod_ok(x: &X) -> bool {
    gwa_ok(&x.a)
        && gwa_ok(&x.b)
        && is_hom(&x.a.op, &x.b.op, &x.alpha)
        && is_action(&x.b.op, &x.a.op, &x.action)
        && is_gxmod(&x.a.act, &x.b.act, &x.alpha, &x.action)
}

fn gwa_morphism_ok(src: &G, tgt: &G, f: &[usize]) -> bool {
    is_hom(&src.op, &tgt.op, f) && preserves(&src.act, &tgt.act, f)
}

fn morphism_ok(src: &X, tgt: &X, f: &[usize], g: &[usize]) -> bool {
    let (na, nb) = (src.a.op.len(), src.b.op.len());
    gwa_morphism_ok(&src.a, &tgt.a, f)
        && gwa_morphism_ok(&src.b, &tgt.b, g)
        && (0..na).all(|a| g[src.alpha[a]] == tgt.alpha[f[a]])
        && (0..nb).all(|b| (0..na).all(|a| f[src.action[b][a]] == tgt.action[g[b]][f[a]]))
}

fn group_fails(op: &Table, rule: Rule, w: &[usize]) -> bool {
    let e = identity(op);
    match (rule, w) {
        (Rule::GroupIdentity, &[g]) => op[e][g] != g || op[g][e] != g,
        (Rule::GroupInverse, &[g]) => {
            let h = (0..op.len()).find(|&h| op[g][h] == e).unwrap_or(e);
            op[g][h] != e || op[h][g] != e
        }
        (Rule::Associativity, &[a, b, c]) => op[op[a][b]][c] != op[a][op[b][c]],
        _ => false,
    }
}

fn action_fails(actor: &Table, space: &Table, act: &Table, rule: Rule, w: &[usize]) -> bool {
    match (rule, w) {
        (Rule::ActionIdentity, &[y]) => act[identity(actor)][y] != y,
        (Rule::ActionCompatibility, &[x1, x2, y]) => act[actor[x1][x2]][y] != act[x1][act[x2][y]],
        (Rule::ActionByAutomorphisms, &[x, y1, y2]) => {
            act[x][space[y1][y2]] != space[act[x][y1]][act[x][y2]]
        }
        _ => false,
    }
}

fn hom_fails(src: &Table, tgt: &Table, f: &[usize], rule: Rule, w: &[usize]) -> bool {
    match (rule, w) {
        (Rule::HomIdentity, &[e]) => e == identity(src) && f[e] != identity(tgt),
        (Rule::HomMultiplicative, &[a, b]) => f[src[a][b]] != tgt[f[a]][f[b]],
        _ => false,
    }
}

fn gwa_morphism_fails(src: &G, tgt: &G, f: &[usize], rule: Rule, w: &[usize]) -> bool {
    match (rule, w) {
        (Rule::PreservesSelfAction, &[g, h]) => f[src.act[g][h]] != tgt.act[f[g]][f[h]],
        _ => hom_fails(&src.op, &tgt.op, f, rule, w),
    }
}

fn gwa_fails(g: &G, scope: &str, rule: Rule, w: &[usize]) -> bool {
    match scope {
        "group" => group_fails(&g.op, rule, w),
        "self_action" => action_fails(&g.op, &g.op, &g.act, rule, w),
        _ => false,
    }
}

fn split(scope: &str) -> (&str, &str) {
    scope.split_once('.').unwrap_or((scope, ""))
}

fn conditions_fail(x: &X, rule: Rule, w: &[usize]) -> bool {
    match (rule, w) {
        (Rule::XModEquivariance, &[a, b]) => x.alpha[x.action[b][a]] != x.b.act[b][x.alpha[a]],
        (Rule::XModSelfActionMatch, &[a, a1]) => x.action[x.alpha[a]][a1] != x.a.act[a][a1],
        _ => false,
    }
}

fn xmod_fails(x: &X, scope: &str, rule: Rule, w: &[usize]) -> bool {
    let (head, rest) = split(scope);
    match head {
        "A" => gwa_fails(&x.a, rest, rule, w),
        "B" => gwa_fails(&x.b, rest, rule, w),
        "alpha" => hom_fails(&x.a.op, &x.b.op, &x.alpha, rule, w),
        "action" => action_fails(&x.b.op, &x.a.op, &x.action, rule, w),
        "" => conditions_fail(x, rule, w),
        _ => false,
    }
}

fn morphism_fails(
    src: &X,
    tgt: &X,
    f: &[usize],
    g: &[usize],
    scope: &str,
    rule: Rule,
    w: &[usize],
) -> bool {
    match (scope, rule, w) {
        ("f", _, _) => gwa_morphism_fails(&src.a, &tgt.a, f, rule, w),
        ("g", _, _) => gwa_morphism_fails(&src.b, &tgt.b, g, rule, w),
        ("", Rule::MorphismSquare, &[a]) => g[src.alpha[a]] != tgt.alpha[f[a]],
        ("", Rule::MorphismEquivariance, &[b, a]) => f[src.action[b][a]] != tgt.action[g[b]][f[a]],
        _ => false,
    }
}

#[derive(Clone)]
struct C {
    g: G,
    s: Vec<usize>,
    t: Vec<usize>,
}

fn cat1_ok(c: &C) -> bool {
    let n = c.s.len();
    gwa_ok(&c.g)
        && gwa_morphism_ok(&c.g, &c.g, &c.s)
        && gwa_morphism_ok(&c.g, &c.g, &c.t)
        && (0..n).all(|g| c.s[c.t[g]] == c.t[g] && c.t[c.s[g]] == c.s[g])
        && (0..n).all(|x| c.s[x] != 0 || (0..n).all(|y| c.t[y] != 0 || c.g.act[y][x] == x))
}

fn cat1_fails(c: &C, scope: &str, rule: Rule, w: &[usize]) -> bool {
    let (head, rest) = split(scope);
    match (head, rule, w) {
        ("G", _, _) => gwa_fails(&c.g, rest, rule, w),
        ("s", _, _) => gwa_morphism_fails(&c.g, &c.g, &c.s, rule, w),
        ("t", _, _) => gwa_morphism_fails(&c.g, &c.g, &c.t, rule, w),
        ("", Rule::Cat1SourceTarget, &[g]) => c.s[c.t[g]] != c.t[g],
        ("", Rule::Cat1TargetSource, &[g]) => c.t[c.s[g]] != c.s[g],
        ("", Rule::Cat1KernelsAct, &[x, y]) => c.s[x] == 0 && c.t[y] == 0 && c.g.act[y][x] != x,
        _ => false,
    }
}

#[derive(Clone)]
struct Cov {
    total: X,
    base: X,
    f: Vec<usize>,
    g: Vec<usize>,
}

fn covering_ok(c: &Cov) -> bool {
    xmod_ok(&c.total)
        && xmod_ok(&c.base)
        && morphism_ok(&c.total, &c.base, &c.f, &c.g)
        && super::is_bijection(&c.f, c.base.a.op.len())
}

fn covering_fails(c: &Cov, scope: &str, rule: Rule, w: &[usize]) -> bool {
    let (head, rest) = split(scope);
    match (head, rule, w) {
        ("total", _, _) => xmod_fails(&c.total, rest, rule, w),
        ("base", _, _) => xmod_fails(&c.base, rest, rule, w),
        (_, Rule::CoveringBijective, &[p, a]) => p != a && c.f[p] == c.f[a],
        (_, Rule::CoveringBijective, &[a]) => !c.f.contains(&a),
        (_, Rule::CoveringBijective, &[]) => c.f.len() != c.base.a.op.len(),
        _ => morphism_fails(&c.total, &c.base, &c.f, &c.g, scope, rule, w),
    }
}

#[derive(Clone)]
struct L {
    base: X,
    x: G,
    phi: Vec<usize>,
    omega: Vec<usize>,
}

impl L {
    /// `(A, X, φ)` with `x·a = ω(x)·a`.
    fn lifted(&self) -> X {
        let action = self
            .omega
            .iter()
            .map(|&w| self.base.action[w].clone())
            .collect();
        X {
            a: self.base.a.clone(),
            b: self.x.clone(),
            alpha: self.phi.clone(),
            action,
        }
    }
}

fn lifting_ok(l: &L) -> bool {
    let n = l.phi.len();
    xmod_ok(&l.base)
        && gwa_ok(&l.x)
        && gwa_morphism_ok(&l.x, &l.base.b, &l.omega)
        && is_hom(&l.base.a.op, &l.x.op, &l.phi)
        && (0..n).all(|a| l.omega[l.phi[a]] == l.base.alpha[a])
        && xmod_ok(&l.lifted())
}

fn lifting_fails(l: &L, scope: &str, rule: Rule, w: &[usize]) -> bool {
    let (head, rest) = split(scope);
    let lifted = l.lifted();
    match (head, rule, w) {
        ("base", _, _) => xmod_fails(&l.base, rest, rule, w),
        ("X", _, _) => gwa_fails(&l.x, rest, rule, w),
        ("omega", _, _) => gwa_morphism_fails(&l.x, &l.base.b, &l.omega, rule, w),
        ("phi", _, _) => hom_fails(&l.base.a.op, &l.x.op, &l.phi, rule, w),
        ("", Rule::LiftingFactorization, &[a]) => l.omega[l.phi[a]] != l.base.alpha[a],
        ("action", _, _) => action_fails(&l.x.op, &l.base.a.op, &lifted.action, rule, w),
        ("lifted", _, _) => conditions_fail(&lifted, rule, w),
        _ => false,
    }
}

/// Tally of a corruption run.
#[derive(Debug, Default)]
pub struct Corruptions {
    pub cases: usize,
    pub detected: usize,
    pub problems: Vec<String>,
}

impl Corruptions {
    fn record(
        &mut self,
        label: String,
        report: ValidationReport,
        raw_ok: bool,
        fails: impl Fn(&Violation) -> bool,
    ) {
        self.cases += 1;
        if report.is_valid() {
            if !raw_ok {
                self.problems.push(format!("{label}: undetected"));
            }
            return;
        }
        self.detected += 1;
        if raw_ok {
            self.problems
                .push(format!("{label}: reported on a valid object: {report}"));
        }
        for v in &report.violations {
            if !fails(v) {
                self.problems.push(format!("{label}: wrong witness {v}"));
            }
        }
    }
}

/// Every way of changing one entry of `map` (values `0..m`).
fn map_edits(map: &[usize], m: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for i in 0..map.len() {
        for v in (0..m).filter(|&v| v != map[i]) {
            let mut next = map.to_vec();
            next[i] = v;
            out.push((i, next));
        }
    }
    out
}

/// Every way of changing one entry of `table` (values `0..m`).
fn table_edits(table: &Table, m: usize) -> Vec<((usize, usize), Table)> {
    let mut out = Vec::new();
    for (r, row) in table.iter().enumerate() {
        for (i, edited) in map_edits(row, m) {
            let mut next = table.clone();
            next[r] = edited;
            out.push(((r, i), next));
        }
    }
    out
}

fn gwa_from(op: &Table, act: &Table, name: &str) -> Gwa {
    let group = GroupTable::from_rows(name, op).unwrap();
    let n = op.len();
    Gwa::from_parts(group, Action::from_rows(n, n, act).unwrap()).unwrap()
}

fn gxmod_from(x: &X) -> GXMod {
    GXMod::from_parts(
        gwa_from(&x.a.op, &x.a.act, "A"),
        gwa_from(&x.b.op, &x.b.act, "B"),
        Hom::new(x.alpha.clone()),
        Action::from_rows(x.b.op.len(), x.a.op.len(), &x.action).unwrap(),
    )
    .unwrap()
}

fn gwa_corruptions(name: &str, g: &Gwa, out: &mut Corruptions) {
    let raw = G::of(g);
    let n = raw.op.len();
    out.record(
        name.to_string(),
        gxmod::algebra::validate_gwa(g),
        gwa_ok(&raw),
        |_| false,
    );
    for (at, op) in table_edits(&raw.op, n) {
        let c = G {
            op,
            act: raw.act.clone(),
        };
        let report = gxmod::algebra::validate_gwa(&gwa_from(&c.op, &c.act, name));
        out.record(format!("{name} op{at:?}"), report, gwa_ok(&c), |v| {
            gwa_fails(&c, &v.scope, v.rule, &v.witness)
        });
    }
    for (at, act) in table_edits(&raw.act, n) {
        let c = G {
            op: raw.op.clone(),
            act,
        };
        let report = gxmod::algebra::validate_gwa(&gwa_from(&c.op, &c.act, name));
        out.record(
            format!("{name} self_action{at:?}"),
            report,
            gwa_ok(&c),
            |v| gwa_fails(&c, &v.scope, v.rule, &v.witness),
        );
    }
}

fn gxmod_corruptions(name: &str, x: &GXMod, out: &mut Corruptions) {
    let raw = X::of(x);
    out.record(name.to_string(), validate_gxmod(x), xmod_ok(&raw), |_| {
        false
    });
    let nb = raw.b.op.len();
    let na = raw.a.op.len();
    for (at, alpha) in map_edits(&raw.alpha, nb) {
        let c = X {
            alpha,
            ..raw.clone()
        };
        let report = validate_gxmod(&gxmod_from(&c));
        out.record(format!("{name} alpha[{at}]"), report, xmod_ok(&c), |v| {
            xmod_fails(&c, &v.scope, v.rule, &v.witness)
        });
    }
    for (at, action) in table_edits(&raw.action, na) {
        let c = X {
            action,
            ..raw.clone()
        };
        let report = validate_gxmod(&gxmod_from(&c));
        out.record(format!("{name} action{at:?}"), report, xmod_ok(&c), |v| {
            xmod_fails(&c, &v.scope, v.rule, &v.witness)
        });
    }
}

fn gcat1_corruptions(name: &str, c: &GCat1, out: &mut Corruptions) {
    let raw = C {
        g: G::of(c.g()),
        s: c.s().as_slice().to_vec(),
        t: c.t().as_slice().to_vec(),
    };
    out.record(name.to_string(), validate_gcat1(c), cat1_ok(&raw), |_| {
        false
    });
    let n = raw.s.len();
    let build = |k: &C| {
        GCat1::from_parts(c.g().clone(), Hom::new(k.s.clone()), Hom::new(k.t.clone())).unwrap()
    };
    for (at, s) in map_edits(&raw.s, n) {
        let k = C { s, ..raw.clone() };
        out.record(
            format!("{name} s[{at}]"),
            validate_gcat1(&build(&k)),
            cat1_ok(&k),
            |v| cat1_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
    for (at, t) in map_edits(&raw.t, n) {
        let k = C { t, ..raw.clone() };
        out.record(
            format!("{name} t[{at}]"),
            validate_gcat1(&build(&k)),
            cat1_ok(&k),
            |v| cat1_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
}

fn covering_corruptions(name: &str, c: &Covering, out: &mut Corruptions) {
    let raw = Cov {
        total: X::of(c.total()),
        base: X::of(c.base()),
        f: c.f().as_slice().to_vec(),
        g: c.g().as_slice().to_vec(),
    };
    out.record(
        name.to_string(),
        validate_covering(c),
        covering_ok(&raw),
        |_| false,
    );
    let build = |k: &Cov| {
        Covering::from_parts(
            c.total().clone(),
            c.base().clone(),
            Hom::new(k.f.clone()),
            Hom::new(k.g.clone()),
        )
        .unwrap()
    };
    for (at, f) in map_edits(&raw.f, raw.base.a.op.len()) {
        let k = Cov { f, ..raw.clone() };
        out.record(
            format!("{name} f[{at}]"),
            validate_covering(&build(&k)),
            covering_ok(&k),
            |v| covering_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
    for (at, g) in map_edits(&raw.g, raw.base.b.op.len()) {
        let k = Cov { g, ..raw.clone() };
        out.record(
            format!("{name} g[{at}]"),
            validate_covering(&build(&k)),
            covering_ok(&k),
            |v| covering_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
}

fn lifting_corruptions(name: &str, l: &Lifting, out: &mut Corruptions) {
    let raw = L {
        base: X::of(l.base()),
        x: G::of(l.x()),
        phi: l.phi().as_slice().to_vec(),
        omega: l.omega().as_slice().to_vec(),
    };
    out.record(
        name.to_string(),
        validate_lifting(l),
        lifting_ok(&raw),
        |_| false,
    );
    let build = |k: &L| {
        Lifting::from_parts(
            l.base().clone(),
            l.x().clone(),
            Hom::new(k.phi.clone()),
            Hom::new(k.omega.clone()),
        )
        .unwrap()
    };
    for (at, phi) in map_edits(&raw.phi, raw.x.op.len()) {
        let k = L { phi, ..raw.clone() };
        out.record(
            format!("{name} phi[{at}]"),
            validate_lifting(&build(&k)),
            lifting_ok(&k),
            |v| lifting_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
    for (at, omega) in map_edits(&raw.omega, raw.base.b.op.len()) {
        let k = L {
            omega,
            ..raw.clone()
        };
        out.record(
            format!("{name} omega[{at}]"),
            validate_lifting(&build(&k)),
            lifting_ok(&k),
            |v| lifting_fails(&k, &v.scope, v.rule, &v.witness),
        );
    }
}

/// Validates every fixture, plus the identity covering, the natural lifting, the image
/// lifting and the covering of the natural lifting of each crossed-module fixture, then
/// tries every single-entry corruption of each.
pub fn fixture_corruptions() -> Corruptions {
    let mut out = Corruptions::default();
    for (name, fixture) in fixtures::all() {
        match fixture {
            Fixture::Gwa(g) => gwa_corruptions(name, &g, &mut out),
            Fixture::GXMod(x) => {
                gxmod_corruptions(name, &x, &mut out);
                covering_corruptions(
                    &format!("{name} identity covering"),
                    &Covering::identity(&x),
                    &mut out,
                );
                let natural = natural_lifting(&x).unwrap();
                let covering = gxmod::functor::lifting_to_covering(&natural).unwrap();
                covering_corruptions(&format!("{name} natural covering"), &covering, &mut out);
                lifting_corruptions(&format!("{name} natural lifting"), &natural, &mut out);
                lifting_corruptions(
                    &format!("{name} image lifting"),
                    &image_lifting(&x).unwrap(),
                    &mut out,
                );
            }
            Fixture::GCat1(c) => gcat1_corruptions(name, &c, &mut out),
        }
    }
    out
}

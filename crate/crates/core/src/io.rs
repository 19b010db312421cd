//! JSON file formats.
//!
//! ```json
//! {"name": "Z2", "order": 2, "op": [[0, 1], [1, 0]], "self_action": [[0, 1], [0, 1]]}
//! ```
//!
//! A group with action omits `self_action` for the trivial action. Crossed modules are
//! `{"A": .., "B": .., "alpha": [..], "action": [[..]]}`, cat¹-groups `{"G": .., "s": [..],
//! "t": [..]}`, coverings `{"total": .., "base": .., "f": [..], "g": [..]}` and liftings
//! `{"base": .., "X": .., "phi": [..], "omega": [..]}`.
//!
//! The identity need not be element 0 in a file; it is moved there on load and every
//! map and action table is relabelled to match.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::algebra::{validate_gwa, Action, GroupTable, Gwa, Hom};
use crate::cat1::{validate_gcat1, GCat1};
use crate::covering::{validate_covering, Covering};
use crate::error::{Error, Result};
use crate::lifting::{validate_lifting, Lifting};
use crate::report::ValidationReport;
use crate::xmod::{validate_gxmod, GXMod};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GwaDoc {
    pub name: String,
    pub order: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_action: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GXModDoc {
    #[serde(rename = "A")]
    pub a: GwaDoc,
    #[serde(rename = "B")]
    pub b: GwaDoc,
    pub alpha: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GCat1Doc {
    #[serde(rename = "G")]
    pub g: GwaDoc,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringDoc {
    pub total: GXModDoc,
    pub base: GXModDoc,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftingDoc {
    pub base: GXModDoc,
    #[serde(rename = "X")]
    pub x: GwaDoc,
    pub phi: Vec<usize>,
    pub omega: Vec<usize>,
}

/// A loaded group with action and the relabelling `file index -> loaded index`.
struct Loaded {
    gwa: Gwa,
    perm: Vec<usize>,
}

fn relabel_map(what: &str, map: &[usize], src: &[usize], tgt: &[usize]) -> Result<Hom> {
    if map.len() != src.len() {
        return Err(Error::Structural(format!(
            "{what} has {} entries, expected {}",
            map.len(),
            src.len()
        )));
    }
    let mut out = vec![0; map.len()];
    for (x, &y) in map.iter().enumerate() {
        let &v = tgt.get(y).ok_or_else(|| {
            Error::Structural(format!(
                "{what}[{x}] = {y} is out of range 0..{}",
                tgt.len()
            ))
        })?;
        out[src[x]] = v;
    }
    Ok(Hom::new(out))
}

fn relabel_action(
    what: &str,
    rows: &[Vec<usize>],
    actor: &[usize],
    space: &[usize],
) -> Result<Action> {
    let table = Action::from_rows(actor.len(), space.len(), rows)
        .map_err(|e| Error::Structural(format!("{what}: {e}")))?;
    let mut out = vec![vec![0; space.len()]; actor.len()];
    for (x, row) in table.rows().iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            out[actor[x]][space[y]] = space[v];
        }
    }
    Action::from_rows(actor.len(), space.len(), &out)
}

impl GwaDoc {
    fn load(&self) -> Result<Loaded> {
        if self.op.len() != self.order {
            return Err(Error::Structural(format!(
                "{}: order is {} but op has {} rows",
                self.name,
                self.order,
                self.op.len()
            )));
        }
        let (group, perm) = GroupTable::from_rows(self.name.clone(), &self.op)?.normalized();
        let n = group.order();
        let action = match &self.self_action {
            Some(rows) => {
                relabel_action(&format!("{}.self_action", self.name), rows, &perm, &perm)?
            }
            None => Action::trivial(n, n),
        };
        Ok(Loaded {
            gwa: Gwa::from_parts(group, action)?,
            perm,
        })
    }

    pub fn from_gwa(g: &Gwa) -> Self {
        let action = g.action();
        Self {
            name: g.name().to_string(),
            order: g.order(),
            op: g.group().rows(),
            self_action: (!action.is_trivial()).then(|| action.rows()),
        }
    }

    pub fn to_gwa(&self) -> Result<Gwa> {
        Ok(self.load()?.gwa)
    }
}

impl GXModDoc {
    fn load(&self) -> Result<(GXMod, Vec<usize>, Vec<usize>)> {
        let a = self.a.load()?;
        let b = self.b.load()?;
        let alpha = relabel_map("alpha", &self.alpha, &a.perm, &b.perm)?;
        let action = relabel_action("action", &self.action, &b.perm, &a.perm)?;
        Ok((
            GXMod::from_parts(a.gwa, b.gwa, alpha, action)?,
            a.perm,
            b.perm,
        ))
    }

    pub fn from_gxmod(x: &GXMod) -> Self {
        Self {
            a: GwaDoc::from_gwa(x.a()),
            b: GwaDoc::from_gwa(x.b()),
            alpha: x.alpha().as_slice().to_vec(),
            action: x.action().rows(),
        }
    }

    pub fn to_gxmod(&self) -> Result<GXMod> {
        Ok(self.load()?.0)
    }
}

impl GCat1Doc {
    pub fn from_gcat1(c: &GCat1) -> Self {
        Self {
            g: GwaDoc::from_gwa(c.g()),
            s: c.s().as_slice().to_vec(),
            t: c.t().as_slice().to_vec(),
        }
    }

    pub fn to_gcat1(&self) -> Result<GCat1> {
        let g = self.g.load()?;
        let s = relabel_map("s", &self.s, &g.perm, &g.perm)?;
        let t = relabel_map("t", &self.t, &g.perm, &g.perm)?;
        GCat1::from_parts(g.gwa, s, t)
    }
}

impl CoveringDoc {
    pub fn from_covering(c: &Covering) -> Self {
        Self {
            total: GXModDoc::from_gxmod(c.total()),
            base: GXModDoc::from_gxmod(c.base()),
            f: c.f().as_slice().to_vec(),
            g: c.g().as_slice().to_vec(),
        }
    }

    pub fn to_covering(&self) -> Result<Covering> {
        let (total, ta, tb) = self.total.load()?;
        let (base, ba, bb) = self.base.load()?;
        let f = relabel_map("f", &self.f, &ta, &ba)?;
        let g = relabel_map("g", &self.g, &tb, &bb)?;
        Covering::from_parts(total, base, f, g)
    }
}

impl LiftingDoc {
    pub fn from_lifting(l: &Lifting) -> Self {
        Self {
            base: GXModDoc::from_gxmod(l.base()),
            x: GwaDoc::from_gwa(l.x()),
            phi: l.phi().as_slice().to_vec(),
            omega: l.omega().as_slice().to_vec(),
        }
    }

    pub fn to_lifting(&self) -> Result<Lifting> {
        let (base, pa, pb) = self.base.load()?;
        let x = self.x.load()?;
        let phi = relabel_map("phi", &self.phi, &pa, &x.perm)?;
        let omega = relabel_map("omega", &self.omega, &x.perm, &pb)?;
        Lifting::from_parts(base, x.gwa, phi, omega)
    }
}

macro_rules! serialize_via {
    ($ty:ty, $doc:ident :: $from:ident) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                $doc::$from(self).serialize(s)
            }
        }
    };
}

serialize_via!(Gwa, GwaDoc::from_gwa);
serialize_via!(GXMod, GXModDoc::from_gxmod);
serialize_via!(GCat1, GCat1Doc::from_gcat1);
serialize_via!(Covering, CoveringDoc::from_covering);
serialize_via!(Lifting, LiftingDoc::from_lifting);

/// Any of the file kinds, told apart by their keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Gwa(Gwa),
    GXMod(GXMod),
    GCat1(GCat1),
    Covering(Covering),
    Lifting(Lifting),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Gwa(_) => "group with action",
            Document::GXMod(_) => "generalized crossed module",
            Document::GCat1(_) => "generalized cat1-group",
            Document::Covering(_) => "covering",
            Document::Lifting(_) => "lifting",
        }
    }

    /// Runs the validator for this kind.
    pub fn validate(&self) -> ValidationReport {
        match self {
            Document::Gwa(g) => validate_gwa(g),
            Document::GXMod(x) => validate_gxmod(x),
            Document::GCat1(c) => validate_gcat1(c),
            Document::Covering(c) => validate_covering(c),
            Document::Lifting(l) => validate_lifting(l),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        match self {
            Document::Gwa(g) => to_json_pretty(g),
            Document::GXMod(x) => to_json_pretty(x),
            Document::GCat1(c) => to_json_pretty(c),
            Document::Covering(c) => to_json_pretty(c),
            Document::Lifting(l) => to_json_pretty(l),
        }
    }
}

/// Indented JSON with every array of scalars (a map, a table row) kept on one line.
pub fn to_json_pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalar")),
    }
}

/// Parses a file of any kind. Syntax errors are [`Error::Parse`]; tables of the wrong
/// shape are [`Error::Structural`]. Axioms are not checked.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &value else {
        return Err(Error::Structural(
            "expected a JSON object at the top level".into(),
        ));
    };
    let has = |k: &str| map.contains_key(k);
    let doc = if has("total") {
        Document::Covering(serde_json::from_value::<CoveringDoc>(value)?.to_covering()?)
    } else if has("X") {
        Document::Lifting(serde_json::from_value::<LiftingDoc>(value)?.to_lifting()?)
    } else if has("G") {
        Document::GCat1(serde_json::from_value::<GCat1Doc>(value)?.to_gcat1()?)
    } else if has("A") || has("alpha") {
        Document::GXMod(serde_json::from_value::<GXModDoc>(value)?.to_gxmod()?)
    } else if has("op") {
        Document::Gwa(serde_json::from_value::<GwaDoc>(value)?.to_gwa()?)
    } else {
        return Err(Error::Structural(
            "unrecognized file: expected a group, crossed module, cat1-group, covering or lifting"
                .into(),
        ));
    };
    Ok(doc)
}

pub fn read_document(path: &std::path::Path) -> Result<Document> {
    parse_document(&std::fs::read_to_string(path)?)
}

//! The shipped example objects.

use crate::algebra::{Action, GroupTable, Gwa, Hom, Subgroup};
use crate::cat1::GCat1;
use crate::xmod::{from_invariant_subgroup, GXMod};

/// `^a b = (-1)^a b` on the cyclic group of even order `n`.
fn sign_action(n: usize) -> Gwa {
    let g = GroupTable::cyclic(n);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| if a % 2 == 0 { b } else { g.inv(b) })
                .collect()
        })
        .collect();
    let action = Action::from_rows(n, n, &rows).expect("square table");
    Gwa::new(g, action).expect("valid self-action")
}

fn mod2(n: usize) -> Hom {
    Hom::new((0..n).map(|a| a % 2).collect())
}

pub fn trivial() -> Gwa {
    Gwa::trivial(GroupTable::trivial())
}

pub fn z2_trivial() -> Gwa {
    Gwa::trivial(GroupTable::cyclic(2))
}

pub fn z3_trivial() -> Gwa {
    Gwa::trivial(GroupTable::cyclic(3))
}

pub fn z4_trivial() -> Gwa {
    Gwa::trivial(GroupTable::cyclic(4))
}

/// `Z4` with `^a b = (-1)^a b`.
pub fn z4_inversion() -> Gwa {
    sign_action(4)
}

pub fn v4_trivial() -> Gwa {
    Gwa::trivial(GroupTable::direct_product(
        &GroupTable::cyclic(2),
        &GroupTable::cyclic(2),
    ))
}

pub fn s3_conjugation() -> Gwa {
    Gwa::conjugation(GroupTable::symmetric(3))
}

/// `Z8` with `^a b = (-1)^a b`.
pub fn z8_sign() -> Gwa {
    sign_action(8)
}

/// `(Z2, Z2, id)` with every action trivial.
pub fn gx1() -> GXMod {
    GXMod::with_trivial_actions(z2_trivial(), z2_trivial(), Hom::identity(2)).expect("valid")
}

/// Reduction mod 2 from `Z4` with inversion onto trivial `Z2`, the generator of `Z2`
/// acting on `Z4` by inversion.
pub fn gx3() -> GXMod {
    let action = Action::from_rows(2, 4, &[vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).expect("2x4");
    GXMod::new(z4_inversion(), z2_trivial(), mod2(4), action).expect("valid")
}

/// Reduction mod 2 from `Z8` with `^a b = (-1)^a b` onto trivial `Z2`. Its kernel
/// contains the chain of ideals `{0, 4} ⊆ {0, 2, 4, 6}`.
pub fn gx8() -> GXMod {
    let rows = vec![(0..8).collect(), (0..8).map(|b| (8 - b) % 8).collect()];
    let action = Action::from_rows(2, 8, &rows).expect("2x8");
    GXMod::new(z8_sign(), z2_trivial(), mod2(8), action).expect("valid")
}

/// The even permutations inside `S3`, everything acting by conjugation.
pub fn a3_s3() -> GXMod {
    let s3 = s3_conjugation();
    let a3 = Subgroup::new(s3.group(), [0, 3, 4]).expect("A3 is a subgroup");
    let mut x = from_invariant_subgroup(&s3, &a3).expect("A3 is normal");
    x.rename_a("A3");
    x
}

/// `Z4 -> Z2` reduction with all actions trivial.
pub fn z4_z2_trivial() -> GXMod {
    GXMod::with_trivial_actions(z4_trivial(), z2_trivial(), mod2(4)).expect("valid")
}

/// `(Z2, Z2, 0)` with all actions trivial.
pub fn z2_zero() -> GXMod {
    GXMod::with_trivial_actions(z2_trivial(), z2_trivial(), Hom::new(vec![0, 0])).expect("valid")
}

/// `(S3, 1, 1)` with conjugation.
pub fn cat1_s3_identity() -> GCat1 {
    GCat1::new(s3_conjugation(), Hom::identity(6), Hom::identity(6)).expect("valid")
}

/// `(Z2 x Z2, p, p)` with trivial action and `p(x, y) = (x, 0)`.
pub fn cat1_v4_projection() -> GCat1 {
    let p = Hom::new(vec![0, 0, 2, 2]);
    GCat1::new(v4_trivial(), p.clone(), p).expect("valid")
}

/// `(Z2, 0, 0)` with trivial action.
pub fn cat1_z2_zero() -> GCat1 {
    GCat1::new(z2_trivial(), Hom::new(vec![0, 0]), Hom::new(vec![0, 0])).expect("valid")
}

/// A named fixture, as installed by the command line's `--seed-fixtures`.
pub enum Fixture {
    Gwa(Gwa),
    GXMod(GXMod),
    GCat1(GCat1),
}

/// Every shipped fixture with its file stem.
pub fn all() -> Vec<(&'static str, Fixture)> {
    vec![
        ("trivial", Fixture::Gwa(trivial())),
        ("z2", Fixture::Gwa(z2_trivial())),
        ("z3", Fixture::Gwa(z3_trivial())),
        ("z4", Fixture::Gwa(z4_trivial())),
        ("z4-inversion", Fixture::Gwa(z4_inversion())),
        ("v4", Fixture::Gwa(v4_trivial())),
        ("s3", Fixture::Gwa(s3_conjugation())),
        ("z8-sign", Fixture::Gwa(z8_sign())),
        ("gx1", Fixture::GXMod(gx1())),
        ("gx3", Fixture::GXMod(gx3())),
        ("gx8", Fixture::GXMod(gx8())),
        ("a3-s3", Fixture::GXMod(a3_s3())),
        ("z4-z2-trivial", Fixture::GXMod(z4_z2_trivial())),
        ("cat1-s3-identity", Fixture::GCat1(cat1_s3_identity())),
        ("cat1-v4-projection", Fixture::GCat1(cat1_v4_projection())),
        ("cat1-z2-zero", Fixture::GCat1(cat1_z2_zero())),
    ]
}

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{ensure_valid, Error, Result};
use crate::report::{Rule, ValidationReport};

/// A finite group given by its Cayley table.
///
/// Elements are the indices `0..order`. Groups built through [`GroupTable::new`] or any
/// of the named constructors have their identity at index 0.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    order: usize,
    op: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl PartialEq for GroupTable {
    /// Two tables are equal when their multiplication agrees entry by entry. Names are
    /// labels only.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.op == other.op
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Reads a Cayley table without checking the group axioms.
    ///
    /// Only the shape is checked: the table must be square and every entry must be an
    /// element. The identity is taken to be the first two-sided identity if there is
    /// one (index 0 otherwise), and `inv[g]` the first right inverse of `g` (the
    /// identity if there is none). Use [`validate_group`] to find out whether the
    /// result is actually a group.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Structural("a group has at least one element".into()));
        }
        let mut op = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Structural(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= order {
                    return Err(Error::Structural(format!(
                        "entry op[{i}][{j}] = {x} is out of range 0..{order}"
                    )));
                }
                op.push(x);
            }
        }
        Ok(Self::from_flat(name.into(), order, op))
    }

    fn from_flat(name: String, order: usize, op: Vec<usize>) -> Self {
        let at = |a: usize, b: usize| op[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .unwrap_or(0);
        let inv = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| at(g, h) == identity)
                    .unwrap_or(identity)
            })
            .collect();
        Self {
            name,
            order,
            op,
            identity,
            inv,
        }
    }

    /// Reads and validates a Cayley table, relabelling elements so the identity is 0.
    pub fn new(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let (table, _) = Self::from_rows(name, rows)?.normalized();
        ensure_valid(format!("group {}", table.name), validate_group(&table))?;
        Ok(table)
    }

    /// Moves the identity to index 0 by swapping it with element 0.
    ///
    /// Returns the relabelled table and the relabelling `old -> new`. The permutation is
    /// the identity when the identity already sits at 0.
    pub fn normalized(self) -> (Self, Vec<usize>) {
        let e = self.identity;
        let perm: Vec<usize> = (0..self.order)
            .map(|x| {
                if x == e {
                    0
                } else if x == 0 {
                    e
                } else {
                    x
                }
            })
            .collect();
        if e == 0 {
            return (self, perm);
        }
        let relabelled = self.relabel(&perm);
        (relabelled, perm)
    }

    /// Applies a bijective relabelling `old -> new` to every element.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order;
        let mut back = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            back[new] = old;
        }
        let mut op = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                op[a * n + b] = perm[self.op(back[a], back[b])];
            }
        }
        Self::from_flat(self.name.clone(), n, op)
    }

    pub fn trivial() -> Self {
        Self::from_flat("1".into(), 1, vec![0])
    }

    /// The cyclic group `Z_n` written additively: element `k` is `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let op = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat(format!("Z{n}"), n, op)
    }

    /// Direct product; the pair `(x, y)` is element `x * |right| + y`.
    pub fn direct_product(left: &GroupTable, right: &GroupTable) -> Self {
        let (m, k) = (left.order, right.order);
        let n = m * k;
        let mut op = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let x = left.op(a / k, b / k);
                let y = right.op(a % k, b % k);
                op[a * n + b] = x * k + y;
            }
        }
        Self::from_flat(format!("{}x{}", left.name, right.name), n, op)
    }

    /// The group generated by the given permutations of `0..degree`, composed as maps
    /// (`(p q)(i) = p(q(i))`).
    ///
    /// Elements are numbered by the lexicographic order of their permutations, so the
    /// identity permutation is element 0. Returns the permutations alongside the table.
    pub fn from_permutations(
        name: impl Into<String>,
        generators: &[Vec<usize>],
    ) -> Result<(Self, Vec<Vec<usize>>)> {
        let degree = generators.first().map_or(0, Vec::len);
        for p in generators {
            let mut seen = vec![false; degree];
            if p.len() != degree
                || p.iter()
                    .any(|&i| i >= degree || std::mem::replace(&mut seen[i], true))
            {
                return Err(Error::Structural(format!(
                    "{p:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let compose = |p: &[usize], q: &[usize]| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut frontier = vec![identity];
        let mut known: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        known.insert(elements[0].clone(), ());
        while let Some(p) = frontier.pop() {
            for s in generators {
                let q = compose(&p, s);
                if known.insert(q.clone(), ()).is_none() {
                    elements.push(q.clone());
                    frontier.push(q);
                }
            }
        }
        elements.sort();
        let index: BTreeMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut op = vec![0; n * n];
        for (a, p) in elements.iter().enumerate() {
            for (b, q) in elements.iter().enumerate() {
                op[a * n + b] = index[&compose(p, q)];
            }
        }
        Ok((Self::from_flat(name.into(), n, op), elements))
    }

    /// The symmetric group on `degree` points with its permutations.
    pub fn symmetric_with_perms(degree: usize) -> (Self, Vec<Vec<usize>>) {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..degree).map(|i| (i + 1) % degree).collect());
        } else {
            gens.push((0..degree).collect());
        }
        Self::from_permutations(format!("S{degree}"), &gens).expect("valid generators")
    }

    pub fn symmetric(degree: usize) -> Self {
        Self::symmetric_with_perms(degree).0
    }

    /// Dihedral group of order `2n` with rotation `r^k` at index `k` and reflection
    /// `r^k f` at index `n + k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let m = 2 * n;
        let mut op = vec![0; m * m];
        // r^a f^x * r^b f^y = r^(a + (-1)^x b) f^(x+y)
        for i in 0..m {
            for j in 0..m {
                let (a, x) = (i % n, i / n);
                let (b, y) = (j % n, j / n);
                let rot = if x == 0 { (a + b) % n } else { (a + n - b) % n };
                op[i * m + j] = ((x + y) % 2) * n + rot;
            }
        }
        Self::from_flat(format!("D{n}"), m, op)
    }

    /// Quaternion group `Q8`: index `2k + s` is `i^k` times `(-1)^s` for the basis
    /// `1, i, j, k`.
    pub fn quaternion() -> Self {
        // unit quaternion basis products: (basis, basis) -> (sign, basis)
        const MUL: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut op = vec![0; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (sa, ba) = (a % 2, a / 2);
                let (sb, bb) = (b % 2, b / 2);
                let (s, c) = MUL[ba][bb];
                op[a * 8 + b] = 2 * c + (sa + sb + s) % 2;
            }
        }
        Self::from_flat("Q8".into(), 8, op)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.op(self.op(g, h), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, g);
            k += 1;
            if k > self.order {
                break;
            }
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Elements generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.op(x, s);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        self.elements().filter(|&x| member[x]).collect()
    }

    /// A small generating set, chosen greedily from elements of large order.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = self.elements().filter(|&g| g != self.identity).collect();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for g in candidates {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

/// Checks the group axioms on a Cayley table, reporting each failure with a witness.
///
/// Witnesses: `[g]` for the identity and inverse laws, `[a, b, c]` for associativity,
/// scanned in lexicographic order.
pub fn validate_group(t: &GroupTable) -> ValidationReport {
    let mut report = ValidationReport::new();
    let e = t.identity();
    for g in t.elements() {
        if t.op(e, g) != g || t.op(g, e) != g {
            report.push(
                Rule::GroupIdentity,
                vec![g],
                format!(
                    "{e} + {g} = {}, {g} + {e} = {}, expected {g}",
                    t.op(e, g),
                    t.op(g, e)
                ),
            );
        }
    }
    for g in t.elements() {
        let h = t.inv(g);
        if t.op(g, h) != e || t.op(h, g) != e {
            report.push(
                Rule::GroupInverse,
                vec![g],
                format!("{g} has no two-sided inverse"),
            );
        }
    }
    for a in t.elements() {
        for b in t.elements() {
            let ab = t.op(a, b);
            for c in t.elements() {
                let left = t.op(ab, c);
                let right = t.op(a, t.op(b, c));
                if left != right {
                    report.push(
                        Rule::Associativity,
                        vec![a, b, c],
                        format!("({a} + {b}) + {c} = {left} but {a} + ({b} + {c}) = {right}"),
                    );
                }
            }
        }
    }
    report
}

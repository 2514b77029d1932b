//! Finite bounded lattices given by join and meet tables.

use crate::error::{Error, Result};
use crate::report::{full, scan1, scan2, scan3, Check, CheckReport};
use crate::table::{BinOpTable, ElementId};

/// `a <= b` iff `a ∨ b = b`, as a dense boolean matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InducedOrder {
    size: usize,
    leq: Vec<bool>,
}

impl InducedOrder {
    pub fn from_join(join: &BinOpTable) -> Self {
        let n = join.size();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = join.get(a, b) == b;
            }
        }
        InducedOrder { size: n, leq }
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Reflexivity, antisymmetry, transitivity.
    pub fn check_partial_order(&self) -> CheckReport {
        let dom = full(self.size);
        let mut r = CheckReport::new();
        r.push(Check::from_violations(
            "reflexive",
            scan1(&dom, "x", |x| self.leq(x, x)),
        ));
        r.push(Check::from_violations(
            "antisymmetric",
            scan2(&dom, ["x", "y"], |x, y| {
                !(self.leq(x, y) && self.leq(y, x)) || x == y
            }),
        ));
        r.push(Check::from_violations(
            "transitive",
            scan3(&dom, ["x", "y", "z"], |x, y, z| {
                !(self.leq(x, y) && self.leq(y, z)) || self.leq(x, z)
            }),
        ));
        r
    }
}

/// Lattice laws for `(carrier, join, meet)`: commutativity, associativity
/// and idempotence of both operations, both absorption laws, closure and the
/// agreement of the two orders (`a ∨ b = b` iff `a ∧ b = a`).
pub fn check_lattice_laws(
    join: &BinOpTable,
    meet: &BinOpTable,
    carrier: &[ElementId],
) -> CheckReport {
    let mut inside = vec![false; join.size()];
    for &x in carrier {
        inside[x] = true;
    }
    let mut r = CheckReport::new();
    for (label, op) in [("join", join), ("meet", meet)] {
        r.push(Check::from_violations(
            format!("{label}_closed"),
            scan2(carrier, ["x", "y"], |x, y| inside[op.get(x, y)]),
        ));
        r.push(Check::from_violations(
            format!("{label}_commutative"),
            scan2(carrier, ["x", "y"], |x, y| op.get(x, y) == op.get(y, x)),
        ));
        r.push(Check::from_violations(
            format!("{label}_associative"),
            scan3(carrier, ["x", "y", "z"], |x, y, z| {
                op.get(op.get(x, y), z) == op.get(x, op.get(y, z))
            }),
        ));
        r.push(Check::from_violations(
            format!("{label}_idempotent"),
            scan1(carrier, "x", |x| op.get(x, x) == x),
        ));
    }
    r.push(Check::from_violations(
        "absorption_join_meet",
        scan2(carrier, ["x", "y"], |x, y| join.get(x, meet.get(x, y)) == x),
    ));
    r.push(Check::from_violations(
        "absorption_meet_join",
        scan2(carrier, ["x", "y"], |x, y| meet.get(x, join.get(x, y)) == x),
    ));
    r.push(Check::from_violations(
        "order_consistency",
        scan2(carrier, ["x", "y"], |x, y| {
            (join.get(x, y) == y) == (meet.get(x, y) == x)
        }),
    ));
    r
}

/// Lattice laws plus neutrality of the bounds.
pub fn check_bounded_lattice(
    join: &BinOpTable,
    meet: &BinOpTable,
    bottom: ElementId,
    top: ElementId,
) -> CheckReport {
    let dom = full(join.size());
    let mut r = check_lattice_laws(join, meet, &dom);
    r.push(Check::from_violations(
        "bottom_join_neutral",
        scan1(&dom, "x", |x| join.get(bottom, x) == x),
    ));
    r.push(Check::from_violations(
        "top_meet_neutral",
        scan1(&dom, "x", |x| meet.get(top, x) == x),
    ));
    r
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedLattice {
    elements: Vec<String>,
    join: BinOpTable,
    meet: BinOpTable,
    bottom: ElementId,
    top: ElementId,
    order: InducedOrder,
}

impl BoundedLattice {
    /// Validates the tables and derives the induced order.
    ///
    /// Shape problems come back as [`Error::Structural`]; law violations as
    /// [`Error::Axioms`] with the failing checks.
    pub fn new(
        elements: Vec<String>,
        join: BinOpTable,
        meet: BinOpTable,
        bottom: ElementId,
        top: ElementId,
    ) -> Result<Self> {
        let lattice = Self::from_parts(elements, join, meet, bottom, top)?;
        let report = lattice.check();
        if report.passed() {
            Ok(lattice)
        } else {
            Err(Error::Axioms(Box::new(report)))
        }
    }

    /// Shape validation only.
    pub fn from_parts(
        elements: Vec<String>,
        join: BinOpTable,
        meet: BinOpTable,
        bottom: ElementId,
        top: ElementId,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Structural("empty carrier".into()));
        }
        if join.size() != n || meet.size() != n {
            return Err(Error::Structural(format!(
                "tables of size {}/{} do not match {n} elements",
                join.size(),
                meet.size()
            )));
        }
        if bottom >= n || top >= n {
            return Err(Error::Structural("bound index out of range".into()));
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::Structural(format!("duplicate element `{e}`")));
            }
        }
        let order = InducedOrder::from_join(&join);
        Ok(BoundedLattice {
            elements,
            join,
            meet,
            bottom,
            top,
            order,
        })
    }

    pub fn check(&self) -> CheckReport {
        check_bounded_lattice(&self.join, &self.meet, self.bottom, self.top)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.elements[x]
    }

    pub fn index_of(&self, token: &str) -> Option<ElementId> {
        self.elements.iter().position(|e| e == token)
    }

    pub fn join(&self) -> &BinOpTable {
        &self.join
    }

    pub fn meet(&self) -> &BinOpTable {
        &self.meet
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn order(&self) -> &InducedOrder {
        &self.order
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.order.leq(a, b)
    }

    /// Relabels by `perm[old] = new`, renaming elements to `names` (indexed by new label).
    pub fn relabel(&self, perm: &[ElementId], names: Vec<String>) -> Self {
        BoundedLattice {
            elements: names,
            join: self.join.relabel(perm),
            meet: self.meet.relabel(perm),
            bottom: perm[self.bottom],
            top: perm[self.top],
            order: InducedOrder::from_join(&self.join.relabel(perm)),
        }
    }
}

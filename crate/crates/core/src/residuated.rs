//! Residuated lattices: a bounded lattice with a commutative monoid `⊗`
//! (unit = top) and its residuum `→`, plus the derived `¬x = x → 0` and
//! `x ⊕ y = ¬(¬x ⊗ ¬y)`.

use crate::error::{Error, Result};
use crate::lattice::BoundedLattice;
use crate::report::{full, scan1, scan2, scan3, Check, CheckReport};
use crate::table::{BinOpTable, ElementId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResiduatedLattice {
    lattice: BoundedLattice,
    otimes: BinOpTable,
    arrow: BinOpTable,
    neg: Vec<ElementId>,
    oplus: BinOpTable,
}

impl ResiduatedLattice {
    /// Assembles the algebra without checking any law; `¬` and `⊕` are
    /// derived from the given tables.
    pub fn from_parts(
        lattice: BoundedLattice,
        otimes: BinOpTable,
        arrow: BinOpTable,
    ) -> Result<Self> {
        let n = lattice.size();
        if otimes.size() != n || arrow.size() != n {
            return Err(Error::Structural(format!(
                "otimes/arrow of size {}/{} do not match {n} elements",
                otimes.size(),
                arrow.size()
            )));
        }
        let (neg, oplus) = derive_negation_ops(lattice.bottom(), &otimes, &arrow);
        Ok(ResiduatedLattice {
            lattice,
            otimes,
            arrow,
            neg,
            oplus,
        })
    }

    /// Assembles and validates: lattice laws, commutative monoid, adjointness.
    pub fn new(lattice: BoundedLattice, otimes: BinOpTable, arrow: BinOpTable) -> Result<Self> {
        let rl = Self::from_parts(lattice, otimes, arrow)?;
        let report = rl.check();
        if report.passed() {
            Ok(rl)
        } else {
            Err(Error::Axioms(Box::new(report)))
        }
    }

    /// Derives `→` from `⊗` and validates the result.
    pub fn from_otimes(lattice: BoundedLattice, otimes: BinOpTable) -> Result<Self> {
        let monoid = check_commutative_monoid(&otimes, lattice.top());
        if !monoid.passed() {
            return Err(Error::Axioms(Box::new(monoid.prefixed("otimes"))));
        }
        let arrow = derive_arrow(&lattice, &otimes)?;
        Self::new(lattice, otimes, arrow)
    }

    /// Every residuated-lattice law: bounded lattice, commutative monoid
    /// with unit top, adjointness.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.extend_prefixed("lattice", self.lattice.check());
        r.extend_prefixed(
            "otimes",
            check_commutative_monoid(&self.otimes, self.lattice.top()),
        );
        r.extend(check_adjointness(self));
        r
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn elements(&self) -> &[String] {
        self.lattice.elements()
    }

    pub fn bottom(&self) -> ElementId {
        self.lattice.bottom()
    }

    pub fn top(&self) -> ElementId {
        self.lattice.top()
    }

    pub fn join(&self) -> &BinOpTable {
        self.lattice.join()
    }

    pub fn meet(&self) -> &BinOpTable {
        self.lattice.meet()
    }

    pub fn otimes(&self) -> &BinOpTable {
        &self.otimes
    }

    pub fn arrow(&self) -> &BinOpTable {
        &self.arrow
    }

    pub fn neg(&self) -> &[ElementId] {
        &self.neg
    }

    pub fn oplus(&self) -> &BinOpTable {
        &self.oplus
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn satisfies_dnl(&self) -> bool {
        (0..self.size()).all(|x| self.neg[self.neg[x]] == x)
    }

    /// Relabels by `perm[old] = new`.
    pub fn relabel(&self, perm: &[ElementId], names: Vec<String>) -> Self {
        let lattice = self.lattice.relabel(perm, names);
        let otimes = self.otimes.relabel(perm);
        let arrow = self.arrow.relabel(perm);
        Self::from_parts(lattice, otimes, arrow).expect("relabeling preserves shape")
    }

    /// Restriction to a sorted carrier closed under all four operations.
    pub fn restrict(&self, carrier: &[ElementId]) -> Result<Self> {
        let closed = |op: &'static str, t: &BinOpTable| {
            t.restrict(carrier)
                .map_err(|(x, y)| Error::ClosureFails { op, x, y })
        };
        let join = closed("join", self.join())?;
        let meet = closed("meet", self.meet())?;
        let otimes = closed("otimes", &self.otimes)?;
        let arrow = closed("arrow", &self.arrow)?;
        let pos = |e: ElementId| {
            carrier
                .iter()
                .position(|&c| c == e)
                .ok_or_else(|| Error::Structural(format!("bound {e} is not in the carrier")))
        };
        let names = carrier
            .iter()
            .map(|&e| self.elements()[e].clone())
            .collect();
        let lattice =
            BoundedLattice::from_parts(names, join, meet, pos(self.bottom())?, pos(self.top())?)?;
        Self::from_parts(lattice, otimes, arrow)
    }
}

/// Commutativity, associativity and the unit law for `table` over its whole carrier.
pub fn check_commutative_monoid(table: &BinOpTable, unit: ElementId) -> CheckReport {
    check_commutative_monoid_on(table, unit, &full(table.size()))
}

pub fn check_commutative_monoid_on(
    table: &BinOpTable,
    unit: ElementId,
    carrier: &[ElementId],
) -> CheckReport {
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "commutative",
        scan2(carrier, ["x", "y"], |x, y| {
            table.get(x, y) == table.get(y, x)
        }),
    ));
    r.push(Check::from_violations(
        "associative",
        scan3(carrier, ["x", "y", "z"], |x, y, z| {
            table.get(table.get(x, y), z) == table.get(x, table.get(y, z))
        }),
    ));
    r.push(Check::from_violations(
        "unit",
        scan1(carrier, "x", |x| {
            table.get(x, unit) == x && table.get(unit, x) == x
        }),
    ));
    r
}

/// Both directions of `x <= y → z  iff  x ⊗ y <= z`, as two named checks.
pub fn check_adjointness(rl: &ResiduatedLattice) -> CheckReport {
    let dom = full(rl.size());
    let (t, a) = (rl.otimes(), rl.arrow());
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "adjointness.residuum_to_product",
        scan3(&dom, ["x", "y", "z"], |x, y, z| {
            !rl.leq(x, a.get(y, z)) || rl.leq(t.get(x, y), z)
        }),
    ));
    r.push(Check::from_violations(
        "adjointness.product_to_residuum",
        scan3(&dom, ["x", "y", "z"], |x, y, z| {
            !rl.leq(t.get(x, y), z) || rl.leq(x, a.get(y, z))
        }),
    ));
    r
}

/// `⊗` is order-preserving in each argument.
pub fn check_monotone(lattice: &BoundedLattice, otimes: &BinOpTable) -> CheckReport {
    let dom = full(lattice.size());
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "otimes_monotone",
        scan3(&dom, ["x", "y", "z"], |x, y, z| {
            !lattice.leq(x, y) || lattice.leq(otimes.get(x, z), otimes.get(y, z))
        }),
    ));
    r
}

/// The residuum of `otimes`: `y → z` is the greatest `x` with `x ⊗ y <= z`.
///
/// The candidate set must have a greatest element `m` and must be all of
/// `↓m`; otherwise no table satisfies adjointness and
/// [`Error::NoResiduum`] names the offending pair.
#[allow(clippy::needless_range_loop)]
pub fn derive_arrow(lattice: &BoundedLattice, otimes: &BinOpTable) -> Result<BinOpTable> {
    let n = lattice.size();
    let mut rows = vec![vec![0; n]; n];
    for y in 0..n {
        for z in 0..n {
            let candidate = |x: ElementId| lattice.leq(otimes.get(x, y), z);
            let max = (0..n)
                .filter(|&m| candidate(m))
                .find(|&m| (0..n).all(|x| candidate(x) == lattice.leq(x, m)))
                .ok_or(Error::NoResiduum { y, z })?;
            rows[y][z] = max;
        }
    }
    BinOpTable::from_rows(&rows)
}

/// `¬x = x → bottom` and `x ⊕ y = ¬(¬x ⊗ ¬y)`.
pub fn derive_negation_ops(
    bottom: ElementId,
    otimes: &BinOpTable,
    arrow: &BinOpTable,
) -> (Vec<ElementId>, BinOpTable) {
    let n = otimes.size();
    let neg: Vec<_> = (0..n).map(|x| arrow.get(x, bottom)).collect();
    let oplus = BinOpTable::from_fn(n, |x, y| neg[otimes.get(neg[x], neg[y])]);
    (neg, oplus)
}

/// `¬¬x = x`; witnesses are the violating `x`.
pub fn check_double_negation(rl: &ResiduatedLattice) -> CheckReport {
    let neg = rl.neg();
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "double_negation",
        scan1(&full(rl.size()), "x", |x| neg[neg[x]] == x),
    ));
    r
}

/// `(x → y) ∨ (y → x) = 1`.
pub fn check_prelinearity(rl: &ResiduatedLattice) -> CheckReport {
    let (a, j) = (rl.arrow(), rl.join());
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "prelinearity",
        scan2(&full(rl.size()), ["x", "y"], |x, y| {
            j.get(a.get(x, y), a.get(y, x)) == rl.top()
        }),
    ));
    r
}

/// `x ⊗ (x → y) = x ∧ y`.
pub fn check_divisibility(rl: &ResiduatedLattice) -> CheckReport {
    let (t, a, m) = (rl.otimes(), rl.arrow(), rl.meet());
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "divisibility",
        scan2(&full(rl.size()), ["x", "y"], |x, y| {
            t.get(x, a.get(x, y)) == m.get(x, y)
        }),
    ));
    r
}

/// MV-algebra membership: double negation, prelinearity and divisibility
/// together. The report passes iff the algebra is an MV-algebra.
pub fn check_mv(rl: &ResiduatedLattice) -> CheckReport {
    let mut r = check_double_negation(rl);
    r.extend(check_prelinearity(rl));
    r.extend(check_divisibility(rl));
    r
}

//! Commutative semirings, general coupled semirings, tied semirings and the
//! constructions linking them with residuated lattices.
//!
//! A [`CoupledStructure`] is a pair of semirings over carriers `A` and
//! `B ⊆ A` of a common ambient element list, plus a unary map `α`. With
//! `B = A` and `α` bijective it is a general coupled semiring; otherwise it
//! is read as a tied semiring.

use crate::error::{Error, Result};
use crate::lattice::{check_lattice_laws, BoundedLattice};
use crate::report::{full, scan1, scan2, Check, CheckReport, Witness};
use crate::residuated::{check_commutative_monoid_on, ResiduatedLattice};
use crate::subuniverse;
use crate::table::{position_map, BinOpTable, ElementId};

/// A commutative semiring `(carrier, add, mul, zero, one)` sitting inside
/// ambient tables. Only entries over the carrier matter.
///
/// Roles are positional: for the second semiring of a coupled structure
/// `add` is the lattice meet and `zero` the lattice top, so annihilation
/// reads `x ∗ 1 = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RoleMappedSemiring {
    pub carrier: Vec<ElementId>,
    pub add: BinOpTable,
    pub mul: BinOpTable,
    pub zero: ElementId,
    pub one: ElementId,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoupledKind {
    General,
    Tied,
}

impl CoupledKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoupledKind::General => "general",
            CoupledKind::Tied => "tied",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoupledStructure {
    pub elements: Vec<String>,
    pub first: RoleMappedSemiring,
    pub second: RoleMappedSemiring,
    pub alpha: Vec<ElementId>,
    pub kind: CoupledKind,
}

impl CoupledStructure {
    /// Shape checks: table sizes, sorted in-range carriers, in-range map.
    pub fn validate_shape(&self) -> Result<()> {
        let n = self.elements.len();
        for (label, s) in [("first", &self.first), ("second", &self.second)] {
            if s.add.size() != n || s.mul.size() != n {
                return Err(Error::Structural(format!(
                    "{label} semiring tables do not match {n} elements"
                )));
            }
            if s.carrier.windows(2).any(|w| w[0] >= w[1]) || s.carrier.iter().any(|&e| e >= n) {
                return Err(Error::Structural(format!(
                    "{label} carrier must be a sorted list of distinct element indices"
                )));
            }
            if s.zero >= n || s.one >= n {
                return Err(Error::Structural(format!("{label} constants out of range")));
            }
        }
        if self.alpha.len() != n || self.alpha.iter().any(|&e| e >= n) {
            return Err(Error::Structural(
                "alpha must map every element to an element".into(),
            ));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The same data read as a tied semiring.
    pub fn as_tied(&self) -> Self {
        CoupledStructure {
            kind: CoupledKind::Tied,
            ..self.clone()
        }
    }

    /// `x <= y` in the lattice `(A, first.add, second.add)`.
    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.first.add.get(x, y) == y
    }

    /// Component-wise equality ignoring `kind`.
    pub fn same_components(&self, other: &Self) -> bool {
        self.elements == other.elements
            && self.first == other.first
            && self.second == other.second
            && self.alpha == other.alpha
    }
}

/// Closure, both monoid laws, distributivity and annihilation.
pub fn check_semiring(s: &RoleMappedSemiring) -> CheckReport {
    let dom = &s.carrier;
    let inside = membership(s.add.size(), dom);
    let mut r = CheckReport::new();
    let mut missing = Vec::new();
    for (role, c) in [("zero", s.zero), ("one", s.one)] {
        if !inside.get(c).copied().unwrap_or(false) {
            missing.push(Witness(vec![(role, c)]));
        }
    }
    r.push(Check::from_violations("constants_in_carrier", missing));
    r.push(Check::from_violations(
        "closed",
        scan2(dom, ["x", "y"], |x, y| {
            inside[s.add.get(x, y)] && inside[s.mul.get(x, y)]
        }),
    ));
    r.extend_prefixed("add", check_commutative_monoid_on(&s.add, s.zero, dom));
    r.extend_prefixed("mul", check_commutative_monoid_on(&s.mul, s.one, dom));
    r.push(Check::from_violations(
        "distributive",
        crate::report::scan3(dom, ["x", "y", "z"], |x, y, z| {
            s.mul.get(x, s.add.get(y, z)) == s.add.get(s.mul.get(x, y), s.mul.get(x, z))
        }),
    ));
    r.push(Check::from_violations(
        "annihilation",
        scan1(dom, "x", |x| s.mul.get(x, s.zero) == s.zero),
    ));
    r
}

fn membership(n: usize, carrier: &[ElementId]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &x in carrier {
        inside[x] = true;
    }
    inside
}

/// `α` as a homomorphism from `src` to `dst` over `src`'s carrier:
/// additions, multiplications and both constants are carried over.
fn homomorphism_checks(
    alpha: &[ElementId],
    src: &RoleMappedSemiring,
    dst: &RoleMappedSemiring,
    r: &mut CheckReport,
    prefix: &str,
) {
    let dom = &src.carrier;
    r.push(Check::from_violations(
        format!("{prefix}.add"),
        scan2(dom, ["x", "y"], |x, y| {
            alpha[src.add.get(x, y)] == dst.add.get(alpha[x], alpha[y])
        }),
    ));
    r.push(Check::from_violations(
        format!("{prefix}.mul"),
        scan2(dom, ["x", "y"], |x, y| {
            alpha[src.mul.get(x, y)] == dst.mul.get(alpha[x], alpha[y])
        }),
    ));
    let mut consts = Vec::new();
    if alpha[src.zero] != dst.zero {
        consts.push(Witness(vec![("zero", src.zero)]));
    }
    if alpha[src.one] != dst.one {
        consts.push(Witness(vec![("one", src.one)]));
    }
    r.push(Check::from_violations(
        format!("{prefix}.constants"),
        consts,
    ));
}

fn order_condition(c: &CoupledStructure, dom: &[ElementId]) -> Check {
    let top = c.first.one;
    Check::from_violations(
        "order_condition",
        scan2(dom, ["x", "y"], |x, y| {
            c.leq(x, y) == (c.second.mul.get(c.alpha[x], y) == top)
        }),
    )
}

fn common_checks(c: &CoupledStructure, r: &mut CheckReport) {
    r.extend_prefixed("first", check_semiring(&c.first));
    r.extend_prefixed("second", check_semiring(&c.second));
    r.extend_prefixed(
        "lattice",
        check_lattice_laws(&c.first.add, &c.second.add, &c.first.carrier),
    );
}

/// All conditions of a general coupled semiring: both semirings, the
/// lattice `(A, ∨, ∧)`, `α` an isomorphism, `α` an involution, and
/// `x <= y ⇔ α(x) ∗ y = 1`. Assumes the shape is valid.
pub fn check_general_coupled(c: &CoupledStructure) -> CheckReport {
    debug_assert!(c.validate_shape().is_ok());
    let mut r = CheckReport::new();
    let a = &c.first.carrier;
    common_checks(c, &mut r);

    let in_a = membership(c.size(), a);
    let in_b = membership(c.size(), &c.second.carrier);
    r.push(Check::from_violations(
        "carriers_equal",
        scan1(&full(c.size()), "x", |x| in_a[x] == in_b[x]),
    ));
    homomorphism_checks(&c.alpha, &c.first, &c.second, &mut r, "alpha_homomorphism");
    r.push(Check::from_violations(
        "alpha_maps_into_carrier",
        scan1(a, "x", |x| in_a[c.alpha[x]]),
    ));
    r.push(Check::from_violations(
        "alpha_injective",
        scan2(a, ["x", "y"], |x, y| x == y || c.alpha[x] != c.alpha[y]),
    ));
    r.push(Check::from_violations(
        "alpha_involution",
        scan1(a, "x", |x| c.alpha[c.alpha[x]] == x),
    ));
    r.push(order_condition(c, a));
    r
}

/// All conditions of a tied semiring: both semirings with `B ⊆ A`, the
/// lattice `(A, ∨, ∧)`, `α` a homomorphism from the first semiring onto the
/// second, `α|B` a homomorphism back, `α` an involution on `B`, and the
/// order condition over `B`.
pub fn check_tied(c: &CoupledStructure) -> CheckReport {
    debug_assert!(c.validate_shape().is_ok());
    let mut r = CheckReport::new();
    let (a, b) = (&c.first.carrier, &c.second.carrier);
    common_checks(c, &mut r);

    let in_a = membership(c.size(), a);
    let in_b = membership(c.size(), b);
    r.push(Check::from_violations(
        "carrier_subset",
        scan1(b, "x", |x| in_a[x]),
    ));
    r.push(Check::from_violations(
        "alpha_maps_into_second_carrier",
        scan1(a, "x", |x| in_b[c.alpha[x]]),
    ));
    r.push(Check::from_violations(
        "alpha_surjective",
        scan1(b, "y", |y| a.iter().any(|&x| c.alpha[x] == y)),
    ));
    homomorphism_checks(&c.alpha, &c.first, &c.second, &mut r, "alpha_homomorphism");
    let restricted = RoleMappedSemiring {
        carrier: b.clone(),
        ..c.second.clone()
    };
    homomorphism_checks(
        &c.alpha,
        &restricted,
        &c.first,
        &mut r,
        "alpha_restricted_homomorphism",
    );
    r.push(Check::from_violations(
        "alpha_involution",
        scan1(b, "x", |x| c.alpha[c.alpha[x]] == x),
    ));
    r.push(order_condition(c, b));
    r
}

/// Residuated lattice with the double negation law to general coupled
/// semiring: `((L, ∨, ⊗, 0, 1), (L, ∧, ⊕, 1, 0), ¬)`.
pub fn couple(rl: &ResiduatedLattice) -> Result<CoupledStructure> {
    let neg = rl.neg();
    if let Some(x) = (0..rl.size()).find(|&x| neg[neg[x]] != x) {
        return Err(Error::DnlRequired { witness: x });
    }
    let carrier = full(rl.size());
    Ok(CoupledStructure {
        elements: rl.elements().to_vec(),
        first: RoleMappedSemiring {
            carrier: carrier.clone(),
            add: rl.join().clone(),
            mul: rl.otimes().clone(),
            zero: rl.bottom(),
            one: rl.top(),
        },
        second: RoleMappedSemiring {
            carrier,
            add: rl.meet().clone(),
            mul: rl.oplus().clone(),
            zero: rl.top(),
            one: rl.bottom(),
        },
        alpha: neg.to_vec(),
        kind: CoupledKind::General,
    })
}

/// The residuated lattice on `carrier` with `x → y = α(x) ∗ y`.
fn assemble(c: &CoupledStructure, carrier: &[ElementId]) -> Result<ResiduatedLattice> {
    let restrict = |op: &'static str, t: &BinOpTable| {
        t.restrict(carrier)
            .map_err(|(x, y)| Error::ClosureFails { op, x, y })
    };
    let join = restrict("join", &c.first.add)?;
    let meet = restrict("meet", &c.second.add)?;
    let otimes = restrict("multiplication", &c.first.mul)?;
    let ambient_arrow = BinOpTable::from_fn(c.size(), |x, y| c.second.mul.get(c.alpha[x], y));
    let arrow = restrict("residuum", &ambient_arrow)?;
    let pos = position_map(c.size(), carrier);
    let (bottom, top) = match (pos[c.first.zero], pos[c.first.one]) {
        (Some(b), Some(t)) => (b, t),
        _ => return Err(Error::Structural("carrier misses a bound".into())),
    };
    let names = carrier.iter().map(|&e| c.elements[e].clone()).collect();
    let lattice = BoundedLattice::from_parts(names, join, meet, bottom, top)?;
    ResiduatedLattice::from_parts(lattice, otimes, arrow)
}

/// General coupled semiring to residuated lattice: `x → y := α(x) ∗ y`.
pub fn decouple(c: &CoupledStructure) -> Result<ResiduatedLattice> {
    c.validate_shape()?;
    let report = check_general_coupled(c);
    if !report.passed() {
        return Err(Error::InvalidCoupled(Box::new(report)));
    }
    assemble(c, &c.first.carrier)
}

fn compare_tables(name: &str, lhs: &BinOpTable, rhs: &BinOpTable, map: &[ElementId]) -> Check {
    let dom = full(lhs.size());
    let diffs = scan2(&dom, ["x", "y"], |x, y| lhs.get(x, y) == rhs.get(x, y))
        .into_iter()
        .map(|w| Witness(w.0.into_iter().map(|(r, v)| (r, map[v])).collect()))
        .collect();
    Check::from_violations(name, diffs)
}

/// Coupling then decoupling returns the original algebra, entry for entry.
pub fn roundtrip_lattice(rl: &ResiduatedLattice) -> Result<CheckReport> {
    let back = decouple(&couple(rl)?)?;
    let id = full(rl.size());
    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        "elements_preserved",
        scan1(&id, "x", |x| back.elements()[x] == rl.elements()[x]),
    ));
    let mut bounds = Vec::new();
    if back.bottom() != rl.bottom() {
        bounds.push(Witness(vec![("bottom", rl.bottom())]));
    }
    if back.top() != rl.top() {
        bounds.push(Witness(vec![("top", rl.top())]));
    }
    r.push(Check::from_violations("bounds_preserved", bounds));
    r.push(compare_tables(
        "join_preserved",
        back.join(),
        rl.join(),
        &id,
    ));
    r.push(compare_tables(
        "meet_preserved",
        back.meet(),
        rl.meet(),
        &id,
    ));
    r.push(compare_tables(
        "otimes_preserved",
        back.otimes(),
        rl.otimes(),
        &id,
    ));
    r.push(compare_tables(
        "arrow_preserved",
        back.arrow(),
        rl.arrow(),
        &id,
    ));
    Ok(r)
}

/// Decoupling then coupling returns the original structure, entry for entry.
pub fn roundtrip_coupled(c: &CoupledStructure) -> Result<CheckReport> {
    let rl = decouple(c)?;
    let back = couple(&rl)?;
    let carrier = &c.first.carrier;
    let restricted = |t: &BinOpTable| {
        t.restrict(carrier).map_err(|(x, y)| Error::ClosureFails {
            op: "structure",
            x,
            y,
        })
    };
    let mut r = CheckReport::new();
    for (name, lhs, rhs) in [
        ("first.add_preserved", &back.first.add, &c.first.add),
        ("first.mul_preserved", &back.first.mul, &c.first.mul),
        ("second.add_preserved", &back.second.add, &c.second.add),
        ("second.mul_preserved", &back.second.mul, &c.second.mul),
    ] {
        r.push(compare_tables(name, lhs, &restricted(rhs)?, carrier));
    }
    let mut consts = Vec::new();
    for (role, got, want) in [
        ("first.zero", back.first.zero, c.first.zero),
        ("first.one", back.first.one, c.first.one),
        ("second.zero", back.second.zero, c.second.zero),
        ("second.one", back.second.one, c.second.one),
    ] {
        if carrier[got] != want {
            consts.push(Witness(vec![(role, want)]));
        }
    }
    r.push(Check::from_violations("constants_preserved", consts));
    r.push(Check::from_violations(
        "alpha_preserved",
        scan1(&full(carrier.len()), "x", |i| {
            carrier[back.alpha[i]] == c.alpha[carrier[i]]
        })
        .into_iter()
        .map(|w| Witness(vec![("x", carrier[w.0[0].1])]))
        .collect(),
    ));
    Ok(r)
}

/// Checks the three hypotheses needed to build a tied semiring from `A`
/// and returns `¬A` (sorted) when they hold.
pub fn tie_preconditions(rl: &ResiduatedLattice, a: &[ElementId]) -> Result<Vec<ElementId>> {
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    if a_sorted.iter().any(|&x| x >= rl.size()) {
        return Err(Error::Structural("subset element out of range".into()));
    }
    if !subuniverse::is_subuniverse(rl, &a_sorted) {
        return Err(Error::NotSubuniverse(a_sorted));
    }
    let neg = rl.neg();
    let mut neg_a: Vec<_> = a_sorted.iter().map(|&x| neg[x]).collect();
    neg_a.sort_unstable();
    neg_a.dedup();
    if !subuniverse::is_subuniverse(rl, &neg_a) {
        return Err(Error::NegNotSubuniverse(a_sorted));
    }
    let (t, o) = (rl.otimes(), rl.oplus());
    for &x in &a_sorted {
        for &y in &a_sorted {
            if neg[t.get(x, y)] != o.get(neg[x], neg[y]) {
                return Err(Error::DeMorganFails { x, y });
            }
        }
    }
    Ok(neg_a)
}

/// Tied semiring `((A, ∨, ⊗, 0, 1), (¬A, ∧, ⊕, 1, 0), ¬)` for a suitable
/// subuniverse `A`.
pub fn tie(rl: &ResiduatedLattice, a: &[ElementId]) -> Result<CoupledStructure> {
    let neg_a = tie_preconditions(rl, a)?;
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    a_sorted.dedup();
    Ok(CoupledStructure {
        elements: rl.elements().to_vec(),
        first: RoleMappedSemiring {
            carrier: a_sorted,
            add: rl.join().clone(),
            mul: rl.otimes().clone(),
            zero: rl.bottom(),
            one: rl.top(),
        },
        second: RoleMappedSemiring {
            carrier: neg_a,
            add: rl.meet().clone(),
            mul: rl.oplus().clone(),
            zero: rl.top(),
            one: rl.bottom(),
        },
        alpha: rl.neg().to_vec(),
        kind: CoupledKind::Tied,
    })
}

/// Tied semiring to residuated lattice on `B` with `x → y := α(x) ∗ y`.
/// Closure of `B` under `∨` and `·` is verified rather than assumed.
pub fn untie(c: &CoupledStructure) -> Result<ResiduatedLattice> {
    c.validate_shape()?;
    let report = check_tied(c);
    if !report.passed() {
        return Err(Error::InvalidTied(Box::new(report)));
    }
    assemble(c, &c.second.carrier)
}

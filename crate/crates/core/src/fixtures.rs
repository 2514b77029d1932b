//! Reference algebras used throughout the tests and shipped by the CLI.
//!
//! Tables are transcribed exactly as published. Negation and `⊕` are never
//! stored; they are always derived from `⊗` and `→`.

use crate::lattice::BoundedLattice;
use crate::residuated::ResiduatedLattice;
use crate::table::{BinOpTable, ElementId};

/// Element indices of [`ex2`].
pub mod ex2_names {
    pub const ZERO: usize = 0;
    pub const A: usize = 1;
    pub const B: usize = 2;
    pub const C: usize = 3;
    pub const D: usize = 4;
    pub const ONE: usize = 5;
}

/// Element indices of [`ex1`].
pub mod ex1_names {
    pub const ZERO: usize = 0;
    pub const A: usize = 1;
    pub const NOT_A: usize = 2;
    pub const B: usize = 3;
    pub const NOT_B: usize = 4;
    pub const ONE: usize = 5;
}

fn names(tokens: &[&str]) -> Vec<String> {
    tokens.iter().map(|s| s.to_string()).collect()
}

fn table<const N: usize>(rows: [[ElementId; N]; N]) -> BinOpTable {
    BinOpTable::from_rows(&rows).expect("fixture table is square")
}

/// Builds a bounded lattice from an order relation given as `leq(a, b)`.
/// Panics if the order is not a lattice; meant for hand-written fixtures.
pub fn lattice_from_order(
    tokens: &[&str],
    leq: impl Fn(ElementId, ElementId) -> bool,
) -> BoundedLattice {
    let n = tokens.len();
    let bound = |a: ElementId, b: ElementId, upper: bool| {
        let cands: Vec<_> = (0..n)
            .filter(|&c| {
                if upper {
                    leq(a, c) && leq(b, c)
                } else {
                    leq(c, a) && leq(c, b)
                }
            })
            .collect();
        *cands
            .iter()
            .find(|&&c| {
                cands
                    .iter()
                    .all(|&d| if upper { leq(c, d) } else { leq(d, c) })
            })
            .expect("order is a lattice")
    };
    let join = BinOpTable::from_fn(n, |a, b| bound(a, b, true));
    let meet = BinOpTable::from_fn(n, |a, b| bound(a, b, false));
    let bottom = (0..n).find(|&x| (0..n).all(|y| leq(x, y))).expect("bottom");
    let top = (0..n).find(|&x| (0..n).all(|y| leq(y, x))).expect("top");
    BoundedLattice::new(names(tokens), join, meet, bottom, top).expect("valid lattice")
}

/// `n`-element chain `0 < 1 < … < n-1`.
pub fn chain(tokens: &[&str]) -> BoundedLattice {
    lattice_from_order(tokens, |a, b| a <= b)
}

/// The four-element Boolean lattice `0, x, y, 1`.
pub fn diamond_lattice() -> BoundedLattice {
    lattice_from_order(&["0", "x", "y", "1"], |a, b| a == b || a == 0 || b == 3)
}

/// Six-element lattice `0 < a < {b, c} < d < 1` with `b`, `c` incomparable.
pub fn ex2_lattice() -> BoundedLattice {
    use ex2_names::*;
    let rank = |x: ElementId| match x {
        ZERO => 0,
        A => 1,
        B | C => 2,
        D => 3,
        _ => 4,
    };
    lattice_from_order(&["0", "a", "b", "c", "d", "1"], |x, y| {
        x == y || rank(x) < rank(y)
    })
}

/// A residuated lattice with the double negation law that is neither
/// prelinear nor divisible, hence not an MV-algebra.
pub fn ex2() -> ResiduatedLattice {
    let otimes = table([
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 2, 0, 2, 2],
        [0, 0, 0, 3, 3, 3],
        [0, 0, 2, 3, 4, 4],
        [0, 1, 2, 3, 4, 5],
    ]);
    ResiduatedLattice::new(ex2_lattice(), otimes, ex2_printed_arrow()).expect("fixture is valid")
}

pub fn ex2_printed_arrow() -> BinOpTable {
    table([
        [5, 5, 5, 5, 5, 5],
        [4, 5, 5, 5, 5, 5],
        [3, 3, 5, 3, 5, 5],
        [2, 2, 2, 5, 5, 5],
        [1, 1, 2, 3, 5, 5],
        [0, 1, 2, 3, 4, 5],
    ])
}

pub fn ex2_printed_neg() -> Vec<ElementId> {
    vec![5, 4, 3, 2, 1, 0]
}

/// The published `⊕` table of [`ex2`], including its entry `b ⊕ c = c`.
pub fn ex2_printed_oplus() -> BinOpTable {
    table([
        [0, 1, 2, 3, 4, 5],
        [1, 1, 2, 3, 5, 5],
        [2, 2, 2, 3, 5, 5],
        [3, 3, 5, 3, 5, 5],
        [4, 5, 5, 5, 5, 5],
        [5, 5, 5, 5, 5, 5],
    ])
}

/// Three-element Gödel chain `0 < a < 1` with `⊗ = ∧`; fails double negation.
pub fn ex3() -> ResiduatedLattice {
    let lattice = chain(&["0", "a", "1"]);
    let otimes = lattice.meet().clone();
    ResiduatedLattice::new(lattice, otimes, ex3_printed_arrow()).expect("fixture is valid")
}

pub fn ex3_printed_arrow() -> BinOpTable {
    table([[2, 2, 2], [0, 2, 2], [0, 1, 2]])
}

pub fn ex3_printed_oplus() -> BinOpTable {
    table([[0, 2, 2], [2, 2, 2], [2, 2, 2]])
}

/// The six-element MV-algebra `{0, a, ¬a, b, ¬b, 1}` (isomorphic to the
/// product of the two- and three-element Łukasiewicz chains).
pub fn ex1() -> ResiduatedLattice {
    let join = table([
        [0, 1, 2, 3, 4, 5],
        [1, 1, 5, 4, 4, 5],
        [2, 5, 2, 2, 5, 5],
        [3, 4, 2, 3, 4, 5],
        [4, 4, 5, 4, 4, 5],
        [5, 5, 5, 5, 5, 5],
    ]);
    let meet = table([
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 1, 1],
        [0, 0, 2, 3, 3, 2],
        [0, 0, 3, 3, 3, 3],
        [0, 1, 3, 3, 4, 4],
        [0, 1, 2, 3, 4, 5],
    ]);
    let otimes = table([
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 1, 1],
        [0, 0, 2, 3, 3, 2],
        [0, 0, 3, 0, 0, 3],
        [0, 1, 3, 0, 1, 4],
        [0, 1, 2, 3, 4, 5],
    ]);
    let arrow = table([
        [5, 5, 5, 5, 5, 5],
        [2, 5, 2, 2, 5, 5],
        [1, 1, 5, 4, 4, 5],
        [4, 4, 5, 5, 5, 5],
        [3, 4, 2, 2, 5, 5],
        [0, 1, 2, 3, 4, 5],
    ]);
    let lattice = BoundedLattice::new(names(&["0", "a", "¬a", "b", "¬b", "1"]), join, meet, 0, 5)
        .expect("fixture lattice is valid");
    ResiduatedLattice::new(lattice, otimes, arrow).expect("fixture is valid")
}

/// The published `⊕` of the basic algebra underlying [`ex1`].
pub fn ex1_printed_oplus() -> BinOpTable {
    table([
        [0, 1, 2, 3, 4, 5],
        [1, 1, 5, 4, 4, 5],
        [2, 5, 2, 2, 5, 5],
        [3, 4, 2, 2, 5, 5],
        [4, 4, 5, 5, 5, 5],
        [5, 5, 5, 5, 5, 5],
    ])
}

pub fn ex1_printed_neg() -> Vec<ElementId> {
    vec![5, 2, 1, 4, 3, 0]
}

/// Two-element Boolean algebra.
pub fn boolean2() -> ResiduatedLattice {
    let lattice = chain(&["0", "1"]);
    let otimes = lattice.meet().clone();
    ResiduatedLattice::from_otimes(lattice, otimes).expect("valid")
}

/// Three-element Łukasiewicz chain: `a ⊗ a = 0`, `¬a = a`, `a ⊕ a = 1`.
pub fn lukasiewicz3() -> ResiduatedLattice {
    let lattice = chain(&["0", "a", "1"]);
    let otimes = table([[0, 0, 0], [0, 0, 1], [0, 1, 2]]);
    ResiduatedLattice::from_otimes(lattice, otimes).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_negations_match_published_tables() {
        assert_eq!(ex2().neg(), ex2_printed_neg().as_slice());
        assert_eq!(ex1().neg(), ex1_printed_neg().as_slice());
        assert_eq!(ex3().neg(), &[2, 0, 0]);
    }

    #[test]
    fn published_oplus_tables_agree_except_one_entry() {
        assert_eq!(ex1().oplus(), &ex1_printed_oplus());
        assert_eq!(ex3().oplus(), &ex3_printed_oplus());
        let derived = ex2().oplus().clone();
        let printed = ex2_printed_oplus();
        let diffs: Vec<_> = (0..6)
            .flat_map(|x| (0..6).map(move |y| (x, y)))
            .filter(|&(x, y)| derived.get(x, y) != printed.get(x, y))
            .collect();
        assert_eq!(diffs, vec![(ex2_names::B, ex2_names::C)]);
        assert_eq!(derived.get(ex2_names::B, ex2_names::C), ex2_names::ONE);
    }

    #[test]
    fn lukasiewicz_chain_values() {
        let l = lukasiewicz3();
        assert_eq!(l.neg(), &[2, 1, 0]);
        assert_eq!(l.oplus().get(1, 1), 2);
    }
}

use crate::lattice::BoundedLattice;
use crate::residuated::derive_arrow;
use crate::table::{BinOpTable, ElementId};

const UNSET: usize = usize::MAX;

/// Every `⊗` on `lattice` that is commutative, associative, has the top as
/// unit and admits a residuum. Tables come back in lexicographic order.
///
/// Border entries are forced (`x ⊗ 1 = x`, `x ⊗ 0 = 0`); the upper triangle
/// over interior elements is filled by backtracking, with candidates bounded
/// by `x ∧ y`, and each assignment is checked for monotonicity and for
/// associativity on already defined triples. Residuability is tested on
/// complete tables.
pub fn enumerate_residuated(lattice: &BoundedLattice) -> Vec<BinOpTable> {
    let n = lattice.size();
    let (bottom, top) = (lattice.bottom(), lattice.top());
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        for (a, b) in [(x, top), (top, x)] {
            t[a * n + b] = x;
        }
        for (a, b) in [(x, bottom), (bottom, x)] {
            t[a * n + b] = bottom;
        }
    }
    let interior: Vec<_> = (0..n).filter(|&x| x != bottom && x != top).collect();
    let cells: Vec<(ElementId, ElementId)> = interior
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| interior[i..].iter().map(move |&y| (x, y)))
        .collect();
    let mut out = Vec::new();
    let mut search = Search {
        lattice,
        n,
        cells: &cells,
        table: t,
        out: &mut out,
    };
    search.fill(0);
    out.sort();
    out
}

struct Search<'a> {
    lattice: &'a BoundedLattice,
    n: usize,
    cells: &'a [(ElementId, ElementId)],
    table: Vec<usize>,
    out: &'a mut Vec<BinOpTable>,
}

impl Search<'_> {
    #[inline]
    fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    fn fill(&mut self, k: usize) {
        if k == self.cells.len() {
            let table = BinOpTable::from_fn(self.n, |x, y| self.get(x, y));
            if derive_arrow(self.lattice, &table).is_ok() {
                self.out.push(table);
            }
            return;
        }
        let (x, y) = self.cells[k];
        let cap = self.lattice.meet().get(x, y);
        for v in 0..self.n {
            if !self.lattice.leq(v, cap) {
                continue;
            }
            self.table[x * self.n + y] = v;
            self.table[y * self.n + x] = v;
            if self.monotone_at(x, y, v) && self.associative_so_far() {
                self.fill(k + 1);
            }
        }
        self.table[x * self.n + y] = UNSET;
        self.table[y * self.n + x] = UNSET;
    }

    fn monotone_at(&self, x: usize, y: usize, v: usize) -> bool {
        let l = self.lattice;
        for a in 0..self.n {
            for b in 0..self.n {
                let w = self.get(a, b);
                if w == UNSET {
                    continue;
                }
                if l.leq(a, x) && l.leq(b, y) && !l.leq(w, v) {
                    return false;
                }
                if l.leq(x, a) && l.leq(y, b) && !l.leq(v, w) {
                    return false;
                }
            }
        }
        true
    }

    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let (l, r) = (self.get(xy, z), self.get(x, yz));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chains_and_diamond() {
        let two = fixtures::chain(&["0", "1"]);
        assert_eq!(enumerate_residuated(&two).len(), 1);
        let three = fixtures::chain(&["0", "a", "1"]);
        let tables = enumerate_residuated(&three);
        assert_eq!(tables.len(), 2);
        let aa: Vec<_> = tables.iter().map(|t| t.get(1, 1)).collect();
        assert_eq!(aa, vec![0, 1]);
        let diamond = fixtures::diamond_lattice();
        let tables = enumerate_residuated(&diamond);
        assert_eq!(tables, vec![diamond.meet().clone()]);
    }

    #[test]
    fn reference_product_is_found() {
        let rl = fixtures::ex2();
        assert!(enumerate_residuated(rl.lattice()).contains(rl.otimes()));
        let mv = fixtures::ex1();
        assert!(enumerate_residuated(mv.lattice()).contains(mv.otimes()));
    }
}

use std::fmt;

use itertools::Itertools;

use crate::lattice::BoundedLattice;
use crate::residuated::ResiduatedLattice;
use crate::table::{BinOpTable, ElementId};

/// Size byte followed by the join, meet and `⊗` tables under the
/// lexicographically least relabeling that sends bottom to `0` and top to
/// `n - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(pub Vec<u8>);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// `0`, then `a`, `b`, … for interior elements, then `1`.
pub fn generic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                ((b'a' + (i as u8 - 1) % 26) as char).to_string()
            }
        })
        .collect()
}

/// Every relabeling `perm[old] = new` with bottom first and top last.
/// Bounds are order-definable, so no isomorphism can move them.
fn bound_fixing_perms(n: usize, bottom: ElementId, top: ElementId) -> Vec<Vec<ElementId>> {
    let interior: Vec<_> = (0..n).filter(|&x| x != bottom && x != top).collect();
    let slots: Vec<_> = (1..n.saturating_sub(1)).collect();
    let k = interior.len();
    slots
        .iter()
        .copied()
        .permutations(k)
        .map(|targets| {
            let mut perm = vec![0; n];
            perm[bottom] = 0;
            perm[top] = n - 1;
            for (&src, dst) in interior.iter().zip(targets) {
                perm[src] = dst;
            }
            perm
        })
        .collect()
}

fn min_relabeling(
    n: usize,
    bottom: ElementId,
    top: ElementId,
    tables: &[&BinOpTable],
) -> (Vec<u8>, Vec<ElementId>) {
    let mut best: Option<(Vec<u8>, Vec<ElementId>)> = None;
    for perm in bound_fixing_perms(n, bottom, top) {
        let mut bytes = vec![n as u8];
        for t in tables {
            bytes.extend_from_slice(t.relabel(&perm).as_bytes());
        }
        if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            best = Some((bytes, perm));
        }
    }
    best.expect("at least one relabeling")
}

pub fn canonical_key(rl: &ResiduatedLattice) -> CanonicalKey {
    let (bytes, _) = min_relabeling(
        rl.size(),
        rl.bottom(),
        rl.top(),
        &[rl.join(), rl.meet(), rl.otimes()],
    );
    CanonicalKey(bytes)
}

/// The canonical key together with the algebra relabeled into that form
/// and renamed with [`generic_names`].
pub fn canonical_form(rl: &ResiduatedLattice) -> (CanonicalKey, ResiduatedLattice) {
    let n = rl.size();
    let (bytes, perm) = min_relabeling(
        n,
        rl.bottom(),
        rl.top(),
        &[rl.join(), rl.meet(), rl.otimes()],
    );
    (CanonicalKey(bytes), rl.relabel(&perm, generic_names(n)))
}

/// Canonical key of a bare lattice (join and meet only) and its canonical relabeling.
pub fn lattice_key(l: &BoundedLattice) -> (CanonicalKey, BoundedLattice) {
    let n = l.size();
    let (bytes, perm) = min_relabeling(n, l.bottom(), l.top(), &[l.join(), l.meet()]);
    (CanonicalKey(bytes), l.relabel(&perm, generic_names(n)))
}

/// Backtracking search for a bijection preserving join, meet and `⊗`.
/// Independent of [`canonical_key`].
pub fn is_isomorphic(a: &ResiduatedLattice, b: &ResiduatedLattice) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.bottom()] = b.bottom();
    used[b.bottom()] = true;
    if a.top() != a.bottom() {
        if b.top() == b.bottom() {
            return false;
        }
        map[a.top()] = b.top();
        used[b.top()] = true;
    }
    let order: Vec<_> = (0..n).filter(|&x| map[x] == usize::MAX).collect();
    extend(a, b, &order, 0, &mut map, &mut used)
}

fn consistent(a: &ResiduatedLattice, b: &ResiduatedLattice, map: &[usize]) -> bool {
    let n = a.size();
    let pairs = [
        (a.join(), b.join()),
        (a.meet(), b.meet()),
        (a.otimes(), b.otimes()),
    ];
    for x in 0..n {
        if map[x] == usize::MAX {
            continue;
        }
        for y in 0..n {
            if map[y] == usize::MAX {
                continue;
            }
            for (ta, tb) in &pairs {
                let v = map[ta.get(x, y)];
                if v != usize::MAX && v != tb.get(map[x], map[y]) {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    a: &ResiduatedLattice,
    b: &ResiduatedLattice,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return consistent(a, b, map);
    }
    let x = order[depth];
    for y in 0..a.size() {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map) && extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn swapping_incomparable_pair_gives_isomorphic_algebra() {
        let rl = fixtures::ex2();
        let perm = [0, 1, 3, 2, 4, 5];
        let names = ["0", "a", "c", "b", "d", "1"].map(String::from).to_vec();
        let swapped = rl.relabel(&perm, names);
        // b <-> c is an automorphism
        assert_eq!(swapped.otimes(), rl.otimes());
        assert!(is_isomorphic(&rl, &swapped));
        assert_eq!(canonical_key(&rl), canonical_key(&swapped));

        let perm = [0, 4, 2, 1, 3, 5];
        let names = ["0", "c", "b", "d", "a", "1"].map(String::from).to_vec();
        let shuffled = rl.relabel(&perm, names);
        assert_ne!(shuffled.otimes(), rl.otimes());
        assert!(is_isomorphic(&rl, &shuffled));
        assert_eq!(canonical_key(&rl), canonical_key(&shuffled));
    }

    #[test]
    fn gödel_and_łukasiewicz_chains_differ() {
        let g = fixtures::ex3();
        let l = fixtures::lukasiewicz3();
        assert!(!is_isomorphic(&g, &l));
        assert_ne!(canonical_key(&g), canonical_key(&l));
        assert!(is_isomorphic(&g, &g));
    }

    #[test]
    fn generic_names_shape() {
        assert_eq!(generic_names(5), vec!["0", "a", "b", "c", "1"]);
        assert_eq!(generic_names(2), vec!["0", "1"]);
    }

    #[test]
    fn bounds_move_to_the_ends() {
        // the reference algebra relabeled so that top sits at index 0
        let rl = fixtures::ex2();
        let perm = [5, 1, 2, 3, 4, 0];
        let moved = rl.relabel(
            &perm,
            ["1", "a", "b", "c", "d", "0"].map(String::from).to_vec(),
        );
        let (key, canon) = canonical_form(&moved);
        assert_eq!(key, canonical_key(&rl));
        assert_eq!(canon.bottom(), 0);
        assert_eq!(canon.top(), 5);
    }
}

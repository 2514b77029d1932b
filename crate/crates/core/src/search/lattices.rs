use std::collections::BTreeMap;

use super::canon::{generic_names, lattice_key};
use super::{MAX_SIZE, MIN_SIZE};
use crate::error::{Error, Result};
use crate::lattice::BoundedLattice;
use crate::table::BinOpTable;

/// All bounded lattices with `n` elements up to isomorphism, in canonical
/// key order.
///
/// Partial orders are generated on naturally labeled carriers (`x < y`
/// only if `x < y` as indices, bottom `0`, top `n - 1`), which reaches every
/// isomorphism class; the ones where every pair has a least upper bound are
/// kept and deduplicated by canonical key.
pub fn enumerate_bounded_lattices(n: usize) -> Result<Vec<BoundedLattice>> {
    if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    let interior_pairs: Vec<(usize, usize)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut found = BTreeMap::new();
    for mask in 0u32..(1 << interior_pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true; // 0 <= x
            leq[x * n + n - 1] = true; // x <= top
        }
        for (bit, &(i, j)) in interior_pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        if !transitive(&leq, n) {
            continue;
        }
        let Some(lattice) = lattice_from_leq(&leq, n) else {
            continue;
        };
        let (key, canon) = lattice_key(&lattice);
        found.entry(key).or_insert(canon);
    }
    Ok(found.into_values().collect())
}

fn transitive(leq: &[bool], n: usize) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| !leq[x * n + y] || (0..n).all(|z| !leq[y * n + z] || leq[x * n + z]))
    })
}

fn lattice_from_leq(leq: &[bool], n: usize) -> Option<BoundedLattice> {
    let le = |a: usize, b: usize| leq[a * n + b];
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let ub: Vec<_> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            join[a][b] = *ub.iter().find(|&&c| ub.iter().all(|&d| le(c, d)))?;
            let lb: Vec<_> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            meet[a][b] = *lb.iter().find(|&&c| lb.iter().all(|&d| le(d, c)))?;
        }
    }
    let join = BinOpTable::from_rows(&join).ok()?;
    let meet = BinOpTable::from_rows(&meet).ok()?;
    BoundedLattice::new(generic_names(n), join, meet, 0, n - 1).ok()
}

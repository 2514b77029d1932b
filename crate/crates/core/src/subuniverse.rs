//! Subuniverses of a residuated lattice: subsets containing both bounds and
//! closed under `∨`, `∧`, `⊗`, `→`.

use crate::coupled::tie_preconditions;
use crate::error::{Error, Result};
use crate::residuated::ResiduatedLattice;
use crate::table::ElementId;

/// Largest carrier for which subset scans are allowed by default.
pub const DEFAULT_CAP: usize = 8;

/// A sorted carrier closed under the full signature.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subuniverse {
    carrier: Vec<ElementId>,
}

impl Subuniverse {
    pub fn carrier(&self) -> &[ElementId] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.carrier.binary_search(&x).is_ok()
    }
}

fn closed_under_all(rl: &ResiduatedLattice, inside: &[bool], carrier: &[ElementId]) -> bool {
    let ops = [rl.join(), rl.meet(), rl.otimes(), rl.arrow()];
    carrier.iter().all(|&x| {
        carrier
            .iter()
            .all(|&y| ops.iter().all(|op| inside[op.get(x, y)]))
    })
}

/// Whether `set` contains both bounds and is closed under every operation.
pub fn is_subuniverse(rl: &ResiduatedLattice, set: &[ElementId]) -> bool {
    let mut inside = vec![false; rl.size()];
    for &x in set {
        inside[x] = true;
    }
    inside[rl.bottom()] && inside[rl.top()] && closed_under_all(rl, &inside, set)
}

/// Smallest subuniverse containing `seed`.
pub fn closure(rl: &ResiduatedLattice, seed: &[ElementId]) -> Subuniverse {
    let n = rl.size();
    let ops = [rl.join(), rl.meet(), rl.otimes(), rl.arrow()];
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    for &x in seed.iter().chain([rl.bottom(), rl.top()].iter()) {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    // every new element is combined with all earlier ones, so one pass suffices
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for op in &ops {
                for v in [op.get(x, y), op.get(y, x)] {
                    if !inside[v] {
                        inside[v] = true;
                        members.push(v);
                    }
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Subuniverse { carrier: members }
}

fn check_cap(rl: &ResiduatedLattice, cap: usize) -> Result<()> {
    if rl.size() > cap || rl.size() > 16 {
        Err(Error::CapExceeded {
            size: rl.size(),
            cap: cap.min(16),
        })
    } else {
        Ok(())
    }
}

/// All subuniverses, ordered by size and then lexicographically, found by
/// scanning every subset that contains the bounds.
pub fn enumerate_subuniverses(rl: &ResiduatedLattice, cap: usize) -> Result<Vec<Subuniverse>> {
    check_cap(rl, cap)?;
    let n = rl.size();
    let forced = (1u32 << rl.bottom()) | (1u32 << rl.top());
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask & forced != forced {
            continue;
        }
        let carrier: Vec<_> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let inside: Vec<_> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        if closed_under_all(rl, &inside, &carrier) {
            out.push(Subuniverse { carrier });
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.carrier.cmp(&b.carrier))
    });
    Ok(out)
}

/// `{¬x : x ∈ L}`, verified against the fixed points of `¬¬`.
pub fn neg_fixed(rl: &ResiduatedLattice) -> Result<Vec<ElementId>> {
    let neg = rl.neg();
    let mut image: Vec<_> = neg.to_vec();
    image.sort_unstable();
    image.dedup();
    for x in 0..rl.size() {
        let fixed = neg[neg[x]] == x;
        if fixed != image.binary_search(&x).is_ok() {
            return Err(Error::NegImageMismatch(x));
        }
    }
    Ok(image)
}

/// Subuniverses `A` for which a tied semiring can be built: `¬A` is a
/// subuniverse and `¬(x ⊗ y) = ¬x ⊕ ¬y` on `A`.
pub fn find_tieable(rl: &ResiduatedLattice, cap: usize) -> Result<Vec<Subuniverse>> {
    Ok(enumerate_subuniverses(rl, cap)?
        .into_iter()
        .filter(|s| tie_preconditions(rl, &s.carrier).is_ok())
        .collect())
}

//! Identity suite that every residuated lattice satisfies, plus the
//! identities that additionally need the double negation law.

use crate::report::{full, scan1, scan2, scan3, Check, CheckReport};
use crate::residuated::ResiduatedLattice;

/// Names of the thirteen checks, in report order.
pub const SUITE: [&str; 13] = [
    "order_via_residuum",
    "residuum_into_top",
    "otimes_bottom_absorbing",
    "otimes_distributes_over_join",
    "residuum_triple",
    "triple_negation",
    "negation_of_bottom",
    "negation_of_top",
    "de_morgan_join",
    "residuum_via_negation",
    "otimes_via_oplus",
    "de_morgan_meet",
    "residuum_via_oplus",
];

/// Runs the suite. The last four identities hold only under the double
/// negation law; they are marked skipped when it fails.
pub fn verify_lemma_suite(rl: &ResiduatedLattice) -> CheckReport {
    let dom = full(rl.size());
    let (j, m, t, a, o) = (rl.join(), rl.meet(), rl.otimes(), rl.arrow(), rl.oplus());
    let neg = rl.neg();
    let (zero, one) = (rl.bottom(), rl.top());
    let xy = ["x", "y"];

    let mut r = CheckReport::new();
    r.push(Check::from_violations(
        SUITE[0],
        scan2(&dom, xy, |x, y| rl.leq(x, y) == (a.get(x, y) == one)),
    ));
    r.push(Check::from_violations(
        SUITE[1],
        scan1(&dom, "x", |x| a.get(x, one) == one),
    ));
    r.push(Check::from_violations(
        SUITE[2],
        scan1(&dom, "x", |x| t.get(x, zero) == zero),
    ));
    r.push(Check::from_violations(
        SUITE[3],
        scan3(&dom, ["x", "y", "z"], |x, y, z| {
            t.get(x, j.get(y, z)) == j.get(t.get(x, y), t.get(x, z))
        }),
    ));
    r.push(Check::from_violations(
        SUITE[4],
        scan2(&dom, xy, |x, y| {
            a.get(x, y) == a.get(a.get(a.get(x, y), y), y)
        }),
    ));
    r.push(Check::from_violations(
        SUITE[5],
        scan1(&dom, "x", |x| neg[neg[neg[x]]] == neg[x]),
    ));
    r.push(Check::from_violations(
        SUITE[6],
        if neg[zero] == one {
            vec![]
        } else {
            scan1(&[zero], "x", |_| false)
        },
    ));
    r.push(Check::from_violations(
        SUITE[7],
        if neg[one] == zero {
            vec![]
        } else {
            scan1(&[one], "x", |_| false)
        },
    ));
    r.push(Check::from_violations(
        SUITE[8],
        scan2(&dom, xy, |x, y| neg[j.get(x, y)] == m.get(neg[x], neg[y])),
    ));

    if rl.satisfies_dnl() {
        r.push(Check::from_violations(
            SUITE[9],
            scan2(&dom, xy, |x, y| a.get(x, y) == neg[t.get(x, neg[y])]),
        ));
        r.push(Check::from_violations(
            SUITE[10],
            scan2(&dom, xy, |x, y| t.get(x, y) == neg[o.get(neg[x], neg[y])]),
        ));
        r.push(Check::from_violations(
            SUITE[11],
            scan2(&dom, xy, |x, y| neg[m.get(x, y)] == j.get(neg[x], neg[y])),
        ));
        r.push(Check::from_violations(
            SUITE[12],
            scan2(&dom, xy, |x, y| a.get(x, y) == o.get(neg[x], y)),
        ));
    } else {
        for name in &SUITE[9..] {
            r.push(Check::skipped(*name));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::report::Status;

    #[test]
    fn reference_fixtures() {
        for rl in [fixtures::ex2(), fixtures::ex1()] {
            let r = verify_lemma_suite(&rl);
            assert_eq!(r.checks.len(), 13);
            assert!(r.checks.iter().all(|c| c.status == Status::Pass));
        }
        let r = verify_lemma_suite(&fixtures::ex3());
        let statuses: Vec<_> = r.checks.iter().map(|c| c.status).collect();
        assert_eq!(&statuses[..9], &[Status::Pass; 9]);
        assert_eq!(&statuses[9..], &[Status::Skipped; 4]);
    }

    #[test]
    fn names_follow_suite_order() {
        let r = verify_lemma_suite(&fixtures::boolean2());
        let names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, SUITE);
    }

    #[test]
    fn broken_residuum_is_caught() {
        let rl = fixtures::ex2();
        let mut arrow = rl.arrow().clone();
        arrow.set(0, 0, 1);
        let bad = ResiduatedLattice::from_parts(rl.lattice().clone(), rl.otimes().clone(), arrow)
            .unwrap();
        let r = verify_lemma_suite(&bad);
        assert!(r.get("order_via_residuum").unwrap().failed());
    }
}

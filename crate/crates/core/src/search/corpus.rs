use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalKey};
use super::lattices::enumerate_bounded_lattices;
use super::otimes::enumerate_residuated;
use super::with_jobs;
use crate::coupled::{
    check_general_coupled, check_tied, couple, roundtrip_coupled, roundtrip_lattice, tie, untie,
};
use crate::error::Result;
use crate::lemmas::verify_lemma_suite;
use crate::report::{Check, CheckReport, Witness};
use crate::residuated::{
    check_divisibility, check_double_negation, check_monotone, check_prelinearity, derive_arrow,
    ResiduatedLattice,
};
use crate::subuniverse::{find_tieable, is_subuniverse, neg_fixed, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub algebra: ResiduatedLattice,
    pub key: CanonicalKey,
    pub size: usize,
    /// Position of the underlying lattice in `enumerate_bounded_lattices(size)`.
    pub lattice_index: usize,
}

/// Residuated lattices of sizes `2..=max_size`, one per isomorphism class,
/// ordered by size and canonical key.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Corpus {
    pub max_size: usize,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Enumerates the corpus on `jobs` threads. Each (size, lattice) pair is an
/// independent unit; the result does not depend on `jobs`.
pub fn build_corpus(max_size: usize, jobs: usize) -> Result<Corpus> {
    let mut units = Vec::new();
    for n in super::MIN_SIZE..=max_size {
        for (i, l) in enumerate_bounded_lattices(n)?.into_iter().enumerate() {
            units.push((n, i, l));
        }
    }
    let per_unit: Vec<Result<Vec<CorpusEntry>>> = with_jobs(jobs, || {
        units
            .par_iter()
            .map(|(n, i, lattice)| {
                let mut seen = BTreeMap::new();
                for otimes in enumerate_residuated(lattice) {
                    let rl = ResiduatedLattice::from_otimes(lattice.clone(), otimes)?;
                    let (key, canon) = canonical_form(&rl);
                    seen.entry(key).or_insert(canon);
                }
                Ok(seen
                    .into_iter()
                    .map(|(key, algebra)| CorpusEntry {
                        algebra,
                        key,
                        size: *n,
                        lattice_index: *i,
                    })
                    .collect())
            })
            .collect()
    });
    let mut entries = Vec::new();
    for unit in per_unit {
        entries.extend(unit?);
    }
    entries.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.key.cmp(&b.key)));
    Ok(Corpus { max_size, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Tallies {
    pub total: usize,
    pub dnl: usize,
    pub prelinear: usize,
    pub divisible: usize,
    pub mv: usize,
    /// Members whose negation image is not a subuniverse.
    pub neg_image_not_subuniverse: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusVerification {
    pub report: CheckReport,
    pub tallies: Tallies,
    /// First member (by corpus index) whose negation image is not a subuniverse.
    pub neg_image_counterexample: Option<usize>,
}

/// Names of the corpus-level checks, in report order.
pub const CORPUS_CHECKS: [&str; 10] = [
    "residuated_laws",
    "otimes_monotone",
    "arrow_is_residuum",
    "lemma_suite",
    "negation_image_is_fixed_point_set",
    "couple_is_general_coupled",
    "roundtrip_lattice",
    "roundtrip_coupled",
    "full_carrier_tieable",
    "tieable_subuniverses_tie_and_untie",
];

struct MemberOutcome {
    failed: Vec<bool>,
    dnl: bool,
    prelinear: bool,
    divisible: bool,
    neg_image_subuniverse: bool,
}

fn verify_member(rl: &ResiduatedLattice) -> MemberOutcome {
    let mut failed = vec![false; CORPUS_CHECKS.len()];
    failed[0] = !rl.check().passed();
    failed[1] = !check_monotone(rl.lattice(), rl.otimes()).passed();
    failed[2] = derive_arrow(rl.lattice(), rl.otimes()).as_ref() != Ok(rl.arrow());
    failed[3] = !verify_lemma_suite(rl).passed();
    let image = neg_fixed(rl);
    failed[4] = image.is_err();
    let dnl = check_double_negation(rl).passed();
    if dnl {
        failed[5] = !couple(rl).is_ok_and(|c| check_general_coupled(&c).passed());
        failed[6] = !roundtrip_lattice(rl).is_ok_and(|r| r.passed());
        failed[7] = !couple(rl)
            .and_then(|c| roundtrip_coupled(&c))
            .is_ok_and(|r| r.passed());
        let full: Vec<_> = (0..rl.size()).collect();
        failed[8] = !find_tieable(rl, DEFAULT_CAP)
            .is_ok_and(|t| t.iter().any(|s| s.carrier() == full.as_slice()));
    }
    failed[9] = !tieable_roundtrip(rl);
    MemberOutcome {
        failed,
        dnl,
        prelinear: check_prelinearity(rl).passed(),
        divisible: check_divisibility(rl).passed(),
        neg_image_subuniverse: image.is_ok_and(|img| is_subuniverse(rl, &img)),
    }
}

/// For each tieable subuniverse: the tied structure checks out, and untying
/// it yields a residuated lattice with the double negation law whose
/// negation is `α`.
fn tieable_roundtrip(rl: &ResiduatedLattice) -> bool {
    let Ok(tieable) = find_tieable(rl, DEFAULT_CAP) else {
        return false;
    };
    tieable.iter().all(|s| {
        let Ok(c) = tie(rl, s.carrier()) else {
            return false;
        };
        if !check_tied(&c).passed() {
            return false;
        }
        let Ok(back) = untie(&c) else {
            return false;
        };
        let b = &c.second.carrier;
        back.check().passed()
            && back.satisfies_dnl()
            && (0..b.len()).all(|i| b[back.neg()[i]] == c.alpha[b[i]])
    })
}

/// Runs every suite over every member. A failing check lists the indices of
/// the offending members under the role `algebra`.
pub fn verify_corpus(corpus: &Corpus, jobs: usize) -> CorpusVerification {
    let outcomes: Vec<MemberOutcome> = with_jobs(jobs, || {
        corpus
            .entries
            .par_iter()
            .map(|e| verify_member(&e.algebra))
            .collect()
    });
    let mut report = CheckReport::new();
    for (k, name) in CORPUS_CHECKS.iter().enumerate() {
        let witnesses = outcomes
            .iter()
            .enumerate()
            .filter(|(_, o)| o.failed[k])
            .map(|(i, _)| Witness(vec![("algebra", i)]))
            .collect();
        report.push(Check::from_violations(*name, witnesses));
    }
    let count = |f: &dyn Fn(&MemberOutcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
    let tallies = Tallies {
        total: outcomes.len(),
        dnl: count(&|o| o.dnl),
        prelinear: count(&|o| o.prelinear),
        divisible: count(&|o| o.divisible),
        mv: count(&|o| o.dnl && o.prelinear && o.divisible),
        neg_image_not_subuniverse: count(&|o| !o.neg_image_subuniverse),
    };
    CorpusVerification {
        report,
        tallies,
        neg_image_counterexample: outcomes.iter().position(|o| !o.neg_image_subuniverse),
    }
}

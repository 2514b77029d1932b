//! Named check results with witnesses.
//!
//! Witnesses are recorded in ascending lexicographic order of their element
//! indices; the scanning helpers below produce them in that order.

use crate::table::ElementId;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// A tuple of values, each tagged with the role it plays in the law.
///
/// Values are element indices except where the role says otherwise
/// (corpus-level reports use the role `algebra` for a member index).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Witness(pub Vec<(&'static str, ElementId)>);

impl Witness {
    pub fn values(&self) -> Vec<ElementId> {
        self.0.iter().map(|&(_, v)| v).collect()
    }

    pub fn roles(&self) -> Vec<&'static str> {
        self.0.iter().map(|&(r, _)| r).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl Check {
    /// Pass when there are no violations, fail otherwise.
    pub fn from_violations(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            name: name.into(),
            status,
            witnesses,
        }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Check::from_violations(name, Vec::new())
    }

    /// A passing check that reports informational tuples.
    pub fn info(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witnesses,
        }
    }

    pub fn skipped(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn first_witness(&self) -> Option<Vec<ElementId>> {
        self.witnesses.first().map(Witness::values)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every check name prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}.{}", c.name);
            c
        }));
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = format!("{prefix}.{}", c.name);
        }
        self
    }

    /// True when no check failed. Skipped checks do not count against it.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().map(|c| c.name.as_str()).collect()
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

pub(crate) fn scan1(
    domain: &[ElementId],
    role: &'static str,
    mut holds: impl FnMut(ElementId) -> bool,
) -> Vec<Witness> {
    domain
        .iter()
        .filter(|&&x| !holds(x))
        .map(|&x| Witness(vec![(role, x)]))
        .collect()
}

pub(crate) fn scan2(
    domain: &[ElementId],
    roles: [&'static str; 2],
    mut holds: impl FnMut(ElementId, ElementId) -> bool,
) -> Vec<Witness> {
    let mut out = Vec::new();
    for &x in domain {
        for &y in domain {
            if !holds(x, y) {
                out.push(Witness(vec![(roles[0], x), (roles[1], y)]));
            }
        }
    }
    out
}

pub(crate) fn scan3(
    domain: &[ElementId],
    roles: [&'static str; 3],
    mut holds: impl FnMut(ElementId, ElementId, ElementId) -> bool,
) -> Vec<Witness> {
    let mut out = Vec::new();
    for &x in domain {
        for &y in domain {
            for &z in domain {
                if !holds(x, y, z) {
                    out.push(Witness(vec![(roles[0], x), (roles[1], y), (roles[2], z)]));
                }
            }
        }
    }
    out
}

/// `0..n` as an owned carrier list.
pub(crate) fn full(n: usize) -> Vec<ElementId> {
    (0..n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scans_are_lexicographic() {
        let w = scan2(&[0, 1, 2], ["x", "y"], |x, y| x + y != 2);
        let vals: Vec<_> = w.iter().map(Witness::values).collect();
        assert_eq!(vals, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn summary_counts() {
        let mut r = CheckReport::new();
        r.push(Check::pass("a"));
        r.push(Check::from_violations("b", vec![Witness(vec![("x", 0)])]));
        r.push(Check::skipped("c"));
        assert_eq!(
            r.summary(),
            Summary {
                passed: 1,
                failed: 1,
                skipped: 1
            }
        );
        assert!(!r.passed());
        assert_eq!(r.clone().prefixed("p").failed_names(), vec!["p.b"]);
    }
}

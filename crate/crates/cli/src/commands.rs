//! Subcommand dispatch. Exit codes: 0 every check passed, 1 some check
//! failed, 2 parse or usage error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use reslat_core::residuated::{check_commutative_monoid, check_mv, derive_arrow};
use reslat_core::search::{self, build_corpus, enumerate_bounded_lattices, Tallies};
use reslat_core::subuniverse::{enumerate_subuniverses, find_tieable, Subuniverse, DEFAULT_CAP};
use reslat_core::{
    check_double_negation, check_general_coupled, check_monotone, check_tied, couple, decouple,
    roundtrip_coupled, roundtrip_lattice, tie, untie, verify_lemma_suite, BinOpTable, Check,
    CheckReport, ElementId, Error, ResiduatedLattice, Witness,
};
use serde::Serialize;

use crate::fixtures::example_files;
use crate::format::{
    parse_document, render_algebra, render_coupled, AlgebraFile, CoupledFile, Document,
};
use crate::report::{ReportDocument, MEMBER, VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "reslat",
    version,
    about = "Check and construct finite residuated lattices and coupled semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Keep at most this many witnesses per check.
    #[arg(long, global = true, value_name = "MAX")]
    witnesses: Option<usize>,

    /// Size cap for enumeration (carrier size) or subuniverse scans.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,

    /// Write produced files into this directory.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Worker threads for enumeration and corpus checks.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every check on an algebra file.
    Check { file: PathBuf },
    /// Complete an algebra file with its derived residuum, negation and sum.
    Derive { file: PathBuf },
    /// Build the coupled semiring of an algebra with the double negation law.
    Couple { file: PathBuf },
    /// Recover the residuated lattice of a general coupled semiring.
    Decouple { file: PathBuf },
    /// Check both round trips (algebra file) or the coupled one (coupled file).
    Roundtrip { file: PathBuf },
    /// Build the tied semiring on a subuniverse.
    Tie {
        file: PathBuf,
        /// Comma-separated element tokens.
        #[arg(long, value_delimiter = ',', required = true)]
        subuniverse: Vec<String>,
    },
    /// Recover a residuated lattice from a tied semiring.
    Untie { file: PathBuf },
    /// List every subuniverse.
    Subuniverses { file: PathBuf },
    /// List the subuniverses a tied semiring can be built on.
    Tieable { file: PathBuf },
    /// Enumerate residuated lattices up to isomorphism.
    Enumerate,
    /// Enumerate and run every suite on every member.
    VerifyCorpus,
    /// Write the three worked examples as algebra files.
    Examples,
}

/// What a command produced: exit code plus stdout and stderr text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Artifact {
    file_name: String,
    contents: String,
}

enum Output {
    Report {
        doc: ReportDocument,
        artifacts: Vec<Artifact>,
    },
    Manifest {
        manifest: Manifest,
        artifacts: Vec<Artifact>,
    },
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub version: String,
    pub max_size: usize,
    pub sizes: Vec<SizeCount>,
    pub tallies: TallyCounts,
    pub algebras: Vec<ManifestEntry>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SizeCount {
    pub size: usize,
    pub lattices: usize,
    pub algebras: usize,
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct TallyCounts {
    pub total: usize,
    pub dnl: usize,
    pub prelinear: usize,
    pub divisible: usize,
    pub mv: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub index: usize,
    pub file: String,
    pub size: usize,
    pub lattice_index: usize,
    pub key: String,
    pub dnl: bool,
    pub prelinear: bool,
    pub divisible: bool,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(output) => finish(&cli, output),
        Err(Usage(msg)) => Outcome::usage(msg),
    }
}

fn finish(cli: &Cli, output: Output) -> Outcome {
    let (artifacts, code, json, text) = match &output {
        Output::Report { doc, artifacts } => (
            artifacts,
            if doc.passed() { 0 } else { 1 },
            doc.to_json(),
            doc.to_text(),
        ),
        Output::Manifest {
            manifest,
            artifacts,
        } => (
            artifacts,
            0,
            manifest_json(manifest),
            manifest_text(manifest),
        ),
    };
    let mut stdout = String::new();
    if let Some(dir) = &cli.out {
        if let Err(e) = write_artifacts(dir, artifacts) {
            return Outcome::usage(format!("cannot write to {}: {e}", dir.display()));
        }
    } else if !cli.json {
        for a in artifacts {
            stdout.push_str(&a.contents);
            stdout.push('\n');
        }
    }
    stdout.push_str(if cli.json { &json } else { &text });
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for a in artifacts {
        fs::write(dir.join(&a.file_name), &a.contents)?;
    }
    Ok(())
}

pub fn manifest_json(m: &Manifest) -> String {
    let mut s = serde_json::to_string_pretty(m).expect("manifest serializes");
    s.push('\n');
    s
}

fn manifest_text(m: &Manifest) -> String {
    let mut out = String::from("size  lattices  algebras\n");
    for s in &m.sizes {
        out.push_str(&format!(
            "{:>4}  {:>8}  {:>8}\n",
            s.size, s.lattices, s.algebras
        ));
    }
    let t = m.tallies;
    out.push_str(&format!(
        "total {}, dnl {}, prelinear {}, divisible {}, mv {}\n",
        t.total, t.dnl, t.prelinear, t.divisible, t.mv
    ));
    out
}

fn execute(cli: &Cli) -> Result<Output, Usage> {
    let report = |name: &str, r: CheckReport, names: &[String], artifacts| Output::Report {
        doc: ReportDocument::new(name, &r, names, cli.witnesses),
        artifacts,
    };
    match &cli.command {
        Command::Check { file } => {
            let f = load_algebra(file)?;
            Ok(report(&f.name, check_algebra(&f)?, &f.elements, vec![]))
        }
        Command::Derive { file } => {
            let f = load_algebra(file)?;
            let (rl, mut r) = match residuated(&f)? {
                Ok(rl) => (rl.clone(), rl.check()),
                Err(r) => return Ok(report(&f.name, r, &f.elements, vec![])),
            };
            r.extend(check_monotone(rl.lattice(), rl.otimes()));
            let out = AlgebraFile::from_residuated(&f.name, &rl, true);
            Ok(report(
                &f.name,
                r,
                &f.elements,
                vec![algebra_artifact(&out)],
            ))
        }
        Command::Couple { file } => {
            let f = load_algebra(file)?;
            let rl = match residuated(&f)? {
                Ok(rl) => rl,
                Err(r) => return Ok(report(&f.name, r, &f.elements, vec![])),
            };
            match couple(&rl) {
                Ok(c) => {
                    let name = format!("{}.coupled", f.name);
                    let out = CoupledFile::from_structure(&name, &c);
                    Ok(report(
                        &name,
                        check_general_coupled(&c),
                        &f.elements,
                        vec![coupled_artifact(&out)],
                    ))
                }
                Err(e) => Ok(report(&f.name, error_report(e)?, &f.elements, vec![])),
            }
        }
        Command::Decouple { file } => {
            let f = load_coupled(file)?;
            let c = f.to_structure();
            match decouple(&c) {
                Ok(rl) => {
                    let name = format!("{}.decoupled", f.name);
                    let mut r = rl.check();
                    r.extend(check_double_negation(&rl));
                    let out = AlgebraFile::from_residuated(&name, &rl, true);
                    Ok(report(
                        &name,
                        r,
                        rl.elements(),
                        vec![algebra_artifact(&out)],
                    ))
                }
                Err(e) => Ok(report(&f.name, error_report(e)?, &f.elements, vec![])),
            }
        }
        Command::Roundtrip { file } => match load(file)? {
            Document::Algebra(f) => {
                let rl = match residuated(&f)? {
                    Ok(rl) => rl,
                    Err(r) => return Ok(report(&f.name, r, &f.elements, vec![])),
                };
                let mut r = CheckReport::new();
                match roundtrip_lattice(&rl) {
                    Ok(x) => r.extend_prefixed("lattice_roundtrip", x),
                    Err(e) => r.extend(error_report(e)?),
                }
                if let Ok(c) = couple(&rl) {
                    match roundtrip_coupled(&c) {
                        Ok(x) => r.extend_prefixed("coupled_roundtrip", x),
                        Err(e) => r.extend(error_report(e)?),
                    }
                }
                Ok(report(&f.name, r, &f.elements, vec![]))
            }
            Document::Coupled(f) => {
                let r = match roundtrip_coupled(&f.to_structure()) {
                    Ok(x) => x.prefixed("coupled_roundtrip"),
                    Err(e) => error_report(e)?,
                };
                Ok(report(&f.name, r, &f.elements, vec![]))
            }
        },
        Command::Tie { file, subuniverse } => {
            let f = load_algebra(file)?;
            let mut a = Vec::new();
            for tok in subuniverse {
                match f.elements.iter().position(|e| e == tok.trim()) {
                    Some(i) => a.push(i),
                    None => return Err(Usage(format!("unknown element `{tok}` in --subuniverse"))),
                }
            }
            a.sort_unstable();
            a.dedup();
            let rl = match residuated(&f)? {
                Ok(rl) => rl,
                Err(r) => return Ok(report(&f.name, r, &f.elements, vec![])),
            };
            match tie(&rl, &a) {
                Ok(c) => {
                    let name = format!("{}.tied", f.name);
                    let mut r = check_tied(&c);
                    r.push(Check::info(
                        "first_carrier",
                        vec![members(&c.first.carrier)],
                    ));
                    r.push(Check::info(
                        "second_carrier",
                        vec![members(&c.second.carrier)],
                    ));
                    let out = CoupledFile::from_structure(&name, &c);
                    Ok(report(&name, r, &f.elements, vec![coupled_artifact(&out)]))
                }
                Err(e) => Ok(report(&f.name, error_report(e)?, &f.elements, vec![])),
            }
        }
        Command::Untie { file } => {
            let f = load_coupled(file)?;
            let c = f.to_structure();
            match untie(&c) {
                Ok(rl) => {
                    let name = format!("{}.untied", f.name);
                    let mut r = rl.check();
                    r.extend(check_double_negation(&rl));
                    let b = &c.second.carrier;
                    let bad = (0..b.len())
                        .filter(|&i| b[rl.neg()[i]] != c.alpha[b[i]])
                        .map(|i| Witness(vec![("x", i)]))
                        .collect();
                    r.push(Check::from_violations("negation_is_alpha", bad));
                    let out = AlgebraFile::from_residuated(&name, &rl, true);
                    Ok(report(
                        &name,
                        r,
                        rl.elements(),
                        vec![algebra_artifact(&out)],
                    ))
                }
                Err(e) => Ok(report(&f.name, error_report(e)?, &f.elements, vec![])),
            }
        }
        Command::Subuniverses { file } | Command::Tieable { file } => {
            let f = load_algebra(file)?;
            let rl = match residuated(&f)? {
                Ok(rl) => rl,
                Err(r) => return Ok(report(&f.name, r, &f.elements, vec![])),
            };
            let cap = cli.max_size.unwrap_or(DEFAULT_CAP);
            let (label, found) = if matches!(cli.command, Command::Tieable { .. }) {
                ("tieable", find_tieable(&rl, cap)?)
            } else {
                ("subuniverses", enumerate_subuniverses(&rl, cap)?)
            };
            let list = found
                .iter()
                .map(Subuniverse::carrier)
                .map(members)
                .collect();
            let mut r = CheckReport::new();
            r.push(Check::info(label, list));
            Ok(report(&f.name, r, &f.elements, vec![]))
        }
        Command::Enumerate => {
            let max = corpus_size(cli)?;
            let corpus = build_corpus(max, jobs(cli))?;
            let mut sizes = Vec::new();
            for n in search::MIN_SIZE..=max {
                sizes.push(SizeCount {
                    size: n,
                    lattices: enumerate_bounded_lattices(n)?.len(),
                    algebras: corpus.entries.iter().filter(|e| e.size == n).count(),
                });
            }
            let mut algebras = Vec::new();
            let mut artifacts = Vec::new();
            for (i, e) in corpus.entries.iter().enumerate() {
                let name = format!("rl{}-{:04}", e.size, i);
                let mv = check_mv(&e.algebra);
                let passes = |n: &str| mv.get(n).is_some_and(Check::passed);
                algebras.push(ManifestEntry {
                    index: i,
                    file: format!("{name}.alg"),
                    size: e.size,
                    lattice_index: e.lattice_index,
                    key: e.key.to_string(),
                    dnl: passes("double_negation"),
                    prelinear: passes("prelinearity"),
                    divisible: passes("divisibility"),
                });
                if cli.out.is_some() {
                    artifacts.push(algebra_artifact(&AlgebraFile::from_residuated(
                        &name, &e.algebra, false,
                    )));
                }
            }
            let count =
                |f: &dyn Fn(&ManifestEntry) -> bool| algebras.iter().filter(|a| f(a)).count();
            let tallies = TallyCounts {
                total: algebras.len(),
                dnl: count(&|a| a.dnl),
                prelinear: count(&|a| a.prelinear),
                divisible: count(&|a| a.divisible),
                mv: count(&|a| a.dnl && a.prelinear && a.divisible),
            };
            let manifest = Manifest {
                version: VERSION.to_string(),
                max_size: max,
                sizes,
                tallies,
                algebras,
            };
            if cli.out.is_some() {
                artifacts.push(Artifact {
                    file_name: "manifest.json".into(),
                    contents: manifest_json(&manifest),
                });
            }
            Ok(Output::Manifest {
                manifest,
                artifacts,
            })
        }
        Command::VerifyCorpus => {
            let max = corpus_size(cli)?;
            let jobs = jobs(cli);
            let corpus = build_corpus(max, jobs)?;
            let v = search::verify_corpus(&corpus, jobs);
            let mut r = v.report;
            let Tallies {
                total,
                dnl,
                prelinear,
                divisible,
                mv,
                neg_image_not_subuniverse,
            } = v.tallies;
            for (name, k) in [
                ("tally.total", total),
                ("tally.dnl", dnl),
                ("tally.prelinear", prelinear),
                ("tally.divisible", divisible),
                ("tally.mv", mv),
                ("tally.neg_image_not_subuniverse", neg_image_not_subuniverse),
            ] {
                r.push(Check::info(name, vec![Witness(vec![("count", k)])]));
            }
            if let Some(i) = v.neg_image_counterexample {
                r.push(Check::info(
                    "neg_image_not_subuniverse.first",
                    vec![Witness(vec![("algebra", i)])],
                ));
            }
            Ok(report(&format!("corpus-max{max}"), r, &[], vec![]))
        }
        Command::Examples => {
            if cli.out.is_none() {
                return Err(Usage("examples needs --out <dir>".into()));
            }
            let mut r = CheckReport::new();
            let mut artifacts = Vec::new();
            for (name, f) in example_files() {
                let Ok(rl) = residuated(&f)? else {
                    unreachable!("embedded example {name} is residuated")
                };
                r.extend_prefixed(name, rl.check());
                artifacts.push(Artifact {
                    file_name: format!("{name}.alg"),
                    contents: render_algebra(&f),
                });
            }
            Ok(report("examples", r, &[], artifacts))
        }
    }
}

fn jobs(cli: &Cli) -> usize {
    cli.jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
        .max(1)
}

fn corpus_size(cli: &Cli) -> Result<usize, Usage> {
    let n = cli.max_size.unwrap_or(search::DEFAULT_CORPUS_SIZE);
    if n > search::MAX_SIZE {
        return Err(Usage(format!(
            "--max-size {n} exceeds the hard maximum of {}",
            search::MAX_SIZE
        )));
    }
    Ok(n)
}

fn members(set: &[ElementId]) -> Witness {
    Witness(set.iter().map(|&x| (MEMBER, x)).collect())
}

fn algebra_artifact(f: &AlgebraFile) -> Artifact {
    Artifact {
        file_name: format!("{}.alg", f.name),
        contents: render_algebra(f),
    }
}

fn coupled_artifact(f: &CoupledFile) -> Artifact {
    Artifact {
        file_name: format!("{}.cpl", f.name),
        contents: render_coupled(f),
    }
}

fn load(path: &Path) -> Result<Document, Usage> {
    let text = fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Usage(format!("{}:{e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<AlgebraFile, Usage> {
    match load(path)? {
        Document::Algebra(f) => Ok(f),
        Document::Coupled(_) => Err(Usage(format!(
            "{}: expected an algebra file",
            path.display()
        ))),
    }
}

fn load_coupled(path: &Path) -> Result<CoupledFile, Usage> {
    match load(path)? {
        Document::Coupled(f) => Ok(f),
        Document::Algebra(_) => Err(Usage(format!(
            "{}: expected a coupled file",
            path.display()
        ))),
    }
}

/// The validated algebra of a file, or the report of what went wrong.
/// `→` is derived when the file has none.
fn residuated(f: &AlgebraFile) -> Result<Result<ResiduatedLattice, CheckReport>, Usage> {
    let lattice = f.lattice()?;
    let arrow = match &f.arrow {
        Some(a) => a.clone(),
        None => match derive_arrow(&lattice, &f.otimes) {
            Ok(a) => a,
            Err(e) => {
                let mut r = lattice.check().prefixed("lattice");
                r.extend_prefixed("otimes", check_commutative_monoid(&f.otimes, lattice.top()));
                r.extend(error_report(e)?);
                return Ok(Err(r));
            }
        },
    };
    match ResiduatedLattice::new(lattice, f.otimes.clone(), arrow) {
        Ok(rl) => Ok(Ok(rl)),
        Err(e) => Ok(Err(error_report(e)?)),
    }
}

/// Turns a library error that signals a violated hypothesis into a failing
/// report. Shape errors stay usage errors.
fn error_report(e: Error) -> Result<CheckReport, Usage> {
    let mut r = CheckReport::new();
    let fail = |name: &str, w: Vec<(&'static str, ElementId)>| {
        Check::from_violations(name, vec![Witness(w)])
    };
    match e {
        Error::Axioms(rep) | Error::InvalidCoupled(rep) | Error::InvalidTied(rep) => {
            return Ok(*rep)
        }
        Error::NoResiduum { y, z } => r.push(fail("residuum_exists", vec![("y", y), ("z", z)])),
        Error::DnlRequired { witness } => r.push(fail("double_negation", vec![("x", witness)])),
        Error::ClosureFails { op, x, y } => r.push(fail(
            &format!("closed_under_{op}"),
            vec![("x", x), ("y", y)],
        )),
        Error::NotSubuniverse(a) => {
            r.push(Check::from_violations("subuniverse", vec![members(&a)]))
        }
        Error::NegNotSubuniverse(a) => r.push(Check::from_violations(
            "negation_image_is_subuniverse",
            vec![members(&a)],
        )),
        Error::DeMorganFails { x, y } => r.push(fail(
            "negation_turns_product_into_sum",
            vec![("x", x), ("y", y)],
        )),
        other => return Err(Usage(other.to_string())),
    }
    Ok(r)
}

fn table_mismatches(name: &str, given: &BinOpTable, derived: &BinOpTable) -> Check {
    let n = given.size();
    let mut bad = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if given.get(x, y) != derived.get(x, y) {
                bad.push(Witness(vec![
                    ("x", x),
                    ("y", y),
                    ("given", given.get(x, y)),
                    ("derived", derived.get(x, y)),
                ]));
            }
        }
    }
    Check::from_violations(name, bad)
}

/// Every check that applies to an algebra file. Tables supplied for
/// comparison (`arrow`, `oplus`, `neg`) are matched against the derivation.
fn check_algebra(f: &AlgebraFile) -> Result<CheckReport, Usage> {
    let lattice = f.lattice()?;
    let derived_arrow = derive_arrow(&lattice, &f.otimes);
    let arrow = match (&f.arrow, &derived_arrow) {
        (Some(a), _) => a.clone(),
        (None, Ok(a)) => a.clone(),
        (None, Err(_)) => {
            let Ok(Err(r)) = residuated(f) else {
                unreachable!("residuum derivation failed above")
            };
            let mut r = r;
            r.extend(check_monotone(&lattice, &f.otimes));
            return Ok(r);
        }
    };
    let rl = ResiduatedLattice::from_parts(lattice, f.otimes.clone(), arrow)?;
    let mut r = rl.check();
    r.extend(check_monotone(rl.lattice(), rl.otimes()));
    if let Some(given) = &f.arrow {
        match &derived_arrow {
            Ok(d) => r.push(table_mismatches("arrow_matches_derived", given, d)),
            Err(e) => r.extend(error_report(e.clone())?),
        }
    }
    if let Some(given) = &f.neg {
        let bad = (0..rl.size())
            .filter(|&x| given[x] != rl.neg()[x])
            .map(|x| {
                Witness(vec![
                    ("x", x),
                    ("given", given[x]),
                    ("derived", rl.neg()[x]),
                ])
            })
            .collect();
        r.push(Check::from_violations("neg_matches_derived", bad));
    }
    if let Some(given) = &f.oplus {
        r.push(table_mismatches("oplus_matches_derived", given, rl.oplus()));
    }
    r.extend(check_mv(&rl));
    r.extend_prefixed("identities", verify_lemma_suite(&rl));
    Ok(r)
}

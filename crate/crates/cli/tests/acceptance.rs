//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use reslat_cli::fixtures::example_text;
use reslat_cli::format::{parse_document, render_algebra, AlgebraFile, Document};
use reslat_cli::run;
use reslat_core::fixtures::{self, ex1_names, ex2_names};
use reslat_core::residuated::{check_divisibility, check_prelinearity, derive_arrow};
use reslat_core::search::{build_corpus, enumerate_residuated, verify_corpus};
use reslat_core::{
    check_double_negation, check_general_coupled, check_tied, couple, decouple, roundtrip_coupled,
    tie, untie, verify_lemma_suite, BinOpTable, BoundedLattice, Check, ResiduatedLattice,
};
use serde_json::Value;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn first(c: Option<&Check>) -> Option<Vec<usize>> {
    c.and_then(Check::first_witness)
}

fn parsed_ex2() -> Result<ResiduatedLattice, String> {
    let text = example_text("ex2").ok_or("no ex2 fixture")?;
    let Document::Algebra(f) = parse_document(&text).map_err(|e| e.to_string())? else {
        return Err("ex2 fixture is not an algebra file".into());
    };
    let lattice = f.lattice().map_err(|e| e.to_string())?;
    ResiduatedLattice::from_otimes(lattice, f.otimes).map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    use ex2_names::*;
    let start = Instant::now();
    let rl = parsed_ex2()?;
    ensure(rl.check().passed(), "residuated-lattice checks fail")?;
    ensure(check_double_negation(&rl).passed(), "double negation fails")?;
    let pre = check_prelinearity(&rl);
    ensure(
        first(pre.checks.first()) == Some(vec![B, C]),
        format!("prelinearity witness {:?}", first(pre.checks.first())),
    )?;
    let div = check_divisibility(&rl);
    ensure(
        first(div.checks.first()) == Some(vec![B, A]),
        format!("divisibility witness {:?}", first(div.checks.first())),
    )?;
    let neg_ok = (0..6)
        .filter(|&x| rl.neg()[x] == fixtures::ex2_printed_neg()[x])
        .count();
    ensure(
        neg_ok == 6,
        format!("negation matches in {neg_ok}/6 entries"),
    )?;
    let printed = fixtures::ex2_printed_arrow();
    let arrow_ok = (0..36)
        .filter(|&i| rl.arrow().get(i / 6, i % 6) == printed.get(i / 6, i % 6))
        .count();
    ensure(
        arrow_ok == 36,
        format!("residuum matches in {arrow_ok}/36 entries"),
    )?;
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )
}

fn criterion_2() -> Outcome {
    use ex2_names::*;
    let rl = fixtures::ex2();
    let printed = fixtures::ex2_printed_oplus();
    let mut mismatches = Vec::new();
    for x in 0..6 {
        for y in 0..6 {
            if printed.get(x, y) != rl.oplus().get(x, y) {
                mismatches.push((x, y, printed.get(x, y), rl.oplus().get(x, y)));
            }
        }
    }
    ensure(
        mismatches == [(B, C, C, ONE)],
        format!("library mismatches {mismatches:?}"),
    )?;

    let mut f = AlgebraFile::from_residuated("ex2-printed", &rl, false);
    f.oplus = Some(printed);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("ex2-printed.alg");
    std::fs::write(&path, render_algebra(&f)).map_err(|e| e.to_string())?;
    let out = run(["reslat", "check", path.to_str().unwrap(), "--json"]);
    let doc: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let check = doc["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == "oplus_matches_derived"))
        .ok_or("no oplus check in report")?;
    let tokens: Vec<Vec<&str>> = check["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| {
            w.as_array()
                .unwrap()
                .iter()
                .map(|v| v["element"].as_str().unwrap())
                .collect()
        })
        .collect();
    ensure(
        tokens == [["b", "c", "c", "1"]],
        format!("report witnesses {tokens:?}"),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for (name, rl) in [("ex2", fixtures::ex2()), ("ex1", fixtures::ex1())] {
        let c = couple(&rl).map_err(|e| format!("{name}: {e}"))?;
        let report = check_general_coupled(&c);
        ensure(
            report.passed(),
            format!("{name}: failing {:?}", report.failed_names()),
        )?;
        let back = decouple(&c).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == rl, format!("{name}: decoupled algebra differs"))?;
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )
}

fn criterion_4() -> Outcome {
    for (name, rl) in [
        ("ex2", fixtures::ex2()),
        ("lukasiewicz3", fixtures::lukasiewicz3()),
    ] {
        let c = couple(&rl).map_err(|e| format!("{name}: {e}"))?;
        let report = roundtrip_coupled(&c).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            report.passed(),
            format!("{name}: failing {:?}", report.failed_names()),
        )?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let ex3 = fixtures::ex3();
    let ex1 = fixtures::ex1();
    use ex1_names::*;
    let cases: [(&str, &ResiduatedLattice, Vec<usize>); 2] = [
        ("ex3", &ex3, vec![0, 1, 2]),
        ("ex1", &ex1, vec![ZERO, A, NOT_A, ONE]),
    ];
    for (name, rl, a) in cases {
        let c = tie(rl, &a).map_err(|e| format!("{name}: {e}"))?;
        let report = check_tied(&c);
        ensure(
            report.passed(),
            format!("{name}: failing {:?}", report.failed_names()),
        )?;
        let b = &c.second.carrier;
        if name == "ex3" {
            ensure(*b == [0, 2], format!("ex3: B = {b:?}"))?;
            let sums_are_joins = b.iter().all(|&x| {
                b.iter()
                    .all(|&y| rl.oplus().get(x, y) == rl.join().get(x, y))
            });
            ensure(sums_are_joins, "ex3: oplus differs from join on B")?;
        }
        let back = untie(&c).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            back.check().passed(),
            format!("{name}: untied algebra is not residuated"),
        )?;
        ensure(
            back.satisfies_dnl(),
            format!("{name}: untied algebra lacks double negation"),
        )?;
        let neg_is_alpha = (0..b.len()).all(|i| b[back.neg()[i]] == c.alpha[b[i]]);
        ensure(neg_is_alpha, format!("{name}: negation differs from alpha"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let corpus = build_corpus(5, 4).map_err(|e| e.to_string())?;
    ensure(!corpus.is_empty(), "empty corpus")?;
    let v = verify_corpus(&corpus, 4);
    ensure(
        v.report.passed(),
        format!("failing {:?}", v.report.failed_names()),
    )?;
    for e in &corpus.entries {
        ensure(
            verify_lemma_suite(&e.algebra).passed(),
            format!("identity suite fails on {}", e.key),
        )?;
    }
    let dnl = corpus
        .entries
        .iter()
        .filter(|e| e.algebra.satisfies_dnl())
        .count();
    ensure(
        dnl == v.tallies.dnl && dnl > 0,
        "double negation tally mismatch",
    )?;
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(300),
        format!("took {elapsed:?}"),
    )?;
    println!(
        "  corpus <= 5: {} algebras, {} with double negation, {elapsed:.2?}",
        corpus.len(),
        dnl
    );
    Ok(())
}

/// All commutative tables with the top as unit, no other pruning, kept when
/// associative and residuated: every {x : x*y <= z} is a principal down-set.
fn brute_force_count(l: &BoundedLattice) -> usize {
    let n = l.size();
    let top = l.top();
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != top && y != top)
        .collect();
    let mut count = 0;
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t = BinOpTable::from_fn(n, |x, y| {
            if x == top {
                y
            } else if y == top {
                x
            } else {
                0
            }
        });
        let mut c = code;
        for &(x, y) in &free {
            t.set(x, y, c % n);
            t.set(y, x, c % n);
            c /= n;
        }
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t.get(t.get(x, y), z) == t.get(x, t.get(y, z))))
        });
        let residuated = (0..n).all(|y| {
            (0..n).all(|z| {
                let set: Vec<usize> = (0..n).filter(|&x| l.leq(t.get(x, y), z)).collect();
                set.iter()
                    .any(|&m| (0..n).all(|x| set.contains(&x) == l.leq(x, m)))
            })
        });
        if assoc && residuated {
            count += 1;
        }
    }
    count
}

fn criterion_7() -> Outcome {
    let cases = [
        ("2-chain", fixtures::chain(&["0", "1"]), 1),
        ("3-chain", fixtures::chain(&["0", "a", "1"]), 2),
        ("diamond", fixtures::diamond_lattice(), 1),
    ];
    for (name, l, expected) in cases {
        let found = enumerate_residuated(&l);
        let brute = brute_force_count(&l);
        ensure(
            found.len() == expected && brute == expected,
            format!(
                "{name}: search {} brute force {brute} expected {expected}",
                found.len()
            ),
        )?;
        for t in &found {
            ensure(
                derive_arrow(&l, t).is_ok(),
                format!("{name}: enumerated table has no residuum"),
            )?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let runs = |args: &[&str]| -> Result<Vec<String>, String> {
        let mut outs = Vec::new();
        for jobs in ["1", "2", "4", "1", "8"] {
            let mut argv = vec!["reslat"];
            argv.extend_from_slice(args);
            argv.extend_from_slice(&["--json", "--jobs", jobs]);
            let out = run(argv);
            ensure(
                out.code == 0,
                format!("{args:?} exit {}: {}", out.code, out.stderr),
            )?;
            outs.push(out.stdout);
        }
        Ok(outs)
    };
    for args in [
        &["enumerate", "--max-size", "5"][..],
        &["verify-corpus", "--max-size", "5"][..],
    ] {
        let outs = runs(args)?;
        ensure(
            outs.windows(2).all(|w| w[0] == w[1]),
            format!("{args:?} output varies"),
        )?;
    }

    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (dir, jobs) in [(&a, "1"), (&b, "6")] {
        let out = run([
            "reslat",
            "enumerate",
            "--max-size",
            "5",
            "--jobs",
            jobs,
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        ensure(out.code == 0, format!("enumerate --out exit {}", out.code))?;
    }
    let listing = |d: &tempfile::TempDir| -> Vec<(String, Vec<u8>)> {
        let mut v: Vec<_> = std::fs::read_dir(d.path())
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().to_string_lossy().into_owned(),
                    std::fs::read(e.path()).unwrap(),
                )
            })
            .collect();
        v.sort();
        v
    };
    let (la, lb) = (listing(&a), listing(&b));
    ensure(
        la.len() > 1 && la == lb,
        "exported corpus differs between job counts",
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 ex2 residuated checks and derived tables", criterion_1),
        ("2 printed oplus erratum detected at (b,c)", criterion_2),
        ("3 couple/decouple on ex2 and ex1", criterion_3),
        ("4 coupled round trip on ex2 and lukasiewicz3", criterion_4),
        ("5 tie/untie on ex3 and ex1", criterion_5),
        ("6 corpus up to size 5 verified", criterion_6),
        ("7 enumeration counts against brute force", criterion_7),
        ("8 deterministic enumerate and verify-corpus", criterion_8),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

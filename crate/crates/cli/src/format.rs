//! Line-oriented algebra and coupled-structure files.
//!
//! ```text
//! algebra <name>
//! elements <tok1> ... <tokN>
//! bottom <tok>
//! top <tok>
//! table join | meet | otimes | arrow | oplus
//! <N rows of N tokens>
//! map neg
//! <one row of N tokens>
//! end
//! ```
//!
//! Coupled files start with `coupled <name>`, take the same `elements`,
//! `bottom` and `top` lines, optional `kind general|tied`, optional
//! `subset A <toks>` / `subset B <toks>`, tables `add1 mul1 add2 mul2`
//! and `map alpha`. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use reslat_core::{
    BinOpTable, BoundedLattice, CoupledKind, CoupledStructure, ElementId, ResiduatedLattice,
    RoleMappedSemiring,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub elements: Vec<String>,
    pub bottom: ElementId,
    pub top: ElementId,
    pub join: BinOpTable,
    pub meet: BinOpTable,
    pub otimes: BinOpTable,
    pub arrow: Option<BinOpTable>,
    /// A `⊕` table supplied for comparison; never used as the operation.
    pub oplus: Option<BinOpTable>,
    /// A `¬` map supplied for comparison; never used as the operation.
    pub neg: Option<Vec<ElementId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupledFile {
    pub name: String,
    pub elements: Vec<String>,
    pub bottom: ElementId,
    pub top: ElementId,
    pub kind: CoupledKind,
    pub subset_a: Option<Vec<ElementId>>,
    pub subset_b: Option<Vec<ElementId>>,
    pub add1: BinOpTable,
    pub mul1: BinOpTable,
    pub add2: BinOpTable,
    pub mul2: BinOpTable,
    pub alpha: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraFile),
    Coupled(CoupledFile),
}

const ALGEBRA_TABLES: [&str; 5] = ["join", "meet", "otimes", "arrow", "oplus"];
const ALGEBRA_MAPS: [&str; 1] = ["neg"];
const COUPLED_TABLES: [&str; 4] = ["add1", "mul1", "add2", "mul2"];
const COUPLED_MAPS: [&str; 1] = ["alpha"];

type Line<'a> = (usize, Vec<&'a str>);

/// Non-blank lines with comments stripped, tagged with 1-based line numbers.
struct Lines<'a> {
    items: std::vec::IntoIter<Line<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                (i + 1, l.split_whitespace().collect())
            })
            .filter(|(_, toks): &Line| !toks.is_empty())
            .collect();
        Lines {
            items: items.into_iter(),
            last: text.lines().count(),
        }
    }

    fn next(&mut self) -> Option<Line<'a>> {
        self.items.next()
    }
}

struct Header {
    is_coupled: bool,
    name: String,
}

fn lookup(elements: &[String], tok: &str, line: usize) -> Result<ElementId, ParseError> {
    match elements.iter().position(|e| e == tok) {
        Some(i) => Ok(i),
        None => err(line, format!("unknown token `{tok}`")),
    }
}

fn read_row(elements: &[String], toks: &[&str], line: usize) -> Result<Vec<ElementId>, ParseError> {
    if toks.len() != elements.len() {
        return err(
            line,
            format!(
                "row has {} entries, expected {}",
                toks.len(),
                elements.len()
            ),
        );
    }
    toks.iter().map(|t| lookup(elements, t, line)).collect()
}

/// Parses either file kind. Only structure is validated here: tokens,
/// dimensions, required sections. Axioms are checked elsewhere.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut lines = Lines::new(text);
    let Some((line, toks)) = lines.next() else {
        return err(1, "empty file");
    };
    let header = match toks.as_slice() {
        ["algebra", name] => Header {
            is_coupled: false,
            name: name.to_string(),
        },
        ["coupled", name] => Header {
            is_coupled: true,
            name: name.to_string(),
        },
        _ => return err(line, "expected `algebra <name>` or `coupled <name>`"),
    };
    let (tables_allowed, maps_allowed): (&[&str], &[&str]) = if header.is_coupled {
        (&COUPLED_TABLES, &COUPLED_MAPS)
    } else {
        (&ALGEBRA_TABLES, &ALGEBRA_MAPS)
    };

    let mut elements: Option<Vec<String>> = None;
    let mut bottom = None;
    let mut top = None;
    let mut kind = None;
    let mut subset_a = None;
    let mut subset_b = None;
    let mut tables: Vec<(String, BinOpTable)> = Vec::new();
    let mut maps: Vec<(String, Vec<ElementId>)> = Vec::new();
    let mut end_line = None;

    while let Some((line, toks)) = lines.next() {
        let need_elements = |elements: &Option<Vec<String>>| match elements {
            Some(e) => Ok(e.clone()),
            None => err(line, "`elements` must come first"),
        };
        match toks[0] {
            "elements" => {
                if elements.is_some() {
                    return err(line, "duplicate `elements` line");
                }
                let list: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                if list.is_empty() {
                    return err(line, "no elements declared");
                }
                if list.len() > reslat_core::table::MAX_CARRIER {
                    return err(line, "too many elements");
                }
                for (i, e) in list.iter().enumerate() {
                    if list[..i].contains(e) {
                        return err(line, format!("duplicate element `{e}`"));
                    }
                }
                elements = Some(list);
            }
            "bottom" | "top" => {
                let els = need_elements(&elements)?;
                if toks.len() != 2 {
                    return err(line, format!("expected `{} <token>`", toks[0]));
                }
                let id = lookup(&els, toks[1], line)?;
                let slot = if toks[0] == "bottom" {
                    &mut bottom
                } else {
                    &mut top
                };
                if slot.is_some() {
                    return err(line, format!("duplicate `{}` line", toks[0]));
                }
                *slot = Some(id);
            }
            "kind" if header.is_coupled => {
                kind = Some(match toks.get(1..) {
                    Some(["general"]) => CoupledKind::General,
                    Some(["tied"]) => CoupledKind::Tied,
                    _ => return err(line, "expected `kind general` or `kind tied`"),
                });
            }
            "subset" if header.is_coupled => {
                let els = need_elements(&elements)?;
                let Some(&which) = toks.get(1) else {
                    return err(line, "expected `subset A|B <tokens>`");
                };
                let mut ids = toks[2..]
                    .iter()
                    .map(|t| lookup(&els, t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                ids.sort_unstable();
                ids.dedup();
                let slot = match which {
                    "A" => &mut subset_a,
                    "B" => &mut subset_b,
                    _ => return err(line, "subset name must be A or B"),
                };
                if slot.is_some() {
                    return err(line, format!("duplicate subset {which}"));
                }
                *slot = Some(ids);
            }
            "table" => {
                let els = need_elements(&elements)?;
                let name = match toks.as_slice() {
                    [_, name] if tables_allowed.contains(name) => name.to_string(),
                    [_, name] => return err(line, format!("unknown table `{name}`")),
                    _ => return err(line, "expected `table <name>`"),
                };
                if tables.iter().any(|(n, _)| *n == name) {
                    return err(line, format!("duplicate table `{name}`"));
                }
                let mut rows = Vec::with_capacity(els.len());
                for _ in 0..els.len() {
                    let Some((rl, rt)) = lines.next() else {
                        return err(lines.last + 1, format!("table `{name}` is truncated"));
                    };
                    rows.push(read_row(&els, &rt, rl)?);
                }
                let table = BinOpTable::from_rows(&rows).map_err(|e| ParseError {
                    line,
                    message: e.to_string(),
                })?;
                tables.push((name, table));
            }
            "map" => {
                let els = need_elements(&elements)?;
                let name = match toks.as_slice() {
                    [_, name] if maps_allowed.contains(name) => name.to_string(),
                    [_, name] => return err(line, format!("unknown map `{name}`")),
                    _ => return err(line, "expected `map <name>`"),
                };
                if maps.iter().any(|(n, _)| *n == name) {
                    return err(line, format!("duplicate map `{name}`"));
                }
                let Some((rl, rt)) = lines.next() else {
                    return err(lines.last + 1, format!("map `{name}` is truncated"));
                };
                maps.push((name, read_row(&els, &rt, rl)?));
            }
            "end" => {
                end_line = Some(line);
                break;
            }
            other => return err(line, format!("unexpected `{other}`")),
        }
    }

    let Some(end_line) = end_line else {
        return err(lines.last + 1, "missing `end`");
    };
    if let Some((line, _)) = lines.next() {
        return err(line, "content after `end`");
    }
    let Some(elements) = elements else {
        return err(end_line, "missing `elements`");
    };
    let Some(bottom) = bottom else {
        return err(end_line, "missing `bottom`");
    };
    let Some(top) = top else {
        return err(end_line, "missing `top`");
    };
    let mut take = |name: &str| {
        tables
            .iter()
            .position(|(n, _)| n == name)
            .map(|i| tables.remove(i).1)
    };
    let mut require = |name: &str| match take(name) {
        Some(t) => Ok(t),
        None => err(end_line, format!("missing required table `{name}`")),
    };

    if header.is_coupled {
        let add1 = require("add1")?;
        let mul1 = require("mul1")?;
        let add2 = require("add2")?;
        let mul2 = require("mul2")?;
        let Some((_, alpha)) = maps.into_iter().find(|(n, _)| n == "alpha") else {
            return err(end_line, "missing required map `alpha`");
        };
        let kind = kind.unwrap_or(if subset_b.is_some() {
            CoupledKind::Tied
        } else {
            CoupledKind::General
        });
        Ok(Document::Coupled(CoupledFile {
            name: header.name,
            elements,
            bottom,
            top,
            kind,
            subset_a,
            subset_b,
            add1,
            mul1,
            add2,
            mul2,
            alpha,
        }))
    } else {
        let join = require("join")?;
        let meet = require("meet")?;
        let otimes = require("otimes")?;
        let arrow = take("arrow");
        let oplus = take("oplus");
        let neg = maps.into_iter().find(|(n, _)| n == "neg").map(|(_, m)| m);
        Ok(Document::Algebra(AlgebraFile {
            name: header.name,
            elements,
            bottom,
            top,
            join,
            meet,
            otimes,
            arrow,
            oplus,
            neg,
        }))
    }
}

fn write_table(out: &mut String, heading: &str, elements: &[String], t: &BinOpTable) {
    let width = elements
        .iter()
        .map(|e| e.chars().count())
        .max()
        .unwrap_or(1);
    let _ = writeln!(out, "{heading}");
    for row in t.rows() {
        let cells: Vec<String> = row
            .iter()
            .map(|&v| format!("{:<width$}", elements[v]))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" ").trim_end());
    }
}

fn write_map(out: &mut String, heading: &str, elements: &[String], m: &[ElementId]) {
    let toks: Vec<&str> = m.iter().map(|&v| elements[v].as_str()).collect();
    let _ = writeln!(out, "{heading}\n{}", toks.join(" "));
}

pub fn render_algebra(f: &AlgebraFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", f.name);
    let _ = writeln!(out, "elements {}", f.elements.join(" "));
    let _ = writeln!(out, "bottom {}", f.elements[f.bottom]);
    let _ = writeln!(out, "top {}", f.elements[f.top]);
    write_table(&mut out, "table join", &f.elements, &f.join);
    write_table(&mut out, "table meet", &f.elements, &f.meet);
    write_table(&mut out, "table otimes", &f.elements, &f.otimes);
    if let Some(t) = &f.arrow {
        write_table(&mut out, "table arrow", &f.elements, t);
    }
    if let Some(t) = &f.oplus {
        write_table(&mut out, "table oplus", &f.elements, t);
    }
    if let Some(m) = &f.neg {
        write_map(&mut out, "map neg", &f.elements, m);
    }
    out.push_str("end\n");
    out
}

pub fn render_coupled(f: &CoupledFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "coupled {}", f.name);
    let _ = writeln!(out, "elements {}", f.elements.join(" "));
    let _ = writeln!(out, "bottom {}", f.elements[f.bottom]);
    let _ = writeln!(out, "top {}", f.elements[f.top]);
    let _ = writeln!(out, "kind {}", f.kind.as_str());
    for (label, subset) in [("A", &f.subset_a), ("B", &f.subset_b)] {
        if let Some(s) = subset {
            let toks: Vec<&str> = s.iter().map(|&v| f.elements[v].as_str()).collect();
            let _ = writeln!(out, "subset {label} {}", toks.join(" "));
        }
    }
    write_table(&mut out, "table add1", &f.elements, &f.add1);
    write_table(&mut out, "table mul1", &f.elements, &f.mul1);
    write_table(&mut out, "table add2", &f.elements, &f.add2);
    write_table(&mut out, "table mul2", &f.elements, &f.mul2);
    write_map(&mut out, "map alpha", &f.elements, &f.alpha);
    out.push_str("end\n");
    out
}

impl AlgebraFile {
    /// The file's algebra without law checks; `→` is derived when absent.
    pub fn lattice(&self) -> Result<BoundedLattice, reslat_core::Error> {
        BoundedLattice::from_parts(
            self.elements.clone(),
            self.join.clone(),
            self.meet.clone(),
            self.bottom,
            self.top,
        )
    }

    /// Writes out an algebra. With `derived`, the `¬` map and `⊕` table
    /// computed from `⊗` and `→` are included for reference.
    pub fn from_residuated(name: &str, rl: &ResiduatedLattice, derived: bool) -> Self {
        AlgebraFile {
            name: name.to_string(),
            elements: rl.elements().to_vec(),
            bottom: rl.bottom(),
            top: rl.top(),
            join: rl.join().clone(),
            meet: rl.meet().clone(),
            otimes: rl.otimes().clone(),
            arrow: Some(rl.arrow().clone()),
            oplus: derived.then(|| rl.oplus().clone()),
            neg: derived.then(|| rl.neg().to_vec()),
        }
    }
}

impl CoupledFile {
    pub fn to_structure(&self) -> CoupledStructure {
        let n = self.elements.len();
        let a = self.subset_a.clone().unwrap_or_else(|| (0..n).collect());
        let b = self.subset_b.clone().unwrap_or_else(|| a.clone());
        CoupledStructure {
            elements: self.elements.clone(),
            first: RoleMappedSemiring {
                carrier: a,
                add: self.add1.clone(),
                mul: self.mul1.clone(),
                zero: self.bottom,
                one: self.top,
            },
            second: RoleMappedSemiring {
                carrier: b,
                add: self.add2.clone(),
                mul: self.mul2.clone(),
                zero: self.top,
                one: self.bottom,
            },
            alpha: self.alpha.clone(),
            kind: self.kind,
        }
    }

    pub fn from_structure(name: &str, c: &CoupledStructure) -> Self {
        let n = c.elements.len();
        let full: Vec<_> = (0..n).collect();
        CoupledFile {
            name: name.to_string(),
            elements: c.elements.clone(),
            bottom: c.first.zero,
            top: c.first.one,
            kind: c.kind,
            subset_a: (c.first.carrier != full).then(|| c.first.carrier.clone()),
            subset_b: (c.second.carrier != c.first.carrier).then(|| c.second.carrier.clone()),
            add1: c.first.add.clone(),
            mul1: c.first.mul.clone(),
            add2: c.second.add.clone(),
            mul2: c.second.mul.clone(),
            alpha: c.alpha.clone(),
        }
    }
}

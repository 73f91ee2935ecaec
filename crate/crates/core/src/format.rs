//! The `.rlat` text format and DOT export.
//!
//! ```text
//! size 2
//! elements 0 1
//! bottom 0
//! top 1
//! table join
//! 0 1
//! 1 1
//! table meet
//! 0 0
//! 0 1
//! table odot
//! 0 0
//! 0 1
//! ```
//!
//! An optional `table arrow` must agree with the residuum derived from
//! `meet` and `odot`. `#` starts a comment.

use std::fmt::Write as _;

use crate::algebra::{residual_from_prod, validate_algebra, Algebra, Law, Table, Tables};
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

const TABLES: [&str; 4] = ["join", "meet", "odot", "arrow"];

fn parse_error(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

/// File contents before any algebraic check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub names: Vec<String>,
    pub bottom: usize,
    pub top: usize,
    pub join: Table,
    pub meet: Table,
    pub prod: Table,
    pub arrow: Option<Table>,
}

/// Reads the sections of a `.rlat` file; only syntax and name resolution
/// are checked.
pub fn parse_raw(text: &str) -> Result<RawAlgebra> {
    let mut size: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut bottom = None;
    let mut top = None;
    let mut tables: [Option<Table>; 4] = Default::default();
    let mut open: Option<(usize, usize, Table)> = None;

    let lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    for (line, content) in lines {
        let words: Vec<&str> = content.split_whitespace().collect();

        if let Some((which, _, rows)) = open.as_mut() {
            let names = names.as_ref().expect("tables open only after elements");
            let n = names.len();
            if words.len() != n {
                return Err(parse_error(
                    line,
                    format!("table row needs {n} entries, found {}", words.len()),
                ));
            }
            let row = words
                .iter()
                .map(|w| {
                    names
                        .iter()
                        .position(|x| x == w)
                        .ok_or_else(|| parse_error(line, format!("unknown element `{w}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            let which = *which;
            if rows.len() == n {
                tables[which] = open.take().map(|(_, _, rows)| rows);
            }
            continue;
        }

        match words[0] {
            "size" => {
                if size.is_some() {
                    return Err(parse_error(line, "`size` given twice"));
                }
                let [_, n] = words[..] else {
                    return Err(parse_error(line, "expected `size N`"));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| parse_error(line, format!("`{n}` is not a size")))?;
                if n == 0 {
                    return Err(parse_error(line, "size must be positive"));
                }
                size = Some(n);
            }
            "elements" => {
                let n = size.ok_or_else(|| parse_error(line, "`elements` before `size`"))?;
                if names.is_some() {
                    return Err(parse_error(line, "`elements` given twice"));
                }
                let list: Vec<String> = words[1..].iter().map(|s| s.to_string()).collect();
                if list.len() != n {
                    return Err(parse_error(
                        line,
                        format!("expected {n} element names, found {}", list.len()),
                    ));
                }
                for (i, name) in list.iter().enumerate() {
                    if list[..i].contains(name) {
                        return Err(parse_error(
                            line,
                            format!("element `{name}` declared twice"),
                        ));
                    }
                }
                names = Some(list);
            }
            kw @ ("bottom" | "top") => {
                let list = names
                    .as_ref()
                    .ok_or_else(|| parse_error(line, format!("`{kw}` before `elements`")))?;
                let [_, name] = words[..] else {
                    return Err(parse_error(line, format!("expected `{kw} NAME`")));
                };
                let idx = list
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| parse_error(line, format!("unknown element `{name}`")))?;
                let slot = if kw == "bottom" {
                    &mut bottom
                } else {
                    &mut top
                };
                if slot.replace(idx).is_some() {
                    return Err(parse_error(line, format!("`{kw}` given twice")));
                }
            }
            "table" => {
                if names.is_none() {
                    return Err(parse_error(line, "`table` before `elements`"));
                }
                let [_, kind] = words[..] else {
                    return Err(parse_error(line, "expected `table join|meet|odot|arrow`"));
                };
                let which = TABLES
                    .iter()
                    .position(|&t| t == kind)
                    .ok_or_else(|| parse_error(line, format!("unknown table `{kind}`")))?;
                if tables[which].is_some() {
                    return Err(parse_error(line, format!("table `{kind}` given twice")));
                }
                open = Some((which, line, Vec::new()));
            }
            other => return Err(parse_error(line, format!("unexpected `{other}`"))),
        }
    }

    let end = text.lines().count().max(1);
    if let Some((which, started, _)) = open {
        return Err(parse_error(
            started,
            format!("table `{}` is incomplete", TABLES[which]),
        ));
    }
    let names = names.ok_or_else(|| parse_error(end, "missing `elements`"))?;
    let bottom = bottom.ok_or_else(|| parse_error(end, "missing `bottom`"))?;
    let top = top.ok_or_else(|| parse_error(end, "missing `top`"))?;
    let [join, meet, prod, arrow] = tables;
    let missing = |t: &str| parse_error(end, format!("missing `table {t}`"));
    Ok(RawAlgebra {
        names,
        bottom,
        top,
        join: join.ok_or_else(|| missing("join"))?,
        meet: meet.ok_or_else(|| missing("meet"))?,
        prod: prod.ok_or_else(|| missing("odot"))?,
        arrow,
    })
}

/// Parses and validates a `.rlat` file into a canonical algebra.
///
/// The lattice and monoid laws are validated with the derived residuum;
/// a supplied arrow table is then compared cell by cell.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let raw = parse_raw(text)?;
    let tables = |res: Table| Tables {
        names: raw.names.clone(),
        bottom: raw.bottom,
        top: raw.top,
        join: raw.join.clone(),
        meet: raw.meet.clone(),
        prod: raw.prod.clone(),
        res,
    };
    let derived = match residual_from_prod(&raw.meet, &raw.prod) {
        Ok(d) => d,
        Err(e) => {
            // report the other laws first; without an arrow there is nothing to adjoin
            let n = raw.names.len();
            let res = raw
                .arrow
                .clone()
                .unwrap_or_else(|| vec![vec![raw.top.min(n - 1); n]; n]);
            let mut report = validate_algebra(&tables(res))?;
            if raw.arrow.is_none() {
                report.violations.retain(|v| v.law != Law::Adjointness);
            }
            if !report.is_valid() {
                return Err(Error::ValidationFailed(Box::new(report)));
            }
            return Err(e);
        }
    };
    let t = tables(derived.clone());
    let report = validate_algebra(&t)?;
    if !report.is_valid() {
        return Err(Error::ValidationFailed(Box::new(report)));
    }
    if let Some(arrow) = &raw.arrow {
        let n = raw.names.len();
        for x in 0..n {
            for y in 0..n {
                if arrow[x][y] != derived[x][y] {
                    return Err(Error::ArrowMismatch {
                        x: raw.names[x].clone(),
                        y: raw.names[y].clone(),
                        given: raw.names[arrow[x][y]].clone(),
                        derived: raw.names[derived[x][y]].clone(),
                    });
                }
            }
        }
    }
    Algebra::new(t)
}

/// Canonical `.rlat` text, including the arrow table.
pub fn emit_algebra(alg: &Algebra) -> String {
    let n = alg.size();
    let mut out = String::new();
    writeln!(out, "size {n}").unwrap();
    writeln!(out, "elements {}", alg.names().join(" ")).unwrap();
    writeln!(out, "bottom {}", alg.name(alg.bottom())).unwrap();
    writeln!(out, "top {}", alg.name(alg.top())).unwrap();
    let ops: [(&str, fn(&Algebra, usize, usize) -> usize); 4] = [
        ("join", Algebra::join),
        ("meet", Algebra::meet),
        ("odot", Algebra::prod),
        ("arrow", Algebra::res),
    ];
    for (label, op) in ops {
        writeln!(out, "table {label}").unwrap();
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| alg.name(op(alg, x, y))).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

/// Covering pairs `(lower, upper)` of a finite order given by `leq`.
pub fn covers(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || !leq(x, y) {
                continue;
            }
            let between = (0..n).any(|z| z != x && z != y && leq(x, z) && leq(z, y));
            if !between {
                out.push((x, y));
            }
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of the carrier order, bottom at the bottom.
pub fn dot_hasse(alg: &Algebra) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..alg.size() {
        writeln!(out, "  n{x} [label={}];", quote(alg.name(x))).unwrap();
    }
    for (x, y) in covers(alg.size(), |x, y| alg.leq(x, y)) {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of Spec under inclusion; maximal filters are drawn doubled.
pub fn dot_spec(alg: &Algebra, spectrum: &Spectrum) -> String {
    let spec = spectrum.spec();
    let mut out = String::from("digraph spec {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, p) in spec.members().iter().enumerate() {
        let label = format!("{{{}}}", alg.set_names(p.elems()).join(","));
        let peripheries = if spectrum.max().position(*p).is_some() {
            2
        } else {
            1
        };
        writeln!(
            out,
            "  p{i} [label={}, peripheries={peripheries}];",
            quote(&label)
        )
        .unwrap();
    }
    for (i, j) in covers(spec.len(), |i, j| spec.get(i).is_subset(spec.get(j))) {
        writeln!(out, "  p{i} -> p{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TWO: &str = "size 2\nelements 0 1\nbottom 0\ntop 1\n\
        table join\n0 1\n1 1\ntable meet\n0 0\n0 1\ntable odot\n0 0\n0 1\n";

    #[test]
    fn minimal_file_derives_arrow() {
        let alg = parse_algebra(TWO).unwrap();
        assert_eq!(alg.size(), 2);
        assert_eq!(alg.res(0, 0), 1);
        assert_eq!(alg.res(1, 0), 0);
    }

    #[test]
    fn roundtrip() {
        for alg in [
            fixtures::a6(),
            fixtures::boolean4(),
            fixtures::chain_lukasiewicz(5),
        ] {
            let text = emit_algebra(&alg);
            assert_eq!(parse_algebra(&text).unwrap(), alg);
        }
    }

    #[test]
    fn edited_arrow_is_named() {
        let text = emit_algebra(&fixtures::a6());
        // row `a` of the arrow table starts with `c`; change it to `b`
        let arrow_at = text.find("table arrow").unwrap();
        let (head, tail) = text.split_at(arrow_at);
        let tail = tail.replacen("\nc ", "\nb ", 1);
        let err = parse_algebra(&format!("{head}{tail}")).unwrap_err();
        assert_eq!(
            err,
            Error::ArrowMismatch {
                x: "a".into(),
                y: "0".into(),
                given: "b".into(),
                derived: "c".into()
            }
        );
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = TWO.replace("0 0\n0 1\ntable odot", "0 0\n0 x\ntable odot");
        assert!(matches!(
            parse_algebra(&bad),
            Err(Error::Parse { line: 10, .. })
        ));
        let short = TWO.replace("table odot\n0 0\n0 1\n", "table odot\n0 0\n");
        assert!(matches!(
            parse_algebra(&short),
            Err(Error::Parse { line: 11, .. })
        ));
        assert!(matches!(
            parse_algebra("size 2\nfoo\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let missing = TWO.replace("top 1\n", "");
        assert!(matches!(parse_algebra(&missing), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_bounds_anywhere() {
        let text =
            "# two elements, top listed first\nsize 2\nelements 1 0  # names\nbottom 0\ntop 1\n\
            table join\n1 1\n1 0\ntable meet\n1 0\n0 0\ntable odot\n1 0\n0 0\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg.names(), &["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn invalid_tables_report_violations() {
        let bad = TWO.replace("table odot\n0 0\n0 1", "table odot\n0 1\n1 1");
        assert!(matches!(
            parse_algebra(&bad),
            Err(Error::ValidationFailed(_))
        ));
    }

    #[test]
    fn dot_output() {
        let a6 = fixtures::a6();
        let hasse = dot_hasse(&a6);
        // 0<a, 0<c, a<b, b<d, c<d, d<1
        assert_eq!(hasse.matches("->").count(), 6);
        assert!(hasse.contains("n1 -> n2;"));
        let spec = dot_spec(&a6, &Spectrum::new(&a6).unwrap());
        assert_eq!(spec.matches("->").count(), 2);
        assert_eq!(spec.matches("peripheries=2").count(), 2);
    }
}

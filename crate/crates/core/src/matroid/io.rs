//! Matroid files and the construction expressions used on the command line.

use super::{cographic, dual, graphic, iso::simplify, r10, sum1, sum2, sum3, BinaryMatroid};
use crate::error::{Error, Result};
use crate::exact::{BitMatrix, IntMatrix};
use crate::graph::load_graph;

/// Line 1 "d n", then d rows of n bits (separated or not), then optionally
/// "LIFT" and d rows of n integers. '#' starts a comment line.
pub fn parse_matroid(s: &str) -> Result<BinaryMatroid> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty matroid file".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
        .collect::<Result<_>>()?;
    let [d, n] = nums[..] else { return Err(Error::Parse(format!("header must be \"d n\", got {header:?}"))) };
    let mut bits = Vec::with_capacity(d);
    for _ in 0..d {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {d} bit rows")))?;
        let row: Vec<u8> = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad bit {c:?}"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("bit row has {} entries, expected {n}", row.len())));
        }
        bits.push(row);
    }
    let mut rep = BitMatrix::zeros(d, n);
    for (i, r) in bits.iter().enumerate() {
        for (j, &b) in r.iter().enumerate() {
            rep.set(i, j, b == 1);
        }
    }
    let lift = match lines.next() {
        None => None,
        Some("LIFT") => {
            let mut rows = Vec::with_capacity(d);
            for _ in 0..d {
                let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {d} lift rows")))?;
                let row: Vec<i64> = line
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
                    .collect::<Result<_>>()?;
                if row.len() != n {
                    return Err(Error::Parse(format!("lift row has {} entries, expected {n}", row.len())));
                }
                rows.push(row);
            }
            Some(if d == 0 { IntMatrix::zeros(0, n) } else { IntMatrix::from_rows(&rows) })
        }
        Some(other) => return Err(Error::Parse(format!("expected LIFT, got {other:?}"))),
    };
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    let labels = (0..n).map(|j| j.to_string()).collect();
    BinaryMatroid::new(labels, rep, lift)
}

pub fn write_matroid(m: &BinaryMatroid) -> String {
    let mut s = format!("{} {}\n", m.rank(), m.len());
    for i in 0..m.rank() {
        let row: Vec<&str> = (0..m.len()).map(|j| if m.rep().get(i, j) { "1" } else { "0" }).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    if let Some(l) = m.lift() {
        s.push_str("LIFT\n");
        for i in 0..l.rows() {
            let row: Vec<String> = l.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    s
}

/// Splits on commas outside brackets of any kind.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Splits "X@sel" at the last '@' outside brackets.
fn split_at_sel(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    let mut at = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            '@' if depth == 0 => at = Some(i),
            _ => {}
        }
    }
    let i = at.ok_or_else(|| Error::Parse(format!("expected X@element in {s:?}")))?;
    Ok((s[..i].trim(), s[i + 1..].trim()))
}

fn braced_list(s: &str) -> Result<Vec<&str>> {
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .or_else(|| s.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .ok_or_else(|| Error::Parse(format!("expected {{a,b,c}}, got {s:?}")))?;
    Ok(inner.split(',').map(str::trim).collect())
}

fn three<T: Copy>(v: &[T], what: &str) -> Result<[T; 3]> {
    v.try_into().map_err(|_| Error::Parse(format!("{what} needs exactly three entries")))
}

/// Builds a matroid from an expression such as `graphic(builtin:k4)`,
/// `cographic(builtin:petersen)`, `r10`, `dual(X)`, `simplify(X)`,
/// `sum1(X, Y)`, `sum2(X@a, Y@b)` or `sum3(X@{a,b,c}, Y@{a,b,c}, [0,1,2])`.
/// Element selectors are labels. Anything else is read as a matroid file.
pub fn build_matroid(expr: &str) -> Result<BinaryMatroid> {
    let expr = expr.trim();
    if expr == "r10" || expr == "builtin:r10" {
        return Ok(r10());
    }
    let call = expr.find('(').filter(|_| expr.ends_with(')')).map(|i| (&expr[..i], &expr[i + 1..expr.len() - 1]));
    let Some((name, body)) = call else {
        let text = std::fs::read_to_string(expr).map_err(|e| Error::Parse(format!("{expr}: {e}")))?;
        return parse_matroid(&text);
    };
    let args = split_top(body);
    let arity = |k: &[usize]| -> Result<()> {
        if k.contains(&args.len()) {
            Ok(())
        } else {
            Err(Error::Parse(format!("{name} takes {k:?} arguments, got {}", args.len())))
        }
    };
    match name.trim() {
        "graphic" => {
            arity(&[1, 2])?;
            let root = match args.get(1) {
                Some(r) => r.parse().map_err(|_| Error::Parse(format!("bad root {r:?}")))?,
                None => 0,
            };
            graphic(&load_graph(args[0])?, root)
        }
        "cographic" => {
            arity(&[1])?;
            cographic(&load_graph(args[0])?)
        }
        "dual" => {
            arity(&[1])?;
            Ok(dual(&build_matroid(args[0])?))
        }
        "simplify" => {
            arity(&[1])?;
            Ok(simplify(&build_matroid(args[0])?)?.0)
        }
        "sum1" => {
            arity(&[2])?;
            sum1(&build_matroid(args[0])?, &build_matroid(args[1])?)
        }
        "sum2" => {
            arity(&[2])?;
            let (x, a) = split_at_sel(args[0])?;
            let (y, b) = split_at_sel(args[1])?;
            let (mx, my) = (build_matroid(x)?, build_matroid(y)?);
            sum2(&mx, mx.label_index(a)?, &my, my.label_index(b)?)
        }
        "sum3" => {
            arity(&[2, 3])?;
            let (x, a) = split_at_sel(args[0])?;
            let (y, b) = split_at_sel(args[1])?;
            let (mx, my) = (build_matroid(x)?, build_matroid(y)?);
            let wa: Vec<usize> = braced_list(a)?.iter().map(|l| mx.label_index(l)).collect::<Result<_>>()?;
            let wb: Vec<usize> = braced_list(b)?.iter().map(|l| my.label_index(l)).collect::<Result<_>>()?;
            let pairing = match args.get(2) {
                Some(p) => {
                    let v: Vec<usize> = braced_list(p)?
                        .iter()
                        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad pairing entry {t:?}"))))
                        .collect::<Result<_>>()?;
                    three(&v, "pairing")?
                }
                None => [0, 1, 2],
            };
            sum3(&mx, three(&wa, "left triangle")?, &my, three(&wb, "right triangle")?, pairing)
        }
        other => Err(Error::UnknownName(format!("matroid constructor {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let m = build_matroid("cographic(builtin:k33)").unwrap();
        let back = parse_matroid(&write_matroid(&m)).unwrap();
        assert_eq!(back.rep(), m.rep());
        assert_eq!(back.lift(), m.lift());
        assert!(parse_matroid("2 3\n101\n").is_err());
        assert!(parse_matroid("1 7\n1 0 0 1 1 0 1\n").is_ok());
    }

    #[test]
    fn fano_lift_rejected() {
        let text = "3 7\n1001101\n0101011\n0010111\nLIFT\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 1\n";
        assert!(parse_matroid(text).is_err());
    }

    #[test]
    fn expressions() {
        assert_eq!(build_matroid("r10").unwrap().rank(), 5);
        let s = build_matroid("sum2(graphic(builtin:k4)@0, graphic(builtin:k4)@5)").unwrap();
        assert_eq!((s.rank(), s.len()), (5, 10));
        assert_eq!(build_matroid("dual(graphic(builtin:k33))").unwrap().rank(), 4);
        assert!(build_matroid("frobnicate(r10)").is_err());
        assert!(build_matroid("sum2(r10@e1, r10@zz)").is_err());
    }
}

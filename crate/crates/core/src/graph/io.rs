use std::path::Path;

use super::{catalog, EdgeWeights, MultiGraph};
use crate::error::{Error, Result};
use crate::exact::{parse_rat_list, Rat};

/// Parses "n m" followed by m lines "u v" (0-indexed). Blank lines and
/// lines starting with '#' are ignored.
pub fn parse_graph(s: &str) -> Result<MultiGraph> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let (n, m) = pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        edges.push(pair(line)?);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    MultiGraph::new(n, edges)
}

fn pair(line: &str) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("expected two integers, got {line:?}"));
    if toks.len() != 2 {
        return Err(bad());
    }
    Ok((toks[0].parse().map_err(|_| bad())?, toks[1].parse().map_err(|_| bad())?))
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// `builtin:<name>` resolves through the catalog, anything else is a path.
pub fn load_graph(source: &str) -> Result<MultiGraph> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return catalog(name);
    }
    let text = std::fs::read_to_string(Path::new(source)).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    parse_graph(&text)
}

/// One rational per edge, whitespace separated.
pub fn parse_weights(s: &str, m: usize) -> Result<EdgeWeights> {
    let w: Vec<Rat> = parse_rat_list(s)?;
    if w.len() != m {
        return Err(Error::Parse(format!("{} weights for {m} edges", w.len())));
    }
    EdgeWeights::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = catalog("petersen").unwrap();
        assert_eq!(parse_graph(&write_graph(&p)).unwrap(), p);
        assert!(parse_graph("2 1\n0 5\n").is_err());
        assert!(parse_graph("2 2\n0 1\n").is_err());
        assert_eq!(load_graph("builtin:k33").unwrap().m(), 9);
    }

    #[test]
    fn weights() {
        let w = parse_weights("1/3\n1/3\n1/3\n", 3).unwrap();
        assert_eq!(w.total(), Rat::one());
        assert!(parse_weights("-1 1 1", 3).is_err());
        assert!(parse_weights("1 1", 3).is_err());
    }
}

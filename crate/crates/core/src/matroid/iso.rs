//! Simplification and small-instance isomorphism.

use super::{BinaryMatroid, Provenance};
use crate::error::{check_guard, Result};

pub const MAX_ISO_ELEMENTS: usize = 12;

/// Drops loops and all but the first of each parallel class. Returns the
/// simple matroid and, for every old element, its new index.
pub fn simplify(m: &BinaryMatroid) -> Result<(BinaryMatroid, Vec<Option<usize>>)> {
    let cols = m.column_masks();
    let mut keep: Vec<usize> = Vec::new();
    let mut map = vec![None; m.len()];
    for (j, &c) in cols.iter().enumerate() {
        if c == 0 {
            continue;
        }
        match keep.iter().position(|&k| cols[k] == c) {
            Some(p) => map[j] = Some(p),
            None => {
                map[j] = Some(keep.len());
                keep.push(j);
            }
        }
    }
    let labels = keep.iter().map(|&j| m.labels()[j].clone()).collect();
    let rep = m.rep().select_columns(&keep);
    let lift = m.lift().map(|l| l.select_columns(&keep));
    let s = BinaryMatroid::trusted(labels, rep, lift, Provenance::Other)?;
    Ok((s, map))
}

fn masks(circuits: &[Vec<usize>]) -> Vec<u32> {
    circuits.iter().map(|c| c.iter().fold(0u32, |m, &j| m | 1 << j)).collect()
}

fn size_profile(n: usize, circuits: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut p = vec![vec![0; n + 1]; n];
    for c in circuits {
        for &j in c {
            p[j][c.len()] += 1;
        }
    }
    p
}

/// A bijection `f` of ground sets carrying circuits of `m1` onto circuits of
/// `m2`, if one exists.
pub fn isomorphic(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Result<Option<Vec<usize>>> {
    let n = m1.len();
    check_guard(n.max(m2.len()) <= MAX_ISO_ELEMENTS, || {
        format!("isomorphism test limited to {MAX_ISO_ELEMENTS} elements")
    })?;
    if n != m2.len() || m1.rank() != m2.rank() {
        return Ok(None);
    }
    let c1 = m1.circuits()?;
    let c2 = m2.circuits()?;
    if c1.len() != c2.len() {
        return Ok(None);
    }
    let p1 = size_profile(n, &c1);
    let p2 = size_profile(n, &c2);
    let mut s1 = p1.clone();
    let mut s2 = p2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let set2: std::collections::HashSet<u32> = masks(&c2).into_iter().collect();
    // Circuits of m1 grouped by their largest element.
    let mut closing: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (c, m) in c1.iter().zip(masks(&c1)) {
        closing[*c.iter().max().expect("nonempty")].push(m);
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ok = extend(0, n, &p1, &p2, &closing, &set2, &mut f, &mut used);
    Ok(ok.then_some(f))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    i: usize,
    n: usize,
    p1: &[Vec<usize>],
    p2: &[Vec<usize>],
    closing: &[Vec<u32>],
    set2: &std::collections::HashSet<u32>,
    f: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == n {
        return true;
    }
    for t in 0..n {
        if used[t] || p1[i] != p2[t] {
            continue;
        }
        f[i] = t;
        let image = |m: u32| (0..n).filter(|&j| m >> j & 1 == 1).fold(0u32, |acc, j| acc | 1 << f[j]);
        if closing[i].iter().all(|&m| set2.contains(&image(m))) {
            used[t] = true;
            if extend(i + 1, n, p1, p2, closing, set2, f, used) {
                return true;
            }
            used[t] = false;
        }
    }
    f[i] = usize::MAX;
    false
}

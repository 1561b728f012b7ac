//! Canonical labelling by colour refinement and individualisation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_guard, Result};
use crate::graph::MultiGraph;

pub const MAX_CANON_VERTICES: usize = 20;

/// Edge list of the lexicographically least relabelling reached by the
/// search; equal for two graphs exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Edge multiplicity matrix, loops on the diagonal.
struct Counts {
    n: usize,
    a: Vec<u8>,
}

impl Counts {
    fn new(g: &MultiGraph) -> Counts {
        let n = g.n();
        let mut a = vec![0u8; n * n];
        for &(u, v) in g.edges() {
            a[u * n + v] += 1;
            if u != v {
                a[v * n + u] += 1;
            }
        }
        Counts { n, a }
    }

    fn at(&self, u: usize, v: usize) -> u8 {
        self.a[u * self.n + v]
    }
}

/// Refines `color` to the coarsest equitable partition below it. Colours are
/// renumbered by sorted signature so the result does not depend on labels.
fn refine(c: &Counts, color: &mut [usize]) {
    let n = c.n;
    loop {
        let sigs: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, u8)> =
                    (0..n).filter(|&u| c.at(v, u) > 0).map(|u| (color[u], c.at(v, u))).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<(usize, u8)>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let before = color.iter().max().map_or(0, |&m| m + 1);
        for v in 0..n {
            color[v] = sorted.binary_search(&&sigs[v]).expect("present");
        }
        if sorted.len() == before {
            return;
        }
    }
}

fn cell_of_first_nonsingleton(color: &[usize]) -> Option<Vec<usize>> {
    let k = color.iter().max().map_or(0, |&m| m + 1);
    let mut size = vec![0usize; k];
    for &c in color {
        size[c] += 1;
    }
    let target = (0..k).find(|&c| size[c] > 1)?;
    Some((0..color.len()).filter(|&v| color[v] == target).collect())
}

struct Search<'a> {
    c: &'a Counts,
    best: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    ties: u64,
}

impl Search<'_> {
    fn leaf(&mut self, color: &[usize]) {
        let n = self.c.n;
        let mut inv = vec![0; n];
        for v in 0..n {
            inv[color[v]] = v;
        }
        let mut key = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                key.push(self.c.at(inv[i], inv[j]));
            }
        }
        match &self.best {
            Some(b) if key > *b => {}
            Some(b) if key == *b => self.ties += 1,
            _ => {
                self.best = Some(key);
                self.best_perm = color.to_vec();
                self.ties = 1;
            }
        }
    }

    fn run(&mut self, color: Vec<usize>) {
        let Some(cell) = cell_of_first_nonsingleton(&color) else {
            self.leaf(&color);
            return;
        };
        for &v in &cell {
            // Split v off in front of the rest of its cell.
            let mut next: Vec<usize> = color.iter().map(|&x| 2 * x + 1).collect();
            next[v] -= 1;
            let mut ids: Vec<usize> = next.clone();
            ids.sort_unstable();
            ids.dedup();
            for x in next.iter_mut() {
                *x = ids.binary_search(x).expect("present");
            }
            refine(self.c, &mut next);
            self.run(next);
        }
    }
}

fn search<T>(g: &MultiGraph, f: impl FnOnce(&Search<'_>) -> T) -> Result<T> {
    check_guard(g.n() <= MAX_CANON_VERTICES, || {
        format!("canonical form limited to {MAX_CANON_VERTICES} vertices, got {}", g.n())
    })?;
    let c = Counts::new(g);
    let mut color = vec![0; g.n()];
    refine(&c, &mut color);
    let mut s = Search { c: &c, best: None, best_perm: Vec::new(), ties: 0 };
    s.run(color);
    Ok(f(&s))
}

fn form_of(g: &MultiGraph, perm: &[usize]) -> CanonicalForm {
    let h = g.relabel(perm);
    let body: Vec<String> = h.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    CanonicalForm(format!("{} {}:{}", h.n(), h.m(), body.join(",")))
}

/// Canonical form and the relabelling `perm[old] = new` that produces it.
pub fn canonical_labeling(g: &MultiGraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let perm = search(g, |s| s.best_perm.clone())?;
    Ok((form_of(g, &perm), perm))
}

pub fn canonical_form(g: &MultiGraph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// Number of vertex permutations preserving edge multiplicities. Every leaf
/// of the search that reproduces the canonical matrix differs from the first
/// such leaf by an automorphism, and each automorphism is reached once.
pub fn automorphism_count(g: &MultiGraph) -> Result<u64> {
    search(g, |s| s.ties)
}

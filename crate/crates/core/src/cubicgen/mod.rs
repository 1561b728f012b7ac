//! Isomorph-free generation of connected simple cubic graphs. Graphs grow
//! from the two cubic graphs on two vertices by edge insertion and by
//! attaching looped pendants. Every connected cubic pseudograph on four or
//! more vertices shrinks by one of the reverse steps (drop a looped leaf, or
//! delete an edge on a cycle and smooth its ends), so the growth is
//! complete. Loops and parallel edges are kept only while enough steps
//! remain to remove them.

mod canon;

use std::collections::HashSet;

pub use canon::{automorphism_count, canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_VERTICES};

use crate::error::{Error, Result};
use crate::graph::{girth, is_three_edge_connected, MultiGraph};

/// Output filters for [`generate_cubic`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CubicFilter {
    pub min_girth: usize,
    pub three_edge_connected: bool,
}

impl CubicFilter {
    pub fn accepts(&self, g: &MultiGraph) -> bool {
        girth(g).is_none_or(|k| k >= self.min_girth) && (!self.three_edge_connected || is_three_edge_connected(g))
    }
}

/// Joins the midpoints of edges `e1` and `e2` by a new edge. With `e1 == e2`
/// the edge is subdivided twice and the two new vertices are joined.
pub fn insert_edge(g: &MultiGraph, e1: usize, e2: usize) -> MultiGraph {
    let (h, a) = g.subdivide(e1);
    let (mut h, b) = if e1 == e2 { h.subdivide(h.m() - 1) } else { h.subdivide(e2) };
    h.add_edge(a, b);
    h
}

/// Subdivides `e` and hangs a new looped vertex off the midpoint.
pub fn attach_pendant_loop(g: &MultiGraph, e: usize) -> MultiGraph {
    let (mut h, w) = g.subdivide(e);
    let z = h.add_vertex();
    h.add_edge(w, z);
    h.add_edge(z, z);
    h
}

/// Twice the loops plus the parallel edges in excess of one per vertex
/// pair. A subdivision lowers this by at most one, so each growth step by
/// at most two.
fn defect(g: &MultiGraph) -> usize {
    let loops = g.edges().iter().filter(|(u, v)| u == v).count();
    let mut e: Vec<(usize, usize)> =
        g.edges().iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    2 * loops + e.windows(2).filter(|w| w[0] == w[1]).count()
}

/// The connected cubic graphs on two vertices.
fn seeds() -> Vec<MultiGraph> {
    vec![MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]), MultiGraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)])]
}

/// Connected cubic pseudographs on `k` vertices that can still reach a
/// simple graph on `n` vertices.
fn level(k: usize, n: usize) -> Vec<MultiGraph> {
    let mut graphs = seeds();
    let mut at = 2;
    while at < k {
        at += 2;
        let budget = n - at;
        graphs = GenIter::new(graphs).filter(|g| defect(g) <= budget).collect();
    }
    graphs
}

/// Every connected simple cubic graph on `n` vertices passing `filter`,
/// exactly once up to isomorphism and canonically labelled. The last level
/// is streamed; smaller levels are held in memory.
pub fn generate_cubic(n: usize, filter: CubicFilter) -> Result<impl Iterator<Item = MultiGraph>> {
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("cubic graphs need an even vertex count, got {n}")));
    }
    if !(4..=MAX_CANON_VERTICES).contains(&n) {
        return Err(Error::Precondition(format!("generate_cubic supports 4 <= n <= {MAX_CANON_VERTICES}, got {n}")));
    }
    Ok(GenIter::new(level(n - 2, n)).filter(move |g| g.is_simple() && filter.accepts(g)))
}

struct GenIter {
    parents: Vec<MultiGraph>,
    pos: usize,
    inner: std::vec::IntoIter<MultiGraph>,
    seen: HashSet<CanonicalForm>,
}

impl GenIter {
    fn new(parents: Vec<MultiGraph>) -> GenIter {
        GenIter { parents, pos: 0, inner: Vec::new().into_iter(), seen: HashSet::new() }
    }
}

/// Children of the parents under edge insertion, one canonically labelled
/// representative per isomorphism class, in order of first discovery.
impl Iterator for GenIter {
    type Item = MultiGraph;

    fn next(&mut self) -> Option<MultiGraph> {
        loop {
            if let Some(g) = self.inner.next() {
                return Some(g);
            }
            let p = self.parents.get(self.pos)?;
            self.pos += 1;
            let m = p.m();
            let mut batch = Vec::new();
            let inserted = (0..m).flat_map(|e1| (e1..m).map(move |e2| insert_edge(p, e1, e2)));
            let pendants = (0..m).map(|e| attach_pendant_loop(p, e));
            for h in inserted.chain(pendants) {
                let (form, perm) = canonical_labeling(&h).expect("within guard");
                if self.seen.insert(form) {
                    batch.push(h.relabel(&perm));
                }
            }
            self.inner = batch.into_iter();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn relabelling_invariance() {
        let p = catalog("petersen").unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&p.relabel(&perm)).unwrap());
        assert_ne!(
            canonical_form(&catalog("f13").unwrap()).unwrap(),
            canonical_form(&catalog("f14").unwrap()).unwrap()
        );
    }

    #[test]
    fn automorphisms() {
        for (name, order) in [("k4", 24), ("k33", 72), ("petersen", 120), ("heawood", 336), ("theta", 2)] {
            assert_eq!(automorphism_count(&catalog(name).unwrap()).unwrap(), order, "{name}");
        }
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> =
            [4, 6, 8, 10].iter().map(|&n| generate_cubic(n, CubicFilter::default()).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
        let p: Vec<_> =
            generate_cubic(10, CubicFilter { min_girth: 5, three_edge_connected: false }).unwrap().collect();
        assert_eq!(p.len(), 1);
        assert_eq!(canonical_form(&p[0]).unwrap(), canonical_form(&catalog("petersen").unwrap()).unwrap());
        assert!(generate_cubic(7, CubicFilter::default()).is_err());
    }
}

//! Finite multigraphs with loops and parallel edges.

mod catalog;
mod cycles;
mod io;
mod reduce;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rat;

pub use catalog::{catalog, catalog_cycle, catalog_names, f12_variant};
pub use cycles::{
    edge_cut_below, enumerate_cycles, girth, is_three_edge_connected, min_weight_cycle, shortest_cycle_through, Cycle,
};
pub use io::{load_graph, parse_graph, parse_weights, write_graph};
pub use reduce::{reduce_to_cubic, split_vertex, ReductionStep};

/// Vertices are `0..n`; edge `i` is `edges[i]`, an unordered pair that may be a loop.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<MultiGraph> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::Precondition(format!("edge ({u},{v}) out of range for {n} vertices")));
        }
        Ok(MultiGraph { n, edges })
    }

    /// Panicking constructor for literal data.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::new(n, edges.to_vec()).expect("valid edge list")
    }

    pub fn empty(n: usize) -> MultiGraph {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// For each vertex, the incident `(edge, other endpoint)` pairs; a loop
    /// appears twice.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((e, v));
            adj[v].push((e, u));
        }
        adj
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        self.components_without(&[])
    }

    pub(crate) fn components_without(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(e, y) in &adj[x] {
                    if label[y] == usize::MAX && !removed.contains(&e) {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// First Betti number `m - n + #components`.
    pub fn betti(&self) -> usize {
        self.m() + self.components().1 - self.n
    }

    /// Replaces edge `e=(u,v)` by a path u-w-v; the new vertex is `w = n`.
    /// Edge `e` becomes (u,w) and the new edge (w,v) is appended.
    pub fn subdivide(&self, e: usize) -> (MultiGraph, usize) {
        let mut g = self.clone();
        let (u, v) = g.edges[e];
        let w = g.add_vertex();
        g.edges[e] = (u, w);
        g.add_edge(w, v);
        (g, w)
    }

    /// Contracts non-loop edge `e`. The larger endpoint is merged into the
    /// smaller one and later vertices shift down; surviving edges keep their
    /// relative order.
    pub fn contract(&self, e: usize) -> MultiGraph {
        let (a, b) = self.edges[e];
        assert!(a != b, "cannot contract a loop");
        let (keep, gone) = (a.min(b), a.max(b));
        let map = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges =
            self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &(u, v))| (map(u), map(v))).collect();
        MultiGraph { n: self.n - 1, edges }
    }

    pub fn delete_edges(&self, removed: &[usize]) -> MultiGraph {
        let edges = self.edges.iter().enumerate().filter(|(i, _)| !removed.contains(i)).map(|(_, &e)| e).collect();
        MultiGraph { n: self.n, edges }
    }

    /// Removes `v` and its edges; later vertices shift down.
    pub fn delete_vertex(&self, v: usize) -> MultiGraph {
        let map = |x: usize| if x > v { x - 1 } else { x };
        let edges = self.edges.iter().filter(|&&(a, b)| a != v && b != v).map(|&(a, b)| (map(a), map(b))).collect();
        MultiGraph { n: self.n - 1, edges }
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        MultiGraph { n: self.n + other.n, edges }
    }

    /// Image under the vertex map `perm[old] = new`, edges reordered canonically.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        MultiGraph { n: self.n, edges }
    }

    /// Normalised edge list: endpoints ordered, edges sorted.
    pub fn normalized(&self) -> MultiGraph {
        let id: Vec<usize> = (0..self.n).collect();
        self.relabel(&id)
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Nonnegative rational edge weights indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeWeights(Vec<Rat>);

impl EdgeWeights {
    pub fn new(w: Vec<Rat>) -> Result<EdgeWeights> {
        if w.iter().any(Rat::is_negative) {
            return Err(Error::Precondition("negative edge weight".into()));
        }
        Ok(EdgeWeights(w))
    }

    pub fn uniform(m: usize) -> EdgeWeights {
        EdgeWeights(vec![Rat::new(1, m.max(1) as i64); m])
    }

    pub fn ones(m: usize) -> EdgeWeights {
        EdgeWeights(vec![Rat::one(); m])
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rat {
        self.0.iter().sum()
    }

    pub fn get(&self, e: usize) -> &Rat {
        &self.0[e]
    }
}

impl std::ops::Index<usize> for EdgeWeights {
    type Output = Rat;
    fn index(&self, e: usize) -> &Rat {
        &self.0[e]
    }
}

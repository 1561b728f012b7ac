use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::{Deserialize, Serialize};

use super::MultiGraph;
use crate::error::{check_guard, Error, Result};
use crate::exact::{next_combination, Rat};

/// A simple cycle, stored as its sorted edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    edges: Vec<usize>,
}

impl Cycle {
    /// Validates that `edges` form a connected 2-regular subgraph of `g`.
    pub fn new(g: &MultiGraph, mut edges: Vec<usize>) -> Result<Cycle> {
        edges.sort_unstable();
        edges.dedup();
        if !is_cycle(g, &edges) {
            return Err(Error::Precondition(format!("edges {edges:?} do not form a simple cycle")));
        }
        Ok(Cycle { edges })
    }

    pub(crate) fn from_sorted(edges: Vec<usize>) -> Cycle {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Cycle { edges }
    }

    /// The cycle through the given vertex sequence of a simple graph.
    pub fn from_vertices(g: &MultiGraph, vs: &[usize]) -> Result<Cycle> {
        let mut edges = Vec::with_capacity(vs.len());
        for i in 0..vs.len() {
            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
            let e = g
                .edges()
                .iter()
                .position(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
                .ok_or_else(|| Error::Precondition(format!("no edge between {a} and {b}")))?;
            edges.push(e);
        }
        Cycle::new(g, edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn weight(&self, w: &[Rat]) -> Rat {
        self.edges.iter().map(|&e| &w[e]).sum()
    }

    /// Vertices in traversal order starting from the lowest edge.
    pub fn vertices(&self, g: &MultiGraph) -> Vec<usize> {
        let first = self.edges[0];
        let (start, mut cur) = g.edge(first);
        let mut out = vec![start];
        let mut used = vec![first];
        while cur != start {
            out.push(cur);
            let e = *self
                .edges
                .iter()
                .find(|&&e| {
                    !used.contains(&e) && {
                        let (a, b) = g.edge(e);
                        a == cur || b == cur
                    }
                })
                .expect("cycle is closed");
            used.push(e);
            cur = g.other_end(e, cur);
        }
        out
    }
}

pub(crate) fn is_cycle(g: &MultiGraph, edges: &[usize]) -> bool {
    if edges.is_empty() || edges.iter().any(|&e| e >= g.m()) {
        return false;
    }
    let mut deg = vec![0usize; g.n()];
    for &e in edges {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // connectivity of the edge set
    let start = g.edge(edges[0]).0;
    let mut seen = vec![start];
    let mut used = vec![false; edges.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for (k, &e) in edges.iter().enumerate() {
            let (u, v) = g.edge(e);
            if !used[k] && (seen.contains(&u) || seen.contains(&v)) {
                used[k] = true;
                changed = true;
                for x in [u, v] {
                    if !seen.contains(&x) {
                        seen.push(x);
                    }
                }
            }
        }
    }
    used.iter().all(|&b| b)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &MultiGraph) -> Option<usize> {
    let adj = g.adjacency();
    let mut best: Option<usize> = None;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            return Some(1);
        }
        if let Some(d) = bfs_distance(&adj, u, v, e, best.map(|b| b - 1)) {
            best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
        }
    }
    best
}

fn bfs_distance(adj: &[Vec<(usize, usize)>], s: usize, t: usize, skip: usize, limit: Option<usize>) -> Option<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        if limit.is_some_and(|l| dist[x] >= l) {
            return None;
        }
        for &(e, y) in &adj[x] {
            if e != skip && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == t {
                    return Some(dist[y]);
                }
                q.push_back(y);
            }
        }
    }
    None
}

fn connected_without(g: &MultiGraph, adj: &[Vec<(usize, usize)>], removed: &[usize]) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &(e, y) in &adj[x] {
            if !seen[y] && !removed.contains(&e) {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == g.n()
}

/// The lexicographically first disconnecting edge set of minimum size below
/// `k`, or `None` when every cut has at least `k` edges.
pub fn edge_cut_below(g: &MultiGraph, k: usize) -> Result<Option<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Precondition("edge_cut_below needs a connected graph".into()));
    }
    let adj = g.adjacency();
    let candidates: Vec<usize> = (0..g.m()).filter(|&e| !g.is_loop(e)).collect();
    for s in 1..k {
        if s > candidates.len() {
            break;
        }
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let set: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
            if !connected_without(g, &adj, &set) {
                return Ok(Some(set));
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Connected and no disconnecting set of at most two edges.
pub fn is_three_edge_connected(g: &MultiGraph) -> bool {
    g.is_connected() && matches!(edge_cut_below(g, 3), Ok(None))
}

/// Weight-shortest path from `s` to `t` avoiding edge `skip`; returns the
/// distance and the path's edges. Paths longer than `bound` are abandoned.
fn dijkstra_path(
    g: &MultiGraph,
    adj: &[Vec<(usize, usize)>],
    w: &[Rat],
    s: usize,
    t: usize,
    skip: usize,
    bound: Option<&Rat>,
) -> Option<(Rat, Vec<usize>)> {
    let mut dist: Vec<Option<Rat>> = vec![None; g.n()];
    let mut pred: Vec<usize> = vec![usize::MAX; g.n()];
    let mut done = vec![false; g.n()];
    dist[s] = Some(Rat::zero());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Rat::zero(), s)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if done[x] {
            continue;
        }
        if bound.is_some_and(|b| &d > b) {
            return None;
        }
        done[x] = true;
        if x == t {
            let mut path = Vec::new();
            let mut y = t;
            while y != s {
                let e = pred[y];
                path.push(e);
                y = g.other_end(e, y);
            }
            return Some((d, path));
        }
        for &(e, y) in &adj[x] {
            if e == skip || done[y] || y == x {
                continue;
            }
            let nd = &d + &w[e];
            if dist[y].as_ref().is_none_or(|old| nd < *old) {
                dist[y] = Some(nd.clone());
                pred[y] = e;
                heap.push(Reverse((nd, y)));
            }
        }
    }
    None
}

/// Lightest cycle through edge `e`, if any.
pub fn shortest_cycle_through(g: &MultiGraph, w: &[Rat], e: usize) -> Option<(Cycle, Rat)> {
    let (u, v) = g.edge(e);
    if u == v {
        return Some((Cycle::from_sorted(vec![e]), w[e].clone()));
    }
    let adj = g.adjacency();
    let (d, mut path) = dijkstra_path(g, &adj, w, u, v, e, None)?;
    path.push(e);
    path.sort_unstable();
    Some((Cycle::from_sorted(path), d + &w[e]))
}

/// A minimum-weight simple cycle. For each edge the lightest cycle through
/// it is found by Dijkstra in `G - e`; ties between these candidates go to
/// the lexicographically smallest sorted edge set.
pub fn min_weight_cycle(g: &MultiGraph, w: &[Rat]) -> Result<(Cycle, Rat)> {
    if w.len() != g.m() {
        return Err(Error::Dimension(format!("{} weights for {} edges", w.len(), g.m())));
    }
    let adj = g.adjacency();
    let mut best: Option<(Rat, Vec<usize>)> = None;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let cand = if u == v {
            (w[e].clone(), vec![e])
        } else {
            if best.as_ref().is_some_and(|(b, _)| &w[e] > b) {
                continue;
            }
            let bound = best.as_ref().map(|(b, _)| b - &w[e]);
            let Some((d, mut path)) = dijkstra_path(g, &adj, w, u, v, e, bound.as_ref()) else {
                continue;
            };
            path.push(e);
            path.sort_unstable();
            (d + &w[e], path)
        };
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    match best {
        Some((wt, edges)) => Ok((Cycle::from_sorted(edges), wt)),
        None => Err(Error::Precondition("graph is a forest".into())),
    }
}

/// Every simple cycle exactly once: each is found from its smallest edge
/// by a search over paths using only larger edge ids.
pub fn enumerate_cycles(g: &MultiGraph) -> Result<Vec<Cycle>> {
    check_guard(g.m() <= 25, || format!("enumerate_cycles limited to 25 edges (got {}); use min_weight_cycle", g.m()))?;
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::new();
    for (e0, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            out.push(Cycle::from_sorted(vec![e0]));
            continue;
        }
        on_path[v] = true;
        extend(&adj, e0, v, u, &mut on_path, &mut path, &mut out);
        on_path[v] = false;
    }
    Ok(out)
}

fn extend(
    adj: &[Vec<(usize, usize)>],
    e0: usize,
    x: usize,
    target: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    for &(e, y) in &adj[x] {
        if e <= e0 || y == x {
            continue;
        }
        if y == target {
            let mut c = path.clone();
            c.push(e);
            c.push(e0);
            c.sort_unstable();
            out.push(Cycle::from_sorted(c));
            continue;
        }
        if on_path[y] {
            continue;
        }
        on_path[y] = true;
        path.push(e);
        extend(adj, e0, y, target, on_path, path, out);
        path.pop();
        on_path[y] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::catalog;

    fn path_graph(n: usize) -> MultiGraph {
        MultiGraph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&catalog("petersen").unwrap()), Some(5));
        assert_eq!(girth(&catalog("heawood").unwrap()), Some(6));
        assert_eq!(girth(&path_graph(4)), None);
        assert_eq!(girth(&catalog("theta").unwrap()), Some(2));
        assert_eq!(girth(&MultiGraph::from_edges(1, &[(0, 0)])), Some(1));
    }

    #[test]
    fn cuts() {
        assert_eq!(edge_cut_below(&catalog("k4").unwrap(), 3).unwrap(), None);
        assert_eq!(edge_cut_below(&path_graph(3), 2).unwrap(), Some(vec![0]));
        assert!(edge_cut_below(&MultiGraph::empty(2), 2).is_err());
    }

    #[test]
    fn cycle_counts() {
        let k4 = enumerate_cycles(&catalog("k4").unwrap()).unwrap();
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(enumerate_cycles(&catalog("theta").unwrap()).unwrap().len(), 3);
    }

    #[test]
    fn weighted_cycles() {
        let theta = catalog("theta").unwrap();
        let (c, w) = min_weight_cycle(&theta, &[rat(1, 3), rat(1, 3), rat(1, 3)]).unwrap();
        assert_eq!((c.edges(), w), (&[0, 1][..], rat(2, 3)));
        let mut g = catalog("k4").unwrap();
        let l = g.add_edge(2, 2);
        let mut w = vec![Rat::one(); g.m()];
        w[l] = Rat::zero();
        let (c, v) = min_weight_cycle(&g, &w).unwrap();
        assert_eq!((c.edges(), v), (&[l][..], Rat::zero()));
        assert!(min_weight_cycle(&path_graph(3), &[Rat::one(), Rat::one()]).is_err());
    }

    #[test]
    fn vertex_walk() {
        let p = catalog("petersen").unwrap();
        let c = Cycle::from_vertices(&p, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.vertices(&p), vec![0, 1, 2, 3, 4]);
        assert!(Cycle::new(&p, vec![0, 1]).is_err());
    }
}

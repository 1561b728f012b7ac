//! Reduction of an arbitrary graph to a 3-edge-connected cubic graph with
//! the same Betti number and no smaller systole.

use serde::{Deserialize, Serialize};

use super::cycles::{edge_cut_below, is_three_edge_connected};
use super::MultiGraph;
use crate::error::{Error, Result};
use crate::exact::next_combination;

/// One step of the reduction. Each step can only increase the systole:
/// joining and splitting add an edge of weight zero, a bridge lies on no
/// cycle, and every cycle through one edge of a 2-cut uses the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum ReductionStep {
    /// New edge `edge` between vertices `u` and `v` of different components.
    JoinComponents {
        u: usize,
        v: usize,
        edge: usize,
    },
    ContractBridge {
        edge: usize,
    },
    /// `cut` disconnects the graph; `cut[0]` is contracted.
    ContractTwoCut {
        cut: [usize; 2],
    },
    /// Edge-ends `moved` (end `2e` is the first endpoint of edge `e`, `2e+1`
    /// the second) leave `vertex` for a new vertex joined to it by `new_edge`.
    SplitVertex {
        vertex: usize,
        moved: Vec<usize>,
        new_edge: usize,
    },
}

/// Splits `v` into two adjacent vertices so that the result stays
/// 3-edge-connected. Candidate partitions are tried with the smaller side
/// first, in lexicographic order of edge-ends.
pub fn split_vertex(g: &MultiGraph, v: usize) -> Result<MultiGraph> {
    split_vertex_traced(g, v).map(|(h, _)| h)
}

fn split_vertex_traced(g: &MultiGraph, v: usize) -> Result<(MultiGraph, Vec<usize>)> {
    if v >= g.n() {
        return Err(Error::Precondition(format!("no vertex {v}")));
    }
    let ends: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(a, b))| {
            let mut out = Vec::new();
            if a == v {
                out.push(2 * e);
            }
            if b == v {
                out.push(2 * e + 1);
            }
            out
        })
        .collect();
    let k = ends.len();
    if k < 4 {
        return Err(Error::Precondition(format!("vertex {v} has degree {k} < 4")));
    }
    if !is_three_edge_connected(g) {
        return Err(Error::Precondition("split_vertex needs a 3-edge-connected graph".into()));
    }
    for size in 2..=k / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let moved: Vec<usize> = idx.iter().map(|&i| ends[i]).collect();
            let h = apply_split(g, v, &moved);
            if is_three_edge_connected(&h) {
                return Ok((h, moved));
            }
            if !next_combination(&mut idx, k) {
                break;
            }
        }
    }
    Err(Error::NotFound(format!("no 3-edge-connected splitting at vertex {v}")))
}

fn apply_split(g: &MultiGraph, v: usize, moved: &[usize]) -> MultiGraph {
    let mut h = g.clone();
    let w = h.add_vertex();
    let mut edges = h.edges().to_vec();
    for &end in moved {
        let (a, b) = &mut edges[end / 2];
        if end % 2 == 0 {
            *a = w;
        } else {
            *b = w;
        }
    }
    let mut h = MultiGraph::new(h.n(), edges).expect("endpoints in range");
    h.add_edge(v, w);
    h
}

/// Applies joins, bridge contractions, 2-cut contractions and 3-connected
/// splittings until the graph is cubic, connected and has no cut of at most
/// two edges. The trace pairs each step with the graph it produced.
pub fn reduce_to_cubic(g: &MultiGraph) -> Result<(MultiGraph, Vec<(ReductionStep, MultiGraph)>)> {
    let b = g.betti();
    if b < 2 {
        return Err(Error::Precondition(format!("reduce_to_cubic needs Betti number >= 2, got {b}")));
    }
    let mut g = g.clone();
    let mut trace = Vec::new();
    loop {
        let (label, c) = g.components();
        let step = if c > 1 {
            let v = (0..g.n()).find(|&x| label[x] != label[0]).expect("second component");
            let edge = g.add_edge(0, v);
            ReductionStep::JoinComponents { u: 0, v, edge }
        } else if let Some(cut) = edge_cut_below(&g, 2)? {
            g = g.contract(cut[0]);
            ReductionStep::ContractBridge { edge: cut[0] }
        } else if let Some(cut) = edge_cut_below(&g, 3)? {
            g = g.contract(cut[0]);
            ReductionStep::ContractTwoCut { cut: [cut[0], cut[1]] }
        } else if let Some(v) = (0..g.n()).find(|&x| g.degree(x) >= 4) {
            let (h, moved) = split_vertex_traced(&g, v)?;
            g = h;
            ReductionStep::SplitVertex { vertex: v, moved, new_edge: g.m() - 1 }
        } else {
            break;
        };
        trace.push((step, g.clone()));
    }
    debug_assert!(g.is_cubic() && g.betti() == b);
    Ok((g, trace))
}
